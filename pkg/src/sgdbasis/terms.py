"""Binary trees over generators with operations ``o`` (Novikov) and ``[,]``.

A Novikov term uses only ``o``; an SGD term may use both.  Terms print in
the surface syntax accepted by :mod:`sgdbasis.syntax`.
"""

from dataclasses import dataclass, field

CIRC = "o"
BRACKET = "b"


@dataclass(frozen=True)
class Leaf:
    gen: int
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.gen < 1:
            raise ValueError("generator index must be positive")
        object.__setattr__(self, "key", (1, 0, self.gen))

    degree = property(lambda self: 1)

    def leaves(self):
        return (self.gen,)

    def __str__(self):
        return f"x{self.gen}"


@dataclass(frozen=True)
class Node:
    op: str
    left: object
    right: object
    key: tuple = field(init=False, repr=False, compare=False)
    degree: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.op not in (CIRC, BRACKET):
            raise ValueError(f"unknown operation {self.op!r}")
        deg = self.left.degree + self.right.degree
        object.__setattr__(self, "degree", deg)
        object.__setattr__(
            self, "key", (deg, 1 if self.op == CIRC else 2, self.left.key, self.right.key)
        )

    def leaves(self):
        return self.left.leaves() + self.right.leaves()

    def __str__(self):
        return format_term(self)


def x(i):
    return Leaf(i)


def circ(a, b):
    return Node(CIRC, a, b)


def bracket(a, b):
    return Node(BRACKET, a, b)


def is_novikov_term(t):
    if isinstance(t, Leaf):
        return True
    return t.op == CIRC and is_novikov_term(t.left) and is_novikov_term(t.right)


def format_term(t, top=True):
    """Print with the fewest parentheses the grammar needs.

    ``o`` is not associative, so an ``o`` node nested as an operand of
    another ``o`` is parenthesized; bracket arguments are comma-delimited and
    need none.
    """
    if isinstance(t, Leaf):
        return f"x{t.gen}"
    if t.op == BRACKET:
        return f"[{format_term(t.left)}, {format_term(t.right)}]"
    s = f"{format_term(t.left, False)} o {format_term(t.right, False)}"
    return s if top else f"({s})"


def canonical_orientation(t):
    """Return ``(sign, t')`` with every bracket ``[a, b]`` oriented so a > b.

    ``o`` chains ``((h o y1) o y2) ... o yk`` are also brought to a canonical
    order of the right factors, which is right-commutativity.  Two terms with
    equal canonical forms are equal in every Novikov / SGD algebra.
    """
    if isinstance(t, Leaf):
        return 1, t
    if t.op == BRACKET:
        sa, a = canonical_orientation(t.left)
        sb, b = canonical_orientation(t.right)
        if a == b:
            return 0, bracket(a, b)
        if a.key < b.key:
            return -sa * sb, bracket(b, a)
        return sa * sb, bracket(a, b)
    # flatten the left spine of o-nodes
    factors = []
    head = t
    while isinstance(head, Node) and head.op == CIRC:
        factors.append(head.right)
        head = head.left
    sign, head = canonical_orientation(head)
    canon = []
    for f in factors:
        s, f = canonical_orientation(f)
        sign *= s
        canon.append(f)
    canon.sort(key=lambda u: u.key, reverse=True)
    out = head
    for f in canon:
        out = circ(out, f)
    return sign, out


def canonical_lincomb(lc):
    from .linear import LinComb, accumulate

    d = {}
    for t, c in lc.items():
        s, u = canonical_orientation(t)
        if s:
            accumulate(d, u, s * c)
    return LinComb(d)
