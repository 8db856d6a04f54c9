"""The free commutative differential algebra ComDer<X>.

A basis monomial is a commutative product of derivative letters
``x_i^(r)``.  Letters are ordered by derivative order first and generator
index second.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .linear import LinComb, accumulate


@dataclass(frozen=True)
class DLetter:
    gen: int
    order: int = 0
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.gen < 1 or self.order < 0:
            raise ValueError(f"invalid letter x{self.gen}^({self.order})")
        object.__setattr__(self, "key", (self.order, self.gen))

    def __lt__(self, other):
        return self.key < other.key

    def derived(self, k=1):
        return DLetter(self.gen, self.order + k)

    def __repr__(self):
        return f"x{self.gen}" + ("'" * self.order if self.order <= 3 else f"^({self.order})")


def letter_less(a, b):
    return a.key < b.key


@dataclass(frozen=True)
class CDMonomial:
    letters: tuple
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.letters:
            raise ValueError("empty monomial")
        letters = tuple(sorted(self.letters, key=lambda l: l.key))
        object.__setattr__(self, "letters", letters)
        # degree first so that monomials of one degree are contiguous
        object.__setattr__(self, "key", (len(letters),) + tuple(l.key for l in letters))

    @property
    def degree(self):
        return len(self.letters)

    def content(self):
        return tuple(sorted(l.gen for l in self.letters))

    def __repr__(self):
        return "*".join(map(repr, self.letters))


def cd_letter(gen, order=0):
    return LinComb.monomial(CDMonomial((DLetter(gen, order),)))


def cd_monomial(*letters):
    """Build a polynomial from ``(gen, order)`` pairs or DLetters."""
    ls = tuple(l if isinstance(l, DLetter) else DLetter(*l) for l in letters)
    return LinComb.monomial(CDMonomial(ls))


def _mul_mono(a, b):
    return CDMonomial(a.letters + b.letters)


def cd_mul(p, q):
    d = {}
    for m1, c1 in p.as_dict().items():
        for m2, c2 in q.as_dict().items():
            accumulate(d, _mul_mono(m1, m2), c1 * c2)
    return LinComb(d)


def _derive_mono(m):
    d = {}
    letters = m.letters
    for i, l in enumerate(letters):
        accumulate(d, CDMonomial(letters[:i] + (l.derived(),) + letters[i + 1:]), 1)
    return d


def cd_derive(p):
    d = {}
    for m, c in p.as_dict().items():
        for m2, c2 in _derive_mono(m).items():
            accumulate(d, m2, c * c2)
    return LinComb(d)


def cd_weight(m):
    return sum(l.order - 1 for l in m.letters)


def cd_is_homogeneous(p, weight):
    return all(cd_weight(m) == weight for m in p)


def nov_circ(p, q):
    """Novikov product ``p * d(q)``."""
    return cd_mul(p, cd_derive(q))


def _order_vectors(total, k, cap=None):
    """Non-negative integer vectors of length k summing to total."""
    if k == 0:
        if total == 0:
            yield ()
        return
    top = total if cap is None else min(total, cap)
    for first in range(top + 1):
        for rest in _order_vectors(total - first, k - 1, cap):
            yield (first,) + rest


def cd_enumerate(num_gens, degree, weight=-1, multilinear=False):
    """All basis monomials with ``degree`` letters and the given weight.

    In multilinear mode generators ``1..degree`` each occur exactly once and
    ``num_gens`` is ignored.
    """
    total = weight + degree
    if total < 0:
        return []
    out = set()
    if multilinear:
        gen_choices = [tuple(range(1, degree + 1))]
    else:
        gen_choices = combinations_with_replacement(range(1, num_gens + 1), degree)
    for gens in gen_choices:
        for orders in _order_vectors(total, degree):
            out.add(CDMonomial(tuple(DLetter(g, r) for g, r in zip(gens, orders))))
    return sorted(out, key=lambda m: m.key)
