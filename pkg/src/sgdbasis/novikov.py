"""A monomial basis of the free Novikov algebra.

Weight -1 monomials of ComDer<X> are classified into normal forms; ``phi``
sends each normal form to a Novikov term whose expansion ``tau`` is the
monomial plus strictly smaller ones.  That unitriangularity makes the terms
a basis and drives the reduction of arbitrary products.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product

from .comder import CDMonomial, DLetter, cd_enumerate, cd_letter, cd_weight, nov_circ
from .errors import StructureError, WeightError
from .linear import LinComb, accumulate
from .terms import Leaf, circ

_EXT = 1 << 30


@dataclass(frozen=True)
class NovNF:
    """Normal form ``x_M  x_J  x'_R`` of a weight -1 monomial.

    ``plain`` holds the underived generators ascending, ``derived`` the
    letters of order >= 2 as ``(gen, order)`` descending in letter order, and
    ``primes`` the generators of order-1 letters descending.
    """

    plain: tuple
    derived: tuple
    primes: tuple
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.plain) != sum(r for _, r in self.derived) - len(self.derived) + 1:
            raise StructureError("letter counts do not give weight -1")
        # orders compared greatest first, see nf_less
        orders = tuple(r for _, r in self.derived)
        object.__setattr__(self, "key", (orders, self.primes, self.plain, self.derived))

    @property
    def L(self):
        return tuple(r for _, r in self.derived)

    @property
    def M(self):
        return self.plain

    @property
    def R(self):
        return self.primes

    def monomial(self):
        letters = [DLetter(i) for i in self.plain]
        letters += [DLetter(j, r) for j, r in self.derived]
        letters += [DLetter(k, 1) for k in self.primes]
        return CDMonomial(tuple(letters))


def nf_classify(m):
    if cd_weight(m) != -1:
        raise WeightError(f"monomial {m!r} has weight {cd_weight(m)}, expected -1")
    plain = tuple(sorted(l.gen for l in m.letters if l.order == 0))
    derived = tuple(
        (l.gen, l.order)
        for l in sorted((l for l in m.letters if l.order >= 2), key=lambda l: l.key, reverse=True)
    )
    primes = tuple(sorted((l.gen for l in m.letters if l.order == 1), reverse=True))
    return NovNF(plain, derived, primes)


def nf_less(a, b):
    """Order on normal forms.

    Derivative orders of the letters of order >= 2 are compared greatest
    first, then the primed generators, then the underived ones; a proper
    prefix is smaller.  Listing the orders greatest first is what makes
    every lower term of ``tau(phi(a))`` smaller than ``a``: Leibniz
    expansion only ever replaces one order by several strictly smaller ones.
    """
    return a.key < b.key


def chain(items, gen):
    """``c_k o (... o (c_1 o x_gen))`` for items ascending ``c_1 <= ... <= c_k``."""
    t = Leaf(gen)
    for it in items:
        t = circ(it, t)
    return t


def phi_items(items, derived):
    """Run the phi construction over an extended alphabet.

    ``items`` are ``(key, term)`` pairs of weight -1 letters; ``derived`` are
    ``(gen, order)`` pairs with order >= 1.  Derived letters are processed
    greatest first; a letter of order r consumes the r greatest items and
    yields a new item that is greater than every existing one.  Exactly one
    item must remain at the end.
    """
    pool = sorted(items, key=lambda it: it[0])
    serial = 0
    for gen, r in sorted(derived, key=lambda jr: (jr[1], jr[0]), reverse=True):
        if r > len(pool):
            raise StructureError("not enough weight -1 letters for derivative orders")
        taken = pool[len(pool) - r:]
        del pool[len(pool) - r:]
        t = chain([term for _, term in taken], gen)
        serial += 1
        pool.append(((_EXT, serial), t))
    if len(pool) != 1:
        raise StructureError(f"{len(pool)} letters left over after phi")
    return pool[0][1]


def phi(a):
    items = [((0, i), Leaf(i)) for i in a.plain]
    derived = list(a.derived) + [(k, 1) for k in a.primes]
    return phi_items(items, derived)


@lru_cache(maxsize=None)
def tau_nov(t):
    if isinstance(t, Leaf):
        return cd_letter(t.gen)
    if t.op != "o":
        raise ValueError("Novikov terms use only the o operation")
    return nov_circ(tau_nov(t.left), tau_nov(t.right))


def tau_nov_lc(lc):
    return lc.map_monomials(tau_nov)


def _check_weight(p):
    for m in p:
        if cd_weight(m) != -1:
            raise WeightError(f"monomial {m!r} has weight {cd_weight(m)}, expected -1")


class TriangularReducer:
    """Memoized triangular reduction against a unitriangular family.

    ``lead_of`` classifies a monomial into a normal form (with a ``key``),
    ``basis_of`` returns ``(sign, term)`` for that normal form, and ``expand``
    maps a term to a LinComb of monomials.  The cache is a pure function
    table: entries never change once written.
    """

    def __init__(self, lead_of, basis_of, expand):
        self.lead_of = lead_of
        self.basis_of = basis_of
        self.expand = expand
        self._tail = {}
        self._expr = {}

    def tail(self, m):
        """Lower part of ``tau(basis(m))`` as a dict, after removing ``m``."""
        t = self._tail.get(m)
        if t is None:
            nf = self.lead_of(m)
            sign, term = self.basis_of(nf)
            img = self.expand(term).as_dict()
            if img.get(m, 0) * sign != 1:
                raise StructureError(f"expansion of basis element for {m!r} is not unitriangular")
            del img[m]
            t = {b: c * sign for b, c in img.items()}
            for b in t:
                if not self.lead_of(b).key < nf.key:
                    raise StructureError(f"lower term {b!r} is not below {m!r}")
            self._tail[m] = t
        return t

    def expr(self, m):
        if m in self._expr:
            return self._expr[m]
        stack = [m]
        while stack:
            top = stack[-1]
            if top in self._expr:
                stack.pop()
                continue
            tail = self.tail(top)
            missing = [b for b in tail if b not in self._expr]
            if missing:
                stack.extend(missing)
                continue
            sign, term = self.basis_of(self.lead_of(top))
            d = {term: sign}
            for b, c in tail.items():
                for t2, c2 in self._expr[b].as_dict().items():
                    accumulate(d, t2, -c * c2)
            self._expr[top] = LinComb(d)
            stack.pop()
        return self._expr[m]

    def reduce(self, p):
        d = {}
        for m, c in p.as_dict().items():
            for t, c2 in self.expr(m).as_dict().items():
                accumulate(d, t, c * c2)
        return LinComb(d)


_reducer = TriangularReducer(nf_classify, lambda nf: (1, phi(nf)), tau_nov)


def nov_reduce(p):
    """Express a weight -1 element of ComDer<X> in the basis ``N_phi``."""
    _check_weight(p)
    return _reducer.reduce(p)


def nov_multiply(a, b):
    return nov_reduce(nov_circ(tau_nov(a), tau_nov(b)))


def nov_basis(num_gens, degree, multilinear=False):
    return [phi(nf_classify(m)) for m in cd_enumerate(num_gens, degree, -1, multilinear)]


# Young diagrams ----------------------------------------------------------


@dataclass(frozen=True)
class YoungFilling:
    """Filling of a shape ``l1 > l2 >= ... >= lk``; each row ends in its tail ``t``."""

    shape: tuple
    rows: tuple

    def tails(self):
        return tuple(row[-1] for row in self.rows)

    def inner(self):
        """Non-tail entries in reading order ``i_{1,l1-1} ... i_{1,1} i_{2,...} ...``."""
        out = []
        for row in self.rows:
            out.extend(reversed(row[:-1]))
        return tuple(out)

    def is_admissible(self):
        inner = self.inner()
        if any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)):
            return False
        shape, t = self.shape, self.tails()
        long_rows = sum(1 for lam in shape if lam >= 2)
        single = t[long_rows:]
        if any(single[i] < single[i + 1] for i in range(len(single) - 1)):
            return False
        if len(shape) >= 2 and shape[0] == shape[1] + 1 and t[0] < t[1]:
            return False
        for s in range(1, long_rows - 1):
            if shape[s] == shape[s + 1] and t[s] < t[s + 1]:
                return False
        return True


def young_shapes(n):
    """Partitions of n with a strictly longest first row."""

    def parts(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in parts(rest - p, p):
                yield (p,) + tail

    out = []
    for first in range(n, 0, -1):
        for tail in parts(n - first, first - 1):
            out.append((first,) + tail)
    return out


def _split_rows(shape, inner, tails):
    rows, pos = [], 0
    for lam, t in zip(shape, tails):
        cells = inner[pos:pos + lam - 1]
        pos += lam - 1
        rows.append(tuple(reversed(cells)) + (t,))
    return tuple(rows)


def young_fillings(num_gens, degree, multilinear=False):
    out = []
    for shape in young_shapes(degree):
        k = len(shape)
        n_inner = degree - k
        if multilinear:
            gens = range(1, degree + 1)
            for chosen in combinations(gens, n_inner):
                inner = tuple(sorted(chosen, reverse=True))
                rest = [g for g in gens if g not in chosen]
                for tails in permutations(rest):
                    f = YoungFilling(shape, _split_rows(shape, inner, tails))
                    if f.is_admissible():
                        out.append(f)
        else:
            gens = range(1, num_gens + 1)
            for chosen in combinations_with_replacement(gens, n_inner):
                inner = tuple(sorted(chosen, reverse=True))
                for tails in product(gens, repeat=k):
                    f = YoungFilling(shape, _split_rows(shape, inner, tails))
                    if f.is_admissible():
                        out.append(f)
    return out


def filling_to_term(f):
    u = None
    for row in f.rows:
        piece = chain([Leaf(i) for i in row[:-1]], row[-1])
        u = piece if u is None else circ(u, piece)
    return u
