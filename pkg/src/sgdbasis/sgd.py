"""A monomial basis of the free special Gelfand-Dorfman algebra.

Weight -1 monomials of PoisDer<X> are put in normal form; ``psi`` sends a
normal form to a term in ``o`` and ``[,]`` whose expansion ``tau2`` is,
after sign normalization, the monomial plus strictly smaller monomials.
"""

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import SignError, StructureError, WeightError
from .novikov import TriangularReducer, chain, phi_items
from .poisson import (
    PoisMonomial,
    pois_bracket,
    pois_derive,
    pois_enumerate,
    pois_letter,
    pois_mul,
    pois_weight,
)
from .lyndon import ls_letter
from .comder import DLetter
from .terms import BRACKET, CIRC, Leaf, bracket


def nf_key(factors):
    """Comparison key of a weight -1 monomial given by its LS factors.

    1. orders >= 2 of all letters, flattened out of the Lie words, greatest
       first (the ComDer order; Leibniz terms that move derivatives lower it);
    2. derivative totals of the factors, greatest first;
    3. Lie degrees of the factors carrying derivatives, smallest first, so a
       derived letter standing alone ranks below one held in a bracket;
    4. the factors themselves, which makes the order total.
    """
    flat = tuple(sorted((l.order for a in factors for l in a.word if l.order >= 2), reverse=True))
    totals = tuple(sorted((a.order for a in factors), reverse=True))
    carrying = sorted((a for a in factors if a.order), key=lambda a: (a.degree, -a.order, a.key))
    profile = tuple(a.degree for a in carrying)
    rest = tuple((a.order, a.key) for a in carrying)
    rest += tuple(sorted(a.key for a in factors if not a.order))
    return (flat, totals, profile, rest)


@dataclass(frozen=True)
class PoisNF:
    """Normal form ``x_plain  B...  A...  x_derived`` of a weight -1 monomial.

    ``b_words`` ascending and ``a_words`` descending under ``ls_less``;
    ``derived`` holds ``(gen, order)`` with order >= 1, greatest first.
    """

    plain: tuple
    b_words: tuple
    a_words: tuple
    derived: tuple
    sign: int = 1
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "key", nf_key(self.factors()))

    def factors(self):
        return (
            tuple(ls_letter(i) for i in self.plain)
            + self.b_words
            + self.a_words
            + tuple(ls_letter(j, r) for j, r in self.derived)
        )

    def monomial(self):
        return PoisMonomial(self.factors())


def pnf_classify(m):
    if pois_weight(m) != -1:
        raise WeightError(f"monomial {m!r} has weight {pois_weight(m)}, expected -1")
    plain, bs, as_, derived = [], [], [], []
    for a in m.factors:
        if a.is_letter():
            l = a.word[0]
            (plain if l.order == 0 else derived).append(l)
        elif a.involves_d():
            as_.append(a)
        else:
            bs.append(a)
    return PoisNF(
        tuple(sorted(l.gen for l in plain)),
        tuple(sorted(bs, key=lambda a: a.key)),
        tuple(sorted(as_, key=lambda a: a.key, reverse=True)),
        tuple((l.gen, l.order) for l in sorted(derived, key=lambda l: l.key, reverse=True)),
    )


def pnf_less(a, b):
    """``a < b`` in the order of :func:`nf_key`; a proper prefix is smaller."""
    return a.key < b.key


# psi ------------------------------------------------------------------------


def _tree_term(t, subst, pos=0):
    """Replace the letters of an LS bracketing, left to right, by ``subst``."""
    if isinstance(t, DLetter):
        return subst[pos], pos + 1
    left, pos = _tree_term(t[0], subst, pos)
    right, pos = _tree_term(t[1], subst, pos)
    return bracket(left, right), pos


def lie_term(a):
    """The bracket term of a d-free LS word over generators."""
    return _tree_term(a.tree, [Leaf(l.gen) for l in a.word])[0]


def absorb(items, a):
    """Turn an A-word and its absorbed items into one bracket term.

    ``items`` ascending, as many as the derivative total of ``a``.  Letters
    of ``a`` are taken greatest first; a letter of order p takes the next p
    greatest items and becomes their chain ending in the underived letter.
    """
    if len(items) != a.order:
        raise StructureError(f"{a!r} needs {a.order} letters, got {len(items)}")
    letters = a.word
    ranked = sorted(range(len(letters)), key=lambda i: letters[i].key, reverse=True)
    subst = [None] * len(letters)
    top = len(items)
    for i in ranked:
        p = letters[i].order
        subst[i] = chain(items[top - p:top], letters[i].gen)
        top -= p
    return _tree_term(a.tree, subst)[0]


def psi(nf):
    """The basis term of a Poisson normal form (before sign normalization)."""
    pool = [((0, (0, i)), Leaf(i)) for i in nf.plain]
    pool += [((1, b.key), lie_term(b)) for b in nf.b_words]
    pool.sort(key=lambda it: it[0])
    for serial, a in enumerate(nf.a_words):
        need = a.order
        if need > len(pool):
            raise StructureError(f"not enough weight -1 letters for {a!r}")
        taken = [t for _, t in pool[len(pool) - need:]]
        del pool[len(pool) - need:]
        pool.append(((2, serial), absorb(taken, a)))
    return phi_items(pool, nf.derived)


@lru_cache(maxsize=None)
def tau2(t):
    """Expansion of an SGD term in PoisDer<X>: o -> p*d(q), [,] -> {p, q}."""
    if isinstance(t, Leaf):
        return pois_letter(t.gen)
    if t.op == CIRC:
        return pois_mul(tau2(t.left), pois_derive(tau2(t.right)))
    return pois_bracket(tau2(t.left), tau2(t.right))


def tau2_lc(lc):
    return lc.map_monomials(tau2)


@lru_cache(maxsize=None)
def psi_hat(nf):
    """``(sign, term)`` with ``sign * tau2(term)`` having leading coefficient +1."""
    t = psi(nf)
    s = tau2(t).coeff(nf.monomial())
    if s not in (1, -1):
        raise SignError(f"coefficient {s} of the leading monomial for {t}")
    return s, t


def _check_weight(p):
    for m in p:
        if pois_weight(m) != -1:
            raise WeightError(f"monomial {m!r} has weight {pois_weight(m)}, expected -1")


_reducer = TriangularReducer(pnf_classify, psi_hat, tau2)


def sgd_reduce(p):
    """Express a weight -1 element of PoisDer<X> in the basis ``N_psi``."""
    _check_weight(p)
    return _reducer.reduce(p)


def sgd_multiply(a, b, op):
    ta, tb = tau2(a), tau2(b)
    if op in (CIRC, "circ"):
        prod = pois_mul(ta, pois_derive(tb))
    elif op in (BRACKET, "bracket"):
        prod = pois_bracket(ta, tb)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return sgd_reduce(prod)


def sgd_basis(num_gens, degree, multilinear=False):
    return [psi(pnf_classify(m)) for m in pois_enumerate(num_gens, degree, -1, multilinear)]
