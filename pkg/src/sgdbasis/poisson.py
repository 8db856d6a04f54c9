"""The free Poisson algebra with derivation, PoisDer<X> = Pois<X_inf>.

Basis monomials are commutative products of LS words over derivative
letters.  Lie factors are always stored in LS orientation; the sign of a
reoriented bracket lives in the coefficient.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations

from .comder import DLetter, _order_vectors
from .errors import WeightError
from .linear import LinComb, accumulate
from .lyndon import LSWord, derive_ls, is_ls, lie_bracket_ls, ls_word


@dataclass(frozen=True)
class PoisMonomial:
    factors: tuple
    key: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.factors:
            raise ValueError("empty monomial")
        fs = tuple(sorted(self.factors, key=lambda a: a.key))
        object.__setattr__(self, "factors", fs)
        deg = sum(a.degree for a in fs)
        object.__setattr__(self, "key", (deg, len(fs), tuple(a.key for a in fs)))

    @property
    def degree(self):
        return self.key[0]

    def content(self):
        return tuple(sorted(l.gen for a in self.factors for l in a.word))

    def __repr__(self):
        return "*".join(map(repr, self.factors))


def factor_weight(a):
    return a.order - a.degree + (a.degree - 1)


def pois_weight(m):
    return sum(factor_weight(a) for a in m.factors)


def pois_monomial(*factors):
    """Polynomial of one monomial; factors are LSWords, DLetters or (gen, order)."""
    fs = []
    for f in factors:
        if isinstance(f, LSWord):
            fs.append(f)
        elif isinstance(f, DLetter):
            fs.append(ls_word((f,)))
        else:
            fs.append(ls_word((DLetter(*f),)))
    return LinComb.monomial(PoisMonomial(tuple(fs)))


def pois_letter(gen, order=0):
    return pois_monomial((gen, order))


def _merge(a, b):
    return PoisMonomial(a.factors + b.factors)


def pois_mul(p, q):
    d = {}
    for m1, c1 in p.as_dict().items():
        for m2, c2 in q.as_dict().items():
            accumulate(d, _merge(m1, m2), c1 * c2)
    return LinComb._wrap(d)


def _bracket_mono(m, n, out, coeff):
    fm, fn = m.factors, n.factors
    for i, a in enumerate(fm):
        rest_m = fm[:i] + fm[i + 1:]
        for j, b in enumerate(fn):
            lie = lie_bracket_ls(a, b)
            if not lie:
                continue
            rest = rest_m + fn[:j] + fn[j + 1:]
            for w, c in lie.items():
                accumulate(out, PoisMonomial(rest + (w,)), coeff * c)


def pois_bracket(p, q):
    """Poisson bracket, extended from LS factors by the Leibniz rule in both slots."""
    d = {}
    for m1, c1 in p.as_dict().items():
        for m2, c2 in q.as_dict().items():
            _bracket_mono(m1, m2, d, c1 * c2)
    return LinComb._wrap(d)


def pois_derive(p):
    d = {}
    for m, c in p.as_dict().items():
        fs = m.factors
        for i, a in enumerate(fs):
            rest = fs[:i] + fs[i + 1:]
            for w, c2 in derive_ls(a).items():
                accumulate(d, PoisMonomial(rest + (w,)), c * c2)
    return LinComb._wrap(d)


def _require_weight(p, weight=-1):
    for m in p:
        if pois_weight(m) != weight:
            raise WeightError(f"monomial {m!r} has weight {pois_weight(m)}, expected {weight}")


def sgd_circ(p, q):
    _require_weight(p)
    _require_weight(q)
    return pois_mul(p, pois_derive(q))


def sgd_bracket(p, q):
    _require_weight(p)
    _require_weight(q)
    return pois_bracket(p, q)


# enumeration ----------------------------------------------------------------


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def _ls_words_with_content(letters):
    out = set()
    for perm in set(permutations(letters)):
        if is_ls(perm):
            out.add(ls_word(perm))
    return out


def pois_enumerate(num_gens, degree, weight=-1, multilinear=False):
    """All basis monomials of total degree ``degree`` in X and the given weight.

    A monomial with f factors and derivative total s has weight ``s - f``,
    so for each factor count the letter multiset is fixed up to gens and the
    search is finite.
    """
    if multilinear:
        gen_choices = [tuple(range(1, degree + 1))]
    else:
        gen_choices = list(combinations_with_replacement(range(1, num_gens + 1), degree))
    found = set()
    for nfac in range(1, degree + 1):
        total = weight + nfac
        if total < 0:
            continue
        for gens in gen_choices:
            for orders in _order_vectors(total, degree):
                letters = tuple(DLetter(g, r) for g, r in zip(gens, orders))
                for part in _set_partitions(list(letters)):
                    if len(part) != nfac:
                        continue
                    choices = [_ls_words_with_content(tuple(block)) for block in part]
                    if not all(choices):
                        continue
                    _products(choices, (), found)
    return sorted(found, key=lambda m: m.key)


def _products(choices, acc, found):
    if not choices:
        found.add(PoisMonomial(acc))
        return
    for w in choices[0]:
        _products(choices[1:], acc + (w,), found)
