"""Exact linear combinations of monomials and rank over the rationals.

Monomials of any kind may be used as long as they are hashable and expose a
``key`` attribute; keys of monomials of one kind must be mutually comparable
and define a total order.  Iteration always follows that order so that
printed output is reproducible.
"""

from fractions import Fraction
from numbers import Rational


def as_rational(c):
    """Normalize an int or Fraction; Fractions with denominator 1 become int."""
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


def accumulate(terms, mon, c):
    """Add ``c * mon`` into the dict ``terms`` in place, dropping zeros."""
    v = terms.get(mon, 0) + c
    if v:
        terms[mon] = v
    else:
        terms.pop(mon, None)


class LinComb:
    """Finite formal sum of monomials with exact rational coefficients.

    Instances are immutable by convention: the underlying dict is never
    mutated after construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self._terms = {}
        elif isinstance(terms, LinComb):
            self._terms = terms._terms
        else:
            items = terms.items() if isinstance(terms, dict) else terms
            d = {}
            for m, c in items:
                accumulate(d, m, as_rational(c))
            self._terms = d
        self._hash = None

    @classmethod
    def _wrap(cls, d):
        # d must already be zero-free and owned by the new instance
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, m, c=1):
        c = as_rational(c)
        return cls._wrap({m: c} if c else {})

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def __iter__(self):
        return iter(self.monomials())

    def monomials(self):
        return sorted(self._terms, key=_key)

    def items(self):
        return [(m, self._terms[m]) for m in self.monomials()]

    def coeff(self, m):
        return self._terms.get(m, 0)

    def __contains__(self, m):
        return m in self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def leading(self, key=None):
        """Return ``(monomial, coefficient)`` with the greatest key."""
        if not self._terms:
            raise ValueError("zero combination has no leading term")
        m = max(self._terms, key=key or _key)
        return m, self._terms[m]

    def as_dict(self):
        return dict(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        return lc_add(self, other)

    def __neg__(self):
        return LinComb._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LinComb):
            return NotImplemented
        d = dict(self._terms)
        for m, c in other._terms.items():
            accumulate(d, m, -c)
        return LinComb._wrap(d)

    def __mul__(self, c):
        if isinstance(c, LinComb):
            return NotImplemented
        return lc_scale(c, self)

    __rmul__ = __mul__

    def map_monomials(self, f):
        """Linear extension of ``f`` (monomial -> LinComb) to this combination."""
        d = {}
        for m, c in self._terms.items():
            for m2, c2 in f(m)._terms.items():
                accumulate(d, m2, c * c2)
        return LinComb._wrap(d)

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        return "LinComb(" + ", ".join(f"{c}*{m!r}" for m, c in self.items()) + ")"


def _key(m):
    return m.key


def lc_add(a, b):
    d = dict(a._terms)
    for m, c in b._terms.items():
        accumulate(d, m, c)
    return LinComb._wrap(d)


def lc_scale(c, a):
    c = as_rational(c)
    if not c:
        return LinComb.zero()
    return LinComb._wrap({m: as_rational(c * v) for m, v in a._terms.items()})


def lc_sum(combs):
    d = {}
    for a in combs:
        for m, c in a._terms.items():
            accumulate(d, m, c)
    return LinComb._wrap(d)


def lc_rank(vectors):
    """Rank of the coefficient matrix by exact sparse Gaussian elimination.

    Each pivot row is normalized to leading coefficient 1 at its greatest
    monomial; reducing by it only introduces smaller monomials, so the loop
    over one incoming row terminates.
    """
    pivots = {}
    for v in vectors:
        row = {m: Fraction(c) for m, c in v._terms.items()}
        while row:
            lead = max(row, key=_key)
            piv = pivots.get(lead)
            if piv is None:
                inv = 1 / row[lead]
                pivots[lead] = {m: c * inv for m, c in row.items()}
                break
            f = row[lead]
            for m, c in piv.items():
                accumulate(row, m, -f * c)
    return len(pivots)
