"""Defining identities of Novikov, Poisson, GD and special GD algebras.

Each identity is checked by expanding both sides on distinct generators in
ComDer<X> or PoisDer<X> directly, without going through the bases, so these
checks are independent of the normal-form machinery.
"""

from dataclasses import dataclass, field
from itertools import permutations

from .comder import cd_letter, nov_circ
from .linear import LinComb, lc_sum
from .poisson import pois_bracket, pois_letter, pois_mul, sgd_bracket, sgd_circ
from .sgd import sgd_reduce, tau2
from .syntax import parse_magma
from .terms import canonical_lincomb

NAMES = {
    1: "left symmetry",
    2: "right commutativity",
    3: "commutativity and associativity of the product",
    4: "antisymmetry and Jacobi identity of the bracket",
    5: "Leibniz rule linking bracket and product",
    6: "Gelfand-Dorfman compatibility",
    7: "first special identity",
    8: "second special identity",
}


@dataclass
class IdentityReport:
    id: object
    name: str
    parts: list = field(default_factory=list)  # (lhs, rhs) pairs

    @property
    def differences(self):
        return [lhs - rhs for lhs, rhs in self.parts]

    @property
    def holds(self):
        return all(not d for d in self.differences)

    @property
    def verdict(self):
        return "holds" if self.holds else "fails"

    @property
    def witness(self):
        for d in self.differences:
            if d:
                return d.leading()
        return None


def _identity_parts(n):
    if n in (1, 2):
        x1, x2, x3 = (cd_letter(i) for i in (1, 2, 3))
        o = nov_circ
        if n == 1:
            return [(o(o(x1, x2), x3) - o(x1, o(x2, x3)), o(o(x2, x1), x3) - o(x2, o(x1, x3)))]
        return [(o(o(x1, x2), x3), o(o(x1, x3), x2))]
    x1, x2, x3, x4 = (pois_letter(i) for i in (1, 2, 3, 4))
    if n == 3:
        m = pois_mul
        return [(m(x1, x2), m(x2, x1)), (m(m(x1, x2), x3), m(x1, m(x2, x3)))]
    if n == 4:
        b = pois_bracket
        jacobi = b(b(x1, x2), x3) + b(b(x2, x3), x1) + b(b(x3, x1), x2)
        return [(b(x1, x2), -b(x2, x1)), (jacobi, LinComb.zero())]
    if n == 5:
        b, m = pois_bracket, pois_mul
        return [(b(x1, m(x2, x3)), m(b(x1, x2), x3) + m(x2, b(x1, x3)))]
    o, br = sgd_circ, sgd_bracket
    if n == 6:
        lhs = o(x2, br(x1, x3))
        rhs = br(x1, o(x2, x3)) - br(x3, o(x2, x1)) + o(br(x2, x1), x3) - o(br(x2, x3), x1)
        return [(lhs, rhs)]
    if n == 7:
        lhs = br(x1, o(o(x2, x3), x4))
        rhs = o(br(x1, o(x2, x3)), x4) + o(br(x1, o(x2, x4)), x3) - o(o(br(x1, x2), x3), x4)
        return [(lhs, rhs)]
    if n == 8:
        lhs = br(o(x3, x1), o(x4, x2))
        rhs = (
            br(o(x4, x1), o(x3, x2))
            + o(br(x3, o(x4, x1)), x2)
            - o(br(x4, o(x3, x2)), x1)
            - o(br(x4, o(x3, x1)), x2)
            + o(br(x3, o(x4, x2)), x1)
            + 2 * o(o(br(x4, x3), x1), x2)
        )
        return [(lhs, rhs)]
    raise ValueError(f"no identity numbered {n}")


def check_identity(n):
    return IdentityReport(n, NAMES[n], _identity_parts(n))


def wronskian(p, q):
    """``p d(q) - q d(p)`` on ComDer<X>."""
    return nov_circ(p, q) - nov_circ(q, p)


def _perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def check_wronskian():
    """Degree-5 alternating sum of left-normed Wronskian brackets over S_4."""
    xs = [cd_letter(i) for i in range(1, 6)]
    terms = []
    for p in permutations(range(4)):
        inner = xs[4]
        for k in reversed(p):
            inner = wronskian(xs[k], inner)
        terms.append(inner * _perm_sign(p))
    return IdentityReport("wronskian", "degree-5 identity of the Wronskian bracket",
                          [(lc_sum(terms), LinComb.zero())])


# the two special identities recovered by reduction ----------------------------

SPECIAL_LHS = {7: "[x1, (x2 o x3) o x4]", 8: "[x4 o x1, x3 o x2]"}

_SPECIAL_RHS = {
    7: [(1, "[x1, x2 o x3] o x4"), (1, "[x1, x2 o x4] o x3"), (-1, "([x1, x2] o x3) o x4")],
    # identity (8) solved for [x4 o x1, x3 o x2]
    8: [
        (1, "[x3 o x1, x4 o x2]"),
        (-1, "[x3, x4 o x1] o x2"),
        (1, "[x4, x3 o x2] o x1"),
        (1, "[x4, x3 o x1] o x2"),
        (-1, "[x3, x4 o x2] o x1"),
        (-2, "([x4, x3] o x1) o x2"),
    ],
}


def special_rhs(n):
    return LinComb({parse_magma(s): c for c, s in _SPECIAL_RHS[n]})


def derive_special(n):
    """Basis expansion of the non-basic left side of a special identity."""
    return sgd_reduce(tau2(parse_magma(SPECIAL_LHS[n])))


def special_matches(n):
    """Whether the reduction reproduces the identity modulo bracket
    orientation and right commutativity."""
    return canonical_lincomb(derive_special(n)) == canonical_lincomb(special_rhs(n))
