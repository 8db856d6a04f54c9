"""Acceptance criteria, one PASS/FAIL line each.

Run directly (``python3 tests/test_acceptance.py``) or through pytest; in
the latter case the lines are repeated in the terminal summary.
"""

import io
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import (  # noqa: E402
    lyndon_words_bruteforce,
    multilinear_lie_dim,
    necklace_count,
    novikov_count,
    partitions,
    poisson_count,
)
from sgdbasis.cli import main  # noqa: E402
from sgdbasis.comder import cd_enumerate, cd_monomial  # noqa: E402
from sgdbasis.identities import NAMES, check_identity, check_wronskian, special_matches  # noqa: E402
from sgdbasis.linear import LinComb, lc_rank  # noqa: E402
from sgdbasis.lyndon import ls_enumerate  # noqa: E402
from sgdbasis.novikov import (  # noqa: E402
    filling_to_term,
    nf_classify,
    nf_less,
    nov_basis,
    nov_reduce,
    phi,
    tau_nov,
    tau_nov_lc,
    young_fillings,
)
from sgdbasis.poisson import pois_bracket, pois_derive, pois_enumerate, pois_mul  # noqa: E402
from sgdbasis.sgd import (  # noqa: E402
    pnf_classify,
    pnf_less,
    psi,
    psi_hat,
    sgd_basis,
    sgd_multiply,
    sgd_reduce,
    tau2,
    tau2_lc,
)
from sgdbasis.syntax import format_lincomb, format_term, parse_magma, parse_pois  # noqa: E402
from sgdbasis.terms import canonical_orientation  # noqa: E402

RESULTS = []


def _canon(t):
    return format_term(canonical_orientation(t)[1])


def _nf(text):
    ((m, _),) = parse_pois(text).items()
    return m


# 1 ---------------------------------------------------------------------------


def c1_worked_examples():
    checks = []
    m = nf_classify(next(iter(cd_monomial((1, 0), (2, 0), (3, 2), (5, 1), (4, 1)))))
    checks.append(format_term(phi(m)) == "((x2 o (x1 o x3)) o x5) o x4")
    want = cd_monomial((1, 0), (2, 1), (3, 1)) + cd_monomial((1, 0), (2, 0), (3, 2))
    checks.append(tau_nov(parse_magma("x1 o (x2 o x3)")) == want)
    for poly, term in [
        ("x3*x4*x5*{x1', x2''}", "[x3 o x1, x5 o (x4 o x2)]"),
        ("x5*x6*x7*x8*{x3', x4''}*{x1, x2'}*x9''",
         "[x1, [x6 o x3, x8 o (x7 o x4)] o x2] o (x5 o x9)"),
    ]:
        checks.append(_canon(psi(pnf_classify(_nf(poly)))) == _canon(parse_magma(term)))
    four = parse_pois("x3*x4*{x1', x2'} + {x3, x4}*x2'*x1' + x4*{x3, x2'}*x1' + x3*{x1', x4}*x2'")
    got = tau2(parse_magma("[x3 o x1, x4 o x2]"))
    checks.append(got == four and format_lincomb(got) == format_lincomb(four) and len(got) == 4)
    return all(checks), f"{sum(checks)}/{len(checks)} goldens"


# 2 ---------------------------------------------------------------------------


def c2_identities():
    reports = [check_identity(n) for n in sorted(NAMES)] + [check_wronskian()]
    ok = [r.holds for r in reports]
    return all(ok), f"{sum(ok)}/{len(ok)} identities expand to zero"


# 3 ---------------------------------------------------------------------------


def c3_special_identities():
    ok = [special_matches(7), special_matches(8)]
    return all(ok), "identities 7 and 8 recovered by reduction"


# 4 ---------------------------------------------------------------------------


def c4_novikov_triangularity():
    count = 0
    for gens in (1, 2, 3):
        for degree in range(1, 7):
            ms = cd_enumerate(gens, degree)
            vecs = []
            for m in ms:
                a = nf_classify(m)
                e = tau_nov(phi(a))
                if e.coeff(m) != 1:
                    return False, f"leading coefficient at {m!r}"
                for other, _ in e.items():
                    if other != m and not nf_less(nf_classify(other), a):
                        return False, f"term {other!r} not below {m!r}"
                vecs.append(e)
                count += 1
            if lc_rank(vecs) != len(ms):
                return False, f"rank deficit at gens={gens} degree={degree}"
    return True, f"{count} normal forms"


# 5 ---------------------------------------------------------------------------


def c5_sgd_triangularity():
    count = 0
    for gens in (1, 2, 3):
        for degree in range(1, 6):
            ms = pois_enumerate(gens, degree)
            vecs = []
            for m in ms:
                a = pnf_classify(m)
                sign, t = psi_hat(a)
                e = tau2(t) * sign
                if e.coeff(m) != 1:
                    return False, f"leading coefficient at {m!r}"
                for other, _ in e.items():
                    if other != m and not pnf_less(pnf_classify(other), a):
                        return False, f"term {other!r} not below {m!r}"
                vecs.append(e)
                count += 1
            if lc_rank(vecs) != len(ms):
                return False, f"rank deficit at gens={gens} degree={degree}"
    return True, f"{count} normal forms"


# 6 ---------------------------------------------------------------------------


def _three_way(enum, basis, expand, oracle):
    ms, bs = enum(), basis()
    r = lc_rank([expand(t) for t in bs])
    return len(ms) == len(bs) == r == oracle, (len(ms), len(bs), r, oracle)


def c6_dimension_tables():
    rows = []
    for n, want in zip(range(1, 8), [1, 1, 2, 3, 5, 7, 11]):
        ok, t = _three_way(lambda: cd_enumerate(1, n), lambda: nov_basis(1, n), tau_nov,
                           novikov_count(1, n))
        rows.append((ok and t[0] == want == partitions(n - 1), t))
    for n, want in zip(range(1, 6), [1, 2, 6, 20, 70]):
        ok, t = _three_way(lambda: cd_enumerate(n, n, multilinear=True),
                           lambda: nov_basis(n, n, True), tau_nov, novikov_count(n, n, True))
        rows.append((ok and t[0] == want, t))
    for n, want in [(2, 3), (3, 17)]:
        ok, t = _three_way(lambda: pois_enumerate(n, n, multilinear=True),
                           lambda: sgd_basis(n, n, True), tau2, poisson_count(n, n, multilinear=True))
        rows.append((ok and t[0] == want, t))
    for n, want in zip(range(1, 4), [1, 1, 3]):
        ok, t = _three_way(lambda: pois_enumerate(1, n), lambda: sgd_basis(1, n), tau2,
                           poisson_count(1, n))
        rows.append((ok and t[0] == want, t))
    good = sum(ok for ok, _ in rows)
    return good == len(rows), f"{good}/{len(rows)} table entries"


# 7 ---------------------------------------------------------------------------


def c7_young_bijection():
    cases = [(g, n, False) for g in (1, 2, 3) for n in range(1, 7)]
    cases += [(1, n, True) for n in range(1, 7)]
    for gens, degree, ml in cases:
        fs = young_fillings(gens, degree, ml)
        image = [filling_to_term(f) for f in fs]
        basis = nov_basis(gens, degree, ml)
        if not (len(fs) == len(basis) == len(set(image)) and set(image) == set(basis)):
            return False, f"mismatch at gens={gens} degree={degree} multilinear={ml}"
    return True, f"{len(cases)} cases"


# 8 ---------------------------------------------------------------------------


def c8_round_trips():
    count = 0
    for gens in (1, 2, 3):
        for degree in range(1, 7):
            for m in cd_enumerate(gens, degree):
                p = LinComb.monomial(m)
                if tau_nov_lc(nov_reduce(p)) != p:
                    return False, f"Novikov round trip at {m!r}"
                count += 1
        for degree in range(1, 6):
            for m in pois_enumerate(gens, degree):
                p = LinComb.monomial(m)
                if tau2_lc(sgd_reduce(p)) != p:
                    return False, f"SGD round trip at {m!r}"
                count += 1
    pairs = 0
    bases = {n: sgd_basis(3, n) for n in range(1, 5)}
    for n1 in range(1, 5):
        for n2 in range(1, 6 - n1):
            for a in bases[n1]:
                for b in bases[n2]:
                    ta, tb = tau2(a), tau2(b)
                    if tau2_lc(sgd_multiply(a, b, "circ")) != pois_mul(ta, pois_derive(tb)):
                        return False, f"circ product of {a} and {b}"
                    if tau2_lc(sgd_multiply(a, b, "bracket")) != pois_bracket(ta, tb):
                        return False, f"bracket of {a} and {b}"
                    pairs += 1
    return True, f"{count} monomials, {pairs} basis pairs"


# 9 ---------------------------------------------------------------------------


def c9_free_lie():
    from itertools import permutations

    from sgdbasis.comder import DLetter
    from sgdbasis.lyndon import is_ls

    ok = []
    for n in range(1, 6):
        words = [p for p in permutations(range(1, n + 1)) if is_ls(tuple(DLetter(i) for i in p))]
        fact = 1
        for k in range(2, n):
            fact *= k
        ok.append(len(words) == fact)
        if n <= 4:
            ok.append(multilinear_lie_dim(n) == fact)
    for k in (2, 3):
        for n in range(1, 6):
            ok.append(len(ls_enumerate(k, 0, n)) == necklace_count(k, n)
                      == len(lyndon_words_bruteforce(k, n)))
    return all(ok), f"{sum(ok)}/{len(ok)} counts"


# 10 --------------------------------------------------------------------------


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), stdout=out, stderr=err), out.getvalue(), err.getvalue()


def c10_cli():
    ok = []
    code, out, _ = _run("basis", "--algebra", "nov", "--gens", "1", "--degree", "3")
    ok.append(code == 0 and out.splitlines()[-1] == "count: 2")
    code, out, _ = _run("basis", "--algebra", "sgd", "--gens", "2", "--degree", "2", "--multilinear")
    ok.append(code == 0 and sorted(out.splitlines()[:-1]) == ["[x2, x1]", "x1 o x2", "x2 o x1"])
    ok.append(_run("basis", "--algebra", "sgd", "--gens", "3", "--degree", "3", "--multilinear",
                   "--count-only")[:2] == (0, "17\n"))
    ok.append(_run("multiply", "--op", "bracket", "(x1)", "(x2 o x3)")[:2] == (0, "-[x2 o x3, x1]\n"))
    code, out, _ = _run("check", "--identity", "7")
    ok.append(code == 0 and out.strip().endswith("holds"))
    code, out, _ = _run("dims", "--algebra", "nov", "--gens", "1", "--max-degree", "7")
    ok.append(code == 0 and [r.split("\t")[1] for r in out.splitlines()[1:]]
              == ["1", "1", "2", "3", "5", "7", "11"])
    code, out, err = _run("reduce", "[x1, x2 o x3")
    ok.append(code == 2 and err.splitlines()[1:] == ["[x1, x2 o x3", " " * 12 + "^"])
    return all(ok), f"{sum(ok)}/{len(ok)} invocations"


CRITERIA = [
    (1, "worked examples reproduce exactly", c1_worked_examples),
    (2, "defining identities expand to zero", c2_identities),
    (3, "special identities recovered by reduction", c3_special_identities),
    (4, "Novikov expansions unitriangular", c4_novikov_triangularity),
    (5, "SGD expansions unitriangular with leading +1", c5_sgd_triangularity),
    (6, "dimension tables agree three ways", c6_dimension_tables),
    (7, "Young fillings biject onto the Novikov basis", c7_young_bijection),
    (8, "reduction and multiplication round trips", c8_round_trips),
    (9, "free Lie algebra counts", c9_free_lie),
    (10, "command-line contract", c10_cli),
]


def evaluate(number, label, fn):
    try:
        ok, detail = fn()
    except Exception as e:  # a crash is a failure of the criterion
        ok, detail = False, f"{type(e).__name__}: {e}"
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {label} ({detail})"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number,label,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, label, fn):
    ok, line = evaluate(number, label, fn)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
