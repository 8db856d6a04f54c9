"""Command-line front end.

Exit codes: 0 ok, 2 usage or syntax error, 3 weight/domain error,
4 internal invariant violation.
"""

import argparse
import json
import sys

from .comder import cd_enumerate
from .errors import NotLieElementError, SignError, StructureError, TermSyntaxError, WeightError
from .identities import NAMES, check_identity, check_wronskian
from .novikov import nov_basis, nov_multiply, nov_reduce, tau_nov
from .poisson import pois_enumerate
from .sgd import sgd_basis, sgd_multiply, sgd_reduce, tau2
from .syntax import format_coeff, format_lincomb, format_monomial, parse_term, to_cd
from .terms import BRACKET, CIRC, Leaf, Node, is_novikov_term

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4


class DomainError(Exception):
    pass


def _positive(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--algebra", choices=("nov", "sgd"), default="sgd")
    common.add_argument("--gens", type=_positive, default=1)
    common.add_argument("--degree", type=_positive, default=1)
    common.add_argument("--multilinear", action="store_true")

    parser = argparse.ArgumentParser(
        prog="sgdbasis",
        description="Bases and multiplication in free Novikov and special GD algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", parents=[common], help="list basis monomials")
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("reduce", parents=[common], help="express an element in the basis")
    p.add_argument("expr", help="term or weight -1 polynomial")

    p = sub.add_parser("multiply", parents=[common], help="product of two terms in the basis")
    p.add_argument("--op", choices=("circ", "bracket"), default="circ")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("expand", parents=[common], help="image of a term in the differential algebra")
    p.add_argument("expr")

    p = sub.add_parser("check", parents=[common], help="verify defining identities")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--identity", type=int, choices=sorted(NAMES))
    g.add_argument("--wronskian", action="store_true")

    p = sub.add_parser("dims", parents=[common], help="dimension table by degree")
    p.add_argument("--max-degree", type=_positive, default=5)
    return parser


# helpers ----------------------------------------------------------------------


def _parse(text):
    return parse_term(text)


def _is_term(x):
    return isinstance(x, (Leaf, Node))


def _novikov_input(x):
    if _is_term(x):
        if not is_novikov_term(x):
            raise DomainError("brackets are not available in the Novikov algebra")
        return tau_nov(x)
    try:
        return to_cd(x)
    except ValueError as e:
        raise DomainError(str(e)) from None


def _sgd_input(x):
    return tau2(x) if _is_term(x) else x


def _terms_payload(algebra, degree, lc):
    return {
        "algebra": algebra,
        "degree": degree,
        "terms": [{"coeff": format_coeff(c), "term": format_monomial(m)} for m, c in lc.items()],
        "count": len(lc),
    }


def _degree_of(lc, default):
    for m in lc:
        return m.degree
    return default


def _emit_lincomb(args, lc, default_degree):
    if args.json:
        return json.dumps(_terms_payload(args.algebra, _degree_of(lc, default_degree), lc))
    return format_lincomb(lc)


# commands ---------------------------------------------------------------------


def cmd_basis(args):
    if args.algebra == "nov":
        terms = nov_basis(args.gens, args.degree, args.multilinear)
    else:
        terms = sgd_basis(args.gens, args.degree, args.multilinear)
    if args.json:
        lc_items = [{"coeff": "1", "term": format_monomial(t)} for t in terms]
        return json.dumps(
            {"algebra": args.algebra, "degree": args.degree, "terms": lc_items, "count": len(terms)}
        )
    if args.count_only:
        return str(len(terms))
    return "\n".join([format_monomial(t) for t in terms] + [f"count: {len(terms)}"])


def cmd_reduce(args):
    x = _parse(args.expr)
    if args.algebra == "nov":
        p = _novikov_input(x)
        out = nov_reduce(p)
    else:
        p = _sgd_input(x)
        out = sgd_reduce(p)
    return _emit_lincomb(args, out, _degree_of(p, 0))


def cmd_multiply(args):
    a, b = _parse(args.left), _parse(args.right)
    if not (_is_term(a) and _is_term(b)):
        raise DomainError("multiply takes two terms")
    if args.algebra == "nov":
        if args.op != "circ":
            raise DomainError("the Novikov algebra has only the circ product")
        _novikov_input(a), _novikov_input(b)
        out = nov_multiply(a, b)
    else:
        out = sgd_multiply(a, b, CIRC if args.op == "circ" else BRACKET)
    return _emit_lincomb(args, out, a.degree + b.degree)


def cmd_expand(args):
    x = _parse(args.expr)
    if not _is_term(x):
        raise DomainError("expand takes a term")
    out = _novikov_input(x) if args.algebra == "nov" else tau2(x)
    return _emit_lincomb(args, out, x.degree)


def cmd_check(args):
    if args.wronskian:
        reports = [check_wronskian()]
    elif args.identity is not None:
        reports = [check_identity(args.identity)]
    else:
        reports = [check_identity(n) for n in sorted(NAMES)] + [check_wronskian()]
    if args.json:
        return json.dumps(
            [
                {
                    "identity": r.id,
                    "name": r.name,
                    "verdict": r.verdict,
                    "witness": None if r.witness is None else format_monomial(r.witness[0]),
                }
                for r in reports
            ]
        )
    lines = []
    for r in reports:
        line = f"identity {r.id} ({r.name}): {r.verdict}"
        if not r.holds:
            m, c = r.witness
            line += f"; witness {format_coeff(c)}*{format_monomial(m)}"
        lines.append(line)
    return "\n".join(lines)


def cmd_dims(args):
    enum = cd_enumerate if args.algebra == "nov" else pois_enumerate
    rows = [(n, len(enum(args.gens, n, -1, args.multilinear))) for n in range(1, args.max_degree + 1)]
    if args.json:
        return json.dumps(
            {"algebra": args.algebra, "dims": [{"degree": n, "dim": d} for n, d in rows]}
        )
    return "\n".join(["degree\tdim"] + [f"{n}\t{d}" for n, d in rows])


COMMANDS = {
    "basis": cmd_basis,
    "reduce": cmd_reduce,
    "multiply": cmd_multiply,
    "expand": cmd_expand,
    "check": cmd_check,
    "dims": cmd_dims,
}


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        text = COMMANDS[args.command](args)
    except TermSyntaxError as e:
        stderr.write(f"syntax error at offset {e.offset}: expected {', '.join(e.expected)}\n")
        stderr.write(e.caret() + "\n")
        return EXIT_USAGE
    except (WeightError, DomainError, NotLieElementError) as e:
        stderr.write(f"error: {e}\n")
        return EXIT_DOMAIN
    except (StructureError, SignError, AssertionError) as e:
        stderr.write(f"internal error: {e}\n")
        return EXIT_INTERNAL
    stdout.write(text + "\n")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
