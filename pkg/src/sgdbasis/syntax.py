"""Surface syntax for terms and differential polynomials.

Terms::

    expr    := operand [ "o" operand ]
    operand := gen | "(" expr ")" | "[" expr "," expr "]"

Polynomials (commutative or Poisson)::

    pois    := ["-"] summand (("+" | "-") summand)*
    summand := [rational ["*"]] factor ("*" factor)*
    factor  := dgen | "{" pois "," pois "}"
    dgen    := gen ("'" | "''" | "'''" | "^(" digits ")")?

``o`` is not associative, so ``a o b o c`` is rejected.
"""

from fractions import Fraction

from .comder import CDMonomial, DLetter
from .errors import TermSyntaxError
from .linear import LinComb, as_rational
from .lyndon import format_tree
from .poisson import PoisMonomial, pois_bracket, pois_letter, pois_mul
from .terms import BRACKET, CIRC, Leaf, Node, format_term


class _Parser:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.fail_pos = -1
        self.fail_expected = set()

    # low-level ------------------------------------------------------------

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self):
        self.ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, *expected):
        if self.pos > self.fail_pos:
            self.fail_pos, self.fail_expected = self.pos, set(expected)
        elif self.pos == self.fail_pos:
            self.fail_expected.update(expected)
        return TermSyntaxError(self.text, self.fail_pos, self.fail_expected)

    def expect(self, tok):
        self.ws()
        if self.text.startswith(tok, self.pos):
            self.pos += len(tok)
            return
        raise self.error(repr(tok))

    def digits(self):
        self.ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("digits")
        return int(self.text[start:self.pos])

    def gen(self):
        self.ws()
        if not self.text.startswith("x", self.pos):
            raise self.error("generator")
        self.pos += 1
        if self.pos >= len(self.text) or not self.text[self.pos].isdigit():
            raise self.error("digits")
        i = self.digits()
        if i < 1:
            self.pos -= 1
            raise self.error("positive index")
        return i

    def end(self):
        self.ws()
        if self.pos != len(self.text):
            raise self.error("end of input")

    # terms ----------------------------------------------------------------

    def expr(self):
        left = self.operand()
        self.ws()
        if self.text.startswith("o", self.pos) and not self._ident_follows(self.pos + 1):
            self.pos += 1
            right = self.operand()
            return Node(CIRC, left, right)
        return left

    def _ident_follows(self, i):
        return i < len(self.text) and (self.text[i].isalnum() or self.text[i] == "_")

    def operand(self):
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.expr()
            self.expect(")")
            return t
        if c == "[":
            self.pos += 1
            a = self.expr()
            self.expect(",")
            b = self.expr()
            self.expect("]")
            return Node(BRACKET, a, b)
        if c == "x":
            return Leaf(self.gen())
        raise self.error("generator", "'('", "'['")

    # polynomials ------------------------------------------------------------

    def pois(self):
        sign = 1
        if self.peek() == "-":
            self.pos += 1
            sign = -1
        total = self.summand() * sign
        while True:
            c = self.peek()
            if c not in ("+", "-"):
                return total
            self.pos += 1
            s = self.summand()
            total = total + s if c == "+" else total - s

    def summand(self):
        coeff = 1
        if self.peek().isdigit():
            num = self.digits()
            den = 1
            if self.peek() == "/":
                self.pos += 1
                den = self.digits()
                if den == 0:
                    raise self.error("nonzero denominator")
            coeff = as_rational(Fraction(num, den))
            if self.peek() == "*":
                self.pos += 1
        prod = self.factor()
        while self.peek() == "*":
            self.pos += 1
            prod = pois_mul(prod, self.factor())
        return prod * coeff

    def factor(self):
        c = self.peek()
        if c == "{":
            self.pos += 1
            a = self.pois()
            self.expect(",")
            b = self.pois()
            self.expect("}")
            return pois_bracket(a, b)
        if c == "x":
            i = self.gen()
            order = 0
            if self.text.startswith("^(", self.pos):
                self.pos += 2
                order = self.digits()
                self.expect(")")
            else:
                while order < 3 and self.text.startswith("'", self.pos):
                    self.pos += 1
                    order += 1
                if self.text.startswith("'", self.pos):
                    raise self.error("'^(' for orders above 3")
            return pois_letter(i, order)
        raise self.error("generator", "'{'", "digits")


def parse_magma(text):
    p = _Parser(text)
    t = p.expr()
    p.end()
    return t


def parse_pois(text):
    p = _Parser(text)
    poly = p.pois()
    p.end()
    return poly


def parse_term(text):
    """Parse a term; if that fails, a polynomial.

    Returns a term (:class:`Leaf`/:class:`Node`) or a PoisPoly.  On failure
    the error with the farthest offset is raised.
    """
    try:
        return parse_magma(text)
    except TermSyntaxError as e1:
        err1 = e1
    try:
        return parse_pois(text)
    except TermSyntaxError as e2:
        if e2.offset > err1.offset:
            raise e2 from None
        if e2.offset == err1.offset:
            raise TermSyntaxError(text, e2.offset, err1.expected + e2.expected) from None
        raise err1 from None


def to_cd(poly):
    """View a bracket-free Poisson polynomial as a ComDer polynomial."""
    d = {}
    for m, c in poly.items():
        if any(not a.is_letter() for a in m.factors):
            raise ValueError(f"{m!r} contains a bracket")
        d[CDMonomial(tuple(a.word[0] for a in m.factors))] = c
    return LinComb(d)


# printing ---------------------------------------------------------------------


def format_letter(l):
    if l.order <= 3:
        return f"x{l.gen}" + "'" * l.order
    return f"x{l.gen}^({l.order})"


def format_monomial(m):
    if isinstance(m, CDMonomial):
        return "*".join(format_letter(l) for l in m.letters)
    if isinstance(m, PoisMonomial):
        return "*".join(_format_factor(a) for a in m.factors)
    if isinstance(m, (Leaf, Node)):
        return format_term(m)
    raise TypeError(type(m).__name__)


def _format_factor(a):
    t = a.tree
    if isinstance(t, DLetter):
        return format_letter(t)
    return _format_lie(t)


def _format_lie(t):
    if isinstance(t, DLetter):
        return format_letter(t)
    return "{" + _format_lie(t[0]) + ", " + _format_lie(t[1]) + "}"


def format_coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_lincomb(lc):
    """Print a combination; ``0`` when empty."""
    if not lc:
        return "0"
    parts = []
    for m, c in lc.items():
        body = format_monomial(m)
        if isinstance(m, Node) and m.op == CIRC and abs(c) != 1:
            body = f"({body})"
        mag = abs(c)
        text = body if mag == 1 else f"{format_coeff(mag)}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)


__all__ = [
    "parse_term",
    "parse_magma",
    "parse_pois",
    "to_cd",
    "format_term",
    "format_tree",
    "format_monomial",
    "format_lincomb",
    "format_coeff",
]
