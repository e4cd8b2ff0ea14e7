"""Recursive-descent parsers for scalars, monomials, series and product text.

All of them share one tokenizer and one expression grammar whose values are
small Laurent polynomials ``{(qexp, params): Scalar}``::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' exponent)?
    atom   := NUMBER | NAME | '(' expr ')' | 'O' '(' expr ')'

Product expressions add the Pochhammer atom ``(a, b, ...; q^n)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .ring import I, ONE, ZETA3, ZETA6, Z12, Scalar, zeta_power

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),;]))"
)

_CONSTANTS = {
    "i": I,
    "I": I,
    "z12": Z12,
    "z3": ZETA3,
    "z4": I,
    "z6": ZETA6,
    "z2": Scalar(-1),
}


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character %r" % text[pos], text, pos)
        start = m.start(m.lastgroup)
        out.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


def _ratio(text):
    num, _, den = text.partition("/")
    return int(num), int(den or 1)


class _Poly(dict):
    """Laurent polynomial: key (qexp, params tuple) -> Scalar."""

    @classmethod
    def const(cls, c):
        p = cls()
        c = Scalar.coerce(c)
        if c:
            p[(Fraction(0), ())] = c
        return p

    @classmethod
    def mono(cls, c, e, params=()):
        p = cls()
        c = Scalar.coerce(c)
        if c:
            p[(Fraction(e), tuple(sorted(params)))] = c
        return p

    def add(self, other, sign=1):
        out = _Poly(self)
        for k, v in other.items():
            nv = out.get(k, Scalar(0)) + (v if sign > 0 else -v)
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        return out

    def mul(self, other):
        out = _Poly()
        for (e1, p1), c1 in self.items():
            for (e2, p2), c2 in other.items():
                ps = dict(p1)
                for n, k in p2:
                    ps[n] = ps.get(n, 0) + k
                key = (e1 + e2, tuple(sorted((n, k) for n, k in ps.items() if k)))
                nv = out.get(key, Scalar(0)) + c1 * c2
                if nv:
                    out[key] = nv
                else:
                    out.pop(key, None)
        return out

    def single(self):
        if len(self) > 1:
            return None
        if not self:
            return (Fraction(0), ()), Scalar(0)
        return next(iter(self.items()))

    def inverse(self):
        s = self.single()
        if s is None or not s[1]:
            return None
        (e, ps), c = s
        return _Poly.mono(c.inverse(), -e, tuple((n, -k) for n, k in ps))

    def power(self, exp):
        if exp.denominator == 1:
            n = exp.numerator
            base = self
            if n < 0:
                base = self.inverse()
                if base is None:
                    return None
                n = -n
            out = _Poly.const(1)
            for _ in range(n):
                out = out.mul(base)
            return out
        s = self.single()
        if s is None:
            return None
        (e, ps), c = s
        if c != 1 or ps:
            return None
        return _Poly.mono(ONE, e * exp)


class _Parser:
    def __init__(self, text, allow_params=True, allow_poch=False):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.allow_params = allow_params
        self.allow_poch = allow_poch
        self.big_o = None

    # token helpers
    def peek(self, k=0):
        return self.toks[self.i + k]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        t = self.next()
        if t[1] != value:
            raise ParseError("expected %r but found %r" % (value, t[1] or "end of input"), self.text, t[2])
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    # grammar
    def parse_expr(self):
        val = self.parse_term()
        while self.peek()[1] in ("+", "-"):
            op = self.next()[1]
            if self.peek()[1] == "O":
                self.parse_big_o()
                continue
            rhs = self.parse_term()
            val = val.add(rhs, 1 if op == "+" else -1)
        return val

    def parse_big_o(self):
        tok = self.next()
        self.expect("(")
        raw = self._raw_q_power()
        if raw is not None:
            self.big_o = raw
            return
        inner = self.parse_expr()
        self.expect(")")
        s = inner.single()
        if s is None or s[1] != 1 or s[0][1]:
            self.error("O(...) must contain a single power of q", tok)
        e = s[0][0]
        self.big_o = (e.numerator, e.denominator)

    def _raw_q_power(self):
        # keep "q^(a/b)" unreduced so the grid b survives a round trip
        vals = [t[1] for t in self.toks[self.i : self.i + 6]]
        kinds = [t[0] for t in self.toks[self.i : self.i + 6]]
        if vals[:2] == ["q", "^"] and kinds[2] == "num" and vals[3] == ")":
            self.i += 4
            return _ratio(vals[2])
        if vals[:3] == ["q", "^", "("] and kinds[3] == "num" and vals[4:6] == [")", ")"]:
            self.i += 6
            return _ratio(vals[3])
        if vals[:2] == ["q", ")"]:
            self.i += 2
            return (1, 1)
        return None

    def parse_term(self):
        val = self.parse_unary()
        while self.peek()[1] in ("*", "/"):
            op = self.next()
            rhs = self.parse_unary()
            if op[1] == "*":
                val = val.mul(rhs)
            else:
                inv = rhs.inverse()
                if inv is None:
                    self.error("can only divide by a nonzero monomial", op)
                val = val.mul(inv)
        return val

    def parse_unary(self):
        t = self.peek()
        if t[1] == "-":
            self.next()
            return self.parse_unary().mul(_Poly.const(-1))
        if t[1] == "+":
            self.next()
            return self.parse_unary()
        return self.parse_power()

    def parse_exponent(self):
        t = self.peek()
        sign = 1
        if t[1] in ("-", "+"):
            self.next()
            sign = -1 if t[1] == "-" else 1
            t = self.peek()
        if t[0] == "num":
            self.next()
            if "/" in t[1]:
                self.error("fractional exponents need parentheses", t)
            return sign * Fraction(t[1])
        if t[1] == "(":
            self.next()
            inner = self.parse_expr()
            self.expect(")")
            s = inner.single()
            if s is None or s[0] != (Fraction(0), ()) or not s[1].is_rational():
                self.error("exponent must be a rational number", t)
            return sign * s[1].rational()
        self.error("expected an exponent")

    def parse_power(self):
        start = self.peek()
        base = self.parse_atom()
        if self.peek()[1] == "^":
            self.next()
            exp = self.parse_exponent()
            out = base.power(exp)
            if out is None:
                self.error("unsupported power", start)
            return out
        return base

    def parse_atom(self):
        t = self.next()
        kind, val, pos = t
        if kind == "num":
            return _Poly.const(Fraction(val))
        if kind == "name":
            if val == "O" and self.peek()[1] == "(":
                self.i -= 1
                self.parse_big_o()
                return _Poly()
            if val == "q":
                return _Poly.mono(ONE, 1)
            if val in _CONSTANTS:
                return _Poly.const(_CONSTANTS[val])
            if val.startswith("zeta") and val[4:].isdigit() and int(val[4:]) in (1, 2, 3, 4, 6, 12):
                return _Poly.const(zeta_power(12 // int(val[4:])))
            if not self.allow_params:
                self.error("unknown name %r" % val, t)
            return _Poly.mono(ONE, 0, ((val, 1),))
        if val == "(":
            inner = self.parse_expr()
            self.expect(")")
            return inner
        self.error("unexpected %r" % (val or "end of input"), t)

    def finish(self):
        t = self.peek()
        if t[0] != "end":
            self.error("unexpected trailing %r" % t[1], t)


def parse_scalar(text: str) -> Scalar:
    p = _Parser(text, allow_params=False)
    val = p.parse_expr()
    p.finish()
    s = val.single()
    if s is None or s[0] != (Fraction(0), ()):
        raise ParseError("not a scalar", text, 0)
    return s[1]


def parse_monomial(text: str):
    from .monomial import Monomial

    p = _Parser(text, allow_params=True)
    val = p.parse_expr()
    p.finish()
    s = val.single()
    if s is None:
        raise ParseError("not a monomial", text, 0)
    (e, ps), c = s
    return Monomial(c, e, ps)


def parse_series_terms(text: str):
    """Return (terms dict qexp -> Scalar, unreduced big-O exponent or None)."""
    p = _Parser(text, allow_params=False)
    val = p.parse_expr()
    p.finish()
    terms = {}
    for (e, ps), c in val.items():
        terms[e] = c
    return terms, p.big_o


# -- product expressions -------------------------------------------------------


def _split_top_level(p: _Parser):
    """At '(' decide whether a Pochhammer symbol follows (a ';' at depth 1)."""
    depth = 0
    j = p.i
    while True:
        kind, val, _ = p.toks[j]
        if kind == "end":
            return False
        if val == "(":
            depth += 1
        elif val == ")":
            depth -= 1
            if depth == 0:
                return False
        elif val == ";" and depth == 1:
            return True
        j += 1


def parse_product(text: str):
    """Parse ``w * (m1, m2; q^n)^r * ... + ...`` into a ProductExpr."""
    from .monomial import Monomial
    from .products import Factor, ProductExpr, ProductTerm

    p = _Parser(text, allow_params=True)
    terms = []

    def parse_pfactor():
        # returns ("poch", [(base, modulus)], power) or ("scalar", Scalar)
        t = p.peek()
        if t[1] == "(" and _split_top_level(p):
            p.next()
            bases = []
            while True:
                val = p.parse_expr()
                s = val.single()
                if s is None:
                    p.error("Pochhammer base must be a monomial", t)
                (e, ps), c = s
                bases.append(Monomial(c, e, ps))
                sep = p.next()
                if sep[1] == ",":
                    continue
                if sep[1] == ";":
                    break
                p.error("expected ',' or ';'", sep)
            mod_tok = p.peek()
            mval = p.parse_expr()
            p.expect(")")
            s = mval.single()
            if s is None or s[1] != 1 or s[0][1] or s[0][0] <= 0:
                p.error("modulus must be q^n with n > 0", mod_tok)
            modulus = s[0][0]
            power = 1
            if p.peek()[1] == "^":
                p.next()
                ex = p.parse_exponent()
                if ex.denominator != 1:
                    p.error("Pochhammer powers must be integers", mod_tok)
                power = int(ex)
            return ("poch", [(b, modulus) for b in bases], power)
        val = p.parse_power()
        s = val.single()
        if s is None or s[0] != (Fraction(0), ()):
            p.error("product terms may only carry scalar weights", t)
        return ("scalar", s[1])

    def parse_pterm(sign):
        weight = Scalar(sign)
        factors = []
        first = True
        while True:
            if not first:
                op = p.peek()[1]
                if op not in ("*", "/"):
                    break
                p.next()
            else:
                op = "*"
            first = False
            while p.peek()[1] in ("-", "+"):
                if p.next()[1] == "-":
                    weight = -weight
            kind, *rest = parse_pfactor()
            if kind == "poch":
                pairs, power = rest
                if op == "/":
                    power = -power
                for b, m in pairs:
                    factors.append(Factor(b, m, power))
            else:
                s = rest[0]
                weight = weight * s if op == "*" else weight / s
        return ProductTerm(weight, tuple(factors))

    sign = 1
    if p.peek()[1] == "-":
        p.next()
        sign = -1
    terms.append(parse_pterm(sign))
    while p.peek()[1] in ("+", "-"):
        sign = 1 if p.next()[1] == "+" else -1
        terms.append(parse_pterm(sign))
    p.finish()
    return ProductExpr(tuple(terms))
