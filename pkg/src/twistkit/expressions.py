"""Expression grammar, parser and renderers.

Grammar (ox = tensor product, binding between '+' and '*', so
a*b ox c*d reads (a*b) ox (c*d)):

    expr      := oxterm (('+' | '-') oxterm)*
    oxterm    := term ('ox' term)*
    term      := factor ('*' factor)*
    factor    := '-' factor | scalar | generator | 'exp' '(' expr ')'
                 | '(' expr ')'
    generator := NAME '[' INT (',' INT)* ']' | NAME
    scalar    := INT ('/' INT)? | 'I' | PARAM

Parameters: kinv khinv xi c cinv kbar_inv khbar_inv xibar (cinv is the
c^{-1} Laurent direction).  Parsed exp-atoms are expanded under the active
truncation policy and everything is normal-ordered on the way out, so
parse . render is the identity on normal forms.

The text renderer writes exponents as repeated factors (kinv*kinv), which
keeps the grammar tiny and the round-trip exact.  The structured renderer
emits the documented JSON schema (see SCHEMA_VERSION).
"""

from __future__ import annotations

import json
import re as _re
from fractions import Fraction
from typing import List, Optional, Tuple

from .elements import Element, TensorElement
from .generators import Generator, canonical_pair
from .presentation import Presentation, PresentationError
from .scalars import AXES, Scalar

SCHEMA_VERSION = "twistkit/1"

PARAM_NAMES = {"kinv": ("kinv", 1), "khinv": ("khinv", 1), "xi": ("xi", 1),
               "c": ("c", 1), "cinv": ("c", -1), "kbar_inv": ("kbar_inv", 1),
               "khbar_inv": ("khbar_inv", 1), "xibar": ("xibar", 1)}


class ExpressionError(ValueError):
    def __init__(self, message: str, pos: Optional[int] = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


_TOKEN = _re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([\[\](),+\-*/]))")


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExpressionError(f"unexpected character {text[pos]!r}", pos)
        if m.group(1):
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            out.append(("name", m.group(2), m.start(2)))
        else:
            out.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    return out


# --------------------------------------------------------------------------
# parsing contexts

class AlgebraContext:
    """Resolves generator names against a Presentation."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self._families = {g.family for g in pres.generators}

    def constant(self, s: Scalar):
        return self.pres.one(s)

    def generator(self, name: str, indices, pos: int):
        if name not in self._families:
            raise ExpressionError(f"unknown generator {name!r} in "
                                  f"{self.pres.name!r}", pos)
        try:
            if name in ("M", "K"):
                if len(indices) != 2:
                    raise ValueError(f"{name} takes two indices")
                sign, g = canonical_pair(name, *indices)
                return self.pres.gen(g, Scalar.rational(sign))
            g = Generator(name, tuple(indices))
        except ValueError as exc:
            raise ExpressionError(str(exc), pos)
        if g not in self.pres._rank:
            raise ExpressionError(f"generator {g} unknown to "
                                  f"{self.pres.name!r}", pos)
        return self.pres.gen(g)

    def multiply(self, a, b):
        if isinstance(a, TensorElement) or isinstance(b, TensorElement):
            if isinstance(a, TensorElement) and isinstance(b, TensorElement):
                return a * b
            raise ExpressionError("cannot multiply tensor by non-tensor; "
                                  "use ox on both sides")
        return a * b

    def tensor(self, a, b, pos: int):
        legs = []
        for x in (a, b):
            if isinstance(x, TensorElement):
                legs.extend(self._split(x, pos))
            else:
                legs.append(x)
        if len(legs) > 3:
            raise ExpressionError("tensor rank above 3 is not supported", pos)
        return self.pres.tensor(*legs)

    def _split(self, t: TensorElement, pos: int):
        # only single-term pure products can be re-split; general tensors
        # appear via sums of ox-terms, which never need splitting
        raise ExpressionError("ox chains must associate as a ox (b ox c) "
                              "with element factors", pos)

    def exp(self, a, pos: int):
        if isinstance(a, TensorElement):
            from .hopf import exp_tensor
            try:
                return exp_tensor(a)
            except PresentationError as exc:
                raise ExpressionError(str(exc), pos)
        one = self.pres.one()
        out = one
        power = one
        fact = Fraction(1)
        for n in range(1, 64):
            power = power * a
            if power.is_zero():
                return out
            fact /= n
            out = out + power.scaled(Scalar.rational(fact))
        raise ExpressionError("exp() did not terminate under the truncation "
                              "policy", pos)


class Parser:
    def __init__(self, text: str, ctx):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression", len(self.text))
        self.k += 1
        return tok

    def expect(self, val: str):
        tok = self.next()
        if tok[1] != val:
            raise ExpressionError(f"expected {val!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ExpressionError(f"trailing input {tok[1]!r}", tok[2])
        return value

    def expr(self):
        value = self.oxterm()
        while True:
            tok = self.peek()
            if tok and tok[1] in ("+", "-"):
                self.next()
                rhs = self.oxterm()
                value = value + rhs if tok[1] == "+" else value + (-rhs)
            else:
                return value

    def oxterm(self):
        value = self.term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "name" and tok[1] == "ox":
                self.next()
                rhs = self.term()
                value = self.ctx.tensor(value, rhs, tok[2])
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            tok = self.peek()
            if tok and tok[1] == "*":
                self.next()
                value = self.ctx.multiply(value, self.factor())
            else:
                return value

    def factor(self):
        tok = self.peek()
        if tok is None:
            raise ExpressionError("unexpected end of expression", len(self.text))
        if tok[1] == "-":
            self.next()
            return -self.factor()
        if tok[1] == "(":
            self.next()
            value = self.expr()
            self.expect(")")
            return value
        if tok[0] == "int":
            self.next()
            num = int(tok[1])
            nxt = self.peek()
            if nxt and nxt[1] == "/":
                self.next()
                den = self.next()
                if den[0] != "int":
                    raise ExpressionError("expected denominator", den[2])
                return self.ctx.constant(Scalar.rational(num, int(den[1])))
            return self.ctx.constant(Scalar.rational(num))
        if tok[0] == "name":
            self.next()
            name = tok[1]
            if name == "exp":
                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return self.ctx.exp(inner, tok[2])
            if name == "I":
                return self.ctx.constant(Scalar.imaginary(1))
            if name in PARAM_NAMES:
                axis, exp = PARAM_NAMES[name]
                return self.ctx.constant(Scalar.param(axis, exp))
            nxt = self.peek()
            indices = []
            if nxt and nxt[1] == "[":
                self.next()
                while True:
                    idx = self.next()
                    if idx[0] != "int":
                        raise ExpressionError("expected index", idx[2])
                    indices.append(int(idx[1]))
                    sep = self.next()
                    if sep[1] == "]":
                        break
                    if sep[1] != ",":
                        raise ExpressionError("expected ',' or ']'", sep[2])
            return self.ctx.generator(name, indices, tok[2])
        raise ExpressionError(f"unexpected token {tok[1]!r}", tok[2])


def parse_expression(text: str, pres: Presentation):
    """Parse against a presentation; returns Element or TensorElement."""
    return Parser(text, AlgebraContext(pres)).parse()


# --------------------------------------------------------------------------
# rendering

def _render_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else \
        f"{q.numerator}/{q.denominator}"


def _render_coeff(re: Fraction, im: Fraction, params) -> Tuple[str, str]:
    """Return (sign, body) for a coefficient; body may be '' for unit."""
    factors = []
    sign = "+"
    if re and im:
        body = f"({_render_rational(re)}"
        body += "+" if im > 0 else "-"
        a = abs(im)
        body += ("I" if a == 1 else f"{_render_rational(a)}*I") + ")"
        factors.append(body)
    elif im:
        if im < 0:
            sign = "-"
        a = abs(im)
        if a != 1:
            factors.append(_render_rational(a))
        factors.append("I")
    else:
        if re < 0:
            sign = "-"
        a = abs(re)
        if a != 1:
            factors.append(_render_rational(a))
    for axis, exp in params:
        if exp > 0:
            factors.extend([axis] * exp)
        else:
            if axis != "c":
                raise ValueError(
                    f"cannot render negative {axis} exponent as text")
            factors.extend(["cinv"] * (-exp))
    return sign, "*".join(factors)


def _render_word(pres: Presentation, word) -> str:
    if not word:
        return "1"
    return "*".join(pres.generators[r].label() for r in word)


def render_element(e: Element, fmt: str = "text") -> str:
    if fmt == "structured":
        return json.dumps(element_schema(e), sort_keys=True)
    if not e.terms:
        return "0"
    parts = []
    for (word, params), (re, im) in e.sorted_terms():
        sign, coeff = _render_coeff(re, im, params)
        if word:
            ws = _render_word(e.pres, word)
            body = f"{coeff}*{ws}" if coeff else ws
        else:
            body = coeff or "1"
        parts.append((sign, body))
    out = ""
    for n, (sign, body) in enumerate(parts):
        if n == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out


def render_tensor(t: TensorElement, fmt: str = "text") -> str:
    if fmt == "structured":
        return json.dumps(tensor_schema(t), sort_keys=True)
    if not t.terms:
        return "0"
    parts = []
    for (words, params), (re, im) in t.sorted_terms():
        sign, coeff = _render_coeff(re, im, params)
        legs = [_render_word(t.pres, w) for w in words]
        first = legs[0]
        if coeff:
            first = f"{coeff}*{first}" if words[0] else coeff
        legs[0] = first
        parts.append((sign, " ox ".join(legs)))
    out = ""
    for n, (sign, body) in enumerate(parts):
        if n == 0:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f" {sign} {body}"
    return out


def render(value, fmt: str = "text") -> str:
    if isinstance(value, Element):
        return render_element(value, fmt)
    if isinstance(value, TensorElement):
        return render_tensor(value, fmt)
    raise TypeError(f"cannot render {type(value).__name__}")


def _coeff_schema(re: Fraction, im: Fraction, params) -> dict:
    return {"re": _render_rational(re), "im": _render_rational(im),
            "params": {axis: exp for axis, exp in params}}


def element_schema(e: Element) -> dict:
    terms = []
    for (word, params), (re, im) in e.sorted_terms():
        d = _coeff_schema(re, im, params)
        d["word"] = [e.pres.generators[r].label() for r in word]
        terms.append(d)
    return {"schema": SCHEMA_VERSION, "kind": "element", "terms": terms}


def tensor_schema(t: TensorElement) -> dict:
    terms = []
    for (words, params), (re, im) in t.sorted_terms():
        d = _coeff_schema(re, im, params)
        d["legs"] = [[t.pres.generators[r].label() for r in w] for w in words]
        terms.append(d)
    return {"schema": SCHEMA_VERSION, "kind": "tensor", "rank": t.rank,
            "terms": terms}


# -- group functions and coordinate polynomials -----------------------------

def _symbol_label(sym) -> str:
    if sym[0] == "tau":
        return "tau"
    return f"{sym[0]}[{','.join(str(i) for i in sym[1:])}]"


def render_group_function(f, fmt: str = "text") -> str:
    if fmt == "structured":
        terms = []
        for (mono, params), (re, im) in f.sorted_terms():
            d = _coeff_schema(re, im, params)
            d["word"] = [_symbol_label(s) for s in mono]
            terms.append(d)
        return json.dumps({"schema": SCHEMA_VERSION, "kind": "group-function",
                           "terms": terms}, sort_keys=True)
    if not f.terms:
        return "0"
    parts = []
    for (mono, params), (re, im) in f.sorted_terms():
        sign, coeff = _render_coeff(re, im, params)
        ws = "*".join(_symbol_label(s) for s in mono) if mono else "1"
        body = "*".join(x for x in (coeff, ws if mono else "") if x) or "1"
        if mono and not coeff:
            body = ws
        parts.append((sign, body))
    out = ""
    for n, (sign, body) in enumerate(parts):
        out = (body if sign == "+" else f"-{body}") if n == 0 else \
            out + f" {sign} {body}"
    return out


def render_coord_polynomial(p, fmt: str = "text") -> str:
    if fmt == "structured":
        terms = []
        for (mono, params), (re, im) in p.sorted_terms():
            d = _coeff_schema(re, im, params)
            word = []
            for mu in range(4):
                word.extend([f"x[{mu}]"] * mono[mu])
            d["word"] = word
            terms.append(d)
        return json.dumps({"schema": SCHEMA_VERSION,
                           "kind": "coordinate-polynomial", "terms": terms},
                          sort_keys=True)
    if not p.terms:
        return "0"
    parts = []
    for (mono, params), (re, im) in p.sorted_terms():
        sign, coeff = _render_coeff(re, im, params)
        factors = []
        for mu in range(4):
            factors.extend([f"x[{mu}]"] * mono[mu])
        ws = "*".join(factors) if factors else ""
        body = "*".join(x for x in (coeff, ws) if x) or "1"
        parts.append((sign, body))
    out = ""
    for n, (sign, body) in enumerate(parts):
        out = (body if sign == "+" else f"-{body}") if n == 0 else \
            out + f" {sign} {body}"
    return out


class CoordContext:
    """Parses polynomials in x[0]..x[3] with scalar coefficients."""

    def constant(self, s: Scalar):
        from .star import CoordPolynomial
        return CoordPolynomial.constant(s)

    def generator(self, name: str, indices, pos: int):
        from .star import CoordPolynomial
        if name != "x" or len(indices) != 1 or not 0 <= indices[0] <= 3:
            raise ExpressionError(
                f"expected coordinate x[0]..x[3], found {name}{indices}", pos)
        return CoordPolynomial.coordinate(indices[0])

    def multiply(self, a, b):
        return a * b

    def tensor(self, a, b, pos: int):
        raise ExpressionError("tensor products are not defined for "
                              "coordinate polynomials", pos)

    def exp(self, a, pos: int):
        raise ExpressionError("exp() is not defined for coordinate "
                              "polynomials", pos)


def parse_coordinates(text: str):
    return Parser(text, CoordContext()).parse()
