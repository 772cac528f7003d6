"""Polynomial text grammar.

    poly   ::= [sign] term (('+' | '-') term)*
    term   ::= [coeff '*'] factor ('*' factor)*  |  coeff
    factor ::= varname ['^' posint]
    coeff  ::= int | int '/' posint

Whitespace is insignificant.  Variable names match [A-Za-z][A-Za-z0-9_]*.
``format_poly`` emits terms in descending order (ring grevlex by default)
and ``parse_poly(format_poly(f)) == f`` for every polynomial; prime-field
coefficients are printed as balanced representatives.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .fields import PrimeField
from .ring import GradedPolyRing, MonomialOrder, Polynomial

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))"
)


class PolyParseError(ValueError):
    pass


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise PolyParseError(f"malformed token at {text[pos:pos + 12]!r}")
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("name") is not None:
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_poly(text: str, ring: GradedPolyRing) -> Polynomial:
    """Parse the grammar above into a polynomial of `ring`."""
    toks = _tokenize(text)
    if not toks:
        raise PolyParseError("empty polynomial text")
    field = ring.field
    terms: dict = {}
    i = 0

    def peek(k=0):
        return toks[i + k] if i + k < len(toks) else (None, None)

    first = True
    while i < len(toks):
        sign = 1
        kind, val = peek()
        if kind == "op" and val in "+-":
            if val == "-":
                sign = -1
            i += 1
        elif not first:
            raise PolyParseError("expected '+' or '-' between terms")
        first = False

        coeff = Fraction(1)
        exps = [0] * ring.nvars
        saw_factor = False
        saw_coeff = False
        while True:
            kind, val = peek()
            if kind == "int":
                if saw_coeff or saw_factor:
                    raise PolyParseError("coefficient must precede variables in a term")
                saw_coeff = True
                num = val
                i += 1
                if peek() == ("op", "/"):
                    i += 1
                    kind, den = peek()
                    if kind != "int":
                        raise PolyParseError("expected denominator after '/'")
                    if den == 0:
                        raise PolyParseError("zero denominator")
                    i += 1
                    coeff = Fraction(num, den)
                else:
                    coeff = Fraction(num)
            elif kind == "name":
                try:
                    vi = ring.index(val)
                except KeyError:
                    raise PolyParseError(f"unknown variable {val!r}") from None
                i += 1
                power = 1
                if peek() == ("op", "^"):
                    i += 1
                    kind, p = peek()
                    if kind != "int" or p < 1:
                        raise PolyParseError("expected positive exponent after '^'")
                    power = p
                    i += 1
                exps[vi] += power
                saw_factor = True
            else:
                raise PolyParseError("expected coefficient or variable")

            if peek() == ("op", "*"):
                i += 1
                continue
            break

        c = field.coerce(coeff if sign > 0 else -coeff)
        e = tuple(exps)
        s = field.add(terms.get(e, field.zero), c)
        if field.is_zero(s):
            terms.pop(e, None)
        else:
            terms[e] = s
    return Polynomial(ring, terms)


def _split_sign(field, c):
    """(negative?, magnitude-as-string) using balanced lifts over prime fields."""
    if isinstance(field, PrimeField):
        v = field.lift(c)
        return v < 0, str(abs(v))
    return c < 0, str(-c if c < 0 else c)


def format_poly(poly: Polynomial, order: MonomialOrder | None = None) -> str:
    if poly.is_zero():
        return "0"
    ring = poly.ring
    if order is None:
        order = ring.order("grevlex")
    pieces = []
    for exps, coeff in poly.sorted_terms(order):
        neg, mag = _split_sign(ring.field, coeff)
        factors = []
        for name, e in zip(ring.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = mag + "*" + "*".join(factors)
        if not pieces:
            pieces.append("-" + body if neg else body)
        else:
            pieces.append((" - " if neg else " + ") + body)
    return "".join(pieces)
