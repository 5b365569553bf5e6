"""Plain-text polynomial system format plus deterministic text/JSON rendering.

Grammar for a single polynomial (whitespace ignored, no implicit multiplication):

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := uint | variable | '(' expr ')'

A system file declares the ascending variable order on its first effective line
("vars x1 x2 ..."), then lists one polynomial per line.  '#' starts a comment,
blank lines are skipped, and both LF and CRLF are accepted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .polyring import Monomial, PolyError, Polynomial, VarOrder, _ckey


class ParseError(ValueError):
    """Syntax or vocabulary error with a position (0-based offset, 1-based line)."""

    def __init__(self, message: str, pos: int, line: int | None = None):
        self.message = message
        self.pos = pos
        self.line = line
        where = f"line {line}, col {pos + 1}" if line is not None else f"col {pos + 1}"
        super().__init__(f"{where}: {message}")

    def at_line(self, line: int) -> "ParseError":
        return ParseError(self.message, self.pos, line)


_SYMBOLS = frozenset("+-*^()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split into (kind, value, offset) tokens; kinds: int, name, sym, end."""
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _SYMBOLS:
            toks.append(("sym", ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _PolyParser:
    def __init__(self, text: str, order: VarOrder):
        self.toks = _tokenize(text)
        self.k = 0
        self.order = order

    def peek(self) -> tuple[str, str, int]:
        return self.toks[self.k]

    def take(self) -> tuple[str, str, int]:
        t = self.toks[self.k]
        self.k += 1
        return t

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            if val == "-":
                sign = -1
        p = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "sym" and val == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        p = self.base()
        kind, val, _ = self.peek()
        if kind == "sym" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            p = p ** int(val)
        return p

    def base(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            return Polynomial.constant(self.order, int(val))
        if kind == "name":
            if val not in self.order:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.order, val)
        if kind == "sym" and val == "(":
            p = self.expr()
            kind, val, pos = self.take()
            if not (kind == "sym" and val == ")"):
                raise ParseError("expected ')'", pos)
            return p
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_polynomial(text: str, order: VarOrder) -> Polynomial:
    """Parse one polynomial over the given variable order."""
    return _PolyParser(text, order).parse()


@dataclass(frozen=True)
class SystemFile:
    """A parsed polynomial system: variable order plus input polynomials."""

    order: VarOrder
    polys: tuple[Polynomial, ...]
    name: str | None = None


def parse_system(text: str, name: str | None = None) -> SystemFile:
    """Parse a whole system file (vars header plus one polynomial per line)."""
    order = None
    polys = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if order is None:
            fields = line.split()
            if fields[0] != "vars":
                raise ParseError("expected a 'vars' header line", 0, lineno)
            if len(fields) < 2:
                raise ParseError("'vars' line declares no variables", 0, lineno)
            try:
                order = VarOrder(fields[1:])
            except PolyError as e:
                raise ParseError(str(e), 0, lineno) from None
            continue
        try:
            polys.append(parse_polynomial(line, order))
        except ParseError as e:
            raise e.at_line(lineno) from None
    if order is None:
        raise ParseError("missing 'vars' header line", 0, 1)
    if not polys:
        raise ParseError("system declares no polynomials", 0, 1)
    return SystemFile(order, tuple(polys), name)


# ---- rendering ----------------------------------------------------------


def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_polynomial(p: Polynomial) -> str:
    """Deterministic text form: descending canonical term order, explicit * and ^.

    Round-trips through parse_polynomial whenever the coefficients are integers
    (always the case for normalized polynomials).
    """
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for mono, coeff in p.sorted_terms():
        factors = [
            f"{name}^{e}" if e > 1 else name
            for name, e in zip(p.order.names, mono)
            if e
        ]
        mag = abs(coeff)
        if not factors:
            body = _coeff_str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_coeff_str(mag)] + factors)
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"-{body}" if coeff < 0 else f"+{body}")
    return "".join(parts)


def render_system(system: SystemFile) -> str:
    """System file text that parses back to the same system."""
    lines = ["vars " + " ".join(system.order.names)]
    lines.extend(render_polynomial(p) for p in system.polys)
    return "\n".join(lines) + "\n"


def poly_sort_key(p: Polynomial):
    """Canonical ordering for polynomial sets: leading monomial, then text."""
    if p.is_zero():
        return ((), "0")
    top = max(p.terms, key=_ckey)
    return (_ckey(top), render_polynomial(p))


def _component_payload(comp) -> dict:
    return {
        "dimension": comp.dimension,
        "generators": [render_polynomial(g) for g in comp.generators.generators],
        "source_chain": [render_polynomial(f) for f in comp.source_chain.chain],
        "u_set": [render_polynomial(u) for u in comp.u_set],
    }


def _component_sort_key(payload: dict):
    first = payload["generators"][0] if payload["generators"] else ""
    return (-payload["dimension"], len(payload["generators"]), first)


def emit_result(order: VarOrder, components, fmt: str = "text") -> str:
    """Render decomposition components deterministically as text or JSON."""
    if fmt not in ("text", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    payloads = sorted(
        (_component_payload(c) for c in components), key=_component_sort_key
    )
    if fmt == "json":
        doc = {"vars": list(order.names), "components": payloads}
        return json.dumps(doc, indent=2) + "\n"
    lines = ["vars: " + " ".join(order.names), f"components: {len(payloads)}"]
    for i, payload in enumerate(payloads, start=1):
        lines.append("")
        lines.append(f"component {i}: dim={payload['dimension']}")
        for g in payload["generators"]:
            lines.append(f"  generator: {g}")
        for f in payload["source_chain"]:
            lines.append(f"  chain: {f}")
        if payload["u_set"]:
            for u in payload["u_set"]:
                lines.append(f"  u: {u}")
        else:
            lines.append("  u: (empty)")
    return "\n".join(lines) + "\n"
