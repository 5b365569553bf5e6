"""Exact sparse multivariate polynomials over Q under a fixed ascending variable order.

Coefficients are arbitrary-precision rationals (``fractions.Fraction``); monomials
are dense exponent tuples with one slot per variable.  The zero polynomial has an
empty term map, and no zero coefficient is ever stored, so structural equality of
term maps is polynomial equality.  All values are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, NamedTuple

Monomial = tuple  # dense exponent vector, one non-negative int per variable


class PolyError(ValueError):
    """Domain error: mixed variable orders, missing class, unexpected zero, ..."""


class VarOrder:
    """Ascending variable ordering; position 0 holds the smallest variable."""

    __slots__ = ("names", "_pos")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise PolyError("a variable ordering needs at least one variable")
        if any(not n for n in names):
            raise PolyError("empty variable name")
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable name in {names}")
        self.names = names
        self._pos = {n: i for i, n in enumerate(names)}

    def position(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise PolyError(f"unknown variable {name!r}") from None

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._pos

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VarOrder) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VarOrder({', '.join(self.names)})"


def _ckey(mono: Monomial) -> tuple:
    # Canonical monomial comparison: lexicographic with the highest-index
    # (greatest) variable weighted most, i.e. compare reversed exponent vectors.
    return mono[::-1]


class Polynomial:
    """Immutable sparse polynomial: a map monomial -> nonzero Fraction."""

    __slots__ = ("order", "terms", "_hash")

    def __init__(self, order: VarOrder, terms: Mapping[Monomial, object] | None = None):
        n = len(order)
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != n:
                raise PolyError(f"monomial {mono} has wrong length for {order!r}")
            if any(e < 0 or not isinstance(e, int) for e in mono):
                raise PolyError(f"bad exponent vector {mono}")
            c = Fraction(coeff)
            if c:
                clean[mono] = c
        self.order = order
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, order: VarOrder, terms: dict) -> "Polynomial":
        # Internal fast path: terms must already be clean (no zeros, right length).
        p = object.__new__(cls)
        p.order = order
        p.terms = terms
        p._hash = None
        return p

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: VarOrder) -> "Polynomial":
        return cls._raw(order, {})

    @classmethod
    def constant(cls, order: VarOrder, value) -> "Polynomial":
        c = Fraction(value)
        if not c:
            return cls.zero(order)
        return cls._raw(order, {(0,) * len(order): c})

    @classmethod
    def variable(cls, order: VarOrder, name: str) -> "Polynomial":
        mono = [0] * len(order)
        mono[order.position(name)] = 1
        return cls._raw(order, {tuple(mono): Fraction(1)})

    # ---- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def degree(self, name: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        i = self.order.position(name)
        if not self.terms:
            return -1
        return max(m[i] for m in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def variables(self) -> tuple[str, ...]:
        """Names of variables occurring with positive degree, ascending."""
        seen = [False] * len(self.order)
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    seen[i] = True
        return tuple(n for n, s in zip(self.order.names, seen) if s)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending canonical monomial order."""
        return sorted(self.terms.items(), key=lambda kv: _ckey(kv[0]), reverse=True)

    # ---- ring arithmetic ----------------------------------------------

    def _check_order(self, other: "Polynomial") -> None:
        if self.order != other.order:
            raise PolyError("polynomials use different variable orderings")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.order, out)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) - c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.order, out)

    def __neg__(self):
        return Polynomial._raw(self.order, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_order(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.order)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.order, out)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.order, other)
        return NotImplemented

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.order, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # ---- comparison ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.order, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.order, tuple(sorted(self.terms.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __str__(self) -> str:
        from .parser_io import render_polynomial

        return render_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


class LeadingData(NamedTuple):
    """Class index (1-based), leading variable, leading degree, and initial."""

    index: int
    variable: str
    degree: int
    initial: Polynomial


def leading_data(p: Polynomial) -> LeadingData:
    """Largest variable with positive degree plus the leading coefficient in it.

    Raises PolyError for constants and zero ("no class").
    """
    if p.is_zero() or p.is_constant():
        raise PolyError("constant polynomial has no class")
    pos = max(i for m in p.terms for i, e in enumerate(m) if e)
    name = p.order.names[pos]
    deg = max(m[pos] for m in p.terms)
    ini_terms = {
        m[:pos] + (0,) + m[pos + 1 :]: c for m, c in p.terms.items() if m[pos] == deg
    }
    return LeadingData(pos + 1, name, deg, Polynomial._raw(p.order, ini_terms))


def poly_class(p: Polynomial) -> int:
    return leading_data(p).index


def leading_variable(p: Polynomial) -> str:
    return leading_data(p).variable


def leading_degree(p: Polynomial) -> int:
    return leading_data(p).degree


def initial(p: Polynomial) -> Polynomial:
    return leading_data(p).initial


def coeffs_in(p: Polynomial, name: str) -> list[tuple[int, Polynomial]]:
    """Nonzero coefficients of p viewed as univariate in one variable.

    Returns (degree, coefficient) pairs with descending degree; the coefficient
    polynomials are exact, so sum(c * x**d) reassembles p.
    """
    i = p.order.position(name)
    buckets: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        stripped = m[:i] + (0,) + m[i + 1 :]
        buckets.setdefault(m[i], {})[stripped] = c
    return [
        (d, Polynomial._raw(p.order, buckets[d])) for d in sorted(buckets, reverse=True)
    ]


def leading_coeff_in(p: Polynomial, name: str) -> Polynomial:
    """Leading coefficient of p as a univariate polynomial in one variable."""
    if p.is_zero():
        return p
    return coeffs_in(p, name)[0][1]


def normalize(p: Polynomial) -> Polynomial:
    """Canonical representative up to a nonzero rational factor.

    Clears denominators, divides out the integer content, and fixes the sign so
    the canonically greatest term has a positive coefficient.  Idempotent; the
    zero polynomial is rejected.
    """
    if p.is_zero():
        raise PolyError("cannot normalize the zero polynomial")
    den = 1
    for c in p.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in p.terms.values():
        num = gcd(num, c.numerator * (den // c.denominator))
    scale = Fraction(den, num)
    top = max(p.terms, key=_ckey)
    if p.terms[top] < 0:
        scale = -scale
    return Polynomial._raw(p.order, {m: c * scale for m, c in p.terms.items()})


def evaluate(p: Polynomial, point: Mapping[str, object]) -> Fraction:
    """Exact value of p at a rational point covering every variable of p."""
    values: dict[int, Fraction] = {}
    for name in p.variables():
        if name not in point:
            raise PolyError(f"no value assigned to {name!r}")
        values[p.order.position(name)] = Fraction(point[name])
    total = Fraction(0)
    for m, c in p.terms.items():
        term = c
        for i, e in enumerate(m):
            if e:
                term *= values[i] ** e
        total += term
    return total


def exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact quotient a / b; raises PolyError when b does not divide a."""
    a._check_order(b)
    if b.is_zero():
        raise PolyError("division by the zero polynomial")
    if a.is_zero():
        return a
    quot: dict[Monomial, Fraction] = {}
    rest = a
    bm, bc = max(b.terms.items(), key=lambda kv: _ckey(kv[0]))
    while rest.terms:
        rm, rc = max(rest.terms.items(), key=lambda kv: _ckey(kv[0]))
        qm = tuple(x - y for x, y in zip(rm, bm))
        if any(e < 0 for e in qm):
            raise PolyError("inexact polynomial division")
        qc = rc / bc
        quot[qm] = qc
        rest = rest - Polynomial._raw(a.order, {qm: qc}) * b
    return Polynomial._raw(a.order, quot)


def rebase(p: Polynomial, new_order: VarOrder) -> Polynomial:
    """Move p to another variable ordering by name.

    Variables missing from the new order must not occur in p; variables new to
    the order get exponent 0.
    """
    src = p.order.names
    dst_pos = []
    for i, name in enumerate(src):
        dst_pos.append(new_order._pos.get(name))
    n = len(new_order)
    out: dict[Monomial, Fraction] = {}
    for m, c in p.terms.items():
        mono = [0] * n
        for i, e in enumerate(m):
            if not e:
                continue
            j = dst_pos[i]
            if j is None:
                raise PolyError(
                    f"variable {src[i]!r} occurs in polynomial but not in target order"
                )
            mono[j] = e
        out[tuple(mono)] = c
    return Polynomial(new_order, out)
