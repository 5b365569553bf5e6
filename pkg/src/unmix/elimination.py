"""Pseudo-division and Sylvester resultants, single-step and chained.

Chains here are triangular sets; reduction runs against the top element first.
The chain resultant skips any elimination step in which the running polynomial
is free of that step's leading variable, which matches how coefficient
resultants of lower chain elements are meant to pass through unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import (
    Polynomial,
    PolyError,
    coeffs_in,
    exact_div,
    leading_coeff_in,
    leading_variable,
)


@dataclass(frozen=True)
class PremResult:
    """Chain pseudo-remainder plus the initial exponents, one per chain element."""

    remainder: Polynomial
    exponents: tuple[int, ...]


def prem_step(g: Polynomial, f: Polynomial, x: str) -> tuple[Polynomial, int]:
    """Pseudo-remainder of g by f in the variable x.

    Returns (r, d) with ini^d * g = q * f + r and deg(r, x) < deg(f, x), where
    ini is the leading coefficient of f in x.  d counts the multiplications
    actually performed, so it is tight rather than the worst-case bound.
    """
    fdeg = f.degree(x)
    if fdeg < 1:
        raise PolyError(f"divisor has no positive degree in {x!r}")
    fini = leading_coeff_in(f, x)
    xpoly = Polynomial.variable(g.order, x)
    r = g
    d = 0
    while r.terms and (rdeg := r.degree(x)) >= fdeg:
        lc = leading_coeff_in(r, x)
        r = fini * r - lc * xpoly ** (rdeg - fdeg) * f
        d += 1
    return r, d


def prem_chain(p: Polynomial, chain) -> PremResult:
    """Iterated pseudo-remainder against a triangular chain, top element first."""
    elems = list(chain)
    exponents = [0] * len(elems)
    r = p
    for i in range(len(elems) - 1, -1, -1):
        f = elems[i]
        r, exponents[i] = prem_step(r, f, leading_variable(f))
        if r.is_zero():
            break
    return PremResult(r, tuple(exponents))


def sylvester_matrix(f: Polynomial, g: Polynomial, x: str) -> list[list[Polynomial]]:
    """Sylvester matrix of f and g in x: deg(g) rows of f, then deg(f) rows of g."""
    df, dg = f.degree(x), g.degree(x)
    if df < 1 or dg < 1:
        raise PolyError(f"both arguments need positive degree in {x!r}")
    n = df + dg
    zero = Polynomial.zero(f.order)

    def coeff_row(p: Polynomial, d: int) -> list[Polynomial]:
        row = [zero] * (d + 1)
        for deg, c in coeffs_in(p, x):
            row[d - deg] = c
        return row

    frow, grow = coeff_row(f, df), coeff_row(g, dg)
    rows = []
    for i in range(dg):
        rows.append([zero] * i + frow + [zero] * (n - df - 1 - i))
    for i in range(df):
        rows.append([zero] * i + grow + [zero] * (n - dg - 1 - i))
    return rows


def _bareiss_det(rows: list[list[Polynomial]], order) -> Polynomial:
    """Fraction-free determinant; every division in the loop is exact."""
    n = len(rows)
    m = [row[:] for row in rows]
    sign = 1
    prev = Polynomial.constant(order, 1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial.zero(order)
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            m[i][k] = Polynomial.zero(order)
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: Polynomial, g: Polynomial, x: str) -> Polynomial:
    """Sylvester resultant of f and g in x (exact, not normalized).

    When one argument is free of x it is raised to the other's degree, the
    usual convention; both arguments free of x is an error.
    """
    f._check_order(g)
    df, dg = f.degree(x), g.degree(x)
    if df < 1 and dg < 1:
        raise PolyError(f"neither argument has positive degree in {x!r}")
    if df < 1:
        return f ** dg
    if dg < 1:
        return g ** df
    return _bareiss_det(sylvester_matrix(f, g, x), f.order)


def resultant_chain(p: Polynomial, chain) -> Polynomial:
    """Iterated resultant of p against a triangular chain, top element first.

    A step whose leading variable does not occur in the running polynomial is
    skipped, so polynomials in chain parameters pass through unchanged.
    """
    r = p
    for f in reversed(list(chain)):
        x = leading_variable(f)
        if r.degree(x) < 1:
            continue
        r = resultant(r, f, x)
    return r
