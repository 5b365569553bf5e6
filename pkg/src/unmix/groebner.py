"""Buchberger's algorithm over Q with lexicographic orders.

Reduced bases, normal forms, ideal predicates, elimination ideals, and radical
membership via an auxiliary inverse variable.  The core loop works on integer
term lists (primitive, content-free) so no rational arithmetic happens while
pairs are being processed; polynomials cross the boundary only at the API.

Lexicographic bases can blow up, so the pair queue and coefficient sizes are
guarded by configurable ceilings that abort with ResourceLimitError instead of
hanging.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .parser_io import poly_sort_key
from .polyring import Polynomial, PolyError, VarOrder, rebase


class ResourceLimitError(RuntimeError):
    """A configured resource ceiling (pairs, coefficient bits, pops) was hit."""


@dataclass(frozen=True)
class Limits:
    """Resource ceilings shared by the basis and decomposition engines."""

    max_gb_pairs: int = 200_000
    max_coeff_bits: int = 1_000_000
    max_worklist_pops: int = 10_000

    def __post_init__(self):
        for name in ("max_gb_pairs", "max_coeff_bits", "max_worklist_pops"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


DEFAULT_LIMITS = Limits()


class TermOrder:
    """Lexicographic term order given by its variable sequence, greatest first."""

    __slots__ = ("sequence", "order", "_perm", "_inv")

    def __init__(self, sequence: Iterable[str], order: VarOrder):
        sequence = tuple(sequence)
        if sorted(sequence) != sorted(order.names):
            raise PolyError(
                f"order sequence {sequence} is not a permutation of {order.names}"
            )
        self.sequence = sequence
        self.order = order
        self._perm = tuple(order.position(n) for n in sequence)
        inv = [0] * len(sequence)
        for k, p in enumerate(self._perm):
            inv[p] = k
        self._inv = tuple(inv)

    @classmethod
    def lex(cls, order: VarOrder) -> "TermOrder":
        """Default lexicographic order: the greatest variable is the last name."""
        return cls(tuple(reversed(order.names)), order)

    def key(self, mono: tuple) -> tuple:
        """Sort key; larger tuples compare as greater monomials."""
        return tuple(mono[p] for p in self._perm)

    def unkey(self, key: tuple) -> tuple:
        return tuple(key[k] for k in self._inv)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TermOrder)
            and self.sequence == other.sequence
            and self.order == other.order
        )

    def __hash__(self) -> int:
        return hash((self.sequence, self.order))

    def __repr__(self) -> str:
        return f"TermOrder({'>'.join(self.sequence)})"


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: primitive integer generators, positive leading coefficients,
    sorted by ascending leading monomial."""

    generators: tuple[Polynomial, ...]
    term_order: TermOrder

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)


# ---- integer term lists --------------------------------------------------
#
# A term list is a list of (key, coeff) pairs, keys permuted per the term
# order, sorted descending, with nonzero integer coefficients.


def _to_terms(p: Polynomial, to: TermOrder) -> list:
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = [(to.key(m), int(c * den)) for m, c in p.terms.items()]
    terms.sort(reverse=True)
    return _make_primitive(terms)


def _from_terms(terms: list, to: TermOrder) -> Polynomial:
    return Polynomial(to.order, {to.unkey(k): Fraction(c) for k, c in terms})


def _make_primitive(terms: list) -> list:
    if not terms:
        return terms
    g = 0
    for _, c in terms:
        g = gcd(g, c)
    if terms[0][1] < 0:
        g = -g
    if g == 1:
        return terms
    return [(k, c // g) for k, c in terms]


def _check_bits(terms: list, limits: Limits) -> None:
    for _, c in terms:
        if c.bit_length() > limits.max_coeff_bits:
            raise ResourceLimitError(
                f"coefficient exceeded {limits.max_coeff_bits} bits"
            )


def _divides(a: tuple, b: tuple) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _sub_scaled(a: list, ca: int, b: list, cb: int) -> list:
    """ca*a - cb*b for sorted term lists (merge, drop cancellations)."""
    out = []
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ka, va = a[i]
        kb, vb = b[j]
        if ka > kb:
            out.append((ka, ca * va))
            i += 1
        elif kb > ka:
            out.append((kb, -cb * vb))
            j += 1
        else:
            c = ca * va - cb * vb
            if c:
                out.append((ka, c))
            i += 1
            j += 1
    while i < na:
        out.append((a[i][0], ca * a[i][1]))
        i += 1
    while j < nb:
        out.append((b[j][0], -cb * b[j][1]))
        j += 1
    return out


def _shift(terms: list, delta: tuple) -> list:
    return [(tuple(x + y for x, y in zip(k, delta)), c) for k, c in terms]


def _reduce_terms(p: list, basis: Sequence[list], limits: Limits) -> list:
    """Full (head and tail) pseudo-reduction; returns a primitive remainder."""
    rem: list = []
    work = p
    while work:
        k0, c0 = work[0]
        reducer = None
        for g in basis:
            if _divides(g[0][0], k0):
                reducer = g
                break
        if reducer is None:
            rem.append((k0, c0))
            work = work[1:]
            continue
        lk, lc = reducer[0]
        d = gcd(lc, c0)
        mult, gmult = lc // d, c0 // d
        delta = tuple(x - y for x, y in zip(k0, lk))
        work = _sub_scaled(work, mult, _shift(reducer, delta), gmult)
        if mult != 1 and rem:
            rem = [(k, c * mult) for k, c in rem]
        if work:
            _check_bits(work[:1], limits)
    rem = _make_primitive(rem)
    _check_bits(rem, limits)
    return rem


def _spoly(f: list, g: list) -> list:
    (kf, cf), (kg, cg) = f[0], g[0]
    lcm_key = tuple(max(x, y) for x, y in zip(kf, kg))
    d = gcd(cf, cg)
    return _sub_scaled(
        _shift(f, tuple(x - y for x, y in zip(lcm_key, kf))),
        cg // d,
        _shift(g, tuple(x - y for x, y in zip(lcm_key, kg))),
        cf // d,
    )


def _is_const_term(terms: list) -> bool:
    return len(terms) == 1 and not any(terms[0][0])


def _interreduce(basis: list[list], limits: Limits) -> list[list]:
    # Minimalize: drop generators whose leading monomial another one divides.
    basis = sorted(basis, key=lambda t: t[0][0])
    minimal: list[list] = []
    for g in basis:
        if not any(_divides(h[0][0], g[0][0]) for h in minimal):
            minimal.append(g)
    # Fully reduce each survivor modulo the others.
    reduced: list[list] = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = _reduce_terms(g, others, limits)
        if r:
            reduced.append(r)
    reduced.sort(key=lambda t: t[0][0])
    return reduced


def buchberger(
    polys: Iterable[Polynomial],
    term_order: TermOrder,
    limits: Limits = DEFAULT_LIMITS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by the input polynomials.

    Normal selection strategy (smallest lcm first) with the coprime and chain
    criteria; the whole-ring ideal comes back as the single generator 1.
    """
    to = term_order
    one = (Polynomial.constant(to.order, 1),)
    seen = set()
    seeds = []
    for p in polys:
        if p.order != to.order:
            raise PolyError("input polynomial does not match the term order's ring")
        if p.is_zero():
            continue
        if p.is_constant():
            return GroebnerBasis(one, to)
        t = tuple(_to_terms(p, to))
        if t not in seen:
            seen.add(t)
            seeds.append(list(t))
    if not seeds:
        return GroebnerBasis((), to)
    seeds.sort(key=lambda t: (t[0][0], t))

    basis: list[list] = []
    pairs: list = []  # heap of (lcm_key, i, j)
    pending: set[tuple[int, int]] = set()

    def push_pairs(j: int) -> None:
        kj = basis[j][0][0]
        for i in range(j):
            lcm_key = tuple(max(x, y) for x, y in zip(basis[i][0][0], kj))
            heapq.heappush(pairs, (lcm_key, i, j))
            pending.add((i, j))

    for s in seeds:
        r = _reduce_terms(s, basis, limits)
        if not r:
            continue
        if _is_const_term(r):
            return GroebnerBasis(one, to)
        basis.append(r)
        push_pairs(len(basis) - 1)

    processed = 0
    while pairs:
        processed += 1
        if processed > limits.max_gb_pairs:
            raise ResourceLimitError(
                f"pair limit {limits.max_gb_pairs} exceeded in basis computation"
            )
        lcm_key, i, j = heapq.heappop(pairs)
        pending.discard((i, j))
        ki, kj = basis[i][0][0], basis[j][0][0]
        # Coprime criterion: disjoint leading supports reduce to zero anyway.
        if all(x + y == z for x, y, z in zip(ki, kj, lcm_key)):
            continue
        # Chain criterion: a third generator dividing the lcm with both its
        # pairs already handled makes this pair redundant.
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if _divides(basis[k][0][0], lcm_key):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        r = _reduce_terms(_spoly(basis[i], basis[j]), basis, limits)
        if not r:
            continue
        if _is_const_term(r):
            return GroebnerBasis(one, to)
        basis.append(r)
        push_pairs(len(basis) - 1)

    reduced = _interreduce(basis, limits)
    gens = tuple(_from_terms(t, to) for t in reduced)
    return GroebnerBasis(gens, to)


# ---- normal forms and predicates ------------------------------------------


def normal_form(p: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Exact multivariate division remainder: p - result lies in the ideal and
    no term of the result is divisible by any generator's leading term."""
    to = basis.term_order
    if p.order != to.order:
        raise PolyError("polynomial does not match the basis ring")
    gens = [(_to_terms(g, to)) for g in basis.generators]
    lead = [(g[0][0], Fraction(g[0][1])) for g in gens]
    work = {to.key(m): c for m, c in p.terms.items()}
    rem: dict[tuple, Fraction] = {}
    while work:
        k0 = max(work)
        c0 = work.pop(k0)
        hit = None
        for idx, (lk, _) in enumerate(lead):
            if _divides(lk, k0):
                hit = idx
                break
        if hit is None:
            rem[k0] = c0
            continue
        g = gens[hit]
        scale = c0 / lead[hit][1]
        delta = tuple(x - y for x, y in zip(k0, lead[hit][0]))
        for k, c in g[1:]:
            kk = tuple(x + y for x, y in zip(k, delta))
            s = work.get(kk, Fraction(0)) - scale * c
            if s:
                work[kk] = s
            else:
                work.pop(kk, None)
    return Polynomial(to.order, {to.unkey(k): c for k, c in rem.items()})


def ideal_member(p: Polynomial, basis: GroebnerBasis) -> bool:
    """True iff the normal form of p modulo the basis is zero."""
    to = basis.term_order
    if p.order != to.order:
        raise PolyError("polynomial does not match the basis ring")
    if p.is_zero():
        return True
    gens = [_to_terms(g, to) for g in basis.generators]
    return not _reduce_terms(_to_terms(p, to), gens, DEFAULT_LIMITS)


def ideal_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """True iff each basis generates the other's ideal (orders may differ)."""
    if a.term_order.order != b.term_order.order:
        raise PolyError("bases live in different rings")
    return all(ideal_member(g, b) for g in a.generators) and all(
        ideal_member(g, a) for g in b.generators
    )


def fresh_variable(order: VarOrder, base: str = "z") -> str:
    """Deterministic variable name not present in the order."""
    if base not in order:
        return base
    k = 0
    while f"{base}{k}" in order:
        k += 1
    return f"{base}{k}"


def extend_order(order: VarOrder, aux: str) -> tuple[VarOrder, TermOrder]:
    """Ring with one auxiliary variable placed greater than every original one."""
    ext = VarOrder(order.names + (aux,))
    to = TermOrder((aux,) + tuple(reversed(order.names)), ext)
    return ext, to


def radical_member(
    p: Polynomial,
    polys: Iterable[Polynomial],
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """True iff p vanishes on the zero set of the input polynomials.

    Adjoins an inverse variable for p: the augmented ideal is the whole ring
    exactly when p lies in the radical.
    """
    polys = list(polys)
    order = p.order
    if p.is_zero():
        return True
    aux = fresh_variable(order)
    ext, to = extend_order(order, aux)
    lifted = [rebase(q, ext) for q in polys]
    inverse = Polynomial.variable(ext, aux) * rebase(p, ext) - 1
    gb = buchberger(lifted + [inverse], to, limits)
    return gb.is_unit()


def eliminate(basis: GroebnerBasis, drop: Iterable[str]) -> list[Polynomial]:
    """Generators free of the dropped variables: a basis of the elimination ideal.

    Requires the basis order to rank every dropped variable above every kept one.
    """
    drop = set(drop)
    seq = basis.term_order.sequence
    for name in drop:
        if name not in basis.term_order.order:
            raise PolyError(f"unknown variable {name!r}")
    positions = {n: i for i, n in enumerate(seq)}
    kept = [n for n in seq if n not in drop]
    if kept and drop:
        if max(positions[d] for d in drop) > min(positions[k] for k in kept):
            raise PolyError(
                "elimination needs every dropped variable greater than every kept one"
            )
    return [g for g in basis.generators if not (set(g.variables()) & drop)]
