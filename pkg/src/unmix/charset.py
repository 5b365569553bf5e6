"""Ritt-Wu basic sets and characteristic sets, plus the characteristic-series
worklist algorithm that splits on u-set members instead of all initials.

A branch records its chain together with the u-set; the zero set of the input
system is the union over branches of Zero(chain / u-set).  Contradictory
subsystems (a nonzero constant is derived) contribute no branch.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from .elimination import prem_chain
from .groebner import DEFAULT_LIMITS, Limits, ResourceLimitError
from .parser_io import poly_sort_key, render_polynomial
from .polyring import Polynomial, PolyError, leading_data, normalize
from .triset import TriangularSet, u_set

log = logging.getLogger("unmix")


@dataclass(frozen=True)
class CharsetOutcome:
    """Either an ascending chain or the nonzero constant that contradicts F."""

    chain: TriangularSet | None
    contradiction: Polynomial | None

    @property
    def is_contradiction(self) -> bool:
        return self.contradiction is not None


@dataclass(frozen=True)
class CharBranch:
    """One characteristic-series branch: chain, u-set, and the source system."""

    triset: TriangularSet
    u_set: tuple[Polynomial, ...]
    source: tuple[Polynomial, ...]


def _prepare(polys) -> list[Polynomial]:
    cleaned = {normalize(p) for p in polys if not p.is_zero()}
    return sorted(cleaned, key=poly_sort_key)


def _rank(p: Polynomial):
    data = leading_data(p)
    return (data.index, data.degree, render_polynomial(p))


def basic_set(polys) -> CharsetOutcome:
    """Minimal-rank ascending subset of F (greedy by class, degree, text).

    A nonzero constant in F is a contradiction marker; zeros are dropped.
    """
    cleaned = _prepare(polys)
    if not cleaned:
        raise PolyError("basic set of an empty polynomial set")
    for p in cleaned:
        if p.is_constant():
            return CharsetOutcome(None, p)
    candidates = sorted(cleaned, key=_rank)
    chain: list[Polynomial] = []
    for p in candidates:
        if not chain:
            chain.append(p)
            continue
        data = leading_data(p)
        if data.index <= leading_data(chain[-1]).index:
            continue
        if all(
            p.degree(lv) < g.degree(lv)
            for g, lv in ((g, leading_data(g).variable) for g in chain)
        ):
            chain.append(p)
    return CharsetOutcome(TriangularSet(chain), None)


def wu_charset(polys, limits: Limits = DEFAULT_LIMITS) -> CharsetOutcome:
    """Ritt-Wu characteristic set: iterate basic set + pseudo-remainders.

    The returned chain reduces every input polynomial to pseudo-remainder zero,
    and every chain element lies in the ideal of the input set.
    """
    work = set(_prepare(polys))
    if not work:
        raise PolyError("characteristic set of an empty polynomial set")
    rounds = 0
    while True:
        rounds += 1
        if rounds > limits.max_worklist_pops:
            raise ResourceLimitError("characteristic-set iteration ceiling hit")
        outcome = basic_set(work)
        if outcome.is_contradiction:
            return outcome
        chain = outcome.chain
        chain_set = set(chain.chain)
        remainders = set()
        for p in work:
            if p in chain_set:
                continue
            r = prem_chain(p, chain).remainder
            if not r.is_zero():
                remainders.add(normalize(r))
        remainders -= work
        if not remainders:
            return outcome
        work |= remainders


def _branch_key(chain: TriangularSet) -> tuple:
    return tuple(render_polynomial(normalize(f)) for f in chain)


def charser_a(polys, limits: Limits = DEFAULT_LIMITS) -> list[CharBranch]:
    """Characteristic series with u-set splitting.

    Worklist of polynomial sets, seeded with the input; each noncontradictory
    characteristic set becomes a branch, and every u-set member I spawns the
    augmented system F + chain + {I}.  Branches with identical chains are
    merged and the result is canonically sorted, so the output is independent
    of processing order.
    """
    start = tuple(_prepare(polys))
    if not start:
        raise PolyError("characteristic series of an empty polynomial set")
    queue: deque[tuple[Polynomial, ...]] = deque([start])
    seen_systems = {start}
    branches: dict[tuple, CharBranch] = {}
    pops = 0
    while queue:
        pops += 1
        if pops > limits.max_worklist_pops:
            raise ResourceLimitError(
                f"worklist ceiling {limits.max_worklist_pops} exceeded"
            )
        system = queue.popleft()
        outcome = wu_charset(system, limits)
        if outcome.is_contradiction:
            log.info("dropping contradictory system (%s)", outcome.contradiction)
            continue
        chain = outcome.chain
        assert all(not ini.is_zero() for ini in chain.initials)
        useful = u_set(chain)
        key = _branch_key(chain)
        if key not in branches:
            branches[key] = CharBranch(chain, useful, system)
        for member in useful:
            augmented = tuple(
                sorted(
                    set(system) | {normalize(f) for f in chain} | {member},
                    key=poly_sort_key,
                )
            )
            if augmented not in seen_systems:
                seen_systems.add(augmented)
                queue.append(augmented)
    return [branches[k] for k in sorted(branches)]
