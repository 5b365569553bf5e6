"""Saturation ideals and the full unmixed variety decomposition.

The classic saturation divides the chain ideal by the product of all initials;
the improved route divides by the product of the u-set only, which is a
smaller (often trivial) multiplicand with the same zero set.  An empty u-set
short-circuits to a plain basis of the chain ideal.

The decomposition pipeline: characteristic series, dimension pruning of
oversized chains, per-branch saturation (optionally in parallel), then removal
of components whose variety another component's variety already covers.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .charset import CharBranch, charser_a
from .groebner import (
    DEFAULT_LIMITS,
    GroebnerBasis,
    Limits,
    TermOrder,
    buchberger,
    eliminate,
    extend_order,
    fresh_variable,
    ideal_member,
    normal_form,
    radical_member,
)
from .parser_io import render_polynomial
from .polyring import Polynomial, PolyError, normalize, rebase
from .triset import TriangularSet, products, u_set

log = logging.getLogger("unmix")


@dataclass(frozen=True)
class Component:
    """One unmixed piece: generators, dimension, and the chain it came from."""

    generators: GroebnerBasis
    dimension: int
    source_chain: TriangularSet
    u_set: tuple[Polynomial, ...]
    method: str


def saturate_by(chain, h: Polynomial, limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """Basis of Ideal(chain) : h^infinity over the original variables.

    Adjoins an inverse variable z for h, computes a lexicographic basis with z
    greatest, and keeps the generators free of z.  A constant h changes
    nothing and short-circuits to a plain basis of the chain ideal.
    """
    polys = list(chain)
    if not polys:
        raise PolyError("cannot saturate an empty polynomial set")
    order = polys[0].order
    if h.is_zero():
        raise PolyError("cannot saturate by the zero polynomial")
    base_order = TermOrder.lex(order)
    if h.is_constant():
        return buchberger(polys, base_order, limits)
    aux = fresh_variable(order)
    ext, to = extend_order(order, aux)
    lifted = [rebase(p, ext) for p in polys]
    inverse = Polynomial.variable(ext, aux) * rebase(h, ext) - 1
    gb = buchberger(lifted + [inverse], to, limits)
    kept = [rebase(g, order) for g in eliminate(gb, {aux})]
    # The z-free part of a reduced lex basis is already reduced for the
    # restricted order; rerunning keeps the output convention in one place.
    return buchberger(kept, base_order, limits) if kept else GroebnerBasis((), base_order)


def sat_classic(tset: TriangularSet, limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """Saturation by the product of all initials."""
    j, _ = products(tset)
    return saturate_by(tset.chain, j, limits)


def sat_improved(tset: TriangularSet, limits: Limits = DEFAULT_LIMITS) -> GroebnerBasis:
    """Saturation by the u-set product; same zero set as the classic route."""
    _, u = products(tset)
    return saturate_by(tset.chain, u, limits)


def is_perfect(tset: TriangularSet, limits: Limits = DEFAULT_LIMITS) -> bool:
    """A chain is perfect exactly when its saturation is a proper ideal."""
    return not sat_classic(tset, limits).is_unit()


def _component_sort_key(comp: Component):
    gens = [render_polynomial(g) for g in comp.generators.generators]
    return (-comp.dimension, len(gens), gens[0] if gens else "", gens)


def _ideal_subset(a: Component, b: Component) -> bool:
    return all(ideal_member(g, b.generators) for g in a.generators.generators)


def prune_redundant(components) -> list[Component]:
    """Drop components whose variety is covered by another's.

    A component whose ideal contains another component's ideal has the smaller
    variety and goes away; equal ideals keep one canonical representative.
    The result does not depend on the input order.
    """
    comps = sorted(components, key=_component_sort_key)
    reps: list[Component] = []
    for c in comps:
        if any(_ideal_subset(c, r) and _ideal_subset(r, c) for r in reps):
            continue
        reps.append(c)
    return [
        c
        for c in reps
        if not any(o is not c and _ideal_subset(o, c) for o in reps)
    ]


def default_thread_count() -> int:
    value = os.environ.get("UNMIX_THREADS", "1")
    try:
        n = int(value)
    except ValueError:
        return 1
    return max(n, 1)


def unm_var_dec(
    polys,
    method: str = "improved",
    limits: Limits = DEFAULT_LIMITS,
    threads: int | None = None,
) -> list[Component]:
    """Unmixed decomposition: Zero(input) is the union of the components' zero sets.

    Each component is equidimensional of dimension n - |chain|; branches longer
    than the input set are redundant and dropped up front, saturations that hit
    the whole ring (imperfect chains) are dropped, and covered components are
    removed at the end.
    """
    if method not in ("classic", "improved"):
        raise ValueError(f"unknown saturation method {method!r}")
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise PolyError("cannot decompose an empty polynomial set")
    n = len(polys[0].order)
    input_size = len({normalize(p) for p in polys})
    branches = charser_a(polys, limits)
    survivors: list[CharBranch] = []
    for br in branches:
        if len(br.triset) > input_size:
            log.info(
                "dimension pruning: chain of length %d exceeds input size %d",
                len(br.triset),
                input_size,
            )
            continue
        survivors.append(br)

    def build(br: CharBranch) -> Component | None:
        sat = sat_classic if method == "classic" else sat_improved
        basis = sat(br.triset, limits)
        if basis.is_unit():
            log.info("dropping imperfect chain (saturation is the whole ring)")
            return None
        return Component(
            generators=basis,
            dimension=n - len(br.triset),
            source_chain=br.triset,
            u_set=br.u_set,
            method=method,
        )

    threads = default_thread_count() if threads is None else max(threads, 1)
    if threads > 1 and len(survivors) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            built = list(pool.map(build, survivors))
    else:
        built = [build(br) for br in survivors]
    components = [c for c in built if c is not None]
    kept = prune_redundant(components)
    return sorted(kept, key=_component_sort_key)


def verify_decomposition(polys, components, limits: Limits = DEFAULT_LIMITS) -> list[str]:
    """Expensive self-checks; returns human-readable problem strings (empty = ok).

    Checks chain pseudo-remainders and ideal membership for every component's
    source chain, saturation witnesses for every generator, and radical
    membership of every input polynomial in every component.
    """
    from .elimination import prem_chain

    problems: list[str] = []
    polys = [p for p in polys if not p.is_zero()]
    for idx, comp in enumerate(components, start=1):
        chain = comp.source_chain
        for p in polys:
            if not prem_chain(p, chain).remainder.is_zero():
                problems.append(f"component {idx}: nonzero pseudo-remainder for input {p}")
        chain_basis = buchberger(list(chain), comp.generators.term_order, limits)
        j, u = products(chain)
        multiplier = j if comp.method == "classic" else u
        for g in comp.generators.generators:
            power = Polynomial.constant(g.order, 1)
            for _ in range(21):
                if ideal_member(g * power, chain_basis):
                    break
                power = power * multiplier
            else:
                problems.append(
                    f"component {idx}: no saturation witness within exponent 20 for {g}"
                )
        for p in polys:
            if not radical_member(p, list(comp.generators.generators), limits):
                problems.append(
                    f"component {idx}: input {p} does not vanish on the component"
                )
    return problems
