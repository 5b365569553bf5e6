"""Triangular sets: structure checks, coefficient/resultant sets, and the u-set.

The u-set of a chain collects the initials that genuinely have to be assumed
nonzero when the chain's quasi-variety is replaced by its saturation: an
initial whose own chain resultant vanishes, or an initial of an element none
of whose coefficients has a constant (hence everywhere-nonzero) chain
resultant.  Chains where every element has such a constant witness have an
empty u-set and their zero set already equals the zero set of the saturation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .elimination import resultant_chain
from .parser_io import poly_sort_key
from .polyring import (
    Polynomial,
    PolyError,
    VarOrder,
    coeffs_in,
    leading_data,
    normalize,
)


class TriangularSet:
    """Ordered chain of non-constant polynomials with strictly increasing class."""

    __slots__ = ("chain", "order", "classes", "leading_variables", "initials")

    def __init__(self, chain):
        chain = tuple(chain)
        if not chain:
            raise PolyError("a triangular set must be non-empty")
        order = chain[0].order
        classes = []
        lvs = []
        inis = []
        for f in chain:
            if f.order != order:
                raise PolyError("chain elements use different variable orderings")
            data = leading_data(f)  # raises for constants
            classes.append(data.index)
            lvs.append(data.variable)
            inis.append(data.initial)
        for a, b in zip(classes, classes[1:]):
            if a >= b:
                raise PolyError("chain classes must strictly increase")
        self.chain = chain
        self.order = order
        self.classes = tuple(classes)
        self.leading_variables = tuple(lvs)
        self.initials = tuple(inis)

    @property
    def parameters(self) -> tuple[str, ...]:
        led = set(self.leading_variables)
        return tuple(n for n in self.order.names if n not in led)

    def __len__(self) -> int:
        return len(self.chain)

    def __iter__(self):
        return iter(self.chain)

    def __getitem__(self, i):
        return self.chain[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, TriangularSet) and self.chain == other.chain

    def __hash__(self) -> int:
        return hash(self.chain)

    def __repr__(self) -> str:
        return f"TriangularSet[{', '.join(str(f) for f in self.chain)}]"


def is_triangular(chain) -> bool:
    """True when the polynomial list forms a triangular set."""
    try:
        TriangularSet(chain)
        return True
    except PolyError:
        return False


def _canonical_set(polys) -> tuple[Polynomial, ...]:
    return tuple(sorted(set(polys), key=poly_sort_key))


def coefficient_sets(tset: TriangularSet) -> tuple[tuple[Polynomial, ...], ...]:
    """Per element: the normalized nonzero coefficients in its leading variable."""
    out = []
    for f, lv in zip(tset.chain, tset.leading_variables):
        out.append(_canonical_set(normalize(c) for _, c in coeffs_in(f, lv)))
    return tuple(out)


def resultant_sets(tset: TriangularSet) -> tuple[tuple[Polynomial, ...], ...]:
    """Per element: normalized nonzero chain resultants of its coefficient set."""
    out = []
    for cf in coefficient_sets(tset):
        rs = []
        for c in cf:
            r = resultant_chain(c, tset.chain)
            if not r.is_zero():
                rs.append(normalize(r))
        out.append(_canonical_set(rs))
    return tuple(out)


def u_set(tset: TriangularSet) -> tuple[Polynomial, ...]:
    """Initials that must be assumed nonzero (canonically sorted, deduped)."""
    rsets = resultant_sets(tset)
    members = []
    for ini, rf in zip(tset.initials, rsets):
        res_ini = resultant_chain(ini, tset.chain)
        if res_ini.is_zero():
            members.append(normalize(ini))
        elif not any(r.is_constant() for r in rf):
            members.append(normalize(ini))
    return _canonical_set(members)


def products(tset: TriangularSet) -> tuple[Polynomial, Polynomial]:
    """(J, U): product of all initials, and product of the u-set (empty = 1)."""
    j = Polynomial.constant(tset.order, 1)
    for ini in tset.initials:
        j = j * ini
    u = Polynomial.constant(tset.order, 1)
    for m in u_set(tset):
        u = u * m
    return j, u


@dataclass(frozen=True)
class TrisetReport:
    """Classification flags and derived sets for a (candidate) chain."""

    triangular: bool
    noncontradictory_ascending: bool
    regular: bool
    normal: bool
    coeff_sets: tuple[tuple[Polynomial, ...], ...]
    resultant_sets: tuple[tuple[Polynomial, ...], ...]
    u_set: tuple[Polynomial, ...]


def _is_ascending(tset: TriangularSet) -> bool:
    # Every chain element and every initial reduced w.r.t. the other elements.
    for i, f in enumerate(tset.chain):
        for j, (lv, g) in enumerate(zip(tset.leading_variables, tset.chain)):
            ldeg = g.degree(lv)
            if i != j and f.degree(lv) >= ldeg:
                return False
            if tset.initials[i].degree(lv) >= ldeg:
                return False
    return True


def classify_triset(chain) -> TrisetReport:
    """Flags for a raw chain; non-triangular input yields all-false flags."""
    try:
        tset = chain if isinstance(chain, TriangularSet) else TriangularSet(chain)
    except PolyError:
        return TrisetReport(False, False, False, False, (), (), ())
    regular = all(
        not resultant_chain(ini, tset.chain).is_zero() for ini in tset.initials
    )
    params = set(tset.parameters)
    normal_flag = all(set(ini.variables()) <= params for ini in tset.initials)
    return TrisetReport(
        triangular=True,
        noncontradictory_ascending=_is_ascending(tset),
        regular=regular,
        normal=normal_flag,
        coeff_sets=coefficient_sets(tset),
        resultant_sets=resultant_sets(tset),
        u_set=u_set(tset),
    )
