"""Shared fixtures: the worked example systems and random-input helpers."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from unmix import (
    Polynomial,
    TriangularSet,
    VarOrder,
    parse_polynomial,
    parse_system,
)

# ---- worked example systems -------------------------------------------------

ORDER4 = VarOrder(["x1", "x2", "x3", "x4"])
ORDER5 = VarOrder(["x1", "x2", "x3", "x4", "x5"])

# four-variable chain with u-set {x2}
CHAIN_A_TEXT = """\
vars x1 x2 x3 x4
x1*x2^2+x2+2*x1^2
x2*x3+x1*x2^2+x2*x1+2*x1
x2*x4^2-x4-x2-x3
"""

# five-variable chain with empty u-set
CHAIN_B_TEXT = """\
vars x1 x2 x3 x4 x5
-x2*x3^2-x3+x1*x2^2-x2*x1
x1*x4^2+x3*x4^2+x4+x3-2*x2+x2*x1+x1*x2^2
x3*x5^2+2*x5+2*x1*x2^2+x2*x1+2*x3
"""

# three-polynomial system whose characteristic series is a single branch
SYSTEM_ONE_BRANCH_TEXT = """\
vars x1 x2 x3 x4
x3^2+2*x3*x2+x1*x2+2
x1^3+2-4*x3*x2^2-2*x2*x3^2+2*x1^2-2*x2
x2*x3*x4^2+x4+x1^2+2*x3+x2
"""

SYSTEM_ONE_BRANCH_CHAIN = [
    "2*x1*x2^2+2*x2+x1^3+2*x1^2+2",
    "x3^2+2*x2*x3+x1*x2+2",
    "x2*x3*x4^2+x4+x1^2+2*x3+x2",
]

# four-polynomial system decomposing into one two-dimensional component
SYSTEM_SAT_TEXT = """\
vars x1 x2 x3 x4 x5
2*x3^2*x1+x3^2*x2+x3+x1
-x2*x3*x4+2*x1*x2^2-x3*x4^2+x2+2*x1-x4
x5^2*x1^2-x2*x5^2+x5-x3*x4+x2+x1
2*x2^3*x3^2+2*x2*x3^3*x4+2*x4^2*x3^3+2*x2^2*x3+x2*x3*x4+2*x4*x3^2+x3*x4^2-x2+2*x3+x4
"""

SAT_CHAINS = {
    1: [
        "2*x1*x3^2+x2*x3^2+x3+x1",
        "-x3*x4^2-x2*x3*x4-x4+x2+2*x1+2*x1*x2^2",
        "-x1^2*x5^2+x2*x5^2-x5+x3*x4-x2-x1",
    ],
    2: [
        "x2-x1^2",
        "2*x1*x3^2+x1^2*x3^2+x3+x1",
        "x3*x4^2+x4+x3*x1^2*x4-2*x1-x1^2-2*x1^5",
        "-x5+x3*x4-x1-x1^2",
    ],
    3: [
        "x2+2*x1",
        "x3+x1",
        "x1*x4^2-x4-2*x1^2*x4+8*x1^3",
        "x1^2*x5^2+2*x1*x5^2+x5-x1+x1*x4",
    ],
    4: ["x1", "x3", "-x4+x2", "x2*x5^2-x5-x2"],
}

# published saturation generator lists for the four chains above; entry 2 has
# its misprinted first generator corrected (see PAPER_TYPOS in the tests) and
# entry 3 omits a generator shown to be a copy-paste slip.
SAT_PRINTED = {
    1: [
        "2*x3^2*x1+x2*x3^2+x3+x1",
        "2*x3*x2^3*x1+4*x3*x2^2*x1^2-x4*x3*x2+x3*x2^2+x1*x4^2-2*x1*x4*x3+x1*x4*x2"
        "+4*x1*x3*x2+2*x2^2*x1+4*x3*x1^2-x4+x2+2*x1",
        "x4*x3*x2-2*x2^2*x1+x4^2*x3-x2-2*x1+x4",
        "-x5^2*x1^2+x2*x5^2-x5+x4*x3-x2-x1",
        "x5^2*x3-x3^2*x1-x3-x1+x5^2*x3^2*x1^2+x5*x3^2+x1*x5^2-x3^3*x4+2*x5^2*x3^2*x1",
    ],
    2: [
        "x2-x1^2",
        "2*x3^2*x1+x3+x1+x1^2*x3^2",
        "2*x3*x2^3*x1+4*x3*x2^2*x1^2-x3*x2*x4+x3*x2^2+x4^2*x1-2*x4*x3*x1+x4*x2*x1"
        "+4*x3*x2*x1+2*x1*x2^2+4*x3*x1^2-x4+x2+2*x1",
        "x3*x2*x4-2*x1*x2^2+x3*x4^2-x2-2*x1+x4",
        "-x5^2*x1^2+x2*x5^2-x5+x3*x4-x2-x1",
        "-x3^2*x1-x3-x1+x5^2*x1+x1^2*x5^2*x3^2+x3^2*x5-x3^3*x4+x3*x5^2+2*x5^2*x3^2*x1",
    ],
    3: [
        "2*x1+x2",
        "x3+x1",
        "x5^2*x1^2-x1+x5+2*x5^2*x1+x4*x1",
        "x5^2*x4*x1+2*x5^2*x4+x5*x4^2-2*x5*x4*x1+8*x5*x1^2+x4^2-x4",
        "2*x4^2*x5^2+x4^3*x5+4*x5*x4*x1^2+16*x5*x1^3+9*x5^2*x4+4*x5*x4^2+32*x5*x1^2"
        "-32*x5^2*x1-8*x5*x4*x1+x4^3+4*x4*x1^2+16*x1^3-4*x5*x4+8*x5*x1-6*x4"
        "+3*x4^2-14*x4*x1-8*x1^2-16*x5+16*x1",
    ],
    4: ["x1", "x3", "-x4+x2", "x2*x5^2-x5-x2"],
}

# generators as misprinted in the source displays; provably not members
SAT_PRINTED_TYPOS = {
    2: "-x1+x2^2",
    3: "2*x3^2*x1+x3+x1+x1^2*x3^2",
}

# published auxiliary multiplicands for the four saturations and the
# generator counts of their auxiliary bases (informational comparison)
SAT_AUX = {
    1: ("x3*(2*x1+x2)*(x2-x1^2)", 15),
    2: ("x3*(2*x1+x1^2)", 9),
    3: ("x1*(x1+2)", 10),
    4: ("x2", 6),
}
SAT_IMPROVED_AUX_COUNT = 8  # for chain 1 saturated by x3 alone

# four-polynomial system whose published decomposition is internally
# inconsistent (see test_acceptance for the machine-checked certificate)
SYSTEM_BROKEN_TEXT = """\
vars x1 x2 x3 x4 x5
2*x2^2*x1+x1*x2+x5^2*x3+2*x5+2*x3
x3^2*x2+x3+2*x1*x2+3*x4^2*x1^2+x4^2*x2+2*x4
x3*x5^2+2*x5+2*x1*x2^2+3*x3+x3^2*x2+2*x1*x2+x2^3*x1
2*x5+3*x1*x2+x3*x5^2+4*x3+2*x2*x3^2
"""

SYSTEM_BROKEN_CHAIN = [
    "-x2*x3^2-x3+x1*x2^2-x1*x2",
    "x1*x4^2+x3*x4^2+x4+x3-2*x2+x1*x2+x1*x2^2",
    "x3*x5^2+2*x5+2*x1*x2^2+x1*x2+2*x3",
]

# the published saturation of that system's first chain (criterion 4 target)
SAT_BROKEN_PRINTED = [
    "-x2^2*x1+x3+x2*x3^2+x1*x2",
    "-2*x2^2*x3+4*x2^2*x1-x1*x2*x3+x3*x1*x2^2+x2*x3*x4-x1^2*x2^2-x1^2*x2^3"
    "+x3*x1*x2^3-x4^2*x1^2*x2+x4^2*x1*x2^2-x4^2*x1*x2-x4*x1*x2+x1*x4^2+x4-2*x2",
    "x1*x4^2+x4^2*x3+x4+x3-2*x2+x1*x2+x2^2*x1",
    "2*x5+x5^2*x2^2*x1+2*x3*x1*x2^3-x5^2*x1*x2+x3*x1*x2^2+2*x2*x3*x5+4*x2^2*x1-x1*x2",
    "2*x2^2*x1+x1*x2+x5^2*x3+2*x5+2*x3",
    "-2*x4^2*x5-x2*x4+2*x2^2-8*x2^3-2*x2^3*x3+4*x4*x2^2-4*x2^4*x3-8*x5*x2^2"
    "-2*x5*x2^3*x3-2*x5*x2^2*x3-2*x5^2*x2^3+2*x5^2*x2^2+x5^2*x4*x2^2+2*x4*x2^3*x3"
    "-x5^2*x4*x2+x2^2*x4*x3-2*x5*x2^2*x4^2+2*x4^2*x1*x5*x2+2*x5*x4*x2+2*x2*x3*x5"
    "+2*x5*x1*x2^2+2*x5*x1*x2^3+2*x5*x4^2*x2",
    "-8*x2+4*x4-4*x5+2*x1*x2+4*x1*x4^2+x5^2*x4-4*x2^2*x3-2*x4^2*x5"
    "+4*x2^2*x1-2*x1*x2*x3+x3*x1*x2^2+2*x2*x3*x4-2*x1^2*x2^2-2*x1^2*x2^3+x4^2*x5^2*x1"
    "-2*x2*x3*x5-2*x4^2*x1^2*x2-3*x4^2*x1*x2-2*x4*x1*x2+2*x5^2*x1*x2-2*x5^2*x2",
]


@pytest.fixture(scope="session")
def chain_a() -> TriangularSet:
    system = parse_system(CHAIN_A_TEXT)
    return TriangularSet(system.polys)


@pytest.fixture(scope="session")
def chain_b() -> TriangularSet:
    system = parse_system(CHAIN_B_TEXT)
    return TriangularSet(system.polys)


@pytest.fixture(scope="session")
def one_branch_system():
    return parse_system(SYSTEM_ONE_BRANCH_TEXT)


@pytest.fixture(scope="session")
def sat_system():
    return parse_system(SYSTEM_SAT_TEXT)


@pytest.fixture(scope="session")
def sat_chains():
    return {
        i: TriangularSet([parse_polynomial(s, ORDER5) for s in strs])
        for i, strs in SAT_CHAINS.items()
    }


@pytest.fixture(scope="session")
def broken_system():
    return parse_system(SYSTEM_BROKEN_TEXT)


@pytest.fixture(scope="session")
def broken_chain() -> TriangularSet:
    return TriangularSet([parse_polynomial(s, ORDER5) for s in SYSTEM_BROKEN_CHAIN])


# ---- random input helpers ---------------------------------------------------


def random_polynomial(
    rng: random.Random,
    order: VarOrder,
    max_total_degree: int = 2,
    max_terms: int = 4,
    coeff_bound: int = 3,
    nonzero: bool = True,
) -> Polynomial:
    """Small random polynomial with integer coefficients in [-bound, bound]."""
    n = len(order)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        total = rng.randint(0, max_total_degree)
        mono = [0] * n
        for _ in range(total):
            mono[rng.randrange(n)] += 1
        c = rng.randint(-coeff_bound, coeff_bound)
        if c:
            mono_t = tuple(mono)
            terms[mono_t] = terms.get(mono_t, 0) + c
    p = Polynomial(order, {m: Fraction(c) for m, c in terms.items() if c})
    if nonzero and p.is_zero():
        return Polynomial.variable(order, order.names[rng.randrange(n)])
    return p


def random_chain(
    rng: random.Random,
    order: VarOrder,
    max_len: int = 3,
    max_degree: int = 2,
) -> TriangularSet:
    """Random triangular set: ascending classes with controlled degrees."""
    n = len(order)
    length = rng.randint(1, min(max_len, n))
    classes = sorted(rng.sample(range(n), length))
    chain = []
    for idx in classes:
        lead_deg = rng.randint(1, max_degree)
        lead_var = order.names[idx]
        # leading coefficient in strictly lower variables (or a constant)
        if idx > 0 and rng.random() < 0.5:
            sub = VarOrder(order.names[: idx + 1])
            ini = random_polynomial(rng, sub, max_total_degree=1, max_terms=2)
            if ini.degree(lead_var) > 0 or ini.is_zero():
                ini = Polynomial.constant(sub, 1)
            from unmix import rebase  # local import to keep fixture deps light

            ini = rebase(ini, order)
        else:
            ini = Polynomial.constant(order, rng.choice([1, 2, 1, 1]))
        lead = ini * Polynomial.variable(order, lead_var) ** lead_deg
        tail_order = VarOrder(order.names[: idx + 1])
        tail = random_polynomial(rng, tail_order, max_total_degree=max_degree, max_terms=3, nonzero=False)
        from unmix import rebase

        tail = rebase(tail, order)
        # keep the tail below the leading degree in the leading variable
        while tail.degree(lead_var) >= lead_deg:
            tail = tail - (
                Polynomial.variable(order, lead_var) ** tail.degree(lead_var)
            ) * _coeff_of(tail, lead_var, tail.degree(lead_var))
        chain.append(lead + tail)
    return TriangularSet(chain)


def _coeff_of(p: Polynomial, var: str, deg: int) -> Polynomial:
    from unmix import coeffs_in

    for d, c in coeffs_in(p, var):
        if d == deg:
            return c
    return Polynomial.zero(p.order)
