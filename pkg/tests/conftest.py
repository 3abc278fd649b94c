"""Shared fixtures and naive reference implementations used as oracles.

The reference arithmetic here is deliberately primitive: plain dicts from
exponent tuples to coefficients, with no ordering or normal forms.  Anything
the package computes cleverly gets compared against these.
"""

from __future__ import annotations

import itertools
import random

import pytest

from frobdim.polynomials import Monomial, Polynomial, PolyRing

# acceptance tests append their PASS/FAIL lines here; the summary hook
# prints them after capture is released so they always reach the terminal
GATE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if GATE_LINES:
        terminalreporter.section("acceptance gate")
        for line in GATE_LINES:
            terminalreporter.write_line(line)


# -- naive polynomial model ---------------------------------------------------

def naive_from_poly(f: Polynomial) -> dict[tuple[int, ...], int]:
    return {mono.exponents: coeff for mono, coeff in f.terms()}


def naive_to_poly(ring: PolyRing, d: dict[tuple[int, ...], int]) -> Polynomial:
    return ring.from_terms((Monomial(e), c) for e, c in d.items())


def naive_add(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = (out.get(e, 0) + c) % p
    return {e: c for e, c in out.items() if c % p}


def naive_mul(a: dict, b: dict, p: int) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = (out.get(e, 0) + ca * cb) % p
    return {e: c for e, c in out.items() if c}


def random_poly(ring: PolyRing, rng: random.Random, max_deg: int = 4,
                max_terms: int = 6) -> Polynomial:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_deg) for _ in range(ring.n))
        pairs.append((Monomial(exps), rng.randint(1, ring.p - 1)))
    return ring.from_terms(pairs)


def all_monomials_up_to(n: int, deg: int):
    """Every exponent tuple in n variables of total degree at most deg."""
    for exps in itertools.product(range(deg + 1), repeat=n):
        if sum(exps) <= deg:
            yield exps


@pytest.fixture
def ring2xy() -> PolyRing:
    return PolyRing(2, ("x", "y"))


@pytest.fixture
def ring3xy() -> PolyRing:
    return PolyRing(3, ("x", "y"))


@pytest.fixture
def ring5xyz() -> PolyRing:
    return PolyRing(5, ("x", "y", "z"))
