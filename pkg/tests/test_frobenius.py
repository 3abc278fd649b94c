"""Frobenius twists, pushforward presentations, and the two Tor routes."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobdim import (
    PresentedModule,
    QuotientRing,
    ResourceLimitExceeded,
    ext_frobenius,
    frobenius_twist,
    pushforward_presentation,
    tor_frobenius,
    tor_frobenius_via_pushforward,
)
from frobdim.corpus import random_module
from frobdim.resolutions import minimal_free_resolution


def test_twist_raises_map_entries_to_q_powers():
    R = QuotientRing(2, ("x", "y"), ("x^3",))
    k = PresentedModule.residue_field(R)
    complex_, _ = minimal_free_resolution(k, 2)
    twisted = frobenius_twist(complex_, 1)
    originals = {str(p) for col in complex_.map_columns(1) for _, p in col.entries()}
    squared = {str(p) for col in twisted.map_columns(1) for _, p in col.entries()}
    assert originals == {"x", "y"}
    assert squared == {"x^2", "y^2"}


def test_twist_composes_additively():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    k = PresentedModule.residue_field(R)
    complex_, _ = minimal_free_resolution(k, 3)
    once_then_again = frobenius_twist(frobenius_twist(complex_, 1), 2)
    at_once = frobenius_twist(complex_, 3)
    for i in range(1, 4):
        lhs = [sorted((pos, str(p)) for pos, p in col.entries())
               for col in once_then_again.map_columns(i)]
        rhs = [sorted((pos, str(p)) for pos, p in col.entries())
               for col in at_once.map_columns(i)]
        assert lhs == rhs


def test_tor_against_residue_field_over_node():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    k = PresentedModule.residue_field(R)
    table = tor_frobenius(k, 1, 2, 1)
    assert not table.vanishes(1, 1)
    assert table.dim_k(1, 1) == 2
    assert table.as_dict()["Tor(1,1)"] == {"vanishes": False, "dim_k": 2}


def test_tor_vanishes_for_free_module():
    R = QuotientRing(3, ("x", "y"), ("x^2",))
    m = PresentedModule.free(R, 2)
    table = tor_frobenius(m, 1, 2, 2)
    for (i, e) in table.cells():
        assert table.vanishes(i, e)
        assert table.dim_k(i, e) == 0


def test_pushforward_of_dual_numbers_splits_into_two_fields():
    R = QuotientRing(2, ("x",), ("x^2",))
    push = pushforward_presentation(R, 1)
    assert push.q == 2
    assert [m.exponents for m in push.generators] == [(0,), (1,)]
    assert push.module.dim_k() == 2
    assert push.module.degree_scale == 2


def test_pushforward_generator_cap_enforced():
    R = QuotientRing(2, ("x", "y", "z"), ("x*y",))
    with pytest.raises(ResourceLimitExceeded):
        pushforward_presentation(R, 5)


def test_pushforward_relations_are_graded():
    R = QuotientRing(2, ("x", "y"), ("x^3",))
    push = pushforward_presentation(R, 1)
    module = push.module
    for rel in module.relations:
        assert rel.homogeneous_degree(module.gen_degrees,
                                      module.degree_scale) is not None


def test_routes_agree_on_residue_field_cells():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    k = PresentedModule.residue_field(R)
    for i in (1, 2):
        table = tor_frobenius(k, i, 1, 1)
        v1, d1 = table.vanishes(i, 1), table.dim_k(i, 1)
        v2, d2 = tor_frobenius_via_pushforward(k, i, 1)
        assert v1 == v2
        assert d1 == d2


@settings(max_examples=12, deadline=None)
@given(st.integers(0, 2**30))
def test_routes_agree_on_random_modules(seed):
    rng = random.Random(seed)
    ring_pool = [
        QuotientRing(2, ("x",), ("x^2",)),
        QuotientRing(2, ("x", "y"), ("x*y",)),
        QuotientRing(3, ("x", "y"), ("x^2",)),
    ]
    ring = ring_pool[rng.randrange(len(ring_pool))]
    module = random_module(ring, rng)
    i = rng.randint(1, 2)
    e = rng.randint(1, 2)
    table = tor_frobenius(module, i, 1, e)
    v1, d1 = table.vanishes(i, e), table.dim_k(i, e)
    v2, d2 = tor_frobenius_via_pushforward(module, i, e)
    assert v1 == v2
    if d1 is not None and d2 is not None:
        assert d1 == d2


def test_ext_table_for_self_injective_artinian_ring():
    R = QuotientRing(2, ("x",), ("x^2",))
    m = PresentedModule.free(R, 1)
    table = ext_frobenius(m, 1, 2, 1)
    for (i, e) in table.cells():
        assert table.vanishes(i, e)
    assert set(table.as_dict()) == {"Ext(1,1)", "Ext(2,1)"}


def test_ext_nonzero_against_residue_field():
    R = QuotientRing(2, ("x",), ("x^2",))
    k = PresentedModule.residue_field(R)
    table = ext_frobenius(k, 1, 1, 1)
    assert not table.vanishes(1, 1)
    assert table.dim_k(1, 1) == 2


def test_tor_input_validation():
    R = QuotientRing(2, ("x",), ("x^2",))
    k = PresentedModule.residue_field(R)
    with pytest.raises(ValueError):
        tor_frobenius(k, 0, 1, 1)
    with pytest.raises(ValueError):
        tor_frobenius(k, 1, 0, 1)
    with pytest.raises(ValueError):
        tor_frobenius(k, 1, 1, 0)
