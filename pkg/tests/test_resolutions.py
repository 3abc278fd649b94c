"""Minimal free resolutions, homology, Ext, and finite-length duals."""

import math

import pytest

from frobdim import (
    FreeComplex,
    FreeVector,
    PresentedModule,
    QuotientRing,
    ext_module,
    finite_length_dual,
    minimal_free_resolution,
    projective_dimension_oracle,
)
from frobdim.resolutions import (finite_length_structure, homology_at,
                                 kernel_generators, minimize_presentation)


def vec(base, rank, entries):
    return FreeVector.from_entries(base, rank,
                                   [(pos, base.poly(text))
                                    for pos, text in entries.items()])


def math_comb(n, k):
    return math.comb(n, k)


def test_koszul_betti_numbers_over_regular_ring():
    S = QuotientRing(2, ("x", "y", "z"), ())
    k = PresentedModule.residue_field(S)
    _, betti = minimal_free_resolution(k, 4)
    assert betti == (1, 3, 3, 1, 0)


def test_residue_field_over_dual_numbers_is_periodic():
    R = QuotientRing(2, ("x",), ("x^2",))
    k = PresentedModule.residue_field(R)
    complex_, betti = minimal_free_resolution(k, 5)
    assert betti == (1, 1, 1, 1, 1, 1)
    for i in range(1, 6):
        cols = complex_.map_columns(i)
        assert len(cols) == 1
        assert str(cols[0].entry(0)) == "x"


def test_resolution_is_minimal_no_unit_entries():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    k = PresentedModule.residue_field(R)
    complex_, _ = minimal_free_resolution(k, 4)
    for i in range(1, 5):
        for col in complex_.map_columns(i):
            for _, poly in col.entries():
                assert poly.homogeneous_degree() != 0


def test_resolution_degrees_rise():
    S = QuotientRing(3, ("x", "y"), ())
    m = PresentedModule.cyclic(S, ["x^2", "x*y^2"])
    complex_, betti = minimal_free_resolution(m, 3)
    assert betti[:3] == (1, 2, 1)
    assert complex_.degrees[1] == [2, 3]
    assert complex_.degrees[2] == [4]


@pytest.mark.parametrize("ideal,expected", [
    ((), 0),
    (("x",), 1),
    (("x^2", "x*y"), 2),
])
def test_projective_dimension_over_regular_ring(ideal, expected):
    S = QuotientRing(2, ("x", "y"), ())
    m = (PresentedModule.free(S, 1) if not ideal
         else PresentedModule.cyclic(S, list(ideal)))
    assert projective_dimension_oracle(m) == expected


def test_projective_dimension_infinite_for_residue_field():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    k = PresentedModule.residue_field(R)
    assert projective_dimension_oracle(k) == math.inf


def test_projective_dimension_of_nzd_quotient_is_one():
    R = QuotientRing(2, ("x", "y"), ("x*y",))
    m = PresentedModule.cyclic(R, ["x + y"])
    assert projective_dimension_oracle(m) == 1


def test_zero_module_has_no_projective_dimension():
    S = QuotientRing(2, ("x",), ())
    zero = PresentedModule.cyclic(S, ["1"])
    assert zero.is_zero()
    with pytest.raises(ValueError):
        projective_dimension_oracle(zero)


def test_minimize_presentation_removes_unit_pivots():
    S = QuotientRing(2, ("x", "y"), ())
    base = S.base_ring
    # second generator equals x * first, written with a unit pivot
    rels = (vec(base, 2, {0: "x", 1: "1"}),)
    m = PresentedModule(S, 2, (0, 1), rels)
    small = minimize_presentation(m)
    assert small.gens == 1
    assert not small.relations
    assert small.dim_k() == m.dim_k()


def test_kernel_of_multiplication_by_x_on_dual_numbers():
    R = QuotientRing(2, ("x",), ("x^2",))
    base = R.base_ring
    cols = [vec(base, 1, {0: "x"})]
    ker = kernel_generators(cols, 1, 1, R)
    gb_leads = {str(v.entry(0)) for v in ker}
    assert "x" in gb_leads


def test_homology_of_explicit_koszul_complex():
    S = QuotientRing(2, ("x", "y"), ())
    base = S.base_ring
    d1 = [vec(base, 1, {0: "x"}), vec(base, 1, {0: "y"})]
    d2 = [vec(base, 2, {0: "y", 1: "x"})]
    complex_ = FreeComplex(S, 0, 2, {0: 1, 1: 2, 2: 1}, {1: d1, 2: d2})
    vanish1, dim1 = homology_at(complex_, 1, want_dim=True)
    assert vanish1 and dim1 == 0
    vanish2, dim2 = homology_at(complex_, 2, want_dim=True)
    assert vanish2 and dim2 == 0


def test_complex_validation_rejects_non_composing_maps():
    S = QuotientRing(2, ("x", "y"), ())
    base = S.base_ring
    d1 = [vec(base, 1, {0: "x"})]
    d2 = [vec(base, 1, {0: "y"})]   # x*y != 0 in S
    with pytest.raises(ValueError):
        FreeComplex(S, 0, 2, {0: 1, 1: 1, 2: 1}, {1: d1, 2: d2})


EXT_CASES = [
    # (ring ideal, target of Ext(k, -) description, i, expected dim)
    ("self", 0, 0),   # Hom(k, S) = 0 over S = F_2[x]
    ("self", 1, 1),   # Ext^1(k, S) = k over F_2[x]
    ("field", 0, 1),  # Hom(k, k) = k
    ("field", 1, 1),  # Ext^1(k, k) = k over F_2[x]
]


@pytest.mark.parametrize("target,i,expected", EXT_CASES)
def test_ext_against_ring_and_field_one_variable(target, i, expected):
    S = QuotientRing(2, ("x",), ())
    k = PresentedModule.residue_field(S)
    m = PresentedModule.free(S, 1) if target == "self" else k
    vanishes, dim = ext_module(k, m, i, want_dim=True)
    assert dim == expected
    assert vanishes == (expected == 0)


def test_ext_of_field_with_itself_two_variables():
    S = QuotientRing(2, ("x", "y"), ())
    k = PresentedModule.residue_field(S)
    dims = [ext_module(k, k, i, want_dim=True)[1] for i in range(3)]
    assert dims == [1, 2, 1]


def test_finite_length_dual_preserves_length_and_doubles_back():
    R = QuotientRing(2, ("x", "y"), ("x^2", "x*y", "y^2"))
    m = PresentedModule.cyclic(R, ["x"])          # length 2: 1, y
    dual = finite_length_dual(m)
    assert dual.dim_k() == m.dim_k() == 2
    double = finite_length_dual(dual)
    assert double.dim_k() == 2


def test_finite_length_structure_records_actions():
    R = QuotientRing(2, ("x",), ("x^2",))
    m = PresentedModule.free(R, 1)
    fl = finite_length_structure(m)
    assert len(fl.basis) == 2
    # multiplication by x is nilpotent of order two
    mat = fl.action[0]
    square = [[sum(mat[r][k_] * mat[k_][c] for k_ in range(2)) % 2
               for c in range(2)] for r in range(2)]
    assert all(v == 0 for row in square for v in row)


def test_dual_of_residue_field_is_residue_field():
    R = QuotientRing(3, ("x", "y"), ("x^2", "x*y", "y^2"))
    k = PresentedModule.residue_field(R)
    dual = finite_length_dual(k)
    assert dual.dim_k() == 1
