import pytest

from fibercas import Ideal, PolyRing, chart, rees_ideal, saturate, strict_transform, symmetric_algebra_ideal
from fibercas.blowup import chart_of_ideal, drop_redundant, exceptional_power_identity, simplify_presentation
from fibercas.ideals import intersect
from fibercas.models import (
    chart_u0_model, curvilinear_center, curvilinear_fiber_equations, exceptional_ideal, fiber_equations,
    noncurvilinear_center, quadric_cone, quadric_in_fiber,
)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_symmetric_algebra_is_fiber_ideal(n):
    B = symmetric_algebra_ideal(noncurvilinear_center(n))
    assert B.total_ring == fiber_equations(n).ring
    assert B.sym_ideal == fiber_equations(n)


@pytest.mark.parametrize("n, ell", [(2, 2), (3, 2), (3, 3), (4, 2)])
def test_curvilinear_symmetric_algebra(n, ell):
    B = symmetric_algebra_ideal(curvilinear_center(n, ell), start=1)
    assert B.sym_ideal == curvilinear_fiber_equations(n, ell)


@pytest.mark.parametrize("n", [2, 3])
def test_rees_is_saturated_symmetric_algebra(n):
    F = fiber_equations(n)
    R = rees_ideal(noncurvilinear_center(n))
    S, _ = saturate(F, exceptional_ideal(n))
    assert R == S
    assert R.contains(R.ring("u0*u2 - u1^2"))
    assert not F.contains(F.ring("u0*u2 - u1^2"))
    # the symmetric algebra splits into the blow-up and the projective-space piece
    assert intersect(R, exceptional_ideal(n)) == F
    assert R.issubset(quadric_in_fiber(n))


def test_chart_u3_of_n3_is_ring_A_shape():
    B = symmetric_algebra_ideal(noncurvilinear_center(3))
    C = chart(B, "sym", 3)
    assert C.u_name == "u3"
    assert len(C.core.ideal.generators) == 5
    assert C.cell_dim == 0


def test_chart_u0_simplifies_to_model():
    B = symmetric_algebra_ideal(noncurvilinear_center(2))
    C = chart(B, "sym", 0, eliminable=())
    assert C.core.ideal == chart_u0_model().change_ring(C.core.ring)


def test_simplify_presentation_eliminates_linear_variables():
    R = PolyRing(("x", "y", "z"))
    P = simplify_presentation(Ideal.from_strings(R, ["y - x^2", "z - x*y"]))
    assert P.ring.variables == ("x",) and not P.ideal.generators
    assert [v for v, _ in P.eliminated] == ["y", "z"]
    assert P.free_variables() == ("x",)


def test_drop_redundant():
    R = PolyRing(("x", "y"))
    I = drop_redundant(Ideal.from_strings(R, ["x", "y", "x + y", "x^2"]))
    assert len(I.generators) == 2


def test_chart_of_ideal():
    R = PolyRing(("x", "u", "v"))
    C = chart_of_ideal(Ideal.from_strings(R, ["x*u - v"]), "u")
    # x comes first in ring order and x - v is linear in it
    assert C.simplified.ring.variables == ("v",)
    assert [v for v, _ in C.simplified.eliminated] == ["x"]


def test_strict_transform_of_cone():
    f = quadric_cone(3).generators[0]
    st = strict_transform(f, 0)
    assert st.chart_var == "x1" and st.exceptional_power == 2
    assert st.ideal.generators[0] == st.ring("1 - v2*v3")
    assert exceptional_power_identity(st)
    st2 = strict_transform(f, "x2")
    assert st2.ideal.generators[0] == st2.ring("v1^2 - v3")
    assert not st2.flagged


def test_strict_transform_flags_non_vanishing():
    R = PolyRing(("x1", "x2"))
    st = strict_transform(R("x1 - 1"), 0)
    assert st.flagged and st.exceptional_power == 0
    with pytest.raises(IndexError):
        strict_transform(R("x1"), 5)


def test_clashing_u_names():
    with pytest.raises(ValueError):
        symmetric_algebra_ideal(noncurvilinear_center(2), u_names=("x1", "a", "b"))


@pytest.mark.parametrize("gens", [["x", "y"], ["x^2"], ["x", "y^2", "z^3"]])
def test_linear_type_centers_have_sym_equal_rees(gens):
    R = PolyRing(("x", "y", "z"))
    center = Ideal.from_strings(R, gens)
    B = symmetric_algebra_ideal(center)
    assert rees_ideal(center) == B.sym_ideal
