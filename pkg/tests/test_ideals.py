import pytest

from fibercas import Ideal, PolyRing, eliminate, intersect, krull_dim, quotient, saturate
from fibercas.ideals import EMPTY, codim, minors_ideal, radical_member, same_radical


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"))


def test_eliminate_twisted_cubic():
    R = PolyRing(("t", "x", "y", "z"))
    I = Ideal.from_strings(R, ["x - t", "y - t^2", "z - t^3"])
    E = eliminate(I, ["t"])
    assert E.ring.variables == ("x", "y", "z")
    assert E == Ideal.from_strings(E.ring, ["y - x^2", "z - x*y", "x*z - y^2"])


def test_intersect_and_quotient(R):
    I = Ideal.from_strings(R, ["x"])
    J = Ideal.from_strings(R, ["y"])
    assert intersect(I, J) == Ideal.from_strings(R, ["x*y"])
    K = Ideal.from_strings(R, ["x^2", "x*y"])
    assert quotient(K, Ideal.from_strings(R, ["x"])) == Ideal.from_strings(R, ["x", "y"])
    assert quotient(K, Ideal.from_strings(R, ["y"])) == I


def test_saturate_removes_embedded_component(R):
    # (x^2, xy) = (x) ∩ (x^2, y); the embedded prime is (x, y), not the maximal ideal
    I = Ideal.from_strings(R, ["x^2", "x*y"])
    S, k = saturate(I, Ideal.from_strings(R, ["x", "y"]))
    assert S == Ideal.from_strings(R, ["x"])
    assert k == 1
    assert saturate(I, Ideal.from_strings(R, ["x", "y", "z"]))[0] == I
    S2, k2 = saturate(Ideal.from_strings(R, ["x^3*y"]), Ideal.from_strings(R, ["x"]))
    assert S2 == Ideal.from_strings(R, ["y"]) and k2 == 3


@pytest.mark.parametrize("gens, d", [
    (["x"], 2), (["x", "y"], 1), (["x*y", "x*z"], 2), (["x^2 - y*z", "x*y"], 1),
    (["x", "y", "z"], 0), (["1"], EMPTY), ([], 3),
])
def test_krull_dim(R, gens, d):
    I = Ideal.from_strings(R, gens)
    assert krull_dim(I) == d


def test_codim_and_minors(R):
    M = [[R("x"), R("y"), R("z")], [R("y"), R("z"), R("x")]]
    I = minors_ideal(M, 2, R)
    assert len(I.generators) == 3
    assert codim(Ideal.from_strings(R, ["x", "y"])) == 2


def test_radical(R):
    I = Ideal.from_strings(R, ["x^3", "y^2"])
    assert radical_member(R("x + y"), I)
    assert not radical_member(R("z"), I)
    assert same_radical(I, Ideal.from_strings(R, ["x", "y"]))


def test_equality_is_by_reduced_basis(R):
    assert Ideal.from_strings(R, ["x + y", "x - y"]) == Ideal.from_strings(R, ["x", "y"])
    assert Ideal.from_strings(R, ["x"]) != Ideal.from_strings(R, ["x^2"])
