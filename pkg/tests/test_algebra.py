import pytest

from fibercas import GREVLEX, LEX, QQ, WGREVLEX, PolyRing, block_order, parse_order
from fibercas.algebra import RingMismatchError, compare


@pytest.fixture
def R():
    return PolyRing(("x", "y", "z"))


def test_arithmetic(R):
    x, y = R.var("x"), R.var("y")
    f = (x + y) ** 3
    assert f == R("x^3 + 3*x^2*y + 3*x*y^2 + y^3")
    assert f - f == R.zero()
    assert (x * y) / 2 == R("1/2*x*y")
    assert 2 - x == R("2 - x")


def test_exact_rationals(R):
    f = R("1/3*x + 2/3*x")
    assert f == R.var("x")
    big = R(f"{10**40}*x")
    assert big.leading_coefficient() == QQ(10**40)


def test_ring_mismatch(R):
    S = PolyRing(("x", "y"))
    with pytest.raises(RingMismatchError):
        R.var("x") + S.var("x")


def test_orders():
    a, b = (2, 0, 0), (0, 1, 1)
    assert compare(LEX, a, b) == 1
    assert compare(GREVLEX, a, b) == 1
    # grevlex: x*z^2 < y^3 since the last variable breaks the tie against it
    assert compare(GREVLEX, (1, 0, 2), (0, 3, 0)) == -1
    assert compare(WGREVLEX, (1, 0, 0), (0, 1, 0), weights=(1, 2, 1)) == -1
    assert compare(block_order(1), (1, 0, 0), (0, 5, 5)) == 1
    assert str(parse_order("elim:2")) == "elim:2"
    with pytest.raises(ValueError):
        parse_order("deglex")


def test_diff_substitute_evaluate(R):
    f = R("x^2*y - 3*z")
    assert f.diff("x") == R("2*x*y")
    assert f.evaluate({"x": 2, "y": 1, "z": 1}) == 1
    S = PolyRing(("t",))
    t = S.var("t")
    assert f.substitute({"x": t, "y": t, "z": t ** 3}, S) == S("-2*t^3")


def test_weighted_degree():
    R = PolyRing(("x", "u"), (1, 2))
    assert R("x^2 - u").weighted_degree() == (True, 2)
    assert not R("x - u").is_homogeneous()


def test_to_string_orders(R):
    f = R("x + y^2")
    assert f.to_string(LEX) == "x + y^2"
    assert f.to_string(GREVLEX) == "y^2 + x"
