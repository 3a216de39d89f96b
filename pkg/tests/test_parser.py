import pytest

from fibercas.models import ring_A
from fibercas.parser import ParseError, parse_file, parse_polynomial, parse_source

from conftest import FIXTURES


def test_minimal_document():
    doc = parse_source("ring R = x y; ideal I(R) = x^2 - y;")
    assert len(doc.rings) == 1 and len(doc.ideals) == 1
    I = doc.ideal("I")
    assert I.generators[0] == I.ring("x^2 - y")


def test_ring_A_input():
    text = ("ring R = x1 x2 x3 u0 u1 u2; ideal A(R) = x1*u1 - x2*u0, x1*u2 - x2*u1, "
            "x1^2 - x3*u0, x1*x2 - x3*u1, x2^2 - x3*u2;")
    assert parse_source(text).ideal("A") == ring_A()
    assert parse_file(FIXTURES / "ringA.ca").ideal() == ring_A()


@pytest.mark.parametrize("text, message, line, col", [
    ("ideal I(S) = x;", "unknown ring S", 1, 9),
    ("ring R = x y;\nideal I(R) = x + z;", "unknown variable z", 2, 18),
    ("ring R = x;\nring R = y;", "duplicate ring R", 2, 6),
    ("ring R = x x;", "duplicate variable x", 1, 12),
    ("ring R = x; ideal I(R) = x; ideal I(R) = x^2;", "duplicate ideal I", 1, 35),
    ("ring R = x; ideal I(R) = 1/0*x;", "zero denominator", 1, 28),
    ("ring R = x y weights 1;", "expected 2 weights, found 1", 1, 22),
    ("ring R = x; ideal I(R) = x $ 1;", "unexpected character '$'", 1, 28),
    ("ring R = x", "expected ';', found 'end of input'", 1, 11),
])
def test_errors_have_positions(text, message, line, col):
    with pytest.raises(ParseError) as info:
        parse_source(text)
    e = info.value
    assert e.message == message
    assert (e.line, e.col) == (line, col)
    assert str(e) == f"line {line}, col {col}: {message}"


def test_comments_weights_and_coefficients():
    doc = parse_source("# header\nring R = x y weights 1 2; # trailing\nideal I(R) = -3/4*x^2 + 2 y, 5;")
    I = doc.ideal()
    assert I.ring.weights == (1, 2)
    assert I.generators[0] == parse_polynomial("-3/4*x^2 + 2*y", I.ring)
    assert I.generators[1].is_constant()


def test_print_parse_round_trip_on_fixtures():
    for path in sorted(FIXTURES.glob("*.ca")):
        doc = parse_file(path)
        assert parse_source(str(doc)) == doc, path.name


def test_fixtures_match_models():
    from fibercas import models
    assert parse_file(FIXTURES / "fiber_equations_n4.ca").ideal("F") == models.fiber_equations(4)
    assert parse_file(FIXTURES / "curvilinear_fiber_n3_l2.ca").ideal() == models.curvilinear_fiber_equations(3, 2)
    assert parse_file(FIXTURES / "quadric_cone_n5.ca").ideal() == models.quadric_cone(5)
