import pytest

from fibercas.scenarios import CapExceeded, ScenarioConfig, ScenarioReport, run_scenario


@pytest.mark.parametrize("sid, kw", [
    ("s1", {"n": 4}), ("s2", {"n": 4}), ("s3", {"n": 2}), ("s4", {"n": 2, "ell": 3}),
    ("s5", {"n": 4, "ell_max": 5}), ("s6", {}), ("s7", {"n": 5}),
])
def test_scenarios_pass(sid, kw):
    rep = run_scenario(sid, **kw)
    assert rep.scenario_id == sid
    assert rep.passed
    assert rep.checks and all(c.anchor for c in rep.checks)
    assert rep.timing_s is not None


def test_caps():
    with pytest.raises(CapExceeded):
        run_scenario("s1", n=7)
    with pytest.raises(CapExceeded):
        run_scenario("s5", n=3, ell_max=13)
    with pytest.raises(CapExceeded):
        run_scenario("s6", n=4)
    ScenarioConfig(long=True).check("n", 99, 6)


def test_unknown_scenario():
    with pytest.raises(KeyError):
        run_scenario("s8")


def test_informative_checks_do_not_fail_a_report():
    rep = ScenarioReport("s1", {})
    rep.add("real", "1 = 1", 1, 1)
    rep.add("info", "reported", "x", "y", informative=True)
    assert rep.passed
    rep.add("broken", "1 = 2", 1, 2)
    assert not rep.passed
    assert rep.checks[-1].expected == "1" and rep.checks[-1].actual == "2"


def test_values_are_stringified():
    rep = ScenarioReport("s1", {})
    c = rep.add("b", "anchor", True, None, passed=False)
    assert (c.expected, c.actual) == ("true", "none")


def test_s6_reports_type_three_resolution():
    rep = run_scenario("s6")
    betti = next(c for c in rep.checks if c.name == "Betti totals of B_n")
    assert betti.actual == "(1, 6, 8, 3)" and betti.informative
