import os
import sys
from pathlib import Path

from hypothesis import HealthCheck, settings, strategies as st

from fibercas import Ideal, PolyRing

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"

settings.register_profile(
    "suite",
    max_examples=200,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "suite"))

VARS = ("a", "b", "c", "d")


def ring_of(nvars: int) -> PolyRing:
    return PolyRing(VARS[:nvars])


@st.composite
def _bounded(draw, nvars, max_deg):
    left, out = max_deg, []
    for _ in range(nvars):
        a = draw(st.integers(0, left))
        out.append(a)
        left -= a
    # spread the budget over all positions, not just the first ones
    return tuple(draw(st.permutations(out)))


def _exps(nvars, max_deg, exact=None):
    if exact is None:
        return _bounded(nvars, max_deg)
    # compositions of ``exact`` into nvars parts
    return st.lists(st.integers(0, exact), min_size=nvars - 1, max_size=nvars - 1).map(
        lambda cuts: _composition(sorted(cuts), exact))


def _composition(cuts, total):
    bounds = [0] + cuts + [total]
    return tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))


@st.composite
def polynomials(draw, ring, max_deg=3, max_terms=3, homogeneous_degree=None):
    n = ring.nvars
    k = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(k):
        e = draw(_exps(n, max_deg, homogeneous_degree))
        terms[e] = draw(st.sampled_from((-3, -2, -1, 1, 2, 3)))
    f = ring.zero()
    for e, c in terms.items():
        f = f + ring.monomial(e, c)
    return f


@st.composite
def ideals(draw, min_vars=1, max_vars=4, max_gens=3, max_deg=3, max_terms=3, homogeneous=False, nvars=None,
           min_gens=1):
    n = nvars if nvars is not None else draw(st.integers(min_vars, max_vars))
    R = ring_of(n)
    gens = []
    for _ in range(draw(st.integers(min_gens, max_gens))):
        if homogeneous:
            d = draw(st.integers(1, max_deg))
            g = draw(polynomials(R, max_deg, max_terms, homogeneous_degree=d))
        else:
            g = draw(polynomials(R, max_deg, max_terms))
        if g:
            gens.append(g)
    if not gens:
        gens = [R.var(VARS[0])]
    return Ideal(R, gens)


@st.composite
def ideal_pairs(draw, max_vars=3, **kw):
    n = draw(st.integers(1, max_vars))
    return draw(ideals(nvars=n, **kw)), draw(ideals(nvars=n, **kw))


@st.composite
def monomial_ideals(draw, max_vars=4, max_gens=4, max_deg=3, artinian=False, nvars=None):
    n = nvars if nvars is not None else draw(st.integers(1, max_vars))
    R = ring_of(n)
    gens = []
    for _ in range(draw(st.integers(1, max_gens))):
        e = draw(_exps(n, max_deg))
        gens.append(e if any(e) else tuple(1 if i == 0 else 0 for i in range(n)))
    if artinian:
        for i in range(n):
            p = draw(st.integers(1, max_deg + 1))
            gens.append(tuple(p if j == i else 0 for j in range(n)))
    return Ideal(R, [R.monomial(e) for e in gens])


def pytest_report_header(config):
    return f"python {sys.version.split()[0]}; hypothesis profile {settings.default.max_examples} examples"


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = [mod.RESULTS[k] for k in sorted(mod.RESULTS)] if mod is not None else []
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
