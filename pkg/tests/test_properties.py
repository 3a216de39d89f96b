"""Randomized invariants over small ideals (at most 4 variables, degree at most 3)."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from hypothesis import given, strategies as st

from fibercas import GREVLEX, LEX, WGREVLEX, Ideal, block_order
from fibercas.algebra import mono_div, mono_divides, mono_lcm
from fibercas.groebner import normal_form
from fibercas.hilbert import hilbert_series, hilbert_series_monomial, staircase_colength
from fibercas.ideals import intersect, quotient
from fibercas.parser import IdealDecl, RingDecl, SourceDocument, parse_source
from fibercas.resolution import betti_table, compose, free_resolution
from fibercas.ringprops import regular_sequence_depth

from conftest import ideal_pairs, ideals, monomial_ideals, polynomials

ORDERS = [LEX, GREVLEX, WGREVLEX, block_order(1)]


def s_poly(f, g, order):
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lf, lg)
    R = f.ring
    return (R.monomial(mono_div(l, lf)) * f) / f.leading_coefficient(order) - \
           (R.monomial(mono_div(l, lg)) * g) / g.leading_coefficient(order)


# --------------------------------------------------------------------------
# Groebner bases


@given(ideals(), st.sampled_from(ORDERS))
def test_gb_idempotent_and_reduced(I, order):
    G = I.gb(order)
    again = Ideal(I.ring, list(G)).gb(order)
    assert again.elements == G.elements
    for g in I.generators:
        assert normal_form(g, G.elements, order).is_zero()
    lms = G.leading_monomials()
    for i, g in enumerate(G.elements):
        assert g.leading_coefficient(order) == 1
        for e in g.terms:
            assert not any(mono_divides(m, e) for j, m in enumerate(lms) if j != i)
    # Buchberger criterion, checked directly
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert normal_form(s_poly(G.elements[i], G.elements[j], order), G.elements, order).is_zero()


@given(st.data())
def test_membership_is_order_independent(data):
    I = data.draw(ideals(max_terms=2))
    R = I.ring
    f = R.zero()
    for g in I.generators:
        f = f + data.draw(polynomials(R, max_deg=2, max_terms=2)) * g
    r = data.draw(polynomials(R, max_deg=3, max_terms=2))
    assert all(Ideal(R, I.generators).gb(o).contains(f) for o in ORDERS)
    verdicts = {Ideal(R, I.generators).gb(o).contains(f + r) for o in ORDERS}
    assert len(verdicts) == 1


# --------------------------------------------------------------------------
# colon / intersection


@given(ideal_pairs(max_vars=3, max_gens=2, max_deg=2, max_terms=2))
def test_colon_intersection_dualities(pair):
    I, J = pair
    K = intersect(I, J)
    assert K.issubset(I) and K.issubset(J)
    assert (I * J).issubset(K)
    Q = quotient(I, J)
    assert I.issubset(Q)
    assert (Q * J).issubset(I)
    # (I ∩ J) : J = I : J
    assert quotient(K, J) == Q


@given(st.data())
def test_monomial_intersection_is_lcm_ideal(data):
    n = data.draw(st.integers(1, 4))
    I = data.draw(monomial_ideals(nvars=n))
    J = data.draw(monomial_ideals(nvars=n))
    lcms = [I.ring.monomial(mono_lcm(f.leading_monomial(), g.leading_monomial()))
            for f in I.generators for g in J.generators]
    assert intersect(I, J) == Ideal(I.ring, lcms)


# --------------------------------------------------------------------------
# Hilbert series


def _box_count(gens, n, bound):
    count = 0

    def walk(prefix):
        nonlocal count
        if len(prefix) == n:
            if not any(mono_divides(g, tuple(prefix)) for g in gens):
                count += 1
            return
        for a in range(bound + 1):
            walk(prefix + [a])

    walk([])
    return count


@given(monomial_ideals(artinian=True))
def test_hilbert_series_matches_staircase(M):
    n = M.ring.nvars
    gens = [g.leading_monomial() for g in M.generators]
    H = hilbert_series_monomial(M)
    length = staircase_colength(gens, n)
    assert H.total_length() == length
    # every standard monomial of an artinian ideal with pure powers <= 4 lies in the box [0,3]^n
    assert _box_count(gens, n, 3) == length


def _rank(rows):
    rows = [dict(r) for r in rows if r]
    rank = 0
    while rows:
        pivot = rows.pop()
        if not pivot:
            continue
        k, c = next(iter(pivot.items()))
        rank += 1
        nxt = []
        for r in rows:
            if k in r:
                f = r[k] / c
                r = {m: r.get(m, 0) - f * pivot.get(m, 0) for m in set(r) | set(pivot)}
                r = {m: v for m, v in r.items() if v}
            if r:
                nxt.append(r)
        rows = nxt
    return rank


def _hf_by_linear_algebra(I, d):
    """dim (R/I)_d from the rank of the span of m*g with deg m + deg g = d."""
    n = I.ring.nvars
    rows = []
    for g in I.generators:
        e = d - g.total_degree()
        if e < 0:
            continue
        for combo in combinations_with_replacement(range(n), e):
            m = [0] * n
            for i in combo:
                m[i] += 1
            p = I.ring.monomial(tuple(m)) * g
            rows.append({k: Fraction(int(c.numerator), int(c.denominator)) for k, c in p.terms.items()})
    return comb(n + d - 1, n - 1) - _rank(rows)


@given(ideals(max_gens=3, max_deg=3, max_terms=3, homogeneous=True))
def test_hilbert_function_by_linear_algebra(I):
    H = hilbert_series(I)
    for d in range(5):
        assert H.value(d) == _hf_by_linear_algebra(I, d)
    # lex and grevlex initial ideals give the same series
    assert hilbert_series(I, LEX).same_as(H)


# --------------------------------------------------------------------------
# resolutions


@given(ideals(min_vars=2, min_gens=2, max_gens=3, max_deg=3, max_terms=2, homogeneous=True))
def test_resolution_is_minimal_complex(I):
    res = free_resolution(I)
    assert Ideal(I.ring, [p for p in res[0].matrix[0] if p]) == I
    for a, b in zip(res, res[1:]):
        assert all(p.is_zero() for row in compose(a, b) for p in row)
    assert all(step.is_minimal() for step in res)
    B = betti_table(res)
    num = list(hilbert_series(I).numerator)
    euler = B.euler_numerator()
    width = max(len(num), len(euler))
    assert num + [0] * (width - len(num)) == euler + [0] * (width - len(euler))


@given(ideals(min_vars=2, min_gens=2, max_gens=3, max_deg=3, max_terms=2, homogeneous=True), st.integers(0, 2**32))
def test_auslander_buchsbaum(I, seed):
    if I.is_unit():
        return
    pd = len(free_resolution(I))
    assert pd + regular_sequence_depth(I, random.Random(seed)) == I.ring.nvars


# --------------------------------------------------------------------------
# parser


@given(ideals(max_gens=3, max_terms=3))
def test_parser_round_trip(I):
    doc = SourceDocument()
    doc.rings["R"] = RingDecl("R", I.ring)
    doc.ideals["I"] = IdealDecl("I", "R", tuple(I.generators))
    again = parse_source(str(doc))
    assert again == doc
    assert str(again) == str(doc)
