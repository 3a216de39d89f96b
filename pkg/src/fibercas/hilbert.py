"""Hilbert series, colengths and the binomial bookkeeping for length-3 fibers.

Two independent routes exist for colengths of monomial ideals: the pivot
recursion on the series numerator, and a direct degree-by-degree walk over
the staircase of standard monomials.  They are compared in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

from .algebra import DEFAULT_ORDER, MonomialOrder, PolyRing
from .ideals import Ideal

INFINITE = math.inf


# --------------------------------------------------------------------------
# integer polynomials in t (coefficient lists, index = degree)


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _padd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _pmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _one_minus(d: int) -> list[int]:
    p = [0] * (d + 1)
    p[0] += 1
    p[d] -= 1
    return p


def _pdivmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    """Exact division by a polynomial with leading coefficient +-1."""
    a = list(a)
    b = _trim(list(b))
    lead = b[-1]
    if len(a) < len(b):
        return [0], _trim(a)
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1] // lead
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    return _trim(q), _trim(a[: len(b) - 1] or [0])


@dataclass(frozen=True)
class HilbertSeries:
    """``numerator(t) / prod(1 - t^w)`` over ``denominator_weights``."""

    numerator: tuple[int, ...]
    denominator_weights: tuple[int, ...] = field(default=())

    def denominator(self) -> list[int]:
        d = [1]
        for w in self.denominator_weights:
            d = _pmul(d, _one_minus(w))
        return d

    def coefficients(self, upto: int) -> list[int]:
        """Values of the Hilbert function in degrees ``0..upto``."""
        out = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            if i <= upto:
                out[i] = c
        for w in self.denominator_weights:
            for d in range(w, upto + 1):
                out[d] += out[d - w]
        return out

    def value(self, degree: int) -> int:
        return self.coefficients(degree)[degree]

    def same_as(self, other: HilbertSeries) -> bool:
        return _pmul(self.numerator, other.denominator()) == _pmul(other.numerator, self.denominator())

    def polynomial_part(self) -> list[int] | None:
        """The series as a polynomial if the quotient is artinian, else ``None``."""
        q, r = _pdivmod(self.numerator, self.denominator())
        return q if r == [0] else None

    def total_length(self):
        p = self.polynomial_part()
        return INFINITE if p is None else sum(p)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.numerator):
            if c:
                mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
                if mono == "1":
                    terms.append(str(c))
                else:
                    terms.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        num = " + ".join(terms).replace("+ -", "- ") or "0"
        den = "".join(f"(1-t^{w})" if w > 1 else "(1-t)" for w in self.denominator_weights)
        return f"({num}) / {den}" if den else num


# --------------------------------------------------------------------------
# monomial ideals


def minimalize(monomials: Iterable[tuple]) -> list[tuple]:
    """Minimal generators of a monomial ideal, sorted."""
    ms = sorted(set(monomials), key=lambda m: (sum(m), m))
    out: list[tuple] = []
    for m in ms:
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return sorted(out)


def _numerator(gens: tuple, weights: tuple, memo: dict) -> list[int]:
    got = memo.get(gens)
    if got is not None:
        return got
    if not gens:
        return [1]
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    counts = [0] * len(weights)
    for s in supports:
        for i in s:
            counts[i] += 1
    if max(counts) <= 1:
        out = [1]
        for g in gens:
            out = _pmul(out, _one_minus(sum(a * b for a, b in zip(weights, g))))
        memo[gens] = out
        return out
    # most frequent variable, at its smallest positive exponent: the pivot
    # then lies outside the ideal and strictly shrinks some generator
    i = max(range(len(weights)), key=lambda k: (counts[k], -k))
    a = min(g[i] for g in gens if g[i])
    pivot = tuple(a if k == i else 0 for k in range(len(weights)))
    left = _numerator(tuple(minimalize(gens + (pivot,))), weights, memo)
    colon = tuple(minimalize(tuple(max(e - p, 0) for e, p in zip(g, pivot)) for g in gens))
    right = _numerator(colon, weights, memo)
    out = _padd(left, [0] * (weights[i] * a) + right)
    memo[gens] = out
    return out


def series_of_monomials(monomials: Iterable[tuple], weights: Sequence[int]) -> HilbertSeries:
    gens = tuple(minimalize(monomials))
    return HilbertSeries(tuple(_numerator(gens, tuple(weights), {})), tuple(weights))


def hilbert_series_monomial(M: Ideal) -> HilbertSeries:
    if not M.is_monomial():
        raise ValueError("hilbert_series_monomial needs monomial generators")
    return series_of_monomials((next(iter(g.terms)) for g in M.generators), M.ring.weights)


def hilbert_series(I: Ideal, order: MonomialOrder = DEFAULT_ORDER) -> HilbertSeries:
    """Series of ``R/I`` through the initial ideal (weighted-homogeneous ``I`` only)."""
    if not I.is_homogeneous():
        raise ValueError("hilbert series requires weighted-homogeneous generators")
    return series_of_monomials(I.initial_monomials(order), I.ring.weights)


# --------------------------------------------------------------------------
# staircase enumeration


def is_artinian(monomials: Sequence[tuple], nvars: int) -> bool:
    pure = set()
    for m in monomials:
        s = [i for i, e in enumerate(m) if e]
        if len(s) == 1:
            pure.add(s[0])
        elif not s:
            return True
    return len(pure) == nvars


def staircase(monomials: Iterable[tuple], nvars: int) -> list[set]:
    """Standard monomials of an artinian monomial ideal, grouped by total degree.

    A degree-``d`` monomial is standard iff it is not itself a listed
    generator and each of its degree-``d-1`` divisors is standard.  Any
    generating set works, minimal or not.
    """
    monomials = list(monomials)
    if not is_artinian(monomials, nvars):
        raise ValueError("monomial ideal has infinite colength")
    by_degree: dict[int, set] = {}
    for m in monomials:
        by_degree.setdefault(sum(m), set()).add(tuple(m))
    zero = (0,) * nvars
    if zero in by_degree.get(0, ()):
        return []
    layers = [{zero}]
    d = 0
    while layers[-1]:
        d += 1
        prev, gens_d = layers[-1], by_degree.get(d, set())
        layer = set()
        for s in prev:
            for i in range(nvars):
                m = s[:i] + (s[i] + 1,) + s[i + 1:]
                if m in layer or m in gens_d:
                    continue
                ok = True
                for k in range(nvars):
                    if m[k] and k != i:
                        if m[:k] + (m[k] - 1,) + m[k + 1:] not in prev:
                            ok = False
                            break
                if ok:
                    layer.add(m)
        layers.append(layer)
    return layers[:-1]


def staircase_colength(monomials: Iterable[tuple], nvars: int) -> int:
    return sum(len(layer) for layer in staircase(monomials, nvars))


def colength(I: Ideal, order: MonomialOrder = DEFAULT_ORDER):
    """``dim_k R/I``, or ``INFINITE``."""
    if I.is_unit():
        return 0
    lms = I.initial_monomials(order)
    if not is_artinian(lms, I.ring.nvars):
        return INFINITE
    return staircase_colength(lms, I.ring.nvars)


def _monomial_power_sets(gens: list[tuple], lmax: int) -> Iterable[tuple[int, set]]:
    current = {(0,) * len(gens[0])}
    for ell in range(1, lmax + 1):
        current = {tuple(a + b for a, b in zip(p, g)) for p in current for g in gens}
        yield ell, current


def power_colength_profile(J: Ideal, lmax: int) -> list[int]:
    """``[len R/J, len R/J^2, ..., len R/J^lmax]``."""
    n = J.ring.nvars
    out = []
    if J.is_monomial():
        gens = [next(iter(g.terms)) for g in J.generators]
        for ell, power in _monomial_power_sets(gens, lmax):
            if not is_artinian(power, n):
                raise ValueError(f"J^{ell} has infinite colength")
            out.append(staircase_colength(power, n))
        return out
    for ell in range(1, lmax + 1):
        c = colength(J.power(ell))
        if c == INFINITE:
            raise ValueError(f"J^{ell} has infinite colength")
        out.append(c)
    return out


# --------------------------------------------------------------------------
# binomial identities


def closed_form_colength(n: int, ell: int) -> int:
    """``3*C(n+l-1, n) + C(n+l-2, n)``."""
    if n < 1 or ell < 1:
        raise ValueError("need n >= 1 and l >= 1")
    return 3 * comb(n + ell - 1, n) + comb(n + ell - 2, n)


def quadric_h0_defect(n: int, ell: int) -> int:
    """``h0(P^n, O(l)) - h0(Q, O_Q(l))`` for a quadric ``Q``; zero below ``l = 2``."""
    if ell < 2:
        return 0
    return comb(n + ell - 2, n)


def quadric_defect_oracle(n: int, ell: int) -> int:
    """Same defect from the Hilbert function of ``k[u0..un]/(u0*u2 - u1^2)``."""
    ring = PolyRing(tuple(f"u{i}" for i in range(n + 1)))
    Q = Ideal(ring, [ring("u0*u2 - u1^2")])
    return comb(n + ell, n) - hilbert_series(Q).value(ell)


def hockey_stick(n: int, ell: int) -> tuple[int, int]:
    """``(sum_{i<l} C(n-1+i, n-1), C(n+l-1, n))``."""
    return sum(comb(n - 1 + i, n - 1) for i in range(ell)), comb(n + ell - 1, n)


@dataclass(frozen=True)
class IdentityRow:
    ell: int
    hockey: tuple[int, int]
    cancellation: tuple[int, int]
    profile: int
    telescoped: int
    closed_form: int
    defect: tuple[int, int]

    @property
    def ok(self) -> bool:
        return (
            self.hockey[0] == self.hockey[1]
            and self.cancellation[0] == self.cancellation[1]
            and self.profile == self.closed_form == self.telescoped
            and self.defect[0] == self.defect[1]
        )


@dataclass(frozen=True)
class IdentityReport:
    n: int
    rows: tuple[IdentityRow, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def smallest_valid_ell(self) -> int | None:
        """Least ``l`` from which every tested row holds."""
        best = None
        for r in reversed(self.rows):
            if not r.ok:
                break
            best = r.ell
        return best


def fiber_hilbert_identity(n: int, ells: Iterable[int], profile: Sequence[int] | None = None) -> IdentityReport:
    """Check the distinct-point and non-curvilinear Hilbert polynomials agree.

    With ``h0(X, L^l)`` cancelled, the distinct-point side contributes
    ``3 * sum_{i<l} C(n-1+i, n-1)`` and the other side
    ``len(R/J^l) - defect(l)``.  ``profile`` may carry precomputed colengths
    ``len(R/J^l)`` for ``l = 1..``; otherwise they are enumerated here.
    """
    from .models import power_ideal_J

    ells = sorted(set(ells))
    if profile is None:
        profile = power_colength_profile(power_ideal_J(n), max(ells)) if ells else []
    rows = []
    for ell in ells:
        lengths = [0] + list(profile[:ell])
        telescoped = sum(lengths[i + 1] - lengths[i] for i in range(ell))
        hs = hockey_stick(n, ell)
        cf = closed_form_colength(n, ell)
        defect = quadric_h0_defect(n, ell)
        rows.append(
            IdentityRow(
                ell=ell,
                hockey=hs,
                cancellation=(3 * hs[0], profile[ell - 1] - defect),
                profile=profile[ell - 1],
                telescoped=telescoped,
                closed_form=cf,
                defect=(defect, quadric_defect_oracle(n, ell)),
            )
        )
    return IdentityReport(n, tuple(rows))
