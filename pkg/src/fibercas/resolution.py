"""Syzygies, minimal graded free resolutions and Betti tables.

Resolutions of ``R/I`` are built one kernel at a time: the syzygies of the
current columns are read off a position-over-term Groebner basis of the
extended vectors ``(h_j, e_j)``, then cut down to a minimal homogeneous
generating set degree by degree.  Every map of the result therefore has all
entries in the homogeneous maximal ideal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .algebra import DEFAULT_ORDER, QQ, MonomialOrder, Polynomial
from .groebner import (
    FreeModuleElement,
    _KeyCache,
    _monic,
    groebner_vecs,
    module_groebner,
    module_normal_form,
    term_key_function,
)
from .ideals import Ideal


class NotGradedError(ValueError):
    """Raised when a graded construction receives inhomogeneous input."""


@dataclass(frozen=True)
class ResolutionStep:
    """Map ``F_i -> F_{i-1}``; ``matrix[r][c]`` is row ``r`` of column ``c``."""

    matrix: tuple[tuple[Polynomial, ...], ...]
    source_degrees: tuple[int, ...]
    target_degrees: tuple[int, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target_degrees), len(self.source_degrees)

    def column(self, c: int) -> FreeModuleElement:
        return FreeModuleElement(tuple(row[c] for row in self.matrix))

    def is_minimal(self) -> bool:
        return all(not (a and a.is_constant()) for row in self.matrix for a in row)


@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``beta[(i, j)]`` of a minimal resolution of ``R/I``."""

    entries: dict = field(default_factory=dict)

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(i for i, _ in self.entries)
        return tuple(sum(v for (i, _), v in self.entries.items() if i == k) for k in range(top + 1))

    @property
    def pd(self) -> int:
        return len(self.totals()) - 1

    def euler_numerator(self) -> list[int]:
        """Coefficients of ``sum (-1)^i beta_ij t^j``."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def __str__(self):
        if not self.entries:
            return "(empty)"
        pd = self.pd
        rows = sorted({j - i for i, j in self.entries})
        width = max(len(str(v)) for v in self.entries.values()) + 1
        lines = ["       " + "".join(f"{i:>{width}}" for i in range(pd + 1))]
        lines.append("total: " + "".join(f"{t:>{width}}" for t in self.totals()))
        for r in rows:
            cells = []
            for i in range(pd + 1):
                v = self.entries.get((i, i + r), 0)
                cells.append(f"{(v if v else '.'):>{width}}")
            lines.append(f"{r:>5}: " + "".join(cells))
        return "\n".join(lines)


# --------------------------------------------------------------------------
# helpers


def _as_module(gens: Sequence) -> list[FreeModuleElement]:
    out = []
    for g in gens:
        out.append(g if isinstance(g, FreeModuleElement) else FreeModuleElement((g,)))
    return out


def _degree(v: FreeModuleElement, shifts: Sequence[int]) -> int:
    ok, d = v.degree(shifts)
    if not ok:
        raise NotGradedError("graded resolution requires weighted-homogeneous generators")
    return d


def _independent(vectors: Sequence[dict]) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subset."""
    echelon: list[tuple[tuple, dict]] = []
    chosen = []
    for idx, v in enumerate(vectors):
        v = dict(v)
        for piv, row in echelon:
            c = v.get(piv)
            if c:
                for t, a in row.items():
                    w = v.get(t, 0) - c * a
                    if w:
                        v[t] = w
                    else:
                        v.pop(t, None)
        if v:
            piv = max(v)
            echelon.append((piv, _monic(v, piv)))
            chosen.append(idx)
    return chosen


def minimal_generators(
    elements: Sequence,
    shifts: Sequence[int] | None = None,
    order: MonomialOrder = DEFAULT_ORDER,
) -> list:
    """A minimal generating subset of homogeneous elements (graded Nakayama).

    Accepts polynomials (ideal generators) or free module elements; returns
    the same kind.
    """
    polys = bool(elements) and isinstance(elements[0], Polynomial)
    mods = [m for m in _as_module(elements) if not m.is_zero()]
    if not mods:
        return []
    shifts = tuple(shifts) if shifts is not None else (0,) * mods[0].rank
    degs = [_degree(m, shifts) for m in mods]
    kept: list[FreeModuleElement] = []
    gb: list[FreeModuleElement] = []
    for d in sorted(set(degs)):
        batch = [m for m, e in zip(mods, degs) if e == d]
        rems = [module_normal_form(m, gb, order).to_vec() for m in batch] if gb else [m.to_vec() for m in batch]
        new = [batch[i] for i in _independent(rems)]
        if new:
            kept.extend(new)
            gb = module_groebner(gb + new, order, shifts=shifts)
    if polys:
        return [m[0] for m in kept]
    return kept


# --------------------------------------------------------------------------
# syzygies


def syzygies(
    gens: Sequence,
    shifts: Sequence[int] | None = None,
    order: MonomialOrder = DEFAULT_ORDER,
    minimal: bool = True,
) -> list[FreeModuleElement]:
    """Generators of the module of relations ``sum a_j h_j = 0``.

    ``gens`` are polynomials or elements of a common ``R^r`` whose basis
    vectors have degree ``shifts``.  For homogeneous input the result is a
    minimal generating set; otherwise it is the Groebner-derived set.
    """
    mods = _as_module(gens)
    if not mods:
        return []
    ring = mods[0].ring
    r, m = mods[0].rank, len(mods)
    if any(h.rank != r for h in mods):
        raise ValueError("rank mismatch among module generators")
    shifts = tuple(shifts) if shifts is not None else (0,) * r
    graded = True
    degs = []
    for h in mods:
        ok, d = h.degree(shifts)
        if not ok or d is None:
            graded = False
            d = max((sum(a * b for a, b in zip(ring.weights, e)) + shifts[i]
                     for i, comp in enumerate(h) for e in comp.terms), default=0)
        degs.append(d)
    ext_shifts = shifts + tuple(degs)
    vecs = []
    for j, h in enumerate(mods):
        v = h.to_vec()
        v[(0,) * ring.nvars + (r + j,)] = QQ(1)
        vecs.append(v)
    key = _KeyCache(term_key_function(order, ring.weights, "pot"))
    w = ring.weights

    def degree(t):
        return sum(a * b for a, b in zip(w, t)) + ext_shifts[t[-1]]

    basis = groebner_vecs(vecs, key, degree, ideal=False)
    out = []
    for v in basis:
        lm = max(v, key=key.__getitem__)
        if lm[-1] >= r:
            out.append(FreeModuleElement.from_vec(v, ring, m, offset=r))
    if minimal and graded:
        out = minimal_generators(out, degs, order)
    return out


# --------------------------------------------------------------------------
# resolutions


def _ideal_generators(I: Ideal) -> list[Polynomial]:
    if not I.is_homogeneous():
        raise NotGradedError("graded resolution requires weighted-homogeneous generators")
    return minimal_generators(list(I.generators))


def min_gens(I: Ideal) -> int:
    """Number of minimal homogeneous generators of ``I``."""
    return len(_ideal_generators(I))


def prune_units(steps: Sequence[ResolutionStep]) -> list[ResolutionStep]:
    """Cancel unit entries until every map is minimal.

    A unit in ``d_i`` at ``(r, c)`` removes basis vector ``c`` of ``F_i`` and
    ``r`` of ``F_{i-1}``; the smallest-degree unit is taken first, ties broken
    by position.
    """
    mats = [[list(row) for row in s.matrix] for s in steps]
    src = [list(s.source_degrees) for s in steps]
    tgt = [list(s.target_degrees) for s in steps]
    while True:
        best = None
        for k, M in enumerate(mats):
            for r, row in enumerate(M):
                for c, a in enumerate(row):
                    if a and a.is_constant():
                        cand = (src[k][c], k, r, c)
                        if best is None or cand < best:
                            best = cand
        if best is None:
            break
        _, k, r, c = best
        M = mats[k]
        u = M[r][c].constant_term()
        colc = [M[a][c] for a in range(len(M))]
        rowr = M[r]
        new = []
        for a in range(len(M)):
            if a == r:
                continue
            new.append([M[a][b] - colc[a] * rowr[b] / u for b in range(len(rowr)) if b != c])
        mats[k] = new
        src[k].pop(c)
        tgt[k].pop(r)
        if k + 1 < len(mats):
            mats[k + 1].pop(c)
            tgt[k + 1].pop(c)
        if k > 0:
            for row in mats[k - 1]:
                row.pop(r)
            src[k - 1].pop(r)
    out = []
    for M, s, t in zip(mats, src, tgt):
        if not s:
            break
        out.append(ResolutionStep(tuple(tuple(row) for row in M), tuple(s), tuple(t)))
    return out


def free_resolution(
    I: Ideal,
    order: MonomialOrder = DEFAULT_ORDER,
    progress: Callable[[int, int], None] | None = None,
) -> list[ResolutionStep]:
    """Minimal graded free resolution of ``R/I`` as a list of maps ``d_1, d_2, ...``."""
    if I.is_unit():
        raise ValueError("cannot resolve the zero ring R/(1)")
    gens = _ideal_generators(I)
    ring = I.ring
    if not gens:
        return []
    degs = [g.weighted_degree()[1] for g in gens]
    steps = [ResolutionStep((tuple(gens),), tuple(degs), (0,))]
    columns = [FreeModuleElement((g,)) for g in gens]
    ambient, col_degs = (0,), degs
    while True:
        if len(steps) > ring.nvars:
            raise AssertionError("resolution longer than the number of variables")
        syz = syzygies(columns, ambient, order)
        if progress is not None:
            progress(len(steps), len(syz))
        if not syz:
            break
        new_degs = [_degree(s, col_degs) for s in syz]
        matrix = tuple(tuple(s[r] for s in syz) for r in range(len(columns)))
        steps.append(ResolutionStep(matrix, tuple(new_degs), tuple(col_degs)))
        columns, ambient, col_degs = syz, col_degs, new_degs
    return prune_units(steps)


def betti_table(resolution: Sequence[ResolutionStep]) -> BettiTable:
    entries = {(0, 0): 1}
    for i, step in enumerate(resolution, start=1):
        for d, v in sorted(Counter(step.source_degrees).items()):
            entries[(i, d)] = v
    return BettiTable(entries)


def homological_invariants(I: Ideal) -> tuple[int, int]:
    """``(pd, depth)`` of ``R/I`` at the graded maximal ideal (Auslander-Buchsbaum)."""
    pd = len(free_resolution(I))
    return pd, I.ring.nvars - pd


def compose(a: ResolutionStep, b: ResolutionStep) -> list[list[Polynomial]]:
    """Matrix product ``a.matrix * b.matrix`` (the map ``d_i d_{i+1}``)."""
    rows, inner = a.shape
    inner2, cols = b.shape
    if inner != inner2:
        raise ValueError("incompatible maps")
    out = []
    for r in range(rows):
        row = []
        for c in range(cols):
            acc = None
            for k in range(inner):
                x, y = a.matrix[r][k], b.matrix[k][c]
                if x and y:
                    acc = x * y if acc is None else acc + x * y
            row.append(acc if acc is not None else a.matrix[r][0] * 0)
        out.append(row)
    return out
