"""Ideals and the operations derived from Groebner bases."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .algebra import (
    DEFAULT_ORDER,
    MonomialOrder,
    Polynomial,
    PolyRing,
    RingMismatchError,
    block_order,
)
from .groebner import GroebnerBasis, buchberger

EMPTY = -1
"""Dimension sentinel for the unit ideal (the empty scheme)."""


class Ideal:
    """An ideal given by generators; equality is decided by reduced Groebner bases."""

    __slots__ = ("ring", "generators", "_gb")

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = ()):
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ring.const(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Iterable[str]) -> Ideal:
        return cls(ring, [ring(t) for t in texts])

    def gb(self, order: MonomialOrder = DEFAULT_ORDER) -> GroebnerBasis:
        if order not in self._gb:
            self._gb[order] = buchberger(self.generators, order, ring=self.ring)
        return self._gb[order]

    def contains(self, f: Polynomial) -> bool:
        return self.gb().contains(f)

    __contains__ = contains

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb().reduce(f)

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    def issubset(self, other: Ideal) -> bool:
        _same_ring(self, other)
        return all(other.contains(g) for g in self.generators)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        return self.gb().elements == other.gb().elements

    __hash__ = None

    def __add__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: Ideal) -> Ideal:
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def power(self, k: int) -> Ideal:
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out

    def initial_monomials(self, order: MonomialOrder = DEFAULT_ORDER) -> list[tuple]:
        return self.gb(order).leading_monomials()

    def change_ring(self, ring: PolyRing) -> Ideal:
        return Ideal(ring, [g.change_ring(ring) for g in self.generators])

    def substitute(self, assignment, target: PolyRing | None = None) -> Ideal:
        target = target or self.ring
        return Ideal(target, [g.substitute(assignment, target) for g in self.generators])

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.generators)) + ")"


def _same_ring(I: Ideal, J: Ideal):
    if I.ring != J.ring:
        raise RingMismatchError("ideals live in different rings")


# --------------------------------------------------------------------------
# elimination, intersection, colon, saturation


def eliminate(I: Ideal, drop: Iterable[str]) -> Ideal:
    """``I`` intersected with the subring on the variables not in ``drop``."""
    drop = set(drop)
    unknown = sorted(drop - set(I.ring.variables))
    if unknown:
        raise KeyError(f"cannot eliminate unknown variables {unknown}")
    drop = [v for v in I.ring.variables if v in drop]
    rest = [v for v in I.ring.variables if v not in drop]
    small = I.ring.drop(drop)
    if not drop:
        return Ideal(small, I.generators)
    w = dict(zip(I.ring.variables, I.ring.weights))
    big = PolyRing(tuple(drop + rest), tuple(w[v] for v in drop + rest))
    k = len(drop)
    gb = buchberger([g.change_ring(big) for g in I.generators], block_order(k), ring=big)
    kept = [g for g in gb.elements if all(not any(e[:k]) for e in g.terms)]
    return Ideal(small, [g.change_ring(small) for g in kept])


def _extend(ring: PolyRing, base: str = "t") -> tuple[PolyRing, str]:
    t = ring.fresh_name(base)
    return PolyRing((t,) + ring.variables, (1,) + ring.weights), t


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """``I ∩ J`` by eliminating ``t`` from ``t*I + (1-t)*J``."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring)
    big, t = _extend(I.ring)
    tv = big.var(t)
    gens = [tv * g.change_ring(big) for g in I.generators]
    gens += [(1 - tv) * g.change_ring(big) for g in J.generators]
    return eliminate(Ideal(big, gens), [t]).change_ring(I.ring)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out


def quotient_by_element(I: Ideal, g: Polynomial) -> Ideal:
    """``I : g`` via ``(I ∩ (g)) / g``."""
    if not g:
        raise ValueError("colon by the zero ideal")
    if I.contains(g):
        return Ideal(I.ring, [I.ring.one()])
    meet = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [h.exact_div(g) for h in meet.generators])


def quotient(I: Ideal, J: Ideal) -> Ideal:
    """Colon ideal ``I : J = {f : f*J ⊆ I}``."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("colon by the zero ideal")
    return intersect_all([quotient_by_element(I, g) for g in J.generators])


def saturate(I: Ideal, J: Ideal, max_steps: int = 64) -> tuple[Ideal, int]:
    """``I : J^∞`` by iterated colon; returns the ideal and the number of steps."""
    _same_ring(I, J)
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    current, index = I, 0
    for _ in range(max_steps):
        nxt = quotient(current, J)
        if nxt == current:
            return current, index
        current, index = nxt, index + 1
    raise RuntimeError("saturation did not stabilise")


def radical_member(f: Polynomial, I: Ideal, quick_powers: int = 3) -> bool:
    """Whether ``f`` lies in the radical of ``I``.

    Small powers of ``f`` are tried against the cached basis first; the
    decisive test is ``1 ∈ I + (1 - t*f)`` in ``R[t]``.
    """
    if f.ring != I.ring:
        raise RingMismatchError("polynomial and ideal live in different rings")
    if not f:
        return True
    p = f
    for _ in range(quick_powers):
        if I.contains(p):
            return True
        p = p * f
    big, t = _extend(I.ring)
    tv = big.var(t)
    gens = [g.change_ring(big) for g in I.generators] + [1 - tv * f.change_ring(big)]
    return Ideal(big, gens).is_unit()


def radical_contains(I: Ideal, J: Ideal) -> bool:
    """Whether ``J ⊆ sqrt(I)`` (every generator of ``J`` is radical-member)."""
    return all(radical_member(g, I) for g in J.generators)


def same_radical(I: Ideal, J: Ideal) -> bool:
    return radical_contains(I, J) and radical_contains(J, I)


# --------------------------------------------------------------------------
# dimension


def _min_cover(supports: frozenset[frozenset[int]]) -> int:
    @lru_cache(maxsize=None)
    def go(rest: frozenset) -> int:
        if not rest:
            return 0
        pivot = min(rest, key=lambda s: (len(s), sorted(s)))
        best = None
        for v in sorted(pivot):
            sub = frozenset(s for s in rest if v not in s)
            val = 1 + go(sub)
            if best is None or val < best:
                best = val
        return best

    return go(supports)


def monomial_dimension(monomials: Sequence[tuple], nvars: int) -> int:
    """Dimension of ``R / (monomials)``: the largest set of variables containing no support."""
    supports = set()
    for m in monomials:
        s = frozenset(i for i, e in enumerate(m) if e)
        if not s:
            return EMPTY
        supports.add(s)
    minimal = frozenset(s for s in supports if not any(t < s for t in supports))
    return nvars - _min_cover(minimal)


def krull_dim(I: Ideal, order: MonomialOrder = DEFAULT_ORDER) -> int:
    """Krull dimension of ``R/I`` (``EMPTY`` for the unit ideal)."""
    gb = I.gb(order)
    if gb.is_unit():
        return EMPTY
    return monomial_dimension(gb.leading_monomials(), I.ring.nvars)


def codim(I: Ideal) -> int:
    d = krull_dim(I)
    return I.ring.nvars - d if d != EMPTY else I.ring.nvars + 1


# --------------------------------------------------------------------------
# minors


def all_minors(M: Sequence[Sequence[Polynomial]], c: int) -> list[Polynomial]:
    """All ``c x c`` minors, by Laplace expansion with shared sub-minors."""
    rows, cols = len(M), (len(M[0]) if M else 0)
    if c > min(rows, cols):
        raise ValueError(f"minor size {c} exceeds matrix shape {rows}x{cols}")
    memo: dict = {}

    def det(rs: tuple, cs: tuple) -> Polynomial:
        if len(rs) == 1:
            return M[rs[0]][cs[0]]
        got = memo.get((rs, cs))
        if got is not None:
            return got
        r0, rest = rs[0], rs[1:]
        total = None
        for k, col in enumerate(cs):
            a = M[r0][col]
            if not a:
                continue
            term = a * det(rest, cs[:k] + cs[k + 1:])
            if k % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = M[r0][cs[0]] * 0
        memo[(rs, cs)] = total
        return total

    return [det(rs, cs) for rs in combinations(range(rows), c) for cs in combinations(range(cols), c)]


def minors_ideal(M: Sequence[Sequence[Polynomial]], c: int, ring: PolyRing | None = None) -> Ideal:
    """Ideal of all ``c x c`` minors; ``c = 0`` gives the unit ideal."""
    if ring is None:
        ring = M[0][0].ring
    if c == 0:
        return Ideal(ring, [ring.one()])
    return Ideal(ring, [m for m in all_minors(M, c) if m])
