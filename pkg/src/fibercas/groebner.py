"""Buchberger's algorithm for ideals and submodules of free modules.

Internally an element of ``R^r`` is a dict mapping *terms* to mpq
coefficients, where a term is ``exponents + (position,)``.  Ideals are the
rank-one case (position 0), so one engine serves both.

Pairs are selected by sugar degree, then smallest lcm (normal strategy);
useless pairs are removed with the Gebauer-Moeller criteria.  The product
criterion is only applied to ideals.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from operator import add
from typing import Callable, Iterable, Sequence

from gmpy2 import mpq

from .algebra import DEFAULT_ORDER, MonomialOrder, Polynomial, PolyRing, RingMismatchError

Term = tuple  # exponents + (position,)
Vec = dict  # Term -> mpq


# --------------------------------------------------------------------------
# term orders on module terms


class _KeyCache(dict):
    __slots__ = ("fn",)

    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, term):
        k = self[term] = self.fn(term)
        return k


def term_key_function(
    order: MonomialOrder,
    weights: Sequence[int],
    module_order: str = "pot",
    shifts: Sequence[Sequence[int]] | None = None,
) -> Callable[[Term], tuple]:
    """Key on ``exponents + (position,)``; larger key means larger term.

    ``pot`` compares positions first (lower index is larger), ``top`` compares
    monomials first, ``schreyer`` compares ``m * shifts[pos]`` first.
    """
    mkey = order.key_function(weights)
    if module_order == "pot":
        return lambda t: (-t[-1],) + mkey(t[:-1])
    if module_order == "top":
        return lambda t: mkey(t[:-1]) + (-t[-1],)
    if module_order == "schreyer":
        if shifts is None:
            raise ValueError("a Schreyer order needs shift monomials")
        sh = [tuple(s) for s in shifts]
        return lambda t: mkey(tuple(map(add, t[:-1], sh[t[-1]]))) + (-t[-1],)
    raise ValueError(f"unknown module order {module_order!r}")


def _divides(a: Term, b: Term) -> bool:
    return a[-1] == b[-1] and all(x <= y for x, y in zip(a, b))


def _lcm(a: Term, b: Term) -> Term:
    return tuple(map(max, a, b))


def _coprime(a: Term, b: Term) -> bool:
    return not any(x and y for x, y in zip(a[:-1], b[:-1]))


def _shifted(p: Vec, q: Term, c) -> Vec:
    return {tuple(map(add, t, q)): v * c for t, v in p.items()}


def _monic(p: Vec, lm: Term) -> Vec:
    lc = p[lm]
    if lc == 1:
        return p
    return {t: v / lc for t, v in p.items()}


def reduce_vec(p: Vec, basis: Sequence[tuple[Term, Vec]], key, full: bool = True) -> Vec:
    """Remainder of ``p`` on division by monic ``basis`` (pairs ``(lm, vec)``).

    The first basis element whose leading term divides the current term is used.
    """
    kf = key.__getitem__
    p = dict(p)
    r: Vec = {}
    get = p.get
    while p:
        t = max(p, key=kf)
        c = p[t]
        for lm, g in basis:
            if t[-1] == lm[-1] and all(x <= y for x, y in zip(lm, t)):
                q = tuple(y - x for x, y in zip(lm, t))
                for s, d in g.items():
                    u = tuple(map(add, s, q))
                    v = get(u, 0) - c * d
                    if v:
                        p[u] = v
                    else:
                        p.pop(u, None)
                break
        else:
            if not full:
                r.update(p)
                return r
            r[t] = c
            del p[t]
    return r


class _Pair:
    __slots__ = ("i", "j", "lcm")

    def __init__(self, i, j, lcm):
        self.i, self.j, self.lcm = i, j, lcm


def groebner_vecs(
    inputs: Iterable[Vec],
    key,
    degree: Callable[[Term], int],
    ideal: bool = True,
) -> list[Vec]:
    """Reduced Groebner basis (monic, sorted by leading term descending).

    ``key`` must be a :class:`_KeyCache` (or any dict-like term -> key).
    ``degree`` gives the weighted degree of a term, used for sugar.
    """
    G: list[Vec] = []
    LM: list[Term] = []
    sugar: list[int] = []
    live: list[int] = []
    heap: list = []
    counter = 0

    seen = set()
    for f in inputs:
        if not f:
            continue
        frozen = frozenset(f.items())
        if frozen in seen:
            continue
        seen.add(frozen)
        lm = max(f, key=key.__getitem__)
        s = max(degree(t) for t in f)
        heap.append((s, 0, key[lm], counter, f))
        counter += 1
    heapq.heapify(heap)

    def basis():
        return [(LM[i], G[i]) for i in live]

    def update(k):
        nonlocal heap, counter
        h = LM[k]
        cands = [(i, _lcm(LM[i], h)) for i in live if LM[i][-1] == h[-1]]
        D = []
        while cands:
            i, L = cands.pop(0)
            if (ideal and _coprime(LM[i], h)) or not any(
                _divides(L2, L) for _, L2 in cands
            ) and not any(_divides(L2, L) for _, L2 in D):
                D.append((i, L))
        E = [(i, L) for i, L in D if not (ideal and _coprime(LM[i], h))]
        kept = []
        for item in heap:
            if item[1] == 1:
                pr = item[4]
                if (
                    _divides(h, pr.lcm)
                    and _lcm(LM[pr.i], h) != pr.lcm
                    and _lcm(LM[pr.j], h) != pr.lcm
                ):
                    continue
            kept.append(item)
        for i, L in E:
            dl = degree(L)
            s = max(sugar[i] + dl - degree(LM[i]), sugar[k] + dl - degree(h))
            kept.append((s, 1, key[L], counter, _Pair(i, k, L)))
            counter += 1
        heapq.heapify(kept)
        heap = kept
        live[:] = [i for i in live if not _divides(h, LM[i])] + [k]

    while heap:
        s, kind, _, _, payload = heapq.heappop(heap)
        if kind == 0:
            p = payload
        else:
            i, j, L = payload.i, payload.j, payload.lcm
            qi = tuple(y - x for x, y in zip(LM[i], L))
            qj = tuple(y - x for x, y in zip(LM[j], L))
            p = _shifted(G[i], qi, 1)
            for t, v in G[j].items():
                u = tuple(map(add, t, qj))
                w = p.get(u, 0) - v
                if w:
                    p[u] = w
                else:
                    p.pop(u, None)
        r = reduce_vec(p, basis(), key)
        if not r:
            continue
        lm = max(r, key=key.__getitem__)
        r = _monic(r, lm)
        G.append(r)
        LM.append(lm)
        sugar.append(max(s, max(degree(t) for t in r)) if kind else max(degree(t) for t in r))
        update(len(G) - 1)

    # inter-reduce the minimal basis
    live_sorted = sorted(live, key=lambda i: key[LM[i]], reverse=True)
    out = []
    for idx, i in enumerate(live_sorted):
        lm = LM[i]
        others = [(LM[j], G[j]) for j in live_sorted if j != i]
        tail = {t: v for t, v in G[i].items() if t != lm}
        red = reduce_vec(tail, others, key)
        red[lm] = mpq(1)
        out.append(red)
    return out


# --------------------------------------------------------------------------
# conversions


def poly_to_vec(f: Polynomial, pos: int = 0) -> Vec:
    return {e + (pos,): c for e, c in f.terms.items()}


def vec_to_poly(v: Vec, ring: PolyRing) -> Polynomial:
    return Polynomial._raw(ring, {t[:-1]: c for t, c in v.items()})


def _check_ring(polys: Sequence[Polynomial]) -> PolyRing:
    ring = polys[0].ring
    for p in polys[1:]:
        if p.ring is not ring and p.ring != ring:
            raise RingMismatchError("generators live in different rings")
    return ring


def _ideal_key(ring: PolyRing, order: MonomialOrder) -> _KeyCache:
    mkey = order.key_function(ring.weights)
    return _KeyCache(lambda t: mkey(t[:-1]))


def _ideal_degree(ring: PolyRing):
    w = ring.weights
    if all(x == 1 for x in w):
        return lambda t: sum(t[:-1])
    return lambda t: sum(a * b for a, b in zip(w, t))


# --------------------------------------------------------------------------
# public API: ideals


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, inter-reduced, sorted by leading monomial."""

    ring: PolyRing
    order: MonomialOrder
    elements: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def serialize(self) -> str:
        """Canonical text form, one element per line."""
        return "\n".join(g.to_string(self.order) for g in self.elements)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo the list ``G`` (used in the given order)."""
    if not G:
        return f
    _check_ring([f, *G])
    ring = f.ring
    key = _ideal_key(ring, order)
    basis = []
    for g in G:
        if not g:
            continue
        v = poly_to_vec(g)
        lm = max(v, key=key.__getitem__)
        basis.append((lm, _monic(v, lm)))
    return vec_to_poly(reduce_vec(poly_to_vec(f), basis, key), ring)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER, ring: PolyRing | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if ring is None:
        if not gens:
            raise ValueError("need a ring when there are no generators")
        ring = _check_ring(gens)
    elif gens:
        if _check_ring(gens) != ring:
            raise RingMismatchError("generators are not in the given ring")
    key = _ideal_key(ring, order)
    vecs = groebner_vecs((poly_to_vec(g) for g in gens if g), key, _ideal_degree(ring))
    return GroebnerBasis(ring, order, tuple(vec_to_poly(v, ring) for v in vecs))


def ideal_member(f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder = DEFAULT_ORDER) -> bool:
    return buchberger(gens, order, ring=f.ring).contains(f)


# --------------------------------------------------------------------------
# public API: free modules


@dataclass(frozen=True)
class FreeModuleElement:
    """A vector of polynomials in a free module ``R^rank``."""

    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("free module elements need at least one component")
        _check_ring(comps)
        object.__setattr__(self, "components", comps)

    @property
    def ring(self) -> PolyRing:
        return self.components[0].ring

    @property
    def rank(self) -> int:
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other):
        self._same(other)
        return FreeModuleElement(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        self._same(other)
        return FreeModuleElement(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return FreeModuleElement(tuple(-a for a in self))

    def scale(self, f) -> FreeModuleElement:
        return FreeModuleElement(tuple(f * a for a in self))

    def _same(self, other):
        if self.rank != other.rank:
            raise ValueError("free module elements of different rank")

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self)

    def degree(self, shifts: Sequence[int] | None = None) -> tuple[bool, int | None]:
        """Homogeneity and degree with component ``i`` shifted by ``shifts[i]``."""
        shifts = shifts or (0,) * self.rank
        degs = set()
        for a, s in zip(self, shifts):
            h, d = a.weighted_degree()
            if not h:
                return False, None
            if d is not None:
                degs.add(d + s)
        if len(degs) > 1:
            return False, None
        return True, (degs.pop() if degs else None)

    def to_vec(self, offset: int = 0) -> Vec:
        v: Vec = {}
        for i, a in enumerate(self.components):
            for e, c in a.terms.items():
                v[e + (i + offset,)] = c
        return v

    @classmethod
    def from_vec(cls, v: Vec, ring: PolyRing, rank: int, offset: int = 0) -> FreeModuleElement:
        comps = [dict() for _ in range(rank)]
        for t, c in v.items():
            comps[t[-1] - offset][t[:-1]] = c
        return cls(tuple(Polynomial._raw(ring, d) for d in comps))

    def __str__(self):
        return "(" + ", ".join(str(a) for a in self) + ")"


def _module_degree(ring: PolyRing, shifts: Sequence[int] | None):
    w = ring.weights

    if shifts is None:
        return lambda t: sum(a * b for a, b in zip(w, t))
    sh = tuple(shifts)
    return lambda t: sum(a * b for a, b in zip(w, t)) + sh[t[-1]]


def module_groebner(
    gens: Sequence[FreeModuleElement],
    order: MonomialOrder = DEFAULT_ORDER,
    module_order: str = "pot",
    shifts: Sequence[int] | None = None,
    schreyer_monomials: Sequence[Sequence[int]] | None = None,
) -> list[FreeModuleElement]:
    """Reduced Groebner basis of the submodule generated by ``gens``.

    ``shifts`` are degree shifts of the basis vectors (used for sugar only).
    """
    gens = [g for g in gens]
    if not gens:
        return []
    rank = gens[0].rank
    if any(g.rank != rank for g in gens):
        raise ValueError("rank mismatch among module generators")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise RingMismatchError("module generators live in different rings")
    key = _KeyCache(term_key_function(order, ring.weights, module_order, schreyer_monomials))
    vecs = groebner_vecs(
        (g.to_vec() for g in gens if not g.is_zero()), key, _module_degree(ring, shifts), ideal=False
    )
    return [FreeModuleElement.from_vec(v, ring, rank) for v in vecs]


def module_normal_form(
    f: FreeModuleElement,
    basis: Sequence[FreeModuleElement],
    order: MonomialOrder = DEFAULT_ORDER,
    module_order: str = "pot",
) -> FreeModuleElement:
    ring = f.ring
    key = _KeyCache(term_key_function(order, ring.weights, module_order))
    b = []
    for g in basis:
        v = g.to_vec()
        if v:
            lm = max(v, key=key.__getitem__)
            b.append((lm, _monic(v, lm)))
    return FreeModuleElement.from_vec(reduce_vec(f.to_vec(), b, key), ring, f.rank)


def module_member(f: FreeModuleElement, gens: Sequence[FreeModuleElement], order: MonomialOrder = DEFAULT_ORDER) -> bool:
    gb = module_groebner(gens, order)
    return module_normal_form(f, gb, order).is_zero()
