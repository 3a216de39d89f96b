"""Symmetric and Rees algebra presentations of blow-ups, affine charts and
strict transforms."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Polynomial, PolyRing
from .ideals import Ideal, eliminate
from .resolution import syzygies


@dataclass(frozen=True)
class BlowupPresentation:
    """``sym_ideal`` (and optionally ``rees_ideal``) in ``k[x, u]``; ``u_j`` pairs with the ``j``-th center generator."""

    base_ring: PolyRing
    total_ring: PolyRing
    center: Ideal = field(compare=False)
    u_names: tuple[str, ...]
    sym_ideal: Ideal = field(compare=False)
    rees_ideal: Ideal | None = field(default=None, compare=False)

    def ideal(self, which: str = "sym") -> Ideal:
        if which == "sym":
            return self.sym_ideal
        if which == "rees":
            if self.rees_ideal is None:
                raise ValueError("Rees ideal not computed")
            return self.rees_ideal
        raise ValueError(f"unknown presentation {which!r}")


def _u_ring(center: Ideal, u_names: Sequence[str] | None, start: int) -> tuple[PolyRing, tuple[str, ...]]:
    base = center.ring
    m = len(center.generators)
    if u_names is None:
        u_names = tuple(f"u{j}" for j in range(start, start + m))
    u_names = tuple(u_names)
    if len(u_names) != m:
        raise ValueError(f"need {m} u-variable names, got {len(u_names)}")
    clash = [u for u in u_names if u in base]
    if clash:
        raise ValueError(f"u-variable names clash with base variables: {clash}")
    if center.is_homogeneous():
        uw = tuple(g.weighted_degree()[1] for g in center.generators)
    else:
        uw = (1,) * m
    return PolyRing(base.variables + u_names, base.weights + uw), u_names


def symmetric_algebra_ideal(center: Ideal, u_names: Sequence[str] | None = None, start: int = 0) -> BlowupPresentation:
    """Relations ``sum_j s_j * u_j`` over the (minimal) syzygies ``s`` of the center generators."""
    if not center.generators:
        raise ValueError("center needs at least one nonzero generator")
    total, u_names = _u_ring(center, u_names, start)
    us = [total.var(u) for u in u_names]
    rels = []
    for s in syzygies(list(center.generators)):
        acc = total.zero()
        for comp, u in zip(s, us):
            if comp:
                acc = acc + comp.change_ring(total) * u
        rels.append(acc)
    return BlowupPresentation(center.ring, total, center, u_names, Ideal(total, rels))


def rees_ideal(center: Ideal, u_names: Sequence[str] | None = None, start: int = 0) -> Ideal:
    """Kernel of ``u_j -> t*f_j``, by eliminating ``t``."""
    total, u_names = _u_ring(center, u_names, start)
    t = total.fresh_name("t")
    # shift the u weights by one so that u_j - t*f_j is homogeneous
    m = len(u_names)
    nb = center.ring.nvars
    big = PolyRing((t,) + total.variables, (1,) + total.weights[:nb] + tuple(w + 1 for w in total.weights[nb:]))
    tv = big.var(t)
    gens = [big.var(u) - tv * f.change_ring(big) for u, f in zip(u_names, center.generators)]
    assert len(gens) == m
    out = eliminate(Ideal(big, gens), [t])
    return out.change_ring(total)


def with_rees(B: BlowupPresentation) -> BlowupPresentation:
    R = rees_ideal(B.center, B.u_names)
    return BlowupPresentation(B.base_ring, B.total_ring, B.center, B.u_names, B.sym_ideal, R)


# --------------------------------------------------------------------------
# presentations and charts


@dataclass(frozen=True)
class Presentation:
    """A quotient ``ring / ideal`` together with the eliminations that produced it."""

    ring: PolyRing
    ideal: Ideal = field(compare=False)
    eliminated: tuple[tuple[str, Polynomial], ...] = ()

    def free_variables(self) -> tuple[str, ...]:
        used = set()
        for g in self.ideal.generators:
            used.update(g.support())
        return tuple(v for v in self.ring.variables if v not in used)

    def core(self) -> Presentation:
        """Drop the free variables (an affine-space factor)."""
        free = self.free_variables()
        if not free:
            return self
        small = self.ring.drop(free)
        return Presentation(small, self.ideal.change_ring(small), self.eliminated)


def _linear_solution(f: Polynomial, v: str) -> Polynomial | None:
    """If ``f = c*v + h`` with ``v`` absent from ``h``, return ``-h/c``."""
    i = f.ring.index(v)
    unit = tuple(1 if k == i else 0 for k in range(f.ring.nvars))
    c = f.terms.get(unit)
    if c is None:
        return None
    if any(e[i] for e in f.terms if e != unit):
        return None
    rest = Polynomial._raw(f.ring, {e: -a / c for e, a in f.terms.items() if e != unit})
    return rest


def drop_redundant(I: Ideal) -> Ideal:
    """Remove, last first, every generator lying in the ideal of the others."""
    gens = list(I.generators)
    k = len(gens) - 1
    while k >= 0 and len(gens) > 1:
        others = gens[:k] + gens[k + 1:]
        if Ideal(I.ring, others).contains(gens[k]):
            gens = others
        k -= 1
    return Ideal(I.ring, gens)


def simplify_presentation(I: Ideal, eliminable: Iterable[str] | None = None) -> Presentation:
    """Eliminate variables occurring as a lone linear term ``c*v`` of some generator.

    Scans variables in ring order (restricted to ``eliminable`` if given) and
    generators in list order; substitutes ``v -> g`` and drops ``v``.  Zero,
    duplicate and redundant generators are removed at the end.
    """
    allowed = None if eliminable is None else set(eliminable)
    ring, gens = I.ring, [g for g in I.generators if g]
    done: list[tuple[str, Polynomial]] = []
    while True:
        hit = None
        for v in ring.variables:
            if allowed is not None and v not in allowed:
                continue
            for k, f in enumerate(gens):
                g = _linear_solution(f, v)
                if g is not None:
                    hit = (v, k, g)
                    break
            if hit:
                break
        if hit is None:
            break
        v, k, g = hit
        small = ring.drop([v])
        img = g.change_ring(small)
        gens = [h.substitute({v: img}, small) for j, h in enumerate(gens) if j != k]
        gens = [h for h in gens if h]
        done.append((v, img))
        ring = small
    return Presentation(ring, drop_redundant(Ideal(ring, gens)), tuple(done))


@dataclass(frozen=True)
class Chart:
    index: int
    u_name: str
    raw: Presentation
    simplified: Presentation

    @property
    def core(self) -> Presentation:
        return self.simplified.core()

    @property
    def cell_dim(self) -> int:
        return len(self.simplified.free_variables())


def chart(B: BlowupPresentation, which: str, j: int, eliminable: Iterable[str] | None = None) -> Chart:
    """Affine chart ``u_j = 1`` of the chosen presentation, simplified."""
    if not 0 <= j < len(B.u_names):
        raise IndexError(f"chart index {j} out of range")
    u = B.u_names[j]
    I = B.ideal(which)
    small = I.ring.drop([u])
    raw = Ideal(small, [g.substitute({u: small.one()}, small) for g in I.generators])
    return Chart(j, u, Presentation(small, raw), simplify_presentation(raw, eliminable))


def chart_of_ideal(I: Ideal, u: str, eliminable: Iterable[str] | None = None) -> Chart:
    """Chart ``u = 1`` for an ideal not produced by ``symmetric_algebra_ideal``."""
    small = I.ring.drop([u])
    raw = Ideal(small, [g.substitute({u: small.one()}, small) for g in I.generators])
    return Chart(I.ring.index(u), u, Presentation(small, raw), simplify_presentation(raw, eliminable))


# --------------------------------------------------------------------------
# strict transforms (blow-up of the origin)


@dataclass(frozen=True)
class StrictTransform:
    chart_var: str
    ring: PolyRing
    total: Polynomial
    exceptional_power: int
    ideal: Ideal = field(compare=False)
    flagged: bool = False


def chart_variable_names(ring: PolyRing, j: int) -> tuple[str, ...]:
    """Chart ``j`` keeps ``x_j`` and renames the others ``v_i``."""
    out = []
    for i, name in enumerate(ring.variables):
        if i == j:
            out.append(name)
        else:
            v = "v" + name[1:] if len(name) > 1 and name[1:].isdigit() else f"v_{name}"
            out.append(v)
    if len(set(out)) != len(out):
        raise ValueError("chart variable names collide")
    return tuple(out)


def strict_transform(hyp: Polynomial, j: int | str) -> StrictTransform:
    """Chart ``j`` of the blow-up of the origin: ``x_i = x_j * v_i`` then strip ``x_j^k``.

    ``j`` is a 0-based index or a variable name.  If ``hyp`` does not vanish
    at the origin the total transform is returned unchanged and flagged.
    """
    ring = hyp.ring
    if isinstance(j, str):
        j = ring.index(j)
    if not 0 <= j < ring.nvars:
        raise IndexError(f"chart index {j} out of range")
    names = chart_variable_names(ring, j)
    target = PolyRing(names)
    xj = target.var(names[j])
    images = {}
    for i, v in enumerate(ring.variables):
        images[v] = xj if i == j else xj * target.var(names[i])
    total = hyp.substitute(images, target)
    flagged = hyp.constant_term() != 0
    k = 0 if flagged or not total else min(e[j] for e in total.terms)
    stripped = Polynomial._raw(
        target, {e[:j] + (e[j] - k,) + e[j + 1:]: c for e, c in total.terms.items()}
    )
    return StrictTransform(names[j], target, total, k, Ideal(target, [stripped]), flagged)


def exceptional_power_identity(st: StrictTransform) -> bool:
    """``x_j^k * strict == total``."""
    xj = st.ring.var(st.chart_var)
    return xj ** st.exceptional_power * st.ideal.generators[0] == st.total if st.ideal.generators else not st.total
