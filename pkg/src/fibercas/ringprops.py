"""Classification of quotient rings ``R/I``: dimension, depth, Cohen-Macaulay,
Gorenstein, complete intersection, smoothness and normality."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import PolyRing
from .ideals import EMPTY, Ideal, krull_dim, minors_ideal, quotient_by_element
from .resolution import BettiTable, betti_table, free_resolution
from .blowup import drop_redundant


@dataclass(frozen=True)
class Verdict:
    status: str
    reason: str = ""
    witness: Ideal | None = None

    def __bool__(self):
        return self.status in ("smooth", "normal")

    def __str__(self):
        return self.status + (f" ({self.reason})" if self.reason else "")


@dataclass(frozen=True)
class RingProps:
    dim: int
    codim: int
    pd: int | None
    depth: int | None
    is_CM: bool | None
    cm_type: int | None
    is_gorenstein: bool | None
    is_CI_presentation: bool
    min_gens: int
    smooth: Verdict
    normal: Verdict
    weights: tuple[int, ...] | None
    betti: BettiTable | None = None

    def summary(self) -> dict:
        return {
            "dim": self.dim,
            "codim": self.codim,
            "pd": self.pd,
            "depth": self.depth,
            "cohen_macaulay": self.is_CM,
            "type": self.cm_type,
            "gorenstein": self.is_gorenstein,
            "complete_intersection": self.is_CI_presentation,
            "min_gens": self.min_gens,
            "smooth": str(self.smooth),
            "normal": str(self.normal),
        }


# --------------------------------------------------------------------------
# weights


def _homogeneous_under(gens, weights) -> bool:
    for g in gens:
        degs = {sum(a * b for a, b in zip(weights, e)) for e in g.terms}
        if len(degs) > 1:
            return False
    return True


def find_weights(I: Ideal, bound: int = 4) -> tuple[int, ...] | None:
    """Positive weights ``<= bound`` making every generator homogeneous.

    The ring's own weights are preferred; otherwise the lexicographically
    smallest solution is returned, or ``None``.
    """
    if _homogeneous_under(I.generators, I.ring.weights):
        return I.ring.weights
    n = I.ring.nvars
    # each generator gives difference vectors that must be orthogonal to w
    diffs = []
    for g in I.generators:
        terms = sorted(g.terms)
        for e in terms[1:]:
            diffs.append(tuple(a - b for a, b in zip(e, terms[0])))
    if not diffs:
        return I.ring.weights
    # a constraint is checkable once its last nonzero coordinate is assigned
    by_last: dict[int, list] = {}
    for d in diffs:
        last = max(i for i, a in enumerate(d) if a)
        by_last.setdefault(last, []).append(d)
    w = [0] * n

    def go(i: int) -> bool:
        if i == n:
            return True
        for c in range(1, bound + 1):
            w[i] = c
            if all(sum(a * b for a, b in zip(d, w)) == 0 for d in by_last.get(i, ())):
                if go(i + 1):
                    return True
        return False

    return tuple(w) if go(0) else None


# --------------------------------------------------------------------------
# singular locus and normality


def jacobian_matrix(gens, ring: PolyRing):
    return [[g.diff(v) for v in ring.variables] for g in gens]


def singular_locus(I: Ideal, c: int) -> Ideal:
    """``I`` plus the ``c x c`` minors of the Jacobian of its generators."""
    gens = list(I.generators)
    if c > min(len(gens), I.ring.nvars):
        raise ValueError(f"minor size {c} exceeds Jacobian shape {len(gens)}x{I.ring.nvars}")
    if c == 0:
        return Ideal(I.ring, [I.ring.one()])
    gb = I.gb()
    seen, extra = set(), []
    for m in minors_ideal(jacobian_matrix(gens, I.ring), c, I.ring).generators:
        r = gb.reduce(m)
        if r and r.monic() not in seen:
            seen.add(r.monic())
            extra.append(r)
    return Ideal(I.ring, gens + extra)


def is_smooth(I: Ideal, c: int | None = None) -> Verdict:
    if I.is_unit():
        raise ValueError("empty scheme")
    if c is None:
        c = I.ring.nvars - krull_dim(I)
    if c == 0:
        return Verdict("smooth")
    sing = singular_locus(I, c)
    if sing.is_unit():
        return Verdict("smooth")
    return Verdict("singular", f"singular locus of dimension {krull_dim(sing)}", sing)


def serre_normal(I: Ideal, dim: int, s2: bool, smooth: Verdict) -> Verdict:
    """Serre's criterion from a smoothness verdict and an S2 certificate."""
    if smooth.status == "smooth":
        return Verdict("normal", "smooth")
    if smooth.witness is None:
        return Verdict("unknown", "no singular-locus witness")
    sdim = krull_dim(smooth.witness)
    gap = dim - sdim if sdim != EMPTY else dim + 1
    if gap < 2:
        return Verdict("not_normal", f"singular locus has codimension {gap} < 2")
    if not s2:
        return Verdict("unknown", "R1 holds but S2 is not certified")
    return Verdict("normal", f"S2 certified, singular locus codimension {gap}")


def is_normal_serre(I: Ideal) -> Verdict:
    return classify(I).normal


# --------------------------------------------------------------------------
# depth by regular sequences


def regular_sequence_depth(I: Ideal, rng, bound: int = 10**6) -> int:
    """Length of a maximal regular sequence of random linear forms on ``R/I``.

    Needs standard weights.  Random forms are generic with high probability,
    so this is the graded depth, computed without any resolution.
    """
    if any(w != 1 for w in I.ring.weights):
        raise ValueError("regular_sequence_depth needs standard weights")
    if I.is_unit():
        raise ValueError("empty scheme")
    ring, J, k = I.ring, I, 0
    while not J.is_unit():
        l = ring.zero()
        for v in ring.variables:
            l = l + ring.var(v) * rng.randint(-bound, bound)
        if not l:
            continue
        if quotient_by_element(J, l) != J:
            break
        J = Ideal(ring, list(J.generators) + [l])
        k += 1
    return k


# --------------------------------------------------------------------------
# classification


def classify(I: Ideal, with_betti: bool = True) -> RingProps:
    """All invariants of ``R/I``.

    Depth, type and Gorenstein come from the graded minimal resolution when
    ``I`` is homogeneous for some small positive weights.  Otherwise only a
    complete-intersection presentation certifies them; else they are ``None``.
    """
    if I.is_unit():
        raise ValueError("empty scheme")
    n = I.ring.nvars
    dim = krull_dim(I)
    codim = n - dim
    weights = find_weights(I)
    pd = depth = cm_type = None
    is_cm = is_gor = None
    betti = None
    if weights is not None:
        J = I.change_ring(I.ring.with_weights(weights)) if weights != I.ring.weights else I
        res = free_resolution(J)
        betti = betti_table(res)
        totals = betti.totals()
        pd = len(res)
        depth = n - pd
        is_cm = depth == dim
        cm_type = totals[-1]
        is_gor = is_cm and cm_type == 1
        mg = totals[1] if len(totals) > 1 else 0
        is_ci = mg == codim
    else:
        mg = len(drop_redundant(I).generators)
        is_ci = mg == codim
        if is_ci:
            pd, depth, is_cm, cm_type, is_gor = codim, dim, True, 1, True
    smooth = is_smooth(I, codim)
    normal = serre_normal(I, dim, bool(is_cm) or is_ci, smooth)
    return RingProps(
        dim=dim,
        codim=codim,
        pd=pd,
        depth=depth,
        is_CM=is_cm,
        cm_type=cm_type,
        is_gorenstein=is_gor,
        is_CI_presentation=is_ci,
        min_gens=mg,
        smooth=smooth,
        normal=normal,
        weights=weights,
        betti=betti if with_betti else None,
    )
