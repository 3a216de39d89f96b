"""Explicit rings and ideals for length-3 punctual schemes and their fibers.

Generators are listed in a fixed order so that ``u_j`` always pairs with the
``j``-th center generator: ``x1^2, x1*x2, x2^2, x3, ..., xn`` for the
non-curvilinear scheme and ``x1^l, x2, ..., xn`` for the curvilinear one.
"""

from __future__ import annotations

from .algebra import PolyRing
from .ideals import Ideal


def x_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def base_ring(n: int) -> PolyRing:
    return PolyRing(x_names(n))


def noncurvilinear_center(n: int) -> Ideal:
    """``(x1^2, x1*x2, x2^2, x3, ..., xn)``."""
    if n < 2:
        raise ValueError("need n >= 2")
    R = base_ring(n)
    gens = ["x1^2", "x1*x2", "x2^2"] + [f"x{i}" for i in range(3, n + 1)]
    return Ideal.from_strings(R, gens)


def fiber_ring(n: int) -> PolyRing:
    """``k[x1..xn, u0..un]``; ``u_j`` carries the degree of the ``j``-th center generator."""
    xs = x_names(n)
    us = tuple(f"u{j}" for j in range(n + 1))
    return PolyRing(xs + us, (1,) * n + (2, 2, 2) + (1,) * (n - 2))


def fiber_equations(n: int) -> Ideal:
    """Bilinear equations of the fiber over the non-curvilinear scheme."""
    R = fiber_ring(n)
    gens = ["x1*u1 - x2*u0", "x1*u2 - x2*u1"]
    for i in range(3, n + 1):
        gens += [f"x1^2*u{i} - x{i}*u0", f"x1*x2*u{i} - x{i}*u1", f"x2^2*u{i} - x{i}*u2"]
    for i in range(3, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(f"x{i}*u{j} - x{j}*u{i}")
    return Ideal.from_strings(R, gens)


def exceptional_ideal(n: int) -> Ideal:
    """``(x1, ..., xn)`` in the fiber ring: the projective-space component."""
    R = fiber_ring(n)
    return Ideal(R, [R.var(x) for x in x_names(n)])


def quadric_in_fiber(n: int) -> Ideal:
    """``(x1, ..., xn, u0*u2 - u1^2)``."""
    R = fiber_ring(n)
    return Ideal(R, [R.var(x) for x in x_names(n)] + [R("u0*u2 - u1^2")])


def ring_A() -> Ideal:
    """Chart ``u3 = 1`` of the ``n = 3`` fiber: six variables, five quadrics."""
    R = PolyRing(("x1", "x2", "x3", "u0", "u1", "u2"))
    return Ideal.from_strings(
        R, ["x1*u1 - x2*u0", "x1*u2 - x2*u1", "x1^2 - x3*u0", "x1*x2 - x3*u1", "x2^2 - x3*u2"]
    )


def chart_u0_model() -> Ideal:
    R = PolyRing(("x1", "x2", "u1", "u2"), (1, 2, 1, 2))
    return Ideal.from_strings(R, ["x1*u1 - x2", "x1*u2 - x2*u1"])


def chart_u1_model() -> Ideal:
    R = PolyRing(("x1", "x2", "u0", "u2"))
    return Ideal.from_strings(R, ["x1 - x2*u0", "x1*u2 - x2"])


def curvilinear_center(n: int, ell: int) -> Ideal:
    """``(x1^l, x2, ..., xn)``."""
    R = base_ring(n)
    return Ideal.from_strings(R, [f"x1^{ell}"] + [f"x{i}" for i in range(2, n + 1)])


def curvilinear_ring(n: int, ell: int) -> PolyRing:
    us = tuple(f"u{j}" for j in range(1, n + 1))
    return PolyRing(x_names(n) + us, (1,) * n + (ell,) + (1,) * (n - 1))


def curvilinear_fiber_equations(n: int, ell: int) -> Ideal:
    R = curvilinear_ring(n, ell)
    gens = [f"x1^{ell}*u{j} - x{j}*u1" for j in range(2, n + 1)]
    for i in range(2, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(f"x{i}*u{j} - x{j}*u{i}")
    return Ideal.from_strings(R, gens)


def quadric_cone(n: int) -> Ideal:
    """``x1^2 - x2*x3`` in ``k[x1..xn]``."""
    if n < 3:
        raise ValueError("need n >= 3")
    R = base_ring(n)
    return Ideal(R, [R("x1^2 - x2*x3")])


def power_ideal_J(n: int) -> Ideal:
    """``(x3, ..., xn) + (x1, x2)^2``, the same ideal as the non-curvilinear center."""
    return noncurvilinear_center(n)
