"""Exact polynomial arithmetic over the rationals.

Polynomials are immutable term maps ``{exponent tuple: mpq}`` attached to a
:class:`PolyRing`.  Monomials are plain tuples of non-negative ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from operator import add
from typing import Callable, Iterable, Mapping, Sequence

from gmpy2 import mpq

Monomial = tuple  # tuple[int, ...]
Coefficient = type(mpq(0))


class RingMismatchError(ValueError):
    """Operands live in different polynomial rings."""


def QQ(value) -> Coefficient:
    """Coerce ints, Fractions, strings like ``"3/4"`` or mpq into an mpq."""
    if isinstance(value, Coefficient):
        return value
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, str)):
        return mpq(value)
    raise TypeError(f"cannot use {type(value).__name__} as a rational coefficient")


def format_coefficient(c) -> str:
    c = QQ(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


# --------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """Return ``b / a``; caller guarantees divisibility."""
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_degree(a: Monomial, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(a)
    return sum(w * e for w, e in zip(weights, a))


# --------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A global monomial order.

    ``kind`` is one of ``"lex"``, ``"grevlex"`` (standard degree),
    ``"wgrevlex"`` (ring weights, reverse-lex tie break) or ``"block"``.  A
    block order compares the first ``head`` variables with ``inner`` and breaks
    ties on the remaining ones with ``tail``; it eliminates the head block.
    """

    kind: str = "wgrevlex"
    head: int = 0
    inner: MonomialOrder | None = None
    tail: MonomialOrder | None = None

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "wgrevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block":
            if self.head < 0:
                raise ValueError("block size must be non-negative")
            if self.inner is None:
                object.__setattr__(self, "inner", WGREVLEX)
            if self.tail is None:
                object.__setattr__(self, "tail", WGREVLEX)

    def key_function(self, weights: Sequence[int]) -> Callable[[Monomial], tuple]:
        """Return ``key`` with ``a > b`` iff ``key(a) > key(b)``.

        Keys are flat tuples of ints so they can be negated or concatenated.
        """
        weights = tuple(weights)
        if self.kind == "lex":
            return tuple
        if self.kind == "grevlex":
            return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
        if self.kind == "wgrevlex":
            if all(w == 1 for w in weights):
                return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
            return lambda e: (sum(map(int.__mul__, weights, e)),) + tuple(-x for x in reversed(e))
        k = self.head
        inner = self.inner.key_function(weights[:k])
        tail = self.tail.key_function(weights[k:])
        return lambda e: inner(e[:k]) + tail(e[k:])

    def __str__(self):
        if self.kind == "block":
            return f"elim:{self.head}"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")
WGREVLEX = MonomialOrder("wgrevlex")
DEFAULT_ORDER = WGREVLEX


def block_order(head: int, inner: MonomialOrder = WGREVLEX, tail: MonomialOrder = WGREVLEX) -> MonomialOrder:
    return MonomialOrder("block", head, inner, tail)


def parse_order(text: str) -> MonomialOrder:
    """Parse ``lex``, ``grevlex``, ``wgrevlex`` or ``elim:<k>``."""
    text = text.strip()
    if text.startswith("elim:"):
        return block_order(int(text[5:]))
    return MonomialOrder(text)


def compare(order: MonomialOrder, a: Monomial, b: Monomial, weights: Sequence[int] | None = None) -> int:
    """Three-way comparison: -1, 0 or 1 for LT, EQ, GT."""
    if len(a) != len(b):
        raise RingMismatchError("monomials have different numbers of variables")
    key = order.key_function(weights if weights is not None else (1,) * len(a))
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


# --------------------------------------------------------------------------
# rings


@dataclass(frozen=True)
class PolyRing:
    """``Q[variables]`` with positive integer weights (default all 1)."""

    variables: tuple[str, ...]
    weights: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        weights = self.weights
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables):
            raise ValueError("need exactly one weight per variable")
        if any(w < 1 for w in weights):
            raise ValueError("variable weights must be positive")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.variables}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def var(self, name: str) -> Polynomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial._raw(self, {tuple(exps): mpq(1)})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(v) for v in self.variables)

    def zero(self) -> Polynomial:
        return Polynomial._raw(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = QQ(c)
        return Polynomial._raw(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Monomial, coeff=1) -> Polynomial:
        return Polynomial(self, {tuple(exps): coeff})

    def __call__(self, text: str) -> Polynomial:
        """Parse a polynomial written in the ``.ca`` expression syntax."""
        from .parser import parse_polynomial

        return parse_polynomial(text, self)

    def with_weights(self, weights: Sequence[int]) -> PolyRing:
        return PolyRing(self.variables, tuple(weights))

    def drop(self, names: Iterable[str]) -> PolyRing:
        names = set(names)
        keep = [i for i, v in enumerate(self.variables) if v not in names]
        return PolyRing(tuple(self.variables[i] for i in keep), tuple(self.weights[i] for i in keep))

    def fresh_name(self, base: str = "t") -> str:
        if base not in self:
            return base
        i = 0
        while f"{base}{i}" in self:
            i += 1
        return f"{base}{i}"

    def __str__(self):
        body = " ".join(self.variables)
        if any(w != 1 for w in self.weights):
            body += " weights " + " ".join(map(str, self.weights))
        return f"QQ[{body}]"


# --------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Immutable polynomial: a map from exponent tuples to nonzero rationals."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object] | None = None):
        clean = {}
        n = ring.nvars
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for {n} variables")
            c = QQ(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.ring = ring
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> Polynomial:
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # -- coercion ----------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        try:
            return self.ring.const(other)
        except TypeError:
            return NotImplemented

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(map(add, e1, e2))
                v = get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero scalar only; see :meth:`exact_div` for polynomials."""
        if isinstance(other, Polynomial):
            if other.is_constant() and other:
                other = other.constant_term()
            else:
                return self.exact_div(other)
        c = QQ(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return Polynomial._raw(self.ring, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, exps: Monomial, c=1) -> Polynomial:
        c = QQ(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {tuple(map(add, e, exps)): v * c for e, v in self.terms.items()})

    def exact_div(self, g: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
        """Return ``q`` with ``self == q * g``; raise ``ValueError`` if ``g`` does not divide."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        key = order.key_function(self.ring.weights)
        lm = max(g.terms, key=key)
        lc = g.terms[lm]
        rest = dict(self.terms)
        quot: dict = {}
        while rest:
            t = max(rest, key=key)
            if not mono_divides(lm, t):
                raise ValueError("polynomial division is not exact")
            q = mono_div(t, lm)
            c = rest[t] / lc
            quot[q] = c
            for e, v in g.terms.items():
                e2 = tuple(map(add, e, q))
                w = rest.get(e2, 0) - c * v
                if w:
                    rest[e2] = w
                else:
                    rest.pop(e2, None)
        return Polynomial._raw(self.ring, quot)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return (other.ring is self.ring or other.ring == self.ring) and self.terms == other.terms
        if isinstance(other, (int, Fraction, Coefficient)) and not isinstance(other, bool):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_term(self) -> Coefficient:
        return self.terms.get((0,) * self.ring.nvars, mpq(0))

    def sorted_terms(self, order: MonomialOrder = DEFAULT_ORDER) -> list[tuple[Monomial, Coefficient]]:
        key = order.key_function(self.ring.weights)
        return sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key_function(self.ring.weights))

    def leading_coefficient(self, order: MonomialOrder = DEFAULT_ORDER) -> Coefficient:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> Polynomial:
        if not self.terms:
            return self
        return self / self.leading_coefficient(order)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def weighted_degree(self) -> tuple[bool, int | None]:
        """``(is_homogeneous, degree)`` for the ring weights; zero gives ``(True, None)``."""
        if not self.terms:
            return True, None
        w = self.ring.weights
        degs = {mono_degree(e, w) for e in self.terms}
        if len(degs) == 1:
            return True, degs.pop()
        return False, None

    def is_homogeneous(self) -> bool:
        return self.weighted_degree()[0]

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def support(self) -> list[str]:
        """Names of the variables that occur, in ring order."""
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [v for v, u in zip(self.ring.variables, used) if u]

    # -- calculus and evaluation ------------------------------------------

    def diff(self, name: str) -> Polynomial:
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[e2] = c * e[i]
        return Polynomial._raw(self.ring, out)

    def evaluate(self, point: Mapping[str, object] | Sequence) -> Coefficient:
        """Exact value at a rational point (mapping by name or full sequence)."""
        if isinstance(point, Mapping):
            values = [QQ(point[v]) for v in self.ring.variables]
        else:
            values = [QQ(v) for v in point]
            if len(values) != self.ring.nvars:
                raise ValueError("point has the wrong number of coordinates")
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= v**k
            total += term
        return total

    def substitute(self, assignment: Mapping[str, object], target: PolyRing | None = None) -> Polynomial:
        """Apply the ring map sending each assigned variable to its image.

        Unassigned variables go to the variable of the same name in ``target``
        (default: this ring).  Images may be polynomials in ``target`` or scalars.
        """
        target = target or self.ring
        images = []
        for v in self.ring.variables:
            if v in assignment:
                img = assignment[v]
                if isinstance(img, Polynomial):
                    if img.ring != target:
                        raise RingMismatchError(f"image of {v} is not in the target ring")
                else:
                    img = target.const(img)
            else:
                if v not in target:
                    raise KeyError(f"variable {v!r} has no image in the target ring")
                img = target.var(v)
            images.append(img)
        powers: list[dict[int, Polynomial]] = [{} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        out: dict = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term.terms.items():
                v = out.get(e2, 0) + c2
                if v:
                    out[e2] = v
                else:
                    out.pop(e2, None)
        return Polynomial._raw(target, out)

    def change_ring(self, target: PolyRing) -> Polynomial:
        """Re-express in ``target`` matching variables by name."""
        src = self.ring.variables
        used = [i for i in range(len(src)) if any(e[i] for e in self.terms)]
        for i in used:
            if src[i] not in target:
                raise KeyError(f"variable {src[i]!r} missing from target ring")
        pos = [(i, target.index(src[i])) for i in used]
        n = target.nvars
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, j in pos:
                new[j] = e[i]
            out[tuple(new)] = c
        return Polynomial._raw(target, out)

    # -- printing ----------------------------------------------------------

    def to_string(self, order: MonomialOrder = DEFAULT_ORDER) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        pieces = []
        for e, c in self.sorted_terms(order):
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = format_coefficient(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_coefficient(a)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r})"


def weighted_degree(f: Polynomial) -> tuple[bool, int | None]:
    return f.weighted_degree()


def substitute(f: Polynomial, assignment: Mapping[str, object], target: PolyRing | None = None) -> Polynomial:
    return f.substitute(assignment, target)


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def jacobian(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> list[list[Polynomial]]:
    """Rows are generators, columns are partial derivatives."""
    if ring is None:
        ring = gens[0].ring
    return [[g.diff(v) for v in ring.variables] for g in gens]
