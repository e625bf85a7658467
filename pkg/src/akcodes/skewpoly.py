"""The skew polynomial ring A_k[x, Theta_S] and its quotient by x^n - 1.

Multiplication follows ``x a = Theta_S(a) x``.  Because Theta_S is an
involution, ``x^i a = Theta_S^(i mod 2)(a) x^i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .ring import (
    RingElement,
    RingMismatchError,
    check_level,
    format_element,
    parse_element,
    subset_mask,
    theta_apply,
)

Vector = tuple[RingElement, ...]


class PolyParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


@dataclass(frozen=True)
class SkewPolynomial:
    """sum c_i x^i over A_k with twist Theta_S; ``coeffs`` are low degree first."""

    k: int
    S: frozenset[int]
    coeffs: tuple[RingElement, ...]

    def __post_init__(self):
        check_level(self.k)
        object.__setattr__(self, "S", frozenset(self.S))
        subset_mask(self.S, self.k)
        cs = list(self.coeffs)
        for c in cs:
            if c.k != self.k:
                raise RingMismatchError(f"coefficient in A_{c.k}, polynomial over A_{self.k}")
        while cs and c_is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls, k: int, S: Iterable[int] = ()) -> SkewPolynomial:
        return cls(k, frozenset(S), ())

    @classmethod
    def constant(cls, a: RingElement, S: Iterable[int] = ()) -> SkewPolynomial:
        return cls(a.k, frozenset(S), (a,))

    @classmethod
    def x_power(cls, i: int, k: int, S: Iterable[int] = ()) -> SkewPolynomial:
        zero = RingElement.zero(k)
        return cls(k, frozenset(S), (zero,) * i + (RingElement.one(k),))

    @classmethod
    def from_vector(cls, vec: Sequence[RingElement], S: Iterable[int] = ()) -> SkewPolynomial:
        return cls(vec[0].k, frozenset(S), tuple(vec))

    @classmethod
    def parse(cls, text: str, k: int, S: Iterable[int] = ()) -> SkewPolynomial:
        return parse_poly(text, k, S)

    @property
    def degree(self) -> int | None:
        """Highest nonzero power; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, i: int) -> RingElement:
        return self.coeffs[i] if i < len(self.coeffs) else RingElement.zero(self.k)

    def _check(self, other: SkewPolynomial) -> None:
        if other.k != self.k or other.S != self.S:
            raise RingMismatchError(
                f"polynomials over A_{self.k}[x, Theta_{sorted(self.S)}] and "
                f"A_{other.k}[x, Theta_{sorted(other.S)}] cannot be combined")

    def __add__(self, other: SkewPolynomial) -> SkewPolynomial:
        self._check(other)
        m = max(len(self.coeffs), len(other.coeffs))
        return SkewPolynomial(self.k, self.S,
                              tuple(self.coefficient(i) + other.coefficient(i) for i in range(m)))

    __sub__ = __add__

    def __mul__(self, other: SkewPolynomial) -> SkewPolynomial:
        return skew_mul(self, other)

    def scale_left(self, a: RingElement) -> SkewPolynomial:
        return SkewPolynomial(self.k, self.S, tuple(a * c for c in self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)


def c_is_zero(c: RingElement) -> bool:
    return c.bits == 0


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """(sum a_i x^i)(sum b_j x^j) = sum a_i Theta_S^i(b_j) x^(i+j)."""
    f._check(g)
    if not f.coeffs or not g.coeffs:
        return SkewPolynomial.zero(f.k, f.S)
    zero = RingElement.zero(f.k)
    out = [zero] * (len(f.coeffs) + len(g.coeffs) - 1)
    twisted = [theta_apply(f.S, b) for b in g.coeffs]
    for i, a in enumerate(f.coeffs):
        if not a.bits:
            continue
        row = twisted if i % 2 else g.coeffs
        for j, b in enumerate(row):
            out[i + j] = out[i + j] + a * b
    return SkewPolynomial(f.k, f.S, tuple(out))


# ---------------------------------------------------------------------------
# The quotient module (A_k)_n
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientContext:
    n: int
    S: frozenset[int]
    k: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("code length n must be positive")
        check_level(self.k)
        object.__setattr__(self, "S", frozenset(self.S))
        subset_mask(self.S, self.k)


def mod_xn_minus_1(f: SkewPolynomial, ctx: QuotientContext) -> Vector:
    """Reduce f modulo the left ideal generated by x^n - 1.

    ``a x^(qn + r)`` equals ``a x^r (x^n)^q`` and is congruent to ``a x^r``,
    so exponents simply fold mod n.  With this reduction multiplying by x on
    the left agrees with the Theta_S-shift of the coefficient vector.
    """
    if f.k != ctx.k or f.S != ctx.S:
        raise RingMismatchError("polynomial and quotient context disagree on k or S")
    out = [RingElement.zero(ctx.k)] * ctx.n
    for i, c in enumerate(f.coeffs):
        out[i % ctx.n] = out[i % ctx.n] + c
    return tuple(out)


def theta_shift(c: Sequence[RingElement], S: Iterable[int]) -> Vector:
    """T_{Theta_S}(c) = (Theta_S(c_{n-1}), Theta_S(c_0), ..., Theta_S(c_{n-2}))."""
    S = frozenset(S)
    return tuple(theta_apply(S, x) for x in (c[-1],) + tuple(c[:-1]))


def span_from_generators(gens: Sequence[SkewPolynomial], ctx: QuotientContext) -> list[Vector]:
    """Generators of the left submodule spanned by ``gens``, as an A_k-spanning set.

    Returns x^i * g mod (x^n - 1) for 0 <= i < 2n; the twist has period
    dividing 2n, so the A_k-span of this list is the whole left module.
    """
    out = []
    for g in gens:
        if g.k != ctx.k or g.S != ctx.S:
            raise RingMismatchError("generator and quotient context disagree on k or S")
        vec = mod_xn_minus_1(g, ctx)
        for _ in range(2 * ctx.n):
            out.append(vec)
            vec = theta_shift(vec, ctx.S)
    return out


def skew_ring_isomorphic(S1: Iterable[int], S2: Iterable[int]) -> bool:
    return len(set(S1)) == len(set(S2))


def count_isomorphic(S: Iterable[int], k: int) -> int:
    """Number of twists S' ⊆ {1..k} whose skew ring is isomorphic to that of S."""
    S = set(S)
    subset_mask(S, k)
    return comb(k, len(S))


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------


def format_poly(f: SkewPolynomial) -> str:
    """High degree first, e.g. ``x^4+(1+v1)x^3+x^2+v1x+1``."""
    if not f.coeffs:
        return "0"
    terms = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if not c.bits:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        cs = format_element(c)
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif "+" in cs:
            terms.append(f"({cs}){mono}")
        else:
            terms.append(cs + mono)
    return "+".join(terms)


_UINT = re.compile(r"\d+")


class _PolyParser:
    def __init__(self, text: str, k: int):
        self.text = text
        self.s = "".join(text.split())  # whitespace is insignificant
        # map stripped positions back to the original text for error messages
        self.orig = [i for i, ch in enumerate(text) if not ch.isspace()]
        self.pos = 0
        self.k = k

    def error(self, msg: str):
        p = self.orig[self.pos] if self.pos < len(self.orig) else len(self.text)
        raise PolyParseError(msg, self.text, p)

    def peek(self) -> str:
        return self.s[self.pos] if self.pos < len(self.s) else ""

    def uint(self) -> int:
        m = _UINT.match(self.s, self.pos)
        if not m:
            self.error("expected an unsigned integer")
        self.pos = m.end()
        return int(m.group())

    def vprod(self) -> int:
        mask = 0
        while self.peek() == "v":
            start = self.pos
            self.pos += 1
            i = self.uint()
            if not 1 <= i <= self.k:
                self.pos = start
                self.error(f"generator v{i} does not exist in A_{self.k}")
            mask |= 1 << (i - 1)
            if self.peek() == "*" and self.s[self.pos + 1:self.pos + 2] == "v":
                self.pos += 1
        return 1 << mask

    def vterm(self) -> int:
        if self.peek() == "1":
            self.pos += 1
            return 1
        if self.peek() == "0":
            self.pos += 1
            return 0
        if self.peek() == "v":
            return self.vprod()
        self.error("expected '1' or a product of generators")

    def coef(self) -> int | None:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            bits = self.vterm()
            while self.peek() == "+":
                self.pos += 1
                bits ^= self.vterm()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return bits
        if ch and ch in "01":
            # a bare digit; '1' may be followed by x
            self.pos += 1
            return int(ch)
        if ch == "v":
            return self.vprod()
        return None

    def term(self) -> tuple[int, int]:
        start = self.pos
        c = self.coef()
        if c is not None and self.peek() == "*":
            self.pos += 1
        exp = None
        if self.peek() == "x":
            self.pos += 1
            exp = 1
            if self.peek() == "^":
                self.pos += 1
                if self.peek() == "{":  # tolerate LaTeX braces
                    self.pos += 1
                    exp = self.uint()
                    if self.peek() != "}":
                        self.error("expected '}'")
                    self.pos += 1
                else:
                    exp = self.uint()
        if c is None and exp is None:
            self.pos = start
            self.error("expected a term")
        return (1 if c is None else c), (0 if exp is None else exp)

    def poly(self) -> dict[int, int]:
        if not self.s:
            self.error("empty polynomial")
        acc: dict[int, int] = {}
        while True:
            c, e = self.term()
            acc[e] = acc.get(e, 0) ^ c
            if self.pos == len(self.s):
                return acc
            if self.peek() != "+":
                self.error("expected '+'")
            self.pos += 1


def parse_poly(text: str, k: int, S: Iterable[int] = ()) -> SkewPolynomial:
    """Parse a polynomial such as ``x^4+(v1+1)x^3+x^2+v1x+1``."""
    check_level(k)
    acc = _PolyParser(text, k).poly()
    deg = max(acc) if acc else 0
    coeffs = tuple(RingElement(k, acc.get(i, 0)) for i in range(deg + 1))
    return SkewPolynomial(k, frozenset(S), coeffs)


def parse_vector(text: str, k: int) -> Vector:
    """Parse ``"(1, v1+v2, 0)"`` into a tuple of ring elements."""
    t = text.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise ValueError(f"vector must be written as (c0, c1, ...): {text!r}")
    parts = t[1:-1].split(",")
    if not t[1:-1].strip():
        raise ValueError("empty vector")
    return tuple(parse_element(p, k) for p in parts)


def format_vector(vec: Sequence[RingElement]) -> str:
    return "(" + ", ".join(str(c) for c in vec) + ")"
