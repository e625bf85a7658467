"""Arithmetic in A_k = F2[v1..vk]/<vi^2 = vi>.

An element is stored as an int bitset of 2^k coefficients: bit ``idx(B)``
holds the coefficient of the monomial v_B, where ``idx(B) = sum(2^(i-1))``
over i in B.  With this layout the evaluation map onto F2^(2^k) (the CRT
isomorphism) is a sequence of butterfly passes over the bitset, and the
product becomes a bitwise AND in the evaluation basis.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_K = 16


class RingMismatchError(ValueError):
    """Raised when elements of different rings A_k meet in one operation."""


class RingParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


def check_level(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level k must be a positive integer, got {k!r}")
    if k > MAX_K:
        raise ValueError(f"level k={k} exceeds the supported maximum {MAX_K}")
    return k


@lru_cache(maxsize=None)
def _full_mask(k: int) -> int:
    return (1 << (1 << k)) - 1


@lru_cache(maxsize=None)
def _high_mask(k: int, i: int) -> int:
    """Positions whose index has bit i-1 set (subsets containing i)."""
    step = 1 << (i - 1)
    mask = 0
    for pos in range(1 << k):
        if pos & step:
            mask |= 1 << pos
    return mask


def _zeta(k: int, bits: int) -> int:
    # GF(2) subset-sum transform; an involution.
    for i in range(1, k + 1):
        step = 1 << (i - 1)
        bits ^= (bits & ~_high_mask(k, i) & _full_mask(k)) << step
    return bits


# ---------------------------------------------------------------------------
# Subsets of {1..k}
# ---------------------------------------------------------------------------


def subset_mask(members: Iterable[int], k: int | None = None) -> int:
    """Pack a set of indices from {1..k} into a k-bit mask."""
    mask = 0
    for i in members:
        if not isinstance(i, int) or i < 1 or (k is not None and i > k):
            bound = f"{{1..{k}}}" if k is not None else "the positive integers"
            raise ValueError(f"index {i!r} is outside {bound}")
        mask |= 1 << (i - 1)
    return mask


def subset_members(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def parse_subset(text: str, k: int | None = None) -> frozenset[int]:
    """Parse ``"1,3"``, ``"{1,3}"``, ``""`` or ``"empty"`` into a set of indices."""
    t = text.strip().strip("{}").strip()
    if t == "" or t.lower() in ("empty", "none", "∅"):
        return frozenset()
    try:
        members = [int(p) for p in t.split(",") if p.strip()]
    except ValueError:
        raise ValueError(f"bad subset {text!r}: expected a comma list of integers") from None
    subset_mask(members, k)
    return frozenset(members)


def format_subset(members: Iterable[int]) -> str:
    s = sorted(members)
    return ",".join(str(i) for i in s) if s else "empty"


def all_subsets(k: int) -> list[frozenset[int]]:
    """Every subset of {1..k}, in mask order."""
    return [frozenset(subset_members(m)) for m in range(1 << k)]


# ---------------------------------------------------------------------------
# Ring elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class RingElement:
    """An element of A_k; ``bits`` holds the coefficients alpha_B."""

    k: int
    bits: int

    def __post_init__(self):
        check_level(self.k)
        if self.bits < 0 or self.bits >> (1 << self.k):
            raise ValueError(f"coefficient vector {self.bits:#x} does not fit A_{self.k}")

    # constructors
    @classmethod
    def zero(cls, k: int) -> RingElement:
        return cls(k, 0)

    @classmethod
    def one(cls, k: int) -> RingElement:
        return cls(k, 1)

    @classmethod
    def gen(cls, i: int, k: int) -> RingElement:
        """The generator v_i."""
        if not 1 <= i <= k:
            raise ValueError(f"generator v{i} does not exist in A_{k}")
        return cls(k, 1 << (1 << (i - 1)))

    @classmethod
    def monomial(cls, members: Iterable[int], k: int) -> RingElement:
        return cls(k, 1 << subset_mask(members, k))

    @classmethod
    def parse(cls, text: str, k: int) -> RingElement:
        return parse_element(text, k)

    # coefficient access
    def coefficient(self, members: Iterable[int]) -> int:
        return (self.bits >> subset_mask(members, self.k)) & 1

    def support(self) -> list[frozenset[int]]:
        return [frozenset(subset_members(p)) for p in range(1 << self.k) if (self.bits >> p) & 1]

    def is_zero(self) -> bool:
        return self.bits == 0

    def _check(self, other: RingElement) -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {type(other).__name__}")
        if other.k != self.k:
            raise RingMismatchError(f"cannot combine elements of A_{self.k} and A_{other.k}")

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        return RingElement(self.k, self.bits ^ other.bits)

    __sub__ = __add__

    def __neg__(self) -> RingElement:
        return self

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        k = self.k
        return RingElement(k, _zeta(k, _zeta(k, self.bits) & _zeta(k, other.bits)))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"RingElement(k={self.k}, {format_element(self)!r})"


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def mul_naive(a: RingElement, b: RingElement) -> RingElement:
    """Product by the defining double loop over monomials (v_B v_C = v_{B|C})."""
    a._check(b)
    out = 0
    n = 1 << a.k
    for p in range(n):
        if (a.bits >> p) & 1:
            for q in range(n):
                if (b.bits >> q) & 1:
                    out ^= 1 << (p | q)
    return RingElement(a.k, out)


def elements(k: int) -> Iterator[RingElement]:
    """All 2^(2^k) elements of A_k."""
    check_level(k)
    for bits in range(1 << (1 << k)):
        yield RingElement(k, bits)


# ---------------------------------------------------------------------------
# Automorphisms
# ---------------------------------------------------------------------------


def theta_apply(S: Iterable[int], a: RingElement) -> RingElement:
    """Apply Theta_S, the substitution v_i -> v_i + 1 for i in S."""
    bits = a.bits
    k = a.k
    for i in sorted(set(S)):
        if not 1 <= i <= k:
            raise ValueError(f"index {i} is outside {{1..{k}}}")
        bits ^= (bits & _high_mask(k, i)) >> (1 << (i - 1))
    return RingElement(k, bits)


@dataclass(frozen=True)
class GeneralAutomorphism:
    """The automorphism v_i -> v_{j} + flip, stored as ``images[i-1] = (j, flip)``."""

    images: tuple[tuple[int, int], ...]

    def __post_init__(self):
        k = len(self.images)
        check_level(k)
        targets = [j for j, _ in self.images]
        if sorted(targets) != list(range(1, k + 1)):
            raise ValueError(f"index map {targets} is not a bijection of {{1..{k}}}")
        if any(f not in (0, 1) for _, f in self.images):
            raise ValueError("flips must be 0 or 1")

    @property
    def k(self) -> int:
        return len(self.images)

    @classmethod
    def theta(cls, S: Iterable[int], k: int) -> GeneralAutomorphism:
        s = set(S)
        return cls(tuple((i, int(i in s)) for i in range(1, k + 1)))

    def image_of_generator(self, i: int) -> RingElement:
        j, flip = self.images[i - 1]
        return RingElement.gen(j, self.k) + RingElement(self.k, flip)

    def __call__(self, a: RingElement) -> RingElement:
        return general_auto_apply(self, a)

    def compose(self, other: GeneralAutomorphism) -> GeneralAutomorphism:
        """``self ∘ other``."""
        imgs = []
        for i in range(1, self.k + 1):
            j, f = other.images[i - 1]
            j2, f2 = self.images[j - 1]
            imgs.append((j2, f ^ f2))
        return GeneralAutomorphism(tuple(imgs))


def general_auto_apply(phi: GeneralAutomorphism, a: RingElement) -> RingElement:
    if phi.k != a.k:
        raise RingMismatchError(f"automorphism of A_{phi.k} applied to an element of A_{a.k}")
    k = a.k
    gens = [phi.image_of_generator(i) for i in range(1, k + 1)]
    out = RingElement.zero(k)
    for B in a.support():
        term = RingElement.one(k)
        for i in B:
            term = term * gens[i - 1]
        out = out + term
    return out


def is_involution(phi: GeneralAutomorphism) -> tuple[bool, str | None]:
    """Whether phi∘phi is the identity, and which form it takes.

    The classification is ``"theta"`` when every v_i maps to v_i or v_i+1
    (so phi is some Theta_S), ``"swap"`` when some generators are exchanged
    (v_i -> w_j with w_j -> v_i), and ``None`` when phi is not an involution.
    """
    square = phi.compose(phi)
    if any(img != (i, 0) for i, img in enumerate(square.images, start=1)):
        return False, None
    if all(j == i for i, (j, _) in enumerate(phi.images, start=1)):
        return True, "theta"
    return True, "swap"


# ---------------------------------------------------------------------------
# Units and ideals
# ---------------------------------------------------------------------------


def is_unit(a: RingElement) -> bool:
    # Every evaluation must be 1, which pins a to 1.
    return a.bits == 1


def principal_generator(gens: Sequence[RingElement]) -> RingElement:
    """Sum of all non-empty products of the generators.

    Over A_k this single element generates the same ideal as ``gens``.
    """
    if not gens:
        raise ValueError("principal_generator needs at least one generator")
    k = gens[0].k
    for g in gens:
        gens[0]._check(g)
    # sum over non-empty A of prod_{i in A} a_i  =  1 + prod (1 + a_i)
    one = RingElement.one(k)
    prod = one
    for g in gens:
        prod = prod * (one + g)
    return one + prod


def ideal_elements(gens: Sequence[RingElement]) -> frozenset[RingElement]:
    """All elements of the ideal generated by ``gens`` (by enumeration)."""
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    k = gens[0].k
    found = {RingElement.zero(k)}
    for g in gens:
        multiples = {r * g for r in elements(k)}
        found = {x + y for x in found for y in multiples}
    return frozenset(found)


@dataclass(frozen=True)
class MaximalIdeal:
    """The ideal <w_1, ..., w_k> with w_i = v_i + flips_i."""

    k: int
    flips: tuple[int, ...]

    @property
    def choices(self) -> tuple[RingElement, ...]:
        return tuple(RingElement.gen(i, self.k) + RingElement(self.k, f)
                     for i, f in enumerate(self.flips, start=1))

    @property
    def generator(self) -> RingElement:
        return principal_generator(self.choices)

    @property
    def point(self) -> int:
        """The point b (v_i = flips_i) at which every member of the ideal vanishes."""
        return sum(f << (i - 1) for i, f in enumerate(self.flips, start=1))

    @property
    def cardinality(self) -> int:
        return 2 ** ((1 << self.k) - 1)

    def __contains__(self, a: RingElement) -> bool:
        return evaluate(a, self.point) == 0

    def describe(self) -> str:
        return "<" + ", ".join(str(w) for w in self.choices) + ">"


def maximal_ideals(k: int) -> list[MaximalIdeal]:
    check_level(k)
    return [MaximalIdeal(k, tuple((m >> (i - 1)) & 1 for i in range(1, k + 1)))
            for m in range(1 << k)]


# ---------------------------------------------------------------------------
# CRT
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CrtVector:
    """Values of an element at the 2^k points b in {0,1}^k (bit b of ``values``)."""

    k: int
    values: int

    def __post_init__(self):
        check_level(self.k)
        if self.values < 0 or self.values >> (1 << self.k):
            raise ValueError("CRT vector does not fit the level")

    def __getitem__(self, b: int) -> int:
        return (self.values >> b) & 1

    def to_list(self) -> list[int]:
        return [(self.values >> b) & 1 for b in range(1 << self.k)]


def crt_forward(a: RingElement) -> CrtVector:
    return CrtVector(a.k, _zeta(a.k, a.bits))


def crt_inverse(v: CrtVector) -> RingElement:
    return RingElement(v.k, _zeta(v.k, v.values))


def evaluate(a: RingElement, b: int) -> int:
    """Value of ``a`` at the point v_i = bit (i-1) of ``b``."""
    return (_zeta(a.k, a.bits) >> b) & 1


@lru_cache(maxsize=None)
def idempotent(k: int, b: int) -> RingElement:
    """The primitive idempotent that is 1 at point ``b`` and 0 elsewhere."""
    return RingElement(k, _zeta(k, 1 << b))


# ---------------------------------------------------------------------------
# Text syntax
# ---------------------------------------------------------------------------

_MONO_RE = re.compile(r"v(\d+)")


def format_element(a: RingElement) -> str:
    if a.bits == 0:
        return "0"
    terms = []
    for p in range(1 << a.k):
        if (a.bits >> p) & 1:
            members = subset_members(p)
            terms.append("".join(f"v{i}" for i in members) if members else "1")
    return "+".join(terms)


def parse_element(text: str, k: int) -> RingElement:
    """Parse ``"1+v1+v1v2"`` style text (also ``v1*v2``, ``0``, whitespace)."""
    check_level(k)
    s = text
    pos = 0
    n = len(s)
    total = 0

    def skip_ws(p: int) -> int:
        while p < n and s[p].isspace():
            p += 1
        return p

    pos = skip_ws(pos)
    if pos == n:
        raise RingParseError("empty ring element", text, pos)
    while True:
        pos = skip_ws(pos)
        if pos < n and s[pos] in "01":
            total ^= int(s[pos] == "1")
            pos += 1
        elif pos < n and s[pos] == "v":
            mask = 0
            while True:
                pos = skip_ws(pos)
                m = _MONO_RE.match(s, pos)
                if not m:
                    raise RingParseError("expected generator v<i>", text, pos)
                i = int(m.group(1))
                if not 1 <= i <= k:
                    raise RingParseError(f"generator v{i} does not exist in A_{k}", text, pos)
                mask |= 1 << (i - 1)
                pos = skip_ws(m.end())
                if pos < n and s[pos] == "*":
                    pos += 1
                    continue
                if pos < n and s[pos] == "v":
                    continue
                break
            total ^= 1 << mask
        else:
            raise RingParseError("expected a monomial", text, pos)
        pos = skip_ws(pos)
        if pos == n:
            break
        if s[pos] != "+":
            raise RingParseError("expected '+'", text, pos)
        pos += 1
    return RingElement(k, total)


def element_from_subsets(subsets: Iterable[Iterable[int]], k: int) -> RingElement:
    """Sum of v_B over the given subsets B (a symbolic constructor used in tests)."""
    bits = 0
    for B in subsets:
        bits ^= 1 << subset_mask(B, k)
    return RingElement(k, bits)
