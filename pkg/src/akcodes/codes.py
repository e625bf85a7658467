"""Linear codes over A_k^n and their binary CRT components.

A code is held as its A_k generators together with the 2^k binary codes
obtained by evaluating every generator at each point b of {0,1}^k.  Since
evaluation is a ring isomorphism A_k -> F2^(2^k), membership, duals,
cardinality and distance all reduce to GF(2) linear algebra on the
components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .gf2 import BinaryCode, DistanceInfeasible
from .gray import big_sigma_S, gray_vector, quasi_cyclic_normalizer
from .ring import (
    RingElement,
    RingMismatchError,
    _zeta,
    check_level,
    idempotent,
    subset_mask,
    theta_apply,
)
from .skewpoly import QuotientContext, SkewPolynomial, Vector, span_from_generators, theta_shift

MAX_BRUTE_LOG_SIZE = 24


def _component_words(vec: Sequence[RingElement], k: int) -> list[int]:
    """Word b of the result is (c_1(b), ..., c_n(b)) packed LSB first."""
    words = [0] * (1 << k)
    for j, c in enumerate(vec):
        vals = _zeta(k, c.bits)
        b = 0
        while vals:
            if vals & 1:
                words[b] |= 1 << j
            vals >>= 1
            b += 1
    return words


def _vector_from_components(words: Sequence[int], k: int, n: int) -> Vector:
    out = []
    for j in range(n):
        vals = 0
        for b, w in enumerate(words):
            if (w >> j) & 1:
                vals |= 1 << b
        out.append(RingElement(k, _zeta(k, vals)))
    return tuple(out)


def theta_point_map(T: Iterable[int], k: int) -> list[int]:
    """mu_T(b) = b XOR mask(T): how Theta_T permutes the evaluation points."""
    m = subset_mask(T, k)
    return [b ^ m for b in range(1 << k)]


class Code:
    """An A_k-linear code of length n.

    Build one from generator vectors (``Code(k, n, gens)``), from skew
    polynomials (``Code.from_polynomials``) or from its binary components
    (``Code.from_components``).
    """

    def __init__(self, k: int, n: int, generators: Iterable[Sequence[RingElement]] = (),
                 *, components: Sequence[BinaryCode] | None = None):
        self.k = check_level(k)
        if n < 1:
            raise ValueError("code length n must be positive")
        self.n = n
        gens = tuple(tuple(g) for g in generators)
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator of length {len(g)} in a code of length {n}")
            for c in g:
                if c.k != k:
                    raise RingMismatchError(f"generator entry in A_{c.k}, code over A_{k}")
        self.generators: tuple[Vector, ...] = gens
        if components is not None:
            comps = tuple(components)
            if len(comps) != 1 << k or any(c.length != n for c in comps):
                raise ValueError(f"need 2^{k} binary components of length {n}")
            self._components = comps
        else:
            self._components = None

    @classmethod
    def from_components(cls, k: int, n: int, components: Sequence[BinaryCode]) -> Code:
        """CRT(C_1, ..., C_{2^k}); generators are the idempotent lifts of the bases."""
        comps = tuple(components)
        gens = []
        for b, comp in enumerate(comps):
            e = idempotent(k, b)
            zero = RingElement.zero(k)
            for row in comp.basis:
                gens.append(tuple(e if (row >> j) & 1 else zero for j in range(n)))
        return cls(k, n, gens, components=comps)

    @classmethod
    def from_polynomials(cls, polys: Sequence[SkewPolynomial], n: int) -> Code:
        """The left A_k[x, Theta_S]-submodule of (A_k)_n generated by ``polys``."""
        if not polys:
            raise ValueError("need at least one generator polynomial")
        ctx = QuotientContext(n, polys[0].S, polys[0].k)
        return cls(ctx.k, n, span_from_generators(polys, ctx))

    @classmethod
    def zero(cls, k: int, n: int) -> Code:
        return cls.from_components(k, n, [BinaryCode.zero(n)] * (1 << k))

    @classmethod
    def full(cls, k: int, n: int) -> Code:
        return cls.from_components(k, n, [BinaryCode.full(n)] * (1 << k))

    # -- structure -----------------------------------------------------------

    @property
    def components(self) -> tuple[BinaryCode, ...]:
        if self._components is None:
            self._components = crt_decompose(self)
        return self._components

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(c.dim for c in self.components)

    @property
    def log2_size(self) -> int:
        return sum(self.dims)

    @property
    def cardinality(self) -> int:
        return 1 << self.log2_size

    @cached_property
    def f2_basis(self) -> tuple[Vector, ...]:
        """An F2-basis of the code: e_b * r for each basis row r of component b."""
        return Code.from_components(self.k, self.n, self.components).generators

    def __contains__(self, w: Sequence[RingElement]) -> bool:
        return contains(self, w)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (self.k, self.n, self.components) == (other.k, other.n, other.components)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.components))

    def __repr__(self) -> str:
        return f"Code(k={self.k}, n={self.n}, dims={self.dims})"


def crt_decompose(C: Code) -> tuple[BinaryCode, ...]:
    rows: list[list[int]] = [[] for _ in range(1 << C.k)]
    for g in C.generators:
        for b, w in enumerate(_component_words(g, C.k)):
            if w:
                rows[b].append(w)
    return tuple(BinaryCode.span(C.n, r) for r in rows)


class AdditiveCode:
    """An F2-linear (not necessarily A_k-linear) subset of A_k^n.

    Stored through its Gray image, which is an ordinary binary linear code of
    length n * 2^k because Phi_k is an F2-linear bijection.
    """

    def __init__(self, k: int, n: int, image: BinaryCode):
        self.k = check_level(k)
        self.n = n
        if image.length != n << k:
            raise ValueError(f"Gray image must have length {n << k}")
        self.image = image

    @classmethod
    def span(cls, k: int, n: int, vectors: Iterable[Sequence[RingElement]]) -> AdditiveCode:
        return cls(k, n, BinaryCode.span(n << k, (gray_vector(v).bits for v in vectors)))

    @property
    def log2_size(self) -> int:
        return self.image.dim

    @property
    def cardinality(self) -> int:
        return 1 << self.image.dim

    @cached_property
    def f2_basis(self) -> tuple[Vector, ...]:
        from .gray import BinaryWord, gray_vector_inverse

        return tuple(gray_vector_inverse(BinaryWord(self.n << self.k, r), self.k)
                     for r in self.image.basis)

    def __contains__(self, w: Sequence[RingElement]) -> bool:
        if len(w) != self.n:
            raise ValueError(f"vector of length {len(w)} tested against a code of length {self.n}")
        return gray_vector(w).bits in self.image

    def elements(self) -> set[Vector]:
        from .gray import BinaryWord, gray_vector_inverse

        return {gray_vector_inverse(BinaryWord(self.n << self.k, w), self.k)
                for w in gf2.span_words(self.image.basis, self.n << self.k)}

    def is_linear(self) -> bool:
        """Closed under multiplication by every v_i (hence an A_k-submodule)."""
        gens = [RingElement.gen(i, self.k) for i in range(1, self.k + 1)]
        return all(tuple(g * x for x in c) in self for g in gens for c in self.f2_basis)

    def linear_span(self) -> Code:
        return Code(self.k, self.n, self.f2_basis)

    def to_code(self) -> Code:
        if not self.is_linear():
            raise ValueError("this additive code is not A_k-linear")
        return self.linear_span()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return (self.k, self.n, self.image) == (other.k, other.n, other.image)

    def __hash__(self) -> int:
        return hash((self.k, self.n, self.image))

    def __repr__(self) -> str:
        return f"AdditiveCode(k={self.k}, n={self.n}, log2_size={self.log2_size})"


def contains(C: Code, w: Sequence[RingElement]) -> bool:
    if len(w) != C.n:
        raise ValueError(f"vector of length {len(w)} tested against a code of length {C.n}")
    if any(c.k != C.k for c in w):
        raise RingMismatchError(f"vector is not over A_{C.k}")
    return all(word in comp for word, comp in zip(_component_words(w, C.k), C.components))


def is_theta_cyclic(C: Code | AdditiveCode, S: Iterable[int]) -> bool:
    """Closure of C under the Theta_S-shift, tested on an F2-basis.

    T_{Theta_S} is additive but only semilinear over A_k, so the test runs
    over a full F2-spanning set rather than the A_k-generators.
    """
    S = frozenset(S)
    subset_mask(S, C.k)
    return all(theta_shift(c, S) in C for c in C.f2_basis)


def gray_image(C: Code | AdditiveCode) -> BinaryCode:
    """Phi_k(C), a binary code of length n * 2^k."""
    if isinstance(C, AdditiveCode):
        return C.image
    length = C.n << C.k
    return BinaryCode.span(length, (gray_vector(c).bits for c in C.f2_basis))


@dataclass(frozen=True)
class CharacterizationReport:
    fixed_by_sigma: bool
    quasi_cyclic: bool
    quasi_cyclic_index: int
    theta_cyclic: bool

    @property
    def consistent(self) -> bool:
        return self.fixed_by_sigma == self.quasi_cyclic == self.theta_cyclic


def check_characterization_1(C: Code | AdditiveCode, S: Iterable[int]) -> CharacterizationReport:
    """Compare the three equivalent descriptions of Theta_S-cyclicity.

    (a) Sigma_S fixes the Gray image; (b) after sigma_{S_1} (odd n) or
    sigma_{S_2} (even n) the Gray image is quasi-cyclic of index 2^(k-1) or
    2^k; (c) C is closed under the Theta_S-shift.
    """
    S = frozenset(S)
    img = gray_image(C)
    sigma = big_sigma_S(S, C.n, C.k)
    fixed = img.permuted(sigma.zero_based) == img
    perm, index = quasi_cyclic_normalizer(S, C.n, C.k)
    qc = img.permuted(perm.zero_based).is_quasi_cyclic(index)
    return CharacterizationReport(fixed, qc, index, is_theta_cyclic(C, S))


def is_quasi_cyclic(B: BinaryCode, index: int) -> bool:
    return B.is_quasi_cyclic(index)


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------


def dual(C: Code, T: Iterable[int] = ()) -> Code:
    """The Hermitian dual C^{H_T} (Euclidean when T is empty).

    C^{H_T} = (Theta_T(C))^perp, whose component at b is the binary dual of
    C's component at mu_T(b).
    """
    mu = theta_point_map(T, C.k)
    comps = C.components
    return Code.from_components(C.k, C.n, [comps[mu[b]].dual() for b in range(1 << C.k)])


def is_self_dual(C: Code, T: Iterable[int] = ()) -> bool:
    mu = theta_point_map(T, C.k)
    comps = C.components
    if 2 * C.log2_size != C.n << C.k:
        return False
    return all(comps[b] == comps[mu[b]].dual() for b in range(1 << C.k))


def hermitian_product(w: Sequence[RingElement], u: Sequence[RingElement],
                      T: Iterable[int] = ()) -> RingElement:
    T = frozenset(T)
    acc = RingElement.zero(w[0].k)
    for a, b in zip(w, u, strict=True):
        acc = acc + a * theta_apply(T, b)
    return acc


# ---------------------------------------------------------------------------
# Minimum distance
# ---------------------------------------------------------------------------


def min_distance(C: Code | AdditiveCode, method: str = "components") -> int:
    """Minimum Hamming distance of C over the alphabet A_k.

    ``components`` takes the minimum of the binary component distances;
    ``brute`` enumerates every codeword of C directly in the coefficient
    basis; ``gray`` is the binary distance of the Gray image.  Each raises
    DistanceInfeasible past its enumeration cap.  Additive codes have no
    component splitting, so ``components`` falls back to enumeration there.
    """
    if C.log2_size == 0:
        raise ValueError("the zero code has no minimum distance")
    if isinstance(C, AdditiveCode):
        if method == "gray":
            return gray_min_distance(C)
        if method not in ("components", "brute"):
            raise ValueError(f"unknown distance method {method!r}")
        if C.log2_size > MAX_BRUTE_LOG_SIZE:
            raise DistanceInfeasible(f"|C| = 2^{C.log2_size} exceeds the brute-force cap "
                                     f"2^{MAX_BRUTE_LOG_SIZE}")
        return gf2.min_weight(C.image.basis, C.n << C.k, block=1 << C.k)
    if method == "components":
        return min(comp.min_distance() for comp in C.components if comp.dim)
    if method == "brute":
        return _brute_min_distance(C)
    if method == "gray":
        return gray_min_distance(C)
    raise ValueError(f"unknown distance method {method!r}")


def gray_min_distance(C: Code | AdditiveCode, cap: int = gf2.MAX_ENUM_DIM) -> int:
    if C.log2_size == 0:
        raise ValueError("the zero code has no minimum distance")
    if C.log2_size > cap:
        raise DistanceInfeasible(f"Gray image dimension {C.log2_size} exceeds the cap {cap}")
    return gray_image(C).min_distance(cap)


def coefficient_f2_basis(C: Code) -> tuple[int, ...]:
    """RREF F2-basis of C in the monomial (coefficient) layout.

    Built from the products v_B * g over the A_k-generators, without using
    the CRT components.  Coordinate j occupies bits [j*2^k, (j+1)*2^k).
    """
    k, width = C.k, 1 << C.k
    rows = []
    for g in C.generators:
        for B in range(width):
            mono = RingElement(k, 1 << B)
            row = 0
            for j, c in enumerate(g):
                row |= (mono * c).bits << (j * width)
            if row:
                rows.append(row)
    return gf2.rref(rows)


def _brute_min_distance(C: Code, cap: int = MAX_BRUTE_LOG_SIZE) -> int:
    basis = coefficient_f2_basis(C)
    d = len(basis)
    if d == 0:
        raise ValueError("the zero code has no minimum distance")
    if d > cap:
        raise DistanceInfeasible(f"|C| = 2^{d} exceeds the brute-force cap 2^{cap}")
    width = 1 << C.k
    limbs = (width + 63) // 64
    arr = np.zeros((d, C.n, limbs), dtype=np.uint64)
    mask = (1 << 64) - 1
    for r, row in enumerate(basis):
        for j in range(C.n):
            coord = (row >> (j * width)) & ((1 << width) - 1)
            for l in range(limbs):
                arr[r, j, l] = (coord >> (64 * l)) & mask
    lo = (d + 1) // 2
    low = np.zeros((1, C.n, limbs), dtype=np.uint64)
    for row in arr[:lo]:
        low = np.concatenate([low, low ^ row])
    high = np.zeros((1, C.n, limbs), dtype=np.uint64)
    for row in arr[lo:]:
        high = np.concatenate([high, high ^ row])
    best = C.n + 1
    per = max(1, (1 << 20) // low.shape[0])
    for start in range(0, high.shape[0], per):
        block = high[start:start + per, None] ^ low[None]
        wts = np.any(block != 0, axis=3).sum(axis=2)
        if start == 0:
            wts[0, 0] = C.n + 1  # the zero codeword
        best = min(best, int(wts.min()))
    return best
