"""Gray maps and the coordinate permutations that mirror Theta_S.

Positions in the permutation API are 1-based.  A permutation ``pi`` acts on
a word ``x`` by ``x -> (x[pi(1)], x[pi(2)], ...)``; with this convention the
induced actions compose contravariantly, ``act(pi, act(rho, x)) ==
act(rho ∘ pi, x)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .gf2 import permute_word, word_from_str, word_to_str
from .ring import RingElement, check_level, subset_mask, theta_apply


# ---------------------------------------------------------------------------
# Binary words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryWord:
    length: int
    bits: int

    def __post_init__(self):
        if self.length < 1 or self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit length {self.length}")

    @classmethod
    def parse(cls, text: str) -> BinaryWord:
        return cls(len(text.strip()), word_from_str(text))

    @classmethod
    def from_list(cls, values: Sequence[int]) -> BinaryWord:
        return cls(len(values), sum((v & 1) << j for j, v in enumerate(values)))

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __str__(self) -> str:
        return word_to_str(self.bits, self.length)

    def __add__(self, other: BinaryWord) -> BinaryWord:
        if other.length != self.length:
            raise ValueError("word lengths differ")
        return BinaryWord(self.length, self.bits ^ other.bits)


def _concat(parts: Iterable[int], width: int) -> int:
    out = 0
    for j, p in enumerate(parts):
        out |= p << (j * width)
    return out


# ---------------------------------------------------------------------------
# Phi_k
# ---------------------------------------------------------------------------


def _phi_bits(bits: int, k: int) -> int:
    # phi_k(alpha + beta v_k) = (alpha, alpha + beta), then recurse on each half
    if k == 0:
        return bits
    half = 1 << (k - 1)
    alpha = bits & ((1 << half) - 1)
    beta = bits >> half
    return _phi_bits(alpha, k - 1) | (_phi_bits(alpha ^ beta, k - 1) << half)


def _phi_inverse_bits(word: int, k: int) -> int:
    if k == 0:
        return word
    half = 1 << (k - 1)
    alpha = _phi_inverse_bits(word & ((1 << half) - 1), k - 1)
    alpha_plus_beta = _phi_inverse_bits(word >> half, k - 1)
    return alpha | ((alpha ^ alpha_plus_beta) << half)


def phi_k(a: RingElement) -> BinaryWord:
    """The recursive Gray image of an element of A_k, a word of length 2^k."""
    return BinaryWord(1 << a.k, _phi_bits(a.bits, a.k))


def phi_k_inverse(w: BinaryWord) -> RingElement:
    k = w.length.bit_length() - 1
    if w.length != 1 << k or k < 1:
        raise ValueError(f"word length {w.length} is not a power of two >= 2")
    return RingElement(k, _phi_inverse_bits(w.bits, k))


def gray_vector(vec: Sequence[RingElement]) -> BinaryWord:
    """Coordinatewise Gray image (Phi_k(x_1), ..., Phi_k(x_n)) of a vector."""
    if not vec:
        raise ValueError("empty vector")
    k = vec[0].k
    width = 1 << k
    return BinaryWord(width * len(vec), _concat((_phi_bits(x.bits, k) for x in vec), width))


def gray_vector_inverse(w: BinaryWord, k: int) -> tuple[RingElement, ...]:
    width = 1 << check_level(k)
    if w.length % width:
        raise ValueError(f"word length {w.length} is not a multiple of 2^{k}")
    mask = (1 << width) - 1
    return tuple(RingElement(k, _phi_inverse_bits((w.bits >> (j * width)) & mask, k))
                 for j in range(w.length // width))


# ---------------------------------------------------------------------------
# Psi_{k,p}
# ---------------------------------------------------------------------------


def omega_subsets(k: int, p: int) -> list[frozenset[int]]:
    """The subsets B_1, ..., B_s of {p+1..k} in coordinate order.

    Order is binary counting on the members (B_1 = ∅, B_s = {p+1..k}); for
    p = 0 it coincides with the order of CRT evaluation points.
    """
    m = k - p
    return [frozenset(p + 1 + j for j in range(m) if (t >> j) & 1) for t in range(1 << m)]


def _check_p(k: int, p: int) -> None:
    if not 0 <= p < k:
        raise ValueError(f"p must satisfy 0 <= p < k={k}, got {p}")


def psi_coefficients(a: RingElement, p: int) -> list[int]:
    """alpha_B in A_p (as coefficient bitsets) for every B ⊆ {p+1..k}."""
    _check_p(a.k, p)
    width = 1 << (1 << p)
    mask = width - 1
    return [(a.bits >> (t << p)) & mask for t in range(1 << (a.k - p))]


def _subset_sums(values: list[int]) -> list[int]:
    # y_t = sum over D ⊆ B_t of values_D (binary-counting index = subset mask)
    out = list(values)
    s = len(out)
    step = 1
    while step < s:
        for t in range(s):
            if t & step:
                out[t] ^= out[t ^ step]
        step <<= 1
    return out


def _lift(x: int, p: int):
    return x if p == 0 else RingElement(p, x)


def psi_kp(a: RingElement, p: int) -> tuple:
    """Psi_{k,p}: A_k -> A_p^s, s = 2^(k-p).

    Coordinates are elements of A_p (``RingElement``), or plain 0/1 ints when
    p = 0.
    """
    return tuple(_lift(y, p) for y in _subset_sums(psi_coefficients(a, p)))


def psi_kp_inverse(values: Sequence, k: int, p: int) -> RingElement:
    _check_p(k, p)
    s = 1 << (k - p)
    if len(values) != s:
        raise ValueError(f"expected {s} coordinates, got {len(values)}")
    raw = []
    for y in values:
        if isinstance(y, RingElement):
            if y.k != p:
                raise ValueError(f"coordinate lies in A_{y.k}, expected A_{p}")
            raw.append(y.bits)
        else:
            if p != 0 or y not in (0, 1):
                raise ValueError(f"bad coordinate {y!r} for A_{p}")
            raw.append(int(y))
    alphas = _subset_sums(raw)  # Möbius inversion is the same transform over GF(2)
    bits = 0
    for t, alpha in enumerate(alphas):
        bits |= alpha << (t << p)
    return RingElement(k, bits)


def psi_kp_bar(a: RingElement, p: int, flips: Iterable[int]) -> tuple:
    """Psi_{k,p} taken w.r.t. the basis u_i = v_i + 1 (i in ``flips``), u_i = v_i otherwise."""
    _check_p(a.k, p)
    flips = set(flips)
    if any(not p < i <= a.k for i in flips):
        raise ValueError(f"flips {sorted(flips)} must lie in {{{p + 1}..{a.k}}}")
    # alpha_B in the u-basis are the v-basis coefficients of Theta_flips(a)
    return psi_kp(theta_apply(flips, a), p)


def psi_kp_bar_inverse(values: Sequence, k: int, p: int, flips: Iterable[int]) -> RingElement:
    return theta_apply(set(flips), psi_kp_inverse(values, k, p))


# ---------------------------------------------------------------------------
# Index permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IndexPermutation:
    """A bijection of {1..size}, stored as its one-line image."""

    image: tuple[int, ...]

    def __post_init__(self):
        img = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", img)
        if sorted(img) != list(range(1, len(img) + 1)):
            raise ValueError("image is not a permutation of 1..size")

    @classmethod
    def identity(cls, size: int) -> IndexPermutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def from_zero_based(cls, image: Sequence[int]) -> IndexPermutation:
        return cls(tuple(x + 1 for x in image))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> IndexPermutation:
        img = list(range(1, size + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a - 1] = b
        return cls(tuple(img))

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def zero_based(self) -> tuple[int, ...]:
        return tuple(x - 1 for x in self.image)

    def __call__(self, j: int) -> int:
        return self.image[j - 1]

    def compose(self, other: IndexPermutation) -> IndexPermutation:
        """``self ∘ other``: j -> self(other(j))."""
        self._same(other)
        return IndexPermutation(tuple(self.image[o - 1] for o in other.image))

    def inverse(self) -> IndexPermutation:
        inv = [0] * self.size
        for j, x in enumerate(self.image, start=1):
            inv[x - 1] = j
        return IndexPermutation(tuple(inv))

    def power(self, e: int) -> IndexPermutation:
        if e < 0:
            return self.inverse().power(-e)
        result = IndexPermutation.identity(self.size)
        base = self
        while e:
            if e & 1:
                result = base.compose(result)
            base = base.compose(base)
            e >>= 1
        return result

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * (self.size + 1)
        out = []
        for start in range(1, self.size + 1):
            if seen[start]:
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.image[j - 1]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for c in self.cycles():
            counts[len(c)] = counts.get(len(c), 0) + 1
        return dict(sorted(counts.items()))

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def act(self, seq: Sequence) -> tuple:
        """Induced action on a sequence: (x[pi(1)], ..., x[pi(size)])."""
        if len(seq) != self.size:
            raise ValueError(f"sequence of length {len(seq)} for a permutation of size {self.size}")
        return tuple(seq[i - 1] for i in self.image)

    def act_word(self, word: int | BinaryWord) -> int | BinaryWord:
        if isinstance(word, BinaryWord):
            if word.length != self.size:
                raise ValueError("word length does not match permutation size")
            return BinaryWord(self.size, permute_word(word.bits, self.zero_based))
        return permute_word(word, self.zero_based)

    def cycle_notation(self) -> str:
        cs = [c for c in self.cycles() if len(c) > 1]
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"

    def __str__(self) -> str:
        return " ".join(map(str, self.image))

    def _same(self, other: IndexPermutation) -> None:
        if other.size != self.size:
            raise ValueError(f"permutation sizes differ: {self.size} vs {other.size}")


def cyclic_shift_perm(size: int, r: int = 1) -> IndexPermutation:
    """The index map inducing T^r, T(x_1..x_N) = (x_N, x_1, ..., x_{N-1})."""
    return IndexPermutation(tuple((j - 1 - r) % size + 1 for j in range(1, size + 1)))


def sigma_ik(i: int, k: int) -> IndexPermutation:
    """sigma_{i,k}: rotate each block of 2^i positions by half its length."""
    check_level(k)
    if not 1 <= i <= k:
        raise ValueError(f"i must lie in 1..{k}, got {i}")
    size = 1 << k
    block = 1 << i
    half = block >> 1
    img = []
    for j in range(size):
        start = j - j % block
        img.append(start + (j - start - half) % block + 1)
    return IndexPermutation(tuple(img))


def sigma_Sk(S: Iterable[int], k: int) -> IndexPermutation:
    """Sigma_{S,k}, the product of the sigma_{i,k} over i in S."""
    check_level(k)
    perm = IndexPermutation.identity(1 << k)
    for i in sorted(set(S)):
        perm = sigma_ik(i, k).compose(perm)
    return perm


def big_sigma_S(S: Iterable[int], n: int, k: int) -> IndexPermutation:
    """The permutation of n*2^k positions inducing Sigma_S = tau_S ∘ T^(2^k)."""
    if n < 1:
        raise ValueError("n must be positive")
    width = 1 << check_level(k)
    inner = sigma_Sk(S, k).zero_based
    size = n * width
    tau = [(j // width) * width + inner[j % width] for j in range(size)]
    # (tau_S(T^w(v)))_j = (T^w v)_{tau(j)} = v_{tau(j) - w}
    return IndexPermutation.from_zero_based([(t - width) % size for t in tau])


def tau_S(S: Iterable[int], n: int, k: int) -> IndexPermutation:
    width = 1 << check_level(k)
    inner = sigma_Sk(S, k).zero_based
    return IndexPermutation.from_zero_based(
        [(j // width) * width + inner[j % width] for j in range(n * width)])


def ord_sigma_S(S: Iterable[int], n: int, k: int) -> int:
    """Order of sigma_S: n for even n, 2n for odd n (n when S is empty)."""
    if n < 1:
        raise ValueError("n must be positive")
    S = set(S)
    subset_mask(S, k)
    if n % 2 == 0 or not S:
        return n
    return 2 * n


def _cycle_representatives(S: Iterable[int], k: int, count: int) -> list[int]:
    # offsets t in the first block with t < t XOR mask(S): one per cycle of sigma_S
    mask = subset_mask(S, k)
    reps = [t for t in range(1 << k) if t < t ^ mask]
    assert len(reps) == count
    return reps


def sigma_S1(S: Iterable[int], n: int, k: int) -> IndexPermutation:
    """sigma_{S_1} for odd n: j = a*2^(k-1) + b  ->  sigma_S^(2n-1-a)(r_b).

    r_b is the b-th cycle representative in the first block; when k ∈ S these
    are exactly 1..2^(k-1).  Satisfies T^(2^(k-1)) ∘ Sigma_{S_1} =
    Sigma_{S_1} ∘ Sigma_S as actions on words.
    """
    S = set(S)
    if n % 2 == 0:
        raise ValueError("sigma_S1 needs odd n; use sigma_S2 for even n")
    if not S:
        raise ValueError("sigma_S1 needs a non-empty S (for S = ∅ sigma_S has cycles of length n; use sigma_S2)")
    width = 1 << check_level(k)
    h = width >> 1
    sig = big_sigma_S(S, n, k)
    reps = _cycle_representatives(S, k, h)
    orbits = _orbit_table(sig, [r + 1 for r in reps], 2 * n)
    img = []
    for j in range(1, n * width + 1):
        a, b = divmod(j - 1, h)
        img.append(orbits[b][2 * n - 1 - a])
    return IndexPermutation(tuple(img))


def sigma_S2(S: Iterable[int], n: int, k: int) -> IndexPermutation:
    """sigma_{S_2} for even n: j = a*2^k + b  ->  sigma_S^(n-1-a)(b).

    Also accepts odd n with S = ∅, where sigma_S already has 2^k cycles of
    length n.
    """
    S = set(S)
    if n % 2 and S:
        raise ValueError("sigma_S2 needs even n; use sigma_S1 for odd n")
    width = 1 << check_level(k)
    sig = big_sigma_S(S, n, k)
    orbits = _orbit_table(sig, list(range(1, width + 1)), n)
    img = []
    for j in range(1, n * width + 1):
        a, b = divmod(j - 1, width)
        img.append(orbits[b][n - 1 - a])
    return IndexPermutation(tuple(img))


def _orbit_table(perm: IndexPermutation, starts: list[int], length: int) -> list[list[int]]:
    table = []
    for s in starts:
        row = [s]
        for _ in range(length - 1):
            row.append(perm(row[-1]))
        table.append(row)
    return table


def quasi_cyclic_normalizer(S: Iterable[int], n: int, k: int) -> tuple[IndexPermutation, int]:
    """The permutation taking Sigma_S-invariant words to quasi-cyclic ones, and its index.

    sigma_{S_1} with index 2^(k-1) when sigma_S has cycles of length 2n,
    otherwise sigma_{S_2} with index 2^k.
    """
    S = set(S)
    if n % 2 and S:
        return sigma_S1(S, n, k), 1 << (k - 1)
    return sigma_S2(S, n, k), 1 << k
