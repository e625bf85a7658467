"""Binary linear codes over GF(2) with rows packed into Python ints.

Bit ``j`` of a row is coordinate ``j + 1`` (LSB first).  In text form a word
is a 0/1 string whose leftmost character is position 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

MAX_ENUM_DIM = 28


class DistanceInfeasible(RuntimeError):
    """The requested exhaustive search exceeds its enumeration cap."""


def word_from_str(text: str) -> int:
    text = text.strip()
    if not text or any(c not in "01" for c in text):
        raise ValueError(f"not a binary word: {text!r}")
    return sum(1 << j for j, c in enumerate(text) if c == "1")


def word_to_str(word: int, length: int) -> str:
    return "".join("1" if (word >> j) & 1 else "0" for j in range(length))


def weight(word: int) -> int:
    return bin(word).count("1")


def cyclic_shift(word: int, length: int, r: int = 1) -> int:
    """T^r: position j moves to j + r (mod length)."""
    r %= length
    if r == 0:
        return word
    mask = (1 << length) - 1
    return ((word << r) | (word >> (length - r))) & mask


def permute_word(word: int, image: Sequence[int]) -> int:
    """Induced action of a 0-based index map: out[j] = word[image[j]]."""
    out = 0
    for j, src in enumerate(image):
        if (word >> src) & 1:
            out |= 1 << j
    return out


def rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form; pivots are the lowest set bit of each row.

    The result is canonical: two row lists span the same space exactly when
    their RREFs are equal.
    """
    basis: list[int] = []  # kept reduced against each other
    for r in rows:
        for b in basis:
            if r & (b & -b):
                r ^= b
        if r:
            low = r & -r
            basis = [b ^ r if b & low else b for b in basis]
            basis.append(r)
    basis.sort(key=lambda b: b & -b)
    return tuple(basis)


def reduce_word(word: int, basis: Sequence[int]) -> int:
    """Remainder of ``word`` after elimination against an RREF basis."""
    for b in basis:
        if word & (b & -b):
            word ^= b
    return word


def rank(rows: Iterable[int]) -> int:
    return len(rref(rows))


def orthogonal_complement(basis: Sequence[int], length: int) -> tuple[int, ...]:
    """Basis of {x : <x, b> = 0 for every b}, via the standard-form trick."""
    basis = rref(basis)
    pivots = [b & -b for b in basis]
    pivot_mask = 0
    for p in pivots:
        pivot_mask |= p
    out = []
    for j in range(length):
        bit = 1 << j
        if pivot_mask & bit:
            continue
        # free column j: x_j = 1, x_pivot(b) = b_j for each row
        x = bit
        for b, p in zip(basis, pivots):
            if b & bit:
                x |= p
        out.append(x)
    return rref(out)


def inner(a: int, b: int) -> int:
    return weight(a & b) & 1


@dataclass(frozen=True)
class BinaryCode:
    """A binary linear code of a given length, held by its RREF basis."""

    length: int
    basis: tuple[int, ...]

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("code length must be positive")
        canon = rref(self.basis)
        if canon != tuple(self.basis):
            object.__setattr__(self, "basis", canon)
        if any(b >> self.length for b in self.basis):
            raise ValueError("basis row longer than the code length")

    @classmethod
    def span(cls, length: int, rows: Iterable[int]) -> BinaryCode:
        return cls(length, rref(rows))

    @classmethod
    def zero(cls, length: int) -> BinaryCode:
        return cls(length, ())

    @classmethod
    def full(cls, length: int) -> BinaryCode:
        return cls(length, tuple(1 << j for j in range(length)))

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> BinaryCode:
        words = list(words)
        if not words:
            raise ValueError("need at least one word to infer the length")
        length = len(words[0].strip())
        return cls.span(length, (word_from_str(w) for w in words))

    @classmethod
    def cyclic(cls, length: int, generator: int) -> BinaryCode:
        """Span of all cyclic shifts of one word (a cyclic code)."""
        return cls.span(length, (cyclic_shift(generator, length, r) for r in range(length)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return 1 << self.dim

    def __contains__(self, word: int) -> bool:
        return reduce_word(word, self.basis) == 0

    def contains_code(self, other: BinaryCode) -> bool:
        return all(w in self for w in other.basis)

    def __le__(self, other: BinaryCode) -> bool:
        return other.contains_code(self)

    def dual(self) -> BinaryCode:
        return BinaryCode(self.length, orthogonal_complement(self.basis, self.length))

    def is_self_dual(self) -> bool:
        return 2 * self.dim == self.length and all(
            inner(a, b) == 0 for a in self.basis for b in self.basis)

    def shifted(self, r: int = 1) -> BinaryCode:
        return BinaryCode.span(self.length, (cyclic_shift(b, self.length, r) for b in self.basis))

    def is_cyclic(self) -> bool:
        return all(cyclic_shift(b, self.length) in self for b in self.basis)

    def is_quasi_cyclic(self, index: int) -> bool:
        """Whether T^index maps the code onto itself."""
        if index < 1 or self.length % index:
            raise ValueError(f"quasi-cyclic index {index} does not divide length {self.length}")
        return all(cyclic_shift(b, self.length, index) in self for b in self.basis)

    def permuted(self, image: Sequence[int]) -> BinaryCode:
        """Apply the induced coordinate permutation (0-based ``image``)."""
        return BinaryCode.span(self.length, (permute_word(b, image) for b in self.basis))

    def codewords(self) -> list[int]:
        return sorted(span_words(self.basis, self.length))

    def rows(self) -> list[str]:
        return [word_to_str(b, self.length) for b in self.basis]

    def min_distance(self, cap: int = MAX_ENUM_DIM) -> int:
        """Minimum weight of a nonzero codeword, by exhaustive enumeration."""
        if self.dim == 0:
            raise ValueError("the zero code has no minimum distance")
        if self.dim > cap:
            raise DistanceInfeasible(f"dimension {self.dim} exceeds the enumeration cap {cap}")
        return min_weight(self.basis, self.length)


# ---------------------------------------------------------------------------
# Exhaustive enumeration with numpy
# ---------------------------------------------------------------------------


def _nwords(length: int) -> int:
    return (length + 63) // 64


def _to_limbs(rows: Sequence[int], length: int) -> np.ndarray:
    w = _nwords(length)
    out = np.zeros((len(rows), w), dtype=np.uint64)
    mask = (1 << 64) - 1
    for r, row in enumerate(rows):
        for i in range(w):
            out[r, i] = (row >> (64 * i)) & mask
    return out


def _span_table(limbs: np.ndarray) -> np.ndarray:
    """All 2^m combinations of the m rows, shape (2^m, words)."""
    table = np.zeros((1, limbs.shape[1]), dtype=np.uint64)
    for row in limbs:
        table = np.concatenate([table, table ^ row])
    return table


def _block_weights(words: np.ndarray, block: int) -> np.ndarray:
    """Number of nonzero ``block``-bit blocks in each row (block a power of 2)."""
    if block == 1:
        return np.bitwise_count(words).sum(axis=-1, dtype=np.int64)
    if block >= 64:
        per = block // 64
        grouped = words.reshape(words.shape[:-1] + (-1, per))
        return np.any(grouped != 0, axis=-1).sum(axis=-1, dtype=np.int64)
    x = words.copy()
    s = 1
    while s < block:
        x |= x >> np.uint64(s)
        s <<= 1
    starts = 0
    for j in range(0, 64, block):
        starts |= 1 << j
    x &= np.uint64(starts)
    return np.bitwise_count(x).sum(axis=-1, dtype=np.int64)


def min_weight(basis: Sequence[int], length: int, chunk: int = 1 << 22, block: int = 1) -> int:
    """Minimum weight over the nonzero words of span(basis).

    With ``block > 1`` the weight counts nonzero aligned blocks of that many
    bits (a power of two dividing ``length``), which is the A_k-Hamming weight
    of a Gray image.  The basis is split into a low half whose span is
    tabulated once and a high half walked in chunks; every nonzero
    combination is visited.
    """
    d = len(basis)
    if d == 0:
        raise ValueError("empty basis")
    if block & (block - 1) or length % block:
        raise ValueError(f"block size {block} must be a power of two dividing {length}")
    limbs = _to_limbs(basis, length)
    lo = min(d, max(1, d // 2 + d % 2))
    low = _span_table(limbs[:lo])
    high = _span_table(limbs[lo:])
    best = length + 1
    nz = _block_weights(low, block)[1:]
    if nz.size:
        best = int(nz.min())
    per = max(1, chunk // low.shape[0])
    for start in range(1, high.shape[0], per):
        combo = high[start:start + per][:, None, :] ^ low[None, :, :]
        m = int(_block_weights(combo, block).min())
        if m < best:
            best = m
    return best


def span_words(basis: Sequence[int], length: int) -> set[int]:
    """Every codeword of span(basis) as an int (small dimensions only)."""
    if len(basis) > 20:
        raise DistanceInfeasible(f"refusing to list 2^{len(basis)} codewords")
    words = {0}
    for b in basis:
        words |= {w ^ b for w in words}
    return words
