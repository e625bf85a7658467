"""Skew-cyclic codes over A_k built from binary cyclic codes or from A_p-codes.

Three routes are provided:

* ``construct_even`` (n even): interleave 2^k binary cyclic codes, undo
  sigma_{S_2}, then pull back through the Gray map.
* ``construct_odd`` (n odd): the same with 2^(k-1) cyclic codes of length 2n
  and sigma_{S_1}.
* ``construct_from_ap``: glue s = 2^(k-p) codes over A_p together with the
  inverse of Psi_{k,p}.

The first two return :class:`~akcodes.codes.AdditiveCode` values: the
composition preserves the Theta_S-shift but mixes evaluation points t and
t XOR mask(S) along each cycle, so the result is F2-linear and in general not
closed under multiplication by the v_i.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

from .codes import AdditiveCode, Code, is_theta_cyclic
from .gf2 import BinaryCode, cyclic_shift
from .gray import IndexPermutation, omega_subsets, sigma_S1, sigma_S2
from .ring import RingElement, check_level, subset_mask
from .skewpoly import (
    QuotientContext,
    SkewPolynomial,
    Vector,
    _PolyParser,
    mod_xn_minus_1,
    theta_shift,
)

MAX_MU_SEARCH = 4  # s! permutations are tried only for s <= 4


class ConstructionError(ValueError):
    """A construction precondition failed.

    ``witness`` carries whatever pinpoints the failure, e.g. ``(i, codeword)``.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# Gamma and Gamma_1
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterleaveMap:
    """Splits F2^(blocks*width) into ``width`` words of length ``blocks``.

    Coordinate a*width + t goes to position a of part t.  Gamma is
    ``InterleaveMap.gamma(n, k)`` (n blocks of 2^k) and Gamma_1 is
    ``InterleaveMap.gamma1(n, k)`` (2n blocks of 2^(k-1)).
    """

    blocks: int
    width: int

    @classmethod
    def gamma(cls, n: int, k: int) -> InterleaveMap:
        return cls(n, 1 << check_level(k))

    @classmethod
    def gamma1(cls, n: int, k: int) -> InterleaveMap:
        if check_level(k) < 1:
            raise ValueError("Gamma_1 needs k >= 1")
        return cls(2 * n, 1 << (k - 1))

    @property
    def length(self) -> int:
        return self.blocks * self.width

    def forward(self, word: int) -> tuple[int, ...]:
        parts = [0] * self.width
        for j in range(self.length):
            if (word >> j) & 1:
                a, t = divmod(j, self.width)
                parts[t] |= 1 << a
        return tuple(parts)

    def inverse(self, parts: Sequence[int]) -> int:
        if len(parts) != self.width:
            raise ValueError(f"expected {self.width} parts, got {len(parts)}")
        word = 0
        for t, p in enumerate(parts):
            for a in range(self.blocks):
                if (p >> a) & 1:
                    word |= 1 << (a * self.width + t)
        return word

    def inverse_codes(self, codes: Sequence[BinaryCode]) -> BinaryCode:
        """Gamma^{-1}(C_1 x ... x C_width) as one binary code."""
        if len(codes) != self.width:
            raise ConstructionError(f"expected {self.width} input codes, got {len(codes)}")
        rows = []
        for t, C in enumerate(codes):
            if C.length != self.blocks:
                raise ConstructionError(
                    f"input code {t + 1} has length {C.length}, expected {self.blocks}", t + 1)
            zeros = [0] * self.width
            for b in C.basis:
                zeros[t] = b
                rows.append(self.inverse(zeros))
        return BinaryCode.span(self.length, rows)

    def forward_code(self, B: BinaryCode) -> tuple[BinaryCode, ...]:
        """Projections of B onto each part (a decomposition when B is a product)."""
        parts = [self.forward(b) for b in B.basis]
        return tuple(BinaryCode.span(self.blocks, (p[t] for p in parts)) for t in range(self.width))


def _check_cyclic(codes: Sequence[BinaryCode]) -> None:
    for i, C in enumerate(codes, start=1):
        for b in C.basis:
            if cyclic_shift(b, C.length) not in C:
                raise ConstructionError(f"input code {i} is not cyclic", (i, b))


def _pull_back(image: BinaryCode, perm: IndexPermutation, n: int, k: int) -> AdditiveCode:
    # Sigma^{-1} is the induced action of the inverse permutation
    inv = perm.inverse().zero_based
    return AdditiveCode(k, n, image.permuted(inv))


def construct_even(binaries: Sequence[BinaryCode], S: Iterable[int]) -> AdditiveCode:
    """Phi_k^{-1}(Sigma_{S_2}^{-1}(Gamma^{-1}(C_1, ..., C_{2^k}))) for even n."""
    binaries = list(binaries)
    count = len(binaries)
    if count < 1 or count & (count - 1):
        raise ConstructionError(f"need 2^k input codes, got {count}")
    k = count.bit_length() - 1
    n = binaries[0].length
    if n % 2:
        raise ConstructionError(f"construct_even needs even n, got n={n}")
    S = frozenset(S)
    subset_mask(S, k)
    _check_cyclic(binaries)
    joined = InterleaveMap.gamma(n, k).inverse_codes(binaries)
    C = _pull_back(joined, sigma_S2(S, n, k), n, k)
    assert is_theta_cyclic(C, S)
    return C


def construct_odd(binaries: Sequence[BinaryCode], S: Iterable[int], k: int) -> AdditiveCode:
    """Phi_k^{-1}(Sigma_{S_1}^{-1}(Gamma_1^{-1}(C_1, ..., C_{2^(k-1)}))) for odd n."""
    binaries = list(binaries)
    check_level(k)
    if k < 1:
        raise ConstructionError("construct_odd needs k >= 1")
    want = 1 << (k - 1)
    if len(binaries) != want:
        raise ConstructionError(f"construct_odd over A_{k} needs 2^(k-1) = {want} input codes, "
                                f"got {len(binaries)}")
    length = binaries[0].length
    if length % 2 or (length // 2) % 2 == 0:
        raise ConstructionError(f"inputs must have length 2n with n odd, got {length}")
    n = length // 2
    S = frozenset(S)
    subset_mask(S, k)
    if not S:
        raise ConstructionError("construct_odd needs a non-empty S")
    _check_cyclic(binaries)
    joined = InterleaveMap.gamma1(n, k).inverse_codes(binaries)
    C = _pull_back(joined, sigma_S1(S, n, k), n, k)
    assert is_theta_cyclic(C, S)
    return C


def cyclic_code(generator: str, n: int) -> BinaryCode:
    """The binary cyclic code of length n generated by a polynomial such as "1+x+x^3"."""
    terms = _PolyParser(generator, 0).poly()  # k = 0 rejects any v_i
    word = 0
    for e, c in terms.items():
        if c:
            word ^= 1 << (e % n)
    return BinaryCode.cyclic(n, word)


# ---------------------------------------------------------------------------
# Psi_{k,p}
# ---------------------------------------------------------------------------

# A component code is a BinaryCode when p = 0 and a Code over A_p otherwise.
Component = BinaryCode | Code


def default_p(S: Iterable[int]) -> int:
    S = set(S)
    return min(S) - 1 if S else 0


def induced_mu(S: Iterable[int], k: int, p: int) -> IndexPermutation:
    """mu(t) = t XOR (mask(S) restricted to {p+1..k}), as a 1-based permutation."""
    m = subset_mask(S, k) >> p
    s = 1 << (k - p)
    return IndexPermutation(tuple((t ^ m) + 1 for t in range(s)))


def _component_length(C: Component) -> int:
    return C.length if isinstance(C, BinaryCode) else C.n


def _shift_words(C: Component, S_low: frozenset[int]) -> Iterable[tuple[object, object]]:
    """(codeword, T_{Theta_{S'}}(codeword)) over an F2-basis of C."""
    if isinstance(C, BinaryCode):
        for b in C.basis:
            yield b, cyclic_shift(b, C.length)
    else:
        for c in C.f2_basis:
            yield c, theta_shift(c, S_low)


def _twice_shift_closed(C: Component) -> bool:
    if isinstance(C, BinaryCode):
        return all(cyclic_shift(b, C.length, 2) in C for b in C.basis)
    return all(tuple(c[-2:] + c[:-2]) in C for c in C.f2_basis)


def condition_witness(codes: Sequence[Component], S: Iterable[int], p: int,
                      mu: IndexPermutation) -> tuple[int, object] | None:
    """First (i, codeword) with T_{Theta_{S'}}(codeword) outside C_{mu(i)}, or None."""
    S_low = frozenset(i for i in S if i <= p)
    for i, C in enumerate(codes, start=1):
        target = codes[mu(i) - 1]
        for c, shifted in _shift_words(C, S_low):
            if shifted not in target:
                return i, c
    return None


def find_mu(codes: Sequence[Component], S: Iterable[int], k: int, p: int) -> IndexPermutation | None:
    """A permutation satisfying the shift condition: the induced one first, then a search."""
    S = frozenset(S)
    mu = induced_mu(S, k, p)
    if condition_witness(codes, S, p, mu) is None:
        return mu
    s = len(codes)
    if s > MAX_MU_SEARCH:
        return None
    for img in permutations(range(1, s + 1)):
        cand = IndexPermutation(img)
        if condition_witness(codes, S, p, cand) is None:
            return cand
    return None


def psi_components(C: Code, p: int) -> list[Component]:
    """The s = 2^(k-p) codes C_t with C = Psi_{k,p}^{-1}(C_1, ..., C_s).

    Under CRT, point b of A_k splits into (low p bits, high k-p bits) and the
    high part indexes the subset B_t of {p+1..k}.
    """
    k = C.k
    if not 0 <= p < k:
        raise ValueError(f"p must satisfy 0 <= p < k={k}, got {p}")
    comps = C.components
    out: list[Component] = []
    for t in range(1 << (k - p)):
        if p == 0:
            out.append(comps[t])
        else:
            out.append(Code.from_components(p, C.n, comps[t << p:(t + 1) << p]))
    return out


def psi_inverse_code(codes: Sequence[Component], k: int, p: int) -> Code:
    """Psi_{k,p}^{-1}(C_1, ..., C_s), applied coordinatewise."""
    check_level(k)
    if not 0 <= p < k:
        raise ValueError(f"p must satisfy 0 <= p < k={k}, got {p}")
    s = 1 << (k - p)
    if len(codes) != s:
        raise ConstructionError(f"Psi_{{{k},{p}}} needs s = {s} component codes, got {len(codes)}")
    n = _component_length(codes[0])
    comps = []
    for t, C in enumerate(codes, start=1):
        if _component_length(C) != n:
            raise ConstructionError(f"component {t} has length {_component_length(C)}, expected {n}", t)
        if p == 0:
            if not isinstance(C, BinaryCode):
                raise ConstructionError(f"component {t} must be a binary code when p = 0", t)
            comps.append(C)
        else:
            if not isinstance(C, Code) or C.k != p:
                raise ConstructionError(f"component {t} must be a code over A_{p}", t)
            comps.extend(C.components)
    return Code.from_components(k, n, comps)


def construct_from_ap(codes: Sequence[Component], S: Iterable[int], k: int,
                      mu: IndexPermutation | None = None, p: int | None = None) -> Code:
    """Theta_S-cyclic code Psi_{k,p}^{-1}(C_1, ..., C_s) from s = 2^(k-p) codes over A_p.

    Each C_i must be invariant under T^2 and satisfy T_{Theta_{S'}}(C_i) ⊆
    C_{mu(i)} with S' = S ∩ {1..p}.  When ``mu`` is omitted one is searched
    for.  ``p`` defaults to min(S) - 1.
    """
    S = frozenset(S)
    subset_mask(S, check_level(k))
    if p is None:
        p = default_p(S)
    C = psi_inverse_code(codes, k, p)
    for i, D in enumerate(codes, start=1):
        if not _twice_shift_closed(D):
            raise ConstructionError(f"component {i} is not 2-quasi-cyclic", i)
    if mu is None:
        mu = find_mu(codes, S, k, p)
        if mu is None:
            raise ConstructionError("no permutation mu satisfies the shift condition",
                                    condition_witness(codes, S, p, induced_mu(S, k, p)))
    elif mu.size != len(codes):
        raise ConstructionError(f"mu acts on {mu.size} points, expected {len(codes)}")
    else:
        w = condition_witness(codes, S, p, mu)
        if w is not None:
            i, c = w
            raise ConstructionError(
                f"T(C_{i}) is not contained in C_{mu(i)}: codeword {c!r} of C_{i} shifts outside", w)
    if not is_theta_cyclic(C, S):
        raise ConstructionError(
            f"the result is not Theta_S-cyclic; the permutation induced by S is "
            f"{induced_mu(S, k, p).cycle_notation()}", induced_mu(S, k, p))
    return C


def _embed(g, k: int, p: int, n: int) -> Vector:
    """A component generator as a length-n vector over A_k (A_p sits inside A_k)."""
    if isinstance(g, SkewPolynomial):
        if g.k != p:
            raise ConstructionError(f"generator lives over A_{g.k}, expected A_{p}")
        vec = mod_xn_minus_1(SkewPolynomial(g.k, frozenset(), g.coeffs), QuotientContext(n, (), p))
        return tuple(RingElement(k, c.bits) for c in vec)
    if isinstance(g, int):
        if p != 0:
            raise ConstructionError("integer words are only meaningful when p = 0")
        return tuple(RingElement(k, (g >> j) & 1) for j in range(n))
    vals = tuple(g)
    if len(vals) != n:
        raise ConstructionError(f"generator of length {len(vals)}, expected {n}")
    out = []
    for c in vals:
        if isinstance(c, RingElement):
            if c.k != p:
                raise ConstructionError(f"entry lives in A_{c.k}, expected A_{p}")
            out.append(RingElement(k, c.bits))
        else:
            if p != 0 or c not in (0, 1):
                raise ConstructionError(f"bad generator entry {c!r}")
            out.append(RingElement(k, int(c)))
    return tuple(out)


def omega_idempotent(k: int, p: int, t: int) -> RingElement:
    """e_t = prod_{i in B_t} v_i * prod_{i in Omega_p - B_t} (1 + v_i)."""
    B = omega_subsets(k, p)[t]
    e = RingElement.one(k)
    for i in range(p + 1, k + 1):
        v = RingElement.gen(i, k)
        e = e * (v if i in B else v + RingElement.one(k))
    return e


def lift_generators(component_gens: Sequence[Sequence], k: int, p: int, S: Iterable[int],
                    n: int) -> list[SkewPolynomial]:
    """Generators over A_k for Psi_{k,p}^{-1} of the codes given by ``component_gens``.

    Each generator of component t is embedded in A_k and multiplied by the
    idempotent e_t, so it lives only in the t-th Psi coordinate.  Component
    generators may be skew polynomials over A_p, vectors over A_p, or (p = 0)
    binary words as ints or 0/1 sequences.
    """
    check_level(k)
    S = frozenset(S)
    s = 1 << (k - p)
    if len(component_gens) != s:
        raise ConstructionError(f"need generator lists for s = {s} components, got {len(component_gens)}")
    out = []
    for t, gens in enumerate(component_gens):
        e = omega_idempotent(k, p, t)
        for g in gens:
            vec = _embed(g, k, p, n)
            out.append(SkewPolynomial(k, S, tuple(e * c for c in vec)))
    return out
