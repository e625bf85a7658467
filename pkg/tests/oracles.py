"""Independent brute-force oracles.

Nothing here calls the zeta transform, CRT components or the library's
Gray-map code: elements are manipulated as explicit sets of monomials.
"""

from __future__ import annotations

from itertools import product

from akcodes.ring import RingElement


def monomials(a: RingElement) -> set[frozenset[int]]:
    k = a.k
    out = set()
    for idx in range(1 << k):
        if (a.bits >> idx) & 1:
            out.add(frozenset(i + 1 for i in range(k) if (idx >> i) & 1))
    return out


def from_monomials(ms, k: int) -> RingElement:
    bits = 0
    for m in ms:
        bits ^= 1 << sum(1 << (i - 1) for i in m)
    return RingElement(k, bits)


def mul_sets(a: RingElement, b: RingElement) -> RingElement:
    """v_B v_C = v_{B ∪ C}, summed mod 2."""
    acc: set[frozenset[int]] = set()
    for B in monomials(a):
        for C in monomials(b):
            acc ^= {B | C}
    return from_monomials(acc, a.k)


def substitute(a: RingElement, images: dict[int, RingElement]) -> RingElement:
    """Replace each v_i by images[i] (default v_i) and expand."""
    k = a.k
    one = from_monomials([frozenset()], k)
    total = from_monomials([], k)
    for B in monomials(a):
        term = one
        for i in B:
            term = mul_sets(term, images.get(i, from_monomials([frozenset({i})], k)))
        total = RingElement(k, total.bits ^ term.bits)
    return total


def theta_oracle(S, a: RingElement) -> RingElement:
    k = a.k
    return substitute(a, {i: from_monomials([frozenset({i}), frozenset()], k) for i in S})


def evaluate_oracle(a: RingElement, point: tuple[int, ...]) -> int:
    """Value of a at v_i = point[i-1]."""
    return sum(all(point[i - 1] for i in B) for B in monomials(a)) % 2


def all_elements(k: int) -> list[RingElement]:
    return [RingElement(k, b) for b in range(1 << (1 << k))]


def all_vectors(k: int, n: int):
    elems = all_elements(k)
    return product(elems, repeat=n)


def vadd(u, w):
    return tuple(RingElement(a.k, a.bits ^ b.bits) for a, b in zip(u, w))


def scale(a: RingElement, w):
    return tuple(mul_sets(a, x) for x in w)


def module_span(vectors, k: int, n: int, shift_S=None) -> frozenset:
    """Closure of ``vectors`` under A_k-scaling, addition and (optionally) the Theta_S-shift.

    Scaling and the shift are additive, so it suffices to apply them to every
    vector that enlarges the F2-span.
    """
    zero = tuple(RingElement(k, 0) for _ in range(n))
    elems = all_elements(k)
    found = {zero}
    queue = [tuple(v) for v in vectors]
    while queue:
        v = queue.pop()
        if v in found:
            continue
        found |= {vadd(f, v) for f in found}
        queue.extend(scale(a, v) for a in elems)
        if shift_S is not None:
            queue.append(tuple(theta_oracle(shift_S, x) for x in (v[-1],) + tuple(v[:-1])))
    return frozenset(found)


def hermitian_oracle(w, u, T) -> RingElement:
    k = w[0].k
    acc = RingElement(k, 0)
    for a, b in zip(w, u):
        t = mul_sets(a, theta_oracle(T, b))
        acc = RingElement(k, acc.bits ^ t.bits)
    return acc


def annihilator(code: frozenset, k: int, n: int, T) -> frozenset:
    return frozenset(w for w in all_vectors(k, n)
                     if all(hermitian_oracle(w, u, T).bits == 0 for u in code))


def hamming_distance(code) -> int:
    return min(sum(1 for c in w if c.bits) for w in code if any(c.bits for c in w))


def gray_word_oracle(a: RingElement) -> tuple[int, ...]:
    """phi(a + b v) = (a, a + b), unrolled one variable at a time from v_k down."""
    def rec(elem_bits: int, k: int) -> list[int]:
        if k == 0:
            return [elem_bits & 1]
        half = 1 << (k - 1)
        lo = elem_bits & ((1 << half) - 1)  # terms without v_k
        hi = elem_bits >> half  # coefficient of v_k
        return rec(lo, k - 1) + rec(lo ^ hi, k - 1)
    return tuple(rec(a.bits, a.k))
