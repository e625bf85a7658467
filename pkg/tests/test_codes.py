import random

import pytest
from hypothesis import given, settings, strategies as st

from akcodes.codes import (
    AdditiveCode,
    Code,
    check_characterization_1,
    coefficient_f2_basis,
    contains,
    crt_decompose,
    dual,
    gray_image,
    gray_min_distance,
    hermitian_product,
    is_quasi_cyclic,
    is_self_dual,
    is_theta_cyclic,
    min_distance,
    theta_point_map,
)
from akcodes.gf2 import BinaryCode, DistanceInfeasible
from akcodes.gray import BinaryWord, gray_vector_inverse
from akcodes.ring import RingElement, all_subsets, parse_element, theta_apply
from akcodes.skewpoly import parse_poly

from oracles import annihilator, hamming_distance, hermitian_oracle, module_span


def E(text, k):
    return parse_element(text, k)


def V(k, *texts):
    return tuple(E(t, k) for t in texts)


def elements(C: Code) -> frozenset:
    """Every codeword, through the library's F2 basis (small codes only)."""
    out = {tuple(RingElement(C.k, 0) for _ in range(C.n))}
    for b in C.f2_basis:
        out |= {tuple(x + y for x, y in zip(w, b)) for w in out}
    return frozenset(out)


C8_WORDS = {V(1, "0", "0"), V(1, "v1", "v1"), V(1, "1+v1", "1+v1"), V(1, "1", "1")}


@pytest.fixture
def C8():
    return Code(1, 2, [V(1, "1", "1")])


@pytest.fixture
def C2():
    return Code(2, 3, [V(2, "1", "1", "1")])


def random_code(rng, k, n, gens=2):
    return Code(k, n, [tuple(RingElement(k, rng.randrange(1 << (1 << k))) for _ in range(n))
                       for _ in range(gens)])


# -- structure ---------------------------------------------------------------


def test_c8_structure(C8):
    assert elements(C8) == C8_WORDS
    assert [c.rows() for c in crt_decompose(C8)] == [["11"], ["11"]]
    assert contains(C8, V(1, "v1", "v1"))
    assert not contains(C8, V(1, "1", "0"))
    with pytest.raises(ValueError):
        contains(C8, V(1, "1"))


def test_trivial_decompositions():
    C = Code(1, 2, [V(1, "1", "1")])
    assert all(c.rows() == ["11"] for c in C.components)
    Z = Code.zero(2, 3)
    assert all(c.dim == 0 for c in Z.components) and Z.cardinality == 1


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_crt_reconstruction_matches_module_span(k, n):
    rng = random.Random(k * 31 + n)
    for _ in range(4):
        C = random_code(rng, k, n, gens=rng.randint(1, 2))
        assert elements(C) == module_span(C.generators, k, n)
        assert C.cardinality == len(elements(C))


def test_theta_cyclic_examples(C8):
    assert is_theta_cyclic(C8, {1})
    c1 = Code(1, 2, [V(1, "1+v1", "0"), V(1, "0", "1+v1")])
    assert elements(c1) == {V(1, "0", "0"), V(1, "1+v1", "1+v1"), V(1, "1+v1", "0"), V(1, "0", "1+v1")}
    assert is_theta_cyclic(c1, ())
    assert not is_theta_cyclic(Code(1, 2, [V(1, "1", "0")]), {1})


def test_gray_image_examples(C8, C2):
    img = gray_image(C2)
    for w in ("111111111111", "010101010101", "001100110011", "000100010001"):
        assert BinaryWord.parse(w).bits in img
    assert img.dim == C2.log2_size == 4
    assert gray_image(Code.zero(1, 2)).dim == 0
    assert set(BinaryCode.codewords(gray_image(C8))) == {0b0000, 0b1010, 0b0101, 0b1111}


def test_c1_example_gray_preimage():
    c1 = BinaryCode.from_strings(["1010", "1000", "0010"])
    assert is_quasi_cyclic(c1, 2)
    pre = {gray_vector_inverse(BinaryWord(4, w), 1) for w in c1.codewords()}
    assert pre == {V(1, "0", "0"), V(1, "1+v1", "1+v1"), V(1, "1+v1", "0"), V(1, "0", "1+v1")}


def test_quasi_cyclic_examples(C2):
    assert is_quasi_cyclic(gray_image(C2), 2)
    assert not is_quasi_cyclic(BinaryCode.from_strings(["10"]), 1)
    with pytest.raises(ValueError):
        is_quasi_cyclic(BinaryCode.from_strings(["100"]), 2)


def test_characterization_examples(C8, C2):
    r = check_characterization_1(C2, {1, 2})
    assert (r.fixed_by_sigma, r.quasi_cyclic, r.theta_cyclic, r.quasi_cyclic_index) == (True, True, True, 2)
    r = check_characterization_1(C8, {1})
    assert (r.fixed_by_sigma, r.quasi_cyclic, r.theta_cyclic, r.quasi_cyclic_index) == (True, True, True, 2)
    r = check_characterization_1(Code(1, 2, [V(1, "1", "0")]), {1})
    assert (r.fixed_by_sigma, r.quasi_cyclic, r.theta_cyclic) == (False, False, False)


# -- duality -----------------------------------------------------------------


def test_c8_hermitian_self_dual(C8):
    assert dual(C8, {1}) == C8
    assert is_self_dual(C8, {1})
    assert is_self_dual(C8, ())
    full = Code.full(1, 2)
    for T in all_subsets(1):
        assert not is_self_dual(full, T)
        assert dual(full, T).cardinality == 1


def test_theta_point_map_matches_theta():
    from akcodes.ring import evaluate
    for k in (1, 2, 3):
        for T in all_subsets(k):
            mu = theta_point_map(T, k)
            for bits in range(0, 1 << (1 << k), 7):
                a = RingElement(k, bits)
                ta = theta_apply(T, a)
                for b in range(1 << k):
                    assert evaluate(ta, b) == evaluate(a, mu[b])


@pytest.mark.parametrize("n", [1, 2, 3])
def test_dual_matches_brute_annihilator(n):
    k = 1
    rng = random.Random(n)
    for _ in range(3):
        C = random_code(rng, k, n, gens=rng.randint(1, 2))
        words = elements(C)
        for T in all_subsets(k):
            D = dual(C, T)
            assert elements(D) == annihilator(words, k, n, T)
            assert C.cardinality * D.cardinality == 1 << ((1 << k) * n)
            assert dual(dual(C, T), T) == C
            assert is_self_dual(C, T) == (D == C)


@pytest.mark.parametrize("k,n", [(1, 4), (2, 2), (2, 4)])
def test_dual_cardinality_identity(k, n):
    rng = random.Random(7 * k + n)
    for _ in range(5):
        C = random_code(rng, k, n, gens=rng.randint(1, 3))
        for T in all_subsets(k):
            assert C.log2_size + dual(C, T).log2_size == (1 << k) * n


def test_hermitian_product_matches_oracle():
    rng = random.Random(3)
    for _ in range(50):
        w = tuple(RingElement(2, rng.randrange(16)) for _ in range(3))
        u = tuple(RingElement(2, rng.randrange(16)) for _ in range(3))
        for T in all_subsets(2):
            assert hermitian_product(w, u, T) == hermitian_oracle(w, u, T)


def theta_cyclic_test_codes():
    """Skew-cyclic codes generated by single polynomials, small k and n."""
    out = []
    rng = random.Random(11)
    for k in (1, 2):
        for S in all_subsets(k):
            for n in (2, 3, 4):
                for _ in range(3):
                    g = tuple(RingElement(k, rng.randrange(1 << (1 << k))) for _ in range(n))
                    from akcodes.skewpoly import SkewPolynomial
                    poly = SkewPolynomial(k, S, g)
                    if poly.degree is None:
                        continue
                    out.append((S, Code.from_polynomials([poly], n)))
    return out


def test_dual_of_theta_cyclic_is_theta_cyclic():
    for S, C in theta_cyclic_test_codes():
        assert is_theta_cyclic(C, S)
        for R in all_subsets(C.k):
            assert is_theta_cyclic(dual(C, R), S)


def test_euclidean_self_dual_iff_components_self_dual():
    rep = BinaryCode.from_strings(["11"])
    even = BinaryCode.from_strings(["1100", "0011"])
    # all components self-dual <-> C Euclidean self-dual
    C = Code.from_components(2, 2, [rep] * 4)
    assert is_self_dual(C, ()) and all(c.is_self_dual() for c in C.components)
    D = Code.from_components(1, 4, [even, BinaryCode.from_strings(["1000", "0100", "0010"])])
    assert not is_self_dual(D, ()) and not all(c.is_self_dual() for c in D.components)


# -- distance ----------------------------------------------------------------


def test_distance_examples(C8, C2):
    assert min_distance(C8) == 2
    assert gray_min_distance(C8) == 2
    assert gray_min_distance(C2) == 3
    # the F2-span {0, 1} has image {00, 11}; the A_1-module <1> is all of A_1
    assert gray_min_distance(AdditiveCode.span(1, 1, [V(1, "1")])) == 2
    assert gray_min_distance(Code(1, 1, [V(1, "1")])) == 1
    with pytest.raises(ValueError):
        min_distance(Code.zero(1, 2))
    with pytest.raises(ValueError):
        min_distance(C8, "magic")


def test_table_rows_distance():
    g4 = parse_poly("x^2+1", 2, {1, 2})
    assert min_distance(Code.from_polynomials([g4], 4)) == 2
    g24 = parse_poly("x^12+x^11+v1x^10+x^9+(v1+1)x^7+v1x^5+x^3+(v1+1)x^2+x+1", 5, {1, 3, 4, 5})
    assert min_distance(Code.from_polynomials([g24], 24)) == 8


def test_distance_infeasible_is_explicit():
    big = Code.full(3, 10)
    with pytest.raises(DistanceInfeasible):
        min_distance(big, "brute")
    with pytest.raises(DistanceInfeasible):
        gray_min_distance(big)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from([(1, 2), (1, 3), (1, 5), (2, 2), (2, 3), (3, 2)]))
def test_component_distance_equals_brute(seed, kn):
    k, n = kn
    rng = random.Random(seed)
    C = random_code(rng, k, n, gens=rng.randint(1, 2))
    if C.log2_size == 0 or C.log2_size > 16:
        return
    d = min_distance(C)
    assert d == min_distance(C, "brute")
    if C.log2_size <= 10:
        assert d == hamming_distance(module_span(C.generators, k, n))


def test_coefficient_basis_has_code_dimension():
    rng = random.Random(5)
    for _ in range(5):
        C = random_code(rng, 2, 3)
        assert len(coefficient_f2_basis(C)) == C.log2_size


# -- additive codes -------------------------------------------------------------


def test_additive_code_membership_and_linearity():
    vecs = [V(1, "1+v1", "v1"), V(1, "v1", "1+v1")]
    A = AdditiveCode.span(1, 2, vecs)
    assert A.cardinality == 4
    assert V(1, "1", "1") in A and V(1, "v1", "v1") not in A
    assert not A.is_linear()
    assert is_theta_cyclic(A, {1})
    assert A.linear_span() == Code.full(1, 2)
    with pytest.raises(ValueError):
        A.to_code()
    L = AdditiveCode(1, 2, gray_image(Code(1, 2, [V(1, "1", "1")])))
    assert L.is_linear() and L.to_code() == Code(1, 2, [V(1, "1", "1")])
    assert min_distance(A) == 2 and min_distance(A, "gray") == 2


@pytest.mark.parametrize("k", [1, 2, 3, 6, 7])
def test_additive_block_weight_matches_direct_count(k):
    rng = random.Random(k)
    n = 3
    vecs = [tuple(RingElement(k, rng.getrandbits(1 << k)) for _ in range(n)) for _ in range(3)]
    A = AdditiveCode.span(k, n, vecs)
    words = A.elements()
    expected = min(sum(1 for c in w if c.bits) for w in words if any(c.bits for c in w))
    assert min_distance(A) == expected
