import pytest
from hypothesis import given, settings, strategies as st

from akcodes.ring import RingElement, RingMismatchError, parse_element
from akcodes.skewpoly import (
    PolyParseError,
    QuotientContext,
    SkewPolynomial,
    count_isomorphic,
    format_poly,
    mod_xn_minus_1,
    parse_poly,
    parse_vector,
    skew_ring_isomorphic,
    span_from_generators,
    theta_shift,
)

from oracles import module_span, theta_oracle


def E(text, k):
    return parse_element(text, k)


def P(text, k, S):
    return parse_poly(text, k, S)


def rewrite_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Term rewriting: move each x^i past b one x at a time, applying Theta_S each step."""
    out = {}
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            moved = b
            for _ in range(i):
                moved = theta_oracle(f.S, moved)
            out[i + j] = out.get(i + j, RingElement.zero(f.k)) + a * moved
    deg = max(out, default=-1)
    return SkewPolynomial(f.k, f.S, tuple(out.get(d, RingElement.zero(f.k)) for d in range(deg + 1)))


def polys(k, S, max_deg=4):
    coeff = st.integers(0, (1 << (1 << k)) - 1).map(lambda b: RingElement(k, b))
    return st.lists(coeff, max_size=max_deg + 1).map(lambda cs: SkewPolynomial(k, S, tuple(cs)))


def test_mul_examples():
    x = SkewPolynomial.x_power(1, 1, {1})
    v1 = SkewPolynomial.constant(E("v1", 1), {1})
    assert x * v1 == P("(1+v1)x", 1, {1})
    assert SkewPolynomial.x_power(2, 1, {1}) * v1 == P("v1x^2", 1, {1})
    lhs = P("v1x", 2, {1, 2}) * P("v2x", 2, {1, 2})
    assert lhs == P("(v1+v1v2)x^2", 2, {1, 2})


def test_noncommutative_witness():
    for i in (1, 2):
        x = SkewPolynomial.x_power(1, 2, {i})
        vi = SkewPolynomial.constant(RingElement.gen(i, 2), {i})
        assert x * vi != vi * x


def test_degree_can_drop():
    f = SkewPolynomial.constant(E("1+v1", 1))
    g = P("v1x", 1, ())
    assert (f * g).degree is None  # (1+v1) v1 = 0


def test_mismatched_twists_rejected():
    with pytest.raises(RingMismatchError):
        P("x", 2, {1}) * P("x", 2, {2})


@settings(max_examples=60)
@given(st.sampled_from([(1, frozenset({1})), (2, frozenset({1, 2})), (2, frozenset({2})),
                        (3, frozenset({1, 3}))]).flatmap(
    lambda kS: st.tuples(polys(*kS), polys(*kS), polys(*kS))))
def test_associative_distributive_and_matches_rewriting(t):
    f, g, h = t
    assert f * g == rewrite_mul(f, g)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    if f.degree is not None and g.degree is not None and (f * g).degree is not None:
        assert (f * g).degree <= f.degree + g.degree


def test_theta_shift_examples():
    c = (E("v1", 1), E("1+v1", 1), RingElement.zero(1))
    assert theta_shift(c, {1}) == (RingElement.zero(1), E("1+v1", 1), E("v1", 1))
    d = (E("v1", 2), E("1", 2), E("v2", 2))
    assert theta_shift(d, ()) == (E("v2", 2), E("v1", 2), E("1", 2))
    for n in (2, 3):
        v = d[:n]
        w = v
        for _ in range(2 * n):
            w = theta_shift(w, {1, 2})
        assert w == v


@pytest.mark.parametrize("k,S", [(1, {1}), (2, {1}), (2, {1, 2}), (2, set())])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 6])
def test_x_times_c_is_theta_shift(k, S, n):
    ctx = QuotientContext(n, S, k)
    x = SkewPolynomial.x_power(1, k, S)
    import random
    rng = random.Random(n * 10 + k)
    for _ in range(20):
        c = tuple(RingElement(k, rng.randrange(1 << (1 << k))) for _ in range(n))
        cp = SkewPolynomial(k, S, c)
        assert mod_xn_minus_1(x * cp, ctx) == theta_shift(c, S)


def test_mod_examples():
    ctx = QuotientContext(3, {1}, 1)
    assert mod_xn_minus_1(SkewPolynomial.x_power(3, 1, {1}), ctx) == (E("1", 1), E("0", 1), E("0", 1))
    f = P("v1x^2+1", 1, {1})
    assert mod_xn_minus_1(f, ctx) == (E("1", 1), E("0", 1), E("v1", 1))


def test_span_closure_matches_brute_force():
    k, S, n = 1, {1}, 3
    g = P("v1x+1", k, S)
    gens = span_from_generators([g], QuotientContext(n, S, k))
    span = module_span(gens, k, n)
    assert span == module_span([mod_xn_minus_1(g, QuotientContext(n, S, k))], k, n, shift_S=S)
    assert all(theta_shift(w, S) in span for w in span)


def test_unit_generator_spans_everything():
    gens = span_from_generators([P("1", 1, {1})], QuotientContext(2, {1}, 1))
    assert len(module_span(gens, 1, 2)) == 16


def test_isomorphism_predicates():
    assert skew_ring_isomorphic({1}, {3})
    assert not skew_ring_isomorphic({1}, {1, 2})
    assert count_isomorphic({1, 2}, 4) == 6


def test_parse_examples():
    assert P("x^2+1", 2, ()).coeffs == (E("1", 2), E("0", 2), E("1", 2))
    f = P("x^4+(v1+1)x^3+x^2+v1x+1", 2, {1, 2})
    assert f.degree == 4 and f.coefficient(3) == E("1+v1", 2)
    assert P("x^10+(v1+1)x^7+x^6+x^5+x^4+v1x^3+1", 6, ()).degree == 10
    assert P("x^{8} + v1 * x^3", 2, ()).degree == 8


@pytest.mark.parametrize("text", ["x^4+(1+v1)x^3+x^2+v1x+1", "v1v2x^2+(1+v2)", "x", "0", "1+v1x^5"])
def test_format_round_trip(text):
    f = P(text, 2, {1})
    assert P(format_poly(f), 2, {1}) == f


@pytest.mark.parametrize("bad,pos", [("x^", 2), ("x+", 2), ("v3x", 0), ("(v1", 3), ("x^2 ++ 1", 5)])
def test_parse_errors_have_positions(bad, pos):
    with pytest.raises(PolyParseError) as e:
        parse_poly(bad, 2)
    assert e.value.pos == pos


def test_parse_vector():
    assert parse_vector("(1, v1, 0)", 1) == (E("1", 1), E("v1", 1), E("0", 1))
    with pytest.raises(ValueError):
        parse_vector("1, v1", 1)
