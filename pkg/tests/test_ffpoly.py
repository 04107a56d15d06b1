import pytest
from hypothesis import given, settings, strategies as st

from fsing import Ideal, Poly, PolySyntaxError, PrimeField, parse_poly, poly_mul, poly_pow
from fsing.gradedla import frobenius_power_ideal
from fsing.limits import ResourceLimitError, resource_limits

F2, F3, F5 = PrimeField(2), PrimeField(3), PrimeField(5)


def P(text, n, p):
    return parse_poly(text, n, p)


def test_prime_field_rejects_composites():
    for bad in (0, 1, 4, 9, 15):
        with pytest.raises(ValueError):
            PrimeField(bad)
    assert F5.inv(2) == 3
    assert F5(-1) == 4


def test_parse_reads_terms():
    f = P("x0^2*x1 + x5^6", 5, 2)
    assert len(f) == 2
    assert sorted(sum(m) for m, _ in f) == [3, 6]


@pytest.mark.parametrize("text, n, p", [("x0 + x0", 0, 2), ("3*x0*x1", 1, 3), ("x1 - x1", 1, 7)])
def test_parse_cancels_to_zero(text, n, p):
    assert P(text, n, p).is_zero()


def test_parse_handles_signs_and_constants():
    f = P("-x0 + 2*x1^2*3 - 4", 1, 5)
    assert f.coeff((1, 0)) == 4
    assert f.coeff((0, 2)) == 1
    assert f.coeff((0, 0)) == 1


@pytest.mark.parametrize("text, pos", [("x0 + * x1", 5), ("x0^", 3), ("x0 x1", 3), ("", 0), ("x0 $", 3)])
def test_parse_reports_position(text, pos):
    with pytest.raises(PolySyntaxError) as info:
        P(text, 1, 2)
    assert info.value.position == pos


def test_parse_rejects_out_of_range_variable_and_modulus():
    with pytest.raises(PolySyntaxError):
        P("x2", 1, 2)
    with pytest.raises(ValueError):
        P("x0", 1, 6)


def test_canonical_printing_is_graded_lex():
    f = P("x1^3 + x0*x2 + x0^2*x1 + 2*x2^3 + x0^3", 2, 3)
    assert str(f) == "x0^3 + x0^2*x1 + x1^3 + 2*x2^3 + x0*x2"
    assert str(P("x0 + x1 + 1", 1, 2)) == "x0 + x1 + 1"
    assert str(P("0", 1, 2)) == "0"


def test_multiplication_examples():
    x, y = Poly.variable(F2, 2, 0), Poly.variable(F2, 2, 1)
    assert poly_mul(x + y, x + y) == P("x0^2 + x1^2", 1, 2)
    assert poly_mul(x, Poly.zero(F2, 2)).is_zero()
    x, y = Poly.variable(F5, 2, 0), Poly.variable(F5, 2, 1)
    assert (x + y) * (x - y) == P("x0^2 + 4*x1^2", 1, 5)


def test_multiplication_rejects_mixed_rings():
    with pytest.raises(ValueError):
        Poly.variable(F2, 2, 0) * Poly.variable(F3, 2, 0)
    with pytest.raises(ValueError):
        Poly.variable(F2, 2, 0) * Poly.variable(F2, 3, 0)


def test_degree_adds_for_homogeneous_factors():
    a = P("x0^2 + x1*x2", 2, 3)
    b = P("x0*x1*x2 + 2*x2^3", 2, 3)
    assert (a * b).degree() == 5 and (a * b).is_homogeneous()


def naive_pow(f, k):
    out = Poly.constant(f.field, f.nvars, 1)
    for _ in range(k):
        out = out * f
    return out


def test_power_examples():
    f = P("x0 + x1", 1, 2)
    assert poly_pow(f, 0) == Poly.constant(F2, 2, 1)
    assert poly_pow(f, 2) == P("x0^2 + x1^2", 1, 2)
    g = P("x0^2*x1 + x0*x1^2", 1, 2)
    assert poly_pow(g, 3) == naive_pow(g, 3)
    # hand expansion: (x^2y + xy^2)^3 = x^6y^3 + x^5y^4 + x^4y^5 + x^3y^6 over F_2
    assert poly_pow(g, 3) == P("x0^6*x1^3 + x0^5*x1^4 + x0^4*x1^5 + x0^3*x1^6", 1, 2)


primes = st.sampled_from([2, 3, 5])


@st.composite
def polys(draw, nvars=3, max_deg=3, max_terms=4):
    p = draw(primes)
    field = PrimeField(p)
    mons = st.tuples(*[st.integers(0, max_deg)] * nvars)
    terms = draw(st.dictionaries(mons, st.integers(1, p - 1), max_size=max_terms))
    return Poly(field, nvars, terms)


@settings(max_examples=60, deadline=None)
@given(polys(), st.data(), st.integers(0, 2))
def test_freshmans_dream(a, data, e):
    b = data.draw(polys().filter(lambda g: g.field == a.field))
    q = a.field.p ** e
    assert poly_pow(a + b, q) == poly_pow(a, q) + poly_pow(b, q)
    assert poly_pow(a, q) == a.frobenius(e)


@settings(max_examples=60, deadline=None)
@given(polys(max_terms=3, max_deg=2), st.integers(0, 8))
def test_power_matches_repeated_multiplication(f, k):
    assert poly_pow(f, k) == naive_pow(f, k)


@settings(max_examples=80, deadline=None)
@given(polys())
def test_parse_inverts_printing(f):
    text = str(f)
    again = parse_poly(text, f.nvars - 1, f.field)
    assert again == f
    assert str(again) == text


def test_exponent_guard():
    f = P("x0", 0, 2)
    with pytest.raises(ResourceLimitError):
        f.frobenius(31)
    with pytest.raises(ResourceLimitError):
        P("x0^3000000000", 0, 2)


def test_term_guard():
    f = P("x0 + x1 + x2 + x3", 3, 7)
    with resource_limits(max_terms=50):
        with pytest.raises(ResourceLimitError):
            poly_pow(f, 6)


def test_frobenius_power_ideal_examples():
    m = Ideal.maximal(F2, 2)
    assert [str(g) for g in frobenius_power_ideal(m, 1).sorted_generators()] == ["x0^2", "x1^2"]
    I = Ideal([P("x0", 1, 2), P("x1^3", 1, 2)])
    assert [str(g) for g in frobenius_power_ideal(I, 2).sorted_generators()] == ["x0^4", "x1^12"]
    J = Ideal([P("x0 + x1", 1, 3)])
    assert frobenius_power_ideal(J, 1).generators == (P("x0^3 + x1^3", 1, 3),)
    assert frobenius_power_ideal(J, 0) is J
