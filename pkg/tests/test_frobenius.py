import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from fsing import Ideal, Poly, PrimeField, parse_poly
from fsing.frobenius import (SigmaStatus, fedder_not_f_pure_at_m, non_f_pure_ideal_estimate,
                             peth_root_decompose, test_ideal, verify_test_ideal_definition)
from fsing.gradedla import membership, monomials_of_degree

EX1 = "x0^2*x1^2 + x1^2*x2^2 + x2^2*x0^2"
EX2 = ("x0^2*x1*x2*x3*x4 + x0*x1^2*x2*x3*x4 + x0*x1*x2^2*x3*x4"
       " + x0*x1*x2*x3^2*x4 + x0*x1*x2*x3*x4^2 + x5^6")


def P(text, n, p=2):
    return parse_poly(text, n, p)


def gens(ideal):
    return [str(g) for g in ideal.sorted_generators()]


def test_decompose_examples():
    dec = peth_root_decompose(P("x0^2*x1", 1), 1)
    assert dec.roots == {(0, 1): P("x0", 1)}
    dec = peth_root_decompose(P(EX2, 5), 1)
    assert sorted(str(r) for r in dec.roots.values()) == sorted(
        ["x0", "x1", "x2", "x3", "x4", "x5^3"])
    for p in (2, 3, 5):
        dec = peth_root_decompose(P("x0 + x1", 1, p), 1)
        assert dec.roots == {(1, 0): Poly.constant(PrimeField(p), 2), (0, 1): Poly.constant(PrimeField(p), 2)}


def test_decompose_groups_by_residue():
    # x^4 y + x^2 y^3 over F_2, e=1: both have residue (0, 1)
    dec = peth_root_decompose(P("x0^4*x1 + x0^2*x1^3", 1), 1)
    assert dec.roots == {(0, 1): P("x0^2 + x0*x1", 1)}
    with pytest.raises(ValueError):
        peth_root_decompose(P("x0", 1), 0)


@st.composite
def homogeneous(draw, primes=(2, 3), max_n=2, max_d=4):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_n))
    d = draw(st.integers(1, max_d))
    mons = monomials_of_degree(n, d)
    terms = draw(st.dictionaries(st.sampled_from(mons), st.integers(1, p - 1), min_size=1, max_size=5))
    return Poly(PrimeField(p), n + 1, terms)


@settings(max_examples=60, deadline=None)
@given(homogeneous(), st.integers(1, 2))
def test_reconstruction_identity(f, e):
    g = f ** (f.field.p ** e - 1)
    dec = peth_root_decompose(g, e)
    assert dec.reassemble() == g
    assert all(root for root in dec.roots.values())
    q = f.field.p ** e
    assert all(all(a < q for a in r) for r in dec.roots)


def test_test_ideal_examples():
    assert gens(test_ideal(P(EX2, 5), 1)) == ["x0", "x1", "x2", "x3", "x4", "x5^3"]
    for p in (3, 5, 7):
        assert gens(test_ideal(P(EX1, 2, p), 1)) == ["x0", "x1", "x2"]
    for p in (2, 3):
        assert test_ideal(P("x0", 1, p), 1).is_unit()


def test_verify_definition_examples():
    f = P("x0^2*x1", 1)
    assert verify_test_ideal_definition(f, 1, Ideal([P("x0", 1)]))
    assert not verify_test_ideal_definition(f, 1, Ideal([P("x1", 1)]))


@settings(max_examples=40, deadline=None)
@given(homogeneous(), st.integers(1, 2))
def test_test_ideal_satisfies_definition_and_degree_bound(f, e):
    tau = test_ideal(f, e)
    assert verify_test_ideal_definition(f, e, tau)
    q = f.field.p ** e
    d = f.degree()
    for g in tau.generators:
        assert g.degree() <= d * (q - 1) // q
        if e == 1:
            assert f.field.p * g.degree() <= d * (f.field.p - 1)


def random_monomial_ideals(rng, n, count):
    for _ in range(count):
        k = rng.randint(1, 3)
        mons = [tuple(rng.randint(0, 2) for _ in range(n + 1)) for _ in range(k)]
        yield mons


@pytest.mark.parametrize("seed", range(6))
def test_test_ideal_is_smallest(seed):
    rng = random.Random(seed)
    p = rng.choice([2, 3])
    n = rng.choice([1, 2])
    field = PrimeField(p)
    d = rng.randint(2, 4)
    mons = monomials_of_degree(n, d)
    f = Poly(field, n + 1, {m: rng.randrange(1, p) for m in rng.sample(mons, min(3, len(mons)))})
    for e in (1, 2):
        tau = test_ideal(f, e)
        for a_mons in random_monomial_ideals(rng, n, 40):
            a = Ideal.from_monomials(field, a_mons)
            if verify_test_ideal_definition(f, e, a):
                assert tau <= a
        assert verify_test_ideal_definition(f, e, Ideal.unit(field, n + 1))


def test_fedder_examples():
    assert fedder_not_f_pure_at_m(P("x0^2*x1 + x0*x1^2", 1))
    assert not fedder_not_f_pure_at_m(P("x0*x1", 1))
    assert fedder_not_f_pure_at_m(P(EX2, 5))


def test_fedder_matches_membership_oracle():
    from fsing.gradedla import frobenius_power_ideal
    f = P(EX2, 5)
    m1 = frobenius_power_ideal(Ideal.maximal(f.field, f.nvars), 1)
    assert membership(f ** (f.field.p - 1), m1) == fedder_not_f_pure_at_m(f)


@settings(max_examples=60, deadline=None)
@given(homogeneous(primes=(2, 3, 5)))
def test_fedder_iff_test_ideal_in_maximal(f):
    tau = test_ideal(f, 1)
    assert fedder_not_f_pure_at_m(f) == (not tau.is_unit())
    assert tau.is_unit() == any(g.degree() == 0 for g in tau.generators)


def test_sigma_estimate_examples():
    est = non_f_pure_ideal_estimate(P("x0^2*x1", 1), 3)
    assert est.status is SigmaStatus.STABILIZED
    assert gens(est.ideal) == ["x0"]
    est = non_f_pure_ideal_estimate(P("x0", 1, 3), 2)
    assert est.status is SigmaStatus.STABILIZED and est.ideal.is_unit()
    with pytest.raises(ValueError):
        non_f_pure_ideal_estimate(P("x0", 1), 1)


@pytest.mark.parametrize("p", [3, 5])
def test_sigma_estimate_keeps_isolated_verdict(p):
    from fsing.fpurity import ell_min
    f = P(EX1, 2, p)
    est = non_f_pure_ideal_estimate(f, 2)
    level1 = ell_min(test_ideal(f, 1), 2, 4)
    assert (ell_min(est.ideal, 2, 4) != float("inf")) == (level1 != float("inf"))
