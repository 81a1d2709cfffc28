"""Deformed Heisenberg-manifold function algebra and Zak-side modules."""

import random
from fractions import Fraction
from math import comb

import pytest

from hopftwist.errors import (
    DegenerateDegrees,
    NotHomogeneous,
    OrderMismatch,
    ZeroDegree,
)
from hopftwist.heis_torus import (
    HeisElement,
    ZakElement,
    alpha,
    assoc_residual,
    m3_membership,
    m3_residual,
    star,
    vf_apply,
    zak_act_left,
    zak_act_right,
    zak_pair,
)
from hopftwist.scalars import Series, TauLaurent, series_exp

TAU = TauLaurent.tau()


# --- independent oracle for the star product --------------------------------
# X acts on a monomial as multiplication by tau(m+ny), Y as d_y.  Both have
# closed-form k-th powers, so the star expansion can be cross-checked without
# iterating the vector fields.


def oracle_xk(f, k):
    out = HeisElement.zero(f.order)
    for (m, n, p, c), s in f.data.items():
        for j in range(k + 1):
            coeff = s * (TauLaurent.tau(k) * (comb(k, j) * m ** (k - j) * n ** j))
            out = out.add(HeisElement(f.order, {(m, n, p + j, c): coeff}))
    return out


def oracle_yk(f, k):
    out = HeisElement.zero(f.order)
    for (m, n, p, c), s in f.data.items():
        for j in range(min(k, p) + 1):
            falling = 1
            for i in range(j):
                falling *= p - i
            coeff = s * comb(k, j) * falling
            if k - j:
                coeff = coeff * (TauLaurent.tau(k - j) * (c ** (k - j)))
            out = out.add(HeisElement(f.order, {(m, n, p - j, c): coeff}))
    return out


def oracle_star(a, b, theta):
    K = a.order
    lam = theta * TauLaurent.tau(-1)
    out = HeisElement.zero(K)
    coef = Series.one(K)
    for k in range(K + 1):
        if k:
            coef = coef * lam * Fraction(1, k)
        if coef.is_zero():
            break
        xa = oracle_xk(a, k)
        yb = oracle_yk(b, k)
        for (m1, n1, p1, c1), s1 in xa.data.items():
            for (m2, n2, p2, c2), s2 in yb.data.items():
                out = out.add(
                    HeisElement(
                        K, {(m1 + m2, n1 + n2, p1 + p2, c1 + c2): s1 * s2 * coef}
                    )
                )
    return out


def rand_heis(order, rng, terms=3, degree=None):
    data = {}
    for _ in range(terms):
        m = rng.randint(-2, 2)
        n = degree if degree is not None else rng.randint(-2, 2)
        p = rng.randint(0, 2)
        c = Fraction(rng.randint(-2, 2), rng.choice([1, 2, 3]))
        coeff = Series(order, {k: rng.randint(-2, 2) for k in range(order + 1)})
        cur = data.get((m, n, p, c))
        data[(m, n, p, c)] = coeff if cur is None else cur + coeff
    return HeisElement(order, data)


def rand_zak(order, degree, rng, terms=2):
    data = {}
    for _ in range(terms):
        key = (
            rng.randint(-1, 1),
            rng.randint(0, 2),
            Fraction(rng.randint(-2, 2), rng.choice([1, 2, 3])),
        )
        coeff = Series(order, {k: rng.randint(-2, 2) for k in range(order + 1)})
        cur = data.get(key)
        data[key] = coeff if cur is None else cur + coeff
    return ZakElement(order, degree, data)


K = 4
U = HeisElement.monomial(K, m=1)
V = HeisElement.monomial(K, 0, 0, 0, 1)
W = HeisElement.monomial(K, 0, 1)
TH = Series.hbar(K)


def test_star_matches_oracle_on_seeded_elements():
    rng = random.Random(20260817)
    theta = Series(K, {1: 1, 2: Fraction(1, 2)})
    for _ in range(8):
        a = rand_heis(K, rng)
        b = rand_heis(K, rng)
        assert star(a, b, theta) == oracle_star(a, b, theta)


# --- vector fields ----------------------------------------------------------


def test_vector_field_monomial_actions():
    assert vf_apply("T", W) == W.scale(TAU)
    assert vf_apply("T", U).is_zero()
    assert vf_apply("X", U) == U.scale(TAU)
    assert vf_apply("X", W) == HeisElement(K, {(0, 1, 1, 0): TAU})
    assert vf_apply("Y", V) == V.scale(TAU)
    assert vf_apply("Y", HeisElement.monomial(K, 0, 0, 2, 0)) == (
        HeisElement(K, {(0, 0, 1, 0): 2})
    )
    with pytest.raises(ValueError):
        vf_apply("Z", U)


def test_grading_operator_is_a_star_derivation():
    rng = random.Random(7)
    a = rand_heis(K, rng)
    b = rand_heis(K, rng)
    lhs = vf_apply("T", star(a, b, TH))
    rhs = star(vf_apply("T", a), b, TH).add(star(a, vf_apply("T", b), TH))
    assert lhs == rhs


# --- star product -----------------------------------------------------------


def test_uv_commutation_constant():
    uv = star(U, V, TH)
    vu = star(V, U, TH)
    assert vu == HeisElement(K, {(1, 0, 0, 1): 1})
    assert uv == vu.scale(series_exp(TH * TAU))


def test_zero_parameter_is_pointwise():
    z = Series.zero(K)
    a = HeisElement.monomial(K, 1, -1, 2, Fraction(1, 2))
    b = HeisElement.monomial(K, 0, 2, 1, Fraction(1, 3))
    assert star(a, b, z) == HeisElement(
        K, {(1, 1, 3, Fraction(5, 6)): 1}
    )


def test_star_unital():
    one = HeisElement.one(K)
    rng = random.Random(11)
    a = rand_heis(K, rng)
    assert star(a, one, TH) == a
    assert star(one, a, TH) == a


def test_degree_additivity():
    rng = random.Random(13)
    a = rand_heis(K, rng, degree=2)
    b = rand_heis(K, rng, degree=-1)
    prod = star(a, b, TH)
    assert prod.degrees() in ([], [1])


def test_star_order_mismatch():
    with pytest.raises(OrderMismatch):
        star(U, HeisElement.one(3), TH)
    with pytest.raises(OrderMismatch):
        star(U, V, Series.hbar(3))


def test_star_rejects_constant_parameter():
    with pytest.raises(ValueError):
        star(U, V, Series.const(1, K))


# --- parameter action -------------------------------------------------------


def test_alpha_identity_and_geometric_series():
    assert alpha(TH, 0) == TH
    assert alpha(TH, 1) == Series(K, {1: 1, 2: -1, 3: 1, 4: -1})


def test_alpha_composition_at_order_five():
    t = Series(5, {1: 1, 2: Fraction(1, 3)})
    for j in (-2, 1, 3):
        for k in (-1, 2):
            assert alpha(alpha(t, k), j) == alpha(t, j + k)


# --- generalized associativity ----------------------------------------------


def test_plain_associativity_in_degree_zero():
    rng = random.Random(17)
    for _ in range(3):
        a = rand_heis(K, rng, degree=0)
        b = rand_heis(K, rng, degree=0)
        c = rand_heis(K, rng, degree=0)
        assert assoc_residual(a, b, c, TH, TH).is_zero()


@pytest.mark.parametrize("n", [-2, -1, 1, 2])
@pytest.mark.parametrize("theta_terms", [{1: 1}, {1: 1, 2: 1}])
def test_reparametrized_associativity_biconditional(n, theta_terms):
    rng = random.Random(1000 + n)
    theta = Series(K, theta_terms)
    a = rand_heis(K, rng, terms=2)
    b = rand_heis(K, rng, terms=2, degree=n)
    c = rand_heis(K, rng, terms=2)
    good = alpha(theta, n)
    assert assoc_residual(a, b, c, theta, good).is_zero()
    # the matched parameter is the only one: perturbations fail
    for j in (1, 2, K):
        bad = good + Series.hbar(K, power=j)
        assert not assoc_residual(U, HeisElement.monomial(K, 0, n), V, theta, bad).is_zero()


def test_mismatched_parameter_residual_starts_at_second_order():
    res = assoc_residual(U, W, V, TH, TH)
    assert not res.is_zero()
    assert min(s.valuation() for s in res.data.values()) == 2


def test_assoc_residual_requires_homogeneous_middle():
    with pytest.raises(NotHomogeneous):
        assoc_residual(U, U.add(W), V, TH, TH)


def test_bimodule_axioms_on_monomial_side():
    # degree-n elements carry commuting outer multiplications by
    # degree-0 elements, left at the reparametrized angle
    rng = random.Random(23)
    for n in (1, 2):
        thp = alpha(TH, n)
        a = rand_heis(K, rng, terms=2, degree=0)
        b = rand_heis(K, rng, terms=2, degree=0)
        f = rand_heis(K, rng, terms=2, degree=n)
        assert assoc_residual(a, f, b, TH, thp).is_zero()
        assert assoc_residual(a, b, f, thp, thp).is_zero()
        assert assoc_residual(f, a, b, TH, TH).is_zero()


# --- lattice periodicity ----------------------------------------------------


def test_periodicity_membership():
    assert m3_membership(HeisElement.monomial(K, 3, 0, 0, 2))
    assert m3_membership(HeisElement.one(K))
    assert not m3_membership(W)
    assert not m3_membership(HeisElement.monomial(K, 0, 0, 0, Fraction(1, 2)))


def test_periodicity_residual_is_reported():
    f = HeisElement.monomial(K, 1, 1, 2, Fraction(1, 2))
    res = m3_residual(f)
    assert not res.is_zero()
    assert m3_residual(HeisElement.one(K)).is_zero()


# --- Zak side ---------------------------------------------------------------


def test_zak_zero_degree_rejected():
    with pytest.raises(ZeroDegree):
        ZakElement.monomial(K, 0)


def test_left_action_commutation():
    for n in (1, 2):
        rng = random.Random(50 + n)
        f = rand_zak(K, n, rng)
        lhs = zak_act_left("UV", f, TH)
        rhs = zak_act_left("VU", f, TH)
        assert lhs == rhs.scale(series_exp(alpha(TH, n) * TAU))


def test_right_action_commutation():
    for n in (1, 2):
        rng = random.Random(60 + n)
        f = rand_zak(K, n, rng)
        lhs = zak_act_right("UV", f, TH)
        rhs = zak_act_right("VU", f, TH)
        assert lhs == rhs.scale(series_exp(TH * TAU))


def test_empty_word_is_identity():
    f = rand_zak(K, 1, random.Random(3))
    assert zak_act_left("", f, TH) == f
    assert zak_act_right("", f, TH) == f
    with pytest.raises(ValueError):
        zak_act_left("W", f, TH)


def test_pairing_degenerate_degrees():
    f1 = ZakElement.monomial(K, 1)
    with pytest.raises(DegenerateDegrees):
        zak_pair(f1, ZakElement.monomial(K, -1), TH)


def test_pairing_classical_limit():
    z = Series.zero(3)
    g1 = ZakElement.monomial(3, 1, m=0, p=0, c=0)
    g2 = ZakElement.monomial(3, 1, m=1, p=0, c=0)
    pr = zak_pair(g1, g2, z)
    assert pr.degree == 2
    # slots add; the rational shifts are exact
    assert set(k[0] for k in pr.data) == {1}


def test_pairing_balanced_over_middle_algebra():
    # right action at theta on the first factor matches the left action
    # on the second factor taken at the inverse-reparametrized angle
    K3 = 3
    t3 = Series.hbar(K3)
    rng = random.Random(29)
    h1 = rand_zak(K3, 1, rng)
    h2 = rand_zak(K3, 1, rng)
    that = alpha(t3, -1)
    for w in ("U", "V", "UV", "VU"):
        L = zak_pair(zak_act_right(w, h1, t3), h2, t3)
        R = zak_pair(h1, zak_act_left(w, h2, that), t3)
        assert L == R, w


def test_pairing_outer_module_consistency():
    K3 = 3
    t3 = Series.hbar(K3)
    rng = random.Random(31)
    h1 = rand_zak(K3, 1, rng)
    h2 = rand_zak(K3, 1, rng)
    that = alpha(t3, -1)
    for w in ("U", "V", "UV"):
        assert zak_act_left(w, zak_pair(h1, h2, t3), that) == zak_pair(
            zak_act_left(w, h1, t3), h2, t3
        )
        assert zak_act_right(w, zak_pair(h1, h2, t3), that) == zak_pair(
            h1, zak_act_right(w, h2, that), t3
        )


def test_alternate_sign_convention_negates_parameter():
    rng = random.Random(37)
    a = rand_heis(K, rng, terms=2)
    b = rand_heis(K, rng, terms=2)
    assert star(a, b, TH, convention="alt") == star(a, b, -TH)
    assert alpha(TH, 2, convention="alt") == -alpha(-TH, 2)
    f1 = rand_zak(3, 1, rng)
    f2 = rand_zak(3, 1, rng)
    t3 = Series.hbar(3)
    assert zak_pair(f1, f2, t3, convention="alt") == zak_pair(f1, f2, -t3)
    assert zak_act_left("UV", f1, t3, convention="alt") == zak_act_left(
        "UV", f1, -t3
    )
    with pytest.raises(ValueError):
        star(a, b, TH, convention="other")
