import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affverma.chevalley import build_lie_algebra
from affverma.pbw import casimir, enveloping
from affverma.sampling import random_pbw
from affverma.verma import (NotCentral, VermaModule, VermaVector, WeightCharacter, central_character_scalar,
                            e_mu_exponents, e_mu_vector, grid_vanishing_check, joint_spectrum,
                            torus_eigenvalue_check, weight_of)

from oracles import sl2_apply

A1 = build_lie_algebra(("A", 1))
A2 = build_lie_algebra(("A", 2))


@pytest.mark.parametrize("lam", [0, 1, -2, Fraction(7, 3)])
def test_sl2_action_formula(lam):
    M = VermaModule(A1, WeightCharacter((lam,)))
    e = M.U.gen(A1.e(0))
    for k in range(1, 21):
        want = k * (lam - k + 1)
        assert M.act(e, M.basis_vector((k,))) == M.basis_vector((k - 1,)) * want
    assert not M.act(e, M.highest_weight_vector())


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([0, 3, Fraction(-5, 2)]))
def test_action_matches_differential_operators(seed, lam):
    M = VermaModule(A1, WeightCharacter((lam,)))
    rng = random.Random(seed)
    u = random_pbw(M.U, rng, max_degree=4, height=40)
    for k in range(5):
        got = M.act(u, M.basis_vector((k,)))
        want = sl2_apply(u, {k: 1}, lam)
        assert got.terms == {(j,): c for j, c in want.items()}


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**9))
def test_module_axiom_a2(seed):
    rng = random.Random(seed)
    M = VermaModule(A2, WeightCharacter((Fraction(1, 2), 3)))
    u = random_pbw(M.U, rng, max_degree=4, height=20, terms=2)
    v = random_pbw(M.U, rng, max_degree=4, height=20, terms=2)
    w = VermaVector(M, {tuple(rng.randint(0, 2) for _ in range(3)): rng.randint(1, 9) for _ in range(5)})
    assert M.act(u * v, w) == M.act(u, M.act(v, w))
    assert M.act(M.U.one(), w) == w


def test_weight_grading_and_freeness():
    lam = WeightCharacter((Fraction(2, 3), -1))
    M = VermaModule(A2, lam)
    for beta in M.weight_space_basis(6):
        wt = weight_of(A2.datum, beta, lam)
        for i in range(2):
            assert M.act(M.U.gen(A2.h(i)), M.basis_vector(beta)) == M.basis_vector(beta) * wt[i]
        fb = M.U.monomial(beta + (0,) * 5)
        assert M.act(fb, M.highest_weight_vector()) == M.basis_vector(beta)


def test_weight_examples():
    R = A2.datum
    lam = (Fraction(5), Fraction(1))
    assert weight_of(R, (0, 0, 0), lam) == lam
    assert weight_of(R, (1, 0, 0), lam) == (3, 2)
    # e_mu for mu = (1, 0): lambda - 3 omega_1
    assert e_mu_exponents(R, (1, 0)) == (2, 1, 0)
    assert weight_of(R, e_mu_exponents(R, (1, 0)), lam) == (2, 1)
    M = VermaModule(A1, WeightCharacter((1,)))
    assert e_mu_vector(M, (3,)) == M.basis_vector((3,))
    assert e_mu_vector(M, (0,)) == M.highest_weight_vector()


def test_weight_character_invariants():
    with pytest.raises(ValueError):
        WeightCharacter((Fraction(1, 5),), n=1, p=5)
    lam = WeightCharacter.from_coroot_values((Fraction(2, 5),), n=1, p=5)
    assert lam.values == (2,) and lam.on_coroot(0) == Fraction(2, 5)


@pytest.mark.parametrize("lam", [0, -2, 1, Fraction(7, 3)])
def test_central_character_a1(lam):
    M = VermaModule(A1, WeightCharacter((lam,)))
    Om = casimir(A1)
    chi = central_character_scalar(Om, M)
    assert chi == lam * lam + 2 * lam
    for k in range(11):
        assert not M.act(Om - M.U.scalar(chi), M.basis_vector((k,)))


def test_central_character_a2_and_not_central():
    lam = (Fraction(1, 3), Fraction(-2))
    M = VermaModule(A2, WeightCharacter(lam))
    Om = casimir(A2)
    a, b = lam
    # (lambda, lambda + 2 rho) for the form with (alpha, alpha) = 2, rescaled by 3/2
    assert central_character_scalar(Om, M) == a * a + a * b + b * b + 3 * a + 3 * b
    with pytest.raises(NotCentral):
        central_character_scalar(M.U.gen(A2.e(0)), M)


def test_torus_examples():
    M = VermaModule(A2, WeightCharacter((4, 9), n=1, p=5))
    rep = torus_eigenvalue_check(M, (1, 0))
    assert rep.passed and rep.witnesses["eigenvalues"][0] == 15
    rep = torus_eigenvalue_check(M, (0, 0))
    assert rep.passed and rep.witnesses["eigenvalues"] == [0, 0]
    M1 = VermaModule(A1, WeightCharacter((3,)))
    rep = torus_eigenvalue_check(M1, (2,))
    assert rep.passed and rep.witnesses["eigenvalues"] == [4]


@pytest.mark.parametrize("t,n", [(("A", 1), 0), (("A", 1), 1), (("A", 2), 0), (("A", 2), 1)])
def test_joint_spectrum_distinct(t, n):
    L = build_lie_algebra(t)
    M = VermaModule(L, WeightCharacter(tuple(range(2, 2 + L.rank)), n, 5))
    mus = [m for m in __import__("itertools").product(range(4), repeat=L.rank)]
    spec = joint_spectrum(M, mus)
    assert len(set(spec.values())) == len(mus)
    for mu in mus:
        assert torus_eigenvalue_check(M, mu).passed


def test_grid_examples():
    r = grid_vanishing_check({}, [[0, 1], [2]])
    assert r.vanishes and r.is_zero
    r = grid_vanishing_check({(2, 0): 1, (1, 0): -1}, [[0, 1], [0]])
    assert r.vanishes and not r.is_zero and not r.hypothesis_met and r.certificate is None
    f = {(1, 1): 1, (0, 1): -1}
    r = grid_vanishing_check(f, [range(4), range(4)])
    assert not r.vanishes
    point, value = r.witness
    from affverma.verma import poly_eval

    assert poly_eval(f, point) == value != 0 and poly_eval(f, (2, 1)) == 1


def test_grid_certificate_chain():
    r = grid_vanishing_check({}, [range(3), range(2)])
    cert = r.certificate
    assert cert["variables"] == 2 and len(cert["chain"]) == 2 and len(cert["restrictions"]) == 2


@settings(max_examples=60, deadline=None)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-5, 5), max_size=6))
def test_grid_lemma(f):
    r = grid_vanishing_check(f, [range(6), range(-3, 3)])
    assert r.vanishes == r.is_zero
