from itertools import product

import pytest

from affverma import smash as sm

S3 = sm.symmetric3()
C3_IN_S3 = [i for i, q in enumerate(S3.names) if q in ("(0, 1, 2)", "(1, 2, 0)", "(2, 0, 1)")]


def test_group_validation():
    with pytest.raises(sm.InvalidGroup):
        sm.FiniteGroup(((0, 1), (0, 1)))
    G = sm.group_from_json("[[0, 1], [1, 0]]")
    assert G.order == 2 and G.inverse == (0, 1)
    assert sm.dihedral(4).order == 8 and not sm.dihedral(3).is_normal([0, 3])


@pytest.mark.parametrize("G", [sm.cyclic(2), sm.cyclic(3), S3])
def test_associativity_on_basis(G):
    K = sm.GF(5)
    n = G.order
    basis = [sm.smash_basis(G, K, g, h) for g in range(n) for h in range(n)]
    for x, y, z in product(basis, repeat=3):
        assert (x * y) * z == x * (y * z)
    one = sm.smash_one(G, K)
    for x in basis:
        assert one * x == x == x * one
    for x, y in product(basis, repeat=2):
        assert x * y == sm.smash_multiply_expanded(x, y)


def test_smash_examples():
    G, K = S3, sm.QQ
    g, g2, h, h2 = 1, 3, 4, 2
    assert sm.group_element(G, K, g) * sm.group_element(G, K, g2) == sm.group_element(G, K, G.mul(g, g2))
    d = sm.delta(G, K, h)
    assert d * d == d and (d * sm.delta(G, K, h2)).is_zero()
    lhs = d * sm.group_element(G, K, g)
    assert lhs == sm.smash_basis(G, K, g, G.mul(G.inverse[g], h))
    with pytest.raises(sm.BaseMismatch):
        d * sm.delta(G, sm.GF(3), h)


def test_idempotent_decomposition_and_hopf_axioms():
    for G in (sm.cyclic(4), S3, sm.dihedral(4)):
        K = sm.GF(3)
        total = sm.smash_zero(G, K)
        for h in range(G.order):
            total = total + sm.delta(G, K, h)
        assert total == sm.smash_one(G, K)
        assert sm.FunAlgebra(G).axiom_failures() == []


def test_module_action_is_representation():
    G, K = S3, sm.GF(7)
    M = sm.SmashModule(G, K)
    n = G.order
    basis = [sm.smash_basis(G, K, g, h) for g in range(n) for h in range(n)]
    for x, y in product(basis, repeat=2):
        for v in range(n):
            vec = [int(i == v) for i in range(n)]
            assert M.act(x * y, vec) == M.act(x, M.act(y, vec))


def test_invariants_examples():
    K = sm.GF(3)
    for G in (sm.cyclic(3), S3):
        inv = sm.invariants(sm.fun_on_group(G, K))
        assert len(inv) == 1 and sm.same_span(inv, [[1] + [0] * (G.order - 1)], K)
        assert len(sm.invariants(sm.trivial_on_group(G, K))) == G.order
        act = sm.fun_adjoint_on_fun(G, K)
        inv = sm.invariants(act)
        brute = sm.invariants_brute_force(act)
        assert len(brute) == K.p ** len(inv) and sm.is_subalgebra(inv, act)
        brute = sm.invariants_brute_force(sm.fun_on_group(G, K))
        assert len(brute) == K.p


@pytest.mark.parametrize("name,G,K", [("C2", sm.cyclic(2), sm.QQ), ("C3", sm.cyclic(3), sm.GF(3)),
                                      ("S3", S3, sm.GF(2))])
def test_simplicity(name, G, K):
    M = sm.SmashModule(G, K)
    assert sm.simplicity_certificate(M).simple
    assert sm.simplicity_certificate(M, "density").simple
    if K.p:
        res = sm.simplicity_certificate(M, "enumerate")
        assert res.simple and res.checked == (K.p ** G.order - 1) // (K.p - 1)


def test_simplicity_rejections():
    with pytest.raises(sm.NotApplicable):
        sm.simplicity_certificate(sm.AugmentationModule(sm.cyclic(2), sm.QQ))
    with pytest.raises(sm.BudgetExceeded):
        sm.simplicity_certificate(sm.SmashModule(sm.cyclic(8), sm.GF(7)), "enumerate")
    with pytest.raises(sm.BudgetExceeded):
        sm.simplicity_certificate(sm.SmashModule(sm.cyclic(2), sm.QQ), "enumerate")


@pytest.mark.parametrize("G,K", [(sm.cyclic(3), sm.GF(3)), (sm.cyclic(2), sm.QQ), (S3, sm.GF(5))])
def test_endomorphisms(G, K):
    r = sm.endomorphism_check(G, K)
    assert r.passed and r.dim_end == 1
    r = sm.endomorphism_check(G, K, sm.trivial_on_group(G, K))
    assert r.passed and r.dim_end == G.order


@pytest.mark.parametrize("G,E", [(sm.cyclic(4), [0, 2]), (S3, C3_IN_S3)])
def test_quotient_invariants(G, E):
    for K in (sm.QQ, sm.GF(3), sm.GF(5)):
        r = sm.quotient_invariants_check(G, K, E)
        assert r["equal"] and r["subalgebra"] and r["dim"] == len(E)
        e = sm.endomorphism_check(G, K, sm.quotient_on_group(G, K, E))
        assert e.passed and e.dim_end == len(E)
