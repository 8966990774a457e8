from math import factorial

import pytest

from affverma.rootdata import (CLASSICAL_COUNT, SUPPORTED, UnsupportedType, adjugate_weight_combination,
                               build_root_datum, cartan_matrix, fundamental_weights_in_roots,
                               longest_element, root_system_from_json, weyl_group)

WEYL_ORDER = {("A", 1): 2, ("A", 2): 6, ("A", 3): 24, ("A", 4): 120, ("B", 2): 8, ("C", 3): 48,
              ("D", 4): 192, ("G", 2): 12}


def test_a1_a2_examples():
    A1 = build_root_datum("A", 1)
    assert A1.cartan == ((2,),) and A1.det == 2 and A1.adjugate == ((1,),)
    assert A1.positive_roots == ((1,),)
    A2 = build_root_datum("A", 2)
    assert A2.cartan == ((2, -1), (-1, 2)) and A2.det == 3 and A2.adjugate == ((2, 1), (1, 2))
    assert set(A2.positive_roots) == {(1, 0), (0, 1), (1, 1)}
    G2 = build_root_datum("G", 2)
    assert G2.det == 1 and all(c >= 0 for r in G2.adjugate for c in r)


def test_adjugate_combination():
    A2 = build_root_datum("A", 2)
    assert adjugate_weight_combination(A2, (1, 0)) == (2, 1)
    assert adjugate_weight_combination(A2, (0, 0)) == (0, 0)
    assert adjugate_weight_combination(build_root_datum("A", 1), (1,)) == (1,)


def test_longest_element_examples():
    A1 = build_root_datum("A", 1)
    w = longest_element(A1)
    assert w.word == (1,) and w.apply((1,)) == (-1,)
    A2 = build_root_datum("A", 2)
    w = longest_element(A2)
    assert w.length == 3 and w.apply((1, 0)) == (0, -1)
    B2 = build_root_datum("B", 2)
    w = longest_element(B2)
    assert w.length == 4 and w.matrix == ((-1, 0), (0, -1))


def test_pairing_examples():
    A2 = build_root_datum("A", 2)
    assert A2.pairing((1, 0), 1) == -1
    assert A2.root_to_weight((1, 0)) == (2, -1)
    assert A2.pairing((0, 0), 0) == 0


@pytest.mark.parametrize("t", sorted(SUPPORTED))
def test_structure(t):
    R = build_root_datum(*t)
    l = R.rank
    C = R.cartan
    for i in range(l):
        for j in range(l):
            assert sum(C[i][k] * R.adjugate[k][j] for k in range(l)) == (R.det if i == j else 0)
    assert all(c >= 0 for r in R.adjugate for c in r)
    assert R.m == CLASSICAL_COUNT[t[0]](l)
    W = weyl_group(R)
    assert len(W) == WEYL_ORDER[t]
    roots = set(R.positive_roots) | {tuple(-c for c in r) for r in R.positive_roots}
    for w in W:
        assert {w.apply(r) for r in roots} == roots
    w0 = longest_element(R)
    assert {w0.apply(r) for r in R.positive_roots} == {tuple(-c for c in r) for r in R.positive_roots}
    assert w0.length == R.m
    # simple roots come first
    assert R.positive_roots[:l] == tuple(tuple(int(i == j) for j in range(l)) for i in range(l))
    # omega_i(h_j) = delta_ij
    om = fundamental_weights_in_roots(R)
    for i in range(l):
        assert list(R.root_to_weight(om[i])) == [int(i == j) for j in range(l)]


def test_unsupported_and_json():
    with pytest.raises(UnsupportedType):
        cartan_matrix("E", 8)
    R = build_root_datum("C", 3)
    assert root_system_from_json(R.to_json()) == R
