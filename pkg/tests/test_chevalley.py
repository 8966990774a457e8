from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from affverma.chevalley import LieAlgebra, build_lie_algebra
from affverma.rootdata import SUPPORTED


@pytest.mark.parametrize("t", sorted(SUPPORTED))
def test_jacobi_and_matrix_model(t):
    L = build_lie_algebra(t)
    assert L.is_antisymmetric()
    assert L.jacobi_violations() == []
    assert L.matrix_bracket_mismatches() == []
    for (i, j), vec in L.table.items():
        assert all(Fraction(c).denominator == 1 for c in vec.values())


@pytest.mark.parametrize("t", sorted(SUPPORTED))
def test_chevalley_relations(t):
    L = build_lie_algebra(t)
    R = L.datum
    for k, root in enumerate(R.positive_roots):
        hv = L.bracket(L.basis_vector(L.e(k)), L.basis_vector(L.f(k)))
        assert all(hv[x] == 0 for x in range(L.dim) if L.kind(x) != "h")
        # root(h_root) = 2
        val = sum(hv[L.h(i)] * R.pairing(root, i) for i in range(R.rank))
        assert val == 2
    for a in range(R.m):
        for b in range(R.m):
            s = tuple(x + y for x, y in zip(R.positive_roots[a], R.positive_roots[b]))
            br = L.bracket(L.basis_vector(L.e(a)), L.basis_vector(L.e(b)))
            if R.is_root(s):
                # |N_{a,b}| = r + 1 with r the string length below
                r = 0
                down = list(R.positive_roots[b])
                while True:
                    down = [x - y for x, y in zip(down, R.positive_roots[a])]
                    if not R.is_root(down):
                        break
                    r += 1
                assert abs(br[L.e(R.root_index(s))]) == r + 1
            else:
                assert not any(br)
    for i in range(R.rank):
        for j in range(R.rank):
            assert not any(L.bracket(L.basis_vector(L.h(i)), L.basis_vector(L.h(j))))


def test_sl2_examples():
    L = build_lie_algebra(("A", 1))
    f, h, e = (L.basis_vector(k) for k in range(3))
    assert L.bracket(e, f) == h
    assert L.bracket(h, e) == [0, 0, 2]
    assert L.bracket(h, f) == [-2, 0, 0]


def test_a2_examples():
    L = build_lie_algebra(("A", 2))
    R = L.datum
    e1, e2 = L.basis_vector(L.e(0)), L.basis_vector(L.e(1))
    e12 = L.e(R.root_index((1, 1)))
    br = L.bracket(e1, e2)
    assert abs(br[e12]) == 1 and sum(map(abs, br)) == 1
    got = L.bracket(L.basis_vector(L.h(0)), L.basis_vector(e12))
    assert got == L.basis_vector(e12)


@settings(max_examples=30)
@given(st.lists(st.integers(-50, 50), min_size=8, max_size=8))
def test_bracket_self_is_zero(v):
    L = build_lie_algebra(("A", 2))
    assert not any(L.bracket(v, v))


def test_from_structure_constants():
    H = LieAlgebra.from_structure_constants(3, [(0, 1, 2, 5)])
    assert H.bracket([1, 0, 0], [0, 1, 0]) == [0, 0, 5]
    assert H.bracket([0, 1, 0], [1, 0, 0]) == [0, 0, -5]
    assert H.jacobi_violations() == []
