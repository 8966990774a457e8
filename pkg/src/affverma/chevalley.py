"""Split semisimple Lie algebras with an integral Chevalley basis.

Structure constants are read off explicit matrix models: sl(l+1) for type A,
so(2l+1), sp(2l), so(2l) with anti-diagonal forms for B, C, D, and G2 as the
triality-fixed subalgebra of so(8).  Root vectors for non-simple roots are
generated as ``e_beta = [e_i, e_gamma] / (r + 1)`` where ``gamma - r alpha_i`` is
the bottom of the alpha_i-string through ``gamma``; this produces a Chevalley
basis, and integrality of every structure constant is asserted.

The basis order is ``f_1..f_m, h_1..h_l, e_1..e_m`` with the positive roots in
the height-then-lex order of :func:`affverma.rootdata.positive_roots`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

import sympy

from .rootdata import RootDatum, UnsupportedType, build_root_datum


class DimensionMismatch(ValueError):
    pass


Matrix = list  # list[list[Fraction]]


def _zeros(N):
    return [[Fraction(0)] * N for _ in range(N)]


def _unit(N, a, b):
    M = _zeros(N)
    M[a][b] = Fraction(1)
    return M


def _add(A, B, s=1):
    return [[a + s * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def _scale(A, c):
    return [[c * a for a in r] for r in A]


def _mul(A, B):
    n = len(A)
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(A[i], Bt[j]) if a and b), Fraction(0)) for j in range(n)] for i in range(n)]


def commutator(A, B):
    return _add(_mul(A, B), _mul(B, A), -1)


def _transpose(A):
    return [list(r) for r in zip(*A)]


def _is_zero(A):
    return all(x == 0 for r in A for x in r)


class LieAlgebra:
    """A Lie algebra given by a sparse structure-constant table.

    ``table[(i, j)]`` is a dict ``k -> c`` with ``[x_i, x_j] = sum_k c x_k``.
    Only nonzero brackets are stored; the table is kept antisymmetric.
    """

    def __init__(self, dim: int, table: dict, labels: Sequence[str] | None = None):
        self.dim = dim
        self.labels = list(labels) if labels is not None else [f"x{i + 1}" for i in range(dim)]
        self.table = {}
        for (i, j), vec in table.items():
            vec = {k: c for k, c in vec.items() if c}
            if vec:
                self.table[(i, j)] = vec
                self.table[(j, i)] = {k: -c for k, c in vec.items()}

    @classmethod
    def from_structure_constants(cls, dim: int, entries, labels=None) -> "LieAlgebra":
        """Build from ``[(i, j, k, c), ...]`` meaning ``[x_i, x_j] += c x_k`` (0-based)."""
        table: dict = {}
        for i, j, k, c in entries:
            if i == j:
                raise ValueError("[x_i, x_i] must vanish")
            key = (i, j) if i < j else (j, i)
            sign = 1 if i < j else -1
            vec = table.setdefault(key, {})
            vec[k] = vec.get(k, 0) + sign * _num(c)
        return cls(dim, table, labels)

    def bracket_basis(self, i: int, j: int) -> dict:
        return self.table.get((i, j), {})

    def bracket(self, x: Sequence, y: Sequence) -> list:
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch(f"expected vectors of length {self.dim}")
        out = [Fraction(0)] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b:
                    continue
                for k, c in self.bracket_basis(i, j).items():
                    out[k] += a * b * c
        return out

    def basis_vector(self, i: int) -> list:
        return [Fraction(int(k == i)) for k in range(self.dim)]

    def jacobi_violations(self) -> list[tuple[int, int, int]]:
        """Basis triples (i < j < k) where the Jacobi identity fails."""
        bad = []
        E = [self.basis_vector(i) for i in range(self.dim)]
        for i, j, k in combinations(range(self.dim), 3):
            s1 = self.bracket(E[i], self.bracket(E[j], E[k]))
            s2 = self.bracket(E[j], self.bracket(E[k], E[i]))
            s3 = self.bracket(E[k], self.bracket(E[i], E[j]))
            if any(a + b + c for a, b, c in zip(s1, s2, s3)):
                bad.append((i, j, k))
        return bad

    def is_antisymmetric(self) -> bool:
        for (i, j), vec in self.table.items():
            other = self.table.get((j, i), {})
            if set(vec) != set(other) or any(vec[k] != -other[k] for k in vec):
                return False
        return True

    def structure_constants(self) -> list[list]:
        """Serializable list of ``[i, j, k, c]`` with ``i < j``."""
        out = []
        for (i, j), vec in sorted(self.table.items()):
            if i < j:
                for k, c in sorted(vec.items()):
                    out.append([i, j, k, str(c)])
        return out


def _num(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class ChevalleyAlgebra(LieAlgebra):
    """Chevalley-basis Lie algebra attached to a :class:`RootDatum`."""

    def __init__(self, datum: RootDatum, table: dict, matrices: list, labels):
        super().__init__(2 * datum.m + datum.rank, table, labels)
        self.datum = datum
        self.m = datum.m
        self.rank = datum.rank
        self.matrices = matrices
        zero = (0,) * datum.rank
        self.roots = (
            [tuple(-c for c in r) for r in datum.positive_roots]
            + [zero] * datum.rank
            + [tuple(r) for r in datum.positive_roots]
        )

    def f(self, k: int) -> int:
        return k

    def h(self, i: int) -> int:
        return self.m + i

    def e(self, k: int) -> int:
        return self.m + self.rank + k

    def kind(self, idx: int) -> str:
        if idx < self.m:
            return "f"
        if idx < self.m + self.rank:
            return "h"
        return "e"

    def root_vector(self, root: Sequence[int]) -> int:
        """Basis index of the root vector for a (signed) root."""
        root = tuple(root)
        if root in self.datum._root_index:
            return self.e(self.datum.root_index(root))
        neg = tuple(-c for c in root)
        if neg in self.datum._root_index:
            return self.f(self.datum.root_index(neg))
        raise ValueError(f"{root} is not a root of {self.datum.label}")

    def simple_generators(self) -> list[int]:
        """Indices of ``e_i, f_i, h_i`` for the simple roots."""
        l = self.rank
        return [self.e(i) for i in range(l)] + [self.f(i) for i in range(l)] + [self.h(i) for i in range(l)]

    def basis_weight(self, idx: int) -> tuple[int, ...]:
        return self.roots[idx]

    def matrix_of(self, vec: Sequence) -> Matrix:
        N = len(self.matrices[0])
        out = _zeros(N)
        for c, M in zip(vec, self.matrices):
            if c:
                out = _add(out, M, c)
        return out

    def vector_of(self, M: Matrix) -> list:
        """Coordinates of a matrix lying in the model (exact; raises if outside)."""
        rows = []
        N = len(M)
        flat = [x for r in M for x in r]
        cols = [[x for r in B for x in r] for B in self.matrices]
        A = sympy.Matrix([[cols[k][t] for k in range(self.dim)] for t in range(N * N)])
        b = sympy.Matrix(flat)
        sol, params = A.gauss_jordan_solve(b)
        if params.shape[0]:
            raise ValueError("matrix model basis is degenerate")
        return [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]

    def matrix_bracket_mismatches(self) -> list[tuple[int, int]]:
        """Basis pairs where the table disagrees with the matrix commutator."""
        bad = []
        for a in range(self.dim):
            for b in range(a + 1, self.dim):
                lhs = commutator(self.matrices[a], self.matrices[b])
                rhs = self.matrix_of([self.bracket_basis(a, b).get(k, 0) for k in range(self.dim)])
                if lhs != rhs:
                    bad.append((a, b))
        return bad

    def to_json(self) -> dict:
        return {"type": self.datum.label, "labels": self.labels, "brackets": self.structure_constants()}


# -- matrix models -----------------------------------------------------------


def _anti_diag_form(N, skew):
    J = _zeros(N)
    for i in range(N):
        sign = -1 if (skew and i >= N // 2) else 1
        J[i][N - 1 - i] = Fraction(sign)
    return J


def _model_simple(family: str, l: int):
    """Simple root vectors ``e_i`` (and the invariant form, if any)."""
    if family == "A":
        N = l + 1
        return [_unit(N, i, i + 1) for i in range(l)], None
    if family in "BCD":
        N = {"B": 2 * l + 1, "C": 2 * l, "D": 2 * l}[family]
        J = _anti_diag_form(N, skew=(family == "C"))

        def pair(a, b):
            return _add(_unit(N, a, b), _unit(N, N - 1 - b, N - 1 - a), -1)

        es = [pair(i, i + 1) for i in range(l - 1)]
        if family == "B":
            es.append(pair(l - 1, l))
        elif family == "C":
            es.append(_unit(N, l - 1, l))
        else:
            es.append(pair(l - 2, l))
        return es, J
    raise UnsupportedType(family)


def _in_form_algebra(X, J) -> bool:
    return _is_zero(_add(_mul(_transpose(X), J), _mul(J, X)))


def _torus_coords(H, hs):
    """Coordinates of a diagonal matrix ``H`` in the diagonal matrices ``hs``."""
    N = len(H)
    A = sympy.Matrix([[hs[k][t][t] for k in range(len(hs))] for t in range(N)])
    b = sympy.Matrix([H[t][t] for t in range(N)])
    sol, params = A.gauss_jordan_solve(b)
    assert params.shape[0] == 0
    coords = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]
    assert _is_zero(_add(H, _sum_scaled(hs, coords), -1)), "bracket left the torus"
    return coords


def _sum_scaled(mats, coeffs):
    out = _zeros(len(mats[0]))
    for c, M in zip(coeffs, mats):
        if c:
            out = _add(out, M, c)
    return out


def _eigen_on(H, X) -> Fraction:
    """Scalar ``c`` with ``[H, X] = c X`` (X nonzero)."""
    K = commutator(H, X)
    for r1, r2 in zip(K, X):
        for a, b in zip(r1, r2):
            if b:
                c = a / b
                assert K == _scale(X, c)
                return c
    raise ValueError("zero matrix")


def _chevalley_generators(family: str, l: int):
    if family == "G":
        es4, J = _model_simple("D", 4)
        fs4 = [_transpose(e) for e in es4]
        es = [_add(_add(es4[0], es4[2]), es4[3]), es4[1]]
        fs = [_add(_add(fs4[0], fs4[2]), fs4[3]), fs4[1]]
        return es, fs, J
    es, J = _model_simple(family, l)
    fs = []
    for e in es:
        if J is not None:
            assert _in_form_algebra(e, J)
        et = _transpose(e)
        kappa = _eigen_on(commutator(e, et), e)
        fs.append(_scale(et, Fraction(2) / kappa))
    return es, fs, J


def build_lie_algebra(datum: RootDatum | tuple) -> ChevalleyAlgebra:
    """Chevalley-basis Lie algebra of a supported root datum."""
    if isinstance(datum, tuple):
        datum = build_root_datum(*datum)
    return _build_cached(datum.family, datum.rank)


_CACHE: dict = {}


def _build_cached(family, rank):
    key = (family, rank)
    if key not in _CACHE:
        _CACHE[key] = _build(build_root_datum(family, rank))
    return _CACHE[key]


def _build(datum: RootDatum) -> ChevalleyAlgebra:
    family, l = datum.family, datum.rank
    es, fs, J = _chevalley_generators(family, l)
    hs = [commutator(e, f) for e, f in zip(es, fs)]
    C = datum.cartan
    for i in range(l):
        for j in range(l):
            assert _eigen_on(hs[j], es[i]) == C[i][j], "matrix model disagrees with Cartan matrix"

    roots = datum.positive_roots
    E: dict = {}
    F: dict = {}
    for k in range(l):
        E[roots[k]] = es[k]
        F[roots[k]] = fs[k]
    for beta in roots[l:]:
        i = next(i for i in range(l) if beta[i] > 0 and _sub(beta, i) in E)
        gamma = _sub(beta, i)
        r = 0
        while datum.is_root(_sub(gamma, i, r + 1)):
            r += 1
        eb = _scale(commutator(es[i], E[gamma]), Fraction(1, r + 1))
        fb = _scale(commutator(fs[i], F[gamma]), Fraction(1, r + 1))
        Hb = _torus_coords(commutator(eb, fb), hs)
        value = sum(c * datum.pairing(beta, j) for j, c in enumerate(Hb))
        s = Fraction(2) / value
        assert s in (1, -1), f"non-Chevalley normalisation for {beta}"
        E[beta] = eb
        F[beta] = _scale(fb, s)

    mats = [F[r] for r in roots] + hs + [E[r] for r in roots]
    m = len(roots)
    labels = ([f"f{_rlabel(r)}" for r in roots] + [f"h{i + 1}" for i in range(l)]
              + [f"e{_rlabel(r)}" for r in roots])
    zero = (0,) * l
    weights = [tuple(-c for c in r) for r in roots] + [zero] * l + list(roots)
    index_of = {}
    for k, w in enumerate(weights):
        if w != zero:
            index_of[w] = k

    table = {}
    dim = len(mats)
    for a in range(dim):
        for b in range(a + 1, dim):
            K = commutator(mats[a], mats[b])
            if _is_zero(K):
                continue
            w = tuple(x + y for x, y in zip(weights[a], weights[b]))
            if w == zero:
                coords = _torus_coords(K, hs)
                vec = {m + i: c for i, c in enumerate(coords) if c}
            else:
                k = index_of[w]
                vec = {k: _eigen_ratio(K, mats[k])}
            for c in vec.values():
                assert c.denominator == 1, f"non-integral structure constant {c}"
            table[(a, b)] = {k: int(c) for k, c in vec.items()}
    return ChevalleyAlgebra(datum, table, mats, labels)


def _eigen_ratio(K, B) -> Fraction:
    for r1, r2 in zip(K, B):
        for a, b in zip(r1, r2):
            if b:
                c = a / b
                assert K == _scale(B, c), "bracket is not in the expected root space"
                return c
    raise ValueError("zero basis matrix")


def _sub(beta, i, times=1):
    return tuple(c - times * (k == i) for k, c in enumerate(beta))


def _rlabel(r) -> str:
    return "[" + "".join(str(c) for c in r) + "]"


def matrix_exp_nilpotent(X: Matrix) -> Matrix:
    """``exp(X)`` for a nilpotent matrix (finite sum)."""
    N = len(X)
    out = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    term = out
    for k in range(1, N + 1):
        term = _scale(_mul(term, X), Fraction(1, k))
        if _is_zero(term):
            break
        out = _add(out, term)
    return out


def matrix_inverse(M: Matrix) -> Matrix:
    inv = sympy.Matrix(M).inv()
    return [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in row]
            for row in inv.tolist()]


def conjugate(U: Matrix, X: Matrix, Uinv: Matrix | None = None) -> Matrix:
    Uinv = matrix_inverse(U) if Uinv is None else Uinv
    return _mul(_mul(U, X), Uinv)
