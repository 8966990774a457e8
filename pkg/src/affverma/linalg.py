"""Exact linear algebra: rank/nullspace over Q and F_p, and Smith form over Z_(p).

Rank and nullspace over fields are delegated to sympy's ``DomainMatrix``.
The local Smith form is implemented here because it has to track the column
transform and the p-adic valuations of the invariant factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .padic import INF, valuation


def _domain(p: int | None):
    return QQ if p is None else GF(p)


def _to_dm(rows: Sequence[Sequence], ncols: int, p: int | None) -> DomainMatrix:
    K = _domain(p)
    if p is None:
        conv = [[K(Fraction(x).numerator, Fraction(x).denominator) for x in r] for r in rows]
    else:
        conv = [[K(_mod_p(x, p)) for x in r] for r in rows]
    return DomainMatrix(conv, (len(rows), ncols), K)


def _mod_p(x, p: int) -> int:
    x = Fraction(x)
    return x.numerator * pow(x.denominator, -1, p) % p


def rank(rows: Sequence[Sequence], ncols: int | None = None, p: int | None = None) -> int:
    """Rank over Q (``p=None``) or over F_p."""
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return _to_dm(rows, ncols, p).rank()


def nullspace(rows: Sequence[Sequence], ncols: int, p: int | None = None) -> list[list]:
    """Basis of ``{x : A x = 0}``; entries are Fractions (Q) or ints in [0, p)."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    ns = _to_dm(rows, ncols, p).nullspace()
    out = []
    for r in ns.to_Matrix().tolist():
        if p is None:
            out.append([Fraction(int(x.p), int(x.q)) for x in r])
        else:
            out.append([int(x) % p for x in r])
    return out


@dataclass
class LocalSmith:
    """Smith form of an integral matrix over the local ring Z_(p).

    ``A @ V`` has, after invertible row operations, the diagonal form
    ``diag(p**valuations[0], ..., p**valuations[rank-1], 0, ...)``.  ``V`` is
    invertible over Z_(p), so the columns ``V[:, rank:]`` form a saturated
    basis of the kernel of ``A``.
    """

    valuations: list[int]
    V: list[list[Fraction]]
    ncols: int

    @property
    def rank(self) -> int:
        return len(self.valuations)

    def column(self, j: int) -> list[Fraction]:
        return [self.V[i][j] for i in range(self.ncols)]

    def kernel(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.rank, self.ncols)]

    def max_valuation(self):
        return max(self.valuations) if self.valuations else INF


def local_smith(rows: Sequence[Sequence], ncols: int, p: int) -> LocalSmith:
    """Smith normal form over Z_(p) by minimal-valuation pivoting.

    Entries must be p-integral rationals.
    """
    A = [[Fraction(x) for x in r] for r in rows]
    m, n = len(A), ncols
    V = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    vals: list[int] = []
    for i in range(m):
        for x in A[i]:
            if x and valuation(x, p) < 0:
                raise ValueError("matrix is not p-integral")
    t = 0
    while t < min(m, n):
        best, bi, bj = INF, -1, -1
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x:
                    v = valuation(x, p)
                    if v < best:
                        best, bi, bj = v, i, j
                        if v == 0:
                            break
            if best == 0:
                break
        if best is INF:
            break
        A[t], A[bi] = A[bi], A[t]
        if bj != t:
            for row in A:
                row[t], row[bj] = row[bj], row[t]
            for row in V:
                row[t], row[bj] = row[bj], row[t]
        scale = Fraction(p) ** best / A[t][t]
        for row in A:
            row[t] *= scale
        for row in V:
            row[t] *= scale
        piv = A[t][t]
        prow = A[t]
        for i in range(t + 1, m):
            c = A[i][t]
            if c:
                c = c / piv
                row = A[i]
                for j in range(t, n):
                    if prow[j]:
                        row[j] -= c * prow[j]
        for j in range(t + 1, n):
            c = prow[j]
            if c:
                c = c / piv
                for row in A:
                    if row[t]:
                        row[j] -= c * row[t]
                for row in V:
                    if row[t]:
                        row[j] -= c * row[t]
        vals.append(best)
        t += 1
    return LocalSmith(vals, V, n)
