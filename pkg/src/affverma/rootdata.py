"""Root data of split semisimple types.

Roots are integer vectors in simple-root coordinates; weights are vectors in
fundamental-weight coordinates.  With ``C[i][j] = alpha_i(h_j)`` a root with
simple-root coordinates ``c`` has fundamental-weight coordinates ``c @ C``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import sympy

SUPPORTED = {("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("C", 3), ("D", 4), ("G", 2)}
CLASSICAL_COUNT = {"A": lambda l: l * (l + 1) // 2, "B": lambda l: l * l, "C": lambda l: l * l,
                   "D": lambda l: l * (l - 1), "G": lambda l: 6}


class UnsupportedType(ValueError):
    pass


class SearchBudgetExceeded(RuntimeError):
    pass


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix with ``C[i][j] = <alpha_i, alpha_j^vee>`` (Bourbaki numbering)."""
    if (family, rank) not in SUPPORTED:
        raise UnsupportedType(f"{family}{rank} is not supported")
    C = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        C[i][i + 1] = C[i + 1][i] = -1
    if family == "B":
        # alpha_l short
        C[rank - 2][rank - 1] = -2
    elif family == "C":
        # alpha_l long
        C[rank - 1][rank - 2] = -2
    elif family == "D":
        C[rank - 2][rank - 1] = C[rank - 1][rank - 2] = 0
        C[rank - 3][rank - 1] = C[rank - 1][rank - 3] = -1
    elif family == "G":
        # alpha_1 short, alpha_2 long
        C[1][0] = -3
    return C


def _height_lex_key(root):
    return (sum(root), tuple(-c for c in root))


def positive_roots(C: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Positive roots by breadth-first closure along simple-root strings.

    For a positive root ``beta`` and simple ``alpha_i``, ``beta + alpha_i`` is a
    root iff ``q > 0`` where ``p - q = beta(h_i)`` and ``p`` is the length of
    the string below ``beta``.
    """
    l = len(C)
    simple = [tuple(int(i == j) for j in range(l)) for i in range(l)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(l):
                down = 0
                gamma = list(beta)
                while True:
                    gamma[i] -= 1
                    if tuple(gamma) in roots:
                        down += 1
                    else:
                        break
                pairing = sum(beta[k] * C[k][i] for k in range(l))
                up = down - pairing
                if up > 0:
                    new = tuple(beta[k] + (k == i) for k in range(l))
                    if new not in roots:
                        roots.add(new)
                        nxt.append(new)
        frontier = nxt
    return sorted(roots, key=_height_lex_key)


def _matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


@dataclass(frozen=True)
class WeylElement:
    """Weyl group element as a reduced word and its matrix on root coordinates.

    ``matrix`` acts on column vectors of simple-root coordinates.
    """

    word: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, root: Sequence[int]) -> tuple[int, ...]:
        return tuple(sum(row[k] * root[k] for k in range(len(root))) for row in self.matrix)


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    det: int
    adjugate: tuple[tuple[int, ...], ...]
    _root_index: dict = field(default=None, compare=False, repr=False)

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def m(self) -> int:
        return len(self.positive_roots)

    def root_index(self, root: Sequence[int]) -> int:
        return self._root_index[tuple(root)]

    def is_root(self, root: Sequence[int]) -> bool:
        r = tuple(root)
        return r in self._root_index or tuple(-c for c in r) in self._root_index

    def pairing(self, root: Sequence[int], j: int) -> int:
        """``root(h_j)`` for a root in simple-root coordinates."""
        return sum(root[k] * self.cartan[k][j] for k in range(self.rank))

    def root_to_weight(self, root: Sequence) -> tuple:
        return tuple(sum(root[k] * self.cartan[k][j] for k in range(self.rank)) for j in range(self.rank))

    def simple_reflection(self, i: int) -> tuple[tuple[int, ...], ...]:
        l = self.rank
        M = [[int(a == b) for b in range(l)] for a in range(l)]
        for j in range(l):
            M[i][j] -= self.cartan[j][i]
        return tuple(tuple(r) for r in M)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "det": self.det,
            "adjugate": [list(r) for r in self.adjugate],
            "positive_roots": [list(r) for r in self.positive_roots],
        }


def build_root_datum(family: str, rank: int) -> RootDatum:
    C = cartan_matrix(family, rank)
    M = sympy.Matrix(C)
    det = int(M.det())
    adj = M.adjugate()
    Cstar = tuple(tuple(int(adj[i, j]) for j in range(rank)) for i in range(rank))
    roots = tuple(positive_roots(C))
    return RootDatum(
        family=family,
        rank=rank,
        cartan=tuple(tuple(r) for r in C),
        positive_roots=roots,
        det=det,
        adjugate=Cstar,
        _root_index={r: k for k, r in enumerate(roots)},
    )


def adjugate_weight_combination(datum: RootDatum, mu: Sequence[int]) -> tuple[int, ...]:
    """Simple-root coordinates of ``sum_i mu_i d omega_i``, i.e. ``(sum_i mu_i C*_ij)_j``."""
    l = datum.rank
    return tuple(sum(mu[i] * datum.adjugate[i][j] for i in range(l)) for j in range(l))


def weight_pairing(datum: RootDatum, weight: Sequence, j: int):
    """Value of a weight (fundamental-weight coordinates) on the coroot ``h_j``."""
    if not 0 <= j < datum.rank:
        raise IndexError(j)
    return weight[j]


def weyl_group(datum: RootDatum, budget: int = 10**5) -> list[WeylElement]:
    """All Weyl group elements by BFS over simple reflections; words are shortest."""
    l = datum.rank
    gens = [datum.simple_reflection(i) for i in range(l)]
    ident = tuple(tuple(int(a == b) for b in range(l)) for a in range(l))
    seen = {ident: ()}
    queue = deque([ident])
    while queue:
        g = queue.popleft()
        for i, s in enumerate(gens):
            h = tuple(tuple(r) for r in _matmul(s, g))
            if h not in seen:
                seen[h] = (i + 1,) + seen[g]
                if len(seen) > budget:
                    raise SearchBudgetExceeded(f"Weyl group larger than {budget}")
                queue.append(h)
    return [WeylElement(w, m) for m, w in seen.items()]


def longest_element(datum: RootDatum, budget: int = 10**5) -> WeylElement:
    """The unique element of maximal length; it maps every positive root to a negative one."""
    elems = weyl_group(datum, budget)
    top = max(e.length for e in elems)
    longest = [e for e in elems if e.length == top]
    assert len(longest) == 1
    return longest[0]


def root_system_from_json(data: dict) -> RootDatum:
    return build_root_datum(data["family"], int(data["rank"]))


def fundamental_weights_in_roots(datum: RootDatum) -> list[list[Fraction]]:
    """Rows: ``omega_i`` in simple-root coordinates, ``C*[i] / d``."""
    return [[Fraction(c, datum.det) for c in row] for row in datum.adjugate]
