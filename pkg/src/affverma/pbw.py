"""Exact sparse arithmetic in the universal enveloping algebra U(g).

Elements are finite sums of ordered PBW monomials ``x_1^{a_1} ... x_d^{a_d}``
in the basis order of the underlying Lie algebra (for Chevalley algebras:
``f``-block, then ``h``-block, then ``e``-block).  A monomial is stored as its
exponent tuple.

The completed deformed algebra is never stored; it is modelled by finite sums
together with the gauge

    gauge_n(a) = min over the support of  v_p(c) - n * deg(monomial),

which is ``>= 0`` exactly when ``a`` lies in ``U(g)_n = sum_i p^{in} F_i U(g)``
(rewrite ``c x^beta = (c / p^{n|beta|}) (p^n x)^beta``).
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Iterable, Sequence

from .chevalley import ChevalleyAlgebra, LieAlgebra
from .linalg import local_smith
from .padic import INF, Scalar, min_valuation, reduce, valuation

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

Mono = tuple


class ZeroElement(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


def _clean(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _axpy(acc: dict, poly: dict, c) -> None:
    for m, v in poly.items():
        s = acc.get(m, 0) + c * v
        if s:
            acc[m] = s
        else:
            acc.pop(m, None)


class EnvelopingAlgebra:
    """U(g) for a Lie algebra given by structure constants."""

    def __init__(self, lie: LieAlgebra):
        self.lie = lie
        self.dim = lie.dim
        self._left_cache: dict = {}
        self._mono_cache: dict = {}
        self._zero = (0,) * self.dim

    # construction ----------------------------------------------------------

    def element(self, terms: dict | None = None) -> "PBWElement":
        return PBWElement(self, terms or {})

    def one(self) -> "PBWElement":
        return PBWElement(self, {self._zero: 1})

    def scalar(self, c: Scalar) -> "PBWElement":
        return PBWElement(self, {self._zero: c})

    def gen(self, i: int) -> "PBWElement":
        return PBWElement(self, {self.unit(i): 1})

    def unit(self, i: int) -> Mono:
        return tuple(int(k == i) for k in range(self.dim))

    def monomial(self, mono: Sequence[int], coeff: Scalar = 1) -> "PBWElement":
        return PBWElement(self, {tuple(mono): coeff})

    def from_lie_vector(self, vec: Sequence) -> "PBWElement":
        return PBWElement(self, {self.unit(i): c for i, c in enumerate(vec) if c})

    # straightening kernel ----------------------------------------------------

    def left_mul(self, i: int, mono: Mono) -> dict:
        """Standard form of ``x_i * x^mono``."""
        key = (i, mono)
        hit = self._left_cache.get(key)
        if hit is not None:
            return hit
        j = next((k for k, a in enumerate(mono) if a), None)
        if j is None or i <= j:
            out = {mono[:i] + (mono[i] + 1,) + mono[i + 1:]: 1}
        else:
            rest = mono[:j] + (mono[j] - 1,) + mono[j + 1:]
            out: dict = {}
            # x_i x_j R = x_j (x_i R) + [x_i, x_j] R
            for t, c in self.left_mul(i, rest).items():
                _axpy(out, self.left_mul(j, t), c)
            for k, c in self.lie.bracket_basis(i, j).items():
                _axpy(out, self.left_mul(k, rest), c)
        self._left_cache[key] = out
        return out

    def left_mul_poly(self, i: int, poly: dict) -> dict:
        out: dict = {}
        for t, c in poly.items():
            _axpy(out, self.left_mul(i, t), c)
        return out

    def mono_mul(self, m1: Mono, m2: Mono) -> dict:
        """Standard form of ``x^m1 * x^m2``."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        out = {m2: 1}
        for i in reversed(range(self.dim)):
            for _ in range(m1[i]):
                out = self.left_mul_poly(i, out)
        self._mono_cache[key] = out
        return out

    def multiply(self, a: "PBWElement", b: "PBWElement") -> "PBWElement":
        if a.algebra is not self or b.algebra is not self:
            raise ValueError("elements belong to different enveloping algebras")
        out: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _axpy(out, self.mono_mul(m1, m2), c1 * c2)
        return PBWElement(self, out)

    # independent rewriting straightener (confluence oracle) --------------------

    def straighten_word(self, word: Sequence[int], strategy: str = "leftmost") -> dict:
        """Standard form of an arbitrary word by naive rewriting.

        ``strategy`` picks which adjacent inversion ``ab -> ba + [a, b]`` is
        rewritten first.  No caching and no use of :meth:`left_mul`.
        """
        if strategy not in ("leftmost", "rightmost"):
            raise ValueError(strategy)
        pending = {tuple(word): 1}
        done: dict = {}
        while pending:
            w, c = pending.popitem()
            positions = [k for k in range(len(w) - 1) if w[k] > w[k + 1]]
            if not positions:
                mono = [0] * self.dim
                for x in w:
                    mono[x] += 1
                _axpy(done, {tuple(mono): 1}, c)
                continue
            k = positions[0] if strategy == "leftmost" else positions[-1]
            a, b = w[k], w[k + 1]
            swapped = w[:k] + (b, a) + w[k + 2:]
            pending[swapped] = pending.get(swapped, 0) + c
            for t, s in self.lie.bracket_basis(a, b).items():
                nw = w[:k] + (t,) + w[k + 2:]
                pending[nw] = pending.get(nw, 0) + c * s
            pending = {x: v for x, v in pending.items() if v}
        return done

    def word_of(self, mono: Mono) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(mono) for _ in range(a))

    # enumeration ---------------------------------------------------------------

    def monomials(self, max_degree: int) -> list[Mono]:
        out = []
        for d in range(max_degree + 1):
            for combo in combinations_with_replacement(range(self.dim), d):
                mono = [0] * self.dim
                for x in combo:
                    mono[x] += 1
                out.append(tuple(mono))
        return out


_ALGEBRAS: dict = {}


def enveloping(lie: LieAlgebra) -> EnvelopingAlgebra:
    """The (shared, cache-carrying) enveloping algebra of ``lie``."""
    alg = _ALGEBRAS.get(id(lie))
    if alg is None or alg.lie is not lie:
        alg = EnvelopingAlgebra(lie)
        _ALGEBRAS[id(lie)] = alg
    return alg


@dataclass(eq=False)
class PBWElement:
    algebra: EnvelopingAlgebra
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(m): _clean(c) for m, c in self.terms.items() if c}

    # arithmetic
    def _coerce(self, other):
        if isinstance(other, PBWElement):
            return other
        return self.algebra.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        _axpy(out, other.terms, 1)
        return PBWElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return PBWElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, PBWElement):
            return self.algebra.multiply(self, other)
        return PBWElement(self.algebra, {m: c * other for m, c in self.terms.items()})

    def __rmul__(self, other):
        return PBWElement(self.algebra, {m: other * c for m, c in self.terms.items()})

    def __pow__(self, k: int):
        out = self.algebra.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, PBWElement):
            other = self.algebra.scalar(other)
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: Sequence[int]):
        return self.terms.get(tuple(mono), 0)

    @property
    def degree(self) -> int:
        return filtration_degree(self)

    def truncate(self, D: int) -> "PBWElement":
        return PBWElement(self.algebra, {m: c for m, c in self.terms.items() if sum(m) <= D})

    def homogeneous_part(self, d: int) -> "PBWElement":
        return PBWElement(self.algebra, {m: c for m, c in self.terms.items() if sum(m) == d})

    def __repr__(self):
        if not self.terms:
            return "0"
        labels = self.algebra.lie.labels
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(m), m)):
            c = self.terms[m]
            factors = [labels[i] + (f"^{a}" if a > 1 else "") for i, a in enumerate(m) if a]
            parts.append(f"({c})" + ("*" + "*".join(factors) if factors else ""))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[list(m), str(Fraction(c))] for m, c in sorted(self.terms.items())]


def multiply(a: PBWElement, b: PBWElement) -> PBWElement:
    return a.algebra.multiply(a, b)


def commutator(a: PBWElement, b: PBWElement) -> PBWElement:
    return a * b - b * a


def filtration_degree(a: PBWElement) -> int:
    """Smallest ``i`` with ``a`` in ``F_i U(g)``."""
    if not a.terms:
        raise ZeroElement("the zero element has no filtration degree")
    return max(sum(m) for m in a.terms)


def gauge(a: PBWElement, n: int, p: int):
    """Lattice valuation ``min(v_p(c) - n deg)``; ``INF`` for zero."""
    best = INF
    for m, c in a.terms.items():
        g = valuation(c, p) - n * sum(m)
        if g < best:
            best = g
    return best


@dataclass(frozen=True)
class DeformationGauge:
    """Gauge of the n-th deformation ``U(g)_n``; membership is ``gauge >= 0``."""

    n: int
    p: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("deformation parameter must be >= 0")

    def __call__(self, a: PBWElement):
        return gauge(a, self.n, self.p)

    def contains(self, a: PBWElement) -> bool:
        return self(a) >= 0

    def lattice_coordinates(self, a: PBWElement) -> dict:
        """Coefficients with respect to the lattice basis ``(p^n x)^beta``."""
        return {m: Fraction(c) / Fraction(self.p) ** (self.n * sum(m)) for m, c in a.terms.items()}

    def congruent(self, a: PBWElement, b: PBWElement, N: int) -> bool:
        """``a == b mod p^N U(g)_n``."""
        return gauge(a - b, self.n, self.p) >= N


# -- adjoint action --------------------------------------------------------------


def _root_element(lie: ChevalleyAlgebra, alpha, r: Scalar) -> PBWElement:
    U = enveloping(lie)
    if isinstance(alpha, int):
        idx = lie.e(alpha)
    else:
        idx = lie.root_vector(alpha)
    return U.monomial(U.unit(idx), r)


def ad(x: PBWElement, a: PBWElement) -> PBWElement:
    return x * a - a * x


def divided_ad_power(lie: ChevalleyAlgebra, alpha, r: Scalar, m: int, a: PBWElement) -> PBWElement:
    """``ad(r e_alpha)^m (a) / m!``.

    ``alpha`` is a (signed) root in simple-root coordinates, or the index of a
    positive root.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    x = _root_element(lie, alpha, r)
    out = a
    for _ in range(m):
        if not out:
            break
        out = ad(x, out)
    return out * Fraction(1, factorial(m))


def ad_nilpotency_bound(lie: ChevalleyAlgebra, a: PBWElement) -> int:
    """An ``m`` with ``ad(e_alpha)^m a = 0`` for every root: ``(s - 1) deg(a) + 1``.

    ``s - 1`` is the largest ``k`` with ``ad(e_alpha)^k != 0`` on g, namely 2
    (3 for G2).  The bound ``deg(a) + 1`` fails already for ``a = f`` in sl2.
    """
    if not a:
        return 0
    s = 4 if lie.datum.family == "G" else 3
    return (s - 1) * filtration_degree(a) + 1


def exp_adjoint(lie: ChevalleyAlgebra, alpha, r: Scalar, a: PBWElement) -> PBWElement:
    """``x_alpha(r) . a = sum_m ad(r e_alpha)^m (a) / m!`` (a finite sum)."""
    x = _root_element(lie, alpha, r)
    out = a
    term = a
    cap = ad_nilpotency_bound(lie, a) + 1
    for m in range(1, cap + 1):
        term = ad(x, term) * Fraction(1, m)
        if not term:
            return out
        out = out + term
    raise RuntimeError("ad(e_alpha) failed to be nilpotent; structure constants are wrong")


# -- Casimir ---------------------------------------------------------------------


def casimir(lie: ChevalleyAlgebra) -> PBWElement:
    """Quadratic Casimir from the trace form of the matrix model.

    Normalised to a primitive integral element with positive ``h_1^2``
    coefficient; for sl2 this is ``h^2 + 2h + 4fe``.
    """
    import sympy

    mats = lie.matrices
    d = lie.dim
    B = sympy.Matrix(d, d, lambda a, b: sum(mats[a][i][j] * mats[b][j][i]
                                            for i in range(len(mats[0])) for j in range(len(mats[0]))))
    Binv = B.inv()
    U = enveloping(lie)
    out = U.element()
    for a in range(d):
        for b in range(d):
            c = Binv[a, b]
            if c != 0:
                num, den = sympy.fraction(c)
                out = out + U.gen(a) * U.gen(b) * Fraction(int(num), int(den))
    return primitive(out)


def primitive(a: PBWElement) -> PBWElement:
    """Scale to integral coefficients with gcd 1 and positive leading coefficient."""
    from math import gcd, lcm

    if not a:
        return a
    coeffs = [Fraction(c) for c in a.terms.values()]
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    g = 0
    for c in coeffs:
        g = gcd(g, int(c * den))
    lead = a.terms[max(a.terms, key=lambda m: (sum(m), tuple(-x for x in m)))]
    s = Fraction(den, g) * (1 if lead > 0 else -1)
    return a * s


# -- truncated centre --------------------------------------------------------------


@dataclass
class CenterResult:
    """Solutions of ``[x_i, z] = 0 mod p^N`` for ``z`` in the degree-``<= D`` gauge lattice.

    ``basis`` is a saturated basis of the exact centraliser ``F_D U(g) cap Z``;
    ``spurious`` counts additional free summands that appear only mod ``p^N``
    and ``torsion`` lists exponents ``k`` of cyclic summands ``p^{N-k}``-torsion.
    """

    D: int
    N: int
    n: int
    p: int
    basis: list
    spurious: int
    torsion: list

    @property
    def dimension(self) -> int:
        return len(self.basis) + self.spurious

    def lattice(self) -> DeformationGauge:
        return DeformationGauge(self.n, self.p)

    def reduced_basis(self) -> list[dict]:
        """Lattice coordinates of the basis reduced modulo ``p^N``."""
        g = self.lattice()
        out = []
        for z in self.basis:
            coords = g.lattice_coordinates(z)
            out.append({m: reduce(c, self.N, self.p) for m, c in coords.items()
                        if reduce(c, self.N, self.p)})
        return out


def _weight(lie: LieAlgebra, mono: Mono):
    if not isinstance(lie, ChevalleyAlgebra):
        return ()
    w = [0] * lie.rank
    for i, a in enumerate(mono):
        if a:
            for k, c in enumerate(lie.roots[i]):
                w[k] += a * c
    return tuple(w)


def truncated_center(lie: ChevalleyAlgebra, D: int, N: int, n: int = 0, p: int = 5,
                     budget: int = 5000, zero_weight_only: bool = False) -> CenterResult:
    """Degree-``<= D`` solutions of ``[x_i, z] = 0 mod p^N`` over the gauge lattice.

    The constraint map is graded by weight, so each weight block is solved
    separately with a Smith form over Z_(p).  ``zero_weight_only`` skips blocks of
    nonzero weight; they only ever carry torsion because ``ad(h_i)`` acts there
    by a nonzero integer of absolute value below ``p^N``.
    """
    if D < 0 or N < 1:
        raise ValueError("need D >= 0 and N >= 1")
    U = enveloping(lie)
    monos = U.monomials(D)
    if len(monos) > budget:
        raise BudgetExceeded(f"{len(monos)} monomials of degree <= {D} exceed budget {budget}")
    blocks: dict = {}
    for m in monos:
        blocks.setdefault(_weight(lie, m), []).append(m)
    if zero_weight_only:
        top = max(abs(c) for r in lie.datum.cartan for c in r)
        if 2 * top * D >= p**N:
            raise BudgetExceeded("zero_weight_only is not justified at this D, N")
        zero = (0,) * lie.rank
        blocks = {zero: blocks.get(zero, [])}
    gens = lie.simple_generators()
    basis, spurious, torsion = [], 0, []
    pn = Fraction(p) ** n
    for w, cols in sorted(blocks.items()):
        row_index: dict = {}
        entries: list[dict] = []
        for col, m in enumerate(cols):
            dm = sum(m)
            for g in gens:
                comm = dict(U.left_mul(g, m))
                _axpy(comm, U.mono_mul(m, U.unit(g)), -1)
                for out_m, c in comm.items():
                    key = (g, out_m)
                    r = row_index.setdefault(key, len(row_index))
                    scale = pn ** (dm - sum(out_m))
                    entries.append((r, col, c * scale))
        rows = [[0] * len(cols) for _ in range(len(row_index))]
        for r, col, c in entries:
            rows[r][col] += c
        smith = local_smith(rows, len(cols), p)
        spurious += sum(1 for v in smith.valuations if v >= N)
        torsion += [v for v in smith.valuations if 0 < v < N]
        for vec in smith.kernel():
            z = {cols[k]: c * pn ** sum(cols[k]) for k, c in enumerate(vec) if c}
            basis.append(PBWElement(U, z))
    return CenterResult(D, N, n, p, basis, spurious, sorted(torsion))


def lattice_vectors(elements: Sequence[PBWElement], n: int, p: int):
    """Coordinate matrix (rows = monomials) of elements in the gauge lattice basis."""
    g = DeformationGauge(n, p)
    coords = [g.lattice_coordinates(a) for a in elements]
    monos = sorted({m for c in coords for m in c})
    return monos, [[c.get(m, 0) for c in coords] for m in monos]


def congruent_to_span(z: PBWElement, generators: Sequence[PBWElement], N: int, n: int, p: int) -> bool:
    """Whether ``z`` lies in the Z_(p)-span of ``generators`` modulo ``p^N U(g)_n``.

    The generators must span a saturated sublattice (checked); then membership
    modulo ``p^N`` is read off the extra invariant factor of ``[G | z]``.
    """
    monos, G = lattice_vectors(list(generators) + [z], n, p)
    k = len(generators)
    base = local_smith([row[:k] for row in G], k, p)
    if base.rank != k or any(v != 0 for v in base.valuations):
        raise ValueError("generators are not a saturated family")
    full = local_smith(G, k + 1, p)
    if full.rank == k:
        return True
    return max(full.valuations) >= N


def exp_invariance_defect(lie: ChevalleyAlgebra, z: PBWElement, n: int, p: int,
                          rs: Iterable[int], roots=None):
    """Minimum gauge of ``exp_adjoint(alpha, r, z) - z`` over roots and ``r``."""
    if roots is None:
        l = lie.rank
        roots = [tuple(int(i == j) for j in range(l)) for i in range(l)]
        roots += [tuple(-c for c in r) for r in roots]
    worst = INF
    for alpha in roots:
        for r in rs:
            g = gauge(exp_adjoint(lie, alpha, r, z) - z, n, p)
            if g < worst:
                worst = g
    return worst


def coefficient_valuation(a: PBWElement, p: int):
    return min_valuation(a.terms.values(), p)
