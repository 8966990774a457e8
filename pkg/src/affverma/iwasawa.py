"""Uniform pro-p groups, Iwasawa-algebra elements and the exp-embedding.

A uniform group is given by a Z_p-Lie lattice ``L_G`` with basis ``x_1..x_d``
and ``[L_G, L_G] in p L_G``.  Group elements ``g_i = exp(x_i)`` and
``b_i = g_i - 1``.  Elements of ``U(g)`` for ``g = (1/p) L_G`` are computed in
the PBW engine of a *realisation*: a Lie algebra ``lie`` together with the
images of the ``x_i`` in it.  Every ``x_i`` equals ``p y_i`` where the ``y_i``
span a Lie lattice equal to ``p^scale`` times the basis lattice of ``lie``, so
the lattice valuation of an element is ``gauge(a, scale, p)``.

Truncation bound.  In ``exp(x_i) - 1 = sum_k p^k y_i^k / k!`` a product of
terms of degrees ``k_1..k_r`` summing to ``K`` has coefficient valuation
``K - sum v_p(k_i!) >= K - v_p(K!)`` (multinomials are integers), and the
y-lattice is closed under multiplication because ``[y_i, y_j] = p^{-1}[x_i, x_j]``
is integral.  Monomials of degree ``> D`` only arise from ``K >= D+1``, so every
discarded term has gauge ``>= min_{K > D} (K - v_p(K!))``.  Legendre gives
``K - v_p(K!) >= K (p-2)/(p-1)``, which keeps the minimum finite and makes it
non-decreasing in ``D``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial
from typing import Sequence

from .chevalley import ChevalleyAlgebra, LieAlgebra, build_lie_algebra
from .linalg import local_smith, rank as exact_rank
from .padic import INF, NEG_INF, Scalar, factorial_valuation, is_prime, reduce, valuation
from .pbw import PBWElement, enveloping, gauge
from .verma import VermaModule, VermaVector


class TruncationInsufficient(RuntimeError):
    pass


class ConvergenceDomain(ValueError):
    pass


class NotUniform(ValueError):
    pass


@dataclass(eq=False)
class UniformGroupData:
    p: int
    lie: LieAlgebra
    generators: tuple  # Lie vectors in ``lie`` for x_1..x_d
    scale: int
    labels: tuple = ()
    brackets: tuple = field(default=(), repr=False)

    def __post_init__(self):
        if not is_prime(self.p) or self.p == 2:
            raise ValueError("p must be an odd prime")
        self.generators = tuple(tuple(Fraction(c) for c in g) for g in self.generators)
        if not self.labels:
            self.labels = tuple(f"x{i + 1}" for i in range(self.d))
        self.brackets = tuple(self._structure_constants())
        for i, j, k, c in self.brackets:
            if valuation(c, self.p) < 1:
                raise NotUniform(f"[x{i + 1}, x{j + 1}] has x{k + 1}-coefficient {c} not in p Z_p")

    @property
    def d(self) -> int:
        return len(self.generators)

    def _structure_constants(self):
        """Express ``[x_i, x_j]`` in the ``x`` basis (solving in the generator span)."""
        import sympy

        X = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in g] for g in self.generators]).T
        out = []
        for i in range(self.d):
            for j in range(i + 1, self.d):
                br = self.lie.bracket(self.generators[i], self.generators[j])
                if not any(br):
                    continue
                rhs = sympy.Matrix([sympy.Rational(c.numerator, c.denominator) for c in br])
                sol, params = X.gauss_jordan_solve(rhs)
                if params.shape[0]:
                    raise NotUniform("generators are linearly dependent")
                for k in range(self.d):
                    if sol[k]:
                        out.append((i, j, k, Fraction(int(sol[k].p), int(sol[k].q))))
        return out

    @property
    def U(self):
        return enveloping(self.lie)

    def x(self, i: int) -> PBWElement:
        return self.U.from_lie_vector(self.generators[i])

    def lattice_gauge(self, a: PBWElement):
        return gauge(a, self.scale, self.p)

    def to_json(self) -> dict:
        return {"p": self.p, "rank": self.d,
                "brackets": [[i + 1, j + 1, k + 1, str(c)] for i, j, k, c in self.brackets]}


def from_brackets(p: int, rank: int, brackets, labels=None) -> UniformGroupData:
    """Abstract group from ``[x_i, x_j] = sum c x_k`` (0-based indices)."""
    lie = LieAlgebra.from_structure_constants(rank, brackets, labels)
    gens = [tuple(int(a == b) for b in range(rank)) for a in range(rank)]
    return UniformGroupData(p, lie, gens, scale=-1, labels=tuple(labels or ()))


def group_from_json(data) -> UniformGroupData:
    """``{"p", "rank", "brackets": [[i, j, k, c], ...]}`` with 1-based indices."""
    if isinstance(data, str):
        data = json.loads(data)
    br = [(int(i) - 1, int(j) - 1, int(k) - 1, Fraction(c)) for i, j, k, c in data.get("brackets", [])]
    return from_brackets(int(data["p"]), int(data["rank"]), br)


def abelian_zp(p: int, d: int = 1) -> UniformGroupData:
    return from_brackets(p, d, [])


def heisenberg(p: int) -> UniformGroupData:
    """``[x_1, x_2] = p x_3``."""
    return from_brackets(p, 3, [(0, 1, 2, p)])


def congruence_kernel(lie: ChevalleyAlgebra | tuple, p: int, n: int = 0) -> UniformGroupData:
    """``exp(p^{n+1} g_Z)``: generators ``x = p^{n+1}`` times the Chevalley basis.

    The y-lattice is ``p^n g_Z`` so the completed enveloping algebra is ``U(g)_n``.
    """
    if not isinstance(lie, LieAlgebra):
        lie = build_lie_algebra(lie)
    q = p ** (n + 1)
    gens = [tuple(q * int(a == b) for b in range(lie.dim)) for a in range(lie.dim)]
    return UniformGroupData(p, lie, gens, scale=n, labels=tuple(f"g({l})" for l in lie.labels))


@dataclass(eq=False)
class IwasawaElement:
    group: UniformGroupData
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(a): Fraction(c) for a, c in self.terms.items() if c}
        for a in self.terms:
            if len(a) != self.group.d:
                raise ValueError("exponent length does not match the group rank")

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, 0) + c
        return IwasawaElement(self.group, out)

    def __neg__(self):
        return IwasawaElement(self.group, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, IwasawaElement):
            raise TypeError("products are computed through embed()")
        return IwasawaElement(self.group, {a: c * x for a, x in self.terms.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*b^{list(a)}" for a, c in sorted(self.terms.items()))


def b_monomial(group: UniformGroupData, alpha: Sequence[int], c: Scalar = 1) -> IwasawaElement:
    return IwasawaElement(group, {tuple(alpha): c})


def norm_1p(zeta: IwasawaElement):
    """``log_p`` of ``sup |lambda_alpha| p^{-|alpha|}``; ``NEG_INF`` for zero."""
    best = NEG_INF
    for a, c in zeta.terms.items():
        e = -valuation(c, zeta.group.p) - sum(a)
        if e > best:
            best = e
    return best


def gauge_bound(D: int, p: int) -> int:
    """Lower bound for the y-lattice gauge of everything ``embed(.., D)`` discards."""
    best = None
    K = D + 1
    while best is None or Fraction(K * (p - 2), p - 1) < best:
        g = K - factorial_valuation(K, p)
        best = g if best is None else min(best, g)
        K += 1
    return best


@lru_cache(maxsize=None)
def _exp_minus_one(group: UniformGroupData, i: int, D: int) -> PBWElement:
    x = group.x(i)
    out = group.U.element()
    power = group.U.one()
    for k in range(1, D + 1):
        power = (power * x).truncate(D)
        out = out + power * Fraction(1, factorial(k))
    return out


@lru_cache(maxsize=None)
def _embed_monomial(group: UniformGroupData, alpha: tuple, D: int) -> PBWElement:
    out = group.U.one()
    for i, a in enumerate(alpha):
        for _ in range(a):
            out = (out * _exp_minus_one(group, i, D)).truncate(D)
    return out


def embed_monomial(group: UniformGroupData, alpha: Sequence[int], D: int) -> PBWElement:
    """``b^alpha = prod_i (exp(x_i) - 1)^{alpha_i}`` truncated to degree ``<= D``."""
    alpha = tuple(alpha)
    if len(alpha) != group.d:
        raise ValueError("exponent length does not match the group rank")
    if D < sum(alpha):
        raise ValueError("D must be at least |alpha|")
    return _embed_monomial(group, alpha, D)


def embed(zeta: IwasawaElement, D: int) -> PBWElement:
    out = zeta.group.U.element()
    for a, c in zeta.terms.items():
        out = out + embed_monomial(zeta.group, a, D) * c
    return out


def x_monomial(group: UniformGroupData, beta: Sequence[int]) -> PBWElement:
    out = group.U.one()
    for i, b in enumerate(beta):
        for _ in range(b):
            out = out * group.x(i)
    return out


def exponents(d: int, bound: int) -> list[tuple]:
    """All ``alpha in N^d`` with ``|alpha| <= bound``, by degree then lex."""
    out = [a for a in product(range(bound + 1), repeat=d) if sum(a) <= bound]
    return sorted(out, key=lambda a: (sum(a), tuple(-x for x in a)))


# -- injectivity --------------------------------------------------------------------


@dataclass
class InjectivityCertificate:
    A: int
    B: int
    D: int
    M: int
    p: int
    rows: int
    cols: int
    rank: int
    smith_rank: int
    max_invariant_valuation: object
    spread: int
    gauge_bound: int
    attempts: list = field(default_factory=list)

    @property
    def full_rank(self) -> bool:
        return self.rank == self.rows

    @property
    def certified(self) -> bool:
        return (self.full_rank and self.smith_rank == self.rank
                and self.max_invariant_valuation < self.M
                and self.gauge_bound > self.M + self.spread)

    def to_json(self) -> dict:
        from .reports import jsonable

        return jsonable({"A": self.A, "B": self.B, "D": self.D, "M": self.M, "p": self.p,
                         "rows": self.rows, "cols": self.cols, "rank": self.rank,
                         "smith_rank": self.smith_rank, "full_rank": self.full_rank,
                         "max_invariant_valuation": self.max_invariant_valuation,
                         "spread": self.spread, "gauge_bound": self.gauge_bound,
                         "certified": self.certified, "attempts": self.attempts})


def injectivity_matrix(group: UniformGroupData, A: int, B: int, D: int):
    """Rows ``embed(b^alpha, D) x^beta`` in y-lattice coordinates; also row gauges."""
    p, s = group.p, group.scale
    elements = []
    for alpha in exponents(group.d, A):
        e = embed_monomial(group, alpha, max(D, sum(alpha)))
        for beta in exponents(group.d, B):
            elements.append(e * x_monomial(group, beta))
    cols = sorted({m for el in elements for m in el.terms})
    index = {m: j for j, m in enumerate(cols)}
    rows, gauges = [], []
    for el in elements:
        row = [Fraction(0)] * len(cols)
        for m, c in el.terms.items():
            row[index[m]] = Fraction(c) * Fraction(p) ** (-s * sum(m))
        rows.append(row)
        gauges.append(group.lattice_gauge(el))
    return rows, gauges, cols


def injectivity_rank_test(group: UniformGroupData, A: int, B: int, D: int, M: int | None = None
                          ) -> InjectivityCertificate:
    """Exact rank of the truncated images of ``b^alpha (x) x^beta``.

    Certification needs every invariant factor of the gauge-normalised matrix to
    have valuation ``< M`` and ``gauge_bound(D) > M + spread``; with ``M=None`` the
    smallest admissible ``M`` is used.
    """
    p = group.p
    rows, gauges, cols = injectivity_matrix(group, A, B, D)
    if any(g is INF for g in gauges):
        raise ValueError("a tested image vanished after truncation")
    spread = max(gauges)
    normalised = [[c / Fraction(p) ** g for c in r] for r, g in zip(rows, gauges)]
    sm = local_smith(normalised, len(cols), p)
    smax = sm.max_valuation() if sm.rank else 0
    if M is None:
        M = (smax if smax is not INF else 0) + 1
    G = gauge_bound(D, p)
    if G <= M + spread:
        raise TruncationInsufficient(
            f"gauge_bound({D}) = {G} <= M + spread = {M} + {spread}; raise D")
    rk = exact_rank(rows, len(cols))
    return InjectivityCertificate(A, B, D, M, p, len(rows), len(cols), rk, sm.rank, smax, spread, G)


def certify_injectivity(group: UniformGroupData, A: int, B: int, D: int, M: int | None = None,
                        max_D: int = 64) -> InjectivityCertificate:
    """Run the rank test, raising ``D`` until the truncation check passes."""
    attempts = []
    while True:
        try:
            cert = injectivity_rank_test(group, A, B, D, M)
        except TruncationInsufficient as exc:
            attempts.append({"D": D, "reason": str(exc)})
            D += 1
            if D > max_D:
                raise
            continue
        cert.attempts = attempts
        return cert


# -- characters ---------------------------------------------------------------------


def _log_terms_needed(M: int, p: int) -> int:
    # k - floor(log_p k) is non-decreasing; every term from there on is 0 mod p^M
    k = 1
    while k - _ilog(k, p) < M:
        k += 1
    return k


def _ilog(k: int, p: int) -> int:
    e = 0
    while k >= p:
        k //= p
        e += 1
    return e


def padic_log(x: Scalar, p: int, M: int) -> int:
    """``log(x) mod p^M`` for ``x in 1 + p Z_p``."""
    t = Fraction(x) - 1
    if valuation(x, p) != 0 or valuation(t, p) < 1:
        raise ConvergenceDomain(f"{x} is not in 1 + {p}Z_{p}")
    K = _log_terms_needed(M, p)
    s = sum((Fraction((-1) ** (k + 1), k) * t ** k for k in range(1, K)), Fraction(0))
    return reduce(s, M, p)


def padic_exp(a: Scalar, p: int, M: int) -> int:
    """``exp(a) mod p^M`` for ``a in p Z_p``."""
    if valuation(a, p) < 1:
        raise ConvergenceDomain(f"{a} is not in {p}Z_{p}")
    a = Fraction(a)
    s, term, k = Fraction(0), Fraction(1), 0
    # the k-th term has valuation >= k - (k-1)/(p-1), non-decreasing in k
    while k == 0 or k - Fraction(k - 1, p - 1) < M:
        s += term
        k += 1
        term = term * a / k
    return reduce(s, M, p)


def theta_lambda_convert(direction: str, values: Sequence[Scalar], p: int, M: int) -> list[int]:
    """``theta(g) -> lambda(log g) = log theta(g)`` or back via ``exp``, modulo ``p^M``."""
    if direction in ("theta_to_lambda", "log"):
        return [padic_log(v, p, M) for v in values]
    if direction in ("lambda_to_theta", "exp"):
        return [padic_exp(v, p, M) for v in values]
    raise ValueError(f"unknown direction {direction!r}")


# -- faithfulness -------------------------------------------------------------------


@dataclass
class WitnessReport:
    found: bool
    beta: tuple | None
    image_valuation: object
    D: int
    M: int
    B: int
    gauge_bound: int
    image: dict = field(default_factory=dict)

    @property
    def inconclusive(self) -> bool:
        return not self.found

    def to_json(self) -> dict:
        from .reports import jsonable

        status = "witness" if self.found else f"inconclusive at (D={self.D}, B={self.B}, M={self.M})"
        return jsonable({"status": status, "beta": self.beta, "image_valuation": self.image_valuation,
                         "D": self.D, "M": self.M, "B": self.B, "gauge_bound": self.gauge_bound,
                         "image": {str(list(k)): v for k, v in self.image.items()}})


def minimal_degree(M: int, p: int) -> int:
    D = 0
    while gauge_bound(D, p) < M:
        D += 1
    return D


def faithfulness_witness(zeta: IwasawaElement, module: VermaModule, D: int | None = None,
                         M: int = 6, B: int = 6) -> WitnessReport:
    """Find ``f^beta v`` (``|beta| <= B``) with ``embed(zeta) f^beta v != 0`` mod ``p^M``.

    Works in the lattice ``(p^n f)^beta v``.  ``zeta`` is first scaled to have
    integral coefficients with a unit among them; a coordinate of valuation
    ``< min(M, gauge_bound(D))`` then certifies a nonzero image.
    """
    group = zeta.group
    if group.lie is not module.lie:
        raise ValueError("the group must be realised inside the module's Lie algebra")
    if not zeta:
        raise ValueError("zeta must be nonzero")
    p, n = group.p, module.lam.n
    if module.lam.p not in (None, p) or (n and group.scale != n):
        raise ValueError("group lattice and module deformation parameter disagree")
    mv = min(valuation(c, p) for c in zeta.terms.values())
    unit = zeta * (Fraction(p) ** (-mv))
    need = max(minimal_degree(M, p), max(sum(a) for a in zeta.terms))
    D = need if D is None else max(D, need)
    G = gauge_bound(D, p)
    op = embed(unit, D)
    threshold = min(M, G)
    betas = [b for b in product(range(B + 1), repeat=module.m) if sum(b) <= B]
    betas.sort(key=lambda b: (sum(b), b))
    pn = Fraction(p) ** n
    for beta in betas:
        w = VermaVector(module, {beta: pn ** sum(beta)})
        img = module.act(op, w)
        v = _lattice_valuation(img, p, n)
        if v < threshold:
            coords = {b: c / pn ** sum(b) for b, c in img.terms.items()}
            return WitnessReport(True, beta, v, D, M, B, G, coords)
    return WitnessReport(False, None, None, D, M, B, G)


def _lattice_valuation(w: VermaVector, p: int, n: int):
    best = INF
    for b, c in w.terms.items():
        v = valuation(c, p) - n * sum(b)
        if v < best:
            best = v
    return best


def torus_theta(module: VermaModule, group: UniformGroupData, i: int, M: int) -> int:
    """``theta(g_i) mod p^M`` on ``v_lambda`` for a Cartan generator ``x_i = p^{n+1} h``."""
    lie = module.lie
    vec = group.generators[i]
    support = [k for k, c in enumerate(vec) if c]
    if len(support) != 1 or lie.kind(support[0]) != "h":
        raise ValueError("generator is not a multiple of a coroot")
    k = support[0]
    return padic_exp(vec[k] * module.lam.on_coroot(k - lie.m), group.p, M)
