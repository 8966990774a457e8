"""Verma modules and their torus action.

``VermaModule(lie, lam)`` is the induced module ``U(g) (x)_{U(b+)} K_lam`` with
free basis ``f^beta v`` (``beta`` indexes the positive roots in PBW order).  The
affinoid module is modelled by this dense subspace together with the lattice
spanned by ``(p^n f)^beta v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .chevalley import ChevalleyAlgebra
from .padic import INF, Scalar, valuation
from .pbw import PBWElement, _axpy, _clean, enveloping
from .reports import Check
from .rootdata import RootDatum, adjugate_weight_combination


class NotCentral(ValueError):
    pass


@dataclass(frozen=True)
class WeightCharacter:
    """``lambda`` recorded by its values ``lambda(p^n h_i)`` on the scaled coroots."""

    values: tuple
    n: int = 0
    p: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))
        if self.n < 0:
            raise ValueError("n must be >= 0")
        if self.n > 0 and self.p is None:
            raise ValueError("a prime is needed when n > 0")
        if self.p is not None:
            for v in self.values:
                if valuation(v, self.p) < 0:
                    raise ValueError(f"lambda(p^n h) = {v} is not integral at p={self.p}")

    @classmethod
    def from_coroot_values(cls, values: Sequence[Scalar], n: int = 0, p: int | None = None):
        """Build from ``lambda(h_i)``."""
        scale = Fraction(p) ** n if n else 1
        return cls(tuple(Fraction(v) * scale for v in values), n, p)

    @property
    def rank(self) -> int:
        return len(self.values)

    def on_coroot(self, i: int) -> Fraction:
        """``lambda(h_i)``."""
        if self.n == 0:
            return self.values[i]
        return self.values[i] / Fraction(self.p) ** self.n

    @property
    def weight(self) -> tuple:
        """Fundamental-weight coordinates ``(lambda(h_1), ..., lambda(h_l))``."""
        return tuple(self.on_coroot(i) for i in range(self.rank))


def weight_of(datum: RootDatum, beta: Sequence[int], lam: WeightCharacter | Sequence) -> tuple:
    """``lambda - sum_j beta_j alpha_j`` in fundamental-weight coordinates."""
    w = lam.weight if isinstance(lam, WeightCharacter) else tuple(Fraction(x) for x in lam)
    out = list(w)
    for b, root in zip(beta, datum.positive_roots):
        if b:
            for j in range(datum.rank):
                out[j] -= b * datum.pairing(root, j)
    return tuple(out)


@dataclass(eq=False)
class VermaVector:
    module: "VermaModule"
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(b): _clean(c) for b, c in self.terms.items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        _axpy(out, other.terms, 1)
        return VermaVector(self.module, out)

    def __neg__(self):
        return VermaVector(self.module, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return VermaVector(self.module, {b: c * x for b, x in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VermaVector) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, beta) -> Scalar:
        return self.terms.get(tuple(beta), 0)

    def lattice_valuation(self):
        """``min v_p`` of the coordinates in the basis ``(p^n f)^beta v``."""
        lam = self.module.lam
        best = INF
        for b, c in self.terms.items():
            v = valuation(c, lam.p) - lam.n * sum(b)
            if v < best:
                best = v
        return best

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*f^{list(b)} v" for b, c in sorted(self.terms.items()))


class VermaModule:
    def __init__(self, lie: ChevalleyAlgebra, lam: WeightCharacter):
        if lam.rank != lie.rank:
            raise ValueError("weight rank does not match the Lie algebra")
        self.lie = lie
        self.lam = lam
        self.U = enveloping(lie)
        self.m = lie.m
        self.rank = lie.rank
        self._hvals = [lam.on_coroot(i) for i in range(lie.rank)]
        self._gen_cache: dict = {}
        self._mono_cache: dict = {}

    # vectors
    def vector(self, terms: dict) -> VermaVector:
        return VermaVector(self, terms)

    def highest_weight_vector(self) -> VermaVector:
        return VermaVector(self, {(0,) * self.m: 1})

    def basis_vector(self, beta: Sequence[int]) -> VermaVector:
        return VermaVector(self, {tuple(beta): 1})

    def _pbw_mono(self, beta) -> tuple:
        return tuple(beta) + (0,) * (self.lie.dim - self.m)

    def _evaluate(self, poly: dict) -> dict:
        """Apply standard monomials ``f^b h^c e^d`` to ``v``."""
        m, l = self.m, self.rank
        out: dict = {}
        for t, c in poly.items():
            if any(t[m + l:]):
                continue
            s = c
            for i in range(l):
                if t[m + i]:
                    s *= self._hvals[i] ** t[m + i]
            if s:
                key = t[:m]
                v = out.get(key, 0) + s
                if v:
                    out[key] = v
                else:
                    out.pop(key)
        return out

    def act_generator(self, k: int, beta: tuple) -> dict:
        """``x_k . f^beta v`` as a dict ``beta' -> coeff``."""
        key = (k, beta)
        hit = self._gen_cache.get(key)
        if hit is None:
            hit = self._evaluate(self.U.left_mul(k, self._pbw_mono(beta)))
            self._gen_cache[key] = hit
        return hit

    def act_monomial(self, mono: tuple, beta: tuple) -> dict:
        key = (mono, beta)
        hit = self._mono_cache.get(key)
        if hit is None:
            vec = {beta: 1}
            for k in reversed(range(self.lie.dim)):
                for _ in range(mono[k]):
                    new: dict = {}
                    for b, c in vec.items():
                        _axpy(new, self.act_generator(k, b), c)
                    vec = new
                    if not vec:
                        break
            hit = vec
            self._mono_cache[key] = hit
        return hit

    def act(self, u: PBWElement, w: VermaVector) -> VermaVector:
        if u.algebra.lie is not self.lie or w.module is not self:
            raise ValueError("incompatible Lie algebra or module")
        out: dict = {}
        for mono, c in u.terms.items():
            for beta, d in w.terms.items():
                _axpy(out, self.act_monomial(mono, beta), c * d)
        return VermaVector(self, out)

    def weight_space_basis(self, max_height: int) -> list[tuple]:
        return [b for b in product(range(max_height + 1), repeat=self.m) if sum(b) <= max_height]


def act(u: PBWElement, w: VermaVector) -> VermaVector:
    return w.module.act(u, w)


def is_central(z: PBWElement) -> bool:
    lie = z.algebra.lie
    U = z.algebra
    for g in lie.simple_generators():
        x = U.gen(g)
        if x * z - z * x:
            return False
    return True


def central_character_scalar(omega: PBWElement, module: VermaModule) -> Fraction:
    """``chi_lambda(omega)``: the scalar by which a central ``omega`` acts on ``v``."""
    if not is_central(omega):
        raise NotCentral("element does not commute with the Chevalley generators")
    img = module.act(omega, module.highest_weight_vector())
    zero = (0,) * module.m
    if set(img.terms) - {zero}:
        raise NotCentral("image of the highest weight vector is not a multiple of it")
    return Fraction(img.coefficient(zero))


def e_mu_exponents(datum: RootDatum, mu: Sequence[int]) -> tuple:
    """``beta`` of ``e_mu = prod_j f_j^{sum_i mu_i C*_ij} v`` (simple roots come first)."""
    powers = adjugate_weight_combination(datum, mu)
    return tuple(powers) + (0,) * (datum.m - datum.rank)


def e_mu_vector(module: VermaModule, mu: Sequence[int]) -> VermaVector:
    return module.basis_vector(e_mu_exponents(module.lie.datum, mu))


def torus_operator(module: VermaModule, j: int) -> PBWElement:
    """``x_j = lambda(p^n h_j) - p^n h_j``."""
    lam = module.lam
    U = module.U
    pn = Fraction(lam.p) ** lam.n if lam.n else 1
    return U.scalar(lam.values[j]) - U.gen(module.lie.h(j)) * pn


def torus_eigenvalue_check(module: VermaModule, mu: Sequence[int]) -> Check:
    """``x_j . e_mu = d p^n mu_j e_mu`` for every ``j``, evaluated by the action."""
    lam = module.lam
    datum = module.lie.datum
    pn = Fraction(lam.p) ** lam.n if lam.n else 1
    e = e_mu_vector(module, mu)
    beta = e_mu_exponents(datum, mu)
    observed, expected, ok = [], [], True
    for j in range(module.rank):
        img = module.act(torus_operator(module, j), e)
        scalar = Fraction(img.coefficient(beta))
        is_eigen = img == e * scalar
        want = datum.det * pn * mu[j]
        observed.append(scalar)
        expected.append(Fraction(want))
        ok = ok and is_eigen and scalar == want
    return Check(
        "torus-eigenvalue",
        {"type": datum.label, "mu": list(mu), "n": lam.n, "p": lam.p, "lambda": list(lam.values)},
        ok,
        {"e_mu_exponents": list(beta), "eigenvalues": observed, "expected": expected},
    )


def joint_spectrum(module: VermaModule, mus: Sequence[Sequence[int]]) -> dict:
    """Map ``mu -> (eigenvalue of x_1, ..., x_l)`` on ``e_mu``."""
    out = {}
    for mu in mus:
        e = e_mu_vector(module, mu)
        beta = e_mu_exponents(module.lie.datum, mu)
        out[tuple(mu)] = tuple(Fraction(module.act(torus_operator(module, j), e).coefficient(beta))
                               for j in range(module.rank))
    return out


# -- grid vanishing ------------------------------------------------------------------


@dataclass
class GridResult:
    vanishes: bool
    is_zero: bool
    hypothesis_met: bool
    certificate: dict | None = None
    witness: tuple | None = None

    def to_json(self) -> dict:
        from .reports import jsonable

        return jsonable({"vanishes": self.vanishes, "is_zero": self.is_zero,
                         "hypothesis_met": self.hypothesis_met, "certificate": self.certificate,
                         "witness": self.witness})


def _poly_clean(f: dict) -> dict:
    return {tuple(e): Fraction(c) for e, c in f.items() if c}


def poly_eval(f: dict, point: Sequence) -> Fraction:
    total = Fraction(0)
    for e, c in f.items():
        t = Fraction(c)
        for x, k in zip(point, e):
            if k:
                t *= Fraction(x) ** k
        total += t
    return total


def poly_degree_in(f: dict, j: int) -> int:
    return max((e[j] for e in f), default=-1)


def _substitute_last(f: dict, y) -> dict:
    out: dict = {}
    y = Fraction(y)
    for e, c in f.items():
        key = e[:-1]
        out[key] = out.get(key, 0) + c * y ** e[-1]
    return _poly_clean(out)


def _divide_last(f: dict, y) -> tuple[dict, dict]:
    """Divide by ``x_last - y``; returns (quotient, remainder) with remainder free of x_last."""
    y = Fraction(y)
    deg = poly_degree_in(f, len(next(iter(f))) - 1) if f else -1
    if deg < 0:
        return {}, {}
    coeffs = [dict() for _ in range(deg + 1)]
    for e, c in f.items():
        coeffs[e[-1]][e[:-1]] = c
    q = [dict() for _ in range(deg)]
    carry: dict = {}
    for k in range(deg, 0, -1):
        cur = dict(coeffs[k])
        for e, c in carry.items():
            cur[e] = cur.get(e, 0) + c
        q[k - 1] = cur
        carry = {e: c * y for e, c in cur.items()}
    rem = dict(coeffs[0])
    for e, c in carry.items():
        rem[e] = rem.get(e, 0) + c
    quotient = {e + (k,): c for k, part in enumerate(q) for e, c in part.items()}
    return _poly_clean(quotient), _poly_clean(rem)


def _certify(f: dict, grids: Sequence[Sequence]) -> dict:
    """Divisibility chain proving that ``f`` (vanishing on the grid) is zero."""
    l = len(grids)
    if l == 0:
        c = f.get((), 0)
        assert c == 0, "constant does not vanish"
        return {"variables": 0, "zero": True}
    deg = poly_degree_in(f, l - 1)
    subs = []
    chain = []
    q = f
    for y in grids[-1]:
        g = _substitute_last(f, y)
        subs.append(_certify(g, grids[:-1]))
        q, rem = _divide_last(q, y) if q else ({}, {})
        assert not rem, "remainder does not vanish"
        chain.append({"divide_by": f"x{l} - {y}", "quotient_degree": poly_degree_in(q, l - 1) if q else None})
    assert deg - len(grids[-1]) < 0 and not q, "quotient survived more roots than its degree"
    assert not f, "polynomial vanishing on a large enough grid must be zero"
    return {"variables": l, "degree_bound": deg, "roots": list(grids[-1]),
            "chain": chain, "restrictions": subs}


def grid_vanishing_check(f: dict, grids: Sequence[Sequence]) -> GridResult:
    """Does ``f`` vanish on ``A_1 x ... x A_l``?  If so and ``|A_j| > deg_j f``, certify ``f = 0``.

    ``f`` maps exponent tuples to rational coefficients.
    """
    f = _poly_clean(f)
    l = len(grids)
    for e in f:
        if len(e) != l:
            raise ValueError("exponent length does not match the number of grids")
    for point in product(*grids):
        val = poly_eval(f, point)
        if val:
            return GridResult(False, not f, _hypothesis(f, grids), None, (tuple(point), val))
    hyp = _hypothesis(f, grids)
    cert = _certify(f, grids) if hyp else None
    return GridResult(True, not f, hyp, cert, None)


def _hypothesis(f: dict, grids) -> bool:
    return all(len(set(A)) > poly_degree_in(f, j) for j, A in enumerate(grids))
