"""Named verification experiments; each returns a list of :class:`Check`."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable

from . import iwasawa as iw
from . import smash as sm
from .chevalley import build_lie_algebra, conjugate, matrix_exp_nilpotent, matrix_inverse
from .padic import is_prime, reduce
from .pbw import (ad_nilpotency_bound, casimir, congruent_to_span, divided_ad_power, enveloping,
                  exp_adjoint, exp_invariance_defect, gauge, truncated_center)
from .reports import Check
from .rootdata import CLASSICAL_COUNT, SUPPORTED, build_root_datum, longest_element, weyl_group
from .sampling import box, random_nonzero_pbw, random_pbw, random_polynomial
from .verma import (VermaModule, WeightCharacter, central_character_scalar, e_mu_vector,
                    grid_vanishing_check, joint_spectrum, torus_eigenvalue_check, weight_of)


class ConfigInvalid(ValueError):
    pass


def parse_type(label: str) -> tuple[str, int]:
    label = str(label).strip()
    if len(label) < 2 or not label[1:].isdigit():
        raise ConfigInvalid(f"bad type label {label!r}")
    t = (label[0].upper(), int(label[1:]))
    if t not in SUPPORTED:
        raise ConfigInvalid(f"type {label} is not supported")
    return t


# basic invariant degrees, for the Harish-Chandra count of central elements
INVARIANT_DEGREES = {("A", 1): [2], ("A", 2): [2, 3], ("A", 3): [2, 3, 4], ("A", 4): [2, 3, 4, 5],
                     ("B", 2): [2, 4], ("C", 3): [2, 4, 6], ("D", 4): [2, 4, 4, 6], ("G", 2): [2, 6]}


def harish_chandra_count(t: tuple, D: int) -> int:
    degs = INVARIANT_DEGREES[t]
    return sum(1 for e in product(*[range(D // d + 1) for d in degs])
               if sum(a * d for a, d in zip(e, degs)) <= D)


@dataclass
class ExperimentConfig:
    experiment: str
    p: int = 5
    types: list = field(default_factory=list)
    n: list = field(default_factory=list)
    D: list = field(default_factory=list)
    N: int = 6
    M: int = 6
    A: int | None = None
    B: int | None = None
    lambdas: list = field(default_factory=list)
    thetas: list = field(default_factory=list)
    mus: list = field(default_factory=list)
    mu_box: int = 3
    samples: int | None = None
    group: dict | None = None
    seed: int = 0
    out: str | None = None

    KEYS = ("experiment", "p", "types", "type", "n", "D", "N", "M", "A", "B", "lambdas", "thetas",
            "mus", "mu_box", "samples", "group", "seed", "out")

    @classmethod
    def from_dict(cls, data: dict, experiment: str | None = None) -> "ExperimentConfig":
        if not isinstance(data, dict) or not data:
            raise ConfigInvalid("empty config")
        unknown = set(data) - set(cls.KEYS)
        if unknown:
            raise ConfigInvalid(f"unknown keys {sorted(unknown)}")
        data = dict(data)
        exp = experiment or data.pop("experiment", None)
        data.pop("experiment", None)
        if not exp:
            raise ConfigInvalid("missing experiment id")
        if "type" in data:
            data["types"] = [data.pop("type")]
        for key in ("n", "D"):
            if key in data and not isinstance(data[key], list):
                data[key] = [data[key]]
        cfg = cls(experiment=exp, **data)
        cfg.validate()
        return cfg

    def validate(self):
        if self.experiment not in EXPERIMENTS:
            raise ConfigInvalid(f"unknown experiment {self.experiment!r}")
        if not isinstance(self.p, int) or self.p == 2 or not is_prime(self.p):
            raise ConfigInvalid("p must be an odd prime")
        for t in self.types:
            parse_type(t)
        for name in ("N", "M", "mu_box"):
            if getattr(self, name) is None or getattr(self, name) < 0 or (name != "mu_box" and getattr(self, name) == 0):
                raise ConfigInvalid(f"{name} must be positive")
        for name in ("A", "B", "samples"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ConfigInvalid(f"{name} must be non-negative")
        if any(d < 0 for d in self.D) or any(k < 0 for k in self.n):
            raise ConfigInvalid("degree budgets and n must be non-negative")

    def type_list(self, default):
        return [parse_type(t) for t in self.types] if self.types else list(default)

    def to_json(self) -> dict:
        from .reports import jsonable

        return jsonable({k: getattr(self, k) for k in self.KEYS if k != "type" and hasattr(self, k)
                         and k not in ("out",)})


def _label(t) -> str:
    return f"{t[0]}{t[1]}"


# -- root data ----------------------------------------------------------------------


def run_rootdata(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    for t in cfg.type_list(sorted(SUPPORTED)):
        R = build_root_datum(*t)
        l = R.rank
        prod_ok = all(sum(R.cartan[i][k] * R.adjugate[k][j] for k in range(l)) == (R.det if i == j else 0)
                      for i in range(l) for j in range(l))
        nonneg = all(c >= 0 for r in R.adjugate for c in r)
        out.append(Check("root-datum-adjugate", {"type": _label(t)}, prod_ok and nonneg,
                         {"det": R.det, "adjugate": [list(r) for r in R.adjugate]}))
        w0 = longest_element(R)
        image = {w0.apply(r) for r in R.positive_roots}
        neg = {tuple(-c for c in r) for r in R.positive_roots}
        out.append(Check("root-datum-longest-element", {"type": _label(t)}, image == neg,
                         {"w0": list(w0.word), "length": w0.length}))
        out.append(Check("root-datum-count", {"type": _label(t)}, R.m == CLASSICAL_COUNT[t[0]](l),
                         {"positive_roots": R.m, "weyl_order": len(weyl_group(R))}))
    return out


def run_lie(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    default = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)]
    out = []
    for t in cfg.type_list(default):
        L = build_lie_algebra(t)
        jac = L.jacobi_violations()
        out.append(Check("chevalley-jacobi", {"type": _label(t)}, not jac and L.is_antisymmetric(),
                         {"dim": L.dim, "violations": len(jac)}))
        mm = L.matrix_bracket_mismatches()
        out.append(Check("chevalley-matrix-model", {"type": _label(t)}, not mm, {"mismatches": len(mm)}))
    return out


# -- PBW and adjoint ----------------------------------------------------------------


def _matrix_conjugation_oracle(L, alpha_idx: int, r, x_idx: int) -> list:
    X = L.matrix_of([Fraction(r) if k == alpha_idx else 0 for k in range(L.dim)])
    u = matrix_exp_nilpotent(X)
    Y = conjugate(u, L.matrix_of(L.basis_vector(x_idx)), matrix_inverse(u))
    return L.vector_of(Y)


def run_pbw(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    p = cfg.p
    k = cfg.samples
    for t in cfg.type_list([("A", 2)]):
        L = build_lie_algebra(t)
        U = enveloping(L)
        params = {"type": _label(t), "p": p}

        n_assoc = k or 200
        bad = 0
        for _ in range(n_assoc):
            a, b, c = (random_pbw(U, rng) for _ in range(3))
            bad += (a * b) * c != a * (b * c)
        out.append(Check("pbw-associativity", {**params, "samples": n_assoc}, bad == 0, {"failures": bad}))

        n_pairs = k or 100
        bad = 0
        for _ in range(n_pairs):
            m1 = next(iter(random_nonzero_pbw(U, rng, terms=1).terms))
            m2 = next(iter(random_nonzero_pbw(U, rng, terms=1).terms))
            word = U.word_of(m1) + U.word_of(m2)
            direct = U.mono_mul(m1, m2)
            bad += not (direct == U.straighten_word(word, "leftmost") == U.straighten_word(word, "rightmost"))
        out.append(Check("pbw-confluence", {**params, "samples": n_pairs}, bad == 0, {"failures": bad}))

        bad = 0
        for _ in range(n_pairs):
            a, b = random_nonzero_pbw(U, rng), random_nonzero_pbw(U, rng)
            c = a * b - b * a
            bad += bool(c) and c.degree > a.degree + b.degree - 1
            bad += (a * b).degree > a.degree + b.degree
        out.append(Check("pbw-gr-commutativity", {**params, "samples": n_pairs}, bad == 0, {"failures": bad}))

        bad = 0
        for nn in (0, 1):
            for _ in range(n_pairs // 2):
                a, b = random_pbw(U, rng), random_pbw(U, rng)
                a = a * Fraction(p) ** max(0, -gauge(a, nn, p)) if a else a
                b = b * Fraction(p) ** max(0, -gauge(b, nn, p)) if b else b
                bad += gauge(a * b, nn, p) < gauge(a, nn, p) + gauge(b, nn, p)
        out.append(Check("pbw-gauge-multiplicative", params, bad == 0, {"failures": bad}))

        roots = [tuple(int(i == j) for j in range(L.rank)) for i in range(L.rank)]
        roots += [tuple(-c for c in r) for r in roots]
        bad = 0
        for _ in range(n_pairs):
            a, b = random_pbw(U, rng, height=100), random_pbw(U, rng, height=100)
            alpha = rng.choice(roots)
            r = rng.choice([1, 2, p, Fraction(1, 3), -2])
            bad += exp_adjoint(L, alpha, r, a * b) != exp_adjoint(L, alpha, r, a) * exp_adjoint(L, alpha, r, b)
        out.append(Check("adjoint-multiplicative", {**params, "samples": n_pairs}, bad == 0, {"failures": bad}))

        bad = 0
        for alpha in roots:
            for r, s in product((1, 2, p), repeat=2):
                a = random_pbw(U, rng, height=100)
                bad += exp_adjoint(L, alpha, r, exp_adjoint(L, alpha, s, a)) != exp_adjoint(L, alpha, r + s, a)
        out.append(Check("adjoint-one-parameter", params, bad == 0, {"failures": bad}))

        bad = 0
        for alpha in range(L.dim):
            if L.kind(alpha) == "h":
                continue
            for x in range(L.dim):
                for r in (1, 2, p):
                    got = exp_adjoint(L, L.roots[alpha], r, U.gen(x))
                    want = U.from_lie_vector(_matrix_conjugation_oracle(L, alpha, r, x))
                    bad += got != want
        out.append(Check("adjoint-matrix-conjugation", params, bad == 0, {"failures": bad}))

        bad = 0
        for _ in range(n_pairs):
            a = random_pbw(U, rng, height=1000)
            alpha = rng.choice(roots)
            r = rng.randint(-5, 5)
            for m in range(0, 6):
                d = divided_ad_power(L, alpha, r, m, a)
                bad += any(Fraction(c).denominator != 1 for c in d.terms.values())
        out.append(Check("divided-power-integrality", params, bad == 0, {"failures": bad}))

        # literal "m = deg(a) + 1" vanishing, then the corrected bound
        bad, example = 0, None
        ok_corrected = 0
        for _ in range(n_pairs):
            a = random_nonzero_pbw(U, rng, height=100)
            alpha = rng.choice(roots)
            d = divided_ad_power(L, alpha, 1, a.degree + 1, a)
            if d:
                bad += 1
                example = example or {"a": repr(a), "alpha": list(alpha), "image": repr(d)}
            ok_corrected += not divided_ad_power(L, alpha, 1, ad_nilpotency_bound(L, a), a)
        out.append(Check("divided-power-vanishing-deg-plus-one", params, bad == 0,
                         {"nonvanishing": bad, "example": example}))
        out.append(Check("divided-power-vanishing-nilpotency-bound", params, ok_corrected == n_pairs,
                         {"vanishing": ok_corrected, "samples": n_pairs}))
    return out


# -- centre -------------------------------------------------------------------------


def run_center(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    p, N = cfg.p, cfg.N
    for t in cfg.type_list([("A", 1)]):
        L = build_lie_algebra(t)
        U = enveloping(L)
        Om = casimir(L)
        Ds = cfg.D or ([2, 4, 6] if t == ("A", 1) else [3, 4])
        prev = None
        for n in cfg.n or [0]:
            for D in Ds:
                res = truncated_center(L, D, N, n=n, p=p)
                hc = harish_chandra_count(t, D)
                params = {"type": _label(t), "D": D, "N": N, "n": n, "p": p}
                out.append(Check("center-dimension", params, res.dimension == hc,
                                 {"dimension": res.dimension, "harish_chandra": hc,
                                  "spurious": res.spurious, "torsion": res.torsion,
                                  "basis": [repr(z) for z in res.basis]}))
                powers = [U.one()]
                while 2 * len(powers) <= D:
                    powers.append(powers[-1] * Om)
                pn = Fraction(p) ** n
                if t == ("A", 1):
                    # scale to the lattice: (p^{2n})^k Omega^k is primitive in U(g)_n
                    lat = [z * pn ** (2 * i) for i, z in enumerate(powers)]
                    ok = all(congruent_to_span(z, lat, N, n, p) for z in res.basis)
                    out.append(Check("center-casimir-span", params, ok,
                                     {"generators": [repr(z) for z in powers]}))
                else:
                    ok = congruent_to_span(Om * pn ** 2, [z for z in res.basis], N, n, p) if D >= 2 else True
                    out.append(Check("center-contains-casimir", params, ok, {"casimir": repr(Om)}))
                defect = min((exp_invariance_defect(L, z, n, p, range(1, p)) for z in res.basis), default=None)
                out.append(Check("center-exp-invariance", params,
                                 all(exp_invariance_defect(L, z, n, p, range(1, p)) >= N for z in res.basis),
                                 {"min_gauge_of_defect": defect}))
                if prev is not None and prev[0] == n and prev[1] < D:
                    low = [z for z in res.basis if z.degree <= prev[1]]
                    ok = len(low) == len(prev[2]) and all(
                        congruent_to_span(z, prev[2], N, n, p) for z in low) and all(
                        congruent_to_span(z, low, N, n, p) for z in prev[2])
                    out.append(Check("center-stability", {**params, "previous_D": prev[1]}, ok,
                                     {"low_degree_part": len(low), "previous_dimension": len(prev[2])}))
                prev = (n, D, res.basis)
    return out


# -- Verma --------------------------------------------------------------------------


def run_verma(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    A1 = build_lie_algebra(("A", 1))
    lams = [Fraction(x) for x in cfg.lambdas] or [Fraction(0), Fraction(1), Fraction(-2), Fraction(7, 3)]
    for l0 in lams:
        M = VermaModule(A1, WeightCharacter((l0,)))
        e = M.U.gen(A1.e(0))
        bad = [k for k in range(1, 21)
               if M.act(e, M.basis_vector((k,))) != M.basis_vector((k - 1,)) * (k * (l0 - k + 1))]
        out.append(Check("verma-sl2-action", {"lambda": l0, "k_max": 20}, not bad, {"failing_k": bad}))
        Om = casimir(A1)
        chi = central_character_scalar(Om, M)
        ann = [k for k in range(11) if M.act(Om - M.U.scalar(chi), M.basis_vector((k,)))]
        out.append(Check("verma-casimir-annihilation", {"type": "A1", "lambda": l0, "max_height": 10},
                         not ann and chi == l0 * l0 + 2 * l0, {"chi": chi, "failing": ann}))
    A2 = build_lie_algebra(("A", 2))
    lam2 = [(Fraction(1, 3), Fraction(-2)), (Fraction(0), Fraction(0)), (Fraction(2), Fraction(5))]
    for lam in lam2:
        M = VermaModule(A2, WeightCharacter(lam))
        bad = 0
        for beta in M.weight_space_basis(6):
            w = weight_of(A2.datum, beta, M.lam)
            for i in range(2):
                bad += M.act(M.U.gen(A2.h(i)), M.basis_vector(beta)) != M.basis_vector(beta) * w[i]
        out.append(Check("verma-weight", {"type": "A2", "lambda": list(lam), "max_height": 6}, bad == 0,
                         {"failures": bad}))
        Om = casimir(A2)
        chi = central_character_scalar(Om, M)
        a, b = lam
        ann = [list(beta) for beta in M.weight_space_basis(6)
               if M.act(Om - M.U.scalar(chi), M.basis_vector(beta))]
        out.append(Check("verma-casimir-annihilation", {"type": "A2", "lambda": list(lam), "max_height": 6},
                         not ann and chi == a * a + a * b + b * b + 3 * a + 3 * b, {"chi": chi, "failing": ann}))
    return out


def run_torus(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    p = cfg.p
    ns = cfg.n or [0, 1]
    for t in cfg.type_list([("A", 1), ("A", 2)]):
        L = build_lie_algebra(t)
        mus = [tuple(m) for m in cfg.mus] or box(L.rank, cfg.mu_box + 1)
        for n in ns:
            vals = tuple(cfg.lambdas[: L.rank]) if cfg.lambdas else tuple(3 + 4 * i for i in range(L.rank))
            M = VermaModule(L, WeightCharacter(vals, n, p))
            for mu in mus:
                out.append(torus_eigenvalue_check(M, mu))
            spec = joint_spectrum(M, mus)
            distinct = len(set(spec.values())) == len(spec)
            out.append(Check("torus-joint-spectrum-distinct",
                             {"type": _label(t), "n": n, "p": p, "box": len(mus)}, distinct,
                             {"spectrum": {str(list(k)): list(v) for k, v in spec.items()}}))
    return out


def run_grid(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    samples = cfg.samples or 100
    bad, vanishing = 0, 0
    for i in range(samples):
        l = rng.randint(1, 3)
        grids = [sorted(rng.sample(range(-20, 21), 6)) for _ in range(l)]
        kind = i % 3
        if kind == 0:
            f = {}
        elif kind == 1:
            f = random_polynomial(rng, l, zero_probability=0)
        else:
            # vanishes on a slab: (x_j - y_1)...(x_j - y_k) g, k <= 4
            j = rng.randrange(l)
            k = rng.randint(1, 4)
            f = {tuple([0] * l): 1}
            for y in grids[j][:k]:
                f = _poly_mul(f, {tuple(int(q == j) for q in range(l)): 1, tuple([0] * l): -y})
            g = random_polynomial(rng, l, max_degree=4 - k, zero_probability=0) or {tuple([0] * l): 1}
            f = _poly_mul(f, {e: c for e, c in g.items() if e[j] <= 4 - k})
        res = grid_vanishing_check(f, grids)
        vanishing += res.vanishes
        bad += res.vanishes != res.is_zero or (res.vanishes and res.certificate is None)
    out = [Check("grid-lemma", {"samples": samples, "side": 6, "max_degree": 4}, bad == 0,
                 {"failures": bad, "vanishing": vanishing})]
    res = grid_vanishing_check({(2, 0): 1, (1, 0): -1}, [[0, 1], [0]])
    out.append(Check("grid-lemma-threshold", {"f": "x1(x1-1)", "grids": "{0,1}x{0}"},
                     res.vanishes and not res.is_zero and not res.hypothesis_met and res.certificate is None,
                     {"vanishes": res.vanishes, "is_zero": res.is_zero, "hypothesis_met": res.hypothesis_met}))
    return out


def _poly_mul(f: dict, g: dict) -> dict:
    out: dict = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


# -- Iwasawa ------------------------------------------------------------------------


def run_injectivity(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    p = cfg.p
    cases = []
    if cfg.group:
        g = iw.group_from_json(cfg.group)
        cases.append(("custom", g, cfg.A or 1, cfg.B or 1, cfg.D[0] if cfg.D else 8))
    else:
        cases.append(("abelian", iw.abelian_zp(p), cfg.A if cfg.A is not None else 2,
                      cfg.B if cfg.B is not None else 2, cfg.D[0] if cfg.D else 12))
        cases.append(("heisenberg", iw.heisenberg(p), cfg.A if cfg.A is not None else 1,
                      cfg.B if cfg.B is not None else 1, cfg.D[1] if len(cfg.D) > 1 else 8))
    out = []
    for name, g, A, B, D in cases:
        cert = iw.certify_injectivity(g, A, B, D)
        out.append(Check("injectivity-rank", {"group": name, "p": g.p, "A": A, "B": B, "D": D},
                         cert.full_rank and cert.certified, cert.to_json()))
    return out


def run_faithfulness(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    p, M, B = cfg.p, cfg.M, cfg.B if cfg.B is not None else 6
    A1 = build_lie_algebra(("A", 1))
    out = []
    for n in cfg.n or [0]:
        group = iw.congruence_kernel(A1, p, n)
        lam = tuple(cfg.lambdas[:1]) or (1,)
        module = VermaModule(A1, WeightCharacter(lam, n, p))
        samples = cfg.samples or 50
        alphas = iw.exponents(group.d, cfg.A if cfg.A is not None else 2)
        found, beta_hist = 0, {}
        for _ in range(samples):
            zeta = iw.IwasawaElement(group, {})
            while not zeta:
                zeta = iw.IwasawaElement(group, {a: rng.randint(-50, 50) * p ** rng.randint(0, 2)
                                                 for a in rng.sample(alphas, rng.randint(1, 4))})
            rep = iw.faithfulness_witness(zeta, module, M=M, B=B)
            found += rep.found
            key = str(list(rep.beta)) if rep.found else "inconclusive"
            beta_hist[key] = beta_hist.get(key, 0) + 1
        out.append(Check("faithfulness-witness", {"type": "A1", "n": n, "p": p, "M": M, "B": B,
                                                  "samples": samples, "lambda": list(lam)},
                         found == samples, {"witnesses": found, "by_beta": beta_hist}))
        # zeta tuned to kill v_lambda
        th = iw.torus_theta(module, group, A1.h(0), M)
        e = [0] * group.d
        e[A1.h(0)] = 1
        zeta = iw.b_monomial(group, e) - iw.IwasawaElement(group, {(0,) * group.d: th - 1})
        rep = iw.faithfulness_witness(zeta, module, M=M, B=B)
        out.append(Check("faithfulness-witness-tuned", {"n": n, "p": p, "M": M}, rep.found and any(rep.beta),
                         rep.to_json()))
    thetas = [Fraction(x) for x in cfg.thetas] or [1 + p * rng.randint(-10**6, 10**6) for _ in range(50)]
    lam = iw.theta_lambda_convert("theta_to_lambda", thetas, p, M)
    back = iw.theta_lambda_convert("lambda_to_theta", lam, p, M)
    ok = all(b == reduce(th, M, p) for b, th in zip(back, thetas))
    out.append(Check("theta-lambda-roundtrip", {"p": p, "M": M, "samples": len(thetas)}, ok,
                     {"first": [str(thetas[0]), lam[0], back[0]] if thetas else []}))
    return out


# -- smash --------------------------------------------------------------------------


def run_smash(cfg: ExperimentConfig, rng: random.Random) -> list[Check]:
    out = []
    cases = [("C2", sm.cyclic(2), sm.QQ), ("C3", sm.cyclic(3), sm.GF(3)), ("S3", sm.symmetric3(), sm.GF(2))]
    for name, G, K in cases:
        M = sm.SmashModule(G, K)
        routes = ["density"] if K.p is None else ["enumerate", "density"]
        for route in routes:
            res = sm.simplicity_certificate(M, route)
            out.append(Check("smash-simplicity", {"group": name, "base": K.label, "route": route},
                             res.simple, res.to_json()))
        for hname, act in (("Fun", sm.fun_on_group(G, K)), ("trivial", sm.trivial_on_group(G, K))):
            r = sm.endomorphism_check(G, K, act)
            out.append(Check("smash-endomorphisms", {"group": name, "base": K.label, "H": hname},
                             r.passed, r.to_json()))
    S3 = sm.symmetric3()
    c3 = [i for i, q in enumerate(S3.names) if q in ("(0, 1, 2)", "(1, 2, 0)", "(2, 0, 1)")]
    for name, G, E in (("C4>C2", sm.cyclic(4), [0, 2]), ("S3>C3", S3, c3)):
        for K in (sm.QQ, sm.GF(5)):
            r = sm.quotient_invariants_check(G, K, E)
            out.append(Check("smash-quotient-invariants", {"groups": name, "base": K.label},
                             r["equal"] and r["subalgebra"], r))
    for name, G in (("C3", sm.cyclic(3)), ("S3", S3), ("D4", sm.dihedral(4))):
        fails = sm.FunAlgebra(G).axiom_failures()
        out.append(Check("smash-hopf-axioms", {"group": name}, not fails, {"failures": fails}))
    for name, G in (("C2", sm.cyclic(2)), ("C3", sm.cyclic(3)), ("S3", S3)):
        K = sm.GF(7)
        n = G.order
        basis = [sm.smash_basis(G, K, g, h) for g in range(n) for h in range(n)]
        bad = sum((x * y) * z != x * (y * z) for x in basis for y in basis for z in basis)
        bad += sum(x * y != sm.smash_multiply_expanded(x, y) for x in basis for y in basis)
        deltas = [sm.delta(G, K, h) for h in range(n)]
        total = deltas[0]
        for d in deltas[1:]:
            total = total + d
        idem = total == sm.smash_one(G, K) and all(
            (deltas[a] * deltas[b]).is_zero() != (a == b) for a in range(n) for b in range(n))
        out.append(Check("smash-associativity", {"group": name, "base": K.label}, bad == 0 and idem,
                         {"failures": bad, "idempotents": idem}))
    return out


EXPERIMENTS: dict[str, Callable] = {
    "rootdata": run_rootdata,
    "lie-check": run_lie,
    "pbw-props": run_pbw,
    "center": run_center,
    "verma": run_verma,
    "torus": run_torus,
    "grid": run_grid,
    "injectivity": run_injectivity,
    "faithfulness": run_faithfulness,
    "smash": run_smash,
}


def run_experiment(cfg: ExperimentConfig) -> list[Check]:
    rng = random.Random(cfg.seed)
    return EXPERIMENTS[cfg.experiment](cfg, rng)
