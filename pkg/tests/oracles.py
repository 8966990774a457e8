"""Independent reference computations used by the tests."""

from __future__ import annotations

from fractions import Fraction

from affverma.chevalley import _mul  # plain matrix product


def matrix_rep(lie, element):
    """Evaluate a PBW element in the defining matrix model, monomial by monomial."""
    N = len(lie.matrices[0])
    ident = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    total = [[Fraction(0)] * N for _ in range(N)]
    for mono, c in element.terms.items():
        M = ident
        for k, e in enumerate(mono):
            for _ in range(e):
                M = _mul(M, lie.matrix_of(lie.basis_vector(k)))
        total = [[a + c * b for a, b in zip(r, s)] for r, s in zip(total, M)]
    return total


# sl2 on K[t]: f = t, h = lam - 2 t d/dt, e = lam d/dt - t d^2/dt^2


def _d(poly):
    return {k - 1: k * c for k, c in poly.items() if k}


def _t(poly):
    return {k + 1: c for k, c in poly.items()}


def _add(*polys, scales=None):
    out = {}
    scales = scales or [1] * len(polys)
    for p, s in zip(polys, scales):
        for k, c in p.items():
            out[k] = out.get(k, 0) + s * c
    return {k: c for k, c in out.items() if c}


def sl2_operator(letter: str, lam):
    if letter == "f":
        return _t
    if letter == "h":
        return lambda p: _add(p, _t(_d(p)), scales=[lam, -2])
    if letter == "e":
        return lambda p: _add(_d(p), _t(_d(_d(p))), scales=[lam, -1])
    raise ValueError(letter)


def sl2_apply(element, poly, lam):
    """Act by a PBW element of U(sl2) (basis order f, h, e) on a polynomial in t."""
    out = {}
    for (a, b, c), coeff in element.terms.items():
        q = dict(poly)
        for letter, k in (("e", c), ("h", b), ("f", a)):
            op = sl2_operator(letter, lam)
            for _ in range(k):
                q = op(q)
        out = _add(out, q, scales=[1, coeff])
    return out


def padic_log_limit(theta: int, p: int, M: int) -> int:
    """``log(theta) mod p^M`` as ``(theta^{p^k} - 1) / p^k`` for large ``k``."""
    k = M + 4
    mod = p ** (M + k)
    return ((pow(theta, p**k, mod) - 1) // p**k) % p**M
