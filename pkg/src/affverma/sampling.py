"""Seeded random generators for property sweeps."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .pbw import EnvelopingAlgebra, PBWElement


def random_monomial(U: EnvelopingAlgebra, rng: random.Random, max_degree: int) -> tuple:
    d = U.lie.dim
    deg = rng.randint(0, max_degree)
    exps = [0] * d
    for _ in range(deg):
        exps[rng.randrange(d)] += 1
    return tuple(exps)


def random_pbw(U: EnvelopingAlgebra, rng: random.Random, max_degree: int = 3, height: int = 10**6,
               terms: int = 3, integral: bool = True) -> PBWElement:
    out = {}
    for _ in range(rng.randint(1, terms)):
        c = rng.randint(-height, height)
        if not integral:
            c = Fraction(c, rng.randint(1, 9))
        out[random_monomial(U, rng, max_degree)] = c
    return U.element(out)


def random_nonzero_pbw(U: EnvelopingAlgebra, rng: random.Random, **kw) -> PBWElement:
    while True:
        a = random_pbw(U, rng, **kw)
        if a:
            return a


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 4, terms: int = 6,
                      height: int = 20, zero_probability: float = 0.1) -> dict:
    if rng.random() < zero_probability:
        return {}
    out = {}
    for _ in range(rng.randint(1, terms)):
        e = tuple(rng.randint(0, max_degree) for _ in range(nvars))
        out[e] = rng.randint(-height, height)
    return {e: c for e, c in out.items() if c}


def vanishing_product(rng: random.Random, grids) -> dict:
    """A nonzero polynomial vanishing on the grid except for too-high degree: ``prod_j prod_{y in A_j} (x_j - y)``
    restricted to one variable, so per-variable degree equals ``|A_j|``."""
    j = rng.randrange(len(grids))
    poly = {tuple(0 for _ in grids): Fraction(1)}
    for y in grids[j]:
        new: dict = {}
        for e, c in poly.items():
            up = tuple(x + (k == j) for k, x in enumerate(e))
            new[up] = new.get(up, 0) + c
            new[e] = new.get(e, 0) - c * y
        poly = {e: c for e, c in new.items() if c}
    return poly


def box(rank: int, side: int) -> list[tuple]:
    """``{0..side-1}^rank``."""
    return list(product(range(side), repeat=rank))
