"""Finite-level smash products ``k[F] # Fun(F, k)``.

``Fun(F, k)`` acts on ``k[F]`` through the F-grading: ``delta_a . g = [a = g] g``.
With ``Delta(delta_h) = sum_{ab=h} delta_a (x) delta_b`` the smash product rule
``(a # r)(b # s) = a (r_1 . b) # r_2 s`` becomes

    (g # delta_h)(g' # delta_h') = [g'^{-1} h = h'] gg' # delta_h'.

The smash module is ``k[F]`` with ``(g # delta_h) . g' = [g' = h] gg'``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Sequence

from .linalg import nullspace, rank
from .padic import is_prime


class BaseMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class NotApplicable(TypeError):
    pass


class InvalidGroup(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple
    names: tuple = ()

    def __post_init__(self):
        t = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", t)
        n = len(t)
        if any(len(r) != n or any(not 0 <= x < n for x in r) for r in t):
            raise InvalidGroup("table must be square with entries in range")
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(n)))
        ids = [e for e in range(n) if all(t[e][g] == g and t[g][e] == g for g in range(n))]
        if len(ids) != 1:
            raise InvalidGroup("no two-sided identity")
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidGroup(f"associativity fails at {(a, b, c)}")
        e = ids[0]
        for g in range(n):
            if sum(t[g][h] == e for h in range(n)) != 1:
                raise InvalidGroup(f"element {g} has no unique inverse")

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        t = self.table
        return next(e for e in range(self.order) if all(t[e][g] == g for g in range(self.order)))

    @property
    def inverse(self) -> tuple:
        e = self.identity
        return tuple(next(h for h in range(self.order) if self.table[g][h] == e) for g in range(self.order))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def is_subgroup(self, elems) -> bool:
        s = set(elems)
        return self.identity in s and all(self.mul(a, self.inverse[b]) in s for a in s for b in s)

    def is_normal(self, elems) -> bool:
        s = set(elems)
        inv = self.inverse
        return self.is_subgroup(s) and all(self.mul(self.mul(g, a), inv[g]) in s
                                           for g in range(self.order) for a in s)

    def cosets(self, elems) -> list[frozenset]:
        """Left cosets ``gE``, ordered by their smallest element."""
        if not self.is_subgroup(elems):
            raise InvalidGroup("not a subgroup")
        seen, out = set(), []
        for g in range(self.order):
            if g in seen:
                continue
            c = frozenset(self.mul(g, a) for a in elems)
            seen |= c
            out.append(c)
        return out

    def to_json(self) -> list:
        return [list(r) for r in self.table]


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
                       tuple(f"r^{i}" for i in range(n)))


def _perm_group(perms: list[tuple]) -> FiniteGroup:
    index = {q: i for i, q in enumerate(perms)}
    # (a * b)(x) = a(b(x))
    table = tuple(tuple(index[tuple(a[b[x]] for x in range(len(a)))] for b in perms) for a in perms)
    return FiniteGroup(table, tuple(str(q) for q in perms))


def symmetric3() -> FiniteGroup:
    return _perm_group(sorted(permutations(range(3))))


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon as permutations of its vertices."""
    rots = [tuple((i + k) % n for i in range(n)) for k in range(n)]
    refl = [tuple((k - i) % n for i in range(n)) for k in range(n)]
    return _perm_group(rots + refl)


def group_from_json(data) -> FiniteGroup:
    if isinstance(data, str):
        data = json.loads(data)
    return FiniteGroup(tuple(tuple(r) for r in data))


# -- coefficient fields --------------------------------------------------------------


@dataclass(frozen=True)
class BaseField:
    """``F_p`` for a prime ``p``, or ``Q`` when ``p`` is ``None``."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, x):
        if isinstance(x, int) and self.p is not None:
            return x % self.p
        x = Fraction(x)
        if self.p is None:
            return x
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    @property
    def label(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def elements(self):
        if self.p is None:
            raise BudgetExceeded("cannot enumerate Q")
        return range(self.p)


QQ = BaseField(None)


def GF(p: int) -> BaseField:
    return BaseField(p)


# -- Fun(F, k) as a Hopf algebra -----------------------------------------------------


@dataclass(frozen=True)
class FunAlgebra:
    """``Fun(F, k)`` on the basis ``delta_h``; tensors are dicts over pairs."""

    group: FiniteGroup

    def coproduct(self, h: int) -> dict:
        G = self.group
        return {(a, b): 1 for a in range(G.order) for b in range(G.order) if G.mul(a, b) == h}

    def counit(self, h: int) -> int:
        return int(h == self.group.identity)

    def antipode(self, h: int) -> int:
        return self.group.inverse[h]

    def _vec(self, f: dict) -> tuple:
        return tuple(f.get(h, 0) for h in range(self.group.order))

    def axiom_failures(self) -> list[str]:
        G, out = self.group, []
        n = G.order
        for h in range(n):
            d = self.coproduct(h)
            left = {a: c for (a, b), c in d.items() if self.counit(b)}
            right = {b: c for (a, b), c in d.items() if self.counit(a)}
            if self._vec(left) != self._vec({h: 1}) or self._vec(right) != self._vec({h: 1}):
                out.append(f"counit law at delta_{h}")
            # m (S (x) id) Delta and m (id (x) S) Delta; product of deltas is pointwise
            sl, sr = [0] * n, [0] * n
            for (a, b), c in d.items():
                if self.antipode(a) == b:
                    sl[b] += c
                if a == self.antipode(b):
                    sr[a] += c
            want = [self.counit(h)] * n
            if sl != want or sr != want:
                out.append(f"antipode law at delta_{h}")
            lhs = {(a, b1, b2) for (a, b) in d for (b1, b2) in self.coproduct(b)}
            rhs = {(a1, a2, b) for (a, b) in d for (a1, a2) in self.coproduct(a)}
            if lhs != rhs:
                out.append(f"coassociativity at delta_{h}")
        return out


# -- the smash product ---------------------------------------------------------------


@dataclass(frozen=True)
class SmashElement:
    group: FiniteGroup
    base: BaseField
    coeffs: tuple  # coeffs[g][h] for g # delta_h

    def __post_init__(self):
        n = self.group.order
        c = tuple(tuple(self.base(x) for x in row) for row in self.coeffs)
        if len(c) != n or any(len(r) != n for r in c):
            raise ValueError("coefficient array must be |F| x |F|")
        object.__setattr__(self, "coeffs", c)

    def _check(self, other):
        if self.group != other.group:
            raise BaseMismatch("different groups")
        if self.base != other.base:
            raise BaseMismatch(f"{self.base.label} vs {other.base.label}")

    def __add__(self, other):
        self._check(other)
        return SmashElement(self.group, self.base, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        return smash_multiply(self, other)

    def scale(self, c):
        return SmashElement(self.group, self.base, tuple(tuple(c * a for a in r) for r in self.coeffs))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.coeffs)

    def support(self) -> dict:
        return {(g, h): c for g, r in enumerate(self.coeffs) for h, c in enumerate(r) if c}


def smash_zero(group: FiniteGroup, base: BaseField) -> SmashElement:
    n = group.order
    return SmashElement(group, base, ((0,) * n,) * n)


def smash_basis(group: FiniteGroup, base: BaseField, g: int, h: int) -> SmashElement:
    n = group.order
    return SmashElement(group, base, tuple(tuple(int(a == g and b == h) for b in range(n)) for a in range(n)))


def group_element(group: FiniteGroup, base: BaseField, g: int) -> SmashElement:
    """``g # 1`` with ``1 = sum_h delta_h``."""
    n = group.order
    return SmashElement(group, base, tuple(tuple(int(a == g) for _ in range(n)) for a in range(n)))


def delta(group: FiniteGroup, base: BaseField, h: int) -> SmashElement:
    return smash_basis(group, base, group.identity, h)


def smash_one(group: FiniteGroup, base: BaseField) -> SmashElement:
    return group_element(group, base, group.identity)


def smash_multiply(x: SmashElement, y: SmashElement) -> SmashElement:
    x._check(y)
    G, K = x.group, x.base
    n = G.order
    inv = G.inverse
    out = [[0] * n for _ in range(n)]
    for (g, h), c in x.support().items():
        for (g2, h2), d in y.support().items():
            if G.mul(inv[g2], h) == h2:
                out[G.mul(g, g2)][h2] += c * d
    return SmashElement(G, K, tuple(tuple(K(v) for v in r) for r in out))


def smash_multiply_expanded(x: SmashElement, y: SmashElement) -> SmashElement:
    """Oracle: expand ``a (r_1 . b) # r_2 s`` through the coproduct and the grading action."""
    x._check(y)
    G, K = x.group, x.base
    fun = FunAlgebra(G)
    n = G.order
    out = [[0] * n for _ in range(n)]
    for (g, h), c in x.support().items():
        for (g2, h2), d in y.support().items():
            for (a, b), e in fun.coproduct(h).items():
                if a != g2:      # delta_a . g2 = [a = g2] g2
                    continue
                if b != h2:      # delta_b delta_h2 = [b = h2] delta_h2
                    continue
                out[G.mul(g, g2)][h2] += c * d * e
    return SmashElement(G, K, tuple(tuple(K(v) for v in r) for r in out))


# -- module structures ---------------------------------------------------------------


@dataclass(frozen=True)
class SmashModule:
    """``k[F]`` as a module over ``k[F] # Fun(F, k)``."""

    group: FiniteGroup
    base: BaseField

    @property
    def dim(self) -> int:
        return self.group.order

    def operator(self, g: int, h: int) -> list[list]:
        """Matrix (columns = inputs) of ``g # delta_h``."""
        n = self.dim
        M = [[0] * n for _ in range(n)]
        M[self.group.mul(g, h)][h] = 1
        return M

    def operators(self) -> list[list[list]]:
        n = self.dim
        return [self.operator(g, h) for g in range(n) for h in range(n)]

    def act(self, x: SmashElement, v: Sequence) -> list:
        n, G, K = self.dim, self.group, self.base
        out = [0] * n
        for (g, h), c in x.support().items():
            if v[h]:
                out[G.mul(g, h)] += c * v[h]
        return [K(a) for a in out]


@dataclass(frozen=True)
class AugmentationModule:
    """The one-dimensional trivial module of ``k[F]`` alone; not a smash module."""

    group: FiniteGroup
    base: BaseField


def _apply(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def _span_rank(vectors, base: BaseField) -> int:
    return rank(vectors, len(vectors[0]) if vectors else 0, base.p)


@dataclass
class SimplicityResult:
    simple: bool
    route: str
    witness: list | None = None
    checked: int = 0

    def to_json(self) -> dict:
        from .reports import jsonable

        return jsonable({"simple": self.simple, "route": self.route, "witness": self.witness,
                         "checked": self.checked})


def simplicity_certificate(module, route: str = "auto", budget: int = 10**5) -> SimplicityResult:
    """Is ``k[F]`` simple over the smash product?

    ``route="enumerate"`` (F_p only) checks that every nonzero vector generates
    the module; ``route="density"`` checks that the smash operators span all of
    ``End_k(k[F])``.  ``auto`` enumerates over F_p and uses density over Q.
    """
    if not isinstance(module, SmashModule):
        raise NotApplicable("simplicity is certified only for the smash module k[F]")
    K, n = module.base, module.dim
    if n > 12:
        raise BudgetExceeded(f"|F| = {n} > 12")
    if route == "auto":
        route = "density" if K.p is None else "enumerate"
    ops = module.operators()
    if route == "density":
        flat = [[M[i][j] for i in range(n) for j in range(n)] for M in ops]
        r = _span_rank(flat, K)
        return SimplicityResult(r == n * n, "density", None, r)
    if route != "enumerate":
        raise ValueError(f"unknown route {route!r}")
    if K.p is None:
        raise BudgetExceeded("enumeration needs a finite field")
    if K.p > 7 or K.p ** n > budget:
        raise BudgetExceeded(f"{K.p}^{n} vectors exceed the budget {budget}")
    checked = 0
    for v in product(range(K.p), repeat=n):
        if not any(v):
            continue
        # normalise: only vectors with leading coefficient 1 (scalars do not change the span)
        if v[next(i for i, a in enumerate(v) if a)] != 1:
            continue
        checked += 1
        images = [[K(a) for a in _apply(M, v)] for M in ops]
        if _span_rank(images, K) < n:
            return SimplicityResult(False, "enumerate", list(v), checked)
    return SimplicityResult(True, "enumerate", None, checked)


# -- invariants ----------------------------------------------------------------------


@dataclass(frozen=True)
class Action:
    """A Hopf action on ``A = k^dim``: operator matrices and counit values on a basis of H."""

    dim: int
    operators: tuple
    counits: tuple
    base: BaseField
    products: Callable | None = None  # bilinear product on A, for closure checks


def fun_on_group(group: FiniteGroup, base: BaseField) -> Action:
    n = group.order
    ops = tuple(tuple(tuple(int(i == j == h) for j in range(n)) for i in range(n)) for h in range(n))
    cnt = tuple(int(h == group.identity) for h in range(n))
    return Action(n, ops, cnt, base, _group_product(group, base))


def quotient_on_group(group: FiniteGroup, base: BaseField, normal: Sequence[int]) -> Action:
    """``Fun(F/E, k)`` acting on ``k[F]`` through the projection ``F -> F/E``."""
    if not group.is_normal(normal):
        raise InvalidGroup("E must be a normal subgroup")
    n = group.order
    cs = group.cosets(normal)
    e = group.identity
    ops = tuple(tuple(tuple(int(i == j and j in C) for j in range(n)) for i in range(n)) for C in cs)
    cnt = tuple(int(e in C) for C in cs)
    return Action(n, ops, cnt, base, _group_product(group, base))


def trivial_on_group(group: FiniteGroup, base: BaseField) -> Action:
    n = group.order
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return Action(n, (ident,), (1,), base, _group_product(group, base))


def fun_adjoint_on_fun(group: FiniteGroup, base: BaseField) -> Action:
    """``Fun(F)`` on itself by ``r . a = r_1 a S(r_2)``, built from the coproduct."""
    n = group.order
    fun = FunAlgebra(group)
    ops = []
    for h in range(n):
        M = [[0] * n for _ in range(n)]
        for a in range(n):
            # delta_u delta_a delta_{S(v)} = [u = a = v^{-1}] delta_a
            for (u, v), c in fun.coproduct(h).items():
                if u == a and fun.antipode(v) == a:
                    M[a][a] += c
        ops.append(tuple(tuple(r) for r in M))
    cnt = tuple(fun.counit(h) for h in range(n))

    def prod(x, y):
        return [base(a * b) for a, b in zip(x, y)]

    return Action(n, tuple(ops), cnt, base, prod)


def _group_product(group: FiniteGroup, base: BaseField):
    def prod(x, y):
        out = [0] * group.order
        for a, c in enumerate(x):
            if c:
                for b, d in enumerate(y):
                    if d:
                        out[group.mul(a, b)] += c * d
        return [base(v) for v in out]

    return prod


def invariants(action: Action) -> list[list]:
    """Basis of ``{a : r . a = eps(r) a}`` as the kernel of the stacked constraints."""
    n, K = action.dim, action.base
    rows = []
    for M, c in zip(action.operators, action.counits):
        for i in range(n):
            rows.append([K(M[i][j] - (c if i == j else 0)) for j in range(n)])
    return [[K(x) for x in v] for v in nullspace(rows, n, K.p)]


def invariants_brute_force(action: Action, budget: int = 10**6) -> list[tuple]:
    """Every invariant vector over ``F_p`` (enumeration oracle)."""
    K, n = action.base, action.dim
    if K.p is None or K.p ** n > budget:
        raise BudgetExceeded("brute force needs a small finite field")
    out = []
    for v in product(range(K.p), repeat=n):
        if all([K(x) for x in _apply(M, v)] == [K(c * a) for a in v]
               for M, c in zip(action.operators, action.counits)):
            out.append(v)
    return out


def is_subalgebra(basis: list[list], action: Action) -> bool:
    if action.products is None or not basis:
        return True
    K = action.base
    r = _span_rank(basis, K)
    for x in basis:
        for y in basis:
            z = action.products(x, y)
            if _span_rank(basis + [z], K) != r:
                return False
    return True


def same_span(a: list[list], b: list[list], base: BaseField) -> bool:
    if not a or not b:
        return not a and not b
    ra, rb = _span_rank(a, base), _span_rank(b, base)
    return ra == rb == _span_rank(a + b, base)


def indicator(group: FiniteGroup, base: BaseField, elems) -> list[list]:
    """Basis vectors of ``k[E]`` inside ``k[F]``."""
    return [[base(int(g == a)) for g in range(group.order)] for a in sorted(elems)]


# -- endomorphisms -------------------------------------------------------------------


@dataclass
class EndomorphismResult:
    dim_end: int
    dim_invariants: int
    right_multiplication: bool

    @property
    def passed(self) -> bool:
        return self.dim_end == self.dim_invariants and self.right_multiplication

    def to_json(self) -> dict:
        return {"dim_end": self.dim_end, "dim_invariants": self.dim_invariants,
                "right_multiplication": self.right_multiplication, "pass": self.passed}


def _smash_operators(group: FiniteGroup, action: Action) -> list:
    """Operators of ``A # H`` on ``A``: left multiplications and the H-operators."""
    n = group.order
    ops = []
    for g in range(n):
        L = [[int(group.mul(g, j) == i) for j in range(n)] for i in range(n)]
        ops.append(L)
    ops.extend([list(map(list, M)) for M in action.operators])
    return ops


def endomorphism_check(group: FiniteGroup, base: BaseField, action: Action | None = None
                       ) -> EndomorphismResult:
    """Solve ``phi T = T phi`` over the generators of ``A # H`` acting on ``A = k[F]``.

    Also checks that each solution is right multiplication by ``phi(1)`` with
    ``phi(1)`` invariant.
    """
    n = group.order
    if n > 12:
        raise BudgetExceeded(f"|F| = {n} > 12")
    action = action or fun_on_group(group, base)
    K = base
    ops = _smash_operators(group, action)
    # unknown phi[i][j] at index i*n + j
    rows = []
    for T in ops:
        for i in range(n):
            for j in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[i * n + k] += T[k][j]
                    row[k * n + j] -= T[i][k]
                rows.append([K(x) for x in row])
    sols = nullspace(rows, n * n, K.p)
    inv = invariants(action)
    # right multiplication by a: phi(g) = g a
    right = []
    for a in inv:
        phi = [[0] * n for _ in range(n)]
        for g in range(n):
            for b, c in enumerate(a):
                if c:
                    phi[group.mul(g, b)][g] += c
        right.append([K(phi[i][j]) for i in range(n) for j in range(n)])
    ok = same_span(sols, right, K) if sols or right else True
    return EndomorphismResult(len(sols), len(inv), ok)


def quotient_invariants_check(group: FiniteGroup, base: BaseField, normal: Sequence[int]) -> dict:
    """``Fun(F/E)``-invariants of ``k[F]`` equal ``k[E]``."""
    act = quotient_on_group(group, base, normal)
    inv = invariants(act)
    want = indicator(group, base, normal)
    return {"dim": len(inv), "expected_dim": len(want), "equal": same_span(inv, want, base),
            "subalgebra": is_subalgebra(inv, act)}
