"""Quantum variables, pairing matrices and brace arithmetic.

The group generated by g_1, ..., g_n is modelled as free abelian, so a group
element is just an integer exponent vector.  Only the matrix
``p[i][j] = chi^i(g_j)`` ever enters a computation.

Indices are 1-based everywhere in the public API.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence

from . import coeff
from ._expr import ParseError
from .coeff import Field, Scalar
from .perm import Perm

__all__ = [
    "ArityMismatch",
    "ZeroPairing",
    "PairingContext",
    "symbolic_context",
    "numeric_context",
    "chi_word_on_group",
    "q_k",
    "q_k_star",
    "brace",
    "is_conforming",
    "gamma4",
    "cartan_matrix",
    "symmetrizer",
    "drinfeld_jimbo",
    "quantum_plane",
    "heisenberg",
    "color",
    "pareigis_context",
    "pareigis_zeta",
    "impose_constraint",
    "conforming_product",
    "p_name",
    "dumps_context",
    "loads_context",
]


class ArityMismatch(ValueError):
    pass


class ZeroPairing(ValueError):
    pass


def p_name(i: int, j: int) -> str:
    return f"p[{i}][{j}]"


@dataclass(frozen=True, eq=False)
class PairingContext:
    """n quantum variables with the pairing matrix ``p`` over ``field``.

    ``constraint`` records which entry (if any) was eliminated so that the
    product of all off-diagonal pairings equals 1.
    """

    field: Field
    p: tuple[tuple[Scalar, ...], ...]
    names: tuple[str, ...] = ()
    constraint: tuple[int, int] | None = None
    _key: tuple = dc_field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.p)
        if any(len(row) != n for row in self.p):
            raise ValueError("pairing matrix must be square")
        rows = tuple(tuple(self.field(v) for v in row) for row in self.p)
        object.__setattr__(self, "p", rows)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v.is_zero():
                    raise ZeroPairing(f"pairing p[{i + 1}][{j + 1}] is zero")
        names = self.names or tuple(f"x{i}" for i in range(1, n + 1))
        if len(names) != n or len(set(names)) != n:
            raise ValueError("variable names must be distinct, one per variable")
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "_key", (self.field, rows, self.names, self.constraint))
        object.__setattr__(self, "memo", {})

    @property
    def n(self) -> int:
        return len(self.p)

    def pair(self, i: int, j: int) -> Scalar:
        """``p_ij = chi^i(g_j)``."""
        return self.p[i - 1][j - 1]

    def __eq__(self, other):
        return isinstance(other, PairingContext) and self._key == other._key

    def __hash__(self):
        return hash((str(self.field), self.names, self.constraint))

    def restrict(self, indices: Sequence[int]) -> "PairingContext":
        """Sub-context on the listed variables, in the given order."""
        p = tuple(tuple(self.pair(i, j) for j in indices) for i in indices)
        return PairingContext(self.field, p, tuple(self.names[i - 1] for i in indices))

    def with_field(self, field: Field) -> "PairingContext":
        return PairingContext(field, tuple(tuple(field(v) for v in row) for row in self.p),
                              self.names, self.constraint)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def symbolic_context(n: int, constrain: tuple[int, int] | None = None,
                     base: Field | None = None, diagonal: bool = True) -> PairingContext:
    """Every pairing an independent symbol ``p[i][j]``.

    With ``constrain=(i, j)`` the symbol ``p[i][j]`` is replaced by the inverse
    of the product of all other off-diagonal pairings.
    """
    base = base or coeff.rationals()
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
             if (diagonal or i != j) and (i, j) != constrain]
    if constrain is not None:
        ci, cj = constrain
        if ci == cj or not (1 <= ci <= n and 1 <= cj <= n):
            raise ValueError(f"bad constraint {constrain}")
    F = coeff.rational_functions(base, [p_name(i, j) for i, j in pairs])
    one = F.one
    p = [[F.symbol(p_name(i, j)) if (i, j) in pairs else one for j in range(1, n + 1)]
         for i in range(1, n + 1)]
    if constrain is not None:
        ci, cj = constrain
        prod = one
        for i, j in pairs:
            if i != j:
                prod = prod * p[i - 1][j - 1]
        p[ci - 1][cj - 1] = prod.inv()
    return PairingContext(F, tuple(map(tuple, p)), constraint=constrain)


def numeric_context(field: Field, p, names: Sequence[str] = ()) -> PairingContext:
    return PairingContext(field, tuple(tuple(field(v) for v in row) for row in p), tuple(names))


def impose_constraint(ctx: PairingContext, i: int, j: int) -> PairingContext:
    """Replace ``p[i][j]`` by the value that makes all variables conforming."""
    prod = ctx.field.one
    for a in range(1, ctx.n + 1):
        for b in range(1, ctx.n + 1):
            if a != b and (a, b) != (i, j):
                prod = prod * ctx.pair(a, b)
    p = [list(row) for row in ctx.p]
    p[i - 1][j - 1] = prod.inv()
    return PairingContext(ctx.field, tuple(map(tuple, p)), ctx.names, (i, j))


# ---------------------------------------------------------------------------
# characters and braces
# ---------------------------------------------------------------------------


def chi_word_on_group(ctx: PairingContext, word: Iterable[int], g: Sequence[int]) -> Scalar:
    """``chi^w(g) = prod_{x in w} prod_j p[x][j]^(g_j)``."""
    out = ctx.field.one
    for x in word:
        for j, e in enumerate(g, start=1):
            if e:
                out = out * ctx.pair(x, j) ** e
    return out


def q_k(ctx: PairingContext, order: Perm, k: int) -> Scalar:
    out = ctx.field.one
    for i in range(1, k):
        out = out * ctx.pair(order[i - 1], order[k - 1])
    return out


def q_k_star(ctx: PairingContext, order: Perm, k: int) -> Scalar:
    out = ctx.field.one
    for i in range(1, k):
        out = out * ctx.pair(order[k - 1], order[i - 1])
    return out.inv()


def brace(ctx: PairingContext, word: Iterable[tuple[int, int]]) -> Scalar:
    """``{A} = A - Abar^-1`` for ``A`` the product of the listed ``p_ij``."""
    a = ctx.field.one
    abar = ctx.field.one
    for i, j in word:
        a = a * ctx.pair(i, j)
        abar = abar * ctx.pair(j, i)
    return a - abar.inv()


def conforming_product(ctx: PairingContext, subset: Iterable[int]) -> Scalar:
    s = sorted(set(subset))
    out = ctx.field.one
    for i in s:
        for j in s:
            if i != j:
                out = out * ctx.pair(i, j)
    return out


def is_conforming(ctx: PairingContext, subset: Iterable[int]) -> bool:
    s = set(subset)
    if len(s) < 2:
        raise ValueError("conforming sets have at least two variables")
    return conforming_product(ctx, s) == 1


def gamma4(ctx: PairingContext, i: int, j: int) -> bool:
    if ctx.n != 4:
        raise ArityMismatch(f"gamma4 needs four variables, context has {ctx.n}")
    if i == j:
        raise ValueError("gamma4 needs distinct indices")
    k, s = (t for t in range(1, 5) if t not in (i, j))
    return (not brace(ctx, [(i, j)]).is_zero()
            and not brace(ctx, [(i, j), (i, k), (k, j)]).is_zero()
            and not brace(ctx, [(i, j), (i, s), (s, j)]).is_zero())


# ---------------------------------------------------------------------------
# presets
# ---------------------------------------------------------------------------


def cartan_matrix(name: str) -> list[list[int]]:
    """Cartan matrix for ``A_r``, ``B_r``, ``C_r``, ``D_r`` or ``G2`` (e.g. ``"B3"``)."""
    m = re.fullmatch(r"([ABCDG])_?(\d+)", name.strip().upper())
    if not m:
        raise ValueError(f"unknown Cartan type {name!r}")
    t, r = m.group(1), int(m.group(2))
    if r < 1:
        raise ValueError("rank must be positive")
    a = [[2 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(r - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if t == "A":
        return a
    if t == "B":
        if r < 2:
            raise ValueError("B_r needs r >= 2")
        a[r - 1][r - 2] = -2
        return a
    if t == "C":
        if r < 2:
            raise ValueError("C_r needs r >= 2")
        a[r - 2][r - 1] = -2
        return a
    if t == "D":
        if r < 3:
            raise ValueError("D_r needs r >= 3")
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
        return a
    if r != 2:
        raise ValueError("only G2 is supported")
    return [[2, -1], [-3, 2]]


def symmetrizer(a: Sequence[Sequence[int]]) -> list[int]:
    """Least positive integers ``d`` with ``d_i a_ij = d_j a_ji``."""
    r = len(a)
    d: list[Fraction | None] = [None] * r
    for root in range(r):
        if d[root] is not None:
            continue
        d[root] = Fraction(1)
        stack, comp = [root], [root]
        while stack:
            i = stack.pop()
            for j in range(r):
                if i == j or (a[i][j] == 0 and a[j][i] == 0):
                    continue
                if a[i][j] == 0 or a[j][i] == 0:
                    raise ValueError("matrix is not symmetrizable")
                val = d[i] * a[i][j] / a[j][i]
                if d[j] is None:
                    d[j] = val
                    stack.append(j)
                    comp.append(j)
                elif d[j] != val:
                    raise ValueError("matrix is not symmetrizable")
        lcm = 1
        for i in comp:
            lcm = lcm * d[i].denominator // _gcd(lcm, d[i].denominator)
        for i in comp:
            d[i] *= lcm
        g = 0
        for i in comp:
            g = _gcd(g, int(d[i]))
        for i in comp:
            d[i] /= g
    return [int(x) for x in d]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def drinfeld_jimbo(cartan, with_k: bool = False, q: Scalar | None = None) -> PairingContext:
    """Pairings of the generators ``e_i``, ``f_i`` (and ``1 - K_i``).

    ``g_{e_i} = g_{f_i} = K_i^2`` while ``1 - K_i`` has grouplike ``K_i`` and
    trivial character.  ``q`` defaults to a free symbol.
    """
    a = cartan_matrix(cartan) if isinstance(cartan, str) else [list(r) for r in cartan]
    d = symmetrizer(a)
    r = len(a)
    if q is None:
        F = coeff.rational_functions(coeff.rationals(), ["q"])
        q = F.symbol("q")
    F = q.field

    # chi^{e_i}(K_j) = q^(-d_i a_ij), chi^{f_i}(K_j) = q^(d_i a_ij)
    def weight(kind: str, i: int, j: int) -> Scalar:
        if kind == "k":
            return F.one
        sign = -1 if kind == "e" else 1
        return q ** (sign * d[i] * a[i][j])

    vars_ = [("e", i) for i in range(r)] + [("f", i) for i in range(r)]
    if with_k:
        vars_ += [("k", i) for i in range(r)]
    names = [f"{k}{i + 1}" for k, i in vars_]
    p = []
    for kx, i in vars_:
        row = []
        for ky, j in vars_:
            w = weight(kx, i, j)
            row.append(w if ky == "k" else w * w)
        p.append(row)
    return PairingContext(F, tuple(map(tuple, p)), tuple(names))


def quantum_plane(q: Scalar | None = None) -> PairingContext:
    if q is None:
        q = coeff.rational_functions(coeff.rationals(), ["q"]).symbol("q")
    return PairingContext(q.field, ((q,),), ("x",))


def heisenberg(q: Scalar | None = None) -> PairingContext:
    """The two positive generators of type A2."""
    ctx = drinfeld_jimbo("A2", q=q)
    return ctx.restrict([1, 2])


def color(table, field: Field | None = None) -> PairingContext:
    """``p_ij = lambda(i, j)`` for a bicharacter table with ``lambda_ij lambda_ji = 1``."""
    field = field or coeff.rationals()
    p = tuple(tuple(field(v) for v in row) for row in table)
    n = len(p)
    for i in range(n):
        for j in range(n):
            if p[i][j] * p[j][i] != 1:
                raise ValueError(f"bicharacter table is not skew-symmetric at ({i + 1},{j + 1})")
    return PairingContext(field, p)


def pareigis_context(n: int, m: int | None = None) -> PairingContext:
    """Pairings with ``p_ij p_ji = zeta^2`` for a primitive n-th root ``zeta``.

    The field is ``cyclotomic(m)`` (default ``m = n``) and ``zeta = z^(m/n)``.
    Off-diagonal entries are deliberately asymmetric:
    ``p_ij = zeta^(1 + j - i)`` for ``i < j``.
    """
    m = m or n
    if m % n:
        raise ValueError("n must divide the cyclotomic order")
    F = coeff.cyclotomic(m)
    zeta = F.gen ** (m // n)
    p = [[F.one] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p[i][j] = zeta ** (1 + j - i)
            p[j][i] = zeta ** (1 - (j - i))
    return PairingContext(F, tuple(map(tuple, p)))


def pareigis_zeta(ctx: PairingContext, n: int | None = None) -> Scalar:
    """The root ``zeta`` used by :func:`pareigis_context`."""
    n = n or ctx.n
    F = ctx.field
    return F.gen ** (F.m // n)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s+field\s*=\s*(.+?)\s*\Z")
_ENTRY = re.compile(r"\s*p\s+(\d+)\s+(\d+)\s+(.+?)\s*\Z")
_CONSTRAIN = re.compile(r"\s*constrain\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*\Z")
_NAMES = re.compile(r"\s*names\s+(.+?)\s*\Z")


def dumps_context(ctx: PairingContext) -> str:
    lines = [f"n={ctx.n} field={ctx.field}"]
    if ctx.names != tuple(f"x{i}" for i in range(1, ctx.n + 1)):
        lines.append("names " + " ".join(ctx.names))
    for i in range(1, ctx.n + 1):
        for j in range(1, ctx.n + 1):
            if ctx.constraint == (i, j):
                continue
            lines.append(f"p {i} {j} {ctx.pair(i, j)}")
    if ctx.constraint:
        lines.append(f"constrain ({ctx.constraint[0]},{ctx.constraint[1]})")
    return "\n".join(lines) + "\n"


def loads_context(text: str) -> PairingContext:
    """Parse the line-oriented context format; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise ParseError("empty context")
    m = _HEADER.match(lines[0])
    if not m:
        raise ParseError(f"bad context header {lines[0]!r}")
    n = int(m.group(1))
    F = coeff.field_from_spec(m.group(2))
    entries: dict[tuple[int, int], Scalar] = {}
    constraint = None
    names: tuple[str, ...] = ()
    for ln in lines[1:]:
        if em := _ENTRY.match(ln):
            i, j = int(em.group(1)), int(em.group(2))
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"index out of range in {ln!r}")
            if (i, j) in entries:
                raise ParseError(f"duplicate entry p {i} {j}")
            entries[i, j] = F.parse(em.group(3))
        elif cm := _CONSTRAIN.match(ln):
            constraint = (int(cm.group(1)), int(cm.group(2)))
        elif nm := _NAMES.match(ln):
            names = tuple(nm.group(1).split())
        else:
            raise ParseError(f"unrecognised context line {ln!r}")
    missing = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
               if (i, j) not in entries and (i, j) != constraint]
    if missing:
        raise ParseError(f"missing pairing entries {missing}")
    p = [[entries.get((i, j), F.one) for j in range(1, n + 1)] for i in range(1, n + 1)]
    ctx = PairingContext(F, tuple(map(tuple, p)), names)
    if constraint is not None:
        given = entries.get(constraint)
        ctx = impose_constraint(ctx, *constraint)
        if given is not None and given != ctx.pair(*constraint):
            raise ParseError(f"entry p {constraint[0]} {constraint[1]} contradicts the constraint")
    return ctx
