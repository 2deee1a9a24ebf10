"""Constructions of quantum operations.

Everything here returns polynomials in the free enveloping algebra of a
:class:`~skewprim.pairing.PairingContext`.  Every constructor re-checks its
output with :func:`~skewprim.primcheck.is_skew_primitive` before returning,
so a wrong convention surfaces as an exception instead of a silent error.

Permutations are one-line tuples; ``nu`` acts on a ladder by renaming
``x_i -> x_nu(i)`` in both the letters and the pairing indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perm
from .coeff import Scalar, gauss_binom, least_vanishing_q_int, q_int, root_of_unity_order, sym_binom
from .freealg import Monomial, Polynomial, skew_commutator
from .linalg import nullspace, solve_combination
from .pairing import (
    ArityMismatch,
    PairingContext,
    brace,
    conforming_product,
    gamma4,
    is_conforming,
    q_k,
    q_k_star,
)
from .primcheck import (
    NotGroupHomogeneous,
    OperationBasis,
    d_plus_word,
    group_degree,
    is_skew_primitive,
)

__all__ = [
    "Undefined",
    "UnboundedSearch",
    "PreconditionFailed",
    "ConstructionError",
    "UnaryVerdict",
    "DNu",
    "unary_verdict",
    "main_unary",
    "binary_one_linear",
    "binary_ladder",
    "binary_ladder_dual",
    "binary_power_ladder",
    "binary_ladder_coefficients",
    "binary_brute_force",
    "binary_recurrence_space",
    "main_bilinear",
    "d_nu",
    "multilinear_space",
    "main_trilinear",
    "trilinear_symmetry_coeff",
    "direct_trilinear_alpha",
    "printed_trilinear_alpha",
    "quad_system",
    "quad_system_printed",
    "quad_beta",
    "main_quadrilinear",
    "quad_symmetry",
    "pareigis",
    "serre",
    "express_in_basis",
    "linear_relations",
    "on_variables",
]


class Undefined(ValueError):
    """The requested main operation is not defined on these arguments."""


class UnboundedSearch(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


class ConstructionError(RuntimeError):
    """A constructed polynomial failed its own primitivity re-check."""


def _verified(ctx: PairingContext, W: Polynomial, what: str) -> Polynomial:
    report = is_skew_primitive(ctx, W)
    if not report.verdict:
        raise ConstructionError(f"{what} is not skew primitive; defect {report.defect}")
    return W


# ---------------------------------------------------------------------------
# characters of arbitrary homogeneous arguments
# ---------------------------------------------------------------------------


def _letter_vector(W: Polynomial) -> tuple[int, ...]:
    n = W.ctx.n
    vecs = set()
    for m in W.terms:
        v = [0] * n
        for x in m.word:
            v[x - 1] += 1
        vecs.add(tuple(v))
    if len(vecs) != 1:
        raise NotGroupHomogeneous("argument is not homogeneous in its letters")
    return vecs.pop()


def _pairing_value(ctx: PairingContext, a: Polynomial, b: Polynomial) -> Scalar:
    """``chi^a(g_b)`` for homogeneous ``a`` and ``b``."""
    la = _letter_vector(a)
    gb = group_degree(b)
    out = ctx.field.one
    for x, ex in enumerate(la, start=1):
        if ex:
            for j, ej in enumerate(gb, start=1):
                if ej:
                    out = out * ctx.pair(x, j) ** (ex * ej)
    return out


def _argument_context(ctx: PairingContext, args: Sequence[Polynomial]) -> PairingContext:
    """Pairing matrix ``chi^{a_i}(g_{a_j})`` of the arguments, checking each is skew primitive."""
    for k, a in enumerate(args, start=1):
        if a.is_zero() or not is_skew_primitive(ctx, a).verdict:
            raise Undefined(f"argument {k} is not a skew primitive element")
    p = tuple(tuple(_pairing_value(ctx, a, b) for b in args) for a in args)
    return PairingContext(ctx.field, p, tuple(f"a{i}" for i in range(1, len(args) + 1)))


def _vars(ctx: PairingContext) -> list[Polynomial]:
    return [Polynomial.var(ctx, i) for i in range(1, ctx.n + 1)]


def on_variables(ctx: PairingContext, indices: Sequence[int], build) -> Polynomial:
    """Run ``build(sub_ctx)`` on the listed variables, then rename back into ``ctx``."""
    sub = ctx.restrict(indices)
    W = build(sub)
    out = {}
    for m, c in W.terms.items():
        out[Monomial((0,) * ctx.n, tuple(indices[i - 1] for i in m.word))] = c
    return Polynomial(ctx, out)


# ---------------------------------------------------------------------------
# unary
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnaryVerdict:
    """Which powers ``x^n`` of a variable with self-pairing ``p`` are operations.

    ``m`` is the multiplicative order of ``p`` (1 for ``p = 1``) or None when
    ``p`` is not a root of unity; ``exponent`` is the least ``n >= 1`` with
    ``q_int(p, n) = 0`` (the main unary operation's power), or None.
    """

    m: int | None
    exponent: int | None
    characteristic: int

    def admits(self, n: int) -> bool:
        """Whether ``x^n`` is skew primitive (``n = 1`` always is)."""
        if n == 1:
            return True
        if n < 1 or self.m is None or n % self.m:
            return False
        q = n // self.m
        l = self.characteristic
        if l == 0:
            return q == 1
        while q % l == 0:
            q //= l
        return q == 1

    def admissible(self, bound: int) -> list[int]:
        return [n for n in range(1, bound + 1) if self.admits(n)]

    def describe(self) -> str:
        if self.m is None:
            return "no power above the first"
        if self.characteristic == 0:
            return f"{{{self.m}}}" if self.m > 1 else "no power above the first"
        return f"{{{self.m}*{self.characteristic}^r : r >= 0}}"


def unary_verdict(p: Scalar, characteristic: int | None = None) -> UnaryVerdict:
    if p.is_zero():
        raise ValueError("self-pairing must be nonzero")
    char = p.field.characteristic if characteristic is None else characteristic
    if char != p.field.characteristic:
        raise ValueError("characteristic does not match the field of p")
    m = root_of_unity_order(p)
    return UnaryVerdict(m, least_vanishing_q_int(p), char)


def main_unary(ctx: PairingContext, a: Polynomial) -> Polynomial:
    """``a^m`` for the least ``m`` with ``q_int(chi^a(g_a), m) = 0``."""
    if a.is_zero() or not is_skew_primitive(ctx, a).verdict:
        raise Undefined("argument is not a skew primitive element")
    p = _pairing_value(ctx, a, a)
    m = least_vanishing_q_int(p)
    if m is None:
        raise Undefined(f"self-pairing {p} has no vanishing q-integer")
    return _verified(ctx, a ** m, "main unary power")


# ---------------------------------------------------------------------------
# binary, linear in x
# ---------------------------------------------------------------------------


def _bracket_ladder(ctx: PairingContext, start: Polynomial, y: Polynomial, factors) -> Polynomial:
    cur = start
    for f in factors:
        cur = skew_commutator(ctx, cur, y, f)
    return cur


def binary_ladder(ctx: PairingContext, x: int, y: int, n: int) -> Polynomial:
    """``[...[[x y]_{p12} y]_{p12 p22} ... y]_{p12 p22^(n-1)}``."""
    p12, p22 = ctx.pair(x, y), ctx.pair(y, y)
    X, Y = Polynomial.var(ctx, x), Polynomial.var(ctx, y)
    return _bracket_ladder(ctx, X, Y, [p12 * p22 ** s for s in range(n)])


def binary_ladder_dual(ctx: PairingContext, x: int, y: int, n: int) -> Polynomial:
    """``[...[[x y]_{p21^-1} y]_{p21^-1 p22^-1} ... y]_{p21^-1 p22^(1-n)}``."""
    p21, p22 = ctx.pair(y, x), ctx.pair(y, y)
    X, Y = Polynomial.var(ctx, x), Polynomial.var(ctx, y)
    return _bracket_ladder(ctx, X, Y, [(p21 * p22 ** s).inv() for s in range(n)])


def binary_power_ladder(ctx: PairingContext, x: int, y: int, m: int, q: int) -> Polynomial:
    """``[...[[x y^m]_{p12^m} y^m]_{p12^m} ... y^m]_{p12^m}`` with ``q`` brackets."""
    f = ctx.pair(x, y) ** m
    X, Ym = Polynomial.var(ctx, x), Polynomial.var(ctx, y) ** m
    return _bracket_ladder(ctx, X, Ym, [f] * q)


def binary_ladder_coefficients(ctx: PairingContext, x: int, y: int, n: int) -> list[Scalar]:
    """Coefficients ``c_0 .. c_n`` of ``prod_{s<n} (t - p12 p22^s)``, lowest degree first."""
    F = ctx.field
    p12, p22 = ctx.pair(x, y), ctx.pair(y, y)
    poly = [F.one]
    for s in range(n):
        r = p12 * p22 ** s
        new = [F.zero] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] = new[i + 1] + c
            new[i] = new[i] - r * c
        poly = new
    return poly


def _one_linear_word(x: int, y: int, n: int, k: int) -> tuple[int, ...]:
    """``y^k x y^(n-k)``."""
    return (y,) * k + (x,) + (y,) * (n - k)


def binary_brute_force(ctx: PairingContext, x: int, y: int, n: int) -> list[Polynomial]:
    """All ``sum_k alpha_k y^k x y^(n-k)`` with zero primitivity defect."""
    from .freealg import _accumulate, _group_of, coproduct

    g = _group_of(ctx.n, (x,) + (y,) * n)
    one = Monomial((0,) * ctx.n, ())
    gm = Monomial(g, ())
    equations: dict = {}
    for k in range(n + 1):
        w = _one_linear_word(x, y, n, k)
        t = dict(coproduct(ctx, Polynomial.word(ctx, w)).terms)
        m = Monomial((0,) * ctx.n, w)
        _accumulate(t, (m, one), -ctx.field.one)
        _accumulate(t, (gm, m), -ctx.field.one)
        for key, c in t.items():
            equations.setdefault(key, {})[k] = c
    rows = [equations[key] for key in sorted(equations)]
    basis = nullspace(rows, list(range(n + 1)), ctx.field)
    return [Polynomial(ctx, {Monomial((0,) * ctx.n, _one_linear_word(x, y, n, k)): c for k, c in v.items()})
            for v in basis]


def binary_recurrence_space(ctx: PairingContext, x: int, y: int, n: int) -> list[Polynomial]:
    """Null space of the recurrence on ``alpha_k`` read off from the ``... (x) y`` terms.

    ``alpha_k q_int(p22, k) + alpha_{k-1} q_int(p22, n-k+1) p12 p22^(k-1) = 0``
    for ``k = 1..n``, with ``alpha_k`` the coefficient of ``y^k x y^(n-k)``.
    This is a necessary condition only.
    """
    p12, p22 = ctx.pair(x, y), ctx.pair(y, y)
    rows = []
    for k in range(1, n + 1):
        row = {}
        a = q_int(p22, k)
        b = q_int(p22, n - k + 1) * p12 * p22 ** (k - 1)
        if not a.is_zero():
            row[k] = a
        if not b.is_zero():
            row[k - 1] = b
        if row:
            rows.append(row)
    basis = nullspace(rows, list(range(n + 1)), ctx.field)
    return [Polynomial(ctx, {Monomial((0,) * ctx.n, _one_linear_word(x, y, n, k)): c for k, c in v.items()})
            for v in basis]


def binary_one_linear(ctx: PairingContext, x: int, y: int, n: int) -> Polynomial | None:
    """The operation of degree ``n`` in ``y``, linear in ``x``, if one exists.

    Uses the plain ladder when ``p12 p21 = p22^(1-n)``; otherwise, when ``p22``
    is a primitive m-th root of unity with ``m > 1``, ``m | n`` and
    ``(p12 p21)^m = 1``, the ladder in ``y^m``.  Returns None when neither
    condition holds.
    """
    if x == y:
        raise ValueError("x and y must be distinct variables")
    if n < 1:
        raise ValueError("degree in y must be positive")
    p12, p21, p22 = ctx.pair(x, y), ctx.pair(y, x), ctx.pair(y, y)
    if p12 * p21 == p22 ** (1 - n):
        return _verified(ctx, binary_ladder(ctx, x, y, n), "binary ladder")
    m = root_of_unity_order(p22)
    if m is not None and m > 1 and n % m == 0 and (p12 * p21) ** m == 1:
        return _verified(ctx, binary_power_ladder(ctx, x, y, m, n // m), "binary power ladder")
    return None


def main_bilinear(ctx: PairingContext, a: Polynomial, b: Polynomial) -> Polynomial:
    """``ab - p12 ba`` when ``p12 p21 = 1`` for ``p12 = chi^a(g_b)``."""
    pc = _argument_context(ctx, [a, b])
    p12, p21 = pc.pair(1, 2), pc.pair(2, 1)
    if p12 * p21 != 1:
        raise Undefined("the two arguments do not form a conforming pair")
    return _verified(ctx, skew_commutator(ctx, a, b, p12), "main bilinear operation")


# ---------------------------------------------------------------------------
# general multilinear
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DNu:
    nu: perm.Perm
    plus: Polynomial
    minus: Polynomial

    @property
    def diff(self) -> Polynomial:
        return self.plus - self.minus


def _ladder(ctx: PairingContext, args: Sequence[Polynomial], nu: perm.Perm, factor) -> Polynomial:
    cur = args[nu[0] - 1]
    for k in range(2, len(nu) + 1):
        cur = skew_commutator(ctx, cur, args[nu[k - 1] - 1], factor(k))
    return cur


def d_nu(ctx: PairingContext, nu: perm.Perm) -> DNu:
    """Left and right ladders ``D+_nu`` and ``D-_nu`` for ``nu`` fixing 1."""
    nu = tuple(nu)
    if len(nu) != ctx.n or nu[0] != 1 or sorted(nu) != list(range(1, ctx.n + 1)):
        raise ValueError(f"{nu} is not a permutation of 1..{ctx.n} fixing 1")
    key = ("dnu", nu)
    hit = ctx.memo.get(key)
    if hit is None:
        xs = _vars(ctx)
        plus = _ladder(ctx, xs, nu, lambda k: q_k(ctx, nu, k))
        minus = _ladder(ctx, xs, nu, lambda k: q_k_star(ctx, nu, k))
        hit = ctx.memo[key] = DNu(nu, plus, minus)
    return hit


def multilinear_space(ctx: PairingContext) -> OperationBasis:
    """All multilinear operations in ``x_1 .. x_n``, via linear dependences of the ``D_nu``."""
    n = ctx.n
    out = OperationBasis(ctx)
    if n == 1:
        out.elements.append((Polynomial.var(ctx, 1), {(1,): ctx.field.one}))
        return out
    if conforming_product(ctx, range(1, n + 1)) != 1:
        return out
    nus = perm.fixing_first(n)
    ds = [d_nu(ctx, nu) for nu in nus]
    rows: dict = {}
    for nu, d in zip(nus, ds):
        for m, c in d.diff.terms.items():
            rows.setdefault(m, {})[nu] = c
    basis = nullspace([rows[k] for k in sorted(rows)], nus, ctx.field)
    for beta in basis:
        W = Polynomial(ctx)
        for nu, d in zip(nus, ds):
            b = beta.get(nu)
            if b is not None:
                W = W + d.plus.scale(b)
        full = {nu: beta.get(nu, ctx.field.zero) for nu in nus}
        out.elements.append((_verified(ctx, W, "multilinear operation"), full))
    return out


# ---------------------------------------------------------------------------
# trilinear
# ---------------------------------------------------------------------------


def _trilinear_from(pc: PairingContext, ctx: PairingContext, a, b, c) -> Polynomial:
    p = pc.pair
    if conforming_product(pc, [1, 2, 3]) != 1:
        raise Undefined("the three arguments are not conforming")
    for i, j in ((1, 2), (1, 3), (2, 3)):
        if p(i, j) * p(j, i) == 1:
            raise Undefined(f"arguments {i} and {j} form a conforming pair")
    first = skew_commutator(ctx, skew_commutator(ctx, a, b, p(1, 2)), c, p(1, 3) * p(2, 3))
    second = skew_commutator(ctx, skew_commutator(ctx, a, c, p(1, 3)), b, p(1, 2) * p(3, 2))
    coef = ((p(3, 1) * p(3, 2)).inv() - p(1, 3) * p(2, 3)) / (p(3, 1).inv() - p(1, 3))
    return first - second.scale(coef)


def main_trilinear(ctx: PairingContext, a: Polynomial, b: Polynomial, c: Polynomial) -> Polynomial:
    pc = _argument_context(ctx, [a, b, c])
    return _verified(ctx, _trilinear_from(pc, ctx, a, b, c), "main trilinear operation")


def _main_trilinear_vars(ctx: PairingContext, order: Sequence[int]) -> Polynomial:
    xs = _vars(ctx)
    return main_trilinear(ctx, *(xs[i - 1] for i in order))


def direct_trilinear_alpha(ctx: PairingContext, pi: perm.Perm) -> Scalar:
    """``alpha_pi`` read off by comparing the permuted and plain expansions monomialwise."""
    if ctx.n != 3:
        raise ArityMismatch("trilinear symmetry needs three variables")
    base = _main_trilinear_vars(ctx, (1, 2, 3))
    permuted = _main_trilinear_vars(ctx, pi)
    key = next(iter(sorted(base.terms)))
    alpha = permuted.terms.get(key, ctx.field.zero) / base.terms[key]
    if permuted != base.scale(alpha):
        raise ConstructionError(f"permuted trilinear operation is not a multiple for {pi}")
    return alpha


def trilinear_symmetry_coeff(ctx: PairingContext, pi: perm.Perm) -> Scalar:
    """``alpha_pi`` with ``[[x_pi(1), x_pi(2), x_pi(3)]] = alpha_pi [[x_1, x_2, x_3]]``.

    Returns the tabulated closed form after checking it against the direct
    comparison; a disagreement raises instead of being patched over.
    """
    direct = direct_trilinear_alpha(ctx, pi)
    printed = printed_trilinear_alpha(ctx, pi)
    if direct != printed:
        raise ConstructionError(f"tabulated alpha for {perm.cycle_str(tuple(pi))} is {printed}, "
                                f"direct comparison gives {direct}")
    return printed


def printed_trilinear_alpha(ctx: PairingContext, pi: perm.Perm) -> Scalar:
    """The closed forms for ``alpha_pi`` as tabulated in the literature, keyed by cycle notation."""
    p = ctx.pair
    r = p(3, 1) - p(1, 3).inv()
    name = perm.cycle_str(tuple(pi))
    table = {
        "id": lambda: ctx.field.one,
        "(123)": lambda: r / (p(1, 2) - p(2, 1).inv()),
        "(132)": lambda: r / (p(2, 3) - p(3, 2).inv()),
        "(13)": lambda: p(2, 1) * p(3, 2) * p(3, 1),
        "(12)": lambda: p(2, 1) * p(2, 3) * p(1, 3) * r / (p(2, 3) - p(3, 2).inv()),
        "(23)": lambda: p(1, 2) * p(3, 2) * p(1, 3) * r / (p(1, 2) - p(2, 1).inv()),
    }
    return table[name]()


# ---------------------------------------------------------------------------
# quadrilinear
# ---------------------------------------------------------------------------

_ID, _T23, _C234, _T34, _T24, _C243 = perm.fixing_first(4)


def _word_apply(mu: perm.Perm, word: tuple[int, ...]) -> tuple[int, ...]:
    return perm.act_on_word(mu, word)


def quad_system(ctx: PairingContext) -> tuple[list[list[Scalar]], list[list[Scalar]]]:
    """Linear conditions on ``beta`` for ``n = 4``, read off the ``D_nu`` expansions.

    Row ``mu`` of the first block is minus the coefficient of
    ``mu(x2 x1 x3 x4)`` in ``sum beta_nu D_nu``; the second block uses
    ``mu(x4 x3 x1 x2)`` with a plus sign.  Rows and columns follow
    ``perm.fixing_first(4)``.
    """
    if ctx.n != 4:
        raise ArityMismatch("the quadrilinear system needs four variables")
    nus = perm.fixing_first(4)
    ds = [d_nu(ctx, nu).diff for nu in nus]
    first, second = [], []
    for mu in nus:
        w1 = _word_apply(mu, (2, 1, 3, 4))
        w2 = _word_apply(mu, (4, 3, 1, 2))
        first.append([-d.coeff(w1) for d in ds])
        second.append([d.coeff(w2) for d in ds])
    return first, first + second


def quad_system_printed(ctx: PairingContext) -> list[list[Scalar]]:
    """The same 6x6 block written out in braces."""
    if ctx.n != 4:
        raise ArityMismatch("the quadrilinear system needs four variables")
    z = ctx.field.zero

    def b(*pairs):
        return brace(ctx, [(int(s[0]), int(s[1])) for s in pairs])

    return [
        [b("12"), b("12", "32"), b("12", "32", "42"), z, z, z],
        [b("13", "23"), b("13"), z, b("13", "23", "43"), z, z],
        [z, z, b("13"), z, b("13", "43"), b("13", "43", "23")],
        [z, z, z, b("12"), b("12", "42", "32"), b("12", "42")],
        [z, b("14", "34", "24"), b("14", "34"), z, b("14"), z],
        [b("14", "24", "34"), z, z, b("14", "24"), z, b("14")],
    ]


def quad_beta(ctx: PairingContext) -> dict[perm.Perm, Scalar]:
    """Closed-form ``beta_nu`` of the main quadrilinear operation."""
    def b(*pairs):
        return brace(ctx, [(int(s[0]), int(s[1])) for s in pairs])

    one, zero = ctx.field.one, ctx.field.zero
    return {
        _ID: one,
        _T23: zero,
        _C234: -b("12") / b("12", "32", "42"),
        _T34: -b("13", "23") / b("13", "23", "43"),
        _T24: b("12") * b("14", "34") / (b("14") * b("12", "32", "42")),
        _C243: -b("43") * b("14", "24", "34", "13", "23") / (b("14") * b("13", "23", "43")),
    }


def _quad_from(pc: PairingContext, ctx: PairingContext, args: Sequence[Polynomial]) -> Polynomial:
    if conforming_product(pc, range(1, 5)) != 1:
        raise Undefined("the four arguments are not conforming")
    if not gamma4(pc, 1, 4):
        raise Undefined("a brace condition on the pair (1, 4) fails")
    beta = quad_beta(pc)
    W = Polynomial(ctx)
    for nu, bnu in beta.items():
        if bnu.is_zero():
            continue
        W = W + _ladder(ctx, args, nu, lambda k, nu=nu: q_k(pc, nu, k)).scale(bnu)
    return W


def main_quadrilinear(ctx: PairingContext, a1, a2, a3, a4) -> Polynomial:
    args = [a1, a2, a3, a4]
    pc = _argument_context(ctx, args)
    W = _verified(ctx, _quad_from(pc, ctx, args), "main quadrilinear operation")
    if all(isinstance(a, Polynomial) and len(a.terms) == 1 and len(next(iter(a.terms)).word) == 1
           and not any(next(iter(a.terms)).prefix) for a in args) and ctx.n == 4 \
            and [next(iter(a.terms)).word[0] for a in args] == [1, 2, 3, 4]:
        _, rows = quad_system(ctx)
        beta = quad_beta(ctx)
        for row in rows:
            total = ctx.field.zero
            for coef, nu in zip(row, perm.fixing_first(4)):
                total = total + coef * beta[nu]
            if not total.is_zero():
                raise ConstructionError("closed-form beta violates the linear system")
    return W


def _main_quad_vars(ctx: PairingContext, order: Sequence[int]) -> Polynomial:
    xs = _vars(ctx)
    return main_quadrilinear(ctx, *(xs[i - 1] for i in order))


def quad_symmetry(ctx: PairingContext, mu: perm.Perm) -> tuple[Scalar, Scalar]:
    """``(c1, c2)`` with ``[[x_mu(1..4)]] = c1 [[x1, x2, x3, x4]] + c2 [[x1, x3, x2, x4]]``.

    The coefficients are read at ``x1 x2 x3 x4`` and ``x1 x3 x2 x4`` of the
    permuted operation; the identity itself is then checked exactly.
    """
    if ctx.n != 4:
        raise ArityMismatch("quadrilinear symmetry needs four variables")
    for sub in ([1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4],
                [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]):
        if is_conforming(ctx, sub):
            raise Undefined(f"variables {sub} form a conforming subset")
    permuted = _main_quad_vars(ctx, mu)
    c1 = permuted.coeff((1, 2, 3, 4))
    c2 = permuted.coeff((1, 3, 2, 4))
    base = _main_quad_vars(ctx, (1, 2, 3, 4))
    swapped = _main_quad_vars(ctx, (1, 3, 2, 4))
    if permuted != base.scale(c1) + swapped.scale(c2):
        raise ConstructionError(f"permuted quadrilinear operation not spanned for {mu}")
    return c1, c2


# ---------------------------------------------------------------------------
# Pareigis and Serre
# ---------------------------------------------------------------------------


def pareigis(ctx: PairingContext, zeta: Scalar) -> Polynomial:
    """``sum_pi prod_{i<j, pi(i)>pi(j)} zeta^-1 p[pi(j)][pi(i)] x_pi(1)...x_pi(n)``."""
    n = ctx.n
    zeta = ctx.field(zeta)
    if root_of_unity_order(zeta) != n:
        raise PreconditionFailed(f"{zeta} is not a primitive {n}-th root of unity")
    z2 = zeta * zeta
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if ctx.pair(i, j) * ctx.pair(j, i) != z2:
                raise PreconditionFailed(f"p{i}{j} p{j}{i} differs from zeta^2")
    zinv = zeta.inv()
    terms = {}
    for pi in perm.all_perms(n):
        c = ctx.field.one
        for i in range(n):
            for j in range(i + 1, n):
                if pi[i] > pi[j]:
                    c = c * zinv * ctx.pair(pi[j], pi[i])
        terms[Monomial((0,) * n, pi)] = c
    return _verified(ctx, Polynomial(ctx, terms), "Pareigis operation")


def serre(ctx: PairingContext, x: int, y: int, a: int, d: int, q: Scalar) -> Polynomial:
    """``sum_xi (-1)^xi binom(1-a, xi)_{q^(2d)} y^(1-a-xi) x y^xi`` with balanced binomials."""
    if a > 0:
        raise PreconditionFailed("the Cartan entry must be nonpositive")
    q = ctx.field(q)
    want = q ** (2 * d * a)
    if ctx.pair(x, y) != want or ctx.pair(y, x) != want:
        raise PreconditionFailed("cross pairings differ from q^(2 d a)")
    if ctx.pair(y, y) != q ** (4 * d):
        raise PreconditionFailed("self-pairing of y differs from q^(4 d)")
    N = 1 - a
    t = q ** (2 * d)
    terms = {}
    for xi in range(N + 1):
        c = sym_binom(N, xi, t)
        if xi % 2:
            c = -c
        if not c.is_zero():
            terms[Monomial((0,) * ctx.n, (y,) * (N - xi) + (x,) + (y,) * xi)] = c
    return _verified(ctx, Polynomial(ctx, terms), "Serre operation")


# ---------------------------------------------------------------------------
# linear relations
# ---------------------------------------------------------------------------


def express_in_basis(ctx: PairingContext, W: Polynomial, basis: Sequence[Polynomial]) -> list[Scalar] | None:
    """Coefficients ``c`` with ``W = sum c_i basis[i]``, or None if ``W`` is outside the span."""
    return solve_combination([b.terms for b in basis], W.terms, ctx.field)


def linear_relations(ctx: PairingContext, polys: Sequence[Polynomial]) -> list[list[Scalar]]:
    """Basis of ``{xi : sum xi_k polys[k] = 0}``."""
    rows: dict = {}
    for k, P in enumerate(polys):
        for m, c in P.terms.items():
            rows.setdefault(m, {})[k] = c
    basis = nullspace([rows[m] for m in sorted(rows)], list(range(len(polys))), ctx.field)
    return [[v.get(k, ctx.field.zero) for k in range(len(polys))] for v in basis]


def gaussian_coefficients(n: int, t: Scalar) -> list[Scalar]:
    return [gauss_binom(n, k, t) for k in range(n + 1)]
