"""Exact verifiers for structural identities among the constructed operations.

Each verifier returns an :class:`IdentityResult`; ``residual`` holds the
nonzero difference (rendered) when the identity fails.  Verifiers that need
a particular regime accept an optional context and fall back to a built-in
fixture when none is given.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import coeff, perm
from .freealg import Polynomial, braided_coefficients, right_form_coefficients
from .ops import (
    ConstructionError,
    PreconditionFailed,
    binary_ladder,
    linear_relations,
    main_bilinear,
    main_quadrilinear,
    main_trilinear,
    pareigis,
    quad_symmetry,
)
from .coeff import root_of_unity_order
from .pairing import PairingContext, brace, pareigis_context, pareigis_zeta, symbolic_context


@dataclass
class IdentityResult:
    name: str
    ok: bool
    residual: str = ""
    detail: str = ""


def _result(name: str, diff: Polynomial, detail: str = "") -> IdentityResult:
    return IdentityResult(name, diff.is_zero(), "" if diff.is_zero() else str(diff), detail)


def skew_symmetric_symbolic(n: int) -> PairingContext:
    """Symbols ``p[i][j]`` for ``i < j`` with ``p[j][i] = p[i][j]^-1`` and unit diagonal."""
    names = [f"p[{i}][{j}]" for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    F = coeff.rational_functions(coeff.rationals(), names)
    p = [[F.one] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            s = F.symbol(f"p[{i + 1}][{j + 1}]")
            p[i][j], p[j][i] = s, s.inv()
    return PairingContext(F, tuple(map(tuple, p)))


def _xs(ctx: PairingContext) -> list[Polynomial]:
    return [Polynomial.var(ctx, i) for i in range(1, ctx.n + 1)]


def power_ladder(ctx: PairingContext | None = None, m: int = 3) -> IdentityResult:
    """``[x y^m]_{p12^m}`` equals the length-m ladder when ``p12 p21 = p22`` has order m."""
    if ctx is None:
        F = coeff.cyclotomic(m)
        p22 = F.gen
        p12 = F(Fraction(5, 3)) * F.gen ** 2
        ctx = PairingContext(F, ((F.one, p12), (p22 / p12, p22)))
    if ctx.n < 2:
        raise PreconditionFailed("need two variables")
    p12, p21, p22 = ctx.pair(1, 2), ctx.pair(2, 1), ctx.pair(2, 2)
    m = root_of_unity_order(p22)
    if m is None or m < 2 or p12 * p21 != p22:
        raise PreconditionFailed("need p22 a primitive root of unity with p12 p21 = p22")
    x, y = Polynomial.var(ctx, 1), Polynomial.var(ctx, 2)
    lhs = x * y ** m - (y ** m * x).scale(p12 ** m)
    return _result("power-ladder", lhs - binary_ladder(ctx, 1, 2, m), f"m = {m}")


def antisymmetry(ctx: PairingContext | None = None) -> IdentityResult:
    """``[[a, b]] = -chi^a(g_b) [[b, a]]``."""
    ctx = ctx or skew_symmetric_symbolic(2)
    a, b = _xs(ctx)[:2]
    lhs = main_bilinear(ctx, a, b)
    rhs = main_bilinear(ctx, b, a).scale(-ctx.pair(1, 2))
    return _result("antisymmetry", lhs - rhs)


def color_jacobi_terms(ctx: PairingContext) -> list[Polynomial]:
    """``[[a,[[b,c]]]], [[c,[[a,b]]]], [[b,[[c,a]]]]`` on the first three variables."""
    a, b, c = _xs(ctx)[:3]

    def br(u, v):
        return main_bilinear(ctx, u, v)

    return [br(a, br(b, c)), br(c, br(a, b)), br(b, br(c, a))]


def color_jacobi(ctx: PairingContext | None = None) -> IdentityResult:
    """``chi^a(g_c)[[a,[[b,c]]]] + chi^c(g_b)[[c,[[a,b]]]] + chi^b(g_a)[[b,[[c,a]]]] = 0``.

    This weighting holds when every pairing is 1 or -1 but not in general;
    :func:`color_jacobi_transposed` is the form that always holds.
    """
    ctx = ctx or skew_symmetric_symbolic(3)
    p = ctx.pair
    t = color_jacobi_terms(ctx)
    return _result("color-jacobi", t[0].scale(p(1, 3)) + t[1].scale(p(3, 2)) + t[2].scale(p(2, 1)))


def color_jacobi_transposed(ctx: PairingContext | None = None) -> IdentityResult:
    """``chi^c(g_a)[[a,[[b,c]]]] + chi^b(g_c)[[c,[[a,b]]]] + chi^a(g_b)[[b,[[c,a]]]] = 0``."""
    ctx = ctx or skew_symmetric_symbolic(3)
    p = ctx.pair
    t = color_jacobi_terms(ctx)
    return _result("color-jacobi-transposed",
                   t[0].scale(p(3, 1)) + t[1].scale(p(2, 3)) + t[2].scale(p(1, 2)))


def case_two_fixture() -> PairingContext:
    """Rational context with every triple conforming and no pair conforming."""
    P = {(1, 2): Fraction(2), (1, 3): Fraction(3), (2, 3): Fraction(1, 6),
         (1, 4): Fraction(1, 6), (2, 4): Fraction(3), (3, 4): Fraction(2)}
    return products_fixture(P)


def products_fixture(products: dict, field=None) -> PairingContext:
    """Context whose products ``p_ij p_ji`` are prescribed; ``p_ij`` itself is an arbitrary split."""
    F = field or coeff.rationals()
    n = max(max(k) for k in products)
    p = [[F.one] * n for _ in range(n)]
    for (i, j), v in products.items():
        a = F(Fraction(i + 2 * j, j + 1))
        p[i - 1][j - 1] = a
        p[j - 1][i - 1] = F(v) / a
    return PairingContext(F, tuple(map(tuple, p)))


def jacobi4_terms(ctx: PairingContext) -> list[Polynomial]:
    """``sigma^k([[ [[x1, x2, x3]], x4 ]])`` for ``k = 0..3`` and ``sigma = (1234)``."""
    xs = _xs(ctx)
    sigma = perm.from_cycles(4, (1, 2, 3, 4))
    out = []
    s = perm.identity(4)
    for _ in range(4):
        a, b, c, d = (xs[s[i] - 1] for i in range(4))
        out.append(main_bilinear(ctx, main_trilinear(ctx, a, b, c), d))
        s = perm.compose(sigma, s)
    return out


def jacobi4(ctx: PairingContext | None = None) -> IdentityResult:
    """The four cyclic shifts satisfy exactly one linear relation, up to scale."""
    ctx = ctx or case_two_fixture()
    rel = linear_relations(ctx, jacobi4_terms(ctx))
    detail = "xi = " + ("; ".join("(" + ", ".join(map(str, r)) + ")" for r in rel) or "none")
    return IdentityResult("jacobi4", len(rel) == 1, "" if len(rel) == 1 else f"{len(rel)} relations", detail)


def quad_symmetries(ctx: PairingContext | None = None) -> IdentityResult:
    """Every permuted main quadrilinear operation lies in the span of two fixed ones."""
    ctx = ctx or pareigis_context(4)
    lines = []
    for mu in perm.all_perms(4):
        try:
            c1, c2 = quad_symmetry(ctx, mu)
        except ConstructionError as exc:
            return IdentityResult("quad-symmetry", False, str(exc), "\n".join(lines))
        lines.append(f"{perm.cycle_str(mu)}: ({c1}, {c2})")
    return IdentityResult("quad-symmetry", True, "", "\n".join(lines))


def pareigis4(ctx: PairingContext | None = None) -> IdentityResult:
    """``P_4 = [[x1, x2, x3, x4]] + zeta^-1 p23 [[x1, x3, x2, x4]]``."""
    ctx = ctx or pareigis_context(4)
    zeta = pareigis_zeta(ctx)
    x1, x2, x3, x4 = _xs(ctx)
    P = pareigis(ctx, zeta)
    rhs = main_quadrilinear(ctx, x1, x2, x3, x4) + \
        main_quadrilinear(ctx, x1, x3, x2, x4).scale(zeta.inv() * ctx.pair(2, 3))
    return _result("pareigis4", P - rhs)


def _random_brace_word(rng: random.Random, n: int, length: int) -> list[tuple[int, int]]:
    return [(rng.randint(1, n), rng.randint(1, n)) for _ in range(length)]


def brace_identity(ctx: PairingContext | None = None, trials: int = 25, seed: int = 0) -> IdentityResult:
    """``{CE}{D Ebar} - {C}{D} = {C D Ebar}{E}`` for random words ``C, D, E``."""
    ctx = ctx or symbolic_context(3)
    rng = random.Random(seed)
    for _ in range(trials):
        C, D, E = (_random_brace_word(rng, ctx.n, rng.randint(0, 3)) for _ in range(3))
        Ebar = [(j, i) for i, j in E]
        lhs = brace(ctx, C + E) * brace(ctx, D + Ebar) - brace(ctx, C) * brace(ctx, D)
        rhs = brace(ctx, C + D + Ebar) * brace(ctx, E)
        if lhs != rhs:
            return IdentityResult("brace", False, str(lhs - rhs), f"C={C} D={D} E={E}")
    return IdentityResult("brace", True, "", f"{trials} random word triples")


def braided_equivalence(ctx: PairingContext | None = None, trials: int = 100,
                        max_len: int = 6, seed: int = 0) -> IdentityResult:
    """Braided coproduct coefficients agree with the right-form coefficients."""
    ctx = ctx or symbolic_context(3)
    rng = random.Random(seed)
    for _ in range(trials):
        w = tuple(rng.randint(1, ctx.n) for _ in range(rng.randint(1, max_len)))
        a, b = braided_coefficients(ctx, w), right_form_coefficients(ctx, w)
        if a != b:
            return IdentityResult("braided", False, f"word {w}: {a} vs {b}")
    return IdentityResult("braided", True, "", f"{trials} random words")


VERIFIERS = {
    "power-ladder": power_ladder,
    "antisymmetry": antisymmetry,
    "color-jacobi": color_jacobi,
    "color-jacobi-transposed": color_jacobi_transposed,
    "jacobi4": jacobi4,
    "quad-symmetry": quad_symmetries,
    "pareigis4": pareigis4,
    "brace": brace_identity,
    "braided": braided_equivalence,
}
