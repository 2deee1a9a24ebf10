"""Skew-primitivity tests and the brute-force oracle for multilinear operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import perm
from .freealg import Monomial, Polynomial, TensorPolynomial, _accumulate, _group_of, coproduct
from .linalg import nullspace
from .pairing import PairingContext

__all__ = [
    "NotGroupHomogeneous",
    "VariableAbsent",
    "ArityTooLarge",
    "NotLeftPrimitive",
    "PrimitivityReport",
    "OperationBasis",
    "group_degree",
    "is_skew_primitive",
    "is_left_primitive_wrt",
    "is_right_primitive_wrt",
    "brute_force_multilinear_space",
    "decompose_left_primitive",
]

ORACLE_MAX_ARITY = 5


class NotGroupHomogeneous(ValueError):
    pass


class VariableAbsent(ValueError):
    pass


class ArityTooLarge(ValueError):
    pass


class NotLeftPrimitive(ValueError):
    def __init__(self, message: str, obstruction: TensorPolynomial):
        super().__init__(message)
        self.obstruction = obstruction


@dataclass
class PrimitivityReport:
    verdict: bool
    defect: TensorPolynomial
    group_degree: tuple[int, ...]

    def __bool__(self):
        return self.verdict


@dataclass
class OperationBasis:
    """Spanning polynomials of an operation space with their D+ coordinates."""

    ctx: PairingContext
    elements: list[tuple[Polynomial, dict[tuple[int, ...], Any]]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def polynomials(self) -> list[Polynomial]:
        return [w for w, _ in self.elements]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.polynomials)


def group_degree(W: Polynomial) -> tuple[int, ...]:
    gs = W.group_degrees()
    if len(gs) != 1:
        raise NotGroupHomogeneous(f"polynomial has {len(gs)} distinct group degrees")
    return next(iter(gs))


def _unit_monomial(n: int) -> Monomial:
    return Monomial((0,) * n, ())


def _minus_w_tensor_one(terms: dict, W: Polynomial) -> None:
    one = _unit_monomial(W.ctx.n)
    for m, c in W.terms.items():
        _accumulate(terms, (m, one), -c)


def _minus_g_tensor_w(terms: dict, W: Polynomial, g: tuple[int, ...]) -> None:
    gm = Monomial(g, ())
    for m, c in W.terms.items():
        _accumulate(terms, (gm, m), -c)


def is_skew_primitive(ctx: PairingContext, W: Polynomial) -> PrimitivityReport:
    """Compute ``Delta(W) - W (x) 1 - g_W (x) W`` exactly."""
    if W.is_zero():
        raise ValueError("the zero polynomial carries no group degree")
    g = group_degree(W)
    terms = dict(coproduct(ctx, W).terms)
    _minus_w_tensor_one(terms, W)
    _minus_g_tensor_w(terms, W, g)
    defect = TensorPolynomial(ctx, terms)
    return PrimitivityReport(defect.is_zero(), defect, g)


def _require_var(W: Polynomial, x: int) -> None:
    if not any(x in m.word for m in W.terms):
        raise VariableAbsent(f"variable {x} does not occur in the polynomial")


def left_defect(ctx: PairingContext, W: Polynomial, x: int) -> TensorPolynomial:
    """Part of ``Delta(W) - W (x) 1`` with ``x`` in the left factor."""
    _require_var(W, x)
    terms = dict(coproduct(ctx, W).terms)
    _minus_w_tensor_one(terms, W)
    return TensorPolynomial(ctx, terms).filter(lambda l, r: x in l.word)


def right_defect(ctx: PairingContext, W: Polynomial, x: int) -> TensorPolynomial:
    """Part of ``Delta(W) - g_W (x) W`` with ``x`` in the right factor."""
    _require_var(W, x)
    g = group_degree(W)
    terms = dict(coproduct(ctx, W).terms)
    _minus_g_tensor_w(terms, W, g)
    return TensorPolynomial(ctx, terms).filter(lambda l, r: x in r.word)


def is_left_primitive_wrt(ctx: PairingContext, W: Polynomial, x: int) -> bool:
    return left_defect(ctx, W, x).is_zero()


def is_right_primitive_wrt(ctx: PairingContext, W: Polynomial, x: int) -> bool:
    return right_defect(ctx, W, x).is_zero()


def d_plus_word(nu: perm.Perm) -> tuple[int, ...]:
    """The word ``x_1 x_nu(2) ... x_nu(n)`` whose coefficient is ``beta_nu``."""
    return tuple(nu)


def brute_force_multilinear_space(ctx: PairingContext) -> OperationBasis:
    """Solve for all ``W = sum_pi alpha_pi x_pi(1)...x_pi(n)`` with zero defect.

    Every coefficient of the defect is a linear form in the unknowns
    ``alpha_pi``; the null space of those forms is returned in reduced
    echelon form with columns ordered lexicographically by one-line notation.
    """
    n = ctx.n
    if n > ORACLE_MAX_ARITY:
        raise ArityTooLarge(f"brute force supports at most {ORACLE_MAX_ARITY} variables")
    perms = perm.all_perms(n)
    g = _group_of(n, range(1, n + 1))
    one = _unit_monomial(n)
    gm = Monomial(g, ())
    equations: dict = {}
    for pi in perms:
        w = Polynomial.word(ctx, pi)
        t = dict(coproduct(ctx, w).terms)
        m = Monomial((0,) * n, tuple(pi))
        _accumulate(t, (m, one), -ctx.field.one)
        _accumulate(t, (gm, m), -ctx.field.one)
        for key, c in t.items():
            equations.setdefault(key, {})[pi] = c
    rows = [equations[k] for k in sorted(equations)]
    basis = nullspace(rows, perms, ctx.field)
    out = OperationBasis(ctx)
    for v in basis:
        W = Polynomial(ctx, {Monomial((0,) * n, pi): c for pi, c in v.items()})
        beta = {nu: W.coeff(d_plus_word(nu)) for nu in perm.fixing_first(n)}
        out.elements.append((W, beta))
    return out


def decompose_left_primitive(ctx: PairingContext, W: Polynomial) -> dict[tuple[int, ...], Any]:
    """``beta_nu`` with ``W = sum beta_nu D+_nu`` for a W left primitive w.r.t. ``x_1``.

    The coefficients are read off at ``x_1 x_nu(2) ... x_nu(n)``; the
    reconstruction is then checked term by term.
    """
    from .ops import d_nu  # deferred: ops builds on this module

    obstruction = left_defect(ctx, W, 1)
    if not obstruction.is_zero():
        raise NotLeftPrimitive("not left primitive w.r.t. x1", obstruction)
    beta = {nu: W.coeff(d_plus_word(nu)) for nu in perm.fixing_first(ctx.n)}
    rebuilt = Polynomial(ctx)
    for nu, b in beta.items():
        if not b.is_zero():
            rebuilt = rebuilt + d_nu(ctx, nu).plus.scale(b)
    if rebuilt != W:
        raise NotLeftPrimitive("left primitive but not in the span of the D+ ladders",
                               TensorPolynomial(ctx))
    return beta
