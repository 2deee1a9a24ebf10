"""Command-line front end.

Exit codes: 0 success, 1 usage or unknown preset, 2 parse error, 3 zero
pairing entry, 4 oracle disagreement, 5 polynomial not group homogeneous,
6 operation undefined or precondition failed, 7 identity failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import coeff, identities, ops, pairing, primcheck
from ._expr import ParseError
from .freealg import Polynomial, braided_coproduct, coproduct, parse_polynomial
from .linalg import same_span

EXIT_PARSE, EXIT_ZERO, EXIT_ORACLE, EXIT_HOMOG, EXIT_UNDEFINED, EXIT_IDENTITY = 2, 3, 4, 5, 6, 7

PRESETS = ("symbolic", "quantum-plane", "heisenberg", "drinfeld-jimbo", "color", "pareigis")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _pair_arg(text: str) -> tuple[int, int]:
    i, j = (int(t) for t in text.replace("(", "").replace(")", "").split(","))
    return i, j


def build_preset(name: str, args: argparse.Namespace) -> pairing.PairingContext:
    n = args.n
    if name == "symbolic":
        return pairing.symbolic_context(n or 2, constrain=args.constrain, diagonal=not args.no_diagonal)
    if name == "quantum-plane":
        return pairing.quantum_plane()
    if name == "heisenberg":
        return pairing.heisenberg()
    if name == "drinfeld-jimbo":
        return pairing.drinfeld_jimbo(pairing.cartan_matrix(args.cartan), with_k=args.with_k)
    if name == "color":
        if not args.table:
            raise CliError("the color preset needs --table", 1)
        F = coeff.field_from_spec(args.field) if args.field else coeff.rationals()
        table = [[F.parse(v) for v in row.split(",")] for row in args.table.split(";")]
        return pairing.color(table, F)
    if name == "pareigis":
        return pairing.pareigis_context(n or 4, args.m)
    raise CliError(f"unknown preset {name!r}; choose from {', '.join(PRESETS)}", 1)


def load_context(args: argparse.Namespace) -> pairing.PairingContext:
    if args.context and args.preset:
        raise CliError("give either --context or --preset, not both", 1)
    if args.context:
        return pairing.loads_context(Path(args.context).read_text())
    if args.preset:
        return build_preset(args.preset, args)
    raise CliError("a context is required: --context FILE or --preset NAME", 1)


def _var_index(ctx: pairing.PairingContext, token: str) -> int:
    if token in ctx.names:
        return ctx.names.index(token) + 1
    t = token[1:] if token[:1] == "x" else token
    if t.isdigit() and 1 <= int(t) <= ctx.n:
        return int(t)
    raise ParseError(f"unknown variable {token!r}")


def _index_list(ctx, text: str | None, default: list[int]) -> list[int]:
    if not text:
        return default
    return [_var_index(ctx, t) for t in text.replace(",", " ").split()]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_space(args, out) -> int:
    ctx = load_context(args)
    basis = ops.multilinear_space(ctx)
    head = f"dim {basis.dimension}"
    code = 0
    if args.oracle:
        oracle = primcheck.brute_force_multilinear_space(ctx)
        agree = oracle.dimension == basis.dimension and same_span(
            [w.terms for w in basis], [w.terms for w in oracle])
        head += " AGREE" if agree else " DISAGREE"
        code = 0 if agree else EXIT_ORACLE
    print(head, file=out)
    if not args.dim_only:
        for w in basis:
            print(w, file=out)
    return code


def cmd_check(args, out) -> int:
    ctx = load_context(args)
    W = parse_polynomial(ctx, args.polynomial)
    if W.is_zero():
        raise CliError("the zero polynomial has no group degree", EXIT_HOMOG)
    report = primcheck.is_skew_primitive(ctx, W)
    print("primitive" if report.verdict else "not-primitive", file=out)
    if not report.verdict:
        print(f"defect: {report.defect}", file=out)
    if args.wrt:
        x = _var_index(ctx, args.wrt)
        name = ctx.names[x - 1]
        left = primcheck.is_left_primitive_wrt(ctx, W, x)
        right = primcheck.is_right_primitive_wrt(ctx, W, x)
        print(f"left-primitive wrt {name}: {'yes' if left else 'no'}", file=out)
        print(f"right-primitive wrt {name}: {'yes' if right else 'no'}", file=out)
    return 0


def _arguments(ctx, args, default: list[int]) -> list[Polynomial]:
    if args.arg:
        return [parse_polynomial(ctx, a) for a in args.arg]
    return [Polynomial.var(ctx, i) for i in _index_list(ctx, args.vars, default)]


def cmd_construct(args, out) -> int:
    ctx = load_context(args)
    kind = args.kind
    if kind == "unary":
        (a,) = _arguments(ctx, args, [1])
        W = ops.main_unary(ctx, a)
    elif kind == "binary":
        if args.n_y is None:
            raise CliError("binary needs --degree", 1)
        x, y = _index_list(ctx, args.vars, [1, 2])
        W = ops.binary_one_linear(ctx, x, y, args.n_y)
        if W is None:
            raise ops.Undefined(f"no operation of degree {args.n_y} in {ctx.names[y - 1]} "
                                f"linear in {ctx.names[x - 1]}")
    elif kind == "bilinear":
        W = ops.main_bilinear(ctx, *_arguments(ctx, args, [1, 2]))
    elif kind == "trilinear":
        W = ops.main_trilinear(ctx, *_arguments(ctx, args, [1, 2, 3]))
    elif kind == "quadrilinear":
        W = ops.main_quadrilinear(ctx, *_arguments(ctx, args, [1, 2, 3, 4]))
    elif kind == "pareigis":
        if args.zeta:
            zeta = ctx.field.parse(args.zeta)
        elif isinstance(ctx.field, coeff.Cyclotomic) and ctx.field.m % ctx.n == 0:
            zeta = pairing.pareigis_zeta(ctx)
        else:
            raise CliError("pareigis needs --zeta outside cyclotomic fields", 1)
        W = ops.pareigis(ctx, zeta)
    elif kind == "serre":
        x, y = _index_list(ctx, args.vars, [1, 2])
        if args.a is None or args.q is None:
            raise CliError("serre needs --a and --q", 1)
        W = ops.serre(ctx, x, y, args.a, args.d, ctx.field.parse(args.q))
    else:  # argparse restricts the choices
        raise CliError(f"unknown kind {kind!r}", 1)
    print(W, file=out)
    return 0


def cmd_expand(args, out) -> int:
    ctx = load_context(args)
    W = parse_polynomial(ctx, args.polynomial)
    print(W, file=out)
    if args.coproduct:
        print(coproduct(ctx, W), file=out)
    if args.braided:
        print(braided_coproduct(ctx, W), file=out)
    return 0


def cmd_verify(args, out) -> int:
    fn = identities.VERIFIERS.get(args.identity)
    if fn is None:
        raise CliError(f"unknown identity {args.identity!r}; choose from "
                       f"{', '.join(identities.VERIFIERS)}", 1)
    ctx = load_context(args) if (args.context or args.preset) else None
    result = fn(ctx)
    print(f"{result.name}: {'pass' if result.ok else 'FAIL'}", file=out)
    if result.detail:
        print(result.detail, file=out)
    if not result.ok:
        print(f"residual: {result.residual}", file=out)
        return EXIT_IDENTITY
    return 0


def cmd_preset(args, out) -> int:
    args.preset, args.context = args.name, None
    out.write(pairing.dumps_context(load_context(args)))
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _context_options(p: argparse.ArgumentParser, with_source: bool = True) -> None:
    if with_source:
        p.add_argument("--context", help="context file")
        p.add_argument("--preset", help=f"preset name ({', '.join(PRESETS)})")
    p.add_argument("--n", type=int, help="number of variables (symbolic, pareigis)")
    p.add_argument("--m", type=int, help="cyclotomic order (pareigis)")
    p.add_argument("--constrain", type=_pair_arg, help="eliminate entry i,j (symbolic)")
    p.add_argument("--no-diagonal", action="store_true", help="unit diagonal (symbolic)")
    p.add_argument("--cartan", default="A2", help="Cartan type, e.g. A2, B3, G2")
    p.add_argument("--with-k", action="store_true", help="include the K generators")
    p.add_argument("--table", help="bicharacter rows separated by ';' (color)")
    p.add_argument("--field", help="coefficient field for --table")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewprim", description="Quantum operations on skew primitive elements.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("space", help="basis of multilinear operations")
    _context_options(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force solver")
    p.add_argument("--dim-only", action="store_true")
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("check", help="skew primitivity of a polynomial")
    _context_options(p)
    p.add_argument("polynomial")
    p.add_argument("--wrt", help="also test left/right primitivity with respect to this variable")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="build a named operation")
    _context_options(p)
    p.add_argument("kind", choices=["unary", "binary", "bilinear", "trilinear", "quadrilinear",
                                    "pareigis", "serre"])
    p.add_argument("--vars", help="variables to use, e.g. '1,2' or 'x1 x3'")
    p.add_argument("--arg", action="append", help="argument polynomial (repeatable)")
    p.add_argument("--degree", dest="n_y", type=int, help="degree in y (binary)")
    p.add_argument("--zeta", help="root of unity (pareigis)")
    p.add_argument("--a", type=int, help="Cartan entry a_ij (serre)")
    p.add_argument("--d", type=int, default=1, help="symmetrizer d_i (serre)")
    p.add_argument("--q", help="deformation parameter (serre)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("expand", help="canonical form and coproducts of a polynomial")
    _context_options(p)
    p.add_argument("polynomial")
    p.add_argument("--coproduct", action="store_true")
    p.add_argument("--braided", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check an identity exactly")
    _context_options(p)
    p.add_argument("identity", help=", ".join(identities.VERIFIERS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("preset", help="print a preset context file")
    p.add_argument("name", help=", ".join(PRESETS))
    _context_options(p, with_source=False)
    p.set_defaults(func=cmd_preset)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except pairing.ZeroPairing as exc:
        print(f"context error: {exc}", file=sys.stderr)
        return EXIT_ZERO
    except primcheck.NotGroupHomogeneous as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HOMOG
    except (ops.Undefined, ops.PreconditionFailed) as exc:
        print(f"undefined: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
