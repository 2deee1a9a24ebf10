"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line with its timing
and a short detail.  Criteria that cannot be met as stated are marked
``xfail(strict=True)``: the line still says FAIL and the reason records why.

Run on its own with ``pytest tests/test_acceptance.py -s`` or
``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import random_cyclotomic_context  # noqa: E402
from skewprim import coeff, identities, ops, perm  # noqa: E402
from skewprim.freealg import (  # noqa: E402
    Polynomial,
    braided_coefficients,
    coassociativity_sides,
    coproduct,
    counit_sides,
    right_form_coefficients,
    total_degree,
)
from skewprim.linalg import rank, same_span  # noqa: E402
from skewprim.pairing import PairingContext, pareigis_context, pareigis_zeta, symbolic_context  # noqa: E402
from skewprim.primcheck import brute_force_multilinear_space, is_skew_primitive  # noqa: E402

Q = coeff.rationals()


def _emit(number, ok, elapsed, detail, capsys=None):
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s) {detail}"
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)


def _run(number, check, budget, capsys=None):
    start = time.perf_counter()
    ok, detail = check()
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        ok, detail = False, f"{detail}; over the {budget}s budget"
    _emit(number, ok, elapsed, detail, capsys)
    return ok, detail


def _xs(ctx):
    return [Polynomial.var(ctx, i) for i in range(1, ctx.n + 1)]


def _oracle_agrees(ctx):
    a = ops.multilinear_space(ctx)
    b = brute_force_multilinear_space(ctx)
    return a.dimension == b.dimension and same_span([w.terms for w in a], [w.terms for w in b]), a.dimension


# ---------------------------------------------------------------------------


def check_unary():
    bad = []
    for m in range(1, 13):
        F = coeff.cyclotomic(m)
        ctx = PairingContext(F, ((F.gen,),))
        for n in range(2, 13):
            prim = is_skew_primitive(ctx, Polynomial.word(ctx, (1,) * n)).verdict
            if prim != (n == m):
                bad.append(f"cyclotomic({m}) n={n}")
    for l in (2, 3, 5):
        F = coeff.prime_char(l)
        ctx = PairingContext(F, ((F.one,),))
        powers = {l ** r for r in range(4)}
        for n in range(1, 13):
            prim = is_skew_primitive(ctx, Polynomial.word(ctx, (1,) * n)).verdict
            if prim != (n in powers):
                bad.append(f"prime_char({l}) n={n}")
    return not bad, "x^n for n <= 12 over 12 cyclotomic and 3 prime fields" + (f"; wrong: {bad}" if bad else "")


def _ladder_condition(n):
    F = coeff.rational_functions(Q, ["p11", "p12", "p22"])
    p11, p12, p22 = F.symbols()
    return PairingContext(F, ((p11, p12), (p22 ** (1 - n) / p12, p22)))


def check_binary():
    issues = []
    for n in range(1, 6):
        ctx = _ladder_condition(n)
        W = ops.binary_ladder(ctx, 1, 2, n)
        if W != ops.binary_ladder_dual(ctx, 1, 2, n):
            issues.append(f"n={n}: ladders differ")
        cs = ops.binary_ladder_coefficients(ctx, 1, 2, n)
        if any(W.coeff((2,) * (n - j) + (1,) + (2,) * j) != c for j, c in enumerate(cs)):
            issues.append(f"n={n}: coefficients differ from the product polynomial")
        if not is_skew_primitive(ctx, W).verdict:
            issues.append(f"n={n}: nonzero defect")
        for name, space in (("recurrence", ops.binary_recurrence_space(ctx, 1, 2, n)),
                            ("full", ops.binary_brute_force(ctx, 1, 2, n))):
            if len(space) != 1 or not same_span([space[0].terms], [W.terms]):
                issues.append(f"n={n}: {name} solve gives dimension {len(space)}")
    return not issues, "n = 1..5 symbolic" + (f"; {issues}" if issues else "")


def check_power_ladder():
    results = {m: identities.power_ladder(m=m).ok for m in (2, 3, 4, 5)}
    return all(results.values()), f"m -> ok: {results}"


def check_trilinear():
    ctx = symbolic_context(3, constrain=(2, 1))
    basis = ops.multilinear_space(ctx)
    one = basis.dimension == 1 and basis.polynomials[0] == ops.main_trilinear(ctx, *_xs(ctx))
    agree1, _ = _oracle_agrees(ctx)
    num = identities.products_fixture({(1, 2): 1, (1, 3): 1, (2, 3): 1})
    a, b, c = _xs(num)
    br = lambda u, v: ops.main_bilinear(num, u, v)
    nb = ops.multilinear_space(num)
    two = nb.dimension == 2 and same_span([w.terms for w in nb], [br(a, br(b, c)).terms, br(b, br(c, a)).terms])
    agree2, _ = _oracle_agrees(num)
    ok = one and two and agree1 and agree2
    return ok, f"symbolic dim 1 with closed form: {one}; conforming pairs dim 2: {two}; oracle: {agree1 and agree2}"


def check_quadrilinear():
    ctx = symbolic_context(4, constrain=(2, 1))
    basis = ops.multilinear_space(ctx)
    dim_ok = basis.dimension == 2
    W, beta = basis.elements[0]
    beta_ok = beta == ops.quad_beta(ctx)
    first, ext = ops.quad_system(ctx)
    qb = ops.quad_beta(ctx)
    nus = perm.fixing_first(4)
    eq_ok = all(sum((c * qb[nu] for c, nu in zip(row, nus)), ctx.field.zero) == 0 for row in ext)
    minors_ok = all(first[r][i] * ext[6 + r][j] - first[r][j] * ext[6 + r][i] == 0
                    for r in range(6) for i in range(6) for j in range(i + 1, 6))
    cols = list(range(6))
    vec = lambda row: {k: v for k, v in enumerate(row) if v != 0}
    rank_ok = rank([vec(r) for r in first], cols) == rank([vec(r) for r in ext], cols) == 4
    ok = dim_ok and beta_ok and eq_ok and minors_ok and rank_ok
    return ok, (f"dim 2: {dim_ok}; beta closed form: {beta_ok}; 12 equations: {eq_ok}; "
                f"cross-minors: {minors_ok}; rank 6 = rank 12: {rank_ok}")


CENSUS = [
    ("case 1", {(1, 2): 1, (1, 3): 1, (2, 3): 1, (1, 4): 1, (2, 4): 1, (3, 4): 1}, {6}),
    ("case 2", "case-two", {3, 4}),
    ("case 3", None, {2}),
    ("case 4", {(1, 2): 2, (1, 3): 3, (2, 3): 1, (1, 4): 1, (2, 4): Fraction(1, 2), (3, 4): Fraction(1, 3)}, {2, 3}),
    ("case 4b", {(1, 2): 2, (1, 3): 1, (2, 3): 1, (1, 4): 1, (2, 4): Fraction(1, 2), (3, 4): 1}, {2, 3}),
    ("case 5", {(1, 2): 1, (1, 3): 1, (1, 4): 1, (2, 3): 2, (2, 4): 3, (3, 4): Fraction(1, 6)}, {3}),
]


def _find_three_triples(trials=4000, seed=1):
    """Search small products for exactly three conforming triples with prod P = 1."""
    rng = random.Random(seed)
    vals = [Fraction(1), Fraction(2), Fraction(1, 2), Fraction(3), Fraction(1, 3), Fraction(6), Fraction(1, 6)]
    for _ in range(trials):
        P = {k: rng.choice(vals) for k in [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4)]}
        P[(3, 4)] = 1 / (P[(1, 2)] * P[(1, 3)] * P[(2, 3)] * P[(1, 4)] * P[(2, 4)])
        T = [P[(i, j)] * P[(i, k)] * P[(j, k)] for i, j, k in [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)]]
        if sum(t == 1 for t in T) == 3:
            return P
    return None


def check_census():
    parts, ok = [], True
    for name, products, dims in CENSUS:
        if products is None:
            found = _find_three_triples()
            parts.append(f"{name}: no fixture exists" if found is None else f"{name}: fixture {found}")
            ok = ok and found is not None
            continue
        ctx = identities.case_two_fixture() if products == "case-two" else identities.products_fixture(products)
        agree, dim = _oracle_agrees(ctx)
        good = agree and dim in dims
        ok = ok and good
        parts.append(f"{name}: dim {dim}{'' if good else ' (unexpected)'}")
    return ok, "; ".join(parts)


def check_oracle_equivalence():
    bad, total = [], 0
    for n in (2, 3, 4):
        rng = random.Random(100 + n)
        for k in range(50):
            ctx = random_cyclotomic_context(rng, n)
            agree, _ = _oracle_agrees(ctx)
            total += 1
            if not agree:
                bad.append((n, k))
    return not bad, f"{total} contexts" + (f"; disagree: {bad}" if bad else "")


def check_pareigis():
    prim = {}
    for n in (2, 3, 4):
        ctx = pareigis_context(n)
        prim[n] = is_skew_primitive(ctx, ops.pareigis(ctx, pareigis_zeta(ctx))).verdict
    dec = identities.pareigis4().ok
    return all(prim.values()) and dec, f"primitive: {prim}; four-variable decomposition: {dec}"


def check_braided():
    rng = random.Random(9)
    ctx = symbolic_context(3)
    bad = 0
    for _ in range(100):
        w = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 6)))
        if braided_coefficients(ctx, w) != right_form_coefficients(ctx, w):
            bad += 1
    return bad == 0, f"100 random words, mismatches: {bad}"


def check_hopf():
    rng = random.Random(10)
    ctx = symbolic_context(3)
    bad = []
    for _ in range(25):
        w = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 5)))
        g = tuple(rng.randint(0, 1) for _ in range(3))
        a = Polynomial.word(ctx, w, prefix=g)
        lhs, rhs = coassociativity_sides(ctx, a)
        if lhs != rhs:
            bad.append(("coassociativity", w))
        left, right = counit_sides(ctx, a)
        if not left == a == right:
            bad.append(("counit", w))
        d = coproduct(ctx, a)
        if total_degree(d) != (len(w), True) or any(total_degree(d, x) != (w.count(x), True) for x in (1, 2, 3)):
            bad.append(("homogeneity", w))
    return not bad, "25 random words, symbolic pairings" + (f"; {bad}" if bad else "")


def check_bilinear():
    anti = identities.antisymmetry().ok
    jac = identities.color_jacobi().ok
    jac_t = identities.color_jacobi_transposed().ok
    j4 = identities.jacobi4()
    ok = anti and jac and j4.ok
    return ok, (f"antisymmetry: {anti}; three-term Jacobi as weighted: {jac} "
                f"(transposed weights: {jac_t}); four-term relation one-dimensional: {j4.ok}")


def check_char_two():
    F = coeff.rational_functions(coeff.prime_char(2), ["p12"])
    p12 = F.symbol("p12")
    ctx = PairingContext(F, ((F.one, p12), (p12, p12 ** -2)))
    p22 = ctx.pair(2, 2)
    W = ops.binary_one_linear(ctx, 1, 2, 2)
    expected = (Polynomial.word(ctx, (1, 2, 2)) + Polynomial.word(ctx, (2, 1, 2), p12 + p12 * p22)
                + Polynomial.word(ctx, (2, 2, 1)))
    ok = W is not None and W == expected and is_skew_primitive(ctx, W).verdict
    return ok, f"result: {W}"


CASE_THREE = (
    "No context realises exactly three conforming triples: the four triple products multiply to the "
    "square of the full product, which is 1, so three triples at 1 force the fourth. The stated "
    "dimension for that case cannot be exhibited; the other cases agree with the oracle.")

PRINTED_JACOBI = (
    "The three-term Jacobi identity weighted by chi^a(g_c), chi^c(g_b), chi^b(g_a) leaves a nonzero "
    "residual for generic pairings with p_ij p_ji = 1; it holds with the transposed weights "
    "chi^c(g_a), chi^b(g_c), chi^a(g_b), and the two agree when every pairing is +-1.")

CRITERIA = [
    (1, check_unary, 5, None),
    (2, check_binary, 10, None),
    (3, check_power_ladder, None, None),
    (4, check_trilinear, 10, None),
    (5, check_quadrilinear, 60, None),
    (6, check_census, 60, CASE_THREE),
    (7, check_oracle_equivalence, 120, None),
    (8, check_pareigis, None, None),
    (9, check_braided, None, None),
    (10, check_hopf, None, None),
    (11, check_bilinear, None, PRINTED_JACOBI),
    (12, check_char_two, None, None),
]


def _param(number, check, budget, reason):
    marks = [pytest.mark.xfail(strict=True, reason=reason)] if reason else []
    return pytest.param(number, check, budget, id=f"criterion-{number:02d}", marks=marks)


@pytest.mark.parametrize("number,check,budget", [_param(*c) for c in CRITERIA])
def test_criterion(number, check, budget, capsys):
    ok, detail = _run(number, check, budget, capsys)
    assert ok, detail


if __name__ == "__main__":
    failures = 0
    for number, check, budget, _ in CRITERIA:
        ok, _ = _run(number, check, budget)
        failures += not ok
    sys.exit(1 if failures else 0)
