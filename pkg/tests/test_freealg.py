import random

import pytest
from hypothesis import given, strategies as st

from skewprim import coeff
from skewprim._expr import ParseError
from skewprim.freealg import (
    GroupPrefixPresent,
    MixedContext,
    Monomial,
    Polynomial,
    TensorPolynomial,
    WordTooLong,
    antipode,
    braided_coefficients,
    braided_coproduct,
    coassociativity_sides,
    convolve_antipode,
    coproduct,
    coproduct_right_form,
    counit,
    counit_sides,
    degree,
    left_degree,
    multiply,
    parse_polynomial,
    right_degree,
    right_form_coefficients,
    skew_commutator,
)
from skewprim.freealg import total_degree
from skewprim.pairing import q_k, symbolic_context
from skewprim import perm
from skewprim.coeff import gauss_binom

from conftest import cyclotomic_contexts

S3 = symbolic_context(3)
p = S3.pair
Z3 = (0, 0, 0)


def mono(prefix, word):
    return Monomial(tuple(prefix), tuple(word))


def words(n, max_len=5):
    return st.lists(st.integers(1, n), min_size=0, max_size=max_len).map(tuple)


def random_poly(ctx, rng, terms=3, max_len=4, prefixes=True):
    out = Polynomial.zero(ctx)
    for _ in range(terms):
        w = tuple(rng.randint(1, ctx.n) for _ in range(rng.randint(0, max_len)))
        g = tuple(rng.randint(0, 2) for _ in range(ctx.n)) if prefixes else None
        out = out + Polynomial.word(ctx, w, rng.randint(-3, 3), g)
    return out


# --- independent coproduct: multiply Delta(x_i) = x_i (x) 1 + g_i (x) x_i in H (x) H ---


def tensor_mul(ctx, s, t):
    out = TensorPolynomial(ctx)
    for (a, b), c in s.terms.items():
        for (u, v), d in t.terms.items():
            left = multiply(ctx, Polynomial(ctx, {a: c}), Polynomial(ctx, {u: d}))
            right = multiply(ctx, Polynomial(ctx, {b: ctx.field.one}), Polynomial(ctx, {v: ctx.field.one}))
            out = out + TensorPolynomial.from_pair(left, right)
    return out


def delta_by_products(ctx, word, prefix=None):
    n = ctx.n
    zero = (0,) * n
    g = tuple(prefix) if prefix else zero
    out = TensorPolynomial(ctx, {(mono(g, ()), mono(g, ())): ctx.field.one})
    for x in word:
        gx = tuple(1 if j == x - 1 else 0 for j in range(n))
        dx = TensorPolynomial(ctx, {(mono(zero, (x,)), mono(zero, ())): ctx.field.one,
                                    (mono(gx, ()), mono(zero, (x,))): ctx.field.one})
        out = tensor_mul(ctx, out, dx)
    return out


def braided_by_products(ctx, word):
    # (a (x) b)(c (x) d) = chi^c(g_b)^-1 ac (x) bd on prefix-free words
    terms = {((), ()): ctx.field.one}
    for x in word:
        nxt = {}
        for (a, b), c in terms.items():
            for key, f in (((a + (x,), b), ctx.field.one), ((a, b + (x,)), None)):
                if f is None:
                    f = ctx.field.one
                else:
                    for y in b:
                        f = f * ctx.pair(x, y).inv()
                nxt[key] = nxt.get(key, ctx.field.zero) + c * f
        terms = nxt
    zero = (0,) * ctx.n
    return TensorPolynomial(ctx, {(mono(zero, a), mono(zero, b)): c for (a, b), c in terms.items()
                                  if not c.is_zero()})


# --- multiplication -------------------------------------------------------------


def test_letter_passes_group_element():
    x1 = Polynomial.var(S3, 1)
    g2 = Polynomial.group(S3, (0, 1, 0))
    assert x1 * g2 == Polynomial(S3, {mono((0, 1, 0), (1,)): p(1, 2)})


def test_unit_and_concatenation():
    a = parse_polynomial(S3, "x1 x2 - 3 * g1 * x3")
    assert Polynomial.one(S3) * a == a == a * Polynomial.one(S3)
    assert Polynomial.word(S3, (1, 2)) * Polynomial.var(S3, 3) == Polynomial.word(S3, (1, 2, 3))


def test_mixed_context():
    with pytest.raises(MixedContext):
        Polynomial.var(S3, 1) + Polynomial.var(symbolic_context(2), 1)


@given(ctx=cyclotomic_contexts(3, conforming=False), seed=st.integers(0, 10 ** 6))
def test_associativity(ctx, seed):
    rng = random.Random(seed)
    a, b, c = (random_poly(ctx, rng, 2, 3) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_skew_commutator_examples():
    x1, x2 = Polynomial.var(S3, 1), Polynomial.var(S3, 2)
    assert skew_commutator(S3, x1, x2, p(1, 2)) == Polynomial.word(S3, (1, 2)) - Polynomial.word(S3, (2, 1), p(1, 2))
    a = x1 * x2 + x1
    assert skew_commutator(S3, a, a, 1) == 0


def test_iterated_commutator_terminal_coefficient():
    xs = [Polynomial.var(S3, i) for i in (1, 2, 3)]
    ident = (1, 2, 3)
    W = skew_commutator(S3, skew_commutator(S3, xs[0], xs[1], q_k(S3, ident, 2)), xs[2], q_k(S3, ident, 3))
    # (ab - q ba) c - q' c (ab - q ba): four words
    assert W.words() == [(1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1)]
    assert W.coeff((3, 2, 1)) == p(1, 2) * p(1, 3) * p(2, 3)


@given(ctx=cyclotomic_contexts(2, conforming=False), seed=st.integers(0, 10 ** 6))
def test_skew_commutator_bilinear(ctx, seed):
    rng = random.Random(seed)
    a, b, c = (random_poly(ctx, rng, 2, 2) for _ in range(3))
    f = ctx.field.gen ** rng.randint(0, 5)
    assert skew_commutator(ctx, a + b, c, f) == skew_commutator(ctx, a, c, f) + skew_commutator(ctx, b, c, f)
    assert skew_commutator(ctx, a, b.scale(3), f) == skew_commutator(ctx, a, b, f).scale(3)


# --- coproducts ------------------------------------------------------------------


def test_coproduct_of_variable():
    d = coproduct(S3, Polynomial.var(S3, 1))
    assert d == TensorPolynomial(S3, {(mono(Z3, (1,)), mono(Z3, ())): S3.field.one,
                                      (mono((1, 0, 0), ()), mono(Z3, (1,))): S3.field.one})


def test_coproduct_of_two_letters():
    d = coproduct(S3, Polynomial.word(S3, (1, 2)))
    one = S3.field.one
    expected = TensorPolynomial(S3, {
        (mono(Z3, (1, 2)), mono(Z3, ())): one,
        (mono((1, 0, 0), (2,)), mono(Z3, (1,))): one,
        (mono((0, 1, 0), (1,)), mono(Z3, (2,))): p(1, 2),
        (mono((1, 1, 0), ()), mono(Z3, (1, 2))): one,
    })
    assert d == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_coproduct_of_power_is_gaussian(n):
    ctx = symbolic_context(1)
    d = coproduct(ctx, Polynomial.word(ctx, (1,) * n))
    assert len(d.terms) == n + 1
    for k in range(n + 1):
        assert d.coeff(mono((k,), (1,) * (n - k)), mono((0,), (1,) * k)) == gauss_binom(n, k, ctx.pair(1, 1))


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3), g=st.lists(st.integers(0, 2), min_size=3, max_size=3))
def test_coproduct_matches_product_of_generators(ctx, w, g):
    assert coproduct(ctx, Polynomial.word(ctx, w, prefix=g)) == delta_by_products(ctx, w, g)


def test_coproduct_matches_product_of_generators_symbolically():
    for w in [(1, 2, 3), (2, 1, 1), (3, 1, 2, 1)]:
        assert coproduct(S3, Polynomial.word(S3, w)) == delta_by_products(S3, w)


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3, 6))
def test_right_form_equals_coproduct(ctx, w):
    a = Polynomial.word(ctx, w)
    assert coproduct_right_form(ctx, a) == coproduct(ctx, a)


def test_right_form_coefficient_example():
    assert right_form_coefficients(S3, (1, 2))[0b01] == p(2, 1).inv()
    x1 = Polynomial.var(S3, 1)
    assert coproduct_right_form(S3, x1) == coproduct(S3, x1)


def test_braided_examples():
    one = S3.field.one
    assert braided_coproduct(S3, Polynomial.var(S3, 1)) == TensorPolynomial(S3, {
        (mono(Z3, (1,)), mono(Z3, ())): one, (mono(Z3, ()), mono(Z3, (1,))): one})
    assert braided_coproduct(S3, Polynomial.word(S3, (1, 2))) == TensorPolynomial(S3, {
        (mono(Z3, (1, 2)), mono(Z3, ())): one,
        (mono(Z3, (2,)), mono(Z3, (1,))): p(2, 1).inv(),
        (mono(Z3, (1,)), mono(Z3, (2,))): one,
        (mono(Z3, ()), mono(Z3, (1, 2))): one,
    })
    with pytest.raises(GroupPrefixPresent):
        braided_coproduct(S3, Polynomial.group(S3, (1, 0, 0)))


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3, 6))
def test_braided_matches_tensor_products(ctx, w):
    assert braided_coproduct(ctx, Polynomial.word(ctx, w)) == braided_by_products(ctx, w)


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3, 6))
def test_braided_coefficients_are_right_form(ctx, w):
    assert braided_coefficients(ctx, w) == right_form_coefficients(ctx, w)


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3, 5), seed=st.integers(0, 99))
def test_coassociativity(ctx, w, seed):
    g = tuple(random.Random(seed).randint(0, 1) for _ in range(3))
    lhs, rhs = coassociativity_sides(ctx, Polynomial.word(ctx, w, prefix=g))
    assert lhs == rhs


@given(ctx=cyclotomic_contexts(2, conforming=False), seed=st.integers(0, 10 ** 6))
def test_counit_axiom(ctx, seed):
    a = random_poly(ctx, random.Random(seed))
    left, right = counit_sides(ctx, a)
    assert left == a == right


@given(ctx=cyclotomic_contexts(3, conforming=False), w=words(3, 5))
def test_coproduct_is_homogeneous(ctx, w):
    d = coproduct(ctx, Polynomial.word(ctx, w))
    assert total_degree(d) == (len(w), True)
    for x in (1, 2, 3):
        assert total_degree(d, x) == (w.count(x), True)


def test_word_length_cap():
    ctx = symbolic_context(1)
    with pytest.raises(WordTooLong):
        coproduct(ctx, Polynomial.word(ctx, (1,) * 17))


# --- counit, antipode, degrees ---------------------------------------------------------


def test_counit_and_antipode():
    assert counit(Polynomial.word(S3, (1, 2), prefix=(1, 0, 0))) == 0
    assert counit(Polynomial.group(S3, (2, 1, 0))) == 1
    assert antipode(S3, Polynomial.var(S3, 1)) == Polynomial(S3, {mono((-1, 0, 0), (1,)): -S3.field.one})
    left, right = convolve_antipode(S3, Polynomial.var(S3, 1))
    assert left == 0 and right == 0


@given(ctx=cyclotomic_contexts(2, conforming=False), w=words(2, 4))
def test_antipode_axiom(ctx, w):
    a = Polynomial.word(ctx, w, prefix=(1, 0))
    left, right = convolve_antipode(ctx, a)
    expected = Polynomial.const(ctx, counit(a))
    assert left == expected == right


def test_degrees():
    a = Polynomial.word(S3, (1, 2, 1), prefix=(1, 0, 0))
    assert degree(a) == (3, True)
    assert degree(a, 1) == (2, True)
    assert degree(a + Polynomial.var(S3, 2)) == (3, False)
    t = TensorPolynomial.from_pair(Polynomial.word(S3, (1, 2)), Polynomial.one(S3))
    assert left_degree(t) == (2, True) and right_degree(t) == (0, True)
    assert left_degree(t, 2) == (1, True)


# --- text form --------------------------------------------------------------------------


@given(ctx=cyclotomic_contexts(3, conforming=False), seed=st.integers(0, 10 ** 6))
def test_text_round_trip(ctx, seed):
    a = random_poly(ctx, random.Random(seed))
    assert parse_polynomial(ctx, str(a)) == a


def test_text_round_trip_symbolic():
    a = parse_polynomial(S3, "(p[1][2] + 1)/p[2][1] * g1^2 g3 * x1 x2 - x3 + 7")
    assert parse_polynomial(S3, str(a)) == a
    assert str(parse_polynomial(S3, "x1 x2")) == "x1 x2"


def test_bracket_syntax():
    assert parse_polynomial(S3, "[x1, x2]_p[1][2]") == skew_commutator(
        S3, Polynomial.var(S3, 1), Polynomial.var(S3, 2), p(1, 2))


@pytest.mark.parametrize("text", ["x1 +", "g7", "x1 / x2", "[x1, x2]_x3", "(x1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(S3, text)


def test_word_action_renames_letters():
    a = Polynomial.word(S3, (1, 2, 2), 5)
    assert a.act(perm.from_cycles(3, (1, 2, 3))) == Polynomial.word(S3, (2, 3, 3), 5)


def test_polynomial_over_prime_field():
    ctx = symbolic_context(2)
    F = coeff.prime_char(3)
    from skewprim.pairing import PairingContext
    pc = PairingContext(F, ((F(1), F(2)), (F(2), F(1))))
    x = Polynomial.var(pc, 1)
    assert (x * 3) == 0
    assert ctx.n == 2
