"""The free enveloping algebra over a pairing context.

Elements are finite linear combinations of monomials ``g w`` where ``g`` is a
group element (integer exponent vector) and ``w`` a word in the variables.
The canonical form keeps the group part on the left, using
``x g = chi^x(g) g x``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, NamedTuple

from . import _expr
from .coeff import Scalar
from .pairing import PairingContext

__all__ = [
    "MixedContext",
    "GroupPrefixPresent",
    "WordTooLong",
    "Monomial",
    "Polynomial",
    "TensorPolynomial",
    "multiply",
    "skew_commutator",
    "coproduct",
    "coproduct_coefficients",
    "coproduct_right_form",
    "right_form_coefficients",
    "braided_coproduct",
    "braided_coefficients",
    "counit",
    "antipode",
    "convolve_antipode",
    "degree",
    "left_degree",
    "right_degree",
    "coassociativity_sides",
    "counit_sides",
    "parse_polynomial",
]

MAX_WORD = 16


class MixedContext(ValueError):
    pass


class GroupPrefixPresent(ValueError):
    pass


class WordTooLong(ValueError):
    pass


class Monomial(NamedTuple):
    prefix: tuple[int, ...]
    word: tuple[int, ...]


def _chi_letter(ctx: PairingContext, x: int, g: tuple[int, ...]) -> Scalar:
    key = ("chi", x, g)
    memo = ctx.memo
    v = memo.get(key)
    if v is None:
        v = ctx.field.one
        for j, e in enumerate(g, start=1):
            if e:
                v = v * ctx.pair(x, j) ** e
        memo[key] = v
    return v


def _chi_word(ctx: PairingContext, word: tuple[int, ...], g: tuple[int, ...]) -> Scalar:
    if not any(g):
        return ctx.field.one
    key = ("chiw", word, g)
    memo = ctx.memo
    v = memo.get(key)
    if v is None:
        v = ctx.field.one
        for x in word:
            v = v * _chi_letter(ctx, x, g)
        memo[key] = v
    return v


def _add_vec(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _group_of(n: int, word: Iterable[int]) -> tuple[int, ...]:
    g = [0] * n
    for x in word:
        g[x - 1] += 1
    return tuple(g)


def _accumulate(terms: dict, key, c: Scalar) -> None:
    old = terms.get(key)
    if old is None:
        if not c.is_zero():
            terms[key] = c
    else:
        new = old + c
        if new.is_zero():
            del terms[key]
        else:
            terms[key] = new


class Polynomial:
    """Linear combination of monomials; zero coefficients are never stored."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PairingContext, terms: dict | None = None):
        self.ctx = ctx
        self.terms: dict[Monomial, Scalar] = terms if terms is not None else {}

    # construction ------------------------------------------------------
    @classmethod
    def zero(cls, ctx: PairingContext) -> "Polynomial":
        return cls(ctx)

    @classmethod
    def one(cls, ctx: PairingContext) -> "Polynomial":
        return cls.const(ctx, ctx.field.one)

    @classmethod
    def const(cls, ctx: PairingContext, c) -> "Polynomial":
        c = ctx.field(c)
        e = Monomial((0,) * ctx.n, ())
        return cls(ctx, {} if c.is_zero() else {e: c})

    @classmethod
    def var(cls, ctx: PairingContext, i: int) -> "Polynomial":
        if not 1 <= i <= ctx.n:
            raise IndexError(f"variable index {i} out of range 1..{ctx.n}")
        return cls(ctx, {Monomial((0,) * ctx.n, (i,)): ctx.field.one})

    @classmethod
    def word(cls, ctx: PairingContext, word: Iterable[int], coef=1,
             prefix: Iterable[int] | None = None) -> "Polynomial":
        word = tuple(word)
        if any(not 1 <= i <= ctx.n for i in word):
            raise IndexError(f"word {word} uses an index outside 1..{ctx.n}")
        prefix = tuple(prefix) if prefix is not None else (0,) * ctx.n
        c = ctx.field(coef)
        return cls(ctx, {} if c.is_zero() else {Monomial(prefix, word): c})

    @classmethod
    def group(cls, ctx: PairingContext, g: Iterable[int]) -> "Polynomial":
        return cls(ctx, {Monomial(tuple(g), ()): ctx.field.one})

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise MixedContext("polynomials belong to different contexts")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return Polynomial.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        terms = dict(self.terms)
        for k, c in o.terms.items():
            _accumulate(terms, k, c)
        return Polynomial(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = self.ctx.field(c)
        if c.is_zero():
            return Polynomial(self.ctx)
        return Polynomial(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self.ctx, self, other)
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1:
                (m, c), = self.terms.items()
                if not m.word:
                    g = tuple(e * k for e in m.prefix)
                    return Polynomial(self.ctx, {Monomial(g, ()): c ** k})
            raise ValueError("only group elements may be raised to negative powers")
        out = Polynomial.one(self.ctx)
        for _ in range(k):
            out = multiply(self.ctx, out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # inspection ---------------------------------------------------------
    def coeff(self, word: Iterable[int], prefix: Iterable[int] | None = None) -> Scalar:
        prefix = tuple(prefix) if prefix is not None else (0,) * self.ctx.n
        return self.terms.get(Monomial(prefix, tuple(word)), self.ctx.field.zero)

    def items(self) -> Iterator[tuple[Monomial, Scalar]]:
        for k in sorted(self.terms):
            yield k, self.terms[k]

    def words(self) -> list[tuple[int, ...]]:
        return sorted({m.word for m in self.terms})

    def group_degrees(self) -> set[tuple[int, ...]]:
        """The set of ``g_w`` (prefix times letter weights) over all monomials."""
        n = self.ctx.n
        return {_add_vec(m.prefix, _group_of(n, m.word)) for m in self.terms}

    def act(self, perm) -> "Polynomial":
        """Rename variables letterwise, ``x_i -> x_{perm(i)}``; coefficients untouched."""
        if any(any(m.prefix) for m in self.terms):
            raise GroupPrefixPresent("renaming applies to prefix-free polynomials")
        out = {}
        for m, c in self.terms.items():
            out[Monomial(m.prefix, tuple(perm[i - 1] for i in m.word))] = c
        return Polynomial(self.ctx, out)

    def map_coefficients(self, f) -> "Polynomial":
        out = {}
        for m, c in self.terms.items():
            _accumulate(out, m, f(c))
        return Polynomial(self.ctx, out)

    # text ----------------------------------------------------------------
    def __str__(self):
        return _render_terms(self.ctx, ((_render_monomial(self.ctx, m), c) for m, c in self.items()))

    def __repr__(self):
        return f"Polynomial({self})"


def _render_monomial(ctx: PairingContext, m: Monomial) -> str:
    parts = []
    grp = " ".join(
        f"g{j}" if e == 1 else f"g{j}^{e}" for j, e in enumerate(m.prefix, start=1) if e
    )
    if grp:
        parts.append(grp)
    if m.word:
        parts.append(" ".join(ctx.names[i - 1] for i in m.word))
    return " * ".join(parts)


def _render_terms(ctx: PairingContext, terms) -> str:
    out = []
    for body, c in terms:
        s = str(c)
        neg = s.lstrip("(").startswith("-")
        if neg:
            c = -c
            s = str(c)
        if not body:
            piece = s
        elif c == 1:
            piece = body
        else:
            if not c.is_atomic():
                s = f"({s})"
            piece = f"{s} * {body}"
        if not out:
            out.append(("-" if neg else "") + piece)
        else:
            out.append((" - " if neg else " + ") + piece)
    return "".join(out) or "0"


class TensorPolynomial:
    """Linear combination of ``monomial (x) monomial`` pairs."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: PairingContext, terms: dict | None = None):
        self.ctx = ctx
        self.terms: dict[tuple[Monomial, Monomial], Scalar] = terms if terms is not None else {}

    @classmethod
    def from_pair(cls, a: Polynomial, b: Polynomial) -> "TensorPolynomial":
        terms: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _accumulate(terms, (m1, m2), c1 * c2)
        return cls(a.ctx, terms)

    def __add__(self, other: "TensorPolynomial"):
        terms = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(terms, k, c)
        return TensorPolynomial(self.ctx, terms)

    def __neg__(self):
        return TensorPolynomial(self.ctx, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "TensorPolynomial"):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, TensorPolynomial):
            return self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        for k in sorted(self.terms):
            yield k, self.terms[k]

    def filter(self, pred) -> "TensorPolynomial":
        return TensorPolynomial(self.ctx, {k: c for k, c in self.terms.items() if pred(k[0], k[1])})

    def coeff(self, left: Monomial, right: Monomial) -> Scalar:
        return self.terms.get((left, right), self.ctx.field.zero)

    def __str__(self):
        def side(m):
            return _render_monomial(self.ctx, m) or "1"

        return _render_terms(self.ctx, ((f"{side(a)} ⊗ {side(b)}", c) for (a, b), c in self.items()))

    def __repr__(self):
        return f"TensorPolynomial({self})"


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------


def multiply(ctx: PairingContext, a: Polynomial, b: Polynomial) -> Polynomial:
    """``(g w)(h v) = chi^w(h) (g h)(w v)``, extended bilinearly."""
    a._check(b)
    terms: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            c = c1 * c2
            if any(m2.prefix):
                c = c * _chi_word(ctx, m1.word, m2.prefix)
            _accumulate(terms, Monomial(_add_vec(m1.prefix, m2.prefix), m1.word + m2.word), c)
    return Polynomial(ctx, terms)


def skew_commutator(ctx: PairingContext, a: Polynomial, b: Polynomial, p) -> Polynomial:
    """``[a, b]_p = a b - p b a``."""
    return multiply(ctx, a, b) - multiply(ctx, b, a).scale(p)


# ---------------------------------------------------------------------------
# coproducts
# ---------------------------------------------------------------------------


def _check_len(word) -> None:
    if len(word) > MAX_WORD:
        raise WordTooLong(f"words longer than {MAX_WORD} letters are not expanded")


def _delta_word(ctx: PairingContext, word: tuple[int, ...]) -> dict:
    """Coproduct of a prefix-free word, as ``(left word, right word) -> coefficient``.

    Multiplies ``x (x) 1 + g_x (x) x`` letter by letter; moving ``g_y`` to the
    front of the left factor past a letter ``x`` costs ``p[x][y]``.
    """
    key = ("delta", word)
    memo = ctx.memo
    hit = memo.get(key)
    if hit is not None:
        return hit
    _check_len(word)
    one = ctx.field.one
    states: dict = {((), ()): one}
    for y in word:
        nxt: dict = {}
        for (left, right), c in states.items():
            _accumulate(nxt, (left + (y,), right), c)
            f = _chi_left(ctx, left, y)
            _accumulate(nxt, (left, right + (y,)), c * f)
        states = nxt
    memo[key] = states
    return states


def _chi_left(ctx: PairingContext, left: tuple[int, ...], y: int) -> Scalar:
    """``prod_{x in left} p[x][y]``, memoised on letter counts."""
    counts = _group_of(ctx.n, left)
    key = ("lp", counts, y)
    memo = ctx.memo
    v = memo.get(key)
    if v is None:
        v = ctx.field.one
        for x, e in enumerate(counts, start=1):
            if e:
                v = v * ctx.pair(x, y) ** e
        memo[key] = v
    return v


def coproduct(ctx: PairingContext, a: Polynomial) -> TensorPolynomial:
    """``Delta(g w) = (g (x) g) * sum_v alpha_v g_v [w - v] (x) v``."""
    n = ctx.n
    terms: dict = {}
    for m, c in a.terms.items():
        g = m.prefix
        for (left, right), alpha in _delta_word(ctx, m.word).items():
            lm = Monomial(_add_vec(g, _group_of(n, right)), left)
            rm = Monomial(g, right)
            _accumulate(terms, (lm, rm), c * alpha)
    return TensorPolynomial(ctx, terms)


def _masks(word):
    _check_len(word)
    L = len(word)
    for mask in range(1 << L):
        yield mask, tuple(word[i] for i in range(L) if not mask >> i & 1), \
            tuple(word[i] for i in range(L) if mask >> i & 1)


def coproduct_coefficients(ctx: PairingContext, word) -> dict[int, Scalar]:
    """``alpha_v`` for every subword ``v`` (bit ``i`` of the mask = position ``i`` in ``v``).

    ``alpha_v`` is the product of ``p[x][y]`` over letters ``x`` outside ``v``
    standing left of letters ``y`` in ``v``.
    """
    word = tuple(word)
    out = {}
    for mask, _, _ in _masks(word):
        c = ctx.field.one
        for j, y in enumerate(word):
            if mask >> j & 1:
                for i in range(j):
                    if not mask >> i & 1:
                        c = c * ctx.pair(word[i], y)
        out[mask] = c
    return out


def right_form_coefficients(ctx: PairingContext, word) -> dict[int, Scalar]:
    """``alpha'_v``: product of ``p[x][y]^-1`` over ``x`` outside ``v`` standing right of ``y`` in ``v``.

    These are the coefficients when the grouplike part ``g_v`` is written to
    the right of ``[w - v]``.
    """
    word = tuple(word)
    out = {}
    for mask, _, _ in _masks(word):
        c = ctx.field.one
        for j, y in enumerate(word):
            if mask >> j & 1:
                for i in range(j + 1, len(word)):
                    if not mask >> i & 1:
                        c = c * ctx.pair(word[i], y)
        out[mask] = c.inv()
    return out


def coproduct_right_form(ctx: PairingContext, a: Polynomial) -> TensorPolynomial:
    """Coproduct assembled from ``alpha'_v``, then normalised.

    ``[w - v] g_v = chi^{[w - v]}(g_v) g_v [w - v]`` moves the grouplike left.
    """
    n = ctx.n
    terms: dict = {}
    for m, c in a.terms.items():
        g = m.prefix
        coefs = right_form_coefficients(ctx, m.word)
        for mask, rest, sub in _masks(m.word):
            gv = _group_of(n, sub)
            alpha = coefs[mask] * _chi_word(ctx, rest, gv)
            lm = Monomial(_add_vec(g, gv), rest)
            _accumulate(terms, (lm, Monomial(g, sub)), c * alpha)
    return TensorPolynomial(ctx, terms)


def braided_coefficients(ctx: PairingContext, word) -> dict[int, Scalar]:
    """Per-subword coefficients of ``prod (x (x) 1 + 1 (x) x)`` in the braided tensor product.

    The product is expanded letter by letter with
    ``(a (x) b)(c (x) d) = chi^c(g_b)^-1 ac (x) bd``.
    """
    word = tuple(word)
    _check_len(word)
    n = ctx.n
    states = {0: ctx.field.one}
    for pos, y in enumerate(word):
        nxt = {}
        for mask, c in states.items():
            right = tuple(word[i] for i in range(pos) if mask >> i & 1)
            # (a (x) b)(y (x) 1): y passes b
            nxt[mask] = c * _chi_word(ctx, (y,), _group_of(n, right)).inv()
            # (a (x) b)(1 (x) y): nothing to pass
            nxt[mask | 1 << pos] = c
        states = nxt
    return states


def braided_coproduct(ctx: PairingContext, a: Polynomial) -> TensorPolynomial:
    """Braided coproduct of a prefix-free polynomial; both sides prefix-free."""
    n = ctx.n
    zero = (0,) * n
    terms: dict = {}
    for m, c in a.terms.items():
        if any(m.prefix):
            raise GroupPrefixPresent("the braided coproduct takes prefix-free polynomials")
        coefs = braided_coefficients(ctx, m.word)
        for mask, rest, sub in _masks(m.word):
            _accumulate(terms, (Monomial(zero, rest), Monomial(zero, sub)), c * coefs[mask])
    return TensorPolynomial(ctx, terms)


# ---------------------------------------------------------------------------
# counit and antipode
# ---------------------------------------------------------------------------


def counit(a: Polynomial) -> Scalar:
    out = a.ctx.field.zero
    for m, c in a.terms.items():
        if not m.word:
            out = out + c
    return out


def antipode(ctx: PairingContext, a: Polynomial) -> Polynomial:
    """``S(g) = g^-1``, ``S(x_i) = -g_i^-1 x_i``, anti-multiplicative."""
    n = ctx.n
    out = Polynomial(ctx)
    for m, c in a.terms.items():
        acc = Polynomial.one(ctx)
        for x in reversed(m.word):
            gx = tuple(-1 if j == x - 1 else 0 for j in range(n))
            sx = Polynomial(ctx, {Monomial(gx, (x,)): -ctx.field.one})
            acc = multiply(ctx, acc, sx)
        acc = multiply(ctx, acc, Polynomial.group(ctx, tuple(-e for e in m.prefix)))
        out = out + acc.scale(c)
    return out


def convolve_antipode(ctx: PairingContext, a: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(m (S (x) id) Delta(a), m (id (x) S) Delta(a))``; both equal ``eps(a) 1``."""
    t = coproduct(ctx, a)
    left = Polynomial(ctx)
    right = Polynomial(ctx)
    for (m1, m2), c in t.terms.items():
        p1 = Polynomial(ctx, {m1: c})
        p2 = Polynomial(ctx, {m2: ctx.field.one})
        left = left + multiply(ctx, antipode(ctx, p1), p2)
        right = right + multiply(ctx, p1, antipode(ctx, p2))
    return left, right


# ---------------------------------------------------------------------------
# degrees
# ---------------------------------------------------------------------------


def _deg(word, var):
    return len(word) if var is None else sum(1 for x in word if x == var)


def degree(a: Polynomial, var: int | None = None) -> tuple[int, bool]:
    """``d`` (or ``d^(x)`` with ``var``): maximum over monomials and a homogeneity flag."""
    vals = {_deg(m.word, var) for m in a.terms}
    if not vals:
        return 0, True
    return max(vals), len(vals) == 1


def left_degree(t: TensorPolynomial, var: int | None = None) -> tuple[int, bool]:
    vals = {_deg(l.word, var) for l, _ in t.terms}
    return (max(vals), len(vals) == 1) if vals else (0, True)


def right_degree(t: TensorPolynomial, var: int | None = None) -> tuple[int, bool]:
    vals = {_deg(r.word, var) for _, r in t.terms}
    return (max(vals), len(vals) == 1) if vals else (0, True)


def total_degree(t: TensorPolynomial, var: int | None = None) -> tuple[int, bool]:
    """``d_+ = d_l + d_r``."""
    vals = {_deg(l.word, var) + _deg(r.word, var) for l, r in t.terms}
    return (max(vals), len(vals) == 1) if vals else (0, True)


# ---------------------------------------------------------------------------
# Hopf axioms
# ---------------------------------------------------------------------------


def _delta_monomial(ctx: PairingContext, m: Monomial) -> dict:
    return coproduct(ctx, Polynomial(ctx, {m: ctx.field.one})).terms


def coassociativity_sides(ctx: PairingContext, a: Polynomial) -> tuple[dict, dict]:
    """``(Delta (x) id) Delta(a)`` and ``(id (x) Delta) Delta(a)`` as triple-tensor maps."""
    t = coproduct(ctx, a)
    lhs: dict = {}
    rhs: dict = {}
    for (m1, m2), c in t.terms.items():
        for (u1, u2), d in _delta_monomial(ctx, m1).items():
            _accumulate(lhs, (u1, u2, m2), c * d)
        for (v1, v2), d in _delta_monomial(ctx, m2).items():
            _accumulate(rhs, (m1, v1, v2), c * d)
    return lhs, rhs


def counit_sides(ctx: PairingContext, a: Polynomial) -> tuple[Polynomial, Polynomial]:
    """``(eps (x) id) Delta(a)`` and ``(id (x) eps) Delta(a)``."""
    t = coproduct(ctx, a)
    left: dict = {}
    right: dict = {}
    for (m1, m2), c in t.terms.items():
        if not m1.word:
            _accumulate(left, m2, c)
        if not m2.word:
            _accumulate(right, m1, c)
    return Polynomial(ctx, left), Polynomial(ctx, right)


# ---------------------------------------------------------------------------
# text
# ---------------------------------------------------------------------------


_PAIR_NAME = re.compile(r"p\[(\d+)\]\[(\d+)\]")


class _PolyBuilder:
    def __init__(self, ctx: PairingContext):
        self.ctx = ctx
        self.index = {nm: i for i, nm in enumerate(ctx.names, start=1)}
        for i in range(1, ctx.n + 1):
            self.index.setdefault(f"x{i}", i)

    def number(self, digits):
        return Polynomial.const(self.ctx, int(digits))

    def name(self, name):
        ctx = self.ctx
        if name in self.index:
            return Polynomial.var(ctx, self.index[name])
        if name[0] == "g" and name[1:].isdigit():
            j = int(name[1:])
            if not 1 <= j <= ctx.n:
                raise _expr.ParseError(f"group generator {name} out of range")
            return Polynomial.group(ctx, tuple(1 if k == j else 0 for k in range(1, ctx.n + 1)))
        pm = _PAIR_NAME.fullmatch(name)
        if pm:
            i, j = int(pm.group(1)), int(pm.group(2))
            if 1 <= i <= ctx.n and 1 <= j <= ctx.n:
                return Polynomial.const(ctx, ctx.pair(i, j))
        return Polynomial.const(ctx, ctx.field._name(name))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return multiply(self.ctx, a, b)

    def div(self, a, b):
        c = _as_scalar(b)
        if c is None:
            raise _expr.ParseError("division by a non-scalar polynomial")
        return a.scale(c.inv())

    def neg(self, a):
        return -a

    def pow(self, a, k):
        return a ** k

    def bracket(self, a, b, p):
        c = _as_scalar(p)
        if c is None:
            raise _expr.ParseError("bracket subscript must be a scalar")
        return skew_commutator(self.ctx, a, b, c)


def _as_scalar(a: Polynomial) -> Scalar | None:
    if not a.terms:
        return a.ctx.field.zero
    if len(a.terms) == 1:
        (m, c), = a.terms.items()
        if not m.word and not any(m.prefix):
            return c
    return None


def parse_polynomial(ctx: PairingContext, text: str) -> Polynomial:
    """Parse the text form produced by ``str(Polynomial)``.

    Variables are ``x1 .. xn`` (or the context names), group generators
    ``g1 .. gn``; anything else is read as a scalar of the context field.
    Skew commutators ``[a, b]_p`` are accepted.
    """
    return _expr.parse(text, _PolyBuilder(ctx))
