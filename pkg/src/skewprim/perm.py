"""Permutations of 1..n in one-line notation.

A permutation is the tuple ``(nu(1), ..., nu(n))``.  Cycle notation follows
the functional convention: the cycle ``(2 3 4)`` sends 2 to 3, 3 to 4 and 4
to 2.
"""

from __future__ import annotations

from itertools import permutations

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def from_cycles(n: int, *cycles) -> Perm:
    out = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            out[a - 1] = b
    return tuple(out)


def parse_cycles(n: int, text: str) -> Perm:
    """``"id"``, ``"(234)"``, ``"(1 3)(2 4)"`` or one-line ``"1342"``."""
    text = text.strip()
    if text in ("", "id", "()"):
        return identity(n)
    if text[0] != "(":
        if "," in text or " " in text:
            digits = [int(t) for t in text.replace(",", " ").split()]
        else:
            digits = [int(c) for c in text]
        if sorted(digits) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {text!r}")
        return tuple(digits)
    cycles = []
    for chunk in text.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if chunk[0] != "(" or chunk[-1] != ")":
            raise ValueError(f"bad cycle notation {text!r}")
        body = chunk[1:-1]
        parts = body.replace(",", " ").split()
        if len(parts) == 1 and n < 10:
            parts = list(parts[0])
        cycles.append(tuple(int(p) for p in parts))
    return from_cycles(n, *cycles)


def compose(a: Perm, b: Perm) -> Perm:
    """``(a o b)(i) = a(b(i))``."""
    return tuple(a[b[i] - 1] for i in range(len(a)))


def inverse(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, ai in enumerate(a):
        out[ai - 1] = i + 1
    return tuple(out)


def cycles(a: Perm) -> list[tuple[int, ...]]:
    seen, out = set(), []
    for start in range(1, len(a) + 1):
        if start in seen or a[start - 1] == start:
            continue
        cyc, i = [], start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = a[i - 1]
        out.append(tuple(cyc))
    return out


def cycle_str(a: Perm) -> str:
    cs = cycles(a)
    if not cs:
        return "id"
    sep = "" if len(a) < 10 else " "
    return "".join("(" + sep.join(map(str, c)) + ")" for c in cs)


def all_perms(n: int) -> list[Perm]:
    """S_n in lexicographic order of one-line notation."""
    return [tuple(p) for p in permutations(range(1, n + 1))]


# order used for n = 4 throughout: id, (23), (234), (34), (24), (243)
_S4_FIXING_1 = [
    identity(4),
    from_cycles(4, (2, 3)),
    from_cycles(4, (2, 3, 4)),
    from_cycles(4, (3, 4)),
    from_cycles(4, (2, 4)),
    from_cycles(4, (2, 4, 3)),
]


def fixing_first(n: int) -> list[Perm]:
    """Permutations with ``nu(1) = 1``; the fixed n = 4 order, else lexicographic."""
    if n == 4:
        return list(_S4_FIXING_1)
    return [(1,) + tuple(p) for p in permutations(range(2, n + 1))]


def act_on_word(a: Perm, word) -> tuple[int, ...]:
    """Apply a permutation letterwise: ``x_i -> x_{a(i)}``."""
    return tuple(a[i - 1] for i in word)
