"""Sparse exact linear algebra over any Scalar field.

Vectors and matrix rows are dicts ``column -> Scalar`` with no zero entries.
Columns are processed in a caller-supplied order, and the pivot for a column
is always the first remaining row that has a nonzero entry there, so results
are deterministic.
"""

from __future__ import annotations

from typing import Hashable, Sequence

from .coeff import Field, Scalar

Vector = dict[Hashable, Scalar]


def _axpy(row: Vector, pivot: Vector, c: Scalar) -> Vector:
    """``row + c * pivot``, dropping zeros."""
    out = dict(row)
    for k, v in pivot.items():
        old = out.get(k)
        new = c * v if old is None else old + c * v
        if new.is_zero():
            out.pop(k, None)
        else:
            out[k] = new
    return out


def row_reduce(rows: Sequence[Vector], columns: Sequence[Hashable]) -> tuple[list[Vector], list[Hashable]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    order = {c: i for i, c in enumerate(columns)}
    remaining = [dict(r) for r in rows if r]
    for r in remaining:
        for k in r:
            if k not in order:
                raise KeyError(f"column {k!r} missing from the column order")
    done: list[Vector] = []
    pivots: list[Hashable] = []
    for col in columns:
        idx = next((i for i, r in enumerate(remaining) if col in r), None)
        if idx is None:
            continue
        prow = remaining.pop(idx)
        inv = prow[col].inv()
        prow = {k: v * inv for k, v in prow.items()}
        remaining = [(_axpy(r, prow, -r[col]) if col in r else r) for r in remaining]
        remaining = [r for r in remaining if r]
        done = [(_axpy(r, prow, -r[col]) if col in r else r) for r in done]
        done.append(prow)
        pivots.append(col)
        if not remaining:
            break
    return done, pivots


def nullspace(rows: Sequence[Vector], columns: Sequence[Hashable], field: Field) -> list[Vector]:
    """Basis of ``{v : row . v = 0 for every row}``, itself in reduced echelon form."""
    reduced, pivots = row_reduce(rows, columns)
    pivot_set = set(pivots)
    basis = []
    for f in columns:
        if f in pivot_set:
            continue
        v = {f: field.one}
        for r, p in zip(reduced, pivots):
            c = r.get(f)
            if c is not None:
                v[p] = -c
        basis.append(v)
    out, _ = row_reduce(basis, columns)
    return out


def rank(vectors: Sequence[Vector], columns: Sequence[Hashable] | None = None) -> int:
    if columns is None:
        columns = sorted({k for v in vectors for k in v}, key=repr)
    return len(row_reduce(vectors, columns)[0])


def same_span(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    cols = sorted({k for v in list(a) + list(b) for k in v}, key=repr)
    ra, rb = rank(a, cols), rank(b, cols)
    return ra == rb == rank(list(a) + list(b), cols)


def solve_combination(vectors: Sequence[Vector], target: Vector, field: Field) -> list[Scalar] | None:
    """Coefficients ``c`` with ``sum c_i vectors[i] = target``, or None if unsolvable.

    When the vectors are dependent the solution with zero free coordinates is
    returned.
    """
    keys = sorted({k for v in list(vectors) + [target] for k in v}, key=repr)
    rhs = ("rhs",)
    rows = []
    for k in keys:
        row = {i: v[k] for i, v in enumerate(vectors) if k in v}
        if k in target:
            row[rhs] = target[k]
        if row:
            rows.append(row)
    columns = list(range(len(vectors))) + [rhs]
    reduced, pivots = row_reduce(rows, columns)
    if rhs in pivots:
        return None
    sol = [field.zero] * len(vectors)
    for r, p in zip(reduced, pivots):
        sol[p] = r.get(rhs, field.zero)
    return sol
