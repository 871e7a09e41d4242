"""Exact sparse linear algebra over the rationals.

Matrices live as lists of sparse columns ({row: Fraction}).  Rank uses
fraction-free (division-controlled) elimination: rows are scaled to integers,
cross-multiplication updates keep them integral, and a gcd division after
every update bounds coefficient growth.  Square solves use sparse
Gauss-Jordan elimination over Fractions with a fill-aware pivot choice.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Column = dict[int, Fraction]


def columns_to_int_rows(cols: list[Column]) -> list[dict[int, int]]:
    """Transpose sparse columns into integer rows, clearing denominators."""
    rows: dict[int, dict[int, Fraction]] = {}
    for j, col in enumerate(cols):
        for i, value in col.items():
            if value:
                rows.setdefault(i, {})[j] = value
    out = []
    for entries in rows.values():
        denom_lcm = 1
        for value in entries.values():
            denom_lcm = denom_lcm * value.denominator // gcd(denom_lcm, value.denominator)
        ints = {j: int(v * denom_lcm) for j, v in entries.items()}
        g = 0
        for v in ints.values():
            g = gcd(g, v)
        if g > 1:
            ints = {j: v // g for j, v in ints.items()}
        out.append(ints)
    return out


def _divide_by_gcd(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def sparse_rank(cols: list[Column], nrows: int) -> int:
    """Exact rank via fraction-free elimination with gcd control."""
    rows = columns_to_int_rows(cols)
    active = [r for r in rows if r]
    rank = 0
    while active:
        # Markowitz-style pivot: cheapest fill estimate first.
        col_count: dict[int, int] = {}
        for row in active:
            for j in row:
                col_count[j] = col_count.get(j, 0) + 1
        best = None
        best_cost = None
        for idx, row in enumerate(active):
            r_extra = len(row) - 1
            for j in row:
                cost = r_extra * (col_count[j] - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (idx, j), cost
            if best_cost == 0:
                break
        idx, pivot_col = best
        pivot_row = active.pop(idx)
        pivot_val = pivot_row[pivot_col]
        rank += 1
        updated = []
        for row in active:
            if pivot_col in row:
                factor = row.pop(pivot_col)
                new = {j: pivot_val * v for j, v in row.items()}
                for j, v in pivot_row.items():
                    if j == pivot_col:
                        continue
                    s = new.get(j, 0) - factor * v
                    if s:
                        new[j] = s
                    else:
                        new.pop(j, None)
                if new:
                    updated.append(_divide_by_gcd(new))
            elif row:
                updated.append(row)
        active = updated
    return rank


def solve_square(phi_cols: list[Column], size: int,
                 rhs_cols: list[Column]) -> list[Column]:
    """Solve phi * X = rhs column by column, exactly.

    Returns the solution columns.  Raises ValueError carrying the rank when
    phi is singular; callers wrap this into a domain error.
    """
    nrhs = len(rhs_cols)
    rows: dict[int, dict[int, Fraction]] = {}
    for j, col in enumerate(phi_cols):
        for i, value in col.items():
            if value:
                rows.setdefault(i, {})[j] = value
    rhs_rows: dict[int, dict[int, Fraction]] = {}
    for k, col in enumerate(rhs_cols):
        for i, value in col.items():
            if value:
                rhs_rows.setdefault(i, {})[k] = value

    row_ids = list(range(size))
    work = {i: dict(rows.get(i, {})) for i in row_ids}
    rhs = {i: dict(rhs_rows.get(i, {})) for i in row_ids}
    col_of_pivot: dict[int, int] = {}
    unused = set(row_ids)
    remaining_cols = set(range(size))

    for _ in range(size):
        # Fill-aware pivot choice among untouched rows and columns.
        col_count: dict[int, int] = {}
        for i in unused:
            for j in work[i]:
                if j in remaining_cols:
                    col_count[j] = col_count.get(j, 0) + 1
        best = None
        best_cost = None
        for i in unused:
            live = [j for j in work[i] if j in remaining_cols]
            for j in live:
                cost = (len(live) - 1) * (col_count[j] - 1)
                if best_cost is None or cost < best_cost:
                    best, best_cost = (i, j), cost
            if best_cost == 0:
                break
        if best is None:
            raise ValueError(f"singular block: rank {len(col_of_pivot)} of {size}")
        pi, pj = best
        pval = work[pi][pj]
        # Normalize the pivot row.
        work[pi] = {j: v / pval for j, v in work[pi].items()}
        rhs[pi] = {k: v / pval for k, v in rhs[pi].items()}
        # Eliminate the pivot column everywhere else (Gauss-Jordan).
        for i in row_ids:
            if i == pi:
                continue
            factor = work[i].get(pj)
            if not factor:
                continue
            for j, v in work[pi].items():
                s = work[i].get(j, Fraction(0)) - factor * v
                if s:
                    work[i][j] = s
                else:
                    work[i].pop(j, None)
            for k, v in rhs[pi].items():
                s = rhs[i].get(k, Fraction(0)) - factor * v
                if s:
                    rhs[i][k] = s
                else:
                    rhs[i].pop(k, None)
        col_of_pivot[pj] = pi
        unused.discard(pi)
        remaining_cols.discard(pj)

    solutions: list[Column] = [dict() for _ in range(nrhs)]
    for j, i in col_of_pivot.items():
        for k, v in rhs[i].items():
            if v:
                solutions[k][j] = v
    return solutions


def mul_cols(a_cols: list[Column], b_cols: list[Column]) -> list[Column]:
    """Sparse product: columns of A o B, where B's values index A's columns."""
    out: list[Column] = []
    for bcol in b_cols:
        acc: Column = {}
        for k, coeff in bcol.items():
            for i, v in a_cols[k].items():
                s = acc.get(i, Fraction(0)) + coeff * v
                if s:
                    acc[i] = s
                else:
                    acc.pop(i, None)
        out.append(acc)
    return out


def cols_are_zero(cols: list[Column]) -> bool:
    return all(not col for col in cols)
