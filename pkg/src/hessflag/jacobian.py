"""Symbolic Jacobian of the generator set, exact evaluation at rational
points of the chart, and exact rank via fraction-free elimination."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping

from .generators import generator_set
from .perms import HessenbergFunction, Permutation, hess_codim
from .poly import Polynomial, VarId, var_key


def genuine_variables(w: Permutation) -> list[VarId]:
    """The n(n-1)/2 chart coordinates z[p,q] with w^-1(p) > w^-1(q), in
    canonical diagonal order."""
    n = w.n
    return sorted(
        (
            (p, q)
            for p in range(1, n + 1)
            for q in range(1, n + 1)
            if w.inverse_value(p) > w.inverse_value(q)
        ),
        key=var_key,
    )


@dataclass(frozen=True)
class JacobianMatrix:
    w: Permutation
    h: HessenbergFunction
    rows: tuple[tuple[int, int], ...]  # generator indices (i,j)
    cols: tuple[VarId, ...]  # genuine variables (p,q)
    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))


def build_jacobian(w: Permutation, h: HessenbergFunction) -> JacobianMatrix:
    gens = generator_set(w, h)
    cols = tuple(genuine_variables(w))
    entries = tuple(
        tuple(poly.diff(v) for v in cols) for _, poly in gens.entries
    )
    return JacobianMatrix(w, h, tuple(gens.cells()), cols, entries)


def eval_at_flag(jac: JacobianMatrix) -> list[list[Fraction]]:
    """Evaluate at the permutation flag itself: all genuine variables 0."""
    zeros = {v: Fraction(0) for v in jac.cols}
    return [[entry.evaluate(zeros) for entry in row] for row in jac.entries]


def eval_at_point(
    jac: JacobianMatrix,
    assignment: Mapping[VarId, Fraction | int],
    cell_mode: bool = False,
) -> list[list[Fraction]]:
    """Evaluate at an arbitrary rational point of the chart.  With
    cell_mode the point must lie on the Schubert cell: every genuine
    variable z[p,q] with p > q must be assigned 0."""
    if cell_mode:
        for (p, q) in jac.cols:
            if p > q and Fraction(assignment.get((p, q), 0)) != 0:
                raise ValueError(
                    f"cell constraint violated: z[{p},{q}] must be 0 on the Schubert cell"
                )
    return [[entry.evaluate(assignment) for entry in row] for row in jac.entries]


def rank_exact(matrix: list[list[Fraction]]) -> int:
    """Rank over the rationals: clear denominators row-wise, then Bareiss
    fraction-free elimination with first-nonzero pivoting."""
    if not matrix or not matrix[0]:
        return 0
    rows: list[list[int]] = []
    for row in matrix:
        row = [Fraction(x) for x in row]
        scale = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * scale) for x in row])
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(rank + 1, n_rows):
            for c in range(col + 1, n_cols):
                rows[r][c] = (
                    rows[r][c] * rows[rank][col] - rows[r][col] * rows[rank][c]
                ) // prev
            rows[r][col] = 0
        prev = rows[rank][col]
        rank += 1
        if rank == n_rows:
            break
    return rank


def is_singular_by_jacobian(w: Permutation, h: HessenbergFunction) -> bool:
    """Jacobian criterion: the flag is singular iff the Jacobian evaluated
    there has rank below the codimension."""
    jac = build_jacobian(w, h)
    return rank_exact(eval_at_flag(jac)) < hess_codim(h)


def sample_cell_rank(
    jac: JacobianMatrix, seed: int = 0, attempts: int = 32
) -> tuple[int, dict[VarId, Fraction]]:
    """Probe the generic Jacobian rank on the Schubert cell: evaluate at
    deterministic pseudo-random cell points with small integer coordinates
    and report the maximum rank seen together with a witnessing point.

    Heuristic evidence only; a rank below the row count here is not a
    proof of cell-wide singularity.
    """
    rng = random.Random(seed)
    best_rank = -1
    best_point: dict[VarId, Fraction] = {}
    target = len(jac.rows)
    for _ in range(attempts):
        point = {
            (p, q): Fraction(0) if p > q else Fraction(rng.randint(-3, 3))
            for (p, q) in jac.cols
        }
        rank = rank_exact(eval_at_point(jac, point, cell_mode=True))
        if rank > best_rank:
            best_rank, best_point = rank, point
        if best_rank == target:
            break
    return best_rank, best_point
