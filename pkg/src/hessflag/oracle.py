"""Brute-force computation of the ideal generators by explicit symbolic
matrix conjugation M^-1 N M.  Exponential in n; exists to certify the
combinatorial construction in generators.py, not to serve queries."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complement import complement
from .generators import GeneratorSet, cell_order_key
from .perms import HessenbergFunction, Permutation, flag_in_hess
from .poly import ONE, ZERO, Polynomial


@dataclass(frozen=True)
class SymbolicMatrix:
    n: int
    entries: tuple[tuple[Polynomial, ...], ...]

    def at(self, i: int, j: int) -> Polynomial:
        """1-based entry access."""
        return self.entries[i - 1][j - 1]

    def __matmul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        n = self.n
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            rows.append(tuple(row))
        return SymbolicMatrix(n, tuple(rows))


def identity_matrix(n: int) -> SymbolicMatrix:
    return SymbolicMatrix(
        n, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))
    )


def nilpotent_matrix(n: int) -> SymbolicMatrix:
    """The regular nilpotent Jordan block: ones on the superdiagonal."""
    return SymbolicMatrix(
        n,
        tuple(tuple(ONE if j == i + 1 else ZERO for j in range(n)) for i in range(n)),
    )


def build_M(w: Permutation) -> SymbolicMatrix:
    """Chart matrix for wU^-: entry (w(j), j) is 1, entries (w(i), j) with
    i < j are 0, and the rest are the genuine variables relabelled as
    z[row, w(col)]."""
    n = w.n
    rows = []
    for r in range(1, n + 1):
        row = []
        for c in range(1, n + 1):
            if w(c) == r:
                row.append(ONE)
            elif w.inverse_value(r) < c:
                row.append(ZERO)
            else:
                row.append(Polynomial.variable((r, w(c))))
        rows.append(tuple(row))
    return SymbolicMatrix(n, tuple(rows))


def _determinant(m: SymbolicMatrix) -> Polynomial:
    """Cofactor expansion along the first remaining column, minors memoized."""
    n = m.n

    @lru_cache(maxsize=None)
    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if not rows:
            return ONE
        c = cols[0]
        rest_cols = cols[1:]
        acc = ZERO
        for idx, r in enumerate(rows):
            entry = m.entries[r][c]
            if entry.is_zero():
                continue
            sub = minor(rows[:idx] + rows[idx + 1 :], rest_cols)
            term = entry * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        return acc

    return minor(tuple(range(n)), tuple(range(n)))


def adjugate_inverse(m: SymbolicMatrix) -> SymbolicMatrix:
    """Exact polynomial inverse, valid because det M = sign(w) is a unit."""
    n = m.n
    det = _determinant(m)
    if det == ONE:
        sign = 1
    elif det == -ONE:
        sign = -1
    else:
        raise ValueError(f"determinant is not a unit: {det}")

    @lru_cache(maxsize=None)
    def minor(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if not rows:
            return ONE
        c = cols[0]
        rest_cols = cols[1:]
        acc = ZERO
        for idx, r in enumerate(rows):
            entry = m.entries[r][c]
            if entry.is_zero():
                continue
            sub = minor(rows[:idx] + rows[idx + 1 :], rest_cols)
            term = entry * sub
            acc = acc + (term if idx % 2 == 0 else -term)
        return acc

    all_idx = tuple(range(n))
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            # adj(M)[i][j] = (-1)^(i+j) * det(M with row j, col i removed)
            sub_rows = tuple(r for r in all_idx if r != j)
            sub_cols = tuple(c for c in all_idx if c != i)
            cof = minor(sub_rows, sub_cols)
            value = cof.scale(sign if (i + j) % 2 == 0 else -sign)
            row.append(value)
        rows.append(tuple(row))
    return SymbolicMatrix(n, tuple(rows))


@lru_cache(maxsize=None)
def _conjugated_f(word: tuple[int, ...]) -> SymbolicMatrix:
    """F = M^-1 N M for the chart matrix of w; entry (i,j) is f_{i,j}."""
    w = Permutation(word)
    m = build_M(w)
    m_inv = adjugate_inverse(m)
    return (m_inv @ nilpotent_matrix(w.n)) @ m


def conjugated_generators(w: Permutation, h: HessenbergFunction) -> GeneratorSet:
    """GeneratorSet computed the slow way: g[i,j] = (M^-1 N M) at position
    (w^-1(i), w^-1(j)), restricted to the conjugated complement."""
    if not flag_in_hess(w, h):
        raise ValueError("permutation flag not in Hess(N,h)")
    f = _conjugated_f(w.word)
    cells = sorted(complement(w, h).cells, key=cell_order_key)
    entries = tuple(
        ((i, j), f.at(w.inverse_value(i), w.inverse_value(j))) for (i, j) in cells
    )
    return GeneratorSet(w, h, entries)
