"""Hessenberg complements conjugated by a permutation, and lower diagonal
full-string detection in the n x n grid."""

from __future__ import annotations

from dataclasses import dataclass

from .perms import HessenbergFunction, Permutation


@dataclass(frozen=True)
class CellSet:
    """A subset of the [n] x [n] grid of (row, col) pairs."""

    n: int
    cells: frozenset[tuple[int, int]]

    def __post_init__(self):
        for (i, j) in self.cells:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"cell ({i},{j}) outside {self.n}x{self.n} grid")

    def __contains__(self, cell: tuple[int, int]) -> bool:
        return cell in self.cells

    def __len__(self) -> int:
        return len(self.cells)

    def sorted_cells(self) -> list[tuple[int, int]]:
        return sorted(self.cells)

    def to_json(self) -> list[list[int]]:
        return [[i, j] for (i, j) in self.sorted_cells()]

    def ascii_grid(self) -> str:
        """Grid render: '#' shaded (not in the set), '.' unshaded (in the
        set), '*' for unshaded cells lying on a contained full string."""
        string_cells = set()
        for height in full_string_heights(self):
            string_cells.update(_string_cells(self.n, height + 1))
        rows = []
        for i in range(1, self.n + 1):
            row = []
            for j in range(1, self.n + 1):
                if (i, j) in string_cells:
                    row.append("*")
                elif (i, j) in self.cells:
                    row.append(".")
                else:
                    row.append("#")
            rows.append(" ".join(row))
        return "\n".join(rows)


def _string_cells(n: int, d: int) -> list[tuple[int, int]]:
    """The lower diagonal full-string {(d,1), (d+1,2), ..., (n, n-d+1)}."""
    return [(d + k, 1 + k) for k in range(n - d + 1)]


def complement(w: Permutation, h: HessenbergFunction) -> CellSet:
    """The Hessenberg complement conjugated by w:
    {(i,j) : w^{-1}(i) > h(w^{-1}(j))}, i.e. the w-permuted unshaded boxes."""
    if w.n != h.n:
        raise ValueError(f"dimension mismatch: w has n={w.n}, h has n={h.n}")
    n = w.n
    cells = frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if w.inverse_value(i) > h(w.inverse_value(j))
    )
    return CellSet(n, cells)


def full_string_heights(c: CellSet) -> list[int]:
    """Heights d-1 (for 2 <= d <= n) of every lower diagonal full-string
    contained in c, ascending."""
    heights = []
    for d in range(2, c.n + 1):
        if all(cell in c.cells for cell in _string_cells(c.n, d)):
            heights.append(d - 1)
    return sorted(heights)


def conjugation_consistency(
    w: Permutation, h: HessenbergFunction, i: int, j: int
) -> bool:
    """(i,j) in complement(w,h) iff (w^{-1}(i), w^{-1}(j)) is in the
    standard (identity) complement."""
    if not (1 <= i <= w.n and 1 <= j <= w.n):
        raise ValueError(f"indices ({i},{j}) out of range for n={w.n}")
    lhs = (i, j) in complement(w, h)
    rhs = (w.inverse_value(i), w.inverse_value(j)) in complement(
        Permutation.identity(w.n), h
    )
    return lhs == rhs
