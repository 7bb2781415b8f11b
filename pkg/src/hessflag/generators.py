"""Local defining-ideal generators g[i,j] of Hess(N,h) on the affine chart
wU^-, built from the combinatorial subsequence formula.

Conventions baked in during expansion: z[l,l] = 1, variables z[r,c] with
w^{-1}(r) < w^{-1}(c) are zero and never appear, and the boundary symbols
z[i,0], z[n+1,j] are zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .complement import complement
from .perms import HessenbergFunction, Permutation, flag_in_hess
from .poly import ONE, Polynomial, VarId


def cell_order_key(cell: tuple[int, int]) -> tuple[int, int]:
    """Order on grid positions: by diagonal (i-j) ascending, then row.
    Reading the grid upper-left to lower-right along diagonals."""
    i, j = cell
    return (i - j, i)


def _require_admissible(w: Permutation, i: int, k: int):
    if not (1 <= i <= w.n and 1 <= k <= w.n):
        raise ValueError(f"values ({i},{k}) out of range for n={w.n}")
    if w.inverse_value(i) < w.inverse_value(k):
        raise ValueError(
            f"y requires w^-1({i}) >= w^-1({k}); got "
            f"{w.inverse_value(i)} < {w.inverse_value(k)}"
        )


def y_subseq(w: Permutation, i: int, k: int) -> Polynomial:
    """The entry y_{w^{-1}(i),k} of the inverse chart matrix as an
    alternating sum over subsequences of w's one-line notation running
    from k up to i."""
    _require_admissible(w, i, k)
    return _y_subseq_cached(w.word, i, k)


@lru_cache(maxsize=None)
def _y_subseq_cached(word: tuple[int, ...], i: int, k: int) -> Polynomial:
    if i == k:
        return ONE
    w = Permutation(word)
    pos_k, pos_i = w.inverse_value(k), w.inverse_value(i)
    between = [w(p) for p in range(pos_k + 1, pos_i)]
    terms: dict[tuple[VarId, ...], int] = {}
    for size in range(len(between) + 1):
        for chosen in itertools.combinations(between, size):
            values = (k, *chosen, i)
            # chain z_{i,a_1} z_{a_1,a_2} ... z_{a_{d-1},k}; d factors
            factors = tuple(
                sorted(
                    ((values[m + 1], values[m]) for m in range(len(values) - 1)),
                    key=lambda v: (v[0] - v[1], v[0], v[1]),
                )
            )
            sign = -1 if (len(values) - 1) % 2 else 1
            terms[factors] = terms.get(factors, 0) + sign
    return Polynomial(terms)


def y_recursive(w: Permutation, i: int, k: int) -> Polynomial:
    """Independent oracle for y_subseq: the downward recursion
    y_{w^{-1}(i),k} = -z[i,k] - sum_l y_{w^{-1}(i),l} z[l,k] over values l
    strictly between k and i in the one-line notation."""
    _require_admissible(w, i, k)
    return _y_recursive_cached(w.word, i, k)


@lru_cache(maxsize=None)
def _y_recursive_cached(word: tuple[int, ...], i: int, k: int) -> Polynomial:
    if i == k:
        return ONE
    w = Permutation(word)
    pos_k, pos_i = w.inverse_value(k), w.inverse_value(i)
    acc = -Polynomial.variable((i, k))
    for pos in range(pos_k + 1, pos_i):
        l = w(pos)
        acc = acc - _y_recursive_cached(word, i, l) * Polynomial.variable((l, k))
    return acc


def generator_g(w: Permutation, h: HessenbergFunction, i: int, j: int) -> Polynomial:
    """g[i,j] = sum over l of y_{w^{-1}(i),l-1} * z[l,j], the summation
    running over values l with w^{-1}(l-1) <= w^{-1}(i) and
    w^{-1}(l) >= w^{-1}(j); y_{.,0} = 0 and z[j,j] = 1."""
    if w.n != h.n:
        raise ValueError(f"dimension mismatch: w has n={w.n}, h has n={h.n}")
    if not (1 <= i <= w.n and 1 <= j <= w.n):
        raise ValueError(f"indices ({i},{j}) out of range for n={w.n}")
    total = Polynomial.zero()
    for l in range(2, w.n + 1):
        if w.inverse_value(l - 1) > w.inverse_value(i):
            continue
        if w.inverse_value(l) < w.inverse_value(j):
            continue
        y = y_subseq(w, i, l - 1)
        z = ONE if l == j else Polynomial.variable((l, j))
        total = total + y * z
    return total


def expected_linear_terms(
    w: Permutation, h: HessenbergFunction, i: int, j: int
) -> Polynomial:
    """Predicted linear part of g[i,j]: -z[i,j-1] + z[i+1,j], where terms
    hitting column 0 or row n+1 drop out."""
    if not flag_in_hess(w, h):
        raise ValueError("permutation flag not in Hess(N,h)")
    if (i, j) not in complement(w, h):
        raise ValueError(f"({i},{j}) not in the conjugated complement")
    total = Polynomial.zero()
    if j > 1:
        total = total - Polynomial.variable((i, j - 1))
    if i < w.n:
        total = total + Polynomial.variable((i + 1, j))
    return total


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered generators of the local defining ideal of Hess(N,h) on wU^-."""

    w: Permutation
    h: HessenbergFunction
    entries: tuple[tuple[tuple[int, int], Polynomial], ...]

    def cells(self) -> list[tuple[int, int]]:
        return [cell for cell, _ in self.entries]

    def polynomials(self) -> list[Polynomial]:
        return [p for _, p in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def generator_set(w: Permutation, h: HessenbergFunction) -> GeneratorSet:
    """All generators g[i,j] for (i,j) in the conjugated complement, in
    canonical diagonal order."""
    if not flag_in_hess(w, h):
        raise ValueError("permutation flag not in Hess(N,h)")
    cells = sorted(complement(w, h).cells, key=cell_order_key)
    for (i, j) in cells:
        # the flag membership forces w^-1(j) < w^-1(i+1) for i < n
        assert i == w.n or w.inverse_value(j) < w.inverse_value(i + 1)
    entries = tuple((cell, generator_g(w, h, *cell)) for cell in cells)
    return GeneratorSet(w, h, entries)
