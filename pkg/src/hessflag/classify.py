"""Headline decision procedures: flag singularity, cell-level verdicts,
codimension-1 cells, normality, and the Peterson special case."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import jacobian
from .complement import complement, full_string_heights
from .perms import (
    HessenbergFunction,
    Permutation,
    enumerate_flags,
    flag_in_hess,
    hess_codim,
    hess_dim,
)


class CellVerdict(enum.Enum):
    NONSINGULAR_CELL = "nonsingular"
    SINGULAR_CELL = "singular"
    INDETERMINATE_CELL = "indeterminate"


def is_singular_flag(w: Permutation, h: HessenbergFunction) -> bool:
    """Combinatorial singularity test: the flag is singular iff the
    conjugated complement contains a lower diagonal full-string."""
    h.require_strict()
    if not flag_in_hess(w, h):
        raise ValueError("permutation flag not in Hess(N,h)")
    return bool(full_string_heights(complement(w, h)))


def singular_flags(h: HessenbergFunction) -> list[Permutation]:
    """All singular permutation flags of Hess(N,h), lexicographic order."""
    h.require_strict()
    return [w for w in enumerate_flags(h) if is_singular_flag(w, h)]


def cell_verdict(w: Permutation, h: HessenbergFunction) -> CellVerdict:
    """Uniform verdict for the whole Hessenberg-Schubert cell of w.

    A nonsingular flag makes the entire cell nonsingular.  A singular flag
    with a full-string of height n-1 or n-2 makes the entire cell
    singular.  Otherwise the flag alone does not decide the cell (mixed
    cells exist) and the verdict is indeterminate.
    """
    if not is_singular_flag(w, h):
        return CellVerdict.NONSINGULAR_CELL
    heights = full_string_heights(complement(w, h))
    if (h.n - 1) in heights or (h.n - 2) in heights:
        return CellVerdict.SINGULAR_CELL
    return CellVerdict.INDETERMINATE_CELL


def _case_tag(h: HessenbergFunction, i: int) -> str:
    h_prev = 1 if i == 1 else h(i - 1)
    left_open = h_prev > i
    right_open = h(i) > i + 1
    if left_open and right_open:
        return "i"
    if left_open:
        return "ii"
    if right_open:
        return "iii"
    return "iv"


def codim1_perm(h: HessenbergFunction, i: int) -> tuple[str, Permutation]:
    """The permutation p_i whose Hessenberg-Schubert cell has codimension
    one, with its defining case tag, keyed to h(i-1) and h(i) (h(0):=1)."""
    n = h.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"i={i} out of range [1,{n - 1}]")
    case = _case_tag(h, i)
    if case == "i":
        # w0 with positions i, i+1 swapped
        word = list(range(n, 0, -1))
        word[i - 1], word[i] = word[i], word[i - 1]
    elif case == "ii":
        word = list(range(n, n + 1 - i, -1)) + [1] + list(range(n + 1 - i, 1, -1))
    elif case == "iii":
        word = list(range(n - 1, n - 1 - i, -1)) + [n] + list(range(n - i - 1, 0, -1))
    else:
        # longest element of the parabolic subgroup omitting s_i
        word = list(range(i, 0, -1)) + list(range(n, i, -1))
    return case, Permutation(tuple(word))


def codim1_perms(h: HessenbergFunction) -> list[tuple[int, str, Permutation]]:
    h.require_strict()
    return [(i, *codim1_perm(h, i)) for i in range(1, h.n)]


def is_normal(h: HessenbergFunction) -> bool:
    """Hess(N,h) is normal iff h(i-1) > i or h(i) > i+1 for all
    1 < i < n-1."""
    h.require_strict()
    return all(h(i - 1) > i or h(i) > i + 1 for i in range(2, h.n - 1))


def peterson_hess(n: int) -> HessenbergFunction:
    """h(i) = i+1 for i < n, the Peterson variety."""
    return HessenbergFunction(tuple(min(i + 1, n) for i in range(1, n + 1)))


def peterson_string_check(n: int) -> bool:
    """For the Peterson variety, every singular flag's complement contains
    a full-string of height n-1 or n-2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    h = peterson_hess(n)
    for w in enumerate_flags(h):
        heights = full_string_heights(complement(w, h))
        if heights and (n - 1) not in heights and (n - 2) not in heights:
            return False
    return True


def normality_cross_check(h: HessenbergFunction) -> bool:
    """Consistency of the normality scan with the codimension-1 analysis:

    * non-normality must coincide with some interior case-(iv) p_i whose
      complement contains the height-(n-2) string {(n-1,1),(n,2)};
    * every case (i)/(ii)/(iii) p_i, and p_1 and p_{n-1}, must be
      nonsingular flags.
    """
    h.require_strict()
    n = h.n
    offending = False
    for i, case, p in codim1_perms(h):
        cells = complement(p, h)
        if case in ("i", "ii", "iii") and is_singular_flag(p, h):
            return False
        if i in (1, n - 1) and is_singular_flag(p, h):
            return False
        if case == "iv" and 1 < i < n - 1:
            if (n - 1, 1) in cells and (n, 2) in cells:
                offending = True
    return (not is_normal(h)) == offending


@dataclass(frozen=True)
class FlagRecord:
    w: Permutation
    singular: bool
    string_heights: tuple[int, ...]
    jacobian_rank: Optional[int] = None


@dataclass(frozen=True)
class Codim1Record:
    index: int
    case: str
    p: Permutation
    verdict: CellVerdict


@dataclass(frozen=True)
class VarietyReport:
    h: HessenbergFunction
    dim: int
    codim: int
    normal: bool
    codim1: tuple[Codim1Record, ...]
    flags: tuple[FlagRecord, ...]

    @property
    def num_flags(self) -> int:
        return len(self.flags)

    @property
    def num_singular_flags(self) -> int:
        return sum(1 for f in self.flags if f.singular)


def variety_report(h: HessenbergFunction, verify_jacobian: bool = False) -> VarietyReport:
    """Full scan of Hess(N,h): every permutation flag classified, the
    codimension-1 cells tagged, and the normality verdict."""
    h.require_strict()
    flags = []
    for w in enumerate_flags(h):
        singular = is_singular_flag(w, h)
        rank = None
        if verify_jacobian:
            rank = jacobian.rank_exact(
                jacobian.eval_at_flag(jacobian.build_jacobian(w, h))
            )
            if (rank < hess_codim(h)) != singular:
                raise AssertionError(
                    f"Jacobian and combinatorial verdicts disagree at w={w}, h={h}"
                )
        flags.append(
            FlagRecord(
                w, singular, tuple(full_string_heights(complement(w, h))), rank
            )
        )
    codim1 = tuple(
        Codim1Record(i, case, p, cell_verdict(p, h)) for i, case, p in codim1_perms(h)
    )
    return VarietyReport(
        h, hess_dim(h), hess_codim(h), is_normal(h), codim1, tuple(flags)
    )
