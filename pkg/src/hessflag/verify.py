"""Exhaustive cross-verification scans: the combinatorial singularity test
against the Jacobian criterion, the combinatorial generators against the
matrix-conjugation oracle, and the two y constructions against each other.

Each scan splits into pure per-task units (one Hessenberg function, or one
permutation for the y scan) so they can run on a process pool; results are
merged in deterministic input order regardless of completion order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracle
from .classify import is_singular_flag
from .generators import generator_set, y_recursive, y_subseq
from .jacobian import is_singular_by_jacobian
from .perms import (
    HessenbergFunction,
    Permutation,
    all_permutations,
    enumerate_flags,
    enumerate_hess,
)


@dataclass
class ScanResult:
    comparisons: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


TaskOutcome = tuple[int, list[str]]


def _run_tasks(worker, tasks, jobs: int) -> ScanResult:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(worker, tasks))
    else:
        outcomes = [worker(task) for task in tasks]
    result = ScanResult()
    for comparisons, failures in outcomes:
        result.comparisons += comparisons
        result.failures.extend(failures)
    return result


def _all_hess_values(n_max: int) -> list[tuple[int, ...]]:
    return [
        h.values for n in range(2, n_max + 1) for h in enumerate_hess(n)
    ]


def _agreement_task(values: tuple[int, ...]) -> TaskOutcome:
    h = HessenbergFunction(values)
    comparisons, failures = 0, []
    for w in enumerate_flags(h):
        comparisons += 1
        if is_singular_flag(w, h) != is_singular_by_jacobian(w, h):
            failures.append(f"verdicts disagree at w={w}, h={h}")
    return comparisons, failures


def agreement_scan(n_max: int, jobs: int = 1) -> ScanResult:
    """is_singular_flag vs is_singular_by_jacobian over every (w,h) with
    the flag in Hess(N,h), for 2 <= n <= n_max."""
    return _run_tasks(_agreement_task, _all_hess_values(n_max), jobs)


def _oracle_task(values: tuple[int, ...]) -> TaskOutcome:
    h = HessenbergFunction(values)
    comparisons, failures = 0, []
    for w in enumerate_flags(h):
        comparisons += 1
        fast = generator_set(w, h)
        slow = oracle.conjugated_generators(w, h)
        if fast.entries != slow.entries:
            failures.append(f"generators differ at w={w}, h={h}")
    return comparisons, failures


def oracle_scan(n_max: int, jobs: int = 1) -> ScanResult:
    """generator_set vs the M^-1 N M oracle, canonical-form polynomial
    equality, over every (w,h) with the flag in Hess(N,h)."""
    return _run_tasks(_oracle_task, _all_hess_values(n_max), jobs)


def _y_task(word: tuple[int, ...]) -> TaskOutcome:
    w = Permutation(word)
    n = w.n
    comparisons, failures = 0, []
    for pos_k in range(1, n + 1):
        for pos_i in range(pos_k, n + 1):
            i, k = w(pos_i), w(pos_k)
            comparisons += 1
            if y_subseq(w, i, k) != y_recursive(w, i, k):
                failures.append(f"y mismatch at w={w}, i={i}, k={k}")
    return comparisons, failures


def y_scan(n_max: int, jobs: int = 1) -> ScanResult:
    """y_subseq vs y_recursive over all admissible (w,i,k), 2 <= n <= n_max."""
    tasks = [
        w.word for n in range(2, n_max + 1) for w in all_permutations(n)
    ]
    return _run_tasks(_y_task, tasks, jobs)


def run_all(n_max: int, jobs: int = 1) -> dict[str, ScanResult]:
    return {
        "y_equivalence": y_scan(min(n_max, 5), jobs),
        "oracle_equivalence": oracle_scan(n_max, jobs),
        "jacobian_agreement": agreement_scan(n_max, jobs),
    }
