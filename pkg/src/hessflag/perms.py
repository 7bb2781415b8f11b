"""Permutations in one-line notation, Hessenberg functions, flag
membership, dimension bookkeeping, and enumeration."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

DEFAULT_MAX_ENUM_N = 10


class EnumerationCapError(ValueError):
    """Raised when an enumeration entry point is asked for n beyond the cap."""


def max_enum_n() -> int:
    """Enumeration cap; overridable via the HESSFLAG_MAX_N environment variable."""
    env = os.environ.get("HESSFLAG_MAX_N")
    if env is not None:
        return int(env)
    return DEFAULT_MAX_ENUM_N


@dataclass(frozen=True)
class Permutation:
    """Element of S_n in one-line notation w(1),...,w(n), 1-based values."""

    word: tuple[int, ...]
    inv: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self):
        n = len(self.word)
        if sorted(self.word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.word}")
        inv = [0] * n
        for pos, val in enumerate(self.word, start=1):
            inv[val - 1] = pos
        object.__setattr__(self, "inv", tuple(inv))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """w(i) for 1 <= i <= n."""
        return self.word[i - 1]

    def inverse_value(self, i: int) -> int:
        """w^{-1}(i) for 1 <= i <= n."""
        return self.inv[i - 1]

    def inverse(self) -> "Permutation":
        return Permutation(self.inv)

    def sign(self) -> int:
        inversions = sum(
            1
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if self.word[a] > self.word[b]
        )
        return -1 if inversions % 2 else 1

    def __str__(self) -> str:
        return format_permutation(self)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def longest(n: int) -> "Permutation":
        """The longest element w0 = n, n-1, ..., 1."""
        return Permutation(tuple(range(n, 0, -1)))


@dataclass(frozen=True)
class HessenbergFunction:
    """Weakly increasing h:[n] -> [n] with h(i) >= i.

    The classification theorems additionally assume the strict condition
    h(i) >= i+1 for i < n, exposed as ``is_strict``.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        for i, v in enumerate(self.values, start=1):
            if not i <= v <= n:
                raise ValueError(f"h({i})={v} out of range [{i},{n}]")
        for i in range(n - 1):
            if self.values[i] > self.values[i + 1]:
                raise ValueError(f"h not weakly increasing at index {i + 1}")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        """h(i) for 1 <= i <= n."""
        return self.values[i - 1]

    @property
    def is_strict(self) -> bool:
        """True iff h(i) >= i+1 for all i < n."""
        return all(self.values[i - 1] >= i + 1 for i in range(1, self.n))

    def require_strict(self):
        if not self.is_strict:
            raise ValueError(
                f"h={format_hessenberg(self)} violates h(i) >= i+1 for some i < n"
            )

    def __str__(self) -> str:
        return format_hessenberg(self)


def parse_permutation(text: str) -> Permutation:
    """Parse one-line notation: digits for n <= 9 ("32154"), otherwise
    comma-separated integers ("10,2,...")."""
    text = text.strip()
    if "," in text:
        word = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        word = tuple(int(ch) for ch in text)
    return Permutation(word)


def format_permutation(w: Permutation) -> str:
    if w.n <= 9:
        return "".join(str(v) for v in w.word)
    return ",".join(str(v) for v in w.word)


def parse_hessenberg(text: str) -> HessenbergFunction:
    """Parse comma-separated values, e.g. "3,3,4,5,5"."""
    return HessenbergFunction(tuple(int(part) for part in text.strip().split(",")))


def format_hessenberg(h: HessenbergFunction) -> str:
    return ",".join(str(v) for v in h.values)


def flag_in_hess(w: Permutation, h: HessenbergFunction) -> bool:
    """Whether the permutation flag of w lies in Hess(N,h):
    w^{-1}(i) <= h(w^{-1}(i+1)) for all 1 <= i < n."""
    if w.n != h.n:
        raise ValueError(f"dimension mismatch: w has n={w.n}, h has n={h.n}")
    return all(w.inverse_value(i) <= h(w.inverse_value(i + 1)) for i in range(1, w.n))


def hess_dim(h: HessenbergFunction) -> int:
    """dim Hess(N,h) = sum_j (h(j) - j)."""
    h.require_strict()
    return sum(h(j) - j for j in range(1, h.n + 1))


def hess_codim(h: HessenbergFunction) -> int:
    """Codimension in the flag variety: the number of cells (i,j) with i > h(j)."""
    h.require_strict()
    n = h.n
    return sum(n - h(j) for j in range(1, n + 1))


def _check_cap(n: int):
    cap = max_enum_n()
    if n > cap:
        raise EnumerationCapError(
            f"n={n} exceeds enumeration cap {cap} (set HESSFLAG_MAX_N to override)"
        )


def enumerate_hess(n: int, relaxed: bool = False) -> list[HessenbergFunction]:
    """All Hessenberg functions on [n] in lexicographic order of value
    sequences.  By default only functions with h(i) >= i+1 for i < n are
    produced; ``relaxed`` lowers the bound to h(i) >= i."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_cap(n)
    out: list[HessenbergFunction] = []

    def extend(prefix: list[int]):
        i = len(prefix) + 1
        if i > n:
            out.append(HessenbergFunction(tuple(prefix)))
            return
        lo = i if (relaxed or i == n) else i + 1
        lo = max(lo, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            extend(prefix + [v])

    extend([])
    return out


def enumerate_flags(h: HessenbergFunction) -> list[Permutation]:
    """All w in S_n whose permutation flag lies in Hess(N,h), in
    lexicographic one-line order."""
    h.require_strict()
    _check_cap(h.n)
    return [
        w
        for word in itertools.permutations(range(1, h.n + 1))
        if flag_in_hess(w := Permutation(word), h)
    ]


def all_permutations(n: int) -> list[Permutation]:
    _check_cap(n)
    return [Permutation(word) for word in itertools.permutations(range(1, n + 1))]
