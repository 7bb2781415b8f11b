"""Sparse multivariate polynomial arithmetic over arbitrary-precision
integers in commuting variables z[i,j].

A variable is a (row, col) pair; a monomial is a tuple of variables sorted
by the canonical key (row-col, row, col); a polynomial maps monomials to
nonzero integer coefficients.  Exact evaluation returns Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

VarId = tuple[int, int]
Monomial = tuple[VarId, ...]


def var_key(v: VarId) -> tuple[int, int, int]:
    """Canonical variable order: by diagonal (row-col), then row, then col."""
    r, c = v
    return (r - c, r, c)


def make_monomial(factors: Iterable[VarId]) -> Monomial:
    return tuple(sorted(factors, key=var_key))


def monomial_key(m: Monomial):
    """Graded order: total degree first, then factor keys lexicographically."""
    return (len(m), tuple(var_key(v) for v in m))


def net_index(m: Monomial) -> int:
    """Sum of (row - col) over the factors, with multiplicity."""
    return sum(r - c for (r, c) in m)


class Polynomial:
    """Immutable sparse polynomial with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        cleaned = {}
        if terms:
            for m, coeff in terms.items():
                if coeff:
                    cleaned[make_monomial(m)] = coeff
        self.terms: dict[Monomial, int] = cleaned

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial({(): c})

    @staticmethod
    def variable(v: VarId) -> "Polynomial":
        return Polynomial({(v,): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        result = Polynomial()
        result.terms = out
        return result

    def __neg__(self) -> "Polynomial":
        result = Polynomial()
        result.terms = {m: -c for m, c in self.terms.items()}
        return result

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = make_monomial(m1 + m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        result = Polynomial()
        result.terms = out
        return result

    def scale(self, c: int) -> "Polynomial":
        if c == 0:
            return Polynomial.zero()
        result = Polynomial()
        result.terms = {m: c * coeff for m, coeff in self.terms.items()}
        return result

    def diff(self, v: VarId) -> "Polynomial":
        """Formal partial derivative with respect to z[v]."""
        out: dict[Monomial, int] = {}
        for m, c in self.terms.items():
            mult = m.count(v)
            if not mult:
                continue
            reduced = list(m)
            reduced.remove(v)
            key = tuple(reduced)
            s = out.get(key, 0) + c * mult
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        result = Polynomial()
        result.terms = out
        return result

    def evaluate(self, assignment: Mapping[VarId, Fraction | int]) -> Fraction:
        """Exact value at the given point; every variable occurring in the
        polynomial must be assigned."""
        total = Fraction(0)
        for m, c in self.terms.items():
            value = Fraction(c)
            for v in m:
                if v not in assignment:
                    raise KeyError(f"variable z[{v[0]},{v[1]}] not assigned")
                value *= Fraction(assignment[v])
            total += value
        return total

    def linear_part(self) -> "Polynomial":
        result = Polynomial()
        result.terms = {m: c for m, c in self.terms.items() if len(m) == 1}
        return result

    def degree(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def variables(self) -> set[VarId]:
        return {v for m in self.terms for v in m}

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda item: monomial_key(item[0]))

    def __str__(self) -> str:
        """Deterministic rendering, e.g. "-z[2,4] + z[3,5] + z[2,3]*z[6,5]"."""
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(f"z[{r},{col}]" for (r, col) in m) if m else ""
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


ZERO = Polynomial.zero()
ONE = Polynomial.constant(1)
