"""Radial-coefficient engine for powers of the generating operator.

Write X_m for the sum of all reduced words of length m in the free group
on N generators, and G = X_1 for the generating operator.  Multiplying by
X_1 moves each radial class to its neighbours:

    X_1 X_1 = X_2 + 2N e
    X_1 X_m = X_(m+1) + (2N-1) X_(m-1)   for m >= 2

so if G^n = sum_m c_m X_m, the coefficients of G^(n+1) come out of one
sparse pass: every class m feeds c_m upward into m+1, classes m >= 2 feed
(2N-1) c_m downward into m-1, and class 1 feeds 2N c_1 into the constant.
No word expansion is ever needed; the scalar moment is the constant
coefficient, and the moment over the cyclic subgroup generated by the
length-2N product of all generators and their inverses reads off the
classes whose length is a multiple of 2N.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterator, Mapping

from .laurent import LaurentPolynomial
from .words import reduced_word_count

__all__ = [
    "RadialDecomposition",
    "iter_decompositions",
    "decomposition_of",
    "scalar_moment",
    "amalgamated_moment",
    "CoefficientTable",
    "coefficient_table",
]


@dataclass(frozen=True)
class RadialDecomposition:
    """Coefficients of G^power over the radial classes X_m.

    Only classes with m <= power and m = power (mod 2) ever appear, all
    coefficients are positive, and the top class carries coefficient 1.
    """

    rank: int
    power: int
    coeffs: Mapping[int, int]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        if self.power < 1:
            raise ValueError(f"power must be >= 1, got {self.power}")
        coeffs = dict(self.coeffs)
        if coeffs.get(self.power) != 1:
            raise ValueError(f"class {self.power} must carry coefficient 1")
        for m, c in coeffs.items():
            if m < 0 or m > self.power:
                raise ValueError(f"class {m} is outside 0..{self.power}")
            if (self.power - m) % 2:
                raise ValueError(f"class {m} has the wrong parity for power {self.power}")
            if c <= 0:
                raise ValueError(f"class {m} has non-positive coefficient {c}")
        object.__setattr__(self, "coeffs", MappingProxyType(coeffs))

    @classmethod
    def initial(cls, rank: int) -> "RadialDecomposition":
        """G^1 = X_1."""
        return cls(rank, 1, {1: 1})

    def coefficient(self, length: int) -> int:
        return self.coeffs.get(length, 0)

    def mass(self) -> int:
        """Total word count with multiplicity; equals (2N)^power."""
        return sum(c * reduced_word_count(m, self.rank) for m, c in self.coeffs.items())

    def step(self) -> "RadialDecomposition":
        """Decomposition of the next power (one more multiplication by X_1)."""
        two_n = 2 * self.rank
        nxt: dict[int, int] = {}
        for m, c in self.coeffs.items():
            nxt[m + 1] = nxt.get(m + 1, 0) + c
            if m >= 2:
                nxt[m - 1] = nxt.get(m - 1, 0) + (two_n - 1) * c
            elif m == 1:
                nxt[0] = nxt.get(0, 0) + two_n * c
        return RadialDecomposition(self.rank, self.power + 1, nxt)


def iter_decompositions(rank: int, max_power: int) -> Iterator[RadialDecomposition]:
    """Yield the decompositions of G^1 .. G^max_power in order."""
    if max_power < 1:
        raise ValueError(f"max_power must be >= 1, got {max_power}")
    d = RadialDecomposition.initial(rank)
    yield d
    for _ in range(max_power - 1):
        d = d.step()
        yield d


def decomposition_of(n: int, rank: int) -> RadialDecomposition:
    """Radial decomposition of G^n."""
    if n < 1:
        raise ValueError(f"power must be >= 1, got {n}")
    d = RadialDecomposition.initial(rank)
    for _ in range(n - 1):
        d = d.step()
    return d


def scalar_moment(n: int, rank: int) -> int:
    """Trace of G^n: zero for odd n, else the constant radial coefficient."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    if n % 2:
        return 0
    return decomposition_of(n, rank).coefficient(0)


def amalgamated_moment(n: int, rank: int) -> LaurentPolynomial:
    """Moment of G^n over the cyclic subgroup of the canonical length-2N word.

    A power with exponent k of the subgroup generator is a single word of
    length 2N|k|, and within a radial class every word shares one
    coefficient, so class m contributes coeff * (k-th + (-k)-th powers)
    exactly when m = 2N k; the constant class contributes at exponent 0.
    """
    if rank < 2:
        raise ValueError("amalgamated moments need rank >= 2; the subgroup generator "
                         "degenerates at rank 1")
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    period = 2 * rank
    coeffs: dict[int, int] = {}
    for m, c in decomposition_of(n, rank).coeffs.items():
        if m == 0:
            coeffs[0] = c
        elif m % period == 0:
            k = m // period
            coeffs[k] = c
            coeffs[-k] = c
    return LaurentPolynomial(coeffs)


@dataclass(frozen=True)
class CoefficientTable:
    """All radial coefficients of G^n for n up to max_order.

    Entries are keyed by (power, class length).  The ``kind`` column in
    serialized output is "p" for even powers and "q" for odd ones,
    matching the usual naming of the even/odd coefficient families.
    """

    rank: int
    max_order: int
    entries: Mapping[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def coefficient(self, n: int, m: int) -> int:
        return self.entries.get((n, m), 0)

    def rows(self) -> Iterator[tuple[int, int, str, int]]:
        """(n, m, kind, coefficient) with n ascending and m descending."""
        for n in range(1, self.max_order + 1):
            kind = "p" if n % 2 == 0 else "q"
            for m in range(n, -1, -1):
                c = self.entries.get((n, m))
                if c is not None:
                    yield n, m, kind, c

    def to_csv(self) -> str:
        lines = ["n,m,kind,coefficient"]
        lines.extend(f"{n},{m},{kind},{c}" for n, m, kind, c in self.rows())
        return "\n".join(lines) + "\n"

    def to_tex(self) -> str:
        lines = [
            r"\begin{tabular}{rrcl}",
            r"\hline",
            r"$n$ & $m$ & kind & coefficient \\",
            r"\hline",
        ]
        lines.extend(f"${n}$ & ${m}$ & ${kind}$ & ${c}$ \\\\" for n, m, kind, c in self.rows())
        lines.append(r"\hline")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"


def coefficient_table(max_order: int, rank: int) -> CoefficientTable:
    """Tabulate every radial coefficient of G^1 .. G^max_order."""
    if max_order < 2:
        raise ValueError(f"max_order must be >= 2, got {max_order}")
    entries: dict[tuple[int, int], int] = {}
    for d in iter_decompositions(rank, max_order):
        for m, c in d.coeffs.items():
            entries[(d.power, m)] = c
    return CoefficientTable(rank, max_order, entries)
