"""Symbolic matrix descriptions with lazy per-entry evaluation.

A GPSpec names a matrix family plus parameters. ``entry`` evaluates one
coefficient straight from the description; ``materialize`` builds the full
truncation through the family's dedicated constructor. The two paths agree
bit-exactly. Hadamard specs stream per-entry products so a long factor list
(such as the per-prime factorization of Pascal) never materializes its
intermediates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .fractal import fractal_entry, fractal_matrix
from .matrices import TriangularMatrix, build_from_c
from .polynomials import geometric, mul_trunc
from .rationals import ONE, ZERO
from .sequences import CSequence
from .special import phi_q_matrix, q_umbral_matrix
from .zeroalg import t_coefficient, t_matrix


@dataclass(frozen=True)
class GPSpec:
    kind: str  # from-c | phiq | fractal | qumbral | tmatrix | hadamard
    c: CSequence | None = None
    phi: Fraction | None = None
    q: Fraction | None = None
    factors: tuple["GPSpec", ...] = field(default_factory=tuple)

    @classmethod
    def from_c(cls, c: CSequence) -> "GPSpec":
        return cls("from-c", c=c)

    @classmethod
    def phiq(cls, phi: Fraction | int, q: int) -> "GPSpec":
        return cls("phiq", phi=Fraction(phi), q=Fraction(q))

    @classmethod
    def fractal(cls, phi: Fraction | int, q: int) -> "GPSpec":
        return cls("fractal", phi=Fraction(phi), q=Fraction(q))

    @classmethod
    def qumbral(cls, q: Fraction | int) -> "GPSpec":
        return cls("qumbral", q=Fraction(q))

    @classmethod
    def tmatrix(cls, q: int) -> "GPSpec":
        return cls("tmatrix", q=Fraction(q))

    @classmethod
    def hadamard(cls, factors: list["GPSpec"]) -> "GPSpec":
        return cls("hadamard", factors=tuple(factors))

    def entry(self, n: int, m: int) -> Fraction:
        if m > n:
            return ZERO
        if self.kind == "from-c":
            return self.c[m] * self.c[n - m] / self.c[n]
        if self.kind == "phiq":
            q = int(self.q)
            return ONE if n % q >= m % q else self.phi
        if self.kind == "fractal":
            return fractal_entry(self.phi, int(self.q), n, m)
        if self.kind == "qumbral":
            series = [ONE]
            for t in range(m + 1):
                series = mul_trunc(series, geometric(self.q**t, n - m), n - m)
            return series[n - m]
        if self.kind == "tmatrix":
            return t_coefficient(int(self.q), n, m)
        if self.kind == "hadamard":
            value = ONE
            for f in self.factors:
                value *= f.entry(n, m)
            return value
        raise ValueError(f"unknown spec kind {self.kind!r}")

    def materialize(self, size: int) -> TriangularMatrix:
        if self.kind == "from-c":
            return build_from_c(self.c, size)
        if self.kind == "phiq":
            return phi_q_matrix(self.phi, int(self.q), size)
        if self.kind == "fractal":
            return fractal_matrix(self.phi, int(self.q), size)
        if self.kind == "qumbral":
            return q_umbral_matrix(self.q, size)
        if self.kind == "tmatrix":
            return t_matrix(int(self.q), size)
        if self.kind == "hadamard":
            # stream entries; factor matrices are never built
            return TriangularMatrix.from_fn(size, self.entry)
        raise ValueError(f"unknown spec kind {self.kind!r}")
