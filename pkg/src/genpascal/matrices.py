"""Finite lower-triangular truncations of generalized Pascal matrices.

Entries are exact rationals; a matrix of size N stores rows 0..N-1 with row n
holding entries (n,0)..(n,n). Entries above the diagonal are implicitly zero.
Matrices are immutable after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import SizeMismatch, ZeroEntry, ZeroFactor
from .polynomials import Polynomial
from .rationals import ONE, ZERO
from .report import Report
from .sequences import BSequence, CSequence


class TriangularMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Fraction | int]]):
        rs = tuple(tuple(Fraction(e) for e in row) for row in rows)
        for n, row in enumerate(rs):
            if len(row) != n + 1:
                raise SizeMismatch(f"row {n} must have {n + 1} entries, got {len(row)}")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, name, value):
        raise AttributeError("TriangularMatrix is immutable")

    @classmethod
    def from_fn(cls, size: int, fn: Callable[[int, int], Fraction | int]) -> "TriangularMatrix":
        return cls([[fn(n, m) for m in range(n + 1)] for n in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, m: int) -> Fraction:
        if m > n:
            return ZERO
        return self.rows[n][m]

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self.rows[n]

    def column(self, m: int) -> tuple[Fraction, ...]:
        """Entries (m,m)..(N-1,m), the stored part of column m."""
        return tuple(self.rows[n][m] for n in range(m, self.size))

    def row_poly(self, n: int) -> Polynomial:
        """Row generating polynomial, x**m weighted by column index m."""
        return Polynomial(self.rows[n])

    def column_poly(self, m: int) -> Polynomial:
        """Column generating polynomial, x**n weighted by row index n."""
        return Polynomial([self.entry(n, m) for n in range(self.size)])

    def truncate(self, size: int) -> "TriangularMatrix":
        if size > self.size:
            raise SizeMismatch(f"cannot grow {self.size} to {size}")
        return TriangularMatrix(self.rows[:size])

    def __eq__(self, other) -> bool:
        return isinstance(other, TriangularMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"TriangularMatrix(size={self.size})"


def identity_matrix(size: int) -> TriangularMatrix:
    return TriangularMatrix.from_fn(size, lambda n, m: ONE if n == m else ZERO)


def all_ones(size: int) -> TriangularMatrix:
    return TriangularMatrix.from_fn(size, lambda n, m: ONE)


def build_from_c(c: CSequence, size: int) -> TriangularMatrix:
    """Matrix with entries c_m c_{n-m} / c_n."""
    cs = [c[n] for n in range(size)]
    return TriangularMatrix([[cs[m] * cs[n - m] / cs[n] for m in range(n + 1)] for n in range(size)])


def gbinom(b: BSequence, n: int, m: int) -> Fraction:
    """Generalized binomial b_n! / (b_m! b_{n-m}!), zero for m > n.

    Raises ZeroFactor for zero-kind b; those matrices are evaluated by the
    digit mask instead of factorial ratios.
    """
    if m < 0 or m > n:
        return ZERO
    return b.factorial(n) / (b.factorial(m) * b.factorial(n - m))


def gbinom_via_recurrence(b: BSequence, n: int, m: int) -> Fraction:
    """Same value as gbinom, built by dynamic programming on the addition rule
    C(n,m) = C(n-1,m-1) + (b_n - b_m)/b_{n-m} * C(n-1,m)."""
    if m < 0 or m > n:
        return ZERO
    prev = [ONE]
    for k in range(1, n + 1):
        row = [ONE]
        top = min(k, m)
        for j in range(1, top + 1):
            left = prev[j - 1]
            if j == k:
                row.append(left)
                continue
            term = b[k - j]
            if term == 0:
                raise ZeroFactor(f"b_{k - j} = 0 in {b.kind}")
            row.append(left + (b[k] - b[j]) / term * prev[j])
        prev = row
    return prev[m]


def hadamard(a: TriangularMatrix, b: TriangularMatrix) -> TriangularMatrix:
    """Entrywise product; the group operation on generalized Pascal truncations."""
    if a.size != b.size:
        raise SizeMismatch(f"sizes {a.size} != {b.size}")
    return TriangularMatrix([[x * y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def hadamard_product(matrices: Sequence[TriangularMatrix]) -> TriangularMatrix:
    if not matrices:
        raise ValueError("empty product")
    acc = matrices[0]
    for m in matrices[1:]:
        acc = hadamard(acc, m)
    return acc


def hadamard_inverse(a: TriangularMatrix) -> TriangularMatrix:
    """Entrywise reciprocal on the lower triangle; the group inverse."""
    for n, row in enumerate(a.rows):
        for m, x in enumerate(row):
            if x == 0:
                raise ZeroEntry(f"zero entry at ({n},{m}): not invertible")
    return TriangularMatrix([[ONE / x for x in row] for row in a.rows])


def subtract(a: TriangularMatrix, b: TriangularMatrix) -> TriangularMatrix:
    if a.size != b.size:
        raise SizeMismatch(f"sizes {a.size} != {b.size}")
    return TriangularMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def matmul(a: TriangularMatrix, b: TriangularMatrix) -> TriangularMatrix:
    """Ordinary matrix product of equal-size lower-triangular truncations."""
    if a.size != b.size:
        raise SizeMismatch(f"sizes {a.size} != {b.size}")
    out = []
    for n in range(a.size):
        arow = a.rows[n]
        out.append([sum((arow[k] * b.rows[k][m] for k in range(m, n + 1)), ZERO) for m in range(n + 1)])
    return TriangularMatrix(out)


def identity_check(a: TriangularMatrix, suite: str = "identities") -> Report:
    """Check the defining entry identities on the whole truncation.

    (n,0) = 1 and (n,m) = (n,n-m) for every stored entry, and the six-factor
    shift identity
        (n+q,q)(n+p,m+p)(m+p,p) = (n+p,p)(n+q,m+q)(m+q,q)
    for all 0 <= m <= n and shifts 0 <= p < q with n+q < size. Equal shifts
    make both sides identical and swapping p,q swaps the sides, so scanning
    p < q is exhaustive. Returns the first counterexample found.
    """
    size = a.size
    checked = 0
    for n in range(size):
        checked += 1
        if a.rows[n][0] != 1:
            return Report(suite, False, {"identity": "column0", "n": n, "value": str(a.rows[n][0])}, checked)
        for m in range(n + 1):
            checked += 1
            if a.rows[n][m] != a.rows[n][n - m]:
                return Report(suite, False, {"identity": "symmetry", "n": n, "m": m}, checked)
    for n in range(size):
        for p in range(size - n):
            for q in range(p + 1, size - n):
                np_, nq = a.rows[n + p], a.rows[n + q]
                for m in range(n + 1):
                    checked += 1
                    lhs = nq[q] * np_[m + p] * a.rows[m + p][p]
                    rhs = np_[p] * nq[m + q] * a.rows[m + q][q]
                    if lhs != rhs:
                        return Report(
                            suite, False, {"identity": "shift", "n": n, "m": m, "p": p, "q": q}, checked
                        )
    return Report(suite, True, None, checked)


def pascal_convolve(a: TriangularMatrix, f: Polynomial, g: Polynomial) -> Polynomial:
    """Product in the series algebra attached to the matrix:
    coefficient n of the result is sum_m (n,m) f_m g_{n-m}, for n < size."""
    if f.degree >= a.size or g.degree >= a.size:
        raise SizeMismatch("inputs must have degree < matrix size")
    out = []
    for n in range(a.size):
        out.append(sum((a.rows[n][m] * f.coefficient(m) * g.coefficient(n - m) for m in range(n + 1)), ZERO))
    return Polynomial(out)


def first_column_b(a: TriangularMatrix) -> BSequence:
    """Column 1 read off as an explicit weight sequence (callers should have
    identity_check pass so the matrix is a generalized Pascal truncation)."""
    values = [ZERO] + [a.entry(n, 1) for n in range(1, a.size)]
    if a.size > 1:
        values[1] = ONE
    return BSequence.explicit(values)
