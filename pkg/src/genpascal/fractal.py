"""Fractal generalized Pascal matrices and their digit-recursive fast paths.

The family of base q and weight phi is the Hadamard product of the mask
matrices of moduli q, q**2, q**3, ... Its entry at (n,m) is phi raised to the
number of moduli q**k with n mod q**k < m mod q**k; on an N x N truncation
only moduli q**k <= N can contribute, because q**k > n forces
n mod q**k = n >= m = m mod q**k. The finite product is therefore exact, not
an approximation.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .digits import valuation
from .matrices import TriangularMatrix
from .polynomials import Polynomial, mul_trunc, w_poly
from .rationals import ONE, ZERO
from .report import Report
from .sequences import BSequence, fractal_b
from .zeroalg import digit_binom


def carry_count(q: int, n: int, m: int) -> int:
    """Number of moduli q**k (k >= 1) with n mod q**k < m mod q**k."""
    count = 0
    power = q
    while power <= n:
        if n % power < m % power:
            count += 1
        power *= q
    return count


def fractal_entry(phi: Fraction | int, q: int, n: int, m: int) -> Fraction:
    """Entry (n,m) of the fractal family; the zero-weight case is the digit
    dominance mask (no factorials involved)."""
    if m > n:
        return ZERO
    phi = Fraction(phi)
    if phi == 0:
        return ONE if digit_binom(q, n, m) else ZERO
    return phi ** carry_count(q, n, m)


def fractal_matrix(phi: Fraction | int, q: int, size: int) -> TriangularMatrix:
    if q < 2:
        raise ValueError("q must be >= 2")
    return TriangularMatrix.from_fn(size, lambda n, m: fractal_entry(phi, q, n, m))


def fast_gbinom_fractal(q: int, n: int, m: int) -> Fraction:
    """Entry (n,m) of the weight-q fractal matrix in O(digit count) steps.

    Peels the lowest base-q digit per step: with n = q n' + i, m = q m' + j,
    the i >= j case contributes factor 1 and recurses on (n', m'); the i < j
    case contributes b_{m'+1} * q (the b_{m+1} form, which never underflows)
    and recurses on (n', m'+1). Agrees with the factorial ratio everywhere.
    """
    if q < 2:
        raise ValueError("q must be >= 2")
    if m < 0 or m > n:
        return ZERO
    value = 1
    while m != 0 and m != n:
        n, i = divmod(n, q)
        m, j = divmod(m, q)
        if i < j:
            m += 1
            value *= q * q ** valuation(m, q)
    return Fraction(value)


def fractal_row(q: int, n: int) -> Polynomial:
    """Row n of the weight-q fractal matrix, built only from the recurrence
    u_{qn+m} = w_m(x) u_n(x^q) + q b_n x^{m+1} w_{q-2-m}(x) u_{n-1}(x^q)."""
    if n == 0:
        return Polynomial([ONE])
    n1, m = divmod(n, q)
    if n1 == 0:
        return w_poly(m)  # b_0 = 0 kills the second term
    term = w_poly(m) * fractal_row(q, n1).substitute_power(q)
    tail = w_poly(q - 2 - m)
    if not tail.is_zero():
        bn = fractal_b(q, q, n1)
        term = term + (q * bn) * tail.shift(m + 1) * fractal_row(q, n1 - 1).substitute_power(q)
    return term


def fractal_column(q: int, n: int, size: int) -> Polynomial:
    """Column n of the weight-q fractal matrix truncated at degree size-1,
    built from g_{qn+m} = x^m w_{q-1-m}(x) g_n(x^q) + q b_{n+1} w_{m-1}(x) g_{n+1}(x^q),
    seeded by direct evaluation for n < q."""
    return _column(q, n, size - 1)


def _column(q: int, n: int, degree: int) -> Polynomial:
    if degree < 0:
        return Polynomial()
    if n < q:
        return Polynomial([fast_gbinom_fractal(q, k, n) for k in range(degree + 1)])
    n1, m = divmod(n, q)
    inner = _column(q, n1, degree // q).substitute_power(q)
    term = (w_poly(q - 1 - m) * inner).shift(m)
    lead = w_poly(m - 1)
    if not lead.is_zero():
        bn = fractal_b(q, q, n1 + 1)
        term = term + (q * bn) * lead * _column(q, n1 + 1, degree // q).substitute_power(q)
    return term.truncate(degree)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
    return [p for p in range(2, n + 1) if sieve[p]]


def pascal_prime_factorization(size: int) -> Report:
    """The entrywise product of the weight-p fractal matrices over primes
    p < size equals the Pascal matrix; primes beyond the block are all-ones
    on it. Streams entry by entry via the fast digit path."""
    primes = _primes_upto(max(size - 1, 1))
    checked = 0
    for n in range(size):
        relevant = [p for p in primes if p <= n]
        for m in range(n + 1):
            checked += 1
            product = 1
            for p in relevant:
                product *= fast_gbinom_fractal(p, n, m)
            if product != comb(n, m):
                factors = {str(p): str(fast_gbinom_fractal(p, n, m)) for p in relevant}
                return Report(
                    "primes",
                    False,
                    {"n": n, "m": m, "factors": factors, "expected": str(comb(n, m))},
                    checked,
                )
    return Report("primes", True, None, checked)


def _w_factor_coeffs(q: int, level: int, degree: int) -> list[Fraction]:
    """Coefficients of w_{q-1}(x**(q**level) / q**((q**level - 1)/(q - 1)))."""
    step = q**level
    scale = ONE / Fraction(q) ** ((step - 1) // (q - 1))
    out = [ZERO] * (degree + 1)
    power = ONE
    for t in range(q):
        if t * step > degree:
            break
        out[t * step] = power
        power *= scale
    return out


def fractal_c_check(q: int, degree: int) -> Report:
    """Two series identities for the coefficient sequence 1/b_n!:

    (a) the partial product of the w-factors through q**level <= degree equals
        sum x**n/b_n! coefficientwise (later factors start above the cut);
    (b) the coefficientwise product over primes p <= degree of the weight-p
        sequences is the exponential series 1/n!.
    """
    b = BSequence.fractal(q, q)
    target = [ONE / b.factorial(n) for n in range(degree + 1)]
    product = [ONE] + [ZERO] * degree
    level = 0
    while q**level <= degree:
        product = mul_trunc(product, _w_factor_coeffs(q, level, degree), degree)
        level += 1
    checked = degree + 1
    for n in range(degree + 1):
        if product[n] != target[n]:
            return Report(
                "series-product", False, {"q": q, "n": n, "got": str(product[n]), "want": str(target[n])}, checked
            )
    prime_seqs = [BSequence.fractal(p, p) for p in _primes_upto(degree)]
    for n in range(degree + 1):
        checked += 1
        value = ONE
        for seq in prime_seqs:
            value *= ONE / seq.factorial(n)
        if value != Fraction(1, factorial(n)):
            return Report("series-product", False, {"hadamard": n, "got": str(value)}, checked)
    return Report("series-product", True, None, checked)


def b_functional_equation_check(q: int, degree: int) -> Report:
    """b(x) = w_{q-2}(x) x / (1 - x**q) + q b(x**q), coefficientwise through
    ``degree``, with both sides expanded independently."""
    lhs = [ZERO] + [fractal_b(q, q, n) for n in range(1, degree + 1)]
    rhs = [ZERO] * (degree + 1)
    w = w_poly(q - 2).coeffs
    for s in range(0, degree // q + 1):  # expansion of 1/(1 - x**q)
        for t, cw in enumerate(w):
            d = q * s + t + 1  # the extra x shift
            if d <= degree:
                rhs[d] += cw
    for n in range(q, degree + 1, q):
        rhs[n] += q * lhs[n // q]
    checked = degree + 1
    for n in range(degree + 1):
        if lhs[n] != rhs[n]:
            return Report(
                "b-functional", False, {"q": q, "n": n, "lhs": str(lhs[n]), "rhs": str(rhs[n])}, checked
            )
    return Report("b-functional", True, None, checked)
