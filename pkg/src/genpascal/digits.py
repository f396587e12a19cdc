"""Base-q digit expansions and q-adic valuations."""

from __future__ import annotations

from dataclasses import dataclass


def digits(n: int, base: int) -> list[int]:
    """Little-endian base-q digits of n >= 0; empty for n = 0."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    while n:
        n, d = divmod(n, base)
        out.append(d)
    return out


def from_digits(ds: list[int], base: int) -> int:
    value = 0
    for d in reversed(ds):
        value = value * base + d
    return value


def valuation(n: int, base: int) -> int:
    """Largest k with base**k dividing n; requires n >= 1."""
    if n < 1:
        raise ValueError("valuation needs n >= 1")
    k = 0
    while n % base == 0:
        n //= base
        k += 1
    return k


@dataclass(frozen=True)
class DigitVector:
    """Little-endian base-q expansion of an index, without trailing zeros."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if self.digits and self.digits[-1] == 0:
            raise ValueError("trailing zero digit")
        if any(not 0 <= d < self.base for d in self.digits):
            raise ValueError("digit out of range")

    @classmethod
    def of(cls, n: int, base: int) -> "DigitVector":
        return cls(base, tuple(digits(n, base)))

    def value(self) -> int:
        return from_digits(list(self.digits), self.base)

    def digit(self, i: int) -> int:
        return self.digits[i] if i < len(self.digits) else 0
