"""Truncated (Laurent) power series in one variable ``t`` with exact coefficients.

Coefficients may be Fractions, :class:`~twophoton.scalars.Poly` values or
floats; all arithmetic is plain ``+``/``*`` on the coefficients. A series keeps
``n`` coefficients starting at exponent ``start`` (negative for Laurent
terms), so everything from ``t**(start + n)`` on is unknown.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import List, Sequence


class Series:
    __slots__ = ("coeffs", "start", "label")

    def __init__(self, coeffs: Sequence, start: int = 0, label: str = ""):
        self.coeffs = list(coeffs)
        self.start = start
        self.label = label

    # constructors
    @classmethod
    def constant(cls, c, n: int, label: str = "") -> "Series":
        return cls([c] + [0] * (n - 1), 0, label)

    @classmethod
    def monomial(cls, k: int, n: int, c=1, label: str = "") -> "Series":
        coeffs = [0] * n
        if 0 <= k < n:
            coeffs[k] = c
        return cls(coeffs, 0, label)

    @property
    def stop(self) -> int:
        """First exponent whose coefficient is not known."""
        return self.start + len(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def coefficient(self, k: int):
        if k < self.start:
            return 0
        if k >= self.stop:
            raise IndexError(f"t^{k} lies beyond the truncation order")
        return self.coeffs[k - self.start]

    def __getitem__(self, k: int):
        return self.coefficient(k)

    def with_label(self, label: str) -> "Series":
        return Series(self.coeffs, self.start, label)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, Series):
            if not self.start <= 0 < self.stop:
                raise ValueError("constant term outside the known range")
            coeffs = list(self.coeffs)
            coeffs[-self.start] = coeffs[-self.start] + other
            return Series(coeffs, self.start)
        lo = min(self.start, other.start)
        hi = min(self.stop, other.stop)
        out = []
        for k in range(lo, hi):
            a = self.coeffs[k - self.start] if k >= self.start else 0
            b = other.coeffs[k - other.start] if k >= other.start else 0
            out.append(a + b)
        return Series(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return Series([-c for c in self.coeffs], self.start, self.label)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([c * other for c in self.coeffs], self.start)
        # Cauchy product; valid up to the smaller known precision
        n = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n):
            s = 0
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return Series(out, self.start + other.start)

    __rmul__ = __mul__

    def shift(self, k: int) -> "Series":
        """Multiply by ``t**k`` (``k`` may be negative)."""
        return Series(self.coeffs, self.start + k, self.label)

    def truncate(self, stop: int) -> "Series":
        return Series(self.coeffs[: max(0, stop - self.start)], self.start, self.label)

    def negative_part(self) -> List:
        return [c for k, c in zip(range(self.start, self.stop), self.coeffs) if k < 0 and c]

    def regular(self, n: int | None = None) -> "Series":
        """Drop the (necessarily zero) negative-power part and return a power series."""
        if self.negative_part():
            raise ValueError(f"series {self.label!r} has a pole at t=0")
        out = [self.coefficient(k) for k in range(0, self.stop)]
        if n is not None:
            if n > len(out):
                raise ValueError(f"only {len(out)} coefficients known, {n} requested")
            out = out[:n]
        return Series(out, 0, self.label)

    def sqrt(self) -> "Series":
        """Square root of a power series with constant term 1 (branch +1 at t=0)."""
        if self.start != 0 or self.coeffs[0] != 1:
            raise ValueError("sqrt needs a power series with constant term 1")
        f = self.coeffs
        s = [Fraction(1)] + [0] * (len(f) - 1)
        for k in range(1, len(f)):
            acc = f[k]
            for i in range(1, k):
                acc = acc - s[i] * s[k - i]
            s[k] = acc * Fraction(1, 2)
        return Series(s, 0)

    def __repr__(self):
        return f"Series({self.coeffs!r}, start={self.start}, label={self.label!r})"


# named expansions; ``c`` is any scalar (rational, polynomial or float)

def exp_series(c, k: int, n: int) -> Series:
    """``exp(c * t**k)`` to ``n`` coefficients."""
    if k <= 0:
        raise ValueError("k must be positive")
    out = [0] * n
    j = 0
    while j * k < n:
        out[j * k] = c ** j * Fraction(1, factorial(j)) if j else Fraction(1)
        j += 1
    return Series(out, 0, f"exp({c}*t^{k})")


def expm1_over(c, k: int, n: int) -> Series:
    """``(exp(c * t**k) - 1) / c`` expanded termwise, so finite at ``c = 0``."""
    out = [0] * n
    j = 1
    while j * k < n:
        out[j * k] = c ** (j - 1) * Fraction(1, factorial(j)) if j > 1 else Fraction(1)
        j += 1
    return Series(out, 0, f"(exp({c}*t^{k})-1)/({c})")
