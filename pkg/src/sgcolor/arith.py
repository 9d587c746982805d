"""Exact modular and rational arithmetic on the circle.

Ratios are :class:`fractions.Fraction` values, which are always stored in
lowest terms and compare by exact cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

Ratio = Fraction
Number = Union[int, Fraction]


class InvalidModulusError(ValueError):
    pass


def _check_modulus(r: Number) -> None:
    if r <= 0:
        raise InvalidModulusError(f"modulus must be positive, got {r}")


def mod_rem(x: Number, r: Number) -> Number:
    """Return ``[x]_r``, the representative of ``x`` in ``[0, r)``.

    Integer inputs give an integer back; anything rational gives a Fraction.
    """
    _check_modulus(r)
    if isinstance(x, int) and isinstance(r, int):
        return x % r
    rem = Fraction(x) % Fraction(r)
    return rem


def circ_dist(x: Number, r: Number) -> Number:
    """Circular norm ``|x|_r = min([x]_r, [-x]_r)``, a value in ``[0, r/2]``."""
    return min(mod_rem(x, r), mod_rem(-x, r))


def residue_orbit(x: int, d: int, k: int) -> set[int]:
    """``{[x + i*d]_k : 0 <= i < k}``; the whole of Z_k exactly when gcd(k, d) = 1."""
    if k < 1:
        raise InvalidModulusError(f"k must be >= 1, got {k}")
    return {(x + i * d) % k for i in range(k)}


def parse_ratio(text: str) -> Fraction:
    """Parse ``"num/den"`` or a bare integer into a reduced Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_ratio(value: Number) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def inverse_mod(d: int, k: int) -> int:
    if gcd(d, k) != 1:
        raise ValueError(f"{d} is not invertible modulo {k}")
    return pow(d, -1, k)
