"""Univariate polynomials in the interpolation parameter ``t``.

Coefficients are :class:`fractions.Fraction` in every exact code path.  The
class only relies on ``+``, ``*`` and comparison with zero, so numeric
consumers (e.g. interpolated generating-function coefficients) may also carry
``mpmath.mpf`` entries.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational")


def _strip(coeffs):
    # ints become Fractions so that division stays exact; other number types pass through
    coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class TPoly:
    """Dense polynomial ``c0 + c1 t + c2 t^2 + ...`` with stripped zeros."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def const(cls, c) -> TPoly:
        return cls((as_fraction(c),))

    @classmethod
    def monomial(cls, degree: int, c=1) -> TPoly:
        return cls((Fraction(0),) * degree + (as_fraction(c),))

    @classmethod
    def from_json(cls, data) -> TPoly:
        return cls(as_fraction(c) for c in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            if isinstance(other, (int, Fraction)):
                other = TPoly.const(other)
            else:
                return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def _coerce(self, other) -> TPoly:
        if isinstance(other, TPoly):
            return other
        return TPoly((other,))

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TPoly):
            if other == 0:
                return TPoly()
            return TPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return TPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __call__(self, t):
        """Horner evaluation at ``t`` (exact for rational ``t``)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def substitute(self, other: TPoly) -> TPoly:
        """Composition ``self(other(t))``."""
        acc = TPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def __repr__(self):
        return f"TPoly({list(map(str, self.coeffs))})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = str(mag)
            else:
                tvar = "t" if i == 1 else f"t^{i}"
                if mag == 1:
                    body = tvar
                elif isinstance(mag, Fraction) and mag.denominator != 1:
                    body = f"{mag}*{tvar}"
                else:
                    body = f"{mag}{tvar}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += sign + body
        return text


ZERO = TPoly()
ONE = TPoly((Fraction(1),))
TVAR = TPoly((Fraction(0), Fraction(1)))


