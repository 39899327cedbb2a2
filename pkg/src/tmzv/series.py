"""Truncated power series.

Univariate series in ``z`` are plain lists ``c[0..order]`` whose entries may
be Fractions, TPolys or mpf numbers; the helpers below only use ring
operations.  :class:`MultiSeries` holds sparse multivariate series in a fixed
ordered tuple of variables with a weighted-degree cap.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian

from .errors import PoleError
from .tpoly import TPoly


# ---------------------------------------------------------------------------
# univariate helpers

def zeros(order: int, zero=0) -> list:
    return [zero] * (order + 1)


def s_add(a: list, b: list) -> list:
    return [x + y for x, y in zip(a, b)]


def s_sub(a: list, b: list) -> list:
    return [x - y for x, y in zip(a, b)]


def s_scale(a: list, c) -> list:
    return [x * c for x in a]


def s_mul(a: list, b: list, order: int | None = None) -> list:
    if order is None:
        order = min(len(a), len(b)) - 1
    out = [a[0] * 0] * (order + 1)
    for i in range(min(order, len(a) - 1) + 1):
        if not a[i]:
            continue
        for j in range(min(order - i, len(b) - 1) + 1):
            out[i + j] = out[i + j] + a[i] * b[j]
    return out


def s_derivative(a: list) -> list:
    """Coefficients of ``d/dz``; one order shorter."""
    return [a[n] * n for n in range(1, len(a))]


def s_shift_down(a: list) -> list:
    """Multiply by ``1/z``; requires a zero constant term."""
    if a[0]:
        raise PoleError("series has a nonzero constant term; cannot divide by z")
    return list(a[1:])


def s_shift_up(a: list, k: int = 1) -> list:
    """Multiply by ``z^k``, keeping the length."""
    zero = a[0] * 0
    return [zero] * k + list(a[: len(a) - k])


def geometric(order: int, one=1) -> list:
    """``1/(1-z)``."""
    return [one] * (order + 1)


def binomial_series(exponent, order: int) -> list:
    """``(1-z)^(-exponent) = sum (exponent)_n z^n / n!`` with exact coefficients."""
    out = [Fraction(1)]
    for n in range(1, order + 1):
        out.append(out[-1] * (exponent + n - 1) / n)
    return out


def pochhammer(a, n: int):
    out = a * 0 + 1
    for i in range(n):
        out = out * (a + i)
    return out


def hyp2f1_series(a, b, c, order: int) -> list:
    """Exact coefficients of ``F(a, b; c; z)`` through ``z^order``."""
    out = [Fraction(1)]
    for n in range(order):
        denom = (n + 1) * (c + n)
        if denom == 0:
            raise PoleError(f"hypergeometric parameter c={c} hits a pole at n={n}")
        out.append(out[-1] * (a + n) * (b + n) / denom)
    return out


# ---------------------------------------------------------------------------
# multivariate series

class MultiSeries:
    """Sparse truncated series ``{exponent tuple: coefficient}``.

    ``cap`` bounds the weighted degree ``sum(e_i * weights_i)``; ``cap=None``
    means an untruncated polynomial.
    """

    __slots__ = ("variables", "coeffs", "cap", "weights")

    def __init__(self, variables, coeffs=None, cap=None, weights=None):
        self.variables = tuple(variables)
        self.cap = cap
        self.weights = tuple(weights) if weights else (1,) * len(self.variables)
        self.coeffs: dict[tuple, object] = {}
        for e, c in (coeffs or {}).items():
            if self.admits(e) and not _is_zero(c):
                self.coeffs[tuple(e)] = c

    def degree_of(self, e) -> int:
        return sum(a * w for a, w in zip(e, self.weights))

    def admits(self, e) -> bool:
        return self.cap is None or self.degree_of(e) <= self.cap

    def like(self, coeffs=None) -> MultiSeries:
        return MultiSeries(self.variables, coeffs, self.cap, self.weights)

    @classmethod
    def constant(cls, variables, c, cap=None, weights=None) -> MultiSeries:
        return cls(variables, {(0,) * len(variables): c}, cap, weights)

    @classmethod
    def variable(cls, variables, name, cap=None, weights=None, c=1) -> MultiSeries:
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: c}, cap, weights)

    def monomials(self):
        return sorted(self.coeffs, key=lambda e: (self.degree_of(e), e))

    def coefficient(self, e):
        return self.coeffs.get(tuple(e), 0)

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            other = self.like({(0,) * len(self.variables): other})
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return self.like(out)

    __radd__ = __add__

    def __neg__(self):
        return self.like({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiSeries) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return self.like({e: c * other for e, c in self.coeffs.items()})
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            d1 = self.degree_of(e1)
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if self.cap is not None and d1 + self.degree_of(e2) > self.cap:
                    continue
                out[e] = out.get(e, 0) + c1 * c2
        return self.like(out)

    __rmul__ = __mul__

    def map(self, fn) -> MultiSeries:
        return self.like({e: fn(c) for e, c in self.coeffs.items()})

    def inverse(self) -> MultiSeries:
        """Multiplicative inverse; the constant term must be invertible."""
        if self.cap is None:
            raise ValueError("inverse needs a truncation cap")
        zero_e = (0,) * len(self.variables)
        c0 = self.coeffs.get(zero_e, 0)
        if isinstance(c0, TPoly):
            if not c0.is_constant() or not c0:
                raise PoleError("constant term is not an invertible constant")
            inv0 = 1 / c0.constant_term()
        else:
            if c0 == 0:
                raise PoleError("constant term vanishes; series is not invertible")
            inv0 = 1 / c0
        rest = [(e, c) for e, c in self.coeffs.items() if e != zero_e]
        out: dict = {zero_e: inv0 * (c0 * 0 + 1) if isinstance(c0, TPoly) else inv0}
        for e in _exponents_by_degree(self):
            if e == zero_e:
                continue
            acc = 0
            for f, c in rest:
                g = tuple(a - b for a, b in zip(e, f))
                if min(g) < 0:
                    continue
                prev = out.get(g)
                if prev is not None:
                    acc = acc + c * prev
            if acc != 0:
                out[e] = -acc * inv0
        return self.like(out)

    def substitute(self, values) -> object:
        """Evaluate the (finite) series at the given variable values."""
        total = 0
        for e, c in self.coeffs.items():
            term = c
            for v, a in zip(values, e):
                term = term * v ** a
            total = total + term
        return total

    def __repr__(self):
        return f"MultiSeries({self.variables}, {len(self.coeffs)} terms, cap={self.cap})"


def _is_zero(c) -> bool:
    if hasattr(c, "any"):  # numpy arrays of coefficients
        return not c.any()
    return c == 0


def _exponents_by_degree(s: MultiSeries):
    bounds = [s.cap // w for w in s.weights]
    exps = [e for e in cartesian(*(range(b + 1) for b in bounds)) if s.degree_of(e) <= s.cap]
    return sorted(exps, key=lambda e: (s.degree_of(e), e))


def all_exponents(variables, cap, weights=None):
    return _exponents_by_degree(MultiSeries(variables, cap=cap, weights=weights))
