"""Numeric evaluation: Riemann zeta, MZVs, t-MZVs, combinations, hypergeometric sums.

Values are ``mpmath.mpf`` at the configured working precision.  Slowly
convergent nested sums are accelerated by fitting the partial sums against
their asymptotic tail (powers of ``1/N`` times powers of ``log N``).
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp
import numpy as np

from .algebra import check_index, is_admissible
from .errors import ConvergenceError, DomainError, PoleError
from .tpoly import TPoly, as_fraction
from .zeta import ZetaCombination, fillings


@dataclass(frozen=True)
class NumericConfig:
    precision_bits: int = 128
    tol: float = 1e-10
    max_cutoff: int = 2 ** 24
    start_cutoff: int = 2 ** 12

    def __post_init__(self):
        if self.precision_bits < 64:
            raise DomainError(f"precision must be at least 64 bits, got {self.precision_bits}")
        if self.tol <= 0:
            raise DomainError("tolerance must be positive")
        if self.max_cutoff < self.start_cutoff:
            raise DomainError("max cutoff is below the starting cutoff")

    def to_json(self) -> dict:
        return {
            "precision_bits": self.precision_bits,
            "tol": repr(self.tol),
            "max_cutoff": self.max_cutoff,
        }


DEFAULT_CONFIG = NumericConfig()


@dataclass
class EvalResult:
    value: mp.mpf
    error_bound: mp.mpf
    cutoff_used: int

    def to_json(self, digits: int = 20) -> dict:
        return {
            "value": mp.nstr(self.value, digits),
            "error_bound": mp.nstr(self.error_bound, 3),
            "cutoff_used": self.cutoff_used,
        }


def to_mpf(value) -> mp.mpf:
    """Exact rationals and ints to mpf at the current precision."""
    if isinstance(value, Fraction):
        return mp.mpf(value.numerator) / value.denominator
    return mp.mpf(value)


def _longdouble_to_mpf(value) -> mp.mpf:
    num, den = value.as_integer_ratio()
    return mp.mpf(num) / den


# ---------------------------------------------------------------------------
# Riemann zeta

def zeta_riemann(k: int, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """``zeta(k)`` by Euler-Maclaurin summation of the tail."""
    if k < 2:
        raise DomainError(f"zeta({k}) diverges")
    with mp.workprec(config.precision_bits + 16):
        n = max(16, config.precision_bits // 4)
        head = mp.fsum(mp.mpf(m) ** -k for m in range(1, n))
        N = mp.mpf(n)
        tail = N ** (1 - k) / (k - 1) + N ** -k / 2
        rising = mp.mpf(k)  # (k)_(2j-1)
        last = mp.mpf(1)
        for j in range(1, config.precision_bits):
            term = mp.bernoulli(2 * j) / mp.factorial(2 * j) * rising * N ** (-k - 2 * j + 1)
            tail += term
            last = abs(term)
            if last < mp.mpf(2) ** (-config.precision_bits - 8):
                break
            rising *= (k + 2 * j - 1) * (k + 2 * j)
        value = head + tail
    return EvalResult(+value, last, n)


# ---------------------------------------------------------------------------
# tail extrapolation

def fit_tail(points, log_degree: int, powers, exponent_shift=0) -> mp.mpf:
    """Least-squares fit ``S(N) ~ S + sum c_{p,d} (log N)^d / N^(p+shift)``; returns ``S``.

    ``points`` is a list of ``(N, S(N))`` with mpf partial sums.
    """
    rows = []
    rhs = []
    # columns are normalized at the largest checkpoint; only the constant is returned
    top = max(N for N, _ in points)
    L_top = mp.log(top)
    for N, s in points:
        L = mp.log(N) / L_top
        row = [mp.mpf(1)]
        for p in powers:
            scale = (mp.mpf(top) / N) ** (p + exponent_shift)
            for d in range(log_degree + 1):
                row.append(L ** d * scale)
        rows.append(row)
        rhs.append(s)
    if len(rows) < len(rows[0]):
        raise ConvergenceError("too few checkpoints for the tail fit")
    solution, _ = mp.qr_solve(mp.matrix(rows), mp.matrix(rhs))
    return solution[0]


def geometric_checkpoints(top: int, count: int, ratio: float = 2 ** 0.25) -> list[int]:
    return sorted({int(round(top / ratio ** i)) for i in range(count)})


# ---------------------------------------------------------------------------
# multiple zeta values

def mzv_partial_sums(k, cutoff: int) -> np.ndarray:
    """``S(N)`` for ``N = 1..cutoff`` by prefix-sum dynamic programming."""
    m = np.arange(1, cutoff + 1, dtype=np.longdouble)
    acc = m ** (-k[-1])
    for kj in reversed(k[:-1]):
        prefix = np.concatenate((np.zeros(1, dtype=np.longdouble), np.cumsum(acc)[:-1]))
        acc = m ** (-kj) * prefix
    return np.cumsum(acc)


_TAIL_POWERS = (1, 2)


def _mzv_estimate(k, cutoff: int) -> mp.mpf:
    sums = mzv_partial_sums(k, cutoff)
    log_degree = len(k) - 1
    count = 2 * (1 + len(_TAIL_POWERS) * (log_degree + 1))
    points = [(N, _longdouble_to_mpf(sums[N - 1])) for N in geometric_checkpoints(cutoff, count)]
    return fit_tail(points, log_degree, _TAIL_POWERS)


_mzv_cache: dict = {}
_mzv_lock = threading.Lock()


def mzv_schedule(k, config: NumericConfig = DEFAULT_CONFIG):
    """Yield ``(cutoff, estimate, |estimate - previous|)`` along the doubling schedule."""
    previous = None
    cutoff = config.start_cutoff
    with mp.workprec(config.precision_bits):
        while cutoff <= config.max_cutoff:
            estimate = _mzv_estimate(k, cutoff)
            delta = None if previous is None else abs(estimate - previous)
            yield cutoff, estimate, delta
            previous = estimate
            cutoff *= 2


def eval_mzv(k, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    k = check_index(k)
    if not is_admissible(k):
        raise DomainError(f"zeta{k} diverges: index is not admissible")
    key = (k, config.precision_bits)
    cached = _mzv_cache.get(key)
    if cached is not None and cached.error_bound < config.tol / 4:
        return cached
    if len(k) == 1:
        result = zeta_riemann(k[0], config)
    else:
        result = None
        last = None
        for cutoff, estimate, delta in mzv_schedule(k, config):
            last = (estimate, delta, cutoff)
            if delta is not None and delta < config.tol / 4:
                result = EvalResult(estimate, delta, cutoff)
                break
        if result is None:
            estimate, delta, cutoff = last
            raise ConvergenceError(
                f"zeta{k} did not converge below the cutoff ceiling",
                last_estimate=estimate, error_bound=delta, cutoff=cutoff,
            )
    with _mzv_lock:
        current = _mzv_cache.get(key)
        if current is None or result.error_bound < current.error_bound:
            _mzv_cache[key] = result
    return result


def eval_tmzv(k, t_val, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """``zeta^t(k)`` at a rational ``t`` from the filling expansion."""
    k = check_index(k)
    if not is_admissible(k):
        raise DomainError(f"zeta^t{k} diverges: index is not admissible")
    with mp.workprec(config.precision_bits):
        t = to_mpf(as_fraction(t_val))
        total = mp.mpf(0)
        err = mp.mpf(0)
        cutoff = 0
        for p, merges in fillings(k):
            r = eval_mzv(p, config)
            total += t ** merges * r.value
            err += abs(t) ** merges * r.error_bound
            cutoff = max(cutoff, r.cutoff_used)
    return EvalResult(total, err, cutoff)


def eval_combination(c: ZetaCombination, t_val=0, T_val=0, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    with mp.workprec(config.precision_bits):
        t = to_mpf(as_fraction(t_val))
        T = to_mpf(as_fraction(T_val))
        total = mp.mpf(0)
        err = mp.mpf(0)
        cutoff = 0
        for k in c.sorted_indices():
            coeff = mp.fsum(to_mpf(a) * t ** i * T ** j for (i, j), a in c.terms[k].items())
            if not k:
                total += coeff
                continue
            r = eval_mzv(k, config)
            total += coeff * r.value
            err += abs(coeff) * r.error_bound
            cutoff = max(cutoff, r.cutoff_used)
    return EvalResult(total, err, cutoff)


# ---------------------------------------------------------------------------
# interpolated polylogarithm series

@dataclass
class PolylogSeries:
    index: tuple
    coeffs: list = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1


def polylog_series(k, order: int) -> PolylogSeries:
    """Exact coefficients of ``Li_k(t, z)`` through ``z^order``.

    ``A_j[m] = m^(-k_j) (sum_{m' < m} A_{j+1}[m'] + t A_{j+1}[m])``; a strict
    step contributes 1 and an equal step (a plus in the filling) contributes t.
    """
    k = check_index(k)
    if order < 1:
        raise DomainError("polylog series order must be at least 1")
    t = TPoly((0, 1))
    acc = [TPoly()] + [TPoly.const(Fraction(1, m ** k[-1])) for m in range(1, order + 1)]
    for kj in reversed(k[:-1]):
        new = [TPoly()]
        prefix = TPoly()
        for m in range(1, order + 1):
            new.append((prefix + t * acc[m]) * Fraction(1, m ** kj))
            prefix = prefix + acc[m]
        acc = new
    return PolylogSeries(k, acc)


# ---------------------------------------------------------------------------
# hypergeometric sums

def _check_lower(params, name="lower parameter"):
    for b in params:
        if b <= 0 and Fraction(b).denominator == 1:
            raise PoleError(f"{name} {b} is a nonpositive integer")


def _terminates(upper) -> int | None:
    """Index after which every term vanishes, if an upper parameter is a nonpositive integer."""
    stops = [int(-a) for a in upper if a <= 0 and Fraction(a).denominator == 1]
    return min(stops) if stops else None


def _term_ratio(upper, lower, z):
    def ratio(n):
        num = z
        for a in upper:
            num *= a + n
        den = mp.mpf(n + 1)
        for b in lower:
            den *= b + n
        return num / den
    return ratio


def hypergeometric_sum(upper, lower, z, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """``pFq(upper; lower; z)`` (``p = q + 1``) for rational ``|z| < 1`` or ``z = 1``."""
    upper = [as_fraction(a) for a in upper]
    lower = [as_fraction(b) for b in lower]
    z = as_fraction(z)
    _check_lower(lower)
    stop = _terminates(upper)
    with mp.workprec(config.precision_bits + 32):
        ratio = _term_ratio([to_mpf(a) for a in upper], [to_mpf(b) for b in lower], to_mpf(z))
        if stop is not None:
            total = term = mp.mpf(1)
            for n in range(stop):
                term *= ratio(n)
                total += term
            return EvalResult(+total, mp.mpf(0), stop)
        if abs(z) < 1:
            return _geometric_sum(ratio, abs(z), config)
        if z != 1:
            raise DomainError(f"hypergeometric series diverges at z={z}")
        s = sum(lower) - sum(upper)
        if s <= 0:
            raise DomainError(f"series at z=1 needs sum(lower) - sum(upper) > 0, got {s}")
        return power_tail_sum(_terms_from_ratio(ratio), to_mpf(s), config)


def _terms_from_ratio(ratio):
    def gen():
        term = mp.mpf(1)
        n = 0
        while True:
            yield term
            term *= ratio(n)
            n += 1
    return gen


def _geometric_sum(ratio, zabs: Fraction, config: NumericConfig) -> EvalResult:
    # the term ratio tends to z; bound the tail by a geometric series with
    # the larger of |z| and the current ratio
    tol = mp.mpf(config.tol) / 16
    total = term = mp.mpf(1)
    q = to_mpf(zabs)
    for n in range(config.max_cutoff):
        term *= ratio(n)
        total += term
        rho = max(abs(ratio(n + 1)), q)
        if n >= 8 and rho < 1:
            tail = abs(term) * rho / (1 - rho)
            if tail < tol:
                return EvalResult(+total, tail, n + 1)
    raise ConvergenceError("hypergeometric series did not converge", last_estimate=total, cutoff=config.max_cutoff)


def power_tail_sum(terms, s: mp.mpf, config: NumericConfig = DEFAULT_CONFIG, n_powers: int = 8,
                   start: int = 256, ceiling: int = 2 ** 14) -> EvalResult:
    """Sum a series whose partial sums behave like ``S + N^(-s) (c0 + c1/N + ...)``.

    ``terms`` is a zero-argument callable returning an iterator of terms.
    Partial sums are recorded on a ladder of cutoffs and fit; the cutoff is
    doubled until two successive fits agree within ``tol / 4``.
    """
    powers = range(n_powers)
    count = 2 * (n_powers + 1)
    previous = None
    it = terms()
    sums = []
    total = mp.mpf(0)
    top = start
    while top <= ceiling:
        while len(sums) < top:
            total += next(it)
            sums.append(total)
        points = [(N, sums[N - 1]) for N in geometric_checkpoints(top, count, 2 ** 0.125)]
        estimate = fit_tail(points, 0, powers, exponent_shift=s)
        if previous is not None:
            delta = abs(estimate - previous)
            if delta < mp.mpf(config.tol) / 4:
                return EvalResult(estimate, delta, top)
        previous = estimate
        top *= 2
    raise ConvergenceError("series tail fit did not converge", last_estimate=previous, cutoff=top // 2)


def gauss_2f1(a, b, c, z, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    c = as_fraction(c)
    if c <= 0 and c.denominator == 1:
        raise PoleError(f"2F1 lower parameter c={c} is a nonpositive integer")
    return hypergeometric_sum((a, b), (c,), z, config)


def f3f2_at1(a1, a2, a3, b1, b2, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    return hypergeometric_sum((a1, a2, a3), (b1, b2), 1, config)
