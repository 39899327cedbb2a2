"""Generating function of sums of t-MZVs with fixed weight, depth and height.

``Phi_0(u, v, W) = sum X_0(k, n, s) u^(k-n-s) v^(n-s) W^(s-1)`` with
``W = w^2``.  Its coefficients are computed from the product formula for the
summands ``a_n`` and compared with brute-force sums over index sets; the
hypergeometric closed form, the special cases ``uv = W``, ``v = 0`` and
``w = 0``, and the Wronskian identities are checked on exact or numeric data.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import mpmath as mp
import numpy as np

from .algebra import height, indices
from .errors import ConvergenceError, DomainError, PoleError
from .numerics import (
    DEFAULT_CONFIG,
    EvalResult,
    NumericConfig,
    _longdouble_to_mpf,
    eval_combination,
    eval_mzv,
    eval_tmzv,
    fit_tail,
    geometric_checkpoints,
    polylog_series,
    power_tail_sum,
    to_mpf,
    zeta_riemann,
)
from .relations import Relation, admissible_sum
from .series import MultiSeries, all_exponents, hyp2f1_series, s_add, s_derivative, s_mul, s_scale, s_sub
from .tpoly import ONE, TVAR, TPoly, as_fraction
from .zeta import ZetaCombination, tmzv_expand

PHI_VARS = ("u", "v", "W")
PHI_WEIGHTS = (1, 1, 2)


def report(check: str, params: dict, max_residual, exact: bool, ok: bool, **extra) -> dict:
    out = {
        "check": check,
        "params": params,
        "max_residual": max_residual if isinstance(max_residual, str) else mp.nstr(max_residual, 6),
        "exact": exact,
        "status": "pass" if ok else "fail",
    }
    out.update(extra)
    return out


# ---------------------------------------------------------------------------
# brute-force sums

@dataclass(frozen=True)
class SumTriple:
    k: int
    n: int
    s: int

    def __post_init__(self):
        if not (self.n >= self.s >= 1 and self.k >= self.n + self.s):
            raise DomainError(f"(k,n,s)=({self.k},{self.n},{self.s}) needs k >= n+s and n >= s >= 1")

    def exponent(self) -> tuple:
        """Exponent of ``u^(k-n-s) v^(n-s) W^(s-1)`` in the generating function."""
        return (self.k - self.n - self.s, self.n - self.s, self.s - 1)

    @classmethod
    def from_exponent(cls, e) -> SumTriple:
        a, b, c = e
        s = c + 1
        n = b + s
        return cls(a + n + s, n, s)


def index_set(k: int, n: int, s: int, admissible: bool) -> list:
    return [idx for idx in indices(k, n, admissible=admissible) if height(idx) == s] if k > 0 else []


def x0_bruteforce(triple: SumTriple) -> ZetaCombination:
    out = ZetaCombination()
    for idx in index_set(triple.k, triple.n, triple.s, admissible=True):
        out = out + tmzv_expand(idx)
    return out


# ---------------------------------------------------------------------------
# the summands a_n

def _poly(terms: dict) -> MultiSeries:
    return MultiSeries(PHI_VARS, {e: TPoly(c) if not isinstance(c, TPoly) else c for e, c in terms.items()},
                       weights=PHI_WEIGHTS)


def q_factor(m: int) -> MultiSeries:
    """``(m - alpha)(m - beta) = m^2 - m(u + v t) + t(uv - W)``."""
    return _poly({
        (0, 0, 0): (m * m,),
        (1, 0, 0): (-m,),
        (0, 1, 0): (0, -m),
        (1, 1, 0): (0, 1),
        (0, 0, 1): (0, -1),
    })


def p_factor(m: int) -> MultiSeries:
    """``(m + gamma_1)(m + gamma_2) = m^2 - m(u + (t-1)v) + (t-1)(uv - W)``."""
    return _poly({
        (0, 0, 0): (m * m,),
        (1, 0, 0): (-m,),
        (0, 1, 0): (m, -m),
        (1, 1, 0): (-1, 1),
        (0, 0, 1): (1, -1),
    })


@dataclass
class AnTerm:
    """``a_n = numerator / denominator`` as polynomials in ``u, v, W, t``."""
    n: int
    numerator: MultiSeries
    denominator: MultiSeries

    def evaluate(self, u, v, W, t):
        """Exact value at rational arguments; a vanishing denominator is a pole."""
        point = [as_fraction(u), as_fraction(v), as_fraction(W)]
        t = as_fraction(t)
        den = _eval_poly(self.denominator, point, t)
        if den == 0:
            raise PoleError(f"a_{self.n} has a pole at (u,v,W,t)=({u},{v},{W},{t})")
        return _eval_poly(self.numerator, point, t) / den


def _eval_poly(p: MultiSeries, point, t):
    total = Fraction(0)
    for e, c in p.coeffs.items():
        term = c(t)
        for x, a in zip(point, e):
            term *= x ** a
        total += term
    return total


def an_term(n: int) -> AnTerm:
    if n < 1:
        raise DomainError("a_n is defined for n >= 1")
    num = _poly({(0, 0, 0): (1,)})
    den = _poly({(0, 0, 0): (1,)})
    for m in range(1, n):
        num = num * p_factor(m)
    for m in range(1, n + 1):
        den = den * q_factor(m)
    return AnTerm(n, num, den)


def an_series(n: int, cap: int) -> MultiSeries:
    """``a_n`` expanded around ``u = v = W = 0`` through weighted degree ``cap``."""
    term = an_term(n)
    den = MultiSeries(PHI_VARS, term.denominator.coeffs, cap=cap, weights=PHI_WEIGHTS)
    num = MultiSeries(PHI_VARS, term.numerator.coeffs, cap=cap, weights=PHI_WEIGHTS)
    return num * den.inverse()


def an_value(n: int, u, v, W, t):
    """``a_n`` at a rational point by the first-order recurrence."""
    u, v, W, t = (as_fraction(x) for x in (u, v, W, t))
    a = None
    for m in range(1, n + 1):
        q = (m - u) * (m - v * t) - t * W
        if q == 0:
            raise PoleError(f"a_{m} has a pole at (u,v,W,t)=({u},{v},{W},{t})")
        if m == 1:
            a = 1 / q
        else:
            a = a * ((m - 1) * (m - 1 - u + (1 - t) * v) - (1 - t) * (u * v - W)) / q
    return a


# ---------------------------------------------------------------------------
# Phi_0 as a multivariate series

def _power_sums(e1: MultiSeries, e2: MultiSeries, top: int) -> list:
    """Newton: ``p_1 = e1``, ``p_r = e1 p_(r-1) - e2 p_(r-2)`` (``p_0 = 2``)."""
    p = [e1.like({(0,) * len(e1.variables): Fraction(2)}), e1]
    for r in range(2, top + 1):
        p.append(e1 * p[r - 1] - e2 * p[r - 2])
    return p


def _phi_symmetric(t: Fraction, cap: int):
    """Elementary symmetric functions of (alpha, beta) and (gamma_1, gamma_2)."""
    def poly(terms):
        return MultiSeries(PHI_VARS, terms, cap=cap, weights=PHI_WEIGHTS)
    e1_ab = poly({(1, 0, 0): Fraction(1), (0, 1, 0): t})
    e2_ab = poly({(1, 1, 0): t, (0, 0, 1): -t})
    e1_g = poly({(1, 0, 0): Fraction(-1), (0, 1, 0): 1 - t})
    e2_g = poly({(1, 1, 0): t - 1, (0, 0, 1): 1 - t})
    return e1_ab, e2_ab, e1_g, e2_g


def _mul_scalar(s: MultiSeries, c) -> MultiSeries:
    return s.like({e: v * c for e, v in s.coeffs.items()})


def phi0_terms(t, cap: int, N: int) -> dict:
    """Per-monomial arrays of ``a_n`` coefficients for ``n = 1..N`` at numeric ``t``.

    ``n^2 a_n = exp(sum_r [p_r(alpha,beta) H_n^(r) - (-1)^r p_r(gamma) H_(n-1)^(r)] / r)``
    with ``H^(r)`` the harmonic numbers of order ``r``.
    """
    t = as_fraction(t)
    e1_ab, e2_ab, e1_g, e2_g = _phi_symmetric(t, cap)
    p_ab = _power_sums(e1_ab, e2_ab, cap)
    p_g = _power_sums(e1_g, e2_g, cap)
    n = np.arange(1, N + 1, dtype=np.longdouble)
    zero = np.zeros(N, dtype=np.longdouble)
    L = MultiSeries(PHI_VARS, {}, cap=cap, weights=PHI_WEIGHTS)
    for r in range(1, cap + 1):
        H = np.cumsum(n ** -r)
        H_prev = np.concatenate((np.zeros(1, dtype=np.longdouble), H[:-1]))
        sign = -1 if r % 2 else 1
        for e in set(p_ab[r].coeffs) | set(p_g[r].coeffs):
            ca = _ld(p_ab[r].coefficient(e)) / r
            cg = _ld(p_g[r].coefficient(e)) * sign / r
            L.coeffs[e] = L.coeffs.get(e, zero) + ca * H - cg * H_prev
    E = L.like({(0, 0, 0): np.ones(N, dtype=np.longdouble)})
    term = E
    for j in range(1, cap + 1):
        term = _mul_scalar(term * L, np.longdouble(1) / j)
        E = E + term
    inv_n2 = n ** -2
    return {e: c * inv_n2 for e, c in E.coeffs.items()}


def _ld(x: Fraction):
    x = as_fraction(x)
    return np.longdouble(x.numerator) / np.longdouble(x.denominator)


def _extrapolate_columns(columns: dict, cap: int, cutoff: int) -> dict:
    out = {}
    with mp.workprec(128):
        for e, col in columns.items():
            sums = np.cumsum(col)
            degree = e[0] + e[1] + 2 * e[2]
            count = 2 * (1 + 2 * (degree + 1))
            points = []
            for N in geometric_checkpoints(cutoff, count):
                num, den = sums[N - 1].as_integer_ratio()
                points.append((N, mp.mpf(num) / den))
            out[e] = fit_tail(points, degree, (1, 2))
    return out


PHI0_CEILING = 2 ** 20  # long-double arrays of this length per monomial stay within memory


def phi0_numeric(t, cap: int, config: NumericConfig = DEFAULT_CONFIG, start: int = 2 ** 12,
                 tol=None) -> tuple[dict, mp.mpf, int]:
    """Coefficients of ``Phi_0`` at a numeric ``t`` through weighted degree ``cap``.

    Returns ``(coefficients, error estimate, cutoff)``; the cutoff doubles until
    two successive extrapolations agree within ``tol / 4`` (default
    ``config.tol``).  Long-double partial sums put a floor near ``1e-10`` on
    the attainable agreement for the highest coefficients.
    """
    tol = mp.mpf(config.tol if tol is None else tol)
    previous = None
    N = start
    ceiling = min(config.max_cutoff, PHI0_CEILING)
    while N <= ceiling:
        current = _extrapolate_columns(phi0_terms(t, cap, N), cap, N)
        if previous is not None:
            delta = max((abs(current[e] - previous.get(e, 0)) for e in current), default=mp.mpf(0))
            if delta < tol / 4:
                return current, delta, N
        previous = current
        N *= 2
    raise ConvergenceError("generating-function coefficients did not converge below the cutoff ceiling",
                           cutoff=N // 2)


def phi0_series(cap: int, t=None, config: NumericConfig = DEFAULT_CONFIG, tol=None) -> MultiSeries:
    """``Phi_0`` as a MultiSeries in ``(u, v, W)`` truncated at weighted degree ``cap``.

    With a numeric ``t`` the coefficients are mpf numbers.  With ``t=None``
    each coefficient (a polynomial in ``t`` of degree at most its weighted
    degree) is interpolated from ``cap + 1`` numeric samples into a TPoly with
    mpf entries.
    """
    if cap < 0:
        raise DomainError("cap must be nonnegative")
    if t is not None:
        coeffs, _, _ = phi0_numeric(t, cap, config, tol=tol)
        return MultiSeries(PHI_VARS, coeffs, cap=cap, weights=PHI_WEIGHTS)
    nodes = [Fraction(2 * j, cap) - 1 if cap else Fraction(0) for j in range(cap + 1)]
    samples = [phi0_numeric(x, cap, config, tol=tol)[0] for x in nodes]
    out = {}
    with mp.workprec(config.precision_bits):
        for e in samples[0]:
            degree = e[0] + e[1] + 2 * e[2]
            used = nodes[: degree + 1] if degree < cap else nodes
            vals = [samples[nodes.index(x)][e] for x in used]
            out[e] = _interpolate(used, vals)
    return MultiSeries(PHI_VARS, out, cap=cap, weights=PHI_WEIGHTS)


def _interpolate(nodes, values) -> TPoly:
    """Newton divided differences, expanded to the power basis."""
    xs = [to_mpf(x) for x in nodes]
    coef = list(values)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [mp.mpf(0)] * n
    basis = [mp.mpf(1)]
    for i in range(n):
        for d, b in enumerate(basis):
            poly[d] += coef[i] * b
        nxt = [mp.mpf(0)] * (len(basis) + 1)
        for d, b in enumerate(basis):
            nxt[d + 1] += b
            nxt[d] -= xs[i] * b
        basis = nxt
    return TPoly(poly)


def phi0_bruteforce_check(cap: int, t_values, config: NumericConfig = DEFAULT_CONFIG, tol=1e-5) -> list[dict]:
    """Compare generating-function coefficients with brute-force sums, per ``t``."""
    records = []
    for t in t_values:
        coeffs, err, cutoff = phi0_numeric(t, cap, config, tol=max(config.tol, tol * 1e-3))
        worst = mp.mpf(0)
        for e in all_exponents(PHI_VARS, cap, PHI_WEIGHTS):
            triple = SumTriple.from_exponent(e)
            brute = eval_combination(x0_bruteforce(triple), t, 0, config).value
            worst = max(worst, abs(coeffs.get(e, 0) - brute))
        records.append(report("phi0_vs_bruteforce", {"cap": cap, "t": str(t)}, worst, False, worst < tol,
                              cutoff=cutoff))
    return records


# ---------------------------------------------------------------------------
# the differential equation

def _phi0_z_coefficients(u, v, W, t, order: int) -> list:
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(_an_step(coeffs[-1] if n > 1 else None, n, u, v, W, t))
    return coeffs


def _an_step(prev, n, u, v, W, t):
    q = (n - u) * (n - v * t) - t * W
    if q == 0:
        raise PoleError(f"degenerate sample: the coefficient equation at n={n} is singular")
    if prev is None:
        return 1 / q
    return prev * ((n - 1) * (n - 1 - u + (1 - t) * v) - (1 - t) * (u * v - W)) / q


def ode_residual(sample, order: int) -> list:
    """Residual series of the differential equation for the power-series solution.

    ``sample = (u, v, w, t)``; the solution is built coefficientwise from the
    indicial recurrence and the residual
    ``z^2(1-z) f'' + z{(1-u-vt)(1-z) - vz} f' + [t + (1-t)z](uv - w^2) f - z``
    is evaluated with generic series arithmetic.
    """
    u, v, w, t = (as_fraction(x) for x in sample)
    W = w * w
    f = _phi0_z_coefficients(u, v, W, t, order)
    f1 = s_derivative(f) + [Fraction(0)]
    f2 = s_derivative(f1[:-1]) + [Fraction(0), Fraction(0)]
    one_minus_z = [Fraction(1), Fraction(-1)] + [Fraction(0)] * (order - 1)
    z2 = [Fraction(0), Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 2)
    zz = [Fraction(0), Fraction(1)] + [Fraction(0)] * (order - 1)
    term1 = s_mul(s_mul(z2, one_minus_z, order), f2, order)
    bracket = s_sub(s_scale(one_minus_z, 1 - u - v * t), s_scale(zz, v))
    term2 = s_mul(s_mul(zz, bracket, order), f1, order)
    lin = s_scale(s_add([t] + [Fraction(0)] * order, s_scale(zz, 1 - t)), u * v - W)
    term3 = s_mul(lin, f, order)
    return s_sub(s_add(s_add(term1, term2), term3), zz)


def ode_check(sample, order: int = 30) -> dict:
    res = ode_residual(sample, order)
    worst = max(abs(c) for c in res)
    params = dict(zip(("u", "v", "w", "t"), map(str, sample)), order=order)
    return report("ode_residual", params, str(worst), True, worst == 0)


# ---------------------------------------------------------------------------
# the z-series system for X and X_0

class _XSeries:
    def __init__(self, order: int):
        self.order = order
        self._cache: dict = {}

    def li(self, idx):
        if idx not in self._cache:
            self._cache[idx] = polylog_series(idx, self.order).coeffs
        return self._cache[idx]

    def X(self, k, n, s, admissible=False) -> list:
        zero = [TPoly()] * (self.order + 1)
        if (k, n, s) == (0, 0, 0):
            return [] if admissible else [ONE] + zero[1:]
        if k <= 0 or n <= 0:
            return zero
        out = zero
        for idx in index_set(k, n, s, admissible):
            out = [a + b for a, b in zip(out, self.li(idx))]
        return out


def x_series_system_check(weight_cap: int, order: int) -> dict:
    """Both derivative identities for ``X`` and ``X_0`` coefficientwise through ``z^order``."""
    xs = _XSeries(order)
    failures = []
    checked = 0
    for k in range(1, weight_cap + 1):
        for n in range(1, k + 1):
            for s in range(0, n + 1):
                if k < n + s:
                    continue
                if s >= 1:
                    lhs = s_derivative(xs.X(k, n, s, True))
                    inner = [a - b + c for a, b, c in zip(xs.X(k - 1, n, s - 1), _pad(xs.X(k - 1, n, s - 1, True), order),
                                                          _pad(xs.X(k - 1, n, s, True), order))]
                    rhs = inner[1:]  # (1/z) * series with zero constant term
                    checked += 1
                    if inner[0] or lhs != rhs:
                        failures.append(("X0", k, n, s))
                if n >= 2:
                    diff = [a - b for a, b in zip(xs.X(k, n, s), _pad(xs.X(k, n, s, True), order))]
                    lhs = s_derivative(diff)
                    g = xs.X(k - 1, n - 1, s)
                    # (t/z + 1/(1-z)) g: coefficient of z^(m-1) is t g_m + sum_{j<m} g_j
                    rhs = [TVAR * g[m] + sum((g[j] for j in range(m)), TPoly()) for m in range(1, order + 1)]
                    checked += 1
                    if g[0] or lhs != rhs:
                        failures.append(("X-X0", k, n, s))
    ok = not failures
    return report("x_series_system", {"weight_cap": weight_cap, "order": order}, "0" if ok else str(len(failures)),
                  True, ok, identities=checked, failures=[list(f) for f in failures])


def _pad(series: list, order: int) -> list:
    return series if series else [TPoly()] * (order + 1)


# ---------------------------------------------------------------------------
# the hypergeometric closed form

def _real_roots(e1, e2):
    disc = e1 * e1 - 4 * e2
    if disc < 0:
        raise DomainError("characteristic roots are complex at this sample")
    r = mp.sqrt(disc)
    return (e1 - r) / 2, (e1 + r) / 2


def characteristic_roots(u, v, w, t):
    """``(alpha, beta), (gamma_1, gamma_2)`` as mpc pairs."""
    u, v, w, t = (to_mpf(as_fraction(x)) for x in (u, v, w, t))
    W = w * w
    return _roots(u + v * t, t * (u * v - W)), _roots(-u - (t - 1) * v, (t - 1) * (u * v - W))


def _roots(e1, e2):
    r = mp.sqrt(mp.mpc(e1 * e1 - 4 * e2))
    return (e1 - r) / 2, (e1 + r) / 2


def phi0_value_from_an(sample, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """``sum_n a_n`` at a rational sample, by extrapolated partial sums."""
    u, v, w, t = (as_fraction(x) for x in sample)
    W = w * w
    with mp.workprec(config.precision_bits + 32):
        uu, vv, WW, tt = (to_mpf(x) for x in (u, v, W, t))

        def terms():
            a = None
            n = 1
            while True:
                q = (n - uu) * (n - vv * tt) - tt * WW
                if q == 0:
                    raise PoleError(f"a_{n} has a pole at the sample")
                if a is None:
                    a = 1 / q
                else:
                    a = a * ((n - 1) * (n - 1 - uu + (1 - tt) * vv) - (1 - tt) * (uu * vv - WW)) / q
                yield a
                n += 1

        return power_tail_sum(terms, 1 - vv, config)


def phi0_value_from_3f2(sample, config: NumericConfig = DEFAULT_CONFIG, root: int = 1) -> EvalResult:
    """The closed form ``1/((1-v)(1-beta)) 3F2(1-g1-b, 1-g2-b, 1; 2-v, 2-b; 1)``.

    ``root`` selects which characteristic root plays ``beta``.
    """
    u, v, w, t = (as_fraction(x) for x in sample)
    with mp.workprec(config.precision_bits + 32):
        uu, vv, WW, tt = (to_mpf(x) for x in (u, v, w * w, t))
        ab = _real_roots(uu + vv * tt, tt * (uu * vv - WW))
        beta = ab[root]
        alpha = ab[1 - root]
        if alpha >= 1 or beta >= 1:
            raise DomainError("closed form needs both roots below 1")
        # only symmetric functions of gamma_1, gamma_2 enter, so they may be complex
        gsum = -uu - (tt - 1) * vv
        gprod = (tt - 1) * (uu * vv - WW)

        def terms():
            term = mp.mpf(1)
            n = 0
            while True:
                yield term
                x = n + 1 - beta
                term *= (x * x - x * gsum + gprod) / ((2 - vv + n) * (2 - beta + n))
                n += 1

        r = power_tail_sum(terms, 1 - alpha, config)
        scale = 1 / ((1 - vv) * (1 - beta))
        return EvalResult(r.value * scale, r.error_bound * abs(scale), r.cutoff_used)


def closed_form_check(sample, tol=1e-8, config: NumericConfig = DEFAULT_CONFIG) -> dict:
    params = dict(zip(("u", "v", "w", "t"), map(str, sample)))
    direct = phi0_value_from_an(sample, config)
    closed = [phi0_value_from_3f2(sample, config, root) for root in (1, 0)]
    worst = max(abs(c.value - direct.value) for c in closed)
    return report("closed_form_sum", params, worst, False, worst < tol,
                  value=mp.nstr(direct.value, 20))


def uv_w2_closed_form(sample, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """``sum 1/((n - beta)(n - v))`` with ``beta = u + v t`` (valid when ``w^2 = uv``)."""
    u, v, w, t = (as_fraction(x) for x in sample)
    if w * w != u * v:
        raise DomainError("sample does not satisfy w^2 = uv")
    with mp.workprec(config.precision_bits + 32):
        beta = to_mpf(u + v * t)
        vv = to_mpf(v)

        def terms():
            n = 1
            while True:
                yield 1 / ((n - beta) * (n - vv))
                n += 1

        return power_tail_sum(terms, mp.mpf(1), config)


def sum_case_uv_w2(k: int, n: int) -> Relation:
    """Sum-formula relation with coefficients read off the ``uv = w^2`` expansion.

    The coefficient of ``u^(k-n-1) v^(n-1)`` in
    ``sum_{m,l} zeta(m+l) sum_i C(m-1, i) u^(m-1-i) v^(i+l-1) t^i``.
    """
    if not k > n >= 1:
        raise DomainError(f"needs k > n >= 1, got k={k}, n={n}")
    coeff = TPoly()
    for m in range(1, k):
        l = k - m
        i = m - 1 - (k - n - 1)
        if 0 <= i <= m - 1 and i + l - 1 == n - 1:
            coeff = coeff + TVAR ** i * comb(m - 1, i)
    return Relation(f"sum({k},{n})", admissible_sum(k, n), ZetaCombination.symbol((k,), coeff))


# ---------------------------------------------------------------------------
# v = 0: heights equal to depths

def v0_series(cap: int, t_val, config: NumericConfig = DEFAULT_CONFIG) -> MultiSeries:
    """``exp(sum_n zeta(n)/n (p_n(alpha,beta) - p_n(delta))) - 1`` in ``(u, W)``."""
    t = as_fraction(t_val)
    variables, weights = ("u", "W"), (1, 2)

    def poly(terms):
        return MultiSeries(variables, terms, cap=cap, weights=weights)

    e1 = poly({(1, 0): Fraction(1)})
    p_ab = _power_sums(e1, poly({(0, 1): -t}), cap)
    p_d = _power_sums(e1, poly({(0, 1): 1 - t}), cap)
    with mp.workprec(config.precision_bits):
        L = poly({})
        for r in range(2, cap + 1):
            z = zeta_riemann(r, config).value / r
            diff = p_ab[r] - p_d[r]
            L = L + diff.map(lambda c: to_mpf(c) * z)
        E = poly({(0, 0): mp.mpf(1)})
        term = E
        for j in range(1, cap + 1):
            term = _mul_scalar(term * L, mp.mpf(1) / j)
            E = E + term
        return E - 1


def v0_case_check(cap: int, t_val, tol=1e-5, config: NumericConfig = DEFAULT_CONFIG) -> dict:
    series = v0_series(cap, t_val, config)
    worst = mp.mpf(0)
    for k in range(2, cap + 1):
        for s in range(1, k // 2 + 1):
            brute = eval_combination(x0_bruteforce(SumTriple(k, s, s)), t_val, 0, config).value
            worst = max(worst, abs(series.coefficient((k - 2 * s, s)) - brute))
    return report("v0_case", {"cap": cap, "t": str(t_val)}, worst, False, worst < tol)


# ---------------------------------------------------------------------------
# w = 0: height one

def w0_inner_literal(n: int, j: int, t) -> Fraction:
    """``sum_m (-1)^(m-1) C(n-1, m-1) prod_{l<n} (1 + c m/l) / m^j`` exactly, ``c = (1-t)/t``."""
    c = _w0_c(t)
    total = Fraction(0)
    for m in range(1, n + 1):
        prod = Fraction(1)
        for l in range(1, n):
            prod *= 1 + c * m / l
        total += (-1) ** (m - 1) * comb(n - 1, m - 1) * prod / Fraction(m) ** j
    return total


def w0_inner_closed(n: int, j: int, t) -> Fraction:
    """The same inner sum after the alternating difference removes the polynomial part.

    ``(1/n) sum_{d<j} c^d e_d(1, ..., 1/(n-1)) h_(j-1-d)(1, ..., 1/n)`` with
    elementary ``e`` and complete homogeneous ``h`` symmetric functions.
    """
    c = _w0_c(t)
    e = [Fraction(1)] + [Fraction(0)] * j
    for l in range(1, n):
        for d in range(j, 0, -1):
            e[d] += e[d - 1] / l
    h = [Fraction(1)] + [Fraction(0)] * j
    for l in range(1, n + 1):
        for q in range(1, j + 1):
            h[q] += h[q - 1] / l
    return sum(c ** d * e[d] * h[j - 1 - d] for d in range(j)) / n


def _w0_c(t) -> Fraction:
    t = as_fraction(t)
    if t == 0:
        raise DomainError("the height-one double sum needs a nonzero t")
    return (1 - t) / t


def w0_inner_check(n_max: int, j_max: int, t) -> dict:
    """Exact agreement of the literal and reduced inner sums for ``n <= n_max``."""
    bad = [(n, j) for n in range(1, n_max + 1) for j in range(1, j_max + 1)
           if w0_inner_literal(n, j, t) != w0_inner_closed(n, j, t)]
    return report("w0_inner_sum", {"n_max": n_max, "j_max": j_max, "t": str(t)}, str(len(bad)), True, not bad)


def w0_partial_sums(i: int, j: int, t, N: int) -> np.ndarray:
    """Outer partial sums ``S(1..N)`` of the height-one double sum in long double."""
    c = _ld(_w0_c(t))
    n = np.arange(1, N + 1, dtype=np.longdouble)
    inv = 1 / n
    inv_prev = np.concatenate((np.zeros(1, dtype=np.longdouble), inv[:-1]))
    # e_d over 1..1/(n-1) and h_q over 1..1/n, for every n at once
    e = [np.ones(N, dtype=np.longdouble)]
    h = [np.ones(N, dtype=np.longdouble)]
    for _ in range(1, j):
        shifted = np.concatenate((np.zeros(1, dtype=np.longdouble), e[-1][:-1]))
        e.append(np.cumsum(shifted * inv_prev))
        h.append(np.cumsum(h[-1] * inv))
    inner = sum(c ** d * e[d] * h[j - 1 - d] for d in range(j)) * inv
    return np.cumsum(inner * _ld(as_fraction(t)) ** (j - 1) * inv ** i)


def w0_height_one(i: int, j: int, t_val, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
    """The alternating double sum for ``zeta^t(i+1, 1, ..., 1)`` (``j-1`` ones).

    ``sum_{n>=m>=1} (-1)^(m-1) C(n-1, m-1) prod_{l<n} (1 + c m/l) t^(j-1) / (n^i m^j)``
    with ``c = (1-t)/t``.  Inner sums use the reduced form (see
    :func:`w0_inner_check`); outer partial sums are fit in ``(log N)^d / N^(i+p)``.
    """
    if i < 1 or j < 1:
        raise DomainError("i and j must be positive")
    _w0_c(t_val)
    count = 2 * (1 + 3 * j)
    previous = None
    N = config.start_cutoff
    with mp.workprec(config.precision_bits):
        while N <= config.max_cutoff:
            sums = w0_partial_sums(i, j, t_val, N)
            points = [(M, _longdouble_to_mpf(sums[M - 1])) for M in geometric_checkpoints(N, count)]
            estimate = fit_tail(points, j - 1, (0, 1, 2), exponent_shift=i)
            if previous is not None and abs(estimate - previous) < mp.mpf(config.tol) / 4:
                return EvalResult(estimate, abs(estimate - previous), N)
            previous = estimate
            N *= 2
    raise ConvergenceError("height-one double sum did not converge", last_estimate=previous, cutoff=N // 2)


def w0_check(i: int, j: int, t_val, tol=1e-5, config: NumericConfig = DEFAULT_CONFIG) -> dict:
    value = w0_height_one(i, j, t_val, config)
    reference = eval_tmzv((i + 1,) + (1,) * (j - 1), t_val, config)
    diff = abs(value.value - reference.value)
    return report("w0_height_one", {"i": i, "j": j, "t": str(t_val)}, diff, False, diff < tol)


def adz_series(cap: int, config: NumericConfig = DEFAULT_CONFIG) -> MultiSeries:
    """``1 - exp(sum_n zeta(n)/n (u^n + v^n - (u+v)^n))`` in ``(u, v)``."""
    variables = ("u", "v")
    with mp.workprec(config.precision_bits):
        L = MultiSeries(variables, {}, cap=cap)
        for r in range(2, cap + 1):
            z = zeta_riemann(r, config).value / r
            terms = {(r, 0): 1, (0, r): 1}
            for a in range(r + 1):
                terms[(a, r - a)] = terms.get((a, r - a), 0) - comb(r, a)
            L = L + MultiSeries(variables, {e: c * z for e, c in terms.items()}, cap=cap)
        E = MultiSeries(variables, {(0, 0): mp.mpf(1)}, cap=cap)
        term = E
        for j in range(1, cap + 1):
            term = _mul_scalar(term * L, mp.mpf(1) / j)
            E = E + term
        return 1 - E


def adz_check(cap: int, tol=1e-5, config: NumericConfig = DEFAULT_CONFIG) -> dict:
    if cap < 3:
        raise DomainError("cap must be at least 3")
    series = adz_series(cap, config)
    worst = mp.mpf(0)
    for k in range(2, cap + 1):
        for n in range(1, k):
            ref = eval_mzv((k - n + 1,) + (1,) * (n - 1), config).value
            worst = max(worst, abs(series.coefficient((k - n, n)) - ref))
    return report("adz", {"cap": cap}, worst, False, worst < tol)


# ---------------------------------------------------------------------------
# Wronskian and the bilinear hypergeometric identity

@dataclass(frozen=True)
class FrobeniusParams:
    alpha: Fraction
    beta: Fraction
    gamma1: Fraction
    gamma2: Fraction

    @property
    def v(self) -> Fraction:
        return self.alpha + self.beta + self.gamma1 + self.gamma2

    def check(self):
        d = self.alpha - self.beta
        if d.denominator == 1:
            raise PoleError(f"alpha - beta = {d} is an integer; a hypergeometric parameter hits a pole")

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("alpha", "beta", "gamma1", "gamma2")}

    @classmethod
    def of(cls, *values) -> FrobeniusParams:
        return cls(*(as_fraction(x) for x in values))


def wronskian_check(p: FrobeniusParams, order: int) -> dict:
    """``(beta-alpha) F1 F2 + z (F1 F2' - F1' F2) = (beta-alpha)(1-z)^(-v)`` exactly."""
    p.check()
    a, b, g1, g2 = p.alpha, p.beta, p.gamma1, p.gamma2
    F1 = hyp2f1_series(g1 + a, g2 + a, a - b + 1, order)
    F2 = hyp2f1_series(g1 + b, g2 + b, b - a + 1, order)
    d1 = s_derivative(F1) + [Fraction(0)]
    d2 = s_derivative(F2) + [Fraction(0)]
    cross = s_sub(s_mul(F1, d2, order), s_mul(d1, F2, order))
    lhs = s_add(s_scale(s_mul(F1, F2, order), b - a), [Fraction(0)] + cross[:-1])
    rhs = [Fraction(1)]
    for n in range(1, order + 1):
        rhs.append(rhs[-1] * (p.v + n - 1) / n)
    rhs = s_scale(rhs, b - a)
    worst = max(abs(x - y) for x, y in zip(lhs, rhs))
    return report("wronskian", dict(p.to_json(), order=order), str(worst), True, worst == 0)


def duality_sides(p: FrobeniusParams, order: int) -> list:
    p.check()
    a, b, g1, g2 = p.alpha, p.beta, p.gamma1, p.gamma2
    first = s_mul(hyp2f1_series(g1 + a, g2 + a, a - b + 1, order),
                  hyp2f1_series(-g1 - a, 1 - g2 - a, b - a + 1, order), order)
    second = s_mul(hyp2f1_series(g1 + b, g2 + b, b - a + 1, order),
                   hyp2f1_series(-g1 - b, 1 - g2 - b, a - b + 1, order), order)
    return s_sub(s_scale(first, g1 + b), s_scale(second, g1 + a))


def duality_check(p: FrobeniusParams, order: int) -> dict:
    combo = duality_sides(p, order)
    target = [p.beta - p.alpha] + [Fraction(0)] * order
    worst = max(abs(x - y) for x, y in zip(combo, target))
    return report("duality", dict(p.to_json(), order=order), str(worst), True, worst == 0)


# ---------------------------------------------------------------------------
# the explicit Pochhammer identity

def _poch(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def _fact(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def explicit_lhs(n: int, x, y1, y2) -> Fraction:
    total = Fraction(0)
    for j in range(n + 1):
        den = _fact(j) * _fact(n - j) * _poch(x - j, n + 1)
        if den == 0:
            raise PoleError(f"x={x} hits a pole of (x-{j})_{n + 1}")
        total += (-1) ** j * _poch(y1 - j + 1, n - 1) * _poch(y2 - j, n) / den
    return total


def explicit_rhs(n: int, x, y1, y2) -> Fraction:
    total = Fraction(0)
    for j in range(n + 1):
        den = _fact(j) * _fact(n - j) * _poch(x - j, n + 1)
        if den == 0:
            raise PoleError(f"x={x} hits a pole of (x-{j})_{n + 1}")
        total += (-1) ** j * _poch(y1 - x - n + j + 1, n - 1) * _poch(y2 - x - n + j, n) / den
    return total


_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23)


def random_rational(rng: random.Random, bound=Fraction(1, 4)) -> Fraction:
    """A rational of magnitude at most ``bound`` with a denominator from a fixed prime set."""
    q = rng.choice(_PRIMES)
    limit = int(bound * q)
    return Fraction(rng.randint(-limit, limit), q)


def explicit_samples(n: int, count: int, seed: int) -> list:
    """Pole-free samples ``(x, y1, y2)``; pole-touching draws are discarded."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        x = random_rational(rng)
        if x.denominator == 1 and -n <= x <= n:
            continue
        out.append((x, random_rational(rng), random_rational(rng)))
    return out


def pochhammer_sample_count(n: int) -> int:
    return max(40, n * (n + 1) + 1)


def pochhammer_identity(n: int, samples) -> dict:
    if n < 1:
        raise DomainError("n must be positive")
    bad = 0
    used = 0
    for x, y1, y2 in samples:
        x, y1, y2 = as_fraction(x), as_fraction(y1), as_fraction(y2)
        try:
            lhs = explicit_lhs(n, x, y1, y2)
            rhs = explicit_rhs(n, x, y1, y2)
        except PoleError:
            continue
        used += 1
        if lhs != rhs:
            bad += 1
    ok = bad == 0 and used > 0
    return report("pochhammer_identity", {"n": n, "samples": used}, str(bad), True, ok)


def pochhammer_reflection(n: int, samples) -> dict:
    """``RHS(x, y1, y2) = -LHS(-x, y1 - x, y2 - x)``, a substitution symmetry of the two sides."""
    bad = 0
    used = 0
    for x, y1, y2 in samples:
        x, y1, y2 = as_fraction(x), as_fraction(y1), as_fraction(y2)
        try:
            a = explicit_rhs(n, x, y1, y2)
            b = -explicit_lhs(n, -x, y1 - x, y2 - x)
        except PoleError:
            continue
        used += 1
        bad += a != b
    return report("pochhammer_reflection", {"n": n, "samples": used}, str(bad), True, bad == 0 and used > 0)
