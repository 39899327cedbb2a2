"""Relation families among t-MZVs.

Every generator returns a :class:`Relation` whose ``combination`` is a
Q[t,T]-combination of MZV symbols asserted to vanish (or to equal another
combination).  Numeric certification lives in :mod:`tmzv.numerics`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import (
    Element,
    Index,
    check_index,
    in_h0,
    in_h1,
    indices,
    is_admissible,
    product,
    s_map,
    subalgebra_class,
    word_from_index,
)
from .errors import DomainError, TMZVError
from .numerics import DEFAULT_CONFIG, EvalResult, NumericConfig, eval_combination
from .regularization import REG_KINDS, z_reg_eval
from .tpoly import ONE, TVAR, TPoly
from .zeta import ZetaCombination, tmzv_expand, to_tmzv_basis, z_classical, z_symbolic

_ONE_MINUS_2T = TPoly((1, -2))
_T2_MINUS_T = TPoly((0, -1, 1))
_T_MINUS_T2 = TPoly((0, 1, -1))
_ONE_MINUS_T = TPoly((1, -1))


@dataclass
class Relation:
    label: str
    combination: ZetaCombination
    equals: ZetaCombination | None = None

    @property
    def claim(self):
        return "vanishes" if self.equals is None else "equals"

    def residual_combination(self) -> ZetaCombination:
        return self.combination if self.equals is None else self.combination - self.equals

    def residual(self, t_val=0, T_val=0, config: NumericConfig = DEFAULT_CONFIG) -> EvalResult:
        return eval_combination(self.residual_combination(), t_val, T_val, config)

    def T_residuals(self, t_val=0, config: NumericConfig = DEFAULT_CONFIG) -> list[EvalResult]:
        """One residual per power of ``T``; each must vanish on its own."""
        c = self.residual_combination()
        return [eval_combination(c.T_part(j), t_val, 0, config) for j in range(c.T_degree() + 1)]

    def specialize(self, t_val) -> Relation:
        return Relation(
            f"{self.label}@t={t_val}",
            self.combination.specialize(t_val),
            None if self.equals is None else self.equals.specialize(t_val),
        )

    def to_json(self) -> dict:
        claim = "vanishes" if self.equals is None else {"equals": self.equals.to_json()}
        return {"label": self.label, "terms": self.combination.to_json(), "claim": claim}

    @classmethod
    def from_json(cls, data) -> Relation:
        claim = data["claim"]
        equals = None if claim == "vanishes" else ZetaCombination.from_json(claim["equals"])
        return cls(data["label"], ZetaCombination.from_json(data["terms"]), equals)

    def format(self, tmzv_basis: bool = False) -> str:
        """Text form over MZV symbols, or over t-MZV symbols with ``tmzv_basis``."""
        if not tmzv_basis:
            rhs = "0" if self.equals is None else self.equals.format()
            return f"{self.combination.format()} = {rhs}"
        rhs = "0" if self.equals is None else to_tmzv_basis(self.equals).format(True)
        return f"{to_tmzv_basis(self.combination).format(True)} = {rhs}"


def _idx_label(k) -> str:
    return ",".join(map(str, k))


def _zword(*parts) -> Element:
    return Element.word(word_from_index(parts))


def _tz(k, coeff=ONE) -> Element:
    return Element.word(word_from_index(k), coeff)


def _tmzv_sum(terms) -> ZetaCombination:
    """``sum c * zeta^t(k)`` for ``(k, c)`` pairs with TPoly coefficients."""
    out = ZetaCombination()
    for k, c in terms:
        out = out + tmzv_expand(k).scale(c)
    return out


# ---------------------------------------------------------------------------
# Euler decomposition

def euler_word_form(k: int, l: int) -> Element:
    """Closed form of ``z_k t_sh z_l`` with its double-binomial coefficients."""
    if k < 1 or l < 1:
        raise DomainError("Euler decomposition needs k, l >= 1")
    out = Element()
    for i in range(1, k + 1):
        out = out + _tz((k + l - i, i), TPoly.const(comb(k + l - i - 1, l - 1)))
    for i in range(1, l + 1):
        out = out + _tz((k + l - i, i), TPoly.const(comb(k + l - i - 1, k - 1)))
    return out + _tz((k + l,), TVAR * -comb(k + l, k))


def euler_decomposition(k: int, l: int) -> Relation:
    """``zeta(k) zeta(l)`` against its t-MZV decomposition.

    The product of the two single zetas is written as MZV symbols through the
    classical harmonic product ``z_k * z_l``.
    """
    if k < 2 or l < 2:
        raise DomainError(f"zeta-level Euler decomposition needs k, l >= 2, got ({k},{l})")
    lhs = z_classical(product("st", _zword(k), _zword(l)))
    rhs = z_symbolic(euler_word_form(k, l))
    return Relation(f"euler({k},{l})", lhs - rhs)


# ---------------------------------------------------------------------------
# double shuffle

def fds_relation(w1: Element, w0: Element) -> Relation:
    for name, e in (("w1", w1), ("w0", w0)):
        if not in_h0(e):
            raise DomainError(f"finite double shuffle needs h^0 operands; {name}={e.format()} is {subalgebra_class(e)}")
    diff = product("t_sh", w1, w0) - product("t_st", w1, w0)
    return Relation(f"fds({w1.format()};{w0.format()})", z_symbolic(diff))


def eds_relation(w1: Element, w0: Element, kind: str = "sh") -> Relation:
    if kind not in REG_KINDS:
        raise DomainError(f"regularization kind must be one of {REG_KINDS}")
    if not in_h1(w1):
        raise DomainError(f"w1={w1.format()} is not in h^1")
    if not in_h0(w0):
        raise DomainError(f"w0={w0.format()} is not in h^0")
    diff = product("t_sh", w1, w0) - product("t_st", w1, w0)
    return Relation(f"eds[{kind}]({w1.format()};{w0.format()})", z_reg_eval(kind, diff))


# ---------------------------------------------------------------------------
# Hoffman relations

def y_product_closed_form(k, kind: str) -> Element:
    """Closed form of ``y t_sh z_k`` (``kind='sh'``) or ``y t_st z_k`` (``kind='st'``)."""
    k = check_index(k)
    n = len(k)
    out = Element()
    for i in range(n + 1):
        out = out + _tz(k[:i] + (1,) + k[i:])
    if kind == "sh":
        for i in range(n):
            for j in range(2, k[i] + 1):
                out = out + _tz(k[:i] + (j, k[i] + 1 - j) + k[i + 1:])
        for i in range(n):
            bump = k[i] + (1 if i == n - 1 else 0)
            out = out + _tz(k[:i] + (k[i] + 1,) + k[i + 1:], TVAR * -bump)
    elif kind == "st":
        for i in range(n):
            out = out + _tz(k[:i] + (k[i] + 1,) + k[i + 1:], _ONE_MINUS_2T)
        for i in range(n - 1):
            out = out + _tz(k[:i] + (k[i] + k[i + 1] + 1,) + k[i + 2:], _T2_MINUS_T)
    else:
        raise DomainError(f"kind must be 'sh' or 'st', got {kind!r}")
    return out


def hoffman_statement(k) -> Element:
    """The Hoffman relation as an h^0 element: left side minus right side, in z-words."""
    k = check_index(k)
    n = len(k)
    out = Element()
    for i in range(n):
        delta = 1 if i == n - 1 else 0
        coeff = ONE + TVAR * (k[i] + delta - 2)
        out = out + _tz(k[:i] + (k[i] + 1,) + k[i + 1:], coeff)
    for i in range(n):
        for j in range(2, k[i] + 1):
            out = out - _tz(k[:i] + (j, k[i] + 1 - j) + k[i + 1:])
    for i in range(n - 1):
        out = out - _tz(k[:i] + (k[i] + k[i + 1] + 1,) + k[i + 2:], _T_MINUS_T2)
    return out


def hoffman_relation(k) -> Relation:
    k = check_index(k)
    if not is_admissible(k):
        raise DomainError(f"Hoffman relation needs an admissible index, got {k}")
    y = Element.word("y")
    w = Element.word(word_from_index(k))
    diff = product("t_sh", y, w) - product("t_st", y, w)
    if not in_h0(diff):
        raise TMZVError(f"y-product difference for {k} left h^0: {diff.format()}")
    statement = hoffman_statement(k)
    if statement != -diff:
        raise TMZVError(f"Hoffman statement for {k} does not match the double shuffle difference")
    return Relation(f"hoffman({_idx_label(k)})", z_symbolic(statement))


# ---------------------------------------------------------------------------
# sum formula

def sum_formula_coefficients(k: int, n: int) -> tuple[TPoly, TPoly]:
    """The two closed forms of the sum-formula coefficient in Q[t]."""
    if not k > n >= 1:
        raise DomainError(f"sum formula needs k > n >= 1, got k={k}, n={n}")
    first = TPoly()
    for i in range(n):
        first = first + TVAR ** i * _ONE_MINUS_T ** (n - 1 - i) * comb(k - 1, i)
    second = TPoly([comb(k - n + i - 1, i) for i in range(n)])
    return first, second


def admissible_sum(k: int, n: int) -> ZetaCombination:
    return _tmzv_sum((idx, ONE) for idx in indices(k, n, admissible=True))


def sum_formula_relation(k: int, n: int) -> Relation:
    first, second = sum_formula_coefficients(k, n)
    if first != second:
        raise TMZVError(f"sum formula coefficients disagree at ({k},{n}): {first} vs {second}")
    rhs = ZetaCombination.symbol((k,), second)
    return Relation(f"sum({k},{n})", admissible_sum(k, n), rhs)


# ---------------------------------------------------------------------------
# cyclic sum formula

def cyclic_sum_relation(k) -> Relation:
    k = check_index(k)
    if all(p == 1 for p in k):
        raise DomainError("cyclic sum formula needs a part greater than 1")
    n = len(k)
    total = sum(k)
    lhs = []
    rhs = []
    for i in range(n):
        rotated = k[i + 1:] + k[:i]
        for j in range(1, k[i]):
            lhs.append(((k[i] + 1 - j,) + rotated + (j,), ONE))
        rhs.append(((k[i] + 1,) + rotated, _ONE_MINUS_T))
    right = _tmzv_sum(rhs) + ZetaCombination.symbol((total + 1,), TVAR ** n * total)
    return Relation(f"cyclic({_idx_label(k)})", _tmzv_sum(lhs), right)


# ---------------------------------------------------------------------------
# a sigma / binomial word identity that implies the sum formula

def x_shuffle_y(a: int, b: int) -> Element:
    """``x (x^a sh y^b) y``."""
    inner = product("sh", Element.word("x" * a), Element.word("y" * b))
    return product("concat", Element.word("x"), product("concat", inner, Element.word("y")))


def sigma_binomial_sides(k: int, n: int) -> tuple[Element, Element]:
    if not k > n >= 1:
        raise DomainError(f"needs k > n >= 1, got k={k}, n={n}")
    lhs = s_map(x_shuffle_y(k - n - 1, n - 1), negate_t=True)
    rhs = Element()
    for i in range(1, n + 1):
        coeff = TPoly.const(comb(k - i - 1, n - i)) * TPoly((0, -1)) ** (n - i)
        rhs = rhs + x_shuffle_y(k - i - 1, i - 1).scale(coeff)
    return lhs, rhs


def sigma_binomial_identity(k: int, n: int) -> dict:
    lhs, rhs = sigma_binomial_sides(k, n)
    ok = lhs == rhs
    return {
        "check": "sigma_binomial_identity",
        "params": {"k": k, "n": n},
        "max_residual": "0" if ok else str(len((lhs - rhs).terms)),
        "exact": True,
        "status": "pass" if ok else "fail",
    }


# ---------------------------------------------------------------------------
# consistency web in weight 4

def weight4_web() -> dict:
    """Solve for ``zeta^t(3,1)`` and ``zeta^t(2,2)`` in units of ``zeta(4)``.

    Uses the sum formula (4,2) and the finite double shuffle of ``xy`` with
    itself, together with Euler's ``zeta(2)^2`` decomposition and the
    harmonic square of ``z_2``, which give ``zeta(2)^2 = 5/2 zeta(4)``.
    Returns the two coefficient polynomials.
    """
    # fds(xy, xy): 4 zeta^t(3,1) = (1 + 4t) zeta(4)
    fds = fds_relation(_zword(2), _zword(2)).combination
    t31 = tmzv_expand((3, 1))
    # fds = 4 t31 - (1+4t) zeta(4) exactly as symbols
    expected = t31.scale(TPoly.const(4)) - ZetaCombination.symbol((4,), TPoly((1, 4)))
    if fds != expected:
        raise TMZVError(f"unexpected weight-4 double shuffle: {fds.format()}")
    c31 = TPoly((Fraction(1, 4), 1))
    first, _ = sum_formula_coefficients(4, 2)
    c22 = first - c31
    # Euler: zeta(2)^2 = 4 zeta^t(3,1) + 2 zeta^t(2,2) - 6t zeta(4); the
    # harmonic square gives zeta(2)^2 = 2 zeta(2,2) + zeta(4) = 5/2 zeta(4)
    euler = euler_word_form(2, 2)
    combined = c31 * euler.coefficient(word_from_index((3, 1))) + c22 * euler.coefficient(word_from_index((2, 2)))
    combined = combined + euler.coefficient(word_from_index((4,)))
    if combined != TPoly.const(Fraction(5, 2)):
        raise TMZVError(f"weight-4 relations are inconsistent: zeta(2)^2 = ({combined}) zeta(4)")
    return {"zeta_t(3,1)": c31, "zeta_t(2,2)": c22}
