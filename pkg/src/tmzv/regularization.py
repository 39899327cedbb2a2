"""Regularization: h^1 as a polynomial ring in ``y`` over h^0.

For either classical product (``sh`` or ``st``) every h^1 element has a
unique expansion ``sum_i w_i * y^(*i)`` with ``w_i`` in h^0.  Per weight we
write every h^1 word in the spanning family ``u * y^(*i)`` (``u`` an h^0 word)
by exact sparse Gauss-Jordan elimination and cache the change of basis.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    Element,
    Word,
    h0_words,
    h1_words,
    in_h0,
    in_h1,
    power,
    product,
    s_map,
    subalgebra_class,
)
from .errors import DomainError, TMZVError
from .tpoly import TPoly
from .zeta import ZetaCombination, z_classical

REG_KINDS = ("sh", "st")


class SingularSystemError(TMZVError):
    """The decomposition system was singular; this contradicts uniqueness."""


@dataclass
class RegDecomposition:
    kind: str
    parts: list = field(default_factory=list)

    def reconstruct(self) -> Element:
        y = Element.word("y")
        total = Element()
        for i, part in enumerate(self.parts):
            if part:
                total = total + product(self.kind, part, power(self.kind, y, i))
        return total

    def to_json(self) -> dict:
        return {"kind": self.kind, "parts": [p.to_json() for p in self.parts]}

    @classmethod
    def from_json(cls, data) -> RegDecomposition:
        return cls(data["kind"], [Element.from_json(p) for p in data["parts"]])


def _leading_y(w: Word) -> int:
    return len(w) - len(w.lstrip("y"))


def _pivot_key(w: Word):
    return (_leading_y(w), len(w), w)


def solve_change_of_basis(rows: list[dict]) -> dict:
    """Invert a square sparse system given as row vectors over word columns.

    ``rows[j]`` is the expansion of basis element ``j``.  Returns
    ``{word: {j: coefficient}}`` with ``word = sum_j coefficient * rows[j]``.
    """
    work = []
    pivot_row: dict[Word, int] = {}
    for j, row in enumerate(rows):
        left = dict(row)
        right = {j: Fraction(1)}
        # reduce against the pivot rows found so far (kept fully reduced)
        for col in [c for c in left if c in pivot_row]:
            factor = left.get(col)
            if not factor:
                continue
            pl, pr = work[pivot_row[col]]
            _axpy(left, pl, -factor)
            _axpy(right, pr, -factor)
        if not left:
            raise SingularSystemError("decomposition system is singular")
        col = max(left, key=_pivot_key)
        scale = 1 / left[col]
        left = {c: v * scale for c, v in left.items()}
        right = {c: v * scale for c, v in right.items()}
        for pl, pr in work:
            factor = pl.get(col)
            if factor:
                _axpy(pl, left, -factor)
                _axpy(pr, right, -factor)
        pivot_row[col] = len(work)
        work.append((left, right))
    if len(pivot_row) != len(rows):
        raise SingularSystemError("decomposition system is not square")
    return {col: work[r][1] for col, r in pivot_row.items()}


def _axpy(target: dict, source: dict, factor):
    for c, v in source.items():
        new = target.get(c, 0) + factor * v
        if new:
            target[c] = new
        else:
            target.pop(c, None)


_basis_cache: dict = {}
_basis_lock = threading.Lock()


def _basis(kind: str, weight: int):
    key = (kind, weight)
    cached = _basis_cache.get(key)
    if cached is not None:
        return cached
    y = Element.word("y")
    labels = []
    rows = []
    for i in range(weight + 1):
        ypow = power(kind, y, i)
        for u in h0_words(weight - i):
            expansion = product(kind, Element.word(u), ypow)
            labels.append((u, i))
            rows.append({w: c.constant_term() for w, c in expansion.terms.items()})
    expected = len(h1_words(weight))
    if len(rows) != expected:
        raise SingularSystemError(f"weight {weight}: {len(rows)} spanning elements for {expected} words")
    inverse = solve_change_of_basis(rows)
    result = (labels, inverse)
    with _basis_lock:
        _basis_cache.setdefault(key, result)
    return _basis_cache[key]


def reg_decompose(kind: str, e: Element) -> RegDecomposition:
    if kind not in REG_KINDS:
        raise DomainError(f"regularization kind must be one of {REG_KINDS}, got {kind!r}")
    if not in_h1(e):
        raise DomainError(f"cannot regularize {e.format()}: class {subalgebra_class(e)} is outside h^1")
    parts: dict[int, Element] = {}
    for w, c in e.terms.items():
        labels, inverse = _basis(kind, len(w))
        for j, coeff in inverse[w].items():
            u, i = labels[j]
            parts[i] = parts.get(i, Element()) + Element.word(u, c * coeff)
    degree = max((i for i, p in parts.items() if p), default=0)
    return RegDecomposition(kind, [parts.get(i, Element()) for i in range(degree + 1)])


def z_reg_eval(kind: str, e: Element) -> ZetaCombination:
    """The regularized map ``Z_t^kind = Z^kind o S_t`` with ``y -> T``."""
    decomposition = reg_decompose(kind, s_map(e))
    out = ZetaCombination()
    for i, part in enumerate(decomposition.parts):
        if part:
            out = out + z_classical(part).scale(TPoly.const(1), T_power=i)
    if in_h0(e) and out.T_degree() != 0:
        raise TMZVError(f"h^0 input {e.format()} produced a T-dependent value")
    return out
