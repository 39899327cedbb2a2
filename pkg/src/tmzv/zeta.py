"""Symbolic MZV combinations and the maps ``Z_t`` / ``Z`` into them.

A :class:`ZetaCombination` is a finite sum ``sum_k c_k(t, T) zeta(k)`` over
admissible indices ``k`` (the empty index ``()`` stands for the constant 1)
with coefficients in Q[t, T].  Coefficients are stored sparsely as
``{(t_degree, T_degree): Fraction}``.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product as cartesian

from .algebra import Element, Index, check_index, in_h0, index_from_word, is_admissible, subalgebra_class
from .errors import DomainError
from .tpoly import TPoly, as_fraction

BiPoly = dict  # {(i, j): Fraction} meaning sum c t^i T^j


def _bipoly_from_tpoly(c: TPoly, t_power_shift: int = 0, T_power: int = 0) -> BiPoly:
    return {(i + t_power_shift, T_power): a for i, a in enumerate(c.coeffs) if a != 0}


class ZetaCombination:
    """Q[t,T]-linear combination of MZV symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Index, BiPoly] = {}
        if terms:
            for k, coeff in terms.items():
                self.add(k, coeff)

    @classmethod
    def symbol(cls, k, coeff=None) -> ZetaCombination:
        out = cls()
        out.add(tuple(k), {(0, 0): Fraction(1)} if coeff is None else coeff)
        return out

    def add(self, k: Index, coeff) -> None:
        k = tuple(k)
        if k and not is_admissible(k):
            raise DomainError(f"MZV symbol {k} is not admissible")
        if isinstance(coeff, TPoly):
            coeff = _bipoly_from_tpoly(coeff)
        elif not isinstance(coeff, dict):
            coeff = {(0, 0): as_fraction(coeff)}
        slot = self.terms.setdefault(k, {})
        for key, c in coeff.items():
            new = slot.get(key, 0) + c
            if new:
                slot[key] = new
            else:
                slot.pop(key, None)
        if not slot:
            del self.terms[k]

    def copy(self) -> ZetaCombination:
        return ZetaCombination({k: dict(c) for k, c in self.terms.items()})

    def __add__(self, other: ZetaCombination) -> ZetaCombination:
        out = self.copy()
        for k, c in other.terms.items():
            out.add(k, c)
        return out

    def __neg__(self) -> ZetaCombination:
        return ZetaCombination({k: {key: -c for key, c in cs.items()} for k, cs in self.terms.items()})

    def __sub__(self, other: ZetaCombination) -> ZetaCombination:
        return self + (-other)

    def scale(self, factor: TPoly, T_power: int = 0) -> ZetaCombination:
        """Multiply every coefficient by ``factor(t) * T^T_power``."""
        if not isinstance(factor, TPoly):
            factor = TPoly.const(factor)
        out = ZetaCombination()
        for k, cs in self.terms.items():
            new: BiPoly = {}
            for (i, j), c in cs.items():
                for d, f in enumerate(factor.coeffs):
                    if f:
                        key = (i + d, j + T_power)
                        new[key] = new.get(key, 0) + c * f
            out.add(k, new)
        return out

    def __eq__(self, other):
        if not isinstance(other, ZetaCombination):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, k) -> BiPoly:
        return dict(self.terms.get(tuple(k), {}))

    def T_degree(self) -> int:
        return max((j for cs in self.terms.values() for (_, j) in cs), default=0)

    def t_degree(self) -> int:
        return max((i for cs in self.terms.values() for (i, _) in cs), default=0)

    def T_part(self, j: int) -> ZetaCombination:
        """The coefficient of ``T^j`` as a T-free combination."""
        out = ZetaCombination()
        for k, cs in self.terms.items():
            out.add(k, {(i, 0): c for (i, jj), c in cs.items() if jj == j})
        return out

    def specialize(self, t_val=None, T_val=None) -> ZetaCombination:
        """Substitute rational values for ``t`` and/or ``T``."""
        out = ZetaCombination()
        for k, cs in self.terms.items():
            new: BiPoly = {}
            for (i, j), c in cs.items():
                if t_val is not None:
                    c, i = c * as_fraction(t_val) ** i, 0
                if T_val is not None:
                    c, j = c * as_fraction(T_val) ** j, 0
                new[(i, j)] = new.get((i, j), 0) + c
            out.add(k, new)
        return out

    def sorted_indices(self) -> list[Index]:
        return sorted(self.terms, key=lambda k: (sum(k), -len(k), k))

    def to_json(self) -> list[dict]:
        records = []
        for k in self.sorted_indices():
            cs = self.terms[k]
            ti = max(i for i, _ in cs) + 1
            tj = max(j for _, j in cs) + 1
            grid = [["0"] * tj for _ in range(ti)]
            for (i, j), c in cs.items():
                grid[i][j] = str(c)
            records.append({"index": list(k), "coeff_tT": grid})
        return records

    @classmethod
    def from_json(cls, records) -> ZetaCombination:
        out = cls()
        for rec in records:
            coeff = {}
            for i, row in enumerate(rec["coeff_tT"]):
                for j, c in enumerate(row):
                    if Fraction(c):
                        coeff[(i, j)] = Fraction(c)
            out.add(tuple(rec["index"]), coeff)
        return out

    def format(self, tmzv_basis: bool = False) -> str:
        """Text form; with ``tmzv_basis`` the symbols of depth >= 2 are read as ``zeta^t``."""
        if not self.terms:
            return "0"
        pieces = []
        for k in self.sorted_indices():
            head = "ζ^t(" if tmzv_basis and len(k) > 1 else "ζ("
            name = "1" if not k else head + ",".join(map(str, k)) + ")"
            coeff = _format_bipoly(self.terms[k])
            compound = "+" in coeff or "-" in coeff[1:]
            if coeff in ("1", "-1"):
                body = coeff[:-1] + name
            elif compound:
                body = f"({coeff})*{name}"
            else:
                body = f"{coeff}*{name}"
            if name == "1" and coeff in ("1", "-1"):
                body = coeff
            elif name == "1":
                body = f"({coeff})" if compound else coeff
            pieces.append(body)
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"ZetaCombination({self.format()!r})"


def _format_bipoly(cs: BiPoly) -> str:
    parts = []
    for (i, j) in sorted(cs):
        c = cs[(i, j)]
        mono = "*".join(
            s for s in (
                "" if i == 0 else ("t" if i == 1 else f"t^{i}"),
                "" if j == 0 else ("T" if j == 1 else f"T^{j}"),
            ) if s
        )
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return "+".join(parts).replace("+-", "-")


def fillings(k: Index):
    """Yield ``(p, merges)`` for every comma/plus filling of the gaps of ``k``."""
    n = len(k)
    for choice in cartesian((False, True), repeat=n - 1):
        parts = [k[0]]
        for plus, part in zip(choice, k[1:]):
            if plus:
                parts[-1] += part
            else:
                parts.append(part)
        yield tuple(parts), sum(choice)


def tmzv_expand(k) -> ZetaCombination:
    """``zeta^t(k) = sum_p t^(n - dep p) zeta(p)`` over all fillings ``p``."""
    k = check_index(k)
    if not is_admissible(k):
        raise DomainError(f"t-MZV of non-admissible index {k}")
    out = ZetaCombination()
    for p, merges in fillings(k):
        out.add(p, {(merges, 0): Fraction(1)})
    return out


def to_tmzv_basis(c: ZetaCombination) -> ZetaCombination:
    """Rewrite an MZV combination over t-MZV symbols (returned with the same index keys).

    ``zeta^t(k)`` is ``zeta(k)`` plus terms of smaller depth, so peeling off
    the deepest symbol first is a triangular solve.
    """
    rest = c.copy()
    out = ZetaCombination()
    while rest.terms:
        k = max(rest.terms, key=lambda idx: (len(idx), idx))
        coeff = dict(rest.terms[k])
        out.add(k, coeff)
        if not k:
            del rest.terms[k]
            continue
        for p, merges in fillings(k):
            rest.add(p, {(i + merges, j): -a for (i, j), a in coeff.items()})
    return out


def z_symbolic(e: Element) -> ZetaCombination:
    """``Z_t`` on h^0: each admissible z-word goes to its t-MZV expansion."""
    if not in_h0(e):
        raise DomainError(f"Z_t is only defined on h^0; got class {subalgebra_class(e)} for {e.format()}")
    out = ZetaCombination()
    for w, c in e.terms.items():
        if not w:
            out.add((), c)
        else:
            out = out + tmzv_expand(index_from_word(w)).scale(c)
    return out


def z_classical(e: Element) -> ZetaCombination:
    """``Z`` on h^0: each z-word goes to the plain MZV symbol of its index."""
    if not in_h0(e):
        raise DomainError(f"Z is only defined on h^0; got class {subalgebra_class(e)} for {e.format()}")
    out = ZetaCombination()
    for w, c in e.terms.items():
        out.add(index_from_word(w) if w else (), c)
    return out
