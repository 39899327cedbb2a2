"""Noncommutative polynomials over Q[t] in the letters ``x`` and ``y``.

Words are plain strings over ``"xy"`` (the empty string is the unit word).
An :class:`Element` is a finite Q[t]-combination of words.  The products
implemented here are

``concat``  concatenation,
``sh``      the shuffle product,
``t_sh``    the t-deformed shuffle, whose correction terms come from
            ``rho(x) = 0, rho(y) = t x`` acting when one side runs out,
``st``      the harmonic (stuffle) product on ``h^1``,
``t_st``    the t-deformed harmonic product with merge weight ``1 - 2t`` and
            the extra ``(t^2 - t) x^(k+l)`` term.

The maps ``sigma`` (letter substitution ``y -> t x + y``) and ``S`` (sigma on
everything except the final letter) intertwine the deformed products with the
classical ones.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError
from .tpoly import ONE, TVAR, ZERO, TPoly, as_fraction

Word = str
Index = tuple

PRODUCT_KINDS = ("concat", "sh", "t_sh", "st", "t_st")

H0, H1, NEITHER = "h0", "h1", "neither"

_ONE_MINUS_2T = TPoly((Fraction(1), Fraction(-2)))
_T2_MINUS_T = TPoly((Fraction(0), Fraction(-1), Fraction(1)))


# ---------------------------------------------------------------------------
# Indices and z-words

def check_index(k) -> Index:
    k = tuple(int(p) for p in k)
    if not k or any(p < 1 for p in k):
        raise DomainError(f"an index is a nonempty tuple of positive integers, got {k!r}")
    return k


def weight(k: Index) -> int:
    return sum(k)


def depth(k: Index) -> int:
    return len(k)


def height(k: Index) -> int:
    return sum(1 for p in k if p >= 2)


def is_admissible(k: Index) -> bool:
    return len(k) > 0 and k[0] >= 2


def z(k: int) -> Word:
    """The letter block ``z_k = x^(k-1) y``."""
    return "x" * (k - 1) + "y"


def word_from_index(k) -> Word:
    return "".join(z(p) for p in check_index(k))


def index_from_word(w: Word) -> Index:
    if not w or w[-1] != "y":
        raise DomainError(f"word {w or '1'!r} is not in h^1 (must be nonempty and end in y)")
    return tuple(len(block) + 1 for block in w.split("y")[:-1])


def compositions(total: int, parts: int | None = None) -> Iterator[Index]:
    """All compositions of ``total``, optionally with a fixed number of parts.

    Yielded in lexicographic order of the parts.
    """
    if total == 0:
        if parts in (None, 0):
            yield ()
        return
    if parts == 0:
        return
    for first in range(1, total + 1):
        rest_parts = None if parts is None else parts - 1
        if rest_parts is not None and (rest_parts > total - first or (rest_parts == 0 and first != total)):
            continue
        for rest in compositions(total - first, rest_parts):
            yield (first,) + rest


def indices(weight_: int, depth_: int | None = None, admissible: bool = False) -> list[Index]:
    out = [k for k in compositions(weight_, depth_) if k]
    if admissible:
        out = [k for k in out if k[0] >= 2]
    return out


def words_of_length(n: int) -> list[Word]:
    out = [""]
    for _ in range(n):
        out = [w + a for w in out for a in "xy"]
    return out


def word_class(w: Word) -> str:
    if not w:
        return H0
    if w[-1] != "y":
        return NEITHER
    return H0 if w[0] == "x" else H1


def h0_words(weight_: int) -> list[Word]:
    """All monomials of h^0 of the given weight, i.e. admissible z-words."""
    if weight_ == 0:
        return [""]
    return [word_from_index(k) for k in indices(weight_, admissible=True)]


def h1_words(weight_: int) -> list[Word]:
    if weight_ == 0:
        return [""]
    return [word_from_index(k) for k in indices(weight_)]


def word_key(w: Word):
    """Canonical order: length first, then lexicographic with x < y."""
    return (len(w), w)


# ---------------------------------------------------------------------------
# Parsing and formatting

_Z_TOKEN = re.compile(r"z(\d+)")


def parse_word(text: str) -> Word:
    """Parse ``"xyy"``, ``"z2 z1"``, ``"z2z1"`` or ``"1"`` (the empty word)."""
    s = text.strip()
    if s in ("", "1"):
        return ""
    if s.startswith("z"):
        compact = re.sub(r"[\s,*·]+", "", s)
        tokens = _Z_TOKEN.findall(compact)
        if "".join(f"z{tok}" for tok in tokens) != compact or not tokens:
            raise DomainError(f"cannot parse z-word {text!r}")
        parts = [int(tok) for tok in tokens]
        if min(parts) < 1:
            raise DomainError(f"z-index must be positive in {text!r}")
        return "".join(z(p) for p in parts)
    compact = re.sub(r"\s+", "", s)
    if not set(compact) <= {"x", "y"}:
        raise DomainError(f"cannot parse word {text!r}: letters must be x or y")
    return compact


def parse_index(text: str) -> Index:
    try:
        parts = tuple(int(p) for p in text.replace(" ", "").split(",") if p)
    except ValueError as exc:
        raise DomainError(f"cannot parse index {text!r}") from exc
    return check_index(parts)


def format_word(w: Word, z_notation: bool = False) -> str:
    if not w:
        return "1"
    if z_notation:
        return "".join(f"z{p}" for p in index_from_word(w))
    return w


# ---------------------------------------------------------------------------
# Elements of h_t

class Element:
    """A finite Q[t]-linear combination of words; zero terms are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Word, TPoly] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                self._add_term(w, c)

    def _add_term(self, w: Word, c):
        if not isinstance(c, TPoly):
            c = TPoly.const(c)
        if not c:
            return
        new = self.terms.get(w, ZERO) + c
        if new:
            self.terms[w] = new
        else:
            self.terms.pop(w, None)

    @classmethod
    def word(cls, w: Word, c=ONE) -> Element:
        return cls({w: c})

    @classmethod
    def from_index(cls, k) -> Element:
        return cls.word(word_from_index(k))

    @classmethod
    def parse(cls, text: str) -> Element:
        return cls.word(parse_word(text))

    def items(self) -> list[tuple[Word, TPoly]]:
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    def __iter__(self):
        return iter(self.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, w: Word) -> TPoly:
        return self.terms.get(w, ZERO)

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Element) -> Element:
        out = Element(self.terms)
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __neg__(self) -> Element:
        return Element({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, c) -> Element:
        if not isinstance(c, TPoly):
            c = TPoly.const(c)
        return Element({w: v * c for w, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> Element:
        return Element({w: fn(c) for w, c in self.terms.items()})

    def specialize_t(self, t_val) -> Element:
        """Substitute a rational value for ``t``."""
        return self.map_coefficients(lambda c: TPoly.const(c(as_fraction(t_val))))

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def to_json(self) -> list:
        return [[w, c.to_json()] for w, c in self.items()]

    @classmethod
    def from_json(cls, data) -> Element:
        return cls((w, TPoly.from_json(c)) for w, c in data)

    def format(self, z_notation: bool = False) -> str:
        if not self.terms:
            return "0"
        if z_notation:
            key = lambda item: (-item[0].count("y"), index_from_word(item[0]) if item[0] else ())
        else:
            key = lambda item: (-item[0].count("y"), item[0])
        pieces = []
        for w, c in sorted(self.terms.items(), key=key):
            name = format_word(w, z_notation)
            nonzero = [x for x in c.coeffs if x != 0]
            neg = len(nonzero) == 1 and nonzero[0] < 0
            mag = -c if neg else c
            if mag == ONE:
                body = name
            elif len(nonzero) > 1:
                body = f"({mag})*{name}"
            else:
                body = f"{mag}*{name}"
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"Element({self.format()!r})"


def concat(a: Element, b: Element) -> Element:
    out = Element()
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            out._add_term(wa + wb, ca * cb)
    return out


def subalgebra_class(e: Element) -> str:
    """``h0`` if every monomial is 1 or x...y, ``h1`` if every monomial is 1 or ...y."""
    classes = {word_class(w) for w in e.terms}
    if NEITHER in classes:
        return NEITHER
    if H1 in classes:
        return H1
    return H0


def in_h1(e: Element) -> bool:
    return subalgebra_class(e) in (H0, H1)


def in_h0(e: Element) -> bool:
    return subalgebra_class(e) == H0


# ---------------------------------------------------------------------------
# sigma_t and S_t

@lru_cache(maxsize=None)
def _sigma_word(w: Word, sign: int) -> tuple:
    # each y becomes y or (sign*t) x; the t-degree counts the replaced y's
    acc = {"": ONE}
    coeff_y = TPoly((Fraction(0), Fraction(sign)))
    for letter in w:
        nxt: dict[Word, TPoly] = {}
        for v, c in acc.items():
            if letter == "x":
                nxt[v + "x"] = nxt.get(v + "x", ZERO) + c
            else:
                nxt[v + "y"] = nxt.get(v + "y", ZERO) + c
                nxt[v + "x"] = nxt.get(v + "x", ZERO) + c * coeff_y
        acc = nxt
    return tuple((v, c) for v, c in acc.items() if c)


def sigma_map(e: Element, negate_t: bool = False) -> Element:
    sign = -1 if negate_t else 1
    out = Element()
    for w, c in e.terms.items():
        for v, cv in _sigma_word(w, sign):
            out._add_term(v, c * cv)
    return out


def s_map(e: Element, negate_t: bool = False) -> Element:
    """``S_t(1) = 1`` and ``S_t(w a) = sigma_t(w) a`` for the final letter ``a``."""
    sign = -1 if negate_t else 1
    out = Element()
    for w, c in e.terms.items():
        if not w:
            out._add_term("", c)
            continue
        last = w[-1]
        for v, cv in _sigma_word(w[:-1], sign):
            out._add_term(v + last, c * cv)
    return out


def rho(letter: str) -> Element:
    return Element.word("x", TVAR) if letter == "y" else Element()


# ---------------------------------------------------------------------------
# Products on words (memoized, insert-only caches)

def _acc(out: dict, prefix: Word, terms, factor: TPoly = ONE):
    for w, c in terms:
        key = prefix + w
        out[key] = out.get(key, ZERO) + c * factor


def _finish(out: dict) -> tuple:
    return tuple((w, c) for w, c in out.items() if c)


@lru_cache(maxsize=None)
def _shuffle_words(w1: Word, w2: Word, deformed: bool) -> tuple:
    if not w1:
        return ((w2, ONE),)
    if not w2:
        return ((w1, ONE),)
    a, u1 = w1[0], w1[1:]
    b, u2 = w2[0], w2[1:]
    out: dict[Word, TPoly] = {}
    _acc(out, a, _shuffle_words(u1, w2, deformed))
    _acc(out, b, _shuffle_words(w1, u2, deformed))
    if deformed:
        # -delta(w_1) rho(a) b w_2 - delta(w_2) rho(b) a w_1
        if not u1 and a == "y":
            _acc(out, "x", ((w2, ONE),), -TVAR)
        if not u2 and b == "y":
            _acc(out, "x", ((w1, ONE),), -TVAR)
    return _finish(out)


def _split_z(w: Word) -> tuple[int, Word]:
    cut = w.index("y") + 1
    return cut, w[cut:]


@lru_cache(maxsize=None)
def _stuffle_words(w1: Word, w2: Word, deformed: bool) -> tuple:
    if not w1:
        return ((w2, ONE),)
    if not w2:
        return ((w1, ONE),)
    k, r1 = _split_z(w1)
    l, r2 = _split_z(w2)
    out: dict[Word, TPoly] = {}
    _acc(out, z(k), _stuffle_words(r1, w2, deformed))
    _acc(out, z(l), _stuffle_words(w1, r2, deformed))
    tail = _stuffle_words(r1, r2, deformed)
    _acc(out, z(k + l), tail, _ONE_MINUS_2T if deformed else ONE)
    if deformed and (r1 or r2):
        _acc(out, "x" * (k + l), tail, _T2_MINUS_T)
    return _finish(out)


def _word_product(kind: str, w1: Word, w2: Word) -> tuple:
    if kind == "concat":
        return ((w1 + w2, ONE),)
    if kind == "sh":
        return _shuffle_words(w1, w2, False)
    if kind == "t_sh":
        return _shuffle_words(w1, w2, True)
    if kind == "st":
        return _stuffle_words(w1, w2, False)
    if kind == "t_st":
        return _stuffle_words(w1, w2, True)
    raise DomainError(f"unknown product kind {kind!r}; expected one of {PRODUCT_KINDS}")


def product(kind: str, a: Element, b: Element) -> Element:
    if kind not in PRODUCT_KINDS:
        raise DomainError(f"unknown product kind {kind!r}; expected one of {PRODUCT_KINDS}")
    if kind in ("st", "t_st"):
        for side, e in (("left", a), ("right", b)):
            if not in_h1(e):
                raise DomainError(f"{kind} needs operands in h^1; {side} operand is {e.format()}")
    out: dict[Word, TPoly] = {}
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            _acc(out, "", _word_product(kind, w1, w2), c1 * c2)
    return Element(_finish(out))


def power(kind: str, a: Element, n: int) -> Element:
    result = Element.word("")
    for _ in range(n):
        result = product(kind, result, a)
    return result


def words_in(elements: Iterable[Element]) -> set[Word]:
    out: set[Word] = set()
    for e in elements:
        out.update(e.terms)
    return out
