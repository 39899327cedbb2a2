"""Verification batteries behind ``tmzv verify``.

Each suite is a list of checks run in a fixed order; every check returns one
record ``{suite, check, params, max_residual, exact, status, ...}``.  Random
draws come from a single seeded generator per suite, so identical settings
give identical reports.
"""
from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

import mpmath as mp

from . import genfun
from .algebra import (
    Element,
    h0_words,
    h1_words,
    indices,
    product,
    rho,
    s_map,
    sigma_map,
)
from .errors import DomainError, PoleError
from .numerics import NumericConfig, eval_mzv, eval_tmzv
from .regularization import REG_KINDS, reg_decompose
from .tpoly import TPoly
from .relations import (
    sigma_binomial_identity,
    cyclic_sum_relation,
    eds_relation,
    euler_decomposition,
    euler_word_form,
    fds_relation,
    hoffman_relation,
    sum_formula_coefficients,
    sum_formula_relation,
    weight4_web,
    y_product_closed_form,
)

SUITES = ("algebra", "regularization", "relations", "genfun", "hyp")
T_SAMPLES = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1, 3))
BIG_T_SAMPLES = (Fraction(0), Fraction(7, 10))
RELATION_TOL = 1e-5
CLOSED_FORM_TOL = 1e-8
MAX_WEIGHT_LIMIT = 10

# acceptance scopes; each weight-bounded family is capped by max_weight as well
SCOPE = {
    "algebra_words": 8,
    "y_closed_form": 8,
    "fds": 7,
    "eds": 6,
    "hoffman": 7,
    "sum": 8,
    "sigma_binomial": 9,
    "cyclic": 6,
    "phi0": 8,
    "x_series": 5,
    "v0": 8,
    "w0": 6,
    "adz": 7,
    "pochhammer": 6,
}


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 128
    tol: str = "1e-10"
    max_cutoff: int = 2 ** 24
    max_weight: int = 8
    seed: int = 0
    output: str = "-"

    def __post_init__(self):
        if self.precision_bits < 64:
            raise DomainError("precision_bits must be at least 64")
        if not 1 <= self.max_weight <= MAX_WEIGHT_LIMIT:
            raise DomainError(f"max_weight must lie in 1..{MAX_WEIGHT_LIMIT}")
        try:
            tol = float(self.tol)
        except ValueError as exc:
            raise DomainError(f"tol {self.tol!r} is not a decimal number") from exc
        if not tol > 0:
            raise DomainError("tol must be positive")

    def numeric(self) -> NumericConfig:
        return NumericConfig(precision_bits=self.precision_bits, tol=float(self.tol), max_cutoff=self.max_cutoff)

    def scope(self, name: str) -> int:
        return min(SCOPE[name], self.max_weight)

    def to_json(self) -> dict:
        return asdict(self)


def _record(suite: str, rec: dict) -> dict:
    return {"suite": suite, **rec}


def _case_report(check: str, params: dict, failures: list, cases: int) -> dict:
    ok = not failures and cases > 0
    return genfun.report(check, params, "0" if ok else str(len(failures)), True, ok,
                         cases=cases, failures=failures[:10])


# ---------------------------------------------------------------------------
# algebra

def _random_word(rng: random.Random, length: int, h1: bool) -> str:
    if length == 0:
        return ""
    body = "".join(rng.choice("xy") for _ in range(length - 1))
    return body + ("y" if h1 else rng.choice("xy"))


def _random_element(rng: random.Random, max_len: int, h1: bool) -> Element:
    """One or two words with small integer or ``t`` coefficients."""
    out = Element()
    for _ in range(rng.choice((1, 1, 2))):
        coeff = TPoly((rng.randint(-2, 2) or 1, rng.randint(-1, 1)))
        out = out + Element.word(_random_word(rng, rng.randint(0, max_len), h1), coeff)
    return out


def _split_lengths(rng: random.Random, total: int, parts: int) -> list[int]:
    cuts = sorted(rng.randint(0, total) for _ in range(parts - 1))
    bounds = [0] + cuts + [total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def _draw(rng, weight: int, parts: int, h1: bool) -> list[Element]:
    total = rng.randint(1, weight)
    return [_random_element(rng, n, h1) for n in _split_lengths(rng, total, parts)]


def algebra_checks(cfg: RunConfig, pairs: int = 200, triples: int = 200):
    W = cfg.scope("algebra_words")
    params = {"max_weight": W, "seed": cfg.seed}

    def laws():
        rng = random.Random(cfg.seed)
        fails = {name: [] for name in (
            "commutative_sh", "commutative_t_sh", "commutative_st", "commutative_t_st", "s_map_t_sh", "s_map_t_st", "sigma_sh",
            "t0_t_sh", "t0_t_st", "associative_sh", "associative_t_sh", "associative_st", "associative_t_st",
            "inverse_s_map", "inverse_sigma")}
        for _ in range(pairs):
            a, b = _draw(rng, W, 2, False)
            c, d = _draw(rng, W, 2, True)
            label = [a.format(), b.format()]
            for kind in ("sh", "t_sh"):
                if product(kind, a, b) != product(kind, b, a):
                    fails["commutative_" + kind].append(label)
            for kind in ("st", "t_st"):
                if product(kind, c, d) != product(kind, d, c):
                    fails["commutative_" + kind].append([c.format(), d.format()])
            if s_map(product("t_sh", a, b)) != product("sh", s_map(a), s_map(b)):
                fails["s_map_t_sh"].append(label)
            if s_map(product("t_st", c, d)) != product("st", s_map(c), s_map(d)):
                fails["s_map_t_st"].append([c.format(), d.format()])
            if sigma_map(product("sh", a, b)) != product("sh", sigma_map(a), sigma_map(b)):
                fails["sigma_sh"].append(label)
            if product("t_sh", a, b).specialize_t(0) != product("sh", a.specialize_t(0), b.specialize_t(0)):
                fails["t0_t_sh"].append(label)
            if product("t_st", c, d).specialize_t(0) != product("st", c.specialize_t(0), d.specialize_t(0)):
                fails["t0_t_st"].append([c.format(), d.format()])
            if s_map(s_map(a), negate_t=True) != a or s_map(s_map(a, negate_t=True)) != a:
                fails["inverse_s_map"].append([a.format()])
            if sigma_map(sigma_map(a), negate_t=True) != a:
                fails["inverse_sigma"].append([a.format()])
        for _ in range(triples):
            for h1, kinds in ((False, ("sh", "t_sh")), (True, ("st", "t_st"))):
                a, b, c = _draw(rng, W, 3, h1)
                for kind in kinds:
                    if product(kind, product(kind, a, b), c) != product(kind, a, product(kind, b, c)):
                        fails["associative_" + kind].append([a.format(), b.format(), c.format()])
        counts = {name: triples for name in fails if name.startswith("associative")}
        return [_case_report(name, params, f, counts.get(name, pairs)) for name, f in fails.items()]

    def sigma_rho():
        bad = []
        for a in "xy":
            letter = Element.word(a)
            if sigma_map(letter) - sigma_map(rho(a)) != letter:
                bad.append(a)
        return [_case_report("sigma_rho", {}, bad, 2)]

    def y_closed_forms():
        bad = []
        cases = 0
        for k in range(1, cfg.scope("y_closed_form") + 1):
            for idx in indices(k):
                w = Element.from_index(idx)
                y = Element.word("y")
                for kind, prod in (("sh", "t_sh"), ("st", "t_st")):
                    cases += 1
                    if y_product_closed_form(idx, kind) != product(prod, y, w):
                        bad.append([list(idx), kind])
        return [_case_report("y_product_closed_form", {"max_weight": cfg.scope("y_closed_form")}, bad, cases)]

    def euler_words():
        bad = []
        cases = 0
        for total in range(2, cfg.max_weight + 1):
            for k in range(1, total):
                cases += 1
                if euler_word_form(k, total - k) != product("t_sh", Element.from_index((k,)),
                                                           Element.from_index((total - k,))):
                    bad.append([k, total - k])
        return [_case_report("euler_word_form", {"max_weight": cfg.max_weight}, bad, cases)]

    return [laws, sigma_rho, y_closed_forms, euler_words]


# ---------------------------------------------------------------------------
# regularization

def _worst(values) -> mp.mpf:
    return max((abs(v) for v in values), default=mp.mpf(0))


def regularization_checks(cfg: RunConfig):
    num = cfg.numeric()
    W = cfg.scope("eds")

    def reconstruction():
        bad = []
        cases = 0
        for k in range(1, W + 1):
            for w in h1_words(k):
                for kind in REG_KINDS:
                    cases += 1
                    e = Element.word(w)
                    if reg_decompose(kind, e).reconstruct() != e:
                        bad.append([w, kind])
        return [_case_report("reg_reconstruction", {"max_weight": W}, bad, cases)]

    def eds():
        out = []
        for total in range(3, W + 1):
            for a in range(1, total - 1):
                for w1 in h1_words(a):
                    for w0 in h0_words(total - a):
                        for kind in REG_KINDS:
                            rel = eds_relation(Element.word(w1), Element.word(w0), kind)
                            values = []
                            for t in T_SAMPLES:
                                values += [r.value for r in rel.T_residuals(t, num)]
                                values += [rel.residual(t, T, num).value for T in BIG_T_SAMPLES]
                            worst = _worst(values)
                            out.append(genfun.report("eds", {"w1": w1, "w0": w0, "kind": kind}, worst, False,
                                                     worst < RELATION_TOL))
        return out

    return [reconstruction, eds]


# ---------------------------------------------------------------------------
# relations

def _numeric_relation(name: str, params: dict, rel, num: NumericConfig) -> dict:
    worst = _worst(rel.residual(t, 0, num).value for t in T_SAMPLES)
    return genfun.report(name, params, worst, False, worst < RELATION_TOL)


def relation_checks(cfg: RunConfig):
    num = cfg.numeric()

    def fds():
        out = []
        W = cfg.scope("fds")
        for total in range(4, W + 1):
            for a in range(2, total - 1):
                if a > total - a:
                    continue
                for w1 in h0_words(a):
                    for w0 in h0_words(total - a):
                        if a == total - a and w1 > w0:
                            continue
                        rel = fds_relation(Element.word(w1), Element.word(w0))
                        out.append(_numeric_relation("fds", {"w1": w1, "w0": w0}, rel, num))
        return out

    def hoffman():
        out = []
        for k in range(2, cfg.scope("hoffman") + 1):
            for idx in indices(k, admissible=True):
                rel = hoffman_relation(idx)  # the exact statement is asserted during construction
                out.append(_numeric_relation("hoffman", {"index": list(idx)}, rel, num))
        return out

    def sum_formula():
        out = []
        for k in range(2, cfg.scope("sum") + 1):
            for n in range(1, k):
                first, second = sum_formula_coefficients(k, n)
                rel = sum_formula_relation(k, n)
                rec = _numeric_relation("sum_formula", {"k": k, "n": n}, rel, num)
                if first != second:
                    rec["status"] = "fail"
                rec["coefficient"] = str(second)
                out.append(rec)
        return out

    def sigma_binomial():
        bad = []
        cases = 0
        K = min(SCOPE["sigma_binomial"], cfg.max_weight + 1)
        for k in range(2, K + 1):
            for n in range(1, k):
                cases += 1
                if sigma_binomial_identity(k, n)["status"] != "pass":
                    bad.append([k, n])
        return [_case_report("sigma_binomial_identity", {"max_k": K}, bad, cases)]

    def cyclic():
        out = []
        for k in range(1, cfg.scope("cyclic") + 1):
            for idx in indices(k):
                if all(p == 1 for p in idx):
                    continue
                out.append(_numeric_relation("cyclic_sum", {"index": list(idx)}, cyclic_sum_relation(idx), num))
        return out

    def euler():
        out = []
        for total in range(4, cfg.max_weight + 1):
            for k in range(2, total - 1):
                out.append(_numeric_relation("euler_decomposition", {"k": k, "l": total - k},
                                             euler_decomposition(k, total - k), num))
        return out

    def web():
        derived = weight4_web()
        z4 = eval_mzv((4,), num).value
        worst = mp.mpf(0)
        for t in T_SAMPLES:
            tt = mp.mpf(t.numerator) / t.denominator
            worst = max(worst,
                        abs(eval_tmzv((3, 1), t, num).value - (mp.mpf(1) / 4 + tt) * z4),
                        abs(eval_tmzv((2, 2), t, num).value - (mp.mpf(3) / 4 + tt) * z4))
        return [genfun.report("weight4_web", {k: str(v) for k, v in derived.items()}, worst, False,
                              worst < RELATION_TOL)]

    return [fds, hoffman, sum_formula, sigma_binomial, cyclic, euler, web]


# ---------------------------------------------------------------------------
# generating function

# samples (u, v, w, t) with both characteristic roots real and below 1
CLOSED_FORM_SAMPLES = (
    (Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 2)),
    (Fraction(-1, 4), Fraction(1, 3), Fraction(1, 5), Fraction(1, 3)),
    (Fraction(1, 4), Fraction(1, 4), Fraction(1, 4), Fraction(1, 2)),  # uv = w^2
    (Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(0)),  # t = 0
    (Fraction(-1, 2), Fraction(-1, 3), Fraction(1, 4), Fraction(-1, 3)),
    (Fraction(1, 5), Fraction(2, 5), Fraction(1, 3), Fraction(1)),
    (Fraction(1, 8), Fraction(1, 8), Fraction(1, 8), Fraction(1, 2)),  # uv = w^2
)


def ode_samples(rng: random.Random, count: int, order: int) -> list:
    """Rational ``(u, v, w, t)`` with every recurrence denominator nonzero through ``order``."""
    out = []
    while len(out) < count:
        s = tuple(genfun.random_rational(rng) for _ in range(4))
        try:
            genfun.an_value(order, s[0], s[1], s[2] ** 2, s[3])
        except PoleError:
            continue
        out.append(s)
    return out


def genfun_checks(cfg: RunConfig):
    num = cfg.numeric()

    def ode():
        rng = random.Random(cfg.seed)
        return [genfun.ode_check(s, 30) for s in ode_samples(rng, 10, 30)]

    def phi0():
        cap = cfg.scope("phi0") - 2
        if cap < 0:
            return []
        return genfun.phi0_bruteforce_check(cap, T_SAMPLES, num, RELATION_TOL)

    def x_series():
        return [genfun.x_series_system_check(cfg.scope("x_series"), 30)]

    def closed_form():
        return [genfun.closed_form_check(s, CLOSED_FORM_TOL, num) for s in CLOSED_FORM_SAMPLES]

    def uv_w2():
        s = CLOSED_FORM_SAMPLES[2]
        diff = abs(genfun.uv_w2_closed_form(s, num).value - genfun.phi0_value_from_an(s, num).value)
        out = [genfun.report("uv_w2_closed_form", dict(zip("uvwt", map(str, s))), diff, False, diff < CLOSED_FORM_TOL)]
        bad = []
        cases = 0
        for k in range(2, cfg.scope("sum") + 1):
            for n in range(1, k):
                cases += 1
                if genfun.sum_case_uv_w2(k, n).to_json() != sum_formula_relation(k, n).to_json():
                    bad.append([k, n])
        out.append(_case_report("sum_case_uv_w2", {"max_weight": cfg.scope("sum")}, bad, cases))
        return out

    def v0():
        return [genfun.v0_case_check(cfg.scope("v0"), t, RELATION_TOL, num) for t in T_SAMPLES]

    def w0():
        out = [genfun.w0_inner_check(12, 4, t) for t in (Fraction(1, 2), Fraction(1), Fraction(-1, 3))]
        for total in range(2, cfg.scope("w0") + 1):
            for i in range(1, total):
                for t in (Fraction(1, 2), Fraction(1)):
                    out.append(genfun.w0_check(i, total - i, t, RELATION_TOL, num))
        return out

    def adz():
        cap = cfg.scope("adz")
        return [genfun.adz_check(cap, RELATION_TOL, num)] if cap >= 3 else []

    return [ode, phi0, x_series, closed_form, uv_w2, v0, w0, adz]


# ---------------------------------------------------------------------------
# hypergeometric identities

def frobenius_samples(rng: random.Random, count: int) -> list:
    out = []
    while len(out) < count:
        p = genfun.FrobeniusParams(*(genfun.random_rational(rng) for _ in range(4)))
        if (p.alpha - p.beta).denominator == 1:
            continue
        out.append(p)
    return out


def hyp_checks(cfg: RunConfig):
    def explicit():
        out = []
        for n in range(1, SCOPE["pochhammer"] + 1):
            samples = genfun.explicit_samples(n, genfun.pochhammer_sample_count(n), cfg.seed + n)
            out.append(genfun.pochhammer_identity(n, samples))
            out.append(genfun.pochhammer_reflection(n, samples))
        return out

    def wronskian():
        rng = random.Random(cfg.seed)
        out = []
        fixed = genfun.FrobeniusParams.of(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7))
        for p in [fixed] + frobenius_samples(rng, 5):
            out.append(genfun.wronskian_check(p, 25))
            out.append(genfun.duality_check(p, 25))
        return out

    return [explicit, wronskian]


SUITE_BUILDERS = {
    "algebra": algebra_checks,
    "regularization": regularization_checks,
    "relations": relation_checks,
    "genfun": genfun_checks,
    "hyp": hyp_checks,
}


def run_suite(suite: str, cfg: RunConfig) -> list[dict]:
    """All records for ``suite`` (or every suite for ``"all"``), header first."""
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        if name not in SUITE_BUILDERS:
            raise DomainError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    echoed = {k: v for k, v in cfg.to_json().items() if k != "output"}
    records = [{"record": "config", "suite": suite, "config": echoed}]
    for name in names:
        for check in SUITE_BUILDERS[name](cfg):
            for rec in check():
                records.append(_record(name, rec))
    return records


def timed_run(suite: str, cfg: RunConfig) -> tuple[list[dict], float]:
    start = time.perf_counter()
    records = run_suite(suite, cfg)
    return records, time.perf_counter() - start


def all_passed(records: list[dict]) -> bool:
    return all(r.get("status", "pass") == "pass" for r in records)
