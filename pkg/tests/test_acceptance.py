"""Acceptance criteria 1-11, one test per criterion.

Each test prints a ``criterion N PASS|FAIL`` line; the lines are repeated in
the terminal summary.  Suites are run once at weight 9, which covers every
stated scope (each family is capped separately by ``verify.SCOPE``).
"""
import json
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from tmzv import verify
from tmzv.algebra import Element, indices, product
from tmzv.relations import hoffman_statement

CFG = verify.RunConfig(max_weight=9)
T_SAMPLES = {str(t) for t in verify.T_SAMPLES}


@pytest.fixture(scope="module")
def suite_records():
    cache = {}

    def get(name):
        if name not in cache:
            records, seconds = verify.timed_run(name, CFG)
            cache[name] = (records[1:], seconds)
        return cache[name]
    return get


def select(records, *checks):
    return [r for r in records if r["check"] in checks]


def all_pass(records):
    failing = [r for r in records if r["status"] != "pass"]
    assert records and not failing, failing[:3]


def worst(records) -> float:
    return max(float(r["max_residual"]) for r in records)


def test_criterion_01_exact_algebra(criterion, suite_records):
    with criterion(1, "exact algebra laws over >= 200 random pairs/triples of weight <= 8") as d:
        records, seconds = suite_records("algebra")
        laws = [r for r in records if r["check"] not in ("y_product_closed_form", "euler_word_form")]
        names = {r["check"] for r in laws}
        for kind in ("sh", "t_sh", "st", "t_st"):
            assert {"commutative_" + kind, "associative_" + kind} <= names
        assert {"s_map_t_sh", "s_map_t_st", "sigma_sh", "inverse_s_map", "inverse_sigma", "sigma_rho",
                "t0_t_sh", "t0_t_st"} <= names
        all_pass(laws)
        assert all(r["cases"] >= 200 for r in laws if r["check"] != "sigma_rho")
        assert all(r["params"]["max_weight"] == 8 for r in laws if r["check"] != "sigma_rho")
        assert seconds < 60
        d.append(f"{len(laws)} law checks, {seconds:.1f}s")


def test_criterion_02_y_closed_forms(criterion, suite_records):
    with criterion(2, "y-product closed forms equal direct products, weight <= 8, both products") as d:
        (rec,) = select(suite_records("algebra")[0], "y_product_closed_form")
        all_pass([rec])
        assert rec["params"]["max_weight"] == 8 and rec["exact"]
        assert rec["cases"] == 2 * sum(len(indices(k)) for k in range(1, 9))
        d.append(f"{rec['cases']} cases")


def test_criterion_03_fds(criterion, suite_records):
    with criterion(3, "finite double shuffle residual < 1e-5, combined weight <= 7, 4 t-samples") as d:
        recs = select(suite_records("relations")[0], "fds")
        all_pass(recs)
        assert max(len(r["params"]["w1"]) + len(r["params"]["w0"]) for r in recs) == 7
        assert worst(recs) < 1e-5
        d.append(f"{len(recs)} pairs, max residual {worst(recs):.1e}")


def test_criterion_04_eds(criterion, suite_records):
    with criterion(4, "extended double shuffle T-coefficient residuals < 1e-5, weight <= 6, both maps") as d:
        recs = select(suite_records("regularization")[0], "eds")
        all_pass(recs)
        assert {r["params"]["kind"] for r in recs} == {"sh", "st"}
        assert max(len(r["params"]["w1"]) + len(r["params"]["w0"]) for r in recs) == 6
        assert worst(recs) < 1e-5
        d.append(f"{len(recs)} relations, max residual {worst(recs):.1e}")


def test_criterion_05_hoffman(criterion, suite_records):
    with criterion(5, "Hoffman statement exact and numeric residual < 1e-5, weight <= 7") as d:
        y = Element.word("y")
        count = 0
        for k in range(2, 8):
            for idx in indices(k, admissible=True):
                w = Element.from_index(idx)
                assert hoffman_statement(idx) == -(product("t_sh", y, w) - product("t_st", y, w)), idx
                count += 1
        recs = select(suite_records("relations")[0], "hoffman")
        all_pass(recs)
        assert len(recs) == count
        assert worst(recs) < 1e-5
        d.append(f"{count} indices, max residual {worst(recs):.1e}")


def test_criterion_06_sum_formula(criterion, suite_records):
    with criterion(6, "sum formula k <= 8 (exact coefficients, numeric 1e-5) and binomial identity k <= 9") as d:
        records = suite_records("relations")[0]
        recs = select(records, "sum_formula")
        all_pass(recs)
        assert {(r["params"]["k"], r["params"]["n"]) for r in recs} == {(k, n) for k in range(2, 9) for n in range(1, k)}
        assert worst(recs) < 1e-5
        (app,) = select(records, "sigma_binomial_identity")
        all_pass([app])
        assert app["params"]["max_k"] == 9 and app["cases"] == sum(k - 1 for k in range(2, 10))
        d.append(f"{len(recs)} (k,n) pairs, max residual {worst(recs):.1e}; {app['cases']} exact identities")


def test_criterion_07_cyclic(criterion, suite_records):
    with criterion(7, "cyclic sum formula residual < 1e-5, weight <= 6, 4 t-samples") as d:
        recs = select(suite_records("relations")[0], "cyclic_sum")
        all_pass(recs)
        eligible = [k for w in range(1, 7) for k in indices(w) if any(p > 1 for p in k)]
        assert len(recs) == len(eligible)
        assert worst(recs) < 1e-5
        d.append(f"{len(recs)} indices, max residual {worst(recs):.1e}")


def test_criterion_08_generating_function(criterion, suite_records):
    with criterion(8, "ODE exact to z^30, phi0 vs brute force k <= 8, z-series system, closed form 1e-8") as d:
        records = suite_records("genfun")[0]
        ode = select(records, "ode_residual")
        all_pass(ode)
        assert len(ode) >= 10 and all(r["params"]["order"] == 30 and r["max_residual"] == "0" for r in ode)
        phi = select(records, "phi0_vs_bruteforce")
        all_pass(phi)
        assert {r["params"]["t"] for r in phi} == T_SAMPLES
        assert all(r["params"]["cap"] + 2 == 8 for r in phi) and worst(phi) < 1e-5
        (xs,) = select(records, "x_series_system")
        all_pass([xs])
        assert xs["params"] == {"weight_cap": 5, "order": 30} and not xs["failures"]
        thm = select(records, "closed_form_sum")
        all_pass(thm)
        assert len(thm) >= 5 and worst(thm) < 1e-8
        d.append(f"{len(ode)} ODE samples, phi0 max {worst(phi):.1e}, "
                 f"{xs['identities']} z-series identities, {len(thm)} closed-form samples max {worst(thm):.1e}")


def test_criterion_09_special_cases(criterion, suite_records):
    with criterion(9, "v=0 case k <= 8, height-one sums i+j <= 6 at t in {1/2, 1}, ADZ k <= 7 (1e-5)") as d:
        records = suite_records("genfun")[0]
        v0 = select(records, "v0_case")
        all_pass(v0)
        assert all(r["params"]["cap"] == 8 for r in v0) and worst(v0) < 1e-5
        w0 = select(records, "w0_height_one")
        all_pass(w0)
        wanted = {(i, s - i, t) for s in range(2, 7) for i in range(1, s) for t in ("1/2", "1")}
        assert {(r["params"]["i"], r["params"]["j"], r["params"]["t"]) for r in w0} == wanted
        assert worst(w0) < 1e-5
        inner = select(records, "w0_inner_sum")
        all_pass(inner)
        (adz,) = select(records, "adz")
        all_pass([adz])
        assert adz["params"]["cap"] == 7 and float(adz["max_residual"]) < 1e-5
        d.append(f"v0 max {worst(v0):.1e}, {len(w0)} height-one sums max {worst(w0):.1e}, "
                 f"ADZ {float(adz['max_residual']):.1e}")


def test_criterion_10_hypergeometric_identities(criterion, suite_records):
    with criterion(10, "Pochhammer identity n <= 6 (>= 40 samples), duality and Wronskian to z^25 exactly") as d:
        records = suite_records("hyp")[0]
        ident = select(records, "pochhammer_identity")
        all_pass(ident)
        assert sorted(r["params"]["n"] for r in ident) == list(range(1, 7))
        assert all(r["params"]["samples"] >= 40 and r["exact"] and r["max_residual"] == "0" for r in ident)
        for name in ("wronskian", "duality"):
            recs = select(records, name)
            all_pass(recs)
            assert len(recs) >= 5 and all(r["params"]["order"] == 25 and r["max_residual"] == "0" for r in recs)
        fixed = {"alpha": "1/2", "beta": "1/3", "gamma1": "1/5", "gamma2": "1/7"}
        assert any({k: r["params"][k] for k in fixed} == fixed for r in select(records, "duality"))
        d.append(f"{sum(r['params']['samples'] for r in ident)} exact samples")


def test_criterion_11_full_verify(criterion, tmp_path):
    with criterion(11, "verify --suite all --max-weight 6 exits 0 in < 10 minutes") as d:
        out = tmp_path / "report.jsonl"
        start = time.perf_counter()
        proc = subprocess.run(
            [sys.executable, "-m", "tmzv.cli", "verify", "--suite", "all", "--max-weight", "6",
             "--format", "json", "--out", str(out)],
            capture_output=True, text=True, timeout=600, check=False)
        seconds = time.perf_counter() - start
        assert proc.returncode == 0, proc.stderr[-2000:]
        assert seconds < 600
        records = [json.loads(line) for line in out.read_text().splitlines()]
        assert records[0]["config"]["max_weight"] == 6
        assert all(r["status"] == "pass" for r in records[1:])
        d.append(f"{len(records) - 1} checks in {seconds:.1f}s")
