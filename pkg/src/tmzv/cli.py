"""Command-line front end: ``tmzv expand | relation | eval | verify``.

Settings come from defaults, then an optional JSON config file
(``--config`` or ``TMZV_CONFIG``), then ``TMZV_*`` environment variables,
then flags.  Exit status is 0 on success, 1 when a verification check
fails and 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify
from .algebra import PRODUCT_KINDS, Element, parse_index, product
from .errors import TMZVError
from .numerics import eval_tmzv
from .regularization import REG_KINDS
from .relations import (
    cyclic_sum_relation,
    eds_relation,
    euler_decomposition,
    fds_relation,
    hoffman_relation,
    sum_formula_relation,
)
from .tpoly import as_fraction

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# setting name -> (flag, type)
SETTINGS = {
    "precision_bits": ("--precision", int),
    "tol": ("--tol", str),
    "max_cutoff": ("--max-cutoff", int),
    "max_weight": ("--max-weight", int),
    "seed": ("--seed", int),
    "output": ("--out", str),
    "format": ("--format", str),
}
ENV_NAMES = {
    "precision_bits": "TMZV_PRECISION",
    "tol": "TMZV_TOL",
    "max_cutoff": "TMZV_MAX_CUTOFF",
    "max_weight": "TMZV_MAX_WEIGHT",
    "seed": "TMZV_SEED",
    "output": "TMZV_OUT",
    "format": "TMZV_FORMAT",
}
DEFAULTS = {"format": "text", **verify.RunConfig().to_json()}


class UsageError(Exception):
    pass


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--precision", dest="precision_bits", type=int, help="working precision in bits")
    common.add_argument("--tol", help="numeric tolerance for evaluations, e.g. 1e-10")
    common.add_argument("--max-cutoff", dest="max_cutoff", type=int, help="ceiling for series cutoffs")
    common.add_argument("--max-weight", dest="max_weight", type=int, help="weight bound for sweeps (at most 10)")
    common.add_argument("--seed", type=int, help="seed for random samples")
    common.add_argument("--out", dest="output", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "json"), help="output format")
    common.add_argument("--config", dest="config_file", help="JSON file with default settings")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="tmzv", description="Interpolated multiple zeta values: algebra, "
                                     "relations, numerics and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand a product of two words")
    p.add_argument("kind", choices=PRODUCT_KINDS)
    p.add_argument("lhs", help='word such as "xy", "z2 z1" or "1"')
    p.add_argument("rhs")

    p = sub.add_parser("relation", parents=[common], help="generate a relation")
    p.add_argument("family", choices=("fds", "eds", "hoffman", "euler", "cyclic", "sum"))
    p.add_argument("--w1", help="first word (fds, eds)")
    p.add_argument("--w0", help="second word, in h^0 (fds, eds)")
    p.add_argument("--kind", choices=REG_KINDS, default="sh", help="regularization for eds")
    p.add_argument("--index", help="index such as 2,1 (hoffman, cyclic)")
    p.add_argument("--k", type=int, help="weight (sum) or first argument (euler)")
    p.add_argument("--n", type=int, help="depth (sum)")
    p.add_argument("--l", type=int, help="second argument (euler)")

    p = sub.add_parser("eval", parents=[common], help="evaluate a t-MZV numerically")
    p.add_argument("--index", required=True, help="admissible index such as 2,1")
    p.add_argument("--t", default="0", help="value of t (rational, e.g. 1/2)")

    p = sub.add_parser("verify", parents=[common], help="run verification batteries")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    return parser


def resolve_settings(args: argparse.Namespace, environ=None) -> dict:
    environ = os.environ if environ is None else environ
    settings = dict(DEFAULTS)
    path = getattr(args, "config_file", None) or environ.get("TMZV_CONFIG")
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {path}: {exc}") from exc
        unknown = set(data) - set(SETTINGS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        settings.update(data)
    for name, env in ENV_NAMES.items():
        if env in environ:
            settings[name] = environ[env]
    for name in SETTINGS:
        if hasattr(args, name):
            settings[name] = getattr(args, name)
    for name, (flag, kind) in SETTINGS.items():
        try:
            settings[name] = kind(settings[name])
        except (TypeError, ValueError) as exc:
            raise UsageError(f"invalid value for {flag}: {settings[name]!r}") from exc
    if settings["format"] not in ("text", "json"):
        raise UsageError("format must be text or json")
    return settings


def run_config(settings: dict) -> verify.RunConfig:
    return verify.RunConfig(**{k: v for k, v in settings.items() if k != "format"})


def _parse_word(text: str) -> tuple[Element, bool]:
    s = text.strip()
    return Element.parse(s), s.startswith("z")


def _parse_t(text: str) -> Fraction:
    try:
        return as_fraction(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse t value {text!r}") from exc


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + ", ".join("--" + n for n in missing))


def cmd_expand(args, settings) -> tuple[str, int]:
    a, za = _parse_word(args.lhs)
    b, zb = _parse_word(args.rhs)
    result = product(args.kind, a, b)
    if settings["format"] == "json":
        return json.dumps({"product": args.kind, "lhs": args.lhs, "rhs": args.rhs, "terms": result.to_json()}), EXIT_OK
    return result.format(z_notation=za and zb), EXIT_OK


def make_relation(args):
    fam = args.family
    if fam in ("fds", "eds"):
        _require(args, "w1", "w0")
        w1, w0 = _parse_word(args.w1)[0], _parse_word(args.w0)[0]
        return fds_relation(w1, w0) if fam == "fds" else eds_relation(w1, w0, args.kind)
    if fam in ("hoffman", "cyclic"):
        _require(args, "index")
        idx = parse_index(args.index)
        return hoffman_relation(idx) if fam == "hoffman" else cyclic_sum_relation(idx)
    if fam == "euler":
        _require(args, "k", "l")
        return euler_decomposition(args.k, args.l)
    _require(args, "k", "n")
    return sum_formula_relation(args.k, args.n)


def cmd_relation(args, settings) -> tuple[str, int]:
    rel = make_relation(args)
    if settings["format"] == "json":
        return json.dumps(dict(rel.to_json(), display=rel.format(tmzv_basis=True)), ensure_ascii=False), EXIT_OK
    return rel.format(tmzv_basis=True), EXIT_OK


def cmd_eval(args, settings) -> tuple[str, int]:
    idx = parse_index(args.index)
    t = _parse_t(args.t)
    config = run_config(settings).numeric()
    result = eval_tmzv(idx, t, config)
    if settings["format"] == "json":
        return json.dumps(dict(result.to_json(), index=list(idx), t=str(t))), EXIT_OK
    r = result.to_json()
    return f"{r['value']}  (error <= {r['error_bound']}, cutoff {r['cutoff_used']})", EXIT_OK


def _text_record(rec: dict) -> str:
    if rec.get("record") == "config":
        return "# config " + json.dumps(rec["config"], sort_keys=True)
    params = ",".join(f"{k}={v}" for k, v in rec["params"].items())
    mark = "PASS" if rec["status"] == "pass" else "FAIL"
    kind = "exact" if rec["exact"] else "numeric"
    return f"{mark} {rec['suite']}/{rec['check']} [{params}] max_residual={rec['max_residual']} ({kind})"


def cmd_verify(args, settings) -> tuple[str, int]:
    cfg = run_config(settings)
    records, seconds = verify.timed_run(args.suite, cfg)
    if settings["format"] == "json":
        lines = [json.dumps(r, sort_keys=True, ensure_ascii=False) for r in records]
    else:
        lines = [_text_record(r) for r in records]
    failed = [r for r in records if r.get("status") == "fail"]
    for r in failed:
        print("FAILED: " + json.dumps(r, sort_keys=True, ensure_ascii=False), file=sys.stderr)
    checks = len(records) - 1
    print(f"{checks - len(failed)}/{checks} checks passed in {seconds:.1f}s", file=sys.stderr)
    return "\n".join(lines), EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"expand": cmd_expand, "relation": cmd_relation, "eval": cmd_eval, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = resolve_settings(args)
        run_config(settings)  # validates the numeric settings early
        text, code = COMMANDS[args.command](args, settings)
    except (UsageError, TMZVError, ValueError) as exc:
        print(f"tmzv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = settings["output"]
    if out in ("-", ""):
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
