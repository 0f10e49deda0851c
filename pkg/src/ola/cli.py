"""Command-line front end; every subcommand prints one JSON document.

Exit codes: 0 success, 1 parse error, 2 precondition violation,
3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict
from typing import Callable, Sequence

from . import annihilators, coxeter, multiplicities, orders, partitions
from ._memo import cache_stats
from .config import SETTINGS
from .errors import OlaError, ParseError, PreconditionError
from .weights import (
    Flavor,
    block_label,
    degree,
    format_rational,
    format_weight,
    is_b_dominant,
    parse_rational,
    parse_weight,
    same_block,
    sorted_weights,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _weights(values) -> list[str]:
    return [format_weight(w) for w in sorted_weights(values)]


def _flavor(args) -> Flavor:
    return Flavor.parse(args.flavor)


def _w(args, name: str):
    return parse_weight(getattr(args, name), _flavor(args))


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise ParseError(f"{what} must be an integer, got {text!r}") from None


def _windows(text: str, flavor: Flavor) -> tuple[int, ...]:
    parts = [_int(t, "window") for t in str(text).split(",") if t.strip()]
    if len(parts) == 1:
        parts = parts * len(flavor.sides)
    if len(parts) != len(flavor.sides) or any(p < 0 for p in parts):
        raise ParseError(f"window needs one nonnegative bound per chain ({len(flavor.sides)})")
    return tuple(parts)


def _factors(text: str, flavor: Flavor) -> list[list]:
    chunks = (text or "").split(";")
    if len(chunks) != len(flavor.sides):
        raise ParseError(f"expected {len(flavor.sides)} ';'-separated factor(s)")
    return [[parse_rational(t) for t in chunk.split(",") if t.strip()] for chunk in chunks]


# ---------------------------------------------------------------- handlers


def cmd_kostka(args):
    return partitions.kostka(partitions.parse_partition(args.mu), partitions.parse_content(args.content))


def cmd_c_coeff(args):
    return partitions.c_coeff(_flavor(args), _int(args.k, "k"), _w(args, "gamma"))


def cmd_kl(args):
    x, w = coxeter.parse_permutation(args.x), coxeter.parse_permutation(args.w)
    return list(coxeter.kl_poly(x, w))


def cmd_verma(args):
    flavor = _flavor(args)
    return multiplicities.finite_verma_mult(_factors(args.lam, flavor), _factors(args.mu, flavor))


def cmd_stable_mult(args):
    return multiplicities.stable_mult(_w(args, "lam"), _w(args, "mu"))


def cmd_standard_mult(args):
    return multiplicities.standard_mult(_w(args, "lam"), _w(args, "nu"))


def cmd_inj_filtration(args):
    return multiplicities.injective_filtration(_w(args, "mu")).as_json()


def cmd_layer(args):
    flavor = _flavor(args)
    window = _windows(args.window, flavor)
    return multiplicities.layer_mults(_w(args, "lam"), _int(args.k, "k"), window).as_json()


def cmd_leq_fin(args):
    return orders.leq_fin(_w(args, "mu"), _w(args, "lam"))


def cmd_fin_up_set(args):
    return _weights(orders.fin_up_set(_w(args, "mu")))


def cmd_leq_inf(args):
    depth = None if args.max_depth is None else _int(args.max_depth, "max-depth")
    holds, cert = orders.leq_inf(_w(args, "mu"), _w(args, "lam"), depth)
    return {"holds": holds, "certificate": cert.as_json() if cert else None}


def cmd_interval(args):
    return _weights(orders.inf_interval(_w(args, "mu"), _w(args, "lam")))


def cmd_block(args):
    lam = _w(args, "lam")
    out = {"label": block_label(lam).as_json()}
    if args.other is not None:
        out["same_block"] = same_block(lam, _w(args, "other"))
    return out


def cmd_degree(args):
    return format_rational(degree(_w(args, "lam")))


def cmd_dominant(args):
    return is_b_dominant(_w(args, "lam"))


def cmd_annihilator(args):
    if _flavor(args) is not Flavor.SL:
        raise PreconditionError("annihilator labels are only available for sl")
    return str(annihilators.annihilator_of_integrable(_w(args, "lam")))


def cmd_weight_from_label(args):
    a = [parse_rational(t) for t in (args.a or "").split(",") if t.strip()]
    lam = annihilators.weight_from_label(
        _int(args.x, "x"), partitions.parse_partition(args.yl), partitions.parse_partition(args.yr), a
    )
    return format_weight(lam)


def cmd_selftest(args):
    from .selftest import run_selftest

    report = run_selftest(quick=not args.full)
    return report


HANDLERS: dict[str, tuple[Callable, list[tuple[str, dict]], bool]] = {
    "kostka": (cmd_kostka, [("--mu", {}), ("--content", {})], False),
    "c-coeff": (cmd_c_coeff, [("--k", {}), ("--gamma", {})], True),
    "kl": (cmd_kl, [("--x", {}), ("--w", {})], False),
    "verma": (cmd_verma, [("--lam", {}), ("--mu", {})], True),
    "stable-mult": (cmd_stable_mult, [("--lam", {}), ("--mu", {})], True),
    "standard-mult": (cmd_standard_mult, [("--lam", {}), ("--nu", {})], True),
    "inj-filtration": (cmd_inj_filtration, [("--mu", {})], True),
    "layer": (cmd_layer, [("--lam", {}), ("--k", {}), ("--window", {})], True),
    "leq-fin": (cmd_leq_fin, [("--mu", {}), ("--lam", {})], True),
    "fin-up-set": (cmd_fin_up_set, [("--mu", {})], True),
    "leq-inf": (cmd_leq_inf, [("--mu", {}), ("--lam", {}), ("--max-depth", {"required": False})], True),
    "interval": (cmd_interval, [("--mu", {}), ("--lam", {})], True),
    "block": (cmd_block, [("--lam", {}), ("--other", {"required": False})], True),
    "degree": (cmd_degree, [("--lam", {})], True),
    "dominant": (cmd_dominant, [("--lam", {})], True),
    "annihilator": (cmd_annihilator, [("--lam", {})], True),
    "weight-from-label": (
        cmd_weight_from_label,
        [("--x", {}), ("--yl", {}), ("--yr", {}), ("--a", {"required": False})],
        False,
    ),
    "selftest": (cmd_selftest, [("--full", {"action": "store_true", "required": False})], False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ola", description="Combinatorics of the category OLA for sl, o and sp.")
    parser.add_argument("--max-window", type=int, default=None, help="largest chain window (env OLA_MAX_WINDOW)")
    parser.add_argument("--cache-limit", type=int, default=None, help="entries per memo table (env OLA_CACHE_LIMIT)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, options, needs_flavor) in HANDLERS.items():
        p = sub.add_parser(name)
        if needs_flavor:
            p.add_argument("--flavor", required=True, choices=[f.value for f in Flavor])
        for flag, extra in options:
            kw = {"required": True}
            kw.update(extra)
            p.add_argument(flag, **kw)
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    """Turn ``--flag value`` into ``--flag=value`` so values like ``-1:2`` are not read as flags."""
    takes_value = {"--flavor", "--max-window", "--cache-limit"}
    for _, options, _ in HANDLERS.values():
        takes_value |= {flag for flag, extra in options if extra.get("action") is None}
    out, i = [], 0
    while i < len(argv):
        token = argv[i]
        if token in takes_value and i + 1 < len(argv) and not argv[i + 1].startswith("--"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    started = time.perf_counter()
    command = None
    saved = asdict(SETTINGS)
    try:
        args = build_parser().parse_args(_glue_values(sys.argv[1:] if argv is None else argv))
        command = args.command
        SETTINGS.update(max_window=args.max_window, cache_limit=args.cache_limit)
        handler = HANDLERS[command][0]
        value = handler(args)
        payload = {
            "command": command,
            "flavor": getattr(args, "flavor", None),
            "arguments": {k: v for k, v in vars(args).items() if k not in ("command", "flavor")},
            "value": value,
            "diagnostics": {
                "max_window": SETTINGS.max_window,
                "cache_limit": SETTINGS.cache_limit,
                "seconds": round(time.perf_counter() - started, 4),
                "caches": cache_stats(),
            },
        }
        code = 0
        if command == "selftest" and not value.get("passed", False):
            code = 4
    except OlaError as exc:
        payload = {"command": command, "error": type(exc).__name__, "message": str(exc)}
        code = exc.exit_code
    finally:
        SETTINGS.update(**saved)
    json.dump(payload, out, sort_keys=False)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())
