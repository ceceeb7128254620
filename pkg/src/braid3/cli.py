"""Command-line front end.

Exit status: 0 on success, 1 when a campaign or check fails, 2 on bad input
(unparseable word, bad flag values). Reports go to stdout, diagnostics to
stderr. Numeric defaults can be overridden with ``BRAID3_*`` environment
variables (see ``ENV_DEFAULTS``).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from . import verifier
from .classes import CLASS_FILTERS, enumerate_words
from .invariants import casson, invariant_report, linking_number
from .words import WordSyntaxError, closure_info, format_word, parse_word

ENV_DEFAULTS = {
    "max_letters": ("BRAID3_MAX_LETTERS", verifier.DEFAULT_PA_LETTERS),
    "max_letters_positive": ("BRAID3_MAX_LETTERS_POSITIVE", verifier.DEFAULT_POSITIVE_LETTERS),
    "n_max": ("BRAID3_N_MAX", verifier.DEFAULT_N_MAX),
    "p_max": ("BRAID3_P_MAX", verifier.DEFAULT_P_MAX),
    "max_letters_random": ("BRAID3_MAX_LETTERS_RANDOM", 10),
    "samples": ("BRAID3_SAMPLES", 200),
    "seed": ("BRAID3_SEED", 0),
    "workers": ("BRAID3_WORKERS", 1),
}

CHECKS = ("casson-positive", "lk-nonpositive")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    subcommand: str
    word_text: str | None = None
    max_letters: int = verifier.DEFAULT_PA_LETTERS
    max_letters_positive: int = verifier.DEFAULT_POSITIVE_LETTERS
    n_max: int = verifier.DEFAULT_N_MAX
    p_max: int = verifier.DEFAULT_P_MAX
    max_letters_random: int = 10
    output_format: str = "text"
    seed: int = 0
    samples: int = 200
    workers: int = 1
    class_filter: str = "all"
    check: str | None = None
    timings: bool = False

    def validate(self) -> None:
        if self.subcommand == "invariants" and self.word_text is None:
            raise UsageError("the invariants subcommand needs a word")
        for name in ENV_DEFAULTS:
            if name == "seed":
                continue
            if getattr(self, name) <= 0:
                raise UsageError(f"{name.replace('_', '-')} must be positive")
        if self.output_format not in FORMATS:
            raise UsageError(f"format must be one of {FORMATS}")


def _env_int(name: str) -> int:
    var, fallback = ENV_DEFAULTS[name]
    raw = os.environ.get(var)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{var}={raw!r} is not an integer") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid3",
        description="Invariants of closed 3-braids in band generators a1, a2, a3.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def fmt(p, default="text"):
        p.add_argument("--format", dest="output_format", choices=FORMATS, default=default)

    p = sub.add_parser("invariants", help="invariant report for one word")
    p.add_argument("word", help='word such as "a1 a2^-1 a3^2"')
    fmt(p)

    p = sub.add_parser("verify-paper", help="run every verification suite")
    p.add_argument("--max-letters", type=int)
    p.add_argument("--max-letters-positive", type=int)
    p.add_argument("--n-max", type=int)
    p.add_argument("--p-max", type=int)
    p.add_argument("--max-letters-random", type=int, help="bound for random and normalization suites")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--workers", type=int)
    p.add_argument("--timings", action="store_true", help="include elapsed seconds in JSON")
    fmt(p)

    p = sub.add_parser("enumerate", help="stream words of a class, optionally checking each")
    p.add_argument("--class", dest="class_filter", choices=CLASS_FILTERS, default="all")
    p.add_argument("--max-len", dest="max_letters", type=int)
    p.add_argument("--check", choices=CHECKS)
    fmt(p, "csv")

    p = sub.add_parser("skein-check", help="seeded random crossing-change trials")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-letters", dest="max_letters_random", type=int)
    fmt(p)

    p = sub.add_parser("excluded-set", help="invariants of the twelve excluded words")
    fmt(p, "json")
    return parser


def config_from_args(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig(subcommand=args.subcommand, output_format=args.output_format)
    for name in ENV_DEFAULTS:
        value = getattr(args, name, None)
        setattr(cfg, name, value if value is not None else _env_int(name))
    cfg.word_text = getattr(args, "word", None)
    cfg.class_filter = getattr(args, "class_filter", "all")
    cfg.check = getattr(args, "check", None)
    cfg.timings = getattr(args, "timings", False)
    return cfg


# -- subcommands -----------------------------------------------------------------


def _emit_results(results: list[verifier.CampaignResult], cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    if cfg.output_format == "json":
        for r in results:
            out.write(r.to_json(cfg.timings) + "\n")
    elif cfg.output_format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["claim_id", "passed", "instances_checked", "failures", "first_failure"])
        for r in results:
            first = " | ".join(r.failures[0]) if r.failures else ""
            w.writerow([r.claim_id, r.passed, r.instances_checked, len(r.failures), first])
    else:
        for r in results:
            out.write(r.summary() + "\n")
    for r in results:
        err.write(r.summary() + "\n")
    return 0 if all(r.passed for r in results) else 1


def _text_report(rep: dict) -> str:
    lines = [f"word: {rep['word'] or '<empty>'}", f"components: {rep['components']}"]
    if rep["components"] == 1:
        if rep["delta"] == "1":
            lines.append(f"unknot-like: Δ = 1, Casson {rep['casson']}")
        lines += [
            f"alexander: {rep['delta']}",
            f"conway: {rep['nabla']}",
            f"casson: {rep['casson']}",
            "surgery casson n*C: "
            + ", ".join(f"{n}: {v}" for n, v in rep["surgery_casson"].items()),
        ]
    else:
        lines.append(f"alexander (unnormalized): {rep['delta']}")
        if "linking_number" in rep:
            lines.append(f"linking number: {rep['linking_number']}")
    lines.append(f"genus (canonical surface): {rep['genus']}")
    flags = rep["classes"]
    lines.append("classes: " + ", ".join(f"{k}={v}" for k, v in flags.items()))
    return "\n".join(lines) + "\n"


def _cmd_invariants(cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    w = parse_word(cfg.word_text)
    rep = invariant_report(w)
    if cfg.output_format == "json":
        out.write(json.dumps(rep, sort_keys=True) + "\n")
    elif cfg.output_format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        keys = ["word", "components", "delta", "nabla", "casson", "genus"]
        writer.writerow(keys)
        writer.writerow([rep.get(k) if rep.get(k) is not None else "" for k in keys])
    else:
        out.write(_text_report(rep))
    return 0


def _cmd_verify(cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    results = verifier.verify_paper(
        max_letters=cfg.max_letters,
        max_letters_positive=cfg.max_letters_positive,
        n_max=cfg.n_max,
        p_max=cfg.p_max,
        workers=cfg.workers,
    )
    results.append(verifier.skein_campaign(cfg.samples, cfg.seed, cfg.max_letters_random))
    results.append(verifier.invariance_campaign(cfg.samples, cfg.seed, cfg.max_letters_random))
    results.append(verifier.verify_normalization(cfg.max_letters_random))
    return _emit_results(results, cfg, out, err)


def _enumerate_rows(cfg: CliConfig):
    for w in enumerate_words(cfg.class_filter, cfg.max_letters):
        comps = closure_info(w).component_count
        if cfg.check == "casson-positive":
            if comps != 1:
                continue
            value = casson(w)
            yield w, comps, value, value > 0
        elif cfg.check == "lk-nonpositive":
            if comps != 2:
                continue
            value = linking_number(w)
            yield w, comps, value, value <= 0
        else:
            yield w, comps, None, True


def _cmd_enumerate(cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    bad = total = 0
    writer = csv.writer(out, lineterminator="\n") if cfg.output_format == "csv" else None
    if writer:
        writer.writerow(["word", "letters", "components", "value", "ok"])
    for w, comps, value, ok in _enumerate_rows(cfg):
        total += 1
        bad += not ok
        row = {"word": format_word(w), "letters": len(w), "components": comps, "value": value, "ok": ok}
        if writer:
            writer.writerow(["" if v is None else v for v in row.values()])
        elif cfg.output_format == "json":
            out.write(json.dumps(row, sort_keys=True) + "\n")
        else:
            out.write(f"{row['word']}\t{comps}\t{'' if value is None else value}\t{'ok' if ok else 'FAIL'}\n")
    err.write(f"{total} rows, {bad} failed\n")
    return 1 if bad else 0


def _cmd_skein(cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    result = verifier.skein_campaign(cfg.samples, cfg.seed, cfg.max_letters_random)
    return _emit_results([result], cfg, out, err)


def _cmd_excluded(cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    report, result = verifier.report_excluded_E()
    if cfg.output_format == "json":
        out.write(json.dumps(report, sort_keys=True) + "\n")
    elif cfg.output_format == "csv":
        keys = ["word", "components", "in_Pa", "in_E", "delta", "nabla", "casson", "genus"]
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(keys)
        for row in report["words"]:
            writer.writerow([row[k] for k in keys])
    else:
        for row in report["words"]:
            out.write(f"{row['word']}\tΔ = {row['delta']}\t∇ = {row['nabla']}\tC = {row['casson']}\tg = {row['genus']}\n")
    err.write(result.summary() + "\n")
    return 0 if result.passed else 1


_COMMANDS = {
    "invariants": _cmd_invariants,
    "verify-paper": _cmd_verify,
    "enumerate": _cmd_enumerate,
    "skein-check": _cmd_skein,
    "excluded-set": _cmd_excluded,
}


def run(cfg: CliConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg.validate()
        return _COMMANDS[cfg.subcommand](cfg, out, err)
    except (UsageError, WordSyntaxError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
