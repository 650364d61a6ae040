"""Command-line entry point.

    hypvol verify table --id {1|2}
    hypvol verify all
    hypvol certify window --target 6.89 --lo 1.215 --hi 1.439 [--max-depth N]
    hypvol certify lemma --id <lemma>
    hypvol certify tail

Global flags (accepted before or after the command): --format, --out,
--threads, --max-depth, --clamp-tol, --slack.  HYPVOL_CONFIG may name a
JSON file of defaults for those flags.

Exit codes: 0 certified, 1 falsified, 2 inconclusive, 64 usage error,
74 I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .bounds import RangeError
from .certify import (
    DEFAULT_MAX_DEPTH,
    LemmaId,
    LemmaReport,
    Status,
    certify_lemma,
    certify_tail,
    certify_window,
    combine_status,
    verify_table,
)
from .interval import DomainError, numeric_config
from .report import FORMATS, emit_report

EXIT_CODES = {Status.CERTIFIED: 0, Status.FALSIFIED: 1, Status.INCONCLUSIVE: 2}
EXIT_USAGE = 64
EXIT_IO = 74
CONFIG_ENV = "HYPVOL_CONFIG"
_CONFIG_KEYS = {"format", "out", "threads", "max_depth", "clamp_tol", "slack"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    command: str
    output_format: str
    max_depth: int = DEFAULT_MAX_DEPTH
    output_path: str | None = None
    thread_count: int = 1
    clamp_tol: float = 1e-12
    slack_steps: int = 2

    def __post_init__(self):
        if not 1 <= self.max_depth <= 64:
            raise UsageError(f"--max-depth must be in [1, 64], got {self.max_depth}")
        if self.thread_count < 1:
            raise UsageError(f"--threads must be >= 1, got {self.thread_count}")
        if self.output_format not in FORMATS:
            raise UsageError(f"--format must be one of {FORMATS}")
        if not (self.clamp_tol >= 0 and math.isfinite(self.clamp_tol)):
            raise UsageError("--clamp-tol must be a finite non-negative number")
        if self.slack_steps < 1:
            raise UsageError("--slack must be >= 1")


def _decimal(text: str) -> str:
    try:
        d = Decimal(text)
    except InvalidOperation:
        raise argparse.ArgumentTypeError(f"not a decimal number: {text!r}")
    if not d.is_finite():
        raise argparse.ArgumentTypeError(f"not a finite number: {text!r}")
    return text


def _global_flags() -> argparse.ArgumentParser:
    g = _Parser(add_help=False)
    s = argparse.SUPPRESS
    g.add_argument("--format", choices=FORMATS, default=s)
    g.add_argument("--out", metavar="PATH", default=s)
    g.add_argument("--threads", type=int, metavar="N", default=s)
    g.add_argument("--max-depth", dest="max_depth", type=int, metavar="N", default=s)
    g.add_argument("--clamp-tol", dest="clamp_tol", type=float, metavar="TOL", default=s)
    g.add_argument("--slack", type=int, metavar="STEPS", default=s, help="ulps of widening for libm results")
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags()
    p = _Parser(prog="hypvol", description="Interval certificates for the genus-2 boundary volume bounds.", parents=[common])
    cmds = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    verify = cmds.add_parser("verify", help="re-derive tables or run everything", parents=[common])
    vsub = verify.add_subparsers(dest="what", required=True, parser_class=_Parser)
    vt = vsub.add_parser("table", parents=[common])
    vt.add_argument("--id", dest="table_id", type=int, choices=(1, 2), required=True)
    vsub.add_parser("all", parents=[common])

    cert = cmds.add_parser("certify", help="certify a single claim", parents=[common])
    csub = cert.add_subparsers(dest="what", required=True, parser_class=_Parser)
    cw = csub.add_parser("window", parents=[common])
    cw.add_argument("--target", type=_decimal, required=True)
    cw.add_argument("--lo", type=_decimal, required=True)
    cw.add_argument("--hi", type=_decimal, required=True)
    cl = csub.add_parser("lemma", parents=[common])
    cl.add_argument("--id", dest="lemma_id", choices=[m.value for m in LemmaId], required=True)
    csub.add_parser("tail", parents=[common])
    return p


def _file_defaults() -> dict:
    path = os.environ.get(CONFIG_ENV)
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read {CONFIG_ENV}={path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{CONFIG_ENV}={path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or set(data) - _CONFIG_KEYS:
        raise UsageError(f"{CONFIG_ENV} must be a JSON object with keys among {sorted(_CONFIG_KEYS)}")
    return data


def parse_config(argv: list[str]) -> tuple[RunConfig, argparse.Namespace]:
    ns = build_parser().parse_args(argv)
    opts = {**_file_defaults(), **{k: v for k, v in vars(ns).items() if k in _CONFIG_KEYS}}
    command = f"{ns.group} {ns.what}"
    default_fmt = "json" if ns.group == "certify" else "md"
    try:
        cfg = RunConfig(
            command=command,
            output_format=opts.get("format", default_fmt),
            max_depth=int(opts.get("max_depth", DEFAULT_MAX_DEPTH)),
            output_path=opts.get("out"),
            thread_count=int(opts.get("threads", 1)),
            clamp_tol=float(opts.get("clamp_tol", 1e-12)),
            slack_steps=int(opts.get("slack", 2)),
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return cfg, ns


def _execute(cfg: RunConfig, ns: argparse.Namespace) -> tuple[bytes, Status]:
    threads, depth = cfg.thread_count, cfg.max_depth
    fmt = cfg.output_format
    if cfg.command == "verify table":
        rows, cert = verify_table(ns.table_id, threads=threads)
        return emit_report(rows, cert if fmt == "json" else None, fmt), cert.status
    if cfg.command == "verify all":
        reports = [certify_lemma(lid, max_depth=depth) for lid in LemmaId]
        return emit_report(None, None, fmt, lemmas=reports), combine_status(r.verdict for r in reports)
    if cfg.command == "certify window":
        try:
            cert = certify_window(ns.target, ns.lo, ns.hi, max_depth=depth, threads=threads)
        except (ValueError, DomainError, RangeError) as exc:
            raise UsageError(str(exc)) from exc
        return emit_report(None, cert, fmt), cert.status
    if cfg.command == "certify lemma":
        rep = certify_lemma(ns.lemma_id, max_depth=depth)
        return emit_report(None, None, fmt, lemmas=[rep]), rep.verdict
    if cfg.command == "certify tail":
        cert, witnesses = certify_tail(max_depth=depth, threads=threads)
        rep = LemmaReport(LemmaId.tail_monotone, cert.status, witnesses, cert)
        return emit_report(None, None, fmt, lemmas=[rep]), cert.status
    raise UsageError(f"unknown command {cfg.command!r}")


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        cfg, ns = parse_config(argv)
        with numeric_config(clamp_tol=cfg.clamp_tol, slack_steps=cfg.slack_steps):
            payload, status = _execute(cfg, ns)
    except UsageError as exc:
        print(f"hypvol: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hypvol: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if cfg.output_path:
            with open(cfg.output_path, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.buffer.write(payload)
            sys.stdout.flush()
    except OSError as exc:
        print(f"hypvol: cannot write report: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_CODES[status]


def main() -> int:
    return run()


if __name__ == "__main__":
    raise SystemExit(main())
