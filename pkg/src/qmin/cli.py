"""Command-line front end: ``qmin --format minterms -n 4 --on "0 5 6 7"``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from qmin import io
from qmin.cover import MinimizeOptions, minimize
from qmin.errors import ParseError, QMError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INTERNAL = 3


@dataclass
class CliConfig:
    input_format: str | None = None
    text: str | None = None
    path: str | None = None
    on: str | None = None
    dc: str | None = None
    num_vars: int | None = None
    show_mid: bool = False
    min_bits: int | None = None
    all_solutions: bool = False
    output_style: str = "expression"
    engine: str = "binary"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qmin", description="Exact two-level minimization (Quine-McCluskey + Petrick)."
    )
    p.add_argument("--format", dest="input_format", choices=["minterms", "table", "expr", "pla"])
    p.add_argument("-n", "--vars", dest="num_vars", type=int)
    p.add_argument("--on", help="on-set minterms, whitespace separated")
    p.add_argument("--dc", help="don't-care minterms, whitespace separated")
    p.add_argument("--in", dest="text", help="inline input text (';' separates table rows)")
    p.add_argument("--file", dest="path", help="read input from PATH")
    p.add_argument("-m", "--show-mid", action="store_true", help="print tabulation tables")
    p.add_argument("-b", "--bits", dest="min_bits", type=int, help="minimum display width")
    p.add_argument("--all-solutions", action="store_true")
    p.add_argument("--engine", choices=["binary", "decimal", "both"], default="binary")
    p.add_argument(
        "--output", dest="output_style", choices=["expression", "pla", "table"], default="expression"
    )
    return p


def _source_text(cfg: CliConfig) -> str | None:
    if cfg.path is not None:
        try:
            return Path(cfg.path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ParseError(f"cannot read {cfg.path}: {exc.strerror}") from exc
    return cfg.text


def parse_input(cfg: CliConfig, stdin=None) -> io.ParsedInput:
    fmt = cfg.input_format
    text = _source_text(cfg)
    if text is None and cfg.on is None:
        text = (stdin or sys.stdin).read()
        if fmt is None:
            fmt = "pla" if text.lstrip().startswith(".") else "minterms"
    fmt = fmt or "minterms"

    if fmt in ("table", "expr") and cfg.num_vars is not None:
        raise ParseError(f"-n is not allowed with --format {fmt}; the width is inferred")
    if fmt == "minterms":
        if cfg.num_vars is None:
            raise ParseError("--format minterms requires -n/--vars")
        if cfg.on is not None:
            return io.parse_minterm_list(cfg.num_vars, cfg.on, cfg.dc)
        lines = (text or "").splitlines()
        on = lines[0] if lines else ""
        dc = lines[1] if len(lines) > 1 else cfg.dc
        return io.parse_minterm_list(cfg.num_vars, on, dc)
    if text is None:
        raise ParseError(f"--format {fmt} needs --in, --file or standard input")
    if fmt == "table":
        return io.parse_truth_table(text.replace(";", "\n").splitlines())
    if fmt == "expr":
        return io.parse_sop_expression(text.strip())
    parsed = io.parse_pla(text)
    if cfg.num_vars is not None and cfg.num_vars != parsed.spec.num_vars:
        raise ParseError(f"-n {cfg.num_vars} does not match PLA header .i {parsed.spec.num_vars}")
    return parsed


def run(cfg: CliConfig, stdout=None, stderr=None, stdin=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        parsed = parse_input(cfg, stdin)
    except ParseError as exc:
        print(f"qmin: error: {exc}", file=stderr)
        return EXIT_PARSE
    try:
        result = minimize(parsed.spec, MinimizeOptions(engine=cfg.engine))
        chunks = []
        if parsed.source_format == "expression":
            chunks.append(f"variables: {', '.join(parsed.spec.var_names)} (most significant first)\n")
        if cfg.show_mid and result.constant is None and cfg.output_style != "table":
            engine = "binary" if cfg.engine == "both" else cfg.engine
            chunks.append(io.format_trace(parsed.spec, engine, cfg.min_bits) + "\n\n")
        chunks.append(
            io.format_result(
                result,
                cfg.output_style,
                all_solutions=cfg.all_solutions,
                engine="binary" if cfg.engine == "both" else cfg.engine,
                bits=cfg.min_bits,
            )
        )
    except QMError as exc:
        print(f"qmin: internal error: {exc}", file=stderr)
        return EXIT_INTERNAL
    stdout.write("".join(chunks))
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(CliConfig(**vars(args)))


if __name__ == "__main__":
    sys.exit(main())
