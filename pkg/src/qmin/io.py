"""Input parsers (minterm list, truth table, SOP expression, PLA) and output formatting."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from qmin.core import MAX_VARS, Cube, FunctionSpec, render_product
from qmin.cover import CoverSolution, MinimizationResult
from qmin.errors import ParseError, SpecError
from qmin.tabulate import decimal_label, tabulation_trace

SOURCE_FORMATS = ("minterm-list", "truth-table", "expression", "pla")


@dataclass(frozen=True)
class ParsedInput:
    spec: FunctionSpec
    source_format: str


def _spec(n, on, dc=(), names=()) -> FunctionSpec:
    try:
        return FunctionSpec.from_minterms(n, on, dc, names)
    except SpecError as exc:
        raise ParseError(str(exc)) from exc


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_VARS:
        raise ParseError(f"variable count {n} outside 1..{MAX_VARS}")


def _int_tokens(text: str | None, n: int, what: str) -> set[int]:
    out = set()
    for tok in (text or "").replace(",", " ").split():
        if not tok.isdigit():
            raise ParseError(f"non-numeric {what} token {tok!r}")
        m = int(tok)
        if m >= 1 << n:
            raise ParseError(f"{what} {m} out of range for {n} variables")
        out.add(m)
    return out


def parse_minterm_list(n: int, on_text: str, dc_text: str | None = None) -> ParsedInput:
    _check_width(n)
    on = _int_tokens(on_text, n, "minterm")
    dc = _int_tokens(dc_text, n, "don't-care")
    if on & dc:
        raise ParseError(f"minterms listed as both on and don't-care: {sorted(on & dc)}")
    return ParsedInput(_spec(n, on, dc), "minterm-list")


def _expand(pattern: str) -> list[int]:
    """Minterms matched by an MSB-first pattern over {0,1,X}."""
    out = [0]
    for ch in pattern:
        if ch in "xX-":
            out = [m << 1 | b for m in out for b in (0, 1)]
        else:
            out = [m << 1 | int(ch) for m in out]
    return out


def parse_truth_table(rows: Iterable[str]) -> ParsedInput:
    """Rows of input symbols (0/1/X) followed by one output symbol (0/1).

    Whitespace inside a row is ignored.  Assignments not listed by any row are
    don't-cares.
    """
    n = None
    on: set[int] = set()
    off: set[int] = set()
    for lineno, raw in enumerate(rows, 1):
        row = "".join(raw.split())
        if not row or row.startswith("#"):
            continue
        inputs, out = row[:-1], row[-1]
        if n is None:
            n = len(inputs)
            _check_width(n)
        if len(inputs) != n:
            raise ParseError(f"row {lineno}: expected {n} inputs, got {len(inputs)}")
        if any(ch not in "01xX" for ch in inputs) or out not in "01":
            raise ParseError(f"row {lineno}: invalid symbol in {raw.strip()!r}")
        (on if out == "1" else off).update(_expand(inputs))
    if n is None:
        raise ParseError("truth table has no rows")
    if on & off:
        raise ParseError(f"conflicting outputs for minterms {sorted(on & off)}")
    dc = set(range(1 << n)) - on - off
    return ParsedInput(_spec(n, on, dc), "truth-table")


_TERM_RE = re.compile(r"([A-Za-z])('?)")


def parse_sop_expression(text: str) -> ParsedInput:
    """Parse ``f = AB' + C`` style input.

    Variables are single letters; first appearance is most significant.
    """
    body = text.split("=", 1)[1] if "=" in text else text
    body = "".join(body.split())
    if not body:
        raise ParseError("empty expression")
    products: list[list[tuple[str, bool]]] = []
    names: list[str] = []
    for term in body.split("+"):
        if not term:
            raise ParseError("empty product in expression")
        lits = []
        pos = 0
        while pos < len(term):
            match = _TERM_RE.match(term, pos)
            if match is None:
                if term[pos] == "'":
                    raise ParseError(f"dangling or repeated complement mark in {term!r}")
                raise ParseError(f"illegal character {term[pos]!r}")
            name = match.group(1)
            if name not in names:
                names.append(name)
            lits.append((name, bool(match.group(2))))
            pos = match.end()
        products.append(lits)
    n = len(names)
    _check_width(n)
    on: set[int] = set()
    for lits in products:
        value = [None] * n
        contradiction = False
        for name, neg in lits:
            i = names.index(name)
            bit = 0 if neg else 1
            if value[i] is not None and value[i] != bit:
                contradiction = True
            value[i] = bit
        if not contradiction:
            on.update(_expand("".join("X" if v is None else str(v) for v in value)))
    return ParsedInput(_spec(n, on, (), names), "expression")


def parse_pla(text: str) -> ParsedInput:
    """Single-output PLA: ``.i n``, ``.o 1``, cube lines, ``.e``.

    Output symbol ``1`` adds the cube to the on-set, ``-`` to the don't-care
    set.  A minterm in both ends up in the on-set.
    """
    n = None
    outputs = None
    names: Sequence[str] = ()
    on: set[int] = set()
    dc: set[int] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            key, *args = line.split()
            if key == ".i":
                n = _directive_int(args, lineno)
                _check_width(n)
            elif key == ".o":
                outputs = _directive_int(args, lineno)
                if outputs != 1:
                    raise ParseError(f"line {lineno}: only single-output PLA supported")
            elif key == ".ilb":
                names = args
            elif key == ".type":
                if args not in (["f"], ["fd"], ["fr"], ["fdr"]):
                    raise ParseError(f"line {lineno}: unsupported .type {' '.join(args)}")
            elif key == ".e" or key == ".end":
                break
            elif key not in (".p", ".ob"):
                raise ParseError(f"line {lineno}: unknown directive {key}")
            continue
        if n is None or outputs is None:
            raise ParseError(f"line {lineno}: cube before .i/.o header")
        parts = line.split()
        if len(parts) == 2:
            inputs, out = parts
        else:
            inputs, out = line[:n], line[n:].strip()
        if len(inputs) != n or any(ch not in "01-" for ch in inputs) or out not in ("1", "-"):
            raise ParseError(f"line {lineno}: bad cube line {raw.strip()!r}")
        (on if out == "1" else dc).update(_expand(inputs))
    if n is None or outputs is None:
        raise ParseError("missing .i/.o header")
    if names and (len(names) != n or any(len(s) != 1 for s in names)):
        names = ()
    return ParsedInput(_spec(n, on, dc - on, names), "pla")


def _directive_int(args, lineno) -> int:
    if len(args) != 1 or not args[0].isdigit():
        raise ParseError(f"line {lineno}: directive needs one integer")
    return int(args[0])


def write_pla(result: MinimizationResult) -> str:
    spec = result.spec
    cubes = display_order(result.cubes)
    lines = [
        f".i {spec.num_vars}",
        ".o 1",
        ".ilb " + " ".join(spec.var_names),
        ".ob f",
        f".p {len(cubes)}",
    ]
    lines += [f"{c.to_string()} 1" for c in cubes]
    lines.append(".e")
    return "\n".join(lines) + "\n"


def display_order(cubes: Iterable[Cube]) -> list[Cube]:
    """Terms in the order tabulation discovers them: fewest dashes first."""
    return sorted(cubes, key=lambda c: (c.dashes, c.value, c.mask))


def sop_string(cubes: Sequence[Cube], names: Sequence[str]) -> str:
    if not cubes:
        return "0"
    return " + ".join(render_product(c, names) for c in display_order(cubes))


def _expression(result: MinimizationResult, sol: CoverSolution, head: str | None = None) -> str:
    spec = result.spec
    if result.constant is not None:
        return f"f = {result.constant}"
    head = head or f"f({','.join(spec.var_names)})"
    return f"{head} = {sop_string(result.solution_cubes(sol), spec.var_names)}"


def format_trace(spec: FunctionSpec, engine: str = "binary", bits: int | None = None) -> str:
    trace = tabulation_trace(spec, engine)
    width = max(spec.num_vars, bits or 0)
    lines = [f"MID PROCESS COMPUTATION ({engine} engine)"]
    for k, rnd in enumerate(trace.rounds):
        lines.append(f"Table {k + 1}: {2 ** k}-square implicants")
        for ones, rows in trace.groups(k).items():
            for row in rows:
                label = decimal_label(row) if engine == "decimal" else row.label()
                mark = "✓" if row.checked else "*"
                lines.append(f"  {ones:>3}  {label:<24} {row.cube.to_string('x'):>{width}}  {mark}")
    return "\n".join(lines)


def format_chart(result: MinimizationResult) -> str:
    chart = result.chart
    if chart is None:
        return "(no chart: constant function)"
    essentials = set(result.essentials)
    colw = max(len(str(m)) for m in chart.cols) + 1
    labels = [",".join(str(m) for m in row.covered) for row in chart.rows]
    lw = max(len(s) for s in labels) + chart.rows[0].cube.width + 5
    lines = ["Prime implicants ( * indicates essential prime implicant )"]
    lines.append(" " * lw + "".join(f"{m:>{colw}}" for m in chart.cols))
    for r, row in enumerate(chart.rows):
        star = "*" if r in essentials else " "
        head = f"{star} {row.cube.to_string()}  {labels[r]}"
        cells = "".join(f"{'✓' if hit else '':>{colw}}" for hit in chart.incidence[r])
        lines.append(f"{head:<{lw}}{cells}".rstrip())
    return "\n".join(lines)


def format_result(
    result: MinimizationResult,
    style: str = "expression",
    *,
    all_solutions: bool = False,
    engine: str = "binary",
    bits: int | None = None,
) -> str:
    if style == "pla":
        return write_pla(result)
    out = []
    if style == "table":
        if result.constant is None:
            out.append(format_trace(result.spec, engine, bits))
            out.append("")
            out.append(format_chart(result))
            out.append("")
            out.append(
                "minimal expression is unique" if result.unique
                else "no unique minimal expression"
            )
    elif style != "expression":
        raise ValueError(f"unknown output style {style!r}")
    if all_solutions and result.constant is None:
        out += [_expression(result, sol, "F") for sol in result.solutions]
    out.append(_expression(result, result.chosen))
    return "\n".join(out) + "\n"
