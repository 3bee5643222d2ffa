"""Prime implicant generation by tabulation.

Two engines are provided and must agree exactly:

* the binary engine pairs 0/1/dash patterns group by group;
* the decimal engine works only with minterm numbers and the bracketed
  power-of-two differences, never looking at bit patterns while pairing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from qmin import _accel
from qmin.core import (
    Cube,
    FunctionSpec,
    PrimeImplicant,
    make_prime,
    minterm_to_cube,
    pi_sort_key,
    popcount,
)
from qmin.errors import EmptyFunctionError

ENGINES = ("binary", "decimal")


@dataclass
class TraceRow:
    cube: Cube
    minterms: tuple[int, ...]  # in pairing order, e.g. (5, 7, 13, 15)
    diffs: tuple[int, ...] = ()
    checked: bool = False

    @property
    def ones(self) -> int:
        return popcount(self.cube.value)

    def label(self) -> str:
        """Pairing label in table style: ``5``, ``5, 7`` or ``5,7-13,15``."""
        ms = [str(m) for m in self.minterms]
        if len(ms) <= 2:
            return ", ".join(ms)
        return "-".join(",".join(ms[i:i + 2]) for i in range(0, len(ms), 2))


@dataclass
class TabulationTrace:
    engine: str
    rounds: list[list[TraceRow]] = field(default_factory=list)

    def groups(self, k: int) -> dict[int, list[TraceRow]]:
        out: dict[int, list[TraceRow]] = {}
        for row in self.rounds[k]:
            out.setdefault(row.ones, []).append(row)
        return out

    def unchecked(self) -> list[TraceRow]:
        return [row for rnd in self.rounds for row in rnd if not row.checked]


@dataclass(frozen=True)
class DecimalGroupEntry:
    minterms: tuple[int, ...]
    diffs: tuple[int, ...]

    def to_cube(self, width: int) -> Cube:
        mask = 0
        for d in self.diffs:
            mask |= d
        return Cube(width, self.minterms[0], mask)


def group_by_ones(cubes: Iterable[Cube]) -> dict[int, list[Cube]]:
    """Bucket cubes by the ones-count of their value, keys ascending."""
    groups: dict[int, list[Cube]] = {}
    for c in cubes:
        groups.setdefault(popcount(c.value), []).append(c)
    return dict(sorted(groups.items()))


def _initial_minterms(spec: FunctionSpec) -> list[int]:
    care = spec.care_set
    if not care:
        raise EmptyFunctionError("on_set and dc_set are both empty")
    return care


def _binary_rounds(spec: FunctionSpec) -> list[list[TraceRow]]:
    n = spec.num_vars
    cubes = [minterm_to_cube(m, n) for m in _initial_minterms(spec)]
    current = [
        TraceRow(c, (c.value,)) for grp in group_by_ones(cubes).values() for c in grp
    ]
    rounds = []
    while current:
        rounds.append(current)
        pairs = _accel.pair_round(
            [r.cube.value for r in current], [r.cube.mask for r in current]
        )
        merged: dict[tuple[int, int], TraceRow] = {}
        for i, j in pairs:
            a, b = current[i], current[j]
            a.checked = b.checked = True
            diff = a.cube.value ^ b.cube.value
            key = (a.cube.value, a.cube.mask | diff)
            if key not in merged:  # drop duplicate patterns, keep first
                merged[key] = TraceRow(Cube(n, *key), a.minterms + b.minterms)
        nxt = group_by_ones(row.cube for row in merged.values())
        by_cube = {row.cube: row for row in merged.values()}
        current = [by_cube[c] for grp in nxt.values() for c in grp]
    return rounds


def _is_power_of_two(x: int) -> bool:
    return x > 0 and x & (x - 1) == 0


def _decimal_rounds(spec: FunctionSpec) -> list[list[list]]:
    """Run the decimal-notation tabulation.

    Each round is a list of ``[entry, order, ones, checked]`` records where
    ``order`` keeps the minterms in pairing order for display.
    """
    minterms = _initial_minterms(spec)
    current = sorted(
        ([DecimalGroupEntry((m,), ()), [m], popcount(m), False] for m in minterms),
        key=lambda rec: rec[2],
    )
    rounds = []
    while current:
        rounds.append(current)
        produced: dict[DecimalGroupEntry, list] = {}
        by_ones: dict[int, list] = {}
        for rec in current:
            by_ones.setdefault(rec[2], []).append(rec)
        for upper in current:
            for lower in by_ones.get(upper[2] + 1, ()):
                ue, le = upper[0], lower[0]
                if ue.diffs != le.diffs:
                    continue
                p = le.minterms[0] - ue.minterms[0]
                if not _is_power_of_two(p) or p in ue.diffs:
                    continue
                if sorted(m + p for m in ue.minterms) != list(le.minterms):
                    continue
                upper[3] = lower[3] = True
                entry = DecimalGroupEntry(
                    tuple(sorted(ue.minterms + le.minterms)),
                    tuple(sorted(ue.diffs + (p,))),
                )
                if entry not in produced:
                    produced[entry] = [entry, upper[1] + lower[1], upper[2], False]
        current = sorted(produced.values(), key=lambda rec: rec[2])
    return rounds


def _sorted_primes(cubes: Iterable[Cube], spec: FunctionSpec) -> list[PrimeImplicant]:
    return [make_prime(c, spec) for c in sorted(set(cubes), key=pi_sort_key)]


def prime_implicants_binary(spec: FunctionSpec) -> list[PrimeImplicant]:
    rounds = _binary_rounds(spec)
    return _sorted_primes((row.cube for rnd in rounds for row in rnd if not row.checked), spec)


def prime_implicants_decimal(spec: FunctionSpec) -> list[PrimeImplicant]:
    rounds = _decimal_rounds(spec)
    n = spec.num_vars
    return _sorted_primes(
        (rec[0].to_cube(n) for rnd in rounds for rec in rnd if not rec[3]), spec
    )


def prime_implicants(spec: FunctionSpec, engine: str = "binary") -> list[PrimeImplicant]:
    if engine == "binary":
        return prime_implicants_binary(spec)
    if engine == "decimal":
        return prime_implicants_decimal(spec)
    raise ValueError(f"unknown engine {engine!r}")


def tabulation_trace(spec: FunctionSpec, engine: str = "binary") -> TabulationTrace:
    if engine == "binary":
        return TabulationTrace("binary", _binary_rounds(spec))
    if engine == "decimal":
        n = spec.num_vars
        rounds = [
            [TraceRow(rec[0].to_cube(n), tuple(rec[1]), rec[0].diffs, rec[3]) for rec in rnd]
            for rnd in _decimal_rounds(spec)
        ]
        return TabulationTrace("decimal", rounds)
    raise ValueError(f"unknown engine {engine!r}")


def decimal_label(row: TraceRow) -> str:
    """Decimal-table row text, e.g. ``5,7-13,15 (2,8)``."""
    if not row.diffs:
        return row.label()
    return f"{row.label()} ({','.join(str(d) for d in row.diffs)})"


def eliminated_variables(diffs: Sequence[int], names: Sequence[str]) -> list[str]:
    """Variables removed by bracketed differences; weight 2**(n-1) is names[0]."""
    return [names[len(names) - d.bit_length()] for d in diffs]
