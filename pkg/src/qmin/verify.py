"""Brute-force oracles.

Nothing here shares pairing, absorption or covering code with the engines:
cubes are enumerated as 0/1/- strings and checked minterm by minterm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from qmin.core import Cube, FunctionSpec, PrimeImplicant, pi_sort_key
from qmin.errors import IncompatibleCubeError, OracleLimitError

PI_ORACLE_MAX_VARS = 10
EQUIV_MAX_VARS = 20
MIN_COST_MAX_VARS = 4


@dataclass
class OracleReport:
    subject: str
    instances_checked: int = 0
    mismatches: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _pattern_minterms(pattern: str) -> list[int]:
    choices = [("0", "1") if ch == "-" else (ch,) for ch in pattern]
    return [int("".join(bits), 2) for bits in product(*choices)]


def _implicant_patterns(spec: FunctionSpec) -> dict[str, list[int]]:
    """Every 0/1/- pattern whose minterms all lie in on ∪ dc."""
    allowed = set(spec.on_set) | set(spec.dc_set)
    out = {}
    for pattern in map("".join, product("01-", repeat=spec.num_vars)):
        ms = _pattern_minterms(pattern)
        if all(m in allowed for m in ms):
            out[pattern] = ms
    return out


def brute_force_prime_implicants(spec: FunctionSpec) -> list[PrimeImplicant]:
    n = spec.num_vars
    if n > PI_ORACLE_MAX_VARS:
        raise OracleLimitError(f"PI oracle limited to {PI_ORACLE_MAX_VARS} variables")
    implicants = _implicant_patterns(spec)
    primes = []
    for pattern, ms in implicants.items():
        grown = (
            pattern[:i] + "-" + pattern[i + 1:] for i, ch in enumerate(pattern) if ch != "-"
        )
        if any(g in implicants for g in grown):
            continue
        primes.append(PrimeImplicant(Cube.from_string(pattern), tuple(sorted(ms))))
    primes.sort(key=lambda p: pi_sort_key(p.cube))
    return primes


def check_equivalence(cubes: Sequence[Cube], spec: FunctionSpec) -> OracleReport:
    """Compare a cover against the spec over every assignment; dc is free."""
    n = spec.num_vars
    if n > EQUIV_MAX_VARS:
        raise OracleLimitError(f"equivalence oracle limited to {EQUIV_MAX_VARS} variables")
    if any(c.width != n for c in cubes):
        raise IncompatibleCubeError("cover width differs from spec")
    domain = np.arange(1 << n, dtype=np.int64)
    got = np.zeros(1 << n, dtype=bool)
    for c in cubes:
        got |= (domain & ~c.mask) == c.value
    want = np.zeros(1 << n, dtype=bool)
    want[list(spec.on_set)] = True
    care = np.ones(1 << n, dtype=bool)
    if spec.dc_set:
        care[list(spec.dc_set)] = False
    bad = np.nonzero(care & (got != want))[0]
    report = OracleReport("check_equivalence", instances_checked=int(care.sum()))
    report.mismatches = [(int(m), bool(want[m]), bool(got[m])) for m in bad]
    return report


def brute_force_min_cost(spec: FunctionSpec) -> tuple[int, int]:
    """Cheapest (terms, literals) over covers built from ANY implicants.

    Exact branch and bound: every uncovered on-set minterm needs some
    implicant containing it, so branching on those implicants is complete.
    """
    n = spec.num_vars
    if n > MIN_COST_MAX_VARS:
        raise OracleLimitError(f"min-cost oracle limited to {MIN_COST_MAX_VARS} variables")
    if not spec.on_set:
        return (0, 0)
    on = set(spec.on_set)
    implicants = [
        (frozenset(ms) & on, n - pattern.count("-"))
        for pattern, ms in _implicant_patterns(spec).items()
    ]
    implicants = [imp for imp in implicants if imp[0]]
    containing = {m: [imp for imp in implicants if m in imp[0]] for m in on}
    best = [(len(on) + 1, 0)]

    def search(uncovered: frozenset, terms: int, lits: int) -> None:
        if not uncovered:
            best[0] = min(best[0], (terms, lits))
            return
        if (terms + 1, lits) > best[0]:
            return
        m = min(uncovered, key=lambda x: (len(containing[x]), x))
        for ms, cost in containing[m]:
            search(uncovered - ms, terms + 1, lits + cost)

    search(frozenset(on), 0, 0)
    return best[0]


def pi_count_bound(n: int) -> int:
    """Upper bound ceil(3**n / n) on the number of prime implicants."""
    return math.ceil(3**n / n)
