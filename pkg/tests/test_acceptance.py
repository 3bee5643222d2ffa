"""Exit criteria for the minimizer.

Each test records one PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly.
"""

import random
import subprocess
import sys
import time

import pytest

from qmin import FunctionSpec, minimize
from qmin.core import Cube
from qmin.cover import (
    build_chart,
    essential_prime_implicants,
    exhaustive_min_cover,
    petrick_minimal_covers,
    reduce_chart,
)
from qmin.errors import BudgetExceededError, EmptyFunctionError
from qmin.io import format_result, write_pla
from qmin.tabulate import (
    decimal_label,
    eliminated_variables,
    prime_implicants_binary,
    prime_implicants_decimal,
    tabulation_trace,
)
from qmin.verify import (
    brute_force_min_cost,
    brute_force_prime_implicants,
    check_equivalence,
    pi_count_bound,
)

from conftest import random_spec

RESULTS: list[str] = []

EXAMPLE1 = FunctionSpec.from_minterms(4, (0, 5, 6, 7, 9, 10, 13, 14, 15))
CYCLIC = FunctionSpec.from_minterms(3, (0, 1, 2, 5, 6, 7))


@pytest.fixture
def record(request):
    """Yield a dict for details; log one line once the test body finishes."""
    info = {"detail": ""}
    start = time.perf_counter()
    yield info
    elapsed = time.perf_counter() - start
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    status = "FAIL" if failed else "PASS"
    RESULTS.append(f"[{status}] {request.node.name}: {info['detail']} ({elapsed:.2f}s)")


def _cubes(pis):
    return {str(p.cube) for p in pis}


def test_c1_worked_example(record):
    start = time.perf_counter()
    expected = {"0000", "1-01", "1-10", "-1-1", "-11-"}
    for engine in (prime_implicants_binary, prime_implicants_decimal):
        assert _cubes(engine(EXAMPLE1)) == expected
    result = minimize(EXAMPLE1)
    chart = build_chart(result.pis, EXAMPLE1)
    assert essential_prime_implicants(chart) == set(range(5))
    assert result.unique
    assert result.chosen.cost == (5, 14)
    assert format_result(result) == "f(A,B,C,D) = A'B'C'D' + AC'D + ACD' + BD + BC\n"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    record["detail"] = "5 PIs from both engines, all essential, unique cover 5 terms / 14 literals"


def test_c2_decimal_trace(record):
    start = time.perf_counter()
    trace = tabulation_trace(EXAMPLE1, "decimal")
    labels = [decimal_label(row) for rnd in trace.rounds for row in rnd]
    assert "5,7-13,15 (2,8)" in labels
    row = next(r for r in trace.rounds[2] if decimal_label(r) == "5,7-13,15 (2,8)")
    assert str(row.cube) == "-1-1"
    # legend: [A=8, B=4, C=2, D=1]
    assert eliminated_variables((8, 4, 2, 1), "ABCD") == ["A", "B", "C", "D"]
    assert eliminated_variables(row.diffs, "ABCD") == ["C", "A"]
    assert time.perf_counter() - start < 1.0
    record["detail"] = "entry '5,7-13,15 (2,8)' present, maps to -1-1 (C and A eliminated)"


def test_c3_engine_differential(record):
    start = time.perf_counter()
    mismatches = 0
    checked = 0
    for engine in (prime_implicants_binary, prime_implicants_decimal):
        with pytest.raises(EmptyFunctionError):
            engine(FunctionSpec(3, ()))
    checked += 1
    for bits in range(1, 256):
        spec = FunctionSpec(3, tuple(m for m in range(8) if bits >> m & 1))
        checked += 1
        mismatches += prime_implicants_binary(spec) != prime_implicants_decimal(spec)
    rng = random.Random(20240601)
    for n in (4, 5, 6):
        done = 0
        while done < 1000:
            spec = random_spec(rng, n, dc_rate=rng.choice([0.0, 0.1, 0.3]))
            if not spec.care_set:
                continue
            done += 1
            checked += 1
            mismatches += prime_implicants_binary(spec) != prime_implicants_decimal(spec)
    elapsed = time.perf_counter() - start
    record["detail"] = f"{checked} specs (all 256 at n=3 + 1000 each at n=4,5,6), {mismatches} mismatches"
    assert mismatches == 0
    assert elapsed < 30.0


def test_c4_oracle_optimality(record):
    start = time.perf_counter()
    rng = random.Random(77)
    mismatches = []
    for i in range(200):
        spec = random_spec(rng, rng.randint(1, 4), dc_rate=rng.choice([0.0, 0.2]))
        got = minimize(spec).chosen.cost
        want = brute_force_min_cost(spec)
        if got != want:
            mismatches.append((spec, got, want))
    elapsed = time.perf_counter() - start
    record["detail"] = f"200 specs n<=4, {len(mismatches)} cost mismatches vs all-implicant search"
    assert not mismatches
    assert elapsed < 60.0


def _cube_union_spec(rng, n):
    on, dc = set(), set()
    for _ in range(rng.randint(1, 2 * n)):
        mask = rng.getrandbits(n) & rng.getrandbits(n)
        cube = Cube(n, rng.getrandbits(n) & ~mask, mask)
        (dc if rng.random() < 0.2 else on).update(cube.minterms())
    return FunctionSpec.from_minterms(n, on, dc - on)


def _density_spec(rng, n, density):
    on = [m for m in range(1 << n) if rng.random() < density]
    taken = set(on)
    dc = [m for m in range(1 << n) if m not in taken and rng.random() < 0.05]
    return FunctionSpec.from_minterms(n, on, dc)


def test_c5_equivalence(record):
    rng = random.Random(5150)
    specs = []
    for n in range(1, 7):
        specs += [random_spec(rng, n) for _ in range(60)]
    for n in range(7, 11):
        specs += [_cube_union_spec(rng, n) for _ in range(15)]
        specs += [_density_spec(rng, n, 0.05) for _ in range(10)]
        specs += [_density_spec(rng, n, 0.3) for _ in range(2)]
    outputs = budget = 0
    bad = []
    for spec in specs:
        try:
            result = minimize(spec)
        except BudgetExceededError:
            budget += 1
            continue
        outputs += 1
        for sol in result.solutions:
            report = check_equivalence(result.solution_cubes(sol), spec)
            if not report.ok:
                bad.append((spec, report.mismatches[:3]))
    record["detail"] = (
        f"{outputs} minimize outputs n<=10 checked over full domain, {len(bad)} mismatches; "
        f"{budget} specs stopped by the Petrick budget (no output)"
    )
    assert not bad
    assert outputs >= len(specs) - 20


def test_c6_cyclic_chart(record):
    start = time.perf_counter()
    result = minimize(CYCLIC)
    chart = build_chart(result.pis, CYCLIC)
    assert essential_prime_implicants(chart) == set()
    residual = reduce_chart(chart, set())
    petrick = petrick_minimal_covers(residual)
    power = exhaustive_min_cover(residual)
    assert petrick == power
    assert len(power) == 2 and all(s.term_count == 3 for s in power)
    assert not result.unique and len(result.solutions) == 2
    assert [str(c) for c in result.cubes] == ["00-", "-10", "1-1"]
    assert time.perf_counter() - start < 1.0
    record["detail"] = "no essentials, 2 co-minimal 3-term covers, Petrick == power set, not unique"


def test_c7_degenerate(record):
    zero = minimize(FunctionSpec(4, ()))
    assert format_result(zero) == "f = 0\n"
    assert format_result(minimize(FunctionSpec(3, (), (1, 2)))) == "f = 0\n"
    one = minimize(FunctionSpec(3, (0, 1, 2, 3), (4, 5, 6, 7)))
    assert format_result(one) == "f = 1\n"
    assert [str(c) for c in one.cubes] == ["---"]
    assert "--- 1" in write_pla(one).splitlines()
    record["detail"] = "empty on-set -> 'f = 0'; on+dc = full domain -> 'f = 1' as the all-dash term"


def test_c8_pi_bound(record):
    rng = random.Random(8)
    worst = 0.0
    checked = 0
    for _ in range(500):
        n = rng.randint(1, 8)
        spec = random_spec(rng, n, dc_rate=rng.choice([0.0, 0.2]))
        if not spec.care_set:
            continue
        count = len(prime_implicants_binary(spec))
        if n <= 6:
            assert count == len(brute_force_prime_implicants(spec))
        assert count <= pi_count_bound(n)
        worst = max(worst, count / pi_count_bound(n))
        checked += 1
    record["detail"] = f"{checked} specs n<=8, max PI count / ceil(3^n/n) = {worst:.3f}"
    assert checked >= 450


def test_c9_cli_determinism(record):
    cmd = [
        sys.executable, "-m", "qmin.cli", "--format", "minterms", "-n", "4",
        "--on", "0 5 6 7 9 10 13 14 15",
    ]
    runs = [subprocess.run(cmd, capture_output=True) for _ in range(2)]
    assert all(r.returncode == 0 for r in runs)
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stdout == b"f(A,B,C,D) = A'B'C'D' + AC'D + ACD' + BD + BC\n"
    assert runs[0].stderr == b""
    record["detail"] = "two runs byte-identical, exit 0"


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
