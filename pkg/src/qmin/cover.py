"""Prime implicant chart, essential implicants and exact minimum covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from qmin import _accel
from qmin.core import Cube, FunctionSpec, PrimeImplicant, cube_contains, make_prime
from qmin.errors import (
    BudgetExceededError,
    ConsistencyError,
    EmptyFunctionError,
    EngineMismatchError,
    RowLimitError,
)
from qmin.tabulate import prime_implicants

DEFAULT_PETRICK_BUDGET = 1_000_000
EXHAUSTIVE_ROW_LIMIT = 32


@dataclass(frozen=True)
class Chart:
    """Rows are prime implicants, columns are on-set minterms.

    ``row_ids`` maps each row back to its index in the full PI list so that
    residual charts stay traceable.
    """

    rows: tuple[PrimeImplicant, ...]
    cols: tuple[int, ...]
    incidence: tuple[tuple[bool, ...], ...]
    row_ids: tuple[int, ...]

    def covering_rows(self, c: int) -> list[int]:
        return [r for r in range(len(self.rows)) if self.incidence[r][c]]

    def row_bits(self) -> list[int]:
        """Each row as an int whose bit c is set when the row covers column c."""
        out = []
        for row in self.incidence:
            bits = 0
            for c, hit in enumerate(row):
                if hit:
                    bits |= 1 << c
            out.append(bits)
        return out


@dataclass(frozen=True)
class CoverSolution:
    chosen: tuple[int, ...]
    term_count: int
    literal_count: int

    @classmethod
    def of(cls, chosen, rows: Sequence[PrimeImplicant]) -> "CoverSolution":
        chosen = tuple(sorted(chosen))
        return cls(chosen, len(chosen), sum(rows[i].literal_count for i in chosen))

    @property
    def cost(self) -> tuple[int, int]:
        return (self.term_count, self.literal_count)


@dataclass(frozen=True)
class MinimizeOptions:
    engine: str = "binary"  # binary | decimal | both
    method: str = "petrick"  # petrick | exhaustive
    petrick_budget: int = DEFAULT_PETRICK_BUDGET


@dataclass(frozen=True)
class MinimizationResult:
    spec: FunctionSpec
    pis: tuple[PrimeImplicant, ...]
    essentials: tuple[int, ...]
    solutions: tuple[CoverSolution, ...]
    chosen: CoverSolution
    unique: bool
    constant: int | None = None
    chart: Chart | None = field(default=None, compare=False)

    @property
    def cubes(self) -> list[Cube]:
        return [self.pis[i].cube for i in self.chosen.chosen]

    def solution_cubes(self, sol: CoverSolution) -> list[Cube]:
        return [self.pis[i].cube for i in sol.chosen]


def _make_chart(rows, cols, row_ids) -> Chart:
    incidence = tuple(tuple(cube_contains(r.cube, m) for m in cols) for r in rows)
    return Chart(tuple(rows), tuple(cols), incidence, tuple(row_ids))


def build_chart(pis: Sequence[PrimeImplicant], spec: FunctionSpec) -> Chart:
    chart = _make_chart(pis, spec.on_set, range(len(pis)))
    for c, m in enumerate(chart.cols):
        if not any(row[c] for row in chart.incidence):
            raise ConsistencyError(f"on-set minterm {m} is covered by no prime implicant")
    return chart


def essential_prime_implicants(chart: Chart) -> set[int]:
    out = set()
    for c in range(len(chart.cols)):
        hits = chart.covering_rows(c)
        if len(hits) == 1:
            out.add(hits[0])
    return out


def reduce_chart(chart: Chart, essentials: set[int]) -> Chart:
    covered = {
        c for c in range(len(chart.cols)) for r in essentials if chart.incidence[r][c]
    }
    cols = [c for c in range(len(chart.cols)) if c not in covered]
    keep = [
        r
        for r in range(len(chart.rows))
        if r not in essentials and any(chart.incidence[r][c] for c in cols)
    ]
    return Chart(
        tuple(chart.rows[r] for r in keep),
        tuple(chart.cols[c] for c in cols),
        tuple(tuple(chart.incidence[r][c] for c in cols) for r in keep),
        tuple(chart.row_ids[r] for r in keep),
    )


def _greedy_bound(residual: Chart) -> tuple[int, int]:
    """Cost of a greedy cover; an upper bound on the optimum."""
    bits = residual.row_bits()
    lits = [r.literal_count for r in residual.rows]
    left = (1 << len(residual.cols)) - 1
    terms = literals = 0
    while left:
        best = max(range(len(bits)), key=lambda r: (bin(bits[r] & left).count("1"), -lits[r]))
        left &= ~bits[best]
        terms += 1
        literals += lits[best]
    return terms, literals


def _cheapest(subsets, rows) -> list[CoverSolution]:
    sols = [CoverSolution.of(s, rows) for s in subsets]
    if not sols:
        return []
    best = min(s.cost for s in sols)
    return sorted((s for s in sols if s.cost == best), key=lambda s: s.chosen)


def petrick_minimal_covers(
    residual: Chart, budget: int = DEFAULT_PETRICK_BUDGET
) -> list[CoverSolution]:
    """All minimum-cost covers via the product-of-sums expansion.

    Selections are ints with bit r set when row r is chosen.  After each
    column's sum is multiplied in, absorbed (superset) selections are removed.
    """
    sums = [residual.covering_rows(c) for c in range(len(residual.cols))]
    for c, rows in enumerate(sums):
        if not rows:
            raise ConsistencyError(f"column {residual.cols[c]} has no covering row")
    lits = [r.literal_count for r in residual.rows]
    bound_terms, bound_lits = _greedy_bound(residual)

    def affordable(p: int) -> bool:
        # terms only grow while multiplying, so anything dearer than a known
        # cover can never become a minimum one
        size = bin(p).count("1")
        if size != bound_terms:
            return size < bound_terms
        return sum(lits[r] for r in range(len(lits)) if p >> r & 1) <= bound_lits

    product = [0]
    generated = 0
    # multiplication order does not change the expanded result
    for rows in sorted(sums, key=len):
        generated += len(product) * len(rows)
        if generated > budget:
            raise BudgetExceededError(
                f"Petrick expansion exceeds {budget} product terms; "
                "use exhaustive_min_cover instead"
            )
        product = [
            p
            for p in _accel.petrick_multiply(product, rows, len(residual.rows))
            if affordable(p)
        ]
    subsets = [
        tuple(r for r in range(len(residual.rows)) if p >> r & 1) for p in product
    ]
    return _cheapest(subsets, residual.rows)


def exhaustive_min_cover(residual: Chart) -> list[CoverSolution]:
    """All minimum-cost covers by enumerating row subsets smallest first."""
    nrows = len(residual.rows)
    if nrows > EXHAUSTIVE_ROW_LIMIT:
        raise RowLimitError(f"{nrows} rows exceed the power-set limit of {EXHAUSTIVE_ROW_LIMIT}")
    k, combos = _accel.cover_search(residual.row_bits(), len(residual.cols))
    if k < 0:
        raise ConsistencyError("residual chart cannot be covered")
    return _cheapest(combos, residual.rows)


def _constant_result(spec: FunctionSpec, value: int) -> MinimizationResult:
    if value == 0:
        empty = CoverSolution((), 0, 0)
        return MinimizationResult(spec, (), (), (empty,), empty, True, 0)
    n = spec.num_vars
    pi = make_prime(Cube(n, 0, (1 << n) - 1), spec)
    sol = CoverSolution((0,), 1, 0)
    return MinimizationResult(spec, (pi,), (0,), (sol,), sol, True, 1)


def _generate(spec: FunctionSpec, engine: str) -> list[PrimeImplicant]:
    if engine != "both":
        return prime_implicants(spec, engine)
    a = prime_implicants(spec, "binary")
    b = prime_implicants(spec, "decimal")
    if a != b:
        raise EngineMismatchError(
            "binary and decimal engines disagree: "
            f"{[str(p.cube) for p in a]} vs {[str(p.cube) for p in b]}"
        )
    return a


def minimize(spec: FunctionSpec, options: MinimizeOptions | None = None) -> MinimizationResult:
    opts = options or MinimizeOptions()
    if not spec.on_set:
        return _constant_result(spec, 0)
    if len(spec.on_set) + len(spec.dc_set) == 1 << spec.num_vars:
        return _constant_result(spec, 1)
    try:
        pis = _generate(spec, opts.engine)
    except EmptyFunctionError:  # unreachable with a nonempty on-set
        return _constant_result(spec, 0)
    chart = build_chart(pis, spec)
    essentials = essential_prime_implicants(chart)
    residual = reduce_chart(chart, essentials)
    if opts.method == "petrick":
        partial = petrick_minimal_covers(residual, opts.petrick_budget)
    elif opts.method == "exhaustive":
        partial = exhaustive_min_cover(residual)
    else:
        raise ValueError(f"unknown cover method {opts.method!r}")
    full = _cheapest(
        [tuple(essentials) + tuple(residual.row_ids[r] for r in s.chosen) for s in partial],
        pis,
    )
    return MinimizationResult(
        spec=spec,
        pis=tuple(pis),
        essentials=tuple(sorted(essentials)),
        solutions=tuple(full),
        chosen=full[0],
        unique=len(full) == 1,
        constant=None,
        chart=chart,
    )
