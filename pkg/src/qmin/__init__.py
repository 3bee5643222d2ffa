"""Exact two-level Boolean minimization by Quine-McCluskey tabulation."""

from qmin._accel import BACKEND
from qmin.core import (
    Cube,
    FunctionSpec,
    PrimeImplicant,
    combine,
    cube_contains,
    evaluate_cover,
    minterm_to_cube,
    popcount,
    render_product,
)
from qmin.cover import (
    Chart,
    CoverSolution,
    MinimizationResult,
    MinimizeOptions,
    build_chart,
    essential_prime_implicants,
    exhaustive_min_cover,
    minimize,
    petrick_minimal_covers,
    reduce_chart,
)
from qmin.errors import QMError
from qmin.tabulate import (
    prime_implicants,
    prime_implicants_binary,
    prime_implicants_decimal,
    tabulation_trace,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Chart",
    "CoverSolution",
    "Cube",
    "FunctionSpec",
    "MinimizationResult",
    "MinimizeOptions",
    "PrimeImplicant",
    "QMError",
    "build_chart",
    "combine",
    "cube_contains",
    "essential_prime_implicants",
    "evaluate_cover",
    "exhaustive_min_cover",
    "minimize",
    "minterm_to_cube",
    "petrick_minimal_covers",
    "popcount",
    "prime_implicants",
    "prime_implicants_binary",
    "prime_implicants_decimal",
    "reduce_chart",
    "render_product",
    "tabulation_trace",
]
