"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import random
import timeit

from qmin import _kernels_py
from qmin.core import FunctionSpec
from qmin.cover import build_chart, essential_prime_implicants, reduce_chart
from qmin.tabulate import prime_implicants

try:
    from qmin import _kernels
except ImportError:
    _kernels = None


def _first_round(n, density, seed):
    rng = random.Random(seed)
    values = sorted(
        (m for m in range(1 << n) if rng.random() < density),
        key=lambda m: (bin(m).count("1"), m),
    )
    return values, [0] * len(values)


def _residual(n, density, seed):
    rng = random.Random(seed)
    spec = FunctionSpec.from_minterms(n, [m for m in range(1 << n) if rng.random() < density])
    chart = build_chart(prime_implicants(spec), spec)
    return reduce_chart(chart, essential_prime_implicants(chart))


def _petrick_case(residual):
    sums = sorted(
        (residual.covering_rows(c) for c in range(len(residual.cols))), key=len
    )
    # expand until the partial product is large enough to exercise absorption
    product = [0]
    for k, rows in enumerate(sums[:-1]):
        product = _kernels_py.petrick_multiply(product, rows, len(residual.rows))
        if len(product) >= 1500:
            break
    return product, sums[k + 1], len(residual.rows)


def cases():
    values, masks = _first_round(12, 0.5, 1)
    yield "pair_round n=12 (~2k cubes)", "pair_round", (values, masks)
    seed = 0
    cyc = _residual(6, 0.5, seed)
    while not 18 <= len(cyc.rows) <= 24:
        seed += 1
        cyc = _residual(6, 0.5, seed)
    yield (
        f"cover_search {len(cyc.rows)} rows x {len(cyc.cols)} cols",
        "cover_search",
        (cyc.row_bits(), len(cyc.cols)),
    )
    big = _residual(7, 0.4, 11)
    yield (
        f"petrick_multiply {len(big.rows)} rows",
        "petrick_multiply",
        _petrick_case(big),
    )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled extension not built; only the Python backend is available")
    print(f"{'case':<40} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for label, name, call_args in cases():
        py = getattr(_kernels_py, name)
        t_py = min(timeit.repeat(lambda: py(*call_args), number=1, repeat=args.repeat))
        if _kernels is None:
            print(f"{label:<40} {t_py * 1e3:>10.2f} {'-':>10} {'-':>8}")
            continue
        cy = getattr(_kernels, name)
        assert cy(*call_args) == py(*call_args), name
        t_cy = min(timeit.repeat(lambda: cy(*call_args), number=1, repeat=args.repeat))
        print(f"{label:<40} {t_py * 1e3:>10.2f} {t_cy * 1e3:>10.2f} {t_py / t_cy:>7.1f}x")


if __name__ == "__main__":
    main()
