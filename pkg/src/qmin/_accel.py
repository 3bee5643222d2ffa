"""Pick the compiled kernels when the extension is built, else pure Python."""

from qmin import _kernels_py

try:
    from qmin import _kernels as kernels
    BACKEND = "cython"
except ImportError:  # extension not built
    kernels = _kernels_py
    BACKEND = "python"

pair_round = kernels.pair_round
cover_search = kernels.cover_search
petrick_multiply = kernels.petrick_multiply

__all__ = ["BACKEND", "pair_round", "cover_search", "petrick_multiply"]
