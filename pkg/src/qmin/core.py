"""Cube representation, bit helpers, evaluation and product rendering.

A cube over ``width`` variables is a pair of bit codes.  Bit ``i`` of
``value`` is the literal for the variable of weight ``2**i``; bit ``i`` of
``mask`` marks that position as a dash.  Dashed positions are always stored
as 0 in ``value`` so that two cubes are equal iff their codes are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from qmin.errors import (
    IncompatibleCubeError,
    InvalidMintermError,
    RenderError,
    SpecError,
)

MAX_VARS = 24
DEFAULT_NAMES = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"


def popcount(code: int) -> int:
    return bin(code).count("1")


@dataclass(frozen=True)
class Cube:
    width: int
    value: int
    mask: int = 0

    def __post_init__(self) -> None:
        if not 1 <= self.width <= MAX_VARS:
            raise IncompatibleCubeError(f"cube width {self.width} outside 1..{MAX_VARS}")
        limit = 1 << self.width
        if not (0 <= self.value < limit and 0 <= self.mask < limit):
            raise IncompatibleCubeError("cube code has bits beyond its width")
        if self.value & self.mask:
            raise IncompatibleCubeError("value must be 0 at dashed positions")

    @classmethod
    def from_string(cls, text: str) -> "Cube":
        """Build a cube from an MSB-first pattern such as ``"1-01"``.

        Both ``-`` and ``x``/``X`` are accepted as the dash symbol.
        """
        value = mask = 0
        for ch in text:
            value <<= 1
            mask <<= 1
            if ch == "1":
                value |= 1
            elif ch in "-xX":
                mask |= 1
            elif ch != "0":
                raise IncompatibleCubeError(f"bad cube symbol {ch!r}")
        return cls(len(text), value, mask)

    @property
    def literal_count(self) -> int:
        return self.width - popcount(self.mask)

    @property
    def dashes(self) -> int:
        return popcount(self.mask)

    def minterms(self) -> list[int]:
        """All minterms contained in the cube, ascending."""
        bits = [1 << i for i in range(self.width) if self.mask >> i & 1]
        out = [self.value]
        for b in bits:
            out += [m | b for m in out]
        return sorted(out)

    def to_string(self, dash: str = "-") -> str:
        chars = []
        for i in reversed(range(self.width)):
            if self.mask >> i & 1:
                chars.append(dash)
            else:
                chars.append("1" if self.value >> i & 1 else "0")
        return "".join(chars)

    def __str__(self) -> str:
        return self.to_string()


def minterm_to_cube(m: int, n: int) -> Cube:
    if not 1 <= n <= MAX_VARS:
        raise InvalidMintermError(f"width {n} outside 1..{MAX_VARS}")
    if not 0 <= m < (1 << n):
        raise InvalidMintermError(f"minterm {m} out of range for {n} variables")
    return Cube(n, m, 0)


def combine(a: Cube, b: Cube) -> Cube | None:
    """Merge two cubes that differ in exactly one non-dashed position."""
    if a.width != b.width:
        raise IncompatibleCubeError(f"width mismatch: {a.width} vs {b.width}")
    if a.mask != b.mask:
        return None
    diff = a.value ^ b.value
    if diff == 0 or diff & (diff - 1):
        return None
    return Cube(a.width, a.value & ~diff, a.mask | diff)


def cube_contains(c: Cube, m: int) -> bool:
    if not 0 <= m < (1 << c.width):
        raise InvalidMintermError(f"minterm {m} out of range for width {c.width}")
    return (m & ~c.mask) == c.value


def render_product(c: Cube, names: Sequence[str]) -> str:
    """Render a cube as a product term, e.g. ``AC'D``; the full cube is ``"1"``."""
    if len(names) != c.width:
        raise RenderError(f"{len(names)} names given for a width-{c.width} cube")
    parts = []
    for pos, name in enumerate(names):
        bit = c.width - 1 - pos
        if c.mask >> bit & 1:
            continue
        parts.append(name if c.value >> bit & 1 else name + "'")
    return "".join(parts) or "1"


def evaluate_cover(cubes: Sequence[Cube], m: int) -> bool:
    if not cubes:
        return False
    width = cubes[0].width
    if any(c.width != width for c in cubes):
        raise IncompatibleCubeError("cover mixes cube widths")
    return any(cube_contains(c, m) for c in cubes)


def _strict_sorted(name: str, seq: Iterable[int], limit: int) -> tuple[int, ...]:
    out = tuple(seq)
    for i, m in enumerate(out):
        if not isinstance(m, int) or not 0 <= m < limit:
            raise SpecError(f"{name} entry {m!r} out of range [0, {limit})")
        if i and out[i - 1] >= m:
            raise SpecError(f"{name} must be strictly increasing")
    return out


@dataclass(frozen=True)
class FunctionSpec:
    """A single-output function given by its on-set and don't-care set.

    ``var_names[0]`` names the most significant variable.
    """

    num_vars: int
    on_set: tuple[int, ...]
    dc_set: tuple[int, ...] = ()
    var_names: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.num_vars
        if not isinstance(n, int) or not 1 <= n <= MAX_VARS:
            raise SpecError(f"num_vars {n!r} outside 1..{MAX_VARS}")
        limit = 1 << n
        object.__setattr__(self, "on_set", _strict_sorted("on_set", self.on_set, limit))
        object.__setattr__(self, "dc_set", _strict_sorted("dc_set", self.dc_set, limit))
        if set(self.on_set) & set(self.dc_set):
            raise SpecError("on_set and dc_set overlap")
        names = tuple(self.var_names) or tuple(DEFAULT_NAMES[:n])
        if len(names) != n or len(set(names)) != n:
            raise SpecError("var_names must be n distinct names")
        if any(len(s) != 1 for s in names):
            raise SpecError("variable names must be single characters")
        object.__setattr__(self, "var_names", names)

    @classmethod
    def from_minterms(
        cls,
        num_vars: int,
        on: Iterable[int],
        dc: Iterable[int] = (),
        var_names: Sequence[str] = (),
    ) -> "FunctionSpec":
        """Sorting, deduplicating constructor."""
        return cls(num_vars, tuple(sorted(set(on))), tuple(sorted(set(dc))), tuple(var_names))

    @property
    def care_set(self) -> tuple[int, ...]:
        return tuple(sorted(self.on_set + self.dc_set))

    @property
    def off_set(self) -> tuple[int, ...]:
        allowed = set(self.on_set) | set(self.dc_set)
        return tuple(m for m in range(1 << self.num_vars) if m not in allowed)


@dataclass(frozen=True)
class PrimeImplicant:
    cube: Cube
    covered: tuple[int, ...]

    @property
    def literal_count(self) -> int:
        return self.cube.literal_count


def pi_sort_key(cube: Cube) -> tuple[int, int, int]:
    """Most dashes first, then ascending value, then ascending mask."""
    return (-popcount(cube.mask), cube.value, cube.mask)


def make_prime(cube: Cube, spec: FunctionSpec) -> PrimeImplicant:
    allowed = set(spec.on_set) | set(spec.dc_set)
    return PrimeImplicant(cube, tuple(m for m in cube.minterms() if m in allowed))
