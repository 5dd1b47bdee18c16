"""The quasi-prime multiplication grid.

Both axes are the ascending integers >= 5 congruent to ±1 mod 6
(5, 7, 11, 13, 17, 19, 23, 25, 29, 31, ...).  Cell (i, j) holds the
product of the i-th and j-th axis values.  The cells are exactly the
composites coprime to 6, so membership decides primality for any
number on the prime moduli.

The grid is never materialized beyond bounded display regions;
membership works by a divisor scan over axis values up to sqrt(n).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotOnPrimeModuliError, ResourceLimitError
from .numerics import digital_root

MAX_VALUE = 2**63 - 1
REGION_CELL_CAP = 10**4


def axis_value(k: int) -> int:
    """k-th axis value: a(2t-1) = 6t-1, a(2t) = 6t+1, so a(1) = 5, a(2) = 7, ..."""
    if k < 1:
        raise ValueError(f"axis indices start at 1, got {k}")
    half, rem = divmod(k, 2)
    v = 6 * (half + 1) - 1 if rem else 6 * half + 1
    if v > MAX_VALUE:
        raise ResourceLimitError(f"axis value at index {k} exceeds the 64-bit cap")
    return v


def axis_index(v: int) -> int | None:
    """Inverse of axis_value; None when v is not on the axis."""
    if v < 5:
        return None
    r = v % 6
    if r == 5:
        return 2 * ((v + 1) // 6) - 1
    if r == 1:
        return 2 * ((v - 1) // 6)
    return None


@dataclass(frozen=True)
class GridCoordinate:
    """Cell (i, j), i <= j, holding the product of axis values i and j."""

    i: int
    j: int
    value: int

    def __post_init__(self):
        if not (1 <= self.i <= self.j):
            raise ValueError(f"need 1 <= i <= j, got ({self.i}, {self.j})")
        if self.value != axis_value(self.i) * axis_value(self.j):
            raise ValueError(f"value {self.value} does not match cell ({self.i}, {self.j})")

    @property
    def axis_values(self) -> tuple[int, int]:
        return axis_value(self.i), axis_value(self.j)


class QuasiPrimeTag(Enum):
    PRIME_SQUARE = "prime-square"
    QUASI_PRIME = "quasi-prime"


def grid_value(i: int, j: int) -> int:
    """Product at cell (i, j); symmetric in its arguments."""
    v = axis_value(i) * axis_value(j)
    if v > MAX_VALUE:
        raise ResourceLimitError(f"cell ({i}, {j}) exceeds the 64-bit cap")
    return v


def contains(n: int, *, skip_fives: bool = False) -> GridCoordinate | None:
    """Locate n in the grid; None means n is prime.

    Returns the coordinate with the smallest axis divisor, which for a
    composite n coprime to 6 is its smallest prime factor.  ``skip_fives``
    prunes candidates divisible by 5 (sound whenever 5 does not divide n).
    """
    if n > MAX_VALUE:
        raise ResourceLimitError(f"{n} exceeds the 64-bit cap")
    if n < 5 or n % 6 not in (1, 5):
        raise NotOnPrimeModuliError(f"{n} is not on the 6k±1 moduli")
    d = 5
    step = 2
    while d * d <= n:
        if not (skip_fives and d % 5 == 0) and n % d == 0:
            i = axis_index(d)
            j = axis_index(n // d)
            assert i is not None and j is not None
            return GridCoordinate(i, j, n)
        d += step
        step = 6 - step
    return None


def quasiprime_tag(c: GridCoordinate) -> QuasiPrimeTag:
    """PrimeSquare for p*p with p prime on the axis, QuasiPrime otherwise."""
    if c.i == c.j and contains(axis_value(c.i)) is None:
        return QuasiPrimeTag.PRIME_SQUARE
    return QuasiPrimeTag.QUASI_PRIME


def diagonal_dr(count: int) -> list[int]:
    """Digital roots of the reflection-line squares, cell (k, k) for k = 1..count."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    return [digital_root(grid_value(k, k)) for k in range(1, count + 1)]


def region(i_lo: int, i_hi: int, j_lo: int, j_hi: int) -> list[list[int]]:
    """Rectangular table of grid values, rows i_lo..i_hi by columns j_lo..j_hi."""
    if not (1 <= i_lo <= i_hi and 1 <= j_lo <= j_hi):
        raise ValueError("region bounds must satisfy 1 <= lo <= hi")
    cells = (i_hi - i_lo + 1) * (j_hi - j_lo + 1)
    if cells > REGION_CELL_CAP:
        raise ResourceLimitError(f"region of {cells} cells exceeds cap {REGION_CELL_CAP}")
    rows = [axis_value(i) for i in range(i_lo, i_hi + 1)]
    cols = [axis_value(j) for j in range(j_lo, j_hi + 1)]
    return [[a * b for b in cols] for a in rows]
