"""Staged primality testing and grid-based factorization.

The filter stages run in a fixed order: odd, last digit in {1,3,7,9},
digital root not in {3,6,9}, residue on a prime modulus of the 24-wheel.
Survivors go to the grid stage, where a divisor scan over the 6k±1 axis
settles primality exactly.  Factor searches prune candidates with the
last-digit and digital-root pair tables before any division.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt

from . import qgrid
from .errors import NoFactorsError, NotQuasiPrimeError
from .numerics import digital_root, modulus_of, prime_moduli
from .qgrid import MAX_VALUE, GridCoordinate, axis_index

PRIME_MODULI_24 = prime_moduli(24)


class Stage(str, Enum):
    NOT_ODD = "NotOdd"
    LAST_DIGIT = "LastDigit"
    DIGITAL_ROOT_369 = "DigitalRoot369"
    NOT_PRIME_MODULUS = "NotPrimeModulus"
    GRID_SEARCH = "GridSearch"


FILTER_STAGES = (Stage.NOT_ODD, Stage.LAST_DIGIT, Stage.DIGITAL_ROOT_369, Stage.NOT_PRIME_MODULUS)


class VerdictKind(str, Enum):
    PRIME = "prime"
    PRIME_SPECIAL_SMALL = "prime_special_small"
    COMPOSITE = "composite"
    INVALID = "invalid"


class SearchStrategy(str, Enum):
    ASCENDING_SCAN = "asc"
    BALANCED_FIRST = "balanced"


@dataclass(frozen=True, slots=True)
class FilterVerdict:
    passed: bool
    stage: Stage | None  # first failing stage when rejected


@dataclass(frozen=True, slots=True)
class PrimalityVerdict:
    n: int
    kind: VerdictKind
    witness: int | GridCoordinate | None
    deciding_stage: Stage | None
    strategy: SearchStrategy

    @property
    def is_prime(self) -> bool:
        return self.kind in (VerdictKind.PRIME, VerdictKind.PRIME_SPECIAL_SMALL)

    def to_json_dict(self) -> dict:
        if isinstance(self.witness, GridCoordinate):
            witness = list(self.witness.axis_values)
        else:
            witness = self.witness
        return {
            "n": self.n,
            "verdict": self.kind.value,
            "witness": witness,
            "stage": self.deciding_stage.value if self.deciding_stage else None,
            "strategy": self.strategy.value,
        }


@dataclass(frozen=True, slots=True)
class FactorPair:
    a: int
    b: int

    def __post_init__(self):
        if not (5 <= self.a <= self.b):
            raise ValueError(f"need 5 <= a <= b, got ({self.a}, {self.b})")
        if self.a % 6 not in (1, 5) or self.b % 6 not in (1, 5):
            raise ValueError(f"factor pair ({self.a}, {self.b}) is off the 6k±1 moduli")

    @property
    def product(self) -> int:
        return self.a * self.b


@dataclass
class DensityReport:
    limit: int
    survivors: int
    fraction: Fraction
    per_stage_rejections: dict[Stage, int]

    def to_json_dict(self) -> dict:
        return {
            "limit": self.limit,
            "survivors": self.survivors,
            "fraction": float(self.fraction),
            "per_stage_rejections": {
                s.value: self.per_stage_rejections[s] for s in FILTER_STAGES
            },
        }


def _classify_stage(n: int) -> Stage | None:
    """First failing filter stage for n >= 1, or None when all four pass."""
    if n % 2 == 0:
        return Stage.NOT_ODD
    if n % 10 not in (1, 3, 7, 9):
        return Stage.LAST_DIGIT
    if digital_root(n) in (3, 6, 9):
        return Stage.DIGITAL_ROOT_369
    if modulus_of(n, 24) not in PRIME_MODULI_24:
        return Stage.NOT_PRIME_MODULUS
    return None


def prefilter(n: int) -> FilterVerdict:
    """Run the four cheap stages in order; Pass means n survives them all."""
    if n < 2:
        raise ValueError(f"prefilter is defined for n >= 2, got {n}")
    stage = _classify_stage(n)
    return FilterVerdict(stage is None, stage)


def last_digit_pairs(d: int) -> frozenset[tuple[int, int]]:
    """Unordered last-digit pairs (x, y) from {1,3,7,9} with x*y ending in d."""
    if d not in (1, 3, 7, 9):
        raise ValueError(f"last digit of a candidate must be 1, 3, 7 or 9, got {d}")
    return frozenset(
        (x, y)
        for x in (1, 3, 7, 9)
        for y in (1, 3, 7, 9)
        if x <= y and (x * y) % 10 == d
    )


def dr_pairs(r: int) -> frozenset[tuple[int, int]]:
    """Unordered digital-root pairs (x, y) from {1,2,4,5,7,8} whose product has root r."""
    if r in (3, 6, 9):
        raise ValueError(f"no factor coprime to 3 yields a product with digital root {r}")
    if r not in (1, 2, 4, 5, 7, 8):
        raise ValueError(f"digital root must be in 1..9, got {r}")
    units = (1, 2, 4, 5, 7, 8)
    return frozenset(
        (x, y) for x in units for y in units if x <= y and digital_root(x * y) == r
    )


def _candidate_filters(n: int) -> tuple[frozenset[int] | None, frozenset[int]]:
    """Digit and digital-root sets a factor candidate of n must fall in.

    The digit set is None when n is divisible by 5; the pair table is only
    defined for products ending in 1, 3, 7 or 9.
    """
    digits = None
    if n % 10 in (1, 3, 7, 9):
        digits = frozenset(x for pair in last_digit_pairs(n % 10) for x in pair)
    roots = frozenset(x for pair in dr_pairs(digital_root(n)) for x in pair)
    return digits, roots


def _scan_ascending(n, digits, roots):
    """Smallest admissible axis divisor of n, as a pair, or None."""
    d, step = 5, 2
    while d * d <= n:
        if (
            (digits is None or d % 10 in digits)
            and 1 + (d - 1) % 9 in roots
            and n % d == 0
        ):
            return d, n // d
        d += step
        step = 6 - step
    return None


def _axis_floor(x):
    offset = (0, 0, 1, 2, 3, 0)[x % 6] if x % 6 != 0 else 1
    v = x - offset
    return v if v >= 5 else None


def _scan_balanced(n, digits, roots):
    """Divisor pair of n closest to the reflection line, or None.

    Starts from the axis values bracketing sqrt(n) and expands outward on
    both sides; the first hit on either side is the pair minimizing b - a.
    Once the lower side drops below 5 no divisor pair remains, so n is prime.
    """
    lo = _axis_floor(isqrt(n))
    hi = (lo + (2 if lo % 6 == 5 else 4)) if lo is not None else 5
    while True:
        if lo is not None:
            if (
                (digits is None or lo % 10 in digits)
                and 1 + (lo - 1) % 9 in roots
                and n % lo == 0
            ):
                return lo, n // lo
            lo = lo - (2 if lo % 6 == 1 else 4)
            if lo < 5:
                return None
        if hi * 5 <= n:
            if (
                (digits is None or hi % 10 in digits)
                and 1 + (hi - 1) % 9 in roots
                and n % hi == 0
            ):
                return n // hi, hi
            hi = hi + (2 if hi % 6 == 5 else 4)
        elif lo is None:
            return None


def _small_witness(n: int, stage: Stage) -> int | None:
    """Divisor 2 or 3 behind a filter rejection, when one is implied.

    None sends the caller to the grid: the last-digit stage also hits 5
    itself (prime) and the multiples of 5 that live on the grid.
    """
    if stage is Stage.NOT_ODD:
        return 2
    if stage is Stage.DIGITAL_ROOT_369:
        return 3
    if stage is Stage.LAST_DIGIT:
        return 3 if n % 3 == 0 else None
    # NOT_PRIME_MODULUS never fires after the earlier stages on the 24-wheel,
    # since odd and root-of-3-free already force a 6k±1 residue.
    return 2 if n % 2 == 0 else 3


def is_prime(n: int, strategy: SearchStrategy = SearchStrategy.ASCENDING_SCAN) -> PrimalityVerdict:
    """Exact staged primality verdict with a checkable witness for composites."""
    if n > MAX_VALUE:
        raise ValueError(f"{n} exceeds the 64-bit input cap")
    if n < 2:
        return PrimalityVerdict(n, VerdictKind.INVALID, None, None, strategy)
    if n in (2, 3):
        return PrimalityVerdict(n, VerdictKind.PRIME_SPECIAL_SMALL, None, None, strategy)
    stage = _classify_stage(n)
    if stage is not None:
        witness = _small_witness(n, stage)
        if witness is not None:
            return PrimalityVerdict(n, VerdictKind.COMPOSITE, witness, stage, strategy)
    if strategy is SearchStrategy.BALANCED_FIRST:
        pair = _scan_balanced(n, *_candidate_filters(n))
        coord = None
        if pair is not None:
            i, j = axis_index(pair[0]), axis_index(pair[1])
            coord = GridCoordinate(i, j, n)
    else:
        coord = qgrid.contains(n, skip_fives=n % 5 != 0)
    if coord is None:
        return PrimalityVerdict(n, VerdictKind.PRIME, None, Stage.GRID_SEARCH, strategy)
    deciding = stage if stage is not None else Stage.GRID_SEARCH
    return PrimalityVerdict(n, VerdictKind.COMPOSITE, coord, deciding, strategy)


def factor_on_grid(n: int, strategy: SearchStrategy = SearchStrategy.ASCENDING_SCAN) -> FactorPair:
    """Split a composite coprime to 6 into an axis pair (a, b), a*b = n.

    AscendingScan returns the pair with the smallest a (the least prime
    factor); BalancedFirst returns the pair minimizing b - a.
    """
    if n > MAX_VALUE:
        raise ValueError(f"{n} exceeds the 64-bit input cap")
    if n < 2:
        raise ValueError(f"factorization needs n >= 2, got {n}")
    if n % 2 == 0 or n % 3 == 0:
        raise NotQuasiPrimeError(f"{n} has factor 2 or 3, off the quasi-prime domain")
    filters = _candidate_filters(n)
    if strategy is SearchStrategy.BALANCED_FIRST:
        pair = _scan_balanced(n, *filters)
    else:
        pair = _scan_ascending(n, *filters)
    if pair is None:
        raise NoFactorsError(f"{n} is prime; the grid holds no factor pair for it")
    return FactorPair(*pair)


def full_factorize(n: int) -> list[int]:
    """Sorted prime multiset of n.

    Factors 2 and 3 sit outside the quasi-prime domain; they are stripped
    first, then the grid splits off least prime factors until a prime
    cofactor remains.
    """
    if n > MAX_VALUE:
        raise ValueError(f"{n} exceeds the 64-bit input cap")
    if n < 2:
        raise ValueError(f"factorization needs n >= 2, got {n}")
    factors: list[int] = []
    for p in (2, 3):
        while n % p == 0:
            factors.append(p)
            n //= p
    while n > 1:
        coord = qgrid.contains(n, skip_fives=n % 5 != 0)
        if coord is None:
            factors.append(n)
            break
        least = qgrid.axis_value(coord.i)
        factors.append(least)
        n //= least
    return sorted(factors)


def survivor_density(limit: int) -> DensityReport:
    """Prefilter survival statistics over [1, limit].

    Every n is either a survivor or rejected at exactly one stage, so the
    counts partition the range.
    """
    if limit < 100:
        raise ValueError(f"density needs limit >= 100, got {limit}")
    rejections = {stage: 0 for stage in FILTER_STAGES}
    survivors = 0
    classify = _classify_stage
    for n in range(1, limit + 1):
        stage = classify(n)
        if stage is None:
            survivors += 1
        else:
            rejections[stage] += 1
    return DensityReport(limit, survivors, Fraction(survivors, limit), rejections)
