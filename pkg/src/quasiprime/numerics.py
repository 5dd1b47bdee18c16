"""Digital-root algebra and 6m-sided wheel residue geometry.

Digital roots are plain ints in 1..9; wheel moduli are ints in 1..sides.
All functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd


class TripletClass(Enum):
    """The three digital-root classes: [3,6,9], [1,4,7], [2,5,8]."""

    T369 = (3, 6, 9)
    T147 = (1, 4, 7)
    T258 = (2, 5, 8)


def digital_root(n: int) -> int:
    """Iterated digit sum of a positive integer, via the mod-9 closed form.

    Equals 1 + (n-1) mod 9, which is what repeatedly summing decimal
    digits converges to.
    """
    if n < 1:
        raise ValueError(f"digital root is defined for positive integers, got {n}")
    return 1 + (n - 1) % 9


def triplet_class(n: int) -> TripletClass:
    """Triplet class of digital_root(n)."""
    r = digital_root(n)
    for cls in TripletClass:
        if r in cls.value:
            return cls
    raise AssertionError("unreachable")


def dr_add(a: int, b: int) -> int:
    """Digital root of a+b, computed from the roots of a and b."""
    return digital_root(digital_root(a) + digital_root(b))


def dr_mul(a: int, b: int) -> int:
    """Digital root of a*b, computed from the roots of a and b."""
    return digital_root(digital_root(a) * digital_root(b))


def fibonacci_dr_cycle() -> list[int]:
    """Digital roots of the Fibonacci numbers, one full period.

    Runs the recurrence on digital roots only (never on big integers)
    and stops when the state pair returns to (1, 1).  The period is 24.
    """
    cycle: list[int] = []
    a, b = 1, 1
    while True:
        cycle.append(a)
        a, b = b, dr_add(a, b)
        if (a, b) == (1, 1):
            return cycle


def _check_sides(sides: int) -> None:
    if sides < 6 or sides % 6 != 0:
        raise ValueError(f"wheel sides must be a positive multiple of 6, got {sides}")


def modulus_of(n: int, sides: int) -> int:
    """Spoke of n on an s-sided wheel, in 1..sides.

    Positions run 1..sides, so n = sides sits on spoke ``sides`` and
    n = sides+1 wraps back to spoke 1.
    """
    if n < 1:
        raise ValueError(f"wheel positions start at 1, got {n}")
    _check_sides(sides)
    return (n - 1) % sides + 1


def prime_moduli(sides: int) -> frozenset[int]:
    """Spokes of the form 6k±1: the only spokes that can hold primes > 3."""
    _check_sides(sides)
    return frozenset(r for r in range(1, sides + 1) if r % 6 in (1, 5))


def admissible_moduli(sides: int) -> frozenset[int]:
    """Spokes coprime to the wheel size (equal to prime_moduli when sides = 24).

    Strictly smaller for e.g. sides = 30, where spokes 5 and 25 are 6k±1
    but share a factor with the wheel and hold at most one prime.
    """
    _check_sides(sides)
    return frozenset(r for r in range(1, sides + 1) if gcd(r, sides) == 1)


@dataclass(frozen=True)
class WheelConfig:
    """An s-sided wheel (s a multiple of 6) with ``rings`` concentric rows."""

    sides: int
    rings: int

    def __post_init__(self):
        _check_sides(self.sides)
        if self.rings < 1:
            raise ValueError(f"rings must be positive, got {self.rings}")

    @property
    def prime_moduli(self) -> frozenset[int]:
        return prime_moduli(self.sides)

    @property
    def admissible_moduli(self) -> frozenset[int]:
        return admissible_moduli(self.sides)

    @property
    def limit(self) -> int:
        """Largest number placed on the wheel."""
        return self.sides * self.rings

    def modulus_of(self, n: int) -> int:
        return modulus_of(n, self.sides)
