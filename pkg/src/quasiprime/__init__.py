"""Quasi-prime toolkit: digital roots, 6m-wheels, the multiplication grid,
staged primality testing, grid factorization, and a sieve oracle."""

from .numerics import (
    TripletClass,
    WheelConfig,
    admissible_moduli,
    digital_root,
    dr_add,
    dr_mul,
    fibonacci_dr_cycle,
    modulus_of,
    prime_moduli,
    triplet_class,
)
from .qgrid import (
    GridCoordinate,
    QuasiPrimeTag,
    axis_index,
    axis_value,
    contains,
    diagonal_dr,
    grid_value,
    quasiprime_tag,
    region,
)
from .pipeline import (
    DensityReport,
    FactorPair,
    FilterVerdict,
    PrimalityVerdict,
    SearchStrategy,
    Stage,
    VerdictKind,
    dr_pairs,
    factor_on_grid,
    full_factorize,
    is_prime,
    last_digit_pairs,
    prefilter,
    survivor_density,
)
from .oracle import MismatchReport, PrimeTable, sieve, trial_factor, trial_is_prime, verify_range
from .errors import (
    ConsistencyError,
    NoFactorsError,
    NotOnPrimeModuliError,
    NotQuasiPrimeError,
    ResourceLimitError,
)

__version__ = "0.1.0"
