"""Exception types shared across the package."""


class NotOnPrimeModuliError(ValueError):
    """Input is divisible by 2 or 3, so it never appears on the 6k±1 moduli."""


class NoFactorsError(ValueError):
    """Grid factorization was asked to split a prime."""


class NotQuasiPrimeError(ValueError):
    """Grid factorization was asked to split a number with factor 2 or 3."""


class ResourceLimitError(ValueError):
    """A size cap (sieve limit, region extent, render limit) was exceeded."""


class ConsistencyError(RuntimeError):
    """The staged pipeline and the sieve oracle disagreed; rendering aborts."""
