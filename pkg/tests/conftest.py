import pytest

from quasiprime import oracle


@pytest.fixture(scope="session")
def table_1e5():
    return oracle.sieve(10**5)


@pytest.fixture(scope="session")
def table_1e6():
    return oracle.sieve(10**6)


def iterated_digit_sum(n: int) -> int:
    """Independent digital-root oracle: literally sum decimal digits to a fixpoint."""
    while n >= 10:
        n = sum(int(c) for c in str(n))
    return n
