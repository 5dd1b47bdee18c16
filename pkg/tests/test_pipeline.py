from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quasiprime import oracle
from quasiprime.errors import NoFactorsError, NotQuasiPrimeError
from quasiprime.numerics import digital_root
from quasiprime.pipeline import (
    FILTER_STAGES,
    FactorPair,
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
from quasiprime.qgrid import GridCoordinate

ASC = SearchStrategy.ASCENDING_SCAN
BAL = SearchStrategy.BALANCED_FIRST


class TestPrefilter:
    def test_examples(self):
        assert prefilter(35).stage is Stage.LAST_DIGIT
        assert prefilter(21).stage is Stage.DIGITAL_ROOT_369
        assert prefilter(91).passed

    def test_stage_order_is_fixed(self):
        # 15 fails both last-digit and digital-root; last digit is checked first
        assert prefilter(15).stage is Stage.LAST_DIGIT
        # 6 fails oddness and digital-root; oddness is checked first
        assert prefilter(6).stage is Stage.NOT_ODD
        assert prefilter(33).stage is Stage.DIGITAL_ROOT_369

    def test_rejects_below_two(self):
        with pytest.raises(ValueError):
            prefilter(1)
        with pytest.raises(ValueError):
            prefilter(0)

    @given(st.integers(min_value=2, max_value=10**9))
    def test_pass_means_coprime_to_thirty(self, n):
        v = prefilter(n)
        if v.passed:
            assert gcd(n, 6) == 1 and n % 5 != 0
        else:
            assert gcd(n, 30) > 1

    def test_modulus_stage_is_subsumed(self):
        # oddness plus the root test already force a 6k±1 residue mod 24
        for n in range(2, 10**4):
            assert prefilter(n).stage is not Stage.NOT_PRIME_MODULUS

    def test_root_rejections_are_multiples_of_three(self):
        for n in range(2, 10**4):
            if prefilter(n).stage is Stage.DIGITAL_ROOT_369:
                assert n % 3 == 0


class TestIsPrime:
    def test_grid_witness(self):
        v = is_prime(91)
        assert v.kind is VerdictKind.COMPOSITE
        assert v.witness.axis_values == (7, 13)
        assert v.deciding_stage is Stage.GRID_SEARCH

    def test_prime_square_witness_comes_from_the_grid(self):
        v = is_prime(25)
        assert v.kind is VerdictKind.COMPOSITE
        assert isinstance(v.witness, GridCoordinate)
        assert (v.witness.i, v.witness.j) == (1, 1)
        assert v.deciding_stage is Stage.LAST_DIGIT

    def test_prime(self):
        assert is_prime(97).kind is VerdictKind.PRIME

    def test_two_and_three_are_special(self):
        assert is_prime(2).kind is VerdictKind.PRIME_SPECIAL_SMALL
        assert is_prime(3).kind is VerdictKind.PRIME_SPECIAL_SMALL

    def test_five_is_prime_despite_its_last_digit(self):
        v = is_prime(5)
        assert v.kind is VerdictKind.PRIME
        assert v.deciding_stage is Stage.GRID_SEARCH

    def test_below_two_is_invalid(self):
        assert is_prime(1).kind is VerdictKind.INVALID
        assert is_prime(0).kind is VerdictKind.INVALID

    def test_small_factor_witnesses(self):
        assert is_prime(4).witness == 2
        assert is_prime(9).witness == 3
        assert is_prime(15).witness == 3
        assert is_prime(35).witness.axis_values == (5, 7)

    def test_witness_divides_n(self):
        for n in range(2, 3000):
            v = is_prime(n)
            if v.kind is VerdictKind.COMPOSITE:
                if isinstance(v.witness, GridCoordinate):
                    a, b = v.witness.axis_values
                    assert a * b == n
                else:
                    assert n % v.witness == 0 and 1 < v.witness < n

    @pytest.mark.parametrize("strategy", [ASC, BAL])
    def test_matches_sieve(self, strategy, table_1e5):
        for n in range(2, 20001):
            assert is_prime(n, strategy).is_prime == table_1e5.is_prime(n), n

    def test_rejects_beyond_cap(self):
        with pytest.raises(ValueError):
            is_prime(2**63)

    def test_json_shape(self):
        d = is_prime(91).to_json_dict()
        assert list(d) == ["n", "verdict", "witness", "stage", "strategy"]
        assert d == {
            "n": 91,
            "verdict": "composite",
            "witness": [7, 13],
            "stage": "GridSearch",
            "strategy": "asc",
        }
        assert is_prime(97).to_json_dict()["witness"] is None
        assert is_prime(6).to_json_dict()["witness"] == 2
        assert is_prime(1).to_json_dict()["verdict"] == "invalid"


def brute_digit_pairs(d):
    return {
        tuple(sorted((x, y)))
        for x in (1, 3, 7, 9)
        for y in (1, 3, 7, 9)
        if (x * y) % 10 == d
    }


def brute_root_pairs(r):
    units = (1, 2, 4, 5, 7, 8)
    return {
        tuple(sorted((x, y)))
        for x in units
        for y in units
        if 1 + (x * y - 1) % 9 == r
    }


class TestPairTables:
    def test_last_digit_one_includes_nine_nine(self):
        assert last_digit_pairs(1) == {(1, 1), (3, 7), (9, 9)}

    def test_last_digit_three(self):
        assert last_digit_pairs(3) == {(1, 3), (7, 9)}

    def test_last_digit_nine(self):
        assert last_digit_pairs(9) == {(1, 9), (3, 3), (7, 7)}

    @pytest.mark.parametrize("d", [1, 3, 7, 9])
    def test_last_digit_against_enumeration(self, d):
        assert last_digit_pairs(d) == brute_digit_pairs(d)

    @pytest.mark.parametrize("bad", [0, 2, 4, 5, 6, 8])
    def test_last_digit_domain(self, bad):
        with pytest.raises(ValueError):
            last_digit_pairs(bad)

    def test_root_pairs_examples(self):
        assert dr_pairs(1) == {(1, 1), (2, 5), (4, 7), (8, 8)}
        assert dr_pairs(4) == {(1, 4), (2, 2), (5, 8), (7, 7)}
        assert dr_pairs(7) == {(1, 7), (4, 4), (2, 8), (5, 5)}

    @pytest.mark.parametrize("r", [1, 2, 4, 5, 7, 8])
    def test_root_pairs_against_enumeration(self, r):
        assert dr_pairs(r) == brute_root_pairs(r)

    @pytest.mark.parametrize("bad", [3, 6, 9, 0, 10])
    def test_root_pairs_domain(self, bad):
        with pytest.raises(ValueError):
            dr_pairs(bad)


def divisor_pairs(n):
    """All (a, b), a <= b, a*b = n with both sides on the 6k±1 axis."""
    pairs = []
    d = 5
    while d * d <= n:
        if n % d == 0:
            pairs.append((d, n // d))
        d += 2 if d % 6 == 5 else 4
    return pairs


class TestFactorOnGrid:
    def test_semiprime(self):
        assert factor_on_grid(143) == FactorPair(11, 13)

    def test_multiple_of_five(self):
        assert factor_on_grid(55) == FactorPair(5, 11)

    def test_prime_power_by_strategy(self):
        assert factor_on_grid(625, ASC) == FactorPair(5, 125)
        assert factor_on_grid(625, BAL) == FactorPair(25, 25)

    def test_strategies_differ_off_the_diagonal(self):
        assert factor_on_grid(175, ASC) == FactorPair(5, 35)
        assert factor_on_grid(175, BAL) == FactorPair(7, 25)

    def test_prime_has_no_pair(self):
        with pytest.raises(NoFactorsError):
            factor_on_grid(97)
        with pytest.raises(NoFactorsError):
            factor_on_grid(5)

    @pytest.mark.parametrize("bad", [15, 14, 27, 33, 2000])
    def test_rejects_numbers_with_factor_2_or_3(self, bad):
        with pytest.raises(NotQuasiPrimeError):
            factor_on_grid(bad)

    def test_rejects_below_two_and_beyond_cap(self):
        with pytest.raises(ValueError):
            factor_on_grid(1)
        with pytest.raises(ValueError):
            factor_on_grid(2**63)

    def test_pair_validation(self):
        with pytest.raises(ValueError):
            FactorPair(7, 5)
        with pytest.raises(ValueError):
            FactorPair(5, 9)

    def test_ascending_finds_least_prime_factor(self):
        for n in range(25, 20000):
            if gcd(n, 6) != 1:
                continue
            pairs = divisor_pairs(n)
            if not pairs:
                continue
            got = factor_on_grid(n, ASC)
            assert got.a == min(oracle.trial_factor(n))
            assert got.a * got.b == n

    def test_balanced_minimizes_gap(self):
        for n in range(25, 20000):
            if gcd(n, 6) != 1:
                continue
            pairs = divisor_pairs(n)
            if not pairs:
                continue
            got = factor_on_grid(n, BAL)
            assert got.a * got.b == n
            best = min(b - a for a, b in pairs)
            assert got.b - got.a == best

    @given(st.integers(min_value=2, max_value=10**4), st.integers(min_value=2, max_value=10**4))
    @settings(max_examples=200)
    def test_strategies_agree_on_semiprimes(self, x, y):
        primes = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 997, 1009]
        p, q = primes[x % len(primes)], primes[y % len(primes)]
        n = p * q
        expected = FactorPair(min(p, q), max(p, q))
        assert factor_on_grid(n, ASC) == expected
        assert factor_on_grid(n, BAL) == expected


class TestFullFactorize:
    def test_mixed_composite(self):
        assert full_factorize(360) == [2, 2, 2, 3, 3, 5]

    def test_quasi_prime(self):
        assert full_factorize(245) == [5, 7, 7]

    def test_semiprime(self):
        assert full_factorize(2491) == [47, 53]

    def test_prime_input(self):
        assert full_factorize(9973) == [9973]

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            full_factorize(1)
        with pytest.raises(ValueError):
            full_factorize(2**63)

    @given(st.integers(min_value=2, max_value=10**6))
    @settings(max_examples=300)
    def test_matches_trial_division(self, n):
        assert full_factorize(n) == oracle.trial_factor(n)


class TestSurvivorDensity:
    def test_counts_coprimes_to_thirty(self):
        report = survivor_density(100)
        expected = sum(1 for n in range(1, 101) if gcd(n, 30) == 1)
        assert report.survivors == expected
        assert report.fraction == Fraction(expected, 100)

    def test_partition(self):
        report = survivor_density(4321)
        assert report.survivors + sum(report.per_stage_rejections.values()) == 4321

    def test_not_odd_counts_evens(self):
        report = survivor_density(1001)
        assert report.per_stage_rejections[Stage.NOT_ODD] == 500

    def test_modulus_stage_never_fires(self):
        report = survivor_density(10**4)
        assert report.per_stage_rejections[Stage.NOT_PRIME_MODULUS] == 0

    def test_fraction_approaches_4_15(self):
        report = survivor_density(10**4)
        assert abs(float(report.fraction) - 4 / 15) < 1e-3

    def test_rejects_small_limits(self):
        with pytest.raises(ValueError):
            survivor_density(99)

    def test_json_shape(self):
        d = survivor_density(100).to_json_dict()
        assert set(d) == {"limit", "survivors", "fraction", "per_stage_rejections"}
        assert set(d["per_stage_rejections"]) == {s.value for s in FILTER_STAGES}


class TestPruningSoundness:
    def test_true_pairs_satisfy_both_tables(self):
        for n in range(25, 10**4):
            if gcd(n, 6) != 1 or not divisor_pairs(n):
                continue
            pair = factor_on_grid(n, ASC)
            if n % 5 != 0:
                digits = tuple(sorted((pair.a % 10, pair.b % 10)))
                assert digits in last_digit_pairs(n % 10)
            roots = tuple(sorted((digital_root(pair.a), digital_root(pair.b))))
            assert roots in dr_pairs(digital_root(n))
