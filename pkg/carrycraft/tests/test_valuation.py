import math
import pytest

import carrycraft.core.valuation as va
import carrycraft.core.error_handling as eh

from carrycraft.core.oracle import binom_central_sequence, exact_valuation
from carrycraft.core.digitcore import GoodSpec, is_good
from carrycraft.core.primes import PrimeSet
from carrycraft.tests.data_witnesses import WITNESSES, WITNESS_PRIMES


def _factor_count(k, p):

    t = 0
    while k and k % p == 0:
        k //= p
        t += 1
    return t


def test_nu_factorial_examples():

    assert va.nu_factorial(10, 3) == 4
    assert va.nu_factorial(0, 5) == 0
    assert va.nu_factorial(25, 5) == 6


def test_nu_factorial_matches_factor_counting():

    for p in (3, 5, 7, 11, 13):
        total = 0
        for n in range(0, 2001):
            total += _factor_count(n, p)
            assert va.nu_factorial(n, p) == total


def test_nu_factorial_invalid_prime():

    with pytest.raises(eh.InvalidPrimeError):
        va.nu_factorial(10, 4)


def test_nu_binom_central_matches_oracle():

    for n, binom in binom_central_sequence(2000):
        for p in (3, 5, 7, 11, 13):
            assert va.nu_binom_central(n, p) == exact_valuation(binom, p)


def test_count_carries_prime_two():

    # nu_2(C(2N, N)) is the number of ones of N in binary
    for n in range(1, 300):
        assert va.count_carries(n, 2) == bin(n).count("1")


def test_count_carries_rejects_composite():

    with pytest.raises(eh.InvalidPrimeError):
        va.count_carries(10, 9)


@pytest.mark.parametrize("n", WITNESSES)
def test_witnesses_have_no_carries(n):

    for p in WITNESS_PRIMES:
        assert va.nu_binom_central(n, p) == 0


def test_pnorm_is_unit():

    assert va.pnorm_is_unit(10, 3)
    assert not va.pnorm_is_unit(9, 3)


def test_pnorm_of_zero():

    with pytest.raises(eh.UndefinedNormError):
        va.pnorm_is_unit(0, 3)


def test_coprime_to_primeset():

    assert va.coprime_to_primeset(757, PrimeSet.of([3, 5, 7]))
    assert va.coprime_to_primeset(10, [3, 5, 7])
    assert not va.coprime_to_primeset(2, [3])


def test_coprime_matches_gcd():

    for n, binom in binom_central_sequence(1500):
        expected = math.gcd(int(binom), 105) == 1
        assert va.coprime_to_primeset(n, [3, 5, 7]) == expected


def test_valuation_report():

    rep = va.valuation_report(756, 7)

    assert rep.prime == 7
    assert rep.s_p_n == 6
    assert rep.nu_factorial == (756 - 6) // 6
    assert rep.nu_binom == 0
    assert rep.carries == 0
    assert rep.as_dict()["nu_factorial"] == 125


def test_valuation_report_identities():

    for p in (3, 5, 7):
        for n in range(0, 500):
            rep = va.valuation_report(n, p)
            assert rep.nu_binom == va.nu_factorial(2 * n, p) - \
                2 * rep.nu_factorial


def test_coprime_matches_digit_criterion():

    for p in (3, 5, 7, 11, 13):
        spec = GoodSpec(p, (p - 1) // 2)
        for n in range(0, 10 ** 5 + 1):
            assert va.coprime_to_primeset(n, [p]) == is_good(n, spec)
