import math
import pytest

import carrycraft.core.oracle as oracle
import carrycraft.core.error_handling as eh

from carrycraft.core.primes import PrimeSet
from carrycraft.tests.data_witnesses import CENTRAL_BINOMIALS, CATALANS, \
    WITNESSES


def test_exact_binom_central():

    for n, value in enumerate(CENTRAL_BINOMIALS):
        assert oracle.exact_binom_central(n) == value

    assert oracle.exact_binom_central(100) == math.comb(200, 100)


def test_exact_catalan():

    for n, value in enumerate(CATALANS):
        assert oracle.exact_catalan(n) == value


def test_sequences():

    assert [int(v) for _, v in oracle.binom_central_sequence(10)] == \
        CENTRAL_BINOMIALS
    assert [int(v) for _, v in oracle.catalan_sequence(10)] == CATALANS
    assert [n for n, _ in oracle.catalan_sequence(3)] == [0, 1, 2, 3]


def test_guard():

    with pytest.raises(eh.OracleGuardError):
        oracle.exact_binom_central(oracle.ORACLE_GUARD + 1)

    with pytest.raises(eh.OracleGuardError):
        oracle.exact_binom_central(-1)


def test_exact_valuation():

    assert oracle.exact_valuation(70, 7) == 1
    assert oracle.exact_valuation(3 ** 5 * 2, 3) == 5
    assert oracle.exact_valuation(1, 5) == 0


def test_exact_valuation_zero():

    with pytest.raises(eh.DomainError):
        oracle.exact_valuation(0, 3)


@pytest.mark.parametrize("n", WITNESSES)
def test_gcd_of_witnesses(n):

    assert oracle.gcd_with_product(n, (3, 5, 7)) == 1


def test_big_report():

    rep = oracle.big_report(4, (3, 5, 7))

    assert rep.binom == 70
    assert rep.catalan == 14
    assert rep.gcd == 35
    assert rep.valuations == {3: 0, 5: 1, 7: 1}
    assert rep.as_dict()["binom_digits"] == 2


def test_digits_independent():

    assert oracle.digits_independent(756, 7) == [0, 3, 1, 2]
    assert oracle.digits_independent(0, 3) == []


def test_exact_log_binom():

    assert oracle.exact_log_binom(10) == pytest.approx(math.log(184756))


def test_cross_check_agrees():

    assert oracle.cross_check(1, 3000, PrimeSet.of([3, 5, 7])) == []
    assert oracle.cross_check(0, 500, PrimeSet.of([3, 11])) == []


def test_binom_central_matches_factorial_definition():

    for n in range(0, 51):
        expected = math.factorial(2 * n) // math.factorial(n) ** 2
        assert oracle.exact_binom_central(n) == expected
        assert oracle.exact_catalan(n) == expected // (n + 1)
