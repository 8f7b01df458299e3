import pytest

import carrycraft.core.primes as pr
import carrycraft.core.error_handling as eh


def test_is_prime_small():

    primes = [n for n in range(100) if pr.is_prime(n)]

    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                      47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def test_is_prime_large():

    assert pr.is_prime(2 ** 61 - 1)
    assert not pr.is_prime((2 ** 31 - 1) * (2 ** 61 - 1))
    # Carmichael number
    assert not pr.is_prime(3215031751)


def test_check_odd_prime():

    pr.check_odd_prime(3)

    for bad in (2, 1, 9, 0, -3):
        with pytest.raises(eh.InvalidPrimeError):
            pr.check_odd_prime(bad)


def test_factorize():

    assert pr.factorize(1) == []
    assert pr.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert pr.factorize(65537 * 65539) == [(65537, 1), (65539, 1)]


def test_factorize_invalid():

    with pytest.raises(eh.DomainError):
        pr.factorize(0)


def test_totient():

    assert pr.totient(1) == 1
    assert pr.totient(7) == 6
    assert pr.totient(36) == 12


def test_primeset_defaults():

    ps = pr.PrimeSet.of([7, 3, 5])

    assert ps.primes == (3, 5, 7)
    assert ps.thresholds == (1, 2, 3)
    assert ps.uses_criterion
    assert ps.product == 105
    assert len(ps) == 3


def test_primeset_sorts_thresholds_with_primes():

    ps = pr.PrimeSet.of([7, 3], [4, 2])

    assert ps.pairs() == [(3, 2), (7, 4)]
    assert not ps.uses_criterion


def test_primeset_degenerate():

    ps = pr.PrimeSet.of([3, 5], [2, 2])

    assert ps.degenerate == {3: True, 5: False}


def test_primeset_rejects_unordered():

    with pytest.raises(eh.InvalidPrimeError):
        pr.PrimeSet((5, 3))


def test_primeset_rejects_duplicates():

    with pytest.raises(eh.InvalidPrimeError):
        pr.PrimeSet.of([3, 3])


def test_primeset_rejects_even_prime():

    with pytest.raises(eh.InvalidPrimeError):
        pr.PrimeSet.of([2, 3])


def test_primeset_threshold_count():

    with pytest.raises(eh.InvalidBoundError):
        pr.PrimeSet.of([3, 5], [1])


def test_primeset_negative_threshold():

    with pytest.raises(eh.InvalidBoundError):
        pr.PrimeSet((3, 5), (1, -1))
