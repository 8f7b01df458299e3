import pytest

import carrycraft.core.digitcore as dc
import carrycraft.core.error_handling as eh

from carrycraft.core.primes import PrimeSet
from carrycraft.tests.data_witnesses import EXPANSIONS


@pytest.mark.parametrize("key", list(EXPANSIONS))
def test_expand_witnesses(key):

    n, base = key
    assert list(dc.expand(n, base).digits) == EXPANSIONS[key]


def test_expand_zero():

    res = dc.expand(0, 5)

    assert res.digits == ()
    assert res.value == 0
    assert str(res) == "0"


def test_expand_reconstructs():

    for base in (2, 3, 5, 7, 11, 13):
        for n in range(0, 3000):
            assert dc.expand(n, base).value == n


def test_expand_reconstructs_up_to_a_million():

    for base in (3, 7):
        for n in range(0, 10 ** 6 + 1):
            assert dc.expand(n, base).value == n


def test_expand_msd_first_display():

    assert str(dc.expand(756, 7)) == "2 1 3 0"
    assert dc.expand(756, 7).msd_first() == (2, 1, 3, 0)


def test_expand_invalid_base():

    with pytest.raises(eh.InvalidBaseError):
        dc.expand(10, 1)


def test_expand_base_too_large():

    with pytest.raises(eh.InvalidBaseError):
        dc.expand(10, 2 ** 31 + 1)


def test_expand_negative():

    with pytest.raises(eh.DomainError):
        dc.expand(-1, 3)


def test_digit_expansion_rejects_leading_zero():

    with pytest.raises(eh.InvalidBaseError):
        dc.DigitExpansion(5, (1, 0))


def test_digit_sum():

    assert dc.digit_sum(10, 3) == 2
    assert dc.digit_sum(0, 7) == 0
    assert dc.digit_sum(756, 5) == 4


def test_is_good():

    assert dc.is_good(10, dc.GoodSpec(3, 1))
    assert not dc.is_good(2, dc.GoodSpec(3, 1))
    assert dc.is_good(757, dc.GoodSpec(7, 3))
    assert dc.is_good(0, dc.GoodSpec(3, 0))


def test_is_good_monotone():

    for n in range(500):
        for j in range(0, 4):
            if dc.is_good(n, dc.GoodSpec(5, j)):
                assert dc.is_good(n, dc.GoodSpec(5, j + 1))


def test_goodspec_degenerate():

    assert dc.GoodSpec(5, 4).degenerate
    assert dc.GoodSpec(5, 7).degenerate
    assert not dc.GoodSpec(5, 3).degenerate


def test_goodspec_negative_bound():

    with pytest.raises(eh.InvalidBoundError):
        dc.GoodSpec(5, -1)


def test_tail():

    assert dc.tail(757, 7, 1) == 1
    assert dc.tail(756, 5, 3) == 6
    assert dc.tail(12345, 3, 0) == 0

    for n in (0, 1, 17, 756, 99999):
        for base in (3, 5, 7):
            for i in range(6):
                assert dc.tail(n, base, i) == n % base ** i


def test_tail_past_the_top_digit():

    assert dc.tail(5, 2, 10 ** 9) == 5
    assert dc.tail(756, 7, 4) == 756
    assert dc.tail(0, 3, 10 ** 12) == 0


def test_highest_bad_index():

    spec = dc.GoodSpec(5, 2)

    assert dc.highest_bad_index(757, spec) is None
    # 14 = [4, 2] in base 5
    assert dc.highest_bad_index(14, spec) == 0
    # 20 = [0, 4] in base 5
    assert dc.highest_bad_index(20, spec) == 1


def test_next_good_matches_linear_search():

    for spec in (dc.GoodSpec(3, 1), dc.GoodSpec(5, 2), dc.GoodSpec(7, 3)):
        for n in range(0, 800):
            expected = n
            while not dc.is_good(expected, spec):
                expected += 1
            assert dc.next_good(n, spec) == expected


def test_count_good_upto_powers():

    spec = dc.GoodSpec(3, 1)

    for k in range(1, 10):
        assert dc.count_good_upto(3 ** k - 1, spec) == 2 ** k


def test_count_good_upto_brute_force():

    for spec in (dc.GoodSpec(3, 1), dc.GoodSpec(5, 2), dc.GoodSpec(7, 4),
                 dc.GoodSpec(5, 4)):
        count = 0
        for x in range(0, 1000):
            if dc.is_good(x, spec):
                count += 1
            assert dc.count_good_upto(x, spec) == count


def test_count_good_upto_negative():

    assert dc.count_good_upto(-1, dc.GoodSpec(3, 1)) == 0


def test_odometer_step_without_carry_change():

    o = dc.Odometer(9, [(3, 1)])
    assert o.digits[0] == [0, 0, 1]
    assert o.bad == [0]

    dc.odometer_step(o)

    assert o.n == 10
    assert o.digits[0] == [1, 0, 1]
    assert o.bad == [0]


def test_odometer_step_clears_bad_digit():

    o = dc.Odometer(2, [(3, 1)])
    assert o.digits[0] == [2]
    assert o.bad == [1]

    o.step()

    assert o.digits[0] == [0, 1]
    assert o.bad == [0]
    assert o.clear


def test_odometer_from_zero():

    o = dc.odometer_new(0, PrimeSet.of([3, 5, 7]))
    assert o.clear

    o.step()
    assert o.n == 1
    assert o.digits == [[1], [1], [1]]


def test_odometer_coherence():

    pairs = PrimeSet.of([3, 5, 7, 11, 13]).pairs()

    for start in (0, 1, 999, 123456):
        o = dc.Odometer(start, pairs)
        for _ in range(3000):
            o.step()
            for k, (base, threshold) in enumerate(pairs):
                fresh = list(dc.expand(o.n, base).digits)
                assert o.digits[k] == fresh
                assert o.bad[k] == sum(1 for d in fresh if d > threshold)


def test_odometer_coherence_long_run():

    pairs = PrimeSet.of([3, 5, 7, 11, 13]).pairs()
    o = dc.Odometer(10 ** 6, pairs)

    for _ in range(10 ** 5):
        o.step()
        for k, (base, threshold) in enumerate(pairs):
            fresh = list(dc.expand(o.n, base).digits)
            assert o.digits[k] == fresh
            assert o.bad[k] == sum(1 for d in fresh if d > threshold)

    assert o.n == 10 ** 6 + 10 ** 5


def test_odometer_leap_never_skips():

    pairs = PrimeSet.of([3, 5, 7]).pairs()
    o = dc.Odometer(1, pairs)
    seen = []

    while o.n <= 5000:
        if o.clear:
            seen.append(o.n)
            o.step()
        else:
            o.leap()

    expected = [n for n in range(1, 5001)
                if all(dc.is_good(n, dc.GoodSpec(p, t)) for p, t in pairs)]

    assert seen == expected


def test_odometer_advance_and_expansion():

    o = dc.Odometer(0, [(7, 3), (5, 2)])
    o.advance_to(756)

    assert o.expansion(7).digits == (0, 3, 1, 2)
    assert o.max_digits() == (3, 1)


def test_odometer_needs_bases():

    with pytest.raises(eh.InvalidBaseError):
        dc.Odometer(0, [])
