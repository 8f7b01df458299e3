"""
P-adic valuations of factorials and central binomial coefficients.

Everything here is computed from base-P digits: Legendre's formula for
N! and the carry count of N + N for C(2N, N). No factorial or binomial is
ever materialised, so N of any size is handled in O(log N).
"""

import logging

from dataclasses import dataclass

try:
    import core.error_handling as eh
    from core.digitcore import expand, digit_sum
    from core.primes import check_odd_prime, is_prime, PrimeSet
except ImportError:
    import carrycraft.core.error_handling as eh
    from carrycraft.core.digitcore import expand, digit_sum
    from carrycraft.core.primes import check_odd_prime, is_prime, PrimeSet

logger = logging.getLogger("main.{}".format(__name__))


@dataclass(frozen=True)
class ValuationReport:
    """Per-prime valuation record of N

    Attributes
    ----------
    prime : int
    n : int
    s_p_n : int
        Digit sum of N in base P.
    nu_factorial : int
        nu_P(N!).
    nu_binom : int
        nu_P(C(2N, N)).
    carries : int
        Carries when adding N + N in base P.
    """

    prime: int
    n: int
    s_p_n: int
    nu_factorial: int
    nu_binom: int
    carries: int

    def as_dict(self):
        return {
            "prime": self.prime,
            "n": self.n,
            "s_p_n": self.s_p_n,
            "nu_factorial": self.nu_factorial,
            "nu_binom": self.nu_binom,
            "carries": self.carries
        }


def _legendre(n, p):

    s = digit_sum(n, p)
    q, r = divmod(n - s, p - 1)
    assert r == 0, "N - s_P(N) = {} not divisible by {}".format(n - s, p - 1)
    return q


def nu_factorial(n, p):
    """nu_P(N!) by Legendre's formula (N - s_P(N)) / (P - 1)

    Parameters
    ----------
    n : int
        Non-negative integer.
    p : int
        Odd prime.

    Raises
    ------
    InvalidPrimeError
        When ``p`` is not an odd prime.
    """

    check_odd_prime(p)
    return _legendre(n, p)


def count_carries(n, p):
    """Number of carries when adding ``n + n`` in base ``p``.

    Works for any prime, 2 included. By Kummer's theorem this is
    nu_p(C(2n, n)).
    """

    if not is_prime(p):
        raise eh.InvalidPrimeError("{} is not a prime".format(p))

    carries = 0
    carry = 0
    for d in expand(n, p).digits:
        carry = 1 if 2 * d + carry >= p else 0
        carries += carry

    return carries


def nu_binom_central(n, p):
    """nu_P(C(2N, N)) as the carry count of N + N in base P.

    Equals ``nu_factorial(2N, P) - 2 * nu_factorial(N, P)``.
    """

    check_odd_prime(p)
    return count_carries(n, p)


def pnorm_is_unit(n, p):
    """True iff |N|_P = 1, i.e. P does not divide N

    Raises
    ------
    UndefinedNormError
        For ``n == 0``, whose valuation is infinite.
    """

    check_odd_prime(p)
    if n == 0:
        raise eh.UndefinedNormError("|0|_P is not a unit norm: nu_P(0) is "
                                    "infinite")

    return n % p != 0


def coprime_to_primeset(n, primes):
    """True iff gcd(C(2N, N), product of ``primes``) = 1.

    Equivalently, every base-p digit of N is at most (p - 1) / 2. Only the
    primes of ``primes`` are used; custom thresholds of a
    :py:class:`PrimeSet` are ignored.

    Parameters
    ----------
    n : int
    primes : PrimeSet or iterable of int
    """

    if not isinstance(primes, PrimeSet):
        primes = PrimeSet.of(primes)

    return all(nu_binom_central(n, p) == 0 for p in primes.primes)


def valuation_report(n, p):
    """Builds the :py:class:`ValuationReport` of ``n`` for prime ``p``"""

    check_odd_prime(p)

    s = digit_sum(n, p)
    nu_fact = _legendre(n, p)
    carries = count_carries(n, p)

    assert carries == (2 * s - digit_sum(2 * n, p)) // (p - 1)
    assert carries == _legendre(2 * n, p) - 2 * nu_fact

    logger.debug("Valuation of N={} at P={}: s={}, nu(N!)={}, carries={}"
                 .format(n, p, s, nu_fact, carries))

    return ValuationReport(prime=p, n=n, s_p_n=s, nu_factorial=nu_fact,
                           nu_binom=carries, carries=carries)
