"""
Primality, factorisation and the :py:class:`PrimeSet` value used by the
valuation, scanner and theorem modules.
"""

import logging

from dataclasses import dataclass
from math import isqrt

try:
    import core.error_handling as eh
except ImportError:
    import carrycraft.core.error_handling as eh

logger = logging.getLogger("main.{}".format(__name__))

TRIAL_DIVISION_LIMIT = 2 ** 16
"""
int: Below ``TRIAL_DIVISION_LIMIT ** 2`` primality is settled by trial
division alone
"""

# Deterministic for every n < 3.3 * 10**24
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _small_primes(limit):

    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = b"\x00" * len(sieve[i * i::i])
    return [i for i, flag in enumerate(sieve) if flag]


SMALL_PRIMES = _small_primes(TRIAL_DIVISION_LIMIT)


def _miller_rabin(n):

    m = n - 1
    s = (m & -m).bit_length() - 1
    d = m >> s

    for a in MILLER_RABIN_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == m:
            continue
        for _ in range(s - 1):
            x = pow(x, 2, n)
            if x == m:
                break
        else:
            return False

    return True


def is_prime(n):
    """Primality by trial division up to 2**16, Miller-Rabin above

    Parameters
    ----------
    n : int

    Returns
    -------
    bool
    """

    if n < 2:
        return False

    for p in SMALL_PRIMES:
        if p * p > n:
            return True
        if n % p == 0:
            return n == p

    return _miller_rabin(n)


def check_odd_prime(p):
    """Raises :py:class:`InvalidPrimeError` unless ``p`` is an odd prime"""

    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise eh.InvalidPrimeError(
            "{} is not an odd prime".format(p))


def factorize(n):
    """Prime factorisation of ``n`` by trial division

    Returns
    -------
    list of tuple
        ``(prime, exponent)`` pairs in ascending order. Empty for 1.
    """

    if n < 1:
        raise eh.DomainError("Cannot factorize {}".format(n))

    factors = []
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            factors.append((p, e))

    if n > 1:
        if not is_prime(n):
            # composite remainder beyond the sieve
            p = SMALL_PRIMES[-1] + 2
            while p * p <= n:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                if e:
                    factors.append((p, e))
                p += 2
        if n > 1:
            factors.append((n, 1))

    return factors


def totient(n):
    """Euler's totient by factorisation"""

    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


@dataclass(frozen=True)
class PrimeSet:
    """Ascending distinct odd primes, each with a digit threshold.

    Parameters
    ----------
    primes : tuple of int
        Strictly ascending odd primes.
    thresholds : tuple of int
        Digit bound per prime. Defaults to (p - 1) / 2, the largest digit
        that adds to itself without a carry.
    """

    primes: tuple
    thresholds: tuple = None

    def __post_init__(self):

        primes = tuple(self.primes)
        if not primes:
            raise eh.InvalidPrimeError("At least one prime is required")

        for p in primes:
            check_odd_prime(p)

        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise eh.InvalidPrimeError(
                "Primes must be distinct and in ascending order. "
                "Got: {}".format(list(primes)))

        if self.thresholds is None:
            thresholds = tuple((p - 1) // 2 for p in primes)
        else:
            thresholds = tuple(self.thresholds)

        if len(thresholds) != len(primes):
            raise eh.InvalidBoundError(
                "{} thresholds given for {} primes".format(
                    len(thresholds), len(primes)))

        if any(not isinstance(t, int) or t < 0 for t in thresholds):
            raise eh.InvalidBoundError(
                "Thresholds must be non-negative integers. Got: {}".format(
                    list(thresholds)))

        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "thresholds", thresholds)

    @classmethod
    def of(cls, primes, thresholds=None):
        """Builds a PrimeSet, sorting the primes (and their thresholds)"""

        primes = list(primes)
        if thresholds is None:
            return cls(tuple(sorted(primes)))

        order = sorted(range(len(primes)), key=lambda i: primes[i])
        thresholds = list(thresholds)
        if len(thresholds) != len(primes):
            raise eh.InvalidBoundError(
                "{} thresholds given for {} primes".format(
                    len(thresholds), len(primes)))
        return cls(tuple(primes[i] for i in order),
                   tuple(thresholds[i] for i in order))

    def pairs(self):
        """list: ``(prime, threshold)`` pairs"""
        return list(zip(self.primes, self.thresholds))

    @property
    def uses_criterion(self):
        """bool: True when every threshold is the (p - 1) / 2 criterion"""
        return all(t == (p - 1) // 2 for p, t in self.pairs())

    @property
    def degenerate(self):
        """dict: Per prime, whether its threshold makes every digit pass"""
        return {p: t >= p - 1 for p, t in self.pairs()}

    @property
    def product(self):
        result = 1
        for p in self.primes:
            result *= p
        return result

    def __len__(self):
        return len(self.primes)
