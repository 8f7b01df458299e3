"""
Slow, exact ground truth.

Central binomial coefficients, Catalan numbers, gcds and valuations are
computed here with arbitrary precision integers (gmpy2), by repeated
exact division. None of the digit engine is used to produce these values:
the oracle is the independent authority every fast path is checked
against. Only :py:func:`cross_check` reaches into the fast paths, and only
to compare their answers.
"""

import math
import logging

from dataclasses import dataclass, field

import gmpy2

try:
    import core.error_handling as eh
except ImportError:
    import carrycraft.core.error_handling as eh

logger = logging.getLogger("main.{}".format(__name__))

ORACLE_GUARD = 10 ** 5
"""
int: Largest N the oracle accepts
"""


def _check_guard(n):

    if not isinstance(n, int) or n < 0:
        raise eh.OracleGuardError(
            "N must be a non-negative integer. Got: {}".format(n))
    if n > ORACLE_GUARD:
        raise eh.OracleGuardError(
            "N = {} exceeds the oracle guard of {}".format(n, ORACLE_GUARD))


def _exact_div(x, y):

    q, r = gmpy2.f_divmod(x, y)
    assert r == 0, "inexact division by {}".format(y)
    return q


@dataclass(frozen=True)
class BigReport:
    """Exact values for one N

    Attributes
    ----------
    n : int
    binom : gmpy2.mpz
        C(2N, N).
    catalan : gmpy2.mpz
        C_N.
    gcd : gmpy2.mpz
        gcd(C(2N, N), product of the requested primes).
    valuations : dict
        Prime -> exact nu_p(C(2N, N)).
    """

    n: int
    binom: object
    catalan: object
    gcd: object
    valuations: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "n": self.n,
            "binom_digits": len(str(self.binom)),
            "catalan_digits": len(str(self.catalan)),
            "gcd": int(self.gcd),
            "valuations": {str(p): v for p, v in self.valuations.items()}
        }


def exact_binom_central(n):
    """C(2N, N) as the product of (N + k) / k for k = 1..N, dividing
    exactly at every step (the partial products are C(N + k, k)).

    Raises
    ------
    OracleGuardError
        For N above :py:data:`ORACLE_GUARD`.
    """

    _check_guard(n)

    value = gmpy2.mpz(1)
    for k in range(1, n + 1):
        value = _exact_div(value * (n + k), k)

    return value


def exact_catalan(n):
    """C_N = C(2N, N) / (N + 1), asserted remainder free"""

    return _exact_div(exact_binom_central(n), n + 1)


def exact_valuation(x, p):
    """Largest t with p**t dividing x, by repeated exact division

    Raises
    ------
    DomainError
        For ``x == 0``.
    """

    x = gmpy2.mpz(x)
    if x == 0:
        raise eh.DomainError("The valuation of 0 is infinite")

    t = 0
    while True:
        q, r = gmpy2.f_divmod(x, p)
        if r:
            return t
        x = q
        t += 1


def gcd_with_product(n, primes):
    """gcd(C(2N, N), product of ``primes``) from the exact binomial"""

    product = gmpy2.mpz(1)
    for p in primes:
        product *= p

    return gmpy2.gcd(exact_binom_central(n), product)


def big_report(n, primes):
    """Collects the exact values of ``n`` into a :py:class:`BigReport`"""

    binom = exact_binom_central(n)
    catalan = _exact_div(binom, n + 1)

    assert catalan * (n + 1) == binom

    product = gmpy2.mpz(1)
    for p in primes:
        product *= p

    return BigReport(
        n=n, binom=binom, catalan=catalan, gcd=gmpy2.gcd(binom, product),
        valuations={p: exact_valuation(binom, p) for p in primes})


def binom_central_sequence(stop):
    """Yields ``(N, C(2N, N))`` for N = 0..stop

    Uses C(2N + 2, N + 1) = C(2N, N) * 2(2N + 1) / (N + 1).
    """

    _check_guard(stop)

    value = gmpy2.mpz(1)
    for n in range(stop + 1):
        yield n, value
        value = _exact_div(value * 2 * (2 * n + 1), n + 1)


def catalan_sequence(stop):
    """Yields ``(N, C_N)`` for N = 0..stop"""

    for n, binom in binom_central_sequence(stop):
        yield n, _exact_div(binom, n + 1)


def exact_log_binom(n):
    """Natural log of the exact C(2N, N)"""
    return math.log(int(exact_binom_central(n)))


def digits_independent(n, base):
    """Base conversion through gmpy2, least-significant first.

    Used to verify scan hits for custom thresholds without going through
    the digit engine.
    """

    n = gmpy2.mpz(n)
    digits = []
    while n:
        n, d = gmpy2.f_divmod(n, base)
        digits.append(int(d))
    return digits


def cross_check(start, stop, primes):
    """Compares the fast paths against the oracle over [start, stop]

    For every N in the range checks that

    - the scanner hit set (default thresholds) equals the set of N with
      gcd(C(2N, N), product) = 1, and
    - :py:func:`nu_binom_central` equals the exact valuation, per prime.

    Parameters
    ----------
    start, stop : int
        Inclusive range, ``0 <= start <= stop <= ORACLE_GUARD``.
    primes : PrimeSet

    Returns
    -------
    list of dict
        One entry per mismatch. Empty when everything agrees.
    """

    try:
        from core.scanner import ScanRequest, scan
        from core.valuation import nu_binom_central
    except ImportError:
        from carrycraft.core.scanner import ScanRequest, scan
        from carrycraft.core.valuation import nu_binom_central

    _check_guard(stop)

    product = gmpy2.mpz(primes.product)
    request = ScanRequest(primes=type(primes).of(primes.primes),
                          start=start, stop=stop)
    hits = set(hit.n for hit in scan(request))

    mismatches = []
    for n, binom in binom_central_sequence(stop):
        if n < start:
            continue

        expected = gmpy2.gcd(binom, product) == 1
        if expected != (n in hits):
            mismatches.append({"n": n, "check": "scan",
                               "oracle": expected, "fast": n in hits})

        for p in primes.primes:
            exact = exact_valuation(binom, p)
            fast = nu_binom_central(n, p)
            if exact != fast:
                mismatches.append({"n": n, "check": "nu_{}".format(p),
                                   "oracle": exact, "fast": fast})

    logger.debug("Cross check over [{}, {}]: {} mismatches".format(
        start, stop, len(mismatches)))

    return mismatches
