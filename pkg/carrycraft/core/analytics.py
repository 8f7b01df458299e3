"""
Derived quantities: the least nondivisor A(N) of C(2N, N), Catalan
coprimality, Stirling size estimates and the ellipsoid region of the
three-prime inequality.
"""

import math
import logging

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

try:
    import core.error_handling as eh
    from core.primes import factorize, PrimeSet
    from core.valuation import count_carries, nu_binom_central, \
        coprime_to_primeset
except ImportError:
    import carrycraft.core.error_handling as eh
    from carrycraft.core.primes import factorize, PrimeSet
    from carrycraft.core.valuation import count_carries, nu_binom_central, \
        coprime_to_primeset

logger = logging.getLogger("main.{}".format(__name__))

DEFAULT_SEARCH_CAP = 10 ** 6
"""
int: Largest candidate tried by :py:func:`least_nondivisor`
"""

LOW_N = 50
"""
int: Below this N the Stirling estimates are flagged as inaccurate
"""

PLANES = ("xy", "xz", "yz")

CATALAN_NOTE = (
    "nu_p(C_N) = nu_p(C(2N, N)) - nu_p(N + 1). Since C_N divides C(2N, N), "
    "a prime coprime to the binomial is coprime to C_N. Arguing through the "
    "divisors of N + 1 alone does not settle the question in general.")


@dataclass(frozen=True)
class LeastNondivisor:
    """A(N), the least integer that does not divide C(2N, N)"""

    n: int
    value: int

    def as_dict(self):
        return {"n": self.n, "value": self.value}


def least_nondivisor(n, search_cap=DEFAULT_SEARCH_CAP):
    """Computes A(N) without building C(2N, N)

    Each candidate m is factored and m divides C(2N, N) exactly when
    nu_P(m) <= nu_P(C(2N, N)) for every prime P of m. The binomial
    valuations are carry counts, the prime 2 included.

    Parameters
    ----------
    n : int
        N >= 1.
    search_cap : int
        Largest candidate, >= 2.

    Returns
    -------
    LeastNondivisor

    Raises
    ------
    CapExceededError
        When every m <= search_cap divides C(2N, N).
    """

    if not isinstance(n, int) or n < 1:
        raise eh.DomainError("N must be a positive integer. Got: {}".format(n))
    if search_cap < 2:
        raise eh.InvalidBoundError(
            "search_cap must be >= 2. Got: {}".format(search_cap))

    carries = {}

    for m in range(2, search_cap + 1):
        for p, e in factorize(m):
            if p not in carries:
                carries[p] = count_carries(n, p)
            if carries[p] < e:
                return LeastNondivisor(n=n, value=m)

    raise eh.CapExceededError(
        "Every integer up to {} divides C(2N, N) for N = {}".format(
            search_cap, n))


def an_bounds(n, epsilon):
    """exp((log N)^(1/2 - eps)) and exp((log N)^(1/2 + eps)), natural log"""

    log_n = math.log(n)
    return (math.exp(log_n ** (0.5 - float(epsilon))),
            math.exp(log_n ** (0.5 + float(epsilon))))


def an_bounds_check(n, epsilon=Fraction(1, 2), search_cap=DEFAULT_SEARCH_CAP):
    """True iff exp((log N)^(1/2 - eps)) < A(N) < exp((log N)^(1/2 + eps))

    The bound is asymptotic. This reports whether it holds at this N only.
    """

    if n < 2:
        raise eh.DomainError("N must be >= 2. Got: {}".format(n))
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, 2):
        raise eh.InvalidBoundError(
            "epsilon must lie in (0, 1/2]. Got: {}".format(epsilon))

    lower, upper = an_bounds(n, epsilon)
    value = least_nondivisor(n, search_cap).value

    logger.debug("A({}) = {}, bounds ({}, {})".format(n, value, lower, upper))

    return lower < value < upper


def _valuation(x, p):

    t = 0
    while x % p == 0:
        x //= p
        t += 1
    return t


def catalan_valuations(n, primes):
    """Prime -> nu_p(C_N), as nu_p(C(2N, N)) - nu_p(N + 1)"""

    if not isinstance(primes, PrimeSet):
        primes = PrimeSet.of(primes)

    return {p: nu_binom_central(n, p) - _valuation(n + 1, p)
            for p in primes.primes}


def catalan_coprime(n, primes):
    """True iff no prime of ``primes`` divides the Catalan number C_N

    Parameters
    ----------
    n : int
    primes : PrimeSet or iterable of int
    """

    coprime = all(v == 0 for v in catalan_valuations(n, primes).values())

    if coprime_to_primeset(n, primes):
        assert coprime, "C_N divides C(2N, N) but shares a prime with it"

    return coprime


@dataclass(frozen=True)
class StirlingEstimate:
    """Natural log approximations of C(2N, N) and C_N

    Attributes
    ----------
    n : int
    log_binom : float
        2N log 2 - (1/2) log(pi N).
    log_catalan : float
        N log 4 - (1/2) log pi - (3/2) log N.
    digit_count_estimate : int
        ceil(log10 C(2N, N)) from ``log_binom``.
    low_n : bool
        N is too small for the asymptotics to be accurate.
    """

    n: int
    log_binom: float
    log_catalan: float
    digit_count_estimate: int
    low_n: bool

    def as_dict(self):
        return {"n": self.n, "log_binom": self.log_binom,
                "log_catalan": self.log_catalan,
                "digit_count_estimate": self.digit_count_estimate,
                "low_n": self.low_n}


def stirling_estimates(n):
    """Stirling-based size estimates of C(2N, N) and C_N, for N >= 1"""

    if not isinstance(n, int) or n < 1:
        raise eh.DomainError("N must be a positive integer. Got: {}".format(n))

    log_binom = 2 * n * math.log(2) - 0.5 * math.log(math.pi * n)
    log_catalan = n * math.log(4) - 0.5 * math.log(math.pi) - \
        1.5 * math.log(n)

    return StirlingEstimate(
        n=n, log_binom=log_binom, log_catalan=log_catalan,
        digit_count_estimate=math.ceil(log_binom / math.log(10)),
        low_n=n < LOW_N)


@dataclass(frozen=True)
class EllipsoidSpec:
    """Point (A, B, C) against the ellipsoid with squared semi axes
    (p - 1, q - 1, r - 1).

    The point has coordinates x = sqrt(A), y = sqrt(B), z = sqrt(C), so it
    lies on or outside the ellipsoid exactly when
    A/(p - 1) + B/(q - 1) + C/(r - 1) >= 1.
    """

    p: int
    q: int
    r: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise eh.InvalidPrimeError(
                "Semi axes need primes >= 2. Got: {}, {}, {}".format(
                    self.p, self.q, self.r))
        if min(self.a, self.b, self.c) < 1:
            raise eh.InvalidBoundError(
                "Bounds must be positive. Got: {}, {}, {}".format(
                    self.a, self.b, self.c))

    @property
    def axes(self):
        """dict: plane letter -> (squared semi axis, squared coordinate)"""
        return {"x": (self.p - 1, self.a), "y": (self.q - 1, self.b),
                "z": (self.r - 1, self.c)}

    def term(self, letter):
        axis, coord = self.axes[letter]
        return Fraction(coord, axis)


def region_test(spec):
    """A/(p - 1) + B/(q - 1) + C/(r - 1) >= 1, exactly"""
    return spec.term("x") + spec.term("y") + spec.term("z") >= 1


def plane_tests(spec):
    """The two-term inequality of each coordinate plane trace

    Returns
    -------
    dict
        ``xy``, ``xz`` and ``yz`` mapped to booleans.
    """
    return {plane: spec.term(plane[0]) + spec.term(plane[1]) >= 1
            for plane in PLANES}


def _check_plane(plane):

    plane = plane.lower()
    if plane not in PLANES:
        raise eh.SanityError("Unknown plane '{}'. Choose from: {}".format(
            plane, ", ".join(PLANES)))
    return plane


def trace_points(spec, plane, samples):
    """Samples the quarter ellipse of a plane trace uniformly in angle

    Parameters
    ----------
    spec : EllipsoidSpec
    plane : str
        ``xy``, ``xz`` or ``yz``.
    samples : int
        Number of points, >= 2. The two axis intercepts are always
        included.

    Returns
    -------
    list of tuple
        ``(u, v)`` pairs from ``(sqrt(axis_u), 0)`` to ``(0, sqrt(axis_v))``.
    """

    plane = _check_plane(plane)
    if samples < 2:
        raise eh.SanityError("samples must be >= 2. Got: {}".format(samples))

    axis_u = spec.axes[plane[0]][0]
    axis_v = spec.axes[plane[1]][0]

    theta = np.linspace(0.0, np.pi / 2, samples)
    u = np.sqrt(axis_u) * np.cos(theta)
    v = np.sqrt(axis_v) * np.sin(theta)

    # cos(pi/2) is not exactly zero in floating point
    u[np.abs(u) < 1e-12] = 0.0
    v[np.abs(v) < 1e-12] = 0.0

    return [(float(a), float(b)) for a, b in zip(u, v)]


def trace_csv(points):
    """CSV text with an ``x,y`` header and six significant digits"""

    lines = ["x,y"]
    lines.extend("{:.6g},{:.6g}".format(x, y) for x, y in points)
    return "\n".join(lines) + "\n"
