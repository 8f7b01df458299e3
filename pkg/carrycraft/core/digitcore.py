"""
Exact base-P digit expansions and the digit predicates built on them.

Digits are always stored least-significant first. The conventional
most-significant-first display is produced only at the output boundary
(see :py:meth:`DigitExpansion.msd_first`).

The :py:class:`Odometer` keeps the digit vectors of a counter in several
bases at once and updates them in amortized O(1) per increment. It is the
engine behind :py:mod:`carrycraft.core.scanner`.
"""

import logging

from dataclasses import dataclass

try:
    import core.error_handling as eh
except ImportError:
    import carrycraft.core.error_handling as eh

logger = logging.getLogger("main.{}".format(__name__))

MAX_BASE = 2 ** 31
"""
int: Largest base accepted by the digit engine
"""


def _check_base(base):

    if not isinstance(base, int) or base < 2:
        raise eh.InvalidBaseError(
            "Base must be an integer >= 2. Got: {}".format(base))
    if base > MAX_BASE:
        raise eh.InvalidBaseError(
            "Base {} exceeds the supported maximum of 2**31".format(base))


def _check_value(n, name="N"):

    if not isinstance(n, int) or n < 0:
        raise eh.DomainError(
            "{} must be a non-negative integer. Got: {}".format(name, n))


@dataclass(frozen=True)
class DigitExpansion:
    """Base-P digit vector of a non-negative integer.

    Parameters
    ----------
    base : int
        The base, >= 2.
    digits : tuple of int
        Digits, least-significant first. Empty for the value 0.
    """

    base: int
    digits: tuple

    def __post_init__(self):
        _check_base(self.base)
        if any(d < 0 or d >= self.base for d in self.digits):
            raise eh.InvalidBaseError(
                "Digits {} are not valid in base {}".format(
                    list(self.digits), self.base))
        if self.digits and self.digits[-1] == 0:
            raise eh.InvalidBaseError(
                "Most significant digit must be nonzero: {}".format(
                    list(self.digits)))

    @property
    def value(self):
        """int: The represented integer, sum of digits[j] * base**j"""

        total = 0
        for d in reversed(self.digits):
            total = total * self.base + d
        return total

    @property
    def max_digit(self):
        return max(self.digits, default=0)

    def msd_first(self):
        """Digits most-significant first, the usual written order"""
        return tuple(reversed(self.digits))

    def __str__(self):
        if not self.digits:
            return "0"
        return " ".join(str(d) for d in self.msd_first())


@dataclass(frozen=True)
class GoodSpec:
    """A (P, J) pair. An integer is (P, J)-good when every base-P digit is
    at most J.

    A bound J >= P - 1 is accepted, but makes every integer good; the
    :py:attr:`degenerate` flag reports it.
    """

    base: int
    bound: int

    def __post_init__(self):
        _check_base(self.base)
        if not isinstance(self.bound, int) or self.bound < 0:
            raise eh.InvalidBoundError(
                "Digit bound must be a non-negative integer. Got: {}".format(
                    self.bound))

    @property
    def degenerate(self):
        """bool: True when every integer is (P, J)-good"""
        return self.bound >= self.base - 1


def expand(n, base):
    """Base-``base`` expansion of ``n``

    Parameters
    ----------
    n : int
        Non-negative integer.
    base : int
        Base, 2 <= base <= 2**31.

    Returns
    -------
    DigitExpansion
        Digits least-significant first; empty for ``n == 0``.

    Raises
    ------
    InvalidBaseError
        If the base is out of range.
    """

    _check_base(base)
    _check_value(n)

    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)

    return DigitExpansion(base, tuple(digits))


def digit_sum(n, base):
    """s_P(N), the sum of the base-P digits of N"""
    return sum(expand(n, base).digits)


def is_good(n, spec):
    """Checks whether ``n`` is (P, J)-good for ``spec = GoodSpec(P, J)``.

    Zero has no digits and is good for every spec.
    """

    bound = spec.bound
    return all(d <= bound for d in expand(n, spec.base).digits)


def tail(n, base, index):
    """The low-order part of the base-``base`` expansion of ``n`` below
    ``index``, i.e. ``n mod base**index``.
    """

    _check_base(base)
    _check_value(n)
    _check_value(index, "index")

    if index >= len(expand(n, base).digits):
        return n
    return n % base ** index


def highest_bad_index(n, spec):
    """Index of the most significant digit of ``n`` exceeding the bound of
    ``spec``, or None when ``n`` is good.
    """

    digits = expand(n, spec.base).digits
    for j in range(len(digits) - 1, -1, -1):
        if digits[j] > spec.bound:
            return j
    return None


def next_good(n, spec):
    """The least (P, J)-good integer that is >= ``n``.

    If the most significant offending digit sits at index j, every integer
    up to the next multiple of P**(j + 1) keeps that digit (or a larger one),
    so the search jumps straight there and tries again.
    """

    _check_value(n)

    while True:
        j = highest_bad_index(n, spec)
        if j is None:
            return n
        unit = spec.base ** (j + 1)
        n = (n // unit + 1) * unit


def count_good_upto(x, spec):
    """Number of (P, J)-good integers in [0, x]

    Parameters
    ----------
    x : int
        Upper end of the range, inclusive. Negative values give 0.
    spec : GoodSpec

    Returns
    -------
    int
    """

    if x < 0:
        return 0
    if spec.degenerate:
        return x + 1

    choices = spec.bound + 1
    msd = expand(x, spec.base).msd_first()
    total = 0

    for idx, d in enumerate(msd):
        remaining = len(msd) - idx - 1
        total += min(d, choices) * choices ** remaining
        if d > spec.bound:
            return total

    # x itself is good
    return total + 1


class Odometer:
    """Counter that keeps its digit vectors in several bases up to date.

    Each base carries a digit threshold; the odometer tracks, per base, how
    many digits exceed it, so that ``clear`` (every base within threshold)
    costs O(number of bases).

    An Odometer is mutable and owned by a single caller. Odometers over
    disjoint ranges share nothing and may run on separate threads or
    processes.

    Parameters
    ----------
    start : int
        Initial value of the counter.
    pairs : iterable of (int, int)
        ``(base, threshold)`` pairs. A :py:class:`PrimeSet` provides them via
        :py:meth:`PrimeSet.pairs`.
    """

    def __init__(self, start, pairs):

        _check_value(start, "start")

        pairs = list(pairs)
        if not pairs:
            raise eh.InvalidBaseError("Odometer needs at least one base")

        self.bases = [b for b, _ in pairs]
        """
        list: Bases in the order they were given
        """

        self.thresholds = [t for _, t in pairs]
        """
        list: Digit threshold of each base
        """

        for base, threshold in pairs:
            GoodSpec(base, threshold)

        self.n = start
        """
        int: Current value of the counter
        """

        self.digits = []
        """
        list: Per-base digit list of :py:attr:`n`, least-significant first
        """

        self.bad = []
        """
        list: Per-base number of digits above the threshold
        """

        self._seed(start)

    def _seed(self, n):

        self.n = n
        self.digits = [list(expand(n, b).digits) for b in self.bases]
        self.bad = [sum(1 for d in digs if d > t)
                    for digs, t in zip(self.digits, self.thresholds)]

    @property
    def clear(self):
        """bool: True when every base is within its threshold"""
        return not any(self.bad)

    def step(self):
        """Advances the counter by one, propagating carries in every base"""

        self.n += 1

        for k, base in enumerate(self.bases):
            digits = self.digits[k]
            threshold = self.thresholds[k]
            top = base - 1
            i = 0
            while True:
                if i == len(digits):
                    digits.append(1)
                    if threshold < 1:
                        self.bad[k] += 1
                    break
                d = digits[i]
                if d == top:
                    digits[i] = 0
                    if d > threshold:
                        self.bad[k] -= 1
                    i += 1
                else:
                    digits[i] = d + 1
                    if d == threshold:
                        self.bad[k] += 1
                    break

        return self

    def leap(self):
        """Advances to the next value that could be clear.

        When no base has an offending digit this is a plain :py:meth:`step`.
        Otherwise, for every base with an offending digit, the value is
        rounded up past its most significant offending digit, and the
        counter is reseeded at the furthest of those targets. No clear value
        is ever skipped.
        """

        if self.clear:
            return self.step()

        target = self.n + 1
        for k in range(len(self.bases)):
            if not self.bad[k]:
                continue
            digits = self.digits[k]
            threshold = self.thresholds[k]
            j = len(digits) - 1
            while digits[j] <= threshold:
                j -= 1
            unit = self.bases[k] ** (j + 1)
            target = max(target, (self.n // unit + 1) * unit)

        self._seed(target)
        return self

    def advance_to(self, n):
        """Reseeds the counter at ``n``"""
        _check_value(n)
        self._seed(n)
        return self

    def max_digits(self):
        """tuple: Largest digit of the current value in each base"""
        return tuple(max(digs, default=0) for digs in self.digits)

    def expansion(self, base):
        """Current value as a :py:class:`DigitExpansion` in ``base``"""
        k = self.bases.index(base)
        return DigitExpansion(base, tuple(self.digits[k]))


def odometer_new(start, primes_with_thresholds):
    """Creates an :py:class:`Odometer` at ``start`` over a
    :py:class:`PrimeSet` (or any iterable of ``(base, threshold)`` pairs).
    """

    pairs = primes_with_thresholds.pairs() \
        if hasattr(primes_with_thresholds, "pairs") \
        else primes_with_thresholds

    return Odometer(start, pairs)


def odometer_step(odometer):
    """Advances ``odometer`` by one and returns it"""
    return odometer.step()
