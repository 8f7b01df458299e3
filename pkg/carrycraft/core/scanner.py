"""
Range scanner for N with gcd(C(2N, N), p1 p2 ... pk) = 1.

The scanner walks an :py:class:`Odometer` over the range. With the default
thresholds ((p - 1) / 2 per prime) a value is a hit exactly when adding
N + N produces no carry in any of the bases, which by Kummer's theorem is
the gcd condition. Explicit thresholds turn the scan into a general search
for numbers that are (p, J_p)-good for every p.

Ranges are split into contiguous partitions, each with its own odometer,
and the per-partition hits are merged in ascending order. Output does not
depend on the number of jobs.
"""

import io
import csv
import logging
import multiprocessing

from dataclasses import dataclass, field
from fractions import Fraction

try:
    import core.error_handling as eh
    import core.oracle as oracle
    from core.digitcore import Odometer, GoodSpec, expand, count_good_upto
    from core.primes import PrimeSet
    from core.report import dump_json
except ImportError:
    import carrycraft.core.error_handling as eh
    import carrycraft.core.oracle as oracle
    from carrycraft.core.digitcore import Odometer, GoodSpec, expand, \
        count_good_upto
    from carrycraft.core.primes import PrimeSet
    from carrycraft.core.report import dump_json

logger = logging.getLogger("main.{}".format(__name__))

SCAN_CEILING = 2 ** 63 - 1
"""
int: Largest N the scanner accepts
"""

EXPORT_FORMATS = ("bfile", "csv", "json")

# Partitions handed out per worker, for load balance
CHUNKS_PER_JOB = 4


@dataclass(frozen=True)
class ScanRequest:
    """What to scan

    Parameters
    ----------
    primes : PrimeSet
        Primes and their digit thresholds.
    start, stop : int
        Inclusive range.
    jobs : int
        Number of worker processes.
    leap : bool
        Jump over blocks of values that keep an offending digit instead of
        stepping through them one by one.
    verify_upto : int
        Hits up to this value are checked against the oracle.
    """

    primes: PrimeSet
    start: int
    stop: int
    jobs: int = 1
    leap: bool = True
    verify_upto: int = 0

    def __post_init__(self):

        if not isinstance(self.primes, PrimeSet):
            raise eh.InvalidPrimeError(
                "Scan requests need a PrimeSet. Got: {}".format(self.primes))
        if self.start < 0 or self.start > self.stop:
            raise eh.ScanRangeError(
                "Invalid range [{}, {}]".format(self.start, self.stop))
        if self.stop > SCAN_CEILING:
            raise eh.ScanRangeError(
                "Upper end {} exceeds the 64-bit scan ceiling {}".format(
                    self.stop, SCAN_CEILING))
        if self.jobs < 1:
            raise eh.ScanRangeError(
                "jobs must be >= 1. Got: {}".format(self.jobs))
        if self.verify_upto > oracle.ORACLE_GUARD:
            raise eh.OracleGuardError(
                "verify_upto = {} exceeds the oracle guard of {}".format(
                    self.verify_upto, oracle.ORACLE_GUARD))


@dataclass(frozen=True)
class ScanHit:
    """A qualifying N with its largest digit in each base"""

    n: int
    max_digits: tuple
    verified: bool = False


@dataclass(frozen=True)
class DensityReport:
    """Hit counts over a range

    Attributes
    ----------
    start, stop : int
    hits : int
        Values good in every base.
    density : Fraction
        ``hits / (stop - start + 1)``.
    passes : dict
        Prime -> number of values good in that base alone.
    degenerate : dict
        Prime -> True when its threshold lets every digit through.
    """

    start: int
    stop: int
    hits: int
    density: Fraction
    passes: dict = field(default_factory=dict)
    degenerate: dict = field(default_factory=dict)

    def as_dict(self):
        size = self.stop - self.start + 1
        return {
            "range": [self.start, self.stop],
            "hits": self.hits,
            "density": self.density,
            "density_float": float(self.density),
            "passes": {str(p): c for p, c in self.passes.items()},
            "pass_density": {str(p): c / size
                             for p, c in self.passes.items()},
            "degenerate": {str(p): d for p, d in self.degenerate.items()}
        }


def _iter_partition(pairs, start, stop, leap):

    odometer = Odometer(start, pairs)
    advance = odometer.leap if leap else odometer.step

    while odometer.n <= stop:
        if odometer.clear:
            yield odometer.n, odometer.max_digits()
            odometer.step()
        else:
            advance()


def _scan_worker(args):
    return list(_iter_partition(*args))


def partitions(start, stop, count):
    """Splits [start, stop] into at most ``count`` contiguous ranges"""

    size = stop - start + 1
    count = max(1, min(count, size))
    step, extra = divmod(size, count)

    bounds = []
    lo = start
    for i in range(count):
        hi = lo + step - 1 + (1 if i < extra else 0)
        bounds.append((lo, hi))
        lo = hi + 1

    return bounds


def _raw_hits(req):

    pairs = req.primes.pairs()

    if req.jobs == 1:
        yield from _iter_partition(pairs, req.start, req.stop, req.leap)
        return

    work = [(pairs, lo, hi, req.leap) for lo, hi in
            partitions(req.start, req.stop, req.jobs * CHUNKS_PER_JOB)]
    logger.debug("Scanning [{}, {}] in {} partitions with {} jobs".format(
        req.start, req.stop, len(work), req.jobs))

    with multiprocessing.Pool(req.jobs) as pool:
        for chunk in pool.imap(_scan_worker, work):
            yield from chunk


def _verify(n, primes):

    if primes.uses_criterion:
        return oracle.gcd_with_product(n, primes.primes) == 1

    return all(max(oracle.digits_independent(n, p), default=0) <= t
               for p, t in primes.pairs())


def _checked(req, raw):

    for n, max_digits in raw:
        verified = False
        if n <= req.verify_upto:
            if not _verify(n, req.primes):
                raise eh.VerificationError(
                    "N = {} was reported by the scanner but rejected by the "
                    "oracle".format(n), mismatches=[n])
            verified = True
        yield ScanHit(n=n, max_digits=max_digits, verified=verified)


def scan(req):
    """Yields every qualifying N of the request as a :py:class:`ScanHit`,
    in ascending order.

    Raises
    ------
    VerificationError
        When a hit at or below ``req.verify_upto`` is rejected by the oracle.
    """
    return _checked(req, _raw_hits(req))


def _naive_hits(req):

    pairs = sorted(req.primes.pairs(), reverse=True)
    order = req.primes.primes

    for n in range(req.start, req.stop + 1):
        maxima = {}
        for p, t in pairs:
            m = expand(n, p).max_digit
            if m > t:
                break
            maxima[p] = m
        else:
            yield n, tuple(maxima[p] for p in order)


def scan_naive(req):
    """Reference scan: expands every N from scratch and tests it. Hits up to
    ``req.verify_upto`` are checked against the oracle as in :py:func:`scan`.
    """
    return _checked(req, _naive_hits(req))


def density(req):
    """Counts hits and single-base passes over the request range

    Returns
    -------
    DensityReport
    """

    hits = sum(1 for _ in scan(req))

    passes = {}
    for p, t in req.primes.pairs():
        spec = GoodSpec(p, t)
        passes[p] = count_good_upto(req.stop, spec) - \
            count_good_upto(req.start - 1, spec)

    report = DensityReport(
        start=req.start, stop=req.stop, hits=hits,
        density=Fraction(hits, req.stop - req.start + 1), passes=passes,
        degenerate=req.primes.degenerate)

    assert all(hits <= c for c in passes.values())

    return report


def write_hits(hits, fmt, fh, primes):
    """Writes hits to a text handle as they arrive

    Parameters
    ----------
    hits : iterable of ScanHit
    fmt : str
        One of ``bfile``, ``csv``, ``json``.
    fh : file object
    primes : PrimeSet
        Labels the per-prime columns.

    Returns
    -------
    int
        Number of hits written.

    Raises
    ------
    ExportError
        For an unknown format.
    """

    if fmt not in EXPORT_FORMATS:
        raise eh.ExportError("Unknown export format '{}'. Choose from: "
                             "{}".format(fmt, ", ".join(EXPORT_FORMATS)))

    count = 0

    if fmt == "bfile":
        for count, hit in enumerate(hits, 1):
            fh.write("{} {}\n".format(count, hit.n))

    elif fmt == "csv":
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n"] + ["maxdigit_{}".format(p)
                                 for p in primes.primes])
        for count, hit in enumerate(hits, 1):
            writer.writerow([hit.n] + list(hit.max_digits))

    else:
        records = [{"n": hit.n,
                    "max_digits": {str(p): d for p, d in
                                   zip(primes.primes, hit.max_digits)},
                    "verified": hit.verified} for hit in hits]
        count = len(records)
        fh.write(dump_json({"primes": list(primes.primes),
                            "thresholds": list(primes.thresholds),
                            "hits": records}))
        fh.write("\n")

    return count


def export(hits, fmt, primes):
    """Serialises hits to bytes in ``bfile``, ``csv`` or ``json`` format"""

    buffer = io.StringIO()
    write_hits(hits, fmt, buffer, primes)
    return buffer.getvalue().encode("utf-8")
