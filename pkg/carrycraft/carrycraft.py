#!/usr/bin/env python3

import sys
import logging
import argparse

try:
    from __init__ import __version__, __build__
    import core.error_handling as eh
    import core.oracle as oracle
    import core.analytics as analytics
    import core.theoremlab as theoremlab
    from core.digitcore import GoodSpec, expand, is_good
    from core.primes import PrimeSet
    from core.valuation import valuation_report, coprime_to_primeset
    from core.scanner import ScanRequest, scan, scan_naive, density, \
        write_hits
    from core.report import dump_json, render
    from core.utils import colored_print, parse_int_list, parse_fraction
except ImportError:
    from carrycraft import __version__, __build__
    import carrycraft.core.error_handling as eh
    import carrycraft.core.oracle as oracle
    import carrycraft.core.analytics as analytics
    import carrycraft.core.theoremlab as theoremlab
    from carrycraft.core.digitcore import GoodSpec, expand, is_good
    from carrycraft.core.primes import PrimeSet
    from carrycraft.core.valuation import valuation_report, \
        coprime_to_primeset
    from carrycraft.core.scanner import ScanRequest, scan, scan_naive, \
        density, write_hits
    from carrycraft.core.report import dump_json, render
    from carrycraft.core.utils import colored_print, parse_int_list, \
        parse_fraction

logger = logging.getLogger("main")

FORMATS = ("text", "json", "csv", "bfile")

# Default and accepted output formats of each command
COMMAND_FORMATS = {
    "expand": ("text", ("text", "json")),
    "good": ("text", ("text", "json")),
    "valuation": ("text", ("text", "json")),
    "scan": ("bfile", ("bfile", "csv", "json")),
    "density": ("text", ("text", "json")),
    "theorem": ("json", ("text", "json")),
    "lemma1": ("json", ("json",)),
    "lemma2": ("json", ("json",)),
    "commensurable": ("json", ("json",)),
    "an": ("text", ("text", "json")),
    "catalan": ("text", ("text", "json")),
    "stirling": ("text", ("text", "json")),
    "ellipsoid": ("text", ("text", "json")),
    "oracle": ("json", ("json", "bfile"))
}


def get_args(args=None):

    parser = argparse.ArgumentParser(
        description="Digit criteria for the non-divisibility of central "
                    "binomial coefficients by products of odd primes")

    # GENERAL OPTIONS
    parser.add_argument(
        "--debug", dest="debug", action="store_const", const=True,
        help="Set log to debug mode")
    parser.add_argument(
        "-v", "--version", dest="version", action="store_const", const=True,
        help="Show version and exit.")

    # Output options shared by every mode
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument(
        "--format", dest="format", choices=FORMATS,
        help="Output format. Each mode has its own default.")
    output.add_argument(
        "--out", dest="out",
        help="Write the output to this file instead of stdout")

    subparsers = parser.add_subparsers(help="Select which mode to run",
                                       dest="main_op")

    # EXPAND MODE
    expand_parser = subparsers.add_parser(
        "expand", parents=[output],
        help="Print the base-P digits of N, most significant first")
    expand_parser.add_argument("n", type=int, help="Non-negative integer")
    expand_parser.add_argument(
        "--base", dest="base", type=int, required=True, help="The base P")

    # GOOD MODE
    good_parser = subparsers.add_parser(
        "good", parents=[output],
        help="Check whether N is (P, J)-good")
    good_parser.add_argument("n", type=int, help="Non-negative integer")
    good_parser.add_argument(
        "--base", dest="base", type=int, required=True, help="The base P")
    good_parser.add_argument(
        "--bound", dest="bound", type=int, required=True,
        help="The digit bound J")

    # VALUATION MODE
    valuation_parser = subparsers.add_parser(
        "valuation", parents=[output],
        help="Legendre and carry valuations of N! and C(2N, N)")
    valuation_parser.add_argument("--n", dest="n", type=int, required=True)
    valuation_parser.add_argument(
        "--primes", dest="primes", required=True,
        help="Comma separated odd primes, e.g. 3,5,7")

    # SCAN AND DENSITY MODES
    for name, helper in (("scan", "List every N in a range with "
                                  "gcd(C(2N, N), p1...pk) = 1"),
                         ("density", "Count the hits and the per-prime "
                                     "passes over a range")):
        range_parser = subparsers.add_parser(name, parents=[output],
                                             help=helper)
        range_parser.add_argument(
            "--primes", dest="primes", required=True,
            help="Comma separated odd primes, e.g. 3,5,7")
        range_parser.add_argument(
            "--thresholds", dest="thresholds",
            help="Comma separated digit bounds, one per prime. Defaults to "
                 "(p - 1) / 2.")
        range_parser.add_argument(
            "--from", dest="start", type=int, required=True,
            help="First N of the range")
        range_parser.add_argument(
            "--to", dest="stop", type=int, required=True,
            help="Last N of the range (inclusive)")
        range_parser.add_argument(
            "--jobs", dest="jobs", type=int, default=1,
            help="Number of worker processes")
        range_parser.add_argument(
            "--verify-upto", dest="verify_upto", type=int, default=0,
            help="Check every hit up to this value against the exact "
                 "oracle")
        range_parser.add_argument(
            "--no-leap", dest="leap", action="store_false",
            help="Step through every value instead of jumping over blocks "
                 "with an offending digit")
        if name == "scan":
            range_parser.add_argument(
                "--naive", dest="naive", action="store_const", const=True,
                help="Use the per-N reference scan")

    # THEOREM MODE
    theorem_parser = subparsers.add_parser(
        "theorem", help="Theorem conditions and the descent construction")
    theorem_sub = theorem_parser.add_subparsers(dest="theorem_op")

    verify_parser = theorem_sub.add_parser(
        "verify", parents=[output],
        help="Check the four conditions for N")
    verify_parser.add_argument("--n", dest="n", type=int, required=True)
    verify_parser.add_argument(
        "--primes", dest="primes", required=True, help="p,q,r")
    verify_parser.add_argument(
        "--bounds", dest="bounds", help="A,B,C. Defaults to the smallest bounds "
                                        "allowed by --mode.")
    verify_parser.add_argument(
        "--a", dest="a", type=int, default=1,
        help="Lower end of the interval searches")
    verify_parser.add_argument(
        "--mode", dest="mode", default="theorem",
        choices=[m.value for m in theoremlab.BoundMode],
        help="Bound constraints to enforce")

    descent_parser = theorem_sub.add_parser(
        "descent", parents=[output],
        help="Apply the tail construction once")
    descent_parser.add_argument("--n", dest="n", type=int, required=True)
    descent_parser.add_argument(
        "--primes", dest="primes", required=True, help="p,q")
    descent_parser.add_argument(
        "--bounds", dest="bounds", required=True, help="A,B")

    # LEMMA MODES
    lemma1_parser = subparsers.add_parser(
        "lemma1", parents=[output],
        help="Search exponent pairs whose prime power fits the repunit window")
    lemma1_parser.add_argument("--p", dest="p", type=int)
    lemma1_parser.add_argument("--q", dest="q", type=int)
    lemma1_parser.add_argument("--bound", dest="bound", type=int)
    lemma1_parser.add_argument(
        "--triple", dest="triple", help="p,q,r: search all three pairs")
    lemma1_parser.add_argument(
        "--bounds", dest="bounds", help="A,B,C, used with --triple")
    lemma1_parser.add_argument(
        "--max-exp", dest="max_exp", type=int, required=True)
    lemma1_parser.add_argument(
        "--lsd-first", dest="lsd_first", action="store_const", const=True,
        help="Read the digit condition least significant first")

    lemma2_parser = subparsers.add_parser(
        "lemma2", parents=[output],
        help="Least (P, J)-good integer in [a, ((P - 1) / J) a)")
    lemma2_parser.add_argument("--a", dest="a", type=int, required=True)
    lemma2_parser.add_argument(
        "--base", dest="base", type=int, required=True)
    lemma2_parser.add_argument(
        "--bound", dest="bound", type=int, required=True)

    commensurable_parser = subparsers.add_parser(
        "commensurable", parents=[output],
        help="Decide whether log E1 / log E2 is rational")
    commensurable_parser.add_argument("e1", type=int)
    commensurable_parser.add_argument("e2", type=int)

    # ANALYTICS MODES
    an_parser = subparsers.add_parser(
        "an", parents=[output],
        help="Least integer A(N) that does not divide C(2N, N)")
    an_parser.add_argument("--n", dest="n", type=int, required=True)
    an_parser.add_argument(
        "--epsilon", dest="epsilon",
        help="Also check exp((log N)^(1/2 - e)) < A(N) < "
             "exp((log N)^(1/2 + e))")
    an_parser.add_argument(
        "--cap", dest="cap", type=int, default=analytics.DEFAULT_SEARCH_CAP,
        help="Largest candidate to try")

    catalan_parser = subparsers.add_parser(
        "catalan", parents=[output],
        help="Coprimality of the Catalan number C_N with the primes")
    catalan_parser.add_argument("--n", dest="n", type=int, required=True)
    catalan_parser.add_argument("--primes", dest="primes", required=True)

    stirling_parser = subparsers.add_parser(
        "stirling", parents=[output],
        help="Stirling size estimates of C(2N, N) and C_N")
    stirling_parser.add_argument("--n", dest="n", type=int, required=True)

    ellipsoid_parser = subparsers.add_parser(
        "ellipsoid", parents=[output],
        help="Region test of (A, B, C) against the prime ellipsoid")
    ellipsoid_parser.add_argument(
        "--primes", dest="primes", required=True, help="p,q,r")
    ellipsoid_parser.add_argument(
        "--bounds", dest="bounds", required=True, help="A,B,C")
    ellipsoid_parser.add_argument(
        "--trace", dest="trace", choices=analytics.PLANES,
        help="Emit the plane trace as CSV")
    ellipsoid_parser.add_argument(
        "--samples", dest="samples", type=int, default=16)

    # ORACLE MODE
    oracle_parser = subparsers.add_parser(
        "oracle", help="Exact big integer checks")
    oracle_sub = oracle_parser.add_subparsers(dest="oracle_op")

    oracle_verify = oracle_sub.add_parser(
        "verify", parents=[output],
        help="Compare the scanner and valuations against exact values")
    oracle_verify.add_argument(
        "--from", dest="start", type=int, required=True)
    oracle_verify.add_argument(
        "--to", dest="stop", type=int, required=True)
    oracle_verify.add_argument("--primes", dest="primes", required=True)

    oracle_sequence = oracle_sub.add_parser(
        "sequence", parents=[output],
        help="Exact central binomials or Catalan numbers as a b-file")
    oracle_sequence.add_argument(
        "--name", dest="name", choices=("binom", "catalan"), required=True)
    oracle_sequence.add_argument(
        "--to", dest="stop", type=int, required=True)

    return parser.parse_args(args)


def validate_format(args):
    """Resolves the output format of the selected mode

    Raises
    ------
    SanityError
        When the mode does not produce the requested format.
    """

    default, accepted = COMMAND_FORMATS[args.main_op]

    if args.main_op == "oracle" and args.oracle_op == "sequence":
        default, accepted = "bfile", ("bfile",)

    if args.main_op == "ellipsoid" and args.trace:
        default, accepted = "csv", ("csv",)

    fmt = getattr(args, "format", None) or default
    if fmt not in accepted:
        raise eh.SanityError(
            "'{}' does not produce '{}' output. Choose from: {}".format(
                args.main_op, fmt, ", ".join(accepted)))

    return fmt


def parse_primes(args):
    """Builds the PrimeSet of ``--primes`` and ``--thresholds``"""

    primes = parse_int_list(args.primes, "--primes")
    thresholds = getattr(args, "thresholds", None)
    if thresholds:
        thresholds = parse_int_list(thresholds, "--thresholds")

    return PrimeSet.of(primes, thresholds or None)


def parse_triple(text, size, name):

    values = parse_int_list(text, name)
    if len(values) != size:
        raise eh.SanityError("'{}' needs {} comma separated values. "
                             "Got: '{}'".format(name, size, text))
    return values


def emit(text, args):
    """Writes ``text`` to ``--out`` or stdout"""

    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
        logger.info(colored_print("Output written to {}".format(args.out),
                                  "green_bold"))
    else:
        sys.stdout.write(text)


def _json(obj):
    return dump_json(obj) + "\n"


def expand_mode(args, fmt):

    expansion = expand(args.n, args.base)

    if fmt == "json":
        return _json({"n": args.n, "base": args.base,
                      "digits": list(expansion.digits),
                      "order": "lsd-first"})
    return "{}\n".format(expansion)


def good_mode(args, fmt):

    spec = GoodSpec(args.base, args.bound)
    good = is_good(args.n, spec)

    if spec.degenerate:
        logger.warning(colored_print(
            "J = {} >= P - 1: every integer is ({}, {})-good".format(
                args.bound, args.base, args.bound), "yellow_bold"))

    if fmt == "json":
        return _json({"n": args.n, "base": args.base, "bound": args.bound,
                      "good": good, "degenerate": spec.degenerate,
                      "digits": list(expand(args.n, args.base).digits),
                      "order": "lsd-first"})
    return "{}\n".format(str(good).lower())


def valuation_mode(args, fmt):

    primes = parse_primes(args)
    reports = [valuation_report(args.n, p) for p in primes.primes]
    coprime = coprime_to_primeset(args.n, primes)

    if fmt == "json":
        return _json({"n": args.n, "reports": reports, "coprime": coprime})

    rows = []
    for report in reports:
        row = report.as_dict()
        row["digits"] = str(expand(args.n, report.prime))
        rows.append(row)

    return render("valuation_report.txt", {
        "n": args.n, "reports": rows, "product": primes.product,
        "coprime": coprime})


def _scan_request(args):

    return ScanRequest(primes=parse_primes(args), start=args.start,
                       stop=args.stop, jobs=args.jobs, leap=args.leap,
                       verify_upto=args.verify_upto)


def scan_mode(args, fmt):

    req = _scan_request(args)
    hits = scan_naive(req) if args.naive else scan(req)

    logger.debug("Scanning [{}, {}] for primes {}".format(
        req.start, req.stop, list(req.primes.primes)))

    if args.out:
        with open(args.out, "w") as fh:
            count = write_hits(hits, fmt, fh, req.primes)
    else:
        count = write_hits(hits, fmt, sys.stdout, req.primes)

    logger.info(colored_print("{} hits in [{}, {}]".format(
        count, req.start, req.stop), "green_bold"))


def density_mode(args, fmt):

    report = density(_scan_request(args))

    if fmt == "json":
        return _json(report)

    return render("density_report.txt", {
        "start": report.start, "stop": report.stop,
        "size": report.stop - report.start + 1, "hits": report.hits,
        "density": report.density, "density_float": float(report.density),
        "passes": sorted(report.passes.items()),
        "degenerate": report.degenerate})


def theorem_mode(args, fmt):

    if args.theorem_op == "descent":
        p, q = parse_triple(args.primes, 2, "--primes")
        a_bound, b_bound = parse_triple(args.bounds, 2, "--bounds")
        step = theoremlab.descent_step(args.n, p, a_bound, q, b_bound)

        if fmt == "json":
            return _json(step)
        return render("descent_report.txt", {
            "s": step, "p": p, "q": q, "a_bound": a_bound,
            "b_bound": b_bound,
            "goodness": sorted(step.candidate_goodness.items())})

    if args.theorem_op != "verify":
        raise eh.SanityError("theorem needs a sub mode: verify or descent")

    triple = theoremlab.PrimeTriple(*parse_triple(args.primes, 3,
                                                  "--primes"))
    mode = theoremlab.BoundMode(args.mode)
    if args.bounds:
        bounds = theoremlab.BoundTriple(*parse_triple(args.bounds, 3,
                                                      "--bounds"))
    elif mode is theoremlab.BoundMode.THEOREM:
        bounds = theoremlab.BoundTriple.theorem(triple)
    else:
        bounds = theoremlab.BoundTriple.criterion(triple)

    report = theoremlab.verify_theorem_conditions(
        args.n, triple, bounds, args.a, mode)

    if fmt == "json":
        return _json(report)
    return render("theorem_report.txt", {
        "r": report, "inequalities": sorted(report.inequalities.items()),
        "goodness": sorted(report.goodness.items())})


def lemma1_mode(args, fmt):

    msd_first = not args.lsd_first

    if args.triple:
        if not args.bounds:
            raise eh.SanityError("--triple needs --bounds A,B,C")
        triple = theoremlab.PrimeTriple(*parse_triple(args.triple, 3,
                                                      "--triple"))
        bounds = theoremlab.BoundTriple(*parse_triple(args.bounds, 3,
                                                      "--bounds"))
        return _json(theoremlab.lemma1_triple_search(
            triple, bounds, args.max_exp, msd_first))

    if None in (args.p, args.q, args.bound):
        raise eh.SanityError("lemma1 needs --p, --q and --bound, or "
                             "--triple and --bounds")

    return _json(theoremlab.lemma1_search(
        args.p, args.q, args.bound, args.max_exp,
        most_significant_first=msd_first))


def lemma2_mode(args, fmt):

    spec = GoodSpec(args.base, args.bound)

    # an empty interval is a domain error (exit status 1)
    value = theoremlab.find_good_in_interval(args.a, spec)

    return _json({
        "a": args.a, "base": args.base, "bound": args.bound,
        "upper": theoremlab.interval_upper(args.a, spec),
        "status": "not_found" if value is None else "found",
        "value": value})


def commensurable_mode(args, fmt):

    ratio = theoremlab.log_ratio(args.e1, args.e2)

    return _json({"e1": args.e1, "e2": args.e2,
                  "commensurable": ratio is not None, "ratio": ratio})


def an_mode(args, fmt):

    result = analytics.least_nondivisor(args.n, args.cap)
    record = {"n": args.n, "value": result.value}

    if args.epsilon:
        epsilon = parse_fraction(args.epsilon, "--epsilon")
        lower, upper = analytics.an_bounds(args.n, epsilon)
        record.update({
            "epsilon": epsilon, "lower": lower, "upper": upper,
            "holds": analytics.an_bounds_check(args.n, epsilon, args.cap)})

    if fmt == "json":
        return _json(record)

    lines = ["{}".format(result.value)]
    if args.epsilon:
        lines.append("{:.6g} < {} < {:.6g}: {}".format(
            record["lower"], result.value, record["upper"],
            str(record["holds"]).lower()))

    return "\n".join(lines) + "\n"


def catalan_mode(args, fmt):

    primes = parse_primes(args)
    valuations = analytics.catalan_valuations(args.n, primes)
    coprime = analytics.catalan_coprime(args.n, primes)

    if fmt == "json":
        return _json({"n": args.n, "primes": list(primes.primes),
                      "valuations": {str(p): v for p, v in
                                     valuations.items()},
                      "coprime": coprime, "note": analytics.CATALAN_NOTE})

    return render("catalan_report.txt", {
        "n": args.n, "primes": list(primes.primes),
        "valuations": sorted(valuations.items()), "product": primes.product,
        "coprime": coprime, "note": analytics.CATALAN_NOTE})


def stirling_mode(args, fmt):

    estimate = analytics.stirling_estimates(args.n)

    exact_log = None
    rel_error = None
    if args.n <= oracle.ORACLE_GUARD:
        exact_log = oracle.exact_log_binom(args.n)
        rel_error = abs(estimate.log_binom - exact_log) / exact_log

    if fmt == "json":
        record = estimate.as_dict()
        record.update({"exact_log_binom": exact_log,
                       "relative_error": rel_error})
        return _json(record)

    return render("stirling_report.txt", {
        "e": estimate, "exact_log": exact_log, "rel_error": rel_error,
        "low_n": analytics.LOW_N})


def ellipsoid_mode(args, fmt):

    p, q, r = parse_triple(args.primes, 3, "--primes")
    a, b, c = parse_triple(args.bounds, 3, "--bounds")
    spec = analytics.EllipsoidSpec(p, q, r, a, b, c)

    if args.trace:
        return analytics.trace_csv(
            analytics.trace_points(spec, args.trace, args.samples))

    total = spec.term("x") + spec.term("y") + spec.term("z")
    region = analytics.region_test(spec)
    planes = analytics.plane_tests(spec)

    if fmt == "json":
        return _json({"primes": [p, q, r], "bounds": [a, b, c],
                      "sum": total, "region": region, "planes": planes})

    return render("ellipsoid_report.txt", {
        "s": spec, "total": total, "region": region,
        "planes": sorted(planes.items())})


def oracle_mode(args, fmt):

    if args.oracle_op == "sequence":
        sequence = oracle.binom_central_sequence if args.name == "binom" \
            else oracle.catalan_sequence
        return "".join("{} {}\n".format(n, value)
                       for n, value in sequence(args.stop))

    if args.oracle_op != "verify":
        raise eh.SanityError("oracle needs a sub mode: verify or sequence")

    primes = parse_primes(args)
    mismatches = oracle.cross_check(args.start, args.stop, primes)

    if mismatches:
        emit(_json({"mismatches": mismatches}), args)
        raise eh.VerificationError(
            "{} mismatches between the oracle and the fast paths in "
            "[{}, {}]".format(len(mismatches), args.start, args.stop),
            mismatches=mismatches)

    logger.info(colored_print("Oracle and fast paths agree on [{}, {}]"
                              .format(args.start, args.stop), "green_bold"))

    return _json({"mismatches": []})


MODES = {
    "expand": expand_mode,
    "good": good_mode,
    "valuation": valuation_mode,
    "scan": scan_mode,
    "density": density_mode,
    "theorem": theorem_mode,
    "lemma1": lemma1_mode,
    "lemma2": lemma2_mode,
    "commensurable": commensurable_mode,
    "an": an_mode,
    "catalan": catalan_mode,
    "stirling": stirling_mode,
    "ellipsoid": ellipsoid_mode,
    "oracle": oracle_mode
}


def dispatch(args):
    """Runs the selected mode and writes its output

    Returns
    -------
    int
        Exit status: 0 on success, 1 on a domain error, 2 on an oracle
        mismatch.
    """

    try:
        fmt = validate_format(args)
        text = MODES[args.main_op](args, fmt)
        if text is not None:
            emit(text, args)

    except eh.VerificationError as ve:
        logger.error(colored_print(ve.value, "red_bold"))
        return 2

    except eh.DomainError as de:
        logger.error(colored_print(de.value, "red_bold"))
        return 1

    return 0


def setup_logger(debug=False):

    if debug:
        logger.setLevel(logging.DEBUG)

        # create formatter
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s')

    else:
        logger.setLevel(logging.INFO)

        # create special formatter for info logs
        formatter = logging.Formatter('%(message)s')

    # stdout carries the machine output, logs go to stderr
    ch = logging.StreamHandler(sys.stderr)
    ch.setLevel(logging.DEBUG)
    ch.setFormatter(formatter)

    logger.handlers = [ch]


def run(argv=None):
    """Parses ``argv`` and runs the selected mode, returning the exit
    status"""

    argv = sys.argv[1:] if argv is None else list(argv)

    # argparse exits with 2 on usage errors; 2 is reserved for mismatches
    try:
        args = get_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1

    if args.version:
        print(__version__)
        return 0

    setup_logger(args.debug)

    if not args.main_op:
        logger.error(colored_print("A mode is required. See carrycraft -h",
                                   "red_bold"))
        return 1

    logger.debug("carrycraft version {} build {}".format(__version__,
                                                         __build__))

    return dispatch(args)


def main():

    sys.exit(run())


if __name__ == '__main__':

    main()
