"""
Checkable content of the three-prime non-divisibility argument for
central binomial coefficients: commensurability, the exponent inequalities
and their digit conditions, the good-number interval search, the S and
tail constructions, and the four theorem conditions.

Every comparison is done in exact rational arithmetic
(:py:class:`fractions.Fraction` or integer cross-multiplication). There is
no floating point in this module.
"""

import logging

from enum import Enum
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2

try:
    import core.error_handling as eh
    from core.digitcore import GoodSpec, expand, is_good, tail, next_good
    from core.primes import check_odd_prime, totient
except ImportError:
    import carrycraft.core.error_handling as eh
    from carrycraft.core.digitcore import GoodSpec, expand, is_good, tail, \
        next_good
    from carrycraft.core.primes import check_odd_prime, totient

logger = logging.getLogger("main.{}".format(__name__))


class BoundMode(Enum):
    """How a :py:class:`BoundTriple` relates to its primes.

    ``THEOREM`` asks for p/2 <= A, q/2 <= B, r/2 <= C. ``CRITERION`` uses the
    non-divisibility digit bounds (p - 1)/2, (q - 1)/2, (r - 1)/2, which sit
    just below them.
    """
    THEOREM = "theorem"
    CRITERION = "criterion"


class Lemma1Verdict(Enum):
    ALL_SMALL = "all_small"
    MIXED_OK = "mixed_ok"
    FAIL = "fail"


@dataclass(frozen=True)
class PrimeTriple:
    """Three odd primes p < q < r"""

    p: int
    q: int
    r: int

    def __post_init__(self):
        for x in (self.p, self.q, self.r):
            check_odd_prime(x)
        if not self.p < self.q < self.r:
            raise eh.InvalidPrimeError(
                "Primes must satisfy p < q < r. Got: {}, {}, {}".format(
                    self.p, self.q, self.r))

    def as_tuple(self):
        return self.p, self.q, self.r


@dataclass(frozen=True)
class BoundTriple:
    """Digit bounds A <= B <= C"""

    a: int
    b: int
    c: int

    def __post_init__(self):
        if min(self.a, self.b, self.c) < 1:
            raise eh.InvalidBoundError(
                "Bounds must be positive. Got: {}, {}, {}".format(
                    self.a, self.b, self.c))
        if not self.a <= self.b <= self.c:
            raise eh.InvalidBoundError(
                "Bounds must satisfy A <= B <= C. Got: {}, {}, {}".format(
                    self.a, self.b, self.c))

    @classmethod
    def criterion(cls, triple):
        """The digit criterion bounds ((p-1)/2, (q-1)/2, (r-1)/2)"""
        return cls((triple.p - 1) // 2, (triple.q - 1) // 2,
                   (triple.r - 1) // 2)

    @classmethod
    def theorem(cls, triple):
        """The smallest bounds with p/2 <= A, q/2 <= B, r/2 <= C"""
        return cls((triple.p + 1) // 2, (triple.q + 1) // 2,
                   (triple.r + 1) // 2)

    def as_tuple(self):
        return self.a, self.b, self.c

    def check(self, triple, mode):
        """Lists the constraints of ``mode`` that these bounds violate

        Returns
        -------
        list of str
            Empty when the bounds fit the mode.
        """

        violations = []
        for name, bound, prime in zip("ABC", self.as_tuple(),
                                      triple.as_tuple()):
            if mode is BoundMode.THEOREM and 2 * bound < prime:
                violations.append("{}/2 <= {} fails for {} = {}".format(
                    prime, name, name, bound))
            if mode is BoundMode.CRITERION and bound < (prime - 1) // 2:
                violations.append("{} = {} is below the digit criterion "
                                  "{}".format(name, bound, (prime - 1) // 2))
        return violations

    def totient_check(self, triple):
        """phi(p)/2 < p/2 <= A for each prime/bound pair"""
        return all(Fraction(totient(pr), 2) < Fraction(pr, 2) <= bound
                   for pr, bound in zip(triple.as_tuple(), self.as_tuple()))


def _minimal_root(e):

    for k in range(e.bit_length(), 1, -1):
        root, exact = gmpy2.iroot(e, k)
        if exact:
            return int(root), k
    return e, 1


def log_ratio(e1, e2):
    """log e1 / log e2 as an exact Fraction, or None when irrational"""

    for e in (e1, e2):
        if not isinstance(e, int) or e < 2:
            raise eh.InvalidBaseError(
                "Commensurability needs integers >= 2. Got: {}".format(e))

    root1, k1 = _minimal_root(e1)
    root2, k2 = _minimal_root(e2)

    if root1 != root2:
        return None
    return Fraction(k1, k2)


def is_commensurable(e1, e2):
    """True iff log e1 / log e2 is rational.

    That happens exactly when e1 and e2 are powers of one common integer,
    which is decided by reducing both to their smallest integer root.
    """
    return log_ratio(e1, e2) is not None


def _check_pairs(pairs):

    for bound, prime in pairs:
        check_odd_prime(prime)
        if bound < 1:
            raise eh.InvalidBoundError(
                "Bounds must be positive. Got: {}".format(bound))


def inequality_sum(*pairs):
    """Sum of bound / (prime - 1) over ``(bound, prime)`` pairs, exactly"""

    _check_pairs(pairs)
    return sum((Fraction(bound, prime - 1) for bound, prime in pairs),
               Fraction(0))


def inequality2(a, p, b, q):
    """A/(p - 1) + B/(q - 1) >= 1"""
    return inequality_sum((a, p), (b, q)) >= 1


def inequality3(a, p, b, q, c, r):
    """A/(p - 1) + B/(q - 1) + C/(r - 1) >= 1"""
    return inequality_sum((a, p), (b, q), (c, r)) >= 1


def lemma1_digit_condition(x, base, bound, most_significant_first=True):
    """Classifies the base-``base`` digits of ``x`` against ``bound``

    ``ALL_SMALL`` when every digit is at most the bound. Otherwise the digits
    are read most significant first (or least significant first when
    ``most_significant_first`` is False), skipping digits equal to the
    bound: ``MIXED_OK`` when the first other digit is below the bound,
    ``FAIL`` when it is above.

    Returns
    -------
    Lemma1Verdict
    """

    digits = expand(x, base).digits

    if all(d <= bound for d in digits):
        return Lemma1Verdict.ALL_SMALL

    ordered = reversed(digits) if most_significant_first else digits
    for d in ordered:
        if d == bound:
            continue
        return Lemma1Verdict.MIXED_OK if d < bound else Lemma1Verdict.FAIL

    return Lemma1Verdict.FAIL


@dataclass(frozen=True)
class Lemma1Witness:
    """An exponent pair whose prime power sits inside the repunit window

    Attributes
    ----------
    label : str
        Which pair of primes: ``pq``, ``qr`` or ``pr``.
    bases : tuple
        ``(small, large)`` primes.
    exponents : tuple
        ``(alpha, beta)``, ``(beta, Gamma)`` or ``(alpha, Gamma')``.
    centre : Fraction
        (J/2) (large**e - 1) / (large - 1).
    verdict : Lemma1Verdict
        Digit condition of small**e1 in base ``large``.
    """

    label: str
    bases: tuple
    exponents: tuple
    centre: Fraction
    verdict: Lemma1Verdict

    def as_dict(self):
        return {"label": self.label, "bases": list(self.bases),
                "exponents": list(self.exponents), "centre": self.centre,
                "verdict": self.verdict.value}


def lemma1_search(p, q, bound, max_exp, label="pq",
                  most_significant_first=True):
    """Exponent pairs (e1, e2), 1 <= e1, e2 <= max_exp, with

        | p**e1 - (J/2)(q**e2 - 1)/(q - 1) | < (J/2)(q**e2 - 1)/(q - 1)

    and a digit condition of p**e1 in base q other than ``FAIL``.

    The inequality is equivalent to 0 < p**e1 < J (q**e2 - 1)/(q - 1), which
    is compared by cross multiplication.

    Returns
    -------
    list of Lemma1Witness
    """

    check_odd_prime(p)
    check_odd_prime(q)
    if p == q:
        raise eh.InvalidPrimeError("The exponent search needs two distinct primes")
    if bound < 1:
        raise eh.InvalidBoundError("J must be >= 1. Got: {}".format(bound))
    if max_exp < 1:
        raise eh.InvalidBoundError(
            "max_exp must be >= 1. Got: {}".format(max_exp))

    witnesses = []
    for e1 in range(1, max_exp + 1):
        x = p ** e1
        verdict = lemma1_digit_condition(x, q, bound, most_significant_first)
        if verdict is Lemma1Verdict.FAIL:
            continue
        for e2 in range(1, max_exp + 1):
            repunit = (q ** e2 - 1) // (q - 1)
            if x < bound * repunit:
                witnesses.append(Lemma1Witness(
                    label=label, bases=(p, q), exponents=(e1, e2),
                    centre=Fraction(bound, 2) * repunit, verdict=verdict))

    logger.debug("Exponent search ({}, {}, J={}): {} witnesses".format(
        p, q, bound, len(witnesses)))

    return witnesses


def lemma1_triple_search(triple, bounds, max_exp,
                         most_significant_first=True):
    """Runs :py:func:`lemma1_search` for the three prime pairs of a triple

    Returns
    -------
    dict
        ``pq`` for (p, q, B), ``qr`` for (q, r, C), ``pr`` for (p, r, C).
    """

    return {
        "pq": lemma1_search(triple.p, triple.q, bounds.b, max_exp, "pq",
                              most_significant_first),
        "qr": lemma1_search(triple.q, triple.r, bounds.c, max_exp, "qr",
                              most_significant_first),
        "pr": lemma1_search(triple.p, triple.r, bounds.c, max_exp, "pr",
                              most_significant_first)
    }


def smallest_S(base, bound, m):
    """S = P**m - A (P**m - 1)/(P - 1)

    Parameters
    ----------
    base : int
        P.
    bound : int
        A, expected <= P - 1.
    m : int
        Exponent, >= 1.

    Raises
    ------
    DegenerateBoundError
        When the result is not positive, or m < 1.
    """

    if m < 1:
        raise eh.DegenerateBoundError("m must be >= 1. Got: {}".format(m))

    power = base ** m
    s = power - bound * ((power - 1) // (base - 1))

    if s <= 0:
        raise eh.DegenerateBoundError(
            "S = {} is not positive for P={}, A={}, m={}".format(
                s, base, bound, m))

    assert s == Fraction(base - bound - 1, base - 1) * (power - 1) + 1

    return s


def interval_upper(a, spec):
    """The open upper end ((P - 1)/J) a of the good-number interval"""
    return Fraction(spec.base - 1, spec.bound) * a


def find_good_in_interval(a, spec):
    """Least (P, J)-good integer in [a, ((P - 1)/J) a)

    Parameters
    ----------
    a : int
        Positive lower end.
    spec : GoodSpec
        ``J >= 1``.

    Returns
    -------
    int or None
        None when the interval holds no good integer.

    Raises
    ------
    EmptyIntervalError
        When J >= P - 1, so that (P - 1)/J <= 1.
    """

    if a < 1:
        raise eh.InvalidBoundError("a must be positive. Got: {}".format(a))
    if spec.bound < 1:
        raise eh.InvalidBoundError("J must be >= 1. Got: {}".format(
            spec.bound))
    if spec.degenerate:
        raise eh.EmptyIntervalError(
            "[{0}, {1}/{2} * {0}) is empty for (P, J) = ({3}, {2})".format(
                a, spec.base - 1, spec.bound, spec.base))

    candidate = next_good(a, spec)

    # candidate < (P - 1) a / J
    if candidate * spec.bound < (spec.base - 1) * a:
        return candidate
    return None


@dataclass(frozen=True)
class ComponentResult:
    """Outcome of one U search of a theorem condition

    ``status`` is ``found``, ``not_found`` or ``empty_interval``.
    """

    name: str
    spec: GoodSpec
    a: int
    upper: Fraction
    status: str
    u: int = None
    n_plus_u: int = None

    def as_dict(self):
        return {"name": self.name, "base": self.spec.base,
                "bound": self.spec.bound, "a": self.a, "upper": self.upper,
                "status": self.status, "u": self.u,
                "n_plus_u": self.n_plus_u}


@dataclass(frozen=True)
class ConditionReport:
    """Everything :py:func:`verify_theorem_conditions` finds for one N"""

    n: int
    triple: PrimeTriple
    bounds: BoundTriple
    a: int
    mode: BoundMode
    inequalities: dict
    sums: dict
    components: list
    goodness: dict
    bound_violations: list = field(default_factory=list)
    totient_ok: bool = True
    degenerate: dict = field(default_factory=dict)

    @property
    def all_inequalities(self):
        return all(self.inequalities.values())

    @property
    def final_verdict(self):
        """bool: N is (p, A)-, (q, B)- and (r, C)-good at once"""
        return all(self.goodness.values())

    def as_dict(self):
        return {
            "n": self.n,
            "primes": list(self.triple.as_tuple()),
            "bounds": list(self.bounds.as_tuple()),
            "a": self.a,
            "mode": self.mode.value,
            "inequalities": self.inequalities,
            "sums": self.sums,
            "components": [c.as_dict() for c in self.components],
            "goodness": {str(k): v for k, v in self.goodness.items()},
            "final_verdict": self.final_verdict,
            "bound_violations": self.bound_violations,
            "totient_check": self.totient_ok,
            "degenerate": {str(k): v for k, v in self.degenerate.items()}
        }


def _component(name, n, a, spec):

    upper = interval_upper(a, spec)
    try:
        u = find_good_in_interval(a, spec)
    except eh.EmptyIntervalError:
        logger.debug("{}: empty interval for {}".format(name, spec))
        return ComponentResult(name, spec, a, upper, "empty_interval")

    if u is None:
        return ComponentResult(name, spec, a, upper, "not_found")
    return ComponentResult(name, spec, a, upper, "found", u, n + u)


def verify_theorem_conditions(n, triple, bounds, a, mode=BoundMode.THEOREM):
    """Checks the four theorem conditions for N

    Parameters
    ----------
    n : int
        Must be (p, A)-good and (q, B)-good.
    triple : PrimeTriple
    bounds : BoundTriple
    a : int
        Lower end of the U intervals.
    mode : BoundMode
        In ``THEOREM`` mode bounds below p/2, q/2, r/2 are rejected; in
        ``CRITERION`` mode they are only reported.

    Returns
    -------
    ConditionReport

    Raises
    ------
    HypothesisError
        When N is not (p, A)- and (q, B)-good, or the bounds violate the
        theorem mode.
    """

    p, q, r = triple.as_tuple()
    A, B, C = bounds.as_tuple()
    specs = {p: GoodSpec(p, A), q: GoodSpec(q, B), r: GoodSpec(r, C)}

    violations = bounds.check(triple, mode)
    if violations and mode is BoundMode.THEOREM:
        raise eh.HypothesisError("; ".join(violations))

    for prime in (p, q):
        if not is_good(n, specs[prime]):
            raise eh.HypothesisError(
                "N = {} is not ({}, {})-good: base {} digits {}".format(
                    n, prime, specs[prime].bound, prime,
                    str(expand(n, prime))))

    sums = {
        "qr": inequality_sum((B, q), (C, r)),
        "pr": inequality_sum((A, p), (C, r)),
        "pq": inequality_sum((A, p), (B, q)),
        "pqr": inequality_sum((A, p), (B, q), (C, r))
    }
    inequalities = {k: v >= 1 for k, v in sums.items()}

    components = [
        _component("U'", n, a, specs[q]),
        _component("U''", n, a, specs[p]),
        _component("U", n, a, specs[p])
    ]

    goodness = {prime: is_good(n, spec) for prime, spec in specs.items()}

    return ConditionReport(
        n=n, triple=triple, bounds=bounds, a=a, mode=mode,
        inequalities=inequalities, sums=sums, components=components,
        goodness=goodness, bound_violations=violations,
        totient_ok=bounds.totient_check(triple),
        degenerate={prime: spec.degenerate for prime, spec in specs.items()})


@dataclass(frozen=True)
class DescentStep:
    """One application of the tail construction to a (p, A)-good N

    Attributes
    ----------
    already_good : bool
        N has no base-q digit above B; nothing to do.
    j : int
        Largest index with a base-q digit above B.
    i : int
        Least index above j with a base-q digit below B.
    tail : int
        T, the base-q tail of N below index i.
    m : int
        Lowest index with a nonzero base-p digit.
    s : int
        S = p**m - A (p**m - 1)/(p - 1).
    branch : str
        ``subtract`` (T >= S, N* = N - S) or ``add`` (N* = N + U).
    u : int
        Least (p, A)-good integer >= q**i - T, for the ``add`` branch.
    u_in_interval : bool
        U in [q**i - T, ((p - 1)/A)(q**i - T)), None when that interval is
        empty.
    candidate : int
        N*.
    candidate_goodness : dict
        Prime -> goodness of N* for (p, A) and (q, B).
    """

    n: int
    already_good: bool
    j: int = None
    i: int = None
    tail: int = None
    m: int = None
    s: int = None
    branch: str = None
    u: int = None
    u_in_interval: bool = None
    candidate: int = None
    candidate_goodness: dict = field(default_factory=dict)

    def as_dict(self):
        return {k: (v if k != "candidate_goodness"
                    else {str(p): g for p, g in v.items()})
                for k, v in self.__dict__.items()}


def descent_step(n, p, a_bound, q, b_bound):
    """Applies the tail construction once to N

    Reads the base-q expansion of a (p, A)-good N, locates the offending
    digit block, and builds the candidate N* either by subtracting S or by
    adding the next (p, A)-good U above q**i - T. The candidate is reported
    with its goodness; no claim about it is asserted.

    Raises
    ------
    HypothesisError
        When N is not (p, A)-good.
    """

    check_odd_prime(p)
    check_odd_prime(q)
    spec_p = GoodSpec(p, a_bound)
    spec_q = GoodSpec(q, b_bound)

    if n < 1:
        raise eh.DomainError("N must be positive. Got: {}".format(n))
    if b_bound < 1:
        raise eh.InvalidBoundError("B must be >= 1. Got: {}".format(b_bound))
    if not is_good(n, spec_p):
        raise eh.HypothesisError("N = {} is not ({}, {})-good".format(
            n, p, a_bound))

    q_digits = expand(n, q).digits
    above = [idx for idx, d in enumerate(q_digits) if d > b_bound]
    if not above:
        return DescentStep(n=n, already_good=True)

    j = max(above)
    # digits past the top are zeros, which are below B
    i = next((idx for idx in range(j + 1, len(q_digits))
              if q_digits[idx] < b_bound), len(q_digits))

    t = tail(n, q, i)
    p_digits = expand(n, p).digits
    m = next(idx for idx, d in enumerate(p_digits) if d)
    # m = 0 leaves an empty geometric sum, S = 1
    s = smallest_S(p, a_bound, m) if m >= 1 else 1

    u = None
    u_in_interval = None
    if t >= s:
        branch = "subtract"
        candidate = n - s
    else:
        branch = "add"
        low = q ** i - t
        u = next_good(low, spec_p)
        if not spec_p.degenerate:
            u_in_interval = u * a_bound < (p - 1) * low
        candidate = n + u

    return DescentStep(
        n=n, already_good=False, j=j, i=i, tail=t, m=m, s=s, branch=branch,
        u=u, u_in_interval=u_in_interval, candidate=candidate,
        candidate_goodness={p: is_good(candidate, spec_p),
                            q: is_good(candidate, spec_q)})
