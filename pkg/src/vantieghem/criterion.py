"""The product criterion, evaluated by two independent paths.

For p > 2 prime and a base 2 <= b <= p-1,

    (b + 1)(b**2 + 1) ... (b**(p-1) + 1)  ==  1   (mod (b**p - 1)/(b - 1)).

product_naive multiplies the p-1 factors in index order.  product_structured
regroups them by the coset decomposition of {1, ..., p-1} under doubling:
within one coset the exponents are a, 2a, 4a, ..., so the factors telescope
as (y + 1)(y**2 + 1)(y**4 + 1)... with y = b**a mod M, computed by repeated
squaring; every coset's partial product is itself 1 mod M.  The two paths
share no loop structure, so their agreement is a test artifact in its own
right.  For composite p only the naive path is defined, which is what lets
the sweep probe the converse direction empirically.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass

from .cosets import CosetDecomposition, decompose
from .errors import DomainError, PathUnavailable
from .modmath import RepunitModulus, build_modulus, exact_div
from .oracle import is_prime_trial


class Verdict(enum.Enum):
    # "prime-consistent", not "prime": only the forward direction is proven
    # for general bases; the converse is checked empirically by sweep().
    PRIME_CONSISTENT = "prime-consistent"
    COMPOSITE_INDICATED = "composite-indicated"


class Path(enum.Enum):
    NAIVE = "naive"
    STRUCTURED = "structured"
    BOTH = "both"


def product_naive(rm: RepunitModulus) -> int:
    """The full product mod M, one factor per step.

    b**n is carried by a single multiplication by b per step, and every
    multiplication is followed by a reduction, so intermediates stay below
    M**2.  Defined for composite p as well.
    """
    acc = 1
    y = 1
    for _ in range(1, rm.p):
        y = rm.reduce(y * rm.b)
        acc = rm.reduce(acc * (y + 1))
    return acc


def coset_partial_products(rm: RepunitModulus, d: CosetDecomposition) -> tuple[int, ...]:
    """The per-coset products, each mod M; for prime p each one equals 1.

    Coset i contributes (y + 1)(y**2 + 1)...(y**(2**(r-1)) + 1) with
    y = b**a_i mod M: r - 1 squarings and r multiplications, reducing after
    every multiplication.
    """
    if d.p != rm.p:
        raise DomainError(f"decomposition is for p={d.p}, modulus for p={rm.p}")
    partials = []
    for a in d.reps:
        y = rm.pow_b_mod(a)
        partial = rm.reduce(y + 1)
        for _ in range(d.r - 1):
            y = rm.reduce(y * y)
            partial = rm.reduce(partial * (y + 1))
        partials.append(partial)
    return tuple(partials)


def product_structured(rm: RepunitModulus, d: CosetDecomposition) -> int:
    """The same product as product_naive, regrouped coset by coset.

    Requires d = decompose(rm.p), hence prime p.  Equal to product_naive
    because the cosets partition {1, ..., p-1}.
    """
    acc = 1
    for partial in coset_partial_products(rm, d):
        acc = rm.reduce(acc * partial)
    return acc


def telescope_check(x: int, r: int) -> bool:
    """(x + 1)(x**2 + 1)...(x**(2**(r-1)) + 1) == (x**(2**r) - 1)/(x - 1).

    Both sides are evaluated as exact integers, for x >= 2 and r >= 1; the
    identity always holds (repeated difference of squares).  This exists as
    a property-test oracle for the telescoping step; the modular paths never
    divide.
    """
    lhs = 1
    power = x
    for _ in range(r):
        lhs *= power + 1
        power *= power
    return lhs == exact_div(power - 1, x - 1)


@dataclass(frozen=True)
class TestReport:
    """Outcome of one (b, p) trial.

    verdict is PRIME_CONSISTENT exactly when residue == 1; residue < M.
    elapsed maps each evaluated path name to wall time in milliseconds.
    paths_agree is set only when both paths ran.
    """

    b: int
    p: int
    modulus_digits: int
    residue: int
    verdict: Verdict
    path: Path
    paths_agree: bool | None
    elapsed: dict[str, float]

    def to_record(self) -> dict:
        """JSON-ready record; all integers are decimal strings."""
        return {
            "b": str(self.b),
            "p": str(self.p),
            "modulus_digits": str(self.modulus_digits),
            "residue": str(self.residue),
            "verdict": self.verdict.value,
            "path": self.path.value,
            "paths_agree": self.paths_agree,
            "elapsed": dict(self.elapsed),
        }


def run_test(b: int, p: int, path: Path = Path.NAIVE, *, allow_large_base: bool = False) -> TestReport:
    """Evaluate the criterion for (b, p) along the requested path(s).

    The criterion is stated for 2 <= b <= p-1; larger bases are refused
    unless allow_large_base is set (the congruence b**p == 1 mod M holds
    regardless, but results outside the stated range are the caller's
    interpretation).  The structured path needs prime p.
    """
    rm = build_modulus(b, p)
    if b > p - 1 and not allow_large_base:
        raise DomainError(
            f"base {b} exceeds p-1 = {p - 1}; pass allow_large_base to run anyway"
        )
    want_naive = path in (Path.NAIVE, Path.BOTH)
    want_structured = path in (Path.STRUCTURED, Path.BOTH)
    if want_structured and not is_prime_trial(p):
        raise PathUnavailable(f"structured path requires prime p, got composite {p}")

    residues: dict[str, int] = {}
    elapsed: dict[str, float] = {}
    if want_naive:
        t0 = time.perf_counter()
        residues["naive"] = product_naive(rm)
        elapsed["naive"] = (time.perf_counter() - t0) * 1000.0
    if want_structured:
        d = decompose(p)
        t0 = time.perf_counter()
        residues["structured"] = product_structured(rm, d)
        elapsed["structured"] = (time.perf_counter() - t0) * 1000.0

    paths_agree = None
    if path is Path.BOTH:
        paths_agree = residues["naive"] == residues["structured"]
    residue = residues["naive"] if want_naive else residues["structured"]
    verdict = Verdict.PRIME_CONSISTENT if residue == 1 else Verdict.COMPOSITE_INDICATED
    return TestReport(
        b=b,
        p=p,
        modulus_digits=len(str(rm.M)),
        residue=residue,
        verdict=verdict,
        path=path,
        paths_agree=paths_agree,
        elapsed=elapsed,
    )


@dataclass(frozen=True)
class SweepEntry:
    """One (p, b) row: ground-truth primality vs the criterion's verdict."""

    p: int
    b: int
    prime: bool
    residue_one: bool
    paths_agree: bool | None

    @property
    def verdict_matches(self) -> bool:
        return self.prime == self.residue_one

    def to_record(self) -> dict:
        return {
            "p": str(self.p),
            "b": str(self.b),
            "prime": self.prime,
            "residue_one": self.residue_one,
            "paths_agree": self.paths_agree,
        }


@dataclass(frozen=True)
class SweepReport:
    """Tabulated verdicts for every odd p in range and every base.

    Entries are in (p, b) order.  A mismatch (verdict disagrees with trial
    division) is a hard failure when p is prime, when b = 2, or when the two
    paths disagree; a composite giving residue 1 with b > 2 is listed as an
    anomaly only, since the converse is not established for such bases.
    """

    p_min: int
    p_max: int
    bases: tuple[int, ...]
    entries: tuple[SweepEntry, ...]

    def mismatches(self) -> tuple[SweepEntry, ...]:
        return tuple(e for e in self.entries if not e.verdict_matches)

    def failures(self) -> tuple[SweepEntry, ...]:
        """Mismatches that falsify something this package relies on."""
        out = []
        for e in self.entries:
            if e.paths_agree is False:
                out.append(e)
            elif not e.verdict_matches and (e.prime or e.b == 2):
                out.append(e)
        return tuple(out)

    def anomalies(self) -> tuple[SweepEntry, ...]:
        """Composite p with residue 1 for a base > 2 (informational)."""
        return tuple(
            e for e in self.entries if not e.prime and e.residue_one and e.b != 2
        )

    @property
    def agreement_count(self) -> int:
        return sum(1 for e in self.entries if e.verdict_matches)

    def to_record(self) -> dict:
        return {
            "p_min": str(self.p_min),
            "p_max": str(self.p_max),
            "bases": [str(b) for b in self.bases],
            "total": str(len(self.entries)),
            "agreements": str(self.agreement_count),
            "disagreements": str(len(self.mismatches())),
            "failures": [e.to_record() for e in self.failures()],
            "anomalies": [e.to_record() for e in self.anomalies()],
            "entries": [e.to_record() for e in self.entries],
        }


def sweep(
    p_min: int,
    p_max: int,
    bases: list[int] | tuple[int, ...],
    *,
    allow_large_base: bool = False,
) -> SweepReport:
    """Run the criterion for every odd p in [p_min, p_max] and every base.

    Bases below 2 are ignored; bases above p-1 are skipped per p unless
    allow_large_base is set.  For prime p both paths run and must agree; for
    composite p only the naive product is defined.  An empty range yields an
    empty report.  Entries come out in (p, b) order regardless of how the
    work is scheduled.
    """
    wanted = tuple(sorted({b for b in bases if b >= 2}))
    entries: list[SweepEntry] = []
    start = max(p_min, 3)
    if start % 2 == 0:
        start += 1
    for p in range(start, p_max + 1, 2):
        prime = is_prime_trial(p)
        d = decompose(p) if prime else None
        for b in wanted:
            if b > p - 1 and not allow_large_base:
                continue
            rm = build_modulus(b, p)
            naive = product_naive(rm)
            agree = None
            if d is not None:
                agree = product_structured(rm, d) == naive
            entries.append(
                SweepEntry(p=p, b=b, prime=prime, residue_one=naive == 1, paths_agree=agree)
            )
    return SweepReport(p_min=p_min, p_max=p_max, bases=wanted, entries=tuple(entries))
