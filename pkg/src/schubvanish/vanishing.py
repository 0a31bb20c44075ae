"""Sufficient vanishing tests for Schubert intersection numbers.

The symmetric test concatenates all factor diagrams and asks whether the
staircase content (n-1, ..., 1, 0) fits; the asymmetric test concatenates
all but the last factor and asks for the code of the target.  Either way an
empty filling set forces the intersection number to zero, and emptiness is
decided by the exact LP.  A Vanishes verdict always carries a certificate a
reader can replay by hand: preferably one violated subset inequality, else
the LP multipliers.  The tests are one-sided; a feasible point only means
"inconclusive".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

from . import permcore, schubitope
from .permcore import Diagram, Perm
from .schubitope import (
    FarkasCertificate,
    FeasiblePoint,
    Filling,
    InfeasibleSubset,
    SUBSET_SCAN_MAX_ROWS,
)


class Outcome(str, Enum):
    VANISHES = "VANISHES"
    INCONCLUSIVE = "INCONCLUSIVE"
    DEGREE_MISMATCH = "DEGREE_MISMATCH"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


Certificate = Union[InfeasibleSubset, FarkasCertificate]
Witness = Union[FeasiblePoint, Filling]


@dataclass(frozen=True)
class VanishingVerdict:
    outcome: Outcome
    method: str
    certificate: Optional[Certificate] = None
    witness: Optional[Witness] = None
    detail: str = ""


@dataclass(frozen=True)
class SchubertProblem:
    """A list of factors, optionally with a distinguished target class."""

    factors: tuple[Perm, ...]
    target: Optional[Perm] = None

    def __post_init__(self) -> None:
        if len(self.factors) < 1:
            raise ValueError("a problem needs at least one factor")
        for w in self.factors:
            permcore.check_permutation(w)
        if self.target is not None:
            permcore.check_permutation(self.target)

    @property
    def mode(self) -> str:
        return "symmetric" if self.target is None else "asymmetric"

    def embedded(self) -> "SchubertProblem":
        ws = list(self.factors) + ([] if self.target is None else [self.target])
        ws = permcore.common_embed(ws)
        if self.target is None:
            return SchubertProblem(tuple(ws))
        return SchubertProblem(tuple(ws[:-1]), ws[-1])

    def symmetrized(self) -> "SchubertProblem":
        """The equivalent symmetric problem; appends the target's complement.

        The multiplicity of the target class equals the intersection number
        of the factors together with w0 * target.
        """
        p = self.embedded()
        if p.target is None:
            return p
        n = len(p.target)
        comp = permcore.multiply(permcore.w0(n), p.target)
        return SchubertProblem(p.factors + (comp,))


def staircase(n: int) -> tuple[int, ...]:
    """(n-1, n-2, ..., 1, 0): the content of the symmetric test."""
    return tuple(range(n - 1, -1, -1))


def symmetric_test(
    factors: Sequence[Perm], compress: bool = False
) -> VanishingVerdict:
    """Vanishing test for the intersection number of the factor list.

    Well-posed when the lengths sum to n(n-1)/2; otherwise the verdict is
    DEGREE_MISMATCH (the number is zero for trivial reasons, and no
    certificate is produced).
    """
    ws = permcore.common_embed(factors)
    n = len(ws[0]) if ws else 0
    method = "schubitope_symmetric"
    if sum(permcore.length(w) for w in ws) != n * (n - 1) // 2:
        return VanishingVerdict(
            Outcome.DEGREE_MISMATCH,
            method,
            detail="factor lengths do not sum to n(n-1)/2",
        )
    d = permcore.concat_diagrams([permcore.rothe_diagram(w) for w in ws])
    return _lp_verdict(d, staircase(n), method, compress)


def asymmetric_test(
    factors: Sequence[Perm], target: Perm, compress: bool = False
) -> VanishingVerdict:
    """Vanishing test for the multiplicity of the target class.

    Concatenates the factor diagrams only and uses the code of the target
    as content; strictly stronger than running the symmetric test on the
    factors plus the target's complement.
    """
    ws = permcore.common_embed(list(factors) + [target])
    target_n = ws[-1]
    ws = ws[:-1]
    method = "schubitope_asymmetric"
    if sum(permcore.length(w) for w in ws) != permcore.length(target_n):
        return VanishingVerdict(
            Outcome.DEGREE_MISMATCH,
            method,
            detail="factor lengths do not sum to the target length",
        )
    d = permcore.concat_diagrams([permcore.rothe_diagram(w) for w in ws])
    return _lp_verdict(d, permcore.code(target_n), method, compress)


def flexible_test(
    factors: Sequence[Perm],
    target: Perm,
    alpha: Sequence[int],
    compress: bool = False,
) -> VanishingVerdict:
    """Asymmetric test with the content replaced by a chosen monomial.

    alpha must be a lattice point of the target's Schubitope, i.e. the
    exponent of an actual monomial of the target's polynomial; anything
    else would make the conclusion unsound and is rejected with ValueError.
    """
    ws = permcore.common_embed(list(factors) + [target])
    target_n = ws[-1]
    ws = ws[:-1]
    method = "flexible"
    alpha = tuple(alpha)
    if len(alpha) < len(target_n):
        alpha = alpha + (0,) * (len(target_n) - len(alpha))
    if len(alpha) != len(target_n):
        raise ValueError("content vector length must match the embedded rank")
    member, _ = schubitope.schubitope_membership(
        permcore.rothe_diagram(target_n), alpha
    )
    if not member:
        raise ValueError(
            f"{alpha} is not in the target's Schubitope; the test would be unsound"
        )
    if sum(permcore.length(w) for w in ws) != sum(alpha):
        return VanishingVerdict(
            Outcome.DEGREE_MISMATCH,
            method,
            detail="factor lengths do not sum to the content total",
        )
    d = permcore.concat_diagrams([permcore.rothe_diagram(w) for w in ws])
    verdict = _lp_verdict(d, alpha, method, compress)
    return VanishingVerdict(
        verdict.outcome,
        method,
        certificate=verdict.certificate,
        witness=verdict.witness,
        detail=f"content={alpha}",
    )


def _lp_verdict(
    d: Diagram, alpha: Sequence[int], method: str, compress: bool
) -> VanishingVerdict:
    result = schubitope.lp_feasible(d, alpha, compress=compress)
    if isinstance(result, FeasiblePoint):
        return VanishingVerdict(Outcome.INCONCLUSIVE, method, witness=result)
    cert = vanishing_certificate(d, alpha, lp_result=result)
    return VanishingVerdict(Outcome.VANISHES, method, certificate=cert)


def vanishing_certificate(
    d: Diagram,
    alpha: Sequence[int],
    lp_result: Optional[Union[FeasiblePoint, FarkasCertificate]] = None,
) -> Certificate:
    """A human-checkable certificate that alpha misses the Schubitope.

    Prefers a single violated subset inequality (found by scanning subsets
    in cardinality-then-lexicographic order) whenever the row count permits;
    falls back to the LP multipliers.  Calling this on a feasible instance
    is an error.
    """
    if lp_result is None:
        lp_result = schubitope.lp_feasible(d, alpha)
    if isinstance(lp_result, FeasiblePoint):
        raise ValueError("certificate requested for a feasible instance")
    if d.n_rows <= SUBSET_SCAN_MAX_ROWS:
        ineqs = schubitope.SchubitopeInequalities(d)
        violation = ineqs.first_violation(alpha)
        if violation is not None:
            return violation
    return lp_result


def sample_schubitope_point(
    w: Perm, rng: Optional[random.Random] = None
) -> tuple[int, ...]:
    """The content of a random column-strict filling of the diagram of w.

    Per column with cell rows r_1 < ... < r_z, picks labels
    x_1 < ... < x_z with x_t <= r_t; valid choices always exist because the
    rows are distinct positive integers (r_t >= t).  With rng=None the
    smallest labels are taken, giving a deterministic point.  The result is
    always a lattice point of the Schubitope of w.
    """
    d = permcore.rothe_diagram(w)
    n = len(w)
    counts = [0] * n
    for c in d.nonempty_columns():
        rows = d.column_cells(c)
        z = len(rows)
        caps = list(rows)
        for t in range(z - 2, -1, -1):
            caps[t] = min(caps[t], caps[t + 1] - 1)
        if any(cap < t + 1 for t, cap in enumerate(caps)):
            raise RuntimeError(f"no admissible labels for column {c} of {w}")
        prev = 0
        for t in range(z):
            lo = prev + 1
            hi = caps[t]
            x = lo if rng is None else rng.randint(lo, hi)
            counts[x - 1] += 1
            prev = x
    return tuple(counts)


def flexible_test_sampled(
    factors: Sequence[Perm],
    target: Perm,
    samples: int = 32,
    seed: int = 0,
    compress: bool = False,
) -> VanishingVerdict:
    """Randomized driver: try the target's code, then sampled contents.

    Distinct sampled points only; returns the first Vanishes verdict, else
    Inconclusive with the number of distinct contents tried.
    """
    ws = permcore.common_embed(list(factors) + [target])
    target_n = ws[-1]
    rng = random.Random(seed)
    tried: set[tuple[int, ...]] = set()
    candidates = [permcore.code(target_n)]
    for _ in range(samples):
        candidates.append(sample_schubitope_point(target_n, rng))
    last: Optional[VanishingVerdict] = None
    for alpha in candidates:
        if alpha in tried:
            continue
        tried.add(alpha)
        verdict = flexible_test(factors, target, alpha, compress=compress)
        if verdict.outcome is Outcome.DEGREE_MISMATCH:
            return verdict
        if verdict.outcome is Outcome.VANISHES:
            return verdict
        last = verdict
    assert last is not None
    return VanishingVerdict(
        Outcome.INCONCLUSIVE,
        "flexible",
        witness=last.witness,
        detail=f"{len(tried)} distinct contents tried",
    )


@dataclass(frozen=True)
class StrengthReport:
    """Both verdicts for one asymmetric problem, for comparing test power."""

    symmetric: VanishingVerdict
    asymmetric: VanishingVerdict


def strength_comparison(factors: Sequence[Perm], target: Perm) -> StrengthReport:
    """Run the symmetric test on factors + complement, and the asymmetric test.

    Whenever the symmetric test vanishes, the asymmetric one must too; that
    implication is checked here and a violation raises, since it would
    contradict an exact inclusion of polytopes.
    """
    problem = SchubertProblem(tuple(factors), tuple(target)).symmetrized()
    sym = symmetric_test(problem.factors)
    asym = asymmetric_test(factors, target)
    if (
        sym.outcome is Outcome.VANISHES
        and asym.outcome is not Outcome.VANISHES
    ):
        raise RuntimeError(
            "symmetric test vanished but asymmetric did not; "
            f"factors={factors} target={target}"
        )
    return StrengthReport(sym, asym)
