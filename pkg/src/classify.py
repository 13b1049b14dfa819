"""
Classification
Runs the full pipeline over every canonical basis of g(n), verifies the known
subalgebras and their embeddings, and cross-checks conditions by sampling.
"""

import asyncio
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from config import ClassifyConfig, Config, OracleConfig, SolverConfig
from src.clifford import MultiVector, embed
from src.closure import (
    ClosureFailure,
    ConditionSet,
    Contradiction,
    Families,
    SolutionFamily,
    SolveOutcome,
    Unresolved,
    closure_failures,
    check_closure_concrete,
    derive_conditions,
    solve,
    span_closure_failures,
)
from src.errors import BoundsError, ScalarDomainError
from src.scalars import ExtensionElement, GaussianRational, I
from src.subspace import CanonicalBasis, canonical_bases
from src.theorem import (
    FAMILY_NAMES,
    PRINTED_ISOLATED,
    PRINTED_ONE_PARAMETER,
    RELATION,
    is_one_parameter,
    isolated_shape,
    one_parameter_shape,
    sign_patterns,
    specialise,
    theorem_vectors,
)
from utils.logger import log_outcome

logger = logging.getLogger(__name__)

LATTICE = (GaussianRational(0), GaussianRational(1), GaussianRational(-1), I, -I)


@dataclass
class FamilyReport:
    family: SolutionFamily
    subalgebra: List[MultiVector[ExtensionElement]]
    closed: bool
    certificate: Optional[Any] = None

    def rendered(self) -> List[str]:
        return [v.render() for v in self.subalgebra]


@dataclass
class BasisResult:
    basis: CanonicalBasis
    conditions: ConditionSet
    outcome: SolveOutcome
    families: List[FamilyReport] = field(default_factory=list)
    evidence: Optional["OracleReport"] = None

    @property
    def has_subalgebras(self) -> bool:
        return bool(self.families)


@dataclass
class ClassificationResult:
    n: int
    bases: List[BasisResult]

    @property
    def summary(self) -> Dict[str, int]:
        reports = [report for entry in self.bases for report in entry.families]
        return {
            "one_parameter_families": sum(1 for r in reports if not r.family.is_isolated),
            "isolated": sum(1 for r in reports if r.family.is_isolated),
            "contradictions": sum(1 for e in self.bases if isinstance(e.outcome, Contradiction)),
            "unresolved": sum(1 for e in self.bases if isinstance(e.outcome, Unresolved)),
        }

    def empty_bases(self) -> List[int]:
        return [e.basis.m for e in self.bases if isinstance(e.outcome, Contradiction)]

    def unresolved_bases(self) -> List[int]:
        return [e.basis.m for e in self.bases if isinstance(e.outcome, Unresolved)]

    def families(self) -> List[FamilyReport]:
        return [report for entry in self.bases for report in entry.families]

    def summary_line(self) -> str:
        counts = self.summary
        line = (
            f"{counts['one_parameter_families']} one-parameter families, "
            f"{counts['isolated']} isolated subalgebras"
        )
        empty = self.empty_bases()
        if empty:
            line += f"; bases {','.join(str(m) for m in empty)}: none"
        unresolved = self.unresolved_bases()
        if unresolved:
            line += f"; bases {','.join(str(m) for m in unresolved)}: unresolved"
        return line

    @property
    def verified(self) -> bool:
        return all(report.closed for report in self.families()) and not self.unresolved_bases()


def classify_basis(
    cb: CanonicalBasis, solver: Optional[SolverConfig] = None, oracle: Optional[OracleConfig] = None
) -> BasisResult:
    """Solve one basis; an unresolved basis also gets sampled-oracle evidence."""
    conditions = derive_conditions(cb)
    outcome = solve(conditions, solver)
    reports = []
    if isinstance(outcome, (Families, Unresolved)):
        for family in outcome.families:
            one = ExtensionElement(1, 0, family.relation)
            subalgebra = cb.instantiate(family.values, one)
            closed = check_closure_concrete(subalgebra)
            if not closed:
                logger.error(f"Basis {cb.m}: family {'/'.join(family.label)} is not closed")
            reports.append(FamilyReport(family, subalgebra, closed, family.certificate()))
    evidence = None
    if isinstance(outcome, Unresolved):
        oracle = oracle or OracleConfig()
        evidence = sampling_oracle(cb.m, oracle.trials, oracle.seed, cb.n, oracle)
    log_outcome(cb.m, outcome.kind, _outcome_detail(outcome, reports))
    return BasisResult(cb, conditions, outcome, reports, evidence)


def _outcome_detail(outcome: SolveOutcome, reports: Sequence[FamilyReport]) -> str:
    if isinstance(outcome, Contradiction):
        return f"{len(outcome.traces)} contradicted branch(es)"
    if isinstance(outcome, Families):
        isolated = sum(1 for r in reports if r.family.is_isolated)
        return f"{len(reports) - isolated} one-parameter, {isolated} isolated"
    return f"{outcome.reason}; {len(outcome.branches)} open branch(es), {len(reports)} families"


def _check_bounds(n: int, config: ClassifyConfig) -> None:
    if not 1 <= n <= config.max_n:
        raise BoundsError(f"n must be in 1..{config.max_n}, got {n}")


async def classify_async(n: int, config: Optional[Config] = None) -> ClassificationResult:
    """Classify every basis concurrently; results stay in basis order."""
    config = config or Config()
    _check_bounds(n, config.classify)
    bases = canonical_bases(1 << n)
    results = await asyncio.gather(
        *(asyncio.to_thread(classify_basis, cb, config.solver, config.oracle) for cb in bases)
    )
    return ClassificationResult(n=n, bases=list(results))


def classify(n: int, config: Optional[Config] = None) -> ClassificationResult:
    config = config or Config()
    _check_bounds(n, config.classify)
    logger.info(f"Classifying {(1 << n) - 1}-dimensional subalgebras of g({n})")
    if config.classify.parallel:
        return asyncio.run(classify_async(n, config))
    bases = canonical_bases(1 << n)
    return ClassificationResult(n=n, bases=[classify_basis(cb, config.solver, config.oracle) for cb in bases])


# known subalgebras

@dataclass
class FamilyCheck:
    name: str
    closed: bool
    failures: List[ClosureFailure]
    matched: Optional[bool] = None


@dataclass
class TheoremReport:
    checks: List[FamilyCheck]

    @property
    def passed(self) -> bool:
        return all(c.closed and c.matched is not False for c in self.checks)


def verify_theorem(
    names: Sequence[str] = FAMILY_NAMES, classification: Optional[ClassificationResult] = None
) -> TheoremReport:
    """Check closure of each named subalgebra, and that classification found it."""
    rendered = None
    if classification is not None:
        rendered = [report.rendered() for report in classification.families()]
    checks = []
    for name in names:
        vectors = theorem_vectors(name)
        failures = closure_failures(vectors)
        matched = None
        if rendered is not None:
            matched = [v.render() for v in vectors] in rendered
        check = FamilyCheck(name=name, closed=not failures, failures=failures, matched=matched)
        if failures:
            logger.warning(f"{name} is not closed: {failures[0]}")
        elif matched is False:
            logger.warning(f"{name} is closed but was not produced by the classification")
        checks.append(check)
    return TheoremReport(checks)


def lemma_vectors(name: str, point: Any = 0) -> List[MultiVector[GaussianRational]]:
    """Subalgebra ``name`` at a = point, with s the principal root of -1 - point^2."""
    vectors = theorem_vectors(name)
    if not is_one_parameter(name):
        return vectors
    alpha = GaussianRational.coerce(point)
    sigma = RELATION.evaluate({"a": alpha}).sqrt()
    if sigma is None:
        raise ScalarDomainError(f"-1 - a^2 has no Gaussian-rational square root at a = {alpha}")
    return specialise(vectors, alpha, sigma)


def verify_lemma(name: str, k: int, point: Any = 0) -> bool:
    """Closure of subalgebra ``name`` at a = point after embedding into g(3 + k)."""
    if k < 1:
        raise BoundsError(f"embedding needs k >= 1, got {k}")
    embedded = [embed(v, 3, k) for v in lemma_vectors(name, point)]
    failures = span_closure_failures(embedded, first_only=True)
    if failures:
        logger.warning(f"{name} at a = {point} escapes in g({3 + k}): a{failures[0].i}a{failures[0].j}")
    return not failures


@dataclass
class SignPatternReport:
    symbolic: Dict[Tuple[int, ...], bool]
    at_zero: Dict[Tuple[int, ...], bool]
    isolated: Dict[Tuple[int, ...], bool]

    @property
    def passed(self) -> bool:
        symbolic_ok = {s for s, closed in self.symbolic.items() if closed} == PRINTED_ONE_PARAMETER
        isolated_ok = {s for s, closed in self.isolated.items() if closed} == PRINTED_ISOLATED
        zero_ok = all(closed == (s[2] == -s[0] * s[1]) for s, closed in self.at_zero.items())
        return symbolic_ok and isolated_ok and zero_ok


def verify_sign_patterns() -> SignPatternReport:
    """Closure of every sign variant of both printed shapes."""
    symbolic, at_zero, isolated = {}, {}, {}
    for signs in sign_patterns(4):
        vectors = one_parameter_shape(signs)
        symbolic[signs] = check_closure_concrete(vectors)
        at_zero[signs] = check_closure_concrete(specialise(vectors, 0, I))
    for signs in sign_patterns(3):
        isolated[signs] = check_closure_concrete(isolated_shape(signs))
    return SignPatternReport(symbolic, at_zero, isolated)


# sampling oracle

@dataclass
class OracleReport:
    basis: int
    n: int
    trials: int
    seed: int
    agreements: int = 0
    disagreements: List[Dict[str, str]] = field(default_factory=list)
    hits: List[Dict[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.disagreements

    def to_json(self) -> Dict[str, Any]:
        return {
            "basis": self.basis,
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "hits": self.hits,
        }


def draw_assignment(
    rng: np.random.Generator, params: Sequence[str], bound: int, lattice_fraction: float
) -> Dict[str, GaussianRational]:
    if rng.random() < lattice_fraction:
        picks = rng.integers(0, len(LATTICE), size=len(params))
        return {name: LATTICE[int(idx)] for name, idx in zip(params, picks)}
    numerators = rng.integers(-bound, bound + 1, size=(len(params), 2))
    denominators = rng.integers(1, bound + 1, size=(len(params), 2))
    return {
        name: GaussianRational(Fraction(int(num[0]), int(den[0])), Fraction(int(num[1]), int(den[1])))
        for name, num, den in zip(params, numerators, denominators)
    }


def check_assignment(
    cb: CanonicalBasis, assignment: Mapping[str, GaussianRational], conditions: Optional[ConditionSet] = None
) -> Tuple[bool, bool]:
    """(conditions vanish, instantiated subspace is closed) at one parameter point."""
    conditions = conditions or derive_conditions(cb)
    holds = conditions.holds(assignment)
    closed = not span_closure_failures(cb.instantiate(assignment), first_only=True)
    return holds, closed


def sampling_oracle(
    m: int, trials: int, seed: int, n: int = 3, config: Optional[OracleConfig] = None
) -> OracleReport:
    if trials < 1:
        raise BoundsError(f"trials must be >= 1, got {trials}")
    config = config or OracleConfig()
    cb = CanonicalBasis(m, 1 << n)
    conditions = derive_conditions(cb)
    rng = np.random.default_rng(seed)
    report = OracleReport(basis=m, n=n, trials=trials, seed=seed)
    for trial in range(trials):
        assignment = draw_assignment(rng, cb.params, config.bound, config.lattice_fraction)
        holds, closed = check_assignment(cb, assignment, conditions)
        rendered = {name: str(value) for name, value in assignment.items()}
        if holds == closed:
            report.agreements += 1
        else:
            logger.error(f"Oracle disagreement on basis {m}, trial {trial}: {rendered}")
            report.disagreements.append({"trial": str(trial), **rendered})
        if closed:
            report.hits.append(rendered)
    logger.info(
        f"Oracle basis {m}: {report.agreements}/{trials} agree, {len(report.hits)} closure hits"
    )
    return report
