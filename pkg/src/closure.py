"""
Closure Conditions
Derives the polynomial conditions for a canonical basis to be closed under
multiplication, solves them by substitution and case splits, and certifies
real infeasibility.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from config import SolverConfig
from rules import Branch, Step, WorkingCondition, default_rules
from rules.base import Contradict, Split, Substitute
from src.clifford import MultiVector, generator_order
from src.errors import EchelonShapeError, SubstitutionError
from src.scalars import (
    DEFAULT_PARAMETER,
    ExtensionElement,
    GaussianRational,
    Polynomial,
    default_relation,
)
from src.subspace import CanonicalBasis, SpanOracle, forced_expansion, membership_residual

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Condition:
    """A normalized residual and the products (i, j) that produced it."""

    poly: Polynomial
    products: Tuple[Pair, ...]

    @property
    def from_product(self) -> Optional[Pair]:
        return self.products[0] if self.products else None


@dataclass(frozen=True)
class ConditionSet:
    variables: Tuple[str, ...]
    conditions: Tuple[Condition, ...]
    basis: Optional[CanonicalBasis] = None

    @classmethod
    def from_polynomials(
        cls, polys: Sequence[Polynomial], variables: Sequence[str], basis: Optional[CanonicalBasis] = None
    ) -> "ConditionSet":
        merged: Dict[Polynomial, List[Pair]] = {}
        for poly in polys:
            poly = poly.normalized()
            if not poly.is_zero():
                merged.setdefault(poly, [])
        return cls(tuple(variables), tuple(Condition(p, tuple(ps)) for p, ps in merged.items()), basis)

    def __len__(self) -> int:
        return len(self.conditions)

    def __iter__(self):
        return iter(self.conditions)

    def polys(self) -> List[Polynomial]:
        return [c.poly for c in self.conditions]

    def evaluate(self, assignment: Mapping[str, Any], zero: Any = None) -> List[Any]:
        return [c.poly.evaluate(assignment, zero) for c in self.conditions]

    def holds(self, assignment: Mapping[str, Any]) -> bool:
        """True when every condition vanishes at ``assignment``; stops at the first that does not."""
        for condition in self.conditions:
            if not condition.poly.evaluate(assignment).is_zero():
                return False
        return True

    def render(self) -> List[str]:
        lines = []
        for condition in self.conditions:
            sources = ", ".join(f"a{i}a{j}" for i, j in condition.products)
            lines.append(f"{condition.poly.render_equation()}    [{sources}]")
        return lines

    def to_json(self) -> Dict[str, Any]:
        return {
            "basis": self.basis.m if self.basis is not None else None,
            "conditions": [
                {"poly": str(c.poly), "from_product": list(c.from_product) if c.products else None}
                for c in self.conditions
            ],
        }


@lru_cache(maxsize=None)
def derive_conditions(cb: CanonicalBasis) -> ConditionSet:
    vectors = cb.polynomial_vectors()
    merged: Dict[Polynomial, List[Pair]] = {}
    for i, left in enumerate(vectors, start=1):
        for j, right in enumerate(vectors, start=1):
            _, residual = membership_residual(left * right, cb)
            if residual.is_zero():
                continue
            merged.setdefault(residual.normalized(), []).append((i, j))
    conditions = tuple(Condition(poly, tuple(pairs)) for poly, pairs in merged.items())
    logger.debug(f"Basis {cb.m} of N={cb.N}: {len(conditions)} conditions in {len(cb.params)} parameters")
    return ConditionSet(cb.params, conditions, cb)


# real infeasibility

def explain_real_infeasibility(p: Polynomial) -> Tuple[bool, str]:
    if p.is_zero():
        return False, "zero polynomial"
    if any(not coeff.is_real() for _, coeff in p.terms):
        return False, "not a real polynomial"
    if p.constant_term().re <= 0:
        return False, "constant term is not positive"
    for exponents, coeff in p.terms:
        if any(power % 2 for power in exponents) or coeff.re <= 0:
            return False, "not a positive combination of even powers"
    return True, "positive constant plus even powers with positive coefficients"


def real_infeasible(p: Polynomial) -> bool:
    infeasible, note = explain_real_infeasibility(p)
    if not infeasible:
        logger.debug(f"No real certificate for {p}: {note}")
    return infeasible


# concrete closure

@dataclass(frozen=True)
class EchelonShape:
    slot_masks: Tuple[int, ...]
    pivot_mask: int
    pivot_coeffs: Tuple[Any, ...]


@dataclass(frozen=True)
class ClosureFailure:
    i: int
    j: int
    residual: Any

    def __str__(self) -> str:
        return f"a{self.i}a{self.j}: residual {self.residual}"


def echelon_shape(vectors: Sequence[MultiVector]) -> EchelonShape:
    """Read the canonical-basis layout off concrete vectors."""
    if not vectors:
        raise EchelonShapeError("no vectors")
    n = vectors[0].n
    if any(v.n != n for v in vectors):
        raise EchelonShapeError("vectors of different dimensions")
    order = generator_order(n)
    N = len(order)
    if len(vectors) != N - 1:
        raise EchelonShapeError(f"expected {N - 1} vectors in g({n}), got {len(vectors)}")
    position = {mask: idx for idx, mask in enumerate(order)}
    leads = []
    for v in vectors:
        support = v.support()
        if not support:
            raise EchelonShapeError("zero vector")
        leads.append(position[support[0]])
    if any(b <= a for a, b in zip(leads, leads[1:])):
        raise EchelonShapeError("leading generators are not strictly increasing")
    missing = [idx for idx in range(N) if idx not in leads]
    pivot = missing[0]
    pivot_coeffs = []
    for v, lead in zip(vectors, leads):
        if not v.coefficient(order[lead]) == 1:
            raise EchelonShapeError(f"leading coefficient on {order[lead]:b} is not 1")
        extra = [position[mask] for mask in v.support()[1:]]
        if lead < pivot:
            if any(idx != pivot for idx in extra):
                raise EchelonShapeError("entries outside the pivot column")
            pivot_coeffs.append(v.coefficient(order[pivot]))
        elif extra:
            raise EchelonShapeError("entries after a post-pivot slot")
    return EchelonShape(
        slot_masks=tuple(order[idx] for idx in leads),
        pivot_mask=order[pivot],
        pivot_coeffs=tuple(pivot_coeffs),
    )


def closure_failures(vectors: Sequence[MultiVector], first_only: bool = False) -> List[ClosureFailure]:
    """Every product a_i a_j (1-based) with a nonzero forced-membership residual."""
    shape = echelon_shape(vectors)
    failures = []
    for i, left in enumerate(vectors, start=1):
        for j, right in enumerate(vectors, start=1):
            _, residual = forced_expansion(left * right, shape.slot_masks, shape.pivot_mask, shape.pivot_coeffs)
            if not residual.is_zero():
                failures.append(ClosureFailure(i, j, residual))
                if first_only:
                    return failures
    return failures


def check_closure_concrete(vectors: Sequence[MultiVector]) -> bool:
    return not closure_failures(vectors, first_only=True)


def span_closure_failures(
    vectors: Sequence[MultiVector[GaussianRational]], first_only: bool = False
) -> List[ClosureFailure]:
    """Same question as ``closure_failures`` answered by exact row reduction, for any spanning list."""
    oracle = SpanOracle(vectors)
    failures = []
    for i, left in enumerate(vectors, start=1):
        for j, right in enumerate(vectors, start=1):
            product = left * right
            if oracle.expand(product) is None:
                failures.append(ClosureFailure(i, j, product))
                if first_only:
                    return failures
    return failures


# solving

@dataclass(frozen=True)
class Trace:
    """Substitutions that turn a recorded condition into a nonzero constant."""

    source: Polynomial
    origin: int
    products: Tuple[Pair, ...]
    steps: Tuple[Step, ...]
    constant: GaussianRational
    label: Tuple[str, ...] = ()

    def lines(self) -> List[str]:
        return [str(step) for step in self.steps] + [f"{self.source} -> {self.constant}"]


def replay(trace: Trace) -> Polynomial:
    poly = trace.source
    for step in trace.steps:
        poly = poly.substitute(step.variable, step.value)
    return poly


def relevant_steps(base: Polynomial, steps: Sequence[Step]) -> Tuple[Step, ...]:
    """Steps that actually change ``base`` when applied in order."""
    kept = []
    poly = base
    for step in steps:
        if step.variable in poly.used_variables():
            poly = poly.substitute(step.variable, step.value)
            kept.append(step)
    return tuple(kept)


@dataclass(frozen=True)
class SolutionFamily:
    """
    One solution branch: every variable as an element of the extension ring.

    ``free`` names the variable that became the parameter a and ``root``
    the one that became +s or -s. Isolated families have neither.
    """

    variables: Tuple[str, ...]
    values: Dict[str, ExtensionElement]
    relation: Polynomial
    free: Optional[str] = None
    root: Optional[str] = None
    terminal: Optional[Polynomial] = None
    splits: Tuple[Polynomial, ...] = ()
    label: Tuple[str, ...] = ()

    @property
    def has_extension(self) -> bool:
        return self.root is not None

    @property
    def is_isolated(self) -> bool:
        return self.free is None

    @property
    def fixed(self) -> Dict[str, GaussianRational]:
        out = {}
        for name in self.variables:
            value = self.values[name]
            if value.p1.is_zero() and value.p0.is_constant():
                out[name] = value.p0.constant_term()
        return out

    def extension_text(self) -> Optional[str]:
        return f"s^2 = {self.relation}" if self.has_extension else None

    def certificate(self) -> Optional[Polynomial]:
        """First terminal or split condition with no real solution."""
        candidates = ([self.terminal] if self.terminal is not None else []) + list(self.splits)
        for poly in candidates:
            if real_infeasible(poly):
                return poly
        return None

    def key(self) -> Tuple[Any, ...]:
        return tuple(str(self.values[name]) for name in self.variables) + (self.extension_text(),)


@dataclass(frozen=True)
class SolveOutcome:
    kind: str = ""


@dataclass(frozen=True)
class Contradiction(SolveOutcome):
    traces: Tuple[Trace, ...] = ()
    kind: str = "contradiction"


@dataclass(frozen=True)
class Families(SolveOutcome):
    families: Tuple[SolutionFamily, ...] = ()
    kind: str = "families"


@dataclass(frozen=True)
class OpenBranch:
    """A branch the rules could not settle, with its remaining conditions."""

    remaining: Tuple[Polynomial, ...] = ()
    label: Tuple[str, ...] = ()
    reason: str = ""


@dataclass(frozen=True)
class Unresolved(SolveOutcome):
    """Every open branch, merged with the families the settled branches produced."""

    branches: Tuple[OpenBranch, ...] = ()
    families: Tuple[SolutionFamily, ...] = ()
    kind: str = "unresolved"

    @property
    def reason(self) -> str:
        return "; ".join(sorted({branch.reason for branch in self.branches}))


BranchResult = Union[Trace, List[SolutionFamily], OpenBranch]


def _lift(value: Any, relation: Polynomial) -> ExtensionElement:
    if isinstance(value, ExtensionElement):
        return value
    return ExtensionElement(value, 0, relation)


def _family(
    branch: Branch,
    relation: Polynomial,
    assigned: Dict[str, ExtensionElement],
    free: Optional[str],
    root: Optional[str],
    terminal: Optional[Polynomial],
) -> SolutionFamily:
    zero = ExtensionElement(0, 0, relation)
    values: Dict[str, ExtensionElement] = {}
    for name in branch.variables:
        if name in assigned:
            values[name] = assigned[name]
        else:
            values[name] = _lift(branch.bindings[name].evaluate(assigned, zero), relation)
    return SolutionFamily(
        variables=branch.variables,
        values=values,
        relation=relation,
        free=free,
        root=root,
        terminal=terminal,
        splits=tuple(branch.splits),
        label=branch.label,
    )


def _terminal(branch: Branch) -> BranchResult:
    free = branch.free_variables()
    polys = branch.polys()
    relation = default_relation()
    if not polys:
        if not free:
            return [_family(branch, relation, {}, None, None, None)]
        if len(free) == 1:
            assigned = {free[0]: ExtensionElement.parameter(relation)}
            return [_family(branch, relation, assigned, free[0], None, None)]
        return OpenBranch(label=branch.label, reason=f"{len(free)} free variables")
    if len(polys) == 1 and 1 <= len(free) <= 2:
        poly = polys[0]
        used = poly.used_variables()
        if set(used) == set(free):
            root = used[-1]
            parts = poly.coefficients_in(root)
            if set(parts) == {0, 2} and parts[2].is_constant():
                target = -parts[0].scale(parts[2].constant_term().inverse())
                others = [name for name in used if name != root]
                if others:
                    relation = target.rename({others[0]: DEFAULT_PARAMETER}, (DEFAULT_PARAMETER,))
                else:
                    relation = Polynomial.constant(target.constant_term(), (DEFAULT_PARAMETER,))
                s = ExtensionElement.root(relation)
                families = []
                for sign in (1, -1):
                    assigned = {root: s if sign > 0 else -s}
                    if others:
                        assigned[others[0]] = ExtensionElement.parameter(relation)
                    families.append(
                        _family(branch, relation, assigned, others[0] if others else None, root, poly)
                    )
                return families
    return OpenBranch(
        remaining=tuple(polys), label=branch.label, reason="no rule applies to the remaining conditions"
    )


def _run_branch(branch: Branch, rules, config: SolverConfig) -> Tuple[Optional[BranchResult], List[Branch]]:
    for _ in range(config.max_rule_steps):
        action = None
        for rule in rules:
            action = rule.apply(branch)
            if action is not None:
                break
        if action is None:
            return _terminal(branch), []
        if isinstance(action, Contradict):
            wc: WorkingCondition = branch.conditions[action.index]
            steps = relevant_steps(wc.base, branch.steps[wc.since:])
            trace = Trace(
                source=wc.base,
                origin=wc.origin,
                products=(),
                steps=steps,
                constant=replay_constant(wc.base, steps),
                label=branch.label,
            )
            return trace, []
        if isinstance(action, Substitute):
            branch = branch.apply(action.steps)
            continue
        if isinstance(action, Split):
            children = []
            for case in action.cases:
                child = branch.fork(case.tag, action.condition)
                if case.steps:
                    child = child.apply(case.steps)
                if case.replacement is not None:
                    child = child.replace(*case.replacement)
                children.append(child)
            return None, children
    return OpenBranch(remaining=tuple(branch.polys()), label=branch.label, reason="rule step limit reached"), []


def replay_constant(base: Polynomial, steps: Sequence[Step]) -> GaussianRational:
    poly = base
    for step in steps:
        poly = poly.substitute(step.variable, step.value)
    if not poly.is_constant():
        raise SubstitutionError(f"replay of {base} did not end in a constant: {poly}")
    return poly.constant_term()


def solve(cs: ConditionSet, config: Optional[SolverConfig] = None) -> SolveOutcome:
    config = config or SolverConfig()
    rules = default_rules()
    root = Branch(
        variables=cs.variables,
        conditions=[
            WorkingCondition(poly=c.poly, base=c.poly, origin=idx) for idx, c in enumerate(cs.conditions)
        ],
    )
    stack = [root]
    created = 1
    results: List[BranchResult] = []
    while stack:
        branch = stack.pop()
        result, children = _run_branch(branch, rules, config)
        if children:
            if created + len(children) - 1 > config.max_branches:
                logger.warning(f"Branch limit {config.max_branches} reached at {'/'.join(branch.label) or 'root'}")
                results.append(
                    OpenBranch(remaining=tuple(branch.polys()), label=branch.label, reason="branch limit reached")
                )
                continue
            created += len(children) - 1
            stack.extend(reversed(children))
        else:
            results.append(result)

    for rule in rules:
        stats = rule.get_stats()
        if stats["fired"]:
            logger.debug(f"Rule {stats['name']}: fired {stats['fired']} times, last {stats['last']}")

    families: List[SolutionFamily] = []
    seen = set()
    for result in results:
        if isinstance(result, list):
            for family in result:
                if family.key() not in seen:
                    seen.add(family.key())
                    families.append(family)
    open_branches = tuple(r for r in results if isinstance(r, OpenBranch))
    if open_branches:
        logger.warning(f"{len(open_branches)} open branch(es) alongside {len(families)} families")
        return Unresolved(branches=open_branches, families=tuple(families))
    if families:
        return Families(families=tuple(families))
    traces = tuple(
        Trace(
            source=t.source,
            origin=t.origin,
            products=cs.conditions[t.origin].products,
            steps=t.steps,
            constant=t.constant,
            label=t.label,
        )
        for t in results
        if isinstance(t, Trace)
    )
    return Contradiction(traces=traces)


def family_residuals(cs: ConditionSet, family: SolutionFamily) -> List[ExtensionElement]:
    """Each condition evaluated at the family, in the extension ring."""
    zero = ExtensionElement(0, 0, family.relation)
    return [_lift(c.poly.evaluate(family.values, zero), family.relation) for c in cs.conditions]
