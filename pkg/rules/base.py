"""
Base Rule Class
Branch state shared by the solver and the abstract base for every rewrite rule
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple, Union

from src.scalars import Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Step:
    """One recorded substitution ``variable := value``."""
    rule: str
    variable: str
    value: Polynomial

    def __str__(self) -> str:
        return f"{self.variable} = {self.value}"


@dataclass(frozen=True)
class WorkingCondition:
    """
    A condition as the solver currently sees it.

    ``base`` is the polynomial the condition started from and ``since`` the
    number of branch steps already folded into ``base``; replaying
    ``steps[since:]`` on ``base`` gives ``poly`` back.
    """
    poly: Polynomial
    base: Polynomial
    origin: int
    since: int = 0


@dataclass
class Branch:
    """Mutable solver state for one case of the case split tree."""
    variables: Tuple[str, ...]
    conditions: List[WorkingCondition]
    bindings: Dict[str, Polynomial] = field(default_factory=dict)
    steps: List[Step] = field(default_factory=list)
    splits: List[Polynomial] = field(default_factory=list)
    label: Tuple[str, ...] = ()

    def free_variables(self) -> Tuple[str, ...]:
        return tuple(v for v in self.variables if v not in self.bindings)

    def polys(self) -> List[Polynomial]:
        return [wc.poly for wc in self.conditions]

    def apply(self, steps: Tuple[Step, ...]) -> "Branch":
        """Substitute every step in order; zero conditions drop, duplicates merge."""
        conditions = [wc.poly for wc in self.conditions]
        bindings = dict(self.bindings)
        for step in steps:
            conditions = [poly.substitute(step.variable, step.value) for poly in conditions]
            bindings = {var: poly.substitute(step.variable, step.value) for var, poly in bindings.items()}
            bindings[step.variable] = step.value
        kept: List[WorkingCondition] = []
        seen = set()
        for wc, poly in zip(self.conditions, conditions):
            poly = poly.normalized()
            if poly.is_zero() or poly in seen:
                continue
            seen.add(poly)
            kept.append(WorkingCondition(poly=poly, base=wc.base, origin=wc.origin, since=wc.since))
        return Branch(
            variables=self.variables,
            conditions=kept,
            bindings=bindings,
            steps=self.steps + list(steps),
            splits=list(self.splits),
            label=self.label,
        )

    def replace(self, index: int, poly: Polynomial) -> "Branch":
        """Swap condition ``index`` for ``poly``, which becomes its own replay base."""
        poly = poly.normalized()
        old = self.conditions[index]
        conditions = list(self.conditions)
        conditions[index] = WorkingCondition(poly=poly, base=poly, origin=old.origin, since=len(self.steps))
        deduped: List[WorkingCondition] = []
        seen = set()
        for wc in conditions:
            if wc.poly.is_zero() or wc.poly in seen:
                continue
            seen.add(wc.poly)
            deduped.append(wc)
        return Branch(
            variables=self.variables,
            conditions=deduped,
            bindings=dict(self.bindings),
            steps=list(self.steps),
            splits=list(self.splits),
            label=self.label,
        )

    def fork(self, tag: str, condition: Polynomial) -> "Branch":
        return Branch(
            variables=self.variables,
            conditions=list(self.conditions),
            bindings=dict(self.bindings),
            steps=list(self.steps),
            splits=self.splits + [condition],
            label=self.label + (tag,),
        )


@dataclass(frozen=True)
class Contradict:
    index: int


@dataclass(frozen=True)
class Substitute:
    steps: Tuple[Step, ...]


@dataclass(frozen=True)
class SplitCase:
    tag: str
    steps: Tuple[Step, ...] = ()
    replacement: Optional[Tuple[int, Polynomial]] = None


@dataclass(frozen=True)
class Split:
    condition: Polynomial
    cases: Tuple[SplitCase, ...]


Action = Union[Contradict, Substitute, Split]


@dataclass
class RuleState:
    """Track how often a rule fired during one solve"""
    name: str
    fired: int = 0
    last_detail: Optional[str] = None


class BaseRule(ABC):
    """Base class for all rewrite rules"""

    name: str = "rule"

    def __init__(self):
        self.state = RuleState(name=self.name)

    @abstractmethod
    def match(self, branch: Branch) -> Optional[Action]:
        """Return the action this rule takes on ``branch``, or None if it does not apply."""
        pass

    def apply(self, branch: Branch) -> Optional[Action]:
        action = self.match(branch)
        if action is not None:
            self.state.fired += 1
            self.state.last_detail = describe(action)
            logger.debug(f"[{self.name}] {'/'.join(branch.label) or 'root'}: {self.state.last_detail}")
        return action

    def get_stats(self) -> Dict[str, Any]:
        return {"name": self.name, "fired": self.state.fired, "last": self.state.last_detail}


def describe(action: Action) -> str:
    if isinstance(action, Contradict):
        return f"contradiction at condition {action.index}"
    if isinstance(action, Substitute):
        return ", ".join(str(step) for step in action.steps)
    return f"split {action.condition} into " + " | ".join(case.tag for case in action.cases)


def constant_step(rule: str, variable: str, value: Any, variables: Tuple[str, ...]) -> Step:
    return Step(rule=rule, variable=variable, value=Polynomial.constant(value, variables))
