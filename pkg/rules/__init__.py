# Clifford Subalgebras - Solver Rules
from typing import List

from rules.base import BaseRule, Branch, Step, WorkingCondition
from rules.contradiction import ContradictionRule
from rules.elimination import LinearEliminationRule, PairSumRule, ZeroVariableRule
from rules.splitting import FactorSplitRule, SquareRootSplitRule


def default_rules() -> List[BaseRule]:
    """Fresh rule instances in priority order."""
    return [
        ContradictionRule(),
        ZeroVariableRule(),
        PairSumRule(),
        SquareRootSplitRule(),
        LinearEliminationRule(),
        FactorSplitRule(),
    ]


__all__ = [
    "BaseRule",
    "Branch",
    "Step",
    "WorkingCondition",
    "ContradictionRule",
    "ZeroVariableRule",
    "PairSumRule",
    "SquareRootSplitRule",
    "LinearEliminationRule",
    "FactorSplitRule",
    "default_rules",
]
