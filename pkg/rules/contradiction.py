"""
Contradiction Rule
A condition that has reduced to a nonzero constant closes the branch
"""
import logging
from typing import Optional

from rules.base import Action, BaseRule, Branch, Contradict

logger = logging.getLogger(__name__)


class ContradictionRule(BaseRule):
    """First condition (in list order) that is a nonzero constant."""

    name = "contradiction"

    def match(self, branch: Branch) -> Optional[Action]:
        for idx, wc in enumerate(branch.conditions):
            if wc.poly.is_constant() and not wc.poly.is_zero():
                return Contradict(index=idx)
        return None
