"""
Case Split Rules
Rules that fork a branch into finitely many exhaustive cases
"""
import logging
from typing import Optional

from rules.base import Action, BaseRule, Branch, Split, SplitCase, constant_step

logger = logging.getLogger(__name__)


class SquareRootSplitRule(BaseRule):
    """
    v^2 - c = 0 with constant c splits over the Gaussian-rational roots of c.

    A condition whose constant has no such root is skipped, so it can
    still end up as the terminal relation of a family.
    """

    name = "square-root"

    def match(self, branch: Branch) -> Optional[Action]:
        for wc in branch.conditions:
            poly = wc.poly
            used = poly.used_variables()
            if len(used) != 1:
                continue
            variable = used[0]
            parts = poly.coefficients_in(variable)
            if set(parts) - {0, 2} or 2 not in parts or not parts[2].is_constant():
                continue
            target = -(parts.get(0, poly - poly).constant_term() / parts[2].constant_term())
            roots = target.square_roots()
            if not roots:
                continue
            cases = tuple(
                SplitCase(tag=f"{variable}={root}", steps=(constant_step(self.name, variable, root, branch.variables),))
                for root in roots
            )
            return Split(condition=poly, cases=cases)
        return None


class FactorSplitRule(BaseRule):
    """
    A condition v*q = 0 splits into v = 0 and q = 0.

    Only fires once the cheaper rules are exhausted; the second case keeps
    the quotient in place of the original condition.
    """

    name = "factor"

    def match(self, branch: Branch) -> Optional[Action]:
        for idx, wc in enumerate(branch.conditions):
            variable = wc.poly.common_variable_factor()
            if variable is None:
                continue
            quotient = wc.poly.divide_by_variable(variable)
            cases = (
                SplitCase(tag=f"{variable}=0", steps=(constant_step(self.name, variable, 0, branch.variables),)),
                SplitCase(tag=f"{variable}!=0", replacement=(idx, quotient)),
            )
            return Split(condition=wc.poly, cases=cases)
        return None
