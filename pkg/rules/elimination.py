"""
Elimination Rules
Rules that remove a variable by a forced substitution
"""
import logging
from typing import List, Optional

from rules.base import Action, BaseRule, Branch, Step, Substitute, constant_step

logger = logging.getLogger(__name__)


class ZeroVariableRule(BaseRule):
    """
    c*v^k = 0 with c != 0 forces v = 0.

    Takes the first such condition in list order.
    """

    name = "zero-variable"

    def match(self, branch: Branch) -> Optional[Action]:
        for wc in branch.conditions:
            found = wc.poly.single_variable_power()
            if found is not None:
                variable, _ = found
                return Substitute(steps=(constant_step(self.name, variable, 0, branch.variables),))
        return None


class PairSumRule(BaseRule):
    """
    If p - q or p + q is c*v^k for two conditions p, q, then v = 0.

    One pass collects every such variable (first discovery order over
    pairs i < j) and eliminates them together.
    """

    name = "pair-sum"

    def match(self, branch: Branch) -> Optional[Action]:
        polys = branch.polys()
        found: List[str] = []
        for i in range(len(polys)):
            for j in range(i + 1, len(polys)):
                for combined in (polys[i] - polys[j], polys[i] + polys[j]):
                    hit = combined.single_variable_power()
                    if hit is not None and hit[0] not in found:
                        found.append(hit[0])
        if not found:
            return None
        return Substitute(steps=tuple(constant_step(self.name, v, 0, branch.variables) for v in found))


class LinearEliminationRule(BaseRule):
    """
    A condition c*v + r with constant c != 0 and v-free r gives v = -r/c.

    Takes the first condition in list order; among its eligible variables
    the last declared one is eliminated.
    """

    name = "linear"

    def match(self, branch: Branch) -> Optional[Action]:
        for wc in branch.conditions:
            poly = wc.poly
            for variable in reversed(poly.used_variables()):
                if poly.degree_in(variable) != 1:
                    continue
                parts = poly.coefficients_in(variable)
                slope = parts[1]
                if not slope.is_constant():
                    continue
                remainder = parts.get(0, poly - poly)
                value = -remainder.scale(slope.constant_term().inverse())
                return Substitute(steps=(Step(rule=self.name, variable=variable, value=value),))
        return None
