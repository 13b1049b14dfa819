"""
Subspaces
Canonical bases of codimension-one subspaces, forced-coefficient membership
residuals and an exact row-reduction membership oracle.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from src.clifford import MultiVector, blade_name, generator_order
from src.errors import BoundsError, DimensionMismatchError, EchelonShapeError
from src.scalars import ZERO, GaussianRational, Polynomial

logger = logging.getLogger(__name__)


def dimension_exponent(N: int) -> Optional[int]:
    """n with 2^n = N, or None when N is not a power of two."""
    if N < 1 or N & (N - 1):
        return None
    return N.bit_length() - 1


def parameter_name(t: int, p: int, N: int) -> str:
    return f"a{t}{p}" if N <= 9 else f"a{t}_{p}"


@dataclass(frozen=True)
class CoefficientVector:
    """Expansion coefficients x_1..x_{N-1} of a vector in a span."""

    values: Tuple[Any, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, idx: int) -> Any:
        return self.values[idx]

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class CanonicalBasis:
    """
    Basis m of the (N-1)-dimensional subspaces of an N-dimensional algebra.

    The pivot p = N + 1 - m is the omitted generator. Vectors are
    g_t + a_{t,p} g_p for t < p, followed by g_t for t > p.
    """

    m: int
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise BoundsError(f"canonical bases need N >= 2, got {self.N}")
        if not 1 <= self.m <= self.N:
            raise BoundsError(f"basis index must be in 1..{self.N}, got {self.m}")

    @property
    def pivot(self) -> int:
        return self.N + 1 - self.m

    @property
    def n(self) -> int:
        n = dimension_exponent(self.N)
        if n is None:
            raise DimensionMismatchError(f"N = {self.N} is not the dimension of a Clifford algebra")
        return n

    @property
    def params(self) -> Tuple[str, ...]:
        p = self.pivot
        return tuple(parameter_name(t, p, self.N) for t in range(1, p))

    variables = params

    @property
    def generators(self) -> Tuple[int, ...]:
        return generator_order(self.n)

    @property
    def slots(self) -> Tuple[int, ...]:
        """1-based generator positions leading each basis vector."""
        return tuple(t for t in range(1, self.N + 1) if t != self.pivot)

    @property
    def slot_masks(self) -> Tuple[int, ...]:
        order = self.generators
        return tuple(order[t - 1] for t in self.slots)

    @property
    def pivot_mask(self) -> int:
        return self.generators[self.pivot - 1]

    def vectors(self, values: Mapping[str, Any], one: Any, zero: Any) -> List[MultiVector]:
        """Basis vectors with each parameter replaced by ``values[name]``."""
        order = self.generators
        p = self.pivot
        pivot_mask = order[p - 1]
        out = []
        for t in self.slots:
            coeffs = {order[t - 1]: one}
            if t < p:
                coeffs[pivot_mask] = values[parameter_name(t, p, self.N)]
            out.append(MultiVector(self.n, coeffs, zero))
        return out

    def polynomial_vectors(self) -> List[MultiVector[Polynomial]]:
        variables = self.params
        one = Polynomial.constant(1, variables)
        zero = Polynomial.zero(variables)
        values = {name: Polynomial.variable(name, variables) for name in variables}
        return self.vectors(values, one, zero)

    def instantiate(self, values: Mapping[str, Any], one: Any = None) -> List[MultiVector]:
        """Concrete vectors over the ring of ``one`` (Gaussian rationals by default)."""
        one = GaussianRational(1) if one is None else one
        zero = one - one
        lifted = {name: one * values[name] for name in self.params}
        return self.vectors(lifted, one, zero)

    def render(self) -> str:
        vectors = self.polynomial_vectors()
        return ", ".join(f"a{idx} = {vector.render()}" for idx, vector in enumerate(vectors, start=1))


def canonical_bases(N: int) -> List[CanonicalBasis]:
    if N < 2:
        raise BoundsError(f"canonical bases need N >= 2, got {N}")
    return [CanonicalBasis(m, N) for m in range(1, N + 1)]


def forced_expansion(
    v: MultiVector, slot_masks: Sequence[int], pivot_mask: int, pivot_coeffs: Sequence[Any]
) -> Tuple[CoefficientVector, Any]:
    """
    Coefficients read off the slot coordinates, and the pivot residual.

    ``pivot_coeffs`` lists the pivot coordinate of each basis vector whose
    slot precedes the pivot, in slot order.
    """
    coeffs = tuple(v.coefficient(mask) for mask in slot_masks)
    residual = v.coefficient(pivot_mask)
    for x, c in zip(coeffs, pivot_coeffs):
        if not x.is_zero():
            residual = residual - x * c
    return CoefficientVector(coeffs), residual


def membership_residual(v: MultiVector[Polynomial], cb: CanonicalBasis) -> Tuple[CoefficientVector, Polynomial]:
    if v.n != cb.n:
        raise DimensionMismatchError(f"vector of g({v.n}) against a basis of g({cb.n})")
    variables = cb.params
    pivot_coeffs = [Polynomial.variable(name, variables) for name in variables]
    return forced_expansion(v, cb.slot_masks, cb.pivot_mask, pivot_coeffs)


def row_reduce(rows: List[List[GaussianRational]], width: int) -> List[int]:
    """
    In-place reduced row echelon form over the first ``width`` columns.

    Row operations act on the whole row, so columns past ``width`` carry
    along as an augmented block. Returns the pivot columns; rows past the
    rank are left zero on the leading block.
    """
    pivots: List[int] = []
    pivot_row = 0
    for col in range(width):
        found = None
        for r in range(pivot_row, len(rows)):
            if not rows[r][col].is_zero():
                found = r
                break
        if found is None:
            continue
        rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
        lead = rows[pivot_row][col]
        if lead != 1:
            inverse = lead.inverse()
            rows[pivot_row] = [value * inverse if not value.is_zero() else value for value in rows[pivot_row]]
        source = rows[pivot_row]
        for r in range(len(rows)):
            if r == pivot_row:
                continue
            factor = rows[r][col]
            if factor.is_zero():
                continue
            rows[r] = [
                value - factor * s if not s.is_zero() else value
                for value, s in zip(rows[r], source)
            ]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return pivots


class SpanOracle:
    """
    Exact membership in the span of fixed Gaussian-rational vectors.

    The vectors are reduced once, tracking the row operations, so each
    membership query is a single sweep over the pivots.
    """

    def __init__(self, vectors: Sequence[MultiVector[GaussianRational]]):
        if not vectors:
            raise DimensionMismatchError("span of an empty list")
        n = vectors[0].n
        if any(v.n != n for v in vectors):
            raise DimensionMismatchError("vectors of different dimensions")
        self.n = n
        self.order = generator_order(n)
        self.count = len(vectors)
        width = len(self.order)
        rows = []
        for idx, v in enumerate(vectors):
            coords = [v.coefficient(mask) for mask in self.order]
            tracker = [ZERO] * self.count
            tracker[idx] = GaussianRational(1)
            rows.append(coords + tracker)
        pivots = row_reduce(rows, width)
        self.rank = len(pivots)
        self.pivots = pivots
        self.rows = rows[: self.rank]

    def expand(self, v: MultiVector[GaussianRational]) -> Optional[CoefficientVector]:
        if v.n != self.n:
            raise DimensionMismatchError(f"vector of g({v.n}) against a span in g({self.n})")
        width = len(self.order)
        remainder = {mask: v.coefficient(mask) for mask in v.support()}
        coeffs = [ZERO] * self.count
        for row, col in zip(self.rows, self.pivots):
            factor = remainder.get(self.order[col], ZERO)
            if factor.is_zero():
                continue
            for c in range(col, width):
                if row[c].is_zero():
                    continue
                mask = self.order[c]
                remainder[mask] = remainder.get(mask, ZERO) - factor * row[c]
            for idx in range(self.count):
                tracked = row[width + idx]
                if not tracked.is_zero():
                    coeffs[idx] = coeffs[idx] + factor * tracked
        if any(not value.is_zero() for value in remainder.values()):
            return None
        return CoefficientVector(tuple(coeffs))

    def contains(self, v: MultiVector[GaussianRational]) -> bool:
        return self.expand(v) is not None


def rref_membership(
    v: MultiVector[GaussianRational], vectors: Sequence[MultiVector[GaussianRational]]
) -> Optional[CoefficientVector]:
    return SpanOracle(vectors).expand(v)


def rank(vectors: Sequence[MultiVector[GaussianRational]]) -> int:
    return SpanOracle(vectors).rank


def canonical_form(
    vectors: Sequence[MultiVector[GaussianRational]],
) -> Tuple[CanonicalBasis, Dict[str, GaussianRational]]:
    """Canonical basis and parameter values of the span of an (N-1)-dimensional spanning set."""
    oracle = SpanOracle(vectors)
    N = len(oracle.order)
    if oracle.rank != N - 1:
        raise EchelonShapeError(f"span has dimension {oracle.rank}, expected {N - 1}")
    missing = next(col for col in range(N) if col not in oracle.pivots)
    pivot = missing + 1
    cb = CanonicalBasis(N + 1 - pivot, N)
    values = {}
    for row, col in zip(oracle.rows, oracle.pivots):
        if col < missing:
            values[parameter_name(col + 1, pivot, N)] = row[missing]
    logger.debug(f"Canonical form: basis {cb.m} of N={N} with pivot {blade_name(oracle.order[missing], oracle.n)}")
    return cb, values
