"""
Clifford Core
Blades, multivectors and product tables of g(n, C) with e_i^2 = -1.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, Generic, Iterable, List, Mapping, Optional, Tuple, TypeVar

import pandas as pd

from src.errors import BoundsError, DimensionMismatchError

logger = logging.getLogger(__name__)

S = TypeVar("S")

MAX_TABLE_DIMENSION = 6

# mask -> name for g(3); bit i-1 stands for e_i
G3_NAMES: Dict[int, str] = {
    0b000: "1",
    0b001: "e1",
    0b010: "e2",
    0b100: "e3",
    0b011: "i",
    0b101: "j",
    0b110: "k",
    0b111: "z",
}
G3_MASKS: Dict[str, int] = {name: mask for mask, name in G3_NAMES.items()}


def mask_indices(mask: int) -> Tuple[int, ...]:
    indices = []
    position = 1
    while mask:
        if mask & 1:
            indices.append(position)
        mask >>= 1
        position += 1
    return tuple(indices)


@lru_cache(maxsize=None)
def mask_product(a: int, b: int) -> Tuple[int, int]:
    """(sign, mask) of e_A * e_B: reorder swaps plus one -1 per shared generator."""
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += bin(shifted & b).count("1")
        shifted >>= 1
    squares = bin(a & b).count("1")
    return (-1 if (swaps + squares) & 1 else 1), a ^ b


def blade_name(mask: int, n: int) -> str:
    if n == 3:
        return G3_NAMES[mask]
    if not mask:
        return "1"
    separator = "_" if n > 9 else ""
    return "e" + separator.join(str(i) for i in mask_indices(mask))


def parse_blade(name: str, n: int) -> int:
    """Inverse of ``blade_name``; also accepts e-index names such as ``e12`` in g(3)."""
    if n == 3 and name in G3_MASKS:
        return G3_MASKS[name]
    if name == "1":
        return 0
    if not name.startswith("e") or len(name) < 2:
        raise ValueError(f"unknown blade name: {name}")
    digits = name[1:].split("_") if "_" in name else list(name[1:])
    mask = 0
    previous = 0
    for digit in digits:
        index = int(digit)
        if index <= previous or index > n:
            raise ValueError(f"blade {name} is not a sorted index list within 1..{n}")
        mask |= 1 << (index - 1)
        previous = index
    return mask


@lru_cache(maxsize=None)
def generator_order(n: int) -> Tuple[int, ...]:
    """Blade masks sorted by grade, then lexicographically by index tuple."""
    if n < 0:
        raise BoundsError(f"negative dimension {n}")
    return tuple(sorted(range(1 << n), key=lambda m: (bin(m).count("1"), mask_indices(m))))


@dataclass(frozen=True)
class Blade:
    """Basis element e_A; ``mask`` bit i-1 is set when e_i is a factor."""

    mask: int
    n: int

    def __post_init__(self):
        if self.n < 0 or not 0 <= self.mask < (1 << self.n):
            raise BoundsError(f"mask {self.mask:b} does not fit in g({self.n})")

    @classmethod
    def from_name(cls, name: str, n: int = 3) -> "Blade":
        return cls(parse_blade(name, n), n)

    @property
    def indices(self) -> Tuple[int, ...]:
        return mask_indices(self.mask)

    @property
    def grade(self) -> int:
        return bin(self.mask).count("1")

    @property
    def name(self) -> str:
        return blade_name(self.mask, self.n)

    def __str__(self) -> str:
        return self.name


def blade_mul(a: Blade, b: Blade) -> Tuple[int, Blade]:
    if a.n != b.n:
        raise DimensionMismatchError(f"blades of g({a.n}) and g({b.n})")
    sign, mask = mask_product(a.mask, b.mask)
    return sign, Blade(mask, a.n)


def _coefficient_text(coeff: Any) -> Tuple[str, bool]:
    """Rendered coefficient and whether it is a single term."""
    text = str(coeff)
    if hasattr(coeff, "term_count"):
        return text, coeff.term_count() <= 1
    if hasattr(coeff, "terms"):
        return text, len(coeff.terms) <= 1
    if hasattr(coeff, "is_monomial_text"):
        return text, coeff.is_monomial_text()
    return text, True


class MultiVector(Generic[S]):
    """
    Element of g(n) with coefficients in an arbitrary commutative scalar ring.

    ``zero`` is the ring's zero; zero coefficients are never stored.
    """

    __slots__ = ("_n", "_coeffs", "_zero")

    def __init__(self, n: int, coeffs: Mapping[int, S], zero: S):
        limit = 1 << n
        self._n = n
        self._zero = zero
        self._coeffs: Dict[int, S] = {}
        for mask, value in coeffs.items():
            if not 0 <= mask < limit:
                raise BoundsError(f"mask {mask:b} does not fit in g({n})")
            if not value.is_zero():
                self._coeffs[mask] = value

    @classmethod
    def _build(cls, n: int, coeffs: Dict[int, S], zero: S) -> "MultiVector[S]":
        mv = cls.__new__(cls)
        mv._n = n
        mv._zero = zero
        mv._coeffs = {mask: value for mask, value in coeffs.items() if not value.is_zero()}
        return mv

    @classmethod
    def blade(cls, name: str, n: int, coeff: S, zero: S) -> "MultiVector[S]":
        return cls(n, {parse_blade(name, n): coeff}, zero)

    @classmethod
    def from_names(cls, terms: Mapping[str, S], n: int, zero: S) -> "MultiVector[S]":
        coeffs: Dict[int, S] = {}
        for name, value in terms.items():
            mask = parse_blade(name, n)
            coeffs[mask] = coeffs[mask] + value if mask in coeffs else value
        return cls(n, coeffs, zero)

    @property
    def n(self) -> int:
        return self._n

    @property
    def zero(self) -> S:
        return self._zero

    def coefficient(self, mask: int) -> S:
        return self._coeffs.get(mask, self._zero)

    def support(self) -> Tuple[int, ...]:
        """Masks with nonzero coefficient, in generator order."""
        order = generator_order(self._n)
        return tuple(mask for mask in order if mask in self._coeffs)

    def items(self) -> List[Tuple[int, S]]:
        return [(mask, self._coeffs[mask]) for mask in self.support()]

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "MultiVector") -> None:
        if other._n != self._n:
            raise DimensionMismatchError(f"multivectors of g({self._n}) and g({other._n})")

    def __add__(self, other: "MultiVector[S]") -> "MultiVector[S]":
        if not isinstance(other, MultiVector):
            return NotImplemented
        self._check(other)
        coeffs = dict(self._coeffs)
        for mask, value in other._coeffs.items():
            coeffs[mask] = coeffs[mask] + value if mask in coeffs else value
        return MultiVector._build(self._n, coeffs, self._zero)

    def __neg__(self) -> "MultiVector[S]":
        return MultiVector._build(self._n, {m: -v for m, v in self._coeffs.items()}, self._zero)

    def __sub__(self, other: "MultiVector[S]") -> "MultiVector[S]":
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiVector):
            return mv_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, factor: Any) -> "MultiVector[S]":
        return MultiVector._build(self._n, {m: v * factor for m, v in self._coeffs.items()}, self._zero)

    def map_scalars(self, fn: Callable[[S], Any], zero: Any) -> "MultiVector":
        """Apply a ring map to every coefficient (e.g. evaluation at a point)."""
        return MultiVector._build(self._n, {m: fn(v) for m, v in self._coeffs.items()}, zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        if other._n != self._n or self._coeffs.keys() != other._coeffs.keys():
            return False
        return all(self._coeffs[m] == other._coeffs[m] for m in self._coeffs)

    __hash__ = None

    def render(self) -> str:
        parts = []
        for mask, coeff in self.items():
            name = blade_name(mask, self._n)
            text, single = _coefficient_text(coeff)
            if not mask:
                parts.append(text if single else f"({text})")
            elif text == "1":
                parts.append(name)
            elif text == "-1":
                parts.append(f"-{name}")
            elif single:
                parts.append(f"{text}*{name}")
            else:
                parts.append(f"({text})*{name}")
        out = ""
        for part in parts:
            if not out:
                out = part
            elif part.startswith("-"):
                out += f" - {part[1:]}"
            else:
                out += f" + {part}"
        return out or "0"

    def to_json(self) -> List[Dict[str, str]]:
        return [{"blade": blade_name(mask, self._n), "coeff": str(coeff)} for mask, coeff in self.items()]

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MultiVector(g({self._n}): {self.render()})"


def mv_mul(x: MultiVector[S], y: MultiVector[S]) -> MultiVector[S]:
    """Bilinear extension of the blade product."""
    x._check(y)
    out: Dict[int, S] = {}
    for mask_a, coeff_a in x._coeffs.items():
        for mask_b, coeff_b in y._coeffs.items():
            sign, mask = mask_product(mask_a, mask_b)
            term = coeff_a * coeff_b
            if sign < 0:
                term = -term
            out[mask] = out[mask] + term if mask in out else term
    return MultiVector._build(x.n, out, x.zero)


def embed(x: MultiVector[S], n: int, k: int) -> MultiVector[S]:
    """Reinterpret x in g(n + k); masks are unchanged."""
    if k < 0:
        raise BoundsError(f"embedding needs k >= 0, got {k}")
    if x.n != n:
        raise DimensionMismatchError(f"multivector lives in g({x.n}), not g({n})")
    return MultiVector._build(n + k, dict(x._coeffs), x.zero)


@dataclass(frozen=True)
class ProductTable:
    """Signed blade products of g(n), rows and columns in generator order."""

    n: int
    order: Tuple[int, ...]
    cells: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def names(self) -> List[str]:
        return [blade_name(mask, self.n) for mask in self.order]

    def cell(self, row: str, col: str) -> Tuple[int, Blade]:
        r = self.order.index(parse_blade(row, self.n))
        c = self.order.index(parse_blade(col, self.n))
        sign, mask = self.cells[r][c]
        return sign, Blade(mask, self.n)

    def cell_text(self, r: int, c: int) -> str:
        sign, mask = self.cells[r][c]
        name = blade_name(mask, self.n)
        return name if sign > 0 else f"-{name}"

    def rows_text(self) -> List[List[str]]:
        size = len(self.order)
        return [[self.cell_text(r, c) for c in range(size)] for r in range(size)]

    def to_frame(self) -> pd.DataFrame:
        names = self.names
        return pd.DataFrame(self.rows_text(), index=names, columns=names)

    def render(self) -> str:
        return self.to_frame().to_string()

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "order": self.names, "rows": self.rows_text()}

    def mismatches(self, expected: Iterable[Iterable[str]]) -> List[Tuple[str, str, str, str]]:
        """Cells whose text differs from ``expected`` as (row, col, got, want)."""
        names = self.names
        found = []
        actual = self.rows_text()
        expected = [list(row) for row in expected]
        if len(expected) != len(actual) or any(len(row) != len(actual) for row in expected):
            raise DimensionMismatchError(f"expected a {len(actual)}x{len(actual)} table")
        for r, row in enumerate(expected):
            for c, want in enumerate(row):
                if actual[r][c] != want:
                    found.append((names[r], names[c], actual[r][c], want))
        return found


def build_table(n: int) -> ProductTable:
    if not 1 <= n <= MAX_TABLE_DIMENSION:
        raise BoundsError(f"table dimension must be in 1..{MAX_TABLE_DIMENSION}, got {n}")
    order = generator_order(n)
    cells = tuple(tuple(mask_product(a, b) for b in order) for a in order)
    logger.debug(f"Built product table for g({n}): {len(order)}x{len(order)}")
    return ProductTable(n=n, order=order, cells=cells)
