"""Seeded random operands shared by the property tests."""
from fractions import Fraction
from typing import List, Sequence

import numpy as np

from src.clifford import MultiVector
from src.scalars import ZERO, ExtensionElement, GaussianRational, Polynomial, default_relation


def gaussian(rng: np.random.Generator, bound: int = 5) -> GaussianRational:
    re_num, im_num = (int(x) for x in rng.integers(-bound, bound + 1, size=2))
    re_den, im_den = (int(x) for x in rng.integers(1, bound + 1, size=2))
    return GaussianRational(Fraction(re_num, re_den), Fraction(im_num, im_den))


def polynomial(rng: np.random.Generator, variables: Sequence[str], terms: int = 3, degree: int = 2) -> Polynomial:
    coeffs = {}
    for _ in range(terms):
        exponents = tuple(int(e) for e in rng.integers(0, degree + 1, size=len(variables)))
        coeffs[exponents] = gaussian(rng)
    return Polynomial(variables, coeffs)


def extension(rng: np.random.Generator) -> ExtensionElement:
    return ExtensionElement(polynomial(rng, ("a",)), polynomial(rng, ("a",)), default_relation())


def multivector(rng: np.random.Generator, n: int, density: float = 0.5) -> MultiVector[GaussianRational]:
    coeffs = {}
    for mask in range(1 << n):
        if rng.random() < density:
            coeffs[mask] = gaussian(rng, bound=3)
    return MultiVector(n, coeffs, ZERO)


def assignment(rng: np.random.Generator, variables: Sequence[str]) -> dict:
    return {name: gaussian(rng) for name in variables}


def seeds(count: int, base: int = 1000) -> List[int]:
    return list(range(base, base + count))


CASES_PER_SEED = 100


def batches(total: int, base: int = 1000) -> List[int]:
    """Seeds for ``total`` cases drawn ``CASES_PER_SEED`` at a time from one generator each."""
    return seeds(-(-total // CASES_PER_SEED), base)
