"""
Known Subalgebras
The eight 7-dimensional subalgebras of g(3) and the sign-pattern variants of
their two shapes.
"""

from itertools import product
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from src.clifford import MultiVector
from src.scalars import ZERO, ExtensionElement, GaussianRational, I, default_relation

RELATION = default_relation()
A = ExtensionElement.parameter(RELATION)
S = ExtensionElement.root(RELATION)

ONE_PARAMETER_NAMES = ("h1", "h2", "h3", "h4")
ISOLATED_NAMES = ("h5", "h6", "h7", "h8")
FAMILY_NAMES = ONE_PARAMETER_NAMES + ISOLATED_NAMES

# blade name -> coefficient, one mapping per basis vector
THEOREM_SUBALGEBRAS: Dict[str, List[Dict[str, Any]]] = {
    "h1": [{"1": 1}, {"e1": 1, "k": 1}, {"e2": 1, "k": A}, {"e3": 1, "k": S}, {"i": 1, "k": -S}, {"j": 1, "k": A}, {"z": 1}],
    "h2": [{"1": 1}, {"e1": 1, "k": 1}, {"e2": 1, "k": A}, {"e3": 1, "k": -S}, {"i": 1, "k": S}, {"j": 1, "k": A}, {"z": 1}],
    "h3": [{"1": 1}, {"e1": 1, "k": -1}, {"e2": 1, "k": A}, {"e3": 1, "k": S}, {"i": 1, "k": S}, {"j": 1, "k": -A}, {"z": 1}],
    "h4": [{"1": 1}, {"e1": 1, "k": -1}, {"e2": 1, "k": A}, {"e3": 1, "k": -S}, {"i": 1, "k": -S}, {"j": 1, "k": -A}, {"z": 1}],
    "h5": [{"1": 1}, {"e1": 1}, {"e2": 1, "j": 1}, {"e3": 1, "j": I}, {"i": 1, "j": I}, {"k": 1}, {"z": 1}],
    "h6": [{"1": 1}, {"e1": 1}, {"e2": 1, "j": 1}, {"e3": 1, "j": -I}, {"i": 1, "j": -I}, {"k": 1}, {"z": 1}],
    "h7": [{"1": 1}, {"e1": 1}, {"e2": 1, "j": -1}, {"e3": 1, "j": I}, {"i": 1, "j": -I}, {"k": 1}, {"z": 1}],
    "h8": [{"1": 1}, {"e1": 1}, {"e2": 1, "j": -1}, {"e3": 1, "j": -I}, {"i": 1, "j": I}, {"k": 1}, {"z": 1}],
}

Signs = Tuple[int, ...]


def _over_extension(value: Any) -> ExtensionElement:
    if isinstance(value, ExtensionElement):
        return value
    return ExtensionElement(value, 0, RELATION)


def _build(rows: Sequence[Mapping[str, Any]], symbolic: bool) -> List[MultiVector]:
    if symbolic:
        zero = ExtensionElement(0, 0, RELATION)
        lift = _over_extension
    else:
        zero = ZERO
        lift = GaussianRational.coerce
    return [MultiVector.from_names({name: lift(c) for name, c in row.items()}, 3, zero) for row in rows]


def is_one_parameter(name: str) -> bool:
    return name in ONE_PARAMETER_NAMES


def theorem_vectors(name: str) -> List[MultiVector]:
    """h1..h4 over the extension ring, h5..h8 over the Gaussian rationals."""
    if name not in THEOREM_SUBALGEBRAS:
        raise KeyError(f"unknown family {name}; expected one of {', '.join(FAMILY_NAMES)}")
    return _build(THEOREM_SUBALGEBRAS[name], symbolic=is_one_parameter(name))


def mutated_h5() -> List[MultiVector[GaussianRational]]:
    """h5 with e3 + I*j replaced by e3 + 2I*j; not closed."""
    rows = [dict(row) for row in THEOREM_SUBALGEBRAS["h5"]]
    rows[3] = {"e3": 1, "j": 2 * I}
    return _build(rows, symbolic=False)


def one_parameter_shape(signs: Signs) -> List[MultiVector[ExtensionElement]]:
    """1, e1 + s1 k, e2 + a k, e3 + s3 s k, i + si s k, j + sj a k, z for signs (s1, s3, si, sj)."""
    s1, s3, si, sj = signs
    rows = [
        {"1": 1},
        {"e1": 1, "k": s1},
        {"e2": 1, "k": A},
        {"e3": 1, "k": s3 * S},
        {"i": 1, "k": si * S},
        {"j": 1, "k": sj * A},
        {"z": 1},
    ]
    return _build(rows, symbolic=True)


def isolated_shape(signs: Signs) -> List[MultiVector[GaussianRational]]:
    """1, e1, e2 + s2 j, e3 + s3 I j, i + si I j, k, z for signs (s2, s3, si)."""
    s2, s3, si = signs
    rows = [
        {"1": 1},
        {"e1": 1},
        {"e2": 1, "j": s2},
        {"e3": 1, "j": s3 * I},
        {"i": 1, "j": si * I},
        {"k": 1},
        {"z": 1},
    ]
    return _build(rows, symbolic=False)


def sign_patterns(width: int) -> List[Signs]:
    return list(product((1, -1), repeat=width))


# sign patterns printed for h1..h4 (s1, s3, si, sj) and h5..h8 (s2, s3, si)
PRINTED_ONE_PARAMETER = {(1, 1, -1, 1), (1, -1, 1, 1), (-1, 1, 1, -1), (-1, -1, -1, -1)}
PRINTED_ISOLATED = {(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)}


def specialise(vectors: Sequence[MultiVector[ExtensionElement]], alpha: Any, sigma: Any) -> List[MultiVector]:
    """Evaluate a -> alpha, s -> sigma in every coefficient."""
    return [v.map_scalars(lambda c: c.evaluate(alpha, sigma), ZERO) for v in vectors]
