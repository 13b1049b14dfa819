import numpy as np
import pytest

from src.clifford import MultiVector
from src.errors import BoundsError, DimensionMismatchError, EchelonShapeError
from src.scalars import I, ONE, ZERO, GaussianRational, Polynomial
from src.subspace import (
    CanonicalBasis,
    SpanOracle,
    canonical_bases,
    canonical_form,
    dimension_exponent,
    membership_residual,
    rank,
    row_reduce,
    rref_membership,
)
from tests.samples import assignment, gaussian, multivector, seeds


def test_g3_bases(g3_bases):
    assert len(g3_bases) == 8
    assert [cb.pivot for cb in g3_bases] == [8, 7, 6, 5, 4, 3, 2, 1]
    assert g3_bases[1].render() == (
        "a1 = 1 + a17*k, a2 = e1 + a27*k, a3 = e2 + a37*k, a4 = e3 + a47*k, "
        "a5 = i + a57*k, a6 = j + a67*k, a7 = z"
    )
    assert g3_bases[7].params == ()
    assert g3_bases[7].render() == "a1 = e1, a2 = e2, a3 = e3, a4 = i, a5 = j, a6 = k, a7 = z"
    assert g3_bases[0].params == ("a18", "a28", "a38", "a48", "a58", "a68", "a78")


def test_smallest_bases():
    bases = canonical_bases(2)
    assert [cb.render() for cb in bases] == ["a1 = 1 + a12*e1", "a1 = e1"]


def test_basis_bounds():
    with pytest.raises(BoundsError):
        canonical_bases(1)
    with pytest.raises(BoundsError):
        CanonicalBasis(9, 8)
    with pytest.raises(BoundsError):
        CanonicalBasis(0, 8)
    with pytest.raises(DimensionMismatchError):
        CanonicalBasis(1, 6).n
    assert dimension_exponent(8) == 3
    assert dimension_exponent(6) is None


def test_parameter_names_past_nine():
    cb = CanonicalBasis(1, 16)
    assert cb.params[0] == "a1_16"
    assert cb.params[-1] == "a15_16"


def test_membership_residuals_of_basis_two(g3_bases):
    cb = g3_bases[1]
    vectors = cb.polynomial_vectors()
    a17, a27 = (Polynomial.variable(name, cb.params) for name in ("a17", "a27"))

    coeffs, residual = membership_residual(vectors[0] * vectors[6], cb)
    assert residual == a17 * a27
    assert coeffs[1] == -a17
    assert coeffs[6] == 1

    _, residual = membership_residual(vectors[1] * vectors[6], cb)
    assert residual == a27 * a27 - 1
    assert residual.normalized().render_equation() == "a27^2 = 1"


def test_membership_of_zero(g3_bases):
    cb = g3_bases[1]
    zero = Polynomial.zero(cb.params)
    coeffs, residual = membership_residual(MultiVector(3, {}, zero), cb)
    assert residual.is_zero()
    assert all(c.is_zero() for c in coeffs)
    assert len(coeffs) == 7


def test_membership_dimension_mismatch(g3_bases):
    zero = Polynomial.zero(g3_bases[1].params)
    with pytest.raises(DimensionMismatchError):
        membership_residual(MultiVector(4, {}, zero), g3_bases[1])


@pytest.mark.parametrize("seed", seeds(10, base=40))
def test_escaping_generators(g3_bases, seed):
    rng = np.random.default_rng(seed)
    basis4 = g3_bases[3].instantiate(assignment(rng, g3_bases[3].params))
    basis5 = g3_bases[4].instantiate(assignment(rng, g3_bases[4].params))
    i = MultiVector.from_names({"i": ONE}, 3, ZERO)
    e3 = MultiVector.from_names({"e3": ONE}, 3, ZERO)
    assert rref_membership(i, basis4) is None
    assert rref_membership(-i, basis4) is None
    assert rref_membership(e3, basis5) is None


def test_first_vector_expands_to_unit(g3_bases):
    vectors = g3_bases[2].instantiate({name: I for name in g3_bases[2].params})
    expansion = rref_membership(vectors[0], vectors)
    assert expansion.values == (ONE,) + (ZERO,) * 6


def _lift(v: MultiVector, cb: CanonicalBasis) -> MultiVector:
    zero = Polynomial.zero(cb.params)
    return v.map_scalars(lambda c: Polynomial.constant(c, cb.params), zero)


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("seed", seeds(25, base=2000))
def test_residual_agrees_with_row_reduction(m, seed):
    rng = np.random.default_rng(seed)
    cb = CanonicalBasis(m, 8)
    values = assignment(rng, cb.params)
    vectors = cb.instantiate(values)
    oracle = SpanOracle(vectors)
    assert oracle.rank == 7
    for _ in range(8):
        target = MultiVector(3, {}, ZERO)
        for v in vectors:
            target = target + v * gaussian(rng, bound=3)
        if rng.random() < 0.5:
            target = target + multivector(rng, 3, density=0.2)
        coeffs, residual = membership_residual(_lift(target, cb), cb)
        expansion = oracle.expand(target)
        assert residual.evaluate(values).is_zero() == (expansion is not None)
        if expansion is not None:
            assert tuple(c.evaluate(values) for c in coeffs) == expansion.values


@pytest.mark.parametrize("seed", seeds(50, base=3000))
def test_canonical_form_is_unique(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, 5))
    cb = CanonicalBasis(m, 4)
    values = assignment(rng, cb.params)
    vectors = cb.instantiate(values)
    mixed = []
    for _ in range(3):
        combo = MultiVector(2, {}, ZERO)
        for v in vectors:
            combo = combo + v * gaussian(rng, bound=4)
        mixed.append(combo)
    if rank(mixed) < 3:
        pytest.skip("random mixing was singular")
    found, found_values = canonical_form(mixed)
    assert found == cb
    assert found_values == values
    assert canonical_form(vectors) == (cb, values)


def test_canonical_form_needs_full_rank():
    e1 = MultiVector.from_names({"e1": ONE}, 2, ZERO)
    with pytest.raises(EchelonShapeError):
        canonical_form([e1, e1 * GaussianRational(2), e1 * I])


def test_span_of_nothing():
    with pytest.raises(DimensionMismatchError):
        SpanOracle([])


def test_row_reduce_tracks_augmented_block():
    rows = [
        [GaussianRational(2), GaussianRational(4), ONE, ZERO],
        [GaussianRational(1), GaussianRational(3), ZERO, ONE],
    ]
    assert row_reduce(rows, 2) == [0, 1]
    assert rows[0][:2] == [ONE, ZERO]
    assert rows[1][:2] == [ZERO, ONE]
    # inverse of [[2, 4], [1, 3]]
    assert rows[0][2:] == [GaussianRational(3, 0) / 2, GaussianRational(-2)]
    assert rows[1][2:] == [GaussianRational(-1) / 2, ONE]
