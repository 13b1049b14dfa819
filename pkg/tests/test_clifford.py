import numpy as np
import pytest

from src.clifford import (
    Blade,
    MultiVector,
    blade_mul,
    blade_name,
    build_table,
    embed,
    generator_order,
    mask_product,
    parse_blade,
)
from src.errors import BoundsError, DimensionMismatchError
from src.scalars import I, ONE, ZERO, GaussianRational, Polynomial
from tests.samples import CASES_PER_SEED, batches, multivector


def g3(name: str) -> Blade:
    return Blade.from_name(name, 3)


def mv(terms, n=3):
    return MultiVector.from_names({name: GaussianRational.coerce(c) for name, c in terms.items()}, n, ZERO)


@pytest.mark.parametrize(
    "left, right, sign, result",
    [
        ("e1", "e1", -1, "1"),
        ("e2", "e3", 1, "k"),
        ("z", "z", 1, "1"),
        ("i", "j", 1, "k"),
        ("e3", "i", 1, "z"),
        ("e2", "e1", -1, "i"),
    ],
)
def test_blade_mul_examples(left, right, sign, result):
    assert blade_mul(g3(left), g3(right)) == (sign, g3(result))


@pytest.mark.parametrize("name", ["1", "e1", "e2", "e3", "i", "j", "k", "z"])
def test_identity_blade(name):
    assert blade_mul(g3("1"), g3(name)) == (1, g3(name))
    assert blade_mul(g3(name), g3("1")) == (1, g3(name))


def test_blade_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        blade_mul(Blade(1, 3), Blade(1, 4))


def test_blade_bounds():
    with pytest.raises(BoundsError):
        Blade(8, 3)


def test_generator_order_and_names():
    assert generator_order(3) == (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
    assert [blade_name(m, 3) for m in generator_order(3)] == ["1", "e1", "e2", "e3", "i", "j", "k", "z"]
    assert blade_name(0b1011, 4) == "e124"
    assert blade_name(0b1000000001, 10) == "e1_10"
    assert parse_blade("e124", 4) == 0b1011
    assert parse_blade("e12", 3) == parse_blade("i", 3)
    k = g3("k")
    assert k.indices == (2, 3) and k.grade == 2 and str(k) == "k"
    with pytest.raises(ValueError):
        parse_blade("e21", 3)
    with pytest.raises(ValueError):
        parse_blade("e4", 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_generators_anticommute(n):
    for a in range(n):
        for b in range(n):
            left = mask_product(1 << a, 1 << b)
            right = mask_product(1 << b, 1 << a)
            if a == b:
                assert left == (-1, 0)
            else:
                assert left == (-right[0], right[1])


def test_sign_and_mask_for_all_pairs():
    for a in range(16):
        for b in range(16):
            sign, mask = mask_product(a, b)
            assert sign in (1, -1)
            assert mask == a ^ b


def test_table_matches_reference(reference_table):
    table = build_table(3)
    assert table.mismatches(reference_table) == []
    assert table.rows_text() == [list(row) for row in reference_table]
    assert table.cell("i", "j") == (1, g3("k"))
    assert table.cell("e3", "i") == (1, g3("z"))


def test_table_mismatch_is_reported(reference_table):
    broken = [list(row) for row in reference_table]
    broken[1][1] = "1"
    assert build_table(3).mismatches(broken) == [("e1", "e1", "-1", "1")]
    with pytest.raises(DimensionMismatchError):
        build_table(3).mismatches(broken[:7])


def test_smallest_table():
    table = build_table(1)
    assert table.names == ["1", "e1"]
    assert table.rows_text() == [["1", "e1"], ["e1", "-1"]]


@pytest.mark.parametrize("n", [0, 7, -1])
def test_table_bounds(n):
    with pytest.raises(BoundsError):
        build_table(n)


def test_table_views():
    table = build_table(3)
    frame = table.to_frame()
    assert frame.shape == (8, 8)
    assert frame.loc["i", "j"] == "k"
    assert frame.loc["z", "z"] == "1"
    assert "e1" in table.render()
    payload = table.to_json()
    assert payload["order"] == ["1", "e1", "e2", "e3", "i", "j", "k", "z"]
    assert payload["rows"][1][1] == "-1"


def test_symbolic_product_from_basis_one():
    variables = ("a38", "a48")
    a38, a48 = Polynomial.generators(variables)
    one = Polynomial.constant(1, variables)
    zero = Polynomial.zero(variables)
    left = MultiVector.from_names({"e2": one, "z": a38}, 3, zero)
    right = MultiVector.from_names({"e3": one, "z": a48}, 3, zero)
    expected = MultiVector.from_names({"k": one, "1": a38 * a48, "j": a48, "i": -a38}, 3, zero)
    assert left * right == expected


def test_symbolic_product_from_basis_two():
    variables = ("a27",)
    a27 = Polynomial.variable("a27", variables)
    one = Polynomial.constant(1, variables)
    zero = Polynomial.zero(variables)
    left = MultiVector.from_names({"e1": one, "k": a27}, 3, zero)
    z = MultiVector.blade("z", 3, one, zero)
    assert left * z == MultiVector.from_names({"k": -one, "e1": -a27}, 3, zero)


def test_product_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        mv({"e1": 1}) * mv({"e1": 1}, n=4)


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("seed", batches(1000, base=700))
def test_associativity(n, seed):
    rng = np.random.default_rng(seed)
    one = MultiVector(n, {0: ONE}, ZERO)
    for _ in range(CASES_PER_SEED):
        x, y, z = multivector(rng, n), multivector(rng, n), multivector(rng, n)
        assert (x * y) * z == x * (y * z)
        assert x * one == x and one * x == x


@pytest.mark.parametrize("k", [1, 2])
@pytest.mark.parametrize("seed", batches(1000, base=1500))
def test_embedding_is_a_homomorphism(seed, k):
    rng = np.random.default_rng(seed)
    for _ in range(CASES_PER_SEED):
        x, y = multivector(rng, 3), multivector(rng, 3)
        assert embed(x * y, 3, k) == embed(x, 3, k) * embed(y, 3, k)
        assert embed(x + y, 3, k) == embed(x, 3, k) + embed(y, 3, k)


def test_embedding_examples():
    k = mv({"k": 1})
    embedded = embed(k, 3, 1)
    assert embedded.n == 4
    assert embedded.render() == "e23"
    e1 = mv({"e1": 1})
    assert embed(e1 * e1, 3, 1) == embed(e1, 3, 1) * embed(e1, 3, 1)
    assert embed(e1 * e1, 3, 1) == MultiVector(4, {0: GaussianRational(-1)}, ZERO)
    with pytest.raises(BoundsError):
        embed(k, 3, -1)
    with pytest.raises(DimensionMismatchError):
        embed(k, 4, 1)


def test_rendering():
    assert mv({"e1": 1, "k": 1}).render() == "e1 + k"
    assert mv({"e3": 1, "j": I}).render() == "e3 + I*j"
    assert mv({"i": 1, "k": -2}).render() == "i - 2*k"
    assert mv({"1": GaussianRational(1, 1), "z": GaussianRational(1, -1)}).render() == "(1 + I) + (1 - I)*z"
    assert mv({}).render() == "0"
    assert mv({"z": 1, "1": 3}).to_json() == [{"blade": "1", "coeff": "3"}, {"blade": "z", "coeff": "1"}]


def test_zero_coefficients_are_dropped():
    x = mv({"e1": 1, "e2": 0})
    assert x.support() == (0b001,)
    assert (x - x).is_zero()
