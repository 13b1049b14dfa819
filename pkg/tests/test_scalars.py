from fractions import Fraction

import numpy as np
import pytest

from src.errors import DimensionMismatchError, ScalarDomainError, SubstitutionError
from src.scalars import (
    I,
    ONE,
    ZERO,
    ExtensionElement,
    GaussianRational,
    Polynomial,
    default_relation,
    gauss_arith,
)
from tests.samples import CASES_PER_SEED, assignment, batches, extension, gaussian, polynomial

XY = ("x", "y")


def test_gauss_arith_examples():
    assert gauss_arith("mul", I, I) == GaussianRational(-1)
    x = GaussianRational(Fraction(2, 3), -5)
    assert gauss_arith("mul", ONE, x) == x
    assert gauss_arith("div", GaussianRational(1, 1), GaussianRational(1, -1)) == I
    assert gauss_arith("sub", x, x).is_zero()


def test_division_by_zero():
    with pytest.raises(ScalarDomainError, match="division by zero"):
        gauss_arith("div", ONE, ZERO)
    with pytest.raises(ArithmeticError):
        ONE / ZERO


def test_unknown_operation():
    with pytest.raises(ValueError):
        gauss_arith("pow", ONE, ONE)


def test_lowest_terms():
    x = GaussianRational(Fraction(6, -8), Fraction(10, 4))
    assert x.re == Fraction(-3, 4)
    assert x.re.denominator == 4
    assert x.im == Fraction(5, 2)


@pytest.mark.parametrize(
    "value, text",
    [
        (GaussianRational(Fraction(3, 4), 5), "3/4 + 5*I"),
        (I, "I"),
        (-I, "-I"),
        (GaussianRational(1, -2), "1 - 2*I"),
        (GaussianRational(0, Fraction(5, 4)), "5/4*I"),
        (GaussianRational(-7), "-7"),
        (ZERO, "0"),
    ],
)
def test_rendering(value, text):
    assert str(value) == text


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", GaussianRational(3)),
        ("-3/4", GaussianRational(Fraction(-3, 4))),
        ("I", I),
        ("-I", -I),
        ("5/4*I", GaussianRational(0, Fraction(5, 4))),
        ("1 - 2*I", GaussianRational(1, -2)),
        ("3/4 + 5*I", GaussianRational(Fraction(3, 4), 5)),
    ],
)
def test_parse(text, value):
    assert GaussianRational.parse(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "-", "+", "1--2", "+-I", "I*I", "1.5", "2*", "3/"])
def test_parse_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        GaussianRational.parse(text)


@pytest.mark.parametrize(
    "value, root",
    [
        (GaussianRational(-1), I),
        (GaussianRational(Fraction(9, 16)), GaussianRational(Fraction(3, 4))),
        (GaussianRational(0, 2), GaussianRational(1, 1)),
        (GaussianRational(0, -2), GaussianRational(1, -1)),
        (GaussianRational(3, 4), GaussianRational(2, 1)),
        (ZERO, ZERO),
    ],
)
def test_principal_sqrt(value, root):
    assert value.sqrt() == root


@pytest.mark.parametrize("value", [GaussianRational(2), GaussianRational(-3), GaussianRational(1, 1)])
def test_sqrt_absent(value):
    assert value.sqrt() is None
    assert value.square_roots() == []


def test_square_roots_of_one():
    assert ONE.square_roots() == [ONE, -ONE]
    assert ZERO.square_roots() == [ZERO]


@pytest.mark.parametrize("seed", batches(1000))
def test_field_axioms(seed):
    rng = np.random.default_rng(seed)
    for _ in range(CASES_PER_SEED):
        x, y, z = gaussian(rng), gaussian(rng), gaussian(rng)
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x and x * ONE == x
        if not x.is_zero():
            assert x * x.inverse() == ONE
        assert (x * x).sqrt() in (x, -x)


def test_polynomial_substitution_reaches_constant():
    variables = ("a18", "a28", "a78")
    a18, a28, a78 = Polynomial.generators(variables)
    p = a18 * a28 * a78 - a28 ** 2 - a78 ** 2 - 1
    step = p.substitute("a78", 0).substitute("a28", 0)
    assert step.is_constant()
    assert step == -1


def test_substitute_trivial_cases():
    x = Polynomial.variable("x", ("x",))
    assert x.substitute("x", 0).is_zero()
    assert (x * x - 1).substitute("x", 1).is_zero()


def test_substitute_rejects_self_reference():
    x, y = Polynomial.generators(XY)
    with pytest.raises(SubstitutionError):
        (x * y).substitute("x", x + y)
    with pytest.raises(SubstitutionError):
        x.substitute("z", y)


@pytest.mark.parametrize("seed", batches(1000, base=5000))
def test_substitution_commutes_with_evaluation(seed):
    rng = np.random.default_rng(seed)
    for _ in range(CASES_PER_SEED):
        p = polynomial(rng, XY, terms=4)
        r = polynomial(rng, XY, terms=2).substitute("x", 0)
        point = assignment(rng, XY)
        shifted = dict(point, x=r.evaluate(point))
        assert p.substitute("x", r).evaluate(point) == p.evaluate(shifted)


@pytest.mark.parametrize("seed", batches(1000, base=9000))
def test_polynomial_ring_axioms(seed):
    rng = np.random.default_rng(seed)
    for _ in range(CASES_PER_SEED):
        p, q, r = (polynomial(rng, XY) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert (p - p).is_zero()


def test_graded_lex_order_and_rendering():
    x, y = Polynomial.generators(XY)
    p = 1 - x + 3 * y ** 2 + x * y
    assert str(p) == "x*y + 3*y^2 - x + 1"
    assert str(Polynomial.zero(XY)) == "0"
    assert str(x * GaussianRational(1, 1)) == "(1 + I)*x"


def test_normalized_and_equations():
    x = Polynomial.variable("x", ("x",))
    assert (4 - 2 * x).normalized() == x - 2
    assert (x * x - 1).render_equation() == "x^2 = 1"
    assert Polynomial.constant(1, ("x",)).render_equation() == "1 = 0"
    assert (x * x).render_equation() == "x^2 = 0"


def test_constant_polynomials_hash_like_scalars():
    three = Polynomial.constant(3, XY)
    assert three == 3 and hash(three) == hash(3)
    assert three == GaussianRational(3) and hash(three) == hash(GaussianRational(3))
    assert len({three, GaussianRational(3), 3}) == 1
    assert hash(Polynomial.zero(XY)) == hash(0)
    point = GaussianRational(Fraction(1, 2), 1)
    assert hash(Polynomial.constant(point, ("a",))) == hash(point)
    assert hash(ExtensionElement(Polynomial.constant(point, ("a",)), 0)) == hash(point)


def test_variable_mismatch():
    x = Polynomial.variable("x", ("x",))
    y = Polynomial.variable("y", ("y",))
    with pytest.raises(DimensionMismatchError):
        x + y


def test_factor_helpers():
    x, y = Polynomial.generators(XY)
    p = x * y + x * x
    assert p.common_variable_factor() == "x"
    assert p.divide_by_variable("x") == x + y
    assert (x + y).common_variable_factor() is None
    assert (3 * y ** 2).single_variable_power() == ("y", 2)
    assert (x * y).single_variable_power() is None
    with pytest.raises(SubstitutionError):
        (x + 1).divide_by_variable("x")


def test_coefficients_in():
    x, y = Polynomial.generators(XY)
    parts = (x * x * y + 2 * y - x).coefficients_in("x")
    assert parts == {0: 2 * y, 1: Polynomial.constant(-1, XY), 2: y}


def test_rename_into_parameter():
    x, y = Polynomial.generators(XY)
    renamed = (-x * x - 1).rename({"x": "a"}, ("a",))
    assert renamed == default_relation()
    with pytest.raises(SubstitutionError):
        (x + y).rename({"x": "a"}, ("a",))


def test_extension_defining_relation():
    a = ExtensionElement.parameter()
    s = ExtensionElement.root()
    assert s * s == ExtensionElement(default_relation(), 0)
    assert (a + s) * (a - s) == 2 * a * a + 1
    assert ONE * s == s
    assert str(default_relation()) == "-a^2 - 1"


def test_extension_rendering():
    a = ExtensionElement.parameter()
    s = ExtensionElement.root()
    assert str(a + s) == "a + s"
    assert str(-s) == "-s"
    assert str(a * s) == "a*s"
    assert str((a + 1) * s) == "(a + 1)*s"
    assert str(ExtensionElement()) == "0"
    assert s.render_relation() == "s^2 = -a^2 - 1"


def test_extension_relations_must_agree():
    other = ExtensionElement.root(Polynomial.constant(-1, ("a",)))
    with pytest.raises(DimensionMismatchError):
        ExtensionElement.root() + other


@pytest.mark.parametrize(
    "alpha, sigma",
    [
        (ZERO, I),
        (ZERO, -I),
        (GaussianRational(0, Fraction(5, 4)), GaussianRational(Fraction(3, 4))),
        (GaussianRational(0, Fraction(5, 4)), GaussianRational(Fraction(-3, 4))),
    ],
)
@pytest.mark.parametrize("seed", batches(1000, base=300))
def test_extension_evaluation_is_a_homomorphism(seed, alpha, sigma):
    rng = np.random.default_rng(seed)
    for _ in range(CASES_PER_SEED):
        x, y, z = extension(rng), extension(rng), extension(rng)
        assert (x * y).evaluate(alpha, sigma) == x.evaluate(alpha, sigma) * y.evaluate(alpha, sigma)
        assert (x + y).evaluate(alpha, sigma) == x.evaluate(alpha, sigma) + y.evaluate(alpha, sigma)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_extension_evaluation_checks_root():
    with pytest.raises(ScalarDomainError):
        ExtensionElement.root().evaluate(0, 1)
