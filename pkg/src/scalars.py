"""
Exact Scalars
Gaussian rationals, multivariate polynomials over them and the quadratic
extension ring that carries sqrt(-1 - a^2).
"""

import math
import re
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.errors import DimensionMismatchError, ScalarDomainError, SubstitutionError

Rational = Union[int, Fraction]
Exponents = Tuple[int, ...]

_TERM_PATTERN = re.compile(r"[+-]?[^+-]+")
_TERM_SYNTAX = re.compile(r"[+-]?(?:\d+(?:/\d+)?(?:\*?I)?|I)")


def _exact_rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


class GaussianRational:
    """
    Element re + im*I of Q(sqrt(-1)).

    Both parts are ``fractions.Fraction`` values, so lowest terms and a
    positive denominator come for free. Instances are immutable.
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self._re = re if type(re) is Fraction else Fraction(re)
        self._im = im if type(im) is Fraction else Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @staticmethod
    def coerce(value: Any) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """Read forms such as ``3``, ``-3/4``, ``I``, ``5/4*I`` or ``1 - 2*I``."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty Gaussian rational")
        terms = _TERM_PATTERN.findall(compact)
        if "".join(terms) != compact or not all(_TERM_SYNTAX.fullmatch(term) for term in terms):
            raise ValueError(f"malformed Gaussian rational: {text!r}")
        real, imag = Fraction(0), Fraction(0)
        for term in terms:
            if term.endswith("I"):
                factor = term[:-1]
                if factor.endswith("*"):
                    factor = factor[:-1]
                if factor in ("", "+", "-"):
                    factor += "1"
                imag += Fraction(factor)
            else:
                real += Fraction(term)
        return cls(real, imag)

    def is_zero(self) -> bool:
        return not self._re and not self._im

    def is_real(self) -> bool:
        return not self._im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussianRational":
        norm = self.norm()
        if not norm:
            raise ScalarDomainError("division by zero")
        return GaussianRational(self._re / norm, -self._im / norm)

    def sqrt(self) -> Optional["GaussianRational"]:
        """Principal square root (positive real part, else positive imaginary part), or None."""
        x, y = self._re, self._im
        if not y:
            if x >= 0:
                root = _exact_rational_sqrt(x)
                return None if root is None else GaussianRational(root)
            root = _exact_rational_sqrt(-x)
            return None if root is None else GaussianRational(0, root)
        modulus = _exact_rational_sqrt(x * x + y * y)
        if modulus is None:
            return None
        real = _exact_rational_sqrt((x + modulus) / 2)
        if not real:
            return None
        return GaussianRational(real, y / (2 * real))

    def square_roots(self) -> List["GaussianRational"]:
        """All Gaussian-rational square roots, principal root first."""
        root = self.sqrt()
        if root is None:
            return []
        if root.is_zero():
            return [root]
        return [root, -root]

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self._re + other, self._im)
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self._re - other, self._im)
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussianRational(other - self._re, -self._im)

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            return GaussianRational(self._re * other, self._im * other)
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return GaussianRational(other) * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __pow__(self, exponent: int) -> "GaussianRational":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return not self._im and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self) -> str:
        real, imag = self._re, self._im
        if not imag:
            return str(real)
        magnitude = abs(imag)
        imag_text = "I" if magnitude == 1 else f"{magnitude}*I"
        if not real:
            return imag_text if imag > 0 else f"-{imag_text}"
        sign = "+" if imag > 0 else "-"
        return f"{real} {sign} {imag_text}"

    def is_monomial_text(self) -> bool:
        """True when the rendering has no inner sum, so it can prefix a factor."""
        return not self._re or not self._im


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gauss_arith(op: str, x: GaussianRational, y: GaussianRational) -> GaussianRational:
    """Dispatch one field operation by name: add, sub, mul or div."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation: {op}")


def _grlex_key(item: Tuple[Exponents, GaussianRational]):
    exponents = item[0]
    return (-sum(exponents), tuple(-e for e in exponents))


def _monomial_text(variables: Sequence[str], exponents: Exponents) -> str:
    factors = []
    for name, power in zip(variables, exponents):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


def _join_terms(texts: Iterable[str]) -> str:
    out = ""
    for text in texts:
        if not out:
            out = text
        elif text.startswith("-"):
            out += f" - {text[1:]}"
        else:
            out += f" + {text}"
    return out or "0"


def _scaled_text(coeff: GaussianRational, factor: str) -> str:
    if not factor:
        return str(coeff)
    if coeff == 1:
        return factor
    if coeff == -1:
        return f"-{factor}"
    if coeff.is_monomial_text():
        return f"{coeff}*{factor}"
    return f"({coeff})*{factor}"


class Polynomial:
    """
    Sparse polynomial over the Gaussian rationals in a declared variable tuple.

    Terms are kept as a tuple of (exponents, coefficient) pairs sorted in
    descending graded-lex order with no zero coefficients, so two polynomials
    are equal exactly when their variables and term tuples are equal.
    """

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Exponents, Any]] = None):
        self._variables = tuple(variables)
        if len(set(self._variables)) != len(self._variables):
            raise SubstitutionError(f"duplicate variable names in {self._variables}")
        cleaned: Dict[Exponents, GaussianRational] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(exponents)
            if len(exponents) != len(self._variables) or any(e < 0 for e in exponents):
                raise DimensionMismatchError(
                    f"exponent vector {exponents} does not fit variables {self._variables}"
                )
            value = GaussianRational.coerce(coeff)
            if not value.is_zero():
                cleaned[exponents] = value
        self._terms = tuple(sorted(cleaned.items(), key=_grlex_key))
        self._hash = None

    @classmethod
    def _build(cls, variables: Tuple[str, ...], terms: Dict[Exponents, GaussianRational]) -> "Polynomial":
        poly = cls.__new__(cls)
        poly._variables = variables
        poly._terms = tuple(sorted(((e, c) for e, c in terms.items() if not c.is_zero()), key=_grlex_key))
        poly._hash = None
        return poly

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables)

    @classmethod
    def constant(cls, value: Any, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Polynomial":
        variables = tuple(variables)
        if name not in variables:
            raise SubstitutionError(f"undeclared variable {name}")
        exponents = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exponents: 1})

    @classmethod
    def generators(cls, variables: Sequence[str]) -> List["Polynomial"]:
        return [cls.variable(name, variables) for name in variables]

    # inspection

    @property
    def variables(self) -> Tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> Tuple[Tuple[Exponents, GaussianRational], ...]:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(self._terms[0][0]))

    def constant_term(self) -> GaussianRational:
        for exponents, coeff in self._terms:
            if not any(exponents):
                return coeff
        return ZERO

    def leading_coefficient(self) -> GaussianRational:
        return self._terms[0][1] if self._terms else ZERO

    def used_variables(self) -> Tuple[str, ...]:
        used = [False] * len(self._variables)
        for exponents, _ in self._terms:
            for idx, power in enumerate(exponents):
                if power:
                    used[idx] = True
        return tuple(name for name, flag in zip(self._variables, used) if flag)

    def degree_in(self, var: str) -> int:
        idx = self._index(var)
        return max((exponents[idx] for exponents, _ in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(exponents) for exponents, _ in self._terms), default=0)

    def coefficients_in(self, var: str) -> Dict[int, "Polynomial"]:
        """Split into {power: coefficient polynomial} with respect to one variable."""
        idx = self._index(var)
        parts: Dict[int, Dict[Exponents, GaussianRational]] = {}
        for exponents, coeff in self._terms:
            power = exponents[idx]
            stripped = exponents[:idx] + (0,) + exponents[idx + 1:]
            parts.setdefault(power, {})[stripped] = coeff
        return {power: Polynomial._build(self._variables, terms) for power, terms in sorted(parts.items())}

    def common_variable_factor(self) -> Optional[str]:
        """First declared variable dividing every term, if any."""
        if not self._terms:
            return None
        for idx, name in enumerate(self._variables):
            if all(exponents[idx] for exponents, _ in self._terms):
                return name
        return None

    def divide_by_variable(self, var: str) -> "Polynomial":
        idx = self._index(var)
        terms = {}
        for exponents, coeff in self._terms:
            if not exponents[idx]:
                raise SubstitutionError(f"{var} does not divide {self}")
            terms[exponents[:idx] + (exponents[idx] - 1,) + exponents[idx + 1:]] = coeff
        return Polynomial._build(self._variables, terms)

    def single_variable_power(self) -> Optional[Tuple[str, int]]:
        """(v, k) when the polynomial is c*v^k with k >= 1, else None."""
        if len(self._terms) != 1:
            return None
        exponents = self._terms[0][0]
        nonzero = [(idx, power) for idx, power in enumerate(exponents) if power]
        if len(nonzero) != 1:
            return None
        idx, power = nonzero[0]
        return self._variables[idx], power

    def _index(self, var: str) -> int:
        try:
            return self._variables.index(var)
        except ValueError:
            raise SubstitutionError(f"undeclared variable {var} (declared: {', '.join(self._variables)})")

    # arithmetic

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other._variables != self._variables:
                raise DimensionMismatchError(
                    f"polynomials over different variables: {self._variables} vs {other._variables}"
                )
            return other
        if isinstance(other, (GaussianRational, int, Fraction)):
            return Polynomial.constant(other, self._variables)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponents, coeff in other._terms:
            terms[exponents] = terms[exponents] + coeff if exponents in terms else coeff
        return Polynomial._build(self._variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._build(self._variables, {e: -c for e, c in self._terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms: Dict[Exponents, GaussianRational] = {}
        for left, lc in self._terms:
            for right, rc in other._terms:
                exponents = tuple(a + b for a, b in zip(left, right))
                product = lc * rc
                terms[exponents] = terms[exponents] + product if exponents in terms else product
        return Polynomial._build(self._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Polynomial.constant(1, self._variables)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, factor: Any) -> "Polynomial":
        factor = GaussianRational.coerce(factor)
        return Polynomial._build(self._variables, {e: c * factor for e, c in self._terms})

    def normalized(self) -> "Polynomial":
        """Scale so the leading graded-lex coefficient is 1."""
        if not self._terms:
            return self
        lead = self._terms[0][1]
        if lead == 1:
            return self
        return self.scale(lead.inverse())

    def substitute(self, var: str, replacement: Any) -> "Polynomial":
        """Replace ``var`` by a polynomial (same variables) or a scalar."""
        idx = self._index(var)
        replacement = self._coerce(replacement)
        if replacement is None:
            raise SubstitutionError(f"cannot substitute {var} by a non-polynomial value")
        if replacement.degree_in(var):
            raise SubstitutionError(f"replacement {replacement} contains {var}")
        powers: Dict[int, Polynomial] = {0: Polynomial.constant(1, self._variables)}
        total: Dict[Exponents, GaussianRational] = {}
        for exponents, coeff in self._terms:
            power = exponents[idx]
            rest = exponents[:idx] + (0,) + exponents[idx + 1:]
            if not power:
                total[rest] = total[rest] + coeff if rest in total else coeff
                continue
            if power not in powers:
                powers[power] = replacement ** power
            for rep_exponents, rep_coeff in powers[power]._terms:
                exps = tuple(a + b for a, b in zip(rest, rep_exponents))
                product = coeff * rep_coeff
                total[exps] = total[exps] + product if exps in total else product
        return Polynomial._build(self._variables, total)

    def evaluate(self, assignment: Mapping[str, Any], zero: Any = None) -> Any:
        """
        Evaluate in any commutative ring containing the Gaussian rationals.

        Every variable that occurs must be assigned. ``zero`` is returned for
        the zero polynomial; it defaults to the Gaussian rational 0.
        """
        if not self._terms:
            return ZERO if zero is None else zero
        missing = [name for name in self.used_variables() if name not in assignment]
        if missing:
            raise SubstitutionError(f"no value for {', '.join(missing)}")
        cache: Dict[Tuple[int, int], Any] = {}
        total = None
        for exponents, coeff in self._terms:
            term: Any = coeff
            for idx, power in enumerate(exponents):
                if not power:
                    continue
                key = (idx, power)
                if key not in cache:
                    cache[key] = assignment[self._variables[idx]] ** power
                term = term * cache[key]
            total = term if total is None else total + term
        return total

    def rename(self, mapping: Mapping[str, str], variables: Sequence[str]) -> "Polynomial":
        """Move into a new variable tuple, renaming used variables through ``mapping``."""
        variables = tuple(variables)
        positions = []
        for name in self.used_variables():
            target = mapping.get(name, name)
            if target not in variables:
                raise SubstitutionError(f"{name} has no image among {variables}")
            positions.append((self._variables.index(name), variables.index(target)))
        terms: Dict[Exponents, GaussianRational] = {}
        for exponents, coeff in self._terms:
            moved = [0] * len(variables)
            for source, target in positions:
                moved[target] += exponents[source]
            key = tuple(moved)
            terms[key] = terms[key] + coeff if key in terms else coeff
        return Polynomial._build(variables, terms)

    # comparison and rendering

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._variables == other._variables and self._terms == other._terms
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self._variables, self._terms))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def __str__(self) -> str:
        return _join_terms(
            _scaled_text(coeff, _monomial_text(self._variables, exponents))
            for exponents, coeff in self._terms
        )

    def render_equation(self) -> str:
        """Render ``p = 0`` with the constant moved right, e.g. ``a27^2 = 1``."""
        constant = self.constant_term()
        lhs = self - constant if not constant.is_zero() else self
        if lhs.is_zero():
            return f"{constant} = 0"
        return f"{lhs} = {-constant}"


DEFAULT_PARAMETER = "a"


def default_relation(variables: Sequence[str] = (DEFAULT_PARAMETER,)) -> Polynomial:
    """q(a) = -1 - a^2, the square of sqrt(-1 - a^2)."""
    a = Polynomial.variable(DEFAULT_PARAMETER, variables)
    return -1 - a * a


class ExtensionElement:
    """
    p0 + p1*s in Q(sqrt(-1))[a][s]/(s^2 - q(a)).

    The relation polynomial q defaults to -1 - a^2. Products are reduced
    with s^2 -> q, so no s-degree above one survives. Division is not offered.
    """

    __slots__ = ("_p0", "_p1", "_relation")

    def __init__(self, p0: Any = 0, p1: Any = 0, relation: Optional[Polynomial] = None):
        relation = default_relation() if relation is None else relation
        self._relation = relation
        self._p0 = self._lift(p0)
        self._p1 = self._lift(p1)

    def _lift(self, value: Any) -> Polynomial:
        if isinstance(value, Polynomial):
            if value.variables != self._relation.variables:
                raise DimensionMismatchError(
                    f"component over {value.variables}, relation over {self._relation.variables}"
                )
            return value
        return Polynomial.constant(GaussianRational.coerce(value), self._relation.variables)

    @classmethod
    def parameter(cls, relation: Optional[Polynomial] = None) -> "ExtensionElement":
        """The free parameter a."""
        relation = default_relation() if relation is None else relation
        return cls(Polynomial.variable(DEFAULT_PARAMETER, relation.variables), 0, relation)

    @classmethod
    def root(cls, relation: Optional[Polynomial] = None) -> "ExtensionElement":
        """The adjoined square root s."""
        return cls(0, 1, relation)

    @property
    def p0(self) -> Polynomial:
        return self._p0

    @property
    def p1(self) -> Polynomial:
        return self._p1

    @property
    def relation(self) -> Polynomial:
        return self._relation

    def is_zero(self) -> bool:
        return self._p0.is_zero() and self._p1.is_zero()

    def _coerce(self, other) -> Optional["ExtensionElement"]:
        if isinstance(other, ExtensionElement):
            if other._relation is not self._relation and other._relation != self._relation:
                raise DimensionMismatchError(
                    f"extension elements with different relations: s^2 = {self._relation} vs {other._relation}"
                )
            return other
        if isinstance(other, (Polynomial, GaussianRational, int, Fraction)):
            return ExtensionElement(other, 0, self._relation)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ExtensionElement(self._p0 + other._p0, self._p1 + other._p1, self._relation)

    __radd__ = __add__

    def __neg__(self) -> "ExtensionElement":
        return ExtensionElement(-self._p0, -self._p1, self._relation)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return ExtensionElement(self._p0 - other._p0, self._p1 - other._p1, self._relation)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p0, p1, r0, r1 = self._p0, self._p1, other._p0, other._p1
        constant = p0 * r0
        if not p1.is_zero() and not r1.is_zero():
            constant = constant + p1 * r1 * self._relation
        return ExtensionElement(constant, p0 * r1 + p1 * r0, self._relation)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExtensionElement":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = ExtensionElement(1, 0, self._relation)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtensionElement):
            if self._p0 != other._p0 or self._p1 != other._p1:
                return False
            return self._p1.is_zero() or self._relation == other._relation
        if isinstance(other, (Polynomial, GaussianRational, int, Fraction)):
            return self._p1.is_zero() and self._p0 == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._p1.is_zero():
            return hash(self._p0)
        return hash((self._p0, self._p1, self._relation))

    def evaluate(self, alpha: Any, sigma: Any) -> GaussianRational:
        """Specialise a -> alpha, s -> sigma; sigma^2 must equal q(alpha)."""
        alpha = GaussianRational.coerce(alpha)
        sigma = GaussianRational.coerce(sigma)
        point = {name: alpha for name in self._relation.variables}
        if sigma * sigma != self._relation.evaluate(point):
            raise ScalarDomainError(f"{sigma} is not a square root of {self._relation} at a = {alpha}")
        return self._p0.evaluate(point) + self._p1.evaluate(point) * sigma

    def term_count(self) -> int:
        return len(self._p0) + len(self._p1)

    def __repr__(self) -> str:
        return f"ExtensionElement({self})"

    def __str__(self) -> str:
        parts = []
        if not self._p0.is_zero():
            parts.append(str(self._p0))
        if not self._p1.is_zero():
            if len(self._p1) == 1:
                coeff_text = str(self._p1)
                if coeff_text == "1":
                    parts.append("s")
                elif coeff_text == "-1":
                    parts.append("-s")
                else:
                    parts.append(f"{coeff_text}*s")
            else:
                parts.append(f"({self._p1})*s")
        return _join_terms(parts)

    def render_relation(self) -> str:
        return f"s^2 = {self._relation}"
