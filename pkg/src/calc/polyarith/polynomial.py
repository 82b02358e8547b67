"""
Sparse multivariate polynomials with exact rational coefficients.

Variables are identified by position: index 0 is the lowest variable in the
ordering x1 < x2 < ... < xn. Terms are kept in a graded order in which later
variables rank higher, so two equal polynomials always print identically.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from ...common.errors import UsageError

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]


def term_order_key(exponents: Monomial) -> Tuple[int, Monomial]:
    """Sort key of the canonical term order (largest term sorts last)."""
    return (sum(exponents), tuple(reversed(exponents)))


class Polynomial:
    """An immutable polynomial in a fixed number of variables."""

    __slots__ = ("nvars", "_terms", "_sorted", "_hash")

    def __init__(self, nvars: int, terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        if nvars < 0:
            raise UsageError(f"variable count must be non-negative, got {nvars}")
        cleaned: Dict[Monomial, Fraction] = {}
        for exponents, coeff in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != nvars:
                raise UsageError(f"monomial {exponents} does not have {nvars} exponents")
            if any(e < 0 for e in exponents):
                raise UsageError(f"negative exponent in {exponents}")
            value = cleaned.get(exponents, Fraction(0)) + Fraction(coeff)
            if value:
                cleaned[exponents] = value
            else:
                cleaned.pop(exponents, None)
        self.nvars = nvars
        self._terms = cleaned
        self._sorted: Optional[Tuple[Tuple[Monomial, Fraction], ...]] = None
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # Trusted constructor: terms already have the right shape and no zero coefficients.
        poly = cls.__new__(cls)
        poly.nvars = nvars
        poly._terms = terms
        poly._sorted = None
        poly._hash = None
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "Polynomial":
        value = Fraction(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise UsageError(f"variable index {index} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[index] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def from_coefficients(cls, coefficients: Sequence["Polynomial"], var: int) -> "Polynomial":
        """Build sum(c_i * x_var^i) from coefficients listed lowest power first."""
        if not coefficients:
            raise UsageError("from_coefficients needs at least one coefficient")
        nvars = coefficients[0].nvars
        terms: Dict[Monomial, Fraction] = {}
        for power, coeff in enumerate(coefficients):
            for exps, c in coeff._terms.items():
                if exps[var]:
                    raise UsageError(f"coefficient already depends on x{var + 1}")
                shifted = exps[:var] + (power,) + exps[var + 1:]
                terms[shifted] = c
        return cls._raw(nvars, terms)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def terms(self) -> Tuple[Tuple[Monomial, Fraction], ...]:
        """Terms in canonical order, largest first."""
        if self._sorted is None:
            self._sorted = tuple(sorted(self._terms.items(), key=lambda kv: term_order_key(kv[0]), reverse=True))
        return self._sorted

    def __iter__(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self.terms())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise UsageError(f"{self} is not constant")
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise UsageError("zero polynomial has no leading term")
        return self.terms()[0]

    def degree(self, var: int) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(e[var] for e in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def variables(self) -> List[int]:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return sorted(used)

    def main_variable(self) -> Optional[int]:
        """Highest variable index the polynomial depends on, or None for constants."""
        used = self.variables()
        return used[-1] if used else None

    def coefficients(self, var: int) -> List["Polynomial"]:
        """Coefficients with respect to ``var``, highest power first."""
        return list(reversed(self.coefficients_ascending(var)))

    def coefficients_ascending(self, var: int) -> List["Polynomial"]:
        deg = self.degree(var)
        if deg < 0:
            return [self]
        buckets: List[Dict[Monomial, Fraction]] = [{} for _ in range(deg + 1)]
        for exps, c in self._terms.items():
            buckets[exps[var]][exps[:var] + (0,) + exps[var + 1:]] = c
        return [Polynomial._raw(self.nvars, bucket) for bucket in buckets]

    def leading_coefficient(self, var: int) -> "Polynomial":
        return self.coefficients_ascending(var)[-1]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise UsageError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            value = terms.get(exps, 0) + c
            if value:
                terms[exps] = value
            else:
                terms.pop(exps, None)
        return Polynomial._raw(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Monomial, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                value = terms.get(exps, 0) + c1 * c2
                if value:
                    terms[exps] = value
                else:
                    terms.pop(exps, None)
        return Polynomial._raw(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise UsageError(f"exponent must be a non-negative integer, got {exponent!r}")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {e: c * factor for e, c in self._terms.items()})

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises UsageError when a remainder is left."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise UsageError("division by the zero polynomial")
        lead_exps, lead_coeff = divisor.leading_term()
        remainder = dict(self._terms)
        quotient: Dict[Monomial, Fraction] = {}
        while remainder:
            exps = max(remainder, key=term_order_key)
            shift = tuple(a - b for a, b in zip(exps, lead_exps))
            if any(s < 0 for s in shift):
                raise UsageError(f"{divisor} does not divide {self}")
            factor = remainder[exps] / lead_coeff
            quotient[shift] = factor
            for d_exps, d_coeff in divisor._terms.items():
                target = tuple(a + b for a, b in zip(d_exps, shift))
                value = remainder.get(target, 0) - factor * d_coeff
                if value:
                    remainder[target] = value
                else:
                    remainder.pop(target, None)
        return Polynomial._raw(self.nvars, quotient)

    def derivative(self, var: int) -> "Polynomial":
        terms: Dict[Monomial, Fraction] = {}
        for exps, c in self._terms.items():
            if exps[var]:
                lowered = exps[:var] + (exps[var] - 1,) + exps[var + 1:]
                terms[lowered] = c * exps[var]
        return Polynomial._raw(self.nvars, terms)

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------

    def substitute(self, var: int, value: Scalar) -> "Polynomial":
        """Replace x_var by a rational value; the variable count is unchanged."""
        value = Fraction(value)
        terms: Dict[Monomial, Fraction] = {}
        for exps, c in self._terms.items():
            power = exps[var]
            coeff = c * value ** power if power else c
            if not coeff:
                continue
            lowered = exps[:var] + (0,) + exps[var + 1:]
            total = terms.get(lowered, 0) + coeff
            if total:
                terms[lowered] = total
            else:
                terms.pop(lowered, None)
        return Polynomial._raw(self.nvars, terms)

    def evaluate_partial(self, prefix: Sequence[Scalar]) -> "Polynomial":
        """Substitute rational values for the first ``len(prefix)`` variables."""
        if len(prefix) > self.nvars:
            raise UsageError(f"prefix of length {len(prefix)} exceeds {self.nvars} variables")
        result = self
        for index, value in enumerate(prefix):
            result = result.substitute(index, value)
        return result

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise UsageError(f"point of length {len(point)} for {self.nvars} variables")
        return self.evaluate_partial(point).constant_value()

    def with_extra_variables(self, count: int) -> "Polynomial":
        """Same polynomial viewed in ``nvars + count`` variables."""
        pad = (0,) * count
        return Polynomial._raw(self.nvars + count, {e + pad: c for e, c in self._terms.items()})

    # ------------------------------------------------------------------
    # Comparison and printing
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def sort_key(self) -> Tuple:
        """Deterministic key for ordering sets of polynomials."""
        return (self.total_degree(), tuple((term_order_key(e), c) for e, c in self.terms()))

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self._terms:
            return "0"
        pieces = []
        for exps, coeff in self.terms():
            factors = []
            for name, power in zip(names, exps):
                if power == 1:
                    factors.append(name)
                elif power > 1:
                    factors.append(f"{name}^{power}")
            monomial = "*".join(factors)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_string()!r})"


def arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    """Apply a ring operation named by ``op`` ('+', '-' or '*')."""
    if op == "+":
        return p + q
    if op == "-":
        return p - q
    if op == "*":
        return p * q
    raise UsageError(f"unknown polynomial operation {op!r}")


def polynomial_from_terms(nvars: int, terms: Iterable[Tuple[Scalar, Sequence[int]]]) -> Polynomial:
    """Convenience constructor from (coefficient, exponents) pairs."""
    mapping: Dict[Monomial, Fraction] = {}
    for coeff, exps in terms:
        exps = tuple(exps)
        mapping[exps] = mapping.get(exps, Fraction(0)) + Fraction(coeff)
    return Polynomial(nvars, mapping)
