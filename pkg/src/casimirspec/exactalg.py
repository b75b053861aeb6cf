"""Exact rational and polynomial arithmetic.

Everything downstream (root-system Gram matrices, eigenvalue forms,
resultant criteria) runs on the types in this module: arbitrary-precision
rationals, sparse multivariate polynomials over named metric parameters,
univariate polynomials in a formal variable ``t`` whose coefficients are
such multivariate polynomials, and exact resultants / characteristic
polynomials.  There is no floating point anywhere.

Rationals are ``fractions.Fraction`` (always reduced, positive
denominator).  They serialize as ``"num/den"`` with the denominator
omitted when it is 1.

Sign convention for the resultant: ``resultant(p, q)`` is the determinant
of the Sylvester matrix laid out with the rows of ``p``-coefficients
first, coefficients in descending powers of ``t``.  Consequently for
monic split polynomials ``resultant(p, q) = prod_{i,j} (alpha_i - beta_j)``
over the roots, and ``resultant(p, q) == (-1)**(deg p * deg q) *
resultant(q, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, strings like ``"3/4"``, and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rational_from_str(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rational_to_str(value: Fraction) -> str:
    """Serialize a rational as ``num/den``, den omitted when 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    """Parse the ``num/den`` serialization (den optional)."""
    return Fraction(text.strip())


class MultiPoly:
    """Sparse multivariate polynomial over a fixed ordered variable tuple.

    Terms are stored as a dict from exponent tuples to nonzero Fraction
    coefficients, so two equal polynomials have identical representations.
    All operations return new objects; instances are never mutated after
    construction.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, RationalLike]):
        variables = tuple(variables)
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError("exponent tuple length does not match variable count")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            coeff = as_rational(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, Fraction(0)) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], value: RationalLike) -> "MultiPoly":
        return cls(variables, {(0,) * len(tuple(variables)): as_rational(value)})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "MultiPoly":
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): Fraction(1)})

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        zero_key = (0,) * len(self.variables)
        return self.terms.get(zero_key, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(exps) for exps in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        return MultiPoly.constant(self.variables, other)

    def __add__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + coeff
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultiPoly":
        other = self._coerce(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(self.variables, 1)
        for _ in range(exponent):
            result = result * self
        return result

    # -- evaluation ---------------------------------------------------

    def evaluate(self, values: Mapping[str, RationalLike]) -> Fraction:
        """Evaluate at a full assignment of rational values."""
        point = [as_rational(values[v]) for v in self.variables]
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for base, e in zip(point, exps):
                if e:
                    term *= base**e
            total += term
        return total

    def substitute(self, values: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for every variable (exact composition).

        All substituted polynomials must share one variable tuple, which
        becomes the variable tuple of the result.
        """
        images = [values[v] for v in self.variables]
        if not images:
            raise ValueError("cannot substitute into a polynomial with no variables")
        out_vars = images[0].variables
        result = MultiPoly.zero(out_vars)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(out_vars, coeff)
            for image, e in zip(images, exps):
                for _ in range(e):
                    term = term * image
            result = result + term
        return result

    def lift(self, variables: Sequence[str]) -> "MultiPoly":
        """Re-embed into a superset variable tuple."""
        variables = tuple(variables)
        positions = [variables.index(v) for v in self.variables]
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(variables)
            for pos, e in zip(positions, exps):
                new[pos] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    # -- ordering / serialization --------------------------------------

    def sorted_terms(self) -> list:
        """Canonical term list: exponent tuples in descending lex order."""
        return sorted(self.terms.items(), key=lambda item: item[0], reverse=True)

    def _key(self):
        return (self.variables, tuple(self.sorted_terms()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                return self == MultiPoly.constant(self.variables, other)
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": [
                {"exponents": list(exps), "coefficient": rational_to_str(coeff)}
                for exps, coeff in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultiPoly":
        return cls(
            tuple(data["variables"]),
            {
                tuple(item["exponents"]): rational_from_str(item["coefficient"])
                for item in data["terms"]
            },
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self.sorted_terms():
            factors = [
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e
            ]
            if not factors:
                parts.append(rational_to_str(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(rational_to_str(coeff) + "*" + "*".join(factors))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class UniPoly:
    """Univariate polynomial in ``t`` with MultiPoly coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; the leading coefficient
    is nonzero.  The zero polynomial is the distinguished empty-coefficient
    state and has no degree.
    """

    __slots__ = ("variables", "coeffs")

    def __init__(self, variables: Sequence[str], coeffs: Iterable[MultiPoly]):
        variables = tuple(variables)
        coeffs = list(coeffs)
        for c in coeffs:
            if c.variables != variables:
                raise ValueError("coefficient variable mismatch")
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "UniPoly":
        return cls(variables, [])

    @classmethod
    def from_scalars(cls, variables: Sequence[str], scalars: Iterable[RationalLike]) -> "UniPoly":
        variables = tuple(variables)
        return cls(variables, [MultiPoly.constant(variables, s) for s in scalars])

    @classmethod
    def t_minus(cls, value: MultiPoly) -> "UniPoly":
        """The linear polynomial ``t - value``."""
        one = MultiPoly.constant(value.variables, 1)
        return cls(value.variables, [-value, one])

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    def leading_coefficient(self) -> MultiPoly:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, power: int) -> MultiPoly:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return MultiPoly.zero(self.variables)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if self.variables != other.variables:
            raise ValueError("variable mismatch")
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            self.variables,
            [self.coefficient(i) + other.coefficient(i) for i in range(n)],
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.variables, [-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (MultiPoly, int, Fraction)):
            if not isinstance(other, MultiPoly):
                other = MultiPoly.constant(self.variables, other)
            return UniPoly(self.variables, [c * other for c in self.coeffs])
        if self.variables != other.variables:
            raise ValueError("variable mismatch")
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.variables)
        out = [MultiPoly.zero(self.variables)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.variables, out)

    __rmul__ = __mul__

    def evaluate_params(self, values: Mapping[str, RationalLike]) -> list:
        """Coefficient list over the rationals at a parameter point."""
        return [c.evaluate(values) for c in self.coeffs]

    def eval_at(self, value: MultiPoly) -> MultiPoly:
        """Substitute ``t = value`` (Horner, exact)."""
        result = MultiPoly.zero(self.variables)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.variables == other.variables and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.variables, self.coeffs))

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "coefficients": [c.to_json()["terms"] for c in self.coeffs],
        }

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            tpart = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not tpart:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(tpart)
            else:
                parts.append(f"({c})*{tpart}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def derivative(p: UniPoly, order: int = 1) -> UniPoly:
    """Formal derivative in ``t``; order must be 1 or 2."""
    if order not in (1, 2):
        raise ValueError("derivative order must be 1 or 2")
    for _ in range(order):
        p = UniPoly(
            p.variables,
            [p.coefficient(i) * i for i in range(1, len(p.coeffs))],
        )
    return p


class ParametricMatrix:
    """Square matrix of MultiPoly entries, stored row-major."""

    __slots__ = ("dimension", "variables", "entries")

    def __init__(self, dimension: int, entries: Sequence[MultiPoly]):
        entries = tuple(entries)
        if dimension < 1:
            raise ValueError("dimension must be positive")
        if len(entries) != dimension * dimension:
            raise ValueError("entry count does not match a square matrix")
        variables = entries[0].variables
        for e in entries:
            if e.variables != variables:
                raise ValueError("entry variable mismatch")
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("ParametricMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[MultiPoly]]) -> "ParametricMatrix":
        flat = [e for row in rows for e in row]
        return cls(len(rows), flat)

    @classmethod
    def diagonal(cls, diag: Sequence[MultiPoly]) -> "ParametricMatrix":
        diag = list(diag)
        n = len(diag)
        zero = MultiPoly.zero(diag[0].variables)
        flat = [diag[i] if i == j else zero for i in range(n) for j in range(n)]
        return cls(n, flat)

    def entry(self, i: int, j: int) -> MultiPoly:
        return self.entries[i * self.dimension + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.dimension : (i + 1) * self.dimension]

    def is_diagonal(self) -> bool:
        n = self.dimension
        return all(
            self.entry(i, j).is_zero() for i in range(n) for j in range(n) if i != j
        )

    def diagonal_entries(self) -> list:
        return [self.entry(i, i) for i in range(self.dimension)]


def char_poly(matrix: ParametricMatrix) -> UniPoly:
    """Characteristic polynomial ``det(t*I - matrix)``, exact and monic.

    Diagonal matrices multiply out ``prod (t - d_i)`` directly; the general
    case uses the Faddeev-LeVerrier recursion, which only needs ring
    operations and division by integers.
    """
    n = matrix.dimension
    variables = matrix.variables
    if matrix.is_diagonal():
        result = UniPoly.from_scalars(variables, [1])
        for d in matrix.diagonal_entries():
            result = result * UniPoly.t_minus(d)
        return result

    zero = MultiPoly.zero(variables)
    one = MultiPoly.constant(variables, 1)

    def mat_mul(a, b):
        return [
            [
                sum((a[i][k] * b[k][j] for k in range(n)), zero)
                for j in range(n)
            ]
            for i in range(n)
        ]

    def trace(a):
        return sum((a[i][i] for i in range(n)), zero)

    a = [list(matrix.row(i)) for i in range(n)]
    m = [row[:] for row in a]
    coeffs = {n: one}
    c = -trace(m)
    coeffs[n - 1] = c
    for k in range(2, n + 1):
        shifted = [
            [m[i][j] + (c if i == j else zero) for j in range(n)] for i in range(n)
        ]
        m = mat_mul(a, shifted)
        c = trace(m) * Fraction(-1, k)
        coeffs[n - k] = c
    return UniPoly(variables, [coeffs[i] for i in range(n + 1)])


# -- exact determinants and resultants ---------------------------------


def _leading(poly: MultiPoly):
    """Leading term (lex order on exponent tuples)."""
    exps = max(poly.terms)
    return exps, poly.terms[exps]


def exact_div(num: MultiPoly, den: MultiPoly) -> MultiPoly:
    """Exact multivariate division; raises if den does not divide num."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if den.is_constant():
        scale = Fraction(1) / den.constant_value()
        return num * scale
    quotient = MultiPoly.zero(num.variables)
    rest = num
    den_exps, den_coeff = _leading(den)
    while not rest.is_zero():
        rest_exps, rest_coeff = _leading(rest)
        diff = tuple(a - b for a, b in zip(rest_exps, den_exps))
        if any(d < 0 for d in diff):
            raise ArithmeticError("polynomial division is not exact")
        term = MultiPoly(num.variables, {diff: rest_coeff / den_coeff})
        quotient = quotient + term
        rest = rest - term * den
    return quotient


def determinant(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Determinant over the polynomial ring via fraction-free elimination.

    Bareiss pivoting: every division is by a previous pivot and is exact.
    """
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    variables = rows[0][0].variables
    zero = MultiPoly.zero(variables)
    one = MultiPoly.constant(variables, 1)
    a = [list(row) for row in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = exact_div(num, prev)
            a[i][k] = zero
        prev = a[k][k]
    result = a[n - 1][n - 1]
    return -result if sign < 0 else result


def sylvester_matrix(p: UniPoly, q: UniPoly) -> list:
    """Sylvester matrix, rows of p first, coefficients in descending powers."""
    if p.variables != q.variables:
        raise ValueError("variable mismatch")
    if p.is_zero() or q.is_zero():
        raise ValueError("Sylvester matrix of the zero polynomial is undefined")
    n, m = p.degree, q.degree
    if n == 0 and m == 0:
        raise ValueError("both polynomials are constant in t")
    size = n + m
    zero = MultiPoly.zero(p.variables)
    rows = []
    p_desc = [p.coefficient(n - i) for i in range(n + 1)]
    q_desc = [q.coefficient(m - i) for i in range(m + 1)]
    for shift in range(m):
        rows.append([zero] * shift + p_desc + [zero] * (size - shift - n - 1))
    for shift in range(n):
        rows.append([zero] * shift + q_desc + [zero] * (size - shift - m - 1))
    return rows


def resultant(p: UniPoly, q: UniPoly) -> MultiPoly:
    """Resultant of p and q with respect to ``t``.

    Zero exactly when p and q share a root at the given parameter values
    (leading coefficients staying nonzero).  Both inputs constant in t is
    a degenerate case and raises.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial is degenerate")
    if p.degree == 0 and q.degree == 0:
        raise ValueError("resultant needs positive degree in t")
    if p.degree == 0:
        return p.coefficient(0) ** q.degree
    if q.degree == 0:
        return q.coefficient(0) ** p.degree
    return determinant(sylvester_matrix(p, q))


def resultant_from_roots(roots: Sequence[MultiPoly], q: UniPoly) -> MultiPoly:
    """Resultant of the monic split polynomial ``prod (t - root)`` with q.

    Equals ``resultant(prod (t - root_i), q)`` in the determinant sign
    convention above, computed as ``prod_i q(root_i)``.
    """
    if q.is_zero():
        raise ValueError("resultant of the zero polynomial is degenerate")
    result = MultiPoly.constant(q.variables, 1)
    for root in roots:
        result = result * q.eval_at(root)
    return result
