"""Eigenvalue quadratic form, collision search, and reflection witnesses.

A spherical representation is indexed by a dominant weight, a tuple of
non-negative integers in the dual weight basis.  Its Laplace eigenvalue
under the normal metric is the Freudenthal value

    lambda(w) = (w + 2*deltabar, w) = w^T G w + shift^T G w,

where G is the Gram matrix of the dual weight basis and shift is the
coefficient vector of twice the restricted half-sum.  Collisions of this
form between distinct non-dual weights refute simplicity; this module
searches for them exhaustively in a coordinate box, constructs them in
closed form through half-sum-fixing reflections for rank >= 3, and keeps
the catalog of rank-two cases with their closed-form collision pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Optional, Sequence

from .exactalg import MultiPoly, rational_to_str
from .symmdata import RestrictedDatum, dual_permutation
from .rootsys import gram_matrix, cartan_data, parse_type


@dataclass(frozen=True)
class EigenvalueForm:
    """The quadratic form w -> w^T G w + shift^T G w."""

    gram: tuple
    shift: tuple

    @classmethod
    def from_datum(cls, datum: RestrictedDatum) -> "EigenvalueForm":
        return cls(gram=datum.gram, shift=datum.two_delta_bar)

    @property
    def rank(self) -> int:
        return len(self.shift)


def eigenvalue(form: EigenvalueForm, weight: Sequence) -> Fraction:
    """Exact eigenvalue of the form at a weight (rational coordinates)."""
    n = form.rank
    if len(weight) != n:
        raise ValueError("weight length does not match the form's rank")
    gw = [sum(form.gram[i][j] * weight[j] for j in range(n)) for i in range(n)]
    quad = sum(weight[i] * gw[i] for i in range(n))
    lin = sum(form.shift[i] * gw[i] for i in range(n))
    return Fraction(quad + lin)


def dual_weight(datum: RestrictedDatum, weight: Sequence[int]) -> tuple:
    """Coordinates of the dual representation's highest weight."""
    sigma = dual_permutation(datum.descriptor)
    if len(weight) != len(sigma):
        raise ValueError("weight length does not match the datum's rank")
    return tuple(weight[sigma[k]] for k in range(len(sigma)))


def _coordinate_names(rank: int) -> tuple:
    if rank == 1:
        return ("x",)
    if rank == 2:
        return ("x", "y")
    return tuple(f"x{i + 1}" for i in range(rank))


def eigenvalue_polynomial(gram, shift_polys, variables, coord_names) -> MultiPoly:
    """The eigenvalue form as an explicit polynomial.

    ``shift_polys`` entries are MultiPoly over ``variables`` (so a range
    parameter may appear symbolically); the coordinates are adjoined as
    extra variables.
    """
    n = len(shift_polys)
    coords = [MultiPoly.variable(variables, name) for name in coord_names]
    shift = [p.lift(variables) if p.variables != tuple(variables) else p
             for p in shift_polys]
    total = MultiPoly.zero(variables)
    for i in range(n):
        for j in range(n):
            gij = MultiPoly.constant(variables, gram[i][j])
            total = total + gij * coords[i] * coords[j]
            total = total + gij * shift[i] * coords[j]
    return total


def polynomial_form(datum: RestrictedDatum) -> MultiPoly:
    """Eigenvalue form as a polynomial in the weight coordinates."""
    names = _coordinate_names(datum.rank)
    shift = [MultiPoly.constant(names, c) for c in datum.two_delta_bar]
    return eigenvalue_polynomial(datum.gram, shift, names, names)


@dataclass(frozen=True)
class CollisionReport:
    """A pair of distinct dominant weights with exactly equal eigenvalue."""

    weight_a: tuple
    weight_b: tuple
    eigenvalue: Fraction
    dual_related: bool

    def to_json(self) -> dict:
        return {
            "weight_a": list(self.weight_a),
            "weight_b": list(self.weight_b),
            "eigenvalue": rational_to_str(self.eigenvalue),
            "dual_related": self.dual_related,
        }


def _box(rank: int, bound: int):
    """Dominant weights with every coordinate <= bound, lexicographic."""
    current = [0] * rank
    while True:
        yield tuple(current)
        i = rank - 1
        while i >= 0 and current[i] == bound:
            current[i] = 0
            i -= 1
        if i < 0:
            return
        current[i] += 1


def enumerate_collisions(
    datum: RestrictedDatum, bound: int, exclude_dual_pairs: bool = False
) -> list:
    """All eigenvalue collisions in the per-coordinate box [0, bound]^rank.

    Weights sharing an exact eigenvalue are grouped; every unordered pair
    inside a group is reported, flagged when the two weights are duals of
    each other.  Output is sorted lexicographically by (weight_a, weight_b).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    form = EigenvalueForm.from_datum(datum)
    rank = datum.rank
    if rank == 1:
        # lambda(m) = a m^2 + b m with a = G00, b = shift * G00
        a = form.gram[0][0]
        b = form.shift[0] * form.gram[0][0]
        groups = {}
        for m in range(bound + 1):
            groups.setdefault(a * m * m + b * m, []).append((m,))
    else:
        groups = {}
        for weight in _box(rank, bound):
            groups.setdefault(eigenvalue(form, weight), []).append(weight)

    reports = []
    for value, weights in groups.items():
        if len(weights) < 2:
            continue
        for i in range(len(weights)):
            for j in range(i + 1, len(weights)):
                wa, wb = weights[i], weights[j]
                dual = dual_weight(datum, wa) == wb
                if exclude_dual_pairs and dual:
                    continue
                reports.append(
                    CollisionReport(
                        weight_a=wa,
                        weight_b=wb,
                        eigenvalue=Fraction(value),
                        dual_related=dual,
                    )
                )
    reports.sort(key=lambda rep: (rep.weight_a, rep.weight_b))
    return reports


# -- reflection witnesses (rank >= 3) -----------------------------------


class WitnessError(ValueError):
    """Raised when a datum is outside the reflection construction's scope."""


@dataclass(frozen=True)
class ReflectionWitness:
    """A half-sum-fixing reflection collision certificate.

    ``alpha`` is an integer multiple of beta_i - beta_j written in the
    dual weight basis, rescaled so all its coordinates are integers; the
    reflection through alpha fixes the half-sum exactly and exchanges the
    dominant weights v and w, which are distinct, non-dual, and share the
    eigenvalue.
    """

    index_pair: tuple
    alpha: tuple
    multiplier: int
    fill: tuple
    weight_v: tuple
    weight_w: tuple
    eigenvalue: Fraction

    def to_json(self) -> dict:
        return {
            "index_pair": [self.index_pair[0] + 1, self.index_pair[1] + 1],
            "alpha": [rational_to_str(a) for a in self.alpha],
            "multiplier": self.multiplier,
            "v": list(self.weight_v),
            "w": list(self.weight_w),
            "eigenvalue": rational_to_str(self.eigenvalue),
        }


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


def reflect(datum: RestrictedDatum, alpha: Sequence, vector: Sequence) -> tuple:
    """Image of a vector under the reflection through alpha (dual basis)."""
    form_gram = datum.gram
    n = datum.rank
    alpha = [Fraction(a) for a in alpha]
    vector = [Fraction(v) for v in vector]
    g_alpha = [sum(form_gram[i][j] * alpha[j] for j in range(n)) for i in range(n)]
    alpha_alpha = sum(alpha[i] * g_alpha[i] for i in range(n))
    alpha_v = sum(vector[i] * g_alpha[i] for i in range(n))
    factor = 2 * alpha_v / alpha_alpha
    return tuple(vector[i] - factor * alpha[i] for i in range(n))


def admissible_pairs(datum: RestrictedDatum) -> list:
    """Index pairs (i, j) with equal half-sum coefficients and equal norms."""
    pairs = []
    n = datum.rank
    for i in range(n):
        for j in range(i + 1, n):
            if (
                datum.two_delta_bar[i] == datum.two_delta_bar[j]
                and datum.cartan.norms[i] == datum.cartan.norms[j]
            ):
                pairs.append((i, j))
    return pairs


def reflection_witness(datum: RestrictedDatum, max_retries: int = 16) -> ReflectionWitness:
    """Construct a collision pair from a half-sum-fixing reflection.

    Requires rank >= 3 and an index pair with equal half-sum coefficient
    and equal simple-root norms.  Tie-breaking is deterministic: the
    lexicographically smallest admissible pair, the componentwise-minimal
    fill coefficients, then the smallest multiplier clearing denominators.
    When the reflected weight happens to be the dual of the seed, the
    smallest fill coefficient is incremented and the construction retried.
    """
    n = datum.rank
    if n < 3:
        raise WitnessError("the reflection construction needs rank >= 3")
    pairs = admissible_pairs(datum)
    if not pairs:
        raise WitnessError(
            "no index pair with equal half-sum coefficients and equal norms"
        )
    i, j = pairs[0]

    beta_gram = datum.cartan.beta_gram()
    norms = datum.cartan.norms
    alpha_alpha = norms[i] + norms[j] - 2 * beta_gram[i][j]
    # alpha = beta_i - beta_j in the dual basis, rescaled to integers
    alpha = [
        (beta_gram[i][k] - beta_gram[j][k]) / norms[k] for k in range(n)
    ]
    scale = 1
    for a in alpha:
        scale = _lcm(scale, Fraction(a).denominator)
    alpha = tuple(a * scale for a in alpha)

    # fixing the half-sum is exact: equal coefficients and equal norms
    delta_image = reflect(datum, alpha, datum.two_delta_bar)
    if tuple(delta_image) != tuple(Fraction(x) for x in datum.two_delta_bar):
        raise WitnessError("reflection does not fix the half-sum")

    # minimal fill producing a dominant image of M_i + sum fill_k M_k
    others = [k for k in range(n) if k not in (i, j)]
    thresholds = {
        k: 2 * norms[i] * (beta_gram[i][k] - beta_gram[j][k]) / (alpha_alpha * norms[k])
        for k in others
    }
    fill = {k: max(0, ceil(thresholds[k])) for k in others}

    form = EigenvalueForm.from_datum(datum)
    for _ in range(max_retries):
        seed = [0] * n
        seed[i] = 1
        for k in others:
            seed[k] = fill[k]
        image = reflect(datum, alpha, seed)
        if any(c < 0 for c in image):
            raise WitnessError("reflected weight left the dominant cone")
        multiplier = 1
        for c in image:
            multiplier = _lcm(multiplier, Fraction(c).denominator)
        v = tuple(multiplier * c for c in seed)
        w = tuple(int(multiplier * c) for c in image)
        if any(Fraction(multiplier * c).denominator != 1 for c in image):
            raise WitnessError("multiplier failed to clear denominators")
        if w != v and dual_weight(datum, v) != w:
            value_v = eigenvalue(form, v)
            value_w = eigenvalue(form, w)
            if value_v != value_w:
                raise WitnessError("reflection produced unequal eigenvalues")
            return ReflectionWitness(
                index_pair=(i, j),
                alpha=alpha,
                multiplier=multiplier,
                fill=tuple(fill[k] for k in others),
                weight_v=v,
                weight_w=w,
                eigenvalue=value_v,
            )
        # duality broke the pair: bump the smallest admissible coefficient
        fill[others[0]] += 1
    raise WitnessError("could not break duality within the retry budget")


# -- rank-two catalog ----------------------------------------------------


@dataclass(frozen=True)
class Rank2Pair:
    """One closed-form collision pair, possibly parameterized.

    Coordinates are polynomials in a free integer parameter ``s`` which
    ranges over ``s >= min_param``; ``r_expr`` recovers the range
    parameter from s (r = s is the common case, r = 2s / 2s - 1 encode
    the parity branches).  Fixed pairs use constant polynomials.
    """

    description: str
    r_expr: Optional[MultiPoly]
    weight_a: tuple
    weight_b: tuple
    min_param: int

    def concrete(self, s: int):
        point = {"s": Fraction(s)}
        wa = tuple(int(c.evaluate(point)) for c in self.weight_a)
        wb = tuple(int(c.evaluate(point)) for c in self.weight_b)
        r = int(self.r_expr.evaluate(point)) if self.r_expr is not None else None
        return r, wa, wb


@dataclass(frozen=True)
class Rank2Case:
    """One rank-two space whose half-sum is not proportional to M1 + M2."""

    label: str
    restricted_type: str
    two_delta_bar: tuple  # MultiPoly in ("r",) or constants
    polynomial: MultiPoly  # variables (x, y) or (x, y, r)
    parameterized: bool
    pairs: tuple

    def polynomial_at(self, r: Optional[int] = None) -> MultiPoly:
        """Specialize the range parameter, leaving a polynomial in (x, y)."""
        if not self.parameterized:
            return self.polynomial
        if r is None:
            raise ValueError(f"{self.label} needs the range parameter r")
        xy = ("x", "y")
        subs = {
            "x": MultiPoly.variable(xy, "x"),
            "y": MultiPoly.variable(xy, "y"),
            "r": MultiPoly.constant(xy, r),
        }
        return self.polynomial.substitute(subs)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "restricted_type": self.restricted_type,
            "two_delta_bar": [str(c) for c in self.two_delta_bar],
            "polynomial": str(self.polynomial),
            "pairs": [p.description for p in self.pairs],
        }


def _const(variables, value):
    return MultiPoly.constant(variables, value)


def _spoly(const, s_coeff=0):
    s = ("s",)
    poly = MultiPoly.constant(s, const)
    if s_coeff:
        poly = poly + MultiPoly.variable(s, "s") * s_coeff
    return poly


def _gram_for(type_label: str):
    return gram_matrix(cartan_data(parse_type(type_label)))


def _case(label, type_label, shift_entries, pairs):
    """Assemble a catalog case from its type, half-sum, and pair specs."""
    parameterized = any(not isinstance(c, int) for c in shift_entries)
    variables = ("x", "y", "r") if parameterized else ("x", "y")
    shift = []
    for c in shift_entries:
        if isinstance(c, int):
            shift.append(_const(variables, c))
        else:  # (constant, r-coefficient)
            const, rc = c
            shift.append(
                _const(variables, const)
                + MultiPoly.variable(variables, "r") * rc
            )
    poly = eigenvalue_polynomial(_gram_for(type_label), shift, variables, ("x", "y"))
    return Rank2Case(
        label=label,
        restricted_type=type_label,
        two_delta_bar=tuple(shift),
        polynomial=poly,
        parameterized=parameterized,
        pairs=tuple(pairs),
    )


def _pair(description, r_expr, wa, wb, min_param=0):
    return Rank2Pair(
        description=description,
        r_expr=r_expr,
        weight_a=tuple(wa),
        weight_b=tuple(wb),
        min_param=min_param,
    )


def rank2_catalog() -> list:
    """The ten rank-two cases with closed-form collision pairs.

    Every returned pair satisfies the eigenvalue identity exactly; the
    test suite verifies it symbolically in the free parameter.
    """
    c = _spoly
    cases = [
        _case(
            "AIII1", "C2", [2, (-2, 1)],
            [
                _pair(
                    "(l+3, 0) ~ (l-1, 6) for even r = 2l >= 4",
                    c(0, 2), (c(3, 1), c(0)), (c(-1, 1), c(6)), min_param=2,
                ),
                _pair(
                    "(l, 0) ~ (l-2, 3) for odd r = 2l - 1 >= 5",
                    c(-1, 2), (c(0, 1), c(0)), (c(-2, 1), c(3)), min_param=3,
                ),
            ],
        ),
        _case(
            "AIII2", "C2", [2, 1],
            [_pair("(0, 3) ~ (2, 0)", None, (c(0), c(3)), (c(2), c(0)))],
        ),
        _case(
            "BI", "B2", [1, (-3, 2)],
            [
                _pair(
                    "(r+3, 0) ~ (r-3, 4) for r >= 3",
                    c(0, 1), (c(3, 1), c(0)), (c(-3, 1), c(4)), min_param=3,
                ),
            ],
        ),
        _case(
            "CII1", "B2", [4, (-5, 2)],
            [
                _pair(
                    "(r+3, 0) ~ (r-6, 6) for r >= 6",
                    c(0, 1), (c(3, 1), c(0)), (c(-6, 1), c(6)), min_param=6,
                ),
                _pair(
                    "(3, 0) ~ (0, 2) for r = 5",
                    c(5), (c(3), c(0)), (c(0), c(2)), min_param=0,
                ),
            ],
        ),
        _case(
            "CII2", "B2", [4, 3],
            [_pair("(0, 3) ~ (3, 1)", None, (c(0), c(3)), (c(3), c(1)))],
        ),
        _case(
            "DI1", "B2", [1, 2],
            [_pair("(0, 2) ~ (3, 0)", None, (c(0), c(2)), (c(3), c(0)))],
        ),
        _case(
            "DI2", "B2", [1, (-4, 2)],
            [
                _pair(
                    "(r, 0) ~ (r-3, 2) for r >= 4",
                    c(0, 1), (c(0, 1), c(0)), (c(-3, 1), c(2)), min_param=4,
                ),
            ],
        ),
        _case(
            "DIII1", "B2", [4, 1],
            [_pair("(1, 5) ~ (4, 3)", None, (c(1), c(5)), (c(4), c(3)))],
        ),
        _case(
            "DIII2", "C2", [4, 3],
            [_pair("(0, 3) ~ (2, 0)", None, (c(0), c(3)), (c(2), c(0)))],
        ),
        _case(
            "EIII", "B2", [5, 6],
            [_pair("(1, 3) ~ (4, 1)", None, (c(1), c(3)), (c(4), c(1)))],
        ),
    ]
    return cases


def verify_rank2_pair(case: Rank2Case, pair: Rank2Pair) -> bool:
    """Exact symbolic proof that a catalog pair collides identically.

    Substitutes the pair's coordinate polynomials (and the range
    parameter) into the case polynomial; the two sides must agree as
    polynomials in the free parameter.
    """
    s_vars = ("s",)

    def value_at(weight):
        subs = {
            "x": weight[0],
            "y": weight[1],
        }
        if case.parameterized:
            subs["r"] = pair.r_expr
        basis = {k: (v if isinstance(v, MultiPoly) else _const(s_vars, v))
                 for k, v in subs.items()}
        return case.polynomial.substitute(basis)

    return value_at(pair.weight_a) == value_at(pair.weight_b)
