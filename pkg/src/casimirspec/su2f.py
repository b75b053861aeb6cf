"""The quotient of SU(2) by the order-12 binary dihedral subgroup F.

F is generated by sigma = diag(w^2, w^-2) and tau = antidiag(i, i) where
w = exp(i pi / 6) is a primitive 12th root of unity.  Both generators act
monomially on the degree-k symmetric power V_k with basis
v_l = z1^l z2^(k-l), sending basis monomials to basis monomials times a
root of unity, so the entire computation runs on exponents mod 12 plus a
small amount of exact cyclotomic addition.

The F-invariant subspace of V_k is computed by averaging the 12 group
elements exactly; the resulting projector has rational entries and its
column space is extracted by exact row reduction.  An independent
combinatorial oracle (the sigma eigenvalue condition 2l = k mod 6 plus
the tau pairing l <-> k - l with phase (-i)^k) predicts the dimension and
is cross-checked in the tests.

On the two-parameter metric family (a on the fiber direction, b on the
complement) the Casimir acts on the invariant vector with weight gap
d = 2l - k by the linear form

    a * (-d^2 / 8) + b * (k (k + 2) + d^2) / 8.

The k(k+2)/8 normalization of the round Casimir is used consistently; a
uniform positive factor on all forms moves no collision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .exactalg import MultiPoly, ParametricMatrix, rational_to_str

GROUP_ROOT_ORDER = 12

METRIC_PARAMS = ("a", "b")

# coordinates of w^e in the basis (1, w, w^2, w^3) of the 12th cyclotomic
# field, using w^4 = w^2 - 1
_ROOT_COORDS = (
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (-1, 0, 1, 0),
    (0, -1, 0, 1),
    (-1, 0, 0, 0),
    (0, -1, 0, 0),
    (0, 0, -1, 0),
    (0, 0, 0, -1),
    (1, 0, -1, 0),
    (0, 1, 0, -1),
)


def _root_sum_to_rational(exponent_counts) -> Fraction:
    """Sum of roots of unity given as exponent counts; must be rational."""
    coords = [0, 0, 0, 0]
    for exponent, count in enumerate(exponent_counts):
        if count:
            base = _ROOT_COORDS[exponent % GROUP_ROOT_ORDER]
            for i in range(4):
                coords[i] += count * base[i]
    if any(coords[i] for i in range(1, 4)):
        raise ArithmeticError("averaging produced an irrational entry")
    return Fraction(coords[0])


@dataclass(frozen=True)
class MonomialAction:
    """Action of one group element on a basis monomial: target index and
    the phase as an exponent of the primitive 12th root of unity."""

    target: int
    phase_exponent: int


@dataclass(frozen=True)
class MonomialMatrix:
    """A 2x2 monomial unitary with root-of-unity entries.

    ``diag(w^e1, w^e2)`` when not antidiagonal, ``[[0, w^e1], [w^e2, 0]]``
    otherwise; exponents live mod 12.
    """

    antidiag: bool
    e1: int
    e2: int

    def __post_init__(self):
        object.__setattr__(self, "e1", self.e1 % GROUP_ROOT_ORDER)
        object.__setattr__(self, "e2", self.e2 % GROUP_ROOT_ORDER)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if not self.antidiag and not other.antidiag:
            return MonomialMatrix(False, self.e1 + other.e1, self.e2 + other.e2)
        if not self.antidiag and other.antidiag:
            return MonomialMatrix(True, self.e1 + other.e1, self.e2 + other.e2)
        if self.antidiag and not other.antidiag:
            return MonomialMatrix(True, self.e1 + other.e2, self.e2 + other.e1)
        return MonomialMatrix(False, self.e1 + other.e2, self.e2 + other.e1)

    def action_on_monomial(self, k: int, ell: int) -> MonomialAction:
        """Image of v_l under (g . f)(z) = f(g^{-1} z)."""
        if self.antidiag:
            return MonomialAction(
                k - ell, (-self.e2 * ell - self.e1 * (k - ell)) % GROUP_ROOT_ORDER
            )
        return MonomialAction(
            ell, (-self.e1 * ell - self.e2 * (k - ell)) % GROUP_ROOT_ORDER
        )


SIGMA = MonomialMatrix(False, 2, -2)
TAU = MonomialMatrix(True, 3, 3)

_IDENTITY = MonomialMatrix(False, 0, 0)


def group_elements() -> tuple:
    """Close {sigma, tau} under multiplication; the result has order 12.

    The defining relations sigma^6 = 1 and tau^2 = sigma^3 (= -1) are
    asserted, not assumed.
    """
    elements = {_IDENTITY}
    frontier = [_IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for gen in (SIGMA, TAU):
                h = g * gen
                if h not in elements:
                    elements.add(h)
                    nxt.append(h)
        frontier = nxt
    elements = tuple(sorted(elements, key=lambda g: (g.antidiag, g.e1, g.e2)))
    if len(elements) != 12:
        raise AssertionError(f"group closure has order {len(elements)}, not 12")
    sigma6 = _IDENTITY
    for _ in range(6):
        sigma6 = sigma6 * SIGMA
    if sigma6 != _IDENTITY:
        raise AssertionError("sigma does not have order 6")
    sigma3 = SIGMA * SIGMA * SIGMA
    if TAU * TAU != sigma3 or sigma3 != MonomialMatrix(False, 6, 6):
        raise AssertionError("tau^2 = sigma^3 = -1 fails")
    return elements


@dataclass(frozen=True)
class FixedSpaceBasis:
    """Exact basis of the F-invariant subspace of V_k.

    Basis vectors are primitive integer vectors in the monomial basis,
    each supported on a single tau-orbit {l, k - l}; ``ell_values`` lists
    the occurring weight gaps |2l - k| in increasing order.
    """

    k: int
    basis: tuple
    ell_values: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "dimension": self.dimension,
            "ell_values": list(self.ell_values),
            "basis": [list(v) for v in self.basis],
        }


def averaging_projector(k: int) -> list:
    """The exact matrix of (1/12) sum_g g acting on V_k."""
    dim = k + 1
    counts = [[[0] * GROUP_ROOT_ORDER for _ in range(dim)] for _ in range(dim)]
    for g in group_elements():
        for ell in range(dim):
            action = g.action_on_monomial(k, ell)
            counts[action.target][ell][action.phase_exponent] += 1
    return [
        [_root_sum_to_rational(counts[i][j]) / 12 for j in range(dim)]
        for i in range(dim)
    ]


def _primitive(vector) -> tuple:
    scale = 1
    for x in vector:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in vector]
    content = 0
    for value in ints:
        content = gcd(content, value)
    if content:
        ints = [value // content for value in ints]
    first = next((value for value in ints if value), 0)
    if first < 0:
        ints = [-value for value in ints]
    return tuple(ints)


@lru_cache(maxsize=None)
def fixed_space(k: int) -> FixedSpaceBasis:
    """F-invariant subspace of V_k by exact 12-element averaging."""
    if k < 0:
        raise ValueError("k must be non-negative")
    projector = averaging_projector(k)
    dim = k + 1
    # row-reduce the transpose: its row space is the projector's image
    rows = [[projector[i][j] for i in range(dim)] for j in range(dim)]
    basis = []
    pivot_col = 0
    row = 0
    while row < len(rows) and pivot_col < dim:
        pivot = next((r for r in range(row, len(rows)) if rows[r][pivot_col] != 0), None)
        if pivot is None:
            pivot_col += 1
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        scale = rows[row][pivot_col]
        rows[row] = [x / scale for x in rows[row]]
        for r in range(len(rows)):
            if r != row and rows[r][pivot_col] != 0:
                factor = rows[r][pivot_col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[row])]
        basis.append(_primitive(rows[row]))
        row += 1
        pivot_col += 1

    gaps = set()
    for vector in basis:
        support_gaps = {abs(2 * ell - k) for ell, c in enumerate(vector) if c}
        if len(support_gaps) != 1:
            raise AssertionError("basis vector mixes tau-orbits")
        gaps.add(support_gaps.pop())
    return FixedSpaceBasis(k=k, basis=tuple(basis), ell_values=tuple(sorted(gaps)))


def predicted_dimension(k: int) -> int:
    """Combinatorial oracle: sigma condition 2l = k mod 6, tau pairing.

    Pairs l < k - l with 2l = k (mod 6) each contribute one invariant
    line; the middle monomial l = k/2 survives exactly when the tau phase
    (-i)^k is +1, i.e. k = 0 (mod 4).  Odd k has no invariants because
    -1 in F acts by (-1)^k.
    """
    if k % 2 == 1:
        return 0
    count = sum(1 for ell in range(k // 2) if (2 * ell - k) % 6 == 0)
    if k % 4 == 0:
        count += 1
    return count


@dataclass(frozen=True)
class TwoParamEigenvalue:
    """Casimir eigenvalue on one invariant line as a linear form in (a, b)."""

    k: int
    gap_squared: int
    a_coeff: Fraction
    b_coeff: Fraction

    def value(self, a: Fraction, b: Fraction) -> Fraction:
        return self.a_coeff * a + self.b_coeff * b

    def form(self) -> tuple:
        return (self.a_coeff, self.b_coeff)

    def parametric(self) -> MultiPoly:
        return (
            MultiPoly.variable(METRIC_PARAMS, "a") * self.a_coeff
            + MultiPoly.variable(METRIC_PARAMS, "b") * self.b_coeff
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "gap_squared": self.gap_squared,
            "a_coeff": rational_to_str(self.a_coeff),
            "b_coeff": rational_to_str(self.b_coeff),
        }


def eigenvalue_forms(k: int) -> list:
    """One linear form per weight gap occurring in the invariant basis."""
    space = fixed_space(k)
    if space.dimension == 0:
        raise ValueError(f"V_{k} has no invariant vectors")
    forms = []
    for gap in space.ell_values:
        dsq = gap * gap
        forms.append(
            TwoParamEigenvalue(
                k=k,
                gap_squared=dsq,
                a_coeff=Fraction(-dsq, 8),
                b_coeff=Fraction(k * (k + 2) + dsq, 8),
            )
        )
    seen = {f.form() for f in forms}
    if len(seen) != len(forms):
        raise AssertionError("eigenvalue forms within one k must be distinct")
    return forms


def all_forms(kmax: int) -> list:
    forms = []
    for k in range(0, kmax + 1, 2):
        if fixed_space(k).dimension:
            forms.extend(eigenvalue_forms(k))
    return forms


def su2f_representation_family(kmax: int) -> list:
    """Representation entries (diagonal Casimir matrices) for k <= kmax."""
    from .simplicity import RepresentationEntry

    entries = []
    for k in range(0, kmax + 1, 2):
        space = fixed_space(k)
        if space.dimension == 0:
            continue
        by_gap = {f.gap_squared: f.parametric() for f in eigenvalue_forms(k)}
        diagonal = []
        for vector in space.basis:
            gap = next(abs(2 * e - k) for e, c in enumerate(vector) if c)
            diagonal.append(by_gap[gap * gap])
        entries.append(
            RepresentationEntry(
                id=f"V{k}",
                type_class="real",
                dual_id=f"V{k}",
                casimir=ParametricMatrix.diagonal(diagonal),
            )
        )
    return entries


def collisions_at_metric(kmax: int, a: Fraction, b: Fraction) -> list:
    """Pairs of distinct invariant lines with equal eigenvalue at (a, b)."""
    values = {}
    for form in all_forms(kmax):
        values.setdefault(form.value(a, b), []).append((form.k, form.gap_squared))
    collisions = []
    for value, keys in sorted(values.items()):
        if len(keys) < 2:
            continue
        for i in range(len(keys)):
            for j in range(i + 1, len(keys)):
                collisions.append((keys[i], keys[j], value))
    return collisions


def find_simple_metric(kmax: int) -> tuple:
    """First candidate metric (a, b), a != b, with no eigenvalue collision.

    Candidates are drawn from the deterministic sequence 1, 2, 3, 5, 7,
    11, ... (one and the primes), enumerated in lexicographic order.
    """
    from .products import candidate_tuples

    for a, b in candidate_tuples(2):
        if a == b:
            continue
        if not collisions_at_metric(kmax, Fraction(a), Fraction(b)):
            return (Fraction(a), Fraction(b))
    raise RuntimeError("unreachable: the candidate sequence is infinite")


@dataclass(frozen=True)
class SimplicityReport:
    """Certificate data for the two-parameter metric family on SU(2)/F."""

    kmax: int
    dimensions: tuple  # (k, dimension) for all k <= kmax
    within_k_distinct: bool
    cross_k_injective: bool
    metric: Optional[tuple]
    metric_collisions: tuple

    @property
    def certified(self) -> bool:
        ok = self.within_k_distinct and self.cross_k_injective
        if self.metric is not None:
            ok = ok and not self.metric_collisions
        return ok

    def to_json(self) -> dict:
        return {
            "kmax": self.kmax,
            "dimensions": {str(k): d for k, d in self.dimensions},
            "within_k_distinct": self.within_k_distinct,
            "cross_k_injective": self.cross_k_injective,
            "metric": None
            if self.metric is None
            else [rational_to_str(x) for x in self.metric],
            "metric_collisions": [
                [list(ka), list(kb), rational_to_str(value)]
                for ka, kb, value in self.metric_collisions
            ],
            "certified": self.certified,
        }


def simplicity_certificate(
    kmax: int, sample_metric: Optional[tuple] = None
) -> SimplicityReport:
    """Check the two eigenvalue separation properties up to kmax.

    (i) within each k the forms are pairwise distinct as linear forms
    (so some metric separates them, and quaternionic-type constraints
    are vacuous: every invariant-carrying V_k has k even, hence is of
    real type); (ii) the map (k, gap^2) -> form is injective across all
    k <= kmax, so distinct invariant lines never share a form
    identically.  With a sample metric the report also lists the exact
    collisions at that point, if any.
    """
    if kmax < 2:
        raise ValueError("kmax must be >= 2")
    dimensions = []
    for k in range(kmax + 1):
        dim = fixed_space(k).dimension
        if k % 2 == 1 and dim != 0:
            raise AssertionError("odd k must have no invariants")
        dimensions.append((k, dim))

    within = True
    forms = all_forms(kmax)  # constructor asserts within-k distinctness

    by_form = {}
    injective = True
    for form in forms:
        key = form.form()
        if key in by_form and by_form[key] != (form.k, form.gap_squared):
            injective = False
        by_form[key] = (form.k, form.gap_squared)

    metric = None
    metric_collisions = ()
    if sample_metric is not None:
        a, b = Fraction(sample_metric[0]), Fraction(sample_metric[1])
        if a <= 0 or b <= 0:
            raise ValueError("metric parameters must be positive")
        metric = (a, b)
        metric_collisions = tuple(collisions_at_metric(kmax, a, b))

    return SimplicityReport(
        kmax=kmax,
        dimensions=tuple(dimensions),
        within_k_distinct=within,
        cross_k_injective=injective,
        metric=metric,
        metric_collisions=metric_collisions,
    )
