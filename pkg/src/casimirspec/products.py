"""Weighted Riemannian products of compact rank-one symmetric spaces.

Each factor carries its normal metric scaled by a positive weight
beta_i; the Laplace eigenvalue of a product spherical representation
indexed by the array a = (m_1, ..., m_n) is the weighted sum
sum_i beta_i * lambda_i(m_i) of the factor eigenvalues.  Rank-one
factors have strictly increasing spectra, so the only obstruction to
simplicity is a weight vector landing on one of the countably many
collision hyperplanes (lambda_a - lambda_a')^perp; this module
enumerates the hyperplanes meeting the positive orthant inside a finite
index box and produces a deterministic beta certified collision-free on
that box.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence, Union

from .exactalg import rational_to_str
from .spectrum import EigenvalueForm, eigenvalue
from .symmdata import RestrictedDatum, cross_datum


@dataclass(frozen=True)
class FactorSpectrum:
    """Eigenvalues lambda(0..bound) of one rank-one factor, exact."""

    label: str
    datum: RestrictedDatum
    eigenvalues: tuple

    @property
    def bound(self) -> int:
        return len(self.eigenvalues) - 1


def factor_spectrum(factor: Union[str, RestrictedDatum], bound: int) -> FactorSpectrum:
    """Spectrum of a rank-one factor for weight indices 0..bound.

    The factor may be an alias like ``S2``/``CP2``/``HP2``/``OP2`` or an
    already-built rank-one restricted datum.  Strict monotonicity and a
    zero value at index 0 are asserted.
    """
    datum = cross_datum(factor) if isinstance(factor, str) else factor
    if datum.rank != 1:
        raise ValueError(f"{datum.descriptor.label} has rank {datum.rank}, need rank one")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    form = EigenvalueForm.from_datum(datum)
    values = tuple(eigenvalue(form, (m,)) for m in range(bound + 1))
    if values[0] != 0:
        raise AssertionError("eigenvalue at the zero weight must be 0")
    if any(values[i] >= values[i + 1] for i in range(bound)):
        raise AssertionError("rank-one spectrum must be strictly increasing")
    return FactorSpectrum(
        label=datum.descriptor.label, datum=datum, eigenvalues=values
    )


def lambda_array(factors: Sequence[FactorSpectrum], indices: Sequence[int]) -> tuple:
    """Per-factor eigenvalue array of one index array."""
    if len(indices) != len(factors):
        raise ValueError("index array length must match the factor count")
    return tuple(f.eigenvalues[indices[i]] for i, f in enumerate(factors))


def _index_box(shape) -> Iterator[tuple]:
    current = [0] * len(shape)
    while True:
        yield tuple(current)
        i = len(shape) - 1
        while i >= 0 and current[i] == shape[i]:
            current[i] = 0
            i -= 1
        if i < 0:
            return
        current[i] += 1


def _primitive_direction(vector) -> tuple:
    content = 0
    scale = 1
    for x in vector:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in vector]
    for value in ints:
        content = gcd(content, value)
    return tuple(value // content for value in ints)


def _integral_values(factors) -> bool:
    return all(
        v.denominator == 1 for f in factors for v in f.eigenvalues
    )


def collision_hyperplanes(factors: Sequence[FactorSpectrum], bound: int = None) -> list:
    """Primitive normals of the collision hyperplanes meeting the orthant.

    Normals are the differences lambda_a - lambda_a' over index arrays in
    the box, reduced to primitive integer vectors and deduplicated up to
    positive rational scaling.  Differences whose nonzero entries all
    share one sign are dropped: their zero set misses the open positive
    orthant, so no positive weight vector can hit them (in particular a
    single injective factor contributes no hyperplane at all).
    """
    if not factors:
        raise ValueError("need at least one factor")
    if bound is None:
        bound = min(f.bound for f in factors)
    shape = tuple(bound for _ in factors)
    arrays = list(_index_box(shape))
    integral = _integral_values(factors)
    if integral:
        values = [
            tuple(int(f.eigenvalues[a[i]]) for i, f in enumerate(factors))
            for a in arrays
        ]
    else:
        values = [
            tuple(f.eigenvalues[a[i]] for i, f in enumerate(factors))
            for a in arrays
        ]
    normals = set()
    for i in range(len(arrays)):
        vi = values[i]
        for j in range(i + 1, len(arrays)):
            vj = values[j]
            diff = tuple(x - y for x, y in zip(vi, vj))
            has_pos = any(x > 0 for x in diff)
            has_neg = any(x < 0 for x in diff)
            if not (has_pos and has_neg):
                continue
            if integral:
                content = 0
                for value in diff:
                    content = gcd(content, value)
                primitive = tuple(value // content for value in diff)
            else:
                primitive = _primitive_direction(diff)
            normals.add(primitive)
            normals.add(tuple(-x for x in primitive))
    return sorted(normals)


@dataclass(frozen=True)
class CollisionWitness:
    """Two index arrays whose weighted eigenvalues agree at a given beta."""

    array_a: tuple
    array_b: tuple
    value: Fraction

    def to_json(self) -> dict:
        return {
            "array_a": list(self.array_a),
            "array_b": list(self.array_b),
            "value": rational_to_str(self.value),
        }


def check_beta(factors: Sequence[FactorSpectrum], beta: Sequence, bound: int = None) -> list:
    """All collision witnesses for a candidate weight vector, sorted."""
    if bound is None:
        bound = min(f.bound for f in factors)
    beta = [Fraction(x) for x in beta]
    if len(beta) != len(factors):
        raise ValueError("beta length must match the factor count")
    if any(x <= 0 for x in beta):
        raise ValueError("beta entries must be positive")
    shape = tuple(bound for _ in factors)
    # weighted eigenvalue tables per factor; plain ints when possible
    if _integral_values(factors) and all(b.denominator == 1 for b in beta):
        tables = [
            [int(b) * int(v) for v in f.eigenvalues[: bound + 1]]
            for b, f in zip(beta, factors)
        ]
    else:
        tables = [
            [b * v for v in f.eigenvalues[: bound + 1]]
            for b, f in zip(beta, factors)
        ]
    groups = {}
    for array in _index_box(shape):
        value = sum(tables[i][array[i]] for i in range(len(factors)))
        groups.setdefault(value, []).append(array)
    witnesses = []
    for value, arrays in groups.items():
        if len(arrays) < 2:
            continue
        for i in range(len(arrays)):
            for j in range(i + 1, len(arrays)):
                witnesses.append(
                    CollisionWitness(arrays[i], arrays[j], Fraction(value))
                )
    witnesses.sort(key=lambda w: (w.array_a, w.array_b))
    return witnesses


def prime_sequence() -> Iterator[int]:
    """1, 2, 3, 5, 7, 11, ...: one followed by the primes."""
    yield 1
    primes = []
    candidate = 2
    while True:
        if all(candidate % p for p in primes):
            primes.append(candidate)
            yield candidate
        candidate += 1


def candidate_tuples(length: int) -> Iterator[tuple]:
    """Tuples over the 1-then-primes sequence, enumerated deterministically.

    Pure lexicographic order over an infinite alphabet never advances the
    leading coordinates, so enumeration proceeds by levels: level T holds
    the tuples whose largest sequence index is exactly T, in lexicographic
    order within the level.
    """
    from itertools import product

    seq = []
    gen = prime_sequence()
    level = 0
    while True:
        while len(seq) <= level:
            seq.append(next(gen))
        for indices in product(range(level + 1), repeat=length):
            if max(indices) == level:
                yield tuple(seq[i] for i in indices)
        level += 1


@dataclass(frozen=True)
class BetaCertificate:
    """A weight vector certified collision-free on a finite index box.

    The claim is exactly the box stated here, nothing more: every
    truncation certificate is finite and honest.
    """

    factors: tuple  # labels
    bound: int
    beta: tuple
    candidates_tried: int
    hyperplanes: int
    distinct_values: int

    def to_json(self) -> dict:
        return {
            "factors": list(self.factors),
            "bound": self.bound,
            "beta": [rational_to_str(x) for x in self.beta],
            "candidates_tried": self.candidates_tried,
            "hyperplanes": self.hyperplanes,
            "distinct_values": self.distinct_values,
        }


def generic_beta_certificate(
    factors: Sequence[FactorSpectrum], bound: int = None
) -> BetaCertificate:
    """Deterministic collision-free weight vector for the truncated box.

    Candidates with entries from the 1-then-primes sequence are tried in
    the deterministic order of :func:`candidate_tuples`; the first one
    orthogonal to no truncated hyperplane normal wins and is then
    re-verified by an exhaustive pairwise distinctness check.  A single
    factor is certified immediately by injectivity.
    """
    if bound is None:
        bound = min(f.bound for f in factors)
    normals = collision_hyperplanes(factors, bound)
    tried = 0
    for candidate in candidate_tuples(len(factors)):
        tried += 1
        beta = tuple(Fraction(c) for c in candidate)
        if check_beta(factors, beta, bound):
            continue
        # a box collision is exactly a hit on a truncated hyperplane, so
        # the surviving candidate must also clear every stored normal
        if any(
            sum(n_i * b_i for n_i, b_i in zip(normal, beta)) == 0
            for normal in normals
        ):
            raise AssertionError("hyperplane list and exhaustive check disagree")
        box = (bound + 1) ** len(factors)
        return BetaCertificate(
            factors=tuple(f.label for f in factors),
            bound=bound,
            beta=beta,
            candidates_tried=tried,
            hyperplanes=len(normals),
            distinct_values=box,
        )
    raise RuntimeError("unreachable: the candidate sequence is infinite")
