"""Cartan data for the (restricted) root system types A, B, C, D, BC, E, F, G.

Each type carries an integer Cartan matrix, exact square norms of the
simple roots, the inverse Cartan matrix, and per-node flags marking
doubled restricted roots (type BC).  The Cartan convention is

    cartan[i][j] = 2 (beta_i, beta_j) / (beta_j, beta_j),

so norm-weighted symmetry ``cartan[i][j] * norms[j] == cartan[j][i] *
norms[i]`` holds, and the Gram matrix of the dual basis defined by
``(M_i, beta_j) = delta_ij (beta_j, beta_j)`` is

    G = 2 * cartan^{-1} * diag(norms).

Norms are normalized per type so that the rank-two Gram matrices come out
as [[2,2],[2,4]] for B2 and [[4,2],[2,2]] for C2; other types use square
norm 2 for short roots.  Eigenvalue collision structure is invariant
under global rescaling, so only determinism is at stake in this choice.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import rational_to_str

FAMILIES = ("A", "B", "C", "D", "BC", "E6", "E7", "E8", "F4", "G2")

_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class RootSystemType:
    """A root system family together with its rank."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        fixed = _FIXED_RANK.get(self.family)
        if fixed is not None and self.rank != fixed:
            raise ValueError(f"{self.family} has rank {fixed}, got {self.rank}")
        if self.family == "B" and self.rank < 2:
            raise ValueError("type B needs rank >= 2 (use A1 for rank one)")
        if self.family == "C" and self.rank < 2:
            raise ValueError("type C needs rank >= 2 (use A1 for rank one)")
        if self.family == "D" and self.rank < 2:
            raise ValueError("type D needs rank >= 2")

    def __str__(self) -> str:
        if self.family in _FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> RootSystemType:
    """Parse labels like ``A3``, ``BC2``, ``E7``."""
    match = re.fullmatch(r"(BC|[ABCD]|E[678]|F4|G2)(\d*)", text.strip())
    if not match:
        raise ValueError(f"cannot parse root system type {text!r}")
    family, rank = match.group(1), match.group(2)
    if family in _FIXED_RANK:
        return RootSystemType(family, _FIXED_RANK[family])
    if not rank:
        raise ValueError(f"type {family} needs an explicit rank")
    return RootSystemType(family, int(rank))


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix, simple-root norms, inverse, and doubled-root flags."""

    system: RootSystemType
    cartan: tuple
    norms: tuple
    inverse_cartan: tuple
    doubled: tuple

    @property
    def rank(self) -> int:
        return self.system.rank

    def beta_gram(self) -> tuple:
        """Gram matrix of the simple roots: (beta_i, beta_j)."""
        n = self.rank
        return tuple(
            tuple(Fraction(self.cartan[i][j]) * self.norms[j] / 2 for j in range(n))
            for i in range(n)
        )

    def to_json(self) -> dict:
        return {
            "type": str(self.system),
            "cartan": [list(row) for row in self.cartan],
            "norms": [rational_to_str(x) for x in self.norms],
            "inverse_cartan": [
                [rational_to_str(x) for x in row] for row in self.inverse_cartan
            ],
            "doubled": list(self.doubled),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _invert(matrix) -> tuple:
    """Exact inverse of a square integer/rational matrix (Gauss-Jordan)."""
    n = len(matrix)
    a = [[Fraction(matrix[i][j]) for j in range(n)] for i in range(n)]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        scale = a[col][col]
        a[col] = [x / scale for x in a[col]]
        inv[col] = [x / scale for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - factor * y for x, y in zip(inv[r], inv[col])]
    return tuple(tuple(row) for row in inv)


def _path_cartan(rank: int) -> list:
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
        if i + 1 < rank:
            c[i][i + 1] = -1
            c[i + 1][i] = -1
    return c


def _chain_cartan(rank: int, edges) -> list:
    """Cartan matrix from an explicit edge list (i, j, cij, cji)."""
    c = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        c[i][i] = 2
    for i, j, cij, cji in edges:
        c[i][j] = cij
        c[j][i] = cji
    return c


def _build(system: RootSystemType):
    family, rank = system.family, system.rank
    two = Fraction(2)
    if family == "A":
        return _path_cartan(rank), (two,) * rank, (False,) * rank
    if family == "B":
        if rank == 2:
            # node order chosen so the Gram matrix is [[2,2],[2,4]]
            return [[2, -1], [-2, 2]], (Fraction(1), two), (False, False)
        c = _path_cartan(rank)
        c[rank - 2][rank - 1] = -2
        c[rank - 1][rank - 2] = -1
        return c, (two,) * (rank - 1) + (Fraction(1),), (False,) * rank
    if family in ("C", "BC"):
        doubled = (False,) * rank if family == "C" else (False,) * (rank - 1) + (True,)
        if rank == 1:
            return [[2]], (Fraction(4),), doubled
        if rank == 2:
            # node order chosen so the Gram matrix is [[4,2],[2,2]]
            return [[2, -2], [-1, 2]], (two, Fraction(1)), doubled
        c = _path_cartan(rank)
        c[rank - 2][rank - 1] = -1
        c[rank - 1][rank - 2] = -2
        return c, (two,) * (rank - 1) + (Fraction(4),), doubled
    if family == "D":
        c = [[0] * rank for _ in range(rank)]
        for i in range(rank):
            c[i][i] = 2
        for i in range(rank - 3):
            c[i][i + 1] = c[i + 1][i] = -1
        if rank >= 3:
            fork = rank - 3
            for leaf in (rank - 2, rank - 1):
                c[fork][leaf] = c[leaf][fork] = -1
        return c, (two,) * rank, (False,) * rank
    if family in ("E6", "E7", "E8"):
        # Bourbaki numbering: chain 1-3-4-5-...-rank with node 2 on node 4
        edges = [(0, 2, -1, -1), (1, 3, -1, -1)]
        for i in range(2, rank - 1):
            edges.append((i, i + 1, -1, -1))
        return _chain_cartan(rank, edges), (two,) * rank, (False,) * rank
    if family == "F4":
        c = _chain_cartan(4, [(0, 1, -1, -1), (1, 2, -2, -1), (2, 3, -1, -1)])
        return c, (two, two, Fraction(1), Fraction(1)), (False,) * 4
    if family == "G2":
        return [[2, -1], [-3, 2]], (two, Fraction(6)), (False, False)
    raise ValueError(f"unsupported family {family}")


def cartan_data(system: RootSystemType) -> CartanData:
    """Cartan data for a root system type, validated against the invariants."""
    cartan, norms, doubled = _build(system)
    rank = system.rank
    for i in range(rank):
        if cartan[i][i] != 2:
            raise AssertionError("diagonal Cartan entry must be 2")
        for j in range(rank):
            if i != j and cartan[i][j] not in (0, -1, -2, -3):
                raise AssertionError("off-diagonal Cartan entry out of range")
            if cartan[i][j] * norms[j] != cartan[j][i] * norms[i]:
                raise AssertionError("norm-weighted symmetry violated")
    inverse = _invert(cartan)
    return CartanData(
        system=system,
        cartan=tuple(tuple(row) for row in cartan),
        norms=tuple(norms),
        inverse_cartan=inverse,
        doubled=tuple(doubled),
    )


def gram_matrix(data: CartanData) -> tuple:
    """Gram matrix of the dual weight basis: G = 2 * cartan^{-1} * diag(norms).

    Symmetric and positive definite; G[i][j] = (M_i, M_j) for the basis
    with (M_i, beta_j) = delta_ij (beta_j, beta_j).
    """
    n = data.rank
    gram = tuple(
        tuple(2 * data.inverse_cartan[i][j] * data.norms[j] for j in range(n))
        for i in range(n)
    )
    for i in range(n):
        for j in range(n):
            if gram[i][j] != gram[j][i]:
                raise AssertionError("Gram matrix is not symmetric")
    return gram


def leading_principal_minors(matrix) -> list:
    """Exact leading principal minors (positive definiteness certificate)."""
    n = len(matrix)
    minors = []
    for k in range(1, n + 1):
        a = [[Fraction(matrix[i][j]) for j in range(k)] for i in range(k)]
        det = Fraction(1)
        for col in range(k):
            pivot = next((r for r in range(col, k) if a[r][col] != 0), None)
            if pivot is None:
                det = Fraction(0)
                break
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            for r in range(col + 1, k):
                factor = a[r][col] / a[col][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        minors.append(det)
    return minors
