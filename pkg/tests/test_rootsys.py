from fractions import Fraction

import pytest

from casimirspec.rootsys import (
    RootSystemType,
    cartan_data,
    gram_matrix,
    leading_principal_minors,
    parse_type,
)

ALL_TYPES = [
    parse_type(t)
    for t in (
        "A1", "A2", "A3", "A5", "A7",
        "B2", "B3", "B4",
        "C2", "C3", "C4",
        "BC1", "BC2", "BC3",
        "D3", "D4", "D5",
        "E6", "E7", "E8", "F4", "G2",
    )
]


def F(n, d=1):
    return Fraction(n, d)


class TestCartanData:
    def test_a3(self):
        data = cartan_data(parse_type("A3"))
        assert data.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
        assert data.norms == (F(2), F(2), F(2))

    def test_b2_calibration(self):
        data = cartan_data(parse_type("B2"))
        assert sorted(
            [data.cartan[0][1], data.cartan[1][0]]
        ) == [-2, -1]
        assert gram_matrix(data) == ((F(2), F(2)), (F(2), F(4)))

    def test_bc1_doubled_flag(self):
        data = cartan_data(parse_type("BC1"))
        assert data.doubled == (True,)
        assert data.cartan == ((2,),)

    def test_bc_last_node_doubled(self):
        data = cartan_data(parse_type("BC3"))
        assert data.doubled == (False, False, True)

    @pytest.mark.parametrize("system", ALL_TYPES, ids=str)
    def test_invariants(self, system):
        data = cartan_data(system)
        n = system.rank
        for i in range(n):
            assert data.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert data.cartan[i][j] in (0, -1, -2, -3)
                assert (
                    data.cartan[i][j] * data.norms[j]
                    == data.cartan[j][i] * data.norms[i]
                )
        # inverse_cartan * cartan = identity
        for i in range(n):
            for j in range(n):
                acc = sum(
                    data.inverse_cartan[i][k] * data.cartan[k][j] for k in range(n)
                )
                assert acc == (1 if i == j else 0)

    def test_unsupported(self):
        with pytest.raises(ValueError):
            RootSystemType("B", 1)
        with pytest.raises(ValueError):
            RootSystemType("E6", 5)
        with pytest.raises(ValueError):
            RootSystemType("X", 2)
        with pytest.raises(ValueError):
            parse_type("A")


class TestGramMatrix:
    def test_b2(self):
        assert gram_matrix(cartan_data(parse_type("B2"))) == (
            (F(2), F(2)),
            (F(2), F(4)),
        )

    def test_c2(self):
        assert gram_matrix(cartan_data(parse_type("C2"))) == (
            (F(4), F(2)),
            (F(2), F(2)),
        )

    def test_a3(self):
        assert gram_matrix(cartan_data(parse_type("A3"))) == (
            (F(3), F(2), F(1)),
            (F(2), F(4), F(2)),
            (F(1), F(2), F(3)),
        )

    @pytest.mark.parametrize("system", ALL_TYPES, ids=str)
    def test_symmetric_positive_definite(self, system):
        gram = gram_matrix(cartan_data(system))
        n = system.rank
        for i in range(n):
            for j in range(n):
                assert gram[i][j] == gram[j][i]
        assert all(m > 0 for m in leading_principal_minors(gram))

    @pytest.mark.parametrize("system", ALL_TYPES, ids=str)
    def test_dual_basis_defining_relation(self, system):
        # (M_i, beta_j) recomputed from G and beta = (cartan/2) in the M
        # basis must come out delta_ij * (beta_j, beta_j)
        data = cartan_data(system)
        gram = gram_matrix(data)
        n = system.rank
        for i in range(n):
            for j in range(n):
                inner = sum(
                    Fraction(data.cartan[j][k], 2) * gram[i][k] for k in range(n)
                )
                expected = data.norms[j] if i == j else 0
                assert inner == expected

    @pytest.mark.parametrize("name", ["A4", "D4", "E6", "E7", "E8"])
    def test_simply_laced_integer_up_to_scale(self, name):
        gram = gram_matrix(cartan_data(parse_type(name)))
        scale = 1
        for row in gram:
            for entry in row:
                lcm = scale * entry.denominator
                from math import gcd

                scale = lcm // gcd(scale, entry.denominator)
        assert all((entry * scale).denominator == 1 for row in gram for entry in row)

    def test_json_dump(self):
        import json

        data = cartan_data(parse_type("BC2"))
        parsed = json.loads(data.dumps())
        assert parsed["type"] == "BC2"
        assert parsed["doubled"] == [False, True]
