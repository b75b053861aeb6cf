from fractions import Fraction

import pytest

from casimirspec.bundles import (
    HopfInvariantPair,
    bundle_case_notes,
    collision_system_check,
    direct_system_check,
    hopf_eigenvalue,
    hopf_representation_family,
    hopf_swap_theorem_scan,
)


class TestHopfEigenvalue:
    def test_n2_values(self):
        ev = hopf_eigenvalue(2, 1, 2)
        assert ev.alpha == -4
        assert ev.freudenthal == 20

    def test_swap_symmetry(self):
        a = hopf_eigenvalue(2, 2, 1)
        b = hopf_eigenvalue(2, 1, 2)
        assert a.alpha == b.alpha and a.freudenthal == b.freudenthal

    def test_zero_weight(self):
        for n in (1, 2, 5):
            ev = hopf_eigenvalue(n, 0, 0)
            assert ev.alpha == 0 and ev.freudenthal == 0

    def test_bad_inputs(self):
        with pytest.raises(ValueError):
            hopf_eigenvalue(0, 1, 1)
        with pytest.raises(ValueError):
            hopf_eigenvalue(2, -1, 0)

    def test_parametric_form_of_swap_pair_identical(self):
        assert (
            hopf_eigenvalue(3, 4, 1).parametric()
            == hopf_eigenvalue(3, 1, 4).parametric()
        )


class TestInvariants:
    def test_substitution(self):
        pair = HopfInvariantPair.from_weight(2, 3, 0)
        assert (pair.x, pair.y) == (20, 2)
        assert pair.invariants() == (404, 40)

    def test_congruence(self):
        for n in (2, 3):
            for p in range(5):
                for q in range(5):
                    pair = HopfInvariantPair.from_weight(n, p, q)
                    assert pair.x % (2 * (n + 1)) == n
                    assert pair.y % (2 * (n + 1)) == n
                    assert pair.x >= n and pair.y >= n


class TestCollisionCheck:
    def test_swaps(self):
        assert collision_system_check(2, (1, 2), (2, 1))
        assert collision_system_check(2, (3, 0), (0, 3))

    def test_non_collision(self):
        # invariant coordinates (20, 2) vs (14, 14): 404 != 392
        assert not collision_system_check(2, (3, 0), (2, 2))

    def test_agrees_with_direct_system_on_box(self):
        n, bound = 2, 8
        weights = [(p, q) for p in range(bound + 1) for q in range(bound + 1)]
        for a in weights:
            for b in weights:
                assert collision_system_check(n, a, b) == direct_system_check(n, a, b)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            collision_system_check(2, (-1, 0), (0, 0))


class TestSwapTheoremScan:
    def test_only_swaps_small(self):
        for n in (2, 3):
            report = hopf_swap_theorem_scan(n, 15)
            assert report.non_swap_pairs == ()
            assert report.agreement_mismatches == 0
            assert report.swap_pairs == report.collision_pairs
            assert report.swap_theorem_holds

    def test_bound_one(self):
        report = hopf_swap_theorem_scan(2, 1)
        assert report.collision_pairs == 1
        assert report.swap_pairs == 1

    def test_multiset_recovery_identity(self):
        # (x + y)^2 and (x - y)^2 recover the multiset from the invariants
        for n in (2, 4):
            for p in range(6):
                for q in range(6):
                    pair = HopfInvariantPair.from_weight(n, p, q)
                    sum_sq, prod = pair.invariants()
                    assert (pair.x + pair.y) ** 2 == sum_sq + 2 * prod
                    assert (pair.x - pair.y) ** 2 == sum_sq - 2 * prod

    def test_workers_agree(self):
        solo = hopf_swap_theorem_scan(2, 10, workers=1)
        multi = hopf_swap_theorem_scan(2, 10, workers=2)
        assert solo == multi

    def test_worker_count_env_var(self, monkeypatch):
        from casimirspec.bundles import default_worker_count

        monkeypatch.setenv("CASIMIRSPEC_WORKERS", "3")
        assert default_worker_count() == 3
        monkeypatch.setenv("CASIMIRSPEC_WORKERS", "junk")
        assert default_worker_count() == 1
        monkeypatch.delenv("CASIMIRSPEC_WORKERS")
        assert default_worker_count() == 1

    def test_requires_n_above_one(self):
        with pytest.raises(ValueError):
            hopf_swap_theorem_scan(1, 5)


class TestRepresentationFamily:
    def test_types_and_duals(self):
        family = hopf_representation_family(2, 4)
        by_id = {entry.id: entry for entry in family}
        assert by_id["H(1,2)"].type_class == "complex"
        assert by_id["H(1,2)"].dual_id == "H(2,1)"
        assert by_id["H(2,2)"].type_class == "real"
        assert by_id["H(2,2)"].dual_id == "H(2,2)"

    def test_truncation_shape(self):
        family = hopf_representation_family(2, 4)
        assert len(family) == 15  # pairs with p + q <= 4

    def test_parametric_entries(self):
        family = hopf_representation_family(2, 2)
        entry = next(e for e in family if e.id == "H(1,1)")
        value = entry.casimir.entry(0, 0).evaluate(
            {"gamma1": Fraction(1), "gamma2": Fraction(1)}
        )
        assert value == hopf_eigenvalue(2, 1, 1).freudenthal


class TestCaseNotes:
    def test_three_cases(self):
        notes = bundle_case_notes()
        assert [case.name for case in notes] == ["B1", "B2", "B3"]
        assert "m = 1" in notes[0].base_simple_when
        assert "n = 3" in notes[1].base_simple_when
        assert notes[2].base_simple_when.startswith("never")
