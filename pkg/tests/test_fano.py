import pytest

from unproj import (
    GF,
    FAMILY_IDS,
    GradedPolyRing,
    Ideal,
    UnknownFamilyError,
    betti_consistency,
    ci_canonical_twist,
    family_spec,
    monomials_of_weighted_degree,
    strata_check,
)
from unproj.fano import BettiTable, _NUMERATORS


def test_unknown_family_rejected():
    with pytest.raises(UnknownFamilyError):
        family_spec(12345)


def test_family_ids():
    assert FAMILY_IDS == (29376, 9176, 24198)


class TestSpecs:
    def test_ambient_rings(self):
        spec = family_spec(29376)
        assert [n for n, _ in spec.ambient_vars] == [
            "w1", "w2", "T2", "T3", "T4", "x1", "x3", "x5", "x6", "T1",
        ]
        assert sorted(w for _, w in spec.ambient_vars) == [1] * 8 + [2, 3]
        spec = family_spec(9176)
        assert sorted(w for _, w in spec.ambient_vars) == [1, 1, 2, 2, 2, 2, 2, 3, 3, 3]
        spec = family_spec(24198)
        assert [n for n, _ in spec.ambient_vars] == [
            "x1", "x3", "x5", "x6", "c3", "c6", "x2", "x4", "T3", "T1",
        ]

    def test_substitution_shapes(self):
        assert family_spec(29376).general_images == (("x2", 2), ("x4", 2))
        assert family_spec(9176).general_images == (("x3", 2), ("T1", 4))
        spec = family_spec(24198)
        assert spec.general_images == (("T2", 2), ("T4", 1))
        assert spec.kept_c == ("c3", "c6")

    def test_parameter_counts(self):
        assert sum(family_spec(29376).param_counts) == 74
        assert sum(family_spec(9176).param_counts) == 49
        assert sum(family_spec(24198).param_counts) == 30

    def test_numerators_palindromic(self):
        for fid in FAMILY_IDS:
            coeffs = family_spec(fid).expected_numerator
            top = len(coeffs) - 1
            assert all(coeffs[i] == coeffs[top - i] for i in range(top + 1))
        assert len(family_spec(29376).expected_numerator) - 1 == 12
        assert len(family_spec(9176).expected_numerator) - 1 == 20
        assert len(family_spec(24198).expected_numerator) - 1 == 14


class TestGeneralFormLayout:
    def test_29376_form_ends_at_x6(self):
        spec = family_spec(29376)
        ring = GradedPolyRing(GF(32003), list(spec.ambient_vars))
        mons = monomials_of_weighted_degree(ring, 2)
        assert len(mons) == 37
        x6_only = tuple(1 if n == "x6" else 0 for n, _ in spec.ambient_vars)
        assert mons[-1] == x6_only

    def test_24198_linear_form_is_the_six_unit_vectors(self):
        spec = family_spec(24198)
        ring = GradedPolyRing(GF(32003), list(spec.ambient_vars))
        mons = monomials_of_weighted_degree(ring, 1)
        names = [n for n, _ in spec.ambient_vars]
        picked = [names[m.index(1)] for m in mons]
        assert picked == ["x1", "x3", "x5", "x6", "c3", "c6"]


class TestInstances:
    def test_draws_are_seeded_and_logged(self, family_instances):
        a = family_instances(29376, 0)
        b = family_instances(29376, 1)
        assert a.c_assignment != b.c_assignment
        assert len(a.l_assignment) == 74
        assert all(v != 0 for v in a.l_assignment)
        assert len(family_instances(9176, 0).l_assignment) == 49
        assert len(family_instances(24198, 0).l_assignment) == 30

    def test_rebuild_is_deterministic(self, fp):
        from unproj import build_family

        one = build_family(29376, 5, fp)
        two = build_family(29376, 5, fp)
        assert one.c_assignment == two.c_assignment
        assert one.l_assignment == two.l_assignment
        assert list(one.Q.generators) == list(two.Q.generators)

    def test_family_ideals_are_homogeneous(self, family_instances):
        for fid in FAMILY_IDS:
            inst = family_instances(fid, 0)
            assert len(inst.Q.generators) == 20
            assert all(g.is_homogeneous() for g in inst.Q.generators)

    def test_kept_variables_appear_in_24198(self, family_instances):
        inst = family_instances(24198, 0)
        support = set()
        for g in inst.Q.generators:
            support |= {inst.ambient.names[i] for i in g.support_vars()}
        assert {"c3", "c6"} <= support


class TestReferenceData:
    def test_betti_gates_all_pass(self):
        for fid in FAMILY_IDS:
            gates = betti_consistency(fid)
            assert gates == {
                "alternating_sum_matches": True,
                "canonical_twist_is_minus_one": True,
                "self_dual": True,
            }

    def test_top_twists(self):
        assert family_spec(29376).betti.top_twist == 12
        assert family_spec(9176).betti.top_twist == 20
        assert family_spec(24198).betti.top_twist == 14

    def test_24198_fifth_step_contains_twist_twelve(self):
        steps = family_spec(24198).betti.steps
        assert (12, 1) in steps[5]
        assert (11, 10) in steps[5]

    def test_alternating_sum_matches_numerator_by_hand(self):
        for fid in FAMILY_IDS:
            spec = family_spec(fid)
            assert spec.betti.alternating_sum() == _NUMERATORS[fid]

    def test_betti_table_validation(self):
        with pytest.raises(ValueError):
            BettiTable((((0, 1),),) * 6)  # wrong length
        with pytest.raises(ValueError):
            BettiTable((((1, 1),),) + (((1, 1),),) * 5 + (((12, 1),),))

    def test_tampered_table_fails_gates(self):
        spec = family_spec(29376)
        steps = list(spec.betti.steps)
        steps[5] = ((8, 6), (9, 7), (10, 6))  # drop one copy
        bad = BettiTable(tuple(steps))
        assert bad.alternating_sum() != _NUMERATORS[29376]
        assert not bad.is_self_dual()


class TestCanonicalTwists:
    @pytest.mark.parametrize("fid,twist", [(29376, -3), (9176, -5), (24198, -4)])
    def test_complete_intersection_twists(self, family_instances, fid, twist):
        inst = family_instances(fid, 0)
        assert ci_canonical_twist(inst.hat_ideal) == twist
        assert inst.spec.ci_twist == twist

    def test_rejects_non_regular_input(self, fp):
        R = GradedPolyRing(fp, [("x", 1), ("y", 1)])
        with pytest.raises(ValueError):
            ci_canonical_twist(Ideal(R, [R.var("x"), R.var("x")]))


class TestStrataPoints:
    def test_29376_points(self, family_instances):
        inst = family_instances(29376, 0)
        results = {r.name: r for r in strata_check(inst)}
        assert results["T1-point"].contained is True
        assert results["x6-point"].contained is False

    def test_24198_point(self, family_instances):
        inst = family_instances(24198, 0)
        results = {r.name: r for r in strata_check(inst)}
        assert results["T1-point"].contained is True
        assert results["weight-2 locus"].degree == 2

    def test_strata_degrees_seed_independent(self, family_instances):
        for fid in FAMILY_IDS:
            per_seed = []
            for seed in (0, 1):
                results = strata_check(family_instances(fid, seed))
                per_seed.append([(r.name, r.degree) for r in results])
            assert per_seed[0] == per_seed[1]


class TestGenericBehaviourAcrossSeeds:
    def test_codim_and_minimal_generators_stable(self, family_instances):
        from unproj import codimension, minimal_generators

        for fid in FAMILY_IDS:
            for seed in (0, 1):
                inst = family_instances(fid, seed)
                assert codimension(inst.Q) == 6
                assert len(minimal_generators(inst.Q)) == 20

    def test_24198_intermediate_fivefold_and_final_threefold(self, fp):
        """The kept-variable quotient is a projective 5-fold, the ambient
        image a 3-fold."""
        from unproj import base_unprojection, build_family, codimension, dimension, specialize

        iun = base_unprojection(fp)
        weights = {"x2": 2, "x4": 2, "T1": 3, "T2": 2, "T3": 2, "T4": 1}
        special = specialize(
            iun,
            {"c1": 3, "c2": 11, "c4": 17, "c5": 23, "c3": "keep", "c6": "keep"},
            weights=weights,
        )
        assert special.ext_ring.nvars == 12
        assert codimension(special.unprojection) == 6  # affine dim 6: Proj is a 5-fold
        inst = build_family(24198, 0, fp)
        assert dimension(inst.Q) == 4  # affine cone dim 4: Proj is a 3-fold
