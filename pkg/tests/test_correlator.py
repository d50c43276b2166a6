"""Correlator degeneration: component survival, scale limits, functoriality."""

import importlib.resources
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projlim.errors import NotInvertible, ProjlimError, TooLarge
from projlim.correlator import (
    FUNDAMENTAL,
    RIGHT_ACTION,
    RepTag,
    deform_correlator,
    degenerate,
    figure1_json,
    figure1_table,
    make_correlator,
    rep_limit_commute_check,
    rho_infinity,
    surviving_components,
    uv_ir_report,
)
from projlim.lie import build_po
from projlim.linalg import identity, mat_mul
from projlim.parsing import parse_sequence
from projlim.projective import FactoredSequence

FLAT = ((1, 0), (3, 1))
DS_SEQ = parse_sequence("diag(t^4,t^-1,t^-1,t^-1,t^-1)")
GALILEI_SEQ = parse_sequence("diag(t,1,1,1,t)")


class TestRepTags:
    def test_schur_requires_pair(self):
        with pytest.raises(ProjlimError):
            RepTag("schur")

    def test_plain_tags_take_no_pair(self):
        with pytest.raises(ProjlimError):
            RepTag("fundamental", ((1,), ()))

    def test_unknown_kind(self):
        with pytest.raises(ProjlimError):
            RepTag("adjoint-ish")

    def test_tag_strings(self):
        assert FUNDAMENTAL.tag_str() == "fundamental"
        assert RepTag("schur", ((1, 1), ())).tag_str() == "schur([1,1],[])"


class TestSurvival:
    def test_positive_curvature_row(self):
        fund = surviving_components(FUNDAMENTAL, rho_infinity(FUNDAMENTAL, DS_SEQ))
        right = surviving_components(RIGHT_ACTION, rho_infinity(RIGHT_ACTION, DS_SEQ))
        assert fund == (1,)
        assert right == (2, 3, 4, 5)

    def test_survival_partitions_components_for_two_level_weights(self):
        # fundamental keeps the top weight level, the right action the bottom
        seq = FactoredSequence.diagonal([2, 2, -1, -1, -1])
        fund = surviving_components(FUNDAMENTAL, rho_infinity(FUNDAMENTAL, seq))
        right = surviving_components(RIGHT_ACTION, rho_infinity(RIGHT_ACTION, seq))
        assert fund == (1, 2)
        assert right == (3, 4, 5)

    @given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
    @settings(max_examples=40, deadline=None)
    def test_two_level_partition_property(self, weights):
        levels = sorted(set(weights))
        if len(levels) != 2:
            return
        seq = FactoredSequence.diagonal(weights)
        fund = set(surviving_components(FUNDAMENTAL, rho_infinity(FUNDAMENTAL, seq)))
        right = set(surviving_components(RIGHT_ACTION, rho_infinity(RIGHT_ACTION, seq)))
        assert fund | right == {1, 2, 3, 4, 5}
        assert fund & right == set()

    @given(
        st.lists(st.integers(-3, 3), min_size=5, max_size=5),
        st.sets(st.integers(0, 4), min_size=1, max_size=4),
    )
    @settings(max_examples=40, deadline=None)
    def test_survival_monotone_under_weight_raising(self, weights, raised):
        """Raising non-maximal weights to the maximum only grows the
        fundamental survival set (monotonicity under degeneration rank)."""
        top = max(weights)
        if all(w == top for w in weights):
            return
        raised_weights = [top if i in raised else w for i, w in enumerate(weights)]
        before = set(
            surviving_components(
                FUNDAMENTAL, rho_infinity(FUNDAMENTAL, FactoredSequence.diagonal(weights))
            )
        )
        after = set(
            surviving_components(
                FUNDAMENTAL,
                rho_infinity(FUNDAMENTAL, FactoredSequence.diagonal(raised_weights)),
            )
        )
        assert before <= after


class TestFigure:
    def test_six_cells(self):
        table = figure1_table()
        cells = {
            (row["name"], rep): tuple(row["cells"][rep]["surviving"])
            for row in table["rows"]
            for rep in ("fundamental", "right_action")
        }
        assert cells == {
            ("ds_to_poincare", "fundamental"): (1,),
            ("ds_to_poincare", "right_action"): (2, 3, 4, 5),
            ("ads_to_poincare", "fundamental"): (1,),
            ("ads_to_poincare", "right_action"): (2, 3, 4, 5),
            ("poincare_to_galilei", "fundamental"): (1, 2),
            ("poincare_to_galilei", "right_action"): (3, 4, 5),
        }

    def test_cells_partition_components(self):
        for row in figure1_table()["rows"]:
            fund = set(row["cells"]["fundamental"]["surviving"])
            right = set(row["cells"]["right_action"]["surviving"])
            assert fund | right == {1, 2, 3, 4, 5}
            assert not (fund & right)

    def test_golden_bytes(self):
        golden = (
            importlib.resources.files("projlim.data")
            .joinpath("figure1_golden.json")
            .read_text()
        )
        assert figure1_json() == golden

    def test_json_is_deterministic_and_parseable(self):
        first, second = figure1_json(), figure1_json()
        assert first == second
        doc = json.loads(first)
        assert doc["schema_version"] == "1"
        assert len(doc["rows"]) == 3


class TestDegenerate:
    def test_report_fields(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL, RIGHT_ACTION])
        report = degenerate(spec, GALILEI_SEQ, None, [[1, 2, 3, 4, 5]])
        assert report.limit_signature == ((1, 0), (1, 0), (3, 0))
        # raw sequence: weights (1,0,0,0,1) keep slots {1,5} / {2,3,4}
        assert report.surviving == ((1, 5), (2, 3, 4))
        assert "boundary" in report.support_kinds
        d = report.as_dict()
        assert set(d) >= {"limit_signature", "surviving", "samples", "rho_inf"}

    def test_composed_permutation_relabels_components(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL, RIGHT_ACTION])
        report = degenerate(spec, GALILEI_SEQ, (0, 2, 3, 4, 1), [[1, 2, 3, 4, 5]])
        assert report.permutation == (0, 1, 2, 3, 4)
        assert report.surviving == ((1, 2), (3, 4, 5))

    def test_schur_factor(self):
        spec = make_correlator(FLAT, [RepTag("schur", ((1, 1), ()))])
        report = degenerate(spec, GALILEI_SEQ, None, None)
        [surv] = report.surviving
        assert len(surv) >= 1
        assert all(1 <= c <= 10 for c in surv)

    def test_mixed_pair_too_large(self):
        spec = make_correlator(FLAT, [RepTag("schur", ((1,), (1,)))])
        with pytest.raises(TooLarge):
            degenerate(spec, GALILEI_SEQ, None, None)


class TestDeform:
    def test_identity_is_neutral(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL])
        assert deform_correlator(spec, identity(5)) == spec

    def test_functoriality(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL, RIGHT_ACTION])
        g = [[1, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 2, 0], [0, 0, 0, 0, 1]]
        h = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 3], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
        assert deform_correlator(deform_correlator(spec, g), h) == deform_correlator(
            spec, mat_mul(h, g)
        )

    def test_inverse_recovers_original(self):
        from projlim.linalg import inverse

        spec = make_correlator(FLAT, [FUNDAMENTAL])
        g = [[2, 1, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]
        assert deform_correlator(deform_correlator(spec, g), inverse(g)) == spec

    def test_singular_deformation_rejected(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL])
        with pytest.raises(NotInvertible):
            deform_correlator(spec, [[0] * 5 for _ in range(5)])

    def test_smear_labels_show_transform(self):
        spec = make_correlator(FLAT, [FUNDAMENTAL])
        g = [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 1, 1]]
        deformed = deform_correlator(spec, g)
        assert any("g^-1" in label for label in deformed.smear_labels())


class TestScaleLimits:
    def test_uv_and_ir_keep_first_component(self):
        for mode in ("uv", "ir"):
            report = uv_ir_report(3, mode)
            assert report.surviving == ((1,), (1,), (1,))
            assert report.fixed_points == ("[1, 0, 0, 0, 0]",)
            assert set(report.support_kinds) == {"boundary", "interior_lower_dim"}

    def test_points_with_spatial_part_reach_boundary(self):
        report = uv_ir_report(1, "uv", [[1, 2, 0, 0, 0], [3, 0, 0, 0, 1]])
        kinds = [s.kind for s in report.samples[:2]]
        assert kinds == ["boundary", "boundary"]

    def test_bad_mode(self):
        with pytest.raises(ProjlimError):
            uv_ir_report(1, "lateral")


class TestCommutation:
    def test_rotation_sample_commutes(self):
        po = build_po(FLAT)
        rotation = [[Fraction(0)] * 5 for _ in range(5)]
        rotation[1][2], rotation[2][1] = Fraction(1), Fraction(-1)
        assert rep_limit_commute_check(
            po, GALILEI_SEQ, RepTag("schur", ((1, 1), ())), [rotation]
        )

    def test_fundamental_commutes(self):
        po = build_po(FLAT)
        mixed = [[Fraction(0)] * 5 for _ in range(5)]
        mixed[3][4] = mixed[4][3] = Fraction(1)
        mixed[1][0] = Fraction(1)
        assert rep_limit_commute_check(po, GALILEI_SEQ, FUNDAMENTAL, [mixed])

    def test_non_member_rejected(self):
        po = build_po(FLAT)
        not_in_algebra = [[Fraction(0)] * 5 for _ in range(5)]
        not_in_algebra[0][1] = Fraction(1)  # upper-left mixing not in the flat algebra
        with pytest.raises(ProjlimError):
            rep_limit_commute_check(po, GALILEI_SEQ, FUNDAMENTAL, [not_in_algebra])
