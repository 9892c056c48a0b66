from __future__ import annotations

import pytest

from venngraph.maps import DisconnectedError, PlaneGraph
from venngraph.validate import (
    check_general_position,
    check_ufi,
    digon_faces,
    is_independent_family,
    is_vgraph,
    two_faces,
    validate,
    venn_check,
)

from conftest import figure_eight


class TestGeneralPosition:
    def test_venn3_passes(self, venn3):
        report = check_general_position(venn3)
        assert report.ok
        assert report.is_planar
        assert not report.self_crossings

    def test_figure_eight_fails_as_self_crossing(self):
        report = check_general_position(figure_eight())
        assert not report.ok
        assert report.self_crossings == (0,)

    def test_weave_is_general_position(self, weaves):
        # the weave is a legal configuration; it fails UFI, not position
        assert check_general_position(weaves[4]).ok

    def test_torus_crossing_fails_planarity(self):
        # two loops through one vertex crossing once: only embeds on a torus
        g = PlaneGraph(1, [2, 3, 0, 1])
        report = check_general_position(g)
        assert not report.is_planar
        assert not report.ok


class TestUfi:
    def test_venn3_clean(self, venn3):
        assert check_ufi(venn3) == ()

    def test_weave_violates(self, weaves):
        violations = check_ufi(weaves[3])
        assert violations
        # each big ring face alternates the two curves, k edges apiece
        ring_faces = {f.id for f in weaves[3].faces if f.degree == 6}
        assert {v.face for v in violations} == ring_faces
        assert all(v.count == 3 for v in violations)

    def test_extended_diagram_clean(self, venn5):
        assert check_ufi(venn5) == ()


class TestTwoFaces:
    def test_venn3_has_none(self, venn3):
        assert two_faces(venn3) == ()

    def test_weave_digons_are_two_faces(self, weaves):
        for k, w in weaves.items():
            reported = set(two_faces(w))
            digons = set(digon_faces(w))
            assert len(digons) == 2 * k
            assert digons <= reported
            assert reported  # nonempty either way

    def test_lens_all_faces_touch_both_curves(self, lens):
        assert lens.vertex_count == 2
        assert len(lens.faces) == 4
        # every face of a connected two-curve arrangement meets both curves
        assert set(two_faces(lens)) == {0, 1, 2, 3}
        assert set(digon_faces(lens)) == {0, 1, 2, 3}


class TestVGraph:
    def test_venn3_is_vgraph(self, venn3):
        ok, report = is_vgraph(venn3)
        assert ok
        assert report.is_vgraph
        assert report.curve_count == 3

    def test_weave_is_not(self, weaves):
        ok, report = is_vgraph(weaves[5])
        assert not ok
        assert report.curve_count == 2
        assert report.ufi_violations

    def test_scrambled_rotation_rejected(self, venn4):
        # swap two slots at vertex 0 and patch reciprocity: still a valid
        # map, but no longer the same embedding
        twin = list(venn4._twin)
        twin[0], twin[1] = twin[1], twin[0]
        twin[twin[0]] = 0
        twin[twin[1]] = 1
        try:
            g = PlaneGraph(venn4.vertex_count, twin)
        except Exception:
            return  # a build error is an acceptable outcome
        assert not validate(g, with_venn=False).is_vgraph


class TestVennCheck:
    def test_venn3_all_labels(self, venn3):
        report = venn_check(venn3)
        assert report.is_simple_venn
        assert report.curve_count == 3
        assert sorted(report.labels) == list(range(8))
        assert report.missing_labels == ()
        assert report.duplicated_labels == ()

    def test_weave_repeats_labels(self, weaves):
        report = venn_check(weaves[3])
        assert not report.is_simple_venn
        assert report.curve_count == 2
        # 2k+2 faces but only 4 possible labels: repeats are forced
        assert report.face_count == 8
        assert report.duplicated_labels
        # the lenses alternate between two labels, k of each
        digons = set(digon_faces(weaves[3]))
        lens_labels = [report.labels[f] for f in sorted(digons)]
        assert len(set(lens_labels)) == 2
        assert lens_labels[0::2] != lens_labels[1::2]

    def test_flower_missing_triple_region(self, flower):
        report = venn_check(flower)
        assert not report.is_simple_venn
        assert report.missing_labels == (0b111,)
        assert report.duplicated_labels == (0b000,)
        assert not is_independent_family(flower)

    def test_root_choice_does_not_matter(self, venn3, flower):
        for g in (venn3, flower):
            reports = [venn_check(g, root_face=i) for i in range(len(g.faces))]
            assert len({r.is_simple_venn for r in reports}) == 1
            assert len({r.distinct_labels for r in reports}) == 1
            assert len({r.missing_labels for r in reports}) == 1

    def test_disconnected_rejected(self, weaves):
        w = weaves[2]
        twin = list(w._twin) + [t + 16 for t in w._twin]
        g = PlaneGraph(8, twin)
        with pytest.raises(DisconnectedError):
            venn_check(g)

    def test_independent_family_holds_for_diagram(self, venn4):
        assert is_independent_family(venn4)

    def test_torus_labeling_is_inconsistent(self):
        from venngraph.validate import InconsistentLabelingError

        g = PlaneGraph(1, [2, 3, 0, 1])
        with pytest.raises(InconsistentLabelingError):
            venn_check(g)


class TestCrossImplications:
    def test_vgraph_has_no_two_faces(self, venn_family, weaves, flower, lens):
        corpus = [*venn_family["graphs"].values(), *weaves.values(), flower, lens]
        for g in corpus:
            report = validate(g, with_venn=False)
            if report.is_vgraph:
                assert report.two_faces == ()

    def test_venn_implies_ufi(self, venn_family, weaves, flower, lens):
        corpus = [*venn_family["graphs"].values(), *weaves.values(), flower, lens]
        for g in corpus:
            report = validate(g)
            if report.venn is not None and report.venn.is_simple_venn:
                assert report.ufi_violations == ()

    def test_diagram_count_formulas(self, venn_family):
        for n, g in venn_family["graphs"].items():
            report = venn_check(g)
            assert report.is_simple_venn
            assert report.face_count == 2**n
            assert g.vertex_count == 2**n - 2
            assert g.edge_count == 2 ** (n + 1) - 4
