from __future__ import annotations

import random

import pytest

from venngraph.arrio import (
    ArrSemanticError,
    ArrSyntaxError,
    format_cut_certificate,
    format_path_certificate,
    parse_arr,
    write_arr,
)
from venngraph.connectivity import CutCertificate, PathCertificate
from venngraph.maps import PlaneGraph


def random_plane_graph(rng: random.Random) -> PlaneGraph:
    """Random fixed-point-free involution on the darts of a few vertices.

    Usually disconnected or high-genus; fine, the format does not care.
    """
    n = rng.randint(2, 20)
    darts = list(range(4 * n))
    rng.shuffle(darts)
    twin = [0] * (4 * n)
    for i in range(0, len(darts), 2):
        a, b = darts[i], darts[i + 1]
        twin[a], twin[b] = b, a
    coords = None
    if rng.random() < 0.5:
        coords = {v: (rng.uniform(-5, 5), rng.uniform(-5, 5)) for v in range(n)}
    outer = rng.randrange(4 * n) if rng.random() < 0.3 else None
    return PlaneGraph(n, twin, coords=coords, outer_dart=outer)


class TestRoundTrip:
    def test_venn3_identity(self, venn3):
        g = parse_arr(write_arr(venn3))
        assert g._twin == venn3._twin
        assert g.coords == venn3.coords

    def test_write_is_canonical(self, venn3):
        text = write_arr(venn3)
        assert write_arr(parse_arr(text)) == text

    def test_line_structure(self, venn3):
        lines = write_arr(venn3).splitlines()
        assert lines[0] == "arrangement 6"
        assert sum(1 for l in lines if l.startswith("v ")) == 6
        assert sum(1 for l in lines if l.startswith("coord ")) == 6
        assert len(lines) == 13

    def test_weave_parallel_edges_survive(self, weaves):
        w = weaves[2]
        g = parse_arr(write_arr(w))
        assert g._twin == w._twin

    def test_outer_directive_round_trips(self, weaves):
        w = weaves[3]
        g = PlaneGraph(w.vertex_count, w._twin, outer_dart=5)
        back = parse_arr(write_arr(g))
        assert back.outer_dart == 5

    def test_comments_and_blanks_ignored(self, venn3):
        text = write_arr(venn3)
        noisy = "# header comment\n\n" + text.replace(
            "v 0", "v 0", 1
        ).replace("\nv 3", "  # trailing\n\nv 3")
        assert parse_arr(noisy)._twin == venn3._twin


class TestErrors:
    def test_out_of_range_vertex(self):
        with pytest.raises(ArrSemanticError) as err:
            parse_arr("arrangement 6\nv 3 0.1 0.2 7.0 2.3\n")
        assert err.value.line == 2

    def test_bad_slot(self):
        with pytest.raises(ArrSemanticError):
            parse_arr("arrangement 2\nv 0 1.0 1.1 1.2 1.7\n")

    def test_truncated_file_reports_last_line(self, venn3):
        lines = write_arr(venn3).splitlines()[:4]
        with pytest.raises(ArrSyntaxError) as err:
            parse_arr("\n".join(lines) + "\n")
        assert err.value.line == len(lines)

    def test_twin_mismatch(self):
        text = (
            "arrangement 2\n"
            "v 0 1.0 1.1 1.2 1.3\n"
            "v 1 0.0 0.1 0.3 0.2\n"  # slots 2 and 3 disagree with vertex 0
        )
        with pytest.raises(ArrSemanticError):
            parse_arr(text)

    def test_missing_header(self):
        with pytest.raises(ArrSyntaxError):
            parse_arr("v 0 0.1 0.0 0.3 0.2\n")

    def test_unknown_directive(self):
        with pytest.raises(ArrSyntaxError):
            parse_arr("arrangement 1\nvertex 0 0.1 0.0 0.3 0.2\n")

    def test_duplicate_vertex_line(self):
        text = (
            "arrangement 1\n"
            "v 0 0.1 0.0 0.3 0.2\n"
            "v 0 0.1 0.0 0.3 0.2\n"
        )
        with pytest.raises(ArrSemanticError):
            parse_arr(text)

    def test_self_twin_surfaces_from_build(self):
        from venngraph.maps import SelfTwinError

        with pytest.raises(SelfTwinError):
            parse_arr("arrangement 1\nv 0 0.0 0.2 0.1 0.3\n")

    def test_bad_coordinate(self):
        base = "arrangement 1\nv 0 0.1 0.0 0.3 0.2\n"
        with pytest.raises(ArrSyntaxError):
            parse_arr(base + "coord 0 1.0 east\n")
        with pytest.raises(ArrSemanticError):
            parse_arr(base + "coord 0 1 2\ncoord 0 3 4\n")


class TestRandomizedRoundTrips:
    def test_fifty_random_maps(self):
        rng = random.Random(20240817)
        for _ in range(50):
            g = random_plane_graph(rng)
            back = parse_arr(write_arr(g))
            assert back._twin == g._twin
            assert back.coords == g.coords
            assert back.outer_dart == g.outer_dart


class TestCertificateBlocks:
    def test_path_lines(self):
        cert = PathCertificate(0, 5, ((0, 2, 5), (0, 3, 1, 5)))
        assert format_path_certificate(cert) == "path: 0 2 5\npath: 0 3 1 5\n"

    def test_cut_line_sorted(self):
        cert = CutCertificate(frozenset({4, 1, 2}), (frozenset({0}), frozenset({5})))
        assert format_cut_certificate(cert) == "cut: 1 2 4\n"
