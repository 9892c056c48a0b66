"""Checks for the defining properties of curve-arrangement graphs.

An arrangement qualifies as a V-graph when it has at least three curves,
is connected, lies in general position (simple closed curves, transverse
crossings, two curves per crossing, plane embedding), and satisfies unique
face incidence: no curve contributes more than one boundary edge to any
face.  A simple Venn diagram additionally realises every interior/exterior
combination of its n curves in exactly one of its 2^n regions.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import NamedTuple

from .maps import DisconnectedError, MapError, PlaneGraph


class InconsistentLabelingError(MapError):
    """Region labels do not close up around a cycle of faces."""


class UfiViolation(NamedTuple):
    face: int
    curve: int
    count: int


@dataclass(frozen=True)
class GeneralPositionReport:
    """Outcome of the general-position check.

    4-regularity and closedness of curves are structural (the dart
    representation cannot express anything else), so the checkable content
    is: no curve revisits a vertex, the two dart pairs at each vertex
    belong to distinct curves, and the embedding is genus zero.
    """

    ok: bool
    self_crossings: tuple[int, ...]
    same_curve_crossings: tuple[int, ...]
    is_planar: bool


@dataclass(frozen=True)
class VennReport:
    curve_count: int
    face_count: int
    labels: tuple[int, ...]
    distinct_labels: int
    missing_labels: tuple[int, ...]
    duplicated_labels: tuple[int, ...]
    is_simple_venn: bool


@dataclass(frozen=True)
class ValidationReport:
    is_general_position: bool
    is_connected: bool
    curve_count: int
    ufi_violations: tuple[UfiViolation, ...]
    two_faces: tuple[int, ...]
    is_vgraph: bool
    venn: VennReport | None
    general_position: GeneralPositionReport


def _tolerant_curve_ids(g: PlaneGraph) -> tuple[int, tuple[int, ...]]:
    """Curve count and per-dart curve id without simplicity validation.

    Orientation orbits are paired through ``opposite``; a self-crossing
    curve simply ends up with both its dart pairs at a vertex carrying the
    same id, which the callers report rather than raise.
    """
    orbits, orbit_of = g.curve_orbit_data
    curve_of = [-1] * g.dart_count
    count = 0
    for orbit in orbits:
        if curve_of[orbit[0]] >= 0:
            continue
        cid = count
        count += 1
        for d in orbit:
            curve_of[d] = cid
        for d in orbits[orbit_of[orbit[0] ^ 2]]:
            curve_of[d] = cid
    return count, tuple(curve_of)


def check_general_position(g: PlaneGraph) -> GeneralPositionReport:
    """Report general-position violations; never raises."""
    orbits, _ = g.curve_orbit_data
    self_crossings: set[int] = set()
    for orbit in orbits:
        seen: set[int] = set()
        for d in orbit:
            v = d >> 2
            if v in seen:
                self_crossings.add(v)
            seen.add(v)
    _, curve_of = _tolerant_curve_ids(g)
    same_curve = {
        v
        for v in range(g.vertex_count)
        if curve_of[4 * v] == curve_of[4 * v + 1]
    }
    planar = g.is_planar
    ok = not self_crossings and not same_curve and planar
    return GeneralPositionReport(
        ok=ok,
        self_crossings=tuple(sorted(self_crossings)),
        same_curve_crossings=tuple(sorted(same_curve)),
        is_planar=planar,
    )


def check_ufi(g: PlaneGraph) -> tuple[UfiViolation, ...]:
    """Per-face, per-curve boundary-edge counts of two or more."""
    _, curve_of = _tolerant_curve_ids(g)
    out = []
    for face in g.faces:
        counts = Counter(curve_of[d] for d in face.boundary)
        for cid in sorted(counts):
            if counts[cid] >= 2:
                out.append(UfiViolation(face.id, cid, counts[cid]))
    return tuple(out)


def two_faces(g: PlaneGraph) -> tuple[int, ...]:
    """Faces incident to exactly two curves (not merely the digons)."""
    _, curve_of = _tolerant_curve_ids(g)
    return tuple(
        face.id
        for face in g.faces
        if len({curve_of[d] for d in face.boundary}) == 2
    )


def digon_faces(g: PlaneGraph) -> tuple[int, ...]:
    """Faces with a two-edge boundary; diagnostic companion to two_faces."""
    return tuple(face.id for face in g.faces if face.degree == 2)


def venn_check(g: PlaneGraph, root_face: int = 0) -> VennReport:
    """Label every region with its curve-membership bit vector.

    Crossing an edge of curve c toggles bit c, so labels are propagated by
    breadth-first search over face adjacency and are well defined up to one
    global XOR offset (the unknown label of the root face).  For reporting,
    the offset is normalised so the most frequent label becomes zero
    (smallest such label on ties); a diagram has all labels distinct, which
    makes the normalisation the identity on its own output.
    """
    if not g.is_connected:
        raise DisconnectedError("region labels need a connected arrangement")
    n = len(g.curves)
    curve_of = g.curve_of
    faces = g.faces
    face_of = g.face_of
    labels: list[int | None] = [None] * len(faces)
    labels[root_face] = 0
    queue = deque([root_face])
    while queue:
        f = queue.popleft()
        for d in faces[f].boundary:
            other = face_of[g.twin(d)]
            lab = labels[f] ^ (1 << curve_of[d])
            if labels[other] is None:
                labels[other] = lab
                queue.append(other)
            elif labels[other] != lab:
                raise InconsistentLabelingError(
                    f"faces {f} and {other} disagree across curve {curve_of[d]}"
                )
    counts = Counter(labels)
    top = max(counts.values())
    offset = min(lab for lab, c in counts.items() if c == top)
    norm = tuple(lab ^ offset for lab in labels)
    present = Counter(norm)
    missing = tuple(x for x in range(1 << n) if x not in present)
    duplicated = tuple(sorted(x for x, c in present.items() if c > 1))
    is_simple = len(faces) == (1 << n) and len(present) == len(faces)
    return VennReport(
        curve_count=n,
        face_count=len(faces),
        labels=norm,
        distinct_labels=len(present),
        missing_labels=missing,
        duplicated_labels=duplicated,
        is_simple_venn=is_simple,
    )


def is_independent_family(g: PlaneGraph) -> bool:
    """Relaxed variant of the diagram check: every label occurs at least once."""
    return not venn_check(g).missing_labels


def validate(g: PlaneGraph, with_venn: bool = True) -> ValidationReport:
    """Full structural report; total on any built graph."""
    gp = check_general_position(g)
    connected = g.is_connected
    n, _ = _tolerant_curve_ids(g)
    ufi = check_ufi(g)
    tf = two_faces(g)
    vg = gp.ok and connected and n >= 3 and not ufi
    venn = None
    if with_venn and gp.ok and connected:
        venn = venn_check(g)
    return ValidationReport(
        is_general_position=gp.ok,
        is_connected=connected,
        curve_count=n,
        ufi_violations=ufi,
        two_faces=tf,
        is_vgraph=vg,
        venn=venn,
        general_position=gp,
    )


def is_vgraph(g: PlaneGraph) -> tuple[bool, ValidationReport]:
    report = validate(g)
    return report.is_vgraph, report
