"""Dart-based combinatorial maps for plane arrangements of closed curves.

A collection of simple closed curves crossing transversally induces a
4-regular plane multigraph: vertices are the crossings, edges are the curve
segments between them.  The embedding is stored purely combinatorially as a
rotation system.  Every vertex of degree k owns k *darts* (edge ends)
numbered counterclockwise, and an involution ``twin`` pairs the two darts of
each edge.  Faces and curves are orbits of permutations composed from
``twin`` and the rotation, so the whole structure lives in one int table.

Darts are plain ints.  For the 4-regular :class:`PlaneGraph`, the dart of
vertex ``v`` in rotation slot ``s`` (0..3) is ``4 * v + s``.

Maps are immutable once constructed; faces, curves and adjacency are
derived lazily and cached, so instances are safe to share across
concurrent readers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence


class MapError(Exception):
    """Base class for combinatorial-map errors."""


class BadSlotError(MapError):
    """A dart reference is out of range or malformed."""


class SelfTwinError(MapError):
    """The twin table maps a dart to itself."""


class NonInvolutiveTwinError(MapError):
    """twin(twin(d)) != d for some dart d."""


class SelfCrossingCurveError(MapError):
    """A recovered curve passes through the same vertex twice."""


class SameCurveCrossingError(MapError):
    """Both straight-through dart pairs at a vertex belong to one curve."""


class DisconnectedError(MapError):
    """Operation requires a connected graph."""


@dataclass(frozen=True)
class Face:
    """One face of the embedding: an orbit of ``rot(twin(d))``.

    ``boundary`` lists the orbit's darts starting from the smallest one;
    consecutive darts are consecutive directed boundary edges.
    """

    id: int
    boundary: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class Curve:
    """One closed curve, as the canonically oriented orbit of
    ``opposite(twin(d))``.

    Of the two orientation orbits of each curve, the one containing the
    smallest dart is kept.  The orbit has one dart per edge of the curve.
    """

    id: int
    darts: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d >> 2 for d in self.darts)

    @property
    def edge_count(self) -> int:
        return len(self.darts)


class RotationMap:
    """Immutable rotation system with arbitrary vertex degrees.

    Used directly for planar duals (whose vertices inherit the primal face
    degrees); the 4-regular specialisation is :class:`PlaneGraph`.
    """

    def __init__(self, degrees: Sequence[int], twin: Sequence[int]):
        degrees = tuple(int(x) for x in degrees)
        if not degrees:
            raise BadSlotError("a map needs at least one vertex")
        if any(x <= 0 for x in degrees):
            raise BadSlotError("every vertex needs positive degree")
        offsets = [0]
        for x in degrees:
            offsets.append(offsets[-1] + x)
        n_darts = offsets[-1]
        twin = tuple(int(x) for x in twin)
        if len(twin) != n_darts:
            raise BadSlotError(
                f"twin table has {len(twin)} entries, expected {n_darts}"
            )
        vertex_of = [0] * n_darts
        for v, deg in enumerate(degrees):
            for d in range(offsets[v], offsets[v + 1]):
                vertex_of[d] = v
        for d, t in enumerate(twin):
            if not 0 <= t < n_darts:
                raise BadSlotError(f"twin({d}) = {t} is out of range")
            if t == d:
                raise SelfTwinError(f"twin({d}) = {d}")
            if twin[t] != d:
                raise NonInvolutiveTwinError(
                    f"twin({t}) = {twin[t]}, expected {d}"
                )
        self._degrees = degrees
        self._offsets = tuple(offsets)
        self._twin = twin
        self._vertex_of = tuple(vertex_of)

    # -- dart primitives ------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self._degrees)

    @property
    def dart_count(self) -> int:
        return len(self._twin)

    @property
    def edge_count(self) -> int:
        return len(self._twin) // 2

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def dart(self, v: int, s: int) -> int:
        if not 0 <= s < self._degrees[v]:
            raise BadSlotError(f"vertex {v} has no slot {s}")
        return self._offsets[v] + s

    def dart_vertex(self, d: int) -> int:
        return self._vertex_of[d]

    def dart_slot(self, d: int) -> int:
        return d - self._offsets[self._vertex_of[d]]

    def darts_of(self, v: int) -> range:
        return range(self._offsets[v], self._offsets[v + 1])

    def twin(self, d: int) -> int:
        return self._twin[d]

    def rot(self, d: int) -> int:
        """Next dart counterclockwise around the same vertex."""
        v = self._vertex_of[d]
        base = self._offsets[v]
        return base + (d - base + 1) % self._degrees[v]

    def face_next(self, d: int) -> int:
        """Successor of d along its face boundary."""
        return self.rot(self._twin[d])

    # -- edges ----------------------------------------------------------

    def edges(self) -> tuple[int, ...]:
        """Canonical darts, one per edge (the smaller dart of each pair)."""
        t = self._twin
        return tuple(d for d in range(len(t)) if d < t[d])

    def edge_of(self, d: int) -> int:
        return min(d, self._twin[d])

    def edge_endpoints(self, d: int) -> tuple[int, int]:
        return self._vertex_of[d], self._vertex_of[self._twin[d]]

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        """Neighbor sets; parallel edges collapse, loops keep v in its own set."""
        sets: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for d, t in enumerate(self._twin):
            sets[self._vertex_of[d]].add(self._vertex_of[t])
        return tuple(frozenset(s) for s in sets)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency_sets[v]))

    # -- faces ----------------------------------------------------------

    @cached_property
    def _face_data(self) -> tuple[tuple[Face, ...], tuple[int, ...]]:
        twin = self._twin
        n = len(twin)
        face_of = [-1] * n
        faces: list[Face] = []
        for d0 in range(n):
            if face_of[d0] >= 0:
                continue
            fid = len(faces)
            orbit = []
            d = d0
            while face_of[d] < 0:
                face_of[d] = fid
                orbit.append(d)
                d = self.face_next(d)
            faces.append(Face(fid, tuple(orbit)))
        return tuple(faces), tuple(face_of)

    @property
    def faces(self) -> tuple[Face, ...]:
        return self._face_data[0]

    @property
    def face_of(self) -> tuple[int, ...]:
        """Face id per dart."""
        return self._face_data[1]

    def face_vertices(self, face: Face) -> tuple[int, ...]:
        return tuple(self._vertex_of[d] for d in face.boundary)

    # -- connectivity / Euler -------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.vertex_count
        comps = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            comp = [start]
            seen[start] = True
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self.adjacency_sets[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def is_connected(self) -> bool:
        return len(self.components) == 1

    @property
    def euler_characteristic(self) -> int:
        """V - E + F; equals 2 exactly for connected genus-0 maps."""
        return self.vertex_count - self.edge_count + len(self.faces)

    @cached_property
    def is_planar(self) -> bool:
        """True iff every connected component embeds in the sphere.

        Each component of a rotation system satisfies V - E + F = 2 - 2g;
        the map is a plane (rather than higher-genus) embedding iff g = 0
        componentwise.
        """
        comp_of = {}
        for i, comp in enumerate(self.components):
            for v in comp:
                comp_of[v] = i
        n = len(self.components)
        vs = [len(c) for c in self.components]
        es = [0] * n
        fs = [0] * n
        for d in self.edges():
            es[comp_of[self._vertex_of[d]]] += 1
        for face in self.faces:
            fs[comp_of[self._vertex_of[face.boundary[0]]]] += 1
        return all(vs[i] - es[i] + fs[i] == 2 for i in range(n))

    # -- distance-2 structure --------------------------------------------

    def distance2_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """All (u, z, v) with u < v non-adjacent and z adjacent to both.

        Each unordered pair {u, v} appears once per witnessing z.
        """
        adj = self.adjacency_sets
        out = []
        for z in range(self.vertex_count):
            around = sorted(adj[z] - {z})
            for i, u in enumerate(around):
                for v in around[i + 1:]:
                    if v not in adj[u]:
                        out.append((u, z, v))
        out.sort(key=lambda t: (t[0], t[2], t[1]))
        return tuple(out)


class PlaneGraph(RotationMap):
    """4-regular rotation system of a curve arrangement.

    ``twin`` is a sequence of ``4 * vertex_count`` dart ints; dart
    ``4 * v + s`` is vertex v's slot-s edge end, slots counterclockwise.
    Slots s and s+2 continue the same curve straight through the crossing.

    Optional ``coords`` (vertex -> (x, y)) and ``outer_dart`` are rendering
    metadata only; no combinatorial operation reads them.
    """

    def __init__(
        self,
        vertex_count: int,
        twin: Sequence[int],
        coords: Mapping[int, tuple[float, float]] | None = None,
        outer_dart: int | None = None,
    ):
        if vertex_count < 1:
            raise BadSlotError("vertex_count must be at least 1")
        super().__init__((4,) * vertex_count, twin)
        if coords is not None:
            bad = [v for v in coords if not 0 <= v < vertex_count]
            if bad:
                raise BadSlotError(f"coordinates for unknown vertex {bad[0]}")
        if outer_dart is not None and not 0 <= outer_dart < 4 * vertex_count:
            raise BadSlotError(f"outer dart {outer_dart} out of range")
        self.coords = dict(coords) if coords else None
        self.outer_dart = outer_dart

    @classmethod
    def build(
        cls,
        vertex_count: int,
        twin: Sequence[int],
        coords: Mapping[int, tuple[float, float]] | None = None,
        outer_dart: int | None = None,
    ) -> "PlaneGraph":
        return cls(vertex_count, twin, coords, outer_dart)

    # fast paths for the fixed degree
    def dart(self, v: int, s: int) -> int:
        if not 0 <= s < 4:
            raise BadSlotError(f"slot {s} not in 0..3")
        return 4 * v + s

    def dart_vertex(self, d: int) -> int:
        return d >> 2

    def dart_slot(self, d: int) -> int:
        return d & 3

    def rot(self, d: int) -> int:
        return (d & ~3) | ((d + 1) & 3)

    def opposite(self, d: int) -> int:
        """The dart of the same curve leaving the vertex on the far side."""
        return d ^ 2

    def curve_next(self, d: int) -> int:
        """Successor of d along its curve: cross the edge, continue straight."""
        return self._twin[d] ^ 2

    # -- curve recovery ---------------------------------------------------

    @cached_property
    def curve_orbit_data(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        """Raw orbits of ``curve_next`` and the orbit id of every dart.

        Purely structural: no simplicity or transversality checks, so
        validators can inspect degenerate inputs without tripping the
        exceptions that :attr:`curves` raises.
        """
        n = self.dart_count
        orbit_of = [-1] * n
        orbits: list[tuple[int, ...]] = []
        for d0 in range(n):
            if orbit_of[d0] >= 0:
                continue
            oid = len(orbits)
            orbit = []
            d = d0
            while orbit_of[d] < 0:
                orbit_of[d] = oid
                orbit.append(d)
                d = self.curve_next(d)
            orbits.append(tuple(orbit))
        return tuple(orbits), tuple(orbit_of)

    @cached_property
    def _curve_data(self) -> tuple[tuple[Curve, ...], tuple[int, ...]]:
        orbits, orbit_of = self.curve_orbit_data
        for orbit in orbits:
            seen: set[int] = set()
            for d in orbit:
                v = d >> 2
                if v in seen:
                    raise SelfCrossingCurveError(
                        f"curve revisits vertex {v}; not a simple closed curve"
                    )
                seen.add(v)
        curve_of = [-1] * self.dart_count
        curves: list[Curve] = []
        for orbit in orbits:
            if curve_of[orbit[0]] >= 0:
                continue
            partner = orbits[orbit_of[orbit[0] ^ 2]]
            cid = len(curves)
            curves.append(Curve(cid, orbit))
            for d in orbit:
                curve_of[d] = cid
            for d in partner:
                curve_of[d] = cid
        for v in range(self.vertex_count):
            if curve_of[4 * v] == curve_of[4 * v + 1]:
                raise SameCurveCrossingError(
                    f"both dart pairs at vertex {v} belong to curve "
                    f"{curve_of[4 * v]}"
                )
        return tuple(curves), tuple(curve_of)

    @property
    def curves(self) -> tuple[Curve, ...]:
        """The recovered curves, one per orientation-orbit pair.

        Raises :class:`SelfCrossingCurveError` or
        :class:`SameCurveCrossingError` when the arrangement is not a
        family of simple closed curves in general position.
        """
        return self._curve_data[0]

    @property
    def curve_of(self) -> tuple[int, ...]:
        """Curve id per dart (both orientations of a curve share an id)."""
        return self._curve_data[1]

    def vertex_curves(self, v: int) -> tuple[int, int]:
        """The two curves crossing at v (slot parity 0, slot parity 1)."""
        c = self.curve_of
        return c[4 * v], c[4 * v + 1]

    def curve_of_edge(self, d: int) -> int:
        return self.curve_of[d]
