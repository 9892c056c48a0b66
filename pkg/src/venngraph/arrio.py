"""The ARR text format and line-oriented certificate blocks.

Grammar::

    arrangement <V>
    v <id> <n0>.<s0> <n1>.<s1> <n2>.<s2> <n3>.<s3>
    coord <id> <x> <y>          # optional, one per vertex at most
    outer <vertex>.<slot>       # optional, rendering hint only

One ``v`` line per vertex, ids 0..V-1, listing the twin of each of the
vertex's four darts counterclockwise as ``vertex.slot``.  ``#`` starts a
comment; blank lines are ignored.  Twin references must reciprocate:
if dart (a, i) names (b, j) then (b, j) must name (a, i).

Writing is canonical (vertices ascending, slots in order, coords after
the rotation lines), so ``write(parse(write(g))) == write(g)``.
"""

from __future__ import annotations

import re

from .connectivity import CutCertificate, PathCertificate
from .maps import PlaneGraph

_DART_RE = re.compile(r"^(\d+)\.(\d+)$")


class ArrSyntaxError(ValueError):
    """Malformed ARR text; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ArrSemanticError(ValueError):
    """Well-formed text describing an impossible arrangement."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _parse_dart(token: str, vertex_count: int, line: int) -> int:
    m = _DART_RE.match(token)
    if not m:
        raise ArrSyntaxError(line, f"expected vertex.slot, got {token!r}")
    v, s = int(m.group(1)), int(m.group(2))
    if v >= vertex_count:
        raise ArrSemanticError(line, f"vertex {v} out of range 0..{vertex_count - 1}")
    if s >= 4:
        raise ArrSemanticError(line, f"slot {s} out of range 0..3")
    return 4 * v + s


def parse_arr(text: str) -> PlaneGraph:
    """Parse ARR text into a graph; errors carry line numbers."""
    vertex_count: int | None = None
    twin: list[int] = []
    twin_line: list[int] = []
    seen_vertex: set[int] = set()
    coords: dict[int, tuple[float, float]] = {}
    outer: int | None = None
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        last_line = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if vertex_count is None:
            if tokens[0] != "arrangement" or len(tokens) != 2 or not tokens[1].isdigit():
                raise ArrSyntaxError(lineno, "expected header 'arrangement <V>'")
            vertex_count = int(tokens[1])
            if vertex_count < 1:
                raise ArrSemanticError(lineno, "vertex count must be positive")
            twin = [-1] * (4 * vertex_count)
            twin_line = [0] * (4 * vertex_count)
            continue
        if tokens[0] == "v":
            if len(tokens) != 6 or not tokens[1].isdigit():
                raise ArrSyntaxError(lineno, "expected 'v <id> <t0> <t1> <t2> <t3>'")
            vid = int(tokens[1])
            if vid >= vertex_count:
                raise ArrSemanticError(lineno, f"vertex {vid} out of range")
            if vid in seen_vertex:
                raise ArrSemanticError(lineno, f"vertex {vid} defined twice")
            seen_vertex.add(vid)
            for s, token in enumerate(tokens[2:]):
                d = 4 * vid + s
                twin[d] = _parse_dart(token, vertex_count, lineno)
                twin_line[d] = lineno
        elif tokens[0] == "coord":
            if len(tokens) != 4 or not tokens[1].isdigit():
                raise ArrSyntaxError(lineno, "expected 'coord <id> <x> <y>'")
            vid = int(tokens[1])
            if vid >= vertex_count:
                raise ArrSemanticError(lineno, f"vertex {vid} out of range")
            if vid in coords:
                raise ArrSemanticError(lineno, f"vertex {vid} has two coordinates")
            try:
                coords[vid] = (float(tokens[2]), float(tokens[3]))
            except ValueError:
                raise ArrSyntaxError(lineno, "coordinates must be numbers") from None
        elif tokens[0] == "outer":
            if len(tokens) != 2:
                raise ArrSyntaxError(lineno, "expected 'outer <vertex>.<slot>'")
            outer = _parse_dart(tokens[1], vertex_count, lineno)
        else:
            raise ArrSyntaxError(lineno, f"unknown directive {tokens[0]!r}")
    if vertex_count is None:
        raise ArrSyntaxError(last_line or 1, "missing 'arrangement' header")
    missing = sorted(set(range(vertex_count)) - seen_vertex)
    if missing:
        raise ArrSyntaxError(
            last_line, f"truncated: no rotation line for vertex {missing[0]}"
        )
    for d, t in enumerate(twin):
        if twin[t] != d:
            raise ArrSemanticError(
                twin_line[d],
                f"twin mismatch: dart {d >> 2}.{d & 3} names {t >> 2}.{t & 3}, "
                f"which names {twin[t] >> 2}.{twin[t] & 3}",
            )
    return PlaneGraph(vertex_count, twin, coords=coords or None, outer_dart=outer)


def write_arr(g: PlaneGraph) -> str:
    """Canonical ARR text for a graph."""
    lines = [f"arrangement {g.vertex_count}"]
    for v in range(g.vertex_count):
        refs = " ".join(
            f"{g.twin(4 * v + s) >> 2}.{g.twin(4 * v + s) & 3}" for s in range(4)
        )
        lines.append(f"v {v} {refs}")
    if g.coords:
        for v in sorted(g.coords):
            x, y = g.coords[v]
            lines.append(f"coord {v} {x!r} {y!r}")
    if g.outer_dart is not None:
        lines.append(f"outer {g.outer_dart >> 2}.{g.outer_dart & 3}")
    return "\n".join(lines) + "\n"


def format_path_certificate(cert: PathCertificate) -> str:
    """One 'path:' line per disjoint path."""
    return "".join(
        "path: " + " ".join(str(v) for v in path) + "\n" for path in cert.paths
    )


def format_cut_certificate(cert: CutCertificate) -> str:
    return "cut: " + " ".join(str(v) for v in sorted(cert.cut)) + "\n"
