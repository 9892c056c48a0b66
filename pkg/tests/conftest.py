from __future__ import annotations

import math
import time

import pytest

from venngraph.generators import from_circles, gen_venn3, gen_weave
from venngraph.dual import winkler_extend
from venngraph.maps import PlaneGraph, RotationMap


@pytest.fixture(scope="session")
def venn_family():
    """Graphs for 3..6 curves built by successive extension, with the time
    the whole chain took."""
    start = time.monotonic()
    graphs = {3: gen_venn3()}
    for n in (4, 5, 6):
        graphs[n] = winkler_extend(graphs[n - 1])
    return {"graphs": graphs, "build_seconds": time.monotonic() - start}


@pytest.fixture(scope="session")
def venn3(venn_family):
    return venn_family["graphs"][3]


@pytest.fixture(scope="session")
def venn4(venn_family):
    return venn_family["graphs"][4]


@pytest.fixture(scope="session")
def venn5(venn_family):
    return venn_family["graphs"][5]


@pytest.fixture(scope="session")
def venn6(venn_family):
    return venn_family["graphs"][6]


@pytest.fixture(scope="session")
def weaves():
    return {k: gen_weave(k) for k in range(2, 7)}


@pytest.fixture(scope="session")
def flower():
    """Three circles overlapping pairwise with no common region."""
    r = 0.55
    return from_circles(
        [(0.0, 0.0, r), (1.0, 0.0, r), (0.5, math.sqrt(3.0) / 2.0, r)]
    )


@pytest.fixture(scope="session")
def lens():
    """Two circles crossing twice: the smallest valid arrangement."""
    return from_circles([(-0.4, 0.0, 1.0), (0.4, 0.0, 1.0)])


def figure_eight() -> PlaneGraph:
    """One curve crossing itself at a single vertex."""
    return PlaneGraph(1, [1, 0, 3, 2])


def complete_rotation_map(n: int) -> RotationMap:
    """K_n as a rotation system (any cyclic neighbour order)."""
    others = [[w for w in range(n) if w != v] for v in range(n)]
    offsets = [(n - 1) * v for v in range(n)]
    twin = [0] * (n * (n - 1))
    for v in range(n):
        for s, w in enumerate(others[v]):
            twin[offsets[v] + s] = offsets[w] + others[w].index(v)
    return RotationMap([n - 1] * n, twin)


def theta_rotation_map() -> RotationMap:
    """K_{2,3}: two degree-3 hubs joined through three degree-2 vertices.

    Bipartite with odd parts, hence not Hamiltonian.
    """
    # vertices: 0, 1 hubs; 2, 3, 4 middles
    degrees = [3, 3, 2, 2, 2]
    twin = [0] * 12
    # hub darts: 0,1,2 at vertex 0; 3,4,5 at vertex 1; middles 6+2i toward 0
    for i, mid in enumerate((6, 8, 10)):
        twin[i] = mid
        twin[mid] = i
        twin[3 + i] = mid + 1
        twin[mid + 1] = 3 + i
    return RotationMap(degrees, twin)
