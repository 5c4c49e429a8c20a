"""Boundary graph construction and boundary residue counts.

The boundary graph of a member of G_d lives on the boundary vertices;
two of them are joined by a color-j edge exactly when the parent joins
them by a path alternating colors j and d.  Each component is a regular
d-colored graph encoding one boundary component.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .core import NO_EDGE, ColoredGraph, residues
from .errors import (
    InternalInconsistencyError,
    InvalidColorError,
    NoBoundaryError,
    NotRegularError,
)


@dataclass(frozen=True)
class BoundaryGraph:
    """d-colored graph on the parent's boundary vertices.

    ``parent_vertex_map[i]`` is the parent vertex behind boundary vertex
    ``i``; ``component_map[i]`` assigns it to a boundary component, and
    components are indexed by least boundary vertex.
    """

    graph: ColoredGraph
    parent_vertex_map: tuple[int, ...]
    component_map: tuple[int, ...]

    @property
    def num_components(self) -> int:
        return max(self.component_map) + 1 if self.component_map else 0

    def component_subgraph(self, index: int) -> ColoredGraph:
        """One boundary component as a standalone connected colored graph."""
        verts = [i for i, k in enumerate(self.component_map) if k == index]
        if not verts:
            raise ValueError(f"no boundary component {index}")
        relabel = {v: i for i, v in enumerate(verts)}
        keep = set(verts)
        edges = [(relabel[u], relabel[v], c)
                 for u, v, c in self.graph.edges() if u in keep]
        return ColoredGraph.from_edges(self.graph.dimension, len(verts), edges)


def trace_path(graph: ColoredGraph, start: int, color: int) -> int:
    """Other endpoint of the maximal {color, d}-path leaving a boundary
    vertex; the walk departs along ``color`` and stops at the first
    vertex missing the next required color."""
    d = graph.dimension
    cur, nxt = start, color
    while graph.has_color(cur, nxt):
        cur = graph.mate(cur, nxt)
        nxt = d if nxt == color else color
    return cur


def boundary_graph(graph: ColoredGraph) -> BoundaryGraph:
    """Build the boundary graph by tracing alternating paths."""
    d = graph.dimension
    boundary = graph.boundary_vertices()
    if not boundary:
        raise NoBoundaryError("graph is regular: empty boundary")
    index = {v: i for i, v in enumerate(boundary)}
    edges = []
    for v in boundary:
        for j in range(d):
            w = trace_path(graph, v, j)
            if w not in index:
                raise InternalInconsistencyError(
                    f"{{{j},{d}}}-path from {v} ends at internal vertex {w}")
            if index[v] < index[w]:
                edges.append((index[v], index[w], j))
    bgraph = ColoredGraph.from_edges(d - 1, len(boundary), edges,
                                     require_connected=False)
    comps = residues(bgraph, range(d)).components
    comp_map = [0] * len(boundary)
    for k, comp in enumerate(comps):
        for v in comp:
            comp_map[v] = k
    return BoundaryGraph(bgraph, tuple(boundary), tuple(comp_map))


def boundary_g(graph: ColoredGraph, colors: Iterable[int]) -> int:
    """Number of components of the boundary graph restricted to a color
    subset of 0..d-1."""
    d = graph.dimension
    cs = frozenset(colors)
    if any(c >= d or c < 0 for c in cs):
        raise InvalidColorError(
            f"boundary colors must lie in 0..{d - 1}, got {sorted(cs)}")
    return residues(boundary_graph(graph).graph, cs).count


def boundary_component_count(graph: ColoredGraph) -> int:
    """Number of boundary components; 0 for regular graphs."""
    if graph.is_regular:
        return 0
    return boundary_graph(graph).num_components


class Sphericity(Enum):
    PROVEN_SPHERE = "ProvenSphere"
    UNKNOWN = "Unknown"


def sphericity_heuristic(component: ColoredGraph) -> Sphericity:
    """Sound genus-zero sphere certificate for a regular component.

    Sweeps every cyclic color order with the closed genus formula and
    certifies a sphere when the minimum vanishes.  Complete for surface
    components; sound for 3-dimensional ones.
    """
    from .invariants import regular_genus

    if not component.is_regular:
        raise NotRegularError("sphericity test needs a regular component")
    rho_min, _ = regular_genus(component)
    return Sphericity.PROVEN_SPHERE if rho_min == 0 else Sphericity.UNKNOWN
