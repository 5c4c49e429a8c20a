"""Gem rewriting: dipole detection, cancellation, insertion, the
boundary-capping regularization, and greedy full contraction.

All rewrites return new graphs; inputs are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import NO_EDGE, ColoredGraph, residues
from .errors import (
    InternalInconsistencyError,
    InvalidColorError,
    NoBoundaryError,
    NoSuchEdgeError,
    NotADipoleError,
    NotRegularError,
    WeldMismatchError,
)


@dataclass(frozen=True, order=True)
class DipoleSite:
    """An edge whose endpoints lie in different components once its color
    is removed."""

    color: int
    vertices: tuple[int, int]


@dataclass(frozen=True)
class RegularizationRecord:
    """What regularize did: the chosen singular color (or per-component
    choices), the capping edges added before any swap, and the final
    color transposition (None when skipped)."""

    singular_color_choice: Optional[int]
    per_component_choice: Optional[tuple[tuple[int, int], ...]]
    added_edges: tuple[tuple[int, int], ...]
    color_swap: Optional[tuple[int, int]]


def find_1_dipoles(graph: ColoredGraph) -> list[DipoleSite]:
    """All single-color edges joining distinct residue components of the
    complementary colors, ordered by color then least vertex."""
    out = []
    all_colors = set(graph.colors)
    for j in graph.colors:
        dec = residues(graph, all_colors - {j})
        comp_of = {}
        for k, comp in enumerate(dec.components):
            for v in comp:
                comp_of[v] = k
        row = graph.color_maps[j]
        for u in range(graph.num_vertices):
            v = row[u]
            if v > u and comp_of[u] != comp_of[v]:
                out.append(DipoleSite(j, (u, v)))
    return out


def is_1_dipole(graph: ColoredGraph, site: DipoleSite) -> bool:
    u, v = site.vertices
    if graph.mate(u, site.color) != v:
        raise NoSuchEdgeError(f"no color-{site.color} edge {site.vertices}")
    dec = residues(graph, set(graph.colors) - {site.color})
    return dec.component_of(u) != dec.component_of(v)


def cancel_1_dipole(graph: ColoredGraph, site: DipoleSite) -> ColoredGraph:
    """Remove the dipole pair and weld the hanging same-colored edges.

    A color present at exactly one endpoint (only the final color can be)
    leaves no weld partner; that edge is dropped and its far endpoint
    becomes a boundary vertex.
    """
    if not is_1_dipole(graph, site):
        raise NotADipoleError(
            f"endpoints of {site.vertices} share a component without color {site.color}")
    x, y = site.vertices
    welds = []
    for c in graph.colors:
        if c == site.color:
            continue
        a, b = graph.mate(x, c), graph.mate(y, c)
        if a in (x, y) or b in (x, y):
            # a second edge between the endpoints cannot occur on a genuine
            # dipole; reaching this means the input graph is corrupt
            raise WeldMismatchError(
                f"endpoints {site.vertices} joined by a second color-{c} edge")
        if a != NO_EDGE and b != NO_EDGE:
            welds.append((a, b, c))
    removed = {x, y}
    relabel = {}
    for v in range(graph.num_vertices):
        if v not in removed:
            relabel[v] = len(relabel)
    edges = [(relabel[u], relabel[v], c) for u, v, c in graph.edges()
             if u not in removed and v not in removed]
    edges.extend((relabel[a], relabel[b], c) for a, b, c in welds)
    return ColoredGraph.from_edges(graph.dimension, graph.num_vertices - 2, edges)


def insert_1_dipole(graph: ColoredGraph, edge: tuple[int, int], color: int
                    ) -> tuple[ColoredGraph, DipoleSite, bool]:
    """Split along an existing edge of the given color: two new vertices
    joined by that color, spliced into the first endpoint's other edges
    so that cancelling the new pair restores the input exactly.

    A color missing at the first endpoint (only the final one can be)
    stays missing at both new vertices, so splitting at a boundary vertex
    grows the boundary by one pair.  Returns the new graph, the created
    site, and whether that site is a genuine 1-dipole there.
    """
    u, v = edge
    if graph.mate(u, color) != v:
        raise NoSuchEdgeError(f"no color-{color} edge ({u},{v})")
    n = graph.num_vertices
    x, y = n, n + 1
    edges = list(graph.edges())
    for c in graph.colors:
        if c == color:
            continue
        a = graph.mate(u, c)
        if a == NO_EDGE:
            continue
        edges.remove((min(u, a), max(u, a), c))
        edges.append((u, x, c))
        edges.append((y, a, c))
    edges.append((x, y, color))
    out = ColoredGraph.from_edges(graph.dimension, n + 2, edges)
    site = DipoleSite(color, (x, y))
    return out, site, is_1_dipole(out, site)


def cap_boundary(graph: ColoredGraph, color: int) -> tuple[ColoredGraph, tuple]:
    """Join the two boundary endpoints of every maximal {color, d}-path by
    a new final-color edge.  Returns the capped (regular) graph and the
    added edges; colors are not swapped."""
    d = graph.dimension
    if graph.is_regular:
        raise NoBoundaryError("nothing to cap: graph is regular")
    if not (0 <= color < d):
        raise InvalidColorError(f"singular color must lie in 0..{d - 1}")
    added = []
    for comp, reg in zip(*_path_components(graph, color)):
        if not reg:
            ends = [v for v in comp if not graph.has_color(v, d)]
            if len(ends) != 2:
                raise InternalInconsistencyError(
                    f"{{{color},{d}}}-component {comp} has {len(ends)} loose ends")
            added.append((ends[0], ends[1]))
    edges = list(graph.edges()) + [(u, v, d) for u, v in added]
    capped = ColoredGraph.from_edges(d, graph.num_vertices, edges)
    if not capped.is_regular:
        raise InternalInconsistencyError("capping left boundary vertices")
    return capped, tuple(added)


def _path_components(graph, color):
    dec = residues(graph, {color, graph.dimension})
    return dec.components, dec.regular


def swap_colors(graph: ColoredGraph, a: int, b: int) -> ColoredGraph:
    maps = list(graph.color_maps)
    maps[a], maps[b] = maps[b], maps[a]
    return ColoredGraph.from_edges(
        graph.dimension, graph.num_vertices,
        [(u, row[u], c) for c, row in enumerate(maps)
         for u in range(graph.num_vertices) if u < row[u]])


def regularize(graph: ColoredGraph,
               singular_color: Optional[int] = None,
               per_component: Optional[dict[int, int]] = None,
               ) -> tuple[ColoredGraph, RegularizationRecord]:
    """Cap the boundary and make the graph regular.

    With a uniform ``singular_color`` c, every maximal {c, d}-path is
    capped and colors c and d are then transposed, so the result has d as
    its only singular color.  With ``per_component`` choices (boundary
    component index -> color) each component is capped with its own color
    and the swap is skipped.
    """
    from .boundary import boundary_graph

    d = graph.dimension
    if graph.is_regular:
        raise NoBoundaryError("graph is already regular")
    if (singular_color is None) == (per_component is None):
        raise InvalidColorError(
            "choose exactly one of singular_color and per_component")
    if singular_color is not None:
        capped, added = cap_boundary(graph, singular_color)
        record = RegularizationRecord(
            singular_color_choice=singular_color,
            per_component_choice=None,
            added_edges=added,
            color_swap=(singular_color, d),
        )
        return swap_colors(capped, singular_color, d), record

    bg = boundary_graph(graph)
    if set(per_component) != set(range(bg.num_components)):
        raise InvalidColorError(
            f"need one color per boundary component 0..{bg.num_components - 1}")
    comp_of_parent = {bg.parent_vertex_map[i]: bg.component_map[i]
                      for i in range(len(bg.parent_vertex_map))}
    added = []
    edges = list(graph.edges())
    for comp_index in sorted(per_component):
        c = per_component[comp_index]
        if not (0 <= c < d):
            raise InvalidColorError(f"singular color must lie in 0..{d - 1}")
        for comp, reg in zip(*_path_components(graph, c)):
            if reg:
                continue
            ends = [v for v in comp if not graph.has_color(v, d)]
            if comp_of_parent[ends[0]] != comp_index:
                continue
            if comp_of_parent[ends[1]] != comp_index:
                raise InternalInconsistencyError(
                    f"path {ends} straddles boundary components")
            added.append((ends[0], ends[1]))
            edges.append((ends[0], ends[1], d))
    out = ColoredGraph.from_edges(d, graph.num_vertices, edges)
    if not out.is_regular:
        raise InternalInconsistencyError("capping left boundary vertices")
    record = RegularizationRecord(
        singular_color_choice=None,
        per_component_choice=tuple(sorted(per_component.items())),
        added_edges=tuple(added),
        color_swap=None,
    )
    return out, record


def full_contraction(graph: ColoredGraph, verify: bool = True) -> ColoredGraph:
    """Greedily cancel 1-dipoles, non-final colors first, until none are
    left.  With ``verify`` the Euler characteristic and every genus value
    are asserted unchanged after each cancellation."""
    from .invariants import euler_characteristic, rho_table

    if not graph.is_regular:
        raise NotRegularError("full contraction is defined for regular gems")
    d = graph.dimension
    current = graph
    chi = euler_characteristic(current) if verify else None
    rhos = rho_table(current) if verify else None
    while True:
        sites = find_1_dipoles(current)
        if not sites:
            return current
        inner = [s for s in sites if s.color < d]
        site = inner[0] if inner else sites[0]
        current = cancel_1_dipole(current, site)
        if verify:
            if euler_characteristic(current) != chi:
                raise InternalInconsistencyError(
                    f"Euler characteristic changed cancelling {site}")
            if rho_table(current) != rhos:
                raise InternalInconsistencyError(
                    f"genus table changed cancelling {site}")
