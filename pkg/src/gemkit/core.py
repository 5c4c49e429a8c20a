"""Colored-graph data model and residue machinery.

A gem (graph-encoded manifold) of dimension d is a connected multigraph
whose edges carry colors 0..d, properly: no two edges of the same color
meet at a vertex.  Every vertex must meet every color below d; color-d
edges may be missing at some vertices (the boundary vertices).  Color d
is always the distinguished color, so membership in the class G_d is a
property of the data, not a convention argument.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedError,
    DuplicateColorError,
    InvalidColorError,
    LoopEdgeError,
    MissingColorError,
    OddBoundaryCountError,
    PreconditionError,
    SamplingExhaustedError,
)

NO_EDGE = -1


class UnionFind:
    """Union-find with path compression; tracks the number of sets."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.count -= 1
        return True


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable properly edge-colored multigraph in G_d.

    ``color_maps[c][v]`` is the vertex matched to ``v`` by the color-c
    edge, or ``NO_EDGE`` if ``v`` has no color-c edge.  Construct through
    :func:`validate` (or :func:`ColoredGraph.from_edges`), never directly.
    """

    dimension: int
    num_vertices: int
    color_maps: tuple[tuple[int, ...], ...]
    is_regular: bool = field(compare=False)
    is_bipartite: bool = field(compare=False)

    @property
    def colors(self) -> range:
        return range(self.dimension + 1)

    def mate(self, vertex: int, color: int) -> int:
        """Partner of ``vertex`` along its color edge, or NO_EDGE."""
        return self.color_maps[color][vertex]

    def has_color(self, vertex: int, color: int) -> bool:
        return self.color_maps[color][vertex] != NO_EDGE

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """All edges as (u, v, color) with u < v, sorted by (color, u)."""
        for c in self.colors:
            row = self.color_maps[c]
            for u in range(self.num_vertices):
                v = row[u]
                if v > u:
                    yield (u, v, c)

    def boundary_vertices(self) -> tuple[int, ...]:
        d = self.dimension
        return tuple(v for v in range(self.num_vertices)
                     if self.color_maps[d][v] == NO_EDGE)

    @staticmethod
    def from_edges(dimension: int,
                   num_vertices: int,
                   edges: Iterable[tuple[int, int, int]],
                   require_connected: bool = True) -> "ColoredGraph":
        return _build(dimension, num_vertices, edges, require_connected)


def validate(dimension: int,
             num_vertices: int,
             edges: Iterable[tuple[int, int, int]]) -> ColoredGraph:
    """Validate a raw edge list as a member of G_d.

    Checks: no loops, proper coloring, every color below d present at
    every vertex, even vertex count, connectivity.
    """
    if dimension < 2:
        raise PreconditionError(f"dimension must be >= 2, got {dimension}")
    return _build(dimension, num_vertices, edges, require_connected=True)


def _build(dimension, num_vertices, edges, require_connected):
    d = dimension
    if d < 1:
        # dimension-1 graphs arise internally as boundaries of surface gems
        raise PreconditionError(f"dimension must be >= 1, got {d}")
    if num_vertices <= 0:
        raise PreconditionError("graph must have at least one vertex")
    maps = [[NO_EDGE] * num_vertices for _ in range(d + 1)]
    for u, v, c in edges:
        if not (0 <= c <= d):
            raise InvalidColorError(f"color {c} outside 0..{d}")
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise LoopEdgeError(
                f"edge ({u},{v},{c}) has an endpoint outside 0..{num_vertices - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u} with color {c}")
        if maps[c][u] != NO_EDGE or maps[c][v] != NO_EDGE:
            raise DuplicateColorError(
                f"vertex {u if maps[c][u] != NO_EDGE else v} meets two color-{c} edges")
        maps[c][u] = v
        maps[c][v] = u
    for c in range(d):
        for v in range(num_vertices):
            if maps[c][v] == NO_EDGE:
                raise MissingColorError(f"vertex {v} has no color-{c} edge")
    n_boundary = sum(1 for v in range(num_vertices) if maps[d][v] == NO_EDGE)
    if n_boundary % 2:
        raise OddBoundaryCountError(
            f"{n_boundary} boundary vertices; count must be even")
    if require_connected:
        uf = UnionFind(num_vertices)
        for c in range(d + 1):
            for u in range(num_vertices):
                if maps[c][u] > u:
                    uf.union(u, maps[c][u])
        if uf.count != 1:
            raise DisconnectedError(f"{uf.count} connected components")
    return ColoredGraph(
        dimension=d,
        num_vertices=num_vertices,
        color_maps=tuple(tuple(row) for row in maps),
        is_regular=(n_boundary == 0),
        is_bipartite=_bipartite(num_vertices, maps),
    )


def _bipartite(num_vertices, maps) -> bool:
    side = [NO_EDGE] * num_vertices
    for start in range(num_vertices):
        if side[start] != NO_EDGE:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for row in maps:
                v = row[u]
                if v == NO_EDGE:
                    continue
                if side[v] == NO_EDGE:
                    side[v] = 1 - side[u]
                    stack.append(v)
                elif side[v] == side[u]:
                    return False
    return True


@dataclass(frozen=True)
class ResidueDecomposition:
    """Connected components of the subgraph keeping one color subset.

    Components are sorted vertex tuples, ordered by least vertex; the
    parallel ``regular`` tuple flags components in which every vertex
    meets every color of the set.
    """

    color_set: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    regular: tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.components)

    @property
    def regular_count(self) -> int:
        return sum(self.regular)

    def component_of(self, vertex: int) -> int:
        for i, comp in enumerate(self.components):
            if vertex in comp:
                return i
        raise ValueError(f"vertex {vertex} not in any component")


def residues(graph: ColoredGraph, colors: Iterable[int]) -> ResidueDecomposition:
    """Decompose the graph into components of the given color subgraph."""
    color_set = _check_colors(graph, colors)
    uf = UnionFind(graph.num_vertices)
    for c in color_set:
        row = graph.color_maps[c]
        for u in range(graph.num_vertices):
            if row[u] > u:
                uf.union(u, row[u])
    groups: dict[int, list[int]] = {}
    for v in range(graph.num_vertices):
        groups.setdefault(uf.find(v), []).append(v)
    comps = sorted(tuple(sorted(g)) for g in groups.values())
    flags = tuple(
        all(graph.has_color(v, c) for v in comp for c in color_set)
        for comp in comps)
    return ResidueDecomposition(tuple(sorted(color_set)), tuple(comps), flags)


def count_g(graph: ColoredGraph, colors: Iterable[int]) -> tuple[int, int]:
    """(g, g_dot): total and regular component counts of the residue."""
    dec = residues(graph, colors)
    return dec.count, dec.regular_count


def _check_colors(graph: ColoredGraph, colors: Iterable[int]) -> frozenset[int]:
    cs = frozenset(colors)
    for c in cs:
        if not (0 <= c <= graph.dimension):
            raise InvalidColorError(f"color {c} outside 0..{graph.dimension}")
    return cs


@dataclass(frozen=True)
class VertexClassification:
    """Boundary/internal split of the vertex set.

    2*p_bar boundary vertices (degree d, no final-color edge) and
    2*p_dot internal vertices (degree d+1).
    """

    boundary_vertices: tuple[int, ...]
    internal_vertices: tuple[int, ...]
    p_bar: int
    p_dot: int

    @property
    def p(self) -> int:
        return self.p_bar + self.p_dot


def classify_vertices(graph: ColoredGraph) -> VertexClassification:
    boundary = graph.boundary_vertices()
    internal = tuple(v for v in range(graph.num_vertices) if v not in set(boundary))
    if len(boundary) % 2 or len(internal) % 2:
        raise OddBoundaryCountError("boundary and internal counts must be even")
    return VertexClassification(boundary, internal,
                                len(boundary) // 2, len(internal) // 2)


def is_contracted(graph: ColoredGraph) -> dict[int, bool]:
    """For each color c, whether the graph minus color c stays connected."""
    out = {}
    all_colors = set(graph.colors)
    for c in graph.colors:
        out[c] = residues(graph, all_colors - {c}).count == 1
    return out


def is_crystallization(graph: ColoredGraph, h: int) -> bool:
    """Minimal-residue test: one final-color-free component and h
    components when any other single color is removed.  Regular graphs
    with h == 0 use the contracted test."""
    if h < 0:
        raise PreconditionError(f"h must be non-negative, got {h}")
    d = graph.dimension
    all_colors = set(graph.colors)
    if graph.is_regular and h == 0:
        return all(is_contracted(graph).values())
    if residues(graph, all_colors - {d}).count != 1:
        return False
    return all(residues(graph, all_colors - {c}).count == h for c in range(d))


def order_two_gem(d: int) -> ColoredGraph:
    """The smallest d-dimensional sphere gem: two vertices, all colors."""
    return validate(d, 2, [(0, 1, c) for c in range(d + 1)])


def ball_gem(d: int) -> ColoredGraph:
    """The order-two gem minus its final-color edge: the d-ball."""
    return validate(d, 2, [(0, 1, c) for c in range(d)])


def random_gem(d: int, p: int, seed: int, max_tries: int = 2000) -> ColoredGraph:
    """Random connected regular gem: one uniform perfect matching per
    color on 2p vertices, rejection-sampled until connected.

    Deterministic for a fixed seed.  No manifold guarantee.
    """
    if p < 1:
        raise PreconditionError(f"p must be >= 1, got {p}")
    rng = random.Random(seed)
    return _sample(d, p, p, rng, max_tries)


def random_boundary_gem(d: int, p: int, p_dot: int, seed: int,
                        max_tries: int = 2000) -> ColoredGraph:
    """Random connected member of G_d with boundary: perfect matchings on
    colors below d and a partial final-color matching covering 2*p_dot
    vertices.  Requires 0 <= p_dot < p."""
    if p < 1:
        raise PreconditionError(f"p must be >= 1, got {p}")
    if not (0 <= p_dot < p):
        raise PreconditionError("need 0 <= p_dot < p for a boundary gem")
    rng = random.Random(seed)
    return _sample(d, p, p_dot, rng, max_tries)


def _sample(d, p, p_dot, rng, max_tries):
    n = 2 * p
    for _ in range(max_tries):
        edges = []
        for c in range(d):
            perm = list(range(n))
            rng.shuffle(perm)
            edges.extend((perm[k], perm[k + 1], c) for k in range(0, n, 2))
        perm = list(range(n))
        rng.shuffle(perm)
        edges.extend((perm[k], perm[k + 1], d) for k in range(0, 2 * p_dot, 2))
        try:
            return validate(d, n, edges)
        except DisconnectedError:
            continue
    raise SamplingExhaustedError(
        f"no connected sample in {max_tries} tries (d={d}, p={p}, p_dot={p_dot})")
