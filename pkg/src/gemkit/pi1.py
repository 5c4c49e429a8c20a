"""Finite group presentations read off a gem.

For a color pair {i, j}, generators correspond to components of the
graph with both colors removed; every {i, j}-colored cycle contributes a
relator read with alternating signs, and the generators lying on a
maximal tree of the {i, j}-labeled subcomplex are set trivial.  Words
are tuples of nonzero signed integers: ``k+1`` stands for the k-th
generator, negative for its inverse.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from .core import ColoredGraph, UnionFind, residues
from .errors import InvalidColorPairError

Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupPresentation:
    num_generators: int
    cycle_relators: tuple[Word, ...]
    tree_relators: tuple[Word, ...]
    color_pair: Optional[tuple[int, int]] = None
    compact_manifold_reading: Optional[bool] = None
    singular_manifold_reading: Optional[bool] = None

    @property
    def relators(self) -> tuple[Word, ...]:
        return self.cycle_relators + self.tree_relators

    def pretty(self) -> str:
        """Stable text form: generators g0, g1, ...; one relator per line."""
        lines = ["generators: " + (", ".join(f"g{k}" for k in range(self.num_generators))
                                   if self.num_generators else "(none)")]
        lines.append("relators:")
        for word in self.relators:
            if not word:
                lines.append("  1")
                continue
            lines.append("  " + " ".join(
                f"g{abs(t) - 1}" + ("" if t > 0 else "^-1") for t in word))
        if not self.relators:
            lines.append("  (none)")
        return "\n".join(lines)


def presentation(graph: ColoredGraph, i: int, j: int,
                 singular_colors: Optional[set[int]] = None) -> GroupPresentation:
    """Presentation on the color pair {i, j}.

    When ``singular_colors`` is supplied the result is tagged with which
    manifold group it presents: the compact one when neither i nor j is
    singular, the singular one when no color outside {i, j} is.
    """
    d = graph.dimension
    if i == j or not (0 <= i <= d and 0 <= j <= d):
        raise InvalidColorPairError(f"bad color pair ({i},{j}) for dimension {d}")
    i, j = min(i, j), max(i, j)
    rest = set(graph.colors) - {i, j}
    gens = residues(graph, rest)
    gen_of = {}
    for k, comp in enumerate(gens.components):
        for v in comp:
            gen_of[v] = k

    cycles = []
    dec = residues(graph, {i, j})
    for comp, regular in zip(dec.components, dec.regular):
        if not regular:
            continue  # an {i,j}-path contributes no cycle relator
        start = comp[0]
        word = []
        v, color = start, i
        for t in range(len(comp)):
            word.append((gen_of[v] + 1) if t % 2 == 0 else -(gen_of[v] + 1))
            v = graph.mate(v, color)
            color = j if color == i else i
        if v != start:
            raise InvalidColorPairError(
                f"{{{i},{j}}}-component {comp} did not close up")
        cycles.append(tuple(word))

    # spanning forest of the bipartite incidence of generators with the
    # residues missing one of the two colors
    left = residues(graph, set(graph.colors) - {i})
    right = residues(graph, set(graph.colors) - {j})
    left_of, right_of = {}, {}
    for k, comp in enumerate(left.components):
        for v in comp:
            left_of[v] = k
    for k, comp in enumerate(right.components):
        for v in comp:
            right_of[v] = k
    uf = UnionFind(left.count + right.count)
    tree = []
    for k, comp in enumerate(gens.components):
        a = left_of[comp[0]]
        b = left.count + right_of[comp[0]]
        if uf.union(a, b):
            tree.append((k + 1,))

    tag_a = tag_b = None
    if singular_colors is not None:
        tag_a = i not in singular_colors and j not in singular_colors
        tag_b = not (singular_colors - {i, j})
    return GroupPresentation(
        num_generators=gens.count,
        cycle_relators=tuple(cycles),
        tree_relators=tuple(tree),
        color_pair=(i, j),
        compact_manifold_reading=tag_a,
        singular_manifold_reading=tag_b,
    )


def _cyclic_reduce(word: Word) -> Word:
    out: list[int] = []
    for t in word:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    while len(out) >= 2 and out[0] == -out[-1]:
        out.pop()
        out.pop(0)
    return tuple(out)


def _substitute(word: Word, gen: int, image: Word) -> Word:
    inv = tuple(-t for t in reversed(image))
    out: list[int] = []
    for t in word:
        if t == gen:
            out.extend(image)
        elif t == -gen:
            out.extend(inv)
        else:
            out.append(t)
    return tuple(out)


def _renumber(words: list[Word], removed: int) -> list[Word]:
    def shift(t: int) -> int:
        a = abs(t)
        return (a - 1 if a > removed else a) * (1 if t > 0 else -1)
    return [tuple(shift(t) for t in w) for w in words]


def tietze_simplify(pres: GroupPresentation, max_passes: int = 200
                    ) -> GroupPresentation:
    """Free/cyclic reduction, empty-relator removal, and elimination of
    generators that occur exactly once in some relator, substituting in
    the rest.  Runs to a fixed point under a bounded pass budget."""
    gens = pres.num_generators
    words = [_cyclic_reduce(w) for w in pres.relators]
    for _ in range(max_passes):
        words = sorted({w for w in words if w}, key=lambda w: (len(w), w))
        candidate = None
        for wi, word in enumerate(words):
            for g in range(1, gens + 1):
                if sum(1 for t in word if abs(t) == g) == 1:
                    candidate = (wi, g)
                    break
            if candidate:
                break
        if candidate is None:
            break
        wi, g = candidate
        word = words.pop(wi)
        k = next(idx for idx, t in enumerate(word) if abs(t) == g)
        rest = word[k + 1:] + word[:k]  # relator rotated to end at g
        image = tuple(-t for t in reversed(rest)) if word[k] > 0 else rest
        words = [_cyclic_reduce(_substitute(w, g, image)) for w in words]
        words = _renumber(words, g)
        gens -= 1
    words = sorted({w for w in words if w}, key=lambda w: (len(w), w))
    return GroupPresentation(
        num_generators=gens,
        cycle_relators=tuple(words),
        tree_relators=(),
        color_pair=pres.color_pair,
        compact_manifold_reading=pres.compact_manifold_reading,
        singular_manifold_reading=pres.singular_manifold_reading,
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx, y, ny, g, ng = 1, 0, 0, 1, a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def _smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Diagonal of the Smith normal form (divisibility chain), by integer
    row and column operations."""
    m = [row[:] for row in matrix]
    rows, cols = len(m), len(m[0]) if m else 0
    diag = []
    top = 0
    while top < min(rows, cols):
        pivot = None
        for r in range(top, rows):
            for c in range(top, cols):
                if m[r][c] and (pivot is None or abs(m[r][c]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (r, c)
        if pivot is None:
            break
        r0, c0 = pivot
        m[top], m[r0] = m[r0], m[top]
        for row in m:
            row[top], row[c0] = row[c0], row[top]
        while True:
            for r in range(top + 1, rows):
                v = m[r][top]
                if not v:
                    continue
                pivot_val = m[top][top]
                if v % pivot_val == 0:
                    q = v // pivot_val
                    m[r] = [m[r][c] - q * m[top][c] for c in range(cols)]
                else:
                    # the combination shrinks the pivot to the gcd
                    x, y, g = _xgcd(pivot_val, v)
                    a, b = pivot_val // g, v // g
                    m[top], m[r] = (
                        [x * m[top][c] + y * m[r][c] for c in range(cols)],
                        [-b * m[top][c] + a * m[r][c] for c in range(cols)])
            for c in range(top + 1, cols):
                v = m[top][c]
                if not v:
                    continue
                pivot_val = m[top][top]
                if v % pivot_val == 0:
                    q = v // pivot_val
                    for row in m:
                        row[c] -= q * row[top]
                else:
                    x, y, g = _xgcd(pivot_val, v)
                    a, b = pivot_val // g, v // g
                    for row in m:
                        row[top], row[c] = (
                            x * row[top] + y * row[c],
                            -b * row[top] + a * row[c])
            if all(m[r][top] == 0 for r in range(top + 1, rows)) and \
               all(m[top][c] == 0 for c in range(top + 1, cols)):
                break
        # enforce divisibility of the remaining block by the pivot
        stray = None
        for r in range(top + 1, rows):
            for c in range(top + 1, cols):
                if m[r][c] % m[top][top]:
                    stray = r
                    break
            if stray is not None:
                break
        if stray is not None:
            for c in range(cols):
                m[top][c] += m[stray][c]
            continue
        diag.append(abs(m[top][top]))
        top += 1
    return diag


def abelianization_rank(pres: GroupPresentation) -> tuple[int, list[int]]:
    """Free rank and nontrivial elementary divisors of the abelianized
    group, from the Smith form of the relator exponent-sum matrix."""
    gens = pres.num_generators
    if gens == 0:
        return 0, []
    matrix = []
    for word in pres.relators:
        row = [0] * gens
        for t in word:
            row[abs(t) - 1] += 1 if t > 0 else -1
        matrix.append(row)
    if not matrix:
        return gens, []
    diag = _smith_diagonal(matrix)
    return gens - len(diag), [e for e in diag if e > 1]


def rank_bounds(pres: GroupPresentation) -> tuple[int, int]:
    """(lower, upper) bounds on the minimal generator count: the
    abelianization's generator rank from below, the simplified
    presentation's generator count from above."""
    free_rank, divisors = abelianization_rank(pres)
    lower = free_rank + len(divisors)
    upper = tietze_simplify(pres).num_generators
    return lower, upper
