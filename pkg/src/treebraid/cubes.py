"""Discretized configuration cube complexes of subdivided trees.

The n-strand discrete model of a graph: a d-cell is a choice of d edges
and n - d vertices whose closures are pairwise disjoint (no shared or
adjacent endpoints).  Faces replace an edge by one of its endpoints.  On a
tree whose every edge has been cut into at least n + 1 pieces this complex
carries the same homology as the space of n unordered points, which is
what lets it serve as an independent check on the assembled presentations:
b_1 must count generators and b_2 must count commuting pairs.

Vertex ids are interned to integers (rank in sorted id order), so cells
are plain int tuples and the lexicographic cell order is reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .homology import SparseIntMatrix, rank_and_factors
from .presentation import Presentation
from .trees import Tree

DEFAULT_CELL_CAP = 5_000_000

Cell = tuple[tuple[tuple[int, int], ...], tuple[int, ...]]   # (edges, vertices)


class ResourceCapError(RuntimeError):
    """Estimated cell count exceeds the configured cap."""

    def __init__(self, message: str, estimate: int, cap: int):
        super().__init__(message)
        self.estimate = estimate
        self.cap = cap


class DisconnectedComplexError(RuntimeError):
    """The 1-skeleton is not connected."""


@dataclass(frozen=True)
class CubeComplex:
    tree: Tree
    n: int
    d_max: int
    vertex_ids: tuple[str, ...]                  # position = interned int id
    edges: tuple[tuple[int, int], ...]
    cells: tuple[tuple[Cell, ...], ...]          # cells[d], lexicographically sorted

    def cell_counts(self) -> list[int]:
        return [len(layer) for layer in self.cells]


@dataclass(frozen=True)
class BoundaryMatrix:
    """Signed incidence of d-cells (columns) on (d-1)-cells (rows)."""

    dimension: int
    nrows: int
    columns: tuple[tuple[tuple[int, int], ...], ...]   # per column: ((row, sign), ...)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def to_sparse(self) -> SparseIntMatrix:
        return SparseIntMatrix.from_columns(self.nrows, [list(col) for col in self.columns])


@dataclass(frozen=True)
class HomologyReport:
    cell_counts: tuple[int, ...]
    boundary_ranks: tuple[int, ...]      # rank of d-boundary, d = 1..d_max
    betti: tuple[int, ...]               # b_0 .. b_{d_max - 1}
    torsion: tuple[tuple[int, ...], ...]  # invariant factors != 1 of H_d

    def to_json_dict(self) -> dict:
        return {
            "cells": list(self.cell_counts),
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
        }


def _disjoint_edge_tuples(edges, masks, size: int):
    """All strictly increasing tuples of pairwise vertex-disjoint edges."""
    if size == 0:
        yield ((), 0)
        return
    total = len(edges)

    def extend(start: int, chosen: tuple, used: int, depth: int):
        if depth == size:
            yield chosen, used
            return
        for i in range(start, total):
            mask = masks[i]
            if used & mask:
                continue
            yield from extend(i + 1, chosen + (edges[i],), used | mask, depth + 1)

    yield from extend(0, (), 0, 0)


def build_complex(
    tree: Tree, n: int, d_max: int = 3, cell_cap: int = DEFAULT_CELL_CAP
) -> CubeComplex:
    """Enumerate all cells of dimension <= d_max for n strands on tree.

    The tree must already be subdivided finely enough for n (every edge in
    at least n + 1 pieces); this is the caller's contract, enforced at the
    command-line layer.  Refuses to start if the estimated 0- or 1-cell
    count exceeds cell_cap.
    """
    if n < 0:
        raise ValueError(f"strand count must be >= 0, got {n}")
    if not 1 <= d_max <= 3:
        raise ValueError(f"d_max must be 1..3, got {d_max}")
    ids = tree.vertices            # already sorted
    nv = len(ids)
    if n > nv:
        raise ValueError(f"cannot place {n} strands on {nv} vertices")
    zero_est = comb(nv, n)
    one_est = len(tree.edges) * comb(max(nv - 2, 0), max(n - 1, 0)) if n >= 1 else 0
    worst = max(zero_est, one_est)
    if worst > cell_cap:
        raise ResourceCapError(
            f"estimated {worst} cells exceeds cap {cell_cap}", estimate=worst, cap=cell_cap
        )

    pos = {v: i for i, v in enumerate(ids)}
    edges = tuple(sorted((pos[u], pos[w]) for u, w in tree.edges))
    masks = [(1 << u) | (1 << w) for u, w in edges]

    layers: list[tuple[Cell, ...]] = []
    for d in range(min(d_max, n) + 1):
        layer = []
        for chosen, used in _disjoint_edge_tuples(edges, masks, d):
            free = [v for v in range(nv) if not (used >> v) & 1]
            for verts in combinations(free, n - d):
                layer.append((chosen, verts))
        layer.sort()
        layers.append(tuple(layer))
    while len(layers) <= d_max:
        layers.append(())   # dimensions above the strand count are empty

    return CubeComplex(
        tree=tree, n=n, d_max=d_max, vertex_ids=ids, edges=edges, cells=tuple(layers)
    )


def cell_faces(cell: Cell) -> list[tuple[Cell, int]]:
    """Codimension-1 faces with signs: axis i (the i-th smallest edge)
    contributes +/-(-1)^i for its upper/lower endpoint.  Edges are oriented
    from the smaller to the larger interned id.
    """
    edges, verts = cell
    out = []
    for i, (u, w) in enumerate(edges):
        rest = edges[:i] + edges[i + 1:]
        sign = -1 if i % 2 else 1
        out.append(((rest, tuple(sorted(verts + (w,)))), sign))
        out.append(((rest, tuple(sorted(verts + (u,)))), -sign))
    return out


def boundary_matrix(cx: CubeComplex, d: int) -> BoundaryMatrix:
    if not 1 <= d <= cx.d_max:
        raise ValueError(f"dimension must be 1..{cx.d_max}, got {d}")
    index = {cell: i for i, cell in enumerate(cx.cells[d - 1])}
    columns = []
    for cell in cx.cells[d]:
        columns.append(tuple((index[face], sign) for face, sign in cell_faces(cell)))
    return BoundaryMatrix(dimension=d, nrows=len(cx.cells[d - 1]), columns=tuple(columns))


def check_boundary_squares_to_zero(cx: CubeComplex) -> None:
    """Assert boundary-of-boundary == 0 exactly, in every dimension."""
    for d in range(2, cx.d_max + 1):
        if not cx.cells[d]:
            continue
        for cell in cx.cells[d]:
            acc: dict[Cell, int] = {}
            for face, sign in cell_faces(cell):
                for sub, sub_sign in cell_faces(face):
                    acc[sub] = acc.get(sub, 0) + sign * sub_sign
            bad = {k: v for k, v in acc.items() if v}
            if bad:
                raise AssertionError(f"boundary^2 != 0 on {cell}: {bad}")


def betti(cx: CubeComplex, with_torsion: bool = True) -> HomologyReport:
    """Exact Betti numbers b_0..b_{d_max-1} and the torsion of each H_d.

    b_d = #cells_d - rank(boundary_d) - rank(boundary_{d+1}); ranks are
    over the rationals but computed by integer elimination, so the same
    pass yields the invariant factors when with_torsion is set.
    """
    ranks = []
    torsion: list[tuple[int, ...]] = []
    for d in range(1, cx.d_max + 1):
        if not cx.cells[d]:
            ranks.append(0)
            torsion.append(())
            continue
        sparse = boundary_matrix(cx, d).to_sparse()
        r, factors = rank_and_factors(sparse)
        ranks.append(r)
        if with_torsion:
            torsion.append(tuple(factors))
        else:
            torsion.append(())
    counts = cx.cell_counts()
    bettis = []
    for d in range(cx.d_max):
        above = ranks[d] if d < len(ranks) else 0   # rank of boundary_{d+1}
        below = ranks[d - 1] if d >= 1 else 0
        bettis.append(counts[d] - below - above)
    # torsion of H_d comes from boundary_{d+1}: reindex
    tor = tuple(torsion[d] for d in range(cx.d_max))
    return HomologyReport(
        cell_counts=tuple(counts),
        boundary_ranks=tuple(ranks),
        betti=tuple(bettis),
        torsion=tor,
    )


@dataclass(frozen=True)
class Pi1Presentation:
    """Spanning-tree presentation of the fundamental group of the 1-skeleton
    modulo the squares: generators are the non-tree 1-cells, one relator
    word (length <= 4 after tree elision) per 2-cell.
    """

    generator_count: int
    relators: tuple[tuple[tuple[int, int], ...], ...]   # ((gen index, exponent), ...)

    def abelianized_rank(self) -> int:
        """Rank of the abelianized group: generators minus relator-matrix rank."""
        columns = []
        for word in self.relators:
            acc: dict[int, int] = {}
            for gen, exp in word:
                acc[gen] = acc.get(gen, 0) + exp
            col = [(gen, v) for gen, v in sorted(acc.items()) if v]
            columns.append(col)
        sparse = SparseIntMatrix.from_columns(self.generator_count, columns)
        r, _ = rank_and_factors(sparse)
        return self.generator_count - r


def pi1_presentation(cx: CubeComplex) -> Pi1Presentation:
    """Presentation read off the 1-skeleton and the squares.

    The spanning tree is breadth-first from the lexicographically least
    0-cell, visiting 1-cells in cell order.  Each square contributes the
    word of its boundary loop walked lower-corner -> first axis -> second
    axis -> back, with tree edges elided.
    """
    if cx.d_max < 2:
        raise ValueError("pi1 needs cells up to dimension 2")
    zero_index = {cell: i for i, cell in enumerate(cx.cells[0])}
    one_cells = cx.cells[1]

    # oriented 1-cells: tail = lower endpoint face, head = upper
    adjacency: list[list[tuple[int, int, int]]] = [[] for _ in cx.cells[0]]
    for j, (edges, verts) in enumerate(one_cells):
        (u, w) = edges[0]
        tail = zero_index[((), tuple(sorted(verts + (u,))))]
        head = zero_index[((), tuple(sorted(verts + (w,))))]
        adjacency[tail].append((head, j, +1))
        adjacency[head].append((tail, j, -1))

    n_zero = len(cx.cells[0])
    visited = [False] * n_zero
    in_tree = [False] * len(one_cells)
    if n_zero:
        visited[0] = True
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y, j, _ in adjacency[x]:
                if not visited[y]:
                    visited[y] = True
                    in_tree[j] = True
                    queue.append(y)
    if not all(visited):
        missing = visited.count(False)
        raise DisconnectedComplexError(
            f"disconnected: {missing} of {n_zero} 0-cells unreachable"
        )

    gen_index = {}
    for j, tree_flag in enumerate(in_tree):
        if not tree_flag:
            gen_index[j] = len(gen_index)

    one_index = {cell: j for j, cell in enumerate(one_cells)}
    relators = []
    for (e1, e2), verts in cx.cells[2]:
        (u1, w1) = e1
        (u2, w2) = e2
        side = [
            (one_index[((e1,), tuple(sorted(verts + (u2,))))], +1),
            (one_index[((e2,), tuple(sorted(verts + (w1,))))], +1),
            (one_index[((e1,), tuple(sorted(verts + (w2,))))], -1),
            (one_index[((e2,), tuple(sorted(verts + (u1,))))], -1),
        ]
        word = tuple(
            (gen_index[j], exp) for j, exp in side if not in_tree[j]
        )
        relators.append(word)
    return Pi1Presentation(generator_count=len(gen_index), relators=tuple(relators))


def raag_clique_counts(pres: Presentation, max_size: int = 3) -> tuple[int, ...]:
    """(vertices, edges, triangles)[:max_size] of the defining graph; these
    are the expected Betti numbers b_1, b_2, b_3 of the group the
    presentation defines.
    """
    if not 1 <= max_size <= 3:
        raise ValueError(f"max_size must be 1..3, got {max_size}")
    counts = [len(pres.generators)]
    if max_size >= 2:
        counts.append(len(pres.relations))
    if max_size >= 3:
        gens = pres.sorted_generators()
        related = {frozenset(pair) for pair in pres.relations}
        triangles = 0
        for i, g in enumerate(gens):
            for j in range(i + 1, len(gens)):
                if frozenset((g, gens[j])) not in related:
                    continue
                for l in range(j + 1, len(gens)):
                    if (
                        frozenset((g, gens[l])) in related
                        and frozenset((gens[j], gens[l])) in related
                    ):
                        triangles += 1
        counts.append(triangles)
    return tuple(counts)


def dump_cells(cx: CubeComplex) -> str:
    """One cell per line: "dim=<d> edges=u-w,... vertices=v,..." (string ids)."""
    ids = cx.vertex_ids
    lines = []
    for d, layer in enumerate(cx.cells):
        for edges, verts in layer:
            estr = ",".join(f"{ids[u]}-{ids[w]}" for u, w in edges)
            vstr = ",".join(ids[v] for v in verts)
            lines.append(f"dim={d} edges={estr} vertices={vstr}")
    return "\n".join(lines)
