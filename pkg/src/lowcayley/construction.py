"""Construction sequences of 1-dof tree-decomposable graphs.

A graph g is 1-dof tree-decomposable from a base non-edge f when g + f
is tree-decomposable. The construction from f attaches one new shared
vertex per step through two maximal clusters, each hooked to the already
constructed part at a single vertex. Everything here is derived from
the maximal-cluster structure: base non-edge enumeration, the greedy
step derivation with its level stratification, extreme graphs, the last
level and the 1-path classification.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .errors import (
    ExtremeEdgeExists,
    IndexOutOfRange,
    NotABaseNonEdge,
    NotOneDofTreeDecomposable,
    StuckConstruction,
    TooFewSteps,
)
from .graph import Edge, Graph, _norm_edge
from .treedecomp import ClusterSet, cdeg, is_tree_decomposable, maximal_clusters

Pair = tuple[int, int]


@dataclass(frozen=True)
class ConstructionStep:
    """Step v < (u in cluster_a, w in cluster_b).

    cluster_a and cluster_b index the graph's ClusterSet; both contain
    the new vertex, cluster_a contains u and cluster_b contains w. The
    step imports every vertex of the two clusters not constructed yet;
    those are recorded in added_vertices (v included).
    """

    new_vertex: int
    base_pair: Pair
    cluster_a: int
    cluster_b: int
    level: int
    added_vertices: tuple[int, ...]


@dataclass(frozen=True)
class ConstructionSequence:
    graph: Graph
    base_non_edge: Pair
    clusters: ClusterSet
    steps: tuple[ConstructionStep, ...]
    levels: dict[int, int]

    def to_text(self) -> str:
        a, b = self.base_non_edge
        lines = [f"base {a} {b}"]
        for s in self.steps:
            u, w = s.base_pair
            lines.append(f"step {s.new_vertex} {u} {w} {s.level}")
        return "\n".join(lines) + "\n"

    def level_sets(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, lv in sorted(self.levels.items()):
            out.setdefault(lv, []).append(v)
        return out


@dataclass(frozen=True)
class ExtremeGraphRef:
    """Graph after steps 1..k-1 plus the k-th step's base pair as an edge.

    Vertex ids are re-densified; original_ids maps new id -> old id.
    """

    step_index: int
    graph: Graph
    original_ids: tuple[int, ...]


def find_base_non_edges(g: Graph) -> list[Pair]:
    """All non-adjacent pairs f with g + f tree-decomposable, sorted."""
    out: list[Pair] = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if g.has_edge(a, b):
                continue
            if is_tree_decomposable(g.with_edge(a, b)) is not None:
                out.append((a, b))
    return out


def _has_any_base_non_edge(g: Graph) -> bool:
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b) and is_tree_decomposable(g.with_edge(a, b)):
                return True
    return False


def derive_construction(
    g: Graph, f: Pair, order_seed: int | None = None
) -> ConstructionSequence:
    """Greedy derivation of the construction of g from f.

    Repeatedly executes the eligible step with the smallest new vertex id
    (ties by attachment pair, then cluster indices); order_seed replaces
    that priority with a seeded random one for order-independence tests.
    A successful derivation covers every vertex and imports every cluster
    exactly once, which certifies that g + f is tree-decomposable; if no
    eligible step remains earlier, StuckConstruction is raised.
    """
    a, b = f
    if not (0 <= a < g.n and 0 <= b < g.n) or a == b:
        raise NotABaseNonEdge(f"invalid pair {f}")
    if g.has_edge(a, b):
        raise NotABaseNonEdge(f"{f} is an edge")
    a, b = _norm_edge(a, b)
    cs = maximal_clusters(g)
    rng = random.Random(order_seed) if order_seed is not None else None

    count = [0] * len(cs)
    attach = [-1] * len(cs)
    imported = [False] * len(cs)
    constructed: set[int] = set()
    levels: dict[int, int] = {}
    heap: list[tuple] = []
    counter = 0  # stable tiebreak for seeded priorities

    def push_candidates_for(cid: int):
        nonlocal counter
        x = attach[cid]
        for v in sorted(cs.clusters[cid]):
            if v in constructed or len(cs.clusters_at(v)) < 2:
                continue
            for did in cs.clusters_at(v):
                if did == cid or count[did] != 1:
                    continue
                y = attach[did]
                if y == x:
                    continue
                (u, ca), (w, cb) = sorted(((x, cid), (y, did)))
                key = (rng.random(), counter) if rng is not None else (v, u, w, ca, cb)
                counter += 1
                heapq.heappush(heap, (key, v, u, w, ca, cb))

    def construct(vs: list[int], level: int):
        for v in vs:
            constructed.add(v)
            levels[v] = level
        grew = []
        for v in vs:
            for cid in cs.clusters_at(v):
                count[cid] += 1
                if count[cid] == 1:
                    attach[cid] = v
                    grew.append(cid)
        for cid in grew:
            if count[cid] == 1:
                push_candidates_for(cid)

    construct([a, b], 0)
    steps: list[ConstructionStep] = []
    while heap:
        _, v, u, w, ca, cb = heapq.heappop(heap)
        if v in constructed:
            continue
        if count[ca] != 1 or count[cb] != 1:
            continue
        if attach[ca] != u or attach[cb] != w or u == w:
            continue
        level = 1 + max(levels[u], levels[w])
        new_vs = sorted((cs.clusters[ca] | cs.clusters[cb]) - constructed)
        imported[ca] = imported[cb] = True
        steps.append(
            ConstructionStep(
                new_vertex=v,
                base_pair=(u, w),
                cluster_a=ca,
                cluster_b=cb,
                level=level,
                added_vertices=tuple(new_vs),
            )
        )
        construct(new_vs, level)

    if len(constructed) != g.n or not all(imported):
        missing = sorted(set(range(g.n)) - constructed)
        raise StuckConstruction(
            f"derivation from {f} stuck: {len(steps)} steps, "
            f"uncovered vertices {missing}, "
            f"unimported clusters {[i for i, ok in enumerate(imported) if not ok]}"
        )
    return ConstructionSequence(
        graph=g,
        base_non_edge=(a, b),
        clusters=cs,
        steps=tuple(steps),
        levels=levels,
    )


def extreme_graph(seq: ConstructionSequence, k: int) -> ExtremeGraphRef:
    """Graph after steps 1..k-1 with step k's base pair joined by an edge."""
    if not (1 <= k <= len(seq.steps)):
        raise IndexOutOfRange(f"step {k} outside 1..{len(seq.steps)}")
    verts: set[int] = set(seq.base_non_edge)
    edges: set[Edge] = set()
    for s in seq.steps[: k - 1]:
        verts.update(s.added_vertices)
        for cid in (s.cluster_a, s.cluster_b):
            edges.update(seq.clusters.cluster_edges[cid])
    u, w = seq.steps[k - 1].base_pair
    e = _norm_edge(u, w)
    if e in edges:
        raise ExtremeEdgeExists(f"step {k} base pair {e} already an edge")
    edges.add(e)
    old_ids = tuple(sorted(verts))
    remap = {old: new for new, old in enumerate(old_ids)}
    graph = Graph.from_edges(len(old_ids), ((remap[x], remap[y]) for x, y in edges))
    return ExtremeGraphRef(step_index=k, graph=graph, original_ids=old_ids)


def _last_level(cs: ClusterSet) -> frozenset[int]:
    """Vertices in exactly two clusters, both single edges.

    Leaving out such a vertex removes exactly its two edges, so the two
    clusters each touch the remainder at one vertex; vertices inside a
    merged cluster, or of cluster degree other than two, do not qualify.
    """
    out = set()
    for v, cids in cs.shared_index.items():
        if len(cids) == 2 and all(len(cs.clusters[c]) == 2 for c in cids):
            out.add(v)
    return frozenset(out)


def last_level(g: Graph) -> frozenset[int]:
    """Last-level vertices of a 1-dof tree-decomposable graph."""
    if not _has_any_base_non_edge(g):
        raise NotOneDofTreeDecomposable("graph has no base non-edge")
    return _last_level(maximal_clusters(g))


def is_one_path(seq: ConstructionSequence) -> bool:
    """True iff exactly one last-level vertex besides the base endpoints."""
    lt = _last_level(seq.clusters)
    return len(lt - set(seq.base_non_edge)) == 1


def has_one_path_property(g: Graph) -> Pair | None:
    """Some base non-edge admitting a 1-path construction, if any.

    The last level depends only on the cluster structure, so each
    candidate f is classified by the last-level vertices outside f.
    """
    bnes = find_base_non_edges(g)
    if not bnes:
        raise NotOneDofTreeDecomposable("graph has no base non-edge")
    lt = _last_level(maximal_clusters(g))
    for f in bnes:
        if len(lt - set(f)) == 1:
            return f
    return None


def normalize_base_non_edge(g: Graph, f: Pair) -> Pair:
    """Replace f by the second step's base pair unless both endpoints of
    f are shared vertices already."""
    cs = maximal_clusters(g)
    a, b = f
    if cdeg(cs, a) >= 2 and cdeg(cs, b) >= 2:
        return _norm_edge(a, b)
    seq = derive_construction(g, f)
    if len(seq.steps) < 2:
        raise TooFewSteps(f"construction from {f} has {len(seq.steps)} step(s)")
    return seq.steps[1].base_pair
