"""Tree-decomposability by bottom-up cluster merging.

A single edge is tree-decomposable; a larger graph is tree-decomposable
iff it splits into three tree-decomposable components pairwise sharing
three distinct vertices. Bottom-up, every edge starts as a cluster and
any three clusters whose pairwise intersections are three distinct
single vertices merge into one. The graph is tree-decomposable iff one
cluster spanning all edges remains, and the surviving clusters at the
fixpoint are exactly the maximal tree-decomposable subgraphs.

The merge relation is confluent (asserted by randomised tests), so the
deterministic scan order below only pins the shape of the reported
decomposition tree, never the verdict or the final edge partition.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import Disconnected, EmptyGraph
from .graph import Edge, Graph, _norm_edge


@dataclass(frozen=True)
class DecompNode:
    """One node of a decomposition tree: a leaf edge or a three-way merge."""

    vertices: tuple[int, ...]
    children: tuple["DecompNode", ...] = ()
    shared: tuple[int, int, int] | None = None
    edge: Edge | None = None

    @property
    def is_leaf(self) -> bool:
        return self.edge is not None

    def leaf_edges(self) -> list[Edge]:
        if self.is_leaf:
            return [self.edge]
        out: list[Edge] = []
        for c in self.children:
            out.extend(c.leaf_edges())
        return out


@dataclass(frozen=True)
class DecompositionTree:
    root: DecompNode

    def to_text(self) -> str:
        lines: list[str] = []

        def walk(node: DecompNode, depth: int):
            pad = "  " * depth
            if node.is_leaf:
                u, w = node.edge
                lines.append(f"{pad}edge {u} {w}")
            else:
                verts = ",".join(str(v) for v in node.vertices)
                a, b, c = node.shared
                lines.append(f"{pad}node {verts} shared {a} {b} {c}")
                for ch in node.children:
                    walk(ch, depth + 1)

        walk(self.root, 0)
        return "\n".join(lines) + "\n"


@dataclass
class ClusterSet:
    """Maximal tree-decomposable subgraphs of a connected graph.

    Every edge belongs to exactly one cluster; shared_index lists, for
    each vertex, the clusters containing it (so cdeg is its length).
    """

    graph: Graph
    clusters: tuple[frozenset[int], ...]
    cluster_edges: tuple[tuple[Edge, ...], ...]
    edge_owner: dict[Edge, int]
    shared_index: dict[int, tuple[int, ...]]
    trees: tuple[DecompNode, ...]

    def __len__(self) -> int:
        return len(self.clusters)

    def clusters_at(self, v: int) -> tuple[int, ...]:
        return self.shared_index.get(v, ())


def cdeg(cs: ClusterSet, v: int) -> int:
    """Number of clusters containing v."""
    if not (0 <= v < cs.graph.n):
        raise ValueError(f"vertex {v} not in graph")
    return len(cs.shared_index.get(v, ()))


# ---------------------------------------------------------------------------
# merge engine


class _State:
    def __init__(self, g: Graph, rng: random.Random | None):
        self.g = g
        self.rng = rng
        edges = sorted(g.edges)
        self.verts: list[set[int]] = [{u, w} for u, w in edges]
        self.edges: list[list[Edge]] = [[e] for e in edges]
        self.nodes: list[DecompNode] = [
            DecompNode(vertices=e, edge=e) for e in edges
        ]
        self.alive: list[bool] = [True] * len(edges)
        self.at: list[set[int]] = [set() for _ in range(g.n)]
        self.big_at: list[set[int]] = [set() for _ in range(g.n)]
        self.edge_cluster: dict[Edge, int | None] = {}
        for cid, (u, w) in enumerate(edges):
            self.at[u].add(cid)
            self.at[w].add(cid)
            self.edge_cluster[(u, w)] = cid
        order = list(range(len(edges)))
        if rng is not None:
            rng.shuffle(order)
        self.work = deque(order)

    def _order(self, items) -> list:
        out = sorted(items)
        if self.rng is not None:
            self.rng.shuffle(out)
        return out

    def _common(self, a: int, b: int, cap: int = 2) -> list[int]:
        va, vb = self.verts[a], self.verts[b]
        if len(vb) < len(va):
            va, vb = vb, va
        out = []
        for x in va:
            if x in vb:
                out.append(x)
                if len(out) >= cap:
                    break
        return out

    def _find_triple(self, m: int):
        """First mergeable triple involving cluster m, or None.

        Returns (other1, other2, shared_triple)."""
        mverts = self.verts[m]
        if len(mverts) == 2:
            u, w = sorted(mverts)
            # all three single edges: a triangle of the underlying graph
            au, aw = self.g.adjacency[u], self.g.adjacency[w]
            small, big_ = (au, aw) if len(au) <= len(aw) else (aw, au)
            for y in self._order(x for x in small if x in big_):
                a = self.edge_cluster.get(_norm_edge(u, y))
                b = self.edge_cluster.get(_norm_edge(y, w))
                if a is not None and b is not None and a != m and b != m:
                    return a, b, (u, y, w)
            # at least one merged partner
            for bid in self._order(self.big_at[u] | self.big_at[w]):
                bv = self.verts[bid]
                in_u, in_w = u in bv, w in bv
                if in_u and in_w:
                    continue
                x, z = (u, w) if in_u else (w, u)
                for y in self._order(bv):
                    if y == x or y == z:
                        continue
                    for cid in self._order(self.at[y] & self.at[z]):
                        if cid == m or cid == bid:
                            continue
                        if x in self.verts[cid]:
                            continue  # C would share two vertices with m's pair
                        if len(self._common(cid, bid)) != 1:
                            continue
                        return bid, cid, (x, y, z)
            return None
        # merged cluster: scan its vertices for partner pairs
        for x in self._order(mverts):
            for aid in self._order(self.at[x]):
                if aid == m:
                    continue
                if len(self._common(m, aid)) != 1:
                    continue
                for y in self._order(self.verts[aid]):
                    if y == x:
                        continue
                    for cid in self._order(self.at[y]):
                        if cid == m or cid == aid:
                            continue
                        ca = self._common(cid, aid)
                        if len(ca) != 1 or ca[0] != y:
                            continue
                        cm = self._common(cid, m)
                        if len(cm) != 1:
                            continue
                        z = cm[0]
                        if z == x or z == y:
                            continue
                        return aid, cid, (x, y, z)
        return None

    def _merge(self, a: int, b: int, c: int, shared: tuple[int, int, int]) -> int:
        new = len(self.verts)
        union = self.verts[a] | self.verts[b] | self.verts[c]
        self.verts.append(union)
        self.edges.append(self.edges[a] + self.edges[b] + self.edges[c])
        self.nodes.append(
            DecompNode(
                vertices=tuple(sorted(union)),
                children=(self.nodes[a], self.nodes[b], self.nodes[c]),
                shared=tuple(sorted(shared)),
            )
        )
        self.alive.append(True)
        for old in (a, b, c):
            self.alive[old] = False
            for v in self.verts[old]:
                self.at[v].discard(old)
                self.big_at[v].discard(old)
            if len(self.verts[old]) == 2:
                self.edge_cluster[_norm_edge(*self.verts[old])] = None
        for v in union:
            self.at[v].add(new)
            self.big_at[v].add(new)
        return new

    def run(self) -> list[int]:
        while self.work:
            cid = self.work.popleft()
            if not self.alive[cid]:
                continue
            found = self._find_triple(cid)
            if found is not None:
                a, b, shared = found
                self.work.append(self._merge(cid, a, b, shared))
        return [i for i, ok in enumerate(self.alive) if ok]


def _run_merge(g: Graph, order_seed: int | None) -> tuple[_State, list[int]]:
    if not g.edges:
        raise EmptyGraph("graph has no edges")
    if not g.is_connected():
        raise Disconnected("graph is not connected")
    rng = random.Random(order_seed) if order_seed is not None else None
    state = _State(g, rng)
    return state, state.run()


def is_tree_decomposable(g: Graph, order_seed: int | None = None) -> DecompositionTree | None:
    """Decomposition tree of g, or None if g is not tree-decomposable."""
    state, alive = _run_merge(g, order_seed)
    if len(alive) != 1:
        return None
    return DecompositionTree(root=state.nodes[alive[0]])


def maximal_clusters(g: Graph, order_seed: int | None = None) -> ClusterSet:
    """Merge to a fixpoint; the survivors are the maximal clusters."""
    state, alive = _run_merge(g, order_seed)
    keyed = sorted(
        alive,
        key=lambda cid: (tuple(sorted(state.verts[cid])), tuple(sorted(state.edges[cid]))),
    )
    clusters = tuple(frozenset(state.verts[cid]) for cid in keyed)
    cluster_edges = tuple(tuple(sorted(state.edges[cid])) for cid in keyed)
    owner: dict[Edge, int] = {}
    index: dict[int, list[int]] = {}
    for idx, cid in enumerate(keyed):
        for e in state.edges[cid]:
            owner[e] = idx
        for v in state.verts[cid]:
            index.setdefault(v, []).append(idx)
    shared_index = {v: tuple(ids) for v, ids in sorted(index.items())}
    trees = tuple(state.nodes[cid] for cid in keyed)
    return ClusterSet(
        graph=g,
        clusters=clusters,
        cluster_edges=cluster_edges,
        edge_owner=owner,
        shared_index=shared_index,
        trees=trees,
    )
