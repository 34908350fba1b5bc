"""Independent brute-force oracles used to validate the implementations.

Everything here is deliberately naive: subset enumeration for sparsity
counts, breadth-first closure over deletions/contractions for minors,
a direct walk of decomposition trees. These stay independent of the
code paths they check.
"""

from __future__ import annotations

import itertools

from lowcayley import DecompositionTree, Graph
from lowcayley.treedecomp import DecompNode


def induced_edge_count(g: Graph, verts) -> int:
    s = set(verts)
    return sum(1 for u, w in g.edges if u in s and w in s)


def brute_is_sparse(g: Graph) -> bool:
    """(2,3)-sparsity by checking every induced subgraph count."""
    for r in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if induced_edge_count(g, sub) > 2 * r - 3:
                return False
    return True


def brute_rigidity(g: Graph) -> tuple[bool, bool]:
    indep = brute_is_sparse(g)
    return indep, indep and g.edge_count == 2 * g.n - 3


def _brute_rank(g: Graph, verts: tuple[int, ...]) -> int:
    """Rank of the induced subgraph in the (2,3)-sparsity matroid,
    via greedy insertion with a subset-counting independence test."""
    s = set(verts)
    chosen: list[tuple[int, int]] = []

    def independent(es) -> bool:
        for r in range(2, len(verts) + 1):
            for sub in itertools.combinations(verts, r):
                ss = set(sub)
                if sum(1 for u, w in es if u in ss and w in ss) > 2 * r - 3:
                    return False
        return True

    for e in sorted(g.edges):
        if e[0] in s and e[1] in s and independent(chosen + [e]):
            chosen.append(e)
    return len(chosen)


def brute_exists_rigid(g: Graph, a: int, b: int) -> bool:
    """Exhaustive check for a minimally rigid subgraph containing a, b."""
    for r in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            if a in sub and b in sub and _brute_rank(g, sub) == 2 * r - 3:
                return True
    return False


def has_triangle(g: Graph) -> bool:
    return any(
        len(g.adjacency[u] & g.adjacency[w]) > 0 for u, w in g.edges
    )


# ---------------------------------------------------------------------------
# minors on tiny hosts by closure over reductions


def _canon(n: int, edges: frozenset) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = tuple(
            sorted(tuple(sorted((perm[u], perm[w]))) for u, w in edges)
        )
        if best is None or mapped < best:
            best = mapped
    return (n, best)


def minor_by_reduction(host: Graph, target: Graph) -> bool:
    """True iff target is reachable from host by vertex/edge deletions
    and edge contractions. Exponential; hosts of at most 6 vertices."""
    assert host.n <= 6, "reduction oracle is for tiny hosts"
    goal = _canon(target.n, target.edges)
    seen = set()
    frontier = [(host.n, host.edges)]
    while frontier:
        n, edges = frontier.pop()
        key = _canon(n, edges)
        if key in seen:
            continue
        seen.add(key)
        if key == goal:
            return True
        if n < target.n:
            continue
        g = Graph.from_edges(n, edges)
        for e in sorted(edges):  # delete edge
            frontier.append((n, edges - {e}))
        for v in range(n):  # delete vertex
            kept = []
            for u, w in edges:
                if v in (u, w):
                    continue
                ru = u - 1 if u > v else u
                rw = w - 1 if w > v else w
                kept.append((min(ru, rw), max(ru, rw)))
            frontier.append((n - 1, frozenset(kept)))
        from lowcayley import contract_edge

        for e in sorted(edges):  # contract edge
            c = contract_edge(g, e)
            frontier.append((c.n, c.edges))
    return False


# ---------------------------------------------------------------------------
# decomposition tree walker


def validate_tree(g: Graph, tree: DecompositionTree) -> bool:
    """Structural invariants: leaves partition the edge set; every
    internal node merges three components pairwise sharing its three
    distinct vertices; vertex sets are consistent."""
    leaves = tree.root.leaf_edges()
    if sorted(leaves) != g.sorted_edges():
        return False

    def walk(node: DecompNode) -> bool:
        if node.is_leaf:
            return set(node.vertices) == set(node.edge)
        if len(node.children) != 3 or node.shared is None:
            return False
        sets = [set(c.vertices) for c in node.children]
        if set(node.vertices) != sets[0] | sets[1] | sets[2]:
            return False
        pairs = [
            sets[0] & sets[1],
            sets[1] & sets[2],
            sets[2] & sets[0],
        ]
        if any(len(p) != 1 for p in pairs):
            return False
        shared = {next(iter(p)) for p in pairs}
        if len(shared) != 3 or shared != set(node.shared):
            return False
        return all(walk(c) for c in node.children)

    return walk(tree.root)


def remove_vertices(g: Graph, drop: set[int]) -> tuple[Graph, dict[int, int]]:
    """Delete vertices, re-densify ids; returns the map old -> new."""
    keep = [v for v in range(g.n) if v not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[w]) for u, w in g.edges if u not in drop and w not in drop
    ]
    return Graph.from_edges(len(keep), edges), remap
