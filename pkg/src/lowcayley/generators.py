"""Deterministic graph families and a seeded random generator.

Every family is 1-dof tree-decomposable from its designated base
non-edge; outputs are byte-stable given the same parameters.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .construction import derive_construction
from .errors import BadSize, UnknownFamily
from .graph import Graph

Pair = tuple[int, int]


def gen_fan(n: int) -> Graph:
    """Triangle-free fan on a rim path v1..vn (ids 0..n-1) with two hubs.

    Hub a (id n) joins the odd-numbered rim vertices (even ids), hub b
    (id n+1) the even-numbered ones, and a-b is an edge. The family is
    1-dof with low Cayley complexity, planar, and every skip pair
    (v_i, v_{i+2}) is a base non-edge; (0, 2) is the canonical one.
    """
    if n < 3:
        raise BadSize(f"fan needs at least 3 rim vertices, got {n}")
    a, b = n, n + 1
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(i, a) for i in range(0, n, 2)]
    edges += [(i, b) for i in range(1, n, 2)]
    edges.append((a, b))
    return Graph.from_edges(n + 2, edges)


FAN_BASE: Pair = (0, 2)


def gen_six_cluster_base() -> tuple[Graph, Pair]:
    """Smallest non-trivial configuration: exactly six edge clusters.

    Two vertices (2 and 3) are built on the base pair (0, 1), then
    vertex 4 on (2, 3); that last step's certificate is the four-cycle
    of the four clusters around 0, 1. Low Cayley complexity holds.
    """
    g = Graph.from_edges(5, [(0, 2), (1, 2), (0, 3), (1, 3), (2, 4), (3, 4)])
    return g, (0, 1)


def gen_lemma57_1a() -> tuple[Graph, Pair]:
    """Seven-vertex witness: three level-1 vertices, 1-path, triangle-free.

    Vertices 2, 3, 4 each join both base endpoints 0 and 1; vertex 5
    joins 2 and 3; vertex 6 joins 5 and 4. The graph has a K3,3 minor
    and does not have low Cayley complexity.
    """
    g = Graph.from_edges(
        7,
        [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 5), (3, 5), (5, 6), (4, 6)],
    )
    return g, (0, 1)


def gen_clique_minor_1path(m: int) -> Graph:
    """1-path, low-Cayley family whose single big cluster has a K_m minor.

    The cluster grows from a triangle by chains w1 < (u1, u2),
    w2 < (w1, u3), ..., each chain contributing the next clique-minor
    vertex. The frame hangs the cluster and the edge (1, 2) off the base
    non-edge (0, 1) and closes with one last vertex joined to the chain
    end and to vertex 1, which keeps the construction 1-path.
    """
    if not 3 <= m <= 7:
        raise BadSize(f"clique size must be within 3..7, got {m}")
    edges = [(0, 2), (0, 3), (2, 3)]
    minor = [0, 2, 3]
    next_id = 4
    for size in range(3, m):
        prev = None
        for j in range(1, size):
            w = next_id
            next_id += 1
            if j == 1:
                edges += [(w, minor[0]), (w, minor[1])]
            else:
                edges += [(w, prev), (w, minor[j])]
            prev = w
        minor.append(prev)
    tail = minor[-1]
    v_last = next_id
    edges += [(1, 2), (tail, v_last), (1, v_last)]
    return Graph.from_edges(v_last + 1, edges)


CLIQUE_1PATH_BASE: Pair = (0, 1)


def gen_clique_minor_trifree(m: int) -> Graph:
    """Triangle-free, low-Cayley family with a K_m minor.

    Vertices u_1..u_m (ids 2..m+1) each join the base endpoints 0, 1;
    one vertex w_ij joins u_i, u_j for every pair i < j. Contracting
    each w_ij into u_i yields K_m.
    """
    if not 3 <= m <= 6:
        raise BadSize(f"clique size must be within 3..6, got {m}")
    edges = []
    for i in range(m):
        u = 2 + i
        edges += [(0, u), (1, u)]
    w = 2 + m
    for i in range(m):
        for j in range(i + 1, m):
            edges += [(2 + i, w), (2 + j, w)]
            w += 1
    return Graph.from_edges(w, edges)


CLIQUE_TRIFREE_BASE: Pair = (0, 1)


def gen_random(
    seed: int,
    n_steps: int,
    triangle_free: bool = False,
    one_path_bias: bool = False,
) -> tuple[Graph, Pair]:
    """Seeded 1-dof tree-decomposable graph built step by step from (0, 1).

    Each step attaches a new shared vertex through two fresh clusters at
    a non-adjacent constructed pair; sides are single edges, or small
    triangle clusters when triangles are allowed. With one_path_bias the
    base pair extends from the newest vertex and prefers attachment at
    already-shared vertices, which keeps the last level small. The
    output is checked to derive cleanly before being returned.
    """
    if n_steps < 1:
        raise BadSize(f"need at least one step, got {n_steps}")
    rng = random.Random(f"{seed}:{n_steps}:{int(triangle_free)}:{int(one_path_bias)}")
    edges: set[Pair] = set()
    adj: dict[int, set[int]] = {0: set(), 1: set()}
    constructed = [0, 1]
    used_as_base = {0, 1}
    next_id = 2

    def add_edge(x: int, y: int):
        edges.add((x, y) if x < y else (y, x))
        adj.setdefault(x, set()).add(y)
        adj.setdefault(y, set()).add(x)

    def attach_side(anchor: int, v: int):
        nonlocal next_id
        if not triangle_free and rng.random() < 0.25:
            x = next_id
            next_id += 1
            add_edge(anchor, x)
            add_edge(x, v)
            add_edge(anchor, v)
            constructed.append(x)
        else:
            add_edge(anchor, v)

    def pick_pair(last_new: int | None) -> Pair:
        if one_path_bias and last_new is not None:
            cands = [c for c in constructed if c != last_new and c not in adj[last_new]]
            if cands:
                preferred = [c for c in cands if c in used_as_base]
                return last_new, rng.choice(sorted(preferred or cands))
        pairs = [
            (x, y)
            for i, x in enumerate(constructed)
            for y in constructed[i + 1 :]
            if y not in adj[x]
        ]
        return rng.choice(sorted(pairs))

    last_new: int | None = None
    for step in range(n_steps):
        u, w = (0, 1) if step == 0 else pick_pair(last_new)
        v = next_id
        next_id += 1
        attach_side(u, v)
        attach_side(w, v)
        constructed.append(v)
        used_as_base.update((u, w))
        last_new = v

    g = Graph.from_edges(next_id, edges)
    derive_construction(g, (0, 1))  # generator contract: always derivable
    return g, (0, 1)


@dataclass(frozen=True)
class GeneratorSpec:
    """Family name plus the parameters that pin one instance."""

    family: str
    size: int | None = None
    seed: int | None = None
    n_steps: int | None = None
    triangle_free: bool = False
    one_path_bias: bool = False

    def build(self) -> tuple[Graph, Pair]:
        fam = self.family
        if fam == "fan":
            if self.size is None:
                raise BadSize("fan needs a size")
            return gen_fan(self.size), FAN_BASE
        if fam == "six-cluster-base":
            return gen_six_cluster_base()
        if fam == "lemma57-1a":
            return gen_lemma57_1a()
        if fam in ("clique-minor-1path", "1path-clique"):
            if self.size is None:
                raise BadSize("clique family needs a size")
            return gen_clique_minor_1path(self.size), CLIQUE_1PATH_BASE
        if fam in ("clique-minor-trifree", "trifree-clique"):
            if self.size is None:
                raise BadSize("clique family needs a size")
            return gen_clique_minor_trifree(self.size), CLIQUE_TRIFREE_BASE
        if fam == "random":
            if self.seed is None or self.n_steps is None:
                raise BadSize("random needs seed and n_steps")
            return gen_random(
                self.seed, self.n_steps, self.triangle_free, self.one_path_bias
            )
        raise UnknownFamily(fam)


FAMILIES = (
    "fan",
    "six-cluster-base",
    "lemma57-1a",
    "clique-minor-1path",
    "clique-minor-trifree",
    "random",
)
