"""Undirected simple graphs with dense integer vertex ids, plus the
structural predicates used throughout: triangle-freeness, planarity,
exhaustive minor search and edge contraction.

Graphs are immutable value objects; every operation here is a pure
function, so concurrent use on shared graphs is safe.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import networkx as nx

from .errors import HostTooLarge, NoSuchEdge, ParseError

Edge = tuple[int, int]


def _norm_edge(u: int, w: int) -> Edge:
    return (u, w) if u < w else (w, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` holds normalised (min, max) pairs; ``adjacency`` is the
    derived per-vertex neighbor view and always agrees with the edge set.
    """

    n: int
    edges: frozenset[Edge]
    adjacency: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        norm = set()
        for u, w in edges:
            if u == w:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= w < n):
                raise ValueError(f"edge ({u},{w}) endpoint out of range for n={n}")
            norm.add(_norm_edge(u, w))
        adj = [set() for _ in range(n)]
        for u, w in norm:
            adj[u].add(w)
            adj[w].add(u)
        return cls(n, frozenset(norm), tuple(frozenset(s) for s in adj))

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, w: int) -> bool:
        return w in self.adjacency[u]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def with_edge(self, u: int, w: int) -> "Graph":
        """Graph with the extra edge (u, w) added."""
        if u == w:
            raise ValueError("self-loop")
        return Graph.from_edges(self.n, set(self.edges) | {_norm_edge(u, w)})

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        """True iff all n vertices lie in one component (n <= 1 counts)."""
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with part one on ids 0..a-1."""
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


# ---------------------------------------------------------------------------
# predicates


def is_triangle_free(g: Graph) -> bool:
    """True iff no three vertices are mutually adjacent."""
    for u, w in g.edges:
        a, b = g.adjacency[u], g.adjacency[w]
        if len(b) < len(a):
            a, b = b, a
        if any(x in b for x in a):
            return False
    return True


def is_planar(g: Graph) -> bool:
    """Planarity via the left-right algorithm (networkx).

    Cross-validated elsewhere against the exhaustive K5/K3,3 minor oracle.
    """
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h, counterexample=False)
    return ok


def contract_edge(g: Graph, e: Edge) -> Graph:
    """Identify the endpoints of e, dropping loops and parallel edges.

    The surviving vertex keeps the smaller id; ids above the removed
    vertex shift down by one, keeping ids dense.
    """
    u, w = _norm_edge(*e)
    if not g.has_edge(u, w):
        raise NoSuchEdge(f"({u},{w}) not in graph")

    def remap(v: int) -> int:
        if v == w:
            v = u
        return v - 1 if v > w else v

    new_edges = set()
    for a, b in g.edges:
        ra, rb = remap(a), remap(b)
        if ra != rb:
            new_edges.add(_norm_edge(ra, rb))
    return Graph.from_edges(g.n - 1, new_edges)


# ---------------------------------------------------------------------------
# exhaustive minor search


@dataclass(frozen=True)
class MinorWitness:
    """Certificate that ``target`` is a minor of a host graph.

    branch_sets maps each target vertex to a connected, pairwise disjoint
    set of host vertices; connecting_edges picks one host edge realising
    each target edge.
    """

    branch_sets: tuple[tuple[int, frozenset[int]], ...]
    connecting_edges: tuple[tuple[Edge, Edge], ...]

    def branch_map(self) -> dict[int, frozenset[int]]:
        return dict(self.branch_sets)

    def is_valid(self, host: Graph, target: Graph) -> bool:
        """Independent check of the witness invariants."""
        sets = self.branch_map()
        if set(sets) != set(range(target.n)):
            return False
        seen: set[int] = set()
        for s in sets.values():
            if not s or (s & seen):
                return False
            seen |= s
            if not _connected_in(host, s):
                return False
        conn = dict(self.connecting_edges)
        for te in target.edges:
            he = conn.get(te)
            if he is None or he not in host.edges:
                return False
            a, b = he
            ta, tb = te
            if not (
                (a in sets[ta] and b in sets[tb]) or (a in sets[tb] and b in sets[ta])
            ):
                return False
        return True


def _connected_in(g: Graph, verts: frozenset[int]) -> bool:
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w in verts and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == set(verts)


def _edge_between(g: Graph, s1, s2) -> Edge | None:
    small, big = (s1, s2) if len(s1) <= len(s2) else (s2, s1)
    for v in sorted(small):
        for w in sorted(g.adjacency[v]):
            if w in big:
                return _norm_edge(v, w)
    return None


def has_minor(g: Graph, target: Graph, max_host_vertices: int = 14) -> MinorWitness | None:
    """Exhaustive branch-set search for ``target`` as a minor of ``g``.

    Complete (hence usable as a test oracle) but exponential; refuses
    hosts larger than max_host_vertices. Symmetry between interchangeable
    target vertices is broken by requiring increasing branch-set minima,
    and candidate branch sets are grown towards still-unconnected earlier
    sets first, so structured witnesses are found quickly.
    """
    if g.n > max_host_vertices:
        raise HostTooLarge(f"host has {g.n} vertices, bound is {max_host_vertices}")
    k = target.n
    if k == 0:
        return MinorWitness((), ())
    if g.n < k or len(g.edges) < len(target.edges):
        return None

    order = sorted(range(k), key=lambda t: (-target.degree(t), t))
    # order[i] and order[i-1] are interchangeable iff they are true twins
    twin_prev = [False] * k
    for i in range(1, k):
        a, b = order[i - 1], order[i]
        twin_prev[i] = (target.adjacency[a] - {b}) == (target.adjacency[b] - {a})

    assigned: list[frozenset[int]] = []
    mins: list[int] = []
    used: set[int] = set()
    witness_edges: dict[Edge, Edge] = {}

    def obligations(level: int) -> list[int]:
        t = order[level]
        return [j for j in range(level) if target.has_edge(order[j], t)]

    def satisfied(part: set[int], need: list[int]) -> list[int]:
        return [j for j in need if _edge_between(g, part, assigned[j]) is None]

    def candidate_sets(level: int):
        # connected subsets of the unused vertices, each yielded once,
        # grown preferring vertices adjacent to unsatisfied earlier sets
        need = obligations(level)
        remaining_levels = k - level - 1
        max_size = g.n - len(used) - remaining_levels
        if max_size < 1:
            return
        lo = mins[-1] + 1 if level > 0 and twin_prev[level] else 0
        for seed in sorted(set(range(g.n)) - used):
            if seed < lo:
                continue
            allowed = {v for v in range(g.n) if v not in used and v > seed}

            def grow(part: set[int], ext: list[int], banned: set[int]):
                yield frozenset(part)
                if len(part) >= max_size:
                    return
                unsat = satisfied(part, need)
                hot = set()
                for j in unsat:
                    for v in assigned[j]:
                        hot |= g.adjacency[v]
                ordered = sorted(ext, key=lambda v: (0 if v in hot else 1, v))
                local_ban: set[int] = set()
                for v in ordered:
                    if v in banned or v in local_ban:
                        continue
                    new_ext = [x for x in ext if x != v and x not in local_ban]
                    new_ext += [
                        x
                        for x in sorted(g.adjacency[v])
                        if x in allowed
                        and x not in part
                        and x not in banned
                        and x not in local_ban
                        and x not in new_ext
                    ]
                    part.add(v)
                    yield from grow(part, new_ext, banned | local_ban)
                    part.remove(v)
                    local_ban.add(v)

            first_ext = [v for v in sorted(g.adjacency[seed]) if v in allowed]
            yield from grow({seed}, first_ext, set())

    def search(level: int) -> bool:
        if level == k:
            return True
        need = obligations(level)
        t = order[level]
        for part in candidate_sets(level):
            links = {}
            ok = True
            for j in need:
                e = _edge_between(g, part, assigned[j])
                if e is None:
                    ok = False
                    break
                links[_norm_edge(order[j], t)] = e
            if not ok:
                continue
            assigned.append(part)
            mins.append(min(part))
            used.update(part)
            witness_edges.update(links)
            if search(level + 1):
                return True
            for te in links:
                witness_edges.pop(te, None)
            used.difference_update(part)
            mins.pop()
            assigned.pop()
        return False

    if not search(0):
        return None
    sets = tuple(
        sorted((order[i], assigned[i]) for i in range(k))
    )
    return MinorWitness(sets, tuple(sorted(witness_edges.items())))


# ---------------------------------------------------------------------------
# text format


def parse_graph(text: str) -> tuple[Graph, Edge | None]:
    """Parse the line-based graph format.

    ``n <count>`` then ``e <u> <w>`` lines, optional ``base <u> <w>``;
    '#' starts a comment. Ids must be decimal and < n.
    """
    n: int | None = None
    edges: list[Edge] = []
    base: Edge | None = None
    base_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "n":
            if n is not None:
                raise ParseError(line_no, "duplicate n line")
            if len(parts) != 2:
                raise ParseError(line_no, "n line needs one count")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(line_no, f"bad count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(line_no, "negative count")
        elif kind in ("e", "base"):
            if n is None:
                raise ParseError(line_no, f"{kind} line before n line")
            if len(parts) != 3:
                raise ParseError(line_no, f"{kind} line needs two ids")
            try:
                u, w = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(line_no, "ids must be decimal") from None
            if not (0 <= u < n and 0 <= w < n):
                raise ParseError(line_no, f"id out of range 0..{n - 1}")
            if u == w:
                raise ParseError(line_no, "self-loop")
            if kind == "e":
                edges.append(_norm_edge(u, w))
            else:
                if base is not None:
                    raise ParseError(line_no, "duplicate base line")
                base = _norm_edge(u, w)
                base_line = line_no
        else:
            raise ParseError(line_no, f"unknown directive {kind!r}")
    if n is None:
        raise ParseError(1, "missing n line")
    g = Graph.from_edges(n, edges)
    if base is not None and base in g.edges:
        raise ParseError(base_line, "base pair is an edge")
    return g, base


def format_graph(g: Graph, base: Edge | None = None) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {u} {w}" for u, w in g.sorted_edges()]
    if base is not None:
        lines.append(f"base {base[0]} {base[1]}")
    return "\n".join(lines) + "\n"
