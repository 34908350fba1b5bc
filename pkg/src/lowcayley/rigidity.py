"""2D combinatorial rigidity via the (2,3)-pebble game.

An edge set is independent in the (2,3)-sparsity matroid iff every
subgraph on s vertices spans at most 2s-3 of its edges; a graph is
minimally rigid (Laman) iff it is independent with exactly 2n-3 edges.
The pebble game decides this in O(n^2): each vertex starts with two
pebbles and an edge is accepted iff four pebbles can be gathered on its
endpoints (the fourth pays for the edge).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooSmall
from .graph import Graph


@dataclass(frozen=True)
class RigidityVerdict:
    independent: bool
    minimally_rigid: bool
    violating_subgraph: frozenset[int] | None


class _PebbleGame:
    """Mutable scratch state for one run; not shared between calls."""

    def __init__(self, n: int):
        self.n = n
        self.pebbles = [2] * n
        self.out: list[set[int]] = [set() for _ in range(n)]

    def _pull(self, root: int, keep: set[int]) -> bool:
        """Move one pebble to root along reversed paths, never taking
        pebbles from ``keep``. Returns False if none reachable."""
        prev = {root: root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in sorted(self.out[v]):
                if w in prev:
                    continue
                prev[w] = v
                if self.pebbles[w] > 0 and w not in keep:
                    self.pebbles[w] -= 1
                    self.pebbles[root] += 1
                    # reverse the path root -> w
                    node = w
                    while node != root:
                        p = prev[node]
                        self.out[p].remove(node)
                        self.out[node].add(p)
                        node = p
                    return True
                stack.append(w)
        return False

    def reach(self, u: int, w: int) -> frozenset[int]:
        """All vertices reachable from {u, w} along directed edges."""
        seen = {u, w}
        stack = [u, w]
        while stack:
            v = stack.pop()
            for x in self.out[v]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return frozenset(seen)

    def can_gather_four(self, u: int, w: int) -> bool:
        keep = {u, w}
        while self.pebbles[u] + self.pebbles[w] < 4:
            if not (self._pull(u, keep) or self._pull(w, keep)):
                return False
        return True

    def insert(self, u: int, w: int) -> bool:
        """Accept edge (u, w) if independent; orient it and pay a pebble."""
        if not self.can_gather_four(u, w):
            return False
        self.pebbles[u] -= 1
        self.out[u].add(w)
        return True


def check_rigidity(g: Graph, order_seed: int | None = None) -> RigidityVerdict:
    """Laman verdict for g.

    Edges are inserted in lexicographic order (the verdict is a matroid
    property, hence order independent; order_seed shuffles insertion for
    tests). On the first rejected edge the reachable set of the failed
    pebble search is reported as the violating subgraph: it spans more
    than 2s-3 edges.
    """
    if g.n < 2:
        raise TooSmall(f"need at least 2 vertices, got {g.n}")
    edges = g.sorted_edges()
    if order_seed is not None:
        import random

        random.Random(order_seed).shuffle(edges)
    game = _PebbleGame(g.n)
    for u, w in edges:
        if not game.insert(u, w):
            bad = game.reach(u, w)
            return RigidityVerdict(False, False, bad)
    rigid = len(g.edges) == 2 * g.n - 3
    return RigidityVerdict(True, rigid, None)


def exists_rigid_subgraph_containing(g: Graph, a: int, b: int) -> bool:
    """True iff some minimally rigid subgraph of g contains both a and b.

    Equivalent to a and b sharing a rigid component: after a maximal
    independent edge set is placed, the pair is spanned by a tight
    subgraph exactly when four pebbles cannot be gathered on (a, b).
    """
    if a == b:
        raise ValueError("vertices must differ")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise ValueError("vertex out of range")
    game = _PebbleGame(g.n)
    for u, w in g.sorted_edges():
        game.insert(u, w)  # dependent edges skipped: closure is unchanged
    return not game.can_gather_four(a, b)
