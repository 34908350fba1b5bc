"""Low Cayley complexity: definitional oracle and fast recognizer.

A 1-dof tree-decomposable graph has low Cayley complexity on a base
non-edge f when every extreme graph of the construction from f is
tree-decomposable. The brute-force decision checks exactly that, one
tree-decomposition per step (cubic overall). The fast recognizer walks
the construction once, maintaining the admissible list L of cluster
pairs usable as a future step's base pair; a step at level two or higher
is admissible iff some pair of clusters through its base vertices is in
L, which is equivalent to the step having a four-cycle certificate:
clusters T1..T4 with T1*T2={p1}, T2*T3={p3}, T3*T4={p2}, T4*T1={p4},
all pivots distinct, the base pair lying in T1 and T2.

Level-1 steps need no admissibility check but contribute pairs to L the
same way later steps do; the cross pairs they generate through the base
endpoints are what make the minimal six-cluster configuration (and any
level-2 step on two level-1 vertices) admissible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotABaseNonEdge, NotOneDofTreeDecomposable
from .graph import Graph
from .treedecomp import ClusterSet, is_tree_decomposable, maximal_clusters
from .construction import (
    ConstructionSequence,
    derive_construction,
    extreme_graph,
    find_base_non_edges,
)

Pair = tuple[int, int]


@dataclass(frozen=True)
class FourCycle:
    """Cluster indices (T1, T2, T3, T4) and pivots (p1, p2, p3, p4)."""

    clusters: tuple[int, int, int, int]
    pivots: tuple[int, int, int, int]


@dataclass(frozen=True)
class CayleyVerdict:
    low_complexity: bool
    witness_step: int | None = None
    four_cycles: tuple[tuple[int, FourCycle], ...] | None = None

    def to_text(self) -> str:
        lines = [f"verdict {'true' if self.low_complexity else 'false'}"]
        if self.witness_step is not None:
            lines.append(f"witness_step {self.witness_step}")
        for k, fc in self.four_cycles or ():
            t1, t2, t3, t4 = fc.clusters
            lines.append(f"fourcycle {k} {t1} {t2} {t3} {t4}")
        return "\n".join(lines) + "\n"


@dataclass
class AdmissiblePairList:
    """The list L of Algorithm-style admissible cluster pairs."""

    pairs: set[Pair] = field(default_factory=set)
    partners: dict[int, set[int]] = field(default_factory=dict)

    def add(self, a: int, b: int) -> None:
        if a == b:
            return
        self.pairs.add((a, b) if a < b else (b, a))
        self.partners.setdefault(a, set()).add(b)
        self.partners.setdefault(b, set()).add(a)

    def has(self, a: int, b: int) -> bool:
        return ((a, b) if a < b else (b, a)) in self.pairs

    def partners_of(self, c: int) -> set[int]:
        return self.partners.get(c, set())


@dataclass(frozen=True)
class BaseInvarianceReport:
    base_non_edges: tuple[Pair, ...]
    verdicts: dict[Pair, bool]
    all_agree: bool
    verdict: bool | None


def _derive(g: Graph, f: Pair) -> ConstructionSequence:
    a, b = f
    if not (0 <= a < g.n and 0 <= b < g.n) or a == b or g.has_edge(a, b):
        raise NotABaseNonEdge(f"{f} is not a base non-edge")
    return derive_construction(g, f)  # StuckConstruction subclasses NotABaseNonEdge


def low_cayley_brute(g: Graph, f: Pair) -> CayleyVerdict:
    """Definitional oracle: every extreme graph must be tree-decomposable."""
    seq = _derive(g, f)
    for k in range(1, len(seq.steps) + 1):
        ref = extreme_graph(seq, k)
        if is_tree_decomposable(ref.graph) is None:
            return CayleyVerdict(False, witness_step=k)
    return CayleyVerdict(True)


def low_cayley_fast(
    g: Graph, f: Pair, collect_four_cycles: bool = False
) -> CayleyVerdict:
    """Single-pass recognizer over the construction from f.

    Runs in expected linear time when cluster degrees stay bounded: the
    admissibility test and the pair additions at each step only walk the
    smaller of the two base vertices' cluster lists and their recorded
    partners. Graphs with fewer than six clusters are low trivially.
    """
    seq = _derive(g, f)
    cs = seq.clusters
    if len(cs) < 6:
        return CayleyVerdict(True, four_cycles=() if collect_four_cycles else None)

    at: dict[int, list[int]] = {}  # vertex -> imported clusters containing it
    imported = [False] * len(cs)
    admissible = AdmissiblePairList()

    # in a derivable graph two vertices share at most one cluster, so a
    # static pair -> cluster index answers cohabitation queries in O(1)
    cohabit: dict[tuple[int, int], int] = {}
    for cid, vs in enumerate(cs.clusters):
        ordered = sorted(vs)
        for i, x in enumerate(ordered):
            for y in ordered[i + 1 :]:
                cohabit[(x, y)] = cid

    def intersecting_pairs(u: int, w: int) -> list[tuple[int, int]]:
        """Imported cluster pairs (Tu, Tw), Tu through u, Tw through w,
        sharing at least one vertex; walked from the smaller side."""
        cu, cw = at.get(u, []), at.get(w, [])
        swap = len(cw) < len(cu)
        side, ov = (cw, u) if swap else (cu, w)
        found: set[tuple[int, int]] = set()
        for t in side:
            for x in cs.clusters[t]:
                if x == ov:
                    continue
                p = cohabit.get((x, ov) if x < ov else (ov, x))
                if p is not None and p != t and imported[p]:
                    found.add((p, t) if swap else (t, p))
        return sorted(found)

    def admissible_pair_exists(u: int, w: int) -> bool:
        cu, cw = at.get(u, []), at.get(w, [])
        side, other = (cu, w) if len(cu) <= len(cw) else (cw, u)
        for t in side:
            for p in admissible.partners_of(t):
                if other in cs.clusters[p]:
                    return True
        return False

    witness: int | None = None
    for idx, s in enumerate(seq.steps, start=1):
        u, w = s.base_pair
        if s.level >= 2 and not admissible_pair_exists(u, w):
            witness = idx
            break
        for tu, tw in intersecting_pairs(u, w):
            admissible.add(s.cluster_a, tu)
            admissible.add(s.cluster_b, tw)
        admissible.add(s.cluster_a, s.cluster_b)
        for cid in (s.cluster_a, s.cluster_b):
            imported[cid] = True
            for v in cs.clusters[cid]:
                at.setdefault(v, []).append(cid)

    if witness is not None:
        return CayleyVerdict(False, witness_step=witness)
    cycles: tuple[tuple[int, FourCycle], ...] | None = None
    if collect_four_cycles:
        found: list[tuple[int, FourCycle]] = []
        constructed = set(seq.base_non_edge)
        for idx, s in enumerate(seq.steps, start=1):
            if s.level >= 2:
                fc = find_four_cycle(cs, frozenset(constructed), *s.base_pair)
                if fc is not None:
                    found.append((idx, fc))
            constructed.update(s.added_vertices)
        cycles = tuple(found)
    return CayleyVerdict(True, four_cycles=cycles)


def find_four_cycle(
    cs: ClusterSet, constructed: frozenset[int], u: int, w: int
) -> FourCycle | None:
    """Four-cycle certificate for a prospective step on (u, w) among the
    clusters lying fully inside the constructed vertex set."""
    if u not in constructed or w not in constructed:
        raise ValueError("base pair not constructed")
    if cs.graph.has_edge(u, w):
        raise ValueError("base pair is an edge")
    cand = [i for i in range(len(cs)) if cs.clusters[i] <= constructed]

    def single(i: int, j: int) -> int | None:
        a, b = cs.clusters[i], cs.clusters[j]
        if len(b) < len(a):
            a, b = b, a
        hit = None
        for x in a:
            if x in b:
                if hit is not None:
                    return None
                hit = x
        return hit

    t1s = [i for i in cand if u in cs.clusters[i]]
    t2s = [i for i in cand if w in cs.clusters[i]]
    for t1 in t1s:
        for t2 in t2s:
            if t2 == t1:
                continue
            p1 = single(t1, t2)
            if p1 is None:
                continue
            for t3 in cand:
                if t3 in (t1, t2):
                    continue
                p3 = single(t2, t3)
                if p3 is None or p3 == p1:
                    continue
                for t4 in cand:
                    if t4 in (t1, t2, t3):
                        continue
                    p2 = single(t3, t4)
                    if p2 is None or p2 in (p1, p3):
                        continue
                    p4 = single(t4, t1)
                    if p4 is None or p4 in (p1, p2, p3):
                        continue
                    return FourCycle((t1, t2, t3, t4), (p1, p2, p3, p4))
    return None


def _first_base_non_edge(g: Graph) -> Pair | None:
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b) and is_tree_decomposable(g.with_edge(a, b)):
                return (a, b)
    return None


def low_cayley_graph(g: Graph, brute: bool = False) -> CayleyVerdict:
    """Graph-level verdict, computed on the lexicographically smallest
    base non-edge; base-non-edge invariance makes it a graph property."""
    f = _first_base_non_edge(g)
    if f is None:
        raise NotOneDofTreeDecomposable("graph has no base non-edge")
    return low_cayley_brute(g, f) if brute else low_cayley_fast(g, f)


def verify_base_invariance(g: Graph) -> BaseInvarianceReport:
    """Brute verdict on every base non-edge; passes iff all agree."""
    bnes = find_base_non_edges(g)
    if not bnes:
        raise NotOneDofTreeDecomposable("graph has no base non-edge")
    verdicts = {f: low_cayley_brute(g, f).low_complexity for f in bnes}
    values = set(verdicts.values())
    return BaseInvarianceReport(
        base_non_edges=tuple(bnes),
        verdicts=verdicts,
        all_agree=len(values) == 1,
        verdict=values.pop() if len(values) == 1 else None,
    )
