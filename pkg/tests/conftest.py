import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lowcayley import Graph, gen_random

# Ten-vertex running example: four level-1 vertices 2..5 on the base
# pair (0, 1), vertex 6 on (2, 3), vertex 7 on (4, 5), vertex 8 on
# (0, 7), vertex 9 on (4, 8). Low Cayley complexity, cdeg(8) = 3.
FIG2A_EDGES = [
    (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (0, 5), (1, 5),
    (2, 6), (3, 6), (4, 7), (5, 7), (0, 8), (7, 8), (4, 9), (8, 9),
]
FIG2A_BASE = (0, 1)


@pytest.fixture(scope="session")
def fig2a() -> Graph:
    return Graph.from_edges(10, FIG2A_EDGES)


def build_corpus(count, seed0, max_steps=12, tf_every=2, bias_every=2, max_vertices=30):
    """Deterministic list of (graph, base, meta) random instances."""
    out = []
    for i in range(count):
        tf = i % tf_every == 0
        opb = (i // tf_every) % bias_every == 0
        steps = 2 + (i * 7 + seed0) % max_steps
        g, f = gen_random(seed0 + i, steps, triangle_free=tf, one_path_bias=opb)
        while g.n > max_vertices:
            steps -= 2
            g, f = gen_random(seed0 + i, steps, triangle_free=tf, one_path_bias=opb)
        out.append((g, f, {"seed": seed0 + i, "tf": tf, "opb": opb}))
    return out


@pytest.fixture(scope="session")
def small_corpus():
    return build_corpus(40, seed0=500, max_steps=10)
