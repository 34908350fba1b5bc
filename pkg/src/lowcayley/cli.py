"""Command line front end.

Subcommands: analyze (full report for a graph file), generate (emit a
family instance), bench (fast vs brute scaling table), verify (random
corpus checks of oracle equivalence, base-non-edge invariance and the
planarity equivalence for 1-path triangle-free graphs).
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from dataclasses import dataclass, field

from . import cayley, construction, generators, graph, rigidity, treedecomp
from .errors import BadSize, LowCayleyError, ParseError, UnknownFamily

Pair = tuple[int, int]


# ---------------------------------------------------------------------------
# analyze


@dataclass
class AnalysisReport:
    n: int
    edge_count: int
    cluster_count: int
    tree_decomposable: bool
    base_non_edges: tuple[Pair, ...]
    chosen_base: Pair | None
    low_cayley_fast: bool | None = None
    fast_witness: int | None = None
    low_cayley_brute: bool | None = None
    brute_witness: int | None = None
    disagreement: bool = False
    invariance_pass: bool | None = None
    invariance_verdicts: tuple[tuple[Pair, bool], ...] | None = None
    one_path: bool | None = None
    one_path_base: Pair | None = None
    triangle_free: bool | None = None
    planar: bool | None = None
    minor_found: str | None = None
    minor_branch_sets: tuple[tuple[int, ...], ...] | None = None
    four_cycles: tuple[tuple[int, tuple[int, int, int, int]], ...] = ()
    timings: dict[str, float] = field(default_factory=dict)
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and not self.disagreement and self.invariance_pass is not False


def analyze_graph(
    g: graph.Graph,
    base: Pair | None,
    brute: bool = False,
    all_base_non_edges: bool = False,
    with_timing: bool = True,
) -> AnalysisReport:
    timings: dict[str, float] = {}

    def timed(name, fn):
        t0 = time.perf_counter()
        out = fn()
        timings[name] = time.perf_counter() - t0
        return out

    try:
        cs = timed("clusters", lambda: treedecomp.maximal_clusters(g))
    except LowCayleyError as exc:
        return AnalysisReport(
            n=g.n,
            edge_count=g.edge_count,
            cluster_count=0,
            tree_decomposable=False,
            base_non_edges=(),
            chosen_base=None,
            error=f"not analyzable: {exc}",
        )

    td = timed("tree_decomposable", lambda: treedecomp.is_tree_decomposable(g) is not None)
    bnes = tuple(timed("base_non_edges", lambda: construction.find_base_non_edges(g)))
    report = AnalysisReport(
        n=g.n,
        edge_count=g.edge_count,
        cluster_count=len(cs),
        tree_decomposable=td,
        base_non_edges=bnes,
        chosen_base=None,
        triangle_free=timed("triangle_free", lambda: graph.is_triangle_free(g)),
        planar=timed("planar", lambda: graph.is_planar(g)),
    )
    if not with_timing:
        report.timings = {}

    if not bnes:
        cand = base
        if cand is None:
            cand = next(
                (
                    (a, b)
                    for a in range(g.n)
                    for b in range(a + 1, g.n)
                    if not g.has_edge(a, b)
                ),
                None,
            )
        parts = ["graph is not 1-dof tree-decomposable (no base non-edge)"]
        if g.n >= 2:
            rv = rigidity.check_rigidity(g)
            parts.append(
                f"rigidity of g: independent={rv.independent} "
                f"minimally_rigid={rv.minimally_rigid}"
            )
            if cand is not None:
                rvf = rigidity.check_rigidity(g.with_edge(*cand))
                parts.append(
                    f"rigidity of g+{cand}: independent={rvf.independent} "
                    f"minimally_rigid={rvf.minimally_rigid}"
                )
        report.error = "; ".join(parts)
        return report

    f0 = base if base in bnes else bnes[0]
    report.chosen_base = f0
    fast = timed("fast", lambda: cayley.low_cayley_fast(g, f0, collect_four_cycles=True))
    report.low_cayley_fast = fast.low_complexity
    report.fast_witness = fast.witness_step
    report.four_cycles = tuple((k, fc.clusters) for k, fc in fast.four_cycles or ())
    if brute:
        bv = timed("brute", lambda: cayley.low_cayley_brute(g, f0))
        report.low_cayley_brute = bv.low_complexity
        report.brute_witness = bv.witness_step
        report.disagreement = bv.low_complexity != fast.low_complexity
    if all_base_non_edges:
        inv = timed("invariance", lambda: cayley.verify_base_invariance(g))
        report.invariance_pass = inv.all_agree
        report.invariance_verdicts = tuple(sorted(inv.verdicts.items()))

    lt = construction._last_level(cs)
    opb = next((f for f in bnes if len(lt - set(f)) == 1), None)
    report.one_path = opb is not None
    report.one_path_base = opb

    if report.planar is False and g.n <= 14:
        for name, target in (("K5", graph.complete_graph(5)), ("K3,3", graph.complete_bipartite(3, 3))):
            w = timed(f"minor_{name}", lambda t=target: graph.has_minor(g, t))
            if w is not None:
                report.minor_found = name
                report.minor_branch_sets = tuple(
                    tuple(sorted(s)) for _, s in w.branch_sets
                )
                break
    if not with_timing:
        report.timings = {}
    else:
        report.timings = timings
    return report


def _fmt_pair(p: Pair) -> str:
    return f"{p[0]}-{p[1]}"


def report_to_text(r: AnalysisReport) -> str:
    lines = [f"input n={r.n} edges={r.edge_count} clusters={r.cluster_count}"]
    if r.error is not None:
        lines.append(f"error {r.error}")
        return "\n".join(lines) + "\n"
    lines.append(f"tree_decomposable {str(r.tree_decomposable).lower()}")
    lines.append("base_non_edges " + " ".join(_fmt_pair(p) for p in r.base_non_edges))
    lines.append(f"chosen_base {_fmt_pair(r.chosen_base)}")
    lines.append(f"low_cayley_fast {str(r.low_cayley_fast).lower()}")
    if r.fast_witness is not None:
        lines.append(f"fast_witness_step {r.fast_witness}")
    if r.low_cayley_brute is not None:
        lines.append(f"low_cayley_brute {str(r.low_cayley_brute).lower()}")
        if r.brute_witness is not None:
            lines.append(f"brute_witness_step {r.brute_witness}")
        lines.append("low_cayley_agreement " + ("ok" if not r.disagreement else "DISAGREEMENT"))
    if r.invariance_pass is not None:
        lines.append("base_invariance " + ("pass" if r.invariance_pass else "FAIL"))
        for p, v in r.invariance_verdicts or ():
            lines.append(f"  base {_fmt_pair(p)} low_cayley={str(v).lower()}")
    one = str(r.one_path).lower()
    lines.append(
        f"one_path {one}" + (f" base {_fmt_pair(r.one_path_base)}" if r.one_path_base else "")
    )
    lines.append(f"triangle_free {str(r.triangle_free).lower()}")
    lines.append(f"planar {str(r.planar).lower()}")
    if r.minor_found:
        sets = " ".join("{" + ",".join(map(str, s)) + "}" for s in r.minor_branch_sets)
        lines.append(f"minor {r.minor_found} {sets}")
    for k, cl in r.four_cycles:
        lines.append(f"fourcycle {k} {cl[0]} {cl[1]} {cl[2]} {cl[3]}")
    for name, dt in sorted(r.timings.items()):
        lines.append(f"timing {name} {dt:.6f}s")
    return "\n".join(lines) + "\n"


def report_to_json(r: AnalysisReport) -> str:
    d = {
        "n": r.n,
        "edges": r.edge_count,
        "clusters": r.cluster_count,
        "error": r.error,
        "tree_decomposable": r.tree_decomposable,
        "base_non_edges": [list(p) for p in r.base_non_edges],
        "chosen_base": list(r.chosen_base) if r.chosen_base else None,
        "low_cayley_fast": r.low_cayley_fast,
        "fast_witness_step": r.fast_witness,
        "low_cayley_brute": r.low_cayley_brute,
        "brute_witness_step": r.brute_witness,
        "disagreement": r.disagreement,
        "base_invariance_pass": r.invariance_pass,
        "base_invariance": (
            [[list(p), v] for p, v in r.invariance_verdicts]
            if r.invariance_verdicts is not None
            else None
        ),
        "one_path": r.one_path,
        "one_path_base": list(r.one_path_base) if r.one_path_base else None,
        "triangle_free": r.triangle_free,
        "planar": r.planar,
        "minor": r.minor_found,
        "minor_branch_sets": (
            [list(s) for s in r.minor_branch_sets] if r.minor_branch_sets else None
        ),
        "four_cycles": [[k, list(cl)] for k, cl in r.four_cycles],
        "timings": {k: round(v, 6) for k, v in sorted(r.timings.items())},
    }
    return json.dumps(d, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# bench


def bench_sizes(max_n: int) -> list[int]:
    sizes = []
    n = 10
    while n <= max_n:
        sizes.append(n)
        n *= 2
    if sizes and sizes[-1] != max_n:
        sizes.append(max_n)
    return sizes


def _bench_instance(family: str, n: int) -> tuple[graph.Graph, Pair]:
    if family == "fan":
        return generators.gen_fan(n), generators.FAN_BASE
    if family == "random":
        return generators.gen_random(seed=n, n_steps=max(1, n - 2), triangle_free=True)
    raise UnknownFamily(family)


def run_bench(
    max_n: int,
    repeats: int = 3,
    brute_cap: int = 300,
    families: tuple[str, ...] = ("fan", "random"),
) -> list[tuple[str, int, str, float]]:
    """Rows (family, n, algo, median_ms) for the scaling table."""
    if max_n < 10:
        raise BadSize("max_n must be at least 10")
    sizes = set(bench_sizes(max_n))
    if 10 <= brute_cap <= max_n:
        sizes.add(brute_cap)  # anchor the brute fit at its cap
    rows = []
    for family in families:
        for n in sorted(sizes):
            g, f = _bench_instance(family, n)
            variants = [("fast", cayley.low_cayley_fast)]
            if n <= brute_cap:
                variants.append(("brute", cayley.low_cayley_brute))
            for algo, fn in variants:
                times = []
                for _ in range(max(1, repeats)):
                    t0 = time.perf_counter()
                    fn(g, f)
                    times.append((time.perf_counter() - t0) * 1000.0)
                rows.append((family, n, algo, statistics.median(times)))
    return rows


def bench_csv(rows) -> str:
    out = ["family,n,algo,median_ms"]
    out += [f"{fam},{n},{algo},{ms:.3f}" for fam, n, algo, ms in rows]
    return "\n".join(out) + "\n"


def fit_loglog_slope(points: list[tuple[float, float]]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    xs = [math.log(x) for x, _ in points]
    ys = [math.log(y) for _, y in points]
    n = len(xs)
    mx, my = sum(xs) / n, sum(ys) / n
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


# ---------------------------------------------------------------------------
# verify


def verify_corpus(budget: int, seed: int) -> list[tuple[graph.Graph, Pair, str]]:
    items: list[tuple[graph.Graph, Pair, str]] = []
    for n in range(3, 7):
        items.append((generators.gen_fan(n), generators.FAN_BASE, f"fan-{n}"))
    g, f = generators.gen_six_cluster_base()
    items.append((g, f, "six-cluster-base"))
    g, f = generators.gen_lemma57_1a()
    items.append((g, f, "lemma57-1a"))
    for m in range(3, 6):
        items.append(
            (generators.gen_clique_minor_1path(m), generators.CLIQUE_1PATH_BASE, f"1path-{m}")
        )
        items.append(
            (
                generators.gen_clique_minor_trifree(m),
                generators.CLIQUE_TRIFREE_BASE,
                f"trifree-{m}",
            )
        )
    for i in range(budget):
        tf = i % 2 == 0
        opb = (i // 2) % 2 == 0
        steps = 2 + (i * 7 + seed) % 12
        g, f = generators.gen_random(seed * 100_003 + i, steps, tf, opb)
        items.append((g, f, f"random-{i}"))
    return items


def run_verify(budget: int, seed: int, out=sys.stdout) -> int:
    """Theorem checks over the corpus; returns a process exit code."""
    items = verify_corpus(budget, seed)
    failures = 0
    equiv_checked = invariance_checked = planarity_checked = 0
    for g, f, name in items:
        bnes = construction.find_base_non_edges(g)
        verdicts = {}
        for bne in bnes:
            fast = cayley.low_cayley_fast(g, bne).low_complexity
            brute = cayley.low_cayley_brute(g, bne).low_complexity
            equiv_checked += 1
            verdicts[bne] = brute
            if fast != brute:
                failures += 1
                print(f"FAIL equivalence {name} base={bne}: fast={fast} brute={brute}", file=out)
                print(graph.format_graph(g, bne), file=out)
        invariance_checked += 1
        if len(set(verdicts.values())) > 1:
            failures += 1
            print(f"FAIL invariance {name}: verdicts={sorted(verdicts.items())}", file=out)
            print(graph.format_graph(g, f), file=out)
        if graph.is_triangle_free(g):
            lt = construction._last_level(treedecomp.maximal_clusters(g))
            if any(len(lt - set(b)) == 1 for b in bnes):
                planarity_checked += 1
                low = verdicts[bnes[0]]
                planar = graph.is_planar(g)
                if low != planar:
                    failures += 1
                    print(f"FAIL planarity {name}: low={low} planar={planar}", file=out)
                    print(graph.format_graph(g, f), file=out)
    print(
        f"verify: {len(items)} instances, {equiv_checked} equivalence checks, "
        f"{invariance_checked} invariance checks, {planarity_checked} planarity checks, "
        f"{failures} failures",
        file=out,
    )
    print("PASS" if failures == 0 else "FAIL", file=out)
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------
# entry point


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lowcayley")
    sub = p.add_subparsers(dest="cmd", required=True)

    pa = sub.add_parser("analyze", help="analyze a graph file")
    pa.add_argument("path")
    pa.add_argument("--brute", action="store_true", help="also run the brute oracle")
    pa.add_argument(
        "--all-base-non-edges",
        action="store_true",
        help="check the verdict on every base non-edge",
    )
    pa.add_argument("--json", action="store_true")
    pa.add_argument("--no-timing", action="store_true", help="omit timings (stable output)")

    pg = sub.add_parser("generate", help="emit a family instance")
    pg.add_argument("family", choices=sorted(set(generators.FAMILIES) | {"trifree-clique", "1path-clique"}))
    pg.add_argument("size", nargs="?", type=int)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--steps", type=int, default=6)
    pg.add_argument("--triangle-free", action="store_true")
    pg.add_argument("--one-path-bias", action="store_true")
    pg.add_argument("--out")

    pb = sub.add_parser("bench", help="fast vs brute scaling table (CSV)")
    pb.add_argument("--max-n", type=int, default=320)
    pb.add_argument("--repeats", type=int, default=3)
    pb.add_argument("--brute-cap", type=int, default=300)
    pb.add_argument("--families", default="fan,random")
    pb.add_argument("--out")

    pv = sub.add_parser("verify", help="theorem checks on a random corpus")
    pv.add_argument("--budget", type=int, default=100)
    pv.add_argument("--seed", type=int, default=7)
    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.cmd == "analyze":
            with open(args.path) as fh:
                text = fh.read()
            g, base = graph.parse_graph(text)
            report = analyze_graph(
                g,
                base,
                brute=args.brute,
                all_base_non_edges=args.all_base_non_edges,
                with_timing=not args.no_timing,
            )
            sys.stdout.write(report_to_json(report) if args.json else report_to_text(report))
            return 0 if report.ok else 1
        if args.cmd == "generate":
            spec = generators.GeneratorSpec(
                family=args.family,
                size=args.size,
                seed=args.seed,
                n_steps=args.steps,
                triangle_free=args.triangle_free,
                one_path_bias=args.one_path_bias,
            )
            g, base = spec.build()
            text = graph.format_graph(g, base)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.cmd == "bench":
            rows = run_bench(
                max_n=args.max_n,
                repeats=args.repeats,
                brute_cap=args.brute_cap,
                families=tuple(args.families.split(",")),
            )
            text = bench_csv(rows)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.cmd == "verify":
            return run_verify(args.budget, args.seed)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BadSize, UnknownFamily, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
