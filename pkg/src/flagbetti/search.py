"""Exhaustive and streamed extremal search over small graphs.

The internal generator produces one representative per isomorphism class
by extending (n-1)-vertex representatives with every possible
neighbourhood of a new vertex and deduplicating by canonical form.
Larger inputs arrive as graph6 streams from external generators.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterable, Iterator

from .complexes import independence_complex, neighbourhood_complex
from .graphs import (
    Graph,
    Graph6Error,
    bits,
    canonical_form,
    canonical_graph,
    empty_graph,
    encode_graph6,
    graph_predicates,
    parse_graph6,
)
from .homology import GF2, FieldSpec, betti, total_betti
from .invariants import (
    Enclosure,
    b_graph,
    conjecture_power,
    gamma_enclosure,
    gamma_power,
    hochster_beta,
    theta_enclosure,
    theta_power,
    theta_small_enclosure,
)

__all__ = [
    "GENERATOR_CAPS",
    "SearchReport",
    "enumerate_graphs",
    "stream_graph6",
    "maximize",
    "flag_vanishing_sweep",
    "conjecture_checks",
    "moon_moser_check",
]

GENERATOR_CAPS = {"all": 8, "triangle_free": 9, "bipartite": 8, "connected": 8}
CHECKPOINT_EVERY = 100_000


# ---------------------------------------------------------------------------
# isomorph-free generation

@lru_cache(maxsize=None)
def _classes(n: int, trifree: bool) -> tuple[Graph, ...]:
    if n == 0:
        return (empty_graph(0),)
    out: dict[bytes, Graph] = {}
    for parent in _classes(n - 1, trifree):
        for nb in range(1 << (n - 1)):
            if trifree:
                # the new vertex closes a triangle iff two of its
                # neighbours are adjacent in the parent
                if any(parent.adj[v] & nb for v in bits(nb)):
                    continue
            g = Graph(n, tuple(a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(parent.adj)) + (nb,))
            key = canonical_form(g)
            if key not in out:
                out[key] = canonical_graph(g)
    return tuple(out[k] for k in sorted(out))


def enumerate_graphs(n: int, cls: str = "all") -> list[Graph]:
    """One canonical representative per isomorphism class, deterministic
    order (sorted by canonical graph6)."""
    if cls not in GENERATOR_CAPS:
        raise ValueError(f"unknown class {cls!r}; choose from {sorted(GENERATOR_CAPS)}")
    cap = GENERATOR_CAPS[cls]
    if n > cap:
        raise ValueError(
            f"internal generation capped at n={cap} for class {cls!r}; "
            "pipe graph6 lines from an external generator instead"
        )
    base = _classes(n, cls == "triangle_free")
    if cls in ("all", "triangle_free"):
        return list(base)
    predicate = {
        "bipartite": lambda g: graph_predicates(g)["is_bipartite"],
        "connected": lambda g: graph_predicates(g)["is_connected"],
    }[cls]
    return [g for g in base if predicate(g)]


# ---------------------------------------------------------------------------
# graph6 streaming

def stream_graph6(lines: Iterable[str], strict: bool = True) -> Iterator[Graph]:
    """Parse graph6 lines lazily; in non-strict mode bad lines are
    skipped with a warning attribute rather than raised."""
    for lineno, raw in enumerate(lines, start=1):
        word = raw.strip()
        if not word:
            continue
        try:
            yield parse_graph6(word)
        except Graph6Error as exc:
            if strict:
                raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from None


# ---------------------------------------------------------------------------
# maximization

METRICS = ("b", "beta", "bneigh")


@dataclass
class SearchReport:
    metric: str
    graph_class: str
    n: int
    graphs_examined: int = 0
    max_value: int = -1
    maximizers: list = dc_field(default_factory=list)
    bound_name: str = ""
    bound: Enclosure | None = None
    all_within_bound: bool = True
    violations: list = dc_field(default_factory=list)
    wall_time: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "metric": self.metric,
            "class": self.graph_class,
            "n": self.n,
            "graphs_examined": self.graphs_examined,
            "max_value": self.max_value,
            "maximizers": self.maximizers,
            "bound_name": self.bound_name,
            "bound_lo": float(self.bound.lo) if self.bound else None,
            "bound_hi": float(self.bound.hi) if self.bound else None,
            "all_within_bound": self.all_within_bound,
            "violations": self.violations,
            "wall_time": round(self.wall_time, 3),
        }

    def to_tsv_line(self) -> str:
        return "\t".join(
            str(x)
            for x in (
                self.n,
                self.max_value,
                float(self.bound.lo) if self.bound else "",
                float(self.bound.hi) if self.bound else "",
                self.all_within_bound,
            )
        )


def _metric_fn(metric: str, fieldspec: FieldSpec, hochster_cap: int):
    if metric == "b":
        return lambda g: b_graph(g, fieldspec)
    if metric == "beta":
        return lambda g: hochster_beta(g, fieldspec, cap=hochster_cap).beta_total
    if metric == "bneigh":
        return lambda g: total_betti(neighbourhood_complex(g), fieldspec)
    raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")


def _bound_for(metric: str, graph_class: str, n: int) -> tuple[str, Enclosure]:
    trifree = graph_class in ("triangle_free", "bipartite")
    if metric == "b":
        if trifree:
            return "b-le-gamma^n", gamma_power(n)
        return "b-le-theta^n", theta_power(n)
    if metric == "beta":
        if trifree:
            return "beta-le-(gamma+1)^n", gamma_enclosure(3).plus_int(1) ** n
        return "beta-le-(theta+1)^n", theta_enclosure(4).plus_int(1) ** n
    if metric == "bneigh":
        return "bneigh-le-gamma^2n", gamma_power(2 * n)
    raise ValueError(f"unknown metric {metric!r}")


def maximize(
    metric: str,
    graph_class: str = "all",
    n: int | None = None,
    graphs: Iterable[Graph] | None = None,
    fieldspec: FieldSpec = GF2,
    hochster_cap: int = 14,
    checkpoint_path: str | None = None,
    resume_offset: int = 0,
) -> SearchReport:
    """Evaluate metric on every graph and report the exact maximum, all
    maximizers (canonical graph6), and the applicable theorem bound."""
    if graphs is None:
        if n is None:
            raise ValueError("give either n (internal generator) or a graph iterable")
        graphs = enumerate_graphs(n, graph_class)
    start = time.monotonic()
    fn = None
    report = SearchReport(metric=metric, graph_class=graph_class, n=n or 0)
    seen_sizes: set[int] = set()
    for offset, g in enumerate(graphs):
        if offset < resume_offset:
            continue
        if fn is None:
            fn = _metric_fn(metric, fieldspec, hochster_cap)
        if metric == "beta" and g.n > hochster_cap:
            raise ValueError(f"metric beta needs n <= {hochster_cap}, got {g.n}")
        value = fn(g)
        seen_sizes.add(g.n)
        report.graphs_examined += 1
        if value > report.max_value:
            report.max_value = value
            report.maximizers = [encode_graph6(canonical_graph(g))]
        elif value == report.max_value:
            g6 = encode_graph6(canonical_graph(g))
            if g6 not in report.maximizers:
                report.maximizers.append(g6)
        bound_name, bound = _bound_for(metric, graph_class, g.n)
        if not bound.holds_upper_bound(value):
            report.all_within_bound = False
            report.violations.append(
                {"graph6": encode_graph6(canonical_graph(g)), "value": value, "bound": bound_name}
            )
        if checkpoint_path and report.graphs_examined % CHECKPOINT_EVERY == 0:
            _write_checkpoint(checkpoint_path, offset + 1, report)
    if n is None and len(seen_sizes) == 1:
        report.n = seen_sizes.pop()
    report.maximizers.sort()
    if report.n:
        report.bound_name, report.bound = _bound_for(metric, graph_class, report.n)
    report.wall_time = time.monotonic() - start
    if checkpoint_path:
        _write_checkpoint(checkpoint_path, report.graphs_examined, report)
    return report


def _write_checkpoint(path: str, offset: int, report: SearchReport) -> None:
    payload = {
        "offset": offset,
        "max_value": report.max_value,
        "maximizers": sorted(report.maximizers),
    }
    with open(path, "w", encoding="ascii") as fh:
        json.dump(payload, fh)
        fh.write("\n")


# ---------------------------------------------------------------------------
# conjecture probes

def conjecture_checks(
    n: int,
    fieldspec: FieldSpec = GF2,
    complexes: Iterable | None = None,
) -> dict:
    """Probe the two open questions at desk scale.

    Triangle-free part: among n-vertex triangle-free maximizers of b,
    report the bipartiteness flag of each (no pass/fail is asserted).
    Complex part: for each supplied complex, compare b against the
    conjectured missing-face bound with d = largest minimal non-face.
    Bound violations of the proven theorems are collected separately.
    """
    report = maximize("b", "triangle_free", n=n, fieldspec=fieldspec)
    maximizer_flags = []
    for g6 in report.maximizers:
        g = parse_graph6(g6)
        preds = graph_predicates(g)
        maximizer_flags.append(
            {
                "graph6": g6,
                "is_bipartite": preds["is_bipartite"],
                "is_connected": preds["is_connected"],
            }
        )
    complex_results = []
    counterexamples = []
    if complexes is not None:
        from .complexes import class_membership

        for k in complexes:
            cls = class_membership(k)
            d = cls["min_nonface_max_size"]
            b = total_betti(k, fieldspec)
            entry = {"n": k.n, "d": d, "b": b}
            if d >= 2:
                enc = conjecture_power(d, k.n)
                entry["conjectured_bound_lo"] = float(enc.lo)
                entry["conjectured_bound_hi"] = float(enc.hi)
                entry["within_conjectured_bound"] = enc.holds_upper_bound(b)
                proven = theta_small_enclosure(max(d, 2)) ** k.n
                entry["within_proven_bound"] = proven.holds_upper_bound(b)
                if not entry["within_proven_bound"]:
                    counterexamples.append(entry)
            complex_results.append(entry)
    return {
        "n": n,
        "triangle_free_max_b": report.max_value,
        "graphs_examined": report.graphs_examined,
        "maximizers": maximizer_flags,
        "all_maximizers_bipartite": all(m["is_bipartite"] for m in maximizer_flags),
        "theorem_bound_violations": report.violations,
        "complex_checks": complex_results,
        "proven_bound_counterexamples": counterexamples,
        "bounds_violated": bool(report.violations or counterexamples),
    }


def _has_independent_set(g: Graph, k: int) -> bool:
    """True when g contains k pairwise non-adjacent vertices."""
    if k <= 0:
        return True
    if k > g.n:
        return False

    def grow(chosen: int, pool: int, need: int) -> bool:
        if need == 0:
            return True
        while pool:
            v = (pool & -pool).bit_length() - 1
            pool &= pool - 1
            if bin(pool).count("1") + 1 < need:
                return False
            if grow(chosen | 1 << v, pool & ~g.adj[v], need - 1):
                return True
        return False

    return grow(0, g.vertex_mask, k)


def _extensions(parent: Graph) -> Iterator[Graph]:
    """All one-vertex extensions of parent (no isomorphism dedup)."""
    n = parent.n + 1
    for nb in range(1 << parent.n):
        yield Graph(
            n,
            tuple(a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(parent.adj))
            + (nb,),
        )


def flag_vanishing_sweep(n: int, fieldspec: FieldSpec = GF2) -> dict:
    """Check that Ind(G) has no homology above n/2 - 1 for every n-vertex
    graph, one isomorphism class at a time.

    Homology in degree i needs an independent set of i+1 vertices, so only
    graphs whose independence number clears the threshold are computed.
    For n one past the generator cap the candidates are streamed as
    one-vertex extensions of the (n-1)-vertex representatives; duplicates
    across parents are harmless for a universally-quantified check.
    """
    from fractions import Fraction

    threshold = Fraction(n, 2) - 1
    min_degree = int(threshold) + 1  # least integer degree above threshold
    min_alpha = min_degree + 1
    cap = GENERATOR_CAPS["all"]
    if n <= cap:
        candidates: Iterable[Graph] = enumerate_graphs(n, "all")
    elif n == cap + 1:
        candidates = (
            child
            for parent in _classes(cap, False)
            # a child's independence number is at most the parent's plus one
            if _has_independent_set(parent, min_alpha - 1)
            for child in _extensions(parent)
        )
    else:
        raise ValueError(f"vanishing sweep supported only for n <= {cap + 1}")
    examined = 0
    computed = 0
    violations = []
    for g in candidates:
        examined += 1
        if not _has_independent_set(g, min_alpha):
            continue
        computed += 1
        bv = betti(independence_complex(g), fieldspec)
        bad = [(d, b) for d, b in bv.by_degree if d >= min_degree and b > 0]
        if bad:
            violations.append({"graph6": encode_graph6(g), "degrees": bad})
    return {
        "n": n,
        "threshold": float(threshold),
        "graphs_examined": examined,
        "homology_computed": computed,
        "violations": violations,
        "pass": not violations,
    }


def moon_moser_check(n: int) -> dict:
    """Facet counts of independence complexes against the 3^(n/3) cap.
    The comparison is done over the integers as m^3 <= 3^n."""
    worst = 0
    worst_g6 = None
    count = 0
    for g in enumerate_graphs(n, "all"):
        m = len(independence_complex(g).facets)
        count += 1
        if m > worst:
            worst = m
            worst_g6 = encode_graph6(g)
    return {
        "n": n,
        "graphs_examined": count,
        "max_facets": worst,
        "max_facets_graph6": worst_g6,
        "within_bound": worst**3 <= 3**n,
    }
