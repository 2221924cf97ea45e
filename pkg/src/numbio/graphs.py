"""Functional graphs of the biography maps, and their DOT rendering."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import repeat

from .biography import BiographyFailure
from .digits import canonical_key
from .dynamics import MapKind, _split_range, _step_for, classify_seed, trajectory


@dataclass(frozen=True)
class ReachGraph:
    """States reachable from a seed range under one map, one edge per application.

    Nodes without an outgoing edge are strings whose next biography does not
    exist; cycle_nodes are the states that recur forever.
    """

    map_kind: MapKind
    edges: dict[str, str]
    cycle_nodes: frozenset[str]

    @property
    def nodes(self) -> tuple[str, ...]:
        everything = set(self.edges) | set(self.edges.values()) | set(self.cycle_nodes)
        return tuple(sorted(everything, key=canonical_key))


def _build_chunk(map_kind: MapKind, lo: int, hi: int, max_steps: int) -> ReachGraph:
    step = _step_for(map_kind)
    edges: dict[str, str] = {}
    cycle_nodes: set[str] = set()
    dead_ends: set[str] = set()
    for n in range(lo, hi + 1):
        seed = str(n)
        if classify_seed(seed).is_infinite:
            t = trajectory(map_kind, seed, max_steps)
            for x in t.prefix:
                if x not in edges:
                    edges[x] = step(x)
            size = len(t.cycle)
            for i, x in enumerate(t.cycle):
                edges[x] = t.cycle[(i + 1) % size]
            cycle_nodes.update(t.cycle)
        else:
            node = seed
            while node not in edges and node not in dead_ends:
                try:
                    nxt = step(node)
                except BiographyFailure:
                    dead_ends.add(node)
                    break
                edges[node] = nxt
                node = nxt
    return ReachGraph(map_kind, edges, frozenset(cycle_nodes))


def build_reach_graph(
    map_kind: MapKind, lo: int, hi: int, max_steps: int = 1000, jobs: int = 1
) -> ReachGraph:
    """The functional graph restricted to states reachable from seeds in [lo, hi]."""
    if lo < 0 or lo > hi:
        raise ValueError(f"invalid range [{lo}, {hi}]")
    bounds = _split_range(lo, hi, jobs)
    if len(bounds) == 1:
        return _build_chunk(map_kind, lo, hi, max_steps)
    los, his = zip(*bounds)
    with ProcessPoolExecutor(max_workers=len(bounds)) as pool:
        parts = list(pool.map(_build_chunk, repeat(map_kind), los, his, repeat(max_steps)))
    edges: dict[str, str] = {}
    cycle_nodes: set[str] = set()
    for part in parts:
        edges.update(part.edges)  # the map is a function, so updates never conflict
        cycle_nodes.update(part.cycle_nodes)
    return ReachGraph(map_kind, edges, frozenset(cycle_nodes))


def render_dot(graph: ReachGraph) -> str:
    """Render the graph as DOT with cycle members drawn as double circles."""
    lines = [f"digraph {graph.map_kind} {{"]
    for node in graph.nodes:
        if node in graph.cycle_nodes:
            lines.append(f'  "{node}" [shape=doublecircle];')
        else:
            lines.append(f'  "{node}";')
    for src in sorted(graph.edges, key=canonical_key):
        lines.append(f'  "{src}" -> "{graph.edges[src]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
