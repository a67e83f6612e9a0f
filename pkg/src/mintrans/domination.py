"""Minimal dominating sets as minimal transversals of the closed
neighbourhood hypergraph."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .engine import count_mtr
from .hypergraph import Hypergraph
from .ordering import NotBetaAcyclic, find_elimination_ordering


class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) leaves the vertex range 0..{n - 1}")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.adjacency = tuple(frozenset(a) for a in adj)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def closed_neighbourhood(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


@dataclass(frozen=True)
class NeighborhoodHypergraph:
    hypergraph: Hypergraph
    # every vertex whose closed neighbourhood equals the edge, smallest first
    provenance: dict

    def source(self, edge) -> int:
        return self.provenance[frozenset(edge)][0]

    def twin_classes(self) -> list[tuple[int, ...]]:
        return [vs for vs in self.provenance.values() if len(vs) > 1]


def closed_neighborhood_hypergraph(G: Graph) -> NeighborhoodHypergraph:
    sources: dict[frozenset[int], list[int]] = {}
    for v in range(G.n):
        sources.setdefault(G.closed_neighbourhood(v), []).append(v)
    H = Hypergraph(sources, labels=[str(v + 1) for v in range(G.n)])
    return NeighborhoodHypergraph(H, {e: tuple(vs) for e, vs in sources.items()})


def count_minimal_dominating_sets(G: Graph) -> int:
    """Exact count for graphs whose closed neighbourhood hypergraph is
    β-acyclic, which covers every strongly chordal graph."""
    H = closed_neighborhood_hypergraph(G).hypergraph
    try:
        ordering = find_elimination_ordering(H)
    except NotBetaAcyclic as exc:
        raise NotBetaAcyclic(
            "input not supported (not recognized as strongly chordal via beta-acyclic N[G])",
            exc.remaining) from None
    return count_mtr(H, ordering)


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_interval_graph(n: int, rng: random.Random, span: float = 10.0) -> Graph:
    """Intersection graph of n random closed intervals in ``[0, span]``."""
    intervals = []
    for _ in range(n):
        a = rng.uniform(0, span)
        intervals.append((a, a + rng.expovariate(1.0)))
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]])
