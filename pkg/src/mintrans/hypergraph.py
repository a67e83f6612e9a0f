"""Hypergraph representation and the set operations the counter is built on.

Vertices are dense integer ids. External names, when present, live in a
label table that derived hypergraphs share with their parent.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Sequence


def _canonical(edges: Iterable[Iterable[int]]) -> tuple[frozenset[int], ...]:
    unique = {frozenset(e) for e in edges}
    return tuple(sorted(unique, key=lambda e: (len(e), sorted(e))))


class Hypergraph:
    """Finite set of hyperedges over integer vertices.

    Duplicate edges collapse on construction. The empty hypergraph and the
    hypergraph holding only the empty edge are different objects: the first
    has exactly one minimal transversal (the empty set), the second none.
    """

    __slots__ = ("edges", "labels", "_edge_set", "_vertices")

    def __init__(self, edges: Iterable[Iterable[int]] = (), labels: Sequence[str] | None = None):
        self.edges = _canonical(edges)
        self._edge_set = frozenset(self.edges)
        self._vertices = frozenset().union(*self.edges)
        if any(v < 0 for v in self._vertices):
            raise ValueError("vertex ids must be non-negative")
        if labels is not None:
            labels = tuple(labels)
            if self._vertices and max(self._vertices) >= len(labels):
                raise ValueError("label table does not cover every vertex id")
        self.labels = labels

    @classmethod
    def from_named(cls, edges: Iterable[Iterable[str]]) -> "Hypergraph":
        """Intern vertex names in first-appearance order."""
        index: dict[str, int] = {}
        ids = []
        for edge in edges:
            ids.append([index.setdefault(name, len(index)) for name in edge])
        return cls(ids, labels=list(index))

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def has_empty_edge(self) -> bool:
        return frozenset() in self._edge_set

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_id(self, name: str) -> int:
        if self.labels is None:
            return int(name)
        try:
            return self.labels.index(name)
        except ValueError:
            raise KeyError(name) from None

    def with_edges(self, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        """New hypergraph over the same label table."""
        return Hypergraph(edges, self.labels)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge):
        return frozenset(edge) in self._edge_set

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._edge_set == other._edge_set

    def __hash__(self):
        return hash(self._edge_set)

    def __repr__(self):
        body = ", ".join("{" + ",".join(self.name(v) for v in sorted(e)) + "}" for e in self.edges)
        return f"Hypergraph([{body}])"


def induce(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """Traces ``{e & S}`` of every edge; an edge disjoint from S leaves the empty edge."""
    S = frozenset(S)
    return H.with_edges(e & S for e in H.edges)


def hitting_edges(H: Hypergraph, S: Iterable[int]) -> Hypergraph:
    """Edges of H meeting S."""
    S = frozenset(S)
    return H.with_edges(e for e in H.edges if e & S)


def remove_edges(H: Hypergraph, drop: Iterable[Iterable[int]]) -> Hypergraph:
    drop = {frozenset(e) for e in drop}
    return H.with_edges(e for e in H.edges if e not in drop)


class DisjointSet:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        parent = self.parent
        root = parent.setdefault(a, a)
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
        return ra


def connected_components(H: Hypergraph) -> list[Hypergraph]:
    """Partition the edges of H into walk-connected classes.

    Classes come out ordered by their first edge in ``H.edges``. The empty
    edge shares no vertex with anything and is always a class of its own.
    """
    ds = DisjointSet()
    for k, e in enumerate(H.edges):
        ds.find(("e", k))
        for v in e:
            ds.union(("e", k), ("v", v))
    classes: dict = {}
    for k, e in enumerate(H.edges):
        classes.setdefault(ds.find(("e", k)), []).append(e)
    return [H.with_edges(c) for c in classes.values()]


def cross_union(families: Sequence[Iterable[Iterable[int]]]) -> set[frozenset[int]]:
    """All unions ``T_1 | ... | T_k`` with ``T_i`` drawn from the i-th family.

    Empty if any family is empty. With no families at all the result is
    ``{frozenset()}``, the neutral element.
    """
    pools = [{frozenset(t) for t in fam} for fam in families]
    return {frozenset().union(*choice) for choice in product(*pools)}
