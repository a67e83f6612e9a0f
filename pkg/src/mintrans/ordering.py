"""β-elimination orderings, the induced lexicographic edge order, and the
walk-closed sub-hypergraphs ``H_e^x`` indexed by (edge, vertex) pairs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .hypergraph import Hypergraph


class NotBetaAcyclic(ValueError):
    """No nest point is left to eliminate: the input is not β-acyclic."""

    def __init__(self, msg="hypergraph is not beta-acyclic", remaining=()):
        super().__init__(msg)
        self.remaining = tuple(remaining)


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]

    @cached_property
    def rank(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.order)}

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def edge_key(self, e: Iterable[int]) -> int:
        """Sort key realising the lexicographic edge order.

        Edges are compared at the latest vertex (in elimination order) of
        their symmetric difference; the edge holding it is the larger one.
        Read as a bitmask over ranks, that is plain integer comparison.
        """
        rank = self.rank
        key = 0
        for v in e:
            key |= 1 << rank[v]
        return key

    def sort_edges(self, edges: Iterable[frozenset[int]]) -> list[frozenset[int]]:
        return sorted(edges, key=self.edge_key)


def _is_chain(sets: Iterable[int]) -> bool:
    ordered = sorted(set(sets), key=int.bit_count)
    return all(a & ~b == 0 for a, b in zip(ordered, ordered[1:]))


def _mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def find_elimination_ordering(H: Hypergraph, last: int | None = None) -> EliminationOrdering:
    """Greedy nest-point elimination.

    At every step the smallest vertex id whose incident edges, traced on the
    surviving vertices, form an inclusion chain is removed. ``last`` keeps
    one vertex back until everything else is gone.
    """
    incident: dict[int, list[int]] = {v: [] for v in H.vertices}
    for e in H.edges:
        m = _mask(e)
        for v in e:
            incident[v].append(m)
    if last is not None and last not in incident:
        raise ValueError(f"vertex {last} is not in the hypergraph")

    alive = set(incident)
    alive_mask = _mask(alive)
    order = []
    while alive:
        pick = None
        for v in sorted(alive):
            if v == last and len(alive) > 1:
                continue
            if _is_chain(m & alive_mask for m in incident[v]):
                pick = v
                break
        if pick is None:
            raise NotBetaAcyclic(remaining=sorted(alive))
        order.append(pick)
        alive.discard(pick)
        alive_mask &= ~(1 << pick)
    return EliminationOrdering(tuple(order))


def verify_ordering(H: Hypergraph, ordering: EliminationOrdering | Sequence[int]) -> bool:
    order = tuple(ordering)
    if sorted(order) != sorted(H.vertices) or len(set(order)) != len(order):
        raise ValueError("ordering is not a permutation of the vertex set")
    masks = [_mask(e) for e in H.edges]
    suffix = _mask(order)
    for v in order:
        bit = 1 << v
        if not _is_chain(m & suffix for m in masks if m & bit):
            return False
        suffix &= ~bit
    return True


def lex_compare(e: Iterable[int], f: Iterable[int], ordering: EliminationOrdering) -> int:
    """-1, 0 or 1 as e is below, equal to or above f in the edge order."""
    e, f = frozenset(e), frozenset(f)
    if e == f:
        return 0
    last = max(e ^ f, key=ordering.rank.__getitem__)
    return 1 if last in e else -1


@dataclass(frozen=True)
class SubHypergraph:
    """Edges reachable from ``edge`` through edges no larger than it and
    joint vertices no later than ``vertex``."""

    edge: frozenset[int]
    vertex: int
    edges: frozenset[frozenset[int]] = field(repr=False)

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*self.edges)


def build_hex(H: Hypergraph, ordering: EliminationOrdering, e: Iterable[int], x: int) -> SubHypergraph:
    e = frozenset(e)
    if e not in H:
        raise ValueError("anchor edge is not an edge of the hypergraph")
    rank = ordering.rank
    bound = rank[x]
    key_e = ordering.edge_key(e)
    pool = [g for g in H.edges if ordering.edge_key(g) <= key_e]
    seen = {e}
    queue = deque([e])
    while queue:
        g = queue.popleft()
        joints = {v for v in g if rank[v] <= bound}
        for h in pool:
            if h not in seen and not joints.isdisjoint(h):
                seen.add(h)
                queue.append(h)
    return SubHypergraph(e, x, frozenset(seen))
