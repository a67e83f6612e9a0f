"""Counting minimal transversals of β-acyclic hypergraphs.

The counter works on blocked transversals: for a sub-hypergraph ``H'`` and a
block set ``B``, ``btr_B(H', S)`` holds the transversals of ``H'`` inside S
whose members each keep a private edge that avoids B. Fix an elimination
ordering ``x_1 < ... < x_n`` and sort the edges lexicographically as
``e_1 < ... < e_m``. A table entry ``(i, j, w)`` stores the number of
B-blocked transversals of ``H_{e_j}^{x_i}`` (the edges reachable from
``e_j`` through edges below it and joint vertices up to ``x_i``) drawn from
``[<= x_i]``, with ``B`` empty (``w == NO_BLOCK``) or ``{x_w}`` for some
``w > i``.

Each entry splits on whether ``x_i`` is taken::

    #btr_B(H', [<=x]) = #btr_B(H', [<x])
                      + #btr_B(H' - H'(x), [<x])
                      - #btr_{B+x}(H' - (H'(B) & H'(x)), [<x])

and every right-hand hypergraph, traced on ``[<x]``, falls apart into
connected components that are themselves table entries at smaller vertices.
Counts multiply across components.

Internally vertices are bits indexed by their rank in the ordering and edge
sets are bitmasks over the lexicographic edge index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator

from .hypergraph import Hypergraph
from .ordering import EliminationOrdering, find_elimination_ordering

log = logging.getLogger(__name__)

NO_BLOCK = -1


class InternalInvariantViolation(AssertionError):
    """A structural property the recurrence depends on failed to hold."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class SolveStats:
    states: int = 0
    decompositions: int = 0
    checks: int = 0
    pair_blocks: int = 0
    trace: list | None = None


@dataclass
class _Plan:
    # (sign, lookup keys or None when a component traces to the empty edge)
    terms: list = field(default_factory=list)


class Solver:
    """Table-filling counter for one β-acyclic hypergraph.

    ``fill="lazy"`` computes only the entries reachable from the requested
    ones; ``fill="eager"`` fills every entry first. ``validate`` adds the
    per-state structural checks (sub-hypergraph vertex bound, component
    reconstruction, count range) on top of the ones that always run.
    """

    def __init__(self, H: Hypergraph, ordering: EliminationOrdering | None = None, *,
                 fill: str = "lazy", validate: bool = False, trace: bool = False):
        if fill not in ("lazy", "eager"):
            raise ValueError(f"fill must be 'lazy' or 'eager', not {fill!r}")
        if ordering is None:
            ordering = find_elimination_ordering(H)
        self.H = H
        self.ordering = ordering
        self.fill = fill
        self.validate = validate
        self.stats = SolveStats(trace=[] if trace else None)

        rank = ordering.rank
        self.n = len(ordering)
        self.edges = ordering.sort_edges(e for e in H.edges if e)
        self.m = len(self.edges)
        self.masks = [sum(1 << rank[v] for v in e) for e in self.edges]
        # incidence[r]: edge-index mask of edges containing the vertex ranked r
        self.incidence = [0] * self.n
        for j, mk in enumerate(self.masks):
            for r in _bits(mk):
                self.incidence[r] |= 1 << j

        self.hex_edges: list[list[int]] = []
        self.hex_verts: list[list[int]] = []
        self._build_hex_tables()

        self.table: dict[tuple[int, int, int], int] = {}
        self._plans: dict[tuple[int, int, int], _Plan] = {}
        self._decomp_cache: dict[tuple[int, int], list | None] = {}
        if fill == "eager":
            self._fill_eager()

    def _build_hex_tables(self):
        # For a fixed vertex, add edges in lexicographic order to a union-find
        # whose links are shared vertices up to that vertex; the component of
        # e_j right after adding it is H_{e_j}^{x_i}.
        for i in range(self.n):
            upto = (1 << (i + 1)) - 1
            parent = list(range(self.m))
            comp_e = [1 << j for j in range(self.m)]
            comp_v = list(self.masks)
            owner: dict[int, int] = {}
            row_e, row_v = [], []

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for j, mk in enumerate(self.masks):
                for r in _bits(mk & upto):
                    if r not in owner:
                        owner[r] = j
                        continue
                    a, b = find(j), find(owner[r])
                    if a != b:
                        parent[b] = a
                        comp_e[a] |= comp_e[b]
                        comp_v[a] |= comp_v[b]
                root = find(j)
                row_e.append(comp_e[root])
                row_v.append(comp_v[root])
            self.hex_edges.append(row_e)
            self.hex_verts.append(row_v)

    def hex(self, i: int, j: int) -> list[frozenset[int]]:
        """Edges of ``H_{e_j}^{x_i}`` (0-based ranks), in lexicographic order."""
        return [self.edges[k] for k in _bits(self.hex_edges[i][j])]

    def _decompose(self, K: int, below: int) -> list[tuple[int, int]] | None:
        """Components of the edge set K traced on ``below``.

        Returns one ``(y, f)`` per component, where the component's edges are
        exactly ``H_{e_f}^{x_y}``, or None if some edge misses ``below``
        entirely.
        """
        key = (below, K)
        if key in self._decomp_cache:
            return self._decomp_cache[key]
        self.stats.decompositions += 1
        parent: dict[int, int] = {}
        comp_e: dict[int, int] = {}
        comp_v: dict[int, int] = {}
        owner: dict[int, int] = {}

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        parts: list[tuple[int, int]] | None = []
        for j in _bits(K):
            t = self.masks[j] & below
            if not t:
                parts = None
                break
            parent[j] = j
            comp_e[j] = 1 << j
            comp_v[j] = t
            for r in _bits(t):
                if r not in owner:
                    owner[r] = j
                    continue
                a, b = find(j), find(owner[r])
                if a != b:
                    parent[b] = a
                    comp_e[a] |= comp_e.pop(b)
                    comp_v[a] |= comp_v.pop(b)
        if parts is not None:
            for root, edges in comp_e.items():
                y = comp_v[root].bit_length() - 1
                f = edges.bit_length() - 1
                if self.hex_edges[y][f] != edges:
                    raise InternalInvariantViolation(
                        f"component with top vertex rank {y} and top edge {f} is not H_f^y")
                if self.validate:
                    upto_y = (1 << (y + 1)) - 1
                    traces = {self.masks[k] & below for k in _bits(edges)}
                    if traces != {self.masks[k] & upto_y for k in _bits(self.hex_edges[y][f])}:
                        raise InternalInvariantViolation("component differs from H_f^y traced up to y")
                    self.stats.checks += 1
                parts.append((y, f))
            parts.sort()
        self._decomp_cache[key] = parts
        return parts

    def _lookups(self, parts, block: int) -> list[tuple[int, int, int]] | None:
        if parts is None:
            return None
        keys = []
        if block & (block - 1):
            self.stats.pair_blocks += 1
        for y, f in parts:
            b = block & self.hex_verts[y][f]
            if b & (b - 1):
                raise InternalInvariantViolation(
                    f"two block vertices reach H_f^y for y={y}, f={f}")
            keys.append((y, f, b.bit_length() - 1 if b else NO_BLOCK))
        return keys

    def base_case(self, j: int, w: int) -> int:
        """Entry ``(0, j, w)``: only ``{x_1}`` can qualify."""
        members = self.hex_edges[0][j]
        if members & ~self.incidence[0]:
            return 0
        if w == NO_BLOCK:
            return 1
        return 1 if members & ~self.incidence[w] else 0

    def _plan(self, i: int, j: int, w: int) -> _Plan:
        x = 1 << i
        below = x - 1
        Hp = self.hex_edges[i][j]
        Vp = self.hex_verts[i][j]
        block = 0 if w == NO_BLOCK else 1 << w
        if self.validate:
            if Vp & ~below & ~self.masks[j]:
                raise InternalInvariantViolation(f"H_e^x reaches beyond e above x (i={i}, j={j})")
            self.stats.checks += 1
        plan = _Plan()
        plan.terms.append((1, self._lookups(self._decompose(Hp, below), block)))
        if Vp & x:
            with_x = self.incidence[i] & Hp
            plan.terms.append((1, self._lookups(self._decompose(Hp & ~with_x, below), block)))
            K = Hp if w == NO_BLOCK else Hp & ~(with_x & self.incidence[w])
            plan.terms.append((-1, self._lookups(self._decompose(K, below), block | x)))
        if self.stats.trace is not None:
            self.stats.trace.append(((i, j, w), [None if t is None else len(t) for _, t in plan.terms]))
        return plan

    def _evaluate(self, key: tuple[int, int, int]) -> int:
        i, j, w = key
        if i == 0:
            value = self.base_case(j, w)
        else:
            value = 0
            for sign, lookups in self._plans[key].terms:
                if lookups is None:
                    continue
                prod = 1
                for dep in lookups:
                    prod *= self.table[dep]
                    if not prod:
                        break
                value += sign * prod
        if value < 0 or (self.validate and value > 1 << (i + 1)):
            raise InternalInvariantViolation(f"count {value} out of range at state {key}")
        self.stats.states += 1
        return value

    def _ensure(self, keys):
        pending = [k for k in keys if k not in self.table]
        seen = set(pending)
        order = []
        while pending:
            key = pending.pop()
            order.append(key)
            if key[0] == 0:
                continue
            plan = self._plans.get(key) or self._plans.setdefault(key, self._plan(*key))
            for _, lookups in plan.terms:
                for dep in lookups or ():
                    if dep not in self.table and dep not in seen:
                        seen.add(dep)
                        pending.append(dep)
        for key in sorted(order):
            self.table[key] = self._evaluate(key)

    def _fill_eager(self):
        for i in range(self.n):
            for j in range(self.m):
                keys = [(i, j, NO_BLOCK)]
                # blocks outside H_e^x collapse to NO_BLOCK, so only blocks
                # inside it (all of which lie in e_j) get entries of their own
                keys += [(i, j, w) for w in _bits(self.hex_verts[i][j] >> (i + 1) << (i + 1))]
                for key in keys:
                    if key[0]:
                        self._plans[key] = self._plan(*key)
                    self.table[key] = self._evaluate(key)

    def entry(self, i: int, j: int, w: int = NO_BLOCK) -> int:
        """Table value for 0-based vertex rank i, edge index j and block rank w."""
        if w != NO_BLOCK and not (w > i):
            raise ValueError("block vertex must come after the state vertex")
        if w != NO_BLOCK and not self.hex_verts[i][j] >> w & 1:
            w = NO_BLOCK
        self._ensure([(i, j, w)])
        return self.table[(i, j, w)]

    def terms(self, i: int, j: int, w: int = NO_BLOCK) -> tuple[int, int, int]:
        """The three summands (skip x, take x, overcount) behind an entry."""
        key = (i, j, w)
        plan = self._plans.get(key) or self._plans.setdefault(key, self._plan(*key))
        out = []
        for _, lookups in plan.terms:
            if lookups is not None:
                self._ensure(lookups)
                prod = 1
                for dep in lookups:
                    prod *= self.table[dep]
                out.append(prod)
            else:
                out.append(0)
        if len(out) == 1:
            # x does not occur in H_e^x: taking it is impossible
            out += [0, 0]
        return tuple(out)

    def top_parts(self) -> list[tuple[int, int]]:
        """One (vertex rank, edge index) entry per connected component of H."""
        parts = self._decompose((1 << self.m) - 1, (1 << self.n) - 1)
        return parts or []

    def count(self) -> int:
        if self.H.has_empty_edge:
            return 0
        keys = [(y, f, NO_BLOCK) for y, f in self.top_parts()]
        self._ensure(keys)
        total = 1
        for key in keys:
            total *= self.table[key]
        log.debug("counted %d states over %d decompositions", self.stats.states, self.stats.decompositions)
        return total


def count_mtr(H: Hypergraph, ordering: EliminationOrdering | None = None, *,
              fill: str = "lazy", validate: bool = False) -> int:
    """Number of minimal transversals of a β-acyclic hypergraph.

    Raises NotBetaAcyclic when no elimination ordering exists.
    """
    if not H.edges:
        return 1
    if H.has_empty_edge:
        return 0
    return Solver(H, ordering, fill=fill, validate=validate).count()


def count_mtr_containing(H: Hypergraph, x: int) -> int:
    """Number of minimal transversals of H that contain the vertex x.

    Puts x last in the elimination ordering; the top entry of x's component
    then splits into ``#mtr(C - C(x)) - #btr_x(C)``.
    """
    if x not in H.vertices or H.has_empty_edge:
        return 0
    ordering = find_elimination_ordering(H, last=x)
    solver = Solver(H, ordering)
    top = len(ordering) - 1
    total = 1
    for y, f in solver.top_parts():
        if y == top:
            _, take, overcount = solver.terms(y, f)
            total *= take - overcount
        else:
            total *= solver.entry(y, f)
    return total
