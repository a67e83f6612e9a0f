"""Brute-force ground truth and seeded instance generators.

Everything here enumerates subsets outright, so it only scales to a couple of
dozen vertices. It exists to check the counting engine, never to replace it.

Randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the caller's integer seed, so instances are reproducible across
runs and platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

from .hypergraph import Hypergraph, hitting_edges, remove_edges
from .ordering import EliminationOrdering, NotBetaAcyclic, find_elimination_ordering

MAX_ENUMERATION_VERTICES = 24

Family = set[frozenset[int]]


class TooLarge(ValueError):
    pass


def _scan(H: Hypergraph, S: Iterable[int] | None, blocked: frozenset[int] | None):
    """Yield ``(T, is_transversal, all_private)`` for every T inside S.

    ``all_private`` asks that each member of T owns a private edge among the
    edges not meeting ``blocked``.
    """
    ground = sorted(H.vertices if S is None else frozenset(S) & H.vertices)
    if len(ground) > MAX_ENUMERATION_VERTICES:
        raise TooLarge(f"{len(ground)} vertices exceeds the enumeration bound of {MAX_ENUMERATION_VERTICES}")
    pos = {v: k for k, v in enumerate(ground)}

    def bits(e):
        m = 0
        for v in e:
            if v in pos:
                m |= 1 << pos[v]
        return m

    edges = [bits(e) for e in H.edges]
    if blocked is None:
        private_pool = edges
    else:
        private_pool = [bits(e) for e in H.edges if not (e & blocked)]
    for T in range(1 << len(ground)):
        hit = all(e & T for e in edges)
        owners = 0
        for e in private_pool:
            t = e & T
            if t and not t & (t - 1):
                owners |= t
        members = frozenset(ground[k] for k in range(len(ground)) if T >> k & 1)
        yield members, hit, owners == T


def enumerate_tr(H: Hypergraph, S: Iterable[int] | None = None) -> Family:
    """All transversals of H inside S (default: all of V(H))."""
    return {T for T, hit, _ in _scan(H, S, None) if hit}


def enumerate_mtr(H: Hypergraph) -> Family:
    """Transversals in which every member has a private edge."""
    return {T for T, hit, private in _scan(H, None, None) if hit and private}


def minimal_elements(family: Iterable[frozenset[int]]) -> Family:
    family = set(family)
    return {T for T in family if not any(U < T for U in family)}


def enumerate_btr(Hsub: Hypergraph, B: Iterable[int] = (), S: Iterable[int] | None = None) -> Family:
    """Transversals of Hsub inside S whose members all have privates outside
    the blocked edges ``Hsub(B)``."""
    B = frozenset(B)
    free = remove_edges(Hsub, hitting_edges(Hsub, B).edges)
    return enumerate_tr(Hsub, S) & enumerate_mtr(free)


def restrict(family: Family, x: int) -> Family:
    """Members containing x."""
    return {T for T in family if x in T}


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    m: int
    seed: int = 0
    density: float = 0.5
    method: str = "reverse"

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ValueError("n and m must be non-negative")
        if not 0 < self.density <= 1:
            raise ValueError("density must lie in (0, 1]")
        if self.method not in ("reverse", "rejection"):
            raise ValueError(f"unknown generation method {self.method!r}")


def _reverse_construction(cfg: GeneratorConfig, rng: random.Random):
    # order[k] is the k-th vertex of the elimination ordering being built
    order = list(range(cfg.n))
    rng.shuffle(order)
    partials: list[set[int]] = []
    # overshoot: duplicates collapse at the end and the surplus is trimmed
    target = cfg.m + cfg.m // 2 + 1
    for k in reversed(range(cfg.n)):
        v = order[k]
        missing = max(target - len(partials), 0)
        spawn, extra = divmod(missing, k + 1)
        spawn += rng.random() < extra / (k + 1)
        for _ in range(spawn):
            if partials and rng.random() < 0.5:
                partials.append(set(rng.choice(partials)))
            else:
                partials.append(set())
        # the partials receiving v must form an inclusion chain
        chain: list[set[int]] = []
        idx = list(range(len(partials)))
        rng.shuffle(idx)
        for i in idx:
            p = partials[i]
            if rng.random() < cfg.density and all(p <= q or q <= p for q in chain):
                chain.append(p)
        if not chain:
            chain.append(set())
            partials.append(chain[0])
        for p in chain:
            p.add(v)
    edges = sorted({frozenset(p) for p in partials if p}, key=sorted)
    rng.shuffle(edges)
    edges = _trim(edges, cfg.m)
    H = Hypergraph(edges)
    ordering = EliminationOrdering(tuple(v for v in order if v in H.vertices))
    return H, ordering


def _trim(edges: list[frozenset[int]], m: int) -> list[frozenset[int]]:
    """Drop edges down to m, first those whose vertices stay covered."""
    cover: dict[int, int] = {}
    for e in edges:
        for v in e:
            cover[v] = cover.get(v, 0) + 1
    kept = []
    surplus = len(edges) - m
    for e in edges:
        if surplus > 0 and all(cover[v] > 1 for v in e):
            for v in e:
                cover[v] -= 1
            surplus -= 1
        else:
            kept.append(e)
    return kept[:m]


def _rejection(cfg: GeneratorConfig, rng: random.Random, tries: int = 200):
    for _ in range(tries):
        edges = []
        for _ in range(cfg.m):
            size = 1 + min(int(rng.expovariate(1.0 / max(cfg.density * 3, 0.1))), cfg.n - 1)
            edges.append(rng.sample(range(cfg.n), size))
        H = Hypergraph(edges)
        try:
            return H, find_elimination_ordering(H)
        except NotBetaAcyclic:
            continue
    return _reverse_construction(cfg, rng)


def gen_beta_acyclic_with_ordering(cfg: GeneratorConfig) -> tuple[Hypergraph, EliminationOrdering]:
    """A β-acyclic hypergraph together with an elimination ordering certifying it."""
    if cfg.n == 0 or cfg.m == 0:
        return Hypergraph(), EliminationOrdering(())
    rng = random.Random(cfg.seed)
    if cfg.method == "rejection":
        return _rejection(cfg, rng)
    return _reverse_construction(cfg, rng)


def gen_beta_acyclic(cfg: GeneratorConfig) -> Hypergraph:
    return gen_beta_acyclic_with_ordering(cfg)[0]


def random_hypergraph(rng: random.Random, n: int, m: int, max_size: int | None = None,
                      empty_edge_rate: float = 0.0) -> Hypergraph:
    """Unstructured random hypergraph, β-acyclic or not."""
    max_size = min(max_size or n, n)
    edges = []
    for _ in range(m):
        if rng.random() < empty_edge_rate:
            edges.append(())
        else:
            edges.append(rng.sample(range(n), rng.randint(1, max_size)))
    return Hypergraph(edges)
