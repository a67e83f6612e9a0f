"""Set-level identities between blocked-transversal families, checked by
enumeration only. Each function asserts and returns None."""

import random

from mintrans import Hypergraph
from mintrans.hypergraph import connected_components, cross_union, hitting_edges, induce, remove_edges
from mintrans.oracle import enumerate_btr, random_hypergraph, restrict


def without(H, edges):
    return remove_edges(H, edges)


def split_parts(H, S):
    """Edges of H grouped by the component of H[S] their trace falls in."""
    parts = []
    for comp in connected_components(induce(H, S)):
        traces = set(comp.edges)
        parts.append(H.with_edges(e for e in H.edges if e & S in traces))
    return parts


def check_components(H, S, B):
    whole = enumerate_btr(H, B, S)
    assert whole == cross_union([enumerate_btr(P, B, S) for P in split_parts(H, S)])


def _branches(H, S, B, x):
    H1 = without(H, hitting_edges(H, {x}).edges)
    both = set(hitting_edges(H, B).edges) & set(hitting_edges(H, {x}).edges)
    H2 = without(H, both)
    rest = S - {x}
    return H1, H2, rest


def check_inclusion(H, S, B, x):
    H1, _, rest = _branches(H, S, B, x)
    took = restrict(enumerate_btr(H, B, S), x)
    assert took <= cross_union([{frozenset([x])}, enumerate_btr(H1, B, rest)])


def check_difference(H, S, B, x):
    H1, H2, rest = _branches(H, S, B, x)
    took = restrict(enumerate_btr(H, B, S), x)
    lhs = cross_union([{frozenset([x])}, enumerate_btr(H1, B, rest)]) - took
    assert lhs == cross_union([{frozenset([x])}, enumerate_btr(H2, B | {x}, rest)])


def check_disjoint_split(H, S, B, x):
    whole = enumerate_btr(H, B, S)
    took = restrict(whole, x)
    skipped = enumerate_btr(H, B, S - {x})
    assert not (took & skipped)
    assert whole == took | skipped


def check_count_identity(H, S, B, x):
    H1, H2, rest = _branches(H, S, B, x)
    lhs = len(enumerate_btr(H, B, S))
    rhs = (len(enumerate_btr(H, B, rest)) + len(enumerate_btr(H1, B, rest))
           - len(enumerate_btr(H2, B | {x}, rest)))
    assert lhs == rhs


def check_block_and_ground_reductions(H, sub, S, B):
    V = sub.vertices
    assert enumerate_btr(sub, B, S) == enumerate_btr(sub, B & V, S)
    assert enumerate_btr(sub, B, S) == enumerate_btr(sub, B, S - B)
    for y in H.vertices - V:
        assert enumerate_btr(sub, B, S) == enumerate_btr(sub, B, S - {y})


def random_case(rng: random.Random):
    """(H, sub-hypergraph, S, B, x) with S, B inside V(H), |B| <= 2, x in S."""
    while True:
        H = random_hypergraph(rng, rng.randint(1, 7), rng.randint(1, 6), max_size=4,
                              empty_edge_rate=0.03)
        if H.vertices:
            break
    V = sorted(H.vertices)
    S = {v for v in V if rng.random() < 0.7}
    x = rng.choice(V)
    S.add(x)
    B = set(rng.sample(V, rng.randint(0, min(2, len(V)))))
    sub = H.with_edges(e for e in H.edges if rng.random() < 0.6)
    return H, sub, frozenset(S), frozenset(B), x


def check_all(H, sub, S, B, x):
    check_components(H, S, B)
    check_inclusion(H, S, B, x)
    check_difference(H, S, B, x)
    check_disjoint_split(H, S, B, x)
    check_count_identity(H, S, B, x)
    check_block_and_ground_reductions(H, sub, S, B)
