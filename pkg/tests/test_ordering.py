import random
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from mintrans import Hypergraph
from mintrans.oracle import GeneratorConfig, gen_beta_acyclic_with_ordering
from mintrans.ordering import (
    EliminationOrdering,
    NotBetaAcyclic,
    build_hex,
    find_elimination_ordering,
    lex_compare,
    verify_ordering,
)

from conftest import named


def is_elimination_ordering(H, order):
    """Chain condition straight from the definition, on frozensets."""
    for i, v in enumerate(order):
        suffix = set(order[i:])
        traces = [e & suffix for e in H.edges if v in e]
        for a in traces:
            for b in traces:
                if not (a <= b or b <= a):
                    return False
    return True


def any_ordering_exists(H):
    return any(is_elimination_ordering(H, p) for p in permutations(sorted(H.vertices)))


def seeded_instances(count, n_max=8, m_max=8):
    for seed in range(count):
        r = random.Random(seed)
        cfg = GeneratorConfig(r.randint(1, n_max), r.randint(1, m_max), seed,
                              r.choice([0.3, 0.6, 0.9]), r.choice(["reverse", "rejection"]))
        yield gen_beta_acyclic_with_ordering(cfg)


def test_path5_ordering(path5):
    order = find_elimination_ordering(path5)
    assert verify_ordering(path5, order)
    assert verify_ordering(path5, EliminationOrdering((0, 1, 2, 3, 4)))
    assert [path5.name(v) for v in order] == ["a", "b", "x", "c", "d"]


def test_path5_reversed_ordering_matches_definition(path5):
    rev = (4, 3, 2, 1, 0)
    assert verify_ordering(path5, rev) == is_elimination_ordering(path5, rev) is True


def test_triangle_is_not_beta_acyclic():
    tri = Hypergraph.from_named(["ab", "bc", "ac"])
    assert not any_ordering_exists(tri)
    with pytest.raises(NotBetaAcyclic):
        find_elimination_ordering(tri)


def test_trivial_orderings():
    assert verify_ordering(Hypergraph(), ())
    assert find_elimination_ordering(Hypergraph()).order == ()
    one = Hypergraph([[3, 1, 2]])
    for p in permutations([1, 2, 3]):
        assert verify_ordering(one, p)


def test_verify_rejects_non_permutation(path5):
    with pytest.raises(ValueError):
        verify_ordering(path5, (0, 1, 2))


def test_last_vertex_is_kept_back(path5):
    for v in path5.vertices:
        order = find_elimination_ordering(path5, last=v)
        assert order.order[-1] == v
        assert verify_ordering(path5, order)


def test_lex_compare_examples(path5):
    o = EliminationOrdering((0, 1, 2, 3, 4))
    bx, xc, ab, cd = (frozenset(path5.vertex_id(v) for v in s) for s in ("bx", "xc", "ab", "cd"))
    assert lex_compare(bx, xc, o) == -1
    assert lex_compare(xc, bx, o) == 1
    assert lex_compare(ab, ab, o) == 0
    assert lex_compare(ab, cd, o) == -1
    assert [set(e) for e in o.sort_edges(path5.edges)] == [ab, bx, xc, cd]


def test_build_hex_on_path5(path5):
    o = EliminationOrdering((0, 1, 2, 3, 4))
    x = path5.vertex_id("x")
    # {a,b} joins through b, which precedes x
    got = build_hex(path5, o, named(path5, "xc").pop(), x)
    assert set(got.edges) == named(path5, "ab", "bx", "xc")
    top = build_hex(path5, o, named(path5, "cd").pop(), path5.vertex_id("d"))
    assert set(top.edges) == set(path5.edges)
    first = build_hex(path5, o, named(path5, "ab").pop(), path5.vertex_id("a"))
    assert set(first.edges) == named(path5, "ab")


def test_build_hex_frontier_empty():
    H = Hypergraph([[0, 1], [2, 3]])
    o = EliminationOrdering((0, 1, 2, 3))
    assert set(build_hex(H, o, [2, 3], 3).edges) == {frozenset([2, 3])}


def test_greedy_succeeds_on_generated_instances():
    for H, construction in seeded_instances(150):
        assert is_elimination_ordering(H, construction.order)
        assert verify_ordering(H, construction)
        found = find_elimination_ordering(H)
        assert verify_ordering(H, found)
        assert is_elimination_ordering(H, found.order)


def test_greedy_agrees_with_exhaustive_search():
    rng = random.Random(11)
    for _ in range(150):
        n = rng.randint(1, 5)
        H = Hypergraph(rng.sample(range(n), rng.randint(1, n)) for _ in range(rng.randint(1, 5)))
        try:
            found = find_elimination_ordering(H)
        except NotBetaAcyclic:
            assert not any_ordering_exists(H)
        else:
            assert is_elimination_ordering(H, found.order)


def _all_hex(H, o):
    return {(e, x): build_hex(H, o, e, x) for e in H.edges for x in H.vertices}


def test_hex_vertex_bound_and_nesting():
    """Every H_e^x stays inside e from x upwards, and two of them that share
    an early vertex are nested."""
    for H, o in seeded_instances(120):
        rank = o.rank
        hexes = _all_hex(H, o)
        for (e, x), h in hexes.items():
            assert e in h.edges
            assert all(lex_compare(g, e, o) <= 0 for g in h.edges)
            assert {v for v in h.vertices if rank[v] >= rank[x]} <= e
        for (e, x), h in hexes.items():
            for (f, y), g in hexes.items():
                if lex_compare(e, f, o) <= 0 and rank[x] <= rank[y]:
                    shared = {v for v in h.vertices & g.vertices if rank[v] <= rank[x]}
                    if shared:
                        assert h.edges <= g.edges


def test_min_based_edge_order_breaks_the_vertex_bound():
    """Comparing at the earliest differing vertex instead lets H_e^x climb
    out of e; this instance is the counterexample that fixed the order."""
    H = Hypergraph([[0, 3, 6], [6], [4]])
    o = EliminationOrdering((3, 4, 6, 0))
    assert verify_ordering(H, o)
    big, small = frozenset([0, 3, 6]), frozenset([6])
    # earliest differing vertex 3 lies in big, so the min-based rule puts big first
    assert lex_compare(big, small, o) == 1
    h = build_hex(H, o, small, 6)
    assert h.edges == {small}
    h = build_hex(H, o, big, 6)
    assert {v for v in h.vertices if o.rank[v] >= o.rank[6]} <= big


def test_sub_hypergraphs_stay_beta_acyclic():
    for H, o in seeded_instances(60):
        for h in _all_hex(H, o).values():
            sub = Hypergraph(h.edges)
            assert verify_ordering(sub, find_elimination_ordering(sub))


edge = st.frozensets(st.integers(0, 6), min_size=1, max_size=5)


@settings(max_examples=200)
@given(edge, edge, edge, st.permutations(range(7)))
def test_lex_order_is_total_and_transitive(e, f, g, perm):
    o = EliminationOrdering(tuple(perm))
    assert lex_compare(e, f, o) == -lex_compare(f, e, o)
    assert (lex_compare(e, f, o) == 0) == (e == f)
    if lex_compare(e, f, o) <= 0 and lex_compare(f, g, o) <= 0:
        assert lex_compare(e, g, o) <= 0
    assert (o.edge_key(e) < o.edge_key(f)) == (lex_compare(e, f, o) == -1)
