from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyclique import (
    Hypergraph,
    InputError,
    edge_stats,
    is_clique,
    parse_hypergraph,
    render_hypergraph,
)
from conftest import FANO_EDGES


def test_parse_triangle():
    p = parse_hypergraph("uniform 2 vertices 3\n0 1\n0 2\n1 2\n")
    assert p.hypergraph.n == 2
    assert p.hypergraph.v == 3
    assert p.hypergraph.edges == ((0, 1), (0, 2), (1, 2))
    assert p.duplicate_count == 0


def test_parse_fano_and_pairwise_intersections(data_dir):
    p = parse_hypergraph((data_dir / "fano.hg").read_text())
    h = p.hypergraph
    assert (h.n, h.v, h.edge_count) == (3, 7, 7)
    # oracle: all 21 pairs of lines share exactly one point
    sets = [set(e) for e in h.edges]
    assert all(len(a & b) == 1 for a, b in combinations(sets, 2))
    assert is_clique(h).is_clique


def test_parse_duplicate_lines_merged_with_count():
    p = parse_hypergraph("uniform 2 vertices 3\n0 1\n0 1\n")
    assert p.hypergraph.edge_count == 1
    assert p.duplicate_count == 1


def test_parse_tolerates_comments_blank_lines_and_crlf():
    text = "# header comment\r\nuniform 2 vertices 3\r\n\r\n0 1  # inline\r\n1 2\r\n"
    p = parse_hypergraph(text)
    assert p.hypergraph.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text,fragment", [
    ("uniform 2\n0 1\n", "header"),
    ("uniform x vertices 3\n0 1\n", "header"),
    ("uniform 2 vertices 3\n0 1 2\n", "cardinality"),
    ("uniform 3 vertices 4\n0 0 1\n", "cardinality"),
    ("uniform 2 vertices 3\n0 5\n", "outside"),
    ("uniform 2 vertices 3\n", "empty edge list"),
    ("uniform 2 vertices 3\n0 a\n", "non-integer"),
    ("uniform 0 vertices 3\n0 1\n", "positive"),
    (f"uniform 2 vertices {2**20 + 1}\n0 1\n", "cap"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(InputError, match=fragment):
        parse_hypergraph(text)


def test_constructor_rejects_non_canonical_families():
    with pytest.raises(InputError):
        Hypergraph(2, 3, ((0, 1), (0, 1)))
    with pytest.raises(InputError):
        Hypergraph(2, 3, ((1, 0),))
    with pytest.raises(InputError):
        Hypergraph(2, 3, ((1, 2), (0, 1)))


def test_from_edges_canonicalizes():
    a = Hypergraph.from_edges(2, 4, [(3, 0), (1, 0), (0, 3)])
    b = Hypergraph.from_edges(2, 4, [(0, 1), (0, 3)])
    assert a == b


def test_is_clique_disjoint_witness():
    h = Hypergraph.from_edges(2, 4, [(0, 1), (2, 3)])
    verdict = is_clique(h)
    assert not verdict.is_clique
    assert verdict.witness == (0, 1)
    assert not set(h.edges[0]) & set(h.edges[1])


def test_is_clique_witness_is_lexicographically_first():
    h = Hypergraph.from_edges(2, 6, [(0, 1), (0, 2), (3, 4), (3, 5)])
    assert is_clique(h).witness == (0, 2)


def test_edge_stats_fano(fano):
    s0 = edge_stats(fano, {0})
    assert len(s0.containing) == 3
    assert len(s0.meeting) == 3
    s01 = edge_stats(fano, {0, 1})
    assert len(s01.containing) == 1
    assert len(s01.meeting) == 5
    # oracle recomputation from raw sets
    sets = [set(e) for e in fano.edges]
    assert len([s for s in sets if {0, 1} <= s]) == 1
    assert len([s for s in sets if {0, 1} & s]) == 5
    assert s01.degree_map == {0: 3, 1: 3}


def test_edge_stats_empty_set_conventions(fano):
    s = edge_stats(fano, set())
    assert s.containing == tuple(range(7))
    assert s.meeting == ()
    assert s.degree_map == {}


def test_edge_stats_rejects_out_of_range(fano):
    with pytest.raises(InputError):
        edge_stats(fano, {9})


def test_render_fixture_roundtrip(data_dir):
    for name in ("fano.hg", "triangle.hg", "four_edge.hg", "star4.hg"):
        h = parse_hypergraph((data_dir / name).read_text()).hypergraph
        again = parse_hypergraph(render_hypergraph(h))
        assert again.hypergraph == h
        assert again.duplicate_count == 0


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    v = draw(st.integers(min_value=n, max_value=9))
    universe = list(combinations(range(v), n))
    count = draw(st.integers(min_value=1, max_value=min(8, len(universe))))
    edges = draw(st.permutations(universe).map(lambda p: p[:count]))
    return Hypergraph.from_edges(n, v, edges)


@given(hypergraphs())
@settings(max_examples=60)
def test_roundtrip_is_identity(h):
    p = parse_hypergraph(render_hypergraph(h))
    assert p.hypergraph == h
    assert p.duplicate_count == 0


@given(hypergraphs(), st.sets(st.integers(min_value=0, max_value=8), max_size=4))
@settings(max_examples=60)
def test_containing_within_meeting_and_degree_sum(h, w):
    w = {x for x in w if x < h.v}
    stats = edge_stats(h, w)
    if w:
        assert set(stats.containing) <= set(stats.meeting)
    assert sum(h.degrees()) == h.n * h.edge_count


@given(hypergraphs())
@settings(max_examples=60)
def test_is_clique_agrees_with_double_loop_oracle(h):
    sets = [set(e) for e in h.edges]
    expected = all(a & b for a, b in combinations(sets, 2))
    assert is_clique(h).is_clique == expected
