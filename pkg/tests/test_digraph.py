import pytest
from hypothesis import given
from hypothesis import strategies as st

from spiderfind import (
    Digraph,
    EdgeListError,
    InsufficientOutDegree,
    degree_profile,
    extract_exact_outdegree_subgraph,
    gen_complete_digraph,
    gen_random_out_regular,
    gen_regular_tournament,
    min_out_degree,
    parse_edge_list,
    write_edge_list,
)
from strategies import digraphs


def assert_mirror_consistent(g: Digraph) -> None:
    out_pairs = sorted(g.edges())
    in_pairs = sorted(
        (u, v) for v in range(g.n) for u in g.in_neighbors(v).tolist()
    )
    assert out_pairs == in_pairs
    assert g.m == len(out_pairs)
    assert sum(len(row) for row in g.out_adj) == g.m
    assert sum(len(row) for row in g.in_adj) == g.m


class TestParse:
    def test_triangle(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n2 0\n")
        assert g.n == 3 and g.m == 3
        assert list(g.edges()) == [(0, 1), (1, 2), (2, 0)]
        assert_mirror_consistent(g)

    def test_antiparallel_pair_accepted(self):
        g = parse_edge_list("2 2\n0 1\n1 0\n")
        assert g.m == 2
        assert g.has_edge(0, 1) and g.has_edge(1, 0)

    def test_duplicate_edge_rejected_with_line(self):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("2 2\n0 1\n0 1\n")
        assert exc.value.line == 3
        assert "duplicate" in str(exc.value)

    def test_self_loop_rejected(self):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("2 1\n1 1\n")
        assert exc.value.line == 2

    def test_vertex_out_of_range(self):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("2 1\n0 5\n")
        assert exc.value.line == 2

    def test_malformed_header(self):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("banana\n")
        assert exc.value.line == 1

    def test_edge_count_mismatch(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("3 2\n0 1\n")
        with pytest.raises(EdgeListError):
            parse_edge_list("3 1\n0 1\n1 2\n")

    def test_comments_and_blanks_skipped_in_line_numbers(self):
        g = parse_edge_list("# a comment\n3 2\n\n0 1\n1 2\n")
        assert g.m == 2
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("# a comment\n2 2\n0 1\n0 1\n")
        assert exc.value.line == 4

    def test_empty_graph(self):
        g = parse_edge_list("1 0\n")
        assert g.n == 1 and g.m == 0

    @given(digraphs())
    def test_round_trip(self, g):
        again = parse_edge_list(write_edge_list(g))
        assert again == g
        assert again.out_adj == g.out_adj


class TestComplete:
    def test_two_vertices(self):
        g = gen_complete_digraph(2)
        assert sorted(g.edges()) == [(0, 1), (1, 0)]
        assert all(d == 1 for d in g.out_degrees)
        assert all(d == 1 for d in g.in_degrees)

    def test_five_vertices(self):
        g = gen_complete_digraph(5)
        assert g.m == 20
        assert all(d == 4 for d in g.out_degrees)

    def test_single_vertex(self):
        g = gen_complete_digraph(1)
        assert g.n == 1 and g.m == 0

    def test_invalid(self):
        with pytest.raises(ValueError):
            gen_complete_digraph(0)

    def test_mirror_consistency(self):
        assert_mirror_consistent(gen_complete_digraph(6))
        assert_mirror_consistent(gen_regular_tournament(7, seed=3))


class TestRandomOutRegular:
    def test_forced_complete(self):
        assert gen_random_out_regular(5, 4, seed=9) == gen_complete_digraph(5)

    def test_deterministic_and_regular(self):
        g1 = gen_random_out_regular(100, 6, seed=7)
        g2 = gen_random_out_regular(100, 6, seed=7)
        assert g1 == g2
        assert g1.m == 600
        assert min_out_degree(g1) == 6

    def test_different_seeds_differ(self):
        assert gen_random_out_regular(60, 5, seed=1) != gen_random_out_regular(
            60, 5, seed=2
        )

    def test_rows_distinct_and_no_self(self):
        # Exercise both sampling regimes.
        for n, d in [(200, 3), (30, 20), (12, 10)]:
            g = gen_random_out_regular(n, d, seed=5)
            for v in range(n):
                row = g.out_neighbors(v).tolist()
                assert len(row) == d
                assert len(set(row)) == d
                assert v not in row
            assert_mirror_consistent(g)

    def test_d_too_large(self):
        with pytest.raises(ValueError):
            gen_random_out_regular(3, 3, seed=0)


class TestRegularTournament:
    def test_three_vertices(self):
        g = gen_regular_tournament(3, seed=0)
        assert g.m == 3
        assert all(d == 1 for d in g.out_degrees)
        assert all(d == 1 for d in g.in_degrees)

    def test_seven_vertices(self):
        g = gen_regular_tournament(7, seed=11)
        assert g.m == 21
        assert all(d == 3 for d in g.out_degrees)
        assert all(d == 3 for d in g.in_degrees)

    def test_exactly_one_orientation_per_pair(self):
        g = gen_regular_tournament(9, seed=2)
        edges = set(g.edges())
        for u in range(9):
            for v in range(u + 1, 9):
                assert ((u, v) in edges) != ((v, u) in edges)

    def test_even_order_rejected(self):
        with pytest.raises(ValueError):
            gen_regular_tournament(4, seed=0)

    def test_seed_relabels(self):
        assert gen_regular_tournament(11, seed=0) != gen_regular_tournament(
            11, seed=1
        )


class TestExtract:
    def test_identity_on_exact(self):
        g = gen_complete_digraph(5)
        assert extract_exact_outdegree_subgraph(g, 4) == g

    def test_k6_keeps_first_four(self):
        g = gen_complete_digraph(6)
        sub = extract_exact_outdegree_subgraph(g, 4)
        assert sub.m == 24
        for v in range(6):
            expected = [u for u in range(6) if u != v][:4]
            assert sub.out_neighbors(v).tolist() == expected
        assert_mirror_consistent(sub)

    def test_insufficient(self):
        tri = parse_edge_list("3 3\n0 1\n1 2\n2 0\n")
        with pytest.raises(InsufficientOutDegree) as exc:
            extract_exact_outdegree_subgraph(tri, 2)
        assert exc.value.vertex == 0

    @given(digraphs(min_n=2, max_n=9), st.integers(0, 3))
    def test_subset_and_exact_degree(self, g, d):
        if int(g.out_degrees.min()) < d:
            with pytest.raises(InsufficientOutDegree):
                extract_exact_outdegree_subgraph(g, d)
            return
        sub = extract_exact_outdegree_subgraph(g, d)
        assert set(sub.edges()) <= set(g.edges())
        assert all(deg == d for deg in sub.out_degrees)
        assert_mirror_consistent(sub)


class TestDegrees:
    def test_min_out_degree_examples(self):
        assert min_out_degree(gen_complete_digraph(5)) == 4
        assert min_out_degree(parse_edge_list("3 3\n0 1\n1 2\n2 0\n")) == 1
        assert min_out_degree(gen_complete_digraph(1)) == 0

    def test_empty_graph_rejected(self):
        g = Digraph.from_edges(0, [])
        with pytest.raises(ValueError):
            min_out_degree(g)

    def test_degree_profile(self):
        g = parse_edge_list("3 2\n0 1\n2 1\n")
        prof = degree_profile(g)
        assert prof.out_deg == (1, 0, 1)
        assert prof.in_deg == (0, 2, 0)
        assert prof.min_out == 0
        assert prof.max_in == 2

    @given(digraphs())
    def test_degree_sums(self, g):
        assert int(g.out_degrees.sum()) == g.m
        assert int(g.in_degrees.sum()) == g.m


class TestInNeighborMap:
    @given(digraphs(), st.data())
    def test_matches_in_neighbors(self, g, data):
        targets = data.draw(
            st.lists(st.integers(0, g.n - 1), max_size=4, unique=True)
        )
        got = g.in_neighbor_map(targets)
        for t in targets:
            assert got[t].tolist() == g.in_neighbors(t).tolist()
