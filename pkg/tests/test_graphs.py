"""Graph core, generators, serialization, enumeration, and shape recognizers."""

import random

import networkx as nx
import pytest

from coalitions import (
    Graph,
    GraphFormatError,
    GuardExceededError,
    PreconditionError,
    build_graph,
    corona,
    emit_edgelist,
    emit_graph6,
    enumerate_labeled_graphs,
    full_vertices,
    generate,
    induced_subgraph,
    is_connected,
    is_corona_of_k1,
    is_tree,
    iter_graph6_lines,
    join,
    parse_edgelist,
    parse_graph6,
)
from coalitions.graphs import induced_connected, iter_mask, mask_from_set, set_from_mask


def random_graph(rng, n):
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph(n, [e for e in pairs if rng.random() < 0.5])


class TestGraphBasics:
    def test_edges_sorted_and_deduplicated(self):
        g = build_graph(4, [(2, 1), (0, 3), (1, 2), (3, 0), (0, 1)])
        assert g.edges == ((0, 1), (0, 3), (1, 2))
        assert g.m == 3

    def test_degree_neighbors_has_edge(self, c5):
        assert c5.degree(0) == 2
        assert c5.neighbors(0) == frozenset({1, 4})
        assert c5.has_edge(0, 4) and not c5.has_edge(0, 2)

    def test_adjacency_is_symmetric(self):
        rng = random.Random(7)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 9))
            for u, v in g.edges:
                assert g.has_edge(v, u)

    def test_equality_and_hash(self):
        a = build_graph(3, [(0, 1)])
        b = build_graph(3, [(1, 0)])
        c = build_graph(3, [(0, 2)])
        assert a == b and hash(a) == hash(b)
        assert a != c
        assert a != "not a graph"

    def test_repr_truncates_long_edge_lists(self):
        small = build_graph(3, [(0, 1)])
        assert repr(small) == "Graph(n=3, edges=[(0, 1)])"
        big = generate("complete", [7])
        assert "..." in repr(big)

    def test_rejects_self_loops_and_bad_ids(self):
        with pytest.raises(PreconditionError, match=r"self-loop"):
            build_graph(3, [(1, 1)])
        with pytest.raises(PreconditionError, match=r"out of range"):
            build_graph(3, [(0, 3)])
        with pytest.raises(PreconditionError):
            Graph(-1, [])

    def test_mask_helpers_round_trip(self):
        assert mask_from_set([0, 2, 5]) == 0b100101
        assert set_from_mask(0b100101) == frozenset({0, 2, 5})
        assert list(iter_mask(0b1101)) == [0, 2, 3]
        assert set_from_mask(0) == frozenset()


class TestConnectivity:
    def test_whole_graph(self, two_k2):
        assert is_connected(generate("path", [1]))
        assert is_connected(generate("path", [6]))
        assert not is_connected(two_k2)
        assert not is_connected(Graph(0, []))
        assert not is_connected(Graph(2, []))

    def test_induced_connected_on_masks(self, c6):
        assert induced_connected(c6, mask_from_set({0, 1, 2}))
        assert not induced_connected(c6, mask_from_set({0, 2, 4}))
        assert not induced_connected(c6, 0)

    def test_matches_networkx_on_random_graphs(self):
        rng = random.Random(23)
        for _ in range(150):
            g = random_graph(rng, rng.randint(1, 10))
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            assert is_connected(g) == nx.is_connected(h)

    def test_induced_subgraph_relabels_in_order(self, c6):
        sub, mapping = induced_subgraph(c6, {1, 2, 4, 5})
        assert sub.n == 4
        assert mapping == {1: 0, 2: 1, 4: 2, 5: 3}
        assert sub.edges == ((0, 1), (2, 3))  # edges 1-2 and 4-5 survive

    def test_induced_subgraph_rejects_foreign_vertices(self, c6):
        with pytest.raises(PreconditionError):
            induced_subgraph(c6, {0, 6})


class TestFullVerticesAndProducts:
    def test_full_vertices(self, c4):
        assert full_vertices(generate("path", [3])) == frozenset({1})
        assert full_vertices(c4) == frozenset()
        assert full_vertices(generate("complete", [4])) == frozenset({0, 1, 2, 3})
        # the one vertex of K_1 is full: degree 0 equals n - 1
        assert full_vertices(Graph(1, [])) == frozenset({0})

    def test_join_shapes(self):
        k1, k2 = Graph(1, []), generate("complete", [2])
        assert join(k2, k1) == generate("complete", [3])
        # joining two edgeless pairs gives a 4-cycle in disguise
        g = join(Graph(2, []), Graph(2, []))
        assert g.edges == ((0, 2), (0, 3), (1, 2), (1, 3))
        assert is_connected(g) and g.degree(0) == 2

    def test_join_edge_count(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 6))
            h = random_graph(rng, rng.randint(1, 6))
            assert join(g, h).m == g.m + h.m + g.n * h.n

    def test_corona_layout_is_deterministic(self):
        g = corona(generate("cycle", [3]), Graph(1, []))
        assert g.n == 6
        assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5))

    def test_corona_with_larger_attachment(self):
        g = corona(generate("path", [2]), generate("complete", [2]))
        assert g.n == 6
        # each host vertex is joined to its own K_2 copy
        assert g.has_edge(0, 2) and g.has_edge(0, 3) and g.has_edge(2, 3)
        assert g.has_edge(1, 4) and g.has_edge(1, 5) and g.has_edge(4, 5)
        assert not g.has_edge(0, 4)

    def test_corona_requires_nonempty_host(self):
        with pytest.raises(PreconditionError):
            corona(Graph(0, []), Graph(1, []))


class TestGenerate:
    @pytest.mark.parametrize(
        "family,params,n,edges",
        [
            ("path", [4], 4, ((0, 1), (1, 2), (2, 3))),
            ("cycle", [4], 4, ((0, 1), (0, 3), (1, 2), (2, 3))),
            ("complete", [3], 3, ((0, 1), (0, 2), (1, 2))),
            ("complete_bipartite", [2, 2], 4, ((0, 2), (0, 3), (1, 2), (1, 3))),
            ("star", [3], 4, ((0, 1), (0, 2), (0, 3))),
            ("friendship", [2], 5, ((0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4))),
        ],
    )
    def test_family_shapes(self, family, params, n, edges):
        g = generate(family, params)
        assert (g.n, g.edges) == (n, edges)

    def test_constraint_violations_name_the_constraint(self):
        with pytest.raises(PreconditionError, match=r"cycle needs n >= 3"):
            generate("cycle", [2])
        with pytest.raises(PreconditionError, match=r"path needs n >= 1"):
            generate("path", [0])
        with pytest.raises(PreconditionError, match=r"r, s >= 1"):
            generate("complete_bipartite", [0, 3])
        with pytest.raises(PreconditionError, match=r"unknown family"):
            generate("hypercube", [3])
        with pytest.raises(PreconditionError, match=r"takes 2 parameter"):
            generate("complete_bipartite", [3])


class TestGraph6:
    def test_known_encodings(self, c6):
        assert emit_graph6(Graph(1, [])) == "@"
        assert emit_graph6(c6) == "EhEG"
        assert emit_graph6(generate("cycle", [4])) == "Cl"

    def test_round_trip_exhaustive_small(self):
        for n in range(1, 5):
            for g in enumerate_labeled_graphs(n):
                assert parse_graph6(emit_graph6(g)) == g

    def test_round_trip_random_larger(self):
        rng = random.Random(11)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 20))
            assert parse_graph6(emit_graph6(g)) == g

    def test_matches_networkx_encoding(self):
        rng = random.Random(13)
        for _ in range(100):
            g = random_graph(rng, rng.randint(1, 12))
            h = nx.Graph()
            h.add_nodes_from(range(g.n))
            h.add_edges_from(g.edges)
            theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
            assert emit_graph6(g) == theirs

    def test_optional_prefix_is_stripped(self, c6):
        assert parse_graph6(">>graph6<<EhEG") == c6

    def test_malformed_inputs(self):
        with pytest.raises(GraphFormatError, match=r"empty"):
            parse_graph6("   ")
        with pytest.raises(GraphFormatError, match=r"outside the printable range"):
            parse_graph6("E\x1f???")
        with pytest.raises(GraphFormatError, match=r"truncated"):
            parse_graph6("EhE")
        with pytest.raises(GraphFormatError, match=r"trailing garbage"):
            parse_graph6("EhEGG")
        with pytest.raises(PreconditionError, match=r"n <= 62"):
            emit_graph6(Graph(63, []))

    def test_iter_graph6_lines_skips_noise(self):
        text = ">>graph6<<\n\nEhEG\n   \nCl\n"
        graphs = list(iter_graph6_lines(text))
        assert [g.n for g in graphs] == [6, 4]


class TestEdgeList:
    def test_round_trip(self, p6):
        assert parse_edgelist(emit_edgelist(p6)) == p6
        assert emit_edgelist(Graph(2, [])) == "2"

    def test_comments_and_blanks_ignored(self):
        text = "# a path\n\n3\n0 1\n# middle comment\n1 2\n"
        assert parse_edgelist(text) == generate("path", [3])

    @pytest.mark.parametrize(
        "text,pattern",
        [
            ("", "no vertex count"),
            ("3 4\n0 1", "expected the vertex count"),
            ("x\n0 1", "not an integer"),
            ("3\n0 1 2", "expected 'u v'"),
            ("3\n0 x", "non-integer endpoint"),
            ("3\n0 5", "out of range"),
            ("3\n1 1", "self-loop"),
        ],
    )
    def test_malformed_inputs(self, text, pattern):
        with pytest.raises(GraphFormatError, match=pattern):
            parse_edgelist(text)


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_labeled_graphs(1)) == 1
        assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
        assert sum(1 for _ in enumerate_labeled_graphs(4)) == 64
        # labeled connected counts, a classical sequence
        for n, want in [(1, 1), (2, 1), (3, 4), (4, 38), (5, 728)]:
            assert sum(1 for _ in enumerate_labeled_graphs(n, connected_only=True)) == want

    def test_no_duplicates_and_deterministic_order(self):
        once = list(enumerate_labeled_graphs(4))
        twice = list(enumerate_labeled_graphs(4))
        assert once == twice
        assert len(set(once)) == len(once)
        assert once[0].m == 0  # the edgeless graph comes first
        assert once[-1] == generate("complete", [4])

    def test_guard(self):
        with pytest.raises(GuardExceededError):
            next(enumerate_labeled_graphs(8))
        # the raised guard admits n = 8 without enumerating all of it here
        gen = enumerate_labeled_graphs(8, raise_guard=True)
        assert next(gen).n == 8
        with pytest.raises(GuardExceededError):
            next(enumerate_labeled_graphs(9, raise_guard=True))
        with pytest.raises(GuardExceededError):
            next(enumerate_labeled_graphs(0))


class TestShapeRecognizers:
    def test_is_tree(self, c4, two_k2):
        assert is_tree(generate("path", [4]))
        assert is_tree(Graph(1, []))
        assert is_tree(generate("star", [5]))
        assert not is_tree(c4)
        assert not is_tree(two_k2)  # right edge count, wrong connectivity

    def test_corona_recognizer_positives(self):
        k1 = Graph(1, [])
        assert is_corona_of_k1(generate("complete", [2]))
        assert is_corona_of_k1(generate("path", [4]))  # P_4 = K_2 with pendants
        for host in ("cycle", "path"):
            g = corona(generate(host, [4]), k1)
            assert is_corona_of_k1(g)

    def test_corona_recognizer_is_label_blind(self):
        rng = random.Random(3)
        base = corona(generate("cycle", [4]), Graph(1, []))
        for _ in range(10):
            perm = list(range(base.n))
            rng.shuffle(perm)
            relabeled = Graph(base.n, [(perm[u], perm[v]) for u, v in base.edges])
            assert is_corona_of_k1(relabeled)

    def test_corona_recognizer_negatives(self, c4, paw, two_k2):
        assert not is_corona_of_k1(c4)
        assert not is_corona_of_k1(paw)
        assert not is_corona_of_k1(generate("star", [3]))
        assert not is_corona_of_k1(two_k2)
        assert not is_corona_of_k1(generate("path", [5]))  # odd order
        # right leaf count, but one support carries two pendants
        g = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5)])
        assert not is_corona_of_k1(g)
        # right leaf count, but two leaves support each other (isolated edge)
        g = build_graph(6, [(0, 1), (2, 3), (2, 4), (3, 4), (2, 5)])
        assert not is_corona_of_k1(g)
