"""Exact CC oracle: frozen values, witness identity, expansion, coalition graphs.

cc_number is compared against the unpruned reference witness-for-witness:
the pruned search must visit partitions in the same restricted-growth order,
so equal answers with different witnesses would mean a prune changed the
semantics, not just the speed.
"""

import random

import pytest
from reference import iter_partitions, ref_cc, ref_valid_cc_partition

from coalitions import (
    CoalitionExpansionError,
    Graph,
    GuardExceededError,
    PreconditionError,
    build_graph,
    cc_number,
    cc_partition_search,
    coalition_graph,
    connected_domatic_number,
    enumerate_labeled_graphs,
    expand_domatic_to_cc_partition,
    forms_connected_coalition,
    generate,
    is_cc_partition,
)
from conftest import small_connected


def parts(*sets):
    return [frozenset(s) for s in sets]


class TestFrozenValues:
    @pytest.mark.parametrize("maker,cc", [
        (lambda: generate("complete", [1]), 1),
        (lambda: generate("complete", [2]), 2),
        (lambda: generate("complete", [3]), 3),
        (lambda: generate("complete", [5]), 5),
        (lambda: generate("complete_bipartite", [2, 3]), 5),
        (lambda: generate("path", [3]), 0),
        (lambda: generate("path", [6]), 2),
        (lambda: generate("cycle", [4]), 4),
        (lambda: generate("cycle", [5]), 3),
        (lambda: generate("cycle", [6]), 3),
        (lambda: generate("friendship", [2]), 0),
        (lambda: generate("star", [4]), 0),
    ])
    def test_values(self, maker, cc):
        assert cc_number(maker())[0] == cc

    def test_house_value(self, house):
        assert cc_number(house)[0] == 4

    def test_frozen_witnesses(self, c4, c5, p6):
        assert cc_number(c5)[1] == parts({0, 1, 3}, {2}, {4})
        assert cc_number(p6)[1] == parts({0, 1, 2, 3, 5}, {4})
        assert cc_number(c4)[1] == parts({0}, {1}, {2}, {3})
        assert cc_number(Graph(1, []))[1] == parts({0})

    def test_zero_answers_carry_no_witness(self):
        assert cc_number(generate("path", [3])) == (0, None)
        assert cc_number(Graph(4, [(0, 1), (2, 3)])) == (0, None)


class TestAgainstReference:
    def test_exhaustive_to_n5(self):
        for n in range(1, 6):
            for g in enumerate_labeled_graphs(n):
                assert cc_number(g) == ref_cc(g)

    def test_seeded_samples_at_n6(self):
        rng = random.Random(2024)
        pairs = [(i, j) for i in range(6) for j in range(i + 1, 6)]
        for _ in range(120):
            g = Graph(6, [e for e in pairs if rng.random() < 0.5])
            assert cc_number(g) == ref_cc(g)

    def test_witnesses_validate(self):
        for g in small_connected(5):
            cc, witness = cc_number(g)
            if cc == 0:
                assert witness is None
                continue
            assert len(witness) == cc
            valid, _ = is_cc_partition(g, witness)
            assert valid


class TestRawSearch:
    def test_no_disconnected_shortcut(self, two_k2):
        # the raw engine proves the zero rather than assuming it
        assert cc_partition_search(two_k2) == (0, None)
        assert cc_number(two_k2) == (0, None)

    def test_guard_applies_before_anything_else(self):
        k13 = generate("complete", [13])
        with pytest.raises(GuardExceededError, match=r"got n=13"):
            cc_number(k13)
        with pytest.raises(GuardExceededError):
            cc_partition_search(Graph(13, []))
        # an explicit override runs; complete graphs take the singleton fast path
        cc, witness = cc_number(k13, guard=13)
        assert cc == 13 and len(witness) == 13

    def test_rejects_empty_graph(self):
        with pytest.raises(PreconditionError):
            cc_number(Graph(0, []))


class TestPredicatesAndDiagnostics:
    def test_forms_connected_coalition(self, c4):
        assert forms_connected_coalition(c4, {0}, {1})
        assert forms_connected_coalition(c4, {1}, {0})
        assert not forms_connected_coalition(c4, {0}, {2})  # union disconnected
        k3 = generate("complete", [3])
        assert not forms_connected_coalition(k3, {0}, {1})  # each is already a CDS

    def test_forms_connected_coalition_rejects_bad_pairs(self, c4):
        with pytest.raises(PreconditionError, match=r"nonempty"):
            forms_connected_coalition(c4, set(), {1})
        with pytest.raises(PreconditionError, match=r"overlap"):
            forms_connected_coalition(c4, {0, 1}, {1, 2})

    def test_diagnostics_roles(self, c4):
        valid, roles = is_cc_partition(generate("complete", [3]), parts({0}, {1}, {2}))
        assert valid and roles == ["full-singleton"] * 3

        c6 = generate("cycle", [6])
        valid, roles = is_cc_partition(c6, parts({0, 1, 2}, {3, 4, 5}))
        assert valid and roles == ["partnered(1)", "partnered(0)"]

        valid, roles = is_cc_partition(c4, parts({0, 1, 2}, {3}))
        assert not valid
        assert roles == ["illegal-CDS", "unpartnered"]

    def test_partition_must_cover_exactly(self, c4):
        with pytest.raises(PreconditionError):
            is_cc_partition(c4, parts({0, 1}, {1, 2, 3}))  # overlap
        with pytest.raises(PreconditionError):
            is_cc_partition(c4, parts({0, 1}, {2}))  # vertex 3 missing
        with pytest.raises(PreconditionError):
            is_cc_partition(c4, parts({0, 1}, set(), {2, 3}))  # empty part


class TestExpansion:
    def test_c4_from_its_domatic_witness(self, c4):
        _, domatic = connected_domatic_number(c4)
        out = expand_domatic_to_cc_partition(c4, domatic)
        assert sorted(sorted(p) for p in out) == [[0], [1], [2], [3]]

    def test_c4_from_the_coarse_partition(self, c4):
        # {V} is not a maximum domatic partition; the refinement path handles it
        out = expand_domatic_to_cc_partition(c4, parts(range(4)))
        assert sorted(sorted(p) for p in out) == [[0], [1], [2], [3]]

    def test_c6_from_the_coarse_partition(self, c6):
        out = expand_domatic_to_cc_partition(c6, parts(range(6)))
        assert sorted(sorted(p) for p in out) == [[0, 1], [2], [3, 4, 5]]

    def test_p6_exercises_the_absorb_branch(self, p6):
        out = expand_domatic_to_cc_partition(p6, parts(range(6)))
        assert sorted(sorted(p) for p in out) == [[0, 2, 3, 4, 5], [1]]

    def test_output_contract_over_small_connected_graphs(self):
        from coalitions import full_vertices

        for g in small_connected(5):
            if g.n <= 1 or full_vertices(g):
                continue
            dc, domatic = connected_domatic_number(g)
            out = expand_domatic_to_cc_partition(g, domatic)
            assert len(out) >= 2 * dc
            valid, _ = is_cc_partition(g, out)
            assert valid

    def test_preconditions(self, two_k2, c4):
        with pytest.raises(PreconditionError, match=r"order > 1"):
            expand_domatic_to_cc_partition(Graph(1, []), parts({0}))
        with pytest.raises(PreconditionError, match=r"connected"):
            expand_domatic_to_cc_partition(two_k2, parts({0, 1}, {2, 3}))
        with pytest.raises(PreconditionError, match=r"\[1\] are full"):
            expand_domatic_to_cc_partition(generate("path", [3]), parts({0, 1, 2}))
        with pytest.raises(PreconditionError, match=r"part 1 .* not a connected dominating set"):
            expand_domatic_to_cc_partition(c4, parts({0, 1}, {2}, {3}))


class TestCoalitionGraph:
    def test_c4_singletons_reproduce_the_cycle(self, c4):
        cg = coalition_graph(c4, parts({0}, {1}, {2}, {3}))
        assert cg.graph.n == 4
        assert cg.graph.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert cg.parts == (frozenset({0}), frozenset({1}), frozenset({2}), frozenset({3}))

    def test_full_singletons_stay_isolated(self):
        k3 = generate("complete", [3])
        cg = coalition_graph(k3, parts({0}, {1}, {2}))
        assert cg.graph.m == 0

    def test_two_part_coalition(self, p6):
        cg = coalition_graph(p6, parts({0, 1, 2, 3, 5}, {4}))
        assert cg.graph.edges == ((0, 1),)

    def test_rejects_invalid_partitions(self, c4):
        with pytest.raises(PreconditionError, match=r"not a valid coalition partition"):
            coalition_graph(c4, parts({0, 1, 2}, {3}))


class TestReferenceEnumeratorSanity:
    """Guards on the reference itself, so the cross-checks above mean something."""

    def test_partition_counts_are_bell_numbers(self):
        got = [sum(1 for _ in iter_partitions(n)) for n in range(6)]
        assert got == [1, 1, 2, 5, 15, 52]

    def test_reference_validator_agrees_with_package_on_random_partitions(self):
        rng = random.Random(31)
        for g in small_connected(4):
            for partition in iter_partitions(g.n):
                valid, _ = is_cc_partition(g, partition)
                assert valid == ref_valid_cc_partition(g, partition)
