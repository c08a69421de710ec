import itertools
import random

import pytest

from zerolap import (
    BudgetExceededError,
    BipartitionWitness,
    Hypergraph,
    MultipartitionWitness,
    assignment_from_partition,
    count_N_pairs,
    discrepancy_scan,
    enumerate_bipartitions,
    enumerate_multipartitions,
    find_hm_bipartition,
    partition_from_assignment,
    validate_bipartition,
    validate_multipartition,
)
from zerolap.corpus import random_connected_hypergraph, random_hypergraph
from zerolap.zk_solver import ZkAssignment

from conftest import single_edge

CHAIN_COMPONENT = tuple(range(1, 8))
K4_COMPONENT = tuple(range(1, 7))


class TestValidateBipartition:
    def test_k4_even_witness_valid(self, k4_overlap):
        w = BipartitionWitness(K4_COMPONENT, (1, 2, 5), (3, 4, 6), "even")
        assert validate_bipartition(k4_overlap, w)

    def test_single_edge_hm_head(self):
        w = BipartitionWitness((1, 2, 3), (1,), (2, 3), "hm")
        assert validate_bipartition(single_edge(3), w)

    def test_k4_single_vertex_not_even(self, k4_overlap):
        w = BipartitionWitness(K4_COMPONENT, (1,), (2, 3, 4, 5, 6), "even")
        assert not validate_bipartition(k4_overlap, w)

    def test_non_partition_rejected(self, k4_overlap):
        w = BipartitionWitness(K4_COMPONENT, (1, 2), (2, 3, 4, 5, 6), "even")
        with pytest.raises(ValueError):
            validate_bipartition(k4_overlap, w)

    def test_trivial_component_vacuously_valid(self):
        h = Hypergraph(3, 4, ((1, 2, 3),))
        w = BipartitionWitness((4,), (4,), (), "odd")
        assert validate_bipartition(h, w)


class TestEnumerateBipartitions:
    def test_k4_even_exactly_three(self, k4_overlap):
        found = {
            frozenset((frozenset(w.v1), frozenset(w.v2)))
            for w in enumerate_bipartitions(k4_overlap, K4_COMPONENT, "even")
        }
        expected = {
            frozenset((frozenset({1, 2, 5}), frozenset({3, 4, 6}))),
            frozenset((frozenset({2, 3, 5}), frozenset({1, 4, 6}))),
            frozenset((frozenset({1, 3}), frozenset({2, 4, 5, 6}))),
        }
        assert found == expected

    def test_single_edge_k4_odd_four(self):
        found = enumerate_bipartitions(single_edge(4), (1, 2, 3, 4), "odd")
        assert len(found) == 4

    def test_single_edge_k4_even_three(self):
        found = enumerate_bipartitions(single_edge(4), (1, 2, 3, 4), "even")
        assert len(found) == 3

    def test_hm_is_ordered_not_quotiented(self):
        found = enumerate_bipartitions(single_edge(3), (1, 2, 3), "hm")
        assert [w.v1 for w in found] == [(1,), (2,), (3,)]

    def test_all_witnesses_validate(self, k4_overlap):
        for flavor in ("hm", "odd", "even"):
            for w in enumerate_bipartitions(k4_overlap, K4_COMPONENT, flavor):
                assert validate_bipartition(k4_overlap, w)

    def test_budget_guard(self, k4_overlap):
        with pytest.raises(BudgetExceededError):
            enumerate_bipartitions(k4_overlap, K4_COMPONENT, "even", budget=8)


class TestFindHm:
    def test_single_edge_lowest_head(self):
        w = find_hm_bipartition(single_edge(3), (1, 2, 3))
        assert w.v1 == (1,)

    def test_shared_head(self):
        h = Hypergraph(3, 5, ((1, 2, 3), (1, 4, 5)))
        w = find_hm_bipartition(h, (1, 2, 3, 4, 5))
        assert w.v1 == (1,)

    def test_complete_k3_on_four_has_none(self, k3_complete4):
        assert find_hm_bipartition(k3_complete4, (1, 2, 3, 4)) is None

    def test_chain_witness_validates(self, chain):
        w = find_hm_bipartition(chain, CHAIN_COMPONENT)
        assert w is not None
        assert validate_bipartition(chain, w)

    def test_trivial_component_gets_vacuous_witness(self):
        h = Hypergraph(3, 4, ((1, 2, 3),))
        w = find_hm_bipartition(h, (4,))
        assert w.v1 == ()

    @pytest.mark.parametrize("seed", range(8))
    def test_search_agrees_with_exhaustive_scan(self, seed):
        rng = random.Random(700 + seed)
        k = rng.choice([3, 4])
        n = rng.randint(k, 8)
        h = random_hypergraph(rng, k, n, rng.randint(1, 5))
        comp = tuple(range(1, n + 1))
        edges = h.edges
        exists = any(
            all(len(set(chosen) & set(e)) == 1 for e in edges)
            for r in range(1, n + 1)
            for chosen in itertools.combinations(range(1, n + 1), r)
        )
        w = find_hm_bipartition(h, comp)
        if exists:
            assert w is not None
            assert all(len(set(w.v1) & set(e)) == 1 for e in edges)
        else:
            assert w is None


class TestValidateMultipartition:
    def test_listed_chain_tripartitions(self, chain):
        listed = [
            ((1,), (2,), (3, 4, 5, 6, 7)),
            ((1, 2, 3), (4,), (5, 6, 7)),
            ((1, 2, 3, 4, 5), (6,), (7,)),
        ]
        for parts in listed:
            w = MultipartitionWitness(CHAIN_COMPONENT, parts, "tripartite")
            assert validate_multipartition(chain, w, "literal")
            assert validate_multipartition(chain, w, "residue")

    def test_interleaved_tripartition_valid(self, chain):
        w = MultipartitionWitness(
            CHAIN_COMPONENT, ((1, 4, 7), (2, 5), (3, 6)), "tripartite"
        )
        assert validate_multipartition(chain, w, "literal")

    def test_single_k4_edge_split_into_four_fails_lquad(self):
        w = MultipartitionWitness((1, 2, 3, 4), ((1,), (2,), (3,), (4,)), "lquad")
        h = single_edge(4)
        assert not validate_multipartition(h, w, "literal")
        assert not validate_multipartition(h, w, "residue")  # 0+1+2+3 = 6, not 0 mod 4

    def test_single_k4_edge_split_into_four_passes_slquad(self):
        w = MultipartitionWitness((1, 2, 3, 4), ((1,), (2,), (3,), (4,)), "slquad")
        h = single_edge(4)
        assert validate_multipartition(h, w, "literal")
        assert validate_multipartition(h, w, "residue")  # sum 6 == 2 mod 4

    def test_empty_part_count_constraint(self, chain):
        w = MultipartitionWitness(
            CHAIN_COMPONENT, ((1, 2, 3, 4, 5, 6, 7), (), ()), "tripartite"
        )
        assert not validate_multipartition(chain, w, "residue")

    def test_non_partition_rejected(self, chain):
        w = MultipartitionWitness(CHAIN_COMPONENT, ((1, 2), (2, 3), (4, 5, 6, 7)), "tripartite")
        with pytest.raises(ValueError):
            validate_multipartition(chain, w)


class TestEnumerateMultipartitions:
    def test_single_edge_unique_tripartition(self):
        found = enumerate_multipartitions(single_edge(3), (1, 2, 3), "tripartite")
        assert len(found) == 1
        assert found[0].parts == ((1,), (2,), (3,))

    def test_chain_thirteen_tripartitions(self, chain):
        assert len(enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite")) == 13

    def test_chain_literal_equals_residue(self, chain):
        lit = enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite", "literal")
        res = enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite", "residue")
        assert lit == res

    def test_known_witnesses_present(self, chain):
        found = enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite")
        normalized = {frozenset(frozenset(p) for p in w.parts if p) for w in found}
        assert frozenset({frozenset({1}), frozenset({2}), frozenset({3, 4, 5, 6, 7})}) in normalized
        assert frozenset({frozenset({1, 4, 7}), frozenset({2, 5}), frozenset({3, 6})}) in normalized

    def test_every_witness_validates(self, k4_overlap):
        for kind in ("lquad", "slquad"):
            for w in enumerate_multipartitions(k4_overlap, K4_COMPONENT, kind, "residue"):
                assert validate_multipartition(k4_overlap, w, "residue")

    def test_wrong_uniformity_rejected(self, chain):
        with pytest.raises(ValueError):
            enumerate_multipartitions(chain, CHAIN_COMPONENT, "lquad")

    def test_budget_guard(self, chain):
        with pytest.raises(BudgetExceededError):
            enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite", budget=100)

    @pytest.mark.parametrize("seed", range(6))
    def test_residue_count_equals_n_pairs(self, seed):
        rng = random.Random(900 + seed)
        k = rng.choice([3, 4, 5])
        n = rng.randint(k, min(k + 3, 7))
        h = random_connected_hypergraph(rng, k, n)
        comp = tuple(range(1, n + 1))
        cases = {
            3: [("tripartite", "laplacian")],
            4: [("lquad", "laplacian"), ("slquad", "signless")],
            5: [("penta", "laplacian")],
        }[k]
        for kind, operator in cases:
            found = enumerate_multipartitions(h, comp, kind, "residue")
            assert len(found) == count_N_pairs(h, operator)

    @pytest.mark.parametrize("seed", range(5))
    def test_tripartite_never_two_valued(self, seed):
        rng = random.Random(333 + seed)
        n = rng.randint(3, 7)
        h = random_connected_hypergraph(rng, 3, n)
        for w in enumerate_multipartitions(h, tuple(range(1, n + 1)), "tripartite", "residue"):
            assert sum(1 for p in w.parts if p) == 3


class TestAssignmentConversion:
    def test_distinct_values_to_parts(self):
        a = ZkAssignment(3, (1, 2, 3), (0, 1, 2))
        w = partition_from_assignment(a, "laplacian")
        assert isinstance(w, MultipartitionWitness)
        assert w.parts == ((1,), (2,), (3,))

    def test_half_turn_values_to_bipartition(self):
        a = ZkAssignment(4, (1, 2, 3, 4), (0, 2, 0, 2))
        w_lap = partition_from_assignment(a, "laplacian")
        assert isinstance(w_lap, BipartitionWitness)
        assert (w_lap.flavor, w_lap.v1) == ("even", (2, 4))
        w_sig = partition_from_assignment(a, "signless")
        assert w_sig.flavor == "odd"

    def test_constant_maps_to_none(self):
        a = ZkAssignment(5, (1, 2, 3), (0, 0, 0))
        assert partition_from_assignment(a, "laplacian") is None

    def test_round_trip_multipartition(self, chain):
        for w in enumerate_multipartitions(chain, CHAIN_COMPONENT, "tripartite"):
            a = assignment_from_partition(w)
            back = partition_from_assignment(a, "laplacian")
            assert back == w

    def test_round_trip_bipartition(self, k4_overlap):
        for w in enumerate_bipartitions(k4_overlap, K4_COMPONENT, "even"):
            a = assignment_from_partition(w, k=4)
            back = partition_from_assignment(a, "laplacian")
            assert {frozenset(back.v1), frozenset(back.v2)} == {
                frozenset(w.v1),
                frozenset(w.v2),
            }


class TestDiscrepancyScan:
    def test_tripartite_clean(self):
        assert discrepancy_scan("tripartite").clean

    def test_lquad_flags_missing_multiset(self):
        report = discrepancy_scan("lquad")
        flagged = {d.values: d for d in report.disagreements}
        assert (0, 1, 1, 2) in flagged
        entry = flagged[(0, 1, 1, 2)]
        assert entry.residue_valid and not entry.literal_valid

    def test_slquad_flags_missing_multiset(self):
        report = discrepancy_scan("slquad")
        flagged = {d.values: d for d in report.disagreements}
        assert (0, 0, 3, 3) in flagged
        assert flagged[(0, 0, 3, 3)].residue_valid
        # the monochromatic clauses are literal-valid yet miss the residue
        assert (0, 0, 0, 0) in flagged
        assert not flagged[(0, 0, 0, 0)].residue_valid

    def test_penta_flags_inconsistent_clause(self):
        report = discrepancy_scan("penta")
        flagged = {d.values: d for d in report.disagreements}
        entry = flagged[(0, 2, 2, 2, 3)]
        assert entry.literal_valid and not entry.residue_valid
