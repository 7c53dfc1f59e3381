import json
import random

import pytest

from metricdim.enumerator import (
    ENUMERATION_HARD_LIMIT,
    ENUMERATION_LIMIT,
    SWEEP_N_MIN,
    THEOREM_CHECKS,
    canonical_form,
    canonical_graph6,
    canonical_relabeling,
    enumerate_connected,
    sweep,
)
from metricdim.graph_core import (
    SizeLimitError,
    cycle_graph,
    graph6_encode,
    is_connected,
    path_graph,
    relabeled,
    star_graph,
)
from oracles import brute_canonical_graph6, random_connected_graph

# one representative per isomorphism class of connected graphs
EXPECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


class TestCanonicalForm:
    def test_known_strings(self):
        assert canonical_graph6(path_graph(3)) == "BW"
        assert canonical_graph6(cycle_graph(4)) == "C]"

    def test_canonical_relabeling_is_permutation(self):
        order = canonical_relabeling(cycle_graph(4))
        assert sorted(order) == [0, 1, 2, 3]

    def test_invariant_under_relabeling(self):
        rng = random.Random(7)
        for G in (path_graph(5), cycle_graph(6), star_graph(4)):
            base = canonical_graph6(G)
            for _ in range(10):
                order = list(range(G.n))
                rng.shuffle(order)
                assert canonical_graph6(relabeled(G, order)) == base

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_brute_force(self, n):
        for G in enumerate_connected(n):
            assert canonical_graph6(G) == brute_canonical_graph6(G)

    def test_matches_brute_force_random_n6(self):
        rng = random.Random(11)
        for _ in range(15):
            G = random_connected_graph(rng, 6)
            assert canonical_graph6(G) == brute_canonical_graph6(G)

    def test_form_equality(self):
        a = canonical_form(cycle_graph(4))
        b = canonical_form(relabeled(cycle_graph(4), [2, 0, 3, 1]))
        assert a == b
        assert hash(a) == hash(b)
        assert a != canonical_form(path_graph(4))


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 8))
    def test_class_counts(self, n):
        assert len(enumerate_connected(n)) == EXPECTED_COUNTS[n]

    def test_class_count_n8(self):
        # the one heavyweight case: ~1 minute, cached for the whole session
        assert len(enumerate_connected(8)) == EXPECTED_COUNTS[8]

    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_connected_no_duplicates(self, n):
        graphs = enumerate_connected(n)
        forms = [canonical_graph6(G) for G in graphs]
        assert all(is_connected(G) for G in graphs)
        assert len(set(forms)) == len(forms)
        assert [graph6_encode(G) for G in graphs] == sorted(forms)

    def test_every_class_already_canonical(self):
        for G in enumerate_connected(5):
            assert graph6_encode(G) == canonical_graph6(G)

    def test_size_limits(self):
        with pytest.raises(SizeLimitError):
            enumerate_connected(ENUMERATION_LIMIT + 1)
        with pytest.raises(SizeLimitError):
            enumerate_connected(ENUMERATION_HARD_LIMIT + 1, allow_large=True)
        with pytest.raises(SizeLimitError):
            enumerate_connected(0)


class TestSweeps:
    def test_unknown_id(self):
        with pytest.raises(KeyError):
            sweep("no-such-theorem", 5)

    def test_range_validated_before_work(self):
        with pytest.raises(SizeLimitError):
            sweep("tuple-lemma", ENUMERATION_LIMIT + 1)

    @pytest.mark.parametrize("theorem_id", sorted(THEOREM_CHECKS))
    def test_all_pass_through_n6(self, theorem_id):
        rep = sweep(theorem_id, 6)
        assert rep.passed, rep.failures[:3]
        assert rep.n_min == SWEEP_N_MIN
        assert rep.n_max == 6
        assert rep.graphs_checked == 2 + 6 + 21 + 112
        assert rep.counts_by_n == {3: 2, 4: 6, 5: 21, 6: 112}
        assert rep.solver_budget_exhaustions == 0

    def test_explore_data(self):
        rep = sweep("clique-vs-edim-explore", 6)
        assert rep.data == {"max_clique_by_edim": {"1": 2, "2": 3, "3": 4, "4": 5, "5": 6}}

    def test_summary_line(self):
        rep = sweep("char1-equiv", 5)
        assert rep.summary_line() == "char1-equiv: 29 graphs, n=3..5, PASS"

    def test_json_sorted_and_timing_free(self):
        rep = sweep("char1-equiv", 5)
        text = rep.to_json()
        payload = json.loads(text)
        assert list(payload) == sorted(payload)
        assert "elapsed_ms" not in payload
        assert payload["schema_version"] == 1
        assert payload["counts_by_n"] == {"3": 2, "4": 6, "5": 21}
        timed = json.loads(rep.to_json(include_timing=True))
        assert "elapsed_ms" in timed

    def test_thread_count_does_not_change_output(self):
        for theorem_id in ("char2-equiv", "edge-bound-new", "clique-vs-edim-explore"):
            solo = sweep(theorem_id, 6, threads=1).to_json()
            quad = sweep(theorem_id, 6, threads=4).to_json()
            assert solo == quad
