import random

import pytest

from tonelab.coloring import DomainError, ToneColoring, kappa, verify
from tonelab.exact import Infeasible, exact_tau, independence_number, t_tone_colorable
from tonelab.generators import random_forest, random_tree
from tonelab.graph import Graph, complete_graph, max_degree, path_graph, star_graph
from tonelab.trees import (
    NotAForest,
    Stuck,
    color_forest_2tone,
    forest_independence_number,
    greedy_t_tone_forest,
    min_greedy_palette,
    root_forest,
)


class TestRootForest:
    def test_bfs_order_parents_first(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4)])
        rooted = root_forest(g)
        pos = {v: i for i, v in enumerate(rooted.bfs_order)}
        for v, p in enumerate(rooted.parent):
            if p is not None:
                assert pos[p] < pos[v]

    def test_rejects_cycle(self):
        from tonelab.graph import cycle_graph

        with pytest.raises(NotAForest):
            root_forest(cycle_graph(4))


class TestColorForest2Tone:
    def test_k2_canonical(self):
        col = color_forest_2tone(complete_graph(2))
        assert col.k == 4
        assert col.labels == [(1, 2), (3, 4)]

    def test_star3_needs_5(self):
        g = star_graph(3)
        col = color_forest_2tone(g)
        assert col.k == 5 == kappa(3)
        assert bool(verify(g, col))
        assert t_tone_colorable(g, 2, 4) == Infeasible(2, 4)

    def test_p3(self):
        col = color_forest_2tone(path_graph(3))
        assert col.k == 5 == exact_tau(path_graph(3), 2)
        assert bool(verify(path_graph(3), col))

    def test_edgeless_rejected(self):
        with pytest.raises(DomainError):
            color_forest_2tone(Graph(4, []))

    def test_non_forest_rejected(self):
        from tonelab.graph import cycle_graph

        with pytest.raises(NotAForest):
            color_forest_2tone(cycle_graph(5))

    def test_fuzz_never_fails_and_is_optimal_palette(self):
        rng = random.Random(55)
        for trial in range(400):
            n = rng.randint(2, 3000)
            g = random_forest(n, rng.getrandbits(40))
            if g.m == 0:
                continue
            col = color_forest_2tone(g)
            assert col.k == kappa(max_degree(g))
            assert bool(verify(g, col))

    def test_multi_component_share_palette(self):
        g = Graph(6, [(0, 1), (2, 3), (4, 5)])
        col = color_forest_2tone(g)
        assert col.k == 4
        assert col.labels[0] == col.labels[2] == col.labels[4] == (1, 2)


class TestGreedyTToneForest:
    def test_k2_t3(self):
        result = greedy_t_tone_forest(complete_graph(2), 3, 6)
        assert isinstance(result, ToneColoring)
        assert result.labels == [(1, 2, 3), (4, 5, 6)]

    def test_star_stuck_below_optimum(self):
        g = star_graph(6)
        tau3 = exact_tau(g, 3)
        result = greedy_t_tone_forest(g, 3, tau3 - 1)
        assert isinstance(result, Stuck)

    def test_p5_escalation_reaches_at_least_exact(self):
        g = path_graph(5)
        tau3 = exact_tau(g, 3)
        k = min_greedy_palette(g, 3)
        assert k >= tau3
        result = greedy_t_tone_forest(g, 3, k)
        assert isinstance(result, ToneColoring)
        assert bool(verify(g, result))

    def test_rejects_cycles(self):
        from tonelab.graph import cycle_graph

        with pytest.raises(NotAForest):
            greedy_t_tone_forest(cycle_graph(4), 2, 6)

    def test_outputs_verify(self):
        rng = random.Random(60)
        for _ in range(30):
            g = random_tree(rng.randint(2, 60), rng.getrandbits(32))
            t = rng.randint(2, 4)
            k = min_greedy_palette(g, t)
            result = greedy_t_tone_forest(g, t, k)
            assert isinstance(result, ToneColoring)
            assert bool(verify(g, result))


class TestForestIndependenceNumber:
    def test_small_cases(self):
        assert forest_independence_number(path_graph(4)) == 2
        assert forest_independence_number(star_graph(5)) == 5
        assert forest_independence_number(Graph(3, [])) == 3

    def test_matches_exact_solver(self):
        rng = random.Random(62)
        for _ in range(40):
            g = random_forest(rng.randint(1, 14), rng.getrandbits(32))
            assert forest_independence_number(g) == independence_number(g)


class TestMinGreedyPalette:
    def test_k2(self):
        assert min_greedy_palette(complete_graph(2), 2) == 4

    def test_p3_matches_exact(self):
        assert min_greedy_palette(path_graph(3), 2) == 5 == exact_tau(path_graph(3), 2)

    def test_single_edge_t3(self):
        assert min_greedy_palette(complete_graph(2), 3) == 6

    def test_edgeless(self):
        assert min_greedy_palette(Graph(5, []), 3) == 3

    def test_upper_bounds_exact_tau(self):
        rng = random.Random(63)
        for _ in range(15):
            g = random_tree(rng.randint(2, 8), rng.getrandbits(32))
            for t in (2, 3):
                assert min_greedy_palette(g, t) >= exact_tau(g, t)
