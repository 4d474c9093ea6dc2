import itertools
import math
import zlib

import pytest

from tonelab.generators import (
    DegreeSequence,
    HalfEdgePairing,
    OddDegreeSum,
    configuration_model,
    gnp,
    is_typical,
    planted_hubs,
    random_forest,
    random_tree,
    random_tree_with_max_degree,
    _decode_pruefer,
)
from tonelab.graph import Graph, bfs_ball, components, is_forest, max_degree


class TestGnp:
    def test_p_zero_edgeless(self):
        assert gnp(30, 0.0, 1).m == 0

    def test_p_one_complete(self):
        g = gnp(12, 1.0, 1)
        assert g.m == 12 * 11 // 2

    def test_deterministic(self):
        assert gnp(100, 0.07, 9) == gnp(100, 0.07, 9)
        assert gnp(100, 0.07, 9) != gnp(100, 0.07, 10)

    def test_single_vertex(self):
        assert gnp(1, 0.5, 0).n == 1

    def test_edge_count_within_3_sigma(self):
        # binomial mean/variance over 200 seeds on a sparse instance
        n, p, samples = 10_000, 3 / 10_000, 200
        pairs = n * (n - 1) // 2
        mean = pairs * p
        sigma = math.sqrt(pairs * p * (1 - p))
        total = sum(gnp(n, p, seed).m for seed in range(samples))
        observed = total / samples
        assert abs(observed - mean) <= 3 * sigma / math.sqrt(samples)

    def test_validation(self):
        with pytest.raises(ValueError):
            gnp(0, 0.5, 1)
        with pytest.raises(ValueError):
            gnp(5, 1.5, 1)


class TestRandomTree:
    def test_tiny(self):
        assert random_tree(1, 0).n == 1
        assert random_tree(2, 0).edges() == [(0, 1)]

    def test_is_spanning_tree(self):
        for seed in range(50):
            g = random_tree(40, seed)
            assert g.m == 39 and is_forest(g) and len(components(g)) == 1

    def test_decoder_is_a_bijection_n5(self):
        seen = set()
        for seq in itertools.product(range(5), repeat=3):
            edges = frozenset(
                tuple(sorted(e)) for e in _decode_pruefer(list(seq), 5)
            )
            g = Graph(5, edges)
            assert is_forest(g) and len(components(g)) == 1
            seen.add(edges)
        assert len(seen) == 125  # Cayley: 5^3 labeled trees

    def test_uniformity_via_bucket_counts(self):
        # exact bucket probabilities from enumerating all 8^6 labeled trees,
        # then 10^4 samples checked bucket-by-bucket at 5 sigma
        n, buckets, samples = 8, 16, 10_000

        def bucket(g: Graph) -> int:
            payload = repr(tuple(g.edges())).encode()
            return zlib.crc32(payload) % buckets

        counts = [0] * buckets
        for seq in itertools.product(range(n), repeat=n - 2):
            counts[bucket(Graph(n, _decode_pruefer(list(seq), n)))] += 1
        total_trees = n ** (n - 2)
        observed = [0] * buckets
        for seed in range(samples):
            observed[bucket(random_tree(n, seed))] += 1
        for b in range(buckets):
            p = counts[b] / total_trees
            sigma = math.sqrt(samples * p * (1 - p))
            assert abs(observed[b] - samples * p) <= 5 * sigma


class TestRandomForest:
    def test_forest(self):
        for seed in range(30):
            g = random_forest(50, seed)
            assert is_forest(g)


class TestRandomTreeWithMaxDegree:
    def test_realizes_delta_exactly(self):
        for delta in (2, 5, 9):
            g = random_tree_with_max_degree(40, delta, 3)
            assert max_degree(g) == delta
            assert is_forest(g) and len(components(g)) == 1

    def test_validation(self):
        with pytest.raises(ValueError):
            random_tree_with_max_degree(3, 1, 0)
        with pytest.raises(ValueError):
            random_tree_with_max_degree(4, 5, 0)


class TestConfigurationModel:
    def test_single_edge(self):
        mg, simple = configuration_model(DegreeSequence((1, 1)), 0)
        assert mg.edges == [(0, 1)] and simple

    def test_loop(self):
        mg, simple = configuration_model(DegreeSequence((2,)), 0)
        assert mg.edges == [(0, 0)] and not simple
        assert mg.degree(0) == 2  # loop counts twice

    def test_odd_sum_rejected(self):
        with pytest.raises(OddDegreeSum):
            DegreeSequence((1, 1, 1))

    def test_degree_preservation_fuzz(self):
        import random as _r

        rng = _r.Random(10)
        for trial in range(200):
            n = rng.randint(1, 12)
            degs = [rng.randint(0, 5) for _ in range(n)]
            if sum(degs) % 2:
                degs[0] += 1
            mg, _ = configuration_model(DegreeSequence(tuple(degs)), trial)
            assert mg.degrees() == degs
            loop_aware = [mg.degree(v) for v in range(n)]
            assert loop_aware == degs

    def test_triangle_sequence_simple_probability(self):
        # enumeration oracle: all 15 perfect matchings on 6 points
        points = list(range(6))
        vertex_of = lambda pt: pt // 2

        def matchings(pts):
            if not pts:
                yield []
                return
            a = pts[0]
            for i in range(1, len(pts)):
                b = pts[i]
                rest = pts[1:i] + pts[i + 1 :]
                for m in matchings(rest):
                    yield [(a, b)] + m

        all_matchings = list(matchings(points))
        assert len(all_matchings) == 15
        simple = 0
        for m in all_matchings:
            edges = [(vertex_of(a), vertex_of(b)) for a, b in m]
            from tonelab.graph import MultiGraph

            if MultiGraph(3, edges).is_simple():
                simple += 1
        assert simple == 8  # the triangle realizations

    def test_pairing_type_collapses(self):
        pairing = HalfEdgePairing((0, 2, 4, 6), ((0, 2), (1, 4), (3, 5)))
        mg = pairing.to_multigraph()
        assert sorted(mg.edges) == [(0, 1), (0, 2), (1, 2)]


class TestIsTypical:
    def test_all_zero_fails_first_property(self):
        ok, (p1, p2, p3) = is_typical(DegreeSequence((0,) * 10), 1.0, 10)
        assert not ok and not p1

    def test_too_large_max_fails_second(self):
        n = 100
        d = math.ceil(math.log(n)) + 1
        degs = [d] * n
        if sum(degs) % 2:
            degs[0] += 1
        ok, (p1, p2, p3) = is_typical(DegreeSequence(tuple(degs)), 1.0, n)
        assert not ok and not p2

    def test_engineered_typical_sequence(self):
        n = 10**6
        degs = [2] * (n - 1) + [10]
        ok, verdicts = is_typical(DegreeSequence(tuple(degs)), 2.0, n)
        assert ok and all(verdicts)


class TestPlantedHubs:
    def test_structure(self):
        g = planted_hubs(3, 12, 9)
        assert is_forest(g) and len(components(g)) == 1
        degrees = sorted((len(a) for a in g.adjacency), reverse=True)
        assert degrees[:3] == [12, 12, 12]
        assert degrees[3] <= 2
        d0 = bfs_ball(g, 0, g.n)
        assert d0[1] == 9 and d0[2] == 18

    def test_single_hub_is_star(self):
        g = planted_hubs(1, 5, 3)
        assert g.n == 6 and max_degree(g) == 5
