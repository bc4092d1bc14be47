import math
import unittest
from collections import Counter

import numpy as np

from graphinsight import *

from .appendix import GRAPH_A, triangle, two_triangles


def make_blocks(sizes):
    """Blocks over a path graph with the given edge counts, best first."""
    g = Graph.from_edges([(i, i + 1, 1) for i in range(sum(sizes))])
    blocks, start = [], 0
    for rank, size in enumerate(sizes):
        ids = tuple(range(start, start + size))
        blocks.append(SubgraphBlock(
            start, ids, tuple(g.edges[i] for i in ids), 1.0 / (rank + 1)
        ))
        start += size
    return g, blocks


def blocks_of(g, damping=0.85):
    return decompose(g, pagerank(g, damping))


class TestDecompose(unittest.TestCase):
    def test_star(self):
        g = Graph.from_edges([(0, i, 1) for i in range(1, 5)])
        blocks = blocks_of(g)
        self.assertEqual(len(blocks), 1)
        self.assertEqual(blocks[0].center, 0)
        self.assertEqual(blocks[0].edge_ids, (0, 1, 2, 3))

    def test_two_triangles(self):
        blocks = blocks_of(two_triangles())
        self.assertEqual(len(blocks), 4)
        self.assertEqual([b.center for b in blocks], [0, 1, 3, 4])
        self.assertEqual([len(b) for b in blocks], [2, 1, 2, 1])

    def test_blocks_partition_edges(self):
        blocks = blocks_of(GRAPH_A)
        ids = sorted(i for b in blocks for i in b.edge_ids)
        self.assertEqual(ids, list(range(len(GRAPH_A.edges))))
        importances = [b.importance for b in blocks]
        self.assertEqual(importances, sorted(importances, reverse=True))


class TestReorganize(unittest.TestCase):
    def test_regions_by_capacity(self):
        _, blocks = make_blocks([3, 2, 2, 2, 1])
        seq, layout = reorganize(blocks, 30, 20)
        self.assertEqual((layout.head_capacity, layout.tail_capacity), (3, 2))
        self.assertEqual(layout.head, (blocks[0],))
        self.assertEqual(layout.tail, (blocks[1],))
        self.assertEqual(layout.middle, tuple(blocks[2:]))
        self.assertEqual(list(seq.position_map), [0, 1, 2, 5, 6, 7, 8, 9, 3, 4])
        self.assertEqual(layout.to_json()["boundaries"], [3, 8, 10])

    def test_single_block(self):
        g = Graph.from_edges([(0, i, i) for i in range(1, 6)])
        seq, _ = reorganize(blocks_of(g))
        self.assertEqual(seq.text, render_raw(g).text)

    def test_capacity_covers_everything(self):
        _, blocks = make_blocks([3, 2, 2, 2, 1])
        seq, layout = reorganize(blocks, 60, 40)
        self.assertEqual(layout.middle, ())
        self.assertEqual(layout.blocks(), tuple(blocks))
        self.assertEqual(list(seq.position_map), list(range(10)))

    def test_zero_regions(self):
        _, blocks = make_blocks([3, 2, 2, 2, 1])
        _, layout = reorganize(blocks, 0, 0)
        self.assertEqual(layout.middle, tuple(blocks))

    def test_invalid_percentages(self):
        _, blocks = make_blocks([1, 1])
        with self.assertRaisesRegex(LayoutError, "regions exceed sequence"):
            reorganize(blocks, 60, 50)
        with self.assertRaises(LayoutError):
            reorganize(blocks, -1, 10)

    def test_idempotent(self):
        blocks = blocks_of(GRAPH_A)
        first, layout = reorganize(blocks, 20, 20)
        second, again = reorganize(blocks, 20, 20)
        self.assertEqual(first, second)
        self.assertEqual(layout, again)

    def test_random_graphs(self):
        rng = np.random.default_rng(2026)
        cfg = GenConfig(min_nodes=6, max_nodes=60)
        settings = [(4.5, 10.5), (0, 0), (20, 30), (50, 50), (10, 0)]
        for trial in range(1000):
            g = generate_graph(cfg, rng)
            blocks = blocks_of(g)
            alpha, beta = settings[trial % len(settings)]
            seq, layout = reorganize(blocks, alpha, beta)

            self.assertEqual(sorted(seq.position_map), list(range(len(g.edges))))
            self.assertEqual(
                Counter(c.rendered for c in seq.clauses),
                Counter(c.rendered for c in render_raw(g).clauses),
            )
            self.assertEqual(Counter(map(id, layout.blocks())), Counter(map(id, blocks)))
            self.assertLessEqual(layout.edge_count("head"), layout.head_capacity)
            if layout.middle:
                self.assertLessEqual(layout.edge_count("tail"), layout.tail_capacity)
            for region in (layout.head, layout.middle, layout.tail):
                ranks = [blocks.index(b) for b in region]
                self.assertEqual(ranks, sorted(ranks))


class TestImportance(unittest.TestCase):
    def test_profile_is_distribution(self):
        blocks = blocks_of(GRAPH_A)
        seq, _ = reorganize(blocks)
        profile = importance_profile(seq, blocks)
        self.assertEqual(len(profile), 42)
        self.assertAlmostEqual(sum(profile.values), 1.0)

    def test_kl_of_equal_distributions(self):
        self.assertEqual(kl_diagnostic([0.25] * 4, [1, 1, 1, 1]), 0.0)
        psi = PositionalBiasModel(0.9, 0.3, 0.9, head_frac=0.25, tail_frac=0.25)
        self.assertAlmostEqual(kl_diagnostic(psi.weights(4), psi), 0.0)

    def test_kl_value(self):
        phi = [0.4, 0.1, 0.1, 0.4]
        expected = sum(p * math.log(p / 0.25) for p in phi)
        self.assertAlmostEqual(kl_diagnostic(phi, [1, 1, 1, 1]), expected)

    def test_support_mismatch(self):
        with self.assertRaisesRegex(LayoutError, "unsupported support mismatch"):
            kl_diagnostic([0.5, 0.5], [1, 0])
        with self.assertRaises(LayoutError):
            kl_diagnostic([0.5, 0.5], [1, 1, 1])

    def test_reorganized_layout_fits_recall_curve(self):
        psi = PositionalBiasModel(0.95, 0.2, 0.95)
        rng = np.random.default_rng(7)
        cfg = GenConfig(min_nodes=50, max_nodes=150)
        checked = 0
        while checked < 20:
            g = generate_graph(cfg, rng)
            blocks = blocks_of(g)
            if len({b.importance for b in blocks}) < 2:
                continue
            seq, _ = reorganize(blocks)
            raw = importance_profile(render_raw(g), blocks)
            ordered = importance_profile(seq, blocks)
            self.assertLessEqual(kl_diagnostic(ordered, psi), kl_diagnostic(raw, psi))
            checked += 1


if __name__ == "__main__":
    unittest.main()
