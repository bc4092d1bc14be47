import unittest

import numpy as np
from hypothesis import given, settings

from graphinsight import *

from .appendix import GRAPH_A, graphs, random_graphs, triangle


def dense_pagerank(g, damping=0.85, iterations=5000):
    index = {v: i for i, v in enumerate(g.nodes)}
    n = len(g.nodes)
    m = np.zeros((n, n))
    for e in g.edges:
        arcs = [(e.u, e.v)] if g.directed else [(e.u, e.v), (e.v, e.u)]
        for a, b in arcs:
            m[index[b], index[a]] += 1
    out = m.sum(axis=0)
    for j in range(n):
        m[:, j] = m[:, j] / out[j] if out[j] else 1 / n
    pr = np.full(n, 1 / n)
    for _ in range(iterations):
        pr = damping * m @ pr + (1 - damping) / n
    return {v: pr[index[v]] for v in g.nodes}


class TestGraph(unittest.TestCase):
    def test_rejects_unknown_endpoint(self):
        with self.assertRaises(GraphError):
            Graph(False, (0, 1), ((0, 2, 1),))

    def test_rejects_zero_weight(self):
        with self.assertRaises(GraphError):
            Graph.from_edges([(0, 1, 0)])

    def test_rejects_duplicate_nodes(self):
        with self.assertRaises(GraphError):
            Graph(False, (0, 0), ())

    def test_degree_and_neighbors(self):
        self.assertEqual(degree(GRAPH_A, 12), 6)
        self.assertEqual(neighbors(GRAPH_A, 12), [7, 8, 9, 10, 11, 13])
        self.assertEqual(neighbors(triangle(), 0), [1, 2])

    def test_isolated_node(self):
        g = Graph(False, (0, 1, 5), ((0, 1, 1),))
        self.assertEqual(degree(g, 5), 0)
        self.assertEqual(neighbors(g, 5), [])

    def test_self_loop_counts_twice(self):
        g = Graph.from_edges([(3, 3, 2)])
        self.assertEqual(degree(g, 3), 2)
        self.assertEqual(neighbors(g, 3), [3])

    def test_multi_edges_count_separately(self):
        g = Graph.from_edges([(0, 1, 1), (0, 1, 4)])
        self.assertEqual(degree(g, 0), 2)
        self.assertFalse(g.is_simple())

    def test_unknown_node(self):
        with self.assertRaisesRegex(GraphError, "unknown node"):
            degree(GRAPH_A, 99)

    def test_json_keeps_edge_order(self):
        g = Graph.from_edges([(2, 1, 3), (0, 1, 1), (1, 1, 2)])
        again = Graph.loads(g.dumps())
        self.assertEqual(again, g)
        self.assertEqual(again.dumps(), g.dumps())
        self.assertEqual([tuple(e) for e in again.edges], [(2, 1, 3), (0, 1, 1), (1, 1, 2)])

    @given(graphs())
    def test_degree_sum(self, g):
        self.assertEqual(sum(g.degree(v) for v in g.nodes), 2 * len(g.edges))


class TestPageRank(unittest.TestCase):
    def test_empty_graph(self):
        with self.assertRaisesRegex(GraphError, "empty graph"):
            pagerank(Graph(False, (), ()))

    def test_single_node(self):
        pr = pagerank(Graph(False, (0,), ()))
        self.assertAlmostEqual(pr[0], 1.0, places=12)

    def test_single_edge(self):
        pr = pagerank(Graph.from_edges([(0, 1, 1)]))
        self.assertAlmostEqual(pr[0], 0.5, places=12)
        self.assertAlmostEqual(pr[1], 0.5, places=12)

    def test_path_matches_dense_iteration(self):
        g = Graph.from_edges([(0, 1, 1), (1, 2, 1)])
        pr = pagerank(g, max_iter=1000, tol=1e-15)
        expected = dense_pagerank(g)
        for v in g.nodes:
            self.assertAlmostEqual(pr[v], expected[v], delta=1e-12)

    def test_small_graphs_match_dense_iteration(self):
        for g in random_graphs(20, seed=3):
            pr = pagerank(g, max_iter=1000, tol=1e-14)
            expected = dense_pagerank(g)
            for v in g.nodes:
                self.assertLess(abs(pr[v] - expected[v]), 1e-8)

    def test_directed_dangling_nodes(self):
        g = Graph.from_edges([(0, 1, 1), (1, 2, 1)], directed=True)
        pr = pagerank(g, max_iter=1000, tol=1e-15)
        expected = dense_pagerank(g)
        for v in g.nodes:
            self.assertAlmostEqual(pr[v], expected[v], delta=1e-10)

    @given(graphs(max_nodes=15))
    @settings(max_examples=60)
    def test_probability_vector(self, g):
        pr = pagerank(g)
        self.assertAlmostEqual(sum(pr.scores.values()), 1.0, delta=1e-9)
        floor = (1 - pr.damping) / len(g.nodes)
        for s in pr.scores.values():
            self.assertGreaterEqual(s, floor - 1e-12)

    def test_more_iterations_never_move_away(self):
        for g in random_graphs(10, seed=5):
            fixed = pagerank(g, max_iter=2000, tol=0)
            previous = None
            for k in range(1, 15):
                pr = pagerank(g, max_iter=k, tol=0)
                dist = sum(abs(pr[v] - fixed[v]) for v in g.nodes)
                if previous is not None:
                    self.assertLessEqual(dist, previous + 1e-12)
                previous = dist

    def test_ranked_ties_by_id(self):
        pr = pagerank(triangle())
        self.assertEqual(pr.ranked(), [0, 1, 2])


if __name__ == "__main__":
    unittest.main()
