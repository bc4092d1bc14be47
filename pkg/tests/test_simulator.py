import unittest

import numpy as np

from graphinsight import *

from .appendix import GRAPH_A, GRAPH_B


perfect = PositionalBiasModel.constant(1.0)
blind = PositionalBiasModel.constant(0.0)


def prompt_for(description, task, facts=()):
    retrieval = Retrieval(node_hits=frozenset(facts))
    return assemble_prompt(description, retrieval, task.question, task.instruction)


def answer_of(text, task):
    return parse_answer(text, task.answer_type)


class TestPerfectRecall(unittest.TestCase):
    def check(self, g, describe):
        for seed in range(3):
            for task in generate_tasks(g, Tasks.benchmark_kinds(), seed=seed):
                text = simulate_llm(prompt_for(describe(g), task), perfect, seed)
                with self.subTest(kind=task.kind, params=task.params):
                    self.assertEqual(answer_of(text, task), task.truth)

    def test_sequential(self):
        for g in (GRAPH_A, GRAPH_B):
            self.check(g, render_raw)

    def test_adjacency_list(self):
        self.check(GRAPH_B, lambda g: render_structural(g, "adjacency_list"))

    def test_adjacency_matrix(self):
        self.check(GRAPH_A, lambda g: render_structural(g, "adjacency_matrix"))

    def test_generated_multigraph(self):
        cfg = GenConfig(min_nodes=15, max_nodes=30, self_loop_prob=0.2, multi_edge_prob=0.2, seed=8)
        g = generate_graph(cfg)
        self.check(g, render_raw)
        self.check(g, lambda g: render_structural(g, "adjacency_list"))

    def test_parallel_edges_keep_listed_order(self):
        g = Graph.from_edges([(0, 1, 5), (0, 1, 2), (1, 2, 3)])
        for describe in (render_raw, lambda g: render_structural(g, "adjacency_list")):
            for u, v in ((0, 1), (1, 0)):
                task = make_task(g, "edge_weight", {"u": u, "v": v}, "t")
                text = simulate_llm(prompt_for(describe(g), task), perfect)
                self.assertEqual(answer_of(text, task), Number(5))

    def test_shuffled_multigraph(self):
        cfg = GenConfig(min_nodes=15, max_nodes=30, self_loop_prob=0.2, multi_edge_prob=0.3, seed=4)
        g = generate_graph(cfg)
        order = np.random.default_rng(0).permutation(len(g.edges))
        g = Graph.from_edges([g.edges[i] for i in order], g.directed, g.nodes)
        self.check(g, render_raw)
        self.check(g, lambda g: render_structural(g, "adjacency_list"))
        self.check(g, lambda g: reorder(g, "bfs", min(g.nodes)))
        self.check(g, lambda g: reorganize(decompose(g, pagerank(g)), 4.5, 10.5)[0])

    def test_fact_copy_listed_first(self):
        g = Graph.from_edges([(0, 1, 5), (0, 1, 2), (1, 2, 3)])
        task = make_task(g, "edge_weight", {"u": 0, "v": 1}, "t")
        # the description alone remembers only the second copy
        description = "This is an undirected graph with the following edges:\nFrom node 0 to node 1 with weight 2;"
        retrieval = Retrieval(frozenset({0, 1}), edge_hits=(Edge(0, 1, 5), Edge(0, 1, 2)))
        prompt = assemble_prompt(description, retrieval, task.question, task.instruction)
        self.assertEqual(answer_of(simulate_llm(prompt, perfect), task), Number(5))


class TestNoRecall(unittest.TestCase):
    def test_neighbors_empty(self):
        task = make_task(GRAPH_A, "neighbors", {"v": 12}, "t")
        text = simulate_llm(prompt_for(render_raw(GRAPH_A), task), blind)
        self.assertEqual(text, "Answer: []")

    def test_degree_fact_wins(self):
        task = make_task(GRAPH_A, "degree", {"v": 12}, "t")
        prompt = prompt_for(render_raw(GRAPH_A), task, facts={(12, 6)})
        self.assertIn("Node 12 has degree 6.", prompt)
        self.assertEqual(answer_of(simulate_llm(prompt, blind), task), Number(6))

    def test_edge_facts_are_remembered(self):
        task = make_task(GRAPH_A, "edge_weight", {"u": 7, "v": 8}, "t")
        retrieval = Retrieval(frozenset({7}), edge_hits=(Edge(7, 8, 3),))
        prompt = assemble_prompt(render_raw(GRAPH_A), retrieval, task.question, task.instruction)
        self.assertEqual(answer_of(simulate_llm(prompt, blind), task), Number(3))


class TestBehaviour(unittest.TestCase):
    def test_deterministic(self):
        psi = PositionalBiasModel(0.95, 0.2, 0.95)
        for task in generate_tasks(GRAPH_B):
            prompt = prompt_for(render_raw(GRAPH_B), task)
            self.assertEqual(simulate_llm(prompt, psi, 3), simulate_llm(prompt, psi, 3))

    def test_seed_changes_recall(self):
        psi = PositionalBiasModel(0.9, 0.5, 0.9)
        task = make_task(GRAPH_A, "neighbors", {"v": 7}, "t")
        prompt = prompt_for(render_raw(GRAPH_A), task)
        answers = {simulate_llm(prompt, psi, seed) for seed in range(10)}
        self.assertGreater(len(answers), 1)

    def test_unrecognized_question(self):
        prompt = render_raw(GRAPH_A).text + "\n\nQ: What is the colour of node 3?"
        self.assertEqual(simulate_llm(prompt, perfect), refusal)
        self.assertEqual(simulate_llm("no question at all", perfect), refusal)

    def test_recognize_every_kind(self):
        for kind in Tasks.kinds.values():
            params = {p: 2 for p in kind.params}
            if "nodes" in params:
                params["nodes"] = [1, 4, 9]
            if "u" in params:
                params["u"] = 11
            found, got = recognize(kind.render(**params))
            with self.subTest(kind=kind.name):
                self.assertIs(found, kind)
                self.assertEqual(got, params)

    def test_steps(self):
        description = render_raw(GRAPH_B)
        question = Tasks.get("frontier_neighbors").render(nodes=[8, 9])
        prompt = assemble_prompt(description, Retrieval(), question)
        self.assertEqual(simulate_llm(prompt, perfect), "Answer: [7, 8, 9, 10, 11, 12, 13]")
        question = Tasks.get("node_degrees").render(nodes=[0, 7])
        prompt = assemble_prompt(description, Retrieval(), question)
        self.assertEqual(simulate_llm(prompt, perfect), "Answer: [(0, 6), (7, 6)]")

    def test_recall_shrinks_with_bias(self):
        rng = prompt_rng("x", 0)
        g = recall_graph(render_raw(GRAPH_A).text, blind, rng)
        self.assertEqual(g.edges, ())
        g = recall_graph(render_raw(GRAPH_A).text, perfect, rng)
        self.assertEqual(sorted(map(tuple, g.edges)), sorted(map(tuple, GRAPH_A.edges)))


class TestRecallMonotone(unittest.TestCase):
    # answers over a remembered subgraph that can only gain from remembering more
    kinds = [
        "node_count", "has_cycle", "max_edge_weight", "direct_connection",
        "degree", "neighbors", "common_neighbors", "edge_weight",
        "connected_edges", "complete_subgraph", "neighbors_connected_to",
        "triangles", "neighbor_pairs", "edge_common_neighbors",
    ]
    low = PositionalBiasModel(0.9, 0.2, 0.9)
    high = PositionalBiasModel(0.95, 0.6, 0.95)

    def scores(self, prompt, task, bias, seeds):
        return [score(answer_of(simulate_llm(prompt, bias, s), task), task.truth) for s in seeds]

    def test_raising_recall_never_lowers_score(self):
        totals = {kind: [0.0, 0.0] for kind in self.kinds}
        for graph_seed in range(3):
            g = generate_graph(GenConfig(min_nodes=20, max_nodes=40, seed=graph_seed))
            for task in generate_tasks(g, self.kinds, per_kind=2, seed=graph_seed):
                prompt = prompt_for(render_raw(g), task)
                low = self.scores(prompt, task, self.low, range(8))
                high = self.scores(prompt, task, self.high, range(8))
                for a, b in zip(low, high):
                    with self.subTest(kind=task.kind, params=task.params):
                        self.assertGreaterEqual(b, a - 1e-12)
                totals[task.kind][0] += sum(low)
                totals[task.kind][1] += sum(high)
        for kind, (low, high) in totals.items():
            with self.subTest(kind=kind):
                self.assertGreaterEqual(high, low)

    def test_parity_answers_are_not_monotone(self):
        # a degree-2 node reads as a leaf exactly when one of its two edges is kept
        g = Graph.from_edges([(0, 1, 1), (1, 2, 1)])
        task = make_task(g, "is_leaf", {"v": 1}, "t")
        self.assertEqual(task.truth, Boolean(False))
        half = PositionalBiasModel.constant(0.5)
        prompt = prompt_for(render_raw(g), task)
        self.assertEqual(self.scores(prompt, task, blind, range(5)), [1.0] * 5)
        self.assertLess(min(self.scores(prompt, task, half, range(40))), 1.0)


if __name__ == "__main__":
    unittest.main()
