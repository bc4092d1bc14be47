# Copyright 2026 The GraphInsight Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from collections import deque
from dataclasses import field
from functools import partial
from itertools import combinations
import re

from .answers import *


class OracleError(Exception):
    pass


instructions = {
    "boolean": "Answer directly in the format of 'Yes' or 'No'.",
    "number": "Answer directly with a single number.",
    "node_id": "Answer directly with the node id.",
    "node_set": "List the answers in the format of '[1, 2, ...]'.",
    "pair_set": "List the answers in the format of '[(1, 2), (3, 4), ...]'.",
    "anchored_pair_set": "List the answers in the format of '[(1, 2), (3, 4), ...]'.",
    "triple_set": "List the answers in the format of '[(1, 2, 3), (4, 5, 6), ...]'.",
    "scored_pair_list": "List the answers in the format of '[(node, degree), ...]'.",
}


def format_param(value):
    if isinstance(value, (list, tuple)):
        return f"[{', '.join(str(v) for v in value)}]"
    return str(value)


@dataclass(frozen=True)
class Kind:
    name: str
    level: str
    answer_type: str
    template: str
    composite: bool = False
    in_suite: bool = True
    func: object = field(default=None, compare=False, hash=False)

    def __str__(self):
        return self.name

    def __call__(self, g, **params):
        return self.func(g, **params)

    @property
    def params(self):
        return tuple(dict.fromkeys(re.findall(r"\{(\w+)\}", self.template)))

    @property
    def instruction(self):
        if "List the answer" in self.template:
            return None
        return instructions[self.answer_type]

    def render(self, **params):
        return self.template.format(
            **{k: format_param(v) for k, v in params.items()}
        )

    def pattern(self):
        """Regex matching rendered questions, one named group per slot."""
        parts, seen, pos = [], set(), 0
        for m in re.finditer(r"\{(\w+)\}", self.template):
            parts.append(re.escape(self.template[pos:m.start()]))
            name = m.group(1)
            if name in seen:
                parts.append(f"(?P={name})")
            elif name == "nodes":
                parts.append(r"(?P<nodes>\[[\d,\s]*\])")
            else:
                parts.append(rf"(?P<{name}>\d+)")
            seen.add(name)
            pos = m.end()
        parts.append(re.escape(self.template[pos:]))
        return re.compile("".join(parts))


class Tasks:
    kinds = {}

    @classmethod
    def add(cls, name, answer_type, template, level, composite=False, suite=True):
        def decorator(func):
            kind = Kind(name, level, answer_type, template, composite, suite, func)
            cls.kinds[name] = kind
            return staticmethod(func)
        return decorator

    @classmethod
    def get(cls, name):
        kind = cls.kinds.get(name)
        if kind is None:
            raise OracleError(f'Unknown task kind "{name}".')
        return kind

    @classmethod
    def suite(cls):
        return [k.name for k in cls.kinds.values() if k.in_suite]

    @classmethod
    def benchmark_kinds(cls):
        return [k.name for k in cls.kinds.values() if k.level != "step"]


macro = partial(Tasks.add, level="macro")
micro = partial(Tasks.add, level="micro")
composite = partial(Tasks.add, level="micro", composite=True)
step = partial(Tasks.add, level="step", suite=False)


def adjacent(g, v):
    g.check_node(v)
    return g.adjacency[v]


def distances(g, source):
    g.check_node(source)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in sorted(g.adjacency[x]):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def k_order(g, v, k):
    if k < 1:
        raise OracleError("k must be at least 1")
    return {x for x, d in distances(g, v).items() if d == k}


def find_edge(g, u, v):
    g.check_node(u)
    g.check_node(v)
    for e in g.edges:
        if (e.u, e.v) == (u, v) or (not g.directed and (e.v, e.u) == (u, v)):
            return e
    return None


def _has_cycle_undirected(g):
    parent = {v: v for v in g.nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(e.u), find(e.v)
        if a == b:
            return True
        parent[a] = b
    return False


def _has_cycle_directed(g):
    out = {v: [] for v in g.nodes}
    for e in g.edges:
        out[e.u].append(e.v)
    color = dict.fromkeys(g.nodes, 0)
    for root in g.nodes:
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(out[root]))]
        while stack:
            x, it = stack[-1]
            y = next(it, None)
            if y is None:
                color[x] = 2
                stack.pop()
            elif color[y] == 1:
                return True
            elif color[y] == 0:
                color[y] = 1
                stack.append((y, iter(out[y])))
    return False


def nn_walk(g, v):
    """Neighbour-of-neighbour candidates of v in walk order."""
    walk = []
    for n in sorted(adjacent(g, v) - {v}):
        for m in sorted(g.adjacency[n]):
            if m not in (v, n):
                walk.append(m)
    return walk


def first_maximum(candidates, degree_of):
    best, best_deg = None, -1
    for c in candidates:
        d = degree_of(c)
        if d > best_deg:
            best, best_deg = c, d
    return best


class Macro:

    @macro("node_count", "number", "How many nodes are in this graph?")
    def node_count(g):
        return Number(len(g.nodes))

    @macro("is_connected", "boolean", "Is this graph a connected graph?")
    def is_connected(g):
        if not g.nodes:
            return Boolean(True)
        return Boolean(len(distances(g, g.nodes[0])) == len(g.nodes))

    @macro("has_cycle", "boolean", "Does this graph contain a cycle?")
    def has_cycle(g):
        if g.directed:
            return Boolean(_has_cycle_directed(g))
        return Boolean(_has_cycle_undirected(g))

    @macro(
        "max_edge_weight", "number",
        "What is the maximum weight of the edges in this graph?"
    )
    def max_edge_weight(g):
        if not g.edges:
            raise OracleError("no edges")
        return Number(max(e.w for e in g.edges))

    @macro(
        "top_k_degrees", "scored_pair_list",
        "What are the nodes with the top {k} highest degrees in this graph?"
    )
    def top_k_degrees(g, k):
        if not 1 <= k <= len(g.nodes):
            raise OracleError("k out of range")
        ranked = sorted(g.nodes, key=lambda v: (-g.degree(v), v))
        return ScoredPairList(tuple((v, g.degree(v)) for v in ranked[:k]))


class Micro:

    @micro(
        "direct_connection", "boolean",
        "Is there a direct connection between node {u} and node {v}?"
    )
    def direct_connection(g, u, v):
        return Boolean(find_edge(g, u, v) is not None)

    @micro("degree", "number", "What is the degree of node {v}?")
    def degree(g, v):
        return Number(g.degree(v))

    @micro("is_leaf", "boolean", "Is node {v} a leaf node?")
    def is_leaf(g, v):
        return Boolean(g.degree(v) == 1)

    @micro("even_degree", "boolean", "Does node {v} have an even degree?")
    def even_degree(g, v):
        return Boolean(g.degree(v) % 2 == 0)

    @micro("neighbors", "node_set", "Who are the neighbors of node {v}?")
    def neighbors(g, v):
        return NodeSet(adjacent(g, v))

    @micro(
        "common_neighbors", "node_set",
        "Do nodes {u} and {v} have any common neighbors?"
    )
    def common_neighbors(g, u, v):
        return NodeSet(adjacent(g, u) & adjacent(g, v))

    @micro(
        "degree_greater", "boolean",
        "Is the degree of node {u} greater than the degree of node {v}?"
    )
    def degree_greater(g, u, v):
        return Boolean(g.degree(u) > g.degree(v))

    @micro(
        "edge_weight", "number",
        "What is the weight of the edge between node {u} and node {v}?"
    )
    def edge_weight(g, u, v):
        e = find_edge(g, u, v)
        if e is None:
            raise OracleError("no such edge")
        return Number(e.w)


class Composite:

    @composite(
        "connected_edges", "anchored_pair_set",
        "Given the edge ({u}, {v}), find all edges connected to it. "
        "List the answers in the format of '[(1, 2), (3, 4), ...]'."
    )
    def connected_edges(g, u, v):
        if find_edge(g, u, v) is None:
            raise OracleError("no such edge")
        return AnchoredPairSet(frozenset(
            (x, g.edges[i].other(x))
            for x in (u, v)
            for i in g.incidence[x]
        ))

    @composite(
        "complete_subgraph", "boolean",
        "Given the nodes {nodes}, determine if they form a complete subgraph. "
        "List the answer directly in the format of 'Yes' or 'No'."
    )
    def complete_subgraph(g, nodes):
        for v in nodes:
            g.check_node(v)
        return Boolean(all(
            b in g.adjacency[a]
            for a, b in combinations(sorted(set(nodes)), 2)
        ))

    @composite(
        "highest_degree_nn", "node_id",
        "Given the node {v}, find the neighbor's neighbor with the highest "
        "degree. List the answer directly as the node id."
    )
    def highest_degree_nn(g, v):
        walk = nn_walk(g, v)
        if not walk:
            raise OracleError("no candidates")
        return NodeId(first_maximum(walk, g.degree))

    @composite(
        "k_order_neighbors", "node_set",
        "Given the node {v}, find all its {k}-order neighbors. Note that the "
        "{k}-order neighbors do not include the 1-order neighbors, and so on. "
        "List the answers in the format of '[1, 2, ...]'."
    )
    def k_order_neighbors(g, v, k):
        return NodeSet(k_order(g, v, k))

    @composite(
        "neighbors_connected_to", "node_set",
        "Given the node {v}, find its neighbors that are directly connected to "
        "node {m}. List the answers in the format of '[1, 2, ...]'."
    )
    def neighbors_connected_to(g, v, m):
        return NodeSet(adjacent(g, v) & adjacent(g, m))

    @composite(
        "triangles", "triple_set",
        "Given the node {v}, find all triangles (sets of three nodes that are "
        "mutually connected) it forms with its neighbors. List the answers in "
        "the format of '[(1, 2, 3), (4, 5, 6), ...]'."
    )
    def triangles(g, v):
        nbrs = sorted(adjacent(g, v) - {v})
        return TripleSet(frozenset(
            (v, a, b)
            for a, b in combinations(nbrs, 2)
            if b in g.adjacency[a]
        ))

    @composite(
        "neighbor_pairs", "pair_set",
        "Given the node {v}, find all connected pairs among its neighbors. "
        "List the answers in the format of '[(1, 2), (3, 4), ...]'.",
        suite=False,
    )
    def neighbor_pairs(g, v):
        nbrs = sorted(adjacent(g, v) - {v})
        return PairSet(frozenset(
            (a, b)
            for a, b in combinations(nbrs, 2)
            if b in g.adjacency[a]
        ))

    @composite(
        "edge_common_neighbors", "node_set",
        "Given the edge ({u}, {v}), find all common neighbors of its two end "
        "nodes. List the answers in the format of '[1, 2, ...]'.",
        suite=False,
    )
    def edge_common_neighbors(g, u, v):
        if find_edge(g, u, v) is None:
            raise OracleError("no such edge")
        return NodeSet(adjacent(g, u) & adjacent(g, v))

    @composite(
        "common_k_order", "node_set",
        "Given nodes {u} and {v}, find all common {k}-order neighbors. "
        "List the answers in the format of '[1, 2, ...]'."
    )
    def common_k_order(g, u, v, k):
        return NodeSet(k_order(g, u, k) & k_order(g, v, k))


class Steps:

    @step(
        "frontier_neighbors", "node_set",
        "Who are the neighbors of the nodes {nodes}?"
    )
    def frontier_neighbors(g, nodes):
        return NodeSet(frozenset().union(*(adjacent(g, v) for v in nodes)))

    @step(
        "node_degrees", "scored_pair_list",
        "What are the degrees of the nodes {nodes}?"
    )
    def node_degrees(g, nodes):
        return ScoredPairList(tuple((v, g.degree(v)) for v in sorted(set(nodes))))


def run_oracle(g, kind, **params):
    return Tasks.get(kind)(g, **params)


def _run_level(g, kind, level, composite, **params):
    k = Tasks.get(kind)
    if k.level != level or k.composite != composite:
        raise OracleError(f'"{kind}" is not a {level} task kind.')
    return k(g, **params)


def macro_oracle(g, kind, **params):
    return _run_level(g, kind, "macro", False, **params)


def micro_oracle(g, kind, **params):
    return _run_level(g, kind, "micro", False, **params)


def composite_oracle(g, kind, **params):
    return _run_level(g, kind, "micro", True, **params)
