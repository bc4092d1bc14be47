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

from dataclasses import dataclass
from functools import cached_property
import json

import numpy as np


class GraphError(Exception):
    pass


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    w: int = 1

    def __iter__(self):
        return iter((self.u, self.v, self.w))

    def __str__(self):
        return f"({self.u}, {self.v}, {self.w})"

    def other(self, x):
        return self.v if x == self.u else self.u

    def key(self, directed=False):
        if directed:
            return (self.u, self.v)
        return (min(self.u, self.v), max(self.u, self.v))

    def is_loop(self):
        return self.u == self.v


@dataclass(frozen=True)
class Graph:
    directed: bool
    nodes: tuple[int, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        nodes = tuple(self.nodes)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)

        if len(set(nodes)) != len(nodes):
            raise GraphError("duplicate node ids")
        for v in nodes:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise GraphError(f"invalid node id {v!r}")
        members = set(nodes)
        for e in edges:
            if e.u not in members or e.v not in members:
                raise GraphError(f"edge {e} has an endpoint outside the node set")
            if not isinstance(e.w, int) or e.w < 1:
                raise GraphError(f"edge {e} has a weight below 1")

    @classmethod
    def from_edges(cls, edges, directed=False, nodes=()):
        edges = [e if isinstance(e, Edge) else Edge(*e) for e in edges]
        seen = dict.fromkeys(nodes)
        for e in edges:
            seen.setdefault(e.u)
            seen.setdefault(e.v)
        return cls(directed, tuple(seen), tuple(edges))

    @cached_property
    def members(self):
        return frozenset(self.nodes)

    @cached_property
    def incidence(self):
        """Node id -> indices of incident edges, in insertion order."""
        inc = {v: [] for v in self.nodes}
        for i, e in enumerate(self.edges):
            inc[e.u].append(i)
            if not e.is_loop():
                inc[e.v].append(i)
        return {v: tuple(ids) for v, ids in inc.items()}

    @cached_property
    def adjacency(self):
        adj = {v: set() for v in self.nodes}
        for e in self.edges:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
        return {v: frozenset(s) for v, s in adj.items()}

    def check_node(self, v):
        if v not in self.members:
            raise GraphError("unknown node")

    def degree(self, v):
        self.check_node(v)
        return sum(
            2 if self.edges[i].is_loop() else 1
            for i in self.incidence[v]
        )

    def neighbors(self, v):
        self.check_node(v)
        return sorted(self.adjacency[v])

    def is_simple(self):
        keys = [e.key(self.directed) for e in self.edges]
        return len(keys) == len(set(keys))

    def to_json(self):
        return {
            "directed": self.directed,
            "nodes": list(self.nodes),
            "edges": [[e.u, e.v, e.w] for e in self.edges],
        }

    @classmethod
    def from_json(cls, data):
        try:
            return cls(
                bool(data["directed"]),
                tuple(data["nodes"]),
                tuple(Edge(*e) for e in data["edges"]),
            )
        except (KeyError, TypeError) as e:
            raise GraphError(f"malformed graph JSON: {e}")

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def loads(cls, s):
        return cls.from_json(json.loads(s))


def degree(g, v):
    return g.degree(v)


def neighbors(g, v):
    return g.neighbors(v)


@dataclass
class PageRankVector:
    scores: dict
    damping: float
    iterations_run: int = 0

    def __getitem__(self, v):
        return self.scores[v]

    def ranked(self):
        """Nodes by descending score; near-equal scores fall back to ascending id."""
        return sorted(self.scores, key=lambda v: (-round(self.scores[v], 12), v))


def _arcs(g):
    src, dst = [], []
    for e in g.edges:
        src.append(e.u)
        dst.append(e.v)
        if not g.directed:
            # An undirected self-loop expands to two arcs, matching degree 2
            src.append(e.v)
            dst.append(e.u)
    return src, dst


def pagerank(g, damping=0.85, max_iter=100, tol=1e-8):
    if not g.nodes:
        raise GraphError("empty graph")
    if not 0 < damping < 1:
        raise GraphError("damping must lie strictly between 0 and 1")

    index = {v: i for i, v in enumerate(g.nodes)}
    n = len(g.nodes)
    src, dst = _arcs(g)
    src = np.array([index[v] for v in src], dtype=np.int64)
    dst = np.array([index[v] for v in dst], dtype=np.int64)
    out_deg = np.bincount(src, minlength=n).astype(float)
    dangling = out_deg == 0

    pr = np.full(n, 1.0 / n)
    iterations = 0
    for _ in range(max_iter):
        share = np.divide(pr, out_deg, out=np.zeros(n), where=~dangling)
        new = np.bincount(dst, weights=share[src], minlength=n)
        new = damping * (new + pr[dangling].sum() / n) + (1 - damping) / n
        iterations += 1
        change = np.abs(new - pr).sum()
        pr = new
        if change < tol:
            break

    pr = pr / pr.sum()
    scores = {v: float(pr[index[v]]) for v in g.nodes}
    return PageRankVector(scores, damping, iterations)
