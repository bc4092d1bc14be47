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

import heapq

from .oracles import *


class DescriptionError(Exception):
    pass


clause_template = "From node {u} to node {v} with weight {w};"


def _kind_of(directed):
    return "a directed" if directed else "an undirected"


def preamble(directed=False):
    return f"This is {_kind_of(directed)} graph with the following edges:"


def structural_header(directed, kind):
    name = kind.replace("_", " ")
    return f"This is {_kind_of(directed)} graph represented as an {name}:"


@dataclass(frozen=True)
class EdgeClause:
    u: int
    v: int
    w: int

    @property
    def rendered(self):
        return clause_template.format(u=self.u, v=self.v, w=self.w)

    def __str__(self):
        return self.rendered


@dataclass(frozen=True)
class DescriptionSequence:
    """
    A sequential graph description. position_map[i] is the index in
    Graph.edges of the edge rendered by clause i.
    """
    header: str
    clauses: tuple[EdgeClause, ...]
    position_map: tuple[int, ...]

    def __len__(self):
        return len(self.clauses)

    def __str__(self):
        return self.text

    @property
    def text(self):
        return "\n".join((self.header, *(c.rendered for c in self.clauses)))

    @classmethod
    def from_order(cls, g, order):
        order = tuple(order)
        clauses = tuple(EdgeClause(*g.edges[i]) for i in order)
        return cls(preamble(g.directed), clauses, order)


def render_raw(g):
    return DescriptionSequence.from_order(g, range(len(g.edges)))


def _incident_order(g, x):
    return sorted(g.incidence[x], key=lambda i: (g.edges[i].other(x), i))


def components(g, root=None):
    """
    Node sets of the connected components (edge direction ignored).
    The component of root comes first, the rest by ascending minimum id.
    Each set is returned with its traversal root.
    """
    seen, comps = set(), []
    for start in sorted(g.nodes):
        if start in seen:
            continue
        comp, queue = {start}, [start]
        while queue:
            x = queue.pop()
            for y in g.adjacency[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append((start, comp))
    if root is not None:
        comps.sort(key=lambda c: root not in c[1])
        comps = [(root if root in c else s, c) for s, c in comps]
    return comps


def _bfs(g, root, emitted, order):
    visited = {root}
    queue = [root]
    while queue:
        x = queue.pop(0)
        for i in _incident_order(g, x):
            if i in emitted:
                continue
            emitted.add(i)
            order.append(i)
            y = g.edges[i].other(x)
            if y not in visited:
                visited.add(y)
                queue.append(y)


def _dfs(g, root, emitted, order):
    visited = {root}
    stack = [(root, iter(_incident_order(g, root)))]
    while stack:
        x, it = stack[-1]
        for i in it:
            if i in emitted:
                continue
            emitted.add(i)
            order.append(i)
            y = g.edges[i].other(x)
            if y not in visited:
                visited.add(y)
                stack.append((y, iter(_incident_order(g, y))))
                break
        else:
            stack.pop()


def dijkstra(g, root):
    dist = {root: 0}
    heap = [(0, root)]
    done = set()
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        for i in g.incidence[x]:
            e = g.edges[i]
            y = e.other(x)
            nd = d + e.w
            if nd < dist.get(y, float("inf")):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


def _sp_order(g, comps):
    keys = []
    for rank, (root, _) in enumerate(comps):
        dist = dijkstra(g, root)
        for x in dist:
            for i in g.incidence[x]:
                e = g.edges[i]
                near, far = sorted((e.u, e.v), key=lambda y: (dist[y], y))
                if near == x:
                    keys.append((rank, dist[near], near, far, i))
    return [k[-1] for k in sorted(set(keys))]


def reorder(g, kind, root):
    if root not in g.members:
        raise DescriptionError(f"unknown root {root}")
    comps = components(g, root)
    if kind == "shortest_path":
        return DescriptionSequence.from_order(g, _sp_order(g, comps))

    traverse = {"bfs": _bfs, "dfs": _dfs}.get(kind)
    if traverse is None:
        raise DescriptionError(f'Unknown ordering "{kind}".')
    emitted, order = set(), []
    for start, _ in comps:
        traverse(g, start, emitted, order)
    return DescriptionSequence.from_order(g, order)


def _adjacency_list(g):
    lines = [structural_header(g.directed, "adjacency_list")]
    for v in sorted(g.nodes):
        entries = []
        for i in g.incidence[v]:
            e = g.edges[i]
            if g.directed and e.u != v:
                continue
            entries.append((e.other(v), i, e.w))
        entries.sort()
        items = ", ".join(f"({n}, {w})" for n, _, w in entries)
        lines.append(f"{v}: [{items}]")
    return "\n".join(lines)


def _adjacency_matrix(g):
    if not g.is_simple():
        raise DescriptionError("matrix format requires simple graph")
    order = sorted(g.nodes)
    index = {v: i for i, v in enumerate(order)}
    rows = [[0] * len(order) for _ in order]
    for e in g.edges:
        rows[index[e.u]][index[e.v]] = e.w
        if not g.directed:
            rows[index[e.v]][index[e.u]] = e.w
    lines = [
        structural_header(g.directed, "adjacency_matrix"),
        f"Nodes: [{', '.join(map(str, order))}]",
    ]
    lines.extend(f"[{', '.join(map(str, row))}]" for row in rows)
    return "\n".join(lines)


def render_structural(g, kind):
    match kind:
        case "adjacency_list":
            return _adjacency_list(g)
        case "adjacency_matrix":
            return _adjacency_matrix(g)
    raise DescriptionError(f'Unknown structural format "{kind}".')
