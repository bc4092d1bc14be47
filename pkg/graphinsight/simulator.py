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

from collections import Counter
import hashlib

from .scoring import *


refusal = "I am unable to answer this question."


@dataclass(frozen=True)
class RecalledGraph(Graph):
    """A partially remembered graph; stated degrees override counted ones."""
    degree_hints: dict = field(default_factory=dict, compare=False)

    def degree(self, v):
        self.check_node(v)
        if v in self.degree_hints:
            return self.degree_hints[v]
        return super().degree(v)


def prompt_rng(prompt, seed):
    digest = hashlib.sha256(f"{seed}\x00{prompt}".encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "big"))


def _units(lines):
    out = []
    for line in lines:
        if not line.strip():
            break
        out.append(line)
    return out


def _recalled(n, bias, rng):
    return rng.random(n) < bias.curve(n) if n else np.zeros(0, dtype=bool)


def recall_sequential(lines, directed, bias, rng):
    clauses = [parse_clause(c) for c in _units(lines)]
    kept = _recalled(len(clauses), bias, rng)
    return [e for e, k in zip(clauses, kept) if k], set()


def recall_adjacency_list(lines, directed, bias, rng):
    rows = [parse_al_line(line) for line in _units(lines)]
    kept = dict(zip((v for v, _ in rows), _recalled(len(rows), bias, rng)))
    edges, nodes = [], {v for v in kept if kept[v]}
    for v, entries in rows:
        for n, w in entries:
            if directed:
                if kept[v]:
                    edges.append(Edge(v, n, w))
            elif v <= n and kept[v]:
                edges.append(Edge(v, n, w))
            elif v > n and kept[v] and not kept.get(n, False):
                edges.append(Edge(n, v, w))
    return edges, nodes


def recall_adjacency_matrix(lines, directed, bias, rng):
    order = [int(x) for x in re.findall(r"\d+", lines[0])]
    rows = [parse_matrix_row(line) for line in _units(lines[1:])]
    kept = _recalled(len(rows), bias, rng)
    edges = []
    for i, row in enumerate(rows):
        for j, w in enumerate(row):
            if not w:
                continue
            if directed:
                if kept[i]:
                    edges.append(Edge(order[i], order[j], w))
            elif (i <= j and kept[i]) or (i > j and kept[i] and not kept[j]):
                edges.append(Edge(order[min(i, j)], order[max(i, j)], w))
    return edges, {order[i] for i in range(len(rows)) if kept[i]}


def read_section(prompt, title):
    lines, inside = [], False
    for line in prompt.splitlines():
        if line.strip() == title:
            inside, lines = True, []
        elif inside:
            if not line.strip():
                inside = False
            else:
                lines.append(line)
    return lines


def read_question(prompt):
    questions = [l[3:].strip() for l in prompt.splitlines() if l.startswith("Q: ")]
    return questions[-1] if questions else None


def recognize(question):
    """The task kind and parameters a rendered question was built from."""
    for kind in Tasks.kinds.values():
        m = kind.pattern().fullmatch(question)
        if m is None:
            continue
        params = {}
        for name, value in m.groupdict().items():
            if name == "nodes":
                params[name] = [int(x) for x in re.findall(r"\d+", value)]
            else:
                params[name] = int(value)
        return kind, params
    return None, None


def _key(e, directed):
    return (*e.key(directed), e.w)


def recall_graph(prompt, bias, rng, extra_nodes=()):
    directed, edges, nodes = False, [], set()
    blocks = split_blocks(prompt)
    if blocks:
        m, lines = blocks[-1]
        directed = m.group(1) == "directed"
        match m.group(3):
            case "list":
                edges, nodes = recall_adjacency_list(lines, directed, bias, rng)
            case "matrix":
                edges, nodes = recall_adjacency_matrix(lines, directed, bias, rng)
            case _:
                edges, nodes = recall_sequential(lines, directed, bias, rng)

    hints, fact_edges = {}, []
    for line in read_section(prompt, "Relevant facts:"):
        fact = parse_fact(line)
        if fact[0] == "node":
            hints[fact[1]] = fact[2]
        else:
            fact_edges.append(fact[1])

    # multiset union; stated facts first, then copies in description order
    keys = [_key(e, directed) for e in edges]
    fact_keys = [_key(e, directed) for e in fact_edges]
    merged = Counter(keys) | Counter(fact_keys)
    emitted, all_edges = Counter(), []
    for k in fact_keys + keys:
        if emitted[k] < merged[k]:
            emitted[k] += 1
            all_edges.append(Edge(*k))
    members = set(nodes) | set(hints) | set(extra_nodes)
    members.update(x for e in all_edges for x in (e.u, e.v))
    return RecalledGraph(directed, tuple(sorted(members)), tuple(all_edges), hints)


def simulate_llm(prompt, bias, seed=0):
    """
    Answer a prompt the way a reader with positional recall bias would:
    every description unit is remembered with the probability the bias
    curve gives its position, stated facts are always remembered, and the
    question is answered exactly over what was remembered.
    """
    question = read_question(prompt)
    kind, params = recognize(question) if question else (None, None)
    if kind is None:
        return refusal
    named = set()
    for name, value in params.items():
        if name == "nodes":
            named.update(value)
        elif name != "k":
            named.add(value)

    try:
        g = recall_graph(prompt, bias, prompt_rng(prompt, seed), named)
        answer = kind(g, **params)
    except (OracleError, GraphError, ParsingError):
        return refusal
    return f"Answer: {answer}"
