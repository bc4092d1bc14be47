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

from .reorganizer import *


node_fact = "Node {v} has degree {d}."
edge_fact = "Edge ({u}, {v}) has weight {w}."


@dataclass(frozen=True)
class RagBase:
    gamma_pct: float
    node_store: dict
    edge_store: tuple[Edge, ...]
    source_layout: RegionLayout | None = field(default=None, compare=False, repr=False)

    def to_json(self):
        return {
            "gamma": float(self.gamma_pct),
            "nodes": [[v, d] for v, d in sorted(self.node_store.items())],
            "edges": [[e.u, e.v, e.w] for e in self.edge_store],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            float(data["gamma"]),
            {v: d for v, d in data["nodes"]},
            tuple(Edge(*e) for e in data["edges"]),
        )


def build_rag_base(layout, g, gamma_pct=80.0):
    """Store the top gamma% of the weak-region blocks with exact degrees."""
    if not 0 <= gamma_pct <= 100:
        raise LayoutError("gamma must lie in [0, 100]")
    weak = layout.middle
    keep = math.ceil(round(gamma_pct * len(weak) / 100, 9))
    edges = tuple(e for b in weak[:keep] for e in b.edges)
    nodes = sorted({x for e in edges for x in (e.u, e.v)})
    return RagBase(gamma_pct, {v: g.degree(v) for v in nodes}, edges, layout)


_quoted = re.compile(r"'[^']*'")
_node_run = re.compile(r"\bnodes?\s+(\d+(?:\s*(?:,|and|, and)\s*\d+)*)")
_bracket = re.compile(r"\[(\s*\d+(?:\s*,\s*\d+)*\s*)\]")
_pair = re.compile(r"\((\s*\d+\s*,\s*\d+\s*)\)")


def extract_entities(question, known_nodes):
    text = _quoted.sub("", question)
    found = set()
    for pattern in (_node_run, _bracket, _pair):
        for m in pattern.finditer(text):
            found.update(int(x) for x in re.findall(r"\d+", m.group(1)))
    return found & set(known_nodes)


@dataclass(frozen=True)
class Retrieval:
    query_nodes: frozenset = frozenset()
    node_hits: frozenset = frozenset()
    edge_hits: tuple[Edge, ...] = ()

    def __bool__(self):
        return bool(self.node_hits or self.edge_hits)

    def lines(self):
        facts = [node_fact.format(v=v, d=d) for v, d in sorted(self.node_hits)]
        facts.extend(edge_fact.format(u=e.u, v=e.v, w=e.w) for e in self.edge_hits)
        return facts


def retrieve(base, query_nodes):
    query = frozenset(query_nodes)
    node_hits = frozenset(
        (v, base.node_store[v]) for v in query if v in base.node_store
    )
    # stable by endpoint pair; parallel copies stay in stored order
    edge_hits = tuple(sorted(
        (e for e in base.edge_store if e.u in query or e.v in query),
        key=lambda e: e.key(),
    ))
    return Retrieval(query, node_hits, edge_hits)


def assemble_prompt(description, retrieval, question, instruction=None, known=()):
    parts = [str(description), ""]
    if retrieval:
        parts.extend(["Relevant facts:", *retrieval.lines(), ""])
    if known:
        parts.extend(["Known so far:", *known, ""])
    parts.append(f"Q: {question}")
    if instruction:
        parts.append(instruction)
    return "\n".join(parts)
