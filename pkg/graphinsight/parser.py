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

from .graphsqa import *


class ParsingError(Exception):
    pass


class Words:
    words = {
        "yes": True,
        "true": True,
        "no": False,
        "false": False,
    }

    regex = re.compile(r"\b(" + "|".join(words) + r")\b", re.IGNORECASE)

    @classmethod
    def last(cls, s):
        found = cls.regex.findall(s)
        if not found:
            return None
        return cls.words[found[-1].lower()]


clause_regex = re.compile(r"From node (\d+) to node (\d+) with weight (\d+);")
header_regex = re.compile(r"This is an? (undirected|directed) graph (with the following edges|represented as an adjacency (list|matrix)):")
al_line_regex = re.compile(r"^(\d+): \[(.*)\]$")
matrix_row_regex = re.compile(r"^\[([\d,\s]*)\]$")
node_fact_regex = re.compile(r"^Node (\d+) has degree (\d+)\.$")
edge_fact_regex = re.compile(r"^Edge \((\d+), (\d+)\) has weight (\d+)\.$")
number_regex = re.compile(r"-?\d+(?:\.\d+)?")


def parse_clause(line):
    m = clause_regex.fullmatch(line.strip())
    if m is None:
        raise ParsingError(f'"{line}" is not an edge clause.')
    return Edge(*(int(x) for x in m.groups()))


def parse_pairs(s):
    return [
        tuple(int(x) for x in re.findall(r"\d+", t))
        for t in re.findall(r"\(([^()]*)\)", s)
    ]


def parse_al_line(line):
    m = al_line_regex.match(line.strip())
    if m is None:
        raise ParsingError(f'"{line}" is not an adjacency list line.')
    entries = parse_pairs(m.group(2))
    if any(len(p) != 2 for p in entries):
        raise ParsingError(f'"{line}" has a malformed entry.')
    return int(m.group(1)), entries


def parse_matrix_row(line):
    m = matrix_row_regex.match(line.strip())
    if m is None:
        raise ParsingError(f'"{line}" is not a matrix row.')
    return [int(x) for x in re.findall(r"\d+", m.group(1))]


def parse_fact(line):
    line = line.strip()
    if m := node_fact_regex.match(line):
        return ("node", int(m.group(1)), int(m.group(2)))
    if m := edge_fact_regex.match(line):
        return ("edge", Edge(*(int(x) for x in m.groups())))
    raise ParsingError(f'"{line}" is not a fact line.')


def split_blocks(text):
    """
    Split a prompt into (header match, body lines) pairs, one per graph
    description it contains.
    """
    blocks = []
    for line in text.splitlines():
        if m := header_regex.match(line.strip()):
            blocks.append((m, []))
        elif blocks:
            blocks[-1][1].append(line)
    return blocks


def _body(lines, parse):
    out = []
    for line in lines:
        if not line.strip():
            break
        out.append(parse(line))
    return out


def parse_sequential(lines, directed=False):
    return Graph.from_edges(_body(lines, parse_clause), directed)


def parse_adjacency_list(lines, directed=False):
    rows = _body(lines, parse_al_line)
    edges = []
    for v, entries in rows:
        for n, w in entries:
            if directed or v <= n:
                edges.append((v, n, w))
    return Graph.from_edges(edges, directed, nodes=[v for v, _ in rows])


def parse_adjacency_matrix(lines, directed=False):
    if not lines or not lines[0].startswith("Nodes:"):
        raise ParsingError("matrix description lacks its node line")
    order = [int(x) for x in re.findall(r"\d+", lines[0])]
    rows = _body(lines[1:], parse_matrix_row)
    if len(rows) != len(order) or any(len(r) != len(order) for r in rows):
        raise ParsingError("matrix is not square over its nodes")
    edges = []
    for i, row in enumerate(rows):
        for j, w in enumerate(row):
            if w and (directed or i <= j):
                edges.append((order[i], order[j], w))
    return Graph.from_edges(edges, directed, nodes=order)


def parse_description(text):
    """Recover the graph of the last description block in text."""
    blocks = split_blocks(text)
    if not blocks:
        raise ParsingError("no graph description found")
    m, lines = blocks[-1]
    directed = m.group(1) == "directed"
    match m.group(3):
        case "list":
            return parse_adjacency_list(lines, directed)
        case "matrix":
            return parse_adjacency_matrix(lines, directed)
    return parse_sequential(lines, directed)


def last_bracket_list(s):
    depth, start, last = 0, None, None
    for i, ch in enumerate(s):
        if ch == "[":
            if depth == 0:
                start = i
            depth += 1
        elif ch == "]" and depth > 0:
            depth -= 1
            if depth == 0:
                last = s[start:i + 1]
    return last


def parse_answer(text, answer_type):
    """Read a typed answer from free text; failures are returned, not raised."""
    match answer_type:
        case "boolean":
            value = Words.last(text)
            if value is None:
                return ParseFailure(text, "no yes/no token")
            return Boolean(value)
        case "number":
            found = number_regex.findall(text)
            if not found:
                return ParseFailure(text, "no number")
            return Number(float(found[-1]))
        case "node_id":
            found = number_regex.findall(text)
            if not found or not float(found[-1]).is_integer():
                return ParseFailure(text, "no node id")
            return NodeId(float(found[-1]))
        case "node_set":
            s = last_bracket_list(text)
            if s is None:
                return ParseFailure(text, "no list")
            return NodeSet(int(x) for x in re.findall(r"\d+", s))
        case "pair_set" | "anchored_pair_set" | "triple_set" | "scored_pair_list":
            s = last_bracket_list(text)
            if s is None:
                return ParseFailure(text, "no list")
            tuples = parse_pairs(s)
            arity = 3 if answer_type == "triple_set" else 2
            if any(len(t) != arity for t in tuples):
                return ParseFailure(text, f"expected {arity}-tuples")
            if answer_type == "scored_pair_list":
                return ScoredPairList(tuples)
            return answer_types[answer_type](frozenset(tuples))
    return ParseFailure(text, f'unknown answer type "{answer_type}"')
