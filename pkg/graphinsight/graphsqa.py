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

import logging
from pathlib import Path

from .ragbase import *


log = logging.getLogger(__name__)


class GenConfigError(Exception):
    pass


class BenchmarkFormatError(Exception):
    pass


@dataclass(frozen=True)
class GenConfig:
    min_nodes: int = 15
    max_nodes: int = 200
    min_components: int = 1
    max_components: int = 3
    edge_density: float = 0.1
    min_weight: int = 1
    max_weight: int = 5
    self_loop_prob: float = 0.02
    multi_edge_prob: float = 0.02
    seed: int = 0

    def __post_init__(self):
        if self.min_nodes > self.max_nodes:
            raise GenConfigError("empty node count range")
        if self.min_components < 1 or self.min_components > self.max_components:
            raise GenConfigError("empty component count range")
        if self.min_weight < 1 or self.min_weight > self.max_weight:
            raise GenConfigError("empty weight range")
        if self.min_nodes < 2 * self.max_components:
            raise GenConfigError(
                "every component needs two nodes: min_nodes must be at "
                "least twice max_components"
            )
        for name in ("edge_density", "self_loop_prob", "multi_edge_prob"):
            if not 0 <= getattr(self, name) <= 1:
                raise GenConfigError(f"{name} must lie in [0, 1]")

    def to_json(self):
        return dict(self.__dict__)


def _weight(cfg, rng):
    return int(rng.integers(cfg.min_weight, cfg.max_weight + 1))


def generate_graph(cfg, rng=None):
    if rng is None:
        rng = np.random.default_rng(cfg.seed)
    n = int(rng.integers(cfg.min_nodes, cfg.max_nodes + 1))
    c = int(rng.integers(cfg.min_components, cfg.max_components + 1))
    sizes = 2 + rng.multinomial(n - 2 * c, [1 / c] * c)
    perm = [int(x) for x in rng.permutation(n)]

    edges, start = [], 0
    for size in sizes:
        comp = perm[start:start + size]
        start += size
        tree = set()
        for i in range(1, len(comp)):
            parent = comp[int(rng.integers(0, i))]
            tree.add((min(comp[i], parent), max(comp[i], parent)))
        pairs = sorted(tree)
        members = sorted(comp)
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                if (a, b) not in tree and rng.random() < cfg.edge_density:
                    pairs.append((a, b))
        for a, b in pairs:
            edges.append((a, b, _weight(cfg, rng)))
            if rng.random() < cfg.multi_edge_prob:
                edges.append((a, b, _weight(cfg, rng)))
        for v in members:
            if rng.random() < cfg.self_loop_prob:
                edges.append((v, v, _weight(cfg, rng)))

    edges.sort()
    return Graph(False, tuple(range(n)), tuple(Edge(*e) for e in edges))


@dataclass(frozen=True)
class Task:
    id: str
    graph_id: int
    kind: str
    params: dict
    question: str
    answer_type: str
    truth: Answer

    @property
    def spec(self):
        return Tasks.get(self.kind)

    @property
    def level(self):
        return self.spec.level

    @property
    def composite(self):
        return self.spec.composite

    @property
    def instruction(self):
        return self.spec.instruction

    def to_json(self):
        return {
            "graph_id": self.graph_id,
            "task_id": self.id,
            "kind": self.kind,
            "params": self.params,
            "question": self.question,
            "answer_type": self.answer_type,
            "truth": self.truth.to_json(),
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            data["task_id"], data["graph_id"], data["kind"], data["params"],
            data["question"], data["answer_type"],
            Answer.from_json(data["answer_type"], data["truth"]),
        )


edge_anchored = {"edge_weight", "connected_edges", "edge_common_neighbors"}


def _pick(rng, seq):
    return seq[int(rng.integers(0, len(seq)))]


def _sample_params(g, kind, rng):
    nodes = list(g.nodes)
    links = [e for e in g.edges if not e.is_loop()]
    params = {}
    if kind.name in edge_anchored or (kind.name == "direct_connection" and rng.random() < 0.5):
        if not links:
            return None
        e = _pick(rng, links)
        params["u"], params["v"] = e.u, e.v
    for name in kind.params:
        if name in params:
            continue
        match name:
            case "u" | "v":
                taken = [params[p] for p in ("u", "v") if p in params]
                choices = [x for x in nodes if x not in taken]
                if not choices:
                    return None
                params[name] = _pick(rng, choices)
            case "m":
                choices = [x for x in nodes if x != params.get("v")]
                if not choices:
                    return None
                params["m"] = _pick(rng, choices)
            case "k":
                if kind.name == "top_k_degrees":
                    params["k"] = int(rng.integers(1, min(5, len(nodes)) + 1))
                else:
                    params["k"] = int(rng.choice([2, 3]))
            case "nodes":
                params["nodes"] = _sample_nodeset(g, rng)
                if params["nodes"] is None:
                    return None
    return params


def _sample_nodeset(g, rng, size=3):
    if len(g.nodes) < size:
        return None
    if rng.random() < 0.5:
        v = _pick(rng, list(g.nodes))
        nbrs = sorted(g.adjacency[v] - {v})
        if len(nbrs) >= size - 1:
            chosen = rng.choice(len(nbrs), size - 1, replace=False)
            return sorted([v, *(nbrs[int(i)] for i in chosen)])
    chosen = rng.choice(len(g.nodes), size, replace=False)
    return sorted(int(g.nodes[int(i)]) for i in chosen)


def make_task(g, kind, params, task_id, graph_id=0):
    spec = Tasks.get(kind)
    truth = run_oracle(g, kind, **params)
    return Task(
        task_id, graph_id, kind, dict(params),
        spec.render(**params), spec.answer_type, truth,
    )


def generate_tasks(g, kinds=None, per_kind=1, seed=0, rng=None, graph_id=0,
                   skipped=None, attempts=20):
    if rng is None:
        rng = np.random.default_rng(seed)
    kinds = Tasks.suite() if kinds is None else list(kinds)
    known = Tasks.benchmark_kinds()
    for kind in kinds:
        if kind not in known:
            raise GenConfigError(f'Unknown task kind "{kind}".')

    tasks = []
    for kind in kinds:
        spec = Tasks.get(kind)
        for j in range(per_kind):
            task = None
            for _ in range(attempts):
                params = _sample_params(g, spec, rng)
                if params is None:
                    break
                try:
                    task = make_task(g, kind, params, f"g{graph_id}-{kind}-{j}", graph_id)
                    break
                except OracleError:
                    continue
            if task is None:
                log.warning("Skipping %s on graph %d: parameters not samplable.", kind, graph_id)
                if skipped is not None:
                    skipped.append({"graph_id": graph_id, "kind": kind, "reason": "not samplable"})
                break
            tasks.append(task)
    return tasks


@dataclass
class Benchmark:
    graphs: list
    tasks: list
    seed: int = 0
    skipped: list = field(default_factory=list)

    def counts(self):
        counts = {"macro": 0, "micro": 0}
        for t in self.tasks:
            counts[t.level] += 1
        return counts

    def graph_of(self, task):
        return self.graphs[task.graph_id]

    def tasks_for(self, graph_id):
        return [t for t in self.tasks if t.graph_id == graph_id]


def generate_benchmark(cfg, graphs=40, per_kind=1, kinds=None):
    rng = np.random.default_rng(cfg.seed)
    bench = Benchmark([], [], cfg.seed)
    for gid in range(graphs):
        g = generate_graph(cfg, rng)
        bench.graphs.append(g)
        bench.tasks.extend(generate_tasks(
            g, kinds, per_kind, rng=rng, graph_id=gid, skipped=bench.skipped
        ))
    log.info("Generated %d graphs and %d tasks.", len(bench.graphs), len(bench.tasks))
    return bench


def save_benchmark(bench, out_dir):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    meta = {
        "seed": bench.seed,
        "counts": bench.counts(),
        "skipped": bench.skipped,
        "graphs": [g.to_json() for g in bench.graphs],
    }
    (out / "graphs.json").write_text(json.dumps(meta), encoding="utf-8")
    with open(out / "tasks.jsonl", "w", encoding="utf-8") as f:
        for t in bench.tasks:
            f.write(json.dumps(t.to_json()) + "\n")
    return out


def load_benchmark(path):
    path = Path(path)
    try:
        meta = json.loads((path / "graphs.json").read_text(encoding="utf-8"))
        graphs = [Graph.from_json(g) for g in meta["graphs"]]
    except (OSError, ValueError, KeyError, GraphError) as e:
        raise BenchmarkFormatError(f"graphs.json: {e}")

    tasks = []
    with open(path / "tasks.jsonl", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                task = Task.from_json(json.loads(line))
            except (ValueError, KeyError, TypeError) as e:
                raise BenchmarkFormatError(f"tasks.jsonl line {lineno}: {e}")
            _validate(task, graphs, lineno)
            tasks.append(task)
    return Benchmark(graphs, tasks, meta.get("seed", 0), meta.get("skipped", []))


def _validate(task, graphs, lineno):
    if not 0 <= task.graph_id < len(graphs):
        raise BenchmarkFormatError(f"tasks.jsonl line {lineno}: unknown graph {task.graph_id}")
    try:
        spec = Tasks.get(task.kind)
        truth = run_oracle(graphs[task.graph_id], task.kind, **task.params)
    except (OracleError, GraphError, TypeError) as e:
        raise BenchmarkFormatError(f"tasks.jsonl line {lineno}: {e}")
    if truth != task.truth:
        raise BenchmarkFormatError(f"tasks.jsonl line {lineno}: stale truth for {task.id}")
    if spec.render(**task.params) != task.question:
        raise BenchmarkFormatError(f"tasks.jsonl line {lineno}: question does not match its template")
