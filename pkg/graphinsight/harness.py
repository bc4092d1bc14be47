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

from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from functools import cache
from importlib import resources

from .llm import *


log = logging.getLogger(__name__)


class MethodError(Exception):
    pass


orderings = {"raw", "bfs", "dfs", "sp", "importance"}
formats = {"sequential", "adjacency_list", "adjacency_matrix"}
wrappers = {"none", "cot", "few_shot", "bag"}


@dataclass(frozen=True)
class MethodSpec:
    name: str
    ordering: str = "raw"
    format: str = "sequential"
    wrapper: str = "none"
    rag: bool = False
    agent: bool = False
    alpha: float = 4.5
    beta: float = 10.5
    gamma: float = 80.0
    damping: float = 0.85
    max_iter: int = 100
    tol: float = 1e-8
    shots: int = 2

    def __post_init__(self):
        if self.ordering not in orderings:
            raise MethodError(f'Unknown ordering "{self.ordering}".')
        if self.format not in formats:
            raise MethodError(f'Unknown format "{self.format}".')
        if self.wrapper not in wrappers:
            raise MethodError(f'Unknown prompt wrapper "{self.wrapper}".')
        if self.format != "sequential" and self.ordering != "raw":
            raise MethodError("orderings apply to sequential descriptions only")
        if self.rag and self.ordering != "importance":
            raise MethodError("retrieval requires importance ordering")
        if self.agent and not self.rag:
            raise MethodError("the composite-task agent requires retrieval")
        if self.alpha < 0 or self.beta < 0 or self.alpha + self.beta > 100:
            raise MethodError("regions exceed sequence")
        if not 0 <= self.gamma <= 100:
            raise MethodError("gamma must lie in [0, 100]")

    def with_params(self, **changes):
        return replace(self, **changes)

    def to_json(self):
        return dict(self.__dict__)


METHODS = {
    "raw": MethodSpec("raw"),
    "cot": MethodSpec("cot", wrapper="cot"),
    "fs": MethodSpec("fs", wrapper="few_shot"),
    "bag": MethodSpec("bag", wrapper="bag"),
    "bfs": MethodSpec("bfs", ordering="bfs"),
    "dfs": MethodSpec("dfs", ordering="dfs"),
    "sp": MethodSpec("sp", ordering="sp"),
    "al": MethodSpec("al", format="adjacency_list"),
    "am": MethodSpec("am", format="adjacency_matrix"),
    "reorg": MethodSpec("reorg", ordering="importance"),
    "graphinsight": MethodSpec("graphinsight", ordering="importance", rag=True, agent=True),
}


def get_method(name):
    method = METHODS.get(name)
    if method is None:
        raise MethodError(f'Unknown method "{name}". Choose from {", ".join(METHODS)}.')
    return method


cot_instruction = "Let's think step by step."
bag_instruction = "Let's construct a graph with the nodes and edges first."


@cache
def fewshot_examples():
    data = json.loads(
        resources.files("graphinsight").joinpath("data/fewshot_graph.json").read_text(encoding="utf-8")
    )
    g = Graph.from_json(data["graph"])
    examples = []
    for ex in data["examples"]:
        spec = Tasks.get(ex["kind"])
        lines = [render_raw(g).text, "", f"Q: {spec.render(**ex['params'])}"]
        if spec.instruction:
            lines.append(spec.instruction)
        lines.append(f"A: {run_oracle(g, ex['kind'], **ex['params'])}")
        examples.append("\n".join(lines))
    return tuple(examples)


def wrap_prompt(base_prompt, wrapper, shots=2):
    match wrapper:
        case "none":
            return base_prompt
        case "cot":
            return f"{base_prompt}\n{cot_instruction}"
        case "few_shot":
            examples = fewshot_examples()[:shots]
            return "\n\n".join((*examples, base_prompt))
        case "bag":
            return f"{bag_instruction}\n\n{base_prompt}"
    raise MethodError(f'Unknown prompt wrapper "{wrapper}".')


@dataclass
class GraphContext:
    """Everything a method derives once per graph."""
    graph: Graph
    description: object = None
    layout: RegionLayout | None = None
    base: RagBase | None = None
    error: str | None = None


def prepare(g, method):
    ctx = GraphContext(g)
    try:
        if method.format != "sequential":
            ctx.description = render_structural(g, method.format)
        elif method.ordering == "raw":
            ctx.description = render_raw(g)
        elif method.ordering == "importance":
            pr = pagerank(g, method.damping, method.max_iter, method.tol)
            ctx.description, ctx.layout = reorganize(decompose(g, pr), method.alpha, method.beta)
            if method.rag:
                ctx.base = build_rag_base(ctx.layout, g, method.gamma)
        else:
            kind = "shortest_path" if method.ordering == "sp" else method.ordering
            if not g.nodes:
                raise DescriptionError("graph has no nodes to start a traversal from")
            ctx.description = reorder(g, kind, min(g.nodes))
    except (DescriptionError, LayoutError, GraphError) as e:
        ctx.error = str(e)
    return ctx


def build_prompt(task, ctx, method):
    retrieval = None
    if ctx.base is not None and task.level == "micro":
        retrieval = retrieve(ctx.base, extract_entities(task.question, ctx.graph.nodes))
    prompt = assemble_prompt(ctx.description, retrieval, task.question, task.instruction)
    return wrap_prompt(prompt, method.wrapper, method.shots)


class StepFailure(Exception):
    pass


class Agent:
    """Answers a composite task through a chain of single-step questions."""

    def __init__(self, ctx, method, client):
        self.ctx = ctx
        self.method = method
        self.client = client
        self.known = []
        self.prompts = []

    def ask(self, kind, **params):
        spec = Tasks.get(kind)
        question = spec.render(**params)
        retrieval = None
        if self.ctx.base is not None:
            retrieval = retrieve(self.ctx.base, extract_entities(question, self.ctx.graph.nodes))
        prompt = assemble_prompt(
            self.ctx.description, retrieval, question, spec.instruction, self.known
        )
        prompt = wrap_prompt(prompt, self.method.wrapper, self.method.shots)
        self.prompts.append(prompt)
        answer = parse_answer(self.client.complete(prompt), spec.answer_type)
        if isinstance(answer, ParseFailure):
            raise StepFailure(f"step {len(self.prompts)}: {answer.reason}")
        self.known.append(f"{question} {answer}")
        return answer

    def neighbors(self, v):
        return set(self.ask("neighbors", v=v).value)

    def expand(self, frontier):
        if len(frontier) == 1:
            return self.neighbors(next(iter(frontier)))
        return set(self.ask("frontier_neighbors", nodes=sorted(frontier)).value)

    def k_order(self, v, k):
        visited, frontier = {v}, {v}
        for _ in range(k):
            if not frontier:
                break
            frontier = self.expand(frontier) - visited
            visited |= frontier
        return frontier

    def local(self, v):
        nbrs = sorted(self.neighbors(v) - {v})
        return nbrs, {a: self.neighbors(a) for a in nbrs}

    def solve(self, kind, params):
        match kind:
            case "k_order_neighbors":
                return NodeSet(self.k_order(params["v"], params["k"]))
            case "common_k_order":
                u, v, k = params["u"], params["v"], params["k"]
                return NodeSet(self.k_order(u, k) & self.k_order(v, k))
            case "complete_subgraph":
                nodes = sorted(set(params["nodes"]))
                adj = {x: self.neighbors(x) for x in nodes}
                return Boolean(all(b in adj[a] for a, b in combinations(nodes, 2)))
            case "highest_degree_nn":
                v = params["v"]
                nbrs, adj = self.local(v)
                walk = [m for n in nbrs for m in sorted(adj[n]) if m not in (v, n)]
                if not walk:
                    raise StepFailure("no candidates")
                degrees = dict(self.ask("node_degrees", nodes=sorted(set(walk))).value)
                if not degrees.keys() & set(walk):
                    raise StepFailure("no candidate degrees reported")
                return NodeId(first_maximum(walk, lambda m: degrees.get(m, -1)))
            case "neighbors_connected_to":
                return NodeSet(self.neighbors(params["v"]) & self.neighbors(params["m"]))
            case "edge_common_neighbors":
                return NodeSet(self.neighbors(params["u"]) & self.neighbors(params["v"]))
            case "triangles":
                v = params["v"]
                nbrs, adj = self.local(v)
                return TripleSet(frozenset(
                    (v, a, b) for a, b in combinations(nbrs, 2) if b in adj[a]
                ))
            case "neighbor_pairs":
                nbrs, adj = self.local(params["v"])
                return PairSet(frozenset(
                    (a, b) for a, b in combinations(nbrs, 2) if b in adj[a]
                ))
            case "connected_edges":
                u, v = params["u"], params["v"]
                return AnchoredPairSet(frozenset(
                    (x, y) for x in (u, v) for y in self.neighbors(x)
                ))
        raise MethodError(f'"{kind}" is not a composite task kind.')


def run_agent(task, ctx, method, client):
    if not task.composite:
        raise MethodError(f'"{task.kind}" is not a composite task kind.')
    agent = Agent(ctx, method, client)
    try:
        return f"Answer: {agent.solve(task.kind, task.params)}"
    except StepFailure as e:
        log.warning("Agent chain for %s aborted at %s.", task.id, e)
        return refusal


@dataclass
class TaskResult:
    task_id: str
    method: str
    raw_text: str
    parsed: object
    score: float
    error: str | None = None

    def to_json(self):
        return {
            "task_id": self.task_id,
            "method": self.method,
            "raw_text": self.raw_text,
            "parsed": self.parsed.to_json(),
            "score": self.score,
            "error": self.error,
        }


def run_task(task, ctx, method, client):
    def failure(message):
        log.warning("Task %s failed under %s: %s", task.id, method.name, message)
        return TaskResult(task.id, method.name, "", ParseFailure("", message), 0.0, message)

    if ctx.error is not None:
        return failure(ctx.error)
    try:
        if method.agent and task.composite:
            text = run_agent(task, ctx, method, client)
        else:
            text = client.complete(build_prompt(task, ctx, method))
    except TransportError as e:
        return failure(str(e))
    except Exception as e:
        return failure(f"{type(e).__name__}: {e}")
    parsed = parse_answer(text, task.answer_type)
    return TaskResult(task.id, method.name, text, parsed, score(parsed, task.truth))


@dataclass
class MethodRun:
    method: MethodSpec
    results: list
    report: ScoreReport

    def results_jsonl(self):
        return "".join(json.dumps(r.to_json()) + "\n" for r in self.results)

    def write(self, out_dir):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"results-{self.method.name}.jsonl").write_text(self.results_jsonl(), encoding="utf-8")
        (out / f"report-{self.method.name}.json").write_text(
            json.dumps(self.report.to_json(), indent=2), encoding="utf-8"
        )


def run_method(bench, method, client, parallelism=4):
    contexts = [prepare(g, method) for g in bench.graphs]

    def work(task):
        return run_task(task, contexts[task.graph_id], method, client)

    with ThreadPoolExecutor(max_workers=max(1, parallelism)) as pool:
        results = list(pool.map(work, bench.tasks))

    scores = [
        TaskScore(
            t.id, t.kind, t.level, r.score, t.graph_id,
            len(bench.graphs[t.graph_id].nodes),
        )
        for t, r in zip(bench.tasks, results)
    ]
    metadata = {
        "method": method.name,
        "model": client.name,
        "seed": bench.seed,
        "params": method.to_json(),
    }
    report = aggregate(scores, metadata)
    log.info("%s: overall %.4f over %d tasks.", method.name, report.overall, len(results))
    return MethodRun(method, results, report)


def run_evaluation(bench, methods, client, parallelism=4, out_dir=None):
    if not methods:
        raise MethodError("no methods to evaluate")
    if not bench.tasks:
        raise MethodError("benchmark has no tasks")
    runs = []
    for method in methods:
        log.info("Evaluating %s on %d tasks.", method.name, len(bench.tasks))
        run = run_method(bench, method, client, parallelism)
        if out_dir is not None:
            run.write(out_dir)
        runs.append(run)
    return runs


sweep_params = ("alpha_beta_sum", "alpha_beta_ratio", "gamma")


def sweep_methods(param, values, base=METHODS["graphinsight"]):
    """MethodSpecs for a hyperparameter sweep around base."""
    methods = []
    for raw in values:
        value = float(Fraction(str(raw).strip()))
        match param:
            case "alpha_beta_sum":
                changes = {"alpha": value * 0.3, "beta": value * 0.7}
            case "alpha_beta_ratio":
                alpha = 15 * value / (1 + value)
                changes = {"alpha": alpha, "beta": 15 - alpha}
            case "gamma":
                changes = {"gamma": value}
            case _:
                raise MethodError(f'Unknown sweep parameter "{param}".')
        methods.append(base.with_params(name=f"{base.name}[{param}={value:g}]", **changes))
    return methods
