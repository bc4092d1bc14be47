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

import click

from .config import *


log = logging.getLogger(__name__)

domain_errors = (
    GraphError, OracleError, DescriptionError, LayoutError, BiasModelError,
    GenConfigError, BenchmarkFormatError, ParsingError, ScoringError,
    TransportError, MethodError, ConfigError,
)


def parse_range(ctx, param, value):
    if value is None:
        return None
    lo, sep, hi = value.partition("..")
    try:
        lo, hi = int(lo), int(hi if sep else lo)
    except ValueError:
        raise click.BadParameter(f'expected "LO..HI", got "{value}"')
    return lo, hi


def parse_psi(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(float(x) for x in value.split(","))
    except ValueError:
        raise click.BadParameter(f'expected "p_h,p_m,p_t", got "{value}"')


def build_config(config_file, **overrides):
    cfg = load_config(config_file) if config_file else Config()
    return cfg.update(**overrides)


def run_guarded(func, *args, **kwargs):
    try:
        return func(*args, **kwargs)
    except domain_errors as e:
        raise click.ClickException(str(e))


region_options = [
    click.option("--alpha", type=float, help="Head region percentage."),
    click.option("--beta", type=float, help="Tail region percentage."),
    click.option("--gamma", type=float, help="Share of weak-region blocks kept for retrieval."),
]

client_options = [
    click.option("--endpoint", help="Chat-completions base URL."),
    click.option("--model", help="Remote model name."),
    click.option("--simulator-psi", "psi", callback=parse_psi,
                 help="Use the positional-bias simulator with plateaus p_h,p_m,p_t."),
    click.option("--seed", type=int, help="Simulator seed."),
    click.option("--parallelism", type=int, help="Concurrent requests."),
    click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False)),
]


def with_options(options):
    def decorator(func):
        for option in reversed(options):
            func = option(func)
        return func
    return decorator


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log progress.")
def main(verbose):
    """Graph description reorganization and graph-question benchmarking."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
    )


@main.command()
@click.option("--nodes", default="15..200", callback=parse_range, show_default=True)
@click.option("--components", default="1..3", callback=parse_range, show_default=True)
@click.option("--graphs", default=40, show_default=True)
@click.option("--tasks-per-kind", default=1, show_default=True)
@click.option("--density", default=0.1, show_default=True)
@click.option("--self-loop-prob", default=0.02, show_default=True)
@click.option("--multi-edge-prob", default=0.02, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--kind", "kinds", multiple=True, help="Task kind; repeat for several.")
@click.option("--out", required=True, type=click.Path(file_okay=False))
def generate(nodes, components, graphs, tasks_per_kind, density,
             self_loop_prob, multi_edge_prob, seed, kinds, out):
    """Generate a seeded benchmark into OUT."""
    def build():
        cfg = GenConfig(
            nodes[0], nodes[1], components[0], components[1], density,
            self_loop_prob=self_loop_prob, multi_edge_prob=multi_edge_prob,
            seed=seed,
        )
        bench = generate_benchmark(cfg, graphs, tasks_per_kind, list(kinds) or None)
        save_benchmark(bench, out)
        return bench

    bench = run_guarded(build)
    counts = bench.counts()
    click.echo(
        f"{len(bench.graphs)} graphs, {len(bench.tasks)} tasks "
        f"({counts['macro']} macro, {counts['micro']} micro) written to {out}"
    )
    for s in bench.skipped:
        click.echo(f"skipped {s['kind']} on graph {s['graph_id']}: {s['reason']}")


@main.command()
@click.argument("graph_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--method", default="raw", show_default=True)
@with_options(region_options)
@click.option("--layout", is_flag=True, help="Also print the region layout as JSON.")
def describe(graph_file, method, alpha, beta, gamma, layout):
    """Print the description of GRAPH_FILE under a method."""
    def build():
        with open(graph_file, encoding="utf-8") as f:
            g = Graph.from_json(json.load(f))
        spec = Config().update(alpha=alpha, beta=beta, gamma=gamma).method(method)
        ctx = prepare(g, spec)
        if ctx.error:
            raise DescriptionError(ctx.error)
        return ctx

    ctx = run_guarded(build)
    click.echo(str(ctx.description))
    if layout and ctx.layout is not None:
        data = {"layout": ctx.layout.to_json()}
        if ctx.base is not None:
            data["rag_base"] = ctx.base.to_json()
        click.echo(json.dumps(data, indent=2))


@main.command("eval")
@click.argument("bench_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--method", "methods", multiple=True, default=["raw", "graphinsight"], show_default=True)
@with_options(client_options)
@with_options(region_options)
@click.option("--out", required=True, type=click.Path(file_okay=False))
def evaluate(bench_dir, methods, endpoint, model, psi, seed, parallelism,
             config_file, alpha, beta, gamma, out):
    """Evaluate methods on the benchmark in BENCH_DIR."""
    def run():
        cfg = build_config(
            config_file, endpoint=endpoint, model=model, psi=psi, seed=seed,
            parallelism=parallelism, alpha=alpha, beta=beta, gamma=gamma,
        )
        specs = [cfg.method(m) for m in methods]
        bench = load_benchmark(bench_dir)
        return run_evaluation(bench, specs, cfg.client(), cfg.parallelism, out)

    runs = run_guarded(run)
    click.echo(comparison_table({r.method.name: r.report for r in runs}))


def _read_results(path):
    records = []
    with open(path, encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            if not line.strip():
                continue
            try:
                records.append(json.loads(line))
            except ValueError as e:
                raise ScoringError(f"{path} line {lineno}: {e}")
    return records


@main.command("score")
@click.argument("results_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--bench", "bench_dir", required=True, type=click.Path(exists=True, file_okay=False))
@click.option("--out", type=click.Path(dir_okay=False))
def score_results(results_file, bench_dir, out):
    """Re-score a results file against its benchmark."""
    def run():
        bench = load_benchmark(bench_dir)
        tasks = {t.id: t for t in bench.tasks}
        scores, method = [], None
        for r in _read_results(results_file):
            task = tasks.get(r.get("task_id"))
            if task is None:
                raise ScoringError(f'unknown task "{r.get("task_id")}"')
            method = r.get("method", method)
            parsed = parse_answer(r.get("raw_text", ""), task.answer_type)
            scores.append(TaskScore(
                task.id, task.kind, task.level, score(parsed, task.truth),
                task.graph_id, len(bench.graphs[task.graph_id].nodes),
            ))
        return aggregate(scores, {"method": method or "results", "seed": bench.seed})

    report = run_guarded(run)
    if out:
        with open(out, "w", encoding="utf-8") as f:
            json.dump(report.to_json(), f, indent=2)
    click.echo(report.table())


@main.command()
@click.argument("report_files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--baseline", help="Method name to test against.")
@click.option("--method", help="Method name tested for improvement.")
def report(report_files, baseline, method):
    """Compare saved reports; optionally test METHOD against BASELINE."""
    def run():
        reports = {}
        for path in report_files:
            with open(path, encoding="utf-8") as f:
                r = ScoreReport.from_json(json.load(f))
            reports[r.metadata.get("method", path)] = r
        test = None
        if baseline and method:
            for name in (baseline, method):
                if name not in reports:
                    raise ScoringError(f'no report for method "{name}"')
            test = compare_reports(reports[baseline], reports[method])
        return reports, test

    reports, test = run_guarded(run)
    click.echo(comparison_table(reports))
    if test is not None:
        click.echo(
            f"\nWilcoxon {method} vs {baseline}: W={test.statistic:g}, n={test.n}, "
            f"one-sided p={test.one_sided_p:.6g}, two-sided p={test.two_sided_p:.6g} ({test.method})"
        )


@main.command()
@click.argument("bench_dir", type=click.Path(exists=True, file_okay=False))
@click.option("--param", required=True, type=click.Choice(sweep_params))
@click.option("--values", required=True, help="Comma-separated settings, e.g. 5,10,15 or 3/7,1.")
@with_options(client_options)
@click.option("--out", required=True, type=click.Path(file_okay=False))
def sweep(bench_dir, param, values, endpoint, model, psi, seed, parallelism,
          config_file, out):
    """Evaluate the full method over a range of one hyperparameter."""
    def run():
        cfg = build_config(
            config_file, endpoint=endpoint, model=model, psi=psi, seed=seed,
            parallelism=parallelism,
        )
        methods = sweep_methods(param, values.split(","), cfg.method("graphinsight"))
        bench = load_benchmark(bench_dir)
        return run_evaluation(bench, methods, cfg.client(), cfg.parallelism, out)

    try:
        runs = run_guarded(run)
    except (ValueError, ZeroDivisionError) as e:
        raise click.ClickException(f"bad sweep value: {e}")
    click.echo(comparison_table({r.method.name: r.report for r in runs}))
