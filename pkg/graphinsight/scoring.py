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

from scipy.stats import norm, rankdata

from .parser import *


class ScoringError(Exception):
    pass


def score(pred, truth):
    if isinstance(pred, ParseFailure):
        return 0.0
    if pred.answer_type != truth.answer_type:
        raise ScoringError("incomparable answer types")

    match truth.answer_type:
        case "boolean" | "node_id":
            return 1.0 if pred.value == truth.value else 0.0
        case "number":
            y, t = pred.value, truth.value
            if y == t:
                return 1.0
            denom = max(y, t) if max(y, t) > 0 else max(abs(y), abs(t))
            return min(1.0, max(0.0, 1 - abs(y - t) / denom))

    a, b = set(pred.value), set(truth.value)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


@dataclass(frozen=True)
class WilcoxonResult:
    statistic: float
    w_plus: float
    w_minus: float
    n: int
    one_sided_p: float
    two_sided_p: float
    method: str

    def __iter__(self):
        return iter((self.statistic, self.one_sided_p, self.two_sided_p))

    def to_json(self):
        return dict(self.__dict__)


def _null_counts(doubled):
    """Counts of each doubled rank sum over all 2^n sign assignments."""
    counts = np.zeros(int(doubled.sum()) + 1, dtype=np.int64)
    counts[0] = 1
    for r in doubled:
        shifted = np.zeros_like(counts)
        shifted[r:] = counts[:len(counts) - r]
        counts = counts + shifted
    return counts


def wilcoxon_signed_rank(pairs, min_n=5):
    """
    Signed-rank test on the differences b - a. The one-sided p-value is
    for the alternative that b tends to exceed a.
    """
    d = np.array([b - a for a, b in pairs], dtype=float)
    if d.size and not d.any():
        raise ScoringError("degenerate sample")
    d = d[d != 0]
    n = int(d.size)
    if n < min_n:
        raise ScoringError(f"need at least {min_n} nonzero differences, got {n}")

    ranks = rankdata(np.abs(d))
    w_plus = float(ranks[d > 0].sum())
    w_minus = float(ranks[d < 0].sum())
    w = min(w_plus, w_minus)

    if n <= 25:
        doubled = np.rint(2 * ranks).astype(np.int64)
        cdf = np.cumsum(_null_counts(doubled)) / 2.0 ** n
        one = float(cdf[int(round(2 * w_minus))])
        two = min(1.0, 2 * float(cdf[int(round(2 * w))]))
        return WilcoxonResult(w, w_plus, w_minus, n, one, two, "exact")

    mean = n * (n + 1) / 4
    _, ties = np.unique(np.abs(d), return_counts=True)
    var = n * (n + 1) * (2 * n + 1) / 24 - float(np.sum(ties ** 3 - ties)) / 48
    sd = np.sqrt(var)
    one = float(norm.cdf((w_minus - mean + 0.5) / sd))
    two = min(1.0, 2 * float(norm.cdf((w - mean + 0.5) / sd)))
    return WilcoxonResult(w, w_plus, w_minus, n, one, two, "normal")


@dataclass(frozen=True)
class TaskScore:
    task_id: str
    kind: str
    level: str
    score: float
    graph_id: int = 0
    node_count: int = 0

    def to_json(self):
        return dict(self.__dict__)


def _mean(values):
    return float(np.mean(values))


def _group(scores, key):
    groups = {}
    for s in scores:
        groups.setdefault(key(s), []).append(s.score)
    return {k: _mean(v) for k, v in groups.items()}


@dataclass
class ScoreReport:
    scores: list
    per_kind: dict
    per_level: dict
    overall: float
    per_size: dict
    per_graph: dict
    metadata: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "metadata": self.metadata,
            "overall": self.overall,
            "per_level": self.per_level,
            "per_kind": self.per_kind,
            "per_size": self.per_size,
            "per_graph": self.per_graph,
            "scores": [s.to_json() for s in self.scores],
        }

    @classmethod
    def from_json(cls, data):
        try:
            scores = [TaskScore(**s) for s in data["scores"]]
        except (KeyError, TypeError) as e:
            raise ScoringError(f"malformed report: {e}")
        return aggregate(scores, data.get("metadata", {}))

    def rows(self):
        rows = [("Overall", self.overall)]
        for level in ("macro", "micro"):
            if level in self.per_level:
                rows.append((level.capitalize(), self.per_level[level]))
        return rows

    def table(self):
        rows = self.rows()
        rows.extend((f"  {k}", v) for k, v in sorted(self.per_kind.items()))
        rows.extend((f"  |V| {k}", v) for k, v in self.per_size.items())
        width = max(len(r[0]) for r in rows) + 2
        lines = [f"{'':<{width}}{self.metadata.get('method', 'score')}"]
        lines.extend(f"{name:<{width}}{value:.4f}" for name, value in rows)
        return "\n".join(lines)


def _size_bucket(n, width):
    lo = (n // width) * width
    return f"{lo}-{lo + width - 1}"


def aggregate(scores, metadata=None, bucket=50):
    scores = list(scores)
    if not scores:
        raise ScoringError("nothing to aggregate")
    by_size = sorted(scores, key=lambda s: s.node_count)
    return ScoreReport(
        scores,
        per_kind=_group(scores, lambda s: s.kind),
        per_level=_group(scores, lambda s: s.level),
        overall=_mean([s.score for s in scores]),
        per_size=_group(by_size, lambda s: _size_bucket(s.node_count, bucket)),
        per_graph=_group(scores, lambda s: str(s.graph_id)),
        metadata=dict(metadata or {}),
    )


def compare_reports(baseline, method):
    """Wilcoxon test over the per-graph means the two reports share."""
    shared = sorted(set(baseline.per_graph) & set(method.per_graph), key=int)
    return wilcoxon_signed_rank(
        [(baseline.per_graph[g], method.per_graph[g]) for g in shared]
    )


def comparison_table(reports):
    """Overall / Macro / Micro rows, one column per named report."""
    names = list(reports)
    labels = ["Overall", "Macro", "Micro"]
    width = max(len(n) for n in names + labels) + 2
    lines = ["".join(f"{h:<{width}}" for h in ["", *names]).rstrip()]
    for label in labels:
        cells = [label]
        for name in names:
            values = dict(reports[name].rows())
            cells.append(f"{values[label]:.4f}" if label in values else "-")
        lines.append("".join(f"{c:<{width}}" for c in cells).rstrip())
    return "\n".join(lines)
