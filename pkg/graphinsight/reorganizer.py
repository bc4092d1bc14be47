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

import math

from .bias import *


class LayoutError(Exception):
    pass


@dataclass(frozen=True)
class SubgraphBlock:
    center: int
    edge_ids: tuple[int, ...]
    edges: tuple[Edge, ...]
    importance: float
    directed: bool = False

    def __len__(self):
        return len(self.edges)

    @property
    def nodes(self):
        return frozenset({self.center}).union(*((e.u, e.v) for e in self.edges))

    @property
    def clauses(self):
        return tuple(EdgeClause(*e) for e in self.edges)

    def to_json(self):
        return {
            "center": self.center,
            "importance": self.importance,
            "edges": [[e.u, e.v, e.w] for e in self.edges],
        }


def decompose(g, pr):
    """
    Split the edge set into subgraph blocks. Centers are visited by
    descending PageRank and claim every incident edge not yet claimed.
    """
    used, blocks = set(), []
    for v in pr.ranked():
        claimed = tuple(i for i in g.incidence[v] if i not in used)
        if not claimed:
            continue
        used.update(claimed)
        blocks.append(SubgraphBlock(
            v, claimed, tuple(g.edges[i] for i in claimed), pr[v], g.directed
        ))
    return blocks


def capacity(pct, total):
    return math.floor(pct / 100 * total + 0.5)


@dataclass(frozen=True)
class RegionLayout:
    alpha_pct: float
    beta_pct: float
    head: tuple[SubgraphBlock, ...]
    middle: tuple[SubgraphBlock, ...]
    tail: tuple[SubgraphBlock, ...]
    head_capacity: int
    tail_capacity: int

    def blocks(self):
        return (*self.head, *self.middle, *self.tail)

    def edge_count(self, region):
        return sum(len(b) for b in getattr(self, region))

    @property
    def directed(self):
        return any(b.directed for b in self.blocks())

    def sequence(self):
        order = [i for b in self.blocks() for i in b.edge_ids]
        clauses = tuple(c for b in self.blocks() for c in b.clauses)
        return DescriptionSequence(preamble(self.directed), clauses, tuple(order))

    def to_json(self):
        head_end = self.edge_count("head")
        tail_start = head_end + self.edge_count("middle")
        return {
            "alpha": self.alpha_pct,
            "beta": self.beta_pct,
            "head_capacity": self.head_capacity,
            "tail_capacity": self.tail_capacity,
            "boundaries": [head_end, tail_start, tail_start + self.edge_count("tail")],
            "head": [b.to_json() for b in self.head],
            "middle": [b.to_json() for b in self.middle],
            "tail": [b.to_json() for b in self.tail],
        }


def _alternate(blocks, head_cap, tail_cap):
    regions = {"head": [], "middle": [], "tail": []}
    room = {"head": head_cap, "tail": tail_cap}
    open_ = {r: c > 0 for r, c in room.items()}
    other = {"head": "tail", "tail": "head"}
    turn = "head"

    for block in blocks:
        target = None
        for region in (turn, other[turn]):
            if not open_[region]:
                continue
            if len(block) <= room[region]:
                target = region
                break
            open_[region] = False
        if target is None:
            regions["middle"].append(block)
            continue
        regions[target].append(block)
        room[target] -= len(block)
        if room[target] == 0:
            open_[target] = False
        turn = other[target] if open_[other[target]] else target
    return regions


def reorganize(blocks, alpha_pct=4.5, beta_pct=10.5):
    if alpha_pct < 0 or beta_pct < 0:
        raise LayoutError("region percentages must be non-negative")
    if alpha_pct + beta_pct > 100:
        raise LayoutError("regions exceed sequence")

    total = sum(len(b) for b in blocks)
    head_cap, tail_cap = capacity(alpha_pct, total), capacity(beta_pct, total)

    if head_cap + tail_cap >= total:
        head, used = [], 0
        for b in blocks:
            if used + len(b) > head_cap:
                break
            head.append(b)
            used += len(b)
        regions = {"head": head, "middle": [], "tail": blocks[len(head):]}
    else:
        regions = _alternate(blocks, head_cap, tail_cap)

    layout = RegionLayout(
        alpha_pct, beta_pct,
        tuple(regions["head"]), tuple(regions["middle"]), tuple(regions["tail"]),
        head_cap, tail_cap,
    )
    return layout.sequence(), layout


@dataclass(frozen=True)
class ImportanceProfile:
    values: tuple[float, ...]

    def __len__(self):
        return len(self.values)

    def as_array(self):
        return np.array(self.values)


def importance_profile(sequence, blocks):
    """Clause-level importance: each clause inherits its block's score."""
    owner = {i: b.importance for b in blocks for i in b.edge_ids}
    values = np.array([owner[i] for i in sequence.position_map], dtype=float)
    total = values.sum()
    if total > 0:
        values = values / total
    return ImportanceProfile(tuple(float(v) for v in values))


def kl_diagnostic(profile, psi):
    p = profile.as_array() if isinstance(profile, ImportanceProfile) else np.asarray(profile, dtype=float)
    if isinstance(psi, PositionalBiasModel):
        q = psi.weights(len(p))
    else:
        q = np.asarray(psi, dtype=float)
        if q.sum() > 0:
            q = q / q.sum()
    if len(p) != len(q):
        raise LayoutError("profile and curve lengths differ")

    support = p > 0
    if np.any(q[support] <= 0):
        raise LayoutError("unsupported support mismatch")
    return max(0.0, float(np.sum(p[support] * np.log(p[support] / q[support]))))
