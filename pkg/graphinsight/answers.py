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

from .graph import *


class Answer:
    answer_type = None

    def __str__(self):
        return self._str()

    def to_json(self):
        raise NotImplementedError

    @staticmethod
    def from_json(answer_type, data):
        cls = answer_types.get(answer_type)
        if cls is None:
            raise ValueError(f'Unknown answer type "{answer_type}".')
        return cls.from_value(data)


def _format_tuple(t):
    return f"({', '.join(str(x) for x in t)})"


@dataclass(frozen=True)
class Boolean(Answer):
    value: bool

    answer_type = "boolean"

    def _str(self):
        return "Yes" if self.value else "No"

    def to_json(self):
        return self.value

    @classmethod
    def from_value(cls, data):
        return cls(bool(data))


@dataclass(frozen=True)
class Number(Answer):
    value: float

    answer_type = "number"

    def __post_init__(self):
        v = self.value
        if float(v).is_integer():
            object.__setattr__(self, "value", int(v))

    def _str(self):
        return str(self.value)

    def to_json(self):
        return self.value

    @classmethod
    def from_value(cls, data):
        return cls(data)


@dataclass(frozen=True)
class NodeId(Number):
    """A single node named as the answer; scored by exact match."""

    answer_type = "node_id"


@dataclass(frozen=True)
class NodeSet(Answer):
    value: frozenset

    answer_type = "node_set"

    def __post_init__(self):
        object.__setattr__(self, "value", frozenset(self.value))

    def items(self):
        return sorted(self.value)

    def _str(self):
        return f"[{', '.join(str(v) for v in self.items())}]"

    def to_json(self):
        return self.items()

    @classmethod
    def from_value(cls, data):
        return cls(frozenset(data))


@dataclass(frozen=True)
class PairSet(Answer):
    """Unordered node pairs, each stored ascending."""
    value: frozenset

    answer_type = "pair_set"

    def __post_init__(self):
        object.__setattr__(
            self, "value", frozenset(tuple(sorted(p)) for p in self.value)
        )

    def items(self):
        return sorted(self.value)

    def _str(self):
        return f"[{', '.join(_format_tuple(p) for p in self.items())}]"

    def to_json(self):
        return [list(p) for p in self.items()]

    @classmethod
    def from_value(cls, data):
        return cls(frozenset(tuple(p) for p in data))


@dataclass(frozen=True)
class AnchoredPairSet(PairSet):
    """Ordered pairs; the first element is the anchor endpoint."""

    answer_type = "anchored_pair_set"

    def __post_init__(self):
        object.__setattr__(self, "value", frozenset(tuple(p) for p in self.value))


@dataclass(frozen=True)
class TripleSet(PairSet):

    answer_type = "triple_set"


@dataclass(frozen=True)
class ScoredPairList(Answer):
    """(node, degree) pairs in ranking order."""
    value: tuple

    answer_type = "scored_pair_list"

    def __post_init__(self):
        object.__setattr__(self, "value", tuple(tuple(p) for p in self.value))

    def items(self):
        return list(self.value)

    def _str(self):
        return f"[{', '.join(_format_tuple(p) for p in self.value)}]"

    def to_json(self):
        return [list(p) for p in self.value]

    @classmethod
    def from_value(cls, data):
        return cls(tuple(tuple(p) for p in data))


@dataclass(frozen=True)
class ParseFailure:
    text: str
    reason: str = ""

    def __str__(self):
        return "<unparsed>"

    def to_json(self):
        return None


answer_types = {
    cls.answer_type: cls
    for cls in (
        Boolean, Number, NodeId, NodeSet, PairSet, AnchoredPairSet,
        TripleSet, ScoredPairList,
    )
}

set_types = {
    "node_set", "pair_set", "anchored_pair_set", "triple_set",
    "scored_pair_list",
}
