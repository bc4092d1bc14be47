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

from .description import *


class BiasModelError(Exception):
    pass


@dataclass(frozen=True)
class PositionalBiasModel:
    """
    Three-plateau recall curve over relative sequence position.

    Positions below head_frac recall with probability head, positions at or
    above 1 - tail_frac with probability tail, the rest with middle.
    """
    head: float
    middle: float
    tail: float
    head_frac: float = 0.045
    tail_frac: float = 0.105

    def __post_init__(self):
        for name in ("head", "middle", "tail", "head_frac", "tail_frac"):
            if not 0 <= getattr(self, name) <= 1:
                raise BiasModelError(f"{name} must lie in [0, 1]")
        if self.head_frac + self.tail_frac > 1:
            raise BiasModelError("head and tail regions overlap")
        if self.head < self.middle or self.tail < self.middle:
            raise BiasModelError("recall curve must be U-shaped")

    @classmethod
    def constant(cls, p):
        return cls(p, p, p)

    @classmethod
    def parse(cls, text, head_frac=0.045, tail_frac=0.105):
        """Read "p_h,p_m,p_t" as given on the command line."""
        try:
            head, middle, tail = (float(x) for x in text.split(","))
        except ValueError:
            raise BiasModelError(f'expected "p_h,p_m,p_t", got "{text}"')
        return cls(head, middle, tail, head_frac, tail_frac)

    def recall(self, fraction):
        if fraction < self.head_frac:
            return self.head
        if fraction >= 1 - self.tail_frac:
            return self.tail
        return self.middle

    def positions(self, n):
        return (np.arange(n) + 0.5) / n

    def curve(self, n):
        return np.array([self.recall(p) for p in self.positions(n)])

    def weights(self, n):
        """The curve over n positions, normalized to a distribution."""
        c = self.curve(n)
        total = c.sum()
        return c / total if total > 0 else c

    def mean_recall(self, n):
        return float(self.curve(n).mean()) if n else 0.0
