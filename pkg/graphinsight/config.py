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

from dataclasses import fields

from .harness import *


class ConfigError(Exception):
    pass


@dataclass
class Config:
    alpha: float = 4.5
    beta: float = 10.5
    gamma: float = 80.0
    damping: float = 0.85
    max_iter: int = 100
    tol: float = 1e-8
    endpoint: str | None = None
    model: str = "gpt-4o-mini"
    api_key_env: str = "OPENAI_API_KEY"
    timeout: float = 60.0
    parallelism: int = 4
    retries: int = 3
    psi: tuple | None = None
    seed: int = 0

    def __post_init__(self):
        if self.psi is not None:
            if len(self.psi) != 3:
                raise ConfigError("psi takes three values: p_h, p_m, p_t")
            self.psi = tuple(float(p) for p in self.psi)
        if self.parallelism < 1:
            raise ConfigError("parallelism must be at least 1")

    def update(self, **overrides):
        """A copy with every override that is not None applied."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        unknown = set(changes) - {f.name for f in fields(self)}
        if unknown:
            raise ConfigError(f"unknown settings: {', '.join(sorted(unknown))}")
        return replace(self, **changes)

    def method(self, name):
        return get_method(name).with_params(
            alpha=self.alpha, beta=self.beta, gamma=self.gamma,
            damping=self.damping, max_iter=self.max_iter, tol=self.tol,
        )

    def bias(self):
        if self.psi is None:
            return None
        return PositionalBiasModel(*self.psi)

    def client(self):
        if self.psi is not None:
            return SimulatedClient(self.bias(), self.seed)
        return RemoteClient(
            self.endpoint, self.model, self.api_key_env,
            self.timeout, self.retries,
        )


def load_config(path):
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, ValueError) as e:
        raise ConfigError(f"cannot read {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a JSON object")
    try:
        return Config().update(**data)
    except (TypeError, BiasModelError) as e:
        raise ConfigError(str(e))
