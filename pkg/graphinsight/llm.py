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
import os

from openai import OpenAI, OpenAIError
from tenacity import (
    RetryError,
    Retrying,
    before_sleep_log,
    retry_if_exception_type,
    stop_after_attempt,
    wait_exponential,
)

from .simulator import *


log = logging.getLogger(__name__)


class TransportError(Exception):
    pass


class LlmClient:
    name = "client"

    def complete(self, prompt):
        raise NotImplementedError


class SimulatedClient(LlmClient):
    name = "simulator"

    def __init__(self, bias, seed=0):
        self.bias = bias
        self.seed = seed

    def complete(self, prompt):
        return simulate_llm(prompt, self.bias, self.seed)


class RemoteClient(LlmClient):
    """Chat-completions client with bounded exponential retry."""

    def __init__(self, endpoint=None, model="gpt-4o-mini",
                 api_key_env="OPENAI_API_KEY", timeout=60.0, retries=3,
                 backoff=1.0, client=None):
        self.model = model
        self.name = model
        self.retries = retries
        self.backoff = backoff
        if client is None:
            key = os.environ.get(api_key_env)
            if key is None and endpoint is None:
                raise TransportError(f"{api_key_env} is not set")
            client = OpenAI(
                api_key=key or "unused", base_url=endpoint,
                timeout=timeout, max_retries=0,
            )
        self.client = client

    def _request(self, prompt):
        response = self.client.chat.completions.create(
            model=self.model,
            messages=[{"role": "user", "content": prompt}],
            temperature=0,
        )
        return response.choices[0].message.content or ""

    def complete(self, prompt):
        retrying = Retrying(
            stop=stop_after_attempt(self.retries),
            wait=wait_exponential(multiplier=self.backoff, max=30),
            retry=retry_if_exception_type(OpenAIError),
            before_sleep=before_sleep_log(log, logging.WARNING),
        )
        try:
            return retrying(self._request, prompt)
        except RetryError as e:
            cause = e.last_attempt.exception()
            raise TransportError(f"request failed after {self.retries} attempts: {cause}")
