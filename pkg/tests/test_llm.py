import unittest
from types import SimpleNamespace

import httpx
import openai

from graphinsight import *


def reply(text):
    message = SimpleNamespace(content=text)
    return SimpleNamespace(choices=[SimpleNamespace(message=message)])


class FakeCompletions:
    def __init__(self, failures, text="Answer: 3"):
        self.failures = failures
        self.text = text
        self.calls = []

    def create(self, **kwargs):
        self.calls.append(kwargs)
        if len(self.calls) <= self.failures:
            raise openai.APIConnectionError(request=httpx.Request("POST", "http://localhost/v1"))
        return reply(self.text)


def fake_client(completions):
    return SimpleNamespace(chat=SimpleNamespace(completions=completions))


class TestRemoteClient(unittest.TestCase):
    def test_request_shape(self):
        completions = FakeCompletions(0)
        client = RemoteClient(model="test-model", client=fake_client(completions))
        self.assertEqual(client.complete("Q: hi"), "Answer: 3")
        [call] = completions.calls
        self.assertEqual(call["model"], "test-model")
        self.assertEqual(call["temperature"], 0)
        self.assertEqual(call["messages"], [{"role": "user", "content": "Q: hi"}])
        self.assertEqual(client.name, "test-model")

    def test_retries_then_succeeds(self):
        completions = FakeCompletions(2)
        client = RemoteClient(retries=3, backoff=0, client=fake_client(completions))
        with self.assertLogs("graphinsight.llm", "WARNING"):
            self.assertEqual(client.complete("Q: hi"), "Answer: 3")
        self.assertEqual(len(completions.calls), 3)

    def test_gives_up(self):
        completions = FakeCompletions(10)
        client = RemoteClient(retries=3, backoff=0, client=fake_client(completions))
        with self.assertLogs("graphinsight.llm", "WARNING"):
            with self.assertRaisesRegex(TransportError, "after 3 attempts"):
                client.complete("Q: hi")
        self.assertEqual(len(completions.calls), 3)

    def test_missing_key(self):
        with self.assertRaisesRegex(TransportError, "GRAPHINSIGHT_TEST_MISSING_KEY"):
            RemoteClient(api_key_env="GRAPHINSIGHT_TEST_MISSING_KEY")

    def test_empty_content(self):
        client = RemoteClient(client=fake_client(FakeCompletions(0, text=None)))
        self.assertEqual(client.complete("Q: hi"), "")


class TestSimulatedClient(unittest.TestCase):
    def test_delegates_to_simulator(self):
        psi = PositionalBiasModel(0.95, 0.2, 0.95)
        client = SimulatedClient(psi, seed=4)
        prompt = "This is an undirected graph with the following edges:\nFrom node 0 to node 1 with weight 4;\n\nQ: How many nodes are in this graph?"
        self.assertEqual(client.complete(prompt), simulate_llm(prompt, psi, 4))
        self.assertEqual(client.name, "simulator")


if __name__ == "__main__":
    unittest.main()
