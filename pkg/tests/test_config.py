import json
import os
import tempfile
import unittest

from graphinsight import *


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        cfg = Config()
        self.assertEqual((cfg.alpha, cfg.beta, cfg.gamma), (4.5, 10.5, 80.0))
        self.assertEqual((cfg.damping, cfg.max_iter, cfg.tol), (0.85, 100, 1e-8))
        self.assertEqual((cfg.parallelism, cfg.retries), (4, 3))
        self.assertIsNone(cfg.bias())

    def test_update_skips_none(self):
        cfg = Config().update(alpha=10, beta=None)
        self.assertEqual((cfg.alpha, cfg.beta), (10, 10.5))
        with self.assertRaisesRegex(ConfigError, "unknown settings: colour"):
            Config().update(colour="blue")

    def test_method_carries_settings(self):
        spec = Config(alpha=2, beta=3, gamma=50).method("graphinsight")
        self.assertEqual((spec.alpha, spec.beta, spec.gamma), (2, 3, 50))
        self.assertTrue(spec.rag)

    def test_simulator_client(self):
        cfg = Config(psi=[0.9, 0.2, 0.9], seed=5)
        client = cfg.client()
        self.assertIsInstance(client, SimulatedClient)
        self.assertEqual(client.seed, 5)
        self.assertEqual(client.bias, PositionalBiasModel(0.9, 0.2, 0.9))

    def test_invalid(self):
        with self.assertRaises(ConfigError):
            Config(psi=(0.9, 0.2))
        with self.assertRaises(ConfigError):
            Config(parallelism=0)

    def test_load(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "config.json")
            with open(path, "w") as f:
                json.dump({"gamma": 60, "psi": [1, 0.5, 1], "parallelism": 2}, f)
            cfg = load_config(path)
            self.assertEqual((cfg.gamma, cfg.psi, cfg.parallelism), (60, (1.0, 0.5, 1.0), 2))

            with open(path, "w") as f:
                json.dump({"gama": 60}, f)
            with self.assertRaises(ConfigError):
                load_config(path)

            with open(path, "w") as f:
                f.write("[1, 2]")
            with self.assertRaisesRegex(ConfigError, "JSON object"):
                load_config(path)

        with self.assertRaisesRegex(ConfigError, "cannot read"):
            load_config(os.path.join(tmp, "missing.json"))


if __name__ == "__main__":
    unittest.main()
