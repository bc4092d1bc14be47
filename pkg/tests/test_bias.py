import unittest

from graphinsight import *


class TestPositionalBias(unittest.TestCase):
    def test_plateaus(self):
        psi = PositionalBiasModel(0.9, 0.3, 0.8, head_frac=0.1, tail_frac=0.2)
        self.assertEqual(psi.recall(0.05), 0.9)
        self.assertEqual(psi.recall(0.1), 0.3)
        self.assertEqual(psi.recall(0.79), 0.3)
        self.assertEqual(psi.recall(0.8), 0.8)
        self.assertEqual(psi.curve(10).tolist(), [0.9] + [0.3] * 7 + [0.8] * 2)

    def test_weights_sum_to_one(self):
        psi = PositionalBiasModel(0.95, 0.2, 0.95)
        for n in (1, 7, 100):
            self.assertAlmostEqual(float(psi.weights(n).sum()), 1.0)

    def test_constant(self):
        psi = PositionalBiasModel.constant(1.0)
        self.assertEqual(psi.mean_recall(13), 1.0)
        self.assertEqual(psi.mean_recall(0), 0.0)

    def test_parse(self):
        psi = PositionalBiasModel.parse("0.9,0.2,0.8")
        self.assertEqual((psi.head, psi.middle, psi.tail), (0.9, 0.2, 0.8))
        with self.assertRaises(BiasModelError):
            PositionalBiasModel.parse("0.9,0.2")

    def test_invalid(self):
        with self.assertRaisesRegex(BiasModelError, "U-shaped"):
            PositionalBiasModel(0.1, 0.5, 0.9)
        with self.assertRaises(BiasModelError):
            PositionalBiasModel(1.2, 0.5, 0.9)
        with self.assertRaisesRegex(BiasModelError, "overlap"):
            PositionalBiasModel(0.9, 0.5, 0.9, head_frac=0.6, tail_frac=0.5)


if __name__ == "__main__":
    unittest.main()
