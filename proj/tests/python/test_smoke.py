"""Smoke tests for the isored Python module.

Usage: test_smoke.py <data dir>  (with the built package on PYTHONPATH)
"""

import doctest
import os
import sys
import unittest

import isored

DATA = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")


def load(name):
    return isored.Graph.read(os.path.join(DATA, name))


def roots(spec):
    return sorted((round(z.real, 9), round(z.imag, 9), m) for z, m in spec)


class Weights(unittest.TestCase):
    def test_canonical_form(self):
        w = isored.Weight("(l^2-1)/(2*l-2)")
        self.assertEqual(str(w), "(l+1)/2")
        self.assertEqual(w.denominator, "1")
        self.assertEqual(w.pi, 1)
        self.assertIsNone(isored.Weight(0).pi)

    def test_arithmetic(self):
        lam = isored.Weight.lam()
        self.assertEqual(1 / (lam - 1) + 1, lam / (lam - 1))
        self.assertEqual(isored.parse_weight(isored.format_weight(lam / 3)), lam / 3)
        self.assertAlmostEqual(isored.Weight("1/(l-2)")(4), 0.5)
        self.assertIsNone(isored.Weight("1/(l-2)")(2))

    def test_parse_error(self):
        with self.assertRaises(isored.InputError) as ctx:
            isored.Weight("(l+1")
        self.assertEqual(ctx.exception.kind, "Parse")


class Reductions(unittest.TestCase):
    def test_worked_example(self):
        g = load("hub6.json")
        r = isored.reduce(g, ["w2", "w5"])
        self.assertEqual(r.vertices, ["w2", "w5"])
        self.assertEqual(str(r.weight("w2", "w2")), "1/(l-1)")
        self.assertEqual(str(r.weight("w5", "w5")), "(l+1)/l")
        self.assertEqual(r, isored.reduce(g, ["w2", "w5"], method="branches"))
        self.assertEqual(sorted(z.real for z in isored.forbidden_set(g, ["w2", "w5"])), [0.0, 1.0])
        ok, report = isored.verify(g, ["w2", "w5"])
        self.assertTrue(ok, report)

    def test_spectrum(self):
        spec = isored.spectrum(load("hub6.json"))
        self.assertEqual(roots(spec), [(-1.0, 0.0, 1), (0.0, 0.0, 2), (1.0, 0.0, 2), (2.0, 0.0, 1)])
        self.assertEqual(sum(m for _, m in spec), 6)

    def test_complete_graph(self):
        r, forbidden = isored.reduce_to(load("k4.json"), ["v1"])
        self.assertEqual(str(r.weight("v1", "v1")), "3/(l-2)")
        self.assertEqual(len(forbidden), 4)

    def test_sequence(self):
        r, _ = isored.reduce_sequence(load("hub6.json"), [["w2", "w5"], ["w2"]])
        self.assertEqual(r.vertices, ["w2"])

    def test_invalid_set(self):
        with self.assertRaises(isored.PreconditionError) as ctx:
            isored.reduce(load("k3.json"), ["v1"])
        self.assertEqual(ctx.exception.kind, "InvalidStructuralSet")
        self.assertFalse(isored.is_structural_set(load("k3.json"), ["v1"]))

    def test_broken_reduction_detected(self):
        g = load("hub6.json")
        ok, report = isored.verify(g, ["w2", "w5"], reduced=load("hub6_reduced_broken.json"))
        self.assertFalse(ok)
        self.assertIn("unmatched", report)


class Structure(unittest.TestCase):
    def test_bas_and_weightset(self):
        g = load("fork6.json")
        self.assertTrue(isored.in_g_pi(g))
        self.assertTrue(len(isored.bas(g)) >= 1)
        w, report = isored.weightset(g, "unit")
        self.assertTrue(report["ok"], report["report"])
        self.assertEqual(len(w), 4)
        self.assertIsNotNone(isored.isomorphism(w, load("fork4.json")))
        self.assertTrue(isored.bas_equivalent(g, load("fork4.json")))

    def test_scc(self):
        g = load("twocycles.json")
        self.assertEqual(isored.scc(g), [["b1", "b2", "b3"], ["a1", "a2", "a3"]])
        self.assertLess(len(isored.scc_filter(g).edges), len(g.edges))

    def test_laplacian(self):
        g = load("k3.json")
        lap = isored.laplacian(g, "comb")
        self.assertEqual(roots(isored.spectrum(lap)), [(0.0, 0.0, 1), (3.0, 0.0, 2)])
        ok, _ = isored.verify(lap, ["v1", "v2"])
        self.assertTrue(ok)

    def test_json_roundtrip(self):
        g = load("hub6.json")
        self.assertEqual(isored.Graph.from_json(g.to_json()), g)

    def test_graph_constructor(self):
        g = isored.Graph(["a", "b"], [("a", "b", 1), ("a", "b", "l"), ("b", "a", isored.Weight.lam())])
        self.assertEqual(str(g.weight("a", "b")), "l+1")
        self.assertEqual(str(isored.char_det(g)), "-l")


class Docs(unittest.TestCase):
    def test_module_doctest(self):
        self.assertEqual(doctest.testmod(isored).failed, 0)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1])
