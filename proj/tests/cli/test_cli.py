"""End-to-end checks of the isored command-line tool.

Usage: test_cli.py <isored binary> <data dir> <golden dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN, DATA, GOLDEN = sys.argv[1:4]


def run(*args):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def data(name):
    return os.path.join(DATA, name)


def golden(name):
    with open(os.path.join(GOLDEN, name), encoding="utf-8") as f:
        return f.read()


class Golden(unittest.TestCase):
    cases = [
        ("reduce_hub6.json", ["reduce", data("hub6.json"), "--set", "w2,w5"]),
        ("reduce_hub6_all.json", ["reduce", data("hub6.json"), "--set", "w1,w2,w3,w4,w5,w6"]),
        ("reduce_k4_to_v1.json", ["reduce", data("k4.json"), "--to", "v1"]),
        ("spectrum_hub6.json", ["spectrum", data("hub6.json")]),
        ("spectrum_fork6.json", ["spectrum", data("fork6.json")]),
        ("verify_hub6.txt", ["verify", data("hub6.json"), "--set", "w2,w5"]),
        ("verify_k3_laplacian.txt", ["verify", data("k3.json"), "--laplacian", "comb", "--set", "v1,v2"]),
        ("bas_k23.json", ["bas", data("k23.json")]),
        ("scc_filter_twocycles.json", ["scc", "--filter", data("twocycles.json")]),
        ("weightset_fork6.json", ["weightset", "--subring", "unit", data("fork6.json")]),
        ("expand_hub4.json", ["expand", data("hub4.json"), "--set", "v1,v4"]),
        ("laplacian_k3.json", ["laplacian", "--kind", "comb", data("k3.json")]),
    ]

    def test_outputs(self):
        for name, args in self.cases:
            with self.subTest(name=name):
                code, out, _ = run(*args)
                self.assertEqual(code, 0)
                self.assertEqual(out, golden(name))

    def test_repeatable(self):
        for _, args in self.cases:
            self.assertEqual(run(*args)[1], run(*args)[1])


class Semantics(unittest.TestCase):
    def test_reduce_worked_example(self):
        code, out, _ = run("reduce", data("hub6.json"), "--set", "w2,w5")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        weights = {(e["from"], e["to"]): e["weight"] for e in doc["graph"]["edges"]}
        self.assertEqual(weights[("w2", "w2")], "1/(l-1)")
        self.assertEqual(weights[("w5", "w2")], "1/l")
        self.assertEqual(weights[("w5", "w5")], "(l+1)/l")
        self.assertEqual(sorted(p["re"] for p in doc["forbidden"]["points"]), [0.0, 1.0])

    def test_reduce_to_single_vertex(self):
        doc = json.loads(run("reduce", data("k4.json"), "--to", "v1")[1])
        self.assertEqual(doc["graph"]["vertices"], ["v1"])

    def test_sequence(self):
        code, out, _ = run("reduce", data("hub6.json"), "--seq", data("hub6_seq.json"))
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["graph"]["vertices"], ["w2"])

    def test_spectra(self):
        roots = json.loads(run("spectrum", data("hub6.json"))[1])["roots"]
        self.assertEqual(sorted((r["re"], r["mult"]) for r in roots), [(-1.0, 1), (0.0, 2), (1.0, 2), (2.0, 1)])
        self.assertEqual(json.loads(run("spectrum", data("empty.json"))[1])["roots"], [])

    def test_verify_exact_note(self):
        code, out, _ = run("verify", data("k3.json"), "--laplacian", "comb", "--set", "v1,v2")
        self.assertEqual(code, 0)
        self.assertIn("PASS", out)
        self.assertIn("spectrum preserved exactly", out)

    def test_verify_broken_reduction(self):
        code, out, _ = run("verify", data("hub6.json"), "--set", "w2,w5", "--reduced", data("hub6_reduced_broken.json"))
        self.assertEqual(code, 3)
        self.assertIn("FAIL", out)
        self.assertIn("unmatched in first", out)

    def test_weightset_report(self):
        code, out, err = run("weightset", "--subring", "unit", data("fork6.json"))
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)["vertices"]), 4)
        self.assertIn("PASS", err)

    def test_scc_components(self):
        doc = json.loads(run("scc", data("twocycles.json"))[1])
        self.assertEqual(doc["components"], [["b1", "b2", "b3"], ["a1", "a2", "a3"]])
        filtered = json.loads(run("scc", "--filter", data("twocycles.json"))[1])
        self.assertNotIn(("a1", "b1"), {(e["from"], e["to"]) for e in filtered["edges"]})

    def test_bisect(self):
        code, out, _ = run("bisect", data("cycle3.json"), "--edge", "v1,v2", "--w-ij", "1", "--w-jj", "0", "--w-jk", "l")
        self.assertEqual(code, 0)
        self.assertIn("v1~v2~bisect", json.loads(out)["vertices"])
        code, _, err = run("bisect", data("cycle3.json"), "--edge", "v1,v2", "--w-ij", "1", "--w-jj", "0", "--w-jk", "1")
        self.assertEqual(code, 2)

    def test_isocheck(self):
        doc = json.loads(run("isocheck", data("fork6.json"), data("fork6.json"))[1])
        self.assertTrue(doc["isomorphic"])
        doc = json.loads(run("isocheck", data("fork6.json"), data("fork4.json"))[1])
        self.assertFalse(doc["isomorphic"])
        self.assertTrue(doc["bas_equivalent"])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "s.json")
            code, out, _ = run("--out", path, "spectrum", data("hub6.json"))
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            with open(path, encoding="utf-8") as f:
                self.assertEqual(f.read(), golden("spectrum_hub6.json"))

    def test_proptest(self):
        code, out, _ = run("proptest", "--cases", "5", "--filter", "ratfun.")
        self.assertEqual(code, 0)
        self.assertIn("5/5 properties passed", out)


class ExitCodes(unittest.TestCase):
    def test_input_errors(self):
        self.assertEqual(run("spectrum", data("bad_weight.json"))[0], 1)
        self.assertEqual(run("spectrum", data("no_such_file.json"))[0], 1)
        self.assertEqual(run("reduce", data("hub6.json"), "--set", "w2,zz")[0], 1)
        self.assertEqual(run("reduce", data("hub6.json"))[0], 1)
        self.assertEqual(run("frobnicate")[0], 1)
        self.assertEqual(run("weightset", "--subring", "reals", data("fork6.json"))[0], 1)

    def test_precondition_errors(self):
        code, _, err = run("reduce", data("k3.json"), "--set", "v1")
        self.assertEqual(code, 2)
        self.assertIn("v2 -> v3", err)
        self.assertEqual(run("bas", data("empty.json"))[0], 2)
        self.assertEqual(run("laplacian", "--kind", "comb", data("cycle3.json"))[0], 2)

    def test_help(self):
        self.assertEqual(run("--help")[0], 0)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1])
