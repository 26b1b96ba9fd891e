"""End-to-end checks of the cliquelb command line: exit codes, output
determinism, the CSV header and JSON schema conformance."""

import argparse
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

CLI = None
ROOT = Path(__file__).resolve().parent.parent
FIXTURE = ROOT / "data" / "example_4x4.lbg"
SCHEMAS = ROOT / "schemas"


def run(*args, check_code=None):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True, timeout=300)
    if check_code is not None and proc.returncode != check_code:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {check_code}\n{proc.stderr}")
    return proc


def validate(doc, schema_name):
    schema = json.loads((SCHEMAS / schema_name).read_text())
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)


class Cli(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_schemas_are_valid(self):
        for path in SCHEMAS.glob("*.json"):
            jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))

    def test_verify_fixture(self):
        out = run("verify-lb", "--in", FIXTURE, "--m-bound", 12, check_code=0)
        report = json.loads(out.stdout)
        validate(report, "verify_report.schema.json")
        self.assertTrue(report["passed"])
        self.assertEqual(report["k_value"], 4)
        failed = run("verify-lb", "--in", FIXTURE, "--m-bound", 11, check_code=1)
        self.assertFalse(json.loads(failed.stdout)["item1"]["ok"])

    def test_check_reduction(self):
        out = run("check-reduction", "--lbg", FIXTURE, "--ell", 4, "--exhaustive", check_code=0)
        report = json.loads(out.stdout)
        validate(report, "reduction_report.schema.json")
        self.assertEqual(report["instances_checked"], 256)
        self.assertEqual(report["mismatches"], [])

        sampled = [run("check-reduction", "--lbg", FIXTURE, "--ell", 5, "--samples", 30, "--seed", 9,
                       check_code=0).stdout for _ in range(2)]
        self.assertEqual(sampled[0], sampled[1])
        self.assertEqual(json.loads(sampled[0])["instances_checked"], 30)

    def test_check_reduction_reports_mismatches(self):
        # two designated sets sharing the A-pair {a0, a1}: the reduction breaks
        bad = self.tmp / "bad.lbg"
        bad.write_text("LBG 4 2\n4 4 8\n0 0\n0 1\n0 2\n0 3\n1 0\n1 1\n1 2\n1 3\n0 1 0 1\n0 1 2 3\n0\n0 2\n")
        out = run("check-reduction", "--lbg", bad, "--ell", 4, "--exhaustive", check_code=1)
        report = json.loads(out.stdout)
        validate(report, "reduction_report.schema.json")
        self.assertFalse(report["passed"])
        self.assertIn({"x": "10", "y": "01", "disj": False, "clique_found": True}, report["mismatches"])
        run("verify-lb", "--in", bad, "--m-bound", 100, check_code=1)

    def test_gen_lb(self):
        first = run("gen-lb", "--n", 32, "--seed", 3, check_code=0).stdout
        self.assertEqual(first, run("gen-lb", "--n", 32, "--seed", 3, check_code=0).stdout)
        self.assertTrue(first.startswith("LBG 32 "))
        self.assertNotEqual(first, run("gen-lb", "--n", 32, "--seed", 4, check_code=0).stdout)

        path = self.tmp / "g.lbg"
        summary = json.loads(run("gen-lb", "--n", 32, "--seed", 3, "--out", path, check_code=0).stdout)
        validate(summary, "gen_lb.schema.json")
        self.assertEqual(path.read_text(), first)
        self.assertEqual(summary["stats"]["h_size"], int(first.split()[2]))
        run("verify-lb", "--in", path, "--m-bound", 362, check_code=0)

        default_seed = run("gen-lb", "--n", 16, check_code=0).stdout
        self.assertEqual(default_seed, run("gen-lb", "--n", 16, "--seed", 1, check_code=0).stdout)

    def test_lb_stats(self):
        out = run("lb-stats", "--n-list", "32,64", "--seeds", 5, check_code=0).stdout
        lines = out.splitlines()
        self.assertEqual(lines[0],
                         "n,seed,k_total,h_size,edge_count,pairs_over_threshold_a,pairs_over_threshold_b,expected_k")
        self.assertEqual(len(lines), 11)
        self.assertEqual([row.split(",")[:2] for row in lines[1:3]], [["32", "1"], ["32", "2"]])
        threaded = run("lb-stats", "--n-list", "32,64", "--seeds", 5, "--threads", 4, check_code=0).stdout
        self.assertEqual(out, threaded)

        rows = json.loads(run("lb-stats", "--n-list", "32", "--seeds", 5, "--format", "json", check_code=0).stdout)
        validate(rows, "lb_stats.schema.json")
        self.assertEqual([r["seed"] for r in rows], [1, 2, 3, 4, 5])

    def test_reduce_protocol_congest(self):
        graph = self.tmp / "gprime.txt"
        summary = json.loads(run("reduce", "--lbg", FIXTURE, "--x", "1001", "--y", "0111", "--ell", 4,
                                 "--out", graph, check_code=0).stdout)
        validate(summary, "reduce.schema.json")
        self.assertEqual((summary["n"], summary["m"], summary["cut_size"]), (8, 17, 12))
        self.assertTrue(summary["contains_clique"])
        partition = Path(str(graph) + ".partition")
        self.assertEqual(partition.read_text().split(), ["0", "1", "2", "3"])

        proto = json.loads(run("protocol", "--graph", graph, "--partition", partition, "--json",
                               check_code=0).stdout)
        validate(proto, "protocol.schema.json")
        self.assertEqual(proto["case"], "SmallCut")
        self.assertEqual(proto["total_bits"], 16)
        self.assertEqual(proto["budget"], 72)
        self.assertTrue(proto["correct_vs_oracle"])
        self.assertIn([0, 3, 4, 7], proto["cliques"])
        text = run("protocol", "--graph", graph, "--partition", partition, check_code=0).stdout
        self.assertIn("total_bits 16", text)

        cong = json.loads(run("congest", "--graph", graph, "--ell", 4, "--bandwidth", 4, "--partition", partition,
                              check_code=0).stdout)
        validate(cong, "congest.schema.json")
        self.assertEqual(cong["rounds_used"], 4)
        self.assertEqual(cong["detecting_nodes"], [0, 3, 4, 7])
        self.assertEqual(cong["cut_bits"], 306)
        bare = json.loads(run("congest", "--graph", graph, "--ell", 5, "--bandwidth", 4, check_code=0).stdout)
        validate(bare, "congest.schema.json")
        self.assertNotIn("cut_bits", bare)
        self.assertFalse(bare["detected"])
        run("congest", "--graph", graph, "--ell", 4, "--bandwidth", 4, "--max-n", 7, check_code=2)

    def test_usage_errors(self):
        run("gen-lb", "--n", 2, check_code=2)
        run(check_code=2)
        run("frobnicate", check_code=2)
        run("verify-lb", "--in", FIXTURE, check_code=2)
        run("verify-lb", "--in", self.tmp / "missing.lbg", "--m-bound", 3, check_code=2)
        run("check-reduction", "--lbg", FIXTURE, "--ell", 4, check_code=2)
        run("check-reduction", "--lbg", FIXTURE, "--ell", 3, "--exhaustive", check_code=2)
        run("reduce", "--lbg", FIXTURE, "--x", "10", "--y", "01", "--out", self.tmp / "g", check_code=2)
        run("congest", "--graph", FIXTURE, "--ell", 4, "--bandwidth", 4, check_code=2)
        run("lb-stats", "--n-list", "32,abc", "--seeds", 5, check_code=2)
        run("--format", "xml", "verify-lb", "--in", FIXTURE, "--m-bound", 12, check_code=2)
        err = run("gen-lb", check_code=2).stderr
        self.assertIn("--n", err)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--cli", required=True)
    args, rest = parser.parse_known_args()
    CLI = args.cli
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)
