# Copyright 2026 The langsketch Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the langsketch command-line tool.

usage: cli_test.py <langsketch binary> <repo root>
"""
import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = ""
ROOT = ""


def fixture(name):
    return os.path.join(ROOT, "tests", "fixtures", name)


def run(*args, stdin=None):
    return subprocess.run([BIN, *args], input=stdin, capture_output=True,
                          text=True, timeout=60)


class ReplayTest(unittest.TestCase):
    def test_teaser_matches_golden(self):
        res = run("replay", fixture("teaser.replay.json"))
        self.assertEqual(res.returncode, 0, res.stderr)
        sketch, log = res.stdout.split("### Event Log\n")
        with open(fixture("teaser.sketch.py")) as f:
            self.assertEqual(sketch, f.read())
        events = [json.loads(line) for line in log.splitlines()]
        self.assertEqual([e["rule"] for e in events], ["R0", "R1", "R2", "R3"])

    def test_empty_script(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write("[]")
        res = run("replay", f.name)
        os.unlink(f.name)
        self.assertEqual((res.returncode, res.stdout), (0, ""))

    def test_out_of_range_names_record(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            json.dump([{"type": "type_text", "text": "run"},
                       {"type": "accept", "suggestion_index": 99}], f)
        res = run("replay", f.name)
        os.unlink(f.name)
        self.assertEqual(res.returncode, 1)
        self.assertIn("record 2", res.stderr)

    def test_missing_file_is_input_error(self):
        self.assertEqual(run("replay", "/nonexistent.json").returncode, 1)

    def test_bad_catalog_is_input_error(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write('{"snippets": [{"name": 3}]}')
        res = run("replay", fixture("teaser.replay.json"), "--catalog", f.name)
        os.unlink(f.name)
        self.assertEqual(res.returncode, 1)
        self.assertIn("catalog", res.stderr)

    def test_config_file_and_flag_precedence(self):
        with tempfile.TemporaryDirectory() as d:
            with open(os.path.join(d, "cfg.json"), "w") as f:
                json.dump({"catalog": "missing.json"}, f)
            cfg = os.path.join(d, "cfg.json")
            self.assertEqual(
                run("replay", fixture("teaser.replay.json"), "--config",
                    cfg).returncode, 1)
            starter = os.path.join(ROOT, "core", "data", "starter_catalog.json")
            res = run("replay", fixture("teaser.replay.json"), "--config", cfg,
                      "--catalog", starter)
            self.assertEqual(res.returncode, 0, res.stderr)


class AnalyzeTest(unittest.TestCase):
    def gold(self):
        records, current = {}, None
        with open(fixture("gold_parses.tsv")) as f:
            for line in f:
                line = line.rstrip("\n")
                if line.startswith("# text: "):
                    current = line[len("# text: "):]
                    records[current] = []
                elif line and not line.startswith("#") and current is not None:
                    records[current].append(line)
        return records

    def test_teaser_arcs_match_gold(self):
        text = "Define a PyTorch dataset with a loader function that reads JSON"
        res = run("analyze", "--show-deps", text)
        self.assertEqual(res.returncode, 0)
        arcs = [l for l in res.stdout.splitlines() if not l.startswith("#")]
        self.assertEqual(arcs, self.gold()[text])

    def test_all_gold_sentences(self):
        for text, arcs in self.gold().items():
            res = run("analyze", "--show-deps", text)
            got = [l for l in res.stdout.splitlines() if not l.startswith("#")]
            self.assertEqual(got, arcs, text)

    def test_empty(self):
        res = run("analyze", "")
        self.assertEqual((res.returncode, res.stdout), (0, ""))

    def test_single_root(self):
        res = run("analyze", "--show-deps", "run")
        arcs = [l for l in res.stdout.splitlines() if not l.startswith("#")]
        self.assertEqual(arcs, ["0\tROOT\troot"])


class CorpusTest(unittest.TestCase):
    def test_rates_ordered_and_stable(self):
        with tempfile.TemporaryDirectory() as d:
            outs = []
            for i in range(2):
                out = os.path.join(d, f"r{i}.json")
                res = run("corpus", fixture("corpus"), "--out", out)
                self.assertEqual(res.returncode, 0, res.stderr)
                with open(out) as f:
                    outs.append(json.load(f))
        rates = [[r["ast_rate"] for r in o["records"]] for o in outs]
        self.assertEqual(rates[0], rates[1])
        by_id = {r["prompt_id"]: r["ast_rate"] for r in outs[0]["records"]}
        self.assertGreater(by_id["a_two_phrases"], by_id["b_one_phrase"])

    def test_empty_dir(self):
        with tempfile.TemporaryDirectory() as d:
            res = run("corpus", d)
        self.assertEqual(json.loads(res.stdout)["records"], [])


class SchemaTest(unittest.TestCase):
    def test_schema_md_is_current(self):
        res = run("schema")
        with open(os.path.join(ROOT, "SCHEMA.md")) as f:
            self.assertEqual(res.stdout, f.read(),
                             "regenerate with: langsketch schema > SCHEMA.md")


class ServeStdioTest(unittest.TestCase):
    def test_create_session(self):
        lines = [
            {"v": 1, "type": "create_session", "id": "c"},
        ]
        first = run("serve", "--stdio", "--mock-llm",
                    fixture("teaser.mock_llm.json"),
                    stdin="".join(json.dumps(m) + "\n" for m in lines))
        self.assertEqual(first.returncode, 0, first.stderr)
        created = json.loads(first.stdout.splitlines()[0])
        self.assertEqual(created["type"], "session_created")

    def test_bad_mock_script_fails_startup(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write('{"chunks": 3}')
        res = run("serve", "--stdio", "--mock-llm", f.name, stdin="")
        os.unlink(f.name)
        self.assertEqual(res.returncode, 1)


if __name__ == "__main__":
    BIN, ROOT = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
