# Copyright 2026 The Ree Workbench Authors
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

"""End-to-end checks of the ree command-line tool: exit codes, report schema
and byte stability."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

REE = os.environ["REE_BIN"]
SCHEMA = os.environ["REE_SCHEMA"]


def ree(*args):
    return subprocess.run([REE, *args], capture_output=True, text=True, timeout=600)


class ExitCodes(unittest.TestCase):
    def test_pass(self):
        r = ree("design", "validate")
        self.assertEqual(r.returncode, 0, r.stderr)

    def test_fail_on_damaged_design(self):
        lines = ree("design", "dump").stdout.splitlines()
        header, blocks = lines[0], lines[1:]
        v, b = header.split()
        damaged = [f"{v} {int(b) - 1}"] + blocks[1:]
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "damaged.txt")
            with open(path, "w") as f:
                f.write("\n".join(damaged) + "\n")
            r = ree("design", "validate", "--design", path, "-t", "2", "-k", "4", "--lambda", "1")
        self.assertEqual(r.returncode, 1, r.stdout + r.stderr)
        self.assertIn("lies in 0 blocks", r.stdout + r.stderr)

    def test_usage(self):
        self.assertEqual(ree("suite", "no-such-selector").returncode, 2)
        self.assertEqual(ree("suite", "embed-pg16").returncode, 2)
        self.assertEqual(ree("frobnicate").returncode, 2)

    def test_inconclusive(self):
        r = ree("suite", "embed-pg9", "--budget", "3", "--format", "json", "--no-timing")
        self.assertEqual(r.returncode, 3, r.stderr)
        report = json.loads(r.stdout)
        self.assertEqual(report["overall"], "inconclusive")


class Report(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA) as f:
            cls.schema = json.load(f)

    def test_schema_and_stability(self):
        a = ree("suite", "all", "--format", "json", "--no-timing")
        b = ree("suite", "all", "--format", "json", "--no-timing")
        self.assertEqual(a.returncode, 0, a.stderr)
        self.assertEqual(a.stdout, b.stdout)
        report = json.loads(a.stdout)
        jsonschema.validate(report, self.schema)
        self.assertEqual(report["overall"], "pass")
        self.assertTrue(all(c["wall_seconds"] == 0 for c in report["checks"]))

    def test_out_writes_report_and_certificates(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = os.path.join(tmp, "report.json")
            r = ree("suite", "embed-pg8", "--format", "json", "--out", out, "--no-timing")
            self.assertEqual(r.returncode, 0, r.stderr)
            with open(out) as f:
                report = json.load(f)
            jsonschema.validate(report, self.schema)
            self.assertEqual(report["certificates"], ["embed-pg8.cert.json"])
            with open(os.path.join(tmp, "embed-pg8.cert.json")) as f:
                cert = json.load(f)
            self.assertEqual(cert["status"], "complete")

    def test_text_format(self):
        r = ree("suite", "thm1", "--format", "text", "--no-timing")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = r.stdout.strip().splitlines()
        self.assertTrue(all(l.startswith("PASS") for l in lines[:-1]))
        self.assertEqual(lines[-1], "overall: pass")


class Verbs(unittest.TestCase):
    def test_group_order(self):
        r = ree("group", "order")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("1512", r.stdout)

    def test_pentagons_enumerate(self):
        r = ree("pentagons", "enumerate")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("126", r.stdout)

    def test_embed_search_pg9(self):
        r = ree("embed", "search", "--plane", "9")
        self.assertEqual(r.returncode, 0, r.stderr)

    def test_verify_thm1(self):
        self.assertEqual(ree("symbolic", "verify-thm1").returncode, 0)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
