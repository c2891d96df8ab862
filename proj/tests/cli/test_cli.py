# Copyright 2026 The dcmkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import os
import subprocess
from pathlib import Path

import pytest

DATA = Path(__file__).resolve().parent.parent / "data"
TOOL = os.environ.get("DCMTOOL")

pytestmark = pytest.mark.skipif(not TOOL, reason="DCMTOOL not set")


def run(*args, stdin=None):
    return subprocess.run([TOOL, *map(str, args)], input=stdin, capture_output=True, text=True,
                          timeout=120)


def matrix_lines(text):
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def test_compute_matches_fixture():
    r = run("compute", DATA / "example.graph")
    assert r.returncode == 0
    assert matrix_lines(r.stdout) == matrix_lines((DATA / "example.dcm").read_text())


def test_compute_cumulative():
    r = run("compute", DATA / "example.graph", "--cumulative")
    assert r.returncode == 0
    assert matrix_lines(r.stdout) == matrix_lines((DATA / "example.cdcm").read_text())


def test_compute_reads_stdin():
    r = run("compute", "-", stdin=(DATA / "example.graph").read_text())
    assert r.returncode == 0
    assert r.stdout.startswith("DCM\n")


def test_compute_canonical_rows_sorted():
    r = run("compute", DATA / "example.graph", "--canonical")
    rows = [list(map(int, l.split())) for l in matrix_lines(r.stdout)[1:]]
    assert rows == sorted(rows)


def test_check_pass_and_reject():
    assert run("check", DATA / "example.dcm").stdout == "PASS\n"
    r = run("check", DATA / "zero.dcm")
    assert r.returncode == 1
    assert r.stdout.startswith("REJECT")


def test_check_machine_output():
    r = run("check", DATA / "zero.dcm", "--machine")
    assert r.returncode == 1
    assert all("=" in line for line in r.stdout.splitlines())


def test_recognize_yes_and_witness_round_trip(tmp_path):
    r = run("recognize", DATA / "example.dcm")
    assert r.returncode == 0
    assert "# verdict=yes" in r.stdout
    witness = tmp_path / "w.graph"
    witness.write_text(r.stdout)
    again = run("compute", witness)
    assert matrix_lines(again.stdout) == matrix_lines((DATA / "example.dcm").read_text())


def test_recognize_no_undirected():
    r = run("recognize", DATA / "example.dcm", "--mode", "undirected")
    assert r.returncode == 1
    assert "# verdict=no" in r.stdout


def test_recognize_budget_gives_unknown():
    r = run("recognize", DATA / "example.dcm", "--max-nodes", "1")
    assert r.returncode == 3
    assert "# verdict=unknown" in r.stdout


def test_reduce_dimensions():
    r = run("reduce", DATA / "fig.tpp")
    assert r.returncode == 0
    lines = matrix_lines(r.stdout)
    assert lines[0] == "DCM"
    assert len(lines) == 39
    assert all(len(l.split()) == 38 for l in lines[1:])


def test_solve_tpp():
    r = run("solve-tpp", DATA / "fig.tpp")
    assert r.returncode == 0
    assert matrix_lines(r.stdout) == matrix_lines((DATA / "fig.sol").read_text())
    r = run("solve-tpp", DATA / "negative.tpp")
    assert r.returncode == 1
    assert r.stdout == "negative\n"


def test_gadget_dcm_equals_reduction(tmp_path):
    g = run("gadget", DATA / "fig.tpp", "--solution", DATA / "fig.sol")
    assert g.returncode == 0
    path = tmp_path / "g.graph"
    path.write_text(g.stdout)
    computed = run("compute", path)
    reduced = run("reduce", DATA / "fig.tpp")
    assert matrix_lines(computed.stdout) == matrix_lines(reduced.stdout)


def test_gadget_needs_exactly_one_source():
    assert run("gadget", DATA / "fig.tpp").returncode == 2
    assert run("gadget", DATA / "fig.tpp", "--solve", "--solution", DATA / "fig.sol").returncode == 2


def test_validate_levels():
    r = run("validate-tpp", DATA / "fig.tpp", "--level", "tpp")
    assert r.returncode == 1
    assert r.stdout.startswith("REJECT bounds")
    assert run("validate-tpp", DATA / "fig.tpp").stdout == "PASS\n"


def test_realize_good_round_trip(tmp_path):
    r = run("realize-good", DATA / "good.seq")
    assert r.returncode == 0
    path = tmp_path / "t.graph"
    path.write_text(r.stdout)
    c = run("compute", path, "--cumulative")
    first = list(map(int, matrix_lines(c.stdout)[1].split()))
    assert first == list(map(int, (DATA / "good.seq").read_text().split()))


@pytest.mark.parametrize("method", ["eg", "hh", "in"])
def test_degseq_triangle(method):
    r = run("degseq", DATA / "triangle.seq", "--method", method, "--realize")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] in ("graphical", "realizable")
    assert len(r.stdout.splitlines()) > 2


def test_degseq_rejects():
    r = run("degseq", "-", "--method", "hh", stdin="3 1 1\n")
    assert r.returncode == 1
    assert r.stdout.startswith("not graphical")
    r = run("degseq", "-", "--method", "in", stdin="3 1 1\n")
    assert r.returncode == 1


def test_random_reproducible():
    a = run("random", "--n", 7, "--seed", 42, "--mode", "undirected")
    b = run("random", "--n", 7, "--seed", 42, "--mode", "undirected")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    assert a.stdout.startswith("U 7\n")


def test_output_file(tmp_path):
    out = tmp_path / "m.dcm"
    r = run("compute", DATA / "example.graph", "-o", out)
    assert r.returncode == 0 and r.stdout == ""
    assert matrix_lines(out.read_text()) == matrix_lines((DATA / "example.dcm").read_text())


def test_usage_errors_exit_2():
    assert run("check", DATA / "example.dcm", "--kind", "cdcm").returncode == 2
    assert run("compute", "-", stdin="D 2\n0 5\n").returncode == 2
    assert run("compute", DATA / "missing.graph").returncode == 2
    assert run("nonsense").returncode == 2
