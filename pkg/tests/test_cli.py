from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from graphbraid.cli import run

K3 = "n=3;1-2;1-3;2-3"
PATH3 = "n=3;1-2;2-3"
EX6 = "n=6;1-2;1-3;1-4;1-5;2-3;2-4;2-5;2-6;3-4;3-5;3-6;4-6;5-6"


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_analyze_k3_reports_exact_type():
    code, out, _ = call("analyze", "--graph", K3)
    doc = json.loads(out)
    assert code == 0
    assert doc["finiteness_P"]["m"] == 1
    assert doc["finiteness_P"]["kind"] == "exact"
    assert doc["finiteness_P"]["description"] == "(F_2)^1 x Z^1"
    assert doc["schema_version"] == 1


def test_word_eq_commuting_path_generators():
    code, out, _ = call("word-eq", "--graph", PATH3, "a_1_2 a_2_3", "a_2_3 a_1_2")
    assert code == 0 and json.loads(out)["verdict"] == "Trivial"


def test_cliques_of_six_vertex_example(tmp_path):
    f = tmp_path / "g.txt"
    lines = ["n=6"] + [e.replace("-", " ") for e in EX6.split(";")[1:]]
    f.write_text("\n".join(lines) + "\n")
    code, out, _ = call("cliques", str(f))
    assert code == 0
    assert json.loads(out)["maximal_cliques"] == [[1, 2, 3, 4], [1, 2, 3, 5], [2, 3, 4, 6], [2, 3, 5, 6]]
    code, out, _ = call("cliques", str(f), "--text")
    assert out == "1 2 3 4\n1 2 3 5\n2 3 4 6\n2 3 5 6\n"


def test_dot_input(tmp_path):
    f = tmp_path / "g.dot"
    f.write_text("graph { 1 -- 2; 2 -- 3; 1 -- 3 }\n")
    code, out, _ = call("present", str(f), "--format", "dot")
    assert code == 0 and len(json.loads(out)["relators"]) == 2


def test_word_triv_exit_codes():
    assert call("word-triv", "--graph", K3, "a_1_2")[0] == 1
    assert call("word-triv", "--graph", K3, "a_1_2 a_1_2^-1")[0] == 0
    cone = EX6 + ";" + ";".join(f"{i}-7" for i in range(1, 7))
    cone = cone.replace("n=6", "n=7")
    code, out, _ = call("word-triv", "--graph", cone, "a_1_3^-1 a_5_6^-1 a_1_3 a_5_6")
    assert code == 2 and json.loads(out)["verdict"] == "Unknown"


def test_usage_and_parse_errors_exit_64():
    assert call("frobnicate")[0] == 64
    assert call("cliques")[0] == 64
    assert call("cliques", "--graph", "n=2;1-3")[0] == 64
    code, _, err = call("word-triv", "--graph", PATH3, "a_1_3")
    assert code == 64 and "not edges" in err
    assert call("word-triv", "--graph", PATH3, "q_1")[0] == 64
    assert call("discriminantal", "--graph", PATH3)[0] == 64
    assert call("discriminantal", "--graph", PATH3, "--clique", "1,3")[0] == 64
    assert call("cliques", "/nonexistent/graph.txt")[0] == 64


def test_parse_error_names_line(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("n=3\n1 2\n1 2\n")
    code, _, err = call("cliques", str(f))
    assert code == 64 and "line 3" in err


def test_resource_errors_exit_69():
    path12 = "n=12;" + ";".join(f"{i}-{i + 1}" for i in range(1, 12))
    code, _, err = call("bgamma", "--graph", path12)
    assert code == 69 and "--aut-bound" in err
    code, out, _ = call("bgamma", "--graph", path12, "--aut-bound", "12")
    assert code == 0 and json.loads(out)["aut_order"] == 2


def test_word_limit_gives_unknown():
    w = " ".join(["a_1_4"] * 30 + ["a_2_4"] * 30 + ["a_1_4^-1"] * 30 + ["a_2_4^-1"] * 30)
    code, out, _ = call("word-triv", "--graph", "n=4;1-2;1-3;1-4;2-3;2-4;3-4", w, "--word-limit", "50")
    assert code == 2 and "resource guard" in json.loads(out)["note"]


def test_rho_verb():
    code, out, _ = call("rho", "--graph", EX6, "--word", "a_1_5 a_5_6 a_1_2", "--subset", "1,2,5")
    assert code == 0
    assert json.loads(out)["images"] == [{"member": [1, 2, 5], "word": "a_1_5 a_1_2", "relabelled": "a_1_3 a_1_2"}]
    code, out, _ = call("rho", "--graph", EX6, "--word", "a_1_5", "--text")
    assert out.splitlines()[1] == "{1 2 3 5}: a_1_5"


def test_arrangement_and_discriminantal():
    code, out, _ = call("arrangement", "--graph", K3, "--text")
    assert out == "x_1 - x_2 = 0\nx_1 - x_3 = 0\nx_2 - x_3 = 0\n"
    code, out, _ = call("discriminantal", "--graph", "n=5;1-2;1-3;1-4;1-5;2-3;2-4;2-5;3-4;3-5", "--clique", "1,2,3,4")
    doc = json.loads(out)
    assert [h["equation"] for h in doc["hyperplanes"]] == ["x_5 = 1", "x_5 = 2", "x_5 = 3"]
    assert doc["splitting"]["quotient"].startswith("P_4")


def test_incidence_and_bgamma():
    octa = "n=6;1-3;1-4;1-5;1-6;2-3;2-4;2-5;2-6;3-5;3-6;4-5;4-6"
    doc = json.loads(call("incidence", "--graph", octa)[1])
    assert doc["b1"] == 5 and doc["has_isthmus"] is False and doc["edges"] == 24
    doc = json.loads(call("incidence", "--graph", K3, "--family", "triangles")[1])
    assert doc["b1"] == 0 and doc["has_isthmus"] is True
    doc = json.loads(call("bgamma", "--graph", "n=3;1-2;1-3")[1])
    assert doc["aut_order"] == 2 and doc["torsion_witnesses"][0]["permutation"] == "(2 3)"


def test_example6_verb():
    code, out, _ = call("example6")
    doc = json.loads(out)
    assert code == 0 and doc["nontrivial"] is True
    assert all(s["retractive"] for s in doc["retractive_sets"])


def test_output_is_byte_identical_across_processes():
    argv = [sys.executable, "-m", "graphbraid.cli", "analyze", "--graph", EX6]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and first.startswith(b"{")


@pytest.mark.parametrize("verb", ["analyze", "cliques", "present", "incidence", "bgamma", "arrangement"])
def test_text_mode_runs(verb):
    code, out, _ = call(verb, "--graph", EX6, "--text")
    assert code == 0 and out.strip()
