import json
import subprocess
import sys

BASE = [sys.executable, "-m", "gradedlie.cli"]


def run(*args, stdin=None):
    return subprocess.run(
        BASE + list(args), capture_output=True, text=True, input=stdin
    )


def test_roots_json():
    out = run("roots", "--type", "A", "--rank", "2")
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["dimension"] == 8 and data["rank"] == 2
    assert len(data["roots"]) == 6


def test_roots_twisted():
    out = run("roots", "--type", "D", "--rank", "4", "--twist", "3")
    data = json.loads(out.stdout)
    assert data["dimension"] == 28 and data["restrictedRank"] == 2


def test_facet_and_pseudolevi():
    out = run("facet", "--type", "A", "--rank", "2", "--point", "0,1/3")
    data = json.loads(out.stdout)
    assert data["spanDimension"] == 1
    out = run("pseudolevi", "--type", "A", "--rank", "2", "--point", "0,1/3")
    assert json.loads(out.stdout)["cartanType"] == "A1"


def test_spiral_matches_splitting_degree_zero():
    args = ["--type", "A", "--rank", "1", "--x", "0", "--m", "2",
            "--eta", "1", "--point", "0"]
    spiral = json.loads(run("spiral", *args, "--window", "2").stdout)
    split = json.loads(run("splitting", *args).stdout)
    assert spiral["degrees"]["0"] == {"cartanDim": 1, "labels": [[0, 0], [1, 0]]}
    assert split["pseudoLevi"] == "A1"


def test_block_output():
    out = run("block", "--type", "A", "--rank", "1", "--x", "1", "--m", "2",
              "--eta", "1", "--base-facet", "1/2", "--depth", "2")
    data = json.loads(out.stdout)
    assert len(data["classes"]) == 3


def test_daha_eval_commutator():
    out = run("daha", "eval", "--type", "A", "--rank", "1", "--point", "1/4",
              "--expr", "s1*d1 - d1*s1")
    data = json.loads(out.stdout)
    assert len(data["terms"]) == 2
    coeffs = sorted(t["coefficient"] for t in data["terms"])
    assert coeffs == ["-2", "4"]


def test_daha_eval_stdin():
    out = run("daha", "eval", "--type", "A", "--rank", "1", "--point", "1/4",
              stdin="s1*s1\n")
    data = json.loads(out.stdout)
    assert data["terms"] == [
        {
            "coefficient": "1",
            "isometry": {"matrix": [["1"]], "translation": ["0"]},
            "monomial": [0, 0],
            "uExp": 0,
        }
    ]


def test_determinism():
    args = ["relweyl", "--type", "C", "--rank", "2", "--point", "1/5,1/7"]
    first = run(*args)
    second = run(*args)
    assert first.stdout == second.stdout and first.returncode == 0


def test_usage_errors_exit_1():
    assert run("roots", "--type", "Z", "--rank", "2").returncode == 1
    assert run("roots", "--type", "A", "--rank", "2", "--twist", "5").returncode == 1
    assert run("facet", "--type", "A", "--rank", "1", "--point", "abc").returncode == 1
    assert run("daha", "eval", "--type", "A", "--rank", "1",
               "--expr", "s1*").returncode == 1


def test_data_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    out = run("cuspidal", "validate", "--type", "A", "--rank", "2",
              "--point", "0,1/3", "--registry", str(bad))
    assert out.returncode == 2
