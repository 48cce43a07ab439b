import json

from matchroid.cli import run
from conftest import write_instance


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv)
    docs = out.strip().splitlines()
    assert len(docs) == 1, f"expected one JSON document, got: {out!r} err: {err!r}"
    return code, json.loads(docs[0])


def test_match_symmetric_counterexample(capsys, sym_counterexample_file):
    code, doc = invoke_json(
        capsys, "match", "--instance", sym_counterexample_file, "--m", "M", "--n", "M", "--json"
    )
    assert code == 1
    assert doc["matched"] is False
    assert doc["failing_basis"] == [1, 2]


def test_match_positive_exit_zero(capsys, sym_counterexample_file):
    code, doc = invoke_json(
        capsys, "match", "--instance", sym_counterexample_file, "--m", "U", "--n", "U", "--json"
    )
    assert code == 0 and doc["matched"] is True


def test_match_basis_subcommand(capsys, sym_counterexample_file):
    code, doc = invoke_json(
        capsys,
        "match-basis",
        "--instance", sym_counterexample_file,
        "--m", "M", "--n", "M", "--basis", "1,2", "--json",
    )
    assert code == 1 and doc["matched"] is False

    code, doc = invoke_json(
        capsys,
        "match-basis",
        "--instance", sym_counterexample_file,
        "--m", "M", "--n", "M", "--basis", "1,4", "--json",
    )
    assert code == 0 and doc["witness"]["source"] == [1, 4]


def test_group_match_subcommand(capsys, tmp_path):
    path = write_instance(
        tmp_path,
        {
            "group": {"kind": "cyclic", "n": 4},
            "subsets": {"A": [0, 2], "B": [1, 2], "C": [1, 3]},
        },
    )
    code, doc = invoke_json(capsys, "group-match", "--instance", path, "--a", "A", "--b", "B", "--json")
    assert code == 1 and doc["matched"] is False

    code, doc = invoke_json(capsys, "group-match", "--instance", path, "--a", "A", "--b", "C", "--json")
    assert code == 0 and len(doc["pairs"]) == 2


def test_classify_subcommand(capsys, tmp_path):
    path = write_instance(
        tmp_path,
        {"group": {"kind": "zwindow", "lo": -10, "hi": 10}, "subsets": {"A": [3, 5, 7]}},
    )
    code, doc = invoke_json(capsys, "classify", "--instance", path, "--set", "A", "--json")
    assert code == 0
    assert doc["progression"] == {"a": 3, "x": 2, "k": 3}
    assert doc["chowla"] is True


def test_sumset_subcommand(capsys, tmp_path):
    path = write_instance(
        tmp_path,
        {"group": {"kind": "cyclic", "n": 5}, "subsets": {"A": [1, 2], "B": [1, 3]}},
    )
    code, doc = invoke_json(capsys, "sumset", "--instance", path, "--a", "A", "--b", "B", "--json")
    assert code == 0 and doc["sumset"] == [0, 2, 3, 4]

    code, doc = invoke_json(capsys, "sumset", "--instance", path, "--a", "A", "--fold", "2", "--json")
    assert code == 0 and doc["sumset"] == [2, 3, 4]


def test_sumset_overflow_is_input_error(capsys, tmp_path):
    path = write_instance(
        tmp_path,
        {"group": {"kind": "zwindow", "lo": -10, "hi": 10}, "subsets": {"A": [8], "B": [8]}},
    )
    code, out, err = invoke(capsys, "sumset", "--instance", path, "--a", "A", "--b", "B", "--json")
    assert code == 2
    assert "window" in err


def test_rado_subcommand(capsys, sym_counterexample_file):
    code, doc = invoke_json(
        capsys,
        "rado",
        "--instance", sym_counterexample_file,
        "--n", "M", "--family", "F1,F2", "--json",
    )
    assert code == 1
    assert doc["violation"] == [0, 1]

    code, doc = invoke_json(
        capsys,
        "rado",
        "--instance", sym_counterexample_file,
        "--n", "U", "--family", "F1,F2", "--json",
    )
    assert code == 0
    assert doc["transversal"] == [4, 3]


def test_verify_subcommand_pass(capsys):
    code, doc = invoke_json(capsys, "verify", "sym-group", "--bounds", "g=cyclic:7", "--json")
    assert code == 0
    assert doc["passed"] is True and doc["checked"] == 127


def test_verify_subcommand_negative_verdict(capsys):
    code, doc = invoke_json(
        capsys,
        "verify", "sparse-sym",
        "--bounds", "g=cyclic:11,universe=1-5,sizes=4,ranks=2",
        "--json",
    )
    assert code == 1
    assert doc["passed"] is False
    assert doc["counterexample"]["basis"] == [1, 2]


def test_verify_hypothesis_violation_is_usage_error(capsys):
    code, out, err = invoke(capsys, "verify", "lemma-progression", "--bounds", "g=cyclic:6")
    assert code == 2 and "cyclic" in err


def test_verify_budget_exit_code(capsys):
    code, out, err = invoke(capsys, "verify", "sym-group", "--bounds", "g=cyclic:17")
    assert code == 3 and "budget" in err.lower()


def test_verify_unknown_theorem(capsys):
    code, out, err = invoke(capsys, "verify", "goldbach")
    assert code == 2


def test_verify_json_is_byte_identical_across_runs(capsys):
    _, first, _ = invoke(capsys, "verify", "rado", "--seed", "9", "--bounds", "count=30", "--json")
    _, second, _ = invoke(capsys, "verify", "rado", "--seed", "9", "--bounds", "count=30", "--json")
    assert first == second


def test_verify_timing_flag_adds_runtime(capsys):
    code, doc = invoke_json(
        capsys, "verify", "sym-group", "--bounds", "g=cyclic:7", "--json", "--timing"
    )
    assert code == 0 and "runtime_ms" in doc


def test_reproduce_subcommand(capsys):
    code, doc = invoke_json(capsys, "reproduce", "sym-counterexample", "--n", "2", "--json")
    assert code == 0 and doc["passed"] is True

    code, out, err = invoke(
        capsys, "reproduce", "sym-counterexample", "--n", "3", "--group", "cyclic:11"
    )
    assert code == 2  # 11 <= 4n wraps sums


def test_enumerate_subcommand(capsys, tmp_path):
    code, doc = invoke_json(
        capsys,
        "enumerate", "--group", "cyclic:11", "--elements", "1,2,3,4", "--rank", "2", "--json",
    )
    assert code == 0 and doc["count"] == 10

    path = write_instance(
        tmp_path,
        {"group": {"kind": "cyclic", "n": 11}, "subsets": {"E": [1, 2, 3]}},
    )
    code, doc = invoke_json(
        capsys, "enumerate", "--instance", path, "--set", "E", "--rank", "3", "--json"
    )
    assert code == 0 and doc["count"] == 1


def test_enumerate_budget(capsys):
    code, out, err = invoke(
        capsys,
        "enumerate", "--group", "zwindow:0:20", "--elements",
        ",".join(str(i) for i in range(1, 13)), "--rank", "6",
    )
    assert code == 3


def test_malformed_instance_is_usage_error(capsys, tmp_path):
    path = write_instance(
        tmp_path, {"group": {"kind": "cyclic", "n": 7}, "subsets": {"A": [9]}}
    )
    code, out, err = invoke(capsys, "classify", "--instance", path, "--set", "A")
    assert code == 2
    assert "element-out-of-group" in err

    path2 = write_instance(
        tmp_path,
        {
            "group": {"kind": "cyclic", "n": 11},
            "matroids": {
                "N": {"ground": [1, 2, 3], "rep": {"kind": "ch", "rank": 2, "ch": [[1, 2], [1, 3]]}}
            },
        },
        name="close.json",
    )
    code, out, err = invoke(capsys, "match", "--instance", path2, "--m", "N", "--n", "N")
    assert code == 2
    assert "too close" in err


def test_usage_error_on_missing_args(capsys):
    code = run(["match"])
    assert code == 2


def test_human_output_mode(capsys, sym_counterexample_file):
    code, out, err = invoke(
        capsys, "match", "--instance", sym_counterexample_file, "--m", "M", "--n", "M"
    )
    assert code == 1
    assert "matched: False" in out
    assert "failing basis: [1, 2]" in out


def test_budget_flag_exit_code(capsys):
    code, out, err = invoke(
        capsys, "verify", "sym-group", "--bounds", "g=cyclic:7", "--budget", "10"
    )
    assert code == 3 and "budget" in err.lower()


def test_match_mutual_flag(capsys, sym_counterexample_file):
    code, doc = invoke_json(
        capsys,
        "match",
        "--instance", sym_counterexample_file,
        "--m", "U", "--n", "U", "--mutual", "--json",
    )
    assert code == 0 and doc["mutual"] is True


def test_enumerate_product_group_elements(capsys):
    code, doc = invoke_json(
        capsys,
        "enumerate", "--group", "product:3x3",
        "--elements", "[0,1];[1,0];[1,1];[2,2]", "--rank", "2", "--json",
    )
    assert code == 0 and doc["count"] == 10
    assert doc["ground"] == [[0, 1], [1, 0], [1, 1], [2, 2]]
