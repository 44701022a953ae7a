import json
from pathlib import Path

import pytest

from dompoly.cli import main
from dompoly.graphs import complete, cycle, encode_graph6, path, wheel
from dompoly.verify import path_companion

from conftest import CORPUS_DIR

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "name,argv",
    [
        ("cycle6", ["cycle", "6"]),
        ("search_partitions6", ["search-partitions", "6"]),
        ("gamma_cycle7", ["gamma", "--family", "cycle:7"]),
    ],
)
def test_golden_outputs(capsys, name, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == (GOLDEN_DIR / f"{name}.json").read_text()


def test_every_verb_emits_valid_json(capsys, tmp_path):
    corpus6 = CORPUS_DIR / "order6.g6"
    small = tmp_path / "two.g6"
    small.write_bytes(encode_graph6(cycle(5)) + b"\n" + encode_graph6(path(5)) + b"\n")
    invocations = [
        ["poly", "--family", "wheel:5"],
        ["cycle", "9"],
        ["eval", "--family", "cycle:8", "--at", "-1"],
        ["gamma", "--graph6", str(small)],
        ["verify", "L5-alpha", "--max-n", "50"],
        ["search-partitions", "9"],
        ["classify", str(small)],
        ["path-class", "6", str(corpus6)],
        ["wheel", "6", str(corpus6)],
    ]
    for argv in invocations:
        code, out, _ = run(capsys, *argv)
        assert code == 0, argv
        json.loads(out)


def test_cycle_verb_matches_spec_coefficients(capsys):
    code, out, _ = run(capsys, "cycle", "6")
    payload = json.loads(out)
    assert payload["coefficients"] == ["0", "0", "3", "14", "15", "6", "1"]


def test_eval_uses_recurrence_for_large_cycles(capsys):
    # order 200 is far beyond the enumeration guard; the cycle family
    # is computed by recurrence instead
    code, out, _ = run(capsys, "eval", "--family", "cycle:200", "--at", "-1")
    assert code == 0
    assert json.loads(out)["results"][0]["value"] == "3"
    code, out, _ = run(capsys, "eval", "--family", "cycle:9", "--at", "-1",
                       "--derivative", "1")
    assert json.loads(out)["results"][0]["value"] == "9"


def test_poly_on_graph6_file(capsys, tmp_path):
    f = tmp_path / "k3.g6"
    f.write_bytes(b">>graph6<<\nBw\n")
    code, out, _ = run(capsys, "poly", "--graph6", str(f))
    assert code == 0
    assert json.loads(out)["results"][0]["coefficients"] == ["0", "3", "3", "1"]


def test_verify_verbs(capsys):
    code, out, _ = run(capsys, "verify", "L5-alpha", "--max-n", "200")
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "pass"
    assert payload["range"] == [1, 200]

    code, out, _ = run(capsys, "verify", "T5-partitions", "--max-n", "12")
    assert code == 0
    assert json.loads(out)["details"]["min_part"] == 3


def test_verify_all_with_corpus_dir(capsys):
    code, out, _ = run(
        capsys, "verify", "all", "--corpus-dir", str(CORPUS_DIR),
    )
    assert code == 0
    ids = [r["lemma_id"] for r in json.loads(out)["reports"]]
    assert ids.count("COR-wheel") == 5
    assert ids.count("P-path-class") == 1
    assert "T5-ten-cases" in ids


def test_exit_code_1_on_verification_failure(capsys, tmp_path):
    # a corpus of just P_6 cannot have a size-two class
    f = tmp_path / "only_path.g6"
    f.write_bytes(encode_graph6(path(6)) + b"\n")
    code, out, _ = run(capsys, "path-class", "6", str(f))
    assert code == 1
    assert json.loads(out)["status"] == "fail"

    f2 = tmp_path / "two_wheels.g6"
    f2.write_bytes(encode_graph6(wheel(5)) + b"\n" + encode_graph6(wheel(5)) + b"\n")
    code, out, _ = run(capsys, "wheel", "5", str(f2))
    assert code == 1


def test_exit_code_2_on_usage_errors(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["cycle"]) == 2
    assert main(["verify", "L99-nope"]) == 2
    assert main(["poly"]) == 2  # neither --family nor --graph6
    assert main(["poly", "--family", "cycle:3", "--graph6", "x.g6"]) == 2


def test_exit_code_3_on_input_errors(capsys, tmp_path):
    code, _, err = run(capsys, "classify", str(tmp_path / "missing.g6"))
    assert code == 3 and "dompoly:" in err
    code, _, err = run(capsys, "poly", "--family", "wheel:3")
    assert code == 3
    code, _, err = run(capsys, "poly", "--family", "complete:30")
    assert code == 3 and "guard" in err
    code, _, err = run(capsys, "verify", "COR-wheel")  # missing --n/--corpus
    assert code == 3


def test_guard_override(capsys, tmp_path):
    f = tmp_path / "c10.g6"
    f.write_bytes(encode_graph6(cycle(10)) + b"\n")
    code, _, _ = run(capsys, "classify", str(f))
    assert code == 3
    code, out, _ = run(capsys, "--guard-override", "10", "classify", str(f))
    assert code == 0
    assert json.loads(out)["classes"][0]["class_size"] == 1


def test_classify_reports_parse_errors_without_failing(capsys, tmp_path):
    f = tmp_path / "mixed.g6"
    f.write_bytes(b"Bw\nnot a record!!\nA_\n")
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0
    payload = json.loads(out)
    assert len(payload["parse_errors"]) == 1
    assert sum(c["class_size"] for c in payload["classes"]) == 2


def test_table_format(capsys, tmp_path):
    code, out, _ = run(capsys, "--format", "table", "verify", "L3-cycle", "--max-n", "8")
    assert code == 0
    assert "L3-cycle" in out and "pass" in out

    code, out, _ = run(capsys, "--format", "table", "search-partitions", "7")
    assert code == 0
    assert "4+3" in out

    f = tmp_path / "k1.g6"
    f.write_bytes(b"@\n")
    code, out, _ = run(capsys, "--format", "table", "classify", str(f))
    assert code == 0
    assert "members" in out


def test_common_flags_accepted_after_the_verb(capsys):
    code, before, _ = run(capsys, "--format", "table", "verify", "L3-cycle", "--max-n", "8")
    assert code == 0
    code, after, _ = run(capsys, "verify", "L3-cycle", "--max-n", "8", "--format", "table")
    assert code == 0
    assert before == after


def test_threads_flag_smoke(capsys, tmp_path):
    f = tmp_path / "few.g6"
    f.write_bytes(b"\n".join(encode_graph6(cycle(k)) for k in range(3, 9)) + b"\n")
    code, out, _ = run(capsys, "--threads", "2", "classify", str(f))
    assert code == 0
    assert len(json.loads(out)["classes"]) == 6


def test_eval_on_complete_family(capsys):
    # D(K_4, x) = (1+x)^4 - 1, so value at 1 is 15
    code, out, _ = run(capsys, "eval", "--family", "complete:4", "--at", "1")
    assert json.loads(out)["results"][0]["value"] == "15"
