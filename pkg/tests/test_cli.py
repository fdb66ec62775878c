import json

import pytest

from coxmodel.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr_coefficient(capsys):
    code, out, _ = invoke(
        capsys, "lr", "--lam", "(2,1)", "--mu", "(2,1)", "--nu", "(3,2,1)"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["coefficient"] == 2


def test_lr_expansion(capsys):
    code, out, _ = invoke(capsys, "lr", "--lam", "(2,1)", "--mu", "(1)")
    assert code == 0
    doc = json.loads(out)
    assert doc["expansion"] == [["(3,1)", 1], ["(2,2)", 1], ["(2,1,1)", 1]]


def test_lr_rejects_bad_partition(capsys):
    code, _, err = invoke(capsys, "lr", "--lam", "(1,2)", "--mu", "(1)")
    assert code == 1
    assert "error" in err


def test_char_command(capsys):
    idx = {"type": "B", "alpha": [0, 3], "beta": ["id", "id"], "gamma": ["triv", "sgn"]}
    code, out, _ = invoke(capsys, "char", "--index", json.dumps(idx))
    assert code == 0
    doc = json.loads(out)
    coeffs = dict(tuple(kv) for kv in doc["character"]["coeffs"])
    assert coeffs == {
        "((1,1,1),())": 1,
        "((1,1),(1))": 1,
        "((1),(1,1))": 1,
        "((),(1,1,1))": 1,
    }


@pytest.mark.parametrize(
    "model",
    ["family:PB:3", "family:PBhat:4", "family:PD:5", "family:I2odd:7", "family:H3:3"],
)
def test_verify_known_families(capsys, model):
    code, out, _ = invoke(capsys, "verify", "--model", model)
    assert code == 0
    assert json.loads(out)["status"] == "perfect"


def test_verify_with_oracle(capsys):
    code, out, _ = invoke(capsys, "verify", "--model", "family:PB:3", "--oracle")
    assert code == 0
    assert json.loads(out)["status"] == "perfect"


def test_verify_failure_exits_2(capsys):
    model = [
        {"type": "B", "alpha": [3, 0], "beta": ["id", "id"], "gamma": ["triv", "triv"]}
    ]
    code, out, _ = invoke(capsys, "verify", "--model", json.dumps(model))
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "not_perfect"
    assert "witness" in doc


def test_verify_bad_family_exits_1(capsys):
    code, _, err = invoke(capsys, "verify", "--model", "family:NOPE:3")
    assert code == 1
    assert "error" in err


def test_classify_is_byte_identical(capsys):
    code1, out1, _ = invoke(capsys, "classify", "--type", "B", "--rank", "3")
    code2, out2, _ = invoke(capsys, "classify", "--type", "B", "--rank", "3")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["count"] == 8


def test_classify_dihedral_and_h3(capsys):
    code, out, _ = invoke(capsys, "classify", "--type", "I2", "--rank", "8")
    assert code == 0
    assert json.loads(out)["count"] == 4
    code, out, _ = invoke(capsys, "classify", "--type", "H3")
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_classify_golden_roundtrip(tmp_path, capsys):
    code, out, _ = invoke(capsys, "classify", "--type", "A", "--rank", "4")
    assert code == 0
    golden = tmp_path / "a4.json"
    golden.write_text(out, encoding="utf-8")
    code, out2, err = invoke(
        capsys, "classify", "--type", "A", "--rank", "4", "--golden", str(golden)
    )
    assert code == 0 and out2 == out
    golden.write_text(out.replace('"count": 4', '"count": 5'), encoding="utf-8")
    code, _, err = invoke(
        capsys, "classify", "--type", "A", "--rank", "4", "--golden", str(golden)
    )
    assert code == 2
    assert "count" in err  # unified diff mentions the changed line


def test_oracle_classes(capsys):
    code, out, _ = invoke(capsys, "oracle", "classes", "--type", "B", "--rank", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 4
    assert all(set(c) == {"theta", "min", "size"} for c in doc["classes"])


def test_oracle_search(capsys):
    code, out, _ = invoke(capsys, "oracle", "search", "--type", "I2", "--rank", "6")
    assert code == 0
    assert json.loads(out)["count"] == 4


def test_console_script_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "coxmodel.cli"],
        input="",
        capture_output=True,
        text=True,
    )
    # argparse exits nonzero without a subcommand; main() must not traceback
    assert "Traceback" not in proc.stderr
