import json
import subprocess
import sys

import pytest

from diffconv.cli import (
    format_decoding, format_spec, format_word, main, parse_decoding, parse_spec, parse_word,
)
from diffconv.code import build_code
from diffconv.pgz import decode
from diffconv.worked_examples import dump_golden, golden

CODEWORD11 = ["(3)/(z^6)", "(5)/(z^5)", "(3)/(z^4)", "(7)/(z^3)", "(8)/(z^2)", "(5)/(z)", "(3)", "(3*z)",
              "(9*z^2)", "(3*z^3)", "(z^4)"]


@pytest.fixture
def spec_file(tmp_path):
    path = tmp_path / "spec.txt"
    assert main(["new-code", "-p", "11", "--delta-z", "1", "--alpha", "1/z", "-d", "7", "--out", str(path)]) == 0
    return path


def write(tmp_path, name, lines):
    path = tmp_path / name
    path.write_text("\n".join(lines) + "\n")
    return path


def test_new_code_writes_generator_line(spec_file):
    kv = dict(line.split("=", 1) for line in spec_file.read_text().splitlines())
    assert kv["g"] == "[(5)/(z^6), (8)/(z^5), (10)/(z^4), (2)/(z^3), (10)/(z^2), (3)/(z), (1)]"
    assert kv["p"] == "11" and kv["d"] == "7"


def test_new_code_error_exits(tmp_path, capsys):
    assert main(["new-code", "-p", "11", "--delta-z", "1", "--alpha", "1/z", "-d", "12"]) == 2
    assert "designed distance out of range" in capsys.readouterr().err
    assert main(["new-code", "-p", "11", "--delta-z", "1", "--alpha", "z^11 + 2", "-d", "5"]) == 3
    assert main(["new-code", "-p", "11", "--delta-z", "1", "--alpha", "1/", "-d", "5"]) == 4


def test_encode_reference_message(tmp_path, spec_file):
    msg = write(tmp_path, "m.txt", ["1", "z", "0", "0", "z^4"])
    out = tmp_path / "c.txt"
    assert main(["encode", "--spec", str(spec_file), "--in", str(msg), "--out", str(out)]) == 0
    assert out.read_text() == "\n".join(CODEWORD11) + "\n"


def test_corrupt_then_decode_three_errors(tmp_path, spec_file):
    c = write(tmp_path, "c.txt", CODEWORD11)
    y = tmp_path / "y.txt"
    assert main(["corrupt", "--spec", str(spec_file), "--in", str(c), "--positions", "1,6,9",
                 "--values", "1;8;8*z^3", "--out", str(y)]) == 0
    out = tmp_path / "e.txt"
    assert main(["decode", "--spec", str(spec_file), "--in", str(y), "--out", str(out)]) == 0
    res = parse_decoding(out.read_text(), 11)
    assert res["positions"] == [1, 6, 9]
    assert [str(v) for v in res["values"]] == ["(1)", "(8)", "(8*z^3)"]
    assert [str(v) for v in res["message"]] == ["(1)", "(z)", "(0)", "(0)", "(z^4)"]


def test_decode_error_exits(tmp_path, spec_file):
    c = write(tmp_path, "c.txt", CODEWORD11)
    y = tmp_path / "y.txt"
    main(["corrupt", "--spec", str(spec_file), "--in", str(c), "--positions", "0,1,2,3",
          "--values", "1;1;z;z^2", "--out", str(y)])
    assert main(["decode", "--spec", str(spec_file), "--in", str(y)]) == 5
    bad = write(tmp_path, "bad.txt", ["1", "z +"])
    assert main(["decode", "--spec", str(spec_file), "--in", str(bad)]) == 4
    assert main(["decode", "--spec", str(tmp_path / "missing.txt"), "--in", str(bad)]) == 2


def test_roundtrip(tmp_path, spec_file):
    msg = write(tmp_path, "m.txt", ["1", "z", "0", "0", "z^4"])
    assert main(["roundtrip", "--spec", str(spec_file), "--in", str(msg)]) == 0
    assert main(["roundtrip", "--spec", str(spec_file), "--in", str(msg), "--positions", "2,5",
                 "--values", "1;3"]) == 0


def test_trials_command(tmp_path, spec_file, capsys):
    assert main(["trials", "--spec", str(spec_file), "--trials", "5", "--errors", "2", "--seed", "3"]) == 0
    assert "successes=5" in capsys.readouterr().out
    assert main(["trials", "--spec", str(spec_file), "--trials", "5", "--errors", "0"]) == 0
    out = capsys.readouterr().out
    assert "successes=5" in out and "basic_failures=0" in out
    assert main(["trials", "--spec", str(spec_file), "--trials", "5", "--errors", "2", "--degree-bound", "0"]) == 0
    out = capsys.readouterr().out
    assert "basic_failures=5" in out and "successes=5" in out


def test_spec_file_tampering_detected(tmp_path, spec_file):
    text = spec_file.read_text().replace("(3)/(z)", "(4)/(z)")
    bad = tmp_path / "bad_spec.txt"
    bad.write_text(text)
    msg = write(tmp_path, "m.txt", ["1", "z", "0", "0", "z^4"])
    assert main(["encode", "--spec", str(bad), "--in", str(msg)]) == 4


def test_file_formats_roundtrip(tmp_path):
    spec = build_code(5, "z", "1/(z + 1)", 3)
    again = parse_spec(format_spec(spec))
    assert again.g == spec.g and again.alpha == spec.alpha
    y = [spec.g.coeff(i) for i in range(5)]
    y[4] = y[4] + spec.D.parse("z")
    assert parse_word(format_word(y), 5) == y
    err = decode(y, spec)
    c = [a - b for a, b in zip(y, err.to_vector(5))]
    text = format_decoding(err, c, [spec.D.const(1), spec.D.const(0), spec.D.const(0)], 5)
    res = parse_decoding(text, 5)
    assert res["positions"] == [4] and res["codeword"] == c and res["error"] == err.to_vector(5)


def test_demos_pass(capsys):
    assert main(["demo", "p11"]) == 0
    out = capsys.readouterr().out
    assert "scenario: two errors" in out and "scenario: three errors" in out and "H_rho" in out
    assert main(["demo", "--demo", "p5"]) == 0


def test_demo_negative_control(tmp_path, capsys):
    record = golden("p11")
    record["scenarios"][1]["values"][2] = "8*z^2"
    path = tmp_path / "golden.json"
    path.write_text(json.dumps(record))
    assert main(["demo", "p11", "--golden", str(path)]) == 1
    err = capsys.readouterr().err
    assert "values differs" in err and "8*z^2" in err


def test_demo_golden_dump_is_loadable(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(dump_golden("p5"))
    assert main(["demo", "p5", "--golden", str(path)]) == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "diffconv", "demo", "p5"], capture_output=True, text=True)
    assert proc.returncode == 0 and "match" in proc.stdout


def test_strict_environment(tmp_path, spec_file, monkeypatch):
    msg = write(tmp_path, "m.txt", ["12", "z", "0", "0", "z^4"])
    assert main(["encode", "--spec", str(spec_file), "--in", str(msg)]) == 0
    monkeypatch.setenv("DIFFCONV_STRICT", "1")
    assert main(["encode", "--spec", str(spec_file), "--in", str(msg)]) == 4
