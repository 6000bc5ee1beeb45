import json
import subprocess
import sys

import pytest

from nestedroots import __version__
from nestedroots.cli import main, parse_root, parse_type
from nestedroots.cli import UsageError
from nestedroots.coxeter import CoxeterType


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def lines(out):
    return [json.loads(x) for x in out.splitlines()]


def test_parse_type_and_root():
    assert parse_type("2,3,8").labels == (2, 3, 8)
    assert parse_type("8").rank == 2
    ct = CoxeterType((2, 4, 6))
    assert parse_root(ct, ":1").vec == ct.element([]).column(1)
    assert parse_root(ct, "-01:2").vec == tuple(ct.field.neg(x) for x in ct.element([0, 1]).column(2))
    for bad in ("1:", "x:1", "0:3", ""):
        with pytest.raises(UsageError):
            parse_root(ct, bad)
    with pytest.raises(UsageError):
        parse_type("2,5,6")


def test_lemma_verify_passes(capsys):
    code, out, err = run(capsys, "lemma", "verify", "complete-fundamental", "--type", "3,3,4", "--depth", "4")
    assert code == 0
    rec = lines(out)
    assert rec[0]["kind"] == "check" and rec[0]["status"] == "pass"
    assert rec[-1]["kind"] == "report" and rec[-1]["version"] == __version__
    assert "PASS" in err


def test_octagon_literal_fails_corrected_passes(capsys):
    code, out, _ = run(capsys, "polygon", "verify", "octagon-Ba", "--field", "F8", "--quiet")
    assert code == 1
    check = lines(out)[0]
    assert check["status"] == "fail" and set(check["mismatched_coordinates"]) == {"a6"}
    code, out, _ = run(capsys, "polygon", "verify", "octagon-Ba", "--field", "F8", "--corrected", "--quiet")
    assert code == 0
    code, _, _ = run(capsys, "polygon", "verify", "octagon-Ba", "--field", "F2", "--quiet")
    assert code == 0


def test_witness_246_note(capsys):
    code, out, err = run(capsys, "witness", "246", "--char", "5")
    assert code == 0
    assert "nc fails: value 4" in err
    check = lines(out)[0]
    assert check["value"] == "4" and check["verdict"] == "nc fails"
    code, out, err = run(capsys, "witness", "246", "--char", "3")
    assert code == 0 and lines(out)[0]["verdict"] == "witness vanishes"


@pytest.mark.parametrize("tau,value", [("swap", "a + b"), ("id", "0")])
def test_witness_248(capsys, tau, value):
    code, out, _ = run(capsys, "witness", "248", "--tau", tau, "--quiet")
    assert code == 0
    check = lines(out)[0]
    assert set(check["value"].replace(" ", "").split("+")) == set(value.replace(" ", "").split("+"))
    assert check["second_route"] == check["value"]


def test_pair_and_interval(capsys):
    code, out, _ = run(capsys, "pair", "classify", "--type", "2,4,6", "--a", ":1", "--b", ":2", "--quiet")
    assert code == 0
    item = lines(out)[0]
    assert item["kind"] == "item" and item["relation"] == "finite-dihedral" and item["order"] == 6
    code, out, _ = run(capsys, "interval", "--type", "2,4,6", "--a", ":1", "--b", ":2", "--quiet")
    assert code == 0
    assert sum(1 for x in lines(out) if x["kind"] == "item") == 4


def test_negative_root_argument(capsys):
    code, out, _ = run(capsys, "pair", "classify", "--type", "2,4,6", "--a", "-12:0", "--b", ":0", "--quiet")
    assert code == 0
    assert lines(out)[0]["a"]["positive"] is False


def test_flags_before_or_after_subcommand(capsys):
    a = run(capsys, "--quiet", "roots", "enumerate", "--type", "2,3,8", "--depth", "2")
    b = run(capsys, "roots", "enumerate", "--type", "2,3,8", "--depth", "2", "--quiet")
    assert a == b and a[2] == ""


def test_output_is_byte_identical(capsys):
    argv = ("triangle", "scan", "--type", "2,4,6", "--depth", "4", "--quiet")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_out_file(capsys, tmp_path):
    path = tmp_path / "r.jsonl"
    code, out, _ = run(capsys, "roots", "enumerate", "--type", "6", "--depth", "6", "--out", str(path), "--quiet")
    assert code == 0 and out == ""
    rec = lines(path.read_text())
    assert len([x for x in rec if x["kind"] == "item"]) == 12


@pytest.mark.parametrize(
    "argv",
    [
        ("roots", "enumerate", "--type", "2,5,6"),
        ("polygon", "verify", "octagon-Ba", "--field", "F9"),
        ("polygon", "verify", "hexagon-A", "--field", "F3"),
        ("witness", "999"),
        ("pair", "classify", "--type", "2,3,8", "--a", "bad", "--b", ":0"),
        ("frobnicate",),
        (),
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv, "--quiet") if argv else run(capsys)
    assert code == 64
    assert err


def test_config_flag(capsys, tmp_path):
    path = tmp_path / "c.ini"
    path.write_text("[setup F11]\nkind = prime\np = 11\n")
    code, out, _ = run(capsys, "--config", str(path), "polygon", "verify", "hexagon-A", "--field", "F11", "--quiet")
    assert code == 0


def test_figure_find(capsys):
    code, out, _ = run(capsys, "figure", "find", "--type", "2,4,8", "--quiet")
    assert code == 0
    assert lines(out)[0]["checks"]["m(eps,gamma)"] == 4
    code, out, _ = run(capsys, "figure", "find", "--type", "2,4,8", "--depth", "0", "--quiet")
    assert code == 2 and lines(out)[0]["status"] == "inconclusive"


def test_svg(capsys, tmp_path):
    path = tmp_path / "w.svg"
    code, out, _ = run(capsys, "emit", "walls-svg", "--type", "2,3,8", "--depth", "2", "--svg-out", str(path), "--quiet")
    assert code == 0
    text = path.read_text()
    assert text.startswith("<svg") and text.rstrip().endswith("</svg>")
    assert text.count("<line") > 3
    code, out, _ = run(capsys, "emit", "walls-svg", "--type", "2,3,8", "--depth", "2", "--quiet")
    assert out.startswith("<svg")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "nestedroots.cli", "witness", "266", "--char", "3", "--quiet"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout.splitlines()[0])["verdict"] == "witness vanishes"
    proc = subprocess.run([sys.executable, "-m", "nestedroots.cli", "--version"], capture_output=True, text=True)
    assert __version__ in proc.stdout
