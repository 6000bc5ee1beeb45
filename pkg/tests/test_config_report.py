import json

import pytest

from nestedroots.algebra.fields import BiPolynomialRing, PrimeField, TitsField, tits_sigma_check
from nestedroots.config import BUILTIN_SETUPS, ConfigError, load_config, resolve_field
from nestedroots.polygon import verify as pv
from nestedroots.report import EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_PASS, Report, parallel_map, workers


def test_builtin_fields():
    name, F = resolve_field("F8")
    assert name == "F8-t4" and isinstance(F, TitsField) and tits_sigma_check(F)
    assert resolve_field("F2")[0] == "F2-id"
    name, K = resolve_field("F7")
    assert isinstance(K, PrimeField) and K.p == 7
    _, R = resolve_field("F8ab-id")
    assert isinstance(R, BiPolynomialRing) and not R.swap


@pytest.mark.parametrize("bad", ["F9", "F", "GF8", "F8ab"])
def test_unknown_field(bad):
    with pytest.raises(ConfigError, match="admitted"):
        resolve_field(bad)


def test_config_file(tmp_path):
    path = tmp_path / "run.ini"
    path.write_text(
        "[defaults]\n"
        "depth = 5\n"
        "seed = 0x10\n"
        "\n"
        "[setup F5]\n"
        "kind = prime\n"
        "p = 5\n"
        "\n"
        "[setup F32]\n"
        "kind = tits      ; sigma^2 is Frobenius on F32 with sigma = t^8\n"
        "degree = 5\n"
        "modulus = 0b100101\n"
        "sigma = 3\n"
        "\n"
        "[setup F32ab]\n"
        "kind = bipoly\n"
        "base = F32\n"
        "tau = id\n"
    )
    cfg = load_config(str(path))
    assert cfg.defaults == {"depth": 5, "seed": 16}
    assert set(BUILTIN_SETUPS) < set(cfg.setups)
    _, F = resolve_field("F32", cfg)
    assert F.cardinality == 32 and tits_sigma_check(F)
    _, R = resolve_field("F32ab", cfg)
    assert R.base.cardinality == 32 and not R.swap


@pytest.mark.parametrize(
    "text",
    [
        "[nonsense]\nx = 1\n",
        "[setup X]\nkind = ring\n",
        "[setup X]\nkind = prime\np = seven\n",
        "not an ini file",
    ],
)
def test_bad_config(tmp_path, text):
    path = tmp_path / "bad.ini"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_config(str(path))


def test_bipoly_needs_tits_base(tmp_path):
    path = tmp_path / "c.ini"
    path.write_text("[setup P]\nkind = prime\np = 5\n\n[setup Q]\nkind = bipoly\nbase = P\n")
    cfg = load_config(str(path))
    with pytest.raises(ConfigError):
        resolve_field("Q", cfg)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "none.ini"))


def test_report_status_and_exit_codes():
    r = Report("demo")
    assert r.status == "pass" and r.exit_code == EXIT_PASS
    r.check("a", "pass")
    r.check("b", "inconclusive")
    assert r.exit_code == EXIT_INCONCLUSIVE
    r.check("c", "fail")
    assert r.exit_code == EXIT_FAIL
    assert r.counts() == {"pass": 1, "fail": 1, "inconclusive": 1}
    with pytest.raises(ValueError):
        r.check("d", "maybe")


def test_report_lines_are_deterministic():
    def build():
        r = Report("demo", params={"type": "2,3,8", "depth": 3})
        r.item(root=[1, 0, 0], zeta=1, alpha=2)
        r.check("x", "pass", value=4)
        r.note("fine")
        return r

    a, b = build().json_lines(), build().json_lines()
    assert a == b
    lines = [json.loads(x) for x in a.splitlines()]
    assert [x["kind"] for x in lines] == ["item", "check", "report"]
    assert lines[-1]["outcomes"] == {"pass": 1, "fail": 0, "inconclusive": 0}
    assert all(list(x) == sorted(x) for x in lines)
    assert "elapsed" not in a
    assert "fine" in build().human() and "elapsed" in build().human()


def _square(x):
    return x * x


def test_parallel_map_order(monkeypatch):
    assert parallel_map(_square, range(5), n=1) == [0, 1, 4, 9, 16]
    assert parallel_map(_square, range(5), n=2) == [0, 1, 4, 9, 16]
    monkeypatch.setenv("NESTEDROOTS_WORKERS", "3")
    assert workers() == 3
    monkeypatch.setenv("NESTEDROOTS_WORKERS", "lots")
    assert workers() == 1


def test_sweeps_do_not_depend_on_workers(monkeypatch):
    monkeypatch.setenv("NESTEDROOTS_WORKERS", "1")
    one = pv.octagon_Ba("F8").as_dict()
    monkeypatch.setenv("NESTEDROOTS_WORKERS", "2")
    two = pv.octagon_Ba("F8").as_dict()
    assert one == two


def test_kind_is_reserved():
    r = Report("demo")
    with pytest.raises(ValueError):
        r.item(kind="nested")
    with pytest.raises(ValueError):
        r.check("x", "pass", kind="nested")
