"""Command-line interface: configs, JSON documents, exit codes, sweep."""

import json

import pytest

from artifact import __version__
from artifact.cli import (
    EXIT_INAPPLICABLE,
    EXIT_INCONCLUSIVE,
    EXIT_NONINTEGRABLE,
    EXIT_USAGE,
    SystemSpec,
    UsageError,
    load_config,
    load_sweep_config,
    main,
    run_check,
    sweep,
)
from artifact.exactalg import FieldSpec
from artifact.unfoldings import FoldHopfParams


FIVE_KEYS = ["version", "status", "h1", "orders", "input_echo"]


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


BUILTIN_INI = """
[field]
d = 2

[system]
family = fold-hopf
mu = -1
nu = 1
alpha = rt
"""

INLINE_INI = """
[field]
d = 2

[system]
P = eta^2 + xi^2 - 1
Q = rt*xi*eta + eta
phi = 0
"""

SWEEP_INI = """
[field]
d = 2

[system]
family = fold-hopf
mu = -1

[sweep]
nu = 1, rt
alpha = rt, 1/2, 3
"""


# ---------------------------------------------------------------------------
# Config loading
# ---------------------------------------------------------------------------


def test_load_config_builtin(tmp_path):
    spec = load_config(write(tmp_path, "a.ini", BUILTIN_INI))
    assert spec.family == "fold-hopf"
    assert spec.field.d == 2
    assert spec.max_order == 9
    assert isinstance(spec.params, FoldHopfParams)


def test_load_config_inline(tmp_path):
    spec = load_config(write(tmp_path, "a.ini", INLINE_INI))
    assert spec.family is None
    assert spec.P is not None and spec.Q is not None
    system, curve = spec.build()
    assert curve.phi.is_zero()


def test_load_config_errors(tmp_path):
    with pytest.raises(UsageError):
        load_config(str(tmp_path / "missing.ini"))
    with pytest.raises(UsageError):
        load_config(write(tmp_path, "b.ini", "[bogus]\nx = 1\n"))
    with pytest.raises(UsageError):
        load_config(write(tmp_path, "c.ini", "[system]\nP = xi\n"))  # no Q
    with pytest.raises(UsageError):
        load_config(
            write(tmp_path, "d.ini", "[system]\nfamily = fold-hopf\nmu = 1\n")
        )  # missing nu/alpha
    with pytest.raises(UsageError):
        load_config(
            write(
                tmp_path,
                "e.ini",
                "[system]\nP = xi\nQ = eta\nwhat = 3\n",
            )
        )
    with pytest.raises(UsageError):
        load_config(
            write(tmp_path, "f.ini", "[field]\nd = 4\n" + "[system]\nP = xi\nQ = eta\n")
        )


def test_load_config_scalar_validation(tmp_path):
    bad = BUILTIN_INI.replace("alpha = rt", "alpha = xi + 1")
    with pytest.raises(UsageError):
        load_config(write(tmp_path, "a.ini", bad))
    bad2 = BUILTIN_INI.replace("mu = -1", "mu = 1/0")
    with pytest.raises(UsageError):
        load_config(write(tmp_path, "b.ini", bad2))


def test_max_order_precedence(tmp_path, monkeypatch):
    ini = BUILTIN_INI + "\n[check]\nmax_order = 5\n"
    path = write(tmp_path, "a.ini", ini)
    assert load_config(path).max_order == 5
    assert load_config(path, max_order_flag=7).max_order == 7
    monkeypatch.setenv("NONINT_MAX_ORDER", "11")
    assert load_config(path).max_order == 5  # config beats env
    plain = write(tmp_path, "b.ini", BUILTIN_INI)
    assert load_config(plain).max_order == 11  # env beats default
    monkeypatch.setenv("NONINT_MAX_ORDER", "not-a-number")
    with pytest.raises(UsageError):
        load_config(plain)
    monkeypatch.setenv("NONINT_MAX_ORDER", "1")
    with pytest.raises(UsageError):
        load_config(plain)


def test_spec_rejects_out_of_range_order():
    F = FieldSpec(2)
    params = FoldHopfParams(F, -1, 1, F.surd())
    with pytest.raises(UsageError):
        SystemSpec(field=F, max_order=26, family="fold-hopf", params=params)
    with pytest.raises(UsageError):
        SystemSpec(field=F, max_order=1, family="fold-hopf", params=params)


# ---------------------------------------------------------------------------
# Report documents
# ---------------------------------------------------------------------------


def test_report_frozen_top_level_keys(tmp_path):
    report = run_check(load_config(write(tmp_path, "a.ini", BUILTIN_INI)))
    doc = report.to_json_dict()
    assert list(doc.keys()) == FIVE_KEYS
    assert doc["version"] == __version__
    assert doc["status"] == "nonintegrable"
    assert report.exit_code == EXIT_NONINTEGRABLE


def test_report_json_round_trip(tmp_path):
    report = run_check(load_config(write(tmp_path, "a.ini", BUILTIN_INI)))
    text = report.to_json()
    parsed = json.loads(text)
    assert json.dumps(parsed, indent=2) + "\n" == text
    assert parsed["h1"]["holds"] is True
    orders = parsed["orders"]
    fired = [o for o in orders if o["criterion"]]
    assert fired and fired[0]["k"] == 3 and fired[0]["criterion"] == "iv"
    assert fired[0]["partition"]["shared"]
    assert parsed["input_echo"]["mode"] == "builtin"
    assert parsed["input_echo"]["params"]["alpha"] == "rt"


def test_report_inconclusive_flavours(tmp_path):
    h1fail = BUILTIN_INI.replace("nu = 1", "nu = 2").replace(
        "alpha = rt", "alpha = 3"
    )
    report = run_check(load_config(write(tmp_path, "a.ini", h1fail)))
    doc = report.to_json_dict()
    assert doc["status"] == "inconclusive"
    assert doc["h1"]["holds"] is False
    assert doc["orders"] == []
    assert report.exit_code == EXIT_INCONCLUSIVE
    gap = BUILTIN_INI.replace("nu = 1", "nu = rt").replace(
        "alpha = rt", "alpha = 2 + rt"
    )
    report2 = run_check(load_config(write(tmp_path, "b.ini", gap)))
    doc2 = report2.to_json_dict()
    assert doc2["status"] == "inconclusive"
    assert doc2["h1"]["holds"] is True
    assert all(o["criterion"] is None for o in doc2["orders"])


def test_report_inapplicable(tmp_path):
    ini = "[system]\nP = 1\nQ = eta\n"
    report = run_check(load_config(write(tmp_path, "a.ini", ini)))
    doc = report.to_json_dict()
    assert doc["status"] == "inapplicable"
    assert doc["h1"]["regular_at_infinity"] is False
    assert doc["h1"]["holds"] is None
    assert report.exit_code == EXIT_INAPPLICABLE


# ---------------------------------------------------------------------------
# Sweep
# ---------------------------------------------------------------------------


def test_sweep_grid_order_and_summary(tmp_path):
    template, axes = load_sweep_config(write(tmp_path, "s.ini", SWEEP_INI))
    assert [name for name, _ in axes] == ["nu", "alpha"]
    rows, summary = sweep(template, axes)
    assert summary["total"] == 6 and summary["errors"] == 0
    assert [row.index for row in rows] == list(range(6))
    # last axis fastest: nu=1 for the first three rows
    assert [row.params["nu"] for row in rows] == ["1", "1", "1", "rt", "rt", "rt"]
    assert [row.params["alpha"] for row in rows] == ["rt", "1/2", "3"] * 2
    assert summary["by_status"] == {"inconclusive": 3, "nonintegrable": 3}
    assert summary["by_criterion"] == {"i": 1, "iv": 2}
    assert summary["by_k"] == {"3": 3}


def test_sweep_isolates_per_tuple_errors(tmp_path):
    template, axes = load_sweep_config(write(tmp_path, "s.ini", SWEEP_INI))
    poisoned = [("nu", [template.field(1), "bad-value"]), axes[1]]
    rows, summary = sweep(template, poisoned)
    assert summary["total"] == 6
    assert summary["errors"] == 3
    assert all(r.error is not None for r in rows if r.params["nu"] == "bad-value")
    assert all(r.report is not None for r in rows if r.params["nu"] == "1")


def test_sweep_requires_family(tmp_path):
    path = write(tmp_path, "s.ini", INLINE_INI + "\n[sweep]\nnu = 1\n")
    with pytest.raises(UsageError):
        load_sweep_config(path)


def test_sweep_rejects_unknown_axis(tmp_path):
    path = write(tmp_path, "s.ini", SWEEP_INI + "chart = 1, 2\n")
    with pytest.raises(UsageError):
        load_sweep_config(path)


def test_sweep_empty_axes(tmp_path):
    ini = BUILTIN_INI + "\n[sweep]\n"
    template, axes = load_sweep_config(write(tmp_path, "s.ini", ini))
    rows, summary = sweep(template, axes)
    assert rows == [] and summary["total"] == 0


# ---------------------------------------------------------------------------
# main() end to end
# ---------------------------------------------------------------------------


def test_main_check_exit_codes(tmp_path, capsys):
    path = write(tmp_path, "a.ini", BUILTIN_INI)
    assert main(["check", path]) == EXIT_NONINTEGRABLE
    out = capsys.readouterr().out
    assert "status: nonintegrable" in out
    assert "criterion iv at k = 3" in out

    h1fail = write(
        tmp_path,
        "b.ini",
        BUILTIN_INI.replace("nu = 1", "nu = 2").replace("alpha = rt", "alpha = 3"),
    )
    assert main(["check", h1fail]) == EXIT_INCONCLUSIVE
    irregular = write(tmp_path, "c.ini", "[system]\nP = 1\nQ = eta\n")
    assert main(["check", irregular]) == EXIT_INAPPLICABLE
    assert main(["check", str(tmp_path / "nope.ini")]) == EXIT_USAGE


def test_main_json_output(tmp_path, capsys):
    path = write(tmp_path, "a.ini", BUILTIN_INI)
    out_path = tmp_path / "report.json"
    assert main(["check", path, "--json", str(out_path)]) == 0
    doc = json.loads(out_path.read_text())
    assert list(doc.keys()) == FIVE_KEYS
    capsys.readouterr()
    assert main(["check", path, "--json", "-"]) == 0
    doc2 = json.loads(capsys.readouterr().out)
    assert doc2["status"] == "nonintegrable"


def test_main_fold_hopf_flags(capsys):
    code = main(
        ["fold-hopf", "--mu", "-1", "--nu", "1", "--alpha", "rt", "--d", "2"]
    )
    assert code == EXIT_NONINTEGRABLE
    assert "criterion iv" in capsys.readouterr().out
    # surd without the right field is a usage error
    assert main(["fold-hopf", "--mu", "-1", "--nu", "1", "--alpha", "rt"]) == (
        EXIT_USAGE
    )


def test_main_double_hopf_charts(capsys):
    base = [
        "double-hopf",
        "--mu", "1", "--nu", "rt", "--alpha", "1/2", "--beta", "1",
        "--d", "2",
    ]
    assert main(base) == EXIT_NONINTEGRABLE
    out1 = capsys.readouterr().out
    assert "criterion iii at k = 3" in out1
    assert main(base + ["--chart", "2"]) == EXIT_NONINTEGRABLE
    out2 = capsys.readouterr().out
    assert "chart 2" in out2


def test_main_usage_errors(capsys):
    assert main([]) == EXIT_USAGE
    assert main(["bogus"]) == EXIT_USAGE
    assert main(["fold-hopf", "--mu", "1"]) == EXIT_USAGE
    assert main(["fold-hopf", "--mu", "1", "--nu", "1", "--alpha", "1",
                 "--max-order", "99"]) == EXIT_USAGE
    capsys.readouterr()


def test_main_sweep(tmp_path, capsys):
    path = write(tmp_path, "s.ini", SWEEP_INI)
    assert main(["sweep", path]) == 0
    out = capsys.readouterr().out
    assert "sweep: 6 tuples, 0 errors" in out
    json_path = tmp_path / "sweep.json"
    assert main(["sweep", path, "--json", str(json_path)]) == 0
    doc = json.loads(json_path.read_text())
    assert list(doc.keys()) == ["version", "summary", "reports"]
    assert len(doc["reports"]) == 6
    assert doc["reports"][0]["certificate"]["status"] in (
        "nonintegrable",
        "inconclusive",
    )


def test_main_version_flag(capsys):
    code = main(["--version"])
    assert code == 0
    assert __version__ in capsys.readouterr().out
