"""Command-line front end: exact output format, byte determinism, exit
codes, and agreement with the library calls it wraps."""

import json
import os
import subprocess
import sys

import pytest

from pointgreen import (
    asymptotic_consistency,
    bound_states,
    delta,
    green,
    neumann,
    psi_plane_wave,
    robin,
)
from pointgreen.cli import main


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _rows_csv(out: str):
    lines = out.strip().split("\n")
    assert lines[0].startswith("# pointgreen ")
    header = lines[1].split(",")
    return header, [line.split(",") for line in lines[2:]]


def test_green_csv_matches_library_bitwise(capsys):
    code, out, _ = _run(capsys, [
        "green", "--interaction", "delta:c=1",
        "--t", "1.0", "--x", "0.5", "--y=-0.5,2.0",
    ])
    assert code == 0
    header, rows = _rows_csv(out)
    assert header == ["t", "x", "y", "re", "im"]
    assert len(rows) == 2
    for row, y in zip(rows, (-0.5, 2.0)):
        expected = complex(green(delta(1.0), 1.0, 0.5, y))
        assert row[2] == "%.16e" % y
        assert row[3] == "%.16e" % expected.real
        assert row[4] == "%.16e" % expected.imag


def test_header_carries_resolved_interaction(capsys):
    code, out, _ = _run(capsys, [
        "green", "--interaction", "robin:a=1.5,b=-0.8",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 0
    head = out.split("\n", 1)[0]
    assert head.startswith("# pointgreen green interaction=robin:a=1.5,b=-0.8")
    for token in ("phi=", "alpha=", "beta=", "t=", "x=", "y=", "format=csv"):
        assert token in head


def test_json_format_agrees_with_csv(capsys):
    argv = [
        "evolve", "--interaction", "delta:c=-1",
        "--t", "0.5", "--x", "0.7,-0.7", "--datum", "planewave:k=2",
    ]
    code, out_csv, _ = _run(capsys, argv + ["--format", "csv"])
    assert code == 0
    code, out_json, _ = _run(capsys, argv + ["--format", "json"])
    assert code == 0
    _, rows = _rows_csv(out_csv)
    body = json.loads(out_json.split("\n")[1])
    assert body["command"] == "evolve"
    assert len(body["rows"]) == len(rows) == 2
    for csv_row, json_row in zip(rows, body["rows"]):
        assert json_row["re"] == float(csv_row[2])
        assert json_row["im"] == float(csv_row[3])


def test_evolve_closed_matches_library(capsys):
    code, out, _ = _run(capsys, [
        "evolve", "--interaction", "neumann",
        "--t", "0.5", "--x", "0.7", "--datum", "planewave:k=1",
    ])
    assert code == 0
    _, rows = _rows_csv(out)
    expected = psi_plane_wave(neumann(), 0.5, 0.7, 1.0)
    assert rows[0][2] == "%.16e" % expected.real
    assert rows[0][3] == "%.16e" % expected.imag


def test_evolve_methods_agree(capsys):
    argv = [
        "evolve", "--interaction", "delta:c=1",
        "--t", "0.5", "--x", "0.7", "--datum", "planewave:k=1",
    ]
    code, out_closed, _ = _run(capsys, argv + ["--method", "closed"])
    assert code == 0
    code, out_quad, _ = _run(capsys, argv + ["--method", "quadrature"])
    assert code == 0
    _, rows_c = _rows_csv(out_closed)
    _, rows_q = _rows_csv(out_quad)
    gap = abs(complex(float(rows_c[0][2]), float(rows_c[0][3]))
              - complex(float(rows_q[0][2]), float(rows_q[0][3])))
    budget = float(rows_c[0][4]) + float(rows_q[0][4])
    assert gap <= budget + 1e-9


def test_constant_datum_is_zero_wavenumber_plane_wave(capsys):
    base = ["evolve", "--interaction", "dirichlet", "--t", "1.0", "--x", "0.5"]
    code, out_const, _ = _run(capsys, base + ["--datum", "constant"])
    assert code == 0
    code, out_zero, _ = _run(capsys, base + ["--datum", "planewave:k=0"])
    assert code == 0
    assert out_const.split("\n")[2:] == out_zero.split("\n")[2:]


def test_superosc_datum_reports_conditioning(capsys):
    code, out, _ = _run(capsys, [
        "evolve", "--interaction", "delta:c=1",
        "--t", "0.5", "--x", "0.7", "--datum", "superosc:n=10,k=2",
    ])
    assert code == 0
    head = out.split("\n", 1)[0]
    assert "conditioning=" + ("%.16e" % 2.0**10) in head


def test_repeated_runs_are_byte_identical():
    code = (
        "from pointgreen.cli import main; import sys; "
        "sys.exit(main(['evolve', '--interaction', 'robin:a=1.5,b=-0.8', "
        "'--t', '0.3,1.0', '--x=-1.0,0.7', '--datum', 'planewave:k=2', "
        "'--method', 'quadrature']))"
    )
    env = dict(os.environ, POINTGREEN_BACKEND="numpy")
    runs = [
        subprocess.run([sys.executable, "-c", code], env=env, capture_output=True)
        for _ in range(2)
    ]
    assert runs[0].returncode == runs[1].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    assert len(runs[0].stdout) > 0


def test_spectrum_json_matches_library(capsys):
    code, out, _ = _run(capsys, ["spectrum", "--interaction", "robin:a=-1.5,b=0.5"])
    assert code == 0
    body = json.loads(out.split("\n")[1])
    states = bound_states(robin(-1.5, 0.5))
    assert body["command"] == "spectrum"
    assert body["asymptotic_consistency"] == asymptotic_consistency(
        robin(-1.5, 0.5), 1.0, 1.0, 1.0
    )
    reported = body["bound_states"]
    assert len(reported) == len(states) == 2
    for entry, state in zip(reported, states):
        assert entry["energy"] == state.energy
        assert entry["omega"] == state.omega
        assert entry["multiplicity"] == state.multiplicity
        assert entry["determinant_residual"] < 1e-10
        assert entry["eigenfunction_residual"] < 1e-10
        assert len(entry["eigenfunctions"]) == state.multiplicity


def test_spectrum_of_unbinding_interaction_is_empty(capsys):
    code, out, _ = _run(capsys, ["spectrum", "--interaction", "free"])
    assert code == 0
    body = json.loads(out.split("\n")[1])
    assert body["bound_states"] == []
    assert body["asymptotic_consistency"] == 0


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["green", "--interaction", "banana", "--t", "1", "--x", "1", "--y", "1"],
         "interaction"),
        (["green", "--interaction", "free", "--t", "0", "--x", "1", "--y", "1"],
         "'t'"),
        (["green", "--interaction", "free", "--t", "1", "--x", "0", "--y", "1"],
         "'x'"),
        (["green", "--interaction", "free", "--t", "1", "--x", "abc", "--y", "1"],
         "'x'"),
        (["green", "--interaction", "delta:q=1", "--t", "1", "--x", "1", "--y", "1"],
         "unknown parameter"),
        (["green", "--interaction", "robin:a=1", "--t", "1", "--x", "1", "--y", "1"],
         "missing parameter"),
        (["evolve", "--interaction", "free", "--t", "1", "--x", "1",
          "--datum", "wavelet:q=1"], "datum"),
        (["evolve", "--interaction", "free", "--t", "1", "--x", "1",
          "--datum", "superosc:n=2.5,k=2"], "integer"),
    ],
)
def test_spec_problems_exit_2_naming_the_field(capsys, argv, needle):
    code, _, err = _run(capsys, argv)
    assert code == 2
    assert needle in err


def test_zero_strength_interaction_exits_2(capsys):
    code, _, err = _run(capsys, [
        "green", "--interaction", "delta:c=0", "--t", "1", "--x", "1", "--y", "1",
    ])
    assert code == 2
    assert err.startswith("error:")


def test_oversized_sequence_order_exits_2(capsys):
    code, _, err = _run(capsys, [
        "evolve", "--interaction", "free", "--t", "1", "--x", "1",
        "--datum", "superosc:n=200,k=2",
    ])
    assert code == 2


def test_env_tolerance_applies_and_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("POINTGREEN_ABS_TOL", "1e-6")
    code, out, _ = _run(capsys, [
        "evolve", "--interaction", "free", "--t", "1", "--x", "1",
        "--datum", "planewave:k=1", "--method", "quadrature",
    ])
    assert code == 0
    assert "abs_tol=" + ("%.16e" % 1e-6) in out.split("\n", 1)[0]

    monkeypatch.setenv("POINTGREEN_ABS_TOL", "abc")
    code, _, err = _run(capsys, [
        "evolve", "--interaction", "free", "--t", "1", "--x", "1",
        "--datum", "planewave:k=1",
    ])
    assert code == 2
    assert "POINTGREEN_ABS_TOL" in err

    monkeypatch.setenv("POINTGREEN_ABS_TOL", "-1")
    code, _, err = _run(capsys, [
        "evolve", "--interaction", "free", "--t", "1", "--x", "1",
        "--datum", "planewave:k=1",
    ])
    assert code == 2


def test_unattainable_tolerance_exits_3(capsys, monkeypatch):
    monkeypatch.setenv("POINTGREEN_ABS_TOL", "1e-300")
    monkeypatch.setenv("POINTGREEN_REL_TOL", "1e-300")
    code, _, err = _run(capsys, [
        "evolve", "--interaction", "delta:c=1", "--t", "1.0", "--x", "0.5",
        "--datum", "planewave:k=1", "--method", "quadrature",
    ])
    assert code == 3
    assert err.startswith("numeric failure:")


def test_json_interaction_named_style(capsys, tmp_path):
    path = tmp_path / "u.json"
    path.write_text('{"named": "robin", "a": 1.5, "b": -0.8}')
    code, out_json, _ = _run(capsys, [
        "green", "--interaction", f"json:{path}",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 0
    code, out_inline, _ = _run(capsys, [
        "green", "--interaction", "robin:a=1.5,b=-0.8",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 0
    assert out_json.split("\n")[1:] == out_inline.split("\n")[1:]


def test_json_interaction_raw_style(capsys, tmp_path):
    u = delta(1.0)
    path = tmp_path / "u.json"
    path.write_text(json.dumps({
        "phi": u.phi,
        "alpha": [u.alpha.real, u.alpha.imag],
        "beta": [u.beta.real, u.beta.imag],
    }))
    code, out_json, _ = _run(capsys, [
        "green", "--interaction", f"json:{path}",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 0
    code, out_inline, _ = _run(capsys, [
        "green", "--interaction", "delta:c=1",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 0
    assert out_json.split("\n")[1:] == out_inline.split("\n")[1:]


@pytest.mark.parametrize(
    "content,needle",
    [
        ("[1, 2]", "object"),
        ('{"named": "borel"}', "unknown named"),
        ('{"named": "robin", "a": 1.5}', "requires field"),
        ('{"phi": 1.0, "alpha": [0, 0]}', "requires field"),
        ('{"phi": 1.0, "alpha": 5, "beta": [0, 0]}', "re, im"),
        ("{not json", "invalid JSON"),
    ],
)
def test_json_interaction_problems_exit_2(capsys, tmp_path, content, needle):
    path = tmp_path / "u.json"
    path.write_text(content)
    code, _, err = _run(capsys, [
        "green", "--interaction", f"json:{path}",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 2
    assert needle in err


def test_json_interaction_missing_file_exits_2(capsys, tmp_path):
    code, _, err = _run(capsys, [
        "green", "--interaction", f"json:{tmp_path}/absent.json",
        "--t", "1.0", "--x", "0.5", "--y", "2.0",
    ])
    assert code == 2
    assert "cannot read" in err


def test_verify_quick_reports_only_the_known_red(capsys):
    code, out, _ = _run(capsys, ["verify", "--level", "quick"])
    lines = out.strip().split("\n")
    assert lines[0] == "# pointgreen verify level=quick"
    verdicts = {}
    for line in lines[1:-1]:
        name, rest = line.split(": ", 1)
        verdicts[name] = rest.split(" ", 1)[0]
    assert set(verdicts) == {
        "lambda-identities", "green-function", "named-examples",
        "plane-wave-oracle", "initial-condition", "asymptotics",
        "superoscillation", "spectral",
    }
    failing = {name for name, verdict in verdicts.items() if verdict == "FAIL"}
    assert failing == {"initial-condition"}
    assert lines[-1] == "7/8 suites passed"
    assert code == 1
