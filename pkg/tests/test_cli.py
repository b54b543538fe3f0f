"""End-to-end tests of the command-line interface."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

import stampcover.cli as cli
from stampcover.cli import main

A9_TEXT = "1,3,5,8,20,23,25,27,28"

REPORT_KEYS = [
    "basis",
    "k",
    "symmetric",
    "h0",
    "h1",
    "h1_found",
    "theorem_bound",
    "conjecture_holds",
    "counterexample",
]


# ---------- cover ----------


def test_cover_table_is_a_bare_number(capsys):
    assert main(["cover", "--basis", "1,3,6,10", "--h", "3", "--format", "table"]) == 0
    assert capsys.readouterr().out == "23\n"


def test_cover_json(capsys):
    assert main(["cover", "--basis", "1,3,6,10", "--h", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"basis": "1,3,6,10", "h": 3, "cover": 23}


def test_cover_default_format_is_json_when_not_a_terminal(capsys):
    assert main(["cover", "--basis", "1,3", "--h", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["cover"] == 4


def test_cover_json_round_trips(capsys):
    main(["cover", "--basis", "1,3,6,10", "--h", "2", "--format", "json"])
    out = capsys.readouterr().out
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_cover_profile_table(capsys):
    code = main(
        ["cover", "--basis", "1,2", "--h", "3", "--profile", "--format", "table"]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.splitlines() == [
        "basis = 1,2",
        "h=1 cover=2  saturated",
        "h=2 cover=4  saturated",
        "h=3 cover=6  saturated",
    ]


def test_cover_profile_json(capsys):
    main(["cover", "--basis", "1,3,6,10", "--h", "3", "--profile", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    assert payload["rows"] == [
        {"h": 1, "cover": 1, "saturated": False},
        {"h": 2, "cover": 4, "saturated": False},
        {"h": 3, "cover": 23, "saturated": False},
    ]


# ---------- analyze ----------


def test_analyze_json_golden(capsys):
    assert main(["analyze", "--basis", A9_TEXT, "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload) == REPORT_KEYS
    assert payload["h0"] == 3
    assert payload["h1"] == 4
    assert payload["counterexample"] is True


def test_analyze_table(capsys):
    assert main(["analyze", "--basis", "1,2,3", "--format", "table"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "conjecture_holds = true" in lines
    assert any(line.startswith("h0 ") and line.endswith("= 2") for line in lines)


def test_analyze_exit_4_when_no_saturation_within_cap(capsys):
    code = main(
        ["analyze", "--basis", "1,3,6,10", "--cap", "5", "--format", "json"]
    )
    assert code == 4
    payload = json.loads(capsys.readouterr().out)
    assert payload["h1"] is None
    assert payload["h1_found"] is False


def test_analyze_table_reports_missing_h1(capsys):
    main(["analyze", "--basis", "1,3,6,10", "--cap", "5", "--format", "table"])
    assert "not found within cap 5" in capsys.readouterr().out


def test_analyze_rejects_cap_below_threshold(capsys):
    code = main(["analyze", "--basis", "1,3,6,10", "--cap", "2"])
    assert code == 2
    assert "error:" in capsys.readouterr().err


# ---------- family ----------


def test_family_table(capsys):
    assert main(["family", "--kind", "a10", "--p", "5", "--format", "table"]) == 0
    assert capsys.readouterr().out == "1,5,7,12,47,82,87,89,93,94\n"


def test_family_json(capsys):
    assert main(["family", "--kind", "a5", "--p", "3", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {"kind": "a5", "p": 3, "basis": "1,3,5,8,20", "k": 5}


def test_family_rejects_bad_parameters(capsys):
    assert main(["family", "--kind", "a9", "--p", "4"]) == 2
    assert main(["family", "--kind", "a10", "--p", "3"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


# ---------- scan ----------


def test_scan_writes_jsonl_and_summary(tmp_path, capsys):
    out = tmp_path / "scan.jsonl"
    code = main(["scan", "--k", "3", "--ak-max", "12", "--out", str(out)])
    assert code == 0
    assert (
        capsys.readouterr().err.strip()
        == "scanned=10 counterexamples=0 k=3 ak_max=12 mode=symmetric"
    )
    lines = out.read_text().splitlines()
    assert len(lines) == 11
    assert all(list(json.loads(line)) == REPORT_KEYS for line in lines[:-1])
    assert json.loads(lines[-1]) == {"summary": {"scanned": 10, "counterexamples": 0}}


def test_scan_exit_5_on_counterexample(tmp_path, capsys):
    out = tmp_path / "nine.jsonl"
    code = main(["scan", "--k", "9", "--ak-max", "28", "--out", str(out)])
    assert code == 5
    assert capsys.readouterr().err.strip().startswith("scanned=1430 counterexamples=1")
    flagged = [
        json.loads(line)
        for line in out.read_text().splitlines()
        if '"counterexample":true' in line
    ]
    assert [record["basis"] for record in flagged] == [A9_TEXT]


def test_scan_threads_byte_identical(tmp_path):
    serial = tmp_path / "serial.jsonl"
    pooled = tmp_path / "pooled.jsonl"
    args = ["scan", "--k", "4", "--ak-max", "20"]
    assert main(args + ["--out", str(serial), "--threads", "1"]) == 0
    assert main(args + ["--out", str(pooled), "--threads", "4"]) == 0
    assert serial.read_bytes() == pooled.read_bytes()


def test_scan_resume_via_cli(tmp_path):
    reference = tmp_path / "reference.jsonl"
    args = ["scan", "--k", "4", "--ak-max", "16", "--out"]
    assert main(args + [str(reference)]) == 0
    expected = reference.read_bytes()

    torn = tmp_path / "torn.jsonl"
    lines = expected.split(b"\n")
    torn.write_bytes(b"\n".join(lines[:2]) + b"\n" + lines[2][:10])
    assert main(["scan", "--k", "4", "--ak-max", "16", "--out", str(torn), "--resume"]) == 0
    assert torn.read_bytes() == expected


def test_scan_rejects_impossible_box(capsys):
    assert main(["scan", "--k", "5", "--ak-max", "3", "--out", "/tmp/na.jsonl"]) == 2
    assert "error:" in capsys.readouterr().err


# ---------- extremal ----------


def test_extremal_table(capsys):
    code = main(["extremal", "--h", "3", "--k", "3", "--format", "table"])
    assert code == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "n_star = 15  (h=3, k=3, top <= 8)"
    assert out[1:] == ["  1,4,5"]


def test_extremal_json(capsys):
    assert main(["extremal", "--h", "2", "--k", "2", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "h": 2,
        "k": 2,
        "ak_ceiling": 3,
        "n_star": 4,
        "witnesses": ["1,2", "1,3"],
    }


def test_extremal_exit_6_when_too_large(capsys):
    assert main(["extremal", "--h", "9", "--k", "9"]) == 6
    assert "error:" in capsys.readouterr().err


# ---------- batch input ----------


def test_basis_file_emits_jsonl_in_order(tmp_path, capsys):
    batch = tmp_path / "bases.txt"
    batch.write_text(
        "# three bases, one per line\n"
        "1,3,6,10\n"
        "\n"
        f"{A9_TEXT}  # the smallest known counterexample\n"
        "1,2\n",
        encoding="utf-8",
    )
    code = main(["cover", "--basis-file", str(batch), "--h", "2"])
    assert code == 0
    lines = capsys.readouterr().out.splitlines()
    payloads = [json.loads(line) for line in lines]
    assert [p["basis"] for p in payloads] == ["1,3,6,10", A9_TEXT, "1,2"]
    assert [p["cover"] for p in payloads] == [4, 6, 4]


def test_analyze_basis_file_exit_4_if_any_h1_missing(tmp_path, capsys):
    batch = tmp_path / "bases.txt"
    batch.write_text("1,2\n1,3,6,10\n", encoding="utf-8")
    code = main(["analyze", "--basis-file", str(batch), "--cap", "6"])
    assert code == 4
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2
    assert json.loads(lines[0])["h1"] == 2
    assert json.loads(lines[1])["h1"] is None


def test_basis_file_error_names_the_line(tmp_path, capsys):
    batch = tmp_path / "bad.txt"
    batch.write_text("1,3\n2,4\n", encoding="utf-8")
    assert main(["cover", "--basis-file", str(batch), "--h", "2"]) == 2
    assert ":2:" in capsys.readouterr().err


def test_basis_file_must_not_be_empty(tmp_path, capsys):
    batch = tmp_path / "empty.txt"
    batch.write_text("# nothing here\n", encoding="utf-8")
    assert main(["cover", "--basis-file", str(batch), "--h", "2"]) == 2


def test_missing_basis_file_is_invalid_input(capsys):
    assert main(["cover", "--basis-file", "/nonexistent/x.txt", "--h", "2"]) == 2


# ---------- exit codes and argument errors ----------


def test_invalid_basis_exits_2(capsys):
    assert main(["cover", "--basis", "2,3", "--h", "2"]) == 2
    assert main(["cover", "--basis", "1,abc", "--h", "2"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err


def test_error_message_names_the_defect(capsys):
    assert main(["cover", "--basis", "1,3,3", "--h", "2"]) == 2
    assert "NotIncreasing" in capsys.readouterr().err


def test_overflow_exits_3(capsys):
    big = str(2**63)
    assert main(["cover", "--basis", f"1,{big}", "--h", "2"]) == 3
    assert "error:" in capsys.readouterr().err


def test_argparse_usage_errors_exit_2(capsys):
    assert main(["cover", "--basis", "1,3"]) == 2  # --h missing
    assert main(["cover", "--basis", "1,3", "--h", "0"]) == 2
    assert main(["cover", "--basis", "1,3", "--h", "x"]) == 2
    assert main(["nonsense"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_basis_and_basis_file_are_exclusive(tmp_path, capsys):
    batch = tmp_path / "b.txt"
    batch.write_text("1,2\n", encoding="utf-8")
    code = main(
        ["cover", "--basis", "1,2", "--basis-file", str(batch), "--h", "2"]
    )
    assert code == 2
    capsys.readouterr()


def test_help_exits_0(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


# ---------- styling ----------


def test_no_color_disables_ansi(monkeypatch):
    class FakeTty:
        def isatty(self):
            return True

    monkeypatch.setattr(sys, "stdout", FakeTty())
    monkeypatch.delenv("NO_COLOR", raising=False)
    assert cli._style("x", "1;31") == "\x1b[1;31mx\x1b[0m"
    monkeypatch.setenv("NO_COLOR", "1")
    assert cli._style("x", "1;31") == "x"


def test_not_a_tty_means_no_ansi(capsys, monkeypatch):
    monkeypatch.delenv("NO_COLOR", raising=False)
    main(["analyze", "--basis", A9_TEXT, "--format", "table"])
    assert "\x1b[" not in capsys.readouterr().out


# ---------- module entry point ----------


def test_python_dash_m_invocation():
    proc = subprocess.run(
        [sys.executable, "-m", "stampcover", "cover", "--basis", "1,3,6,10",
         "--h", "3", "--format", "table"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "23"
