"""CLI surface: exit codes, golden outputs, README examples, stability."""

import contextlib
import io
import json
import shlex
from pathlib import Path

import pytest

from ulrichbundles.cli import run

GOLDEN_DIR = Path(__file__).parent / "goldens"
README = Path(__file__).parent.parent / "README.md"

GOLDEN_COMMANDS = {
    "coh_p2_canonical.json": ["coh", "P2", "[-3]", "--json"],
    "ulrich_f1_section.json": ["ulrich", "F1", "[0,1]", "--pol", "[1,1]", "--json"],
    "enum_ulrich_f2_steep.json": ["enum-ulrich", "F2", "--pol", "[1,2]",
                                  "--box", "8", "--json"],
    "enum_zero_f2.json": ["enum-zero", "F2", "--box", "6", "--json"],
    "oracle_f2_canonical.json": ["oracle", "F2", "[0,-2]", "--json"],
    "criterion_blowup.json": ["criterion", "PB(P2;[1],[0])", "[-1]",
                              "--pol", "[1]", "--json"],
    "kernel_staircase_2_1.json": ["kernel", "2", "1", "--json"],
    "prop61_3_1.json": ["prop61", "3", "1", "--json"],
}


def run_cli(args):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(args)
    return code, buf.getvalue()


class TestGoldens:
    @pytest.mark.parametrize("name,args", sorted(GOLDEN_COMMANDS.items()))
    def test_matches_committed_output(self, name, args):
        code, out = run_cli(args)
        assert code == 0
        assert out == (GOLDEN_DIR / name).read_text()

    @pytest.mark.parametrize("name,args", sorted(GOLDEN_COMMANDS.items()))
    def test_byte_stable(self, name, args):
        assert run_cli(args) == run_cli(args)


class TestExitCodes:
    def test_success(self):
        code, out = run_cli(["coh", "P2", "[-3]", "--json"])
        assert code == 0
        assert json.loads(out) == {"h": [0, 0, 1], "chi": 1, "generic": False}

    def test_parse_error_is_one(self):
        code, out = run_cli(["coh", "Q7", "[1]", "--json"])
        assert code == 1
        assert json.loads(out)["error"] == "parse-error"

    def test_usage_error_is_one(self):
        code, _ = run_cli(["enum-ulrich", "F2", "--box", "3"])  # missing --pol
        assert code == 1

    def test_unsupported_is_two(self):
        code, out = run_cli(["chi", "C3", "[2]", "--json"])
        assert code == 2
        assert json.loads(out)["error"] == "generic-mode-unsupported"

    def test_negative_hirzebruch_is_two(self):
        code, out = run_cli(["coh", "F-1", "[1,1]", "--json"])
        assert code == 2
        assert json.loads(out)["error"] == "unsupported-variety"

    def test_bad_polarisation_is_two(self):
        code, out = run_cli(["ulrich", "F2", "[0,1]", "--pol", "[0,1]", "--json"])
        assert code == 2
        assert json.loads(out)["error"] == "not-very-ample"

    def test_oracle_mismatch_is_three(self, monkeypatch):
        import importlib

        cli_mod = importlib.import_module("ulrichbundles.cli")
        from ulrichbundles import CohomologyTable

        monkeypatch.setattr(cli_mod, "toric_cech_oracle",
                            lambda v, d: CohomologyTable.make((7, 0, 0)))
        code, out = run_cli(["oracle", "P2", "[1]", "--json"])
        assert code == 3
        assert json.loads(out)["agree"] is False

    def test_probe_bad_twist_is_two(self):
        code, out = run_cli(["probe", "PB(P1;[0],[3])", "[0]", "[0]",
                             "-p", "5", "--json"])
        assert code == 2
        assert json.loads(out)["error"] == "bad-twist"


class TestScanCap:
    def test_env_cap_enforced(self, monkeypatch):
        monkeypatch.setenv("ULRICH_SCAN_CAP", "10")
        code, out = run_cli(["enum-zero", "F2", "--box", "8", "--json"])
        assert code == 2
        assert json.loads(out)["error"] == "box-too-large"

    def test_env_cap_can_widen(self, monkeypatch):
        monkeypatch.setenv("ULRICH_SCAN_CAP", "100000")
        code, _ = run_cli(["enum-zero", "F2", "--box", "8", "--json"])
        assert code == 0


class TestMinusBasis:
    def test_canonical_in_minus_coordinates(self):
        plus = run_cli(["coh", "F2", "[0,-2]", "--json"])
        minus = run_cli(["coh", "F2", "[-4,-2]", "--minus-basis", "--json"])
        assert plus == minus


class TestHumanOutput:
    def test_table_line(self):
        code, out = run_cli(["coh", "P2", "[-3]"])
        assert code == 0 and "h = (0, 0, 1)" in out

    def test_report_lines(self):
        code, out = run_cli(["ulrich", "F1", "[0,1]", "--pol", "[1,1]"])
        assert code == 0
        assert "verdict:      Ulrich" in out

    def test_ample_flag(self):
        code, out = run_cli(["ample", "C2", "[5]"])
        assert code == 0 and "sufficient bound only" in out


class TestReadmeExamples:
    def test_every_console_block_runs_and_matches(self):
        text = README.read_text()
        blocks = []
        in_block = False
        for line in text.splitlines():
            if line.strip() == "```console":
                in_block = True
                blocks.append([])
            elif in_block and line.strip() == "```":
                in_block = False
            elif in_block:
                blocks[-1].append(line)
        assert blocks, "README must document console examples"
        checked = 0
        for block in blocks:
            i = 0
            while i < len(block):
                line = block[i]
                assert line.startswith("$ ulrich "), f"unexpected line {line!r}"
                args = shlex.split(line[len("$ ulrich "):])
                expected = []
                i += 1
                while i < len(block) and not block[i].startswith("$ "):
                    expected.append(block[i])
                    i += 1
                code, out = run_cli(args)
                assert code == 0, f"{line!r} exited {code}: {out}"
                assert out.rstrip("\n") == "\n".join(expected).rstrip("\n"), line
                checked += 1
        assert checked >= 4
