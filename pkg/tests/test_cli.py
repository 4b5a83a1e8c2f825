"""Command-line contract: schemas, exit codes, determinism."""

import json
import math
import os
import subprocess
import sys

import pytest

from besselquad import cli, oracles

EVAL_SCHEMA = {
    "type": "object",
    "required": ["value_re", "value_im", "err_est", "nodes", "warnings"],
    "properties": {
        "value_re": {"type": "number"},
        "value_im": {"type": "number"},
        "err_est": {"type": ["number", "null"]},
        "nodes": {"type": "integer", "minimum": 0},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

TABLE_ROW_SCHEMA = {
    "type": "object",
    "required": [
        "mu_re", "mu_im", "z_re", "z_im",
        "value_re", "value_im", "err_est", "nodes", "warnings",
    ],
    "properties": {
        "mu_re": {"type": "number"},
        "mu_im": {"type": "number"},
        "z_re": {"type": "number"},
        "z_im": {"type": "number"},
        "value_re": {"type": ["number", "null"]},
        "value_im": {"type": ["number", "null"]},
        "err_est": {"type": ["number", "null"]},
        "nodes": {"type": "integer", "minimum": 0},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("BESSELQUAD_NMAX", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "besselquad.cli", *args],
        capture_output=True,
        env=env,
    )


class TestComplexParsing:
    @pytest.mark.parametrize(
        "text,want",
        [
            ("2+1i", 2 + 1j),
            ("-0.5", -0.5 + 0j),
            ("3", 3 + 0j),
            ("1.5-2.5i", 1.5 - 2.5j),
            ("1e-3+4i", 0.001 + 4j),
            ("7.0e1-2e-2i", 70 - 0.02j),
        ],
    )
    def test_accepts(self, text, want):
        assert cli.parse_complex(text) == want

    @pytest.mark.parametrize("text", ["", "i", "2+i", "1+2j", "abc", "2 + 1i"])
    def test_rejects(self, text):
        import argparse

        with pytest.raises(argparse.ArgumentTypeError):
            cli.parse_complex(text)


class TestEval:
    def test_trivial_point(self, capsys):
        code = cli.main(["eval", "--fn", "J", "--mu", "0", "--z", "0"])
        out = json.loads(capsys.readouterr().out)
        assert code == 0
        assert out["value_re"] == 1 and out["value_im"] == 0 and out["err_est"] == 0

    def test_unit_value_and_schema(self, capsys):
        jsonschema = pytest.importorskip("jsonschema")
        code = cli.main(["eval", "--fn", "J", "--mu", "1", "--z", "1"])
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, EVAL_SCHEMA)
        assert code == 0
        assert abs(payload["value_re"] - 0.44005058574493366) < 1e-9

    def test_derivative(self, capsys):
        code = cli.main(["eval", "--fn", "Jderiv", "--mu", "0", "--k", "1", "--z", "1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert abs(payload["value_re"] + 0.44005058574493366) < 1e-9

    def test_representations_agree(self, capsys):
        values = {}
        for rep in ("cos_kernel", "sin_kernel", "kummer"):
            cli.main(["eval", "--mu", "0.5", "--z", "2", "--representation", rep])
            values[rep] = json.loads(capsys.readouterr().out)["value_re"]
        want = math.sqrt(1 / math.pi) * math.sin(2.0)
        for v in values.values():
            assert abs(v - want) < 1e-9

    def test_warning_exit_code(self, capsys):
        code = cli.main(["eval", "--mu", "-0.5", "--z", "-1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 2
        assert "BranchCutProximity" in payload["warnings"]

    def test_eval_failure_exit_code(self, capsys):
        code = cli.main(["eval", "--mu", "-0.5", "--z", "0"])
        captured = capsys.readouterr()
        assert code == 1
        assert captured.out == ""
        assert "BranchError" in captured.err

    def test_usage_error_exit_code(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["eval", "--mu", "banana", "--z", "0"])
        assert exc.value.code == 64

    def test_kappa(self, capsys):
        code = cli.main(["eval", "--fn", "kappa", "--n", "2", "--mu", "1.5", "--z", "1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert abs(payload["value_re"] - 0.5714718178908497) < 1e-9

    def test_auto_representation_is_cos_kernel(self, capsys):
        cli.main(["eval", "--mu", "0.7", "--z", "2+1i"])
        auto = capsys.readouterr().out
        cli.main(["eval", "--mu", "0.7", "--z", "2+1i", "--representation", "cos_kernel"])
        explicit = capsys.readouterr().out
        assert auto == explicit

    def test_modified_bessel_function(self, capsys):
        code = cli.main(["eval", "--fn", "I", "--mu", "0", "--z", "1"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert abs(payload["value_re"] - 1.2660658777520084) < 1e-9

    def test_shifted_order_via_n(self, capsys):
        code = cli.main(["eval", "--fn", "J", "--n", "2", "--mu", "1", "--z", "5"])
        payload = json.loads(capsys.readouterr().out)
        assert code == 0
        assert abs(payload["value_re"] - 0.36483123061366646) < 1e-9


class TestTable:
    def test_single_cell(self, capsys):
        code = cli.main(["table", "--mu-grid", "0", "--z-grid", "0"])
        rows = capsys.readouterr().out.strip().splitlines()
        assert code == 0 and len(rows) == 1
        assert json.loads(rows[0])["value_re"] == 1

    def test_three_by_three_matches_series(self, capsys):
        jsonschema = pytest.importorskip("jsonschema")
        from besselquad import oracles as orc

        code = cli.main(["table", "--mu-grid", "0,1,2", "--z-grid", "1,2,3"])
        rows = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
        assert code == 0 and len(rows) == 9
        for row in rows:
            jsonschema.validate(row, TABLE_ROW_SCHEMA)
            want = orc.series_j(row["mu_re"], row["z_re"])[0]
            assert abs(complex(row["value_re"], row["value_im"]) - want) <= max(
                1e-9 * abs(want), 1e-12
            )
        # mu-major ordering
        assert [(r["mu_re"], r["z_re"]) for r in rows] == [
            (m, z) for m in (0, 1, 2) for z in (1, 2, 3)
        ]

    def test_csv_header_and_shape(self, capsys):
        code = cli.main(
            ["--format", "csv", "table", "--mu-grid", "0,1", "--z-grid", "1,2"]
        )
        lines = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert lines[0] == cli.CSV_HEADER
        assert len(lines) == 5
        assert all(line.count(",") == 8 for line in lines[1:])

    def test_branch_warning_row_exits_2(self, capsys):
        code = cli.main(["table", "--mu-grid", "-0.5", "--z-grid", "-1"])
        row = json.loads(capsys.readouterr().out.strip())
        assert code == 2
        assert "BranchCutProximity" in row["warnings"]

    def test_error_row_recorded_not_fatal(self, capsys):
        code = cli.main(["table", "--mu-grid=-0.5,1", "--z-grid", "0,1"])
        rows = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
        assert code == 1
        assert len(rows) == 4  # the failing cell did not abort the table
        bad = rows[0]
        assert bad["value_re"] is None and bad["warnings"] == ["Error:BranchError"]
        good = rows[-1]
        assert abs(good["value_re"] - 0.44005058574493366) < 1e-9


class TestDeterminism:
    GRID = ["table", "--mu-grid", "0,0.5,1,2.5,-0.5+0.3i", "--z-grid", "0.5,1,2,2+1i,5"]

    def test_byte_identical_across_runs(self):
        a = run_cli(*self.GRID)
        b = run_cli(*self.GRID)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout

    def test_byte_identical_across_thread_counts(self):
        a = run_cli(*self.GRID, "--jobs", "1")
        b = run_cli(*self.GRID, "--jobs", "3")
        c = run_cli(*self.GRID, "--jobs", "7")
        assert a.stdout == b.stdout == c.stdout

    def test_selftest_deterministic(self):
        args = ["selftest", "--only", "vanishing_moments", "--only", "beta_moment_closed_form"]
        a = run_cli(*args)
        b = run_cli(*args)
        assert a.returncode == b.returncode == 0
        assert a.stdout == b.stdout


class TestEnvOverride:
    def test_nmax_env_beats_flag(self):
        """BESSELQUAD_NMAX overrides the node cap: a tiny cap forces a
        SlowConvergence warning (exit 2) on an argument that converges
        comfortably under the default budget."""
        ok = run_cli("eval", "--mu", "0", "--z", "8")
        assert ok.returncode == 0
        starved = run_cli(
            "--nmax", "8192", "eval", "--mu", "0", "--z", "8",
            env_extra={"BESSELQUAD_NMAX": "32"},
        )
        assert starved.returncode == 2
        payload = json.loads(starved.stdout)
        assert "SlowConvergence" in payload["warnings"]

    def test_invalid_env_cap_is_usage_error(self):
        res = run_cli("eval", "--mu", "0", "--z", "1", env_extra={"BESSELQUAD_NMAX": "100"})
        assert res.returncode == 64


class TestConverge:
    def test_doubling_differences_decay(self, capsys):
        code = cli.main(["converge", "--mu", "0", "--z", "1", "--n-list", "16,32,64,128"])
        rows = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
        assert code == 0
        assert [r["n"] for r in rows] == [16, 32, 64, 128]
        assert rows[0]["delta"] is None
        deltas = [r["delta"] for r in rows[1:]]
        assert all(d <= 1e-14 for d in deltas)

    def test_constant_at_origin(self, capsys):
        code = cli.main(["converge", "--mu", "0", "--z", "0", "--n-list", "16,32,64"])
        rows = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
        assert code == 0
        assert all(abs(r["value_re"] - 1) < 1e-15 for r in rows)
        assert all(r["delta"] == 0 for r in rows[1:])

    def test_csv_format(self, capsys):
        code = cli.main(
            ["--format", "csv", "converge", "--mu", "0", "--z", "2", "--n-list", "16,32"]
        )
        lines = capsys.readouterr().out.strip().splitlines()
        assert code == 0
        assert lines[0] == "n,value_re,value_im,delta"
        assert len(lines) == 3

    def test_rejects_non_ascending_list(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["converge", "--mu", "0", "--z", "1", "--n-list", "32,16"])
        assert exc.value.code == 64

    def test_fractional_negative_k_is_subspectral(self, capsys):
        """The 'converge' view of the Re k < 0 derivative kernel: the
        differences shrink overall but far slower than spectrally."""
        code = cli.main(
            ["converge", "--fn", "Jderiv", "--mu", "1", "--k", "-0.5", "--z", "2",
             "--n-list", "64,128,256,512,1024,2048,4096"]
        )
        rows = [json.loads(line) for line in capsys.readouterr().out.strip().splitlines()]
        assert code == 0
        deltas = [r["delta"] for r in rows[1:]]
        assert deltas[-1] < deltas[0]  # converging ...
        assert deltas[-1] > 1e-12 * abs(rows[-1]["value_re"])  # ... but not spectrally


class TestSelftestCommand:
    def test_subset_filter_and_exit(self, capsys):
        code = cli.main(["selftest", "--only", "vanishing_moments"])
        out = capsys.readouterr().out
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0].startswith("PASS vanishing_moments")
        report = json.loads(lines[-1])
        assert report["all_pass"] is True
        assert [r["identity_id"] for r in report["reports"]] == ["vanishing_moments"]
        assert report["reports"][0]["pass"] is True

    def test_unknown_identity_is_usage_error(self, capsys):
        code = cli.main(["selftest", "--only", "nonsense"])
        assert code == 64

    def test_failing_identity_exits_1(self, capsys, monkeypatch):
        """A registry entry that cannot meet its tolerance must flip the
        whole self-test to FAILED / exit 1."""
        sab = oracles._Identity(
            "vanishing_moments", 0.0, 0.0, lambda rng, spec: [(1.0, 1.0)]
        )
        monkeypatch.setattr(oracles, "REGISTRY", (sab,))
        code = cli.main(["selftest"])
        out = capsys.readouterr().out
        assert code == 1
        assert "FAIL vanishing_moments" in out
        assert json.loads(out.strip().splitlines()[-1])["all_pass"] is False
