import json
import subprocess
import sys

import pytest

from degreebox.cli import (
    InstanceSpec,
    InstanceSyntaxError,
    main,
    parse_instance,
    run_identity_suite,
)
from degreebox.errors import LengthMismatch

CE_TEXT = "5,4,3,3,3,1/5,5,3,3,3,1"


class TestParseInstance:
    def test_counterexample_inline(self):
        spec = parse_instance(CE_TEXT)
        assert spec.a == (5, 4, 3, 3, 3, 1)
        assert spec.b == (5, 5, 3, 3, 3, 1)

    def test_degenerate_box(self):
        spec = parse_instance("2,2,2/2,2,2")
        assert spec.a == spec.b == (2, 2, 2)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            parse_instance("1,2/1")

    def test_whitespace_tolerated(self):
        spec = parse_instance("  5 ,4 / 5,  5 ")
        assert spec == InstanceSpec((5, 4), (5, 5))

    @pytest.mark.parametrize("bad", ["abc", "1,2", "1/2/3", "1,x/1,2"])
    def test_syntax_errors(self, bad):
        with pytest.raises(InstanceSyntaxError):
            parse_instance(bad)

    def test_json_file_input(self, tmp_path):
        path = tmp_path / "inst.json"
        path.write_text(json.dumps({"a": [2, 2, 2], "b": [2, 2, 2]}))
        spec = parse_instance(f"@{path}")
        assert spec.a == (2, 2, 2)

    def test_missing_file(self):
        with pytest.raises(InstanceSyntaxError):
            parse_instance("@/no/such/file.json")

    def test_canonical_json_round_trips(self):
        spec = parse_instance("5,4/5,5")
        blob = spec.canonical_json()
        payload = json.loads(blob)
        again = InstanceSpec(tuple(payload["a"]), tuple(payload["b"]))
        assert again.canonical_json() == blob


class TestExitCodes:
    def test_check_failing_instance(self, capsys):
        assert main(["check", CE_TEXT]) == 1
        out = capsys.readouterr().out
        assert "CDZ" in out and "t=2" in out

    def test_check_passing_instance(self):
        assert main(["check", "2,2,2/2,2,2"]) == 0

    def test_check_bad_input(self, capsys):
        assert main(["check", "1,2/1"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_realize_triangle_edges(self, capsys):
        assert main(["realize", "2,2,2/2,2,2"]) == 0
        assert capsys.readouterr().out == "1 2\n1 3\n2 3\n"

    def test_realize_unrealizable(self, capsys):
        assert main(["realize", CE_TEXT]) == 1
        assert "not realizable" in capsys.readouterr().out

    def test_realize_slack_box(self):
        assert main(["realize", "0,0/1,1"]) == 0

    def test_realize_dot_output(self, capsys):
        assert main(["realize", "--dot", "1,1/1,1"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("graph witness {") and "1 -- 2;" in out

    def test_crossval_small(self, capsys):
        assert main(["crossval", "4"]) == 0
        out = capsys.readouterr().out
        assert "instances: 715" in out
        assert "cdz vs oracle disagreements: 0" in out

    def test_crossval_too_large_without_sample(self, capsys):
        assert main(["crossval", "9"]) == 2
        assert "sample" in capsys.readouterr().err

    def test_crossval_large_with_sample(self):
        assert main(["--quiet", "crossval", "9", "--sample", "30"]) == 0

    def test_identities(self, capsys):
        assert main(["identities", "--count", "500", "--seed", "7"]) == 0
        assert "0 failures" in capsys.readouterr().out

    def test_identities_zero_rounds_vacuous(self):
        assert main(["identities", "--count", "0"]) == 0


class TestJsonOutput:
    def test_check_json_shape(self, capsys):
        assert main(["--json", "check", "--oracle", CE_TEXT]) == 1
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "degreebox.check/1"
        assert payload["criteria"]["cdz"] == {
            "holds": False, "witness_t": 2, "witness_m": None, "lhs": 9, "rhs": 8,
        }
        assert payload["criteria"]["ryser_interval"]["holds"] is True
        assert payload["oracle"] == {"realizable": False, "witness_count": 0}
        assert payload["normalized"]["perm"] == [1, 2, 3, 4, 5, 6]

    def test_check_json_byte_identical(self, capsys):
        main(["--json", "check", CE_TEXT])
        first = capsys.readouterr().out
        main(["--json", "check", CE_TEXT])
        assert capsys.readouterr().out == first

    def test_crossval_json_byte_identical(self, capsys):
        argv = ["--json", "crossval", "5", "--sample", "200", "--seed", "3"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first
        payload = json.loads(first)
        assert payload["schema"] == "degreebox.sweep/1"
        assert payload["cdz_oracle_disagreements"] == 0

    def test_crossval_matrix_json(self, capsys):
        assert main(["--json", "crossval", "3", "--matrix"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "degreebox.matrix/1"
        assert payload["instance_count"] == 56
        assert "bollobas->cdz" in payload["cells"]

    def test_realize_json(self, capsys):
        assert main(["--json", "realize", "2,2,2/2,2,2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["edges"] == [[1, 2], [1, 3], [2, 3]]


def test_identity_suite_clean_run():
    assert run_identity_suite(2000, seed=123) == []


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "degreebox.cli", "check", "2,2,2/2,2,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "CDZ" in proc.stdout
