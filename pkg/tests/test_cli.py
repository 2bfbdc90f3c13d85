"""Command-line surface and its exit-code contract."""

from __future__ import annotations

import json
import subprocess
import sys

from sunurd import cycle_factorization_odd, dumps_document, urd6_h3
from sunurd.cli import main


class TestSpectrum:
    def test_text_output(self, capsys):
        assert main(["spectrum", "--v", "12", "--h", "3"]) == 0
        assert capsys.readouterr().out.strip() == "(3,4) (7,2) (11,0)"

    def test_empty_with_reason_still_exit_0(self, capsys):
        assert main(["spectrum", "--v", "8", "--h", "3"]) == 0
        out = capsys.readouterr().out
        assert "no admissible pairs" in out

    def test_json_output(self, capsys):
        assert main(["spectrum", "--v", "20", "--h", "5", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pairs"] == [[3, 8], [7, 6], [11, 4], [15, 2], [19, 0]]

    def test_json_empty_carries_reason(self, capsys):
        assert main(["spectrum", "--v", "10", "--h", "3", "--format", "json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pairs"] == [] and "reason" in payload

    def test_bad_flags_exit_2(self, capsys):
        assert main(["spectrum", "--v", "twelve", "--h", "3"]) == 2
        assert main(["spectrum", "--v", "12"]) == 2
        assert main(["spectrum", "--v", "12", "--h", "2"]) == 2


class TestBuild:
    def test_build_writes_verified_document(self, tmp_path, capsys):
        out = tmp_path / "k6.json"
        code = main(["build", "--v", "6", "--h", "3", "--r", "1", "--s", "2", "--out", str(out)])
        assert code == 0
        doc = json.loads(out.read_text(encoding="utf-8"))
        types = [c["type"] for c in doc["classes"]]
        assert types.count("one_factor") == 1 and types.count("sun_factor") == 2

    def test_build_to_stdout(self, capsys):
        assert main(["build", "--v", "6", "--h", "3", "--r", "5", "--s", "0"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert len(doc["classes"]) == 5

    def test_text_format(self, capsys):
        assert main(["build", "--v", "6", "--h", "3", "--r", "1", "--s", "2", "--format", "text"]) == 0
        out = capsys.readouterr().out
        assert "(0,1,2; 5,4,3)" in out

    def test_inadmissible_exit_3_with_reason(self, capsys):
        code = main(["build", "--v", "12", "--h", "3", "--r", "4", "--s", "4"])
        assert code == 3
        assert "edge-count: r+2s must equal v-1" in capsys.readouterr().err

    def test_ingredient_unavailable_exit_4_names_factorization(self, capsys):
        code = main(["build", "--v", "24", "--h", "3", "--r", "3", "--s", "10"])
        assert code == 4
        err = capsys.readouterr().err
        assert "ingredient-unavailable" in err
        assert "K_12" in err

    def test_unwritable_out_exit_5(self, tmp_path, capsys):
        code = main(
            ["build", "--v", "6", "--h", "3", "--r", "1", "--s", "2",
             "--out", str(tmp_path / "no" / "such" / "dir" / "x.json")]
        )
        assert code == 5

    def test_seed_dir_flag(self, tmp_path, capsys):
        (tmp_path / "k9.json").write_text(
            dumps_document(cycle_factorization_odd(9, 3)), encoding="utf-8"
        )
        code = main(
            ["build", "--v", "18", "--h", "3", "--r", "1", "--s", "8",
             "--seed-dir", str(tmp_path)]
        )
        assert code == 0

    def test_seed_dir_env_fallback(self, tmp_path, capsys, monkeypatch):
        (tmp_path / "k9.json").write_text(
            dumps_document(cycle_factorization_odd(9, 3)), encoding="utf-8"
        )
        monkeypatch.setenv("SUNURD_SEED_DIR", str(tmp_path))
        assert main(["build", "--v", "18", "--h", "3", "--r", "5", "--s", "6"]) == 0

    def test_bad_seed_record_exit_2(self, tmp_path, capsys):
        (tmp_path / "junk.json").write_text("{oops", encoding="utf-8")
        code = main(
            ["build", "--v", "18", "--h", "3", "--r", "1", "--s", "8",
             "--seed-dir", str(tmp_path)]
        )
        assert code == 2


class TestVerify:
    def test_round_trip_passes(self, tmp_path, capsys):
        path = tmp_path / "d.json"
        main(["build", "--v", "12", "--h", "3", "--r", "7", "--s", "2", "--out", str(path)])
        capsys.readouterr()
        assert main(["verify", str(path)]) == 0
        assert capsys.readouterr().out.strip() == "(r,s)=(7,2)"

    def test_perturbed_design_exit_1(self, tmp_path, capsys):
        doc = json.loads(dumps_document(urd6_h3((1, 2)), h=3))
        # reattach one pendant: breaks both the class partition and the edges
        doc["classes"][0]["suns"][0]["pendants"][0] = 4
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(doc), encoding="utf-8")
        assert main(["verify", str(path)]) == 1
        out = capsys.readouterr().out
        assert "missing-edge" in out or "duplicated-edge" in out

    def test_parse_error_exit_2(self, tmp_path, capsys):
        path = tmp_path / "junk.json"
        path.write_text("not json at all", encoding="utf-8")
        assert main(["verify", str(path)]) == 2

    def test_missing_file_exit_5(self, tmp_path, capsys):
        assert main(["verify", str(tmp_path / "absent.json")]) == 5

    def test_cycle_factorization_document(self, tmp_path, capsys):
        path = tmp_path / "cf.json"
        path.write_text(dumps_document(cycle_factorization_odd(9, 3)), encoding="utf-8")
        assert main(["verify", str(path)]) == 0
        assert "cycle-factorization" in capsys.readouterr().out


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sunurd", "spectrum", "--v", "12", "--h", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(3,4) (7,2) (11,0)"
