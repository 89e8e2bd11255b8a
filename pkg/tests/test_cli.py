"""End-to-end CLI tests driven through subprocess.

Exit codes under test: 0 success, 1 I/O, 2 validation, 3 enumeration
guard, 5 attack guard, 6 self-check failure.  Exit 4 (undecodable
receiver) cannot be produced by schemes the CLI builds itself, since
every non-trivial receiver contributes a generator row; that path is
covered at library level in test_icsi.py.
"""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
INSTANCES = ROOT / "instances"


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.setdefault("PYTHONPATH", str(ROOT / "src"))
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "icsisec", *args],
        capture_output=True,
        text=True,
        cwd=str(ROOT),
        env=env,
    )


def write_doc(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


class TestAnalyze:
    @pytest.mark.parametrize("name", ["hamming7", "hamming7_zero", "repetition3", "rs7_3"])
    def test_matches_golden(self, name):
        result = run_cli("analyze", str(INSTANCES / f"{name}.json"))
        assert result.returncode == 0, result.stderr
        golden = (INSTANCES / "golden" / f"{name}.report.json").read_text(encoding="utf-8")
        assert result.stdout == golden

    def test_thread_count_does_not_change_bytes(self):
        path = str(INSTANCES / "hamming7.json")
        one = run_cli("analyze", path, env_extra={"ICSI_SEC_THREADS": "1"})
        eight = run_cli("analyze", path, env_extra={"ICSI_SEC_THREADS": "8"})
        assert one.returncode == eight.returncode == 0
        assert one.stdout == eight.stdout

    def test_notices_stay_on_stderr(self, tmp_path):
        path = write_doc(
            tmp_path,
            "multi.json",
            {
                "field": {"p": 2},
                "n": 3,
                "receivers": [{"side_info": [3], "demand": [1, 2]}],
            },
        )
        result = run_cli("analyze", path)
        assert result.returncode == 0
        assert "split" in result.stderr
        json.loads(result.stdout)

    def test_guard_without_sample_is_exit_3(self, tmp_path):
        path = write_doc(
            tmp_path,
            "wide.json",
            {
                "field": {"p": 2},
                "n": 15,
                "receivers": [{"side_info": list(range(2, 16)), "demand": 1}],
            },
        )
        result = run_cli("analyze", path)
        assert result.returncode == 3
        assert result.stdout == ""
        sampled = run_cli("analyze", path, "--sample", "--seed", "7")
        assert sampled.returncode == 0, sampled.stderr
        report = json.loads(sampled.stdout)
        assert report["mode"] == "sampled"
        assert report["seed"] == 7

    def test_missing_file_is_exit_1(self):
        result = run_cli("analyze", str(INSTANCES / "absent.json"))
        assert result.returncode == 1

    def test_malformed_instance_is_exit_2(self, tmp_path):
        path = write_doc(
            tmp_path,
            "bad.json",
            {"field": {"p": 2}, "n": 3, "receivers": [], "padding": 1},
        )
        assert run_cli("analyze", path).returncode == 2
        raw = tmp_path / "raw.json"
        raw.write_text("{oops", encoding="utf-8")
        assert run_cli("analyze", str(raw)).returncode == 2


class TestEncode:
    def test_zero_message_gives_zero_broadcast(self):
        result = run_cli(
            "encode", str(INSTANCES / "hamming7.json"), "--messages", "0,0,0,0,0,0,0"
        )
        assert result.returncode == 0
        assert result.stdout.split() == ["0", "0", "0", "0"]

    def test_unit_message(self):
        result = run_cli(
            "encode", str(INSTANCES / "hamming7.json"), "--messages", "0,0,0,0,1,0,0"
        )
        assert result.returncode == 0
        assert result.stdout.split() == ["0", "1", "1", "1"]

    def test_wrong_arity_is_exit_2(self):
        result = run_cli(
            "encode", str(INSTANCES / "hamming7.json"), "--messages", "0,0,0,0,0,0"
        )
        assert result.returncode == 2


class TestDecode:
    def test_receiver_five_recovers_demand(self):
        result = run_cli(
            "decode",
            str(INSTANCES / "hamming7.json"),
            "--receiver",
            "5",
            "--broadcast",
            "0,1,1,1",
            "--side",
            "1=0,2=0,6=0",
        )
        assert result.returncode == 0
        assert result.stdout.strip() == "1"

    def test_consistency_with_encode(self):
        message = "1,0,1,1,0,1,1"
        enc = run_cli("encode", str(INSTANCES / "hamming7.json"), "--messages", message)
        broadcast = ",".join(enc.stdout.split())
        x = [int(v) for v in message.split(",")]
        sides = {5: "1,2,6", 6: "1,3,4", 7: "2,3,6"}
        for receiver, side in sides.items():
            pairs = ",".join(f"{i}={x[i - 1]}" for i in map(int, side.split(",")))
            result = run_cli(
                "decode",
                str(INSTANCES / "hamming7.json"),
                "--receiver",
                str(receiver),
                "--broadcast",
                broadcast,
                "--side",
                pairs,
            )
            assert result.returncode == 0, result.stderr
            assert int(result.stdout.strip()) == x[receiver - 1]

    def test_missing_side_value_is_exit_2(self):
        result = run_cli(
            "decode",
            str(INSTANCES / "hamming7.json"),
            "--receiver",
            "5",
            "--broadcast",
            "0,1,1,1",
            "--side",
            "1=0,2=0",
        )
        assert result.returncode == 2

    def test_unknown_receiver_is_exit_2(self):
        result = run_cli(
            "decode",
            str(INSTANCES / "hamming7.json"),
            "--receiver",
            "9",
            "--broadcast",
            "0,1,1,1",
            "--side",
            "1=0,2=0,6=0",
        )
        assert result.returncode == 2


class TestAttack:
    def test_strong_adversary_recovers_rest(self):
        result = run_cli(
            "attack",
            str(INSTANCES / "hamming7.json"),
            "--known",
            "1=1,2=0,3=1,5=0",
            "--broadcast",
            "1,0,0,1",
        )
        assert result.returncode == 0
        lines = result.stdout.split()
        assert len(lines) == 3
        assert all("=" in line and "?" not in line for line in lines)

    def test_weak_adversary_reports_unknowns(self):
        result = run_cli(
            "attack",
            str(INSTANCES / "hamming7.json"),
            "--known",
            "1=0,2=0",
            "--broadcast",
            "0,0,0,0",
        )
        assert result.returncode == 0
        lines = result.stdout.split()
        assert "3=0" in lines
        assert sum(line.endswith("?") for line in lines) == 4

    def test_list_mode_counts_candidates(self):
        result = run_cli(
            "attack",
            str(INSTANCES / "hamming7.json"),
            "--known",
            "1=0,2=0",
            "--broadcast",
            "0,0,0,0",
            "--list",
        )
        assert result.returncode == 0
        lines = result.stdout.strip().split("\n")
        at = lines.index("count=2")
        assert len(lines) == at + 3
        assert lines[at + 1] == "0,0,0,0,0,0,0"
        rows = [tuple(int(v) for v in line.split(",")) for line in lines[at + 1 :]]
        assert all(row[0] == row[1] == 0 for row in rows)

    def test_list_mode_with_no_knowledge(self):
        result = run_cli(
            "attack",
            str(INSTANCES / "repetition3.json"),
            "--broadcast",
            "0",
            "--list",
        )
        assert result.returncode == 0
        lines = result.stdout.strip().split("\n")
        assert lines[:3] == ["1=?", "2=?", "3=?"]
        assert lines[3] == "count=4"
        assert len(lines) == 8

    def test_rank_deficient_list_is_exit_5(self, tmp_path):
        path = write_doc(
            tmp_path,
            "thin.json",
            {
                "field": {"p": 2},
                "n": 3,
                "receivers": [{"side_info": [2], "demand": 1}],
            },
        )
        result = run_cli(
            "attack", path, "--known", "1=0,2=0", "--broadcast", "0", "--list"
        )
        assert result.returncode == 5

    def test_inconsistent_observation_is_exit_2(self):
        result = run_cli(
            "attack",
            str(INSTANCES / "repetition3.json"),
            "--known",
            "1=0,2=0,3=1",
            "--broadcast",
            "0",
            "--list",
        )
        assert result.returncode == 2


class TestVerify:
    def test_single_suite(self):
        result = run_cli("verify", "--suite", "thm1")
        assert result.returncode == 0, result.stderr
        assert "thm1:" in result.stdout
        assert "pass" in result.stdout

    def test_corrupted_corpus_is_exit_6(self, tmp_path):
        generator = [
            [0, 0, 0, 0, 0, 1, 1],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 1, 0],
            [0, 0, 0, 1, 1, 1, 1],
        ]
        path = write_doc(
            tmp_path,
            "claims.json",
            {
                "codes": [
                    {
                        "name": "dented_hamming",
                        "field": {"p": 2},
                        "generator": generator,
                        "claims": {"d": 3, "d_dual": 4},
                    }
                ]
            },
        )
        result = run_cli("verify", "--suite", "thm1", "--corpus", path)
        assert result.returncode == 6
        assert "FAIL" in result.stdout
        assert "dented_hamming" in result.stderr

    def test_unknown_suite_is_exit_2(self):
        assert run_cli("verify", "--suite", "thm9").returncode == 2
