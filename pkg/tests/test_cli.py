import json

from argshift.cli import main
from argshift.reports import canonical_json, report_digest, strip_volatile


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_regseq_sl2_at_e(capsys):
    code, payload = run_cli(capsys, "regseq", "--type", "sl", "--size", "2", "--xi", "e")
    assert code == 0
    assert payload["report"]["ideal_dimension"] == 1
    assert payload["report"]["verdict"] is True
    assert payload["xi"] == ["0/1", "0/1", "1/1"]


def test_regseq_zero_xi_is_degenerate(capsys):
    code, payload = run_cli(capsys, "regseq", "--type", "sl", "--size", "3", "--xi", "zero")
    assert code == 1
    assert payload["report"]["status"] == "degenerate"
    assert payload["report"]["verdict"] is False
    assert payload["report"]["zero_generators"]


def test_bicone_sl2(capsys):
    code, payload = run_cli(capsys, "bicone", "--type", "sl", "--size", "2")
    assert code == 0
    assert payload["report"]["ideal_dimension"] == 3


def test_bicone_fiber(capsys):
    code, payload = run_cli(capsys, "bicone", "--type", "sl", "--size", "3", "--fiber")
    assert code == 0
    assert payload["report"]["ideal_dimension"] == 3
    assert payload["report"]["matches_shift_family"] is True


def test_bicone_timeout_is_inconclusive(capsys):
    code, payload = run_cli(
        capsys, "bicone", "--type", "sl", "--size", "3", "--timeout-secs", "0.01"
    )
    assert code == 2
    assert payload["report"]["status"] == "inconclusive"


def test_commute(capsys):
    code, payload = run_cli(
        capsys, "commute", "--type", "gl", "--size", "3", "--xi", "ef", "--seed", "7"
    )
    assert code == 0
    assert payload["report"]["failure_count"] == 0
    assert payload["report"]["pair_count"] == 15


def test_mf_shortcuts(capsys):
    for xi in ("e", "ef", "h", "zero", "random-regular"):
        code, payload = run_cli(capsys, "mf", "--type", "sl", "--size", "2", "--xi", xi)
        assert code == 0
        assert len(payload["family"]["entries"]) == 2


def test_explicit_xi_vector(capsys):
    code, payload = run_cli(
        capsys, "regseq", "--type", "sl", "--size", "2", "--xi", "1/2,0,-3"
    )
    assert code == 0
    assert payload["xi_spec"]["kind"] == "explicit"


def test_algebra_report(capsys):
    code, payload = run_cli(capsys, "algebra", "--type", "sp", "--size", "4")
    assert code == 0
    assert payload["index"] == 2
    assert payload["b"] == 6
    assert payload["algebra"]["dim"] == 10


def test_invariants_report(capsys):
    code, payload = run_cli(capsys, "invariants", "--type", "sl", "--size", "3")
    assert code == 0
    assert payload["degree_sum"] == 5 == payload["b"]


def test_star_and_conjecture(capsys):
    code, payload = run_cli(capsys, "star", "--type", "gl", "--size", "3", "--partition", "2,1")
    assert code == 0
    assert payload["report"]["verdict"] is True
    code, payload = run_cli(
        capsys, "conjecture", "--type", "gl", "--size", "3", "--partition", "3", "--seed", "42"
    )
    assert code == 0
    assert payload["rows"][0]["report"]["verdict"] is True


def test_conjecture_all_partitions(capsys, gb_cache):
    code, payload = run_cli(
        capsys,
        "conjecture", "--type", "gl", "--size", "3", "--all-partitions",
        "--seed", "42", "--cache-dir", gb_cache,
    )
    assert code == 0
    assert [row["partition"] for row in payload["rows"]] == [[3], [2, 1], [1, 1, 1]]
    assert all(row["report"]["verdict"] for row in payload["rows"])


def test_conjecture_parallel_jobs_match_serial(capsys, gb_cache):
    base = ["conjecture", "--type", "gl", "--size", "3", "--all-partitions",
            "--seed", "42", "--cache-dir", gb_cache]
    _, serial = run_cli(capsys, *base, "--jobs", "1")
    _, parallel = run_cli(capsys, *base, "--jobs", "3")
    assert report_digest(serial) == report_digest(parallel)


def test_usage_errors(capsys):
    assert main(["regseq", "--type", "xx", "--size", "2"]) == 3
    capsys.readouterr()
    assert main(["conjecture", "--type", "gl", "--size", "3"]) == 3
    capsys.readouterr()
    assert main(["star", "--type", "gl", "--size", "3", "--partition", "5"]) == 3
    capsys.readouterr()
    assert main(["regseq", "--type", "sl", "--size", "2", "--xi", "1,2"]) == 3
    capsys.readouterr()
    assert main(["nonsense"]) == 3
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_output_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run_cli(
        capsys, "regseq", "--type", "sl", "--size", "2", "--xi", "e", "--output", str(out)
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["report"]["verdict"] is True


def test_seeded_runs_have_identical_digests(capsys, gb_cache):
    args = [
        "regseq", "--type", "sl", "--size", "3", "--xi", "random-regular",
        "--seed", "42", "--cache-dir", gb_cache,
    ]
    _, first = run_cli(capsys, *args)
    _, second = run_cli(capsys, *args)
    assert report_digest(first) == report_digest(second)
    assert canonical_json(first) == canonical_json(second)
    # the volatile timing field differs between runs but never enters digests
    assert "gb_seconds" in first
    assert "gb_seconds" not in strip_volatile(first)


def test_cache_does_not_change_reports(capsys, tmp_path):
    args = ["regseq", "--type", "sl", "--size", "2", "--xi", "e"]
    _, plain = run_cli(capsys, *args)
    cached_args = args + ["--cache-dir", str(tmp_path)]
    _, cold = run_cli(capsys, *cached_args)
    _, warm = run_cli(capsys, *cached_args)
    assert report_digest(plain) == report_digest(cold) == report_digest(warm)


def test_cache_dir_env_override(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("ARGSHIFT_CACHE_DIR", str(tmp_path))
    code, _ = run_cli(capsys, "regseq", "--type", "sl", "--size", "2", "--xi", "e")
    assert code == 0
    assert list(tmp_path.glob("gb-*.json"))


def test_different_seeds_differ(capsys, gb_cache):
    base = ["regseq", "--type", "sl", "--size", "3", "--xi", "random-regular", "--cache-dir", gb_cache]
    _, a = run_cli(capsys, *base, "--seed", "1")
    _, b = run_cli(capsys, *base, "--seed", "2")
    assert a["xi"] != b["xi"]
    assert report_digest(a) != report_digest(b)
