import json

import pytest

from linky.cli import main

from fixtures import ident, write_dataset


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture()
def generated(tmp_path, capsys):
    out = tmp_path / "ds"
    code, _, _ = run(
        capsys, "generate", "--seed", "1", "--users", "30", "--mutation-rate", "0.0", "--out", str(out)
    )
    assert code == 0
    return out


@pytest.fixture()
def workspace(tmp_path, generated, capsys):
    ws = tmp_path / "ws"
    code, _, _ = run(capsys, "ingest", "--manifest", str(generated / "manifest.json"), "--data-dir", str(ws))
    assert code == 0
    return ws


class TestIngest:
    def test_prints_counts_and_succeeds(self, tmp_path, capsys):
        manifest = write_dataset(
            tmp_path, [("tw", True)], identities=[ident("tw", "a", "alpha"), ident("tw", "b", "beta")]
        )
        code, out, _ = run(capsys, "ingest", "--manifest", str(manifest), "--data-dir", str(tmp_path / "ws"))
        assert code == 0
        assert "identities: 2" in out

    def test_missing_manifest_exit_2(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "ingest", "--manifest", str(tmp_path / "nope.json"), "--data-dir", str(tmp_path / "ws")
        )
        assert code == 2
        assert "error" in err

    def test_counts_equal_ndjson_line_counts(self, generated, tmp_path, capsys):
        code, out, _ = run(
            capsys, "ingest", "--manifest", str(generated / "manifest.json"), "--data-dir", str(tmp_path / "w2")
        )
        assert code == 0
        for kind in ("identities", "edges", "posts", "ground_truth"):
            lines = (generated / f"{kind}.ndjson").read_text().count("\n")
            assert f"{kind}: {lines}" in out

    def test_malformed_data_exit_2_names_line(self, tmp_path, capsys):
        manifest = write_dataset(tmp_path, [("tw", True)])
        (tmp_path / "identities.ndjson").write_text("garbage\n", encoding="utf-8")
        code, _, err = run(capsys, "ingest", "--manifest", str(manifest), "--data-dir", str(tmp_path / "ws"))
        assert code == 2
        assert "line 1" in err


class TestGenerate:
    def test_same_seed_identical_files(self, tmp_path, capsys):
        a, b = tmp_path / "a", tmp_path / "b"
        for out in (a, b):
            code, _, _ = run(capsys, "generate", "--seed", "9", "--users", "25", "--out", str(out))
            assert code == 0
        for name in ("manifest.json", "identities.ndjson", "edges.ndjson", "posts.ndjson",
                     "ground_truth.ndjson", "declared_bios.ndjson"):
            assert (a / name).read_bytes() == (b / name).read_bytes(), name

    def test_bad_fraction_exit_2(self, tmp_path, capsys):
        code, _, err = run(
            capsys, "generate", "--seed", "1", "--users", "5", "--mutation-rate", "1.5",
            "--out", str(tmp_path / "x"),
        )
        assert code == 2


class TestBaseline:
    def test_zero_mutation_prints_perfect_precision(self, workspace, capsys):
        code, out, _ = run(
            capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace)
        )
        assert code == 0
        assert "prec@1: 1.000" in out
        assert "stored: baseline-3gram" in out

    def test_default_parameters_recorded(self, workspace, capsys):
        run(capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace))
        header = json.loads(
            (workspace / "solutions" / "baseline-3gram.ndjson").read_text().splitlines()[0]
        )
        assert header["parameters"] == {"k": 3, "n": 3}

    def test_rerun_with_replace_is_idempotent(self, workspace, capsys):
        run(capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace))
        path = workspace / "solutions" / "baseline-3gram.ndjson"
        first = path.read_bytes()
        code, _, _ = run(
            capsys, "baseline", "--source", "twitter", "--target", "foursquare",
            "--data-dir", str(workspace), "--replace",
        )
        assert code == 0
        assert path.read_bytes() == first

    def test_rerun_without_replace_conflicts(self, workspace, capsys):
        run(capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace))
        code, _, err = run(
            capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace)
        )
        assert code == 2

    def test_unknown_platform_exit_2(self, workspace, capsys):
        code, _, _ = run(
            capsys, "baseline", "--source", "nope", "--target", "foursquare", "--data-dir", str(workspace)
        )
        assert code == 2


class TestEvaluateDiffExport:
    @pytest.fixture(autouse=True)
    def _baseline(self, workspace, capsys):
        run(capsys, "baseline", "--source", "twitter", "--target", "foursquare", "--data-dir", str(workspace))

    def test_evaluate_json_matches_report_file(self, workspace, tmp_path, capsys):
        report_path = tmp_path / "report.json"
        code, out, _ = run(
            capsys, "evaluate", "--method", "baseline-3gram", "--format", "json",
            "--out", str(report_path), "--data-dir", str(workspace),
        )
        assert code == 0
        assert out == report_path.read_text()
        assert json.loads(out)["prec_at_1"] == 1.0

    def test_evaluate_unknown_method_exit_2(self, workspace, capsys):
        code, _, _ = run(capsys, "evaluate", "--method", "nope", "--data-dir", str(workspace))
        assert code == 2

    def test_diff_same_method_empty_output(self, workspace, capsys):
        code, out, _ = run(
            capsys, "diff", "baseline-3gram", "baseline-3gram", "--data-dir", str(workspace)
        )
        assert code == 0
        assert out == ""

    def test_diff_prints_usernames_one_per_line(self, workspace, capsys):
        sources = json.loads((workspace / "identities.ndjson").read_text().splitlines()[0])
        always_wrong = (
            '{"method_id":"loser","source_platform":"twitter","target_platform":"foursquare"}\n'
        )
        path = workspace / "loser.ndjson"
        path.write_text(always_wrong, encoding="utf-8")
        run(capsys, "import", str(path), "--data-dir", str(workspace))
        code, out, _ = run(
            capsys, "diff", "baseline-3gram", "loser", "--data-dir", str(workspace)
        )
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln]
        assert len(lines) == 30  # every gt source correct in baseline, absent in loser

    def test_export_then_reimport(self, workspace, tmp_path, capsys):
        out_path = tmp_path / "exported.ndjson"
        code, _, _ = run(
            capsys, "export", "--method", "baseline-3gram", "--out", str(out_path),
            "--data-dir", str(workspace),
        )
        assert code == 0
        stored = (workspace / "solutions" / "baseline-3gram.ndjson").read_bytes()
        assert out_path.read_bytes() == stored

    def test_extract_gt_outputs_links(self, workspace, capsys):
        code, out, _ = run(
            capsys, "extract-gt", "--source", "twitter", "--target", "foursquare",
            "--pattern", r"foursquare:\s*(\S+)", "--data-dir", str(workspace),
        )
        assert code == 0
        lines = [json.loads(ln) for ln in out.splitlines() if ln]
        assert all(l["provenance"] == "declared-bio" for l in lines)
        assert len(lines) > 0


class TestCliPlumbing:
    @pytest.mark.parametrize(
        "command",
        ["ingest", "generate", "baseline", "import", "export", "evaluate", "diff", "extract-gt", "serve"],
    )
    def test_help_exits_zero(self, command, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([command, "--help"])
        assert excinfo.value.code == 0
        assert "--" in capsys.readouterr().out

    def test_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main(["baseline", "--bogus-flag"])
        assert excinfo.value.code == 1

    def test_missing_command_exit_1(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            main([])
        assert excinfo.value.code == 1

    def test_env_data_dir_fallback(self, workspace, capsys, monkeypatch):
        monkeypatch.setenv("LINKY_DATA_DIR", str(workspace))
        code, out, _ = run(capsys, "baseline", "--source", "twitter", "--target", "foursquare")
        assert code == 0
        assert "prec@1" in out
