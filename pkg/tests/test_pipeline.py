import json
from datetime import date
from pathlib import Path

import pytest

from socialminer.arff import parse_arff
from socialminer.cli import main
from socialminer.errors import DomainError, StorageError
from socialminer.pipeline import RunConfig, run_pipeline
from socialminer.synth import make_corpus_records, write_jsonl

REF = date(2015, 6, 1)


def write_corpus(path: Path) -> None:
    write_jsonl(path, make_corpus_records(docs_per_class=3))


def record(i, **overrides):
    base = {
        "id": f"u{i}",
        "birthday": "1990-01-15",
        "about_me": "truthful genuine integrity fair candid upfront",
        "activities": "reading, hiking",
        "gender": "female" if i % 2 else "male",
        "interests": "chess",
        "wall_count": 12 * i,
        "music_count": i,
    }
    base.update(overrides)
    return base


def config_for(tmp_path: Path, out_name="out", **overrides) -> RunConfig:
    fields = dict(
        input_path=tmp_path / "profiles.jsonl",
        corpus_path=tmp_path / "corpus.jsonl",
        reference_date=REF,
        output_dir=tmp_path / out_name,
    )
    fields.update(overrides)
    return RunConfig(**fields)


def tree_bytes(root: Path) -> dict[str, bytes]:
    return {
        p.relative_to(root).as_posix(): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


class TestRunPipeline:
    def test_empty_input(self, tmp_path):
        (tmp_path / "profiles.jsonl").write_text("", encoding="utf-8")
        write_corpus(tmp_path / "corpus.jsonl")
        summary = run_pipeline(config_for(tmp_path))
        counts = summary.to_record()["counts"]
        assert all(v == 0 for v in counts.values())
        out = tmp_path / "out"
        ds = parse_arff((out / "dataset.arff").read_text(encoding="utf-8"))
        assert len(ds.attributes) == 9 and ds.rows == []
        table = out / "reports" / "run" / "tables" / "about_me_age_upto19.csv"
        assert all(line.endswith(",0,0.00") for line in table.read_text().splitlines()[1:])

    def test_mixed_fixture_counts(self, tmp_path):
        records = [record(i) for i in range(8)]
        records.append(record(8, about_me=None))
        records.append(record(9, music_count=-2))
        write_jsonl(tmp_path / "profiles.jsonl", records)
        write_corpus(tmp_path / "corpus.jsonl")
        summary = run_pipeline(config_for(tmp_path))
        assert summary.ingested == 10
        assert summary.accepted == 8
        assert summary.rejected == 2
        assert summary.accepted == summary.classified + summary.unclassifiable
        rejections = json.loads((tmp_path / "out" / "rejections.json").read_text())
        assert {r["reason"] for r in rejections["rejected"]} == {
            "MISSING_TEXT",
            "NEGATIVE_NUMERIC",
        }

    def test_malformed_lines_counted_not_dropped(self, tmp_path):
        lines = [json.dumps(record(0)), "{broken", json.dumps(record(1))]
        (tmp_path / "profiles.jsonl").write_text("\n".join(lines), encoding="utf-8")
        write_corpus(tmp_path / "corpus.jsonl")
        summary = run_pipeline(config_for(tmp_path))
        assert summary.ingested == 2 and summary.malformed == 1
        rejections = json.loads((tmp_path / "out" / "rejections.json").read_text())
        assert rejections["malformed_lines"][0]["line_no"] == 2

    def test_unclassifiable_text_flows_to_arff(self, tmp_path):
        records = [record(0), record(1, about_me="i am the and of to")]
        write_jsonl(tmp_path / "profiles.jsonl", records)
        write_corpus(tmp_path / "corpus.jsonl")
        summary = run_pipeline(config_for(tmp_path))
        assert summary.unclassifiable == 1
        arff_text = (tmp_path / "out" / "dataset.arff").read_text(encoding="utf-8")
        assert any("Unclassifiable" in line for line in arff_text.splitlines()[11:])

    def test_rerun_is_byte_identical(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(i) for i in range(6)])
        write_corpus(tmp_path / "corpus.jsonl")
        run_pipeline(config_for(tmp_path, "out1"))
        run_pipeline(config_for(tmp_path, "out2"))
        assert tree_bytes(tmp_path / "out1") == tree_bytes(tmp_path / "out2")

    def test_missing_corpus_writes_failure_marker(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(0)])
        with pytest.raises(StorageError):
            run_pipeline(config_for(tmp_path))
        assert (tmp_path / "out" / "FAILED").exists()

    def test_future_birthday_fails_binning_stage(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(0, birthday="2030-01-01")])
        write_corpus(tmp_path / "corpus.jsonl")
        with pytest.raises(DomainError):
            run_pipeline(config_for(tmp_path))
        out = tmp_path / "out"
        assert (out / "FAILED").exists()
        # partial outputs from earlier stages are retained
        assert (out / "accepted.jsonl").exists()
        assert (out / "classified.jsonl").exists()

    def test_marker_cleared_on_successful_rerun(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(0)])
        with pytest.raises(StorageError):
            run_pipeline(config_for(tmp_path))
        write_corpus(tmp_path / "corpus.jsonl")
        run_pipeline(config_for(tmp_path))
        assert not (tmp_path / "out" / "FAILED").exists()

    def test_summary_artifacts_exist(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(i) for i in range(4)])
        write_corpus(tmp_path / "corpus.jsonl")
        summary = run_pipeline(config_for(tmp_path))
        out = tmp_path / "out"
        for artifact in summary.artifacts:
            assert (out / artifact).is_file(), artifact
        saved = json.loads((out / "summary.json").read_text())
        assert saved == summary.to_record()


class TestCli:
    def run_inputs(self, tmp_path):
        write_jsonl(tmp_path / "profiles.jsonl", [record(i) for i in range(5)])
        write_corpus(tmp_path / "corpus.jsonl")

    def test_run_command_layout(self, tmp_path, capsys):
        self.run_inputs(tmp_path)
        code = main(
            [
                "run",
                "--input", str(tmp_path / "profiles.jsonl"),
                "--corpus", str(tmp_path / "corpus.jsonl"),
                "--ref-date", "2015-06-01",
                "--out", str(tmp_path / "full"),
                "--run-id", "demo",
            ]
        )
        assert code == 0
        out = tmp_path / "full"
        for name in ("accepted.jsonl", "rejections.json", "classified.jsonl", "binned.jsonl", "dataset.arff", "summary.json"):
            assert (out / name).is_file()
        assert (out / "reports" / "demo" / "tables").is_dir()
        assert (out / "reports" / "demo" / "charts").is_dir()
        assert (out / "reports" / "demo" / "summary.json").is_file()
        assert "accepted: 5" in capsys.readouterr().out

    def test_stage_subcommands_reproduce_full_run(self, tmp_path):
        self.run_inputs(tmp_path)
        full = tmp_path / "full"
        staged = tmp_path / "staged"
        args_common = ["--corpus", str(tmp_path / "corpus.jsonl")]
        assert main(
            ["run", "--input", str(tmp_path / "profiles.jsonl"), *args_common,
             "--ref-date", "2015-06-01", "--out", str(full)]
        ) == 0
        assert main(["ingest", "--input", str(tmp_path / "profiles.jsonl"), "--out", str(staged)]) == 0
        assert main(["classify", "--input", str(staged / "accepted.jsonl"), *args_common, "--out", str(staged)]) == 0
        assert main(["bin", "--input", str(staged / "classified.jsonl"), "--ref-date", "2015-06-01", "--out", str(staged)]) == 0
        assert main(["arff", "--input", str(staged / "binned.jsonl"), "--out", str(staged)]) == 0
        assert main(["report", "--input", str(staged / "binned.jsonl"), "--out", str(staged)]) == 0
        staged_files = tree_bytes(staged)
        full_files = tree_bytes(full)
        assert set(staged_files) == set(full_files) - {"summary.json"}
        for name, content in staged_files.items():
            assert content == full_files[name], name

    def test_error_exit_code(self, tmp_path, capsys):
        code = main(
            ["arff", "--input", str(tmp_path / "nope.jsonl"), "--out", str(tmp_path)]
        )
        assert code == 1
        assert "error:" in capsys.readouterr().err

    def test_bad_date_rejected_by_parser(self, tmp_path):
        with pytest.raises(SystemExit):
            main(
                ["bin", "--input", "x", "--ref-date", "June 1st", "--out", str(tmp_path)]
            )

    def test_stopword_override_makes_text_unclassifiable(self, tmp_path):
        self.run_inputs(tmp_path)
        stops = tmp_path / "stops.txt"
        stops.write_text(
            "# silence the fixture's vocabulary\n"
            "truthful\ngenuine\nintegrity\nfair\ncandid\nupfront\n",
            encoding="utf-8",
        )
        out = tmp_path / "stopped"
        assert main(
            ["run", "--input", str(tmp_path / "profiles.jsonl"),
             "--corpus", str(tmp_path / "corpus.jsonl"),
             "--stopwords", str(stops),
             "--ref-date", "2015-06-01", "--out", str(out)]
        ) == 0
        summary = json.loads((out / "summary.json").read_text())
        assert summary["counts"]["unclassifiable"] == 5

    def test_gap_policy_flag_changes_bins(self, tmp_path):
        self.run_inputs(tmp_path)
        write_jsonl(tmp_path / "profiles.jsonl", [record(0, music_count=5)])
        for policy, expected in (("five_is_low", "Low"), ("five_is_medium", "Medium")):
            out = tmp_path / policy
            assert main(
                ["run", "--input", str(tmp_path / "profiles.jsonl"),
                 "--corpus", str(tmp_path / "corpus.jsonl"),
                 "--ref-date", "2015-06-01", "--out", str(out),
                 "--gap-policy", policy]
            ) == 0
            binned = json.loads((out / "binned.jsonl").read_text().splitlines()[0])
            assert binned["music_share_class"] == expected
