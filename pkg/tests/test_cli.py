"""End-to-end checks of the forge command line."""

import json
from pathlib import Path

import pytest

from gecforge.cli import build_parser, cmd_serve, main
from gecforge.pipeline import DETECTION_INSTRUCTION, default_gold_path, import_jsonl

SURVEY_PATH = default_gold_path().parent / "manual_survey_counts.tsv"


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    """A small gold file, a config, and one generated corpus directory."""
    root = tmp_path_factory.mktemp("cli")
    gold = root / "gold.txt"
    lines = default_gold_path().read_text(encoding="utf-8").splitlines()[:20]
    gold.write_text("\n".join(lines) + "\n", encoding="utf-8")
    cfg = root / "run.toml"
    cfg.write_text(
        'master_seed = 7\ngold_path = "gold.txt"\n\n'
        "[quotas]\nspelling_non_dictionary = 5\npunctuation = 5\n",
        encoding="utf-8",
    )
    out = root / "out"
    assert main(["generate", "--config", str(cfg), "--out", str(out)]) == 0
    return root


def test_generate_outputs(workspace, capsys):
    corpus = workspace / "out" / "corpus.jsonl"
    report = json.loads((workspace / "out" / "report.json").read_text())
    records = import_jsonl(corpus)
    # 5 + 5 injected plus all 20 gold sentences as correct records
    assert len(records) == 30
    assert report["total_records"] == 30
    assert report["per_class"]["punctuation"]["achieved"] == 5


def test_generate_deterministic(workspace):
    out2 = workspace / "out2"
    main(["generate", "--config", str(workspace / "run.toml"), "--out", str(out2)])
    assert (out2 / "corpus.jsonl").read_bytes() == (
        workspace / "out" / "corpus.jsonl"
    ).read_bytes()


def test_generate_reports_shortfall(workspace, tmp_path, capsys):
    cfg = tmp_path / "big.toml"
    cfg.write_text(
        f'master_seed = 1\ngold_path = "{workspace / "gold.txt"}"\n'
        "include_correct = false\n\n[quotas]\ngurucandali = 500\n",
        encoding="utf-8",
    )
    assert main(["generate", "--config", str(cfg), "--out", str(tmp_path / "o")]) == 0
    err = capsys.readouterr().err
    assert "warning: gurucandali: achieved" in err


def test_stats_on_corpus(workspace, capsys):
    assert main(["stats", "--in", str(workspace / "out" / "corpus.jsonl")]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["n_correct"] == 20
    assert body["total_errors"] == 10
    assert body["finer"]["punctuation"] == {"count": 5, "pct": 50.0}


def test_stats_on_survey_table(capsys):
    assert main(["stats", "--in", str(SURVEY_PATH)]) == 0
    body = json.loads(capsys.readouterr().out)
    assert body["total_errors"] == 302
    assert body["finer"]["spelling_non_dictionary"]["pct"] == 41.39


def test_export_jsonl_is_canonical(workspace, tmp_path, capsys):
    src = workspace / "out" / "corpus.jsonl"
    dst = tmp_path / "again.jsonl"
    assert main(["export", "--in", str(src), "--format", "jsonl", "--out", str(dst)]) == 0
    assert dst.read_bytes() == src.read_bytes()


def test_export_alpaca_detect(workspace, tmp_path, capsys):
    dst = tmp_path / "detect.json"
    main(
        ["export", "--in", str(workspace / "out" / "corpus.jsonl"),
         "--format", "alpaca-detect", "--out", str(dst)]
    )
    triples = json.loads(dst.read_text(encoding="utf-8"))
    assert len(triples) == 30
    assert {t["instruction"] for t in triples} == {DETECTION_INSTRUCTION}
    assert sorted({t["output"] for t in triples}) == ["correct", "wrong"]


def test_export_alpaca_correct(workspace, tmp_path, capsys):
    dst = tmp_path / "correct.json"
    main(
        ["export", "--in", str(workspace / "out" / "corpus.jsonl"),
         "--format", "alpaca-correct", "--out", str(dst)]
    )
    triples = json.loads(dst.read_text(encoding="utf-8"))
    # correct records carry nothing to fix and are left out
    assert len(triples) == 10
    assert all(t["input"] != t["output"] for t in triples)


def _write_predictions(path: Path, records, flip=0):
    rows = []
    for i, r in enumerate(records):
        label = r.finer.value
        if i < flip:
            label = "semantic" if label != "semantic" else "tense"
        rows.append(f"{r.id}\t{label}")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def test_eval_perfect_predictions(workspace, tmp_path, capsys):
    corpus = workspace / "out" / "corpus.jsonl"
    pred = tmp_path / "echo.tsv"
    _write_predictions(pred, import_jsonl(corpus))
    rc = main(
        ["eval", "--gold", str(corpus), "--pred", str(pred), "--level", "finer"]
    )
    assert rc == 0
    body = json.loads(capsys.readouterr().out)
    assert body["level"] == "finer"
    assert body["macro_f1"] == 1.0
    assert set(body["per_class"]) == {"spelling_non_dictionary", "punctuation", "correct"}


def test_eval_aggregate_directory(workspace, tmp_path, capsys):
    corpus = workspace / "out" / "corpus.jsonl"
    records = import_jsonl(corpus)
    runs = tmp_path / "runs"
    runs.mkdir()
    for name, flip in (("run1.tsv", 0), ("run2.tsv", 4)):
        rows = []
        for i, r in enumerate(records):
            truth = "correct" if r.finer.value == "correct" else "wrong"
            if i < flip:
                truth = "wrong" if truth == "correct" else "correct"
            rows.append(f"{r.id}\t{truth}")
        (runs / name).write_text("\n".join(rows) + "\n", encoding="utf-8")
    rc = main(
        ["eval", "--gold", str(corpus), "--aggregate", str(runs), "--level", "binary"]
    )
    assert rc == 0
    body = json.loads(capsys.readouterr().out)
    assert body["n_runs"] == 2
    assert [r["run_tag"] for r in body["runs"]] == ["run1", "run2"]
    assert body["runs"][0]["macro_f1"] == 1.0
    assert 0.0 < body["std"] < 0.5


def test_eval_rejects_bad_label(workspace, tmp_path, capsys):
    corpus = workspace / "out" / "corpus.jsonl"
    records = import_jsonl(corpus)
    pred = tmp_path / "bad.tsv"
    pred.write_text(f"{records[0].id}\tnoise\n", encoding="utf-8")
    rc = main(["eval", "--gold", str(corpus), "--pred", str(pred), "--level", "finer"])
    assert rc == 2
    assert "error:" in capsys.readouterr().err


def test_eval_empty_aggregate_dir(workspace, tmp_path, capsys):
    empty = tmp_path / "none"
    empty.mkdir()
    rc = main(
        ["eval", "--gold", str(workspace / "out" / "corpus.jsonl"),
         "--aggregate", str(empty), "--level", "finer"]
    )
    assert rc == 2


def test_serve_parser_wiring():
    args = build_parser().parse_args(["serve", "--corpus", "c.jsonl", "--data", "d"])
    assert args.func is cmd_serve
    assert (args.quorum, args.host, args.port) == (3, "127.0.0.1", 8000)
