"""Sentence-classification scoring at the binary, broad and finer levels.

All arithmetic runs on exact fractions; values become floats only when a
report is serialized.  Macro-F1 averages over the classes present in the
gold or the predictions, so absent classes never dilute the mean.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .taxonomy import FinerClass, TaskLevel, labels_for_level, project


class EvalInputError(ValueError):
    """Base for fatal prediction-set problems; carries every offender."""

    def __init__(self, kind: str, items: list):
        self.items = items
        preview = ", ".join(str(i) for i in items[:5])
        more = "" if len(items) <= 5 else f" (+{len(items) - 5} more)"
        super().__init__(f"{kind}: {preview}{more}")


class UnknownId(EvalInputError):
    def __init__(self, ids: list[str]):
        super().__init__("unknown record ids", ids)


class InvalidLabel(EvalInputError):
    def __init__(self, pairs: list[tuple[str, str]]):
        super().__init__("invalid labels", pairs)


class MissingPrediction(EvalInputError):
    def __init__(self, ids: list[str]):
        super().__init__("missing predictions", ids)


class EmptyInput(ValueError):
    pass


@dataclass(frozen=True)
class PredictionSet:
    entries: Mapping[str, str]
    level: TaskLevel
    run_tag: str = ""


@dataclass(frozen=True)
class ClassMetrics:
    precision: Fraction
    recall: Fraction
    f1: Fraction
    support: int
    predicted: int


@dataclass(frozen=True)
class EvalReport:
    level: TaskLevel
    run_tag: str
    per_class: dict[str, ClassMetrics]
    macro_f1: Fraction
    confusion: dict[str, dict[str, int]]

    def to_dict(self) -> dict:
        return {
            "level": self.level.value,
            "run_tag": self.run_tag,
            "macro_f1": float(self.macro_f1),
            "per_class": {
                label: {
                    "p": float(m.precision),
                    "r": float(m.recall),
                    "f1": float(m.f1),
                    "support": m.support,
                }
                for label, m in self.per_class.items()
            },
            "confusion": self.confusion,
        }


@dataclass(frozen=True)
class RunAggregate:
    mean: float
    std: float
    n_runs: int

    def __post_init__(self) -> None:
        if self.n_runs < 1:
            raise ValueError("n_runs must be >= 1")
        if self.std < 0:
            raise ValueError("std must be >= 0")


def _gold_map(gold, level: TaskLevel) -> dict[str, str]:
    """Project gold labels for scoring; accepts records or an id→finer map."""
    out: dict[str, str] = {}
    if isinstance(gold, Mapping):
        items = gold.items()
    else:
        items = ((r.id, r.finer) for r in gold)
    for record_id, finer in items:
        if not isinstance(finer, FinerClass):
            finer = FinerClass.from_label(finer)
        out[record_id] = project(finer, level)
    return out


def score(gold, preds: PredictionSet) -> EvalReport:
    """Confusion counts, per-class P/R/F1 and macro-F1 for one run."""
    level = preds.level
    gold_labels = _gold_map(gold, level)
    valid = set(labels_for_level(level))

    unknown = sorted(set(preds.entries) - set(gold_labels))
    if unknown:
        raise UnknownId(unknown)
    invalid = sorted(
        (rid, label) for rid, label in preds.entries.items() if label not in valid
    )
    if invalid:
        raise InvalidLabel(invalid)
    missing = sorted(set(gold_labels) - set(preds.entries))
    if missing:
        raise MissingPrediction(missing)

    confusion: dict[str, dict[str, int]] = {}
    for rid, g in gold_labels.items():
        p = preds.entries[rid]
        row = confusion.setdefault(g, {})
        row[p] = row.get(p, 0) + 1

    support: dict[str, int] = {}
    predicted: dict[str, int] = {}
    tp: dict[str, int] = {}
    for g, row in confusion.items():
        for p, n in row.items():
            support[g] = support.get(g, 0) + n
            predicted[p] = predicted.get(p, 0) + n
            if g == p:
                tp[g] = tp.get(g, 0) + n

    scored = sorted(set(support) | set(predicted))
    per_class: dict[str, ClassMetrics] = {}
    total = Fraction(0)
    for label in scored:
        s = support.get(label, 0)
        q = predicted.get(label, 0)
        t = tp.get(label, 0)
        precision = Fraction(t, q) if q else Fraction(0)
        recall = Fraction(t, s) if s else Fraction(0)
        if precision + recall:
            f1 = 2 * precision * recall / (precision + recall)
        else:
            f1 = Fraction(0)
        per_class[label] = ClassMetrics(precision, recall, f1, s, q)
        total += f1
    macro = total / len(scored) if scored else Fraction(0)
    ordered_confusion = {
        g: {p: confusion[g][p] for p in sorted(confusion[g])} for g in sorted(confusion)
    }
    return EvalReport(level, preds.run_tag, per_class, macro, ordered_confusion)


def _exact_sqrt(value: Fraction) -> float:
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return float(Fraction(rn, rd))
    return math.sqrt(value)


def aggregate(reports: Sequence[EvalReport]) -> RunAggregate:
    """Mean and population standard deviation of macro-F1 across runs."""
    if not reports:
        raise EmptyInput("aggregate needs at least one report")
    levels = {r.level for r in reports}
    if len(levels) > 1:
        raise ValueError(f"reports mix levels: {sorted(l.value for l in levels)}")
    n = len(reports)
    values = [r.macro_f1 for r in reports]
    mean = sum(values, Fraction(0)) / n
    variance = sum((v - mean) ** 2 for v in values) / n
    return RunAggregate(mean=float(mean), std=_exact_sqrt(variance), n_runs=n)


def human_report(
    judgments: Mapping[str, Mapping[str, str]], gold
) -> dict:
    """Per-annotator scores at all three levels plus mean/max summaries.

    ``judgments`` maps annotator id → (record id → finer label).  Each
    annotator is scored on exactly the records they judged.
    """
    finer_gold = _gold_map(gold, TaskLevel.FINER)
    annotators: dict[str, dict[str, EvalReport]] = {}
    for annotator in sorted(judgments):
        entries = judgments[annotator]
        reports: dict[str, EvalReport] = {}
        for level in TaskLevel:
            projected = {
                rid: project(FinerClass.from_label(label), level)
                for rid, label in entries.items()
            }
            gold_sub = {
                rid: finer_gold[rid] for rid in entries if rid in finer_gold
            }
            missing = sorted(set(entries) - set(finer_gold))
            if missing:
                raise UnknownId(missing)
            reports[level.value] = score(
                {rid: FinerClass.from_label(g) for rid, g in gold_sub.items()},
                PredictionSet(projected, level, run_tag=annotator),
            )
        annotators[annotator] = reports
    summary: dict[str, dict[str, float]] = {}
    for level in TaskLevel:
        scores = [
            annotators[a][level.value].macro_f1 for a in annotators
        ]
        if scores:
            summary[level.value] = {
                "mean": float(sum(scores, Fraction(0)) / len(scores)),
                "max": float(max(scores)),
            }
        else:
            summary[level.value] = {"mean": 0.0, "max": 0.0}
    return {
        "annotators": {
            a: {lvl: rep.to_dict() for lvl, rep in reports.items()}
            for a, reports in annotators.items()
        },
        "summary": summary,
    }


def load_predictions(path: str | Path) -> dict[str, str]:
    """Read an ``id<TAB>label`` prediction file."""
    entries: dict[str, str] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"{path}:{lineno}: expected id<TAB>label")
        rid, label = fields
        if rid in entries:
            raise ValueError(f"{path}:{lineno}: duplicate id {rid!r}")
        entries[rid] = label
    return entries
