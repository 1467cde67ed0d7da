"""Quota-driven corpus generation over a gold corpus, plus benchmark exports.

The pipeline samples gold sentences per error class, applies the class's
injector with seeds derived from (master_seed, class, attempt), deduplicates
on (wrong_text, class) and emits records whose ids are content hashes, so a
config determines the output byte-for-byte regardless of worker count.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .injectors import (
    InjectionOutcome,
    Skip,
    ingest_handcrafted,
    inject_case_rule,
    inject_gender,
    inject_gurucandali,
    inject_missing_word,
    inject_number,
    inject_person,
    inject_pos,
    inject_punctuation,
    inject_spelling_dictionary,
    inject_spelling_non_dictionary,
    inject_tense,
    load_handcrafted,
    rng_for,
)
from .lexicon import LexiconBundle, load_bundle
from .normalize import CleanSentence, load_sentences
from .taxonomy import (
    BroadClass,
    ERROR_CLASSES,
    FinerClass,
    broad_of,
)

DETECTION_INSTRUCTION = "বাক্যটি সঠিক অথবা ভুল কিনা তা নির্ধারণ কর।"
CORRECTION_INSTRUCTION = "সঠিক ব্যাকরণ সংশোধন কর।"

# generation gives up on a class after this many attempts
def _attempt_cap(quota: int) -> int:
    return 25 * quota + 500


class ConfigError(ValueError):
    pass


def _resource_dir() -> Path:
    from .lexicon import default_paths

    return default_paths()["word_list"].parent


def default_gold_path() -> Path:
    return _resource_dir() / "sample_gold.txt"


def default_handcrafted_paths() -> dict[FinerClass, Path]:
    root = _resource_dir()
    return {
        FinerClass.CASE: root / "handcrafted_case.tsv",
        FinerClass.SEMANTIC: root / "handcrafted_semantic.tsv",
    }


def default_preset_path() -> Path:
    return _resource_dir() / "table3.toml"


@dataclass(frozen=True)
class GenerationFlags:
    """Feature switches threaded through to the injectors."""

    dictionary_mode: str = "auto"  # auto | homonym | edit
    random_deletion: bool = False
    uniform_alphabet: bool = False
    allow_feminine_source: bool = False
    rule_based_case: bool = False

    def __post_init__(self) -> None:
        if self.dictionary_mode not in ("auto", "homonym", "edit"):
            raise ConfigError(f"bad dictionary_mode {self.dictionary_mode!r}")


@dataclass(frozen=True)
class GenerationConfig:
    master_seed: int
    quotas: dict[FinerClass, int]
    gold_path: Path = field(default_factory=default_gold_path)
    lexicon_paths: dict[str, Path] | None = None
    handcrafted_paths: dict[FinerClass, Path] = field(
        default_factory=default_handcrafted_paths
    )
    flags: GenerationFlags = field(default_factory=GenerationFlags)
    include_correct: bool = True

    def __post_init__(self) -> None:
        if not 0 <= self.master_seed < 2**64:
            raise ConfigError("master_seed must be a 64-bit unsigned integer")
        allowed = set(ERROR_CLASSES) | {FinerClass.CORRECT}
        for cls, count in self.quotas.items():
            if cls not in allowed:
                raise ConfigError(f"quota for unknown class {cls!r}")
            if count < 0:
                raise ConfigError(f"negative quota for {cls.value}")


@dataclass(frozen=True)
class CorpusRecord:
    id: str
    source_id: str
    wrong_text: str
    correct_text: str
    finer: FinerClass
    broad: BroadClass
    span: tuple[int, int] | None
    injector: str
    needs_validation: bool

    def __post_init__(self) -> None:
        if self.broad is not broad_of(self.finer):
            raise ValueError("broad label does not match finer label")
        if self.finer is FinerClass.CORRECT:
            if self.wrong_text != self.correct_text or self.span is not None:
                raise ValueError("correct records must be identity pairs")
        else:
            if self.wrong_text == self.correct_text:
                raise ValueError("error records must change the sentence")
            if self.span is None:
                raise ValueError("error records carry a span")


@dataclass(frozen=True)
class QuotaUnreachable:
    finer: FinerClass
    achieved: int
    wanted: int


@dataclass
class ClassReport:
    quota: int
    achieved: int = 0
    attempts: int = 0
    skips: dict[str, int] = field(default_factory=dict)
    dedup_collisions: int = 0
    with_replacement: bool = False
    rejected_records: int = 0

    @property
    def exhausted(self) -> bool:
        return self.achieved < self.quota


@dataclass
class GenerationReport:
    n_gold: int
    per_class: dict[FinerClass, ClassReport]
    warnings: list[QuotaUnreachable]

    @property
    def total_records(self) -> int:
        return sum(r.achieved for r in self.per_class.values())

    def to_dict(self) -> dict:
        return {
            "n_gold": self.n_gold,
            "total_records": self.total_records,
            "per_class": {
                cls.value: {
                    "quota": r.quota,
                    "achieved": r.achieved,
                    "attempts": r.attempts,
                    "skips": dict(sorted(r.skips.items())),
                    "dedup_collisions": r.dedup_collisions,
                    "with_replacement": r.with_replacement,
                    "rejected_records": r.rejected_records,
                }
                for cls, r in self.per_class.items()
            },
            "warnings": [
                {"class": w.finer.value, "achieved": w.achieved, "wanted": w.wanted}
                for w in self.warnings
            ],
        }


def _record_id(master_seed: int, source_id: str, finer: FinerClass, wrong: str, correct: str) -> str:
    payload = "\x1f".join([str(master_seed), source_id, finer.value, wrong, correct])
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()[:16]


def _wire_injector(
    finer: FinerClass, lex: LexiconBundle, flags: GenerationFlags
) -> tuple[str, Callable]:
    """Bind a rule injector and its flags; returns (name, fn(s, rng))."""
    if finer is FinerClass.SPELLING_NON_DICTIONARY:
        return "inject_spelling_non_dictionary", lambda s, rng: inject_spelling_non_dictionary(
            s, lex, rng, uniform_alphabet=flags.uniform_alphabet
        )
    if finer is FinerClass.SPELLING_DICTIONARY:
        return "inject_spelling_dictionary", lambda s, rng: inject_spelling_dictionary(
            s, lex, rng, mode=flags.dictionary_mode, uniform_alphabet=flags.uniform_alphabet
        )
    if finer is FinerClass.TENSE:
        return "inject_tense", lambda s, rng: inject_tense(s, lex, rng)
    if finer is FinerClass.PERSON:
        return "inject_person", lambda s, rng: inject_person(s, lex, rng)
    if finer is FinerClass.NUMBER:
        return "inject_number", lambda s, rng: inject_number(s, lex, rng)
    if finer is FinerClass.GENDER:
        return "inject_gender", lambda s, rng: inject_gender(
            s, lex, rng, allow_feminine_source=flags.allow_feminine_source
        )
    if finer is FinerClass.PARTS_OF_SPEECH:
        return "inject_pos", lambda s, rng: inject_pos(s, lex, rng)
    if finer is FinerClass.MISSING_WORD:
        return "inject_missing_word", lambda s, rng: inject_missing_word(
            s, lex, rng, random_mode=flags.random_deletion
        )
    if finer is FinerClass.PUNCTUATION:
        return "inject_punctuation", lambda s, rng: inject_punctuation(s, rng)
    if finer is FinerClass.GURUCANDALI:
        return "inject_gurucandali", lambda s, rng: inject_gurucandali(s, lex, rng)
    if finer is FinerClass.CASE:
        return "inject_case_rule", lambda s, rng: inject_case_rule(s, lex, rng)
    raise ValueError(f"no rule injector for {finer.value}")


def _generate_rule_class(
    cfg: GenerationConfig,
    finer: FinerClass,
    gold: Sequence[CleanSentence],
    lex: LexiconBundle,
    seen: set[tuple[str, FinerClass]],
    report: ClassReport,
) -> list[CorpusRecord]:
    name, injector = _wire_injector(finer, lex, cfg.flags)
    order = list(range(len(gold)))
    rng_for(cfg.master_seed, finer.value, "order").shuffle(order)
    records: list[CorpusRecord] = []
    cap = _attempt_cap(report.quota)
    while len(records) < report.quota and report.attempts < cap:
        attempt = report.attempts
        report.attempts += 1
        rng = rng_for(cfg.master_seed, finer.value, attempt)
        if attempt < len(order):
            sentence = gold[order[attempt]]
        else:
            report.with_replacement = True
            sentence = gold[rng.randint(0, len(gold) - 1)]
        result = injector(sentence, rng)
        if isinstance(result, Skip):
            key = result.reason.value
            report.skips[key] = report.skips.get(key, 0) + 1
            continue
        dedup_key = (result.wrong_text, finer)
        if dedup_key in seen:
            report.dedup_collisions += 1
            continue
        seen.add(dedup_key)
        records.append(_to_record(cfg.master_seed, sentence.source_id, name, result))
        report.achieved += 1
    return records


def _to_record(
    master_seed: int, source_id: str, injector_name: str, out: InjectionOutcome
) -> CorpusRecord:
    return CorpusRecord(
        id=_record_id(master_seed, source_id, out.finer, out.wrong_text, out.correct_text),
        source_id=source_id,
        wrong_text=out.wrong_text,
        correct_text=out.correct_text,
        finer=out.finer,
        broad=broad_of(out.finer),
        span=out.span,
        injector=injector_name,
        needs_validation=out.needs_validation,
    )


def _generate_handcrafted_class(
    cfg: GenerationConfig,
    finer: FinerClass,
    gold: Sequence[CleanSentence],
    lex: LexiconBundle,
    seen: set[tuple[str, FinerClass]],
    report: ClassReport,
) -> list[CorpusRecord]:
    path = cfg.handcrafted_paths.get(finer)
    pool: list[tuple[str, InjectionOutcome]] = []
    if path is not None:
        raw = load_handcrafted(path)
        outcomes, rejected = ingest_handcrafted(raw)
        report.rejected_records = len(rejected)
        for out in outcomes:
            if out.finer is not finer:
                report.rejected_records += 1
                continue
            source = f"handcrafted:{finer.value}:{out.detail.get('index')}"
            pool.append((source, out))
    order = list(range(len(pool)))
    rng_for(cfg.master_seed, finer.value, "order").shuffle(order)
    records: list[CorpusRecord] = []
    for idx in order:
        if len(records) >= report.quota:
            break
        source, out = pool[idx]
        report.attempts += 1
        dedup_key = (out.wrong_text, finer)
        if dedup_key in seen:
            report.dedup_collisions += 1
            continue
        seen.add(dedup_key)
        records.append(_to_record(cfg.master_seed, source, "handcrafted", out))
        report.achieved += 1
    if (
        len(records) < report.quota
        and finer is FinerClass.CASE
        and cfg.flags.rule_based_case
    ):
        sub = ClassReport(quota=report.quota - len(records))
        records.extend(_generate_rule_class(cfg, finer, gold, lex, seen, sub))
        report.attempts += sub.attempts
        report.achieved += sub.achieved
        report.dedup_collisions += sub.dedup_collisions
        report.with_replacement = report.with_replacement or sub.with_replacement
        for k, v in sub.skips.items():
            report.skips[k] = report.skips.get(k, 0) + v
    if len(records) < report.quota:
        report.skips["pool_exhausted"] = report.skips.get("pool_exhausted", 0) + (
            report.quota - len(records)
        )
    return records


def _generate_correct(
    cfg: GenerationConfig,
    gold: Sequence[CleanSentence],
    seen: set[tuple[str, FinerClass]],
    report: ClassReport,
) -> list[CorpusRecord]:
    order = list(range(len(gold)))
    rng_for(cfg.master_seed, FinerClass.CORRECT.value, "order").shuffle(order)
    records: list[CorpusRecord] = []
    for idx in order:
        if len(records) >= report.quota:
            break
        report.attempts += 1
        sentence = gold[idx]
        dedup_key = (sentence.text, FinerClass.CORRECT)
        if dedup_key in seen:
            report.dedup_collisions += 1
            continue
        seen.add(dedup_key)
        records.append(
            CorpusRecord(
                id=_record_id(
                    cfg.master_seed,
                    sentence.source_id,
                    FinerClass.CORRECT,
                    sentence.text,
                    sentence.text,
                ),
                source_id=sentence.source_id,
                wrong_text=sentence.text,
                correct_text=sentence.text,
                finer=FinerClass.CORRECT,
                broad=BroadClass.CORRECT,
                span=None,
                injector="identity",
                needs_validation=False,
            )
        )
        report.achieved += 1
    return records


_HANDCRAFTED_CLASSES = (FinerClass.CASE, FinerClass.SEMANTIC)


def build_corpus(
    cfg: GenerationConfig, lex: LexiconBundle | None = None
) -> tuple[list[CorpusRecord], GenerationReport]:
    """Generate the corpus described by ``cfg``; shortfalls are non-fatal."""
    if lex is None:
        lex = load_bundle(cfg.lexicon_paths)
    gold = load_sentences(cfg.gold_path)
    if not gold:
        raise ConfigError(f"gold corpus {cfg.gold_path} is empty")
    # with no explicit quota, include_correct passes the whole gold corpus
    if not cfg.include_correct:
        correct_quota = 0
    elif FinerClass.CORRECT in cfg.quotas:
        correct_quota = cfg.quotas[FinerClass.CORRECT]
    else:
        correct_quota = len(gold)
    if correct_quota > len(gold):
        raise ConfigError(
            f"quota for correct ({correct_quota}) exceeds gold size ({len(gold)})"
        )
    seen: set[tuple[str, FinerClass]] = set()
    per_class: dict[FinerClass, ClassReport] = {}
    warnings: list[QuotaUnreachable] = []
    records: list[CorpusRecord] = []
    for finer in FinerClass:
        if finer is FinerClass.CORRECT:
            quota = correct_quota
        else:
            quota = cfg.quotas.get(finer, 0)
        if quota == 0:
            continue
        report = ClassReport(quota=quota)
        per_class[finer] = report
        if finer is FinerClass.CORRECT:
            new = _generate_correct(cfg, gold, seen, report)
        elif finer in _HANDCRAFTED_CLASSES:
            new = _generate_handcrafted_class(cfg, finer, gold, lex, seen, report)
        else:
            new = _generate_rule_class(cfg, finer, gold, lex, seen, report)
        records.extend(new)
        if report.achieved < quota:
            warnings.append(QuotaUnreachable(finer, report.achieved, quota))
    records.sort(key=lambda r: r.id)
    _audit(records)
    return records, GenerationReport(len(gold), per_class, warnings)


def _audit(records: Sequence[CorpusRecord]) -> None:
    """End-of-pipeline structural invariants; raises on violation."""
    ids = set()
    texts = set()
    for r in records:
        if r.id in ids:
            raise ValueError(f"duplicate record id {r.id}")
        ids.add(r.id)
        key = (r.wrong_text, r.finer)
        if key in texts:
            raise ValueError(f"duplicate (wrong_text, finer) for {r.id}")
        texts.add(key)
        if r.span is not None:
            n = len(r.wrong_text.split(" "))
            start, end = r.span
            if not (0 <= start <= end <= n):
                raise ValueError(f"record {r.id} span {r.span} out of range")


# ---------------------------------------------------------------- exports


_JSONL_FIELDS = (
    "id",
    "source_id",
    "wrong",
    "correct",
    "finer",
    "broad",
    "span_start",
    "span_end",
    "injector",
    "needs_validation",
)


def record_to_json_obj(r: CorpusRecord) -> dict:
    return {
        "id": r.id,
        "source_id": r.source_id,
        "wrong": r.wrong_text,
        "correct": r.correct_text,
        "finer": r.finer.value,
        "broad": r.broad.value,
        "span_start": None if r.span is None else r.span[0],
        "span_end": None if r.span is None else r.span[1],
        "injector": r.injector,
        "needs_validation": r.needs_validation,
    }


def export_jsonl(records: Sequence[CorpusRecord], path: str | Path) -> None:
    """One record per line, fixed key order, sorted by id."""
    lines = [
        json.dumps(record_to_json_obj(r), ensure_ascii=False)
        for r in sorted(records, key=lambda r: r.id)
    ]
    Path(path).write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def import_jsonl(path: str | Path) -> list[CorpusRecord]:
    records = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        if not line.strip():
            continue
        obj = json.loads(line)
        missing = [k for k in _JSONL_FIELDS if k not in obj]
        if missing:
            raise ValueError(f"{path}:{lineno}: missing fields {missing}")
        span = None
        if obj["span_start"] is not None:
            span = (obj["span_start"], obj["span_end"])
        records.append(
            CorpusRecord(
                id=obj["id"],
                source_id=obj["source_id"],
                wrong_text=obj["wrong"],
                correct_text=obj["correct"],
                finer=FinerClass.from_label(obj["finer"]),
                broad=BroadClass(obj["broad"]),
                span=span,
                injector=obj["injector"],
                needs_validation=obj["needs_validation"],
            )
        )
    return records


def alpaca_triples(records: Sequence[CorpusRecord], task: str) -> list[dict]:
    """Instruction-tuning triples; ``task`` is "detection" or "correction".

    Correct records are meaningless for correction and are excluded there.
    """
    if task == "detection":
        return [
            {
                "instruction": DETECTION_INSTRUCTION,
                "input": r.wrong_text,
                "output": "correct" if r.finer is FinerClass.CORRECT else "wrong",
            }
            for r in sorted(records, key=lambda r: r.id)
        ]
    if task == "correction":
        return [
            {
                "instruction": CORRECTION_INSTRUCTION,
                "input": r.wrong_text,
                "output": r.correct_text,
            }
            for r in sorted(records, key=lambda r: r.id)
            if r.finer is not FinerClass.CORRECT
        ]
    raise ValueError(f"unknown alpaca task {task!r}")


def export_alpaca(records: Sequence[CorpusRecord], task: str, path: str | Path) -> None:
    triples = alpaca_triples(records, task)
    Path(path).write_text(
        json.dumps(triples, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )


# ---------------------------------------------------------------- statistics


@dataclass(frozen=True)
class StatsReport:
    finer_counts: dict[str, int]
    broad_counts: dict[str, int]
    total_errors: int
    n_correct: int
    finer_pct: dict[str, float]
    broad_pct: dict[str, float]

    def to_dict(self) -> dict:
        return {
            "total_errors": self.total_errors,
            "n_correct": self.n_correct,
            "finer": {
                label: {"count": self.finer_counts[label], "pct": self.finer_pct[label]}
                for label in self.finer_counts
            },
            "broad": {
                label: {"count": self.broad_counts[label], "pct": self.broad_pct[label]}
                for label in self.broad_counts
            },
        }


def _pct(count: int, total: int) -> float:
    if total == 0:
        return 0.0
    return float(round(Fraction(count * 100, total), 2))


def stats_from_counts(counts: dict[str, int]) -> StatsReport:
    """Per-class shares of the error total, to two decimal places."""
    finer_counts = {cls.value: 0 for cls in ERROR_CLASSES}
    n_correct = 0
    for label, count in counts.items():
        cls = FinerClass.from_label(label)
        if cls is FinerClass.CORRECT:
            n_correct += count
        else:
            finer_counts[cls.value] += count
    total = sum(finer_counts.values())
    broad_counts: dict[str, int] = {}
    for cls in ERROR_CLASSES:
        b = broad_of(cls).value
        broad_counts[b] = broad_counts.get(b, 0) + finer_counts[cls.value]
    return StatsReport(
        finer_counts=finer_counts,
        broad_counts=broad_counts,
        total_errors=total,
        n_correct=n_correct,
        finer_pct={k: _pct(v, total) for k, v in finer_counts.items()},
        broad_pct={k: _pct(v, total) for k, v in broad_counts.items()},
    )


def corpus_stats(records: Sequence[CorpusRecord]) -> StatsReport:
    counts: dict[str, int] = {}
    for r in records:
        counts[r.finer.value] = counts.get(r.finer.value, 0) + 1
    return stats_from_counts(counts)


def load_survey_counts(path: str | Path) -> dict[str, int]:
    """Read a label<TAB>count file, e.g. the bundled manual-survey table."""
    counts: dict[str, int] = {}
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(f"{path}:{lineno}: expected label<TAB>count")
        label, count = fields
        if label in counts:
            raise ValueError(f"{path}:{lineno}: duplicate label {label!r}")
        counts[label] = int(count)
    return counts


# ---------------------------------------------------------------- presets


def load_preset_rows(path: str | Path | None = None) -> tuple[dict[FinerClass, int], int]:
    """Read a quota preset: per-class rows plus its reference gold size."""
    p = Path(path) if path is not None else default_preset_path()
    with open(p, "rb") as fh:
        data = tomllib.load(fh)
    reference = data["reference_gold"]
    rows = {FinerClass.from_label(k): int(v) for k, v in data["rows"].items()}
    return rows, reference


def scale_quotas(
    rows: dict[FinerClass, int], reference_gold: int, n_gold: int
) -> dict[FinerClass, int]:
    """Pro-rate preset rows to a different gold-corpus size (round half up)."""
    return {
        cls: math.floor(row * n_gold / reference_gold + 0.5)
        for cls, row in rows.items()
    }


def preset_quotas(n_gold: int, path: str | Path | None = None) -> dict[FinerClass, int]:
    rows, reference = load_preset_rows(path)
    return scale_quotas(rows, reference, n_gold)


# ---------------------------------------------------------------- config files


def load_config(path: str | Path) -> GenerationConfig:
    """Build a GenerationConfig from a TOML file.

    Either a ``[quotas]`` table or ``preset = "table3"`` (scaled to the gold
    corpus size) must be present.
    """
    p = Path(path)
    with open(p, "rb") as fh:
        data = tomllib.load(fh)
    base = p.parent

    def _path(value: str) -> Path:
        q = Path(value)
        return q if q.is_absolute() else (base / q)

    gold_path = _path(data["gold_path"]) if "gold_path" in data else default_gold_path()
    if "quotas" in data:
        quotas = {FinerClass.from_label(k): int(v) for k, v in data["quotas"].items()}
    elif "preset" in data:
        preset_path = (
            default_preset_path()
            if data["preset"] == "table3"
            else _path(data["preset"])
        )
        n_gold = len(load_sentences(gold_path))
        quotas = preset_quotas(n_gold, preset_path)
    else:
        raise ConfigError("config needs a [quotas] table or a preset name")
    lexicon_paths = None
    if "lexicon" in data:
        lexicon_paths = {k: _path(v) for k, v in data["lexicon"].items()}
    handcrafted = default_handcrafted_paths()
    if "handcrafted" in data:
        handcrafted = {
            FinerClass.from_label(k): _path(v) for k, v in data["handcrafted"].items()
        }
    flags = GenerationFlags(**data.get("flags", {}))
    return GenerationConfig(
        master_seed=int(data["master_seed"]),
        quotas=quotas,
        gold_path=gold_path,
        lexicon_paths=lexicon_paths,
        handcrafted_paths=handcrafted,
        flags=flags,
        include_correct=bool(data.get("include_correct", True)),
    )
