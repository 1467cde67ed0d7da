"""Seedable error injectors: one transformation per error category.

Every injector maps a gold ``CleanSentence`` to a labeled erroneous variant
(or a ``Skip`` marker) using only the draws of the supplied random source,
so identical (sentence, bundle, seed) triples give identical outcomes.
"""

from __future__ import annotations

import enum
import hashlib
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .lexicon import LexiconBundle, PERSONS, TENSES
from .normalize import (
    CleanSentence,
    clean_unicode,
    default_marks,
    is_dependent_sign,
    sentence_from_surfaces,
    separate_punctuation,
)
from .taxonomy import FinerClass

DEFAULT_RETRIES = 20

# Bangla letters used for random character edits.  Dependent vowel signs are
# included; the well-formedness filter rejects any illegal placement.
_INDEPENDENT_VOWELS = "অআইঈউঊঋএঐওঔ"
# precomposed ড় ঢ় য় so every alphabet entry is one code point
_CONSONANTS = "কখগঘঙচছজঝঞটঠডঢণতথদধনপফবভমযরলশষসহড়ঢ়য়ৎ"
_DEPENDENT_SIGNS = "ািীুূৃেৈোৌ"
UNIFORM_ALPHABET: tuple[str, ...] = tuple(
    _INDEPENDENT_VOWELS + _CONSONANTS + _DEPENDENT_SIGNS + "ংঃঁ"
)

# visually/phonetically confusable letter groups that dominate real-world
# misspellings; substitution draws stay inside the group when possible
CONFUSION_GROUPS: tuple[frozenset[str], ...] = (
    frozenset("নণ"),
    frozenset("শষস"),
    frozenset(("র", "ড়", "ঢ়")),
)


class SkipReason(enum.Enum):
    NO_TARGET_WORD = "no_target_word"
    WOULD_BE_VALID = "would_be_valid"
    EXHAUSTED_RETRIES = "exhausted_retries"
    DEGENERATE_SENTENCE = "degenerate_sentence"


@dataclass(frozen=True)
class Skip:
    """Marker for a sentence the injector declines to transform."""

    reason: SkipReason


@dataclass(frozen=True)
class InjectionOutcome:
    """One wrong/correct sentence pair with its class label and span."""

    wrong_text: str
    correct_text: str
    finer: FinerClass
    span: tuple[int, int]
    detail: dict[str, object] = field(default_factory=dict)
    needs_validation: bool = False

    def __post_init__(self) -> None:
        if self.wrong_text == self.correct_text:
            raise ValueError("wrong_text must differ from correct_text")
        if self.finer is FinerClass.CORRECT:
            raise ValueError("injection outcomes are always error-labeled")
        start, end = self.span
        n = len(self.wrong_tokens)
        if not (0 <= start <= end <= n):
            raise ValueError(f"span {self.span} invalid for {n} tokens")

    @property
    def wrong_tokens(self) -> tuple[str, ...]:
        return tuple(self.wrong_text.split(" "))

    @property
    def correct_tokens(self) -> tuple[str, ...]:
        return tuple(self.correct_text.split(" "))


Result = "InjectionOutcome | Skip"


def derive_seed(master_seed: int, *parts: object) -> int:
    """Stable 64-bit seed from a master seed and any hashable path parts."""
    h = hashlib.sha256(repr((master_seed,) + parts).encode("utf-8"))
    return int.from_bytes(h.digest()[:8], "big")


def rng_for(master_seed: int, *parts: object) -> random.Random:
    return random.Random(derive_seed(master_seed, *parts))


def well_formed(word: str) -> bool:
    """No leading combining sign and no two adjacent combining signs."""
    if not word:
        return False
    if is_dependent_sign(word[0]):
        return False
    return all(
        not (is_dependent_sign(a) and is_dependent_sign(b))
        for a, b in zip(word, word[1:])
    )


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance over code points."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def _content_positions(s: CleanSentence) -> list[int]:
    return s.content_indices()


def _surface(s: CleanSentence, i: int) -> str:
    return s.tokens[i].surface


def _rebuild(s: CleanSentence, surfaces: Sequence[str]) -> str:
    return " ".join(surfaces)


def _replace_one(s: CleanSentence, pos: int, new: str) -> tuple[str, str]:
    surfaces = [t.surface for t in s.tokens]
    correct = _rebuild(s, surfaces)
    surfaces[pos] = new
    return _rebuild(s, surfaces), correct


# ---------------------------------------------------------------- spelling


def _substitution_alphabet(ch: str, uniform: bool) -> tuple[str, ...]:
    if not uniform:
        for group in CONFUSION_GROUPS:
            if ch in group:
                return tuple(sorted(group - {ch}))
    return tuple(c for c in UNIFORM_ALPHABET if c != ch)


def _perturb(word: str, rng: random.Random, uniform_alphabet: bool) -> str:
    """Apply 1 or 2 random code-point edits to a word."""
    n_edits = rng.randint(1, 2)
    out = word
    for _ in range(n_edits):
        ops = ["substitute", "insert"]
        if len(out) >= 2:
            ops.append("delete")
        op = rng.choice(ops)
        if op == "substitute":
            idx = rng.randint(0, len(out) - 1)
            ch = rng.choice(_substitution_alphabet(out[idx], uniform_alphabet))
            out = out[:idx] + ch + out[idx + 1:]
        elif op == "insert":
            idx = rng.randint(0, len(out))
            ch = rng.choice(UNIFORM_ALPHABET)
            out = out[:idx] + ch + out[idx:]
        else:
            idx = rng.randint(0, len(out) - 1)
            out = out[:idx] + out[idx + 1:]
    return out


def inject_spelling_non_dictionary(
    s: CleanSentence,
    lex: LexiconBundle,
    rng: random.Random,
    *,
    retries: int = DEFAULT_RETRIES,
    uniform_alphabet: bool = False,
) -> InjectionOutcome | Skip:
    """Perturb one word by 1-2 character edits into a non-dictionary form."""
    positions = [i for i in _content_positions(s) if lex.is_dictionary_word(_surface(s, i))]
    if not positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    for _ in range(retries):
        pos = rng.choice(positions)
        word = _surface(s, pos)
        candidate = _perturb(word, rng, uniform_alphabet)
        if candidate == word or not well_formed(candidate):
            continue
        if lex.is_dictionary_word(candidate):
            continue
        wrong, correct = _replace_one(s, pos, candidate)
        return InjectionOutcome(
            wrong_text=wrong,
            correct_text=correct,
            finer=FinerClass.SPELLING_NON_DICTIONARY,
            span=(pos, pos + 1),
            detail={"original": word, "replacement": candidate},
        )
    return Skip(SkipReason.EXHAUSTED_RETRIES)


def inject_spelling_dictionary(
    s: CleanSentence,
    lex: LexiconBundle,
    rng: random.Random,
    *,
    mode: str = "auto",
    retries: int = DEFAULT_RETRIES,
    uniform_alphabet: bool = False,
) -> InjectionOutcome | Skip:
    """Swap a word for a similar-sounding *dictionary* word.

    ``mode``: "homonym" uses the curated pair table only; "edit" perturbs
    until an in-dictionary word appears; "auto" prefers homonyms and falls
    back to edits.
    """
    if mode not in ("auto", "homonym", "edit"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode in ("auto", "homonym"):
        positions = [
            i for i in _content_positions(s) if lex.homonyms.partners(_surface(s, i))
        ]
        if positions:
            pos = rng.choice(positions)
            word = _surface(s, pos)
            partner = rng.choice(sorted(lex.homonyms.partners(word)))
            wrong, correct = _replace_one(s, pos, partner)
            return InjectionOutcome(
                wrong_text=wrong,
                correct_text=correct,
                finer=FinerClass.SPELLING_DICTIONARY,
                span=(pos, pos + 1),
                detail={"original": word, "replacement": partner, "mode": "homonym"},
            )
        if mode == "homonym":
            return Skip(SkipReason.NO_TARGET_WORD)
    positions = [i for i in _content_positions(s) if lex.is_dictionary_word(_surface(s, i))]
    if not positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    for _ in range(retries):
        pos = rng.choice(positions)
        word = _surface(s, pos)
        candidate = _perturb(word, rng, uniform_alphabet)
        if candidate == word or not well_formed(candidate):
            continue
        if not lex.is_dictionary_word(candidate):
            continue
        wrong, correct = _replace_one(s, pos, candidate)
        return InjectionOutcome(
            wrong_text=wrong,
            correct_text=correct,
            finer=FinerClass.SPELLING_DICTIONARY,
            span=(pos, pos + 1),
            detail={"original": word, "replacement": candidate, "mode": "edit"},
        )
    return Skip(SkipReason.EXHAUSTED_RETRIES)


# ---------------------------------------------------------------- verb morphology


def _inject_verb_axis(
    s: CleanSentence,
    lex: LexiconBundle,
    rng: random.Random,
    *,
    axis: str,
) -> InjectionOutcome | Skip:
    positions = [i for i in _content_positions(s) if lex.find_verb(_surface(s, i))]
    if not positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    pos = rng.choice(positions)
    word = _surface(s, pos)
    cell = rng.choice(sorted(lex.find_verb(word)))
    if axis == "tense":
        alternatives = [t for t in TENSES if t != cell.tense]
    else:
        alternatives = [p for p in PERSONS if p != cell.person]
    target = rng.choice(alternatives)
    if axis == "tense":
        forms = lex.verb_paradigm.forms(cell.lemma, target, cell.person)
    else:
        forms = lex.verb_paradigm.forms(cell.lemma, cell.tense, target)
    forms = tuple(f for f in forms if f != word)
    if not forms:
        return Skip(SkipReason.WOULD_BE_VALID)
    replacement = rng.choice(forms)
    wrong, correct = _replace_one(s, pos, replacement)
    finer = FinerClass.TENSE if axis == "tense" else FinerClass.PERSON
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=finer,
        span=(pos, pos + 1),
        detail={
            "original": word,
            "replacement": replacement,
            "lemma": cell.lemma,
            axis: target,
        },
    )


def inject_tense(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Replace a verb with the same lemma/person in a different tense."""
    return _inject_verb_axis(s, lex, rng, axis="tense")


def inject_person(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Replace a verb with the same lemma/tense in a different person."""
    return _inject_verb_axis(s, lex, rng, axis="person")


# ---------------------------------------------------------------- pair swaps


def inject_number(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Swap a pronoun with its other-number counterpart."""
    positions = [
        i
        for i in _content_positions(s)
        if _surface(s, i) in lex.pronoun_frozen_list and _surface(s, i) in lex.pronoun_numbers
    ]
    if not positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    pos = rng.choice(positions)
    word = _surface(s, pos)
    replacement = lex.pronoun_numbers.counterpart(word)
    wrong, correct = _replace_one(s, pos, replacement)
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.NUMBER,
        span=(pos, pos + 1),
        detail={"original": word, "replacement": replacement},
    )


def inject_gender(
    s: CleanSentence,
    lex: LexiconBundle,
    rng: random.Random,
    *,
    allow_feminine_source: bool = False,
) -> InjectionOutcome | Skip:
    """Swap a gendered noun with its counterpart form.

    By default only masculine words are replaced: the masculine form doubles
    as the neutral one, so a feminine-to-masculine swap often yields a
    sentence that is still acceptable.
    """
    all_positions = [i for i in _content_positions(s) if _surface(s, i) in lex.genders]
    if not all_positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    if allow_feminine_source:
        positions = all_positions
    else:
        positions = [
            i for i in all_positions if lex.genders.side(_surface(s, i)) == "masculine"
        ]
        if not positions:
            return Skip(SkipReason.WOULD_BE_VALID)
    pos = rng.choice(positions)
    word = _surface(s, pos)
    replacement = lex.genders.counterpart(word)
    wrong, correct = _replace_one(s, pos, replacement)
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.GENDER,
        span=(pos, pos + 1),
        detail={"original": word, "replacement": replacement},
    )


def inject_pos(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Swap a noun with its paired adjective (or vice versa)."""
    positions = [
        i for i in _content_positions(s) if _surface(s, i) in lex.noun_adjectives
    ]
    if not positions:
        return Skip(SkipReason.NO_TARGET_WORD)
    pos = rng.choice(positions)
    word = _surface(s, pos)
    replacement = lex.noun_adjectives.counterpart(word)
    wrong, correct = _replace_one(s, pos, replacement)
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.PARTS_OF_SPEECH,
        span=(pos, pos + 1),
        detail={"original": word, "replacement": replacement},
    )


# ---------------------------------------------------------------- deletions


def inject_missing_word(
    s: CleanSentence,
    lex: LexiconBundle,
    rng: random.Random,
    *,
    random_mode: bool = False,
) -> InjectionOutcome | Skip:
    """Delete one word: a verb, a paired noun, or (opt-in) a random word."""
    content = _content_positions(s)
    if len(content) < 3:
        return Skip(SkipReason.DEGENERATE_SENTENCE)
    surfaces = [t.surface for t in s.tokens]
    verb_positions = [i for i in content if lex.find_verb(surfaces[i])]
    if verb_positions:
        pos = rng.choice(verb_positions)
        mode = "verb"
        needs_validation = False
    else:
        na = lex.noun_adjectives
        noun_positions = [
            i
            for i in content
            if i > 0
            and surfaces[i] in na
            and na.side(surfaces[i]) == "noun"
            and surfaces[i - 1] == na.counterpart(surfaces[i])
        ]
        if noun_positions:
            pos = rng.choice(noun_positions)
            mode = "paired_noun"
            needs_validation = False
        elif random_mode:
            pos = rng.choice(content)
            mode = "random"
            needs_validation = True
        else:
            return Skip(SkipReason.NO_TARGET_WORD)
    correct = _rebuild(s, surfaces)
    wrong = _rebuild(s, surfaces[:pos] + surfaces[pos + 1:])
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.MISSING_WORD,
        span=(pos, pos),
        detail={"deleted": surfaces[pos], "mode": mode},
        needs_validation=needs_validation,
    )


# ---------------------------------------------------------------- punctuation


def inject_punctuation(
    s: CleanSentence,
    rng: random.Random,
    *,
    marks: Sequence[str] | None = None,
) -> InjectionOutcome | Skip:
    """Corrupt punctuation: wrong terminal mark, deletion, or spurious mark."""
    marks = tuple(marks) if marks is not None else default_marks()
    surfaces = [t.surface for t in s.tokens]
    punct_positions = [i for i, t in enumerate(s.tokens) if t.is_punct]
    modes = []
    if surfaces and surfaces[-1] == "।":
        modes.append("wrong_mark")
    if punct_positions:
        modes.append("missing_mark")
    if len(surfaces) >= 2:
        modes.append("spurious_mark")
    if not modes:
        return Skip(SkipReason.NO_TARGET_WORD)
    mode = rng.choice(modes)
    correct = _rebuild(s, surfaces)
    if mode == "wrong_mark":
        replacement = rng.choice(("?", "!"))
        pos = len(surfaces) - 1
        wrong = _rebuild(s, surfaces[:-1] + [replacement])
        span = (pos, pos + 1)
        detail = {"mode": mode, "original": "।", "replacement": replacement}
    elif mode == "missing_mark":
        pos = rng.choice(punct_positions)
        wrong = _rebuild(s, surfaces[:pos] + surfaces[pos + 1:])
        span = (pos, pos)
        detail = {"mode": mode, "deleted": surfaces[pos]}
    else:
        boundary = rng.randint(1, len(surfaces) - 1)
        mark = rng.choice(marks)
        wrong = _rebuild(s, surfaces[:boundary] + [mark] + surfaces[boundary:])
        span = (boundary, boundary + 1)
        detail = {"mode": mode, "inserted": mark}
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.PUNCTUATION,
        span=span,
        detail=detail,
    )


# ---------------------------------------------------------------- registers


def inject_gurucandali(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Convert part of a single-register sentence to the other register."""
    reg = lex.registers
    surfaces = [t.surface for t in s.tokens]
    positions = [i for i in _content_positions(s) if surfaces[i] in reg.words()]
    if len(positions) < 2:
        return Skip(SkipReason.NO_TARGET_WORD)
    registers = {reg.register_of(surfaces[i]) for i in positions}
    if len(registers) > 1:
        return Skip(SkipReason.WOULD_BE_VALID)
    k = len(positions)
    size = rng.randint(1, k - 1)
    chosen = sorted(rng.sample(positions, size))
    for i in chosen:
        surfaces[i] = reg.counterpart(surfaces[i])
    correct = _rebuild(s, [t.surface for t in s.tokens])
    wrong = _rebuild(s, surfaces)
    (source_register,) = registers
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.GURUCANDALI,
        span=(chosen[0], chosen[-1] + 1),
        detail={
            "converted": [s.tokens[i].surface for i in chosen],
            "source_register": source_register,
        },
    )


# ---------------------------------------------------------------- rule-based case


CASE_SUFFIXES: tuple[str, ...] = ("কে", "তে", "ের", "ে", "র")


def inject_case_rule(
    s: CleanSentence, lex: LexiconBundle, rng: random.Random
) -> InjectionOutcome | Skip:
    """Swap one vibhakti suffix for another.

    Heuristic only: disabled by default in generation configs, and every
    outcome is flagged for human validation.
    """
    candidates = []
    for i in _content_positions(s):
        word = _surface(s, i)
        for suf in CASE_SUFFIXES:
            if word.endswith(suf) and len(word) > len(suf):
                candidates.append((i, suf))
                break
    if not candidates:
        return Skip(SkipReason.NO_TARGET_WORD)
    pos, suf = rng.choice(candidates)
    word = _surface(s, pos)
    replacement_suf = rng.choice(tuple(x for x in CASE_SUFFIXES if x != suf))
    candidate = word[: len(word) - len(suf)] + replacement_suf
    if candidate == word or not well_formed(candidate):
        return Skip(SkipReason.EXHAUSTED_RETRIES)
    wrong, correct = _replace_one(s, pos, candidate)
    return InjectionOutcome(
        wrong_text=wrong,
        correct_text=correct,
        finer=FinerClass.CASE,
        span=(pos, pos + 1),
        detail={"original": word, "replacement": candidate, "mode": "rule_suffix"},
        needs_validation=True,
    )


# ---------------------------------------------------------------- handcrafted


@dataclass(frozen=True)
class HandcraftedRecord:
    wrong: str
    correct: str
    finer: FinerClass
    approved: bool = False


@dataclass(frozen=True)
class RejectedRecord:
    index: int
    reason: str


def load_handcrafted(path: str | Path) -> list[HandcraftedRecord]:
    """Read a handcrafted-record TSV: wrong, correct, label[, approved]."""
    records = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), start=1
    ):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) not in (3, 4):
            raise ValueError(f"{path}:{lineno}: expected 3 or 4 columns")
        wrong, correct, label = fields[0], fields[1], fields[2]
        approved = len(fields) == 4 and fields[3].strip().lower() in ("approved", "true", "1")
        records.append(
            HandcraftedRecord(wrong, correct, FinerClass.from_label(label), approved)
        )
    return records


def _normalize_text(text: str) -> str:
    return separate_punctuation(clean_unicode(text))


def ingest_handcrafted(
    records: Sequence[HandcraftedRecord | tuple],
    *,
    approvals: set[int] | None = None,
) -> tuple[list[InjectionOutcome], list[RejectedRecord]]:
    """Normalize handcrafted pairs and compute their error spans.

    Returns accepted outcomes plus per-record rejections (bad records are
    reported, never fatal).  Outcomes keep ``needs_validation=True`` unless
    the record is approved.
    """
    outcomes: list[InjectionOutcome] = []
    rejected: list[RejectedRecord] = []
    approvals = approvals or set()
    for i, rec in enumerate(records):
        if not isinstance(rec, HandcraftedRecord):
            rec = HandcraftedRecord(*rec)
        if rec.finer is FinerClass.CORRECT:
            rejected.append(RejectedRecord(i, "invalid_label"))
            continue
        wrong = _normalize_text(rec.wrong)
        correct = _normalize_text(rec.correct)
        if not wrong or not correct:
            rejected.append(RejectedRecord(i, "empty_text"))
            continue
        if wrong == correct:
            rejected.append(RejectedRecord(i, "equal_texts"))
            continue
        w_toks = wrong.split(" ")
        c_toks = correct.split(" ")
        lo = 0
        while lo < len(w_toks) and lo < len(c_toks) and w_toks[lo] == c_toks[lo]:
            lo += 1
        hi = 0
        while (
            hi < len(w_toks) - lo
            and hi < len(c_toks) - lo
            and w_toks[len(w_toks) - 1 - hi] == c_toks[len(c_toks) - 1 - hi]
        ):
            hi += 1
        span = (lo, len(w_toks) - hi)
        outcomes.append(
            InjectionOutcome(
                wrong_text=wrong,
                correct_text=correct,
                finer=rec.finer,
                span=span,
                detail={"mode": "handcrafted", "index": i},
                needs_validation=not (rec.approved or i in approvals),
            )
        )
    return outcomes, rejected


# ---------------------------------------------------------------- registry

# rule injectors that draw from a gold sentence, keyed by the class they emit
RULE_INJECTORS = {
    FinerClass.SPELLING_NON_DICTIONARY: inject_spelling_non_dictionary,
    FinerClass.SPELLING_DICTIONARY: inject_spelling_dictionary,
    FinerClass.TENSE: inject_tense,
    FinerClass.PERSON: inject_person,
    FinerClass.NUMBER: inject_number,
    FinerClass.GENDER: inject_gender,
    FinerClass.PARTS_OF_SPEECH: inject_pos,
    FinerClass.MISSING_WORD: inject_missing_word,
    FinerClass.PUNCTUATION: inject_punctuation,
    FinerClass.GURUCANDALI: inject_gurucandali,
}
