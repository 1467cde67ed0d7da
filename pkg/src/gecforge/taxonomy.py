"""Error-class taxonomy: 12 finer error classes plus Correct, grouped into 5
broad classes plus Correct, with projections for the three classification
granularities (binary / broad / finer).

Label identifiers are stable ASCII snake_case strings; they are what every
file format and API payload carries.  Display names are for UIs only.
"""
from __future__ import annotations

import enum


class FinerClass(enum.Enum):
    SPELLING_NON_DICTIONARY = "spelling_non_dictionary"
    SPELLING_DICTIONARY = "spelling_dictionary"
    TENSE = "tense"
    PERSON = "person"
    NUMBER = "number"
    GENDER = "gender"
    CASE = "case"
    PARTS_OF_SPEECH = "pos"
    MISSING_WORD = "missing_word"
    GURUCANDALI = "gurucandali"
    PUNCTUATION = "punctuation"
    SEMANTIC = "semantic"
    CORRECT = "correct"

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_label(cls, label: str) -> "FinerClass":
        try:
            return cls(label)
        except ValueError:
            raise KeyError(f"unknown finer class label: {label!r}") from None


class BroadClass(enum.Enum):
    SPELLING = "spelling"
    WORD = "word"
    GURUCANDALI = "gurucandali"
    PUNCTUATION = "punctuation"
    SEMANTIC = "semantic"
    CORRECT = "correct"

    @property
    def label(self) -> str:
        return self.value

    @classmethod
    def from_label(cls, label: str) -> "BroadClass":
        try:
            return cls(label)
        except ValueError:
            raise KeyError(f"unknown broad class label: {label!r}") from None


class TaskLevel(enum.Enum):
    BINARY = "binary"
    BROAD = "broad"
    FINER = "finer"

    @classmethod
    def from_label(cls, label: str) -> "TaskLevel":
        try:
            return cls(label)
        except ValueError:
            raise KeyError(f"unknown task level: {label!r}") from None


ERROR_CLASSES: tuple[FinerClass, ...] = tuple(
    c for c in FinerClass if c is not FinerClass.CORRECT
)

BINARY_CORRECT = "correct"
BINARY_WRONG = "wrong"
BINARY_LABELS: tuple[str, str] = (BINARY_CORRECT, BINARY_WRONG)
BROAD_LABELS: tuple[str, ...] = tuple(c.value for c in BroadClass)
FINER_LABELS: tuple[str, ...] = tuple(c.value for c in FinerClass)

_BROAD_OF: dict[FinerClass, BroadClass] = {
    FinerClass.SPELLING_NON_DICTIONARY: BroadClass.SPELLING,
    FinerClass.SPELLING_DICTIONARY: BroadClass.SPELLING,
    FinerClass.TENSE: BroadClass.WORD,
    FinerClass.PERSON: BroadClass.WORD,
    FinerClass.NUMBER: BroadClass.WORD,
    FinerClass.GENDER: BroadClass.WORD,
    FinerClass.CASE: BroadClass.WORD,
    FinerClass.PARTS_OF_SPEECH: BroadClass.WORD,
    FinerClass.MISSING_WORD: BroadClass.WORD,
    FinerClass.GURUCANDALI: BroadClass.GURUCANDALI,
    FinerClass.PUNCTUATION: BroadClass.PUNCTUATION,
    FinerClass.SEMANTIC: BroadClass.SEMANTIC,
    FinerClass.CORRECT: BroadClass.CORRECT,
}

DISPLAY_NAMES: dict[FinerClass, str] = {
    FinerClass.SPELLING_NON_DICTIONARY: "Spelling: non-dictionary word",
    FinerClass.SPELLING_DICTIONARY: "Spelling: wrong dictionary word",
    FinerClass.TENSE: "Wrong tense",
    FinerClass.PERSON: "Wrong person",
    FinerClass.NUMBER: "Wrong number (singular/plural)",
    FinerClass.GENDER: "Wrong gender form",
    FinerClass.CASE: "Wrong case ending",
    FinerClass.PARTS_OF_SPEECH: "Wrong part of speech",
    FinerClass.MISSING_WORD: "Missing word",
    FinerClass.GURUCANDALI: "Mixed language registers (gurucandali dosa)",
    FinerClass.PUNCTUATION: "Punctuation error",
    FinerClass.SEMANTIC: "Semantically impossible",
    FinerClass.CORRECT: "Correct sentence",
}


def broad_of(finer: FinerClass) -> BroadClass:
    """Collapse a finer class to its broad class."""
    return _BROAD_OF[finer]


def project(finer: FinerClass, level: TaskLevel) -> str:
    """Project a finer class to its label string at the given task level."""
    if level is TaskLevel.BINARY:
        return BINARY_CORRECT if finer is FinerClass.CORRECT else BINARY_WRONG
    if level is TaskLevel.BROAD:
        return broad_of(finer).label
    return finer.label


def labels_for_level(level: TaskLevel) -> tuple[str, ...]:
    """All valid label strings at a task level."""
    if level is TaskLevel.BINARY:
        return BINARY_LABELS
    if level is TaskLevel.BROAD:
        return tuple(c.value for c in BroadClass)
    return tuple(c.value for c in FinerClass)
