"""Cleaning and tokenization of raw Bangla text.

Raw documents go through three stages: invisible space-variant code points are
normalized away, punctuation marks are split off as standalone tokens, and the
result is divided into sentences at the Bangla danda and the
interrogative/exclamative marks.  Everything downstream (error injection,
export, annotation) works on the resulting ``CleanSentence`` values.

Offsets are Unicode code points, never bytes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources as _importlib_resources
from pathlib import Path
from typing import Iterable, Sequence

# Space-variant code points that are replaced by a plain ASCII space.
SPACE_VARIANTS = (
    " ",  # no-break space
    " ",  # ogham space mark
    "᠎",  # mongolian vowel separator
    " ",  # en quad
    " ",  # hair space
    " ",  # narrow no-break space
    " ",  # medium mathematical space
    "　",  # ideographic space
)

# Zero-width non-joiner is dropped outright: it is invisible and produces
# duplicate word forms that defeat dictionary lookup.
ZWNJ = "‌"

REMOVED_CODE_POINTS = frozenset(SPACE_VARIANTS) | {ZWNJ}

# Bangla dependent vowel signs and virama; a well-formed token never starts
# with one of these (they attach to a preceding consonant).
DEPENDENT_SIGN_RANGE = (0x09BE, 0x09CC)
VIRAMA = "্"


def is_dependent_sign(ch: str) -> bool:
    # dependent vowel signs plus the virama; none may begin a token
    return DEPENDENT_SIGN_RANGE[0] <= ord(ch) <= DEPENDENT_SIGN_RANGE[1] or ch == VIRAMA


_SPACE_TABLE = {ord(c): " " for c in SPACE_VARIANTS}
_SPACE_TABLE[ord(ZWNJ)] = None
# ASCII control whitespace is folded into spaces as well so that multi-line
# documents tokenize cleanly.
for _c in "\t\n\r\x0b\x0c":
    _SPACE_TABLE[ord(_c)] = " "


def clean_unicode(text: str) -> str:
    """Normalize space-variant code points to ASCII spaces and drop ZWNJ.

    Runs of spaces collapse to one; leading and trailing spaces are stripped.
    Total function: any string in, normalized string out.
    """
    text = text.translate(_SPACE_TABLE)
    while "  " in text:
        text = text.replace("  ", " ")
    return text.strip(" ")


def _default_marks_path() -> Path:
    return Path(str(_importlib_resources.files("gecforge") / "resources" / "punctuation.txt"))


def load_punctuation(path: str | Path | None = None) -> tuple[str, ...]:
    """Load the punctuation inventory: one mark per line, longest first.

    Lines starting with ``#`` are comments.  The bundled inventory is used
    when no path is given.
    """
    p = Path(path) if path is not None else _default_marks_path()
    marks = []
    for line in p.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        marks.append(line)
    if not marks:
        raise ValueError(f"empty punctuation inventory: {p}")
    return tuple(marks)


_DEFAULT_MARKS: tuple[str, ...] | None = None


def default_marks() -> tuple[str, ...]:
    global _DEFAULT_MARKS
    if _DEFAULT_MARKS is None:
        _DEFAULT_MARKS = load_punctuation()
    return _DEFAULT_MARKS


def terminator_marks(marks: Sequence[str] | None = None) -> frozenset[str]:
    """Marks that end a sentence: the danda plus ?/!-initial marks."""
    marks = marks if marks is not None else default_marks()
    return frozenset(m for m in marks if m == "।" or m[0] in "?!")


def separate_punctuation(text: str, marks: Sequence[str] | None = None) -> str:
    """Surround every inventory punctuation mark with single spaces.

    Matching is longest-first in inventory order, so "!.." stays one mark
    rather than splitting into "!" + "..".  A lone hyphen is only treated as
    punctuation when it already touches a space (or a string edge) on at
    least one side; intra-word hyphens are left alone.
    """
    marks = marks if marks is not None else default_marks()
    # separator-adjacency for the hyphen rule: spaces, string edges, and any
    # character that belongs to an inventory mark (those become spaces here,
    # so counting them keeps the operation idempotent)
    mark_chars = set("".join(m for m in marks if m != "-"))
    out: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        matched = None
        for m in marks:
            if text.startswith(m, i):
                if m == "-":
                    prev_sep = i == 0 or text[i - 1] == " " or text[i - 1] in mark_chars
                    next_sep = i + 1 >= n or text[i + 1] == " " or text[i + 1] in mark_chars
                    if not (prev_sep or next_sep):
                        continue
                matched = m
                break
        if matched is None:
            out.append(text[i])
            i += 1
        else:
            out.append(f" {matched} ")
            i += len(matched)
    joined = "".join(out)
    while "  " in joined:
        joined = joined.replace("  ", " ")
    return joined.strip(" ")


@dataclass(frozen=True)
class RawDocument:
    """An uncleaned input text with a provenance label."""

    text: str
    source_id: str

    def __post_init__(self) -> None:
        if not self.source_id:
            raise ValueError("source_id must be nonempty")


@dataclass(frozen=True)
class Token:
    """One surface token with code-point offsets into its sentence."""

    surface: str
    start: int
    end: int
    is_punct: bool

    def __post_init__(self) -> None:
        if not self.start < self.end:
            raise ValueError(f"empty token span ({self.start}, {self.end})")


@dataclass(frozen=True)
class CleanSentence:
    """A normalized sentence whose tokens tile its non-space content."""

    text: str
    tokens: tuple[Token, ...]
    source_id: str

    @property
    def surfaces(self) -> tuple[str, ...]:
        return tuple(t.surface for t in self.tokens)

    def content_indices(self) -> list[int]:
        """Indices of non-punctuation tokens."""
        return [i for i, t in enumerate(self.tokens) if not t.is_punct]


def sentence_from_surfaces(
    surfaces: Sequence[str],
    source_id: str,
    marks: Sequence[str] | None = None,
) -> CleanSentence:
    """Build a CleanSentence from token surfaces (joined by single spaces)."""
    marks = marks if marks is not None else default_marks()
    mark_set = frozenset(marks)
    tokens = []
    pos = 0
    for s in surfaces:
        tokens.append(Token(s, pos, pos + len(s), s in mark_set))
        pos += len(s) + 1
    return CleanSentence(" ".join(surfaces), tuple(tokens), source_id)


def split_sentences(
    doc: RawDocument, marks: Sequence[str] | None = None
) -> list[CleanSentence]:
    """Clean a document and split it into tokenized sentences.

    The sentence boundary is a terminator token (danda, ?, ! or one of the
    !-initial multi-character marks); the terminator stays as the final token
    of its sentence.  Empty pieces are dropped.
    """
    marks = marks if marks is not None else default_marks()
    text = separate_punctuation(clean_unicode(doc.text), marks)
    if not text:
        return []
    terminators = terminator_marks(marks)
    sentences: list[CleanSentence] = []
    chunk: list[str] = []
    for surface in text.split(" "):
        chunk.append(surface)
        if surface in terminators:
            sentences.append(sentence_from_surfaces(chunk, doc.source_id, marks))
            chunk = []
    if chunk:
        sentences.append(sentence_from_surfaces(chunk, doc.source_id, marks))
    return sentences


def read_documents(
    path: str | Path, line_mode: bool = False, source_id: str | None = None
) -> list[RawDocument]:
    """Read UTF-8 text as one document per file, or one per line."""
    p = Path(path)
    label = source_id or p.stem
    raw = p.read_text(encoding="utf-8")
    if not line_mode:
        return [RawDocument(raw, label)]
    docs = []
    for i, line in enumerate(raw.splitlines()):
        if line.strip():
            docs.append(RawDocument(line, f"{label}:{i + 1}"))
    return docs


def load_sentences(
    path: str | Path,
    line_mode: bool = True,
    source_id: str | None = None,
    marks: Sequence[str] | None = None,
) -> list[CleanSentence]:
    """Read, clean and sentence-split a gold text file."""
    out: list[CleanSentence] = []
    for doc in read_documents(path, line_mode=line_mode, source_id=source_id):
        out.extend(split_sentences(doc, marks))
    return out
