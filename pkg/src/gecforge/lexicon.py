"""Lexical resources that drive error injection.

Seven resources are loaded from UTF-8 TSV files (lines starting with ``#``
are comments): a dictionary wordlist, homonym pairs, a verb conjugation
table, singular/plural pronoun pairs, masculine/feminine pairs,
noun/adjective pairs and the sadhu/calita register map.  Loading is atomic:
either every resource validates and the whole bundle is usable, or an error
describing the offending file and line is raised.

The bundle is immutable once loaded and safe to share across workers.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources as _importlib_resources
from pathlib import Path
from typing import Iterable, NamedTuple

TENSES = ("past", "present", "future")
PERSONS = ("1st", "2nd", "3rd")

SADHU = "sadhu"
CALITA = "calita"


class LexiconError(Exception):
    """Base class for resource loading failures."""


class MalformedRow(LexiconError):
    def __init__(self, file: str, line: int, message: str):
        super().__init__(f"{file}:{line}: {message}")
        self.file = file
        self.line = line


class DuplicateKey(LexiconError):
    def __init__(self, file: str, key: str):
        super().__init__(f"{file}: duplicate entry {key!r}")
        self.file = file
        self.key = key


class EmptyResource(LexiconError):
    def __init__(self, file: str):
        super().__init__(f"{file}: no entries")
        self.file = file


class ConsistencyError(LexiconError):
    """Cross-resource invariant violation (bundle is rejected as a whole)."""


def _rows(path: Path, n_fields: int, min_fields: int | None = None):
    """Yield (line_no, fields) for every data row, checking the column count."""
    want_min = min_fields if min_fields is not None else n_fields
    for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if not (want_min <= len(fields) <= n_fields) or any(not f.strip() for f in fields):
            raise MalformedRow(path.name, line_no, f"expected {want_min}..{n_fields} tab-separated fields, got {line!r}")
        yield line_no, [f.strip() for f in fields]


@dataclass(frozen=True)
class WordList:
    words: frozenset[str]

    def __contains__(self, word: str) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)

    @classmethod
    def load(cls, path: Path) -> "WordList":
        words = set()
        for line_no, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
            w = raw.strip()
            if not w or w.startswith("#"):
                continue
            if " " in w or "\t" in w:
                raise MalformedRow(path.name, line_no, f"wordlist entries may not contain spaces: {w!r}")
            words.add(w)
        if not words:
            raise EmptyResource(path.name)
        return cls(frozenset(words))


@dataclass(frozen=True)
class HomonymPairs:
    pairs: frozenset[frozenset[str]]
    _index: dict[str, frozenset[str]]

    def __len__(self) -> int:
        return len(self.pairs)

    def partners(self, word: str) -> frozenset[str]:
        return self._index.get(word, frozenset())

    def words(self) -> frozenset[str]:
        return frozenset(self._index)

    @classmethod
    def load(cls, path: Path) -> "HomonymPairs":
        # Rows may list >2 similar-sounding words; a k-word group contributes
        # all of its word pairs.
        pairs: set[frozenset[str]] = set()
        for line_no, fields in _rows(path, n_fields=8, min_fields=2):
            if len(set(fields)) != len(fields):
                raise MalformedRow(path.name, line_no, "repeated word within a homonym group")
            for i, a in enumerate(fields):
                for b in fields[i + 1:]:
                    pairs.add(frozenset((a, b)))
        if not pairs:
            raise EmptyResource(path.name)
        index: dict[str, set[str]] = {}
        for pair in pairs:
            a, b = sorted(pair)
            index.setdefault(a, set()).add(b)
            index.setdefault(b, set()).add(a)
        return cls(frozenset(pairs), {w: frozenset(p) for w, p in index.items()})


class VerbCell(NamedTuple):
    lemma: str
    tense: str
    person: str


@dataclass(frozen=True)
class VerbParadigm:
    entries: dict[VerbCell, tuple[str, ...]]
    reverse: dict[str, frozenset[VerbCell]]

    @property
    def lemmas(self) -> frozenset[str]:
        return frozenset(c.lemma for c in self.entries)

    @property
    def n_forms(self) -> int:
        return sum(len(v) for v in self.entries.values())

    def forms(self, lemma: str, tense: str, person: str) -> tuple[str, ...]:
        return self.entries.get(VerbCell(lemma, tense, person), ())

    def cells_of(self, surface: str) -> frozenset[VerbCell]:
        return self.reverse.get(surface, frozenset())

    @classmethod
    def load(cls, path: Path) -> "VerbParadigm":
        entries: dict[VerbCell, list[str]] = {}
        seen: set[tuple[str, str, str, str]] = set()
        for line_no, (lemma, tense, person, form) in _rows(path, n_fields=4):
            if tense not in TENSES:
                raise MalformedRow(path.name, line_no, f"tense must be one of {TENSES}, got {tense!r}")
            if person not in PERSONS:
                raise MalformedRow(path.name, line_no, f"person must be one of {PERSONS}, got {person!r}")
            row = (lemma, tense, person, form)
            if row in seen:
                raise DuplicateKey(path.name, f"{lemma}/{tense}/{person}/{form}")
            seen.add(row)
            entries.setdefault(VerbCell(lemma, tense, person), []).append(form)
        if not entries:
            raise EmptyResource(path.name)
        reverse: dict[str, set[VerbCell]] = {}
        for cell, forms in entries.items():
            for f in forms:
                reverse.setdefault(f, set()).add(cell)
        return cls(
            {c: tuple(v) for c, v in entries.items()},
            {f: frozenset(cs) for f, cs in reverse.items()},
        )


@dataclass(frozen=True)
class PairMap:
    """A bijection between two disjoint columns of word forms."""

    side_a: str
    side_b: str
    a_to_b: dict[str, str]
    b_to_a: dict[str, str]

    def __len__(self) -> int:
        return len(self.a_to_b)

    def __contains__(self, word: str) -> bool:
        return word in self.a_to_b or word in self.b_to_a

    def side(self, word: str) -> str | None:
        if word in self.a_to_b:
            return self.side_a
        if word in self.b_to_a:
            return self.side_b
        return None

    def counterpart(self, word: str) -> str | None:
        return self.a_to_b.get(word) or self.b_to_a.get(word)

    def words(self) -> frozenset[str]:
        return frozenset(self.a_to_b) | frozenset(self.b_to_a)

    @classmethod
    def load(cls, path: Path, side_a: str, side_b: str) -> "PairMap":
        a_to_b: dict[str, str] = {}
        b_to_a: dict[str, str] = {}
        for line_no, (a, b) in _rows(path, n_fields=2):
            if a == b:
                raise MalformedRow(path.name, line_no, f"self-pair {a!r}")
            if a in a_to_b or a in b_to_a:
                raise DuplicateKey(path.name, a)
            if b in b_to_a or b in a_to_b:
                raise DuplicateKey(path.name, b)
            a_to_b[a] = b
            b_to_a[b] = a
        if not a_to_b:
            raise EmptyResource(path.name)
        return cls(side_a, side_b, a_to_b, b_to_a)


@dataclass(frozen=True)
class RegisterMap:
    """Sadhu <-> calita form pairs for verbs and pronouns."""

    verb_forms: PairMap
    pronoun_forms: PairMap

    def register_of(self, word: str) -> str | None:
        for pm in (self.verb_forms, self.pronoun_forms):
            side = pm.side(word)
            if side is not None:
                return side
        return None

    def counterpart(self, word: str) -> str | None:
        return self.verb_forms.counterpart(word) or self.pronoun_forms.counterpart(word)

    def words(self) -> frozenset[str]:
        return self.verb_forms.words() | self.pronoun_forms.words()

    @classmethod
    def load(cls, path: Path) -> "RegisterMap":
        rows = {"verb": [], "pronoun": []}
        for line_no, (kind, sadhu, calita) in _rows(path, n_fields=3):
            if kind not in rows:
                raise MalformedRow(path.name, line_no, f"kind must be verb or pronoun, got {kind!r}")
            rows[kind].append((line_no, sadhu, calita))

        def build(kind: str) -> PairMap:
            a_to_b: dict[str, str] = {}
            b_to_a: dict[str, str] = {}
            for line_no, sadhu, calita in rows[kind]:
                if sadhu == calita:
                    raise MalformedRow(path.name, line_no, f"form {sadhu!r} cannot belong to both registers")
                if sadhu in a_to_b or sadhu in b_to_a:
                    raise DuplicateKey(path.name, sadhu)
                if calita in b_to_a or calita in a_to_b:
                    raise DuplicateKey(path.name, calita)
                a_to_b[sadhu] = calita
                b_to_a[calita] = sadhu
            if not a_to_b:
                raise EmptyResource(path.name)
            return PairMap(SADHU, CALITA, a_to_b, b_to_a)

        vm, pm = build("verb"), build("pronoun")
        overlap = vm.words() & pm.words()
        if overlap:
            raise DuplicateKey(path.name, sorted(overlap)[0])
        return cls(vm, pm)


RESOURCE_NAMES = (
    "word_list",
    "homonyms",
    "verbs",
    "pronoun_numbers",
    "genders",
    "noun_adjectives",
    "registers",
)

_RESOURCE_FILES = {
    "word_list": "wordlist.txt",
    "homonyms": "homonyms.tsv",
    "verbs": "verbs.tsv",
    "pronoun_numbers": "pronoun_numbers.tsv",
    "genders": "genders.tsv",
    "noun_adjectives": "noun_adjectives.tsv",
    "registers": "registers.tsv",
}


def default_paths() -> dict[str, Path]:
    """Paths of the bundled sample resources."""
    root = Path(str(_importlib_resources.files("gecforge") / "resources"))
    return {name: root / fname for name, fname in _RESOURCE_FILES.items()}


@dataclass(frozen=True)
class LexiconBundle:
    word_list: WordList
    homonyms: HomonymPairs
    verb_paradigm: VerbParadigm
    pronoun_numbers: PairMap
    genders: PairMap
    noun_adjectives: PairMap
    registers: RegisterMap
    pronoun_frozen_list: frozenset[str]

    def is_dictionary_word(self, surface: str) -> bool:
        return surface in self.word_list

    def find_verb(self, surface: str) -> frozenset[VerbCell]:
        return self.verb_paradigm.cells_of(surface)

    def counts(self) -> dict[str, int]:
        return {
            "words": len(self.word_list),
            "homonyms": len(self.homonyms),
            "verb_lemmas": len(self.verb_paradigm.lemmas),
            "verb_forms": self.verb_paradigm.n_forms,
            "pronoun_pairs": len(self.pronoun_numbers),
            "gender_pairs": len(self.genders),
            "noun_adj_pairs": len(self.noun_adjectives),
            "register_verb_pairs": len(self.registers.verb_forms),
            "register_pronoun_pairs": len(self.registers.pronoun_forms),
        }


def load_bundle(paths: dict[str, str | Path] | None = None) -> LexiconBundle:
    """Load and validate all resources; returns the indexed bundle.

    ``paths`` maps resource names (see ``RESOURCE_NAMES``) to files; missing
    entries fall back to the bundled sample resources.
    """
    resolved = dict(default_paths())
    for name, p in (paths or {}).items():
        if name not in _RESOURCE_FILES:
            raise KeyError(f"unknown lexicon resource {name!r}")
        resolved[name] = Path(p)

    word_list = WordList.load(resolved["word_list"])
    homonyms = HomonymPairs.load(resolved["homonyms"])
    verbs = VerbParadigm.load(resolved["verbs"])
    pronoun_numbers = PairMap.load(resolved["pronoun_numbers"], "singular", "plural")
    genders = PairMap.load(resolved["genders"], "masculine", "feminine")
    noun_adjectives = PairMap.load(resolved["noun_adjectives"], "noun", "adjective")
    registers = RegisterMap.load(resolved["registers"])

    missing = sorted(w for w in homonyms.words() if w not in word_list)
    if missing:
        raise ConsistencyError(
            f"{resolved['homonyms'].name}: homonym words missing from the wordlist: "
            + ", ".join(missing[:5])
            + ("..." if len(missing) > 5 else "")
        )

    frozen = pronoun_numbers.words() | registers.pronoun_forms.words()
    return LexiconBundle(
        word_list=word_list,
        homonyms=homonyms,
        verb_paradigm=verbs,
        pronoun_numbers=pronoun_numbers,
        genders=genders,
        noun_adjectives=noun_adjectives,
        registers=registers,
        pronoun_frozen_list=frozenset(frozen),
    )
