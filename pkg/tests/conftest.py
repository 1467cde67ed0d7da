import pytest

from gecforge.lexicon import load_bundle
from gecforge.normalize import clean_unicode, sentence_from_surfaces, separate_punctuation


@pytest.fixture(scope="session")
def lex():
    return load_bundle()


def make_sentence(text, source_id="test"):
    spaced = separate_punctuation(clean_unicode(text))
    return sentence_from_surfaces(spaced.split(" "), source_id)


class ScriptedRandom:
    """Random-source double that replays a fixed sequence of draw results.

    Each scripted value is validated against the legal range of the draw it
    answers, so a change in an injector's draw order fails loudly instead of
    silently producing a different sentence.
    """

    def __init__(self, script):
        self._script = list(script)
        self._pos = 0

    def _next(self, kind):
        if self._pos >= len(self._script):
            raise AssertionError(f"script exhausted at draw {self._pos} ({kind})")
        value = self._script[self._pos]
        self._pos += 1
        return value

    def choice(self, seq):
        options = list(seq)
        value = self._next("choice")
        assert value in options, f"scripted {value!r} not in {options!r}"
        return value

    def randint(self, a, b):
        value = self._next("randint")
        assert a <= value <= b, f"scripted {value!r} outside [{a}, {b}]"
        return value

    def sample(self, population, k):
        options = list(population)
        value = self._next("sample")
        assert len(value) == k and all(v in options for v in value)
        return list(value)

    @property
    def exhausted(self):
        return self._pos == len(self._script)
