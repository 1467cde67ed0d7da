import random

import pytest

from conftest import ScriptedRandom, make_sentence
from oracles import assert_sound

from gecforge.injectors import (
    CONFUSION_GROUPS,
    RULE_INJECTORS,
    UNIFORM_ALPHABET,
    HandcraftedRecord,
    InjectionOutcome,
    Skip,
    SkipReason,
    derive_seed,
    edit_distance,
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
    well_formed,
)
from gecforge.lexicon import VerbCell, default_paths
from gecforge.normalize import load_sentences
from gecforge.taxonomy import FinerClass

GOLD_PATH = default_paths()["word_list"].parent / "sample_gold.txt"


def scripted(*values):
    return ScriptedRandom(values)


def done(rng):
    assert rng.exhausted, "scripted draws left unconsumed"


# ------------------------------------------------------------ fixed points


def test_non_dictionary_fixed_point(lex):
    s = make_sentence("আমি কারখানায় কাজ করি।")
    rng = scripted(2, 1, "substitute", 2, "ব")
    out = inject_spelling_non_dictionary(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি কারখানায় কাব করি ।"
    assert out.correct_text == "আমি কারখানায় কাজ করি ।"
    assert out.finer is FinerClass.SPELLING_NON_DICTIONARY
    assert out.span == (2, 3)
    assert out.detail == {"original": "কাজ", "replacement": "কাব"}
    assert_sound(out, lex)


def test_dictionary_homonym_fixed_point(lex):
    s = make_sentence("আমি কাল বাড়ি যাব।")
    rng = scripted(2, "বারি")
    out = inject_spelling_dictionary(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি কাল বারি যাব ।"
    assert out.span == (2, 3)
    assert out.detail["mode"] == "homonym"
    assert_sound(out, lex)


def test_dictionary_edit_fallback_fixed_point(lex):
    s = make_sentence("আমি কাল বাড়ি যাব।")
    rng = scripted(2, 1, "substitute", 0, "শ")
    out = inject_spelling_dictionary(s, lex, rng, mode="edit")
    done(rng)
    assert out.wrong_text == "আমি কাল শাড়ি যাব ।"
    assert out.detail["mode"] == "edit"
    assert_sound(out, lex)


def test_tense_fixed_point(lex):
    s = make_sentence("আমি গতকাল পড়াশোনা করেছিলাম।")
    rng = scripted(3, VerbCell("কর্", "past", "1st"), "future", "করব")
    out = inject_tense(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি গতকাল পড়াশোনা করব ।"
    assert out.span == (3, 4)
    assert_sound(out, lex)


def test_person_fixed_point(lex):
    s = make_sentence("আমি কারখানায় কাজ করি।")
    rng = scripted(3, VerbCell("কর্", "present", "1st"), "3rd", "করে")
    out = inject_person(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি কারখানায় কাজ করে ।"
    assert_sound(out, lex)


def test_number_fixed_point(lex):
    s = make_sentence("আমরা এখানে চারজন থাকি।")
    rng = scripted(0)
    out = inject_number(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি এখানে চারজন থাকি ।"
    assert out.span == (0, 1)
    assert_sound(out, lex)


def test_gender_fixed_point(lex):
    s = make_sentence("উত্তম একজন অসাধারণ অভিনেতা।")
    rng = scripted(3)
    out = inject_gender(s, lex, rng)
    done(rng)
    assert out.wrong_text == "উত্তম একজন অসাধারণ অভিনেত্রী ।"
    assert_sound(out, lex)


def test_gender_feminine_gold_skips(lex):
    s = make_sentence("সুচিত্রা একজন অসাধারণ অভিনেত্রী।")
    out = inject_gender(s, lex, scripted())
    assert out == Skip(SkipReason.WOULD_BE_VALID)


def test_gender_feminine_source_opt_in(lex):
    s = make_sentence("সুচিত্রা একজন অসাধারণ অভিনেত্রী।")
    rng = scripted(3)
    out = inject_gender(s, lex, rng, allow_feminine_source=True)
    done(rng)
    assert out.wrong_text == "সুচিত্রা একজন অসাধারণ অভিনেতা ।"


def test_pos_fixed_point(lex):
    s = make_sentence("হিমালয়ের সৌন্দর্য অবিস্মরণীয়।")
    rng = scripted(1)
    out = inject_pos(s, lex, rng)
    done(rng)
    assert out.wrong_text == "হিমালয়ের সুন্দর অবিস্মরণীয় ।"
    assert_sound(out, lex)


def test_missing_verb_fixed_point(lex):
    s = make_sentence("আমি কাল বাড়ি যাব।")
    rng = scripted(3)
    out = inject_missing_word(s, lex, rng)
    done(rng)
    assert out.wrong_text == "আমি কাল বাড়ি ।"
    assert out.span == (3, 3)
    assert out.detail["mode"] == "verb"
    assert_sound(out, lex)


def test_missing_paired_noun_fixed_point(lex):
    s = make_sentence("উত্তম একজন অসাধারণ অভিনেতা।")
    rng = scripted(3)
    out = inject_missing_word(s, lex, rng)
    done(rng)
    assert out.wrong_text == "উত্তম একজন অসাধারণ ।"
    assert out.detail["mode"] == "paired_noun"
    assert_sound(out, lex)


def test_punctuation_wrong_mark_fixed_point(lex):
    s = make_sentence("আমি গতকাল পড়াশোনা করেছিলাম।")
    rng = scripted("wrong_mark", "?")
    out = inject_punctuation(s, rng)
    done(rng)
    assert out.wrong_text == "আমি গতকাল পড়াশোনা করেছিলাম ?"
    assert out.span == (4, 5)
    assert_sound(out, lex)


def test_punctuation_missing_mark_fixed_point(lex):
    s = make_sentence("আমি গতকাল পড়াশোনা করেছিলাম।")
    rng = scripted("missing_mark", 4)
    out = inject_punctuation(s, rng)
    done(rng)
    assert out.wrong_text == "আমি গতকাল পড়াশোনা করেছিলাম"
    assert out.span == (4, 4)
    assert_sound(out, lex)


def test_punctuation_spurious_mark(lex):
    s = make_sentence("আমি গতকাল পড়াশোনা করেছিলাম।")
    rng = scripted("spurious_mark", 2, ",")
    out = inject_punctuation(s, rng)
    done(rng)
    assert out.wrong_text == "আমি গতকাল , পড়াশোনা করেছিলাম ।"
    assert out.span == (2, 3)
    assert_sound(out, lex)


def test_gurucandali_fixed_point(lex):
    s = make_sentence("নন্দবাবু এটা লক্ষ্য করেছেন।")
    rng = scripted(1, [1])
    out = inject_gurucandali(s, lex, rng)
    done(rng)
    assert out.wrong_text == "নন্দবাবু ইহা লক্ষ্য করেছেন ।"
    assert out.span == (1, 2)
    assert out.detail["source_register"] == "calita"
    assert_sound(out, lex)


def test_handcrafted_case_fixed_point(lex):
    outcomes, rejected = ingest_handcrafted(
        [("আমি রান্নাঘরকে ভাত খাই।", "আমি রান্নাঘরে ভাত খাই।", FinerClass.CASE)]
    )
    assert not rejected
    (out,) = outcomes
    assert out.wrong_text == "আমি রান্নাঘরকে ভাত খাই ।"
    assert out.correct_text == "আমি রান্নাঘরে ভাত খাই ।"
    assert out.span == (1, 2)
    assert out.needs_validation
    assert_sound(out, lex)


def test_handcrafted_semantic_fixed_point(lex):
    outcomes, rejected = ingest_handcrafted(
        [
            HandcraftedRecord(
                "মানস আকাশ খেতে ভালোবাসে।",
                "মানস মাছ খেতে ভালোবাসে।",
                FinerClass.SEMANTIC,
                approved=True,
            )
        ]
    )
    assert not rejected
    (out,) = outcomes
    assert out.wrong_text == "মানস আকাশ খেতে ভালোবাসে ।"
    assert out.span == (1, 2)
    assert not out.needs_validation
    assert_sound(out, lex)


# ------------------------------------------------------------ skip behavior


def test_skips_on_empty_targets(lex):
    punct_only = make_sentence("।")
    assert inject_spelling_non_dictionary(punct_only, lex, scripted()) == Skip(
        SkipReason.NO_TARGET_WORD
    )
    assert inject_tense(punct_only, lex, scripted()) == Skip(SkipReason.NO_TARGET_WORD)
    assert inject_number(punct_only, lex, scripted()) == Skip(SkipReason.NO_TARGET_WORD)
    assert inject_gender(punct_only, lex, scripted()) == Skip(SkipReason.NO_TARGET_WORD)
    assert inject_pos(punct_only, lex, scripted()) == Skip(SkipReason.NO_TARGET_WORD)
    assert inject_gurucandali(punct_only, lex, scripted()) == Skip(
        SkipReason.NO_TARGET_WORD
    )


def test_missing_word_needs_three_content_tokens(lex):
    s = make_sentence("আমি যাব।")
    assert inject_missing_word(s, lex, scripted()) == Skip(
        SkipReason.DEGENERATE_SENTENCE
    )


def test_missing_word_random_mode_flagged(lex):
    s = make_sentence("নন্দবাবু হিমালয়ের সৌন্দর্য দারুণ")
    out = inject_missing_word(s, lex, scripted(1), random_mode=True)
    assert out.detail["mode"] == "random"
    assert out.needs_validation
    assert_sound(out, lex)


def test_gurucandali_mixed_registers_skip(lex):
    s = make_sentence("নন্দবাবু ইহা লক্ষ্য করেছেন।")
    assert inject_gurucandali(s, lex, scripted()) == Skip(SkipReason.WOULD_BE_VALID)


def test_gurucandali_single_register_token_skip(lex):
    s = make_sentence("নন্দবাবু এটা ভালো")
    assert inject_gurucandali(s, lex, scripted()) == Skip(SkipReason.NO_TARGET_WORD)


def test_non_dictionary_exhausted_retries(lex):
    s = make_sentence("আমি কাজ করি।")

    class AlwaysSame:
        # keeps proposing the original word's dictionary neighbour
        def choice(self, seq):
            options = list(seq)
            if "substitute" in options:
                return "substitute"
            if options and isinstance(options[0], int):
                return options[0]
            if "জ" in options:
                return "জ"
            return options[0]

        def randint(self, a, b):
            return a

    # substituting index 0 of the first word with its own first letter gives
    # the word back, which is rejected every attempt
    result = inject_spelling_non_dictionary(s, lex, AlwaysSame(), retries=3)
    assert result == Skip(SkipReason.EXHAUSTED_RETRIES)


def test_punctuation_no_targets(lex):
    s = make_sentence("আমি")
    assert inject_punctuation(s, scripted()) == Skip(SkipReason.NO_TARGET_WORD)


def test_dictionary_homonym_mode_requires_pair(lex):
    s = make_sentence("আমি গতকাল পড়াশোনা করেছিলাম।")
    result = inject_spelling_dictionary(s, lex, scripted(), mode="homonym")
    assert result == Skip(SkipReason.NO_TARGET_WORD)


def test_dictionary_unknown_mode_rejected(lex):
    s = make_sentence("আমি কাল বাড়ি যাব।")
    with pytest.raises(ValueError):
        inject_spelling_dictionary(s, lex, scripted(), mode="sideways")


# ------------------------------------------------------------ rule-based case


def test_case_rule_always_needs_validation(lex):
    s = make_sentence("আমি রান্নাঘরে ভাত খাই।")
    rng = random.Random(5)
    result = inject_case_rule(s, lex, rng)
    assert isinstance(result, InjectionOutcome)
    assert result.finer is FinerClass.CASE
    assert result.needs_validation


# ------------------------------------------------------------ handcrafted ingest


def test_ingest_rejects_equal_and_bad_labels():
    outcomes, rejected = ingest_handcrafted(
        [
            ("আমি যাব।", "আমি যাব।", FinerClass.CASE),
            ("আমি  যাব।", "আমি যাব।", FinerClass.CASE),
            ("ভুল বাক্য।", "ঠিক বাক্য।", FinerClass.CORRECT),
            ("", "আমি যাব।", FinerClass.SEMANTIC),
        ]
    )
    assert outcomes == []
    reasons = {(r.index, r.reason) for r in rejected}
    assert reasons == {
        (0, "equal_texts"),
        (1, "equal_texts"),
        (2, "invalid_label"),
        (3, "empty_text"),
    }


def test_ingest_approvals_by_index():
    outcomes, rejected = ingest_handcrafted(
        [
            ("ভুল বাক্য।", "ঠিক বাক্য।", FinerClass.SEMANTIC),
            ("আরেকটা ভুল।", "আরেকটা ঠিক।", FinerClass.SEMANTIC),
        ],
        approvals={1},
    )
    assert not rejected
    assert outcomes[0].needs_validation and not outcomes[1].needs_validation


def test_ingest_multi_token_span():
    outcomes, _ = ingest_handcrafted(
        [("ক খ গ ঘ ঙ", "ক ছ জ ঘ ঙ", FinerClass.SEMANTIC)]
    )
    assert outcomes[0].span == (1, 3)


def test_ingest_length_change_span():
    outcomes, _ = ingest_handcrafted(
        [("আমি ভাত খাই।", "আমি গরম ভাত খাই।", FinerClass.SEMANTIC)]
    )
    assert outcomes[0].span == (1, 1)


def test_bundled_handcrafted_files_ingest_cleanly(lex):
    root = default_paths()["word_list"].parent
    for name, label, count in [
        ("handcrafted_case.tsv", FinerClass.CASE, 30),
        ("handcrafted_semantic.tsv", FinerClass.SEMANTIC, 60),
    ]:
        records = load_handcrafted(root / name)
        assert len(records) == count
        assert all(r.finer is label for r in records)
        outcomes, rejected = ingest_handcrafted(records)
        assert not rejected
        assert len(outcomes) == count
        for out in outcomes:
            assert_sound(out, lex)


def test_load_handcrafted_bad_shape(tmp_path):
    p = tmp_path / "bad.tsv"
    p.write_text("one\ttwo\n", encoding="utf-8")
    with pytest.raises(ValueError):
        load_handcrafted(p)


# ------------------------------------------------------------ primitives


def test_edit_distance_examples():
    assert edit_distance("কাজ", "কাব") == 1
    assert edit_distance("", "কাজ") == 3
    assert edit_distance("কাজ", "কাজ") == 0
    assert edit_distance("বাড়ি", "শাড়ি") == 1
    assert edit_distance("abc", "acd") == 2


def test_well_formed_rules():
    assert well_formed("কাজ")
    assert well_formed("ক্লান্ত")
    assert not well_formed("")
    assert not well_formed("াকাজ")
    assert not well_formed("্কাজ")
    assert not well_formed("কাাজ")
    assert not well_formed("কি্")


def test_derive_seed_stable_and_distinct():
    a = derive_seed(7, "tense", 0)
    assert a == derive_seed(7, "tense", 0)
    assert 0 <= a < 2**64
    assert a != derive_seed(7, "tense", 1)
    assert a != derive_seed(8, "tense", 0)
    assert rng_for(7, "x").random() == rng_for(7, "x").random()


def test_alphabet_is_single_code_points():
    assert all(len(c) == 1 for c in UNIFORM_ALPHABET)
    for group in CONFUSION_GROUPS:
        assert all(len(c) == 1 for c in group)


# ------------------------------------------------------------ determinism


def test_injectors_deterministic_per_seed(lex):
    sentences = load_sentences(GOLD_PATH)[:40]
    for finer, injector in RULE_INJECTORS.items():
        for i, s in enumerate(sentences):
            def run(seed):
                rng = rng_for(seed, finer.value, i)
                if finer is FinerClass.PUNCTUATION:
                    return injector(s, rng)
                return injector(s, lex, rng)

            assert run(11) == run(11)


# ------------------------------------------------------------ soundness sweep


def test_soundness_over_gold_corpus(lex):
    sentences = load_sentences(GOLD_PATH)[:500]
    produced = {finer: 0 for finer in RULE_INJECTORS}
    for finer, injector in RULE_INJECTORS.items():
        for i, s in enumerate(sentences):
            rng = rng_for(13, finer.value, i)
            if finer is FinerClass.PUNCTUATION:
                result = injector(s, rng)
            else:
                result = injector(s, lex, rng)
            if isinstance(result, Skip):
                continue
            assert result.finer is finer
            assert_sound(result, lex)
            produced[finer] += 1
    # every class must actually fire on the bundled gold corpus
    for finer, n in produced.items():
        assert n >= 20, f"{finer.value}: only {n} outcomes in 500 sentences"


# ------------------------------------------------------------ fuzz


def _fuzz_pool(lex):
    words = sorted(lex.word_list.words)[:300]
    junk = ["ক", "কাজজজ", "ািু", "্্", "x", "9", "---", "।।", "যাব্"]
    marks = ["।", "?", "!", ",", ";", "-", "...", "!..", "!|", "!-"]
    return words + junk + marks


def test_fuzz_never_malformed(lex):
    from gecforge.normalize import sentence_from_surfaces

    pool = _fuzz_pool(lex)
    injectors = list(RULE_INJECTORS.items())
    rng = random.Random(2024)
    for i in range(10_000):
        n = rng.randint(1, 8)
        surfaces = [rng.choice(pool) for _ in range(n)]
        s = sentence_from_surfaces(surfaces, f"fuzz:{i}")
        finer, injector = injectors[i % len(injectors)]
        draw = random.Random(rng.getrandbits(32))
        if finer is FinerClass.PUNCTUATION:
            result = injector(s, draw)
        else:
            result = injector(s, lex, draw)
        if isinstance(result, Skip):
            assert result.reason in SkipReason
        else:
            assert isinstance(result, InjectionOutcome)
            assert result.finer is finer
