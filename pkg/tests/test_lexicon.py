"""Lexicon loading, lookup, word sets, and transcription checksums."""

import pytest

from tokipona.lexicon import (
    EXPECTED_CHOSEN_COUNTS,
    EXPECTED_TAG_INCIDENCE,
    LexiconError,
    PosTag,
    PREPOSITIONS,
    PREVERBS,
    PURE_PARTICLES,
    SOLE_PREPOSITIONS,
    choose_tag,
    load_lexicon,
)


def test_counts(lexicon):
    assert len(lexicon) == 124
    assert len(lexicon.distinct_entries()) == 120
    assert len(lexicon.content_words()) == 107


def test_tag_histograms(lexicon):
    assert lexicon.tag_incidence() == EXPECTED_TAG_INCIDENCE
    assert lexicon.chosen_counts() == EXPECTED_CHOSEN_COUNTS
    assert sum(lexicon.tag_incidence().values()) == 140
    assert sum(lexicon.chosen_counts().values()) == 120


def test_chosen_histogram_values(lexicon):
    chosen = {t.value: c for t, c in lexicon.chosen_counts().items()}
    assert chosen == {
        "NOUN": 49, "ADJECTIVE": 34, "VERB": 13, "PARTICLE": 12,
        "PRE": 6, "PREPOSITION": 5, "NUMBER": 1,
    }


def test_lookup(lexicon):
    wile = lexicon.lookup("wile")
    assert wile is not None and PosTag.PRE in wile.tags
    assert wile.tags == (PosTag.PRE,)  # wile is nothing but a pre-verb
    assert lexicon.lookup("xyz") is None
    assert lexicon.lookup("Pije") is None  # proper nouns never match
    assert lexicon.lookup("Toki") is None

    from tokipona.phonotactics import syllabify
    assert len(syllabify(lexicon.lookup("toki").surface)) == 2


def test_content_words(lexicon):
    surfaces = {e.surface for e in lexicon.content_words()}
    assert "li" not in surfaces
    assert "kepeken" not in surfaces
    assert "tawa" in surfaces  # carries a non-preposition tag
    assert "sama" in surfaces
    assert "wile" in surfaces
    assert "kin" not in surfaces  # synonyms collapse onto their primary
    assert len(surfaces) == 107


def test_fixed_sets(lexicon):
    pure = {e.surface for e in lexicon if set(e.tags) == {PosTag.PARTICLE}}
    assert pure == PURE_PARTICLES == {
        "li", "e", "la", "pi", "a", "o", "anu", "en", "seme", "mu"
    }
    soleprep = {e.surface for e in lexicon if set(e.tags) == {PosTag.PREPOSITION}}
    assert soleprep == SOLE_PREPOSITIONS == {"kepeken", "lon", "tan"}
    preverbs = {e.surface for e in lexicon if PosTag.PRE in e.tags}
    assert preverbs == PREVERBS == {"wile", "ken", "awen", "kama", "lukin", "sona"}
    preps = {e.surface for e in lexicon if PosTag.PREPOSITION in e.tags}
    assert preps == PREPOSITIONS == {"kepeken", "lon", "sama", "tan", "tawa"}


def test_synonym_groups(lexicon):
    assert lexicon.synonym_groups == {
        "a": ("a", "kin"),
        "lukin": ("lukin", "oko"),
        "sin": ("sin", "namako"),
        "ale": ("ale", "ali"),
    }
    assert lexicon.synonyms_of("lukin") == ("oko",)
    assert lexicon.synonyms_of("oko") == ("lukin",)
    assert lexicon.synonyms_of("toki") == ()


def test_chosen_is_deterministic(lexicon):
    for entry in lexicon:
        assert entry.chosen == choose_tag(entry.tags)
        assert entry.chosen == choose_tag(reversed(entry.tags))
        assert entry.chosen in entry.tags


def test_chosen_precedence_examples(lexicon):
    assert lexicon.lookup("lukin").chosen is PosTag.PRE
    assert lexicon.lookup("moku").chosen is PosTag.VERB
    assert lexicon.lookup("tawa").chosen is PosTag.PREPOSITION
    assert lexicon.lookup("nanpa").chosen is PosTag.PARTICLE
    assert lexicon.lookup("mute").chosen is PosTag.ADJECTIVE
    assert lexicon.lookup("luka").chosen is PosTag.NOUN
    assert lexicon.lookup("tu").chosen is PosTag.NUMBER


def test_senses_structure(lexicon):
    moku = lexicon.lookup("moku")
    assert len(moku.senses) == 2
    assert "eat" in moku.senses[0].english_lemmas
    assert "food" in moku.senses[1].english_lemmas
    for entry in lexicon:
        assert entry.senses
        for sense in entry.senses:
            assert sense.english_lemmas


# --- loading errors ----------------------------------------------------------

def _tsv_lines():
    from importlib import resources
    text = resources.files("tokipona").joinpath("data/lexicon.tsv").read_text("utf-8")
    return text.splitlines()


def test_load_from_explicit_path(tmp_path):
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(_tsv_lines()) + "\n", "utf-8")
    assert len(load_lexicon(p)) == 124


def test_missing_row_is_loud(tmp_path):
    lines = _tsv_lines()
    removed = [l for l in lines if not l.startswith("akesi\t")]
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(removed) + "\n", "utf-8")
    with pytest.raises(LexiconError, match=r"lemma count 123 != 124"):
        load_lexicon(p)


def test_malformed_row_is_loud(tmp_path):
    lines = _tsv_lines()
    lines.append("badrow\tNOUN")
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(lines) + "\n", "utf-8")
    with pytest.raises(LexiconError, match="expected 4 columns"):
        load_lexicon(p)


def test_wrong_tag_count_names_the_histogram(tmp_path):
    lines = [
        l.replace("akesi\tNOUN\t", "akesi\tNOUN,ADJECTIVE\t")
        if l.startswith("akesi\t") else l
        for l in _tsv_lines()
    ]
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(lines) + "\n", "utf-8")
    with pytest.raises(LexiconError, match="ADJECTIVE"):
        load_lexicon(p)


def test_unknown_tag_is_loud(tmp_path):
    lines = [
        l.replace("akesi\tNOUN\t", "akesi\tGERUND\t")
        if l.startswith("akesi\t") else l
        for l in _tsv_lines()
    ]
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(lines) + "\n", "utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(p)


def test_header_required(tmp_path):
    lines = [l for l in _tsv_lines() if not l.startswith("surface\t")]
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(lines) + "\n", "utf-8")
    with pytest.raises(LexiconError, match="header"):
        load_lexicon(p)


def test_invalid_surface_is_loud(tmp_path):
    lines = [
        l.replace("akesi\t", "akexi\t") if l.startswith("akesi\t") else l
        for l in _tsv_lines()
    ]
    p = tmp_path / "lexicon.tsv"
    p.write_text("\n".join(lines) + "\n", "utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(p)
