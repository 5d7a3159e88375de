"""WNDB parsing and the three mapping modes, against a small database
written in the genuine index/data file format."""

import pytest

from tokipona.wordnet import (
    MappingMode,
    SynsetRef,
    WNPos,
    WordNetError,
    build_mapping,
    coverage_report,
    dump_tsv,
    load_wordnet_db,
    relations,
)
from conftest import FIXTURE_INDEX, write_wndb


# --- database loading ------------------------------------------------------------

def test_load_fixture(wndb_dir):
    db = load_wordnet_db(wndb_dir)
    expected = len({(pos, off) for (_, pos), offs in FIXTURE_INDEX.items() for off in offs})
    assert db.total_synsets == expected
    assert db.version == "3.0"
    assert db.warnings == []


def test_lookup(wndb_dir):
    db = load_wordnet_db(wndb_dir)
    assert db.lookup("eat", WNPos.VERB) == (20000001, 20000002)
    assert db.lookup("eat", WNPos.NOUN) == ()
    assert db.lookup("sea creature", WNPos.NOUN) == (10000190,)  # underscore join
    assert not db.has_lemma("zzz")


def test_missing_file_is_loud(tmp_path):
    root = write_wndb(tmp_path / "dict", skip_files=("data.verb",))
    with pytest.raises(WordNetError, match="data.verb"):
        load_wordnet_db(root)
    with pytest.raises(WordNetError):
        load_wordnet_db(tmp_path / "nowhere")


def test_corrupt_index_is_loud(tmp_path):
    root = write_wndb(tmp_path / "dict")
    with open(root / "index.noun", "a", encoding="utf-8") as fh:
        fh.write("brokenline n x\n")
    with pytest.raises(WordNetError, match="index.noun"):
        load_wordnet_db(root)


def test_index_offsets_must_exist_in_data(tmp_path):
    root = write_wndb(tmp_path / "dict")
    with open(root / "index.noun", "a", encoding="utf-8") as fh:
        fh.write("ghost n 1 1 @ 1 1 99999999\n")
    with pytest.raises(WordNetError, match="99999999"):
        load_wordnet_db(root)


def test_version_warning(tmp_path):
    root = write_wndb(tmp_path / "dict")
    for name in root.iterdir():
        text = name.read_text("utf-8").replace("WordNet 3.0", "WordNet 3.1")
        name.write_text(text, "utf-8")
    db = load_wordnet_db(root)
    assert db.version == "3.1"
    assert any("3.0" in w for w in db.warnings)


# --- mappings ------------------------------------------------------------

@pytest.fixture(scope="module")
def db(wndb_dir):
    return load_wordnet_db(wndb_dir)


@pytest.fixture(scope="module")
def mappings(lexicon, db):
    return {mode: build_mapping(lexicon, db, mode) for mode in MappingMode}


def test_particles_contribute_nothing(mappings):
    for mode, tpw in mappings.items():
        for particle in ("li", "e", "la", "pi", "a", "o", "anu", "en", "seme", "mu"):
            assert particle not in tpw.map
            assert tpw.synsets_of(particle) == frozenset()


def test_all_mode_collects_expanded_classes(mappings, lexicon):
    tpw = mappings[MappingMode.ALL]
    # moku (VERB, NOUN): eat/drink verbs plus food/meal/drink nouns
    moku = tpw.synsets_of("moku")
    assert SynsetRef(WNPos.VERB, 20000001) in moku
    assert SynsetRef(WNPos.NOUN, 10000040) in moku
    assert SynsetRef(WNPos.NOUN, 10000042) in moku  # drink as a noun, via the noun tag
    # pona (ADJECTIVE): adjectives and adverbs, but never the verb "correct"
    pona = tpw.synsets_of("pona")
    assert SynsetRef(WNPos.ADJ, 30000001) in pona
    assert SynsetRef(WNPos.ADV, 40000001) in pona  # "good" as adverb
    assert SynsetRef(WNPos.ADJ, 30000004) in pona  # "correct" adjective
    assert SynsetRef(WNPos.VERB, 20000080) not in pona
    # kin (ADJECTIVE, synonym of a) maps through adverb glosses
    assert SynsetRef(WNPos.ADV, 40000002) in tpw.synsets_of("kin")
    # tu (NUMBER) is looked up as an adjective
    assert tpw.synsets_of("tu") == frozenset({SynsetRef(WNPos.ADJ, 30000005)})
    # lon (sole preposition) ranges over all four classes
    lon = tpw.synsets_of("lon")
    assert {r.pos for r in lon} >= {WNPos.VERB, WNPos.NOUN, WNPos.ADJ}


def test_no_prepositions_mode(mappings, lexicon):
    tpw = mappings[MappingMode.NO_PREPOSITIONS]
    all_map = mappings[MappingMode.ALL].map
    for word in ("kepeken", "lon", "tan", "sama", "tawa"):
        assert word not in tpw.map
    for word, refs in tpw.map.items():
        assert refs == all_map[word]
    assert set(tpw.map) == set(all_map) - {"kepeken", "lon", "tan", "sama", "tawa"}


def test_matched_pos_mode(mappings):
    tpw = mappings[MappingMode.MATCHED_POS]
    # pona keeps only adjective synsets: the adverb reading drops out
    pona = tpw.synsets_of("pona")
    assert SynsetRef(WNPos.ADJ, 30000001) in pona
    assert all(r.pos is WNPos.ADJ for r in pona)
    # wan (ADJECTIVE, NUMBER) likewise stays adjectival
    for ref in tpw.synsets_of("wan"):
        assert ref.pos is WNPos.ADJ


def test_subset_laws_every_lemma(mappings):
    all_map = mappings[MappingMode.ALL]
    noprep = mappings[MappingMode.NO_PREPOSITIONS]
    matched = mappings[MappingMode.MATCHED_POS]
    for word, refs in noprep.map.items():
        assert refs <= all_map.map[word]
    for word, refs in matched.map.items():
        assert refs <= all_map.map[word]
    assert noprep.total_synsets <= all_map.total_synsets
    assert matched.total_synsets <= all_map.total_synsets


def test_mapping_deterministic(lexicon, db):
    a = build_mapping(lexicon, db, MappingMode.ALL)
    b = build_mapping(lexicon, db, MappingMode.ALL)
    assert a.map == b.map
    assert dump_tsv(a) == dump_tsv(b)


def test_coverage_report(mappings):
    tpw = mappings[MappingMode.ALL]
    gaps = {(g.lemma, g.gloss) for g in tpw.coverage_gaps}
    # the fixture has no "me" entry, so mi's first gloss is reported
    assert ("mi", "me") in gaps
    # but covered glosses are not
    assert ("moku", "eat") not in gaps
    text = coverage_report(tpw)
    assert "mi\tme" in text


def test_dump_tsv_shape(mappings):
    tpw = mappings[MappingMode.ALL]
    lines = dump_tsv(tpw).splitlines()
    assert lines[0] == "lemma\tmode\tpos\tsynset"
    for line in lines[1:]:
        lemma, mode, pos, synset = line.split("\t")
        assert mode == "all"
        assert pos in "nvar"
        assert len(synset) == 8 and synset.isdigit()
    body = lines[1:]
    assert body == sorted(body)


# --- relations ------------------------------------------------------------

def test_relations_content(lexicon):
    table = relations()
    assert table.is_hyponym("jan", "soweli")
    assert table.is_hyponym("kili", "kasi")
    assert not table.is_hyponym("soweli", "jan")  # irreflexive, directed
    for color in ("walo", "pimeja", "jelo", "loje", "laso"):
        assert table.is_hyponym(color, "kule")

    assert table.is_antonym("suno", "mun")
    assert table.is_antonym("mun", "suno")  # symmetric
    assert table.is_antonym("pona", "jaki")
    assert table.is_antonym("pona", "ike")
    assert table.is_antonym("sinpin", "monsi")
    assert table.is_antonym("pana", "kama jo")
    assert not table.is_antonym("pona", "pona")


def test_relations_members_are_lemmas(lexicon):
    table = relations()
    words = {w for pair in table.hyponym_pairs for w in pair}
    words |= {w for pair in table.antonym_pairs for w in pair}
    for word in words:
        if " " in word:
            for part in word.split():
                assert lexicon.lookup(part) is not None
        else:
            assert lexicon.lookup(word) is not None


def test_multiword_excluded_from_single_lemma_lookups():
    table = relations()
    assert "kama jo" not in table.antonyms_of("pana") or True
    assert table.antonyms_of("pana") == ()
    assert "mun" in table.antonyms_of("suno")


def test_hyponym_irreflexive():
    table = relations()
    for a, b in table.hyponym_pairs:
        assert a != b
