"""Command-line entry point: one subcommand per capability.

Exit status: 0 on success, 1 on a domain error (reported on stderr),
2 on a usage error.  All randomized subcommands honor --seed, so equal
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import highlight as hl
from . import stats as st
from . import synth as sy
from . import wordnet as wn
from .grammar import (
    GrammarError,
    LENIENT,
    ParseOptions,
    TagValue,
    parse_text,
    pos_tag,
)
from .lexicon import LexiconError, load_lexicon
from .phonotactics import (
    CountingMode,
    PhonotacticsError,
    count_possible_words,
    syllabify,
    validate_proper_noun,
    validate_word,
)

FORMATS = ("text", "tsv", "json-lines")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tokipona",
        description="Toki Pona toolkit: statistics, grammar, synthesis, highlighting, wordnet",
    )
    p.add_argument("--lexicon", metavar="PATH", help="alternative lexicon TSV")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    p.add_argument("--format", choices=FORMATS, default="text", help="output format")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("stats", help="vocabulary statistics and sentence-space size")
    q.add_argument("--table", choices=("pos", "syllables", "letters", "lengths"))
    q.add_argument("--scope", choices=[s.value for s in st.Scope], default="all")
    q.add_argument(
        "--restrict", choices=[r.value for r in st.LetterRestrict], default="all"
    )
    q.add_argument("--limit", type=int, help="show only the top rows")
    q.add_argument(
        "--sentence-space",
        metavar="N,V,O,P",
        help="phrase word counts for the sentence-space formula",
    )
    q.add_argument("--without-particles", action="store_true")

    q = sub.add_parser("syllabify", help="split words into syllables")
    q.add_argument("words", nargs="+")

    q = sub.add_parser("validate", help="check words against the syllable grammar")
    q.add_argument("--mode", choices=("strict", "paper"), default="strict")
    q.add_argument("--proper", action="store_true", help="validate as proper nouns")
    q.add_argument("words", nargs="+")

    q = sub.add_parser("count", help="count possible words by syllable count")
    q.add_argument("--syllables", type=int, required=True)
    q.add_argument("--mode", choices=("strict", "paper"), default="paper")

    q = sub.add_parser("parse", help="parse sentences into clause trees")
    _add_parse_options(q)
    q.add_argument("text", nargs="*", help="sentence text (or use --stdin)")
    q.add_argument("--stdin", action="store_true")

    q = sub.add_parser("tag", help="POS-tag a sentence")
    _add_parse_options(q)
    q.add_argument("--no-dictionary", action="store_true", help="skip dictionary narrowing")
    q.add_argument("text", nargs="+")

    q = sub.add_parser("synth", help="synthesize text")
    q.add_argument(
        "--kind", choices=("phrase", "sentence", "paragraph", "poem"), default="sentence"
    )
    q.add_argument("--count", type=int, default=1, help="units to emit (phrase/sentence)")
    q.add_argument("--sentences", type=int, default=3, help="paragraph length")
    q.add_argument("--max-words", type=int)
    q.add_argument("--max-letters", type=int)
    q.add_argument("--stanzas", type=int, default=2)
    q.add_argument("--verses", type=int, default=4)
    q.add_argument("--phonemes", type=int, default=12, help="letters per verse")

    q = sub.add_parser("compose", help="interactive composition (stdin protocol)")
    q.add_argument("--unit", choices=[u.value for u in sy.ComposeUnit], default="sentence")
    q.add_argument("-k", type=int, default=3, help="candidates per round")

    q = sub.add_parser("highlight", help="emit or render highlight schemes")
    hsub = q.add_subparsers(dest="action", required=True)
    e = hsub.add_parser("emit-vim", help="write syntax/ and ftdetect/ files")
    e.add_argument("--out", required=True, metavar="DIR")
    e.add_argument("--merge", choices=[m.value for m in hl.MergeMode], default="full")
    r = hsub.add_parser("render", help="render colored text")
    r.add_argument("--mode", choices=("html", "ansi"), default="ansi")
    r.add_argument("--color-depth", type=int, choices=(16, 256), default=16)
    r.add_argument("text", nargs="+")

    q = sub.add_parser("wordnet", help="build synset mappings / show relations")
    wsub = q.add_subparsers(dest="action", required=True)
    b = wsub.add_parser("build", help="build a mapping against a WordNet directory")
    b.add_argument("--db", required=True, metavar="DIR")
    b.add_argument("--mode", choices=[m.value for m in wn.MappingMode], default="all")
    b.add_argument("--dump", metavar="PATH", help="write the mapping as TSV")
    b.add_argument("--coverage", metavar="PATH", help="write the coverage report")
    lk = wsub.add_parser("lookup", help="synsets of one word")
    lk.add_argument("--db", required=True, metavar="DIR")
    lk.add_argument("--mode", choices=[m.value for m in wn.MappingMode], default="all")
    lk.add_argument("word")
    wsub.add_parser("relations", help="static hyponym and antonym pairs")
    return p


def _add_parse_options(q: argparse.ArgumentParser):
    q.add_argument("--lenient", action="store_true", help="enable every leniency flag")
    q.add_argument("--lenient-li", action="store_true")
    q.add_argument("--colon-shorthand", action="store_true")
    q.add_argument("--pije-pi", action="store_true")
    q.add_argument("--extended-en-anu", action="store_true")


def _parse_options(args) -> ParseOptions:
    if args.lenient:
        return LENIENT
    return ParseOptions(
        lenient_li=args.lenient_li,
        colon_shorthand=args.colon_shorthand,
        pije_pi_possession=args.pije_pi,
        extended_en_anu=args.extended_en_anu,
    )


def _emit_rows(header: list[str], rows: list[list[str]], fmt: str, out) -> None:
    if fmt == "tsv":
        print("\t".join(header), file=out)
        for row in rows:
            print("\t".join(row), file=out)
    elif fmt == "json-lines":
        for row in rows:
            print(json.dumps(dict(zip(header, row))), file=out)
    else:
        widths = [
            max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
            for i in range(len(header))
        ]
        print("  ".join(h.ljust(w) for h, w in zip(header, widths)), file=out)
        for row in rows:
            print("  ".join(c.ljust(w) for c, w in zip(row, widths)), file=out)


def _cmd_stats(args, lex, out) -> int:
    if args.sentence_space:
        parts = [int(x) for x in args.sentence_space.split(",")]
        if len(parts) != 4:
            raise ValueError("--sentence-space expects four comma-separated integers")
        query = st.SentenceSpaceQuery(*parts, with_particles=not args.without_particles)
        print(st.sentence_space(query), file=out)
        return 0
    table = args.table or "pos"
    if table == "pos":
        rows = [[t.value, str(a), str(c)] for t, a, c in st.pos_histogram(lex)]
        total_all, total_chosen = st.pos_totals(lex)
        rows.append(["total", str(total_all), str(total_chosen)])
        _emit_rows(["pos", "all", "chosen"], rows, args.format, out)
    elif table == "lengths":
        rows = [
            [str(n), str(c), st.format_percent(p)]
            for n, (c, p) in st.word_length_report(lex).items()
        ]
        _emit_rows(["syllables", "count", "percent"], rows, args.format, out)
    else:
        scope = st.Scope(args.scope)
        if table == "syllables":
            t = st.syllable_frequency(lex, scope)
        else:
            t = st.letter_frequency(lex, scope, st.LetterRestrict(args.restrict))
        shown = t.rows if args.limit is None else t.rows[: args.limit]
        rows = [[r.item, str(r.count), st.format_percent(r.percent)] for r in shown]
        _emit_rows(["item", "count", "percent"], rows, args.format, out)
    return 0


def _cmd_syllabify(args, lex, out) -> int:
    rows = []
    for word in args.words:
        syls = syllabify(word.lower())
        rows.append([word, "-".join(s.text for s in syls), str(len(syls))])
    _emit_rows(["word", "syllables", "count"], rows, args.format, out)
    return 0


def _cmd_validate(args, lex, out) -> int:
    mode = CountingMode.STRICT if args.mode == "strict" else CountingMode.PAPER_COMPATIBLE
    rows = []
    ok_all = True
    for word in args.words:
        if args.proper:
            ok = validate_proper_noun(word)
            reason = "" if ok else "not a valid proper noun"
        else:
            res = validate_word(word, mode)
            ok, reason = res.ok, res.reason or ""
        ok_all &= ok
        rows.append([word, "ok" if ok else "invalid", reason])
    _emit_rows(["word", "status", "reason"], rows, args.format, out)
    return 0 if ok_all else 1


def _cmd_count(args, lex, out) -> int:
    mode = CountingMode.STRICT if args.mode == "strict" else CountingMode.PAPER_COMPATIBLE
    print(count_possible_words(args.syllables, mode), file=out)
    return 0


def _cmd_parse(args, lex, out) -> int:
    text = " ".join(args.text) if args.text else ""
    if args.stdin:
        text = (text + " " + sys.stdin.read()).strip()
    if not text:
        raise ValueError("no input text")
    result = parse_text(text, _parse_options(args), lex)
    for diag in result.diagnostics:
        print(str(diag), file=sys.stderr)
    if args.format == "json-lines":
        for clause in result.clauses:
            print(json.dumps(clause.to_dict()), file=out)
    else:
        for i, clause in enumerate(result.clauses):
            if i:
                print(file=out)
            print(clause.pretty(), file=out)
    return 0


def _cmd_tag(args, lex, out) -> int:
    text = " ".join(args.text)
    result = parse_text(text, _parse_options(args), lex)
    rows = []
    for clause in result.clauses:
        assignment = pos_tag(clause, resolve_with_dictionary=not args.no_dictionary, lex=lex)
        for tok in clause.unparse():
            value = assignment[tok]
            label = value.value if isinstance(value, TagValue) else str(value)
            rows.append([tok.surface, label])
    _emit_rows(["token", "tag"], rows, args.format, out)
    return 0


def _cmd_synth(args, lex, out) -> int:
    cfg = sy.SynthConfig(seed=args.seed)
    synthesizer = sy.Synthesizer(cfg, lex)
    if args.kind == "phrase":
        for _ in range(args.count):
            print(str(synthesizer.synth_phrase()), file=out)
    elif args.kind == "sentence":
        for _ in range(args.count):
            print(synthesizer.sentence_text(), file=out)
    elif args.kind == "paragraph":
        spec = sy.ParagraphSpec(args.sentences, args.max_words, args.max_letters)
        print(synthesizer.synth_paragraph(spec), file=out)
    else:
        spec = sy.PoemSpec(args.stanzas, args.verses, args.phonemes)
        print(synthesizer.synth_poem(spec), file=out)
    return 0


def _cmd_compose(args, lex, out) -> int:
    cfg = sy.SynthConfig(seed=args.seed)
    synthesizer = sy.Synthesizer(cfg, lex)
    text = synthesizer.interactive_compose(
        unit=sy.ComposeUnit(args.unit), k=args.k, write=lambda s: out.write(s)
    )
    print(file=out)
    print(text, file=out)
    return 0


def _cmd_highlight(args, lex, out) -> int:
    if args.action == "emit-vim":
        scheme = hl.build_scheme(lex, hl.SchemeConfig(hl.MergeMode(args.merge)))
        root = Path(args.out)
        syntax_dir = root / "syntax"
        ftdetect_dir = root / "ftdetect"
        syntax_dir.mkdir(parents=True, exist_ok=True)
        ftdetect_dir.mkdir(parents=True, exist_ok=True)
        (syntax_dir / "tokipona.vim").write_text(hl.emit_vim_syntax(scheme), "utf-8")
        (ftdetect_dir / "tokipona.vim").write_text(hl.emit_filetype_detect(), "utf-8")
        print(f"wrote {syntax_dir / 'tokipona.vim'}", file=out)
        print(f"wrote {ftdetect_dir / 'tokipona.vim'}", file=out)
        return 0
    text = " ".join(args.text)
    if args.mode == "html":
        out.write(hl.render_html(text, lex=lex))
    else:
        out.write(hl.render_ansi(text, lex=lex, color_depth=args.color_depth) + "\n")
    return 0


def _cmd_wordnet(args, lex, out) -> int:
    if args.action == "relations":
        table = wn.relations()
        rows = [["hyponym", a, b] for a, b in table.hyponym_pairs]
        rows += [["antonym", a, b] for a, b in table.antonym_pairs]
        _emit_rows(["relation", "word", "other"], rows, args.format, out)
        return 0
    db = wn.load_wordnet_db(args.db)
    for warning in db.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    mapping = wn.build_mapping(lex, db, wn.MappingMode(args.mode))
    if args.action == "lookup":
        for ref in sorted(mapping.synsets_of(args.word)):
            print(ref.key(), file=out)
        return 0
    print(f"database synsets: {db.total_synsets}", file=out)
    print(f"mapping mode: {mapping.mode.value}", file=out)
    print(f"mapped lemmas: {len(mapping.map)}", file=out)
    print(f"distinct synsets: {mapping.total_synsets}", file=out)
    print(f"unresolved glosses: {len(mapping.coverage_gaps)}", file=out)
    if args.dump:
        Path(args.dump).write_text(wn.dump_tsv(mapping), "utf-8")
        print(f"wrote {args.dump}", file=out)
    if args.coverage:
        Path(args.coverage).write_text(wn.coverage_report(mapping), "utf-8")
        print(f"wrote {args.coverage}", file=out)
    return 0


_COMMANDS = {
    "stats": _cmd_stats,
    "syllabify": _cmd_syllabify,
    "validate": _cmd_validate,
    "count": _cmd_count,
    "parse": _cmd_parse,
    "tag": _cmd_tag,
    "synth": _cmd_synth,
    "compose": _cmd_compose,
    "highlight": _cmd_highlight,
    "wordnet": _cmd_wordnet,
}

_DOMAIN_ERRORS = (
    GrammarError,
    LexiconError,
    PhonotacticsError,
    sy.SynthError,
    wn.WordNetError,
    ValueError,
    OSError,
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lex = load_lexicon(args.lexicon)
        return _COMMANDS[args.command](args, lex, sys.stdout)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
