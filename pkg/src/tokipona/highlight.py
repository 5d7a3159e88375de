"""Highlight schemes from chosen POS tags, with Vim / HTML / ANSI emission.

Every distinct word belongs to exactly one keyword group (synonym pairs
always travel together); proper nouns are matched by a pattern.  Emission
is byte-deterministic so regenerated files can be diffed.
"""

from __future__ import annotations

import html as _html
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, TextIO

from .grammar import Token, TokenKind, default_lexicon, tokenize
from .lexicon import Lexicon, PosTag

PROPER_PATTERN = r"/\v<[A-Z][a-z]*>/"

FILETYPE_NAME = "tokipona"


class MergeMode(Enum):
    FULL = "full"
    PARTICLES_VS_REST = "particles"
    PARTICLES_PREPS_VS_REST = "particles-preps"


#: Editor groups each highlight group links to by default.  Chosen for
#: contrast on both dark and light schemes: most words (nouns) keep the
#: normal text color, structure words stand out the most.
DEFAULT_LINKS = {
    "tpNOUN": "Normal",
    "tpADJECTIVE": "Identifier",
    "tpVERB": "Function",
    "tpPARTICLE": "Statement",
    "tpPRE": "Special",
    "tpPREPOSITION": "PreProc",
    "tpNUMBER": "Number",
    "tpPROPER": "Constant",
    "tpCONTENT": "Normal",
    "tpERROR": "Error",
}


@dataclass(frozen=True)
class HighlightGroup:
    name: str
    members: frozenset[str]
    link_target: str
    pattern: Optional[str] = None

    def distinct_size(self, lex: Lexicon) -> int:
        """Member count with synonym pairs collapsed."""
        primaries = set()
        for surface in self.members:
            entry = lex.lookup(surface)
            primaries.add(entry.synonym_group or surface)
        return len(primaries)


@dataclass(frozen=True)
class SchemeConfig:
    merge_mode: MergeMode = MergeMode.FULL
    link_map: dict[str, str] = field(default_factory=dict)


def _merged_name(tag: PosTag, mode: MergeMode) -> str:
    if mode is MergeMode.FULL:
        return f"tp{tag.value}"
    if mode is MergeMode.PARTICLES_VS_REST:
        return "tpPARTICLE" if tag is PosTag.PARTICLE else "tpCONTENT"
    if tag is PosTag.PARTICLE:
        return "tpPARTICLE"
    if tag is PosTag.PREPOSITION:
        return "tpPREPOSITION"
    return "tpCONTENT"


def build_scheme(lex: Lexicon, cfg: SchemeConfig = SchemeConfig()) -> list[HighlightGroup]:
    """Partition the vocabulary into highlight groups by chosen tag.

    Group membership follows the synonym pair's primary entry so that a
    pair is never split, and the merge mode coalesces groups.  The
    proper-noun group carries a pattern instead of members.
    """
    members: dict[str, set[str]] = {}
    for entry in lex:
        primary_surface = entry.synonym_group or entry.surface
        primary = lex.lookup(primary_surface)
        name = _merged_name(primary.chosen, cfg.merge_mode)
        members.setdefault(name, set()).add(entry.surface)

    for name in cfg.link_map:
        if name not in members and name != "tpPROPER":
            raise ValueError(f"link_map references unknown group {name!r}")

    def link(name: str) -> str:
        return cfg.link_map.get(name, DEFAULT_LINKS[name])

    groups = [
        HighlightGroup(name, frozenset(words), link(name))
        for name, words in sorted(members.items())
    ]
    groups.append(
        HighlightGroup("tpPROPER", frozenset(), link("tpPROPER"), pattern=PROPER_PATTERN)
    )
    return groups


# --- Vim emission ----------------------------------------------------------

def emit_vim_syntax(scheme: list[HighlightGroup], out: Optional[TextIO] = None) -> str:
    """The syntax file: guard, keyword lines, proper-noun pattern, links."""
    lines = [
        '" Vim syntax file for Toki Pona (generated; edit the generator, not this file)',
        'if exists("b:current_syntax")',
        "  finish",
        "endif",
    ]
    for group in scheme:
        if group.pattern is None:
            words = " ".join(sorted(group.members))
            lines.append(f"syn keyword {group.name} {words}")
    for group in scheme:
        if group.pattern is not None:
            lines.append(f"syn match {group.name} {group.pattern}")
    for group in scheme:
        lines.append(f"hi def link {group.name} {group.link_target}")
    lines.append(f'let b:current_syntax = "{FILETYPE_NAME}"')
    content = "\n".join(lines) + "\n"
    if out is not None:
        out.write(content)
    return content


def emit_filetype_detect(out: Optional[TextIO] = None) -> str:
    """Detection rules binding *.tp and *.tokipona to the filetype."""
    content = (
        '" Filetype detection for Toki Pona (generated)\n'
        f"au BufRead,BufNewFile *.tp set filetype={FILETYPE_NAME}\n"
        f"au BufRead,BufNewFile *.tokipona set filetype={FILETYPE_NAME}\n"
    )
    if out is not None:
        out.write(content)
    return content


_LINE_KINDS = (
    ("comment", lambda s: s.startswith('"')),
    ("guard", lambda s: s in ('if exists("b:current_syntax")', "  finish", "endif")
        or s.startswith("let b:current_syntax")),
    ("keyword", lambda s: s.startswith("syn keyword tp")),
    ("pattern", lambda s: s.startswith("syn match tp")),
    ("link", lambda s: s.startswith("hi def link tp")),
    ("blank", lambda s: s == ""),
)


def classify_syntax_lines(content: str) -> list[tuple[str, str]]:
    """(kind, line) per line; kind is 'unknown' for anything unexpected."""
    out = []
    for line in content.splitlines():
        for kind, pred in _LINE_KINDS:
            if pred(line):
                out.append((kind, line))
                break
        else:
            out.append(("unknown", line))
    return out


# --- rendering -------------------------------------------------------------

#: CSS colors per group, readable on a dark background.
DEFAULT_HTML_PALETTE = {
    "tpNOUN": "#d8d8d8",
    "tpADJECTIVE": "#8ec07c",
    "tpVERB": "#fabd2f",
    "tpPARTICLE": "#fb4934",
    "tpPRE": "#d3869b",
    "tpPREPOSITION": "#83a598",
    "tpNUMBER": "#fe8019",
    "tpPROPER": "#b8bb26",
    "tpCONTENT": "#d8d8d8",
    "tpERROR": "#ff0000",
}

#: SGR codes per group for 16-color terminals.
DEFAULT_ANSI_PALETTE = {
    "tpNOUN": "37",
    "tpADJECTIVE": "32",
    "tpVERB": "33",
    "tpPARTICLE": "31",
    "tpPRE": "35",
    "tpPREPOSITION": "36",
    "tpNUMBER": "91",
    "tpPROPER": "92",
    "tpCONTENT": "37",
    "tpERROR": "41",
}

#: 256-color variants (used as "38;5;<n>").
DEFAULT_ANSI256_PALETTE = {
    "tpNOUN": "252",
    "tpADJECTIVE": "108",
    "tpVERB": "214",
    "tpPARTICLE": "167",
    "tpPRE": "175",
    "tpPREPOSITION": "109",
    "tpNUMBER": "208",
    "tpPROPER": "142",
    "tpCONTENT": "252",
    "tpERROR": "196",
}


def group_of_token(tok: Token, scheme: list[HighlightGroup]) -> str:
    if tok.kind is TokenKind.PROPER:
        return "tpPROPER"
    if tok.kind is TokenKind.WORD:
        for group in scheme:
            if tok.surface in group.members:
                return group.name
    if tok.kind is TokenKind.ERROR:
        return "tpERROR"
    return ""  # punctuation keeps the default color


def render_html(
    text: str,
    scheme: Optional[list[HighlightGroup]] = None,
    palette: Optional[dict[str, str]] = None,
    lex: Optional[Lexicon] = None,
) -> str:
    """A standalone HTML document with one colored span per token."""
    lex = lex or default_lexicon()
    scheme = scheme if scheme is not None else build_scheme(lex)
    palette = palette or DEFAULT_HTML_PALETTE
    body: list[str] = []
    pos = 0
    for tok in tokenize(text, lex):
        if tok.start > pos:
            body.append(_html.escape(text[pos:tok.start]))
        group = group_of_token(tok, scheme)
        chunk = _html.escape(text[tok.start:tok.end])
        if group:
            color = palette.get(group, "#d8d8d8")
            body.append(f'<span class="{group}" style="color:{color}">{chunk}</span>')
        else:
            body.append(chunk)
        pos = tok.end
    if pos < len(text):
        body.append(_html.escape(text[pos:]))
    return (
        "<!DOCTYPE html>\n"
        '<html><head><meta charset="utf-8"><title>toki pona</title></head>\n'
        '<body style="background:#1d2021;color:#d8d8d8"><pre>'
        + "".join(body)
        + "</pre></body></html>\n"
    )


def render_ansi(
    text: str,
    scheme: Optional[list[HighlightGroup]] = None,
    palette: Optional[dict[str, str]] = None,
    lex: Optional[Lexicon] = None,
    color_depth: int = 16,
) -> str:
    """The same coloring as terminal SGR escapes (16- or 256-color)."""
    if color_depth not in (16, 256):
        raise ValueError("color_depth must be 16 or 256")
    lex = lex or default_lexicon()
    scheme = scheme if scheme is not None else build_scheme(lex)
    if palette is None:
        palette = DEFAULT_ANSI_PALETTE if color_depth == 16 else DEFAULT_ANSI256_PALETTE
    out: list[str] = []
    pos = 0
    for tok in tokenize(text, lex):
        if tok.start > pos:
            out.append(text[pos:tok.start])
        group = group_of_token(tok, scheme)
        chunk = text[tok.start:tok.end]
        if group and group in palette:
            code = palette[group]
            sgr = code if color_depth == 16 else f"38;5;{code}"
            out.append(f"\x1b[{sgr}m{chunk}\x1b[0m")
        else:
            out.append(chunk)
        pos = tok.end
    if pos < len(text):
        out.append(text[pos:])
    return "".join(out)
