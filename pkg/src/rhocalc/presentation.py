"""Finite presentations, subgroup specifications and their text/JSON formats."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import (
    AlreadyBarred,
    DuplicateGenerator,
    NameCollision,
    ParseError,
    TrivialRelation,
    UndeclaredGenerator,
)
from .words import IDENTITY, GenSym, Word, conjugate, format_word, parse_word, rename, sym


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word

    def __post_init__(self):
        if self.lhs == self.rhs and self.lhs:
            raise TrivialRelation(f"{self.lhs} = {self.rhs}")

    def symbols(self) -> set:
        return self.lhs.symbols() | self.rhs.symbols()

    def relator(self) -> Word:
        return self.lhs * ~self.rhs

    def __str__(self):
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


def sends(t: GenSym, u: Word, v: Word) -> Relation:
    """The equation u^t = v, with the conjugate written out."""
    return Relation(conjugate(u, Word.letter(t)), v)


def fixes(t: GenSym, w: Word) -> Relation:
    return sends(t, w, w)


@dataclass(frozen=True)
class Presentation:
    gens: tuple = ()
    rels: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        object.__setattr__(self, "rels", tuple(self.rels))

    def __str__(self):
        return format_presentation(self)


@dataclass(frozen=True)
class SubgroupSpec:
    over: Presentation
    gens: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))


@dataclass(frozen=True)
class ExplicitBenign:
    """A triple (K, L, abc): overgroup, subgroup, and the images of a, b, c in K."""

    k: Presentation
    l: SubgroupSpec
    abc: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "abc", tuple(self.abc))


def find_violation(p: Presentation):
    """Return the first invariant violation of ``p`` as an exception, or None."""
    seen = set()
    for g in p.gens:
        if g in seen:
            return DuplicateGenerator(g)
        seen.add(g)
    for rel in p.rels:
        for w in (rel.lhs, rel.rhs):
            for s, _ in w:
                if s not in seen:
                    return UndeclaredGenerator(s)
    return None


def validate(p: Presentation) -> Presentation:
    err = find_violation(p)
    if err is not None:
        raise err
    return p


def validate_subgroup(spec: SubgroupSpec) -> SubgroupSpec:
    validate(spec.over)
    declared = set(spec.over.gens)
    for w in spec.gens:
        for s, _ in w:
            if s not in declared:
                raise UndeclaredGenerator(s)
    return spec


def validate_benign(eb: ExplicitBenign) -> ExplicitBenign:
    if eb.l.over != eb.k:
        raise ValueError("subgroup is not over the given presentation")
    validate_subgroup(eb.l)
    if len(eb.abc) != 3:
        raise ValueError("abc must hold exactly three words")
    if len(set(eb.abc)) != 3 or not all(eb.abc):
        raise ValueError("abc words must be distinct and non-empty")
    declared = set(eb.k.gens)
    for w in eb.abc:
        for s, _ in w:
            if s not in declared:
                raise UndeclaredGenerator(s)
    return eb


def counts(p: Presentation) -> tuple:
    return len(p.gens), len(p.rels)


def tietze_add(p: Presentation, name: GenSym, defn: Word) -> Presentation:
    if name in p.gens:
        raise NameCollision(name)
    declared = set(p.gens)
    for s, _ in defn:
        if s not in declared:
            raise UndeclaredGenerator(s)
    return Presentation(p.gens + (name,), p.rels + (Relation(Word.letter(name), defn),))


def bar_word(w: Word) -> Word:
    return Word._reduced(tuple((s.bar(), e) for s, e in w))


def bar_copy(p: Presentation) -> Presentation:
    for g in p.gens:
        if g.barred:
            raise AlreadyBarred(g)
    return Presentation(
        tuple(g.bar() for g in p.gens),
        tuple(Relation(bar_word(r.lhs), bar_word(r.rhs)) for r in p.rels),
    )


def rename_presentation(p: Presentation, mapping: Mapping[GenSym, GenSym]) -> Presentation:
    return Presentation(
        tuple(mapping.get(g, g) for g in p.gens),
        tuple(Relation(rename(r.lhs, mapping), rename(r.rhs, mapping)) for r in p.rels),
    )


def disjointify(p: Presentation, taken: Iterable[GenSym], exempt: Iterable[GenSym] = ()):
    """Rename generators of ``p`` that collide with ``taken``.

    Fresh names append ``#1``, ``#2``, ... to the base. Returns the renamed
    presentation and the old -> new map (empty when nothing collided).
    """
    taken = set(taken)
    exempt = set(exempt)
    used = taken | set(p.gens)
    mapping = {}
    for g in p.gens:
        if g in exempt or g not in taken:
            continue
        root = g.base.split("#", 1)[0]
        k = 1
        while True:
            cand = GenSym(f"{root}#{k}", g.primes, g.barred)
            if cand not in used:
                break
            k += 1
        used.add(cand)
        mapping[g] = cand
    if not mapping:
        return p, {}
    return rename_presentation(p, mapping), mapping


def _canonical_relator(rel: Relation) -> Word:
    r = rel.relator()
    ri = ~r
    return r if r.sort_key() <= ri.sort_key() else ri


def normalize(p: Presentation) -> Presentation:
    """Canonical form for comparison: sorted generators, oriented sorted relators."""
    relators = {}
    for rel in p.rels:
        r = _canonical_relator(rel)
        if r:
            relators[r.sort_key()] = r
    return Presentation(
        tuple(sorted(set(p.gens), key=lambda g: g.key)),
        tuple(Relation(relators[k], IDENTITY) for k in sorted(relators)),
    )


# -- text format -------------------------------------------------------------

def _strip_comment(line: str) -> str:
    # '#' opens a comment at line start or after whitespace; inside a name it is a suffix.
    for i, ch in enumerate(line):
        if ch == "#" and (i == 0 or line[i - 1].isspace()):
            return line[:i]
    return line


def format_presentation(p: Presentation) -> str:
    lines = [f"gen {g}" for g in p.gens]
    lines += [f"rel {r}" for r in p.rels]
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    gens, rels = [], []
    declared = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "gen":
            try:
                g = sym(rest)
            except ParseError:
                raise ParseError(f"bad generator {rest!r}", lineno) from None
            if g in declared:
                raise ParseError(str(DuplicateGenerator(g)), lineno)
            declared.add(g)
            gens.append(g)
        elif head == "rel":
            lhs_text, eq, rhs_text = rest.partition("=")
            if not eq or "=" in rhs_text:
                raise ParseError("relation needs exactly one '='", lineno)
            lhs = parse_word(lhs_text, lineno)
            rhs = parse_word(rhs_text, lineno)
            for s in lhs.symbols() | rhs.symbols():
                if s not in declared:
                    raise ParseError(str(UndeclaredGenerator(s)), lineno)
            try:
                rels.append(Relation(lhs, rhs))
            except TrivialRelation as exc:
                raise ParseError(f"trivial relation {exc}", lineno) from None
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    return Presentation(gens, rels)


def format_subgroup(spec: SubgroupSpec, over_name: str) -> str:
    lines = [f"over {over_name}"] + [f"sub {format_word(w)}" for w in spec.gens]
    return "\n".join(lines) + "\n"


def parse_subgroup(text: str):
    """Parse a subgroup file; returns ``(over_path or None, [words])``."""
    over, words = None, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "over":
            if over is not None:
                raise ParseError("duplicate 'over' header", lineno)
            if not rest:
                raise ParseError("'over' needs a path", lineno)
            over = rest
        elif head == "sub":
            words.append(parse_word(rest, lineno))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    return over, words


# -- JSON mirror -------------------------------------------------------------

def presentation_to_dict(p: Presentation) -> dict:
    return {
        "gens": [str(g) for g in p.gens],
        "rels": [{"lhs": format_word(r.lhs), "rhs": format_word(r.rhs)} for r in p.rels],
    }


def presentation_from_dict(d: dict) -> Presentation:
    gens = [sym(g) for g in d["gens"]]
    rels = [Relation(parse_word(r["lhs"]), parse_word(r["rhs"])) for r in d["rels"]]
    return validate(Presentation(gens, rels))


def presentation_to_json(p: Presentation) -> str:
    return json.dumps(presentation_to_dict(p), indent=2) + "\n"


def presentation_from_json(text: str) -> Presentation:
    return presentation_from_dict(json.loads(text))
