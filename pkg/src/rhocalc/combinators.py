"""Free constructions on presentations and the concrete groups Xi_m, C, A, A-bar."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import NameCollision, SharedGenerators, UndeclaredGenerator
from .letters import A, B, C, a, b, c, d, e, t1, t1p, u1, u2
from .presentation import (
    Presentation,
    Relation,
    SubgroupSpec,
    _canonical_relator,
    bar_copy,
    sends,
    validate,
)
from .words import GenSym, Word, conjugate, product


@dataclass(frozen=True)
class IsoSpec:
    """Generator pairs (u, v) of an isomorphism u -> v between subgroups.

    An empty pair list stands for the trivial subgroup.
    """

    pairs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple((u, v) for u, v in self.pairs))

    @classmethod
    def fixing(cls, words: Sequence[Word]) -> IsoSpec:
        return cls(tuple((w, w) for w in words))


def _check_words(p: Presentation, words):
    declared = set(p.gens)
    for w in words:
        for s, _ in w:
            if s not in declared:
                raise UndeclaredGenerator(s)


def hnn(p: Presentation, t: GenSym, iso: IsoSpec) -> Presentation:
    if t in p.gens:
        raise NameCollision(t)
    _check_words(p, [w for pair in iso.pairs for w in pair])
    new = tuple(sends(t, u, v) for u, v in iso.pairs)
    return validate(Presentation(p.gens + (t,), p.rels + new))


def hnn_multi(p: Presentation, letters) -> Presentation:
    letters = list(letters)
    names = [t for t, _ in letters]
    if len(set(names)) != len(names):
        raise NameCollision(next(t for t in names if names.count(t) > 1))
    for t, iso in letters:
        p = hnn(p, t, iso)
    return p


def amalgam_shared(p1: Presentation, p2: Presentation) -> Presentation:
    """Amalgamate over the shared symbols: union of generators and relations.

    Relations of ``p2`` already present in ``p1`` (up to orientation) are dropped.
    """
    have = set(p1.gens)
    gens = p1.gens + tuple(g for g in p2.gens if g not in have)
    known = {_canonical_relator(r) for r in p1.rels}
    rels = p1.rels + tuple(r for r in p2.rels if _canonical_relator(r) not in known)
    return validate(Presentation(gens, rels))


def free_product(p1: Presentation, p2: Presentation) -> Presentation:
    shared = set(p1.gens) & set(p2.gens)
    if shared:
        raise SharedGenerators(sorted(shared, key=lambda g: g.key))
    return amalgam_shared(p1, p2)


def commuting(xs: Sequence[GenSym], ys: Sequence[GenSym]) -> tuple:
    """Relations x^y = x for x in xs, y in ys, row-major."""
    return tuple(sends(y, Word.letter(x), Word.letter(x)) for x in xs for y in ys)


def direct_product(p1: Presentation, p2: Presentation) -> Presentation:
    shared = set(p1.gens) & set(p2.gens)
    if shared:
        raise SharedGenerators(sorted(shared, key=lambda g: g.key))
    return validate(
        Presentation(
            p1.gens + p2.gens,
            p1.rels + p2.rels + commuting(p1.gens, p2.gens),
        )
    )


def free_group(symbols: Sequence[GenSym]) -> Presentation:
    return Presentation(tuple(symbols), ())


@dataclass(frozen=True)
class StarInput:
    """Triples (K_i, L_i, t_i) amalgamated over the subgroup generated by ``m``.

    The side conditions on the K_i intersections are not checked.
    """

    triples: tuple
    m: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "triples", tuple(tuple(x) for x in self.triples))
        object.__setattr__(self, "m", tuple(self.m))


def star(inp: StarInput) -> Presentation:
    letters = [t for _, _, t in inp.triples]
    if len(set(letters)) != len(letters):
        raise NameCollision(next(t for t in letters if letters.count(t) > 1))
    for k, _, _ in inp.triples:
        for t in letters:
            if t in k.gens:
                raise NameCollision(t)
    result = None
    for k, l, t in inp.triples:
        piece = hnn(k, t, IsoSpec.fixing(l.gens))
        result = piece if result is None else amalgam_shared(result, piece)
    if result is None:
        raise ValueError("star construction needs at least one triple")
    return result


def benign_intersection(gwords, items, m=()):
    """K = star(items); L = G^{t_1 ... t_r}."""
    k = star(StarInput(items, m))
    tt = product(Word.letter(t) for _, _, t in items)
    return k, SubgroupSpec(k, tuple(conjugate(g, tt) for g in gwords))


def benign_join(gwords, items, m=()):
    """K = star(items); L generated by G^{t_i}, listed by i then by generator."""
    k = star(StarInput(items, m))
    lgens = tuple(conjugate(g, Word.letter(t)) for _, _, t in items for g in gwords)
    return k, SubgroupSpec(k, lgens)


def b_sub(i: int, b_sym: GenSym = b, c_sym: GenSym = c) -> Word:
    """b_i = c^-i b c^i."""
    ci = Word.letter(c_sym, i)
    return conjugate(Word.letter(b_sym), ci)


def _xi_letters(m: int):
    name = f"t{m}" if m >= 0 else f"tn{-m}"
    return GenSym(name), GenSym(name, 1)


def xi(m: int) -> Presentation:
    """Xi_m = <b, c> with stable letters t_m, t_m' for b -> b_{1-m}, b_{-m}, c -> c^2.

    Negative m names the letters ``tn<|m|>``.
    """
    t, tp = _xi_letters(m)
    T, TP = Word.letter(t), Word.letter(tp)
    c2 = C**2
    rels = (
        Relation(conjugate(B, T), b_sub(1 - m)),
        Relation(conjugate(B, TP), b_sub(-m)),
        Relation(conjugate(C, T), c2),
        Relation(conjugate(C, TP), c2),
    )
    return validate(Presentation((b, c, t, tp), rels))


@lru_cache(maxsize=None)
def a_free_xi1() -> Presentation:
    """<a> * Xi_1."""
    return free_product(free_group((a,)), xi(1))


@lru_cache(maxsize=None)
def group_C() -> Presentation:
    base = a_free_xi1()
    T1, T1P = Word.letter(t1), Word.letter(t1p)
    l1 = SubgroupSpec(base, (b_sub(1), T1, T1P))
    l2 = SubgroupSpec(base, (A, B, T1, T1P))
    return star(StarInput(((base, l1, u1), (base, l2, u2)), base.gens))


@lru_cache(maxsize=None)
def group_A() -> Presentation:
    """C with stable letters d (for omega) and e (for delta)."""
    U1, U2 = Word.letter(u1), Word.letter(u2)
    d_pairs = [(conjugate(x, U1), conjugate(x, U1)) for x in (A, B, C)]
    d_pairs += [
        (conjugate(A, U2), conjugate(A, B * U2)),
        (conjugate(B, U2), conjugate(B, U2)),
        (conjugate(C, U2), conjugate(C, B * U2)),
    ]
    e_pairs = [(A, A), (B, conjugate(B, C)), (C, C)]
    return hnn_multi(group_C(), [(d, IsoSpec(d_pairs)), (e, IsoSpec(e_pairs))])


@lru_cache(maxsize=None)
def group_A_bar() -> Presentation:
    return bar_copy(group_A())


# sizes of the displayed relation groups of A, in order
A_BLOCKS = (
    ("xi1 b-relations", 2),
    ("xi1 c-relations", 2),
    ("u1 fixes", 3),
    ("u2 fixes", 4),
    ("d fixes", 3),
    ("d sends", 3),
    ("e sends", 3),
)
