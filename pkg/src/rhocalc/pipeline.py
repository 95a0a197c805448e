"""From an explicit (K_X, L_X) build K_P, K_Q, K_Q1 and K_rhoX with L_rhoX.

Each stage is first built with the benign-intersection / benign-join
combinators, then restacked into display order: base generators, then
the new stable letters; base relations, then one block per stable letter.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinators import (
    benign_intersection,
    benign_join,
    commuting,
    direct_product,
    group_A,
    group_A_bar,
)
from .errors import AlreadyBarred, CountMismatch
from .letters import ABC, ABC_BAR, STABLE, X_A, X_ABAR, a, d, e, v1, v2, w1, w2, w3, w4
from .presentation import (
    ExplicitBenign,
    Presentation,
    SubgroupSpec,
    bar_copy,
    bar_word,
    counts,
    disjointify,
    normalize,
    rename,
    tietze_add,
    validate,
    validate_benign,
)
from .words import Word


def _letters(syms):
    return tuple(Word.letter(s) for s in syms)


def prepare(inp: ExplicitBenign) -> ExplicitBenign:
    """Make a, b, c literal generators and move every other name off the reserved letters."""
    validate_benign(inp)
    for g in inp.k.gens:
        if g.barred:
            raise AlreadyBarred(g)
    literal = [g for g, w in zip(ABC, inp.abc) if w == Word.letter(g) and g in inp.k.gens]
    taken = set(X_A) | set(X_ABAR) | set(STABLE)
    k, mapping = disjointify(inp.k, taken, exempt=literal)
    for g, w in zip(ABC, inp.abc):
        if g not in literal:
            k = tietze_add(k, g, rename(w, mapping))
    lwords = []
    for w in inp.l.gens:
        w = rename(w, mapping)
        if w and w not in lwords:
            lwords.append(w)
    return ExplicitBenign(k, SubgroupSpec(k, tuple(lwords)), _letters(ABC))


@dataclass(frozen=True)
class Block:
    name: str
    expected: int
    actual: int


@dataclass(frozen=True)
class PipelineTrace:
    input: ExplicitBenign
    kp: Presentation
    kq: Presentation
    kq1: Presentation
    krho: Presentation
    l_q: SubgroupSpec
    l_q1: SubgroupSpec
    l_rho: SubgroupSpec
    counts_expected: tuple
    counts_actual: tuple
    blocks: tuple = ()


def _extra(base: Presentation) -> tuple:
    """Generators of K_X other than a, b, c."""
    return tuple(g for g in base.gens if g not in ABC)


def build_KP(inp: ExplicitBenign):
    """K_P = K-bar x A, in display order. Returns (presentation, block sizes)."""
    kbar = bar_copy(inp.k)
    extra_bar = tuple(g.bar() for g in _extra(inp.k))
    ra, rabar = group_A().rels, group_A_bar().rels
    c81 = commuting(X_A, X_ABAR)
    cx = commuting(X_A, extra_bar)
    kp = validate(Presentation(X_A + X_ABAR + extra_bar, ra + rabar + kbar.rels + c81 + cx))
    blocks = (
        ("R_A", len(ra)),
        ("R_Abar", len(rabar)),
        ("R_bar", len(kbar.rels)),
        ("commuting A/Abar", len(c81)),
        ("commuting A/Xbar", len(cx)),
    )
    return kp, blocks


def _restack(combined: Presentation, base: Presentation, letters):
    """Reorder a combinator output as base then one block per stable letter.

    Checks that the combinator output holds exactly those relations.
    """
    new_rels = [r for r in combined.rels if r.symbols() & set(letters)]
    blocks = []
    rels = list(base.rels)
    # a relation belongs to the last listed letter it mentions
    for i, t in enumerate(letters):
        later = set(letters[i + 1:])
        block = [r for r in new_rels if t in r.symbols() and not (r.symbols() & later)]
        blocks.append(block)
        rels += block
    out = validate(Presentation(base.gens + tuple(letters), tuple(rels)))
    if normalize(out) != normalize(combined) or len(out.rels) != len(combined.rels):
        raise CountMismatch("restacked stage differs from the combinator output")
    return out, blocks


def _fab():
    """F x F-bar on a, b, c, a-bar, b-bar, c-bar."""
    return direct_product(Presentation(ABC), Presentation(ABC_BAR))


def build_KQ(inp: ExplicitBenign, kp: Presentation | None = None):
    if kp is None:
        kp, _ = build_KP(inp)
    kt = direct_product(group_A(), group_A_bar())
    A_, D_, E_ = _letters((a, d, e))
    t_gens = (
        Word.letter(a.bar()) * A_,
        Word.letter(d.bar()) * D_,
        Word.letter(e.bar()) * ~E_,
    )
    lp_gens = tuple(bar_word(w) for w in inp.l.gens) + (A_, D_, E_)
    gwords = _letters(X_A + X_ABAR)
    combined, _ = benign_intersection(
        gwords,
        [(kt, SubgroupSpec(kt, t_gens), v1), (kp, SubgroupSpec(kp, lp_gens), v2)],
        gwords,
    )
    kq, blocks = _restack(combined, kp, (v1, v2))
    vv = Word.letter(v1) * Word.letter(v2)
    l_q = SubgroupSpec(kq, tuple(g ^ vv for g in gwords))
    return kq, l_q, blocks


def build_KQ1(inp: ExplicitBenign, kq: Presentation | None = None, l_q: SubgroupSpec | None = None):
    if kq is None:
        kq, l_q, _ = build_KQ(inp)
    fab = _fab()
    gwords = _letters(ABC + ABC_BAR)
    combined, l_join = benign_join(
        gwords,
        [(fab, SubgroupSpec(fab, _letters(ABC_BAR)), w1), (kq, l_q, w2)],
        gwords,
    )
    kq1, blocks = _restack(combined, kq, (w1, w2))
    return kq1, SubgroupSpec(kq1, l_join.gens), blocks


def _formula(m, n, k):
    return m + 21, n + 9 * m + k + 136


def expected_blocks(m, n, k):
    return (
        ("R_A", 20),
        ("R_Abar", 20),
        ("R_bar", n),
        ("commuting A/Abar", 81),
        ("commuting A/Xbar", 9 * (m - 3)),
        ("v1 fixes", 3),
        ("v2 fixes", k + 3),
        ("w1 fixes", 3),
        ("w2 fixes", 18),
        ("w3 fixes", 3),
        ("w4 fixes", 12),
    )


def build_KrhoX(inp: ExplicitBenign, prepared: bool = False) -> PipelineTrace:
    if not prepared:
        inp = prepare(inp)
    kp, kp_blocks = build_KP(inp)
    kq, l_q, vb = build_KQ(inp, kp)
    kq1, l_q1, wb = build_KQ1(inp, kq, l_q)
    fab = _fab()
    gwords = _letters(ABC + ABC_BAR)
    combined, l_int = benign_intersection(
        gwords,
        [(fab, SubgroupSpec(fab, _letters(ABC)), w3), (kq1, l_q1, w4)],
        gwords,
    )
    krho, w34 = _restack(combined, kq1, (w3, w4))
    l_rho = SubgroupSpec(krho, l_int.gens)

    m, n = counts(inp.k)
    k = len(inp.l.gens)
    sizes = list(kp_blocks) + [
        ("v1 fixes", len(vb[0])),
        ("v2 fixes", len(vb[1])),
        ("w1 fixes", len(wb[0])),
        ("w2 fixes", len(wb[1])),
        ("w3 fixes", len(w34[0])),
        ("w4 fixes", len(w34[1])),
    ]
    blocks = tuple(
        Block(name, exp, act) for (name, exp), (_, act) in zip(expected_blocks(m, n, k), sizes)
    )
    trace = PipelineTrace(
        input=inp,
        kp=kp,
        kq=kq,
        kq1=kq1,
        krho=krho,
        l_q=l_q,
        l_q1=l_q1,
        l_rho=l_rho,
        counts_expected=_formula(m, n, k),
        counts_actual=counts(krho),
        blocks=blocks,
    )
    if trace.counts_actual != trace.counts_expected:
        raise CountMismatch(f"expected {trace.counts_expected}, got {trace.counts_actual}")
    return trace


def count_report(trace: PipelineTrace) -> dict:
    m, n = counts(trace.input.k)
    gen_terms = [
        {"block_name": "X_A", "expected": 9, "actual": len(X_A)},
        {"block_name": "X_Abar", "expected": 9, "actual": len(X_ABAR)},
        {"block_name": "Xbar minus abc", "expected": m - 3,
         "actual": len(trace.kp.gens) - 18},
        {"block_name": "v letters", "expected": 2,
         "actual": len(trace.kq.gens) - len(trace.kp.gens)},
        {"block_name": "w letters", "expected": 4,
         "actual": len(trace.krho.gens) - len(trace.kq.gens)},
    ]
    rel_terms = [{"block_name": b.name, "expected": b.expected, "actual": b.actual}
                 for b in trace.blocks]
    total_gens, total_rels = counts(trace.krho)
    ok = (
        all(t["expected"] == t["actual"] for t in gen_terms + rel_terms)
        and sum(t["actual"] for t in rel_terms) == total_rels
        and sum(t["actual"] for t in gen_terms) == total_gens
        and trace.counts_actual == trace.counts_expected
    )
    return {
        "m": m,
        "n": n,
        "k": len(trace.input.l.gens),
        "generators": gen_terms,
        "relations": rel_terms,
        "total": {
            "expected": list(trace.counts_expected),
            "actual": list(trace.counts_actual),
        },
        "ok": ok,
    }
