import random
from pathlib import Path

import pytest

from rhocalc.errors import AlreadyBarred
from rhocalc.letters import ABC, STABLE, X_A, X_ABAR, a, b, c, d, v1, v2, w1, w2, w3, w4
from rhocalc.pipeline import (
    build_KP,
    build_KQ,
    build_KQ1,
    build_KrhoX,
    count_report,
    expected_blocks,
    prepare,
)
from rhocalc.presentation import (
    ExplicitBenign,
    Presentation,
    Relation,
    SubgroupSpec,
    counts,
    find_violation,
    fixes,
    format_presentation,
    format_subgroup,
)
from rhocalc.words import IDENTITY, GenSym, Word, parse_word, sym

W = parse_word
GOLDEN = Path(__file__).parent / "golden"


def free_instance():
    k = Presentation((a, b, c), ())
    return ExplicitBenign(k, SubgroupSpec(k, (W("b^-1 a b"),)), (W("a"), W("b"), W("c")))


def _random_word(rng, gens, length):
    raw = [(rng.choice(gens), rng.choice([-2, -1, 1, 2])) for _ in range(length)]
    w = Word(raw)
    return w if w else Word.letter(gens[0])


def random_instance(rng, m, n, k, names=None):
    """K_X on m generators with n relations and k distinct L_X words."""
    extra = names or [f"x{i}" for i in range(m - 3)]
    gens = (a, b, c) + tuple(GenSym(s) for s in extra)
    rels = tuple(Relation(_random_word(rng, gens, rng.randint(1, 5)), IDENTITY) for _ in range(n))
    kp = Presentation(gens, rels)
    lwords = []
    while len(lwords) < k:
        w = _random_word(rng, gens, rng.randint(1, 4))
        if w not in lwords:
            lwords.append(w)
    return ExplicitBenign(kp, SubgroupSpec(kp, tuple(lwords)), (W("a"), W("b"), W("c")))


def test_free_instance_counts():
    trace = build_KrhoX(free_instance())
    assert counts(trace.krho) == (24, 164)
    assert trace.counts_expected == (24, 164)
    assert all(bl.expected == bl.actual for bl in trace.blocks)
    rep = count_report(trace)
    assert rep["ok"]
    assert rep["total"] == {"expected": [24, 164], "actual": [24, 164]}
    assert len(rep["relations"]) == 11


def test_free_instance_golden():
    trace = build_KrhoX(free_instance())
    assert format_presentation(trace.krho) == (GOLDEN / "KrhoX_free.txt").read_text()
    assert format_subgroup(trace.l_rho, "KrhoX.txt") == (GOLDEN / "LrhoX_free.txt").read_text()


def test_generator_display_order():
    trace = build_KrhoX(free_instance())
    assert trace.krho.gens == X_A + X_ABAR + (v1, v2, w1, w2, w3, w4)


def test_build_kp_sizes():
    kp, blocks = build_KP(prepare(free_instance()))
    assert counts(kp) == (18, 121)
    assert [n for _, n in blocks] == [20, 20, 0, 81, 0]


def test_stage_increments():
    rng = random.Random(7)
    inp = prepare(random_instance(rng, 5, 4, 2))
    kp, _ = build_KP(inp)
    kq, l_q, _ = build_KQ(inp, kp)
    kq1, l_q1, _ = build_KQ1(inp, kq, l_q)
    krho = build_KrhoX(inp, prepared=True).krho
    g = [counts(p)[0] for p in (kp, kq, kq1, krho)]
    r = [counts(p)[1] for p in (kp, kq, kq1, krho)]
    assert [y - x for x, y in zip(g, g[1:])] == [2, 2, 2]
    assert [y - x for x, y in zip(r, r[1:])] == [3 + 2 + 3, 3 + 18, 3 + 12]
    assert len(l_q.gens) == 18 and len(l_q1.gens) == 12
    assert l_q.gens[0] == W("v2^-1 v1^-1 a v1 v2")


def test_fixing_blocks_have_fixing_shape():
    trace = build_KrhoX(random_instance(random.Random(3), 4, 3, 2))
    new = set(STABLE)
    for r in trace.krho.rels:
        letters = r.symbols() & new
        if not letters:
            continue
        t = r.lhs.syllables[0][0]
        assert t in new
        assert r == fixes(t, r.rhs)


def test_random_instances_match_formula():
    rng = random.Random(2024)
    seen = set()
    for _ in range(60):
        m, n, k = rng.randint(3, 8), rng.randint(0, 10), rng.randint(1, 5)
        seen.add((m, n, k))
        trace = build_KrhoX(random_instance(rng, m, n, k))
        assert counts(trace.krho) == (m + 21, n + 9 * m + k + 136)
        assert [bl.actual for bl in trace.blocks] == [x for _, x in expected_blocks(m, n, k)]
        assert count_report(trace)["ok"]
        for p in (trace.kp, trace.kq, trace.kq1, trace.krho):
            assert find_violation(p) is None
    assert len(seen) >= 50


def test_reserved_names_are_moved():
    rng = random.Random(11)
    inp = random_instance(rng, 6, 3, 2, names=["d", "v1", "w3"])
    trace = build_KrhoX(inp)
    assert counts(trace.krho) == (27, 3 + 54 + 2 + 136)
    k = trace.input.k
    assert set(k.gens) & (set(X_A) | set(STABLE)) == {a, b, c}
    assert GenSym("d#1") in k.gens and GenSym("v1#1") in k.gens


def test_prepare_alien_alphabet():
    p, q, r = sym("p"), sym("q"), sym("r")
    k = Presentation((p, q, r), (Relation(W("p q"), W("q p")),))
    inp = ExplicitBenign(k, SubgroupSpec(k, (W("q^-1 p q"),)), (W("p"), W("q"), W("r q")))
    out = prepare(inp)
    assert counts(out.k) == (6, 4)
    assert out.k.rels[-3:] == (Relation(W("a"), W("p")), Relation(W("b"), W("q")), Relation(W("c"), W("r q")))
    trace = build_KrhoX(inp)
    m, n, kk = 6, 4, 1
    assert counts(trace.krho) == (m + 21, n + 9 * m + kk + 136)


def test_prepare_dedups_l_words():
    k = Presentation((a, b, c), ())
    inp = ExplicitBenign(k, SubgroupSpec(k, (W("a"), W("a"), IDENTITY, W("b"))), (W("a"), W("b"), W("c")))
    assert prepare(inp).l.gens == (W("a"), W("b"))
    assert counts(build_KrhoX(inp).krho) == (24, 165)


def test_barred_input_rejected():
    k = Presentation((a, b, c, sym("~x")), ())
    inp = ExplicitBenign(k, SubgroupSpec(k, ()), (W("a"), W("b"), W("c")))
    with pytest.raises(AlreadyBarred):
        build_KrhoX(inp)


def test_deterministic():
    one = build_KrhoX(random_instance(random.Random(9), 5, 5, 3))
    two = build_KrhoX(random_instance(random.Random(9), 5, 5, 3))
    assert format_presentation(one.krho) == format_presentation(two.krho)
    assert one.l_rho.gens == two.l_rho.gens


def test_l_rho_words():
    trace = build_KrhoX(free_instance())
    ww = W("w3 w4")
    gw = [Word.letter(s) for s in ABC + tuple(s.bar() for s in ABC)]
    assert trace.l_rho.gens == tuple(g ^ ww for g in gw)


def test_l_x_barred_in_v2_block():
    trace = build_KrhoX(free_instance())
    assert fixes(v2, W("~b^-1 ~a ~b")) in trace.kq.rels
    for s in ("a", "d", "e"):
        assert fixes(v2, W(s)) in trace.kq.rels
    assert fixes(v1, W("~e e^-1")) in trace.kq.rels
    assert fixes(w2, W("v2^-1 v1^-1 ~d v1 v2")) in trace.kq1.rels
