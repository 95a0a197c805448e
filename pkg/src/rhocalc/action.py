"""Derived conjugation actions of d, e, d_j, d_f on words of F = <a, b, c>.

Conventions: x^g = g^-1 x g, and x^e = delta(x) where delta fixes a, c and
sends b to b^c, so conjugation by e shifts b_i to b_{i+1}. Conjugation by d
fixes b_i for i >= 1 and conjugates a and b_i, i <= 0, by b.

The d-action is computed on the {a, b_i} spelling of a word ("AB word"),
found by :func:`spine_decompose`. The scan is sound, not complete: a word it
rejects may still lie in <a, b_i>.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import NotInDomain, UnknownGenerator
from .funcset import FunctionSeq, bump, reverse
from .letters import A, a, b, c, d, e, g1, g2, g3
from .words import IDENTITY, Word, apply_endo, conjugate, product

A_CODE = _kernels.A_CODE


@dataclass(frozen=True)
class ABLetter:
    kind: str  # "A" or "B"
    index: int
    exp: int

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise ValueError(f"bad kind {self.kind!r}")
        if self.kind == "A" and self.index != 0:
            raise ValueError("A letters carry index 0")
        if not self.exp:
            raise ValueError("zero exponent")


@dataclass(frozen=True)
class PairWord:
    left: Word
    right: Word

    def __post_init__(self):
        if any(not s.barred for s in self.left.symbols()):
            raise ValueError("left coordinate must use barred symbols only")
        if any(s.barred for s in self.right.symbols()):
            raise ValueError("right coordinate must use unbarred symbols only")

    def __mul__(self, other: PairWord) -> PairWord:
        return PairWord(self.left * other.left, self.right * other.right)

    def __str__(self):
        return f"({self.left}, {self.right})"


# -- F-words built from functions -------------------------------------------

def b_sub(i: int) -> Word:
    return conjugate(Word.letter(b), Word.letter(c, i))


def _b_raw(f: FunctionSeq) -> list:
    raw = []
    for i, v in f.entries:
        raw += [(c, -i), (b, v), (c, i)]
    return raw


def b_word(f: FunctionSeq) -> Word:
    """b_f = prod over ascending i of b_i^f(i)."""
    return Word(_b_raw(f))


def a_word(f: FunctionSeq) -> Word:
    """a_f = b_f^-1 a b_f."""
    bf = b_word(f)
    return Word(list((~bf).syllables) + [(a, 1)] + list(bf.syllables))


def d_sub(i: int, dsym=d, esym=e) -> Word:
    """d_i = e^-i d e^i."""
    return conjugate(Word.letter(dsym), Word.letter(esym, i))


def d_word(f: FunctionSeq, dsym=d, esym=e) -> Word:
    return product(conjugate(Word.letter(dsym, v), Word.letter(esym, i)) for i, v in f.entries)


# -- AB words ------------------------------------------------------------------

def _scan(w: Word):
    codes, exps = _kernels.scan_ab(w.syllables, a, b, c)
    if codes is None:
        raise NotInDomain(f"{exps} in {w}")
    return codes, exps


def _expand(codes, exps) -> Word:
    return Word._reduced(_kernels.expand_ab(codes, exps, a, b, c))


def _spine(w: Word):
    codes, exps = _scan(w)
    if _expand(codes, exps) != w:
        raise AssertionError(f"spine scan does not round-trip on {w}")
    return codes, exps


def spine_decompose(w: Word) -> list:
    codes, exps = _spine(w)
    return [
        ABLetter("A", 0, x) if code == A_CODE else ABLetter("B", code, x)
        for code, x in zip(codes, exps)
    ]


def expand_ab(letters) -> Word:
    """Re-expand AB letters (b_i := c^-i b c^i) into a reduced word."""
    codes, exps = _kernels.reduce_ab(
        [A_CODE if l.kind == "A" else l.index for l in letters],
        [l.exp for l in letters],
    )
    return _expand(codes, exps)


# -- actions ---------------------------------------------------------------------

def e_conj(w: Word, k: int) -> Word:
    """w^{e^k} = delta^k(w)."""
    if k == 0:
        return w
    return apply_endo({a: A, b: b_sub(k), c: Word.letter(c)}, w)


def _check_sign(s):
    if s not in (1, -1):
        raise ValueError("sign must be +1 or -1")


def d_conj(w: Word, s: int) -> Word:
    _check_sign(s)
    codes, exps = _spine(w)
    return _expand(*_kernels.d_action_ab(codes, exps, 0, s))


def dj_conj(w: Word, j: int, s: int) -> Word:
    """w^{d_j^s}, equal to e_conj(d_conj(e_conj(w, -j), s), j).

    Shifting by e only relabels b_i as b_{i-j}, so the action is applied
    directly as conjugation by b_j^s of the letters a, b_i (i <= j).
    """
    _check_sign(s)
    codes, exps = _spine(w)
    return _expand(*_kernels.d_action_ab(codes, exps, j, s))


def dj_conj_composed(w: Word, j: int, s: int) -> Word:
    """The literal three-step composition, kept as the reference for dj_conj."""
    return e_conj(d_conj(e_conj(w, -j), s), j)


def df_conj(w: Word, f: FunctionSeq, order: str = "asc") -> Word:
    """Apply d_j f(j) times for each j in the support of f.

    ``order`` picks the processing order of the support: "asc" or "desc".
    Since d_j fixes the letters it moves' conjugator b_j, d_j^n acts as one
    conjugation by b_j^n.
    """
    entries = f.entries if order == "asc" else tuple(reversed(f.entries))
    codes, exps = _spine(w)
    for j, n in entries:
        codes, exps = _kernels.d_action_ab(codes, exps, j, n)
    return _expand(codes, exps)


def df_conj_stepwise(w: Word, f: FunctionSeq) -> Word:
    """df_conj by repeated single steps of dj_conj."""
    for j, n in f.entries:
        s = 1 if n > 0 else -1
        for _ in range(abs(n)):
            w = dj_conj(w, j, s)
    return w


def conj_program(w: Word, program: Word) -> Word:
    """w^program for a word ``program`` in d, e, applied syllable by syllable."""
    codes, exps = _spine(w)
    for s, n in program.syllables:
        if s is e:
            codes = _kernels.shift_ab(codes, n)
        elif s is d:
            codes, exps = _kernels.d_action_ab(codes, exps, 0, n)
        else:
            raise UnknownGenerator(s)
    return _expand(codes, exps)


def conj_program_stepwise(w: Word, program: Word) -> Word:
    for s, n in program.syllables:
        if s is e:
            w = e_conj(w, n)
        elif s is d:
            sign = 1 if n > 0 else -1
            for _ in range(abs(n)):
                w = d_conj(w, sign)
        else:
            raise UnknownGenerator(s)
    return w


# -- checks ------------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    ok: bool
    label: str
    cases: tuple = ()  # (name, got, expected)

    def failures(self):
        return [x for x in self.cases if x[1] != x[2]]


def lemma35_check(f: FunctionSeq, j: int) -> CheckReport:
    af = a_word(f)
    cases = []
    for s in (1, -1):
        got = dj_conj(af, j, s)
        expected = a_word(bump(f, j, s))
        cases.append((f"a_f^(d_{j}^{s})", got, expected))
    return CheckReport(all(g == x for _, g, x in cases), f"lemma35 f={f} j={j}", tuple(cases))


def commute_check(f: FunctionSeq, j1: int, j2: int, s1: int = 1, s2: int = 1) -> CheckReport:
    af = a_word(f)
    one = dj_conj(dj_conj(af, j1, s1), j2, s2)
    two = dj_conj(dj_conj(af, j2, s2), j1, s1)
    expected = a_word(bump(bump(f, j1, s1), j2, s2))
    cases = (
        (f"a_f^(d_{j1} d_{j2})", one, expected),
        (f"a_f^(d_{j2} d_{j1})", two, expected),
    )
    return CheckReport(one == two == expected, f"commute f={f} j={j1},{j2}", cases)


# -- the paired group and T ----------------------------------------------------

_ABAR, _DBAR, _EBAR = a.bar(), d.bar(), e.bar()
_PAIR_IMAGES = {
    g1: (Word.letter(_ABAR), A),
    g2: (Word.letter(_DBAR), Word.letter(d)),
    g3: (Word.letter(_EBAR), Word.letter(e, -1)),
}


def pair_eval(w: Word) -> PairWord:
    """Evaluate a word in g1, g2, g3 at (a-bar, a), (d-bar, d), (e-bar, e^-1)."""
    left = apply_endo({g: im[0] for g, im in _PAIR_IMAGES.items()}, w)
    right = apply_endo({g: im[1] for g, im in _PAIR_IMAGES.items()}, w)
    return PairWord(left, right)


def lambda_word(f: FunctionSeq) -> Word:
    """Abstract word in g1, g2, g3 whose pair_eval image is lambda_f."""
    return product(conjugate(Word.letter(g2, v), Word.letter(g3, i)) for i, v in f.entries)


def d_tilde_rho(f: FunctionSeq) -> Word:
    """prod over ascending i of d_{-i}^f(i)."""
    return product(conjugate(Word.letter(d, v), Word.letter(e, -i)) for i, v in f.entries)


def d_rho(f: FunctionSeq) -> Word:
    """d_{rho f}: the same factors as d_tilde_rho in ascending index order."""
    return d_word(reverse(f))


def lambda_pair(f: FunctionSeq) -> PairWord:
    pair = PairWord(d_word(f, _DBAR, _EBAR), d_tilde_rho(f))
    realized = pair_eval(lambda_word(f))
    if realized != pair:
        raise AssertionError(f"lambda_{f} is not realized in T: {realized} != {pair}")
    return pair


def bar_drop_translate(q1: Word) -> Word:
    """Drop bars from a word in a-bar, d-bar, e-bar and negate e exponents."""
    raw = []
    for s, n in q1.syllables:
        if s is _ABAR:
            raw.append((a, n))
        elif s is _DBAR:
            raw.append((d, n))
        elif s is _EBAR:
            raw.append((e, -n))
        else:
            raise UnknownGenerator(s)
    return Word(raw)


def q1_word(f: FunctionSeq) -> Word:
    """a-bar^{d-bar_f} written in a-bar, d-bar, e-bar."""
    return conjugate(Word.letter(_ABAR), d_word(f, _DBAR, _EBAR))


def rho_chain_check(f: FunctionSeq) -> CheckReport:
    right = lambda_pair(f).right
    got = conj_program(A, right)
    expected = a_word(reverse(f))
    cases = [("a^(d~_rho f)", got, expected)]
    q2 = bar_drop_translate(q1_word(f))
    cases.append(("q2 = a^(d~_rho f)", q2, conjugate(A, right)))
    return CheckReport(all(g == x for _, g, x in cases), f"rho-chain f={f}", tuple(cases))


__all__ = [
    "ABLetter", "PairWord", "CheckReport", "IDENTITY",
    "b_sub", "b_word", "a_word", "d_sub", "d_word",
    "spine_decompose", "expand_ab", "e_conj", "d_conj", "dj_conj", "dj_conj_composed",
    "df_conj", "df_conj_stepwise", "conj_program", "conj_program_stepwise",
    "lemma35_check", "commute_check", "pair_eval", "lambda_word", "lambda_pair",
    "d_tilde_rho", "d_rho", "bar_drop_translate", "q1_word", "rho_chain_check",
]
