"""The named generators used by the constructions."""
from .words import GenSym, Word

a, b, c = GenSym("a"), GenSym("b"), GenSym("c")
t1, t1p = GenSym("t1"), GenSym("t1", 1)
u1, u2 = GenSym("u1"), GenSym("u2")
d, e = GenSym("d"), GenSym("e")

X_A = (a, b, c, t1, t1p, u1, u2, d, e)
X_ABAR = tuple(g.bar() for g in X_A)
ABC = (a, b, c)
ABC_BAR = tuple(g.bar() for g in ABC)

v1, v2 = GenSym("v1"), GenSym("v2")
w1, w2, w3, w4 = (GenSym(f"w{i}") for i in range(1, 5))
STABLE = (v1, v2, w1, w2, w3, w4)

# abstract letters for words in the generators of T
g1, g2, g3 = GenSym("g1"), GenSym("g2"), GenSym("g3")

A, B, C = (Word.letter(s) for s in ABC)
D, E = Word.letter(d), Word.letter(e)
