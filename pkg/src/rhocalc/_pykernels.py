"""Pure-Python word kernels.

Two families of syllable words are handled here:

* generic words: tuples of ``(sym, exp)`` pairs whose symbols are interned,
  so symbol equality is object identity;
* AB words: parallel tuples ``(codes, exps)`` over the alphabet
  ``{a} ∪ {b_i}``, where ``b_i`` has code ``i`` and ``a`` has code
  :data:`A_CODE`, a sentinel below every index in use.

``_ckernels.pyx`` mirrors this module function by function.
"""

A_CODE = -(2**62)


def reduce_pairs(pairs):
    out = []
    for sym, exp in pairs:
        if not exp:
            continue
        if out and out[-1][0] is sym:
            exp = out[-1][1] + exp
            if exp:
                out[-1] = (sym, exp)
            else:
                out.pop()
        else:
            out.append((sym, exp))
    return tuple(out)


def join_reduced(x, y):
    # x and y are reduced; only the seam can cancel.
    i = len(x) - 1
    j = 0
    ny = len(y)
    while i >= 0 and j < ny and x[i][0] is y[j][0]:
        exp = x[i][1] + y[j][1]
        if exp:
            return x[:i] + ((x[i][0], exp),) + y[j + 1:]
        i -= 1
        j += 1
    return x[: i + 1] + y[j:]


def invert_pairs(x):
    return tuple((sym, -exp) for sym, exp in reversed(x))


def _push(codes, exps, code, exp):
    if not exp:
        return
    if codes and codes[-1] == code:
        exp = exps[-1] + exp
        if exp:
            exps[-1] = exp
        else:
            codes.pop()
            exps.pop()
    else:
        codes.append(code)
        exps.append(exp)


def reduce_ab(codes, exps):
    out_c, out_e = [], []
    for code, exp in zip(codes, exps):
        _push(out_c, out_e, code, exp)
    return tuple(out_c), tuple(out_e)


def d_action_ab(codes, exps, j, n):
    """Conjugate every letter with code <= j by b_j**n, leave the rest fixed.

    Runs of moved letters share one conjugator, so interior b_j**n b_j**-n
    pairs are never materialized.
    """
    out_c, out_e = [], []
    inside = False
    for code, exp in zip(codes, exps):
        moved = code <= j
        if moved and not inside:
            _push(out_c, out_e, j, -n)
            inside = True
        elif inside and not moved:
            _push(out_c, out_e, j, n)
            inside = False
        _push(out_c, out_e, code, exp)
    if inside:
        _push(out_c, out_e, j, n)
    return tuple(out_c), tuple(out_e)


def shift_ab(codes, k):
    return tuple(code if code == A_CODE else code + k for code in codes)


def scan_ab(syllables, a, b, c):
    """Spell a word over {a, b, c} in the letters a, b_i.

    Returns ``(codes, exps)``, or ``(None, message)`` when a sits at a
    non-zero c-offset, the final offset is non-zero, or a foreign symbol occurs.
    """
    codes, exps = [], []
    k = 0
    for s, x in syllables:
        if s is c:
            k += x
        elif s is b:
            codes.append(-k)
            exps.append(x)
        elif s is a:
            if k:
                return None, f"a at c-offset {k}"
            codes.append(A_CODE)
            exps.append(x)
        else:
            return None, f"symbol {s} outside {{a, b, c}}"
    if k:
        return None, f"final c-offset {k}"
    return tuple(codes), tuple(exps)


def expand_ab(codes, exps, a, b, c):
    """Reduced syllables of an AB word, b_i written as c^-i b c^i.

    Assumes the AB word is reduced, so the only merging is between the
    c-powers of neighbouring letters.
    """
    out = []
    prev = 0
    for code, x in zip(codes, exps):
        cur = 0 if code == A_CODE else code
        if cur != prev:
            out.append((c, prev - cur))
        out.append((a, x) if code == A_CODE else (b, x))
        prev = cur
    if prev:
        out.append((c, prev))
    return tuple(out)
