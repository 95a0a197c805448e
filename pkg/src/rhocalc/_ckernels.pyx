# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; same functions, same results."""

cdef long long _A_CODE = -(2**62)
A_CODE = _A_CODE


def reduce_pairs(pairs):
    cdef list out = []
    cdef Py_ssize_t n
    cdef tuple top
    for sym, exp in pairs:
        if not exp:
            continue
        n = len(out)
        if n:
            top = <tuple>out[n - 1]
            if top[0] is sym:
                exp = top[1] + exp
                if exp:
                    out[n - 1] = (sym, exp)
                else:
                    out.pop()
                continue
        out.append((sym, exp))
    return tuple(out)


def join_reduced(tuple x, tuple y):
    cdef Py_ssize_t i = len(x) - 1
    cdef Py_ssize_t j = 0
    cdef Py_ssize_t ny = len(y)
    cdef tuple xi, yj
    while i >= 0 and j < ny:
        xi = <tuple>x[i]
        yj = <tuple>y[j]
        if xi[0] is not yj[0]:
            break
        exp = xi[1] + yj[1]
        if exp:
            return x[:i] + ((xi[0], exp),) + y[j + 1:]
        i -= 1
        j += 1
    return x[: i + 1] + y[j:]


def invert_pairs(tuple x):
    cdef Py_ssize_t n = len(x)
    cdef Py_ssize_t i
    cdef list out = [None] * n
    cdef tuple p
    for i in range(n):
        p = <tuple>x[n - 1 - i]
        out[i] = (p[0], -p[1])
    return tuple(out)


cdef inline void _push(list codes, list exps, long long code, object exp):
    cdef Py_ssize_t n
    if not exp:
        return
    n = len(codes)
    if n and <long long>codes[n - 1] == code:
        exp = exps[n - 1] + exp
        if exp:
            exps[n - 1] = exp
        else:
            codes.pop()
            exps.pop()
    else:
        codes.append(code)
        exps.append(exp)


def reduce_ab(codes, exps):
    cdef list out_c = []
    cdef list out_e = []
    for code, exp in zip(codes, exps):
        _push(out_c, out_e, code, exp)
    return tuple(out_c), tuple(out_e)


def d_action_ab(codes, exps, long long j, n):
    cdef list out_c = []
    cdef list out_e = []
    cdef bint inside = False
    cdef bint moved
    cdef long long c
    cdef object neg = -n
    for code, exp in zip(codes, exps):
        c = code
        moved = c <= j
        if moved and not inside:
            _push(out_c, out_e, j, neg)
            inside = True
        elif inside and not moved:
            _push(out_c, out_e, j, n)
            inside = False
        _push(out_c, out_e, c, exp)
    if inside:
        _push(out_c, out_e, j, n)
    return tuple(out_c), tuple(out_e)


def shift_ab(codes, long long k):
    cdef list out = []
    cdef long long c
    for code in codes:
        c = code
        out.append(c if c == _A_CODE else c + k)
    return tuple(out)


def scan_ab(tuple syllables, a, b, c):
    cdef list codes = []
    cdef list exps = []
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
            codes.append(_A_CODE)
            exps.append(x)
        else:
            return None, f"symbol {s} outside {{a, b, c}}"
    if k:
        return None, f"final c-offset {k}"
    return tuple(codes), tuple(exps)


def expand_ab(codes, exps, a, b, c):
    cdef list out = []
    cdef long long prev = 0
    cdef long long cur, code
    for pcode, x in zip(codes, exps):
        code = pcode
        cur = 0 if code == _A_CODE else code
        if cur != prev:
            out.append((c, prev - cur))
        out.append((a, x) if code == _A_CODE else (b, x))
        prev = cur
    if prev:
        out.append((c, prev))
    return tuple(out)
