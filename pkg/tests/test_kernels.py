"""Both kernel backends must agree with each other and with letter-level oracles."""
from hypothesis import given
from hypothesis import strategies as st

from conftest import BACKENDS
from oracles import brute_reduce
from rhocalc import _kernels, _pykernels
from rhocalc.letters import a, b, c

A_CODE = _pykernels.A_CODE

pairs = st.lists(st.tuples(st.sampled_from([a, b, c]), st.integers(-3, 3)), max_size=16)
ab_codes = st.one_of(st.just(A_CODE), st.integers(-4, 4))
ab_words = st.lists(st.tuples(ab_codes, st.integers(-3, 3)), max_size=10)


def test_selected_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")


@given(pairs)
def test_reduce_pairs(raw):
    for kernels in BACKENDS:
        assert kernels.reduce_pairs(raw) == brute_reduce(raw)


@given(pairs, pairs)
def test_join_reduced(x, y):
    for kernels in BACKENDS:
        rx, ry = kernels.reduce_pairs(x), kernels.reduce_pairs(y)
        assert kernels.join_reduced(rx, ry) == brute_reduce(rx + ry)


@given(pairs)
def test_invert_pairs(raw):
    for kernels in BACKENDS:
        x = kernels.reduce_pairs(raw)
        assert kernels.join_reduced(x, kernels.invert_pairs(x)) == ()


def _ab_oracle(codes, exps, j, n):
    # conjugate each moved letter separately, then reduce
    raw = []
    for code, e in zip(codes, exps):
        if code <= j:
            raw += [(j, -n), (code, e), (j, n)]
        else:
            raw.append((code, e))
    return brute_reduce(raw)


@given(ab_words, st.integers(-4, 4), st.integers(-3, 3))
def test_d_action_ab(raw, j, n):
    for kernels in BACKENDS:
        codes, exps = _pykernels.reduce_ab([x for x, _ in raw], [e for _, e in raw])
        got_c, got_e = kernels.d_action_ab(codes, exps, j, n)
        assert tuple(zip(got_c, got_e)) == _ab_oracle(codes, exps, j, n)


@given(ab_words, st.integers(-4, 4))
def test_shift_ab(raw, k):
    for kernels in BACKENDS:
        codes = tuple(x for x, _ in raw)
        assert kernels.shift_ab(codes, k) == tuple(x if x == A_CODE else x + k for x in codes)


@given(ab_words)
def test_expand_then_scan(raw):
    for kernels in BACKENDS:
        codes, exps = _pykernels.reduce_ab([x for x, _ in raw], [e for _, e in raw])
        syll = kernels.expand_ab(codes, exps, a, b, c)
        naive = []
        for code, e in zip(codes, exps):
            naive += [(a, e)] if code == A_CODE else [(c, -code), (b, e), (c, code)]
        assert syll == brute_reduce(naive)
        assert kernels.scan_ab(syll, a, b, c) == (codes, exps)


def test_scan_rejections(kernels):
    assert kernels.scan_ab(((c, -1), (a, 1), (c, 1)), a, b, c)[0] is None
    assert kernels.scan_ab(((b, 1), (c, 1)), a, b, c)[0] is None


def test_pure_python_override():
    import os
    import subprocess
    import sys

    env = dict(os.environ, RHOCALC_PURE_PYTHON="1")
    proc = subprocess.run(
        [sys.executable, "-c", "import rhocalc; print(rhocalc.BACKEND)"],
        capture_output=True, text=True, env=env,
    )
    assert proc.stdout.strip() == "python"
