"""Compare the compiled and pure-Python kernels.

Kernel calls are timed in-process on both modules. The bump-identity sweep is
timed end to end in one subprocess per backend, since the backend is fixed
at import time.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import os
import random
import subprocess
import sys
import timeit

from rhocalc import _pykernels
from rhocalc.letters import a, b, c

try:
    from rhocalc import _ckernels
except ImportError:
    _ckernels = None

SWEEP = """
import time
from rhocalc import BACKEND
from rhocalc.action import lemma35_check
from rhocalc.sweeps import sparse_grid
t0 = time.perf_counter()
ok = all(lemma35_check(f, j).ok for f in sparse_grid(3, 3) for j in range(-4, 5))
print(BACKEND, ok, time.perf_counter() - t0)
"""


def _workload(seed=1):
    rng = random.Random(seed)
    pairs = [(rng.choice((a, b, c)), rng.choice((-2, -1, 1, 2))) for _ in range(400)]
    codes = [rng.randint(-6, 6) for _ in range(200)]
    exps = [rng.choice((-2, -1, 1, 2)) for _ in codes]
    return pairs, _pykernels.reduce_ab(codes, exps)


def _time_kernels(mod, repeat):
    pairs, (codes, exps) = _workload()
    syll = mod.expand_ab(codes, exps, a, b, c)
    jobs = {
        "reduce_pairs": lambda: mod.reduce_pairs(pairs),
        "d_action_ab": lambda: mod.d_action_ab(codes, exps, 0, 1),
        "expand_ab": lambda: mod.expand_ab(codes, exps, a, b, c),
        "scan_ab": lambda: mod.scan_ab(syll, a, b, c),
    }
    return {name: min(timeit.repeat(fn, number=200, repeat=repeat)) / 200 for name, fn in jobs.items()}


def _time_sweep(pure):
    env = dict(os.environ)
    if pure:
        env["RHOCALC_PURE_PYTHON"] = "1"
    else:
        env.pop("RHOCALC_PURE_PYTHON", None)
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], out[1] == "True", float(out[2])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    py = _time_kernels(_pykernels, args.repeat)
    cy = _time_kernels(_ckernels, args.repeat) if _ckernels else None
    print(f"{'kernel':<14}{'python us':>12}{'cython us':>12}{'speedup':>10}")
    for name, t in py.items():
        if cy:
            print(f"{name:<14}{t * 1e6:>12.1f}{cy[name] * 1e6:>12.1f}{t / cy[name]:>9.1f}x")
        else:
            print(f"{name:<14}{t * 1e6:>12.1f}{'n/a':>12}")

    print()
    for pure in (True, False):
        backend, ok, secs = _time_sweep(pure)
        print(f"lemma35 sweep ({backend}): {secs:.2f} s, {'ok' if ok else 'FAILED'}")


if __name__ == "__main__":
    main()
