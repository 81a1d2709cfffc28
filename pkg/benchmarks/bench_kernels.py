"""Compare the compiled kernel against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Times the three kernel entry points on workloads shaped like the ones the
check suites produce, then one end-to-end suite under each backend.
"""

import random
import time
from fractions import Fraction

from hopftwist._kernel import _pykernel

try:
    from hopftwist._kernel import _ckernel
except ImportError:
    _ckernel = None

from hopftwist.constructors import group_algebra, pauli_8, symmetric_3
from hopftwist.scalars import _phi_deg, _rows_list


def rand_tensor(rng, dim, arity, terms):
    out = {}
    for _ in range(terms):
        out[rng.randrange(dim**arity)] = Fraction(
            rng.randint(-4, 4) or 1, rng.choice([1, 2, 3])
        )
    return out


def time_call(fn, args, repeat):
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        for a in args * repeat:
            fn(*a)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_tensor_convolve():
    H = group_algebra(pauli_8())
    base = H.base_table()
    rng = random.Random(7)
    cases = []
    for arity in (2, 3):
        for _ in range(20):
            cases.append(
                (
                    rand_tensor(rng, H.dim, arity, 6),
                    rand_tensor(rng, H.dim, arity, 6),
                    H.dim,
                    arity,
                    base,
                )
            )
    return "tensor_convolve (dim 8, arity 2-3)", cases, 20


def bench_cyclo_mul():
    rng = random.Random(11)
    n = 12
    phi = _phi_deg(n)
    rows = _rows_list(n)
    cases = []
    for _ in range(40):
        a = {rng.randrange(phi): Fraction(rng.randint(-3, 3) or 1) for _ in range(3)}
        b = {rng.randrange(phi): Fraction(rng.randint(-3, 3) or 1) for _ in range(3)}
        cases.append((a, b, n, phi, rows))
    return "cyclo_mul (conductor 12)", cases, 200


def bench_torus_scan():
    return "torus_scan (window 3)", [(1, 6, 3), (2, 10, 3)], 3


def main():
    if _ckernel is None:
        print("compiled kernel not built; showing pure timings only")
    benches = [bench_tensor_convolve(), bench_cyclo_mul(), bench_torus_scan()]
    header = "%-36s %12s %12s %8s" % ("workload", "pure", "compiled", "speedup")
    print(header)
    print("-" * len(header))
    for label, cases, repeat in benches:
        fname = label.split(" ")[0]
        pure = time_call(getattr(_pykernel, fname), cases, repeat)
        if _ckernel is None:
            print("%-36s %10.1fms %12s %8s" % (label, pure * 1e3, "-", "-"))
            continue
        comp = time_call(getattr(_ckernel, fname), cases, repeat)
        print(
            "%-36s %10.1fms %10.1fms %7.1fx"
            % (label, pure * 1e3, comp * 1e3, pure / comp)
        )

    # end to end: one axiom sweep per backend (same code path the CLI uses)
    from hopftwist.multilinear import verify_hopf

    H = group_algebra(symmetric_3())
    t0 = time.perf_counter()
    for _ in range(5):
        assert all(o.ok for o in verify_hopf(H))
    dt = time.perf_counter() - t0
    from hopftwist._kernel import api

    print()
    print(
        "verify_hopf(k[S3]) x5 under active backend %r: %.1fms"
        % (api.BACKEND, dt * 1e3)
    )
    print("set HOPFTWIST_PURE=1 and rerun to time the fallback end to end")


if __name__ == "__main__":
    main()
