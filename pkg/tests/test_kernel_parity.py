"""The compiled kernel must agree with the pure-Python one exactly."""

import os
import random
import subprocess
import sys
from fractions import Fraction

import pytest

from hopftwist._kernel import _pykernel
from hopftwist._kernel import api
from hopftwist.constructors import group_algebra, symmetric_3, taft
from hopftwist.scalars import _phi_deg, _rows_list

try:
    from hopftwist._kernel import _ckernel
except ImportError:
    _ckernel = None

needs_compiled = pytest.mark.skipif(
    _ckernel is None, reason="compiled kernel not built"
)


def rand_tensor(rng, dim, arity, terms):
    out = {}
    for _ in range(terms):
        key = rng.randrange(dim**arity)
        out[key] = Fraction(rng.randint(-4, 4), rng.choice([1, 2, 3]))
    return {k: v for k, v in out.items() if v}


@needs_compiled
@pytest.mark.parametrize("arity", [1, 2, 3])
def test_tensor_convolve_parity(arity):
    rng = random.Random(100 + arity)
    hosts = [group_algebra(symmetric_3()), taft(3)]
    for H in hosts:
        base = H.base_table()
        for _ in range(10):
            a = rand_tensor(rng, H.dim, arity, 4)
            b = rand_tensor(rng, H.dim, arity, 4)
            got = _ckernel.tensor_convolve(a, b, H.dim, arity, base)
            want = _pykernel.tensor_convolve(a, b, H.dim, arity, base)
            assert got == want


@needs_compiled
def test_tensor_convolve_drops_exact_zeros():
    H = group_algebra(symmetric_3())
    base = H.base_table()
    a = {0: Fraction(1), 1: Fraction(-1)}
    b = {0: Fraction(1)}
    for kern in (_ckernel, _pykernel):
        out = kern.tensor_convolve(a, {0: Fraction(1), 1: Fraction(-1)}, H.dim, 1, base)
        # (e - g)(e - g) = e - 2g + g^2; no zero-valued keys may linger
        assert all(v for v in out.values())
        assert kern.tensor_convolve({}, b, H.dim, 1, base) == {}


@needs_compiled
@pytest.mark.parametrize("conductor", [3, 4, 5, 8, 12])
def test_cyclo_mul_parity(conductor):
    rng = random.Random(conductor)
    phi = _phi_deg(conductor)
    rows = _rows_list(conductor)
    for _ in range(20):
        a = {
            rng.randrange(phi): Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
            for _ in range(3)
        }
        b = {
            rng.randrange(phi): Fraction(rng.randint(-3, 3), rng.choice([1, 2]))
            for _ in range(3)
        }
        a = {k: v for k, v in a.items() if v}
        b = {k: v for k, v in b.items() if v}
        got = _ckernel.cyclo_mul(a, b, conductor, phi, rows)
        want = _pykernel.cyclo_mul(a, b, conductor, phi, rows)
        assert got == want


@needs_compiled
@pytest.mark.parametrize("p,two_q,w", [(1, 4, 2), (1, 6, 2), (2, 10, 2)])
def test_torus_scan_parity(p, two_q, w):
    assert _ckernel.torus_scan(p, two_q, w) == _pykernel.torus_scan(p, two_q, w)
    # the bilinear exponent form is always closed
    assert _pykernel.torus_scan(p, two_q, w) == 0


def test_active_backend_exposed():
    assert api.BACKEND in ("pure", "compiled")
    from hopftwist import kernel_backend

    assert kernel_backend == api.BACKEND


def test_pure_env_var_forces_fallback():
    env = dict(os.environ, HOPFTWIST_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from hopftwist import kernel_backend; print(kernel_backend)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "pure"


def test_pure_backend_passes_axioms():
    env = dict(os.environ, HOPFTWIST_PURE="1")
    code = (
        "from hopftwist.constructors import group_algebra, symmetric_3\n"
        "from hopftwist.multilinear import verify_hopf\n"
        "assert all(o.ok for o in verify_hopf(group_algebra(symmetric_3())))\n"
        "print('ok')\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "ok"
