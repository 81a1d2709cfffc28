# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernel: same contracts as _pykernel, tightened loops.

Scalar values stay generic Python objects (Fraction, cyclotomic, series); the
win comes from typed loop indices and fewer temporary allocations.
"""

BACKEND = "compiled"


def tensor_convolve(dict a, dict b, int dim, int arity, list base):
    cdef dict out = {}
    cdef long ka, kb, idx, row
    cdef int t
    cdef long k
    cdef object va, vb, c, v, r, w, cv
    cdef tuple cell
    cdef list strides, da, db, partial, nxt
    cdef long acc, st
    if arity == 1:
        for ka, va in a.items():
            row = ka * dim
            for kb, vb in b.items():
                c = va * vb
                for k, w in <tuple> base[row + kb]:
                    v = c if w is None else c * w
                    r = out.get(k, 0) + v
                    if r:
                        out[k] = r
                    else:
                        out.pop(k, None)
        return out
    strides = [dim ** (arity - 1 - t) for t in range(arity)]
    for ka, va in a.items():
        da = []
        idx = ka
        for t in range(arity):
            st = <long> strides[t]
            da.append(idx // st)
            idx = idx % st
        for kb, vb in b.items():
            db = []
            idx = kb
            for t in range(arity):
                st = <long> strides[t]
                db.append(idx // st)
                idx = idx % st
            partial = [(0, va * vb)]
            for t in range(arity):
                cell = <tuple> base[(<long> da[t]) * dim + <long> db[t]]
                if not cell:
                    partial = []
                    break
                st = <long> strides[t]
                nxt = []
                for acc, cv in partial:
                    for k, w in cell:
                        nxt.append(
                            (acc + k * st, cv if w is None else cv * w)
                        )
                partial = nxt
            for acc, cv in partial:
                r = out.get(acc, 0) + cv
                if r:
                    out[acc] = r
                else:
                    out.pop(acc, None)
    return out


def cyclo_mul(dict a, dict b, int n, int phi, list rows):
    cdef dict out = {}
    cdef long ea, eb, e, j
    cdef object va, vb, v, r, w
    for ea, va in a.items():
        for eb, vb in b.items():
            e = ea + eb
            if e >= n:
                e -= n
            v = va * vb
            if e < phi:
                r = out.get(e, 0) + v
                if r:
                    out[e] = r
                else:
                    out.pop(e, None)
            else:
                for j, w in <list> rows[e - phi]:
                    r = out.get(j, 0) + v * w
                    if r:
                        out[j] = r
                    else:
                        out.pop(j, None)
    return out


def torus_scan(long p, long two_q, int w):
    cdef long bad = 0
    cdef int n_pts = (2 * w + 1) * (2 * w + 1)
    cdef list pts_j = []
    cdef list pts_k = []
    cdef int j, k
    for j in range(-w, w + 1):
        for k in range(-w, w + 1):
            pts_j.append(j)
            pts_k.append(k)
    cdef long j1, k1, j2, k2, j3, k3, e12, lhs, rhs
    cdef int i1, i2, i3
    for i1 in range(n_pts):
        j1 = pts_j[i1]
        k1 = pts_k[i1]
        for i2 in range(n_pts):
            j2 = pts_j[i2]
            k2 = pts_k[i2]
            e12 = p * (j1 * k2 - k1 * j2)
            for i3 in range(n_pts):
                j3 = pts_j[i3]
                k3 = pts_k[i3]
                lhs = e12 + p * ((j1 + j2) * k3 - (k1 + k2) * j3)
                rhs = p * (j2 * k3 - k2 * j3) + p * (
                    j1 * (k2 + k3) - k1 * (j2 + j3)
                )
                if (lhs - rhs) % two_q:
                    bad += 1
    return bad
