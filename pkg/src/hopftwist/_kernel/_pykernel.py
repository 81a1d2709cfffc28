"""Pure-Python kernel: reference implementation of the hot loops.

The compiled twin in _ckernel.pyx mirrors this module function for function;
kernel parity tests compare the two on random inputs.
"""

BACKEND = "pure"


def tensor_convolve(a, b, dim, arity, base):
    """Multiply two sparse tensors over an algebra given by structure cells.

    a, b map flat indices (base-dim digits, leftmost leg most significant) to
    scalar coefficients.  base[i*dim + j] is a tuple of (k, coeff) pairs for
    the product of basis i with basis j; coeff None means 1 and skips a
    multiplication.  Returns a dict with exact zeros dropped.
    """
    out = {}
    if arity == 1:
        for ka, va in a.items():
            row = ka * dim
            for kb, vb in b.items():
                c = va * vb
                for k, w in base[row + kb]:
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
        r = ka
        for s in strides:
            da.append(r // s)
            r %= s
        for kb, vb in b.items():
            db = []
            r = kb
            for s in strides:
                db.append(r // s)
                r %= s
            partial = [(0, va * vb)]
            for t in range(arity):
                cell = base[da[t] * dim + db[t]]
                if not cell:
                    partial = []
                    break
                st = strides[t]
                nxt = []
                for acc, cv in partial:
                    for k, w in cell:
                        nxt.append((acc + k * st, cv if w is None else cv * w))
                partial = nxt
            for idx, cv in partial:
                r = out.get(idx, 0) + cv
                if r:
                    out[idx] = r
                else:
                    out.pop(idx, None)
    return out


def cyclo_mul(a, b, n, phi, rows):
    """Multiply two reduced cyclotomic coordinate dicts at conductor n.

    rows[e - phi] lists (j, w) pairs expressing z^e in the reduced basis for
    phi <= e <= 2*(phi-1); callers guarantee both inputs reduced.
    """
    out = {}
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
                for j, w in rows[e - phi]:
                    r = out.get(j, 0) + v * w
                    if r:
                        out[j] = r
                    else:
                        out.pop(j, None)
    return out


def torus_scan(p, two_q, w):
    """Count failures of the 2-cocycle identity for the antisymmetric
    exponent form e(a,b) = p*(j*n' - k*m') over the integer window |.| <= w.

    Exponents live mod two_q.  Returns the number of failing triples; a
    bilinear form always gives 0, so any nonzero return is a real failure.
    """
    pts = [(j, k) for j in range(-w, w + 1) for k in range(-w, w + 1)]
    bad = 0
    for j1, k1 in pts:
        for j2, k2 in pts:
            e12 = p * (j1 * k2 - k1 * j2)
            for j3, k3 in pts:
                lhs = e12 + p * ((j1 + j2) * k3 - (k1 + k2) * j3)
                rhs = p * (j2 * k3 - k2 * j3) + p * (j1 * (k2 + k3) - k1 * (j2 + j3))
                if (lhs - rhs) % two_q:
                    bad += 1
    return bad
