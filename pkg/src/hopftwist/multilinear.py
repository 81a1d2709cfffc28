"""Finite-dimensional algebra/coalgebra/Hopf presentations and the sparse
leg-indexed tensors their cochains live in.

Conventions:
  * basis indices are 0-based everywhere, including JSON;
  * vectors are sparse dicts {index: scalar} with no stored zeros;
  * linear maps (antipode, module actions) are dense row lists, row i being
    the image of basis i;
  * multiplication and coproduct tables are sparse;
  * tensor legs are 0-based, leftmost leg most significant in flat keys.
"""

from fractions import Fraction

from . import linalg
from ._kernel import api as _kernel
from .errors import (
    ArityMismatch,
    BadLeg,
    BadPositions,
    NotInvertible,
)
from .reporting import CheckOutcome
from .scalars import ScalarRing, Series


def encode_key(digits, dim):
    key = 0
    for d in digits:
        key = key * dim + d
    return key


def decode_key(key, dim, arity):
    out = [0] * arity
    for t in range(arity - 1, -1, -1):
        key, out[t] = divmod(key, dim)
    return tuple(out)


def _vec_is_zero(v):
    return not v


def _clean(d):
    return {k: v for k, v in d.items() if v}


class _MulOps:
    """Shared multiplication helpers for algebra-like presentations."""

    def _init_mul(self, dim, labels, ring, mult, unit):
        self.dim = dim
        self.labels = list(labels)
        self.ring = ring
        # normalize: {(i, j): {k: scalar}} with zeros dropped
        self.mult = {}
        for (i, j), cell in mult.items():
            cc = {k: ring.coerce(v) for k, v in cell.items()}
            cc = _clean(cc)
            if cc:
                self.mult[(i, j)] = cc
        self.unit = [ring.coerce(v) for v in unit]
        self._base = None
        self._unit_support = None
        self._pw = 0
        self._ucoef = None

    def basis_mul(self, i, j):
        return self.mult.get((i, j), {})

    def base_table(self):
        """Structure cells for the kernel: tuple per (i, j), coeff None = 1."""
        if self._base is None:
            one = self.ring.one()
            tbl = []
            for i in range(self.dim):
                for j in range(self.dim):
                    cell = self.mult.get((i, j), {})
                    tbl.append(
                        tuple(
                            (k, None if v == one else v)
                            for k, v in sorted(cell.items())
                        )
                    )
            self._base = tbl
        return self._base

    def unit_support(self):
        if self._unit_support is None:
            self._unit_support = tuple(
                (k, v) for k, v in enumerate(self.unit) if v
            )
        return self._unit_support

    def elem_unit(self):
        return {k: v for k, v in self.unit_support()}

    def elem_mul(self, u, v):
        return _kernel.tensor_convolve(u, v, self.dim, 1, self.base_table())

    def elem_inverse(self, u):
        t = LegTensor(self, 1, dict(u), _checked=True)
        return dict(tensor_invert(t).data)

    def pointwise_coeffs(self):
        """Per-index scale factors when the product is pointwise-diagonal
        (basis_mul(i, j) supported on i = j = result), else None.

        When every factor is 1 the cached value is the string "one" so
        tensor products reduce to key intersection."""
        if self._pw == 0:
            coeffs = [None] * self.dim
            for (i, j), cell in self.mult.items():
                if i != j or list(cell) != [i]:
                    self._pw = None
                    return None
                coeffs[i] = cell[i]
            one = self.ring.one()
            if all(c is not None and c == one for c in coeffs):
                self._pw = "one"
            else:
                zero = self.ring.zero()
                self._pw = [zero if c is None else c for c in coeffs]
        return self._pw

    def unit_coeff_table(self):
        """True when every structure coefficient equals 1."""
        if self._ucoef is None:
            self._ucoef = all(
                c is None for cell in self.base_table() for (_k, c) in cell
            )
        return self._ucoef

    def is_commutative_table(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self.basis_mul(i, j) != self.basis_mul(j, i):
                    return False
        return True


class AlgebraPresentation(_MulOps):
    """Finite-dimensional algebra with an optional scalar associator.

    assoc_flag is one of "associative", "quasi", "unchecked".  For "quasi"
    the associator maps basis triples to nonzero scalars phi with
    a*(b*c) = phi(a,b,c) * (a*b)*c.
    """

    def __init__(
        self,
        dim,
        labels,
        ring,
        mult,
        unit,
        assoc_flag="unchecked",
        associator=None,
    ):
        self._init_mul(dim, labels, ring, mult, unit)
        if assoc_flag not in ("associative", "quasi", "unchecked"):
            raise ValueError("bad assoc_flag %r" % (assoc_flag,))
        self.assoc_flag = assoc_flag
        self.associator = associator

    def check_unit_laws(self):
        bad = 0
        witness = None
        for i in range(self.dim):
            target = {i: self.ring.one()}
            left = self.elem_mul(self.elem_unit(), target)
            right = self.elem_mul(target, self.elem_unit())
            for got in (left, right):
                if got != target:
                    bad += 1
                    witness = witness or self.labels[i]
        return CheckOutcome.from_residual("unit-laws", bad, witness)

    def check_associativity(self):
        bad = 0
        witness = None
        one = self.ring.one()
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.basis_mul(i, j)
                for k in range(self.dim):
                    jk = self.basis_mul(j, k)
                    lhs = self.elem_mul({i: one}, jk)
                    rhs = self.elem_mul(ij, {k: one})
                    if self.assoc_flag == "quasi":
                        phi = self.associator.get((i, j, k), one)
                        rhs = {t: phi * v for t, v in rhs.items()}
                    if lhs != rhs:
                        bad += 1
                        if witness is None:
                            witness = "(%s,%s,%s)" % (
                                self.labels[i],
                                self.labels[j],
                                self.labels[k],
                            )
        cid = (
            "quasi-associativity"
            if self.assoc_flag == "quasi"
            else "associativity"
        )
        return CheckOutcome.from_residual(cid, bad, witness)


class CoalgebraPresentation:
    """Coproduct/counit tables without multiplication."""

    def __init__(self, dim, labels, ring, coproduct, counit):
        self.dim = dim
        self.labels = list(labels)
        self.ring = ring
        self.coproduct = {}
        for i, cell in coproduct.items():
            cc = _clean({jk: ring.coerce(v) for jk, v in cell.items()})
            if cc:
                self.coproduct[i] = cc
        self.counit = [ring.coerce(v) for v in counit]


class HopfPresentation(_MulOps):
    """Hopf algebra (or bialgebra when antipode is None) on a finite basis."""

    def __init__(
        self,
        dim,
        labels,
        ring,
        mult,
        unit,
        coproduct,
        counit,
        antipode=None,
        commutative=False,
        cocommutative=False,
        name=None,
    ):
        self._init_mul(dim, labels, ring, mult, unit)
        self.coproduct = {}
        for i, cell in coproduct.items():
            cc = _clean({jk: ring.coerce(v) for jk, v in cell.items()})
            if cc:
                self.coproduct[i] = cc
        self.counit = [ring.coerce(v) for v in counit]
        self.antipode = None
        if antipode is not None:
            self.antipode = [
                [ring.coerce(v) for v in row] for row in antipode
            ]
        self.commutative = commutative
        self.cocommutative = cocommutative
        self.name = name or "hopf-%d" % dim
        self._order0 = None

    # -- coalgebra helpers

    def basis_coproduct(self, i):
        return self.coproduct.get(i, {})

    def elem_coproduct(self, u):
        """Coproduct of a sparse vector as a sparse rank-2 dict {(j,k): c}."""
        out = {}
        for i, c in u.items():
            for (j, k), w in self.basis_coproduct(i).items():
                r = out.get((j, k), 0) + c * w
                if r:
                    out[(j, k)] = r
                else:
                    out.pop((j, k), None)
        return out

    def elem_counit(self, u):
        acc = self.ring.zero()
        for i, c in u.items():
            if self.counit[i]:
                acc = acc + c * self.counit[i]
        return acc

    def apply_antipode(self, u):
        if self.antipode is None:
            raise ValueError("presentation has no antipode")
        out = {}
        for i, c in u.items():
            row = self.antipode[i]
            for j, w in enumerate(row):
                if w:
                    r = out.get(j, 0) + c * w
                    if r:
                        out[j] = r
                    else:
                        out.pop(j, None)
        return out

    def order0_host(self):
        """Exact-ring twin with hbar-degree-0 structure constants."""
        if not self.ring.is_series:
            return self
        if self._order0 is None:
            exact = ScalarRing()

            def drop(v):
                c0 = v.coeffs[0]
                if any(k != 0 for k in c0.terms):
                    raise NotInvertible(
                        "order-0 structure constants involve tau"
                    )
                return c0.terms.get(0, Fraction(0))

            mult = {
                ij: {k: drop(v) for k, v in cell.items()}
                for ij, cell in self.mult.items()
            }
            cop = {
                i: {jk: drop(v) for jk, v in cell.items()}
                for i, cell in self.coproduct.items()
            }
            self._order0 = HopfPresentation(
                self.dim,
                self.labels,
                exact,
                mult,
                [drop(v) for v in self.unit],
                cop,
                [drop(v) for v in self.counit],
                antipode=None,
                commutative=self.commutative,
                cocommutative=self.cocommutative,
                name=self.name + "-order0",
            )
        return self._order0


def with_series_ring(host, order):
    """Rebuild a HopfPresentation over the order-K series ring.

    Exact structure constants coerce into constant series; the original
    host is untouched."""
    ring = ScalarRing(hbar_order=order)
    return HopfPresentation(
        host.dim,
        host.labels,
        ring,
        host.mult,
        host.unit,
        host.coproduct,
        host.counit,
        antipode=host.antipode,
        commutative=host.commutative,
        cocommutative=host.cocommutative,
        name=host.name + "-h%d" % order,
    )


class LegTensor:
    """Sparse element of host^(tensor arity)."""

    __slots__ = ("host", "arity", "data")

    def __init__(self, host, arity, entries, _checked=False):
        self.host = host
        self.arity = arity
        if _checked:
            self.data = entries
            return
        data = {}
        dim = host.dim
        for key, v in entries.items():
            if isinstance(key, tuple):
                if len(key) != arity:
                    raise ArityMismatch(
                        "key %r has %d legs, tensor has %d"
                        % (key, len(key), arity)
                    )
                if not all(0 <= d < dim for d in key):
                    raise ValueError("basis index out of range in %r" % (key,))
                key = encode_key(key, dim)
            v = host.ring.coerce(v)
            if v:
                r = data.get(key)
                data[key] = v if r is None else r + v
                if not data[key]:
                    del data[key]
        self.data = data

    # -- construction

    @staticmethod
    def unit(host, arity):
        if arity == 0:
            return LegTensor(host, 0, {0: host.ring.one()}, _checked=True)
        sup = host.unit_support()
        out = {}
        keys = [()]
        vals = {(): host.ring.one()}
        for _ in range(arity):
            nkeys = []
            nvals = {}
            for kt in keys:
                cv = vals[kt]
                for k, v in sup:
                    nk = kt + (k,)
                    nkeys.append(nk)
                    nvals[nk] = cv * v
            keys, vals = nkeys, nvals
        dim = host.dim
        for kt, v in vals.items():
            out[encode_key(kt, dim)] = v
        return LegTensor(host, arity, out, _checked=True)

    @staticmethod
    def from_element(host, vec):
        return LegTensor(host, 1, dict(vec), _checked=True)

    @staticmethod
    def outer(host, vecs):
        """Tensor product of sparse vectors, one per leg."""
        arity = len(vecs)
        dim = host.dim
        items = [(0, host.ring.one())]
        for vec in vecs:
            nxt = []
            for key, c in items:
                for k, v in vec.items():
                    nxt.append((key * dim + k, c * v))
            items = nxt
        data = {}
        for key, c in items:
            if c:
                r = data.get(key)
                data[key] = c if r is None else r + c
                if not data[key]:
                    del data[key]
        return LegTensor(host, arity, data, _checked=True)

    # -- views

    def entries(self):
        """Sorted (digit tuple, scalar) pairs."""
        dim = self.host.dim
        return [
            (decode_key(k, dim, self.arity), v)
            for k, v in sorted(self.data.items())
        ]

    def term_count(self):
        return len(self.data)

    def is_zero(self):
        return not self.data

    def copy(self):
        return LegTensor(self.host, self.arity, dict(self.data), _checked=True)

    # -- algebra

    def mul(self, other):
        if other.host is not self.host:
            raise ValueError("tensors live over different hosts")
        if other.arity != self.arity:
            raise ArityMismatch(
                "arity %d vs %d" % (self.arity, other.arity)
            )
        host = self.host
        pw = host.pointwise_coeffs()
        if pw is not None:
            # pointwise product: key intersection instead of convolution
            a, b = self.data, other.data
            if len(b) < len(a):
                a, b = b, a
            out = {}
            if pw == "one":
                for k, va in a.items():
                    vb = b.get(k)
                    if vb is not None:
                        r = va * vb
                        if r:
                            out[k] = r
            else:
                dim = host.dim
                for k, va in a.items():
                    vb = b.get(k)
                    if vb is None:
                        continue
                    r = va * vb
                    for d in decode_key(k, dim, self.arity):
                        r = r * pw[d]
                    if r:
                        out[k] = r
            return LegTensor(host, self.arity, out, _checked=True)
        if host.ring.is_series and host.unit_coeff_table():
            return self._mul_filtered(other)
        data = _kernel.tensor_convolve(
            self.data, other.data, host.dim, self.arity,
            host.base_table(),
        )
        return LegTensor(host, self.arity, data, _checked=True)

    def _mul_filtered(self, other):
        """Series-ring product split by hbar valuation.

        Valid only for coefficient-1 structure tables: pieces beyond the
        truncation order are never formed, and the order-0 piece (usually
        a single unit key) meets the others in tiny convolutions."""
        host = self.host
        K = host.ring.hbar_order
        dim, arity = host.dim, self.arity
        base = host.base_table()

        def split(data):
            parts = [dict() for _ in range(K + 1)]
            for k, s in data.items():
                for v in range(K + 1):
                    tl = s.coeffs[v]
                    if tl:
                        parts[v][k] = tl
            return parts

        A = split(self.data)
        B = split(other.data)
        acc = [dict() for _ in range(K + 1)]
        for v in range(K + 1):
            av = A[v]
            if not av:
                continue
            for w in range(K + 1 - v):
                bw = B[w]
                if not bw:
                    continue
                piece = _kernel.tensor_convolve(av, bw, dim, arity, base)
                tgt = acc[v + w]
                for k, val in piece.items():
                    r = tgt.get(k)
                    if r is None:
                        tgt[k] = val
                    else:
                        r = r + val
                        if r:
                            tgt[k] = r
                        else:
                            del tgt[k]
        out = {}
        for k in set().union(*acc):
            cmap = {}
            for v in range(K + 1):
                tl = acc[v].get(k)
                if tl:
                    cmap[v] = tl
            if cmap:
                out[k] = Series(K, cmap)
        return LegTensor(host, arity, out, _checked=True)

    def add(self, other):
        if other.host is not self.host or other.arity != self.arity:
            raise ArityMismatch("cannot add tensors of different shape")
        data = dict(self.data)
        for k, v in other.data.items():
            r = data.get(k, 0) + v
            if r:
                data[k] = r
            else:
                data.pop(k, None)
        return LegTensor(self.host, self.arity, data, _checked=True)

    def sub(self, other):
        return self.add(other.scale(-1))

    def scale(self, c):
        c = self.host.ring.coerce(c)
        if not c:
            return LegTensor(self.host, self.arity, {}, _checked=True)
        return LegTensor(
            self.host,
            self.arity,
            _clean({k: v * c for k, v in self.data.items()}),
            _checked=True,
        )

    def eq(self, other):
        return (
            self.host is other.host
            and self.arity == other.arity
            and self.data == other.data
        )

    def __eq__(self, other):
        if not isinstance(other, LegTensor):
            return NotImplemented
        return self.eq(other)

    __hash__ = None

    # -- leg calculus

    def leg_embed(self, positions, arity_out):
        positions = tuple(positions)
        if len(positions) != self.arity:
            raise BadPositions(
                "%d positions for a %d-leg tensor" % (len(positions), self.arity)
            )
        if any(
            positions[i] >= positions[i + 1] for i in range(len(positions) - 1)
        ):
            raise BadPositions("positions must be strictly increasing")
        if positions and (positions[0] < 0 or positions[-1] >= arity_out):
            raise BadPositions("positions out of range")
        host = self.host
        dim = host.dim
        sup = host.unit_support()
        missing = [p for p in range(arity_out) if p not in positions]
        out = {}
        for key, c in self.data.items():
            digits = decode_key(key, dim, self.arity)
            fills = [((), c)]
            for _ in missing:
                fills = [
                    (f + (k,), cv * v) for f, cv in fills for k, v in sup
                ]
            for fill, cv in fills:
                nd = [0] * arity_out
                for p, d in zip(positions, digits):
                    nd[p] = d
                for p, d in zip(missing, fill):
                    nd[p] = d
                nk = encode_key(nd, dim)
                r = out.get(nk, 0) + cv
                if r:
                    out[nk] = r
                else:
                    out.pop(nk, None)
        return LegTensor(host, arity_out, out, _checked=True)

    def coproduct_leg(self, leg):
        if not 0 <= leg < self.arity:
            raise BadLeg("leg %d of %d" % (leg, self.arity))
        host = self.host
        dim = host.dim
        out = {}
        for key, c in self.data.items():
            digits = decode_key(key, dim, self.arity)
            d = digits[leg]
            for (j, k), w in host.basis_coproduct(d).items():
                nd = digits[:leg] + (j, k) + digits[leg + 1 :]
                nk = encode_key(nd, dim)
                r = out.get(nk, 0) + c * w
                if r:
                    out[nk] = r
                else:
                    out.pop(nk, None)
        return LegTensor(host, self.arity + 1, out, _checked=True)

    def counit_leg(self, leg):
        if not 0 <= leg < self.arity:
            raise BadLeg("leg %d of %d" % (leg, self.arity))
        host = self.host
        dim = host.dim
        out = {}
        for key, c in self.data.items():
            digits = decode_key(key, dim, self.arity)
            e = host.counit[digits[leg]]
            if not e:
                continue
            nd = digits[:leg] + digits[leg + 1 :]
            nk = encode_key(nd, dim)
            r = out.get(nk, 0) + c * e
            if r:
                out[nk] = r
            else:
                out.pop(nk, None)
        return LegTensor(host, self.arity - 1, out, _checked=True)

    def unit_like(self, arity):
        return LegTensor.unit(self.host, arity)

    def __repr__(self):
        return "LegTensor(%s, arity=%d, %d terms)" % (
            getattr(self.host, "name", "host"),
            self.arity,
            len(self.data),
        )


# -- module-level op aliases matching the published interface


def tensor_mul(a, b):
    return a.mul(b)


def leg_embed(t, positions, arity_out):
    return t.leg_embed(positions, arity_out)


def coproduct_leg(t, leg):
    return t.coproduct_leg(leg)


def tensor_invert(t):
    """Two-sided inverse of a tensor in host^(tensor arity).

    Exact rings: left-regular-representation solve.  Series rings: solve at
    hbar-order 0, then lift by a geometric series.
    """
    host = t.host
    ring = host.ring
    unit = LegTensor.unit(host, t.arity)
    if not ring.is_series:
        return _invert_exact(t, unit)
    K = ring.hbar_order
    t0_entries = {}
    for k, v in t.data.items():
        c0 = v.coeffs[0]
        if any(d != 0 for d in c0.terms):
            raise NotInvertible("order-0 part involves tau")
        q = c0.terms.get(0)
        if q is not None:
            t0_entries[k] = q
    host0 = host.order0_host()
    t0 = LegTensor(host0, t.arity, dict(t0_entries), _checked=True)
    unit0 = LegTensor.unit(host0, t.arity)
    if t0.eq(unit0):
        x0 = unit
    else:
        inv0 = _invert_exact(t0, unit0)
        x0 = LegTensor(
            host,
            t.arity,
            {k: ring.coerce(v) for k, v in inv0.data.items()},
            _checked=True,
        )
    # geometric lift: s = unit - t*x0 has positive hbar valuation
    s = unit.sub(t.mul(x0))
    if any(v.coeffs[0] for v in s.data.values()):
        raise NotInvertible("order-0 inverse did not cancel")
    acc = unit
    term = unit
    for _ in range(K):
        term = term.mul(s)
        if term.is_zero():
            break
        acc = acc.add(term)
    return x0.mul(acc)


def _invert_exact(t, unit):
    host = t.host
    dim = host.dim
    arity = t.arity
    D = dim ** arity
    base = host.base_table()
    cols = []
    one = host.ring.one()
    for j in range(D):
        col = _kernel.tensor_convolve(t.data, {j: one}, dim, arity, base)
        cols.append(col)
    zero = host.ring.zero()
    mat = [[cols[j].get(i, zero) for j in range(D)] for i in range(D)]
    rhs = [unit.data.get(i, zero) for i in range(D)]
    sol = linalg.solve(mat, rhs)
    if sol is None:
        raise NotInvertible("tensor has no inverse")
    inv = LegTensor(
        host, arity, {i: v for i, v in enumerate(sol) if v}, _checked=True
    )
    if not t.mul(inv).eq(unit) or not inv.mul(t).eq(unit):
        raise NotInvertible("one-sided inverse only")
    return inv


class ModuleAlgebra:
    """An algebra A with a left action of a Hopf presentation H.

    action[(i, j)] is the sparse image of basis_H[i] acting on basis_A[j].
    """

    def __init__(self, host, algebra, action):
        self.host = host
        self.algebra = algebra
        self.action = {}
        ring = algebra.ring
        for key, vec in action.items():
            vv = _clean({k: ring.coerce(v) for k, v in vec.items()})
            if vv:
                self.action[key] = vv

    def act_basis(self, i, j):
        return self.action.get((i, j), {})

    def act(self, hvec, avec):
        out = {}
        for i, ch in hvec.items():
            for j, ca in avec.items():
                cell = self.action.get((i, j))
                if not cell:
                    continue
                c = ch * ca
                for k, w in cell.items():
                    r = out.get(k, 0) + c * w
                    if r:
                        out[k] = r
                    else:
                        out.pop(k, None)
        return out

    def act_tensor(self, ht, avecs):
        """Apply a rank-n host tensor legwise to a list of n A-vectors.

        Returns a dict mapping tuples of A-indices to scalars.
        """
        n = ht.arity
        if len(avecs) != n:
            raise ArityMismatch("%d vectors for arity %d" % (len(avecs), n))
        dim = self.host.dim
        out = {}
        for key, c in ht.data.items():
            digits = decode_key(key, dim, n)
            partial = [((), c)]
            for t in range(n):
                cell_vec = self.act({digits[t]: self.host.ring.one()}, avecs[t])
                if not cell_vec:
                    partial = []
                    break
                partial = [
                    (ks + (k,), cv * v)
                    for ks, cv in partial
                    for k, v in cell_vec.items()
                ]
            for ks, cv in partial:
                r = out.get(ks, 0) + cv
                if r:
                    out[ks] = r
                else:
                    out.pop(ks, None)
        return out

    def verify(self):
        """Module-algebra axioms, exhaustively on basis elements."""
        H, A = self.host, self.algebra
        one = H.ring.one()
        checks = []

        bad, wit = 0, None
        for j in range(A.dim):
            x = {j: A.ring.one()}
            if self.act(H.elem_unit(), x) != x:
                bad += 1
                wit = wit or A.labels[j]
        checks.append(CheckOutcome.from_residual("module-unit", bad, wit))

        bad, wit = 0, None
        for i in range(H.dim):
            hi = {i: one}
            for k in range(H.dim):
                prod = H.basis_mul(i, k)
                for j in range(A.dim):
                    x = {j: A.ring.one()}
                    lhs = self.act(prod, x)
                    rhs = self.act(hi, self.act({k: one}, x))
                    if lhs != rhs:
                        bad += 1
                        if wit is None:
                            wit = "(%s,%s,%s)" % (
                                H.labels[i], H.labels[k], A.labels[j],
                            )
        checks.append(CheckOutcome.from_residual("module-action", bad, wit))

        bad, wit = 0, None
        for i in range(H.dim):
            # h acting on the algebra unit gives counit(h) * 1
            got = self.act({i: one}, A.elem_unit())
            want = _clean(
                {k: H.counit[i] * v for k, v in enumerate(A.unit)}
            )
            if got != want:
                bad += 1
                wit = wit or H.labels[i]
        checks.append(
            CheckOutcome.from_residual("module-algebra-unit", bad, wit)
        )

        bad, wit = 0, None
        for i in range(H.dim):
            dp = H.basis_coproduct(i)
            for ja in range(A.dim):
                for jb in range(A.dim):
                    ab = A.basis_mul(ja, jb)
                    lhs = self.act({i: one}, ab)
                    rhs = {}
                    for (h1, h2), w in dp.items():
                        u = self.act({h1: one}, {ja: A.ring.one()})
                        v = self.act({h2: one}, {jb: A.ring.one()})
                        prod = A.elem_mul(u, v)
                        for k, c in prod.items():
                            r = rhs.get(k, 0) + w * c
                            if r:
                                rhs[k] = r
                            else:
                                rhs.pop(k, None)
                    if lhs != rhs:
                        bad += 1
                        if wit is None:
                            wit = "(%s;%s,%s)" % (
                                H.labels[i], A.labels[ja], A.labels[jb],
                            )
        checks.append(
            CheckOutcome.from_residual("module-algebra-mult", bad, wit)
        )
        return checks


# ---------------------------------------------------------------------------
# linear maps and convolution


def identity_map(host):
    one = host.ring.one()
    zero = host.ring.zero()
    return [
        [one if i == j else zero for j in range(host.dim)]
        for i in range(host.dim)
    ]


def unit_counit_map(host):
    """b -> counit(b) * 1."""
    return [
        [host.counit[i] * v for v in host.unit] for i in range(host.dim)
    ]


def antipode_map(host):
    if host.antipode is None:
        raise ValueError("presentation has no antipode")
    return [row[:] for row in host.antipode]


def map_apply(m, vec):
    out = {}
    for i, c in vec.items():
        for j, w in enumerate(m[i]):
            if w:
                r = out.get(j, 0) + c * w
                if r:
                    out[j] = r
                else:
                    out.pop(j, None)
    return out


def convolution(host, f, g):
    """Convolution product of two linear maps given as dense row matrices."""
    zero = host.ring.zero()
    out = []
    for b in range(host.dim):
        acc = {}
        for (j, k), w in host.basis_coproduct(b).items():
            fj = {t: c for t, c in enumerate(f[j]) if c}
            gk = {t: c for t, c in enumerate(g[k]) if c}
            prod = host.elem_mul(fj, gk)
            for tgt, c in prod.items():
                r = acc.get(tgt, 0) + w * c
                if r:
                    acc[tgt] = r
                else:
                    acc.pop(tgt, None)
        out.append([acc.get(j, zero) for j in range(host.dim)])
    return out


def maps_equal(a, b):
    for ra, rb in zip(a, b):
        for va, vb in zip(ra, rb):
            if not va == vb:
                return False
    return True


# ---------------------------------------------------------------------------
# Hopf axiom verification


def verify_hopf(host):
    """Exhaustive axiom report for a HopfPresentation.

    Returns a list of CheckOutcome; all residuals are exact term counts.
    """
    checks = []
    one = host.ring.one()
    dim = host.dim

    # unit laws
    bad, wit = 0, None
    unit_vec = host.elem_unit()
    for i in range(dim):
        x = {i: one}
        if host.elem_mul(unit_vec, x) != x or host.elem_mul(x, unit_vec) != x:
            bad += 1
            wit = wit or host.labels[i]
    checks.append(CheckOutcome.from_residual("unit-laws", bad, wit))

    # associativity
    bad, wit = 0, None
    for i in range(dim):
        xi = {i: one}
        for j in range(dim):
            ij = host.basis_mul(i, j)
            for k in range(dim):
                lhs = host.elem_mul(xi, host.basis_mul(j, k))
                rhs = host.elem_mul(ij, {k: one})
                if lhs != rhs:
                    bad += 1
                    if wit is None:
                        wit = "(%s,%s,%s)" % (
                            host.labels[i], host.labels[j], host.labels[k],
                        )
    checks.append(CheckOutcome.from_residual("associativity", bad, wit))

    # coassociativity on basis elements, via leg calculus
    bad, wit = 0, None
    for i in range(dim):
        t = LegTensor.from_element(host, {i: one})
        d1 = t.coproduct_leg(0)
        lhs = d1.coproduct_leg(0)
        rhs = d1.coproduct_leg(1)
        if not lhs.eq(rhs):
            bad += len(lhs.sub(rhs).data)
            wit = wit or host.labels[i]
    checks.append(CheckOutcome.from_residual("coassociativity", bad, wit))

    # counit laws
    bad, wit = 0, None
    for i in range(dim):
        t = LegTensor.from_element(host, {i: one})
        d1 = t.coproduct_leg(0)
        left = d1.counit_leg(0)
        right = d1.counit_leg(1)
        if not left.eq(t) or not right.eq(t):
            bad += 1
            wit = wit or host.labels[i]
    checks.append(CheckOutcome.from_residual("counit-laws", bad, wit))

    # coproduct and counit are algebra morphisms
    bad, wit = 0, None
    unit2 = LegTensor.unit(host, 2)
    d_unit = LegTensor.from_element(host, unit_vec).coproduct_leg(0)
    if not d_unit.eq(unit2):
        bad += 1
        wit = "coproduct(1)"
    for i in range(dim):
        ti = LegTensor.from_element(host, {i: one}).coproduct_leg(0)
        for j in range(dim):
            tj = LegTensor.from_element(host, {j: one}).coproduct_leg(0)
            prod = host.basis_mul(i, j)
            dprod = LegTensor.from_element(host, prod).coproduct_leg(0)
            if not ti.mul(tj).eq(dprod):
                bad += 1
                if wit is None:
                    wit = "(%s,%s)" % (host.labels[i], host.labels[j])
    checks.append(
        CheckOutcome.from_residual("coproduct-morphism", bad, wit)
    )

    bad, wit = 0, None
    if host.elem_counit(unit_vec) != one:
        bad += 1
        wit = "counit(1)"
    for i in range(dim):
        ei = host.counit[i]
        for j in range(dim):
            lhs = host.elem_counit(host.basis_mul(i, j))
            if lhs != ei * host.counit[j]:
                bad += 1
                if wit is None:
                    wit = "(%s,%s)" % (host.labels[i], host.labels[j])
    checks.append(CheckOutcome.from_residual("counit-morphism", bad, wit))

    if host.antipode is None:
        checks.append(
            CheckOutcome.error("antipode-convolution", "no antipode given")
        )
        return checks

    # antipode: id * S = S * id = unit.counit
    smap = antipode_map(host)
    imap = identity_map(host)
    target = unit_counit_map(host)
    lhs = convolution(host, imap, smap)
    rhs = convolution(host, smap, imap)
    bad = 0
    wit = None
    for b in range(dim):
        for m, side in ((lhs, "id*S"), (rhs, "S*id")):
            row = m[b]
            trow = target[b]
            if any(not x == y for x, y in zip(row, trow)):
                bad += 1
                if wit is None:
                    wit = "%s at %s" % (side, host.labels[b])
    checks.append(
        CheckOutcome.from_residual("antipode-convolution", bad, wit)
    )

    # S(1) = 1
    s1 = host.apply_antipode(unit_vec)
    bad = 0 if s1 == unit_vec else 1
    checks.append(
        CheckOutcome.from_residual("antipode-unit", bad, "S(1)" if bad else None)
    )

    # S(ab) = S(b) S(a)
    bad, wit = 0, None
    for i in range(dim):
        si = host.apply_antipode({i: one})
        for j in range(dim):
            sj = host.apply_antipode({j: one})
            lhs = host.apply_antipode(host.basis_mul(i, j))
            rhs = host.elem_mul(sj, si)
            if lhs != rhs:
                bad += 1
                if wit is None:
                    wit = "(%s,%s)" % (host.labels[i], host.labels[j])
    checks.append(
        CheckOutcome.from_residual("antipode-antihomomorphism", bad, wit)
    )

    # S^2 = id whenever the presentation is (co)commutative
    if host.commutative or host.cocommutative:
        bad, wit = 0, None
        for i in range(dim):
            twice = host.apply_antipode(host.apply_antipode({i: one}))
            if twice != {i: one}:
                bad += 1
                wit = wit or host.labels[i]
        checks.append(
            CheckOutcome.from_residual("antipode-square", bad, wit)
        )

    return checks
