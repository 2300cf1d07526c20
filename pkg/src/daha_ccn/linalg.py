"""Sparse exact matrices, tensor-slot operators, kernels and Hecke checks.

Matrices are dictionaries {(row, col): entry} storing only nonzero entries.
Entries may be `Scalar`s, exact rationals (Fraction / gmpy mpq) or plain
ints; arithmetic stays within whatever exact domain the entries live in.

Basis ordering on a tensor product is big-endian: slot 0 varies slowest,
and within V^{otimes n} the basis vector e_{i_1} x ... x e_{i_n} has index
sum (i_k - 1) * N^(n-k).
"""

from __future__ import annotations

from fractions import Fraction


class LinalgError(ValueError):
    pass


class TensorSpace:
    """Ordered list of tensor slot dimensions with big-endian indexing."""

    def __init__(self, slot_dims):
        self.slot_dims = tuple(int(d) for d in slot_dims)
        if any(d <= 0 for d in self.slot_dims):
            raise LinalgError("slot dimensions must be positive")
        self.strides = []
        acc = 1
        for d in reversed(self.slot_dims):
            self.strides.append(acc)
            acc *= d
        self.strides.reverse()
        self.dim = acc

    def index(self, digits):
        if len(digits) != len(self.slot_dims):
            raise LinalgError("digit count mismatch")
        total = 0
        for dg, d, s in zip(digits, self.slot_dims, self.strides):
            if not 0 <= dg < d:
                raise LinalgError("digit out of range")
            total += dg * s
        return total

    def digits(self, index):
        out = []
        for d, s in zip(self.slot_dims, self.strides):
            out.append((index // s) % d)
        return tuple(out)

    def __repr__(self):
        return "TensorSpace%r" % (self.slot_dims,)


class Matrix:
    """Immutable-by-convention sparse exact matrix."""

    __slots__ = ("nrows", "ncols", "data")

    def __init__(self, nrows, ncols, data=None):
        self.nrows = nrows
        self.ncols = ncols
        self.data = {} if data is None else data

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nrows, ncols=None):
        return cls(nrows, nrows if ncols is None else ncols, {})

    @classmethod
    def identity(cls, n, one=1):
        return cls(n, n, {(i, i): one for i in range(n)})

    @classmethod
    def from_entries(cls, nrows, ncols, entries):
        data = {}
        for (r, c), v in entries.items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise LinalgError("entry out of range")
            if v:
                data[(r, c)] = v
        return cls(nrows, ncols, data)

    @classmethod
    def from_rows(cls, rows):
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        data = {}
        for r, row in enumerate(rows):
            if len(row) != ncols:
                raise LinalgError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    data[(r, c)] = v
        return cls(nrows, ncols, data)

    # -- basics --------------------------------------------------------------
    def __getitem__(self, rc):
        return self.data.get(rc, 0)

    def nnz(self):
        return len(self.data)

    def is_zero(self):
        return not self.data

    def copy(self):
        return Matrix(self.nrows, self.ncols, dict(self.data))

    def transpose(self):
        return Matrix(self.ncols, self.nrows,
                      {(c, r): v for (r, c), v in self.data.items()})

    def map_entries(self, f):
        data = {}
        for rc, v in self.data.items():
            w = f(v)
            if w:
                data[rc] = w
        return Matrix(self.nrows, self.ncols, data)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) \
            and self.data == other.data

    def __hash__(self):
        return hash((self.nrows, self.ncols, frozenset(self.data.items())))

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise LinalgError("shape mismatch in add")
        data = dict(self.data)
        for rc, v in other.data.items():
            if rc in data:
                w = data[rc] + v
                if w:
                    data[rc] = w
                else:
                    del data[rc]
            else:
                data[rc] = v
        return Matrix(self.nrows, self.ncols, data)

    def __neg__(self):
        return Matrix(self.nrows, self.ncols,
                      {rc: -v for rc, v in self.data.items()})

    def __sub__(self, other):
        return self.__add__(-other)

    def scale(self, s):
        if not s:
            return Matrix.zero(self.nrows, self.ncols)
        return self.map_entries(lambda v: v * s)

    def __rmul__(self, s):
        if isinstance(s, Matrix):
            return NotImplemented
        return self.scale(s)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise LinalgError("shape mismatch in mul")
        rows = {}
        for (r, k), v in other.data.items():
            rows.setdefault(r, []).append((k, v))
        out = {}
        for (r, k), v in self.data.items():
            for c, w in rows.get(k, ()):
                rc = (r, c)
                cur = out.get(rc)
                prod = v * w
                if cur is None:
                    out[rc] = prod
                else:
                    out[rc] = cur + prod
        out = {rc: v for rc, v in out.items() if v}
        return Matrix(self.nrows, other.ncols, out)

    def matvec(self, vec):
        out = [0] * self.nrows
        for (r, c), v in self.data.items():
            x = vec[c]
            if x:
                out[r] = out[r] + v * x
        return out

    def add_identity(self, s):
        """self + s * I, for square matrices."""
        if self.nrows != self.ncols:
            raise LinalgError("add_identity on non-square matrix")
        data = dict(self.data)
        for i in range(self.nrows):
            cur = data.get((i, i))
            w = s if cur is None else cur + s
            if w:
                data[(i, i)] = w
            else:
                data.pop((i, i), None)
        return Matrix(self.nrows, self.ncols, data)

    def inverse(self):
        """Exact inverse by Gauss-Jordan elimination."""
        if self.nrows != self.ncols:
            raise LinalgError("inverse of non-square matrix")
        n = self.nrows
        a = [[_promote(self[(r, c)]) for c in range(n)] for r in range(n)]
        inv = [[_promote(1) if r == c else _promote(0) for c in range(n)]
               for r in range(n)]
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                raise LinalgError("matrix is singular")
            a[col], a[piv] = a[piv], a[col]
            inv[col], inv[piv] = inv[piv], inv[col]
            pval = a[col][col]
            for c in range(n):
                if a[col][c]:
                    a[col][c] = a[col][c] / pval
                if inv[col][c]:
                    inv[col][c] = inv[col][c] / pval
            for r in range(n):
                if r == col or not a[r][col]:
                    continue
                factor = a[r][col]
                for c in range(n):
                    if a[col][c]:
                        a[r][c] = a[r][c] - factor * a[col][c]
                    if inv[col][c]:
                        inv[r][c] = inv[r][c] - factor * inv[col][c]
        return Matrix.from_rows(inv)

    # -- serialization -----------------------------------------------------------
    def to_json_dict(self):
        entries = [[r, c, str(v)] for (r, c), v in sorted(self.data.items())]
        return {"nrows": self.nrows, "ncols": self.ncols, "entries": entries}

    @classmethod
    def from_json_dict(cls, d, field):
        data = {}
        for r, c, s in d["entries"]:
            data[(r, c)] = field.parse(s)
        return cls(d["nrows"], d["ncols"], data)

    def __repr__(self):
        return "Matrix(%dx%d, %d nonzero)" % (self.nrows, self.ncols, self.nnz())


def _promote(v):
    """Lift plain ints into Fraction so that division is exact."""
    if isinstance(v, int):
        return Fraction(v)
    return v


# ---------------------------------------------------------------------------
# tensor constructions
# ---------------------------------------------------------------------------

def kron(a, b):
    """Kronecker product with row-major index (i, j) -> i * ncols(b) + j."""
    data = {}
    for (ra, ca), va in a.data.items():
        for (rb, cb), vb in b.data.items():
            data[(ra * b.nrows + rb, ca * b.ncols + cb)] = va * vb
    return Matrix(a.nrows * b.nrows, a.ncols * b.ncols, data)


class SlotOperator:
    """A local operator occupying an ordered subset of tensor slots."""

    def __init__(self, space, slots, local):
        self.space = space
        self.slots = tuple(slots)
        self.local = local
        if any(not 0 <= s < len(space.slot_dims) for s in self.slots):
            raise LinalgError("slot out of range")
        if len(set(self.slots)) != len(self.slots):
            raise LinalgError("repeated slot")
        sub = 1
        for s in self.slots:
            sub *= space.slot_dims[s]
        if local.nrows != sub or local.ncols != sub:
            raise LinalgError("local matrix size does not match chosen slots")

    def embed(self):
        return embed(self)


def embed(op):
    """Expand a SlotOperator to a matrix on the full tensor space."""
    space, slots, local = op.space, op.slots, op.local
    dims = space.slot_dims
    nslots = len(dims)
    chosen = list(slots)
    free = [s for s in range(nslots) if s not in slots]

    chosen_dims = [dims[s] for s in chosen]
    chosen_space = TensorSpace(chosen_dims) if chosen_dims else None

    free_dims = [dims[s] for s in free]
    free_total = 1
    for d in free_dims:
        free_total *= d

    data = {}
    free_space = TensorSpace(free_dims) if free_dims else None
    for (lr, lc), v in local.data.items():
        rdig = chosen_space.digits(lr) if chosen_space else ()
        cdig = chosen_space.digits(lc) if chosen_space else ()
        for fidx in range(free_total):
            fdig = free_space.digits(fidx) if free_space else ()
            row_digits = [0] * nslots
            col_digits = [0] * nslots
            for s, dg in zip(free, fdig):
                row_digits[s] = dg
                col_digits[s] = dg
            for s, dr, dc in zip(chosen, rdig, cdig):
                row_digits[s] = dr
                col_digits[s] = dc
            data[(space.index(row_digits), space.index(col_digits))] = v
    return Matrix(space.dim, space.dim, data)


def slot_permutation_matrix(space, perm):
    """Matrix of the basis map permuting slots: slot i of the output carries
    what slot perm[i] carried in the input."""
    dims = space.slot_dims
    if sorted(perm) != list(range(len(dims))):
        raise LinalgError("not a permutation of the slots")
    out_space = TensorSpace([dims[p] for p in perm])
    data = {}
    for idx in range(space.dim):
        dg = space.digits(idx)
        data[(out_space.index([dg[p] for p in perm]), idx)] = 1
    return Matrix(space.dim, space.dim, data)


# ---------------------------------------------------------------------------
# kernels and Hecke checks
# ---------------------------------------------------------------------------

def kernel(m):
    """Exact null space basis of m (list of dense column vectors).

    Elimination runs over the fraction field of the entries, normalizing at
    every step; pivots are chosen in the sparsest available column to limit
    expression swell.
    """
    nrows, ncols = m.nrows, m.ncols
    rows = []
    for r in range(nrows):
        row = {}
        for c in range(ncols):
            v = m[(r, c)]
            if v:
                row[c] = _promote(v)
        if row:
            rows.append(row)

    pivots = {}          # col -> reduced row (dict)
    for row in rows:
        row = dict(row)
        while row:
            # reduce against existing pivots
            hit = None
            for c in row:
                if c in pivots:
                    hit = c
                    break
            if hit is None:
                break
            factor = row[hit]
            for c, v in pivots[hit].items():
                cur = row.get(c, 0)
                w = cur - factor * v
                if w:
                    row[c] = w
                else:
                    row.pop(c, None)
        if not row:
            continue
        # choose pivot: prefer the sparsest structure (smallest column index
        # among entries; deterministic)
        pc = min(row)
        pv = row[pc]
        pivots[pc] = {c: v / pv for c, v in row.items()}

    # back-substitute to reduced echelon form
    cols = sorted(pivots)
    for i in range(len(cols) - 1, -1, -1):
        pc = cols[i]
        row = pivots[pc]
        for pc2 in cols[:i]:
            row2 = pivots[pc2]
            f = row2.get(pc)
            if f:
                for c, v in row.items():
                    cur = row2.get(c, 0)
                    w = cur - f * v
                    if w:
                        row2[c] = w
                    else:
                        row2.pop(c, None)

    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for pc, row in pivots.items():
            coeff = row.get(fc)
            if coeff:
                vec[pc] = -coeff
        basis.append(vec)
    return basis


def basis_matrix(vectors, ncols=None):
    """Column matrix whose columns are the given vectors."""
    if not vectors:
        return Matrix.zero(ncols or 0, 0)
    n = len(vectors[0])
    data = {}
    for j, vec in enumerate(vectors):
        for i, v in enumerate(vec):
            if v:
                data[(i, j)] = v
    return Matrix(n, len(vectors), data)


def hecke_check(X, x):
    """True iff (X - x)(X + x^-1) = 0 exactly."""
    if X.nrows != X.ncols:
        raise LinalgError("Hecke check on non-square matrix")
    if not x:
        raise LinalgError("Hecke parameter must be nonzero")
    if isinstance(x, int):
        x = Fraction(x)
    xinv = 1 / x if isinstance(x, Fraction) else x.inv()
    left = X.add_identity(-x)
    right = X.add_identity(xinv)
    return (left * right).is_zero()
