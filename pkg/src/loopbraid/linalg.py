"""Dense matrices over an exact ring, weighted permutations, and elimination.

Two operator representations are used throughout the package:

* ``Matrix`` - dense row-major storage over any ring descriptor;
* ``WeightedPerm`` - an operator with exactly one nonzero entry per column
  (all the braid and symmetry generator images are of this shape), where
  products, inverses, Kronecker products and traces cost O(dimension).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonFieldModulus, NotAUnit, SingularImage
from .rings import QQ, IntegersMod


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, rows):
        self.ring = ring
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        assert all(len(r) == self.ncols for r in self.rows), "ragged rows"

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(ring, n):
        z, o = ring.zero, ring.one
        return Matrix(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def zeros(ring, r, c):
        z = ring.zero
        return Matrix(ring, [[z] * c for _ in range(r)])

    @staticmethod
    def from_int_rows(ring, rows):
        return Matrix(ring, [[ring.from_int(v) for v in r] for r in rows])

    # -- basics ------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, WeightedPerm):
            other = other.to_matrix()
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.nrows == other.nrows and self.ncols == other.ncols and \
            all(self.rows[i][j] == other.rows[i][j]
                for i in range(self.nrows) for j in range(self.ncols))

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.rows))

    def __getitem__(self, rc):
        return self.rows[rc[0]][rc[1]]

    def entries(self):
        for r in self.rows:
            yield from r

    def is_zero(self):
        z = self.ring.zero
        return all(v == z for v in self.entries())

    def is_identity(self):
        z, o = self.ring.zero, self.ring.one
        return self.nrows == self.ncols and all(
            self.rows[i][j] == (o if i == j else z)
            for i in range(self.nrows) for j in range(self.ncols))

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, WeightedPerm):
            other = other.to_matrix()
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Matrix(self.ring, [[a + b for a, b in zip(r1, r2)]
                                  for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if isinstance(other, WeightedPerm):
            other = other.to_matrix()
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        return Matrix(self.ring, [[a - b for a, b in zip(r1, r2)]
                                  for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.rows])

    def scale(self, c):
        return Matrix(self.ring, [[c * a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, WeightedPerm):
            # columns of (self*other): column j picks column tgt[j] of self
            return Matrix(self.ring, [
                [other.wts[j] * self.rows[i][other.tgt[j]] for j in range(other.n)]
                for i in range(self.nrows)])
        assert self.ncols == other.nrows, "dimension mismatch"
        z = self.ring.zero
        bt = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in bt:
                acc = z
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, out)

    def mul_vec(self, v):
        z = self.ring.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, v):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return out

    def transpose(self):
        return Matrix(self.ring, [list(c) for c in zip(*self.rows)])

    def trace(self):
        acc = self.ring.zero
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def kron(self, other):
        if isinstance(other, WeightedPerm):
            other = other.to_matrix()
        out = []
        for r1 in self.rows:
            for r2 in other.rows:
                out.append([a * b for a in r1 for b in r2])
        return Matrix(self.ring, out)

    def det(self):
        """Exact determinant: fraction-free over Z_m, elimination over fields."""
        assert self.nrows == self.ncols
        n = self.nrows
        if isinstance(self.ring, IntegersMod):
            lift = [[v.residue for v in r] for r in self.rows]
            return self.ring.from_int(_int_det_bareiss(lift))
        rows = [list(r) for r in self.rows]
        det = self.ring.one
        for col in range(n):
            piv = next((r for r in range(col, n) if rows[r][col] != self.ring.zero), None)
            if piv is None:
                return self.ring.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = -det
            det = det * rows[col][col]
            inv = self.ring.inv(rows[col][col])
            for r in range(col + 1, n):
                f = rows[r][col] * inv
                if f:
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
        return det

    def inverse(self):
        """Exact inverse; SingularImage if not invertible."""
        assert self.nrows == self.ncols
        n = self.nrows
        ring = self.ring
        if isinstance(ring, IntegersMod) and not ring.is_field:
            return self._inverse_adjugate()
        aug = [list(r) + [ring.one if i == j else ring.zero for j in range(n)]
               for i, r in enumerate(self.rows)]
        for col in range(n):
            piv = next((r for r in range(col, n)
                        if aug[r][col] != ring.zero and ring.is_unit(aug[r][col])), None)
            if piv is None:
                raise SingularImage("no unit pivot in column %d" % col)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv = ring.inv(aug[col][col])
            aug[col] = [inv * a for a in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != ring.zero:
                    f = aug[r][col]
                    aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
        return Matrix(ring, [r[n:] for r in aug])

    def _inverse_adjugate(self):
        # composite modulus: adjugate over integer lifts, then reduce
        ring = self.ring
        n = self.nrows
        lift = [[v.residue for v in r] for r in self.rows]
        d = _int_det_bareiss(lift) % ring.m
        if d == 0 or __import__("math").gcd(d, ring.m) != 1:
            raise SingularImage("determinant %d is not a unit mod %d" % (d, ring.m))
        dinv = pow(d, -1, ring.m)
        adj = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [[lift[r][c] for c in range(n) if c != j]
                         for r in range(n) if r != i]
                cof = _int_det_bareiss(minor) if n > 1 else 1
                adj[j][i] = (-1) ** (i + j) * cof
        return Matrix.from_int_rows(ring, [[dinv * v for v in r] for r in adj])

    def to_json(self):
        return [[self.ring.to_json(v) for v in r] for r in self.rows]

    def __repr__(self):
        return "Matrix(%s, %dx%d)" % (self.ring.name, self.nrows, self.ncols)


def _int_det_bareiss(rows):
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class WeightedPerm:
    """Operator sending e_j to wts[j] * e_{tgt[j]}; tgt is a bijection."""

    __slots__ = ("ring", "n", "tgt", "wts")

    def __init__(self, ring, tgt, wts):
        self.ring = ring
        self.tgt = tuple(tgt)
        self.wts = tuple(wts)
        self.n = len(self.tgt)

    @staticmethod
    def identity(ring, n):
        return WeightedPerm(ring, range(n), [ring.one] * n)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.to_matrix() * other
        assert self.n == other.n
        # (self o other) e_j = other.wts[j] * self.wts[other.tgt[j]] * e_{...}
        return WeightedPerm(
            self.ring,
            [self.tgt[other.tgt[j]] for j in range(self.n)],
            [other.wts[j] * self.wts[other.tgt[j]] for j in range(self.n)])

    def inverse(self):
        tgt = [0] * self.n
        wts = [self.ring.one] * self.n
        for j in range(self.n):
            i = self.tgt[j]
            tgt[i] = j
            if not self.ring.is_unit(self.wts[j]):
                raise SingularImage("weight %r is not a unit" % (self.wts[j],))
            wts[i] = self.ring.inv(self.wts[j])
        return WeightedPerm(self.ring, tgt, wts)

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.to_matrix() == other
        if not isinstance(other, WeightedPerm):
            return NotImplemented
        return self.n == other.n and self.tgt == other.tgt and self.wts == other.wts

    def __hash__(self):
        return hash((self.tgt, self.wts))

    def is_identity(self):
        return all(self.tgt[j] == j and self.wts[j] == self.ring.one for j in range(self.n))

    def kron(self, other):
        # basis order: index i*other.n + j  <->  e_i (x) e_j
        n2 = other.n
        tgt = []
        wts = []
        for i in range(self.n):
            for j in range(n2):
                tgt.append(self.tgt[i] * n2 + other.tgt[j])
                wts.append(self.wts[i] * other.wts[j])
        return WeightedPerm(self.ring, tgt, wts)

    def trace(self):
        acc = self.ring.zero
        for j in range(self.n):
            if self.tgt[j] == j:
                acc = acc + self.wts[j]
        return acc

    def to_matrix(self):
        m = Matrix.zeros(self.ring, self.n, self.n)
        for j in range(self.n):
            m.rows[self.tgt[j]][j] = self.wts[j]
        return m

    def __add__(self, other):
        return self.to_matrix() + other

    def __sub__(self, other):
        return self.to_matrix() - other

    def __repr__(self):
        return "WeightedPerm(n=%d)" % self.n


def op_identity_like(op):
    if isinstance(op, WeightedPerm):
        return WeightedPerm.identity(op.ring, op.n)
    return Matrix.identity(op.ring, op.nrows)


def op_dim(op):
    return op.n if isinstance(op, WeightedPerm) else op.nrows


def op_inverse(op):
    return op.inverse()


def kron_list(ops):
    out = ops[0]
    for op in ops[1:]:
        out = out.kron(op)
    return out


# ---------------------------------------------------------------------------
# Elimination.

def rank_and_kernel(mat: Matrix):
    """Row reduce and return (rank, kernel basis vectors).

    Requires a field in practice (rationals or Z_p).  Over a composite
    modulus the elimination proceeds while unit pivots exist and raises
    NonFieldModulus when a column has nonzero entries but no unit among
    them.
    """
    ring = mat.ring
    rows = [list(r) for r in mat.rows]
    nr, nc = mat.nrows, mat.ncols
    pivots = []  # (row, col)
    r = 0
    for c in range(nc):
        piv = None
        for rr in range(r, nr):
            if rows[rr][c] != ring.zero and ring.is_unit(rows[rr][c]):
                piv = rr
                break
        if piv is None:
            if any(rows[rr][c] != ring.zero for rr in range(r, nr)):
                if isinstance(ring, IntegersMod) and not ring.is_field:
                    raise NonFieldModulus(
                        "no unit pivot in column %d over %r" % (c, ring))
                raise NotAUnit("non-invertible pivot over %r" % (ring,))
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = ring.inv(rows[r][c])
        rows[r] = [inv * a for a in rows[r]]
        for rr in range(nr):
            if rr != r and rows[rr][c] != ring.zero:
                f = rows[rr][c]
                rows[rr] = [a - f * b for a, b in zip(rows[rr], rows[r])]
        pivots.append((r, c))
        r += 1
        if r == nr:
            break
    rank = len(pivots)
    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(nc) if c not in pivot_cols]
    kernel = []
    for fc in free_cols:
        v = [ring.zero] * nc
        v[fc] = ring.one
        for (pr, pc) in pivots:
            v[pc] = -rows[pr][fc]
        kernel.append(v)
    return rank, kernel


class RowSpan:
    """Incremental reduced row span over the rationals (dense Fraction rows)."""

    def __init__(self, width):
        self.width = width
        self.pivot_of = {}  # pivot column -> row index in self.rows
        self.rows = []

    def reduce(self, vec):
        v = list(vec)
        for c, ri in sorted(self.pivot_of.items()):
            if v[c]:
                f = v[c]
                row = self.rows[ri]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def insert(self, vec) -> bool:
        """Reduce vec against the span; add it if independent."""
        v = self.reduce(vec)
        piv = next((c for c in range(self.width) if v[c]), None)
        if piv is None:
            return False
        inv = Fraction(1) / v[piv]
        v = [inv * a for a in v]
        # back-substitute into existing rows
        for ri, row in enumerate(self.rows):
            if row[piv]:
                f = row[piv]
                self.rows[ri] = [a - f * b for a, b in zip(row, v)]
        self.pivot_of[piv] = len(self.rows)
        self.rows.append(v)
        return True

    def contains(self, vec) -> bool:
        return all(a == 0 for a in self.reduce(vec))

    @property
    def dim(self):
        return len(self.rows)


def nullspace_dim(rows, width) -> int:
    """Dimension of the solution space of (rows) . x = 0 over QQ."""
    span = RowSpan(width)
    for r in rows:
        span.insert(r)
    return width - span.dim


def fraction_rows_rank(rows) -> int:
    if not rows:
        return 0
    span = RowSpan(len(rows[0]))
    for r in rows:
        span.insert(r)
    return span.dim


def laurent_matrix_at(mat: Matrix, q0) -> Matrix:
    """Evaluate a Laurent-entry matrix at a rational point, e.g. to take
    ranks over a field."""
    return Matrix(QQ, [[v.evaluate(q0) for v in row] for row in mat.rows])
