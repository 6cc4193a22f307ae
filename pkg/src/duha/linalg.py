"""Exact dense linear algebra over a NumberField.

Plain Gaussian elimination with first-nonzero pivoting: entries are exact
field elements, so no pivot-size heuristics are needed and every run is
deterministic.  Matrix sizes here are graded components of a cubic algebra
in low degree, i.e. tiny; clarity beats asymptotics.
"""

from __future__ import annotations


class ConsistencyError(Exception):
    """An internal invariant failed (non-homogeneous map, d o d != 0, ...)."""


class Matrix:
    """Dense nrows x ncols matrix of FieldElements over a common field.

    Either dimension may be zero; the shape is stored explicitly so empty
    matrices still compose correctly.
    """

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            zero = field.zero
            rows = [[zero] * ncols for _ in range(nrows)]
        assert len(rows) == nrows and all(len(r) == ncols for r in rows)
        self.rows = rows

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        nrows = len(rows)
        if ncols is None:
            assert rows, "ncols is required for a matrix with no rows"
            ncols = len(rows[0])
        return cls(field, nrows, ncols, [list(r) for r in rows])

    def copy(self):
        return Matrix(self.field, self.nrows, self.ncols, [list(r) for r in self.rows])

    def entry(self, r, c):
        return self.rows[r][c]

    def set_entry(self, r, c, v):
        self.rows[r][c] = v

    def column(self, c):
        return [row[c] for row in self.rows]

    def is_zero(self):
        return all(v.is_zero() for row in self.rows for v in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return "Matrix(%dx%d over %r)" % (self.nrows, self.ncols, self.field)


def mat_mul(a, b):
    """Matrix product a @ b."""
    assert a.ncols == b.nrows, "shape mismatch: %r @ %r" % (a, b)
    field = a.field
    zero = field.zero
    out = Matrix(field, a.nrows, b.ncols)
    for i in range(a.nrows):
        arow = a.rows[i]
        orow = out.rows[i]
        for k in range(a.ncols):
            aik = arow[k]
            if aik.is_zero():
                continue
            brow = b.rows[k]
            for j in range(b.ncols):
                if not brow[j].is_zero():
                    orow[j] = orow[j] + aik * brow[j]
    return out


def mat_vec(a, v):
    assert a.ncols == len(v)
    out = []
    for row in a.rows:
        total = a.field.zero
        for c, x in zip(row, v):
            if not c.is_zero() and not x.is_zero():
                total = total + c * x
        out.append(total)
    return out


def _rref(m):
    """Reduced row echelon form in place on a copy; returns (rref, pivot_cols)."""
    work = m.copy()
    rows = work.rows
    pivots = []
    r = 0
    for c in range(work.ncols):
        pivot_row = None
        for rr in range(r, work.nrows):
            if not rows[rr][c].is_zero():
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [inv * v for v in rows[r]]
        for rr in range(work.nrows):
            if rr != r and not rows[rr][c].is_zero():
                factor = rows[rr][c]
                rows[rr] = [x - factor * y for x, y in zip(rows[rr], rows[r])]
        pivots.append(c)
        r += 1
        if r == work.nrows:
            break
    return work, pivots


def rank(m):
    _, pivots = _rref(m)
    return len(pivots)


def kernel_basis(m):
    """Basis vectors of {x : m x = 0}, one per free column, ascending."""
    red, pivots = _rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivot_set]
    zero = m.field.zero
    one = m.field.one
    basis = []
    for f in free:
        vec = [zero] * m.ncols
        vec[f] = one
        for i, p in enumerate(pivots):
            vec[p] = -red.rows[i][f]
        basis.append(vec)
    return basis


def in_image(m, v):
    """A solution x of m x = v, or None when v is outside the column span.

    Solutions set every free variable to zero; the returned vector is
    re-checked against m before being handed out.
    """
    assert len(v) == m.nrows
    aug = Matrix(m.field, m.nrows, m.ncols + 1, [row + [v[i]] for i, row in enumerate(m.rows)])
    red, pivots = _rref(aug)
    if m.ncols in pivots:
        return None
    x = [m.field.zero] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = red.rows[i][m.ncols]
    if mat_vec(m, x) != list(v):
        raise ConsistencyError("in_image produced a non-solution")
    return x


def homology_dim(d_out, d_in):
    """dim ker(d_out) - rank(d_in) for maps ... --d_in--> C --d_out--> ...

    The caller is responsible for d_out o d_in = 0; with that, the value
    is the dimension of homology at C and in particular non-negative.
    """
    assert d_out.ncols == d_in.nrows, "middle-term dimensions disagree"
    value = (d_out.ncols - rank(d_out)) - rank(d_in)
    if value < 0:
        raise ConsistencyError("negative homology dimension: image not inside kernel")
    return value


def stacked_rank_jump(m, vectors):
    """rank([m | vectors]) - rank(m): how many vectors are independent mod Im(m)."""
    if not vectors:
        return 0
    assert all(len(v) == m.nrows for v in vectors)
    ext = Matrix(
        m.field,
        m.nrows,
        m.ncols + len(vectors),
        [row + [vec[i] for vec in vectors] for i, row in enumerate(m.rows)],
    )
    return rank(ext) - rank(m)
