"""Exact rational scalars, dense matrices/tensors, and rank/kernel/cohomology
dimension computations.

Scalars are `fractions.Fraction`: arbitrary-precision, always in lowest terms
with positive denominator, exact equality.  Everything downstream reduces to
ranks of dense matrices over the rationals, computed by exact Gaussian
elimination with zero tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from matchalg.errors import CompositionNonzero

Scalar = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def parse_scalar(text) -> Fraction:
    """Parse "p/q" (or "p" when q = 1); ints pass through unchanged."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text))


def format_scalar(value: Fraction) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class DenseTensor:
    """Dense tensor with a fixed shape, entries flat in lexicographic
    multi-index order (last index fastest)."""

    __slots__ = ("shape", "strides", "entries")

    def __init__(self, shape, entries=None):
        self.shape = tuple(int(s) for s in shape)
        if any(s < 0 for s in self.shape):
            raise ValueError("tensor shape entries must be >= 0")
        strides = []
        acc = 1
        for s in reversed(self.shape):
            strides.append(acc)
            acc *= s
        self.strides = tuple(reversed(strides))
        size = prod(self.shape) if self.shape else 1
        if entries is None:
            self.entries = [ZERO] * size
        else:
            self.entries = [parse_scalar(e) for e in entries]
            if len(self.entries) != size:
                raise ValueError(
                    f"entry count {len(self.entries)} does not match shape {self.shape}"
                )

    def flat_index(self, idx) -> int:
        return sum(i * s for i, s in zip(idx, self.strides))

    def __getitem__(self, idx) -> Fraction:
        return self.entries[self.flat_index(idx)]

    def __setitem__(self, idx, value):
        self.entries[self.flat_index(idx)] = parse_scalar(value)

    def add_at(self, idx, value):
        flat = self.flat_index(idx)
        self.entries[flat] = self.entries[flat] + value

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def nonzero_items(self):
        """Yield (multi-index, value) over nonzero entries."""
        shape = self.shape
        for flat, value in enumerate(self.entries):
            if value:
                idx = []
                rem = flat
                for s in self.strides:
                    idx.append(rem // s)
                    rem %= s
                yield tuple(idx), value

    def copy(self) -> "DenseTensor":
        return DenseTensor(self.shape, list(self.entries))

    def __eq__(self, other):
        return (
            isinstance(other, DenseTensor)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        raise TypeError("DenseTensor is not hashable")

    def __repr__(self):
        return f"DenseTensor(shape={self.shape})"


class DenseMatrix:
    """Dense rows x cols matrix, entries flat row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        self.rows = int(rows)
        self.cols = int(cols)
        if entries is None:
            self.entries = [ZERO] * (self.rows * self.cols)
        else:
            self.entries = [parse_scalar(e) for e in entries]
            if len(self.entries) != self.rows * self.cols:
                raise ValueError("entry count does not match rows*cols")

    @classmethod
    def from_rows(cls, row_lists) -> "DenseMatrix":
        rows = len(row_lists)
        cols = len(row_lists[0]) if rows else 0
        flat = []
        for row in row_lists:
            if len(row) != cols:
                raise ValueError("rows have varying lengths")
            flat.extend(parse_scalar(e) for e in row)
        return cls(rows, cols, flat)

    @classmethod
    def identity(cls, n) -> "DenseMatrix":
        m = cls(n, n)
        for i in range(n):
            m.entries[i * n + i] = ONE
        return m

    def __getitem__(self, idx) -> Fraction:
        i, j = idx
        return self.entries[i * self.cols + j]

    def __setitem__(self, idx, value):
        i, j = idx
        self.entries[i * self.cols + j] = parse_scalar(value)

    def add_at(self, i, j, value):
        flat = i * self.cols + j
        self.entries[flat] = self.entries[flat] + value

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "DenseMatrix":
        out = DenseMatrix(self.cols, self.rows)
        for i in range(self.rows):
            base = i * self.cols
            for j in range(self.cols):
                v = self.entries[base + j]
                if v:
                    out.entries[j * self.rows + i] = v
        return out

    def mul(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = DenseMatrix(self.rows, other.cols)
        # presparsify the right factor's rows; skip zero left entries
        sparse_rows = [
            [(j, v) for j, v in enumerate(other.row(k)) if v] for k in range(other.rows)
        ]
        for i in range(self.rows):
            base = i * self.cols
            out_base = i * other.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if not a:
                    continue
                for j, b in sparse_rows[k]:
                    out.entries[out_base + j] += a * b
        return out

    def apply(self, vector):
        """Matrix-vector product on a plain list of scalars."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match cols")
        out = [ZERO] * self.rows
        for i in range(self.rows):
            base = i * self.cols
            acc = ZERO
            for j, x in enumerate(vector):
                if x:
                    v = self.entries[base + j]
                    if v:
                        acc += v * x
            out[i] = acc
        return out

    def add(self, other: "DenseMatrix") -> "DenseMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch in matrix sum")
        return DenseMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)]
        )

    def scale(self, c) -> "DenseMatrix":
        c = parse_scalar(c)
        return DenseMatrix(self.rows, self.cols, [c * e for e in self.entries])

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        raise TypeError("DenseMatrix is not hashable")

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"


def _pivot_weight(value: Fraction) -> int:
    # simplest-fraction pivot: smallest |numerator * denominator|
    return abs(value.numerator) * value.denominator


def _echelon(rows, cols):
    """In-place forward elimination.

    Returns the list of pivot columns.  Pivot choice: among candidate rows,
    take the one whose entry minimizes |numerator*denominator|; exactness
    makes any nonzero choice correct, small pivots limit coefficient blowup.
    """
    pivots = []
    piv_r = 0
    n_rows = len(rows)
    for c in range(cols):
        best = -1
        best_w = None
        for r in range(piv_r, n_rows):
            v = rows[r][c]
            if v:
                w = _pivot_weight(v)
                if best_w is None or w < best_w:
                    best, best_w = r, w
        if best < 0:
            continue
        if best != piv_r:
            rows[piv_r], rows[best] = rows[best], rows[piv_r]
        pivot_row = rows[piv_r]
        pv = pivot_row[c]
        for r in range(piv_r + 1, n_rows):
            v = rows[r][c]
            if not v:
                continue
            factor = v / pv
            row = rows[r]
            for j in range(c, cols):
                pj = pivot_row[j]
                if pj:
                    row[j] -= factor * pj
        pivots.append(c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return pivots


def rank(m: DenseMatrix) -> int:
    """Rank over the rationals via exact Gaussian elimination."""
    rows = m.row_lists()
    return len(_echelon(rows, m.cols))


def kernel_dim(m: DenseMatrix) -> int:
    """Nullity: cols - rank."""
    return m.cols - rank(m)


def cohomology_dim(d_in: DenseMatrix, d_out: DenseMatrix) -> int:
    """dim ker(d_out) - rank(d_in) for a two-step complex; the composite
    d_out . d_in must vanish."""
    if d_in.rows != d_out.cols:
        raise ValueError("d_in target and d_out source dimensions differ")
    if not d_out.mul(d_in).is_zero():
        raise CompositionNonzero("d_out . d_in != 0: not a complex")
    return kernel_dim(d_out) - rank(d_in)


def nullspace_basis(m: DenseMatrix):
    """Basis of ker(m) as a list of coordinate vectors (length cols)."""
    cols = m.cols
    rows = m.row_lists()
    pivots = _echelon(rows, cols)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [ZERO] * cols
        x[f] = ONE
        # back substitution over pivot rows, bottom-up
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            row = rows[r]
            s = ZERO
            for c in range(pc + 1, cols):
                v = row[c]
                if v and x[c]:
                    s += v * x[c]
            x[pc] = -s / row[pc]
        basis.append(x)
    return basis


def solve(m: DenseMatrix, b):
    """One solution x of m x = b (free variables set to 0), or None."""
    if len(b) != m.rows:
        raise ValueError("rhs length does not match rows")
    cols = m.cols
    rows = [m.row(i) + [parse_scalar(v)] for i, v in zip(range(m.rows), b)]
    pivots = _echelon(rows, cols + 1)
    if pivots and pivots[-1] == cols:
        return None  # inconsistent: pivot in the augmented column
    x = [ZERO] * cols
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        row = rows[r]
        s = row[cols]
        for c in range(pc + 1, cols):
            v = row[c]
            if v and x[c]:
                s -= v * x[c]
        x[pc] = s / row[pc]
    return x


def matrix_from_columns(columns, rows) -> DenseMatrix:
    """Assemble a matrix whose j-th column is columns[j] (lists of length rows)."""
    out = DenseMatrix(rows, len(columns))
    for j, col in enumerate(columns):
        if len(col) != rows:
            raise ValueError("column length mismatch")
        for i, v in enumerate(col):
            if v:
                out.entries[i * out.cols + j] = parse_scalar(v)
    return out
