"""Dense exact matrices with elementary operations, rank, and the
rank-r generator families used by the completion constructions.

Matrices are immutable values; every operation returns a new matrix.
Indices are 0-based throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import (
    FieldMismatch,
    IndexOutOfRange,
    NonSquare,
    NonSquareBlock,
    OddRank,
    RankTooLarge,
    ZeroScale,
)
from .field import Field


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    entries: tuple  # row-major

    @staticmethod
    def from_rows(field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        ncols = len(rows[0])
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            for a in r:
                field.check(a)
                flat.append(a)
        return Matrix(field, len(rows), ncols, tuple(flat))

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        if nrows < 1 or ncols < 1:
            raise ValueError("matrix must have at least one row and one column")
        return Matrix(field, nrows, ncols, (field.zero(),) * (nrows * ncols))

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        zero, one = field.zero(), field.one()
        flat = [zero] * (n * n)
        for i in range(n):
            flat[i * n + i] = one
        return Matrix(field, n, n, tuple(flat))

    def entry(self, i: int, j: int):
        return self.entries[i * self.ncols + j]

    def row_lists(self) -> list[list]:
        n = self.ncols
        return [list(self.entries[i * n:(i + 1) * n]) for i in range(self.nrows)]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def transpose(self) -> "Matrix":
        flat = [self.entries[i * self.ncols + j]
                for j in range(self.ncols) for i in range(self.nrows)]
        return Matrix(self.field, self.ncols, self.nrows, tuple(flat))

    def neg(self) -> "Matrix":
        f = self.field
        return Matrix(f, self.nrows, self.ncols, tuple(f.neg(a) for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldMismatch("matrix product across different fields")
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        f = self.field
        n, m, k = self.nrows, other.ncols, self.ncols
        a, b = self.entries, other.entries
        flat = []
        for i in range(n):
            arow = a[i * k:(i + 1) * k]
            for j in range(m):
                acc = f.zero()
                for x in range(k):
                    acc = f.add(acc, f.mul(arow[x], b[x * m + j]))
                flat.append(acc)
        return Matrix(f, n, m, tuple(flat))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        rows = [[self.entry(i, j) for j in range(c0, c1)] for i in range(r0, r1)]
        return Matrix.from_rows(self.field, rows)


# -- generator families ------------------------------------------------


def trailing_staircase(field: Field, r: int, m: int, n: int) -> Matrix:
    """Rank-r matrix with 1s on the anti-staircase ending in the bottom-right corner."""
    if r < 0 or r > min(m, n):
        raise RankTooLarge(f"rank {r} exceeds min({m}, {n})")
    zero, one = field.zero(), field.one()
    flat = [zero] * (m * n)
    for q in range(r):
        flat[(m - 1 - q) * n + (n - 1 - q)] = one
    return Matrix(field, m, n, tuple(flat))


def leading_identity(field: Field, r: int, m: int, n: int) -> Matrix:
    """Rank-r matrix with 1s at the first r diagonal positions."""
    if r < 0 or r > min(m, n):
        raise RankTooLarge(f"rank {r} exceeds min({m}, {n})")
    zero, one = field.zero(), field.one()
    flat = [zero] * (m * n)
    for q in range(r):
        flat[q * n + q] = one
    return Matrix(field, m, n, tuple(flat))


def leading_skew_pairs(field: Field, r: int, m: int, n: int) -> Matrix:
    """Rank-r matrix made of leading 2x2 blocks [[0,1],[-1,0]]; r must be even."""
    if r % 2:
        raise OddRank(f"rank {r} is odd")
    if r < 0 or r > min(m, n):
        raise RankTooLarge(f"rank {r} exceeds min({m}, {n})")
    zero, one = field.zero(), field.one()
    minus_one = field.neg(one)
    flat = [zero] * (m * n)
    for q in range(0, r, 2):
        flat[q * n + (q + 1)] = one
        flat[(q + 1) * n + q] = minus_one
    return Matrix(field, m, n, tuple(flat))


def block_diag(blocks) -> Matrix:
    """Assemble square blocks into one block-diagonal matrix."""
    blocks = list(blocks)
    if not blocks:
        raise ValueError("need at least one block")
    field = blocks[0].field
    for i, b in enumerate(blocks):
        if not b.is_square:
            raise NonSquareBlock(i, b.nrows, b.ncols)
        if b.field != field:
            raise FieldMismatch("blocks over different fields")
    total = sum(b.nrows for b in blocks)
    zero = field.zero()
    flat = [zero] * (total * total)
    offset = 0
    for b in blocks:
        n = b.nrows
        for i in range(n):
            flat[(offset + i) * total + offset:(offset + i) * total + offset + n] = \
                b.entries[i * n:(i + 1) * n]
        offset += n
    return Matrix(field, total, total, tuple(flat))


# -- elementary operations ---------------------------------------------


class OpKind(Enum):
    SWAP = "swap"
    SCALE = "scale"
    ADD_MULTIPLE = "add_multiple"


class Axis(Enum):
    ROWS = "rows"
    COLUMNS = "columns"


@dataclass(frozen=True)
class ElementaryOp:
    """Swap(i,j), Scale(i,c) or AddMultiple(i += c*j), on rows or columns."""

    kind: OpKind
    axis: Axis
    i: int
    j: int | None = None
    c: object = None

    @staticmethod
    def swap(axis: Axis, i: int, j: int) -> "ElementaryOp":
        return ElementaryOp(OpKind.SWAP, axis, i, j)

    @staticmethod
    def scale(axis: Axis, i: int, c) -> "ElementaryOp":
        return ElementaryOp(OpKind.SCALE, axis, i, c=c)

    @staticmethod
    def add_multiple(axis: Axis, i: int, j: int, c) -> "ElementaryOp":
        """Adds c times line j to line i."""
        return ElementaryOp(OpKind.ADD_MULTIPLE, axis, i, j, c)

    def mirrored(self) -> "ElementaryOp":
        other = Axis.COLUMNS if self.axis is Axis.ROWS else Axis.ROWS
        return ElementaryOp(self.kind, other, self.i, self.j, self.c)


def _check_op(op: ElementaryOp, nrows: int, ncols: int, field: Field) -> None:
    limit = nrows if op.axis is Axis.ROWS else ncols
    indices = (op.i,) if op.kind is OpKind.SCALE else (op.i, op.j)
    for idx in indices:
        if idx is None or not 0 <= idx < limit:
            raise IndexOutOfRange(f"index {idx} out of range for {limit} lines")
    if op.kind is OpKind.SCALE and op.c == field.zero():
        raise ZeroScale("scale coefficient must be nonzero")


def apply_row_op(rows: list[list], op: ElementaryOp, field: Field) -> None:
    """Apply a row operation in place to a list-of-rows matrix."""
    if op.kind is OpKind.SWAP:
        rows[op.i], rows[op.j] = rows[op.j], rows[op.i]
    elif op.kind is OpKind.SCALE:
        rows[op.i] = [field.mul(op.c, a) for a in rows[op.i]]
    else:
        src, dst = rows[op.j], rows[op.i]
        rows[op.i] = [field.add(a, field.mul(op.c, b)) for a, b in zip(dst, src)]


def apply_col_op(rows: list[list], op: ElementaryOp, field: Field) -> None:
    """Apply a column operation in place to a list-of-rows matrix."""
    if op.kind is OpKind.SWAP:
        i, j = op.i, op.j
        for row in rows:
            row[i], row[j] = row[j], row[i]
    elif op.kind is OpKind.SCALE:
        i = op.i
        for row in rows:
            row[i] = field.mul(op.c, row[i])
    else:
        i, j, c = op.i, op.j, op.c
        for row in rows:
            row[i] = field.add(row[i], field.mul(c, row[j]))


def apply_elementary(m: Matrix, op: ElementaryOp) -> Matrix:
    """Return the matrix transformed by one elementary row/column operation."""
    _check_op(op, m.nrows, m.ncols, m.field)
    rows = m.row_lists()
    if op.axis is Axis.ROWS:
        apply_row_op(rows, op, m.field)
    else:
        apply_col_op(rows, op, m.field)
    return Matrix.from_rows(m.field, rows)


# -- rank and structure -------------------------------------------------


def rank(m: Matrix) -> int:
    """Exact rank by Gaussian elimination, first-nonzero pivot top-to-bottom."""
    f = m.field
    zero = f.zero()
    rows = m.row_lists()
    nr, nc = m.nrows, m.ncols
    r = 0
    for c in range(nc):
        piv = None
        for i in range(r, nr):
            if rows[i][c] != zero:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = f.inv(prow[c])
        for i in range(r + 1, nr):
            if rows[i][c] != zero:
                factor = f.mul(rows[i][c], inv)
                rows[i] = [f.sub(a, f.mul(factor, b)) for a, b in zip(rows[i], prow)]
        r += 1
        if r == nr:
            break
    return r


class StructureKind(Enum):
    GENERAL = "general"
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"
    BOTH = "both"


def is_symmetric(m: Matrix) -> bool:
    if not m.is_square:
        raise NonSquare(f"{m.nrows}x{m.ncols} matrix")
    return all(m.entry(i, j) == m.entry(j, i)
               for i in range(m.nrows) for j in range(i + 1, m.ncols))


def is_antisymmetric(m: Matrix) -> bool:
    """True iff m = -m^T with zero diagonal (the diagonal matters in char 2)."""
    if not m.is_square:
        raise NonSquare(f"{m.nrows}x{m.ncols} matrix")
    f = m.field
    zero = f.zero()
    if any(m.entry(i, i) != zero for i in range(m.nrows)):
        return False
    return all(m.entry(i, j) == f.neg(m.entry(j, i))
               for i in range(m.nrows) for j in range(i + 1, m.ncols))


def structure_check(m: Matrix) -> StructureKind:
    sym = is_symmetric(m)
    anti = is_antisymmetric(m)
    if sym and anti:
        return StructureKind.BOTH
    if sym:
        return StructureKind.SYMMETRIC
    if anti:
        return StructureKind.ANTISYMMETRIC
    return StructureKind.GENERAL


def format_matrix(m: Matrix) -> str:
    """Row-per-line, space-separated scalar rendering."""
    f = m.field
    return "\n".join(" ".join(f.format(m.entry(i, j)) for j in range(m.ncols))
                     for i in range(m.nrows))
