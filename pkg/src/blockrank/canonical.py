"""Canonical forms under congruence A -> P A P^T.

A symmetric matrix is reduced to a diagonal matrix whose nonzero entries
occupy a leading prefix; an antisymmetric matrix is reduced to leading
2x2 blocks [[0,1],[-1,0]].  Both reductions are symmetric sequences of
elementary operations: every row operation is immediately mirrored by the
same column operation, and the accumulated transform together with its
inverse is returned so completions can be pulled back through it.

A two-sided equivalence reduction (independent row and column operations,
no symmetry or characteristic restriction) is also provided for the
general-completion constructors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CharacteristicTwo,
    NotAntisymmetric,
    NotSymmetric,
    SingularTransform,
    SizeMismatch,
)
from .field import Field
from .matrix import (
    Axis,
    ElementaryOp,
    Matrix,
    OpKind,
    apply_col_op,
    apply_row_op,
    is_antisymmetric,
    is_symmetric,
    leading_skew_pairs,
    rank,
)


@dataclass(frozen=True)
class CongruenceReduction:
    """Invertible P with P * input * P^T = canonical, plus P^-1 and the op log."""

    input: Matrix
    canonical: Matrix
    transform: Matrix
    inverse_transform: Matrix
    op_log: tuple  # pairs (row op, mirrored column op)

    @property
    def rank(self) -> int:
        return rank(self.canonical)


@dataclass(frozen=True)
class EquivalenceReduction:
    """Invertible U, V with U * input * V = leading-identity form of the same rank."""

    input: Matrix
    canonical: Matrix
    row_transform: Matrix
    col_transform: Matrix
    row_inverse: Matrix
    col_inverse: Matrix
    rank: int


def _identity_rows(field: Field, n: int) -> list[list]:
    zero, one = field.zero(), field.one()
    rows = [[zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = one
    return rows


def _inverse_as_col_op(op: ElementaryOp, field: Field) -> ElementaryOp:
    """Column operation equal to right-multiplying by the inverse of a row op."""
    if op.kind is OpKind.SWAP:
        return ElementaryOp.swap(Axis.COLUMNS, op.i, op.j)
    if op.kind is OpKind.SCALE:
        return ElementaryOp.scale(Axis.COLUMNS, op.i, field.inv(op.c))
    # row i += c*j inverts to col j -= c*i
    return ElementaryOp.add_multiple(Axis.COLUMNS, op.j, op.i, field.neg(op.c))


def _inverse_as_row_op(op: ElementaryOp, field: Field) -> ElementaryOp:
    """Row operation equal to left-multiplying by the inverse of a column op."""
    if op.kind is OpKind.SWAP:
        return ElementaryOp.swap(Axis.ROWS, op.i, op.j)
    if op.kind is OpKind.SCALE:
        return ElementaryOp.scale(Axis.ROWS, op.i, field.inv(op.c))
    # col i += c*j inverts to row j -= c*i
    return ElementaryOp.add_multiple(Axis.ROWS, op.j, op.i, field.neg(op.c))


class _CongruenceWork:
    """Mutable state for a symmetric sequence of elementary operations."""

    def __init__(self, a: Matrix):
        self.field = a.field
        self.m = a.row_lists()
        self.p = _identity_rows(a.field, a.nrows)
        self.pinv = _identity_rows(a.field, a.nrows)
        self.log = []

    def step(self, row_op: ElementaryOp) -> None:
        col_op = row_op.mirrored()
        apply_row_op(self.m, row_op, self.field)
        apply_col_op(self.m, col_op, self.field)
        apply_row_op(self.p, row_op, self.field)
        apply_col_op(self.pinv, _inverse_as_col_op(row_op, self.field), self.field)
        self.log.append((row_op, col_op))

    def finish(self, a: Matrix) -> CongruenceReduction:
        f = self.field
        return CongruenceReduction(
            input=a,
            canonical=Matrix.from_rows(f, self.m),
            transform=Matrix.from_rows(f, self.p),
            inverse_transform=Matrix.from_rows(f, self.pinv),
            op_log=tuple(self.log),
        )


def is_prefix_diagonal(m: Matrix) -> bool:
    """True iff m is diagonal and its nonzero diagonal entries form a prefix."""
    zero = m.field.zero()
    if not m.is_square:
        return False
    n = m.nrows
    if any(m.entry(i, j) != zero for i in range(n) for j in range(n) if i != j):
        return False
    diag = [m.entry(i, i) for i in range(n)]
    seen_zero = False
    for d in diag:
        if d == zero:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def diagonalize_symmetric(a: Matrix) -> CongruenceReduction:
    """Congruence-reduce a symmetric matrix to prefix-diagonal form.

    Pivot strategy: take the lowest nonzero diagonal entry in the trailing
    submatrix; if the trailing diagonal is all zero, add one line to another
    to create 2*a[j][l] on the diagonal (needs characteristic != 2), then
    proceed.  A final symmetric permutation moves the nonzero diagonal
    entries to the front.
    """
    if a.field.characteristic() == 2:
        raise CharacteristicTwo("symmetric reduction needs characteristic != 2")
    if not is_symmetric(a):
        raise NotSymmetric(f"{a.nrows}x{a.ncols} input is not symmetric")
    n = a.nrows
    f = a.field
    zero, one = f.zero(), f.one()
    work = _CongruenceWork(a)
    m = work.m
    for i in range(n):
        piv = next((j for j in range(i, n) if m[j][j] != zero), None)
        if piv is None:
            hit = next(((j, l) for j in range(i, n) for l in range(j + 1, n)
                        if m[j][l] != zero), None)
            if hit is None:
                break  # trailing submatrix is zero
            j, l = hit
            work.step(ElementaryOp.add_multiple(Axis.ROWS, j, l, one))
            piv = j
        if piv != i:
            work.step(ElementaryOp.swap(Axis.ROWS, i, piv))
        pivot = m[i][i]
        for x in range(i + 1, n):
            if m[x][i] != zero:
                work.step(ElementaryOp.add_multiple(
                    Axis.ROWS, x, i, f.neg(f.div(m[x][i], pivot))))
    # move nonzero diagonal entries into a leading prefix
    t = 0
    for idx in range(n):
        if m[idx][idx] != zero:
            if idx != t:
                work.step(ElementaryOp.swap(Axis.ROWS, t, idx))
            t += 1
    return work.finish(a)


def canonicalize_skew(a: Matrix) -> CongruenceReduction:
    """Congruence-reduce an antisymmetric matrix to leading_skew_pairs(rank, n, n)."""
    if a.field.characteristic() == 2:
        raise CharacteristicTwo("skew reduction needs characteristic != 2")
    if not is_antisymmetric(a):
        raise NotAntisymmetric(f"{a.nrows}x{a.ncols} input is not antisymmetric")
    n = a.nrows
    f = a.field
    zero, one = f.zero(), f.one()
    work = _CongruenceWork(a)
    m = work.m
    i = 0
    while i + 1 < n:
        hit = next(((j, l) for j in range(i, n) for l in range(j + 1, n)
                    if m[j][l] != zero), None)
        if hit is None:
            break
        j, l = hit
        if j != i:
            work.step(ElementaryOp.swap(Axis.ROWS, i, j))
        if l != i + 1:
            work.step(ElementaryOp.swap(Axis.ROWS, i + 1, l))
        if m[i][i + 1] != one:
            work.step(ElementaryOp.scale(Axis.ROWS, i, f.inv(m[i][i + 1])))
        # pivot pair is now m[i][i+1] = 1, m[i+1][i] = -1; clear both columns
        for x in range(i + 2, n):
            if m[x][i] != zero:
                work.step(ElementaryOp.add_multiple(Axis.ROWS, x, i + 1, m[x][i]))
            if m[x][i + 1] != zero:
                work.step(ElementaryOp.add_multiple(Axis.ROWS, x, i, f.neg(m[x][i + 1])))
        i += 2
    return work.finish(a)


def conjugate(m: Matrix, p: Matrix) -> Matrix:
    """Return p * m * p^T; requires p square invertible of matching size."""
    if not p.is_square or not m.is_square or p.ncols != m.nrows:
        raise SizeMismatch(
            f"cannot conjugate {m.nrows}x{m.ncols} by {p.nrows}x{p.ncols}")
    if rank(p) != p.nrows:
        raise SingularTransform("transform is singular")
    return p @ m @ p.transpose()


def rank_normal_form(a: Matrix) -> EquivalenceReduction:
    """Reduce a matrix to leading-identity form by independent row/column ops.

    Works over every field, including characteristic 2.
    """
    f = a.field
    zero = f.zero()
    m = a.row_lists()
    nr, nc = a.nrows, a.ncols
    u = _identity_rows(f, nr)
    uinv = _identity_rows(f, nr)
    v = _identity_rows(f, nc)
    vinv = _identity_rows(f, nc)

    def row_step(op):
        apply_row_op(m, op, f)
        apply_row_op(u, op, f)
        apply_col_op(uinv, _inverse_as_col_op(op, f), f)

    def col_step(op):
        apply_col_op(m, op, f)
        apply_col_op(v, op, f)
        apply_row_op(vinv, _inverse_as_row_op(op, f), f)

    r = 0
    while r < min(nr, nc):
        hit = next(((i, j) for j in range(r, nc) for i in range(r, nr)
                    if m[i][j] != zero), None)
        if hit is None:
            break
        i, j = hit
        if i != r:
            row_step(ElementaryOp.swap(Axis.ROWS, r, i))
        if j != r:
            col_step(ElementaryOp.swap(Axis.COLUMNS, r, j))
        if m[r][r] != f.one():
            row_step(ElementaryOp.scale(Axis.ROWS, r, f.inv(m[r][r])))
        for x in range(nr):
            if x != r and m[x][r] != zero:
                row_step(ElementaryOp.add_multiple(Axis.ROWS, x, r, f.neg(m[x][r])))
        for y in range(r + 1, nc):
            if m[r][y] != zero:
                col_step(ElementaryOp.add_multiple(Axis.COLUMNS, y, r, f.neg(m[r][y])))
        r += 1
    return EquivalenceReduction(
        input=a,
        canonical=Matrix.from_rows(f, m),
        row_transform=Matrix.from_rows(f, u),
        col_transform=Matrix.from_rows(f, v),
        row_inverse=Matrix.from_rows(f, uinv),
        col_inverse=Matrix.from_rows(f, vinv),
        rank=r,
    )
