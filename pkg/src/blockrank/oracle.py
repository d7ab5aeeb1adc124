"""Independent ground truth by brute force.

Exhaustively enumerates every structure-respecting completion of a
block-diagonal partial matrix over a prime field and reports the exact
minimum and maximum rank.  Deliberately separate from the constructive
code path: it never consults the bound formulas or the canonical forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import BudgetExceeded, NonFiniteField
from .field import FieldKind
from .matrix import Matrix
from .partial import BlockDiagonalPartial, StructureClass, validate

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class OracleResult:
    min_rank: int
    max_rank: int
    enumerated: int


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Destructive Gaussian elimination on reduced-residue integer rows."""
    nr = len(rows)
    nc = len(rows[0])
    r = 0
    for c in range(nc):
        piv = -1
        for i in range(r, nr):
            if rows[i][c]:
                piv = i
                break
        if piv < 0:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        for i in range(r + 1, nr):
            f = rows[i][c]
            if f:
                f = (f * inv) % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        r += 1
        if r == nr:
            break
    return r


def _block_offsets(p: BlockDiagonalPartial) -> list[int]:
    offsets = [0]
    for b in p.blocks:
        offsets.append(offsets[-1] + b.nrows)
    return offsets


def _block_of(offsets: list[int], i: int) -> int:
    for b in range(len(offsets) - 1):
        if offsets[b] <= i < offsets[b + 1]:
            return b
    raise IndexError(i)


def free_positions(p: BlockDiagonalPartial) -> list[tuple[int, int]]:
    """Free entry positions: off-block (i, j) pairs.

    For symmetric and antisymmetric completions only the upper positions
    (i < j) are listed; the mirror entries are determined.  For general
    completions both orientations are free and listed.
    """
    offsets = _block_offsets(p)
    total = offsets[-1]
    positions = []
    for i in range(total):
        bi = _block_of(offsets, i)
        for j in range(i + 1, total):
            if _block_of(offsets, j) != bi:
                positions.append((i, j))
    if p.structure is StructureClass.GENERAL:
        positions = positions + [(j, i) for i, j in positions]
    return positions


def _base_rows_int(p: BlockDiagonalPartial) -> list[list[int]]:
    offsets = _block_offsets(p)
    total = offsets[-1]
    rows = [[0] * total for _ in range(total)]
    for b, block in enumerate(p.blocks):
        o = offsets[b]
        for i in range(block.nrows):
            for j in range(block.ncols):
                rows[o + i][o + j] = block.entry(i, j)
    return rows


def exhaustive_extremes(p: BlockDiagonalPartial,
                        budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exact min and max rank over all structure-respecting completions."""
    validate(p)
    if p.field.kind is not FieldKind.PRIME:
        raise NonFiniteField("exhaustive enumeration needs a finite field")
    q = p.field.modulus
    positions = free_positions(p)
    total = q ** len(positions)
    if total > budget:
        raise BudgetExceeded(total, budget)
    base = _base_rows_int(p)
    mirror = p.structure is not StructureClass.GENERAL
    negate = p.structure is StructureClass.ANTISYMMETRIC
    best_min = None
    best_max = 0
    for assignment in product(range(q), repeat=len(positions)):
        rows = [row[:] for row in base]
        for (i, j), v in zip(positions, assignment):
            rows[i][j] = v
            if mirror:
                rows[j][i] = (q - v) % q if negate else v
        r = _rank_mod_p(rows, q)
        if best_min is None or r < best_min:
            best_min = r
        if r > best_max:
            best_max = r
    return OracleResult(best_min, best_max, total)


def random_completion(p: BlockDiagonalPartial, seed: int) -> Matrix:
    """Seeded structure-respecting completion; rational free entries are
    small integers in [-9, 9]."""
    validate(p)
    rng = random.Random(seed)
    offsets = _block_offsets(p)
    total = offsets[-1]
    f = p.field
    rows = [[f.zero()] * total for _ in range(total)]
    for b, block in enumerate(p.blocks):
        o = offsets[b]
        for i in range(block.nrows):
            for j in range(block.ncols):
                rows[o + i][o + j] = block.entry(i, j)
    if f.kind is FieldKind.PRIME:
        draw = lambda: rng.randrange(f.modulus)
    else:
        draw = lambda: Fraction(rng.randint(-9, 9))
    if p.structure is StructureClass.GENERAL:
        for i, j in free_positions(p):
            rows[i][j] = draw()
    else:
        negate = p.structure is StructureClass.ANTISYMMETRIC
        for i, j in free_positions(p):
            v = draw()
            rows[i][j] = v
            rows[j][i] = f.neg(v) if negate else v
    return Matrix.from_rows(f, rows)
