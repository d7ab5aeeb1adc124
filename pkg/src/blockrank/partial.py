"""Block-diagonal partial matrices and the closed-form extremal rank bounds.

A partial matrix here is a list of given square diagonal blocks; all
off-block entries are free.  The completion may be required to be
symmetric or antisymmetric, in which case every given block must satisfy
the same structure and the field must have characteristic other than 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import CharacteristicTwo, EmptyBlockList, NonSquareBlock, StructureViolation
from .field import Field
from .matrix import Matrix, StructureKind, rank, structure_check


class StructureClass(Enum):
    GENERAL = "general"
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


@dataclass(frozen=True)
class BlockDiagonalPartial:
    field: Field
    structure: StructureClass
    blocks: tuple

    @staticmethod
    def make(field: Field, structure: StructureClass, blocks) -> "BlockDiagonalPartial":
        return BlockDiagonalPartial(field, structure, tuple(blocks))

    @property
    def sizes(self) -> tuple:
        return tuple(b.nrows for b in self.blocks)

    @property
    def ranks(self) -> tuple:
        return tuple(rank(b) for b in self.blocks)

    @property
    def total_size(self) -> int:
        return sum(self.sizes)


@dataclass(frozen=True)
class RankBounds:
    min_rank: int | None  # None when the theory does not determine it
    max_rank: int


def validate(p: BlockDiagonalPartial) -> None:
    """Check all invariants; raises on the first violation."""
    if not p.blocks:
        raise EmptyBlockList("partial matrix needs at least one block")
    for i, b in enumerate(p.blocks):
        if b.field != p.field:
            raise StructureViolation(f"block {i} is over a different field", i)
        if not b.is_square:
            raise NonSquareBlock(i, b.nrows, b.ncols)
    if p.structure is not StructureClass.GENERAL:
        if p.field.characteristic() == 2:
            raise CharacteristicTwo(
                f"{p.structure.value} completions need characteristic != 2")
        for i, b in enumerate(p.blocks):
            kind = structure_check(b)
            if p.structure is StructureClass.SYMMETRIC:
                if kind not in (StructureKind.SYMMETRIC, StructureKind.BOTH):
                    raise StructureViolation(f"block {i} is not symmetric", i)
            else:
                if kind not in (StructureKind.ANTISYMMETRIC, StructureKind.BOTH):
                    raise StructureViolation(f"block {i} is not antisymmetric", i)


def even_part(n: int) -> int:
    """n if n is even, n-1 if n is odd."""
    return n - (n % 2)


def sort_blocks_by_size(p: BlockDiagonalPartial):
    """Reorder blocks so sizes are nondecreasing (stable).

    Returns the reordered partial and the permutation mapping new index to
    old index.  Reordering corresponds to a symmetric permutation of any
    completion's rows and columns, so rank bounds are unchanged.
    """
    validate(p)
    perm = sorted(range(len(p.blocks)), key=lambda i: p.blocks[i].nrows)
    reordered = BlockDiagonalPartial(p.field, p.structure,
                                     tuple(p.blocks[i] for i in perm))
    return reordered, tuple(perm)


def bounds_from_profile(sizes, ranks, structure: StructureClass) -> RankBounds:
    """Extremal completion ranks from block sizes and ranks alone.

    With sizes ascending, only the largest block's term 2(S - n) + r can
    undercut S, so taking the minimum of that term over all blocks is
    equivalent to the sorted formula and manifestly order-independent.
    """
    total = sum(sizes)
    cap = min(2 * (total - n) + r for n, r in zip(sizes, ranks))
    if structure is StructureClass.SYMMETRIC:
        return RankBounds(None, min(total, cap))
    if structure is StructureClass.ANTISYMMETRIC:
        return RankBounds(max(ranks), min(even_part(total), cap))
    return RankBounds(max(ranks), min(total, cap))


def rank_bounds(p: BlockDiagonalPartial) -> RankBounds:
    """Minimum and maximum rank over all structure-respecting completions."""
    validate(p)
    return bounds_from_profile(p.sizes, p.ranks, p.structure)
