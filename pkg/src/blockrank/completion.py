"""Deterministic constructors for extremal-rank completions.

Each constructor canonicalizes the given blocks, fills the free region of
the canonical partial matrix with staircase or skew-pair generators, and
pulls the result back through the recorded inverse transforms, so the
returned matrix restricts exactly to the input blocks.  Every certificate
is re-verified (restriction, structure, rank) before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .canonical import (
    canonicalize_skew,
    diagonalize_symmetric,
    rank_normal_form,
)
from .errors import CertificateError, StructureViolation, UnsupportedTarget
from .field import Field
from .matrix import (
    Matrix,
    StructureKind,
    block_diag,
    leading_identity,
    leading_skew_pairs,
    rank,
    structure_check,
    trailing_staircase,
)
from .partial import (
    BlockDiagonalPartial,
    StructureClass,
    even_part,
    rank_bounds,
    sort_blocks_by_size,
    validate,
)


class Target(Enum):
    MIN = "min"
    MAX = "max"


@dataclass(frozen=True)
class CompletionCertificate:
    partial: BlockDiagonalPartial
    completed: Matrix
    target: Target
    claimed_rank: int
    construction_log: tuple


# -- assembly helpers ----------------------------------------------------


def _assemble_grid(field: Field, grid) -> Matrix:
    """Assemble a k x k grid of matrices with consistent block sizes."""
    sizes = [grid[i][i].nrows for i in range(len(grid))]
    total = sum(sizes)
    zero = field.zero()
    rows = [[zero] * total for _ in range(total)]
    roff = 0
    for i, bi in enumerate(sizes):
        coff = 0
        for j, bj in enumerate(sizes):
            cell = grid[i][j]
            for x in range(bi):
                rows[roff + x][coff:coff + bj] = \
                    [cell.entry(x, y) for y in range(bj)]
            coff += bj
        roff += bi
    return Matrix.from_rows(field, rows)


def _assemble_two(top_left: Matrix, upper: Matrix, lower: Matrix,
                  bottom_right: Matrix) -> Matrix:
    return _assemble_grid(top_left.field,
                          [[top_left, upper], [lower, bottom_right]])


def _unpermute(m: Matrix, sorted_sizes, perm) -> Matrix:
    """Undo a block permutation by the matching symmetric index permutation."""
    k = len(perm)
    old_sizes = [0] * k
    for new, old in enumerate(perm):
        old_sizes[old] = sorted_sizes[new]
    orig_off = [0] * k
    for i in range(1, k):
        orig_off[i] = orig_off[i - 1] + old_sizes[i - 1]
    sorted_off = [0] * k
    for i in range(1, k):
        sorted_off[i] = sorted_off[i - 1] + sorted_sizes[i - 1]
    total = sum(sorted_sizes)
    index = [0] * total
    for new, old in enumerate(perm):
        for x in range(sorted_sizes[new]):
            index[orig_off[old] + x] = sorted_off[new] + x
    rows = [[m.entry(index[a], index[b]) for b in range(total)]
            for a in range(total)]
    return Matrix.from_rows(m.field, rows)


def diagonal_blocks(m: Matrix, sizes) -> list[Matrix]:
    out = []
    off = 0
    for n in sizes:
        out.append(m.submatrix(off, off + n, off, off + n))
        off += n
    return out


# -- certificate checking -------------------------------------------------


def completion_failures(p: BlockDiagonalPartial, completed: Matrix) -> list[str]:
    """Named soundness failures of a candidate completion (empty when sound)."""
    failures = []
    total = p.total_size
    if completed.field != p.field:
        failures.append("field mismatch")
        return failures
    if completed.nrows != total or completed.ncols != total:
        failures.append("size mismatch")
        return failures
    if diagonal_blocks(completed, p.sizes) != list(p.blocks):
        failures.append("restriction mismatch")
    kind = structure_check(completed)
    if p.structure is StructureClass.SYMMETRIC and \
            kind not in (StructureKind.SYMMETRIC, StructureKind.BOTH):
        failures.append("structure violation")
    if p.structure is StructureClass.ANTISYMMETRIC and \
            kind not in (StructureKind.ANTISYMMETRIC, StructureKind.BOTH):
        failures.append("structure violation")
    return failures


def _check_certificate(cert: CompletionCertificate) -> None:
    failures = completion_failures(cert.partial, cert.completed)
    if failures:
        raise CertificateError("; ".join(failures))
    bounds = rank_bounds(cert.partial)
    expected = bounds.min_rank if cert.target is Target.MIN else bounds.max_rank
    actual = rank(cert.completed)
    if actual != cert.claimed_rank or cert.claimed_rank != expected:
        raise CertificateError(
            f"rank {actual} != claimed {cert.claimed_rank} (bound {expected})")


def _require_structure(p: BlockDiagonalPartial, wanted: StructureClass) -> None:
    if p.structure is not wanted:
        raise StructureViolation(
            f"constructor needs a {wanted.value} partial matrix, got {p.structure.value}")


# -- maximum-rank recursion on prefix-diagonal canonical blocks ----------


def _congruence_recanon(m: Matrix):
    red = diagonalize_symmetric(m)
    return (red.canonical, red.inverse_transform,
            red.inverse_transform.transpose(), red.rank)


def _equivalence_recanon(m: Matrix):
    eq = rank_normal_form(m)
    return eq.canonical, eq.row_inverse, eq.col_inverse, eq.rank


def _prefix_diag_fill_max(blocks: list[Matrix], recanon, log: list[str]) -> Matrix:
    """Maximum-rank completion of prefix-diagonal blocks sorted by size.

    The recursion drops the smallest block, completes the rest, re-reduces
    that completion to prefix-diagonal form via ``recanon``, and joins the
    two parts with a trailing staircase whose width covers both zero tails.
    """
    field = blocks[0].field
    k = len(blocks)
    if k == 1:
        log.append("single block: nothing to fill")
        return blocks[0]
    sizes = [b.nrows for b in blocks]
    ranks = [rank(b) for b in blocks]
    nk, rk = sizes[-1], ranks[-1]
    s = sum(sizes[:-1])
    if nk - rk >= s:
        log.append(f"large zero tail ({nk - rk} >= {s}): full-width staircase fill")
        return _assemble_two(
            block_diag(blocks[:-1]),
            trailing_staircase(field, s, s, nk),
            trailing_staircase(field, s, nk, s),
            blocks[-1])
    log.append(f"recursing on trailing {k - 1} blocks")
    trailing = _prefix_diag_fill_max(blocks[1:], recanon, log)
    s2 = trailing.nrows
    canon, back_left, back_right, rho = recanon(trailing)
    n1, r1 = sizes[0], ranks[0]
    t = max(n1 - r1, s2 - rho)
    if t > n1:
        raise CertificateError(f"staircase width {t} exceeds first block size {n1}")
    log.append(f"joining first block (zero tail {n1 - r1}) to rank-{rho} "
               f"completion with staircase of width {t}")
    filled = _assemble_two(blocks[0],
                           trailing_staircase(field, t, n1, s2),
                           trailing_staircase(field, t, s2, n1),
                           canon)
    eye = Matrix.identity(field, n1)
    return block_diag([eye, back_left]) @ filled @ block_diag([eye, back_right])


def _skew_fill_max(blocks: list[Matrix], log: list[str]) -> Matrix:
    """Maximum-rank antisymmetric completion of skew-pair canonical blocks
    sorted by size; same recursion shape as the prefix-diagonal case with
    negated upper staircases and even-part bookkeeping."""
    field = blocks[0].field
    k = len(blocks)
    if k == 1:
        log.append("single block: nothing to fill")
        return blocks[0]
    sizes = [b.nrows for b in blocks]
    ranks = [rank(b) for b in blocks]
    nk, rk = sizes[-1], ranks[-1]
    s = sum(sizes[:-1])
    if nk - rk >= s:
        log.append(f"large zero tail ({nk - rk} >= {s}): full-width staircase fill")
        return _assemble_two(
            block_diag(blocks[:-1]),
            trailing_staircase(field, s, s, nk).neg(),
            trailing_staircase(field, s, nk, s),
            blocks[-1])
    log.append(f"recursing on trailing {k - 1} blocks")
    trailing = _skew_fill_max(blocks[1:], log)
    s2 = trailing.nrows
    red = canonicalize_skew(trailing)
    rho = red.rank
    n1, r1 = sizes[0], ranks[0]
    if rho == even_part(s2):
        t = n1 - r1
        log.append(f"trailing completion reaches full even part {rho}: "
                   f"staircase width {t}")
    else:
        t = max(n1 - r1, s2 - rho)
        if t > n1:
            raise CertificateError(
                f"staircase width {t} exceeds first block size {n1}")
        log.append(f"trailing completion has rank {rho} < even part: "
                   f"staircase width {t}")
    filled = _assemble_two(blocks[0],
                           trailing_staircase(field, t, n1, s2).neg(),
                           trailing_staircase(field, t, s2, n1),
                           red.canonical)
    eye = Matrix.identity(field, n1)
    hinv = red.inverse_transform
    return block_diag([eye, hinv]) @ filled @ block_diag([eye, hinv.transpose()])


# -- public constructors --------------------------------------------------


def complete_symmetric_max(p: BlockDiagonalPartial) -> CompletionCertificate:
    """Symmetric completion of maximal rank min(S, 2(S - n_k) + r_k)."""
    validate(p)
    _require_structure(p, StructureClass.SYMMETRIC)
    sorted_p, perm = sort_blocks_by_size(p)
    log = [f"sorted blocks by size, permutation {list(perm)}"]
    reductions = [diagonalize_symmetric(b) for b in sorted_p.blocks]
    filled = _prefix_diag_fill_max([r.canonical for r in reductions],
                                   _congruence_recanon, log)
    hinv = block_diag([r.inverse_transform for r in reductions])
    completed = _unpermute(hinv @ filled @ hinv.transpose(),
                           sorted_p.sizes, perm)
    cert = CompletionCertificate(p, completed, Target.MAX,
                                 rank_bounds(p).max_rank, tuple(log))
    _check_certificate(cert)
    return cert


def complete_general_max(p: BlockDiagonalPartial) -> CompletionCertificate:
    """Unrestricted completion of maximal rank min(S, 2(S - n_k) + r_k);
    works over every field, including characteristic 2."""
    validate(p)
    _require_structure(p, StructureClass.GENERAL)
    sorted_p, perm = sort_blocks_by_size(p)
    log = [f"sorted blocks by size, permutation {list(perm)}"]
    reductions = [rank_normal_form(b) for b in sorted_p.blocks]
    filled = _prefix_diag_fill_max([r.canonical for r in reductions],
                                   _equivalence_recanon, log)
    left = block_diag([r.row_inverse for r in reductions])
    right = block_diag([r.col_inverse for r in reductions])
    completed = _unpermute(left @ filled @ right, sorted_p.sizes, perm)
    cert = CompletionCertificate(p, completed, Target.MAX,
                                 rank_bounds(p).max_rank, tuple(log))
    _check_certificate(cert)
    return cert


def complete_antisymmetric_max(p: BlockDiagonalPartial) -> CompletionCertificate:
    """Antisymmetric completion of maximal rank min(<S>, 2(S - n_k) + r_k)."""
    validate(p)
    _require_structure(p, StructureClass.ANTISYMMETRIC)
    sorted_p, perm = sort_blocks_by_size(p)
    log = [f"sorted blocks by size, permutation {list(perm)}"]
    reductions = [canonicalize_skew(b) for b in sorted_p.blocks]
    filled = _skew_fill_max([r.canonical for r in reductions], log)
    hinv = block_diag([r.inverse_transform for r in reductions])
    completed = _unpermute(hinv @ filled @ hinv.transpose(),
                           sorted_p.sizes, perm)
    cert = CompletionCertificate(p, completed, Target.MAX,
                                 rank_bounds(p).max_rank, tuple(log))
    _check_certificate(cert)
    return cert


def _min_fill_grid(field: Field, canon_blocks: list[Matrix],
                   ranks: list[int], maker) -> Matrix:
    """Fill block (i, j) with the rank-s_min(i,j) generator; blocks must be
    sorted by rank so every generator fits its cell."""
    k = len(canon_blocks)
    sizes = [b.nrows for b in canon_blocks]
    grid = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i == j:
                grid[i][j] = canon_blocks[i]
            else:
                grid[i][j] = maker(field, ranks[min(i, j)], sizes[i], sizes[j])
    return _assemble_grid(field, grid)


def complete_antisymmetric_min(p: BlockDiagonalPartial) -> CompletionCertificate:
    """Antisymmetric completion of minimal rank max(r_i)."""
    validate(p)
    _require_structure(p, StructureClass.ANTISYMMETRIC)
    ranks = p.ranks
    perm = tuple(sorted(range(len(p.blocks)), key=lambda i: ranks[i]))
    blocks_sorted = [p.blocks[i] for i in perm]
    log = [f"sorted blocks by rank, permutation {list(perm)}"]
    reductions = [canonicalize_skew(b) for b in blocks_sorted]
    sorted_ranks = [r.rank for r in reductions]
    log.append("filled every free cell with the skew-pair generator of the "
               "smaller participating rank")
    filled = _min_fill_grid(p.field, [r.canonical for r in reductions],
                            sorted_ranks, leading_skew_pairs)
    hinv = block_diag([r.inverse_transform for r in reductions])
    completed = _unpermute(hinv @ filled @ hinv.transpose(),
                           [b.nrows for b in blocks_sorted], perm)
    cert = CompletionCertificate(p, completed, Target.MIN,
                                 rank_bounds(p).min_rank, tuple(log))
    _check_certificate(cert)
    return cert


def complete_general_min(p: BlockDiagonalPartial) -> CompletionCertificate:
    """Unrestricted completion of minimal rank max(r_i); any characteristic."""
    validate(p)
    _require_structure(p, StructureClass.GENERAL)
    ranks = p.ranks
    perm = tuple(sorted(range(len(p.blocks)), key=lambda i: ranks[i]))
    blocks_sorted = [p.blocks[i] for i in perm]
    log = [f"sorted blocks by rank, permutation {list(perm)}"]
    reductions = [rank_normal_form(b) for b in blocks_sorted]
    sorted_ranks = [r.rank for r in reductions]
    log.append("filled every free cell with the leading-identity generator of "
               "the smaller participating rank")
    filled = _min_fill_grid(p.field, [r.canonical for r in reductions],
                            sorted_ranks, leading_identity)
    left = block_diag([r.row_inverse for r in reductions])
    right = block_diag([r.col_inverse for r in reductions])
    completed = _unpermute(left @ filled @ right,
                           [b.nrows for b in blocks_sorted], perm)
    cert = CompletionCertificate(p, completed, Target.MIN,
                                 rank_bounds(p).min_rank, tuple(log))
    _check_certificate(cert)
    return cert


def complete(p: BlockDiagonalPartial, target: Target) -> CompletionCertificate:
    """Dispatch to the constructor for the partial's structure and target."""
    if target is Target.MIN:
        if p.structure is StructureClass.SYMMETRIC:
            raise UnsupportedTarget(
                "minimum-rank symmetric completions are not supported")
        if p.structure is StructureClass.ANTISYMMETRIC:
            return complete_antisymmetric_min(p)
        return complete_general_min(p)
    if p.structure is StructureClass.SYMMETRIC:
        return complete_symmetric_max(p)
    if p.structure is StructureClass.ANTISYMMETRIC:
        return complete_antisymmetric_max(p)
    return complete_general_max(p)
