"""Exact (0,1)-matrix kernel with bit-packed rows.

A matrix is an immutable tuple of Python ints, one int per row, bit j
holding the entry in column j. The scalar product of two rows is then a
single AND plus popcount, which is where verification and search spend
nearly all of their time.

Constructors cover the named matrix families used throughout the
package: J (constant), I (identity), C- (anti-diagonal), L (path with
end loops), T (border), D (doubled), and disjoint unions of cycle
blocks. Block assembly, principal submatrices, permutations, and
permutation-equivalence testing live here too.

Indexing is 0-based everywhere in this module.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


class DimensionError(ValueError):
    """Empty or inconsistent matrix dimensions."""


class ShapeError(ValueError):
    """Operation requires a shape the input does not have."""


class PermutationError(ValueError):
    """Permutation has the wrong length, duplicates, or bad indices."""


# ---------------------------------------------------------------------------
# core type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinaryMatrix:
    """Dense (0,1) matrix; ``bits[i]`` packs row i with bit j = column j."""

    rows: int
    cols: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionError(
                f"dimensions must be positive, got {self.rows}x{self.cols}"
            )
        if len(self.bits) != self.rows:
            raise DimensionError(
                f"expected {self.rows} packed rows, got {len(self.bits)}"
            )
        mask = (1 << self.cols) - 1
        for i, row in enumerate(self.bits):
            if row < 0 or row & ~mask:
                raise DimensionError(f"row {i} has bits outside {self.cols} columns")

    # -- construction -------------------------------------------------------

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "BinaryMatrix":
        packed = []
        width = None
        for row in rows:
            row = list(row)
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise DimensionError("ragged rows")
            acc = 0
            for j, entry in enumerate(row):
                if entry not in (0, 1):
                    raise ValueError(f"entry {entry!r} is not 0 or 1")
                acc |= entry << j
            packed.append(acc)
        if not packed or not width:
            raise DimensionError("matrix must have at least one row and one column")
        return BinaryMatrix(len(packed), width, tuple(packed))

    # -- element access ------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        self._check_row(i)
        self._check_col(j)
        return (self.bits[i] >> j) & 1

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.rows:
            raise IndexError(f"row index {i} out of range 0..{self.rows - 1}")

    def _check_col(self, j: int) -> None:
        if not 0 <= j < self.cols:
            raise IndexError(f"column index {j} out of range 0..{self.cols - 1}")

    # -- scalar queries ------------------------------------------------------

    def row_sum(self, i: int) -> int:
        self._check_row(i)
        return self.bits[i].bit_count()

    def col_sum(self, j: int) -> int:
        self._check_col(j)
        return sum((row >> j) & 1 for row in self.bits)

    def row_sums(self) -> list[int]:
        return [row.bit_count() for row in self.bits]

    def col_sums(self) -> list[int]:
        return [self.col_sum(j) for j in range(self.cols)]

    def row_dot(self, i: int, j: int) -> int:
        """Number of columns where rows i and j are both 1."""
        self._check_row(i)
        self._check_row(j)
        return (self.bits[i] & self.bits[j]).bit_count()

    def count_ones(self) -> int:
        return sum(row.bit_count() for row in self.bits)

    def trace(self) -> int:
        if self.rows != self.cols:
            raise ShapeError("trace requires a square matrix")
        return sum((self.bits[i] >> i) & 1 for i in range(self.rows))

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            raise ShapeError("is_symmetric requires a square matrix")
        return all(
            (self.bits[i] >> j) & 1 == (self.bits[j] >> i) & 1
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def column_bits(self, j: int) -> int:
        """Column j packed as an int with bit i = row i."""
        self._check_col(j)
        acc = 0
        for i, row in enumerate(self.bits):
            acc |= ((row >> j) & 1) << i
        return acc

    # -- derived matrices ----------------------------------------------------

    def transpose(self) -> "BinaryMatrix":
        return BinaryMatrix(
            self.cols, self.rows, tuple(self.column_bits(j) for j in range(self.cols))
        )

    def submatrix(
        self, row_idx: Sequence[int], col_idx: Sequence[int]
    ) -> "BinaryMatrix":
        """Entries copied in index order; principal submatrix when the sets agree."""
        row_idx = list(row_idx)
        col_idx = list(col_idx)
        for i in row_idx:
            self._check_row(i)
        for j in col_idx:
            self._check_col(j)
        packed = []
        for i in row_idx:
            acc = 0
            for pos, j in enumerate(col_idx):
                acc |= ((self.bits[i] >> j) & 1) << pos
            packed.append(acc)
        return BinaryMatrix(len(row_idx), len(col_idx), tuple(packed))

    def permute(
        self, row_perm: Sequence[int], col_perm: Sequence[int]
    ) -> "BinaryMatrix":
        """Return B with B[row_perm[i], col_perm[j]] = self[i, j]."""
        rp = _validated_perm(row_perm, self.rows, "row")
        cp = _validated_perm(col_perm, self.cols, "column")
        packed = [0] * self.rows
        for i in range(self.rows):
            src = self.bits[i]
            acc = 0
            for j in range(self.cols):
                acc |= ((src >> j) & 1) << cp[j]
            packed[rp[i]] = acc
        return BinaryMatrix(self.rows, self.cols, tuple(packed))

    # -- conversions ---------------------------------------------------------

    def to_lists(self) -> list[list[int]]:
        return [
            [(row >> j) & 1 for j in range(self.cols)] for row in self.bits
        ]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.int64)

    def __str__(self) -> str:
        return format_matrix(self)


def _validated_perm(perm: Sequence[int], n: int, which: str) -> list[int]:
    perm = list(perm)
    if len(perm) != n:
        raise PermutationError(f"{which} permutation has length {len(perm)}, need {n}")
    if sorted(perm) != list(range(n)):
        raise PermutationError(f"{which} permutation is not a bijection on 0..{n - 1}")
    return perm


# ---------------------------------------------------------------------------
# named constructors
# ---------------------------------------------------------------------------


def constant(m: int, n: int, v: int) -> BinaryMatrix:
    """The all-v matrix J (v=1) or zero matrix (v=0) of shape m x n."""
    if v not in (0, 1):
        raise ValueError("fill value must be 0 or 1")
    if m < 1 or n < 1:
        raise DimensionError(f"dimensions must be positive, got {m}x{n}")
    row = (1 << n) - 1 if v else 0
    return BinaryMatrix(m, n, (row,) * m)


def identity(n: int) -> BinaryMatrix:
    if n < 1:
        raise DimensionError("identity needs n >= 1")
    return BinaryMatrix(n, n, tuple(1 << i for i in range(n)))


def anti_diagonal(n: int) -> BinaryMatrix:
    """C-: entry (i, j) = 1 iff i + j = n - 1."""
    if n < 1:
        raise DimensionError("anti_diagonal needs n >= 1")
    return BinaryMatrix(n, n, tuple(1 << (n - 1 - i) for i in range(n)))


def path_loop(n: int) -> BinaryMatrix:
    """L_n: a path on the rows with a loop at each end.

    Row 0 has ones at columns {0, 1}, row n-1 at {n-2, n-1}, and every
    interior row i at {i-1, i+1}. Symmetric, all row and column sums 2,
    and for n >= 3 no two rows share more than one column.
    """
    if n < 2:
        raise DimensionError("path_loop needs n >= 2")
    packed = [0b11]
    for i in range(1, n - 1):
        packed.append((1 << (i - 1)) | (1 << (i + 1)))
    packed.append((0b11 << (n - 2)))
    return BinaryMatrix(n, n, tuple(packed))


def border(n: int) -> BinaryMatrix:
    """T_n: entry (i, j) = 1 iff exactly one of i, j lies on the boundary {0, n-1}."""
    if n < 3:
        raise DimensionError("border needs n >= 3")
    boundary = 1 | (1 << (n - 1))
    interior = ((1 << n) - 1) ^ boundary
    packed = [interior]
    packed.extend(boundary for _ in range(n - 2))
    packed.append(interior)
    return BinaryMatrix(n, n, tuple(packed))


def doubled(m: int) -> BinaryMatrix:
    """D_m = [[I_m, L_m], [L_m, I_m]]: symmetric, trace 2m, all sums 3."""
    if m < 3:
        raise DimensionError("doubled needs m >= 3")
    ell = path_loop(m)
    return assemble([[identity(m), ell], [ell, identity(m)]])


def disjoint_cycles(lengths: Sequence[int]) -> BinaryMatrix:
    """Block-diagonal union of cycle blocks.

    A cycle block of size n has row i with ones at columns i and
    (i+1) mod n, so each block's bipartite row-column graph is a single
    cycle of length 2n. Row and column sums are all 2.
    """
    lengths = list(lengths)
    if not lengths:
        raise DimensionError("need at least one cycle length")
    if any(n < 3 for n in lengths):
        raise DimensionError("cycle blocks need length >= 3")
    packed = []
    offset = 0
    for n in lengths:
        for i in range(n):
            packed.append((1 << (offset + i)) | (1 << (offset + (i + 1) % n)))
        offset += n
    total = sum(lengths)
    return BinaryMatrix(total, total, tuple(packed))


def assemble(blocks: Sequence[Sequence[BinaryMatrix]]) -> BinaryMatrix:
    """Concatenate a grid of blocks in row-major order."""
    if not blocks or any(not band for band in blocks):
        raise DimensionError("block grid must be non-empty")
    widths = [blk.cols for blk in blocks[0]]
    packed: list[int] = []
    for band in blocks:
        if [blk.cols for blk in band] != widths:
            raise DimensionError("block column widths differ between bands")
        height = band[0].rows
        if any(blk.rows != height for blk in band):
            raise DimensionError("blocks in one band have differing row counts")
        for i in range(height):
            acc = 0
            shift = 0
            for blk in band:
                acc |= blk.bits[i] << shift
                shift += blk.cols
            packed.append(acc)
    return BinaryMatrix(len(packed), sum(widths), tuple(packed))


# ---------------------------------------------------------------------------
# permutation equivalence
# ---------------------------------------------------------------------------


def is_perm_equivalent(
    a: BinaryMatrix, b: BinaryMatrix
) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Search for (row_perm, col_perm) with a.permute(...) == b.

    Returns the witnessing pair, or None when the matrices are not
    equivalent. Row scalar products are invariant under column
    permutations, so candidate row maps must carry the whole row-dot
    table of ``a`` onto that of ``b``; that plus row/column-sum multiset
    pre-filters prunes the backtracking hard. Intended for orders up to
    a few dozen.
    """
    if (a.rows, a.cols) != (b.rows, b.cols):
        return None
    if a.count_ones() != b.count_ones():
        return None
    if sorted(a.row_sums()) != sorted(b.row_sums()):
        return None
    if sorted(a.col_sums()) != sorted(b.col_sums()):
        return None

    n = a.rows
    dots_a = [[(a.bits[i] & a.bits[j]).bit_count() for j in range(n)] for i in range(n)]
    dots_b = [[(b.bits[i] & b.bits[j]).bit_count() for j in range(n)] for i in range(n)]

    def signature(dots, sums, i):
        profile = sorted(dots[i][j] for j in range(n) if j != i)
        return (sums[i], tuple(profile))

    sums_a, sums_b = a.row_sums(), b.row_sums()
    sig_b: dict = defaultdict(list)
    for r in range(n):
        sig_b[signature(dots_b, sums_b, r)].append(r)
    candidates = []
    for i in range(n):
        cand = sig_b.get(signature(dots_a, sums_a, i), [])
        if not cand:
            return None
        candidates.append(cand)

    # assign the most constrained rows first
    order = sorted(range(n), key=lambda i: len(candidates[i]))
    assigned: list[Optional[int]] = [None] * n
    used = [False] * n

    def complete_columns() -> Optional[tuple[int, ...]]:
        # pull b's columns back through the row map, then match equal columns
        cols_a = [tuple((a.bits[i] >> j) & 1 for i in range(n)) for j in range(a.cols)]
        pool: dict = defaultdict(list)
        for c in range(b.cols):
            vec = tuple((b.bits[assigned[i]] >> c) & 1 for i in range(n))
            pool[vec].append(c)
        col_perm = [0] * a.cols
        for j, vec in enumerate(cols_a):
            bucket = pool.get(vec)
            if not bucket:
                return None
            col_perm[j] = bucket.pop()
        return tuple(col_perm)

    def backtrack(pos: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        if pos == n:
            col_perm = complete_columns()
            if col_perm is None:
                return None
            return tuple(assigned), col_perm  # type: ignore[arg-type]
        i = order[pos]
        for r in candidates[i]:
            if used[r]:
                continue
            ok = True
            for earlier in order[:pos]:
                if dots_a[i][earlier] != dots_b[r][assigned[earlier]]:
                    ok = False
                    break
            if not ok:
                continue
            assigned[i] = r
            used[r] = True
            found = backtrack(pos + 1)
            if found is not None:
                return found
            assigned[i] = None
            used[r] = False
        return None

    witness = backtrack(0)
    if witness is None:
        return None
    row_perm, col_perm = witness
    # paranoia: a witness must actually transport a onto b
    assert a.permute(row_perm, col_perm) == b
    return row_perm, col_perm


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

_TOKEN_VALUES = {"0": 0, ".": 0, "1": 1}


def format_matrix(m: BinaryMatrix) -> str:
    """First line "rows cols", then one line of 0/1 tokens per row."""
    lines = [f"{m.rows} {m.cols}"]
    for row in m.bits:
        lines.append(" ".join("1" if (row >> j) & 1 else "0" for j in range(m.cols)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BinaryMatrix:
    """Inverse of format_matrix; '.' is accepted as a synonym for 0."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("missing 'rows cols' header")
    try:
        rows, cols = int(tokens[0]), int(tokens[1])
    except ValueError as exc:
        raise ValueError(f"malformed header {tokens[:2]!r}") from exc
    body = tokens[2:]
    if len(body) != rows * cols:
        raise ValueError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(body)}"
        )
    packed = []
    for i in range(rows):
        acc = 0
        for j in range(cols):
            tok = body[i * cols + j]
            if tok not in _TOKEN_VALUES:
                raise ValueError(f"bad entry token {tok!r} at row {i}, column {j}")
            acc |= _TOKEN_VALUES[tok] << j
        packed.append(acc)
    return BinaryMatrix(rows, cols, tuple(packed))
