"""Point-block incidence structures and their counting identities.

Rows of the carrier matrix are points, columns are blocks. Point p is
incident with block L iff entry (p, L) is 1. Regularity means every
point lies on the same number r of blocks; uniformity means every block
contains the same number k of points; 2-balance means every unordered
point pair lies on the same number lambda of blocks.

For any regular uniform structure the double count v*r = b*k holds, and
for 2-balanced ones additionally r(k-1) = lambda(v-1). Both identities
are recomputed, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .binmat import BinaryMatrix


class StructureError(ValueError):
    """Structure lacks regularity or uniformity; carries the offending index."""

    def __init__(self, kind: str, index: int, message: str):
        super().__init__(message)
        self.kind = kind  # "point" or "block"
        self.index = index


class UnsupportedBalanceError(ValueError):
    """balance() supports t in {1, 2} only."""


@dataclass(frozen=True)
class IncidenceStructure:
    matrix: BinaryMatrix

    @property
    def v(self) -> int:
        return self.matrix.rows

    @property
    def b(self) -> int:
        return self.matrix.cols


@dataclass(frozen=True)
class DesignParameters:
    """Derived t-(v,b,r,k,lambda) parameters; lam is None in the PBIBD case."""

    t: int
    v: int
    b: int
    r: int
    k: int
    lam: Optional[int]
    order: Optional[int]
    symmetric: bool

    def report(self) -> dict:
        out = {"t": self.t, "v": self.v, "b": self.b, "r": self.r, "k": self.k}
        if self.lam is not None:
            out["lambda"] = self.lam
        if self.order is not None:
            out["order"] = self.order
        out["symmetric"] = self.symmetric
        return out


def regularity(s: IncidenceStructure) -> Optional[int]:
    """r if every point lies on exactly r blocks, else None."""
    sums = s.matrix.row_sums()
    return sums[0] if len(set(sums)) == 1 else None


def uniformity(s: IncidenceStructure) -> Optional[int]:
    """k if every block contains exactly k points, else None."""
    sums = s.matrix.col_sums()
    return sums[0] if len(set(sums)) == 1 else None


def balance(s: IncidenceStructure, t: int) -> Optional[int]:
    """lambda if every t-set of points lies on equally many blocks, else None.

    t=1 is regularity; t=2 is computed from the concurrence table
    M M^T, whose off-diagonal entry (p, q) counts blocks through both
    points.
    """
    if t == 1:
        return regularity(s)
    if t != 2:
        raise UnsupportedBalanceError(f"balance supports t in {{1, 2}}, got {t}")
    m = s.matrix
    if m.rows == 1:
        return None  # no point pairs to witness a lambda
    values = {
        m.row_dot(p, q) for p in range(m.rows) for q in range(p + 1, m.rows)
    }
    return values.pop() if len(values) == 1 else None


def derive_parameters(s: IncidenceStructure) -> DesignParameters:
    """Parameters of a regular uniform structure, with identities rechecked.

    Raises StructureError naming the first irregular point or
    non-uniform block. When the structure is 2-balanced the result
    carries lambda and the order r - lambda; otherwise both are None
    and the concurrence spectrum is the business of the pbibd module.
    """
    m = s.matrix
    row_sums = m.row_sums()
    r = row_sums[0]
    for p, total in enumerate(row_sums):
        if total != r:
            raise StructureError(
                "point", p, f"point {p} lies on {total} blocks, point 0 on {r}"
            )
    col_sums = m.col_sums()
    k = col_sums[0]
    for blk, total in enumerate(col_sums):
        if total != k:
            raise StructureError(
                "block", blk, f"block {blk} has {total} points, block 0 has {k}"
            )
    v, b = s.v, s.b
    if v * r != b * k:
        raise RuntimeError(
            f"double count broken: v*r = {v * r} but b*k = {b * k}"
        )
    lam = balance(s, 2)
    order = None
    if lam is not None and v > 1:
        if r * (k - 1) != lam * (v - 1):
            raise RuntimeError(
                f"pair count broken: r(k-1) = {r * (k - 1)} but lambda(v-1) = {lam * (v - 1)}"
            )
        order = r - lam
    return DesignParameters(
        t=2 if lam is not None else 1,
        v=v,
        b=b,
        r=r,
        k=k,
        lam=lam,
        order=order,
        symmetric=(v == b),
    )
