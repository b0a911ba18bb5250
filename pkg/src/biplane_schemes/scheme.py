"""Symmetric association schemes: axioms, intersection tensor, closure.

A d-class symmetric association scheme on a set X partitions X x X into
the diagonal class 0 and symmetric classes 1..d such that for every
(x, y) in class h the count of z with (x, z) in class i and (z, y) in
class j depends only on (h, i, j). Those counts are the intersection
numbers p[h][i][j]; constancy of every one of them is the axiom that
actually fails in the wild, and from_relation_matrix verifies it by
direct counting with bitset neighborhoods.

The class indicator matrices A_0 = I, A_1, ..., A_d sum to the all-ones
matrix and satisfy the closure A_i A_j = sum_h p[h][i][j] A_h over the
integers; bose_mesner_check recomputes that identity per pair (i, j)
with exact integer products.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .binmat import BinaryMatrix
from .pbibd import PairClassification


class AxiomError(ValueError):
    """The relation matrix breaks a structural axiom (named in .axiom)."""

    def __init__(self, axiom: str, message: str):
        super().__init__(message)
        self.axiom = axiom


class NotASchemeError(Exception):
    """Intersection counts are not constant on some class; carries a witness."""

    def __init__(self, h: int, i: int, j: int,
                 pair_a: tuple[int, int], count_a: int,
                 pair_b: tuple[int, int], count_b: int):
        super().__init__(
            f"p[{h}][{i}][{j}] is not well defined: pair {pair_a} gives "
            f"{count_a} but pair {pair_b} gives {count_b}"
        )
        self.h = h
        self.i = i
        self.j = j
        self.pair_a = pair_a
        self.count_a = count_a
        self.pair_b = pair_b
        self.count_b = count_b

    def witness(self) -> dict:
        return {
            "h": self.h, "i": self.i, "j": self.j,
            "pair_a": list(self.pair_a), "count_a": self.count_a,
            "pair_b": list(self.pair_b), "count_b": self.count_b,
        }


class InternalInconsistencyError(RuntimeError):
    """Closure failed for a verified scheme; impossible unless there is a bug."""


@dataclass(eq=False)
class AssociationScheme:
    """A verified scheme: relation matrix, tensor p[h][i][j], valencies n_0..n_d."""

    size: int
    d: int
    relation: np.ndarray = field(repr=False)
    p: np.ndarray = field(repr=False)
    n: tuple[int, ...]

    def report(self) -> dict:
        return {
            "size": self.size,
            "d": self.d,
            "n": list(self.n),
            "p": self.p.tolist(),
        }


def from_relation_matrix(r) -> AssociationScheme:
    """Verify a relation matrix and build the scheme.

    Structural gates first: square, zero diagonal, symmetric, and
    off-diagonal labels exactly 1..d with no gaps (AxiomError names the
    failed gate). Then the intersection count for every (h, i, j) is
    computed for every ordered pair and compared against the first pair
    of its class; the first disagreement raises NotASchemeError with
    both pairs as witness.
    """
    rel = np.asarray(r, dtype=np.int64)
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise AxiomError("shape", f"relation matrix must be square, got {rel.shape}")
    v = int(rel.shape[0])
    if np.any(np.diag(rel) != 0):
        x = int(np.flatnonzero(np.diag(rel))[0])
        raise AxiomError("diagonal", f"diagonal entry ({x},{x}) is {rel[x, x]}, not 0")
    if np.any(rel != rel.T):
        x, y = map(int, np.argwhere(rel != rel.T)[0])
        raise AxiomError(
            "symmetry", f"entry ({x},{y})={rel[x, y]} but ({y},{x})={rel[y, x]}"
        )
    off = rel[~np.eye(v, dtype=bool)]
    d = int(off.max()) if off.size else 0
    if off.size and off.min() < 1:
        x, y = map(int, np.argwhere((rel == 0) & ~np.eye(v, dtype=bool))[0])
        raise AxiomError(
            "partition", f"off-diagonal entry ({x},{y}) is 0; labels must be 1..d"
        )
    present = set(int(t) for t in np.unique(off))
    if present != set(range(1, d + 1)):
        missing = sorted(set(range(1, d + 1)) - present)
        raise AxiomError("labels", f"class labels {missing} are absent below max {d}")

    # class-i neighborhoods as bit rows: bit z of masks[i][x] <=> rel[x,z] == i
    masks = [[0] * v for _ in range(d + 1)]
    for x in range(v):
        masks[0][x] = 1 << x
        row = rel[x]
        for z in range(v):
            if z != x:
                masks[int(row[z])][x] |= 1 << z

    p = np.full((d + 1, d + 1, d + 1), -1, dtype=np.int64)
    first_pair: list[tuple[int, int] | None] = [None] * (d + 1)
    for x in range(v):
        for y in range(v):
            h = int(rel[x, y]) if x != y else 0
            if first_pair[h] is None:
                for i in range(d + 1):
                    for j in range(d + 1):
                        p[h, i, j] = (masks[i][x] & masks[j][y]).bit_count()
                first_pair[h] = (x, y)
            else:
                for i in range(d + 1):
                    for j in range(d + 1):
                        count = (masks[i][x] & masks[j][y]).bit_count()
                        if count != p[h, i, j]:
                            raise NotASchemeError(
                                h, i, j,
                                first_pair[h], int(p[h, i, j]),
                                (x, y), count,
                            )
    valencies = tuple(int(p[0, i, i]) for i in range(d + 1))
    return AssociationScheme(size=v, d=d, relation=rel.copy(), p=p, n=valencies)


def from_classification(c: PairClassification) -> AssociationScheme:
    """Scheme from a PBIBD pair classification.

    Constant class sizes n_i do not imply constant intersection
    numbers, so this can legitimately fail: the propagated
    NotASchemeError then exhibits two same-class pairs with different
    triple counts.
    """
    return from_relation_matrix(c.relation)


def associate_matrices(s: AssociationScheme) -> list[BinaryMatrix]:
    """Indicators A_0 = I, A_1, ..., A_d; they sum to the all-ones matrix."""
    out = []
    for label in range(s.d + 1):
        if label == 0:
            ind = np.eye(s.size, dtype=np.int64)
        else:
            ind = (s.relation == label).astype(np.int64)
        out.append(BinaryMatrix.from_rows(ind.tolist()))
    return out


def relation_matrix(s: AssociationScheme) -> np.ndarray:
    """The relation matrix back out; round-trips through from_relation_matrix."""
    return s.relation.copy()


def bose_mesner_check(s: AssociationScheme) -> dict:
    """Recheck closure A_i A_j = sum_h p[h][i][j] A_h with integer products.

    Also confirms commutativity of every product and that the
    indicators sum to the all-ones matrix. All three are theorems once
    the intersection tensor is constant, so failure raises
    InternalInconsistencyError rather than reporting bad input.
    """
    mats = [m.to_numpy() for m in associate_matrices(s)]
    total = sum(mats)
    if not np.array_equal(total, np.ones((s.size, s.size), dtype=np.int64)):
        raise InternalInconsistencyError("class indicators do not sum to all-ones")
    for i in range(s.d + 1):
        for j in range(s.d + 1):
            prod = mats[i] @ mats[j]
            expect = sum(int(s.p[h, i, j]) * mats[h] for h in range(s.d + 1))
            if not np.array_equal(prod, expect):
                raise InternalInconsistencyError(
                    f"A_{i} A_{j} deviates from its p-expansion"
                )
            if not np.array_equal(prod, mats[j] @ mats[i]):
                raise InternalInconsistencyError(f"A_{i} and A_{j} do not commute")
    return {"closure": True, "commutative": True, "sum_to_all_ones": True}


# ---------------------------------------------------------------------------
# text format for relation matrices
# ---------------------------------------------------------------------------


def format_relation(r) -> str:
    """Same grid layout as the matrix format, with entries 0..d."""
    rel = np.asarray(r, dtype=np.int64)
    lines = [f"{rel.shape[0]} {rel.shape[1]}"]
    for row in rel:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def parse_relation(text: str) -> np.ndarray:
    """Inverse of format_relation; '.' is accepted as 0."""
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
            f"expected {rows * cols} entries for a {rows}x{cols} table, got {len(body)}"
        )
    values = []
    for tok in body:
        if tok == ".":
            values.append(0)
        else:
            try:
                values.append(int(tok))
            except ValueError as exc:
                raise ValueError(f"bad entry token {tok!r}") from exc
    if any(x < 0 for x in values):
        raise ValueError("negative entries are not class labels")
    return np.array(values, dtype=np.int64).reshape(rows, cols)
