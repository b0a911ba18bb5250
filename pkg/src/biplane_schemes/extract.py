"""Principal-core extraction from symmetric canonical biplane matrices.

For a biplane matrix of block size k in canonical form with full
diagonal, the principal submatrix on rows and columns k+2..3k-5
(1-based; k+1..3k-6 internally) has every row and column sum equal to 3
(check_lemma1). When the whole matrix is symmetric with full trace,
that core is itself symmetric and classifies as a 3-class PBIBD with
lambda = (0, 1, 2) and class sizes (2k-11, 2, 2); extract_design runs
the whole pipeline and reports everything it verified.

check_lemma2 handles the related structure result: a square (0,1)
matrix with all line sums 2 and no 2x2 all-ones block decomposes, as a
bipartite row-column graph, into cycles of even length >= 6, and each
row then has scalar product 1 with exactly two other rows and 0 with
the rest.

family_generate(m) returns the doubled matrix D_m = [[I, L_m], [L_m, I]]
as an incidence structure: one 3-class PBIBD on 2m points for every
m >= 3, verified rather than asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .binmat import BinaryMatrix, doubled, is_perm_equivalent
from .biplane import has_canonical_form, verify_biplane, VerificationError
from .incidence import IncidenceStructure
from .pbibd import PairClassification, classify, verify_pbibd
from .scheme import AssociationScheme, NotASchemeError, from_classification


class PreconditionError(Exception):
    """Input does not satisfy the hypotheses of the pipeline step."""


class HypothesisError(Exception):
    """Matrix fails the line-sum-2 / no-2x2-block hypothesis."""


class CounterexampleError(Exception):
    """A consequence that is a theorem for valid inputs failed.

    Reaching this means the input satisfied every hypothesis yet broke
    a derived property; such an input falsifies the underlying result
    and deserves loud reporting, not a quiet error code.
    """


def extraction_indices(k: int) -> tuple[int, ...]:
    """Core row/column indices for block size k, 0-based: k+1..3k-6.

    Reports use the 1-based form k+2..3k-5. The set has 2k-6 elements.
    Below k = 6 no nontrivial symmetric canonical biplane matrix exists
    and the set degenerates, so smaller k is rejected.
    """
    if k < 6:
        raise PreconditionError(
            f"extraction needs block size k >= 6, got {k}: no nontrivial "
            "symmetric canonical biplane matrices exist below k = 6"
        )
    return tuple(range(k + 1, 3 * k - 5))


def to_one_based(indices: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(i + 1 for i in indices)


def check_core_sums(core: BinaryMatrix) -> tuple[bool, Optional[dict]]:
    """All row and column sums of a core equal 3? Witness names the first miss.

    This is the lenient entry point for cores supplied directly,
    without the surrounding canonical matrix.
    """
    for i in range(core.rows):
        s = core.row_sum(i)
        if s != 3:
            return False, {"axis": "row", "index": i, "sum": s}
    for j in range(core.cols):
        s = core.col_sum(j)
        if s != 3:
            return False, {"axis": "column", "index": j, "sum": s}
    return True, None


def check_lemma1(m: BinaryMatrix, k: int) -> tuple[bool, Optional[dict]]:
    """Row/column sums of the principal core of a canonical matrix are 3.

    Hypotheses checked here: m is square in canonical form and its
    diagonal is 1 at least through position 3k-5 (1-based). Violations
    raise PreconditionError; the sum condition itself is returned as a
    flag plus witness.
    """
    indices = extraction_indices(k)
    if m.rows != m.cols:
        raise PreconditionError(f"matrix is {m.rows}x{m.cols}, not square")
    if m.rows < 3 * k - 5:
        raise PreconditionError(
            f"matrix of width {m.rows} cannot contain the core through index {3 * k - 5}"
        )
    if not has_canonical_form(m):
        raise PreconditionError("matrix is not in canonical form")
    for i in range(3 * k - 5):
        if m[i, i] != 1:
            raise PreconditionError(
                f"diagonal entry {i} is 0; ones are required through position {3 * k - 5}"
            )
    return check_core_sums(m.submatrix(indices, indices))


@dataclass(frozen=True)
class Lemma2Report:
    m: int
    cycle_lengths: tuple[int, ...]  # bipartite cycle lengths, each even and >= 6
    conclusion_ok: bool

    def report(self) -> dict:
        return {
            "m": self.m,
            "cycle_lengths": list(self.cycle_lengths),
            "conclusion_ok": self.conclusion_ok,
        }


def check_lemma2(a: BinaryMatrix) -> Lemma2Report:
    """Verify the two-neighbors conclusion for a line-sum-2 matrix.

    Hypotheses (HypothesisError with witness on failure): square of
    order m >= 3, every row and column sums to 2, and no two rows share
    two columns (no 2x2 all-ones submatrix). Conclusion verified: every
    row has scalar product 1 with exactly two other rows and 0 with the
    remaining m-3. The report carries the cycle decomposition of the
    bipartite row-column graph; a conclusion failure would raise
    CounterexampleError, but none is mathematically possible.
    """
    if a.rows != a.cols:
        raise HypothesisError(f"matrix is {a.rows}x{a.cols}, not square")
    m = a.rows
    if m < 3:
        raise HypothesisError(f"order {m} below 3; a 2x2 line-sum-2 matrix is all ones")
    for i in range(m):
        if a.row_sum(i) != 2:
            raise HypothesisError(f"row {i} sums to {a.row_sum(i)}, want 2")
    for j in range(m):
        if a.col_sum(j) != 2:
            raise HypothesisError(f"column {j} sums to {a.col_sum(j)}, want 2")
    for i in range(m):
        for j in range(i + 1, m):
            if a.row_dot(i, j) >= 2:
                raise HypothesisError(
                    f"rows {i} and {j} share {a.row_dot(i, j)} columns; "
                    "a 2x2 all-ones block is excluded"
                )

    for i in range(m):
        ones = sum(1 for j in range(m) if j != i and a.row_dot(i, j) == 1)
        if ones != 2:
            raise CounterexampleError(
                f"row {i} has scalar product 1 with {ones} rows, want exactly 2"
            )

    # components of the bipartite graph on rows and columns
    row_cols = [[j for j in range(m) if (a.bits[i] >> j) & 1] for i in range(m)]
    col_rows = [[i for i in range(m) if (a.bits[i] >> j) & 1] for j in range(m)]
    seen_rows, seen_cols = set(), set()
    lengths = []
    for start in range(m):
        if start in seen_rows:
            continue
        size = 0
        stack: list[tuple[str, int]] = [("row", start)]
        while stack:
            kind, x = stack.pop()
            if kind == "row":
                if x in seen_rows:
                    continue
                seen_rows.add(x)
                size += 1
                stack.extend(("col", j) for j in row_cols[x])
            else:
                if x in seen_cols:
                    continue
                seen_cols.add(x)
                size += 1
                stack.extend(("row", i) for i in col_rows[x])
        lengths.append(size)
    return Lemma2Report(m=m, cycle_lengths=tuple(sorted(lengths)), conclusion_ok=True)


@dataclass(eq=False)
class ExtractionReport:
    """Everything extract_design verified, plus the core and its scheme."""

    k: int
    indices: tuple[int, ...]  # 0-based
    core: BinaryMatrix
    lemma1_ok: bool
    symmetric_ok: bool
    pbibd: dict
    classification: PairClassification = field(repr=False)
    scheme: AssociationScheme = field(repr=False)
    d_equivalence: Optional[tuple[tuple[int, ...], tuple[int, ...]]]

    @property
    def indices_one_based(self) -> tuple[int, ...]:
        return to_one_based(self.indices)

    def report(self) -> dict:
        out = {
            "k": self.k,
            "indices": list(self.indices_one_based),
            "core": self.core.to_lists(),
            "lemma1_ok": self.lemma1_ok,
            "symmetric_ok": self.symmetric_ok,
            "pbibd": self.pbibd,
            "scheme": self.scheme.report(),
        }
        if self.d_equivalence is not None:
            rp, cp = self.d_equivalence
            out["d_equivalence"] = {"row_perm": list(rp), "col_perm": list(cp)}
        return out


def extract_design(m: BinaryMatrix) -> ExtractionReport:
    """Extract and verify the 3-class design inside a symmetric canonical
    biplane matrix with full trace.

    Preconditions (PreconditionError): m verifies as a biplane, is
    symmetric, has trace v, and is in canonical form. Consequences
    (CounterexampleError if ever violated): core sums 3, core symmetric,
    classification d=3 with lambda (0,1,2) and n (2k-11, 2, 2), PBIBD
    identities, and a valid 3-class scheme. The report also carries a
    permutation witness against doubled(k-3) when one exists; its
    absence is normal at some orders.
    """
    try:
        cert = verify_biplane(m)
    except VerificationError as exc:
        raise PreconditionError(f"not a biplane: {exc}") from exc
    if not cert.symmetric:
        raise PreconditionError("matrix is not symmetric")
    if not cert.full_trace:
        raise PreconditionError(f"trace {m.trace()} is below the point count {cert.v}")
    if not cert.canonical:
        raise PreconditionError("matrix is not in canonical form")
    k = cert.k

    lemma1_ok, witness = check_lemma1(m, k)
    if not lemma1_ok:
        raise CounterexampleError(f"core line sums are not all 3: {witness}")
    indices = extraction_indices(k)
    core = m.submatrix(indices, indices)
    if not core.is_symmetric():
        raise CounterexampleError("core of a symmetric matrix is not symmetric")

    structure = IncidenceStructure(core)
    classification = classify(structure)
    expected_lambdas = (0, 1, 2)
    expected_n = (2 * k - 11, 2, 2)
    if classification.lambdas != expected_lambdas:
        raise CounterexampleError(
            f"core concurrences are {classification.lambdas}, want {expected_lambdas}"
        )
    if classification.n != expected_n:
        raise CounterexampleError(
            f"core class sizes are {classification.n}, want {expected_n}"
        )
    pbibd_report = verify_pbibd(structure, expect_d=3)
    try:
        core_scheme = from_classification(classification)
    except NotASchemeError as exc:
        raise CounterexampleError(
            f"core classification is not an association scheme: {exc}"
        ) from exc

    witness_pair = is_perm_equivalent(core, doubled(k - 3))
    return ExtractionReport(
        k=k,
        indices=indices,
        core=core,
        lemma1_ok=True,
        symmetric_ok=True,
        pbibd=pbibd_report,
        classification=classification,
        scheme=core_scheme,
        d_equivalence=witness_pair,
    )


def family_generate(m: int) -> tuple[IncidenceStructure, dict]:
    """The doubled matrix D_m as a verified 3-class PBIBD on 2m points.

    For every m >= 3 the structure is symmetric with v = b = 2m and
    r = k = 3, concurrences (0, 1, 2), and class sizes (2m-5, 2, 2).
    All of that is verified on the generated matrix; a failure would
    raise CounterexampleError (none is possible).
    """
    if m < 3:
        raise PreconditionError(f"family needs m >= 3, got {m}")
    structure = IncidenceStructure(doubled(m))
    report = verify_pbibd(structure, expect_d=3)
    expected = {
        "lambda": [0, 1, 2],
        "n": [2 * m - 5, 2, 2],
        "v": 2 * m,
        "b": 2 * m,
        "r": 3,
        "k": 3,
    }
    for key, want in expected.items():
        if report[key] != want:
            raise CounterexampleError(f"family member m={m}: {key} = {report[key]}, want {want}")
    report["m"] = m
    return structure, report
