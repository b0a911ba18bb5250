"""Biplane verification, the canonical head, and the assembled order-4 biplane."""

import pytest

from biplane_schemes.binmat import (
    BinaryMatrix,
    ShapeError,
    constant,
    identity,
    path_loop,
)
from biplane_schemes.biplane import (
    ParameterError,
    VerificationError,
    assemble_b4c,
    block_size_for,
    canonical_head,
    has_canonical_form,
    head_width,
    verify_biplane,
)

# 2-(7,4,2): rows are points, columns are the complements of the seven
# triples {0,1,2},{0,3,4},{0,5,6},{1,3,5},{1,4,6},{2,3,6},{2,4,5}
TRIPLES_7 = [
    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5),
]


def order_2_biplane() -> BinaryMatrix:
    rows = [[0 if p in blk else 1 for blk in TRIPLES_7] for p in range(7)]
    return BinaryMatrix.from_rows(rows)


def test_head_width():
    assert [head_width(k) for k in range(1, 8)] == [1, 2, 4, 7, 11, 16, 22]
    assert head_width(11) == 56


def test_block_size_for():
    for k in range(1, 12):
        assert block_size_for(head_width(k)) == k
    for v in (3, 5, 6, 8, 9, 10, 12):
        with pytest.raises(ShapeError):
            block_size_for(v)
    with pytest.raises(ShapeError):
        block_size_for(0)


def test_canonical_head_structure():
    for k in range(3, 9):
        h = canonical_head(k)
        assert (h.rows, h.cols) == (k, head_width(k))
        assert h.col_sum(0) == k
        assert all(h.col_sum(j) == 2 for j in range(1, h.cols))
        assert h.row_sums() == [k] * k
        for i in range(k):
            for j in range(i + 1, k):
                assert h.row_dot(i, j) == 2


def test_canonical_head_small_k():
    assert canonical_head(3).to_lists() == [
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
    ]
    with pytest.raises(ParameterError):
        canonical_head(2)


def test_assemble_b4c_certificate():
    m = assemble_b4c()
    cert = verify_biplane(m)
    assert (cert.k, cert.v, cert.order) == (6, 16, 4)
    assert cert.canonical and cert.full_trace and cert.symmetric
    assert m.trace() == 16
    assert m.is_symmetric()
    assert cert.report() == {
        "k": 6, "v": 16, "order": 4,
        "canonical": True, "full_trace": True, "symmetric": True,
    }


def test_verify_order_2_biplane():
    cert = verify_biplane(order_2_biplane())
    assert (cert.k, cert.v, cert.order) == (4, 7, 2)
    assert not cert.canonical


def test_verify_trivial_biplane():
    # complement of I4 is the four-triangle biplane on 4 points
    m = BinaryMatrix.from_rows([
        [0, 1, 1, 1],
        [1, 0, 1, 1],
        [1, 1, 0, 1],
        [1, 1, 1, 0],
    ])
    cert = verify_biplane(m)
    assert (cert.k, cert.order) == (3, 1)
    assert not cert.canonical and not cert.full_trace


def test_verify_rejections():
    with pytest.raises(VerificationError) as err:
        verify_biplane(constant(2, 3, 1))
    assert err.value.axiom == "square"

    with pytest.raises(VerificationError) as err:
        verify_biplane(identity(4))
    assert err.value.axiom == "point-count"

    with pytest.raises(VerificationError) as err:
        verify_biplane(BinaryMatrix.from_rows([[1, 1], [1, 0]]))
    assert err.value.axiom == "row-regularity"

    with pytest.raises(VerificationError) as err:
        verify_biplane(BinaryMatrix.from_rows([
            [1, 1, 0, 0],
            [1, 1, 0, 0],
            [0, 1, 1, 0],
            [0, 0, 1, 1],
        ]))
    assert err.value.axiom == "column-regularity"

    with pytest.raises(VerificationError) as err:
        verify_biplane(constant(1, 1, 0))
    assert err.value.axiom == "row-regularity"


def test_verify_balance_rejection():
    # a line-sum-preserving 2x2 swap breaks pair balance somewhere
    m = order_2_biplane()
    rows = m.to_lists()
    swapped = None
    for i1 in range(7):
        for i2 in range(i1 + 1, 7):
            for j1 in range(7):
                for j2 in range(j1 + 1, 7):
                    if (rows[i1][j1], rows[i1][j2], rows[i2][j1], rows[i2][j2]) == (1, 0, 0, 1):
                        alt = [row[:] for row in rows]
                        alt[i1][j1], alt[i1][j2] = 0, 1
                        alt[i2][j1], alt[i2][j2] = 1, 0
                        swapped = BinaryMatrix.from_rows(alt)
                        break
                if swapped:
                    break
            if swapped:
                break
        if swapped:
            break
    assert swapped is not None
    with pytest.raises(VerificationError) as err:
        verify_biplane(swapped)
    assert err.value.axiom in ("row-balance", "column-balance")
    assert len(err.value.witness) == 3


def test_has_canonical_form():
    m = assemble_b4c()
    assert has_canonical_form(m)
    shuffled = m.permute(
        list(range(14)) + [15, 14], list(range(16)))
    assert not has_canonical_form(shuffled)
    with pytest.raises(ShapeError):
        has_canonical_form(constant(3, 4, 1))
    with pytest.raises(ShapeError):
        has_canonical_form(identity(5))
    with pytest.raises(ShapeError):
        has_canonical_form(identity(2))  # width gives k = 2, below 3


def test_b4c_head_rows():
    m = assemble_b4c()
    head = canonical_head(6)
    assert m.submatrix(range(6), range(16)) == head
    assert m.submatrix(range(16), range(6)) == head.transpose()
