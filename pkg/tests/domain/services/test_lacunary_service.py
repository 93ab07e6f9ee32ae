import numpy as np
import pytest
from scipy.special import iv

from src.domain.entities.lacunary import EdgeSide, LacunarySpec, LacunarySplit
from src.domain.exceptions.domain_exceptions import (
    DuplicateIndexException,
    MixedAnchorException,
    OutOfRangeException,
)
from tests.conftest import A, B, plain_tridiagonal_det


def test_validate_orders_overlap_first(lacunary_service):
    spec = lacunary_service.validate_and_normalize(8, lines=[(3, 0), (1, -1)], rows=[(5, -2), (1, 0)])
    assert spec.h == [1, 3]
    assert spec.p == [-1, 0]
    assert spec.t == [1, 5]
    assert spec.overlap_c == 1


def test_validate_without_overlap(lacunary_service):
    spec = lacunary_service.validate_and_normalize(8, lines=[(2, 9)], rows=[(7, 0)])
    assert spec.overlap_c == 0
    assert spec.n == 1 and spec.r == 1


@pytest.mark.parametrize(
    "lines, rows",
    [
        ([(0, -1)], []),
        ([(9, 10)], []),
        ([(1, 4)], []),
        ([], [(2, 8)]),
        ([], [(3, 1)]),
    ],
)
def test_validate_rejects_out_of_range(lacunary_service, lines, rows):
    with pytest.raises(OutOfRangeException):
        lacunary_service.validate_and_normalize(8, lines=lines, rows=rows)


def test_validate_rejects_duplicates(lacunary_service):
    with pytest.raises(DuplicateIndexException):
        lacunary_service.validate_and_normalize(8, lines=[(1, 0), (1, -1)])
    with pytest.raises(DuplicateIndexException):
        lacunary_service.validate_and_normalize(8, rows=[(1, 0), (2, 0)])


def test_validate_rejects_non_positive_size(lacunary_service):
    with pytest.raises(OutOfRangeException):
        lacunary_service.validate_and_normalize(0)


def test_split_and_recombine(lacunary_service):
    spec = lacunary_service.validate_and_normalize(10, lines=[(1, 0), (10, 11)], rows=[(9, 13)])
    split = lacunary_service.split_edge_anchored(spec)
    assert split.minus.lines == ((1, 1),)
    assert split.plus.lines == ((1, 1),)
    assert split.plus.rows == ((2, 3),)
    lines, rows = split.recombine(10)
    rebuilt = lacunary_service.validate_and_normalize(10, lines, rows)
    assert rebuilt.row_sequence().tolist() == spec.row_sequence().tolist()
    assert rebuilt.column_sequence().tolist() == spec.column_sequence().tolist()


def test_split_keeps_shape_for_other_sizes(lacunary_service):
    spec = lacunary_service.validate_and_normalize(10, lines=[(10, 11)])
    split = lacunary_service.split_edge_anchored(spec)
    lines, _ = split.recombine(20)
    assert lines == [(20, 21)]


def test_split_rejects_mixed_anchor(lacunary_service):
    spec = lacunary_service.validate_and_normalize(10, lines=[(1, 12)])
    with pytest.raises(MixedAnchorException):
        lacunary_service.split_edge_anchored(spec)


def test_exact_ratio_of_empty_spec_is_one(lacunary_service, tridiagonal_symbol):
    spec = lacunary_service.validate_and_normalize(12)
    result = lacunary_service.exact_ratio(tridiagonal_symbol, spec)
    assert result.value == 1
    assert result.plain_log_modulus == pytest.approx(np.log(plain_tridiagonal_det(12)), abs=1e-12)


@pytest.mark.parametrize("N", [2, 8, 32])
def test_exact_ratio_first_line(lacunary_service, tridiagonal_symbol, N):
    spec = lacunary_service.validate_and_normalize(N, lines=[(1, 0)])
    result = lacunary_service.exact_ratio(tridiagonal_symbol, spec)
    expected = B * plain_tridiagonal_det(N - 1) / plain_tridiagonal_det(N)
    assert abs(result.value - expected) < 1e-12


def test_exact_ratio_last_line(lacunary_service, tridiagonal_symbol):
    N = 16
    spec = lacunary_service.validate_and_normalize(N, lines=[(N, N + 1)])
    result = lacunary_service.exact_ratio(tridiagonal_symbol, spec)
    expected = A * plain_tridiagonal_det(N - 1) / plain_tridiagonal_det(N)
    assert abs(result.value - expected) < 1e-12


def test_exact_ratio_with_overlap(lacunary_service, tridiagonal_symbol):
    N = 16
    spec = lacunary_service.validate_and_normalize(N, lines=[(1, 0)], rows=[(1, 0)])
    result = lacunary_service.exact_ratio(tridiagonal_symbol, spec)
    expected = (1 + A * B) * plain_tridiagonal_det(N - 1) / plain_tridiagonal_det(N)
    assert abs(result.value - expected) < 1e-12


def test_exact_ratio_can_vanish(lacunary_service, tridiagonal_symbol, identity_symbol):
    spec = lacunary_service.validate_and_normalize(10, lines=[(1, -5)])
    assert lacunary_service.exact_ratio(tridiagonal_symbol, spec).is_zero
    assert lacunary_service.exact_ratio(identity_symbol, spec).value == 0


def test_exact_ratio_matches_dense_determinant(lacunary_service, bessel_symbol):
    N = 6
    spec = lacunary_service.validate_and_normalize(N, lines=[(2, -1)], rows=[(6, 8)])
    ell = spec.row_sequence()
    m = spec.column_sequence()
    plain = np.arange(1, N + 1)
    lacunary = np.linalg.det(iv(ell[:, None] - m[None, :], 0.5))
    toeplitz = np.linalg.det(iv(plain[:, None] - plain[None, :], 0.5))
    result = lacunary_service.exact_ratio(bessel_symbol, spec)
    assert result.value == pytest.approx(lacunary / toeplitz, rel=1e-11)


def test_spec_rejects_badly_ordered_overlap():
    with pytest.raises(ValueError):
        LacunarySpec(N=5, lines=((2, 0), (1, -1)), rows=((1, 0),), overlap_c=1)


def test_spec_sequences_and_description():
    spec = LacunarySpec(N=4, lines=((2, 0),), rows=((4, 7),))
    assert spec.row_sequence().tolist() == [1, 0, 3, 4]
    assert spec.column_sequence().tolist() == [1, 2, 3, 7]
    assert spec.describe() == {"N": 4, "h": [2], "p": [0], "t": [4], "k": [7], "overlap_c": 0}


def test_empty_split():
    split = LacunarySplit()
    assert split.is_empty
    assert split.recombine(5) == ([], [])
    assert EdgeSide(lines=((1, 1),)).size == 1


@pytest.mark.parametrize("N", [3, 9])
def test_row_ratio_equals_line_ratio_of_reflected_symbol(lacunary_service, tridiagonal_symbol, N):
    rows_spec = lacunary_service.validate_and_normalize(N, rows=[(1, 0), (N, N + 2)])
    lines_spec = lacunary_service.validate_and_normalize(N, lines=[(1, 0), (N, N + 2)])
    by_rows = lacunary_service.exact_ratio(tridiagonal_symbol, rows_spec)
    by_lines = lacunary_service.exact_ratio(tridiagonal_symbol.reflected(), lines_spec)
    assert by_rows.value == pytest.approx(by_lines.value, abs=1e-13)
