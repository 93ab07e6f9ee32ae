"""
Servicio de álgebra lineal compleja densa: matrices de Toeplitz lacunarias,
log-determinantes por LU con pivoteo parcial y estimación de condición.
"""

import math
import warnings
from typing import Sequence, Tuple

import numpy as np
import scipy.linalg
import structlog

from ..entities.matrix import ComplexMatrix, LogDet
from ..entities.symbol import CoefficientTable
from ..exceptions.domain_exceptions import (
    CoefficientRangeTooSmallException,
    ExactlySingularException,
    NonSquareException,
    TooLargeException,
)

logger = structlog.get_logger(__name__)

PIVOT_UNDERFLOW = 1e-300
SMALL_DETERMINANT_LIMIT = 64


def _wrap_phase(phase: float) -> float:
    """Reduce una fase a (-π, π]."""
    wrapped = math.remainder(phase, 2 * math.pi)
    return math.pi if wrapped == -math.pi else wrapped


class LinalgService:
    """Operaciones matriciales puras sobre ComplexMatrix."""

    def build_lacunary_toeplitz(
        self,
        coeffs: CoefficientTable,
        N: int,
        ell: Sequence[int],
        m: Sequence[int],
    ) -> ComplexMatrix:
        """
        Matriz N x N con entrada (a, b) = c_{l_a - m_b}[f].

        Raises:
            CoefficientRangeTooSmallException: Si falta un índice y la cola no está certificada
        """
        ell = np.asarray(ell, dtype=np.int64)
        m = np.asarray(m, dtype=np.int64)
        if ell.size != N or m.size != N:
            raise ValueError(f"Las sucesiones deben tener longitud N={N} ({ell.size}, {m.size})")

        indices = ell[:, None] - m[None, :]
        outside = (indices < coeffs.n_min) | (indices > coeffs.n_max)
        if np.any(outside) and coeffs.tail_bound is None:
            first = int(indices[outside][0])
            raise CoefficientRangeTooSmallException(first, coeffs.n_min, coeffs.n_max)

        return ComplexMatrix(coeffs.lookup(indices))

    def log_determinant(self, matrix: ComplexMatrix) -> LogDet:
        """
        log det por LU con pivoteo parcial: suma de log|pivote| y de sus fases,
        más π por cada intercambio de filas.

        Raises:
            NonSquareException: Si la matriz no es cuadrada
        """
        self._require_square(matrix)
        if matrix.rows == 0:
            return LogDet(log_modulus=0.0, phase=0.0)

        lu, piv = self._lu(matrix)
        pivots = np.diag(lu)
        moduli = np.abs(pivots)
        if np.any(moduli < PIVOT_UNDERFLOW):
            return LogDet.zero()

        swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
        log_modulus = float(np.sum(np.log(moduli)))
        phase = float(np.sum(np.angle(pivots))) + math.pi * (swaps % 2)
        return LogDet(log_modulus=log_modulus, phase=_wrap_phase(phase))

    def determinant_small(self, matrix: ComplexMatrix) -> complex:
        """
        Determinante directo de una matriz pequeña (matrices de corrección).

        Raises:
            NonSquareException: Si la matriz no es cuadrada
            TooLargeException: Si tiene más de 64 filas
        """
        self._require_square(matrix)
        if matrix.rows > SMALL_DETERMINANT_LIMIT:
            raise TooLargeException(matrix.rows, SMALL_DETERMINANT_LIMIT)
        if matrix.rows == 0:
            return 1.0 + 0j

        lu, piv = self._lu(matrix)
        swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
        det = complex(np.prod(np.diag(lu)))
        return -det if swaps % 2 else det

    def condition_estimate(self, matrix: ComplexMatrix) -> float:
        """
        Estimación del número de condición en norma 1: 1 / rcond, con rcond
        calculado por LAPACK (gecon) sobre los factores LU.

        Raises:
            NonSquareException: Si la matriz no es cuadrada
            ExactlySingularException: Si algún pivote es cero
        """
        self._require_square(matrix)
        size = matrix.rows
        if size == 0:
            return 1.0

        factors = self._lu(matrix)
        pivots = np.diag(factors[0])
        zero = np.nonzero(pivots == 0)[0]
        if zero.size:
            raise ExactlySingularException(int(zero[0]))

        norm_a = float(np.max(np.sum(np.abs(matrix.data), axis=0)))
        rcond = self._rcond_from_lu(factors, norm_a)
        return math.inf if rcond == 0 else 1.0 / rcond

    @staticmethod
    def _require_square(matrix: ComplexMatrix) -> None:
        if not matrix.is_square:
            raise NonSquareException(matrix.rows, matrix.cols)

    @staticmethod
    def _lu(matrix: ComplexMatrix) -> Tuple[np.ndarray, np.ndarray]:
        with warnings.catch_warnings():
            # las matrices exactamente singulares son legítimas (determinante cero)
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            warnings.simplefilter("ignore", RuntimeWarning)
            return scipy.linalg.lu_factor(matrix.data, check_finite=False)

    @staticmethod
    def _rcond_from_lu(factors, norm_a: float) -> float:
        lu, _ = factors
        (gecon,) = scipy.linalg.get_lapack_funcs(("gecon",), (lu,))
        rcond, info = gecon(lu, norm_a, norm="1")
        if info < 0:
            raise ValueError(f"gecon: argumento inválido en la posición {-info}")
        return float(rcond)
