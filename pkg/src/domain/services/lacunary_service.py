"""
Servicio de dominio para especificaciones lacunarias.
Valida y normaliza los datos (h, p), (t, k), los parte en piezas ancladas a los
bordes y calcula el cociente exacto de determinantes que sirve de oráculo.
"""

import cmath
from typing import Iterable, List, Sequence, Tuple

import numpy as np
import structlog

from ..entities.lacunary import EdgeSide, ExactRatio, LacunarySpec, LacunarySplit, Pair
from ..entities.symbol import Symbol
from ..exceptions.domain_exceptions import (
    DuplicateIndexException,
    MixedAnchorException,
    OutOfRangeException,
    PlainSingularException,
)
from .linalg_service import LinalgService
from .symbol_service import SymbolService

logger = structlog.get_logger(__name__)


def _well_ordered(lines: List[Pair], rows: List[Pair]) -> Tuple[List[Pair], List[Pair], int]:
    """Pone primero, en el mismo orden, los pares cuyo h coincide con algún t."""
    row_by_t = {t: (t, k) for t, k in rows}
    common = sorted(h for h, _ in lines if h in row_by_t)
    line_by_h = {h: (h, p) for h, p in lines}
    ordered_lines = [line_by_h[h] for h in common]
    ordered_lines += sorted(pair for pair in lines if pair[0] not in row_by_t)
    ordered_rows = [row_by_t[h] for h in common]
    ordered_rows += sorted(pair for pair in rows if pair[0] not in line_by_h)
    return ordered_lines, ordered_rows, len(common)


class LacunaryService:
    """
    Servicio de dominio que encapsula las reglas de las especificaciones lacunarias.
    """

    def __init__(self, symbol_service: SymbolService, linalg_service: LinalgService):
        self._symbol_service = symbol_service
        self._linalg = linalg_service

    def validate_and_normalize(
        self,
        N: int,
        lines: Iterable[Sequence[int]] = (),
        rows: Iterable[Sequence[int]] = (),
    ) -> LacunarySpec:
        """
        Valida rangos y distinción de índices y reordena conjuntamente los pares
        para que h y t estén bien ordenados con solapamiento c.

        Args:
            N: Tamaño de la matriz
            lines: Pares (h_a, p_a)
            rows: Pares (t_b, k_b)

        Returns:
            LacunarySpec normalizada

        Raises:
            OutOfRangeException: Si h o t caen fuera de [1, N], o p o k dentro
            DuplicateIndexException: Si se repite algún h, p, t o k
        """
        if N < 1:
            raise OutOfRangeException("N", N, N, "N debe ser positivo")
        lines = [(int(h), int(p)) for h, p in lines]
        rows = [(int(t), int(k)) for t, k in rows]

        self._validate_pairs(N, lines, ("h", "p"))
        self._validate_pairs(N, rows, ("t", "k"))

        ordered_lines, ordered_rows, overlap = _well_ordered(lines, rows)
        return LacunarySpec(N=N, lines=tuple(ordered_lines), rows=tuple(ordered_rows), overlap_c=overlap)

    def split_edge_anchored(self, spec: LacunarySpec) -> LacunarySplit:
        """
        Expresa los datos como desplazamientos desde los bordes 1 y N.

        Raises:
            MixedAnchorException: Si algún par mezcla los dos bordes
        """
        N = spec.N
        minus_lines, plus_lines = self._split_pairs(N, spec.lines, "(h, p)")
        minus_rows, plus_rows = self._split_pairs(N, spec.rows, "(t, k)")

        minus_l, minus_r, minus_c = _well_ordered(minus_lines, minus_rows)
        plus_l, plus_r, plus_c = _well_ordered(plus_lines, plus_rows)
        return LacunarySplit(
            minus=EdgeSide(lines=tuple(minus_l), rows=tuple(minus_r), overlap_c=minus_c),
            plus=EdgeSide(lines=tuple(plus_l), rows=tuple(plus_r), overlap_c=plus_c),
        )

    def exact_ratio(self, symbol: Symbol, spec: LacunarySpec) -> ExactRatio:
        """
        Cociente exacto det_N[c_{l_a - m_b}[f]] / det_N[c_{a-b}[f]] por LU densa.

        Raises:
            PlainSingularException: Si el determinante sin perturbar es cero
        """
        N = spec.N
        ell = spec.row_sequence()
        m = spec.column_sequence()
        plain = np.arange(1, N + 1, dtype=np.int64)

        lowest = min(int(ell.min()) - int(m.max()), 1 - N)
        highest = max(int(ell.max()) - int(m.min()), N - 1)
        coeffs = self._symbol_service.fourier_coefficients(symbol, lowest, highest)

        plain_logdet = self._linalg.log_determinant(self._linalg.build_lacunary_toeplitz(coeffs, N, plain, plain))
        if plain_logdet.is_zero:
            raise PlainSingularException(N)

        if spec.is_empty:
            return ExactRatio(1.0 + 0j, False, 0j, plain_logdet.log_modulus, plain_logdet.phase)

        lacunary_logdet = self._linalg.log_determinant(self._linalg.build_lacunary_toeplitz(coeffs, N, ell, m))
        if lacunary_logdet.is_zero:
            logger.debug("cociente_exacto_nulo", N=N)
            return ExactRatio(0j, True, complex(-np.inf, 0.0), plain_logdet.log_modulus, plain_logdet.phase)

        log_ratio = lacunary_logdet - plain_logdet
        return ExactRatio(cmath.exp(log_ratio), False, log_ratio, plain_logdet.log_modulus, plain_logdet.phase)

    @staticmethod
    def _validate_pairs(N: int, pairs: List[Pair], names: Tuple[str, str]) -> None:
        position_name, target_name = names
        for position, target in pairs:
            if not 1 <= position <= N:
                raise OutOfRangeException(position_name, position, N, f"{position_name} debe estar en [1, N]")
            if 1 <= target <= N:
                raise OutOfRangeException(target_name, target, N, f"{target_name} no puede estar en [1, N]")
        for index, name in ((0, position_name), (1, target_name)):
            seen = set()
            for pair in pairs:
                if pair[index] in seen:
                    raise DuplicateIndexException(name, pair[index])
                seen.add(pair[index])

    @staticmethod
    def _split_pairs(N: int, pairs: Sequence[Pair], label: str) -> Tuple[List[Pair], List[Pair]]:
        minus, plus = [], []
        for position, target in pairs:
            lower_half = 2 * position <= N + 1
            if target <= 0 and lower_half:
                minus.append((position, 1 - target))
            elif target >= N + 1 and not lower_half:
                plus.append((N + 1 - position, target - N))
            else:
                raise MixedAnchorException(label, position, target, N)
        return minus, plus
