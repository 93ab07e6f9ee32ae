"""
Entidades de la especificación lacunaria.

Las filas h_a del determinante se sustituyen por p_a (lineas) y las columnas
t_b por k_b (rows), con h_a, t_b en [1, N] y p_a, k_b fuera de [1, N].
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

Pair = Tuple[int, int]


def _overlap_is_well_ordered(h: List[int], t: List[int], c: int) -> bool:
    if c < 0 or c > min(len(h), len(t)):
        return False
    if any(h[a] != t[a] for a in range(c)):
        return False
    return not (set(h[c:]) & set(t[c:]))


@dataclass(frozen=True)
class LacunarySpec:
    """
    Datos lacunarios normalizados (bien ordenados con solapamiento overlap_c):
    h_a = t_a para a <= c y {h_{c+1..n}} ∩ {t_{c+1..r}} = ∅.
    """

    N: int
    lines: Tuple[Pair, ...] = ()
    rows: Tuple[Pair, ...] = ()
    overlap_c: int = 0

    def __post_init__(self):
        object.__setattr__(self, "lines", tuple((int(h), int(p)) for h, p in self.lines))
        object.__setattr__(self, "rows", tuple((int(t), int(k)) for t, k in self.rows))
        if self.N < 1:
            raise ValueError(f"N debe ser positivo, recibido {self.N}")
        if not _overlap_is_well_ordered(self.h, self.t, self.overlap_c):
            raise ValueError(
                f"Los conjuntos h={self.h} y t={self.t} no están bien ordenados "
                f"con solapamiento {self.overlap_c}"
            )

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def h(self) -> List[int]:
        return [h for h, _ in self.lines]

    @property
    def p(self) -> List[int]:
        return [p for _, p in self.lines]

    @property
    def t(self) -> List[int]:
        return [t for t, _ in self.rows]

    @property
    def k(self) -> List[int]:
        return [k for _, k in self.rows]

    @property
    def is_empty(self) -> bool:
        return not self.lines and not self.rows

    def row_sequence(self) -> np.ndarray:
        """Sucesión l_a: l_a = a salvo l_{h_a} = p_a."""
        ell = np.arange(1, self.N + 1, dtype=np.int64)
        for h, p in self.lines:
            ell[h - 1] = p
        return ell

    def column_sequence(self) -> np.ndarray:
        """Sucesión m_b: m_b = b salvo m_{t_b} = k_b."""
        m = np.arange(1, self.N + 1, dtype=np.int64)
        for t, k in self.rows:
            m[t - 1] = k
        return m

    def describe(self) -> dict:
        return {
            "N": self.N,
            "h": self.h,
            "p": self.p,
            "t": self.t,
            "k": self.k,
            "overlap_c": self.overlap_c,
        }


@dataclass(frozen=True)
class EdgeSide:
    """
    Parte anclada a un borde: pares (h^±, p^±) y (t^±, k^±) independientes de N,
    bien ordenados con solapamiento c.
    """

    lines: Tuple[Pair, ...] = ()
    rows: Tuple[Pair, ...] = ()
    overlap_c: int = 0

    def __post_init__(self):
        h = [x for x, _ in self.lines]
        t = [x for x, _ in self.rows]
        if not _overlap_is_well_ordered(h, t, self.overlap_c):
            raise ValueError(f"Lado mal ordenado: h={h}, t={t}, c={self.overlap_c}")

    @property
    def n(self) -> int:
        return len(self.lines)

    @property
    def r(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return self.n + self.r


@dataclass(frozen=True)
class LacunarySplit:
    """
    Parametrización anclada a los bordes:
      lado menos: h_a = h^-,  p_a = 1 - p^-   (y t, k igual)
      lado más:   h = N + 1 - h^+,  p = p^+ + N
    """

    minus: EdgeSide = field(default_factory=EdgeSide)
    plus: EdgeSide = field(default_factory=EdgeSide)

    @property
    def is_empty(self) -> bool:
        return self.minus.size == 0 and self.plus.size == 0

    def recombine(self, N: int) -> Tuple[List[Pair], List[Pair]]:
        """Reconstruye los pares (h, p) y (t, k) para un N dado (orden: menos, luego más)."""
        lines = [(h, 1 - p) for h, p in self.minus.lines]
        lines += [(N + 1 - h, p + N) for h, p in self.plus.lines]
        rows = [(t, 1 - k) for t, k in self.minus.rows]
        rows += [(N + 1 - t, k + N) for t, k in self.plus.rows]
        return lines, rows


@dataclass(frozen=True)
class ExactRatio:
    """Cociente exacto det_N[c_{l_a - m_b}] / det_N[c_{a-b}] calculado por LU."""

    value: complex
    is_zero: bool
    log_ratio: complex
    plain_log_modulus: float
    plain_phase: float
