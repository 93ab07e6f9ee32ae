"""
Base de perturbación de rango finito de la matriz N por bloques.

Cada u_{A;a}(z) es una suma de términos weight * g(z) * z^{N/2 - exponent} / 2iπ
con g en {1, f, f - 1}; cada v_{B;b}(z) es un único término sign * z^{exponent - N/2 - 1}.
Las potencias semienteras se cancelan al multiplicar u(s) por v(z).
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

from .lacunary import EdgeSide, LacunarySpec, Pair


class Factor(str, Enum):
    ONE = "1"
    SYMBOL = "f"
    SYMBOL_MINUS_ONE = "f-1"


@dataclass(frozen=True)
class UTerm:
    weight: int
    factor: Factor
    exponent: int


@dataclass(frozen=True)
class VTerm:
    sign: int
    exponent: int


@dataclass(frozen=True)
class PerturbationBasis:
    """
    u_{I;a}, u_{II;a}, v_{I;b}, v_{II;b} para una especificación bien ordenada.

    u_{I;a}  = f s^{N/2-p_a} - (1 si a<=c, f si a>c) s^{N/2-h_a}
    u_{II;a} = (f - 1) s^{N/2-t_a}
    v_{I;b}  = z^{k_b-N/2-1} si b<=c, z^{h_b-N/2-1} si b>c
    v_{II;b} = -z^{t_b-N/2-1} si b<=c, z^{k_b-N/2-1} si b>c
    """

    u_lines: Tuple[Tuple[UTerm, ...], ...]
    u_rows: Tuple[Tuple[UTerm, ...], ...]
    v_lines: Tuple[VTerm, ...]
    v_rows: Tuple[VTerm, ...]
    overlap_c: int

    @classmethod
    def from_spec(cls, spec: LacunarySpec) -> "PerturbationBasis":
        return cls._from_pairs(spec.lines, spec.rows, spec.overlap_c)

    @classmethod
    def from_edge_side(cls, side: EdgeSide) -> "PerturbationBasis":
        """
        Base de un lado anclado escrita como datos del borde menos:
        h = h^±, p = 1 - p^±, t = t^±, k = 1 - k^±.
        """
        lines = tuple((h, 1 - p) for h, p in side.lines)
        rows = tuple((t, 1 - k) for t, k in side.rows)
        return cls._from_pairs(lines, rows, side.overlap_c)

    @classmethod
    def _from_pairs(cls, lines: Tuple[Pair, ...], rows: Tuple[Pair, ...], c: int) -> "PerturbationBasis":
        u_lines = tuple(
            (
                UTerm(1, Factor.SYMBOL, p),
                UTerm(-1, Factor.ONE if a < c else Factor.SYMBOL, h),
            )
            for a, (h, p) in enumerate(lines)
        )
        u_rows = tuple((UTerm(1, Factor.SYMBOL_MINUS_ONE, t),) for t, _ in rows)

        # para b <= c existe la fila b, con t_b = h_b
        v_lines = tuple(
            VTerm(1, rows[b][1]) if b < c else VTerm(1, h)
            for b, (h, _) in enumerate(lines)
        )
        v_rows = tuple(VTerm(-1, t) if b < c else VTerm(1, k) for b, (t, k) in enumerate(rows))
        return cls(u_lines=u_lines, u_rows=u_rows, v_lines=v_lines, v_rows=v_rows, overlap_c=c)

    @property
    def size(self) -> int:
        return len(self.u_lines) + len(self.u_rows)

    def identity_term(self, row_block: str, a: int, col_block: str, b: int) -> int:
        """delta_{A;I} delta_ab delta_{b>c} para columnas I, delta_{A;II} delta_ab delta_{b<=c} para columnas II."""
        if row_block != col_block or a != b:
            return 0
        if col_block == "I":
            return 1 if b >= self.overlap_c else 0
        return 1 if b < self.overlap_c else 0
