"""
DTO de la especificación lacunaria tal como llega de la línea de comandos.

Cada índice es un entero o una expresión relativa al tamaño: "N", "N+1", "N-2".
Las expresiones permiten barrer N con datos anclados al borde N.
"""
import re
from typing import Dict, List, Tuple

from pydantic import BaseModel, field_validator, model_validator

_INDEX_PATTERN = re.compile(r"^(?:-?\d+|N(?:[+-]\d+)?)$")

Pair = Tuple[int, int]


def resolve_index(token: str, N: int) -> int:
    """'N+1' -> N + 1; '-3' -> -3."""
    token = token.strip()
    if not token.startswith("N"):
        return int(token)
    return N + (int(token[1:]) if len(token) > 1 else 0)


class SpecTemplateDTO(BaseModel):
    """Listas h, p (líneas) y t, k (columnas) sin resolver."""

    h: List[str] = []
    p: List[str] = []
    t: List[str] = []
    k: List[str] = []

    @field_validator("h", "p", "t", "k", mode="before")
    @classmethod
    def split_csv(cls, v):
        if v is None:
            return []
        if isinstance(v, str):
            return [item.strip() for item in v.split(",") if item.strip()]
        return [str(item).strip() for item in v]

    @field_validator("h", "p", "t", "k")
    @classmethod
    def validate_tokens(cls, v):
        for token in v:
            if not _INDEX_PATTERN.match(token):
                raise ValueError(f"Índice inválido '{token}': use un entero, N, N+k o N-k")
        return v

    @model_validator(mode="after")
    def validate_lengths(self):
        if len(self.h) != len(self.p):
            raise ValueError(f"--h y --p deben tener la misma longitud ({len(self.h)} != {len(self.p)})")
        if len(self.t) != len(self.k):
            raise ValueError(f"--t y --k deben tener la misma longitud ({len(self.t)} != {len(self.k)})")
        return self

    def resolve(self, N: int) -> Tuple[List[Pair], List[Pair]]:
        lines = [(resolve_index(h, N), resolve_index(p, N)) for h, p in zip(self.h, self.p)]
        rows = [(resolve_index(t, N), resolve_index(k, N)) for t, k in zip(self.t, self.k)]
        return lines, rows

    def describe(self) -> Dict[str, List[str]]:
        return {"h": self.h, "p": self.p, "t": self.t, "k": self.k}
