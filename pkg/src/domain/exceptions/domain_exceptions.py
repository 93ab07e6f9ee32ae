"""
Excepciones del dominio para el proyecto de determinantes de Toeplitz lacunarios.
"""

from typing import Any, Optional


class DomainException(Exception):
    """Excepción base para el dominio."""
    pass


class ValidationException(DomainException):
    """Datos de entrada (símbolo o especificación lacunaria) inválidos."""
    pass


# --- Símbolo ---------------------------------------------------------------

class EmptyCoefficientsException(ValidationException):
    """Se lanza cuando la tabla de coeficientes no tiene entradas."""

    def __init__(self):
        super().__init__("La tabla de coeficientes de ln f está vacía")


class NoDecayException(ValidationException):
    """Los coeficientes de ln f no decaen geométricamente."""

    def __init__(self, side: str, ratio: float):
        self.side = side
        self.ratio = ratio
        super().__init__(
            f"Los coeficientes de ln f no decaen en el lado {side} "
            f"(razón ajustada {ratio:.4g}); ln f no es holomorfa en ninguna corona"
        )


class VanishingSymbolException(ValidationException):
    """El símbolo se anula (o casi) sobre la circunferencia unidad."""

    def __init__(self, min_modulus: float, tol: float):
        self.min_modulus = min_modulus
        self.tol = tol
        super().__init__(
            f"El símbolo se anula sobre |z|=1: min |f| = {min_modulus:.3e} <= {tol:.3e}"
        )


class NonzeroWindingException(ValidationException):
    """El índice de giro del símbolo no es cero."""

    def __init__(self, winding: int):
        self.winding = winding
        super().__init__(f"Índice de giro {winding} distinto de cero: ln f no es univaluada")


class OutsideDomainException(DomainException):
    """Se evalúa una rama de alpha fuera de su dominio de convergencia."""

    def __init__(self, z: complex, bound: float, branch: str):
        self.z = z
        self.bound = bound
        self.branch = branch
        super().__init__(
            f"Punto z={z} fuera del dominio de la rama {branch} (radio límite {bound:.6g})"
        )


# --- Álgebra lineal ----------------------------------------------------------

class LinearAlgebraException(DomainException):
    """Errores de las operaciones matriciales."""
    pass


class NonSquareException(LinearAlgebraException):
    def __init__(self, rows: int, cols: int):
        self.rows = rows
        self.cols = cols
        super().__init__(f"La matriz no es cuadrada: {rows}x{cols}")


class TooLargeException(LinearAlgebraException):
    def __init__(self, rows: int, limit: int):
        self.rows = rows
        self.limit = limit
        super().__init__(f"Matriz de tamaño {rows} supera el límite {limit} para determinante directo")


class ExactlySingularException(LinearAlgebraException):
    def __init__(self, pivot_index: int):
        self.pivot_index = pivot_index
        super().__init__(f"Matriz exactamente singular: pivote nulo en la posición {pivot_index}")


class CoefficientRangeTooSmallException(LinearAlgebraException):
    """Un índice necesario cae fuera de la tabla y la cola no está certificada."""

    def __init__(self, index: int, n_min: int, n_max: int):
        self.index = index
        self.n_min = n_min
        self.n_max = n_max
        super().__init__(
            f"Índice {index} fuera de la tabla de coeficientes [{n_min}, {n_max}] sin cota de cola"
        )


# --- Especificación lacunaria ------------------------------------------------

class OutOfRangeException(ValidationException):
    def __init__(self, field: str, value: int, N: int, reason: str):
        self.field = field
        self.value = value
        self.N = N
        self.reason = reason
        super().__init__(f"Error de validación en '{field}'={value} (N={N}): {reason}")


class DuplicateIndexException(ValidationException):
    def __init__(self, field: str, value: int):
        self.field = field
        self.value = value
        super().__init__(f"Índice repetido en '{field}': {value}")


class MixedAnchorException(ValidationException):
    """Un par (h, p) o (t, k) no está anclado a un único borde."""

    def __init__(self, field: str, position: int, target: int, N: int):
        self.field = field
        self.position = position
        self.target = target
        self.N = N
        super().__init__(
            f"El par {field}=({position}, {target}) mezcla los bordes 1 y N={N}; "
            f"use la matriz general"
        )


class PlainSingularException(DomainException):
    def __init__(self, N: int):
        self.N = N
        super().__init__(f"El determinante de Toeplitz sin perturbar es cero para N={N}")


class MethodNotApplicableException(ValidationException):
    def __init__(self, method: str, reason: str):
        self.method = method
        self.reason = reason
        super().__init__(f"Método {method} no aplicable: {reason}")


# --- Cuadratura y asintótica -------------------------------------------------

class QuadratureException(DomainException):
    """Errores de las integrales de contorno."""
    pass


class EqualRadiiException(QuadratureException):
    def __init__(self, radius: float):
        self.radius = radius
        super().__init__(f"Los radios de z y s coinciden ({radius}); 1/(z-s) sería singular")


class CoincidentPointsException(QuadratureException):
    def __init__(self, z: complex, s: complex):
        self.z = z
        self.s = s
        super().__init__(f"Puntos coincidentes z={z}, s={s} en el núcleo resolvente")


class RadiiOutsideAnnulusException(QuadratureException):
    def __init__(self, radius: float, annulus: tuple):
        self.radius = radius
        self.annulus = annulus
        super().__init__(f"Radio de contorno {radius:.6g} fuera de la corona de analiticidad {annulus}")


class NoConvergenceException(QuadratureException):
    """La cuadratura no alcanzó la tolerancia (se informa, no es fatal)."""

    def __init__(self, nodes: int, change: float, tol: float, entry: Optional[Any] = None):
        self.nodes = nodes
        self.change = change
        self.tol = tol
        self.entry = entry
        message = f"Sin convergencia con {nodes} nodos: cambio relativo {change:.3e} > {tol:.3e}"
        if entry is not None:
            message += f" - entrada {entry}"
        super().__init__(message)


# --- Repositorio -------------------------------------------------------------

class SymbolRepositoryException(DomainException):
    """Se lanza cuando no se puede leer el archivo del símbolo."""
    pass
