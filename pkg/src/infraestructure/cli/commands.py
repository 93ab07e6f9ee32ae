"""
Controlador de línea de comandos: subcomandos coeffs, factorize, ratio y sweep.

Códigos de salida:
    0  éxito
    1  error de lectura o escritura de archivos
    2  símbolo, especificación o configuración inválidos
    3  alguna cuadratura no alcanzó la tolerancia (la salida se escribe igualmente)
"""
import argparse
import sys
from contextlib import contextmanager
from typing import IO, Iterator, List, Optional, Sequence

import structlog
from pydantic import ValidationError

from src.applicattion.dto.spec_template_dto import SpecTemplateDTO
from src.domain.entities.correction import RatioMethod
from src.domain.exceptions.domain_exceptions import DomainException, SymbolRepositoryException
from src.infraestructure.cli.dependencies import Container
from src.infraestructure.cli.report_writer import write_coefficients, write_json, write_sweep
from src.infraestructure.config import Settings, get_settings

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_NOT_CONVERGED = 3


def _int_list(value: str) -> List[int]:
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Lista de enteros inválida: '{value}'")


def build_parser(prog: str = "lactoep") -> argparse.ArgumentParser:
    symbol = argparse.ArgumentParser(add_help=False)
    symbol.add_argument("symbol_file", help="Archivo JSON del símbolo")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", default=None, help="Archivo de salida (por defecto stdout)")

    spec = argparse.ArgumentParser(add_help=False)
    for flag, help_text in (
        ("--h", "Filas sustituidas (h_a), separadas por comas; admite N, N+k, N-k"),
        ("--p", "Índices p_a que las sustituyen"),
        ("--t", "Columnas sustituidas (t_b)"),
        ("--k", "Índices k_b que las sustituyen"),
    ):
        spec.add_argument(flag, default="", help=help_text)
    spec.add_argument("--method", default=RatioMethod.AUTO.value, choices=[m.value for m in RatioMethod])
    spec.add_argument("--eta-z", type=float, default=None)
    spec.add_argument("--eta-s", type=float, default=None)
    spec.add_argument("--quad-nodes", type=int, default=None)
    spec.add_argument("--quad-tol", type=float, default=None)

    parser = argparse.ArgumentParser(prog=prog, description="Determinantes de Toeplitz lacunarios")
    subparsers = parser.add_subparsers(dest="command", required=True)

    coeffs = subparsers.add_parser("coeffs", parents=[symbol, output], help="Coeficientes de Fourier c_n[f]")
    coeffs.add_argument("--n-min", type=int, required=True)
    coeffs.add_argument("--n-max", type=int, required=True)
    coeffs.add_argument("--format", choices=["csv", "json"], default="csv")

    factorize = subparsers.add_parser("factorize", parents=[symbol, output], help="Factorización de Wiener-Hopf")
    factorize.add_argument("--grid", type=int, default=256)

    ratio = subparsers.add_parser("ratio", parents=[symbol, spec, output], help="Cociente exacto y asintótico")
    ratio.add_argument("--N", type=int, required=True, dest="N")

    sweep = subparsers.add_parser("sweep", parents=[symbol, spec, output], help="Barrido de convergencia en N")
    sweep.add_argument("--N-list", type=_int_list, required=True, dest="n_list")
    sweep.add_argument("--format", choices=["csv", "json"], default="csv")

    return parser


@contextmanager
def _output(path: Optional[str], stdout: IO[str]) -> Iterator[IO[str]]:
    if path is None:
        yield stdout
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle
    except OSError as e:
        raise SymbolRepositoryException(f"No se pudo escribir {path}: {e.strerror or e}")


def _template(args: argparse.Namespace) -> SpecTemplateDTO:
    return SpecTemplateDTO(h=args.h, p=args.p, t=args.t, k=args.k)


def _quadrature(container: Container, args: argparse.Namespace):
    return container.quadrature_config(
        eta_z=args.eta_z,
        eta_s=args.eta_s,
        nodes=args.quad_nodes,
        tol=args.quad_tol,
    )


def cmd_coeffs(container: Container, args: argparse.Namespace, stdout: IO[str]) -> int:
    table = container.calcular_coeficientes().execute(args.symbol_file, args.n_min, args.n_max)
    with _output(args.out, stdout) as stream:
        write_coefficients(table, args.format, stream)
    return EXIT_OK


def cmd_factorize(container: Container, args: argparse.Namespace, stdout: IO[str]) -> int:
    report = container.factorizar_simbolo().execute(args.symbol_file, grid=args.grid)
    with _output(args.out, stdout) as stream:
        write_json(report, stream)
    return EXIT_OK


def cmd_ratio(container: Container, args: argparse.Namespace, stdout: IO[str]) -> int:
    result = container.calcular_ratio().execute(
        args.symbol_file,
        args.N,
        _template(args),
        RatioMethod(args.method),
        _quadrature(container, args),
    )
    with _output(args.out, stdout) as stream:
        write_json(result, stream)
    return EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def cmd_sweep(container: Container, args: argparse.Namespace, stdout: IO[str]) -> int:
    report = container.barrido_convergencia().execute(
        args.symbol_file,
        args.n_list,
        _template(args),
        RatioMethod(args.method),
        _quadrature(container, args),
    )
    with _output(args.out, stdout) as stream:
        write_sweep(report, args.format, stream)
    # un error que se estanca no es falta de convergencia; solo cuenta la cuadratura
    return EXIT_OK if all(row.converged for row in report.rows) else EXIT_NOT_CONVERGED


COMMANDS = {
    "coeffs": cmd_coeffs,
    "factorize": cmd_factorize,
    "ratio": cmd_ratio,
    "sweep": cmd_sweep,
}


def run(
    argv: Optional[Sequence[str]] = None,
    settings: Optional[Settings] = None,
    stdout: Optional[IO[str]] = None,
    stderr: Optional[IO[str]] = None,
) -> int:
    """Ejecuta un subcomando y devuelve el código de salida."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    container = Container(settings or get_settings())

    try:
        return COMMANDS[args.command](container, args, stdout)
    except SymbolRepositoryException as e:
        logger.error("error_de_archivo", command=args.command, error=str(e))
        stderr.write(f"error: {e}\n")
        return EXIT_IO
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        stderr.write(f"error: {messages}\n")
        return EXIT_INVALID
    except (DomainException, ValueError) as e:
        logger.error("error_de_validacion", command=args.command, error=str(e))
        stderr.write(f"error: {e}\n")
        return EXIT_INVALID
