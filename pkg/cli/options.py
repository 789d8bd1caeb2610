import functools
import traceback
from fractions import Fraction
from typing import Any, Callable, Optional

import click
from pydantic import BaseModel

from constants import general as general_constants
from constants.controller import cli as cli_constants
from core.exceptions import LipfreeException, ParseError
from core.logger import logger
from core.utilities import new_request_id, parse_rational
from repositories import (
    dumps_canonical,
    element_documents,
    function_documents,
    space_documents,
    system_documents,
)
from schemas import (
    ErrorResponse,
    FiniteMetricSpace,
    LipschitzFunction,
    MoleculeSystem,
    PointMassElement,
    RunConfig,
)
from services import document_service, report_service


class RationalParamType(click.ParamType):
    """Click parameter accepting integers and "p/q" rationals"""
    name = "rational"

    def convert(self, value: Any, param: Optional[click.Parameter], ctx: Optional[click.Context]) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return parse_rational(value)
        except ParseError as e:
            self.fail(e.detail, param, ctx)


RATIONAL = RationalParamType()

space_option = click.option(
    "--space", "space_path", required=True, type=click.Path(dir_okay=False), help="Space document (JSON)."
)
system_option = click.option(
    "--system", "system_path", required=True, type=click.Path(dir_okay=False), help="Molecule system document (JSON)."
)
element_option = click.option(
    "--element", "element_path", required=True, type=click.Path(dir_okay=False), help="Element document (JSON)."
)
function_option = click.option(
    "--function", "function_path", required=True, type=click.Path(dir_okay=False), help="Function document (JSON)."
)
eps_option = click.option("--eps", required=True, type=RATIONAL, help="Positive rational, e.g. 1/8.")
oracle_option = click.option(
    "--oracle", is_flag=True, default=False, help="Cross-check against the brute-force oracle."
)
format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice([cli_constants.OUTPUT_FORMAT_JSON, cli_constants.OUTPUT_FORMAT_TEXT]),
    default=cli_constants.OUTPUT_FORMAT_JSON,
    show_default=True,
)


def load_space(space_path: str) -> FiniteMetricSpace:
    return document_service.resolve_space(space_documents.load(space_path))

def load_system(space: FiniteMetricSpace, system_path: str) -> MoleculeSystem:
    return document_service.resolve_system(space, system_documents.load(system_path))

def load_element(space: FiniteMetricSpace, element_path: str) -> PointMassElement:
    return document_service.resolve_element(space, element_documents.load(element_path))

def load_function(space: FiniteMetricSpace, function_path: str) -> LipschitzFunction:
    return document_service.resolve_function(space, function_documents.load(function_path))

def emit(response: BaseModel, output_format: str, positive: bool = True) -> int:
    """
    Function to print a report on standard output
    :param response:
    :param output_format:
    :param positive: False for a negative verdict
    :return: the exit code
    """
    click.echo(report_service.render(response, output_format), nl=False)
    return general_constants.EXIT_CODE_SUCCESS if positive else general_constants.EXIT_CODE_NEGATIVE_VERDICT

def emit_error(kind: str, detail: str) -> None:
    click.echo(dumps_canonical(ErrorResponse(error=kind, detail=detail).model_dump()), nl=False, err=True)

def command_handler(func: Callable[..., int]) -> Callable[..., None]:
    """
    Decorator turning a command's returned exit code and raised errors into
    the process exit code; errors are printed as JSON on standard error
    :param func:
    :return:
    """
    @functools.wraps(func)
    @click.pass_context
    def wrapper(ctx: click.Context, *args: Any, **kwargs: Any) -> None:
        try:
            run_config = RunConfig(command=ctx.info_name, **kwargs)
            logger.debug(f"{func.__name__}: {run_config.model_dump(exclude_none=True)}")
            code = func(*args, **kwargs)
        except LipfreeException as e:
            logger.info(f"{func.__name__}: {e.kind} {e.detail}")
            emit_error(e.kind, e.detail)
            code = e.exit_code
        except Exception:
            req_id = new_request_id()
            logger.error(f"{func.__name__}: {req_id} {traceback.format_exc()}")
            emit_error(
                general_constants.ERROR_KIND_INTERNAL_CONSISTENCY,
                f"{general_constants.DETAIL_UNEXPECTED_ERROR} ({req_id})",
            )
            code = general_constants.EXIT_CODE_CERTIFICATE_MISMATCH
        ctx.exit(code)
    return wrapper
