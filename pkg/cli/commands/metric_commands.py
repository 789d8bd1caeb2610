from typing import Optional

import click
from pydantic import ValidationError

from cli.options import command_handler, emit, format_option, space_option
from constants import general as general_constants
from constants.services import generators as generator_constants
from core.exceptions import InvalidArgumentError
from repositories import space_documents
from schemas import GeneratorSpec
from services import document_service, generators_service, report_service

metric_commands = click.Group(name="metric")

@metric_commands.command(name="validate")
@space_option
@format_option
@command_handler
def validate(space_path: str, output_format: str) -> int:
    """
    Check the metric axioms of a space document.
    """
    document = space_documents.load(space_path)
    report = document_service.validate_document(document)
    return emit(report_service.validation_response(document.labels, report), output_format, positive=report.ok)

@metric_commands.command(name="gen")
@click.option(
    "--kind",
    required=True,
    type=click.Choice([
        generator_constants.GENERATOR_STAR,
        generator_constants.GENERATOR_C0_TRUNCATION,
        generator_constants.GENERATOR_LINE,
        generator_constants.GENERATOR_RANDOM,
    ]),
)
@click.option("--size", required=True, type=int)
@click.option("--seed", type=int, default=None)
@click.option(
    "--profile",
    type=click.Choice([generator_constants.PROFILE_GENERIC, generator_constants.PROFILE_NEAR_DEGENERATE]),
    default=generator_constants.PROFILE_GENERIC,
    show_default=True,
)
@command_handler
def gen(kind: str, size: int, seed: Optional[int], profile: str) -> int:
    """
    Emit a generated space document.
    """
    try:
        spec = GeneratorSpec(kind=kind, size=size, seed=seed, profile=profile)
    except ValidationError as e:
        raise InvalidArgumentError(f"gen: {e.errors()[0]['msg']}", context=e.errors()) from e
    space = generators_service.generate(spec)
    click.echo(space_documents.dumps(document_service.space_to_document(space)), nl=False)
    return general_constants.EXIT_CODE_SUCCESS
