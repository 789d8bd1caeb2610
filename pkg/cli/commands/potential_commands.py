from typing import Optional

import click

from cli.options import (
    command_handler,
    emit,
    format_option,
    load_space,
    load_system,
    oracle_option,
    space_option,
    system_option,
)
from constants import general as general_constants
from core.exceptions import CertificateMismatchError, InvalidArgumentError
from schemas import NegativeCycleWitness
from services import (
    certificate_service,
    molecule_system_service,
    norming_builder_service,
    potential_engine_service,
    report_service,
)
from services import oracles

potential_commands = click.Group(name="potentials")

@potential_commands.command(name="potentials")
@space_option
@system_option
@click.option("--anchor", type=int, default=1, show_default=True, help="1-based pair whose potential is 0.")
@oracle_option
@format_option
@command_handler
def potentials(space_path: str, system_path: str, anchor: int, oracle: bool, output_format: str) -> int:
    """
    Solve the potential constraints of a molecule family: the shortest-path
    closure, anchored potentials and rigid pairs, or a negative cycle.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    if not 1 <= anchor <= max(len(system.pairs), 1):
        raise InvalidArgumentError(f"{general_constants.DETAIL_INDEX_OUT_OF_RANGE} Anchor: {anchor}")
    result = potential_engine_service.closure(molecule_system_service.beta_matrix(space, system), anchor - 1)
    if isinstance(result, NegativeCycleWitness):
        certificate_service.verify_witness(space, system.pairs, result)
    else:
        certificate_service.verify_table(space, system, result)
    agreement: Optional[str] = None
    if oracle:
        agreement = oracles.cross_check_closure(space, system, result)
    response = report_service.potentials_response(space, system, result, agreement)
    return emit(response, output_format, positive=response.holds)

@potential_commands.command(name="norming")
@space_option
@system_option
@format_option
@command_handler
def norming(space_path: str, system_path: str, output_format: str) -> int:
    """
    Construct a norming 1-Lipschitz function vanishing at the base.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    result = norming_builder_service.norming_function(space, system)
    if isinstance(result, NegativeCycleWitness):
        certificate_service.verify_witness(space, system.pairs, result)
        return emit(report_service.norming_response(space, system, result, False), output_format, positive=False)
    verified = norming_builder_service.verify_norming(space, system, result)
    if not verified or result.values[space.base] != 0:
        raise CertificateMismatchError(f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} norming function")
    return emit(report_service.norming_response(space, system, result, verified), output_format)
