from typing import Optional

import click

from cli.options import (
    command_handler,
    element_option,
    emit,
    format_option,
    load_element,
    load_space,
    load_system,
    oracle_option,
    space_option,
    system_option,
)
from constants import general as general_constants
from core.exceptions import CertificateMismatchError
from services import (
    certificate_service,
    molecule_system_service,
    potential_engine_service,
    report_service,
    transport_norm_service,
)
from services import oracles

transport_commands = click.Group(name="transport")

@transport_commands.command(name="norm")
@space_option
@element_option
@oracle_option
@format_option
@command_handler
def norm(space_path: str, element_path: str, oracle: bool, output_format: str) -> int:
    """
    Compute the free-space norm of an element with its plan and dual certificates.
    """
    space = load_space(space_path)
    element = load_element(space, element_path)
    certificate = transport_norm_service.free_norm(space, element)
    certificate_service.verify_transport(space, element, certificate)
    agreement: Optional[str] = None
    if oracle:
        agreement = oracles.cross_check_norm(space, element, certificate.value)
    return emit(report_service.transport_response(space, certificate, agreement), output_format)

@transport_commands.command(name="attains")
@space_option
@system_option
@oracle_option
@format_option
@command_handler
def attains(space_path: str, system_path: str, oracle: bool, output_format: str) -> int:
    """
    Decide whether a molecule family attains its norm; a failure carries the
    violated cycle inequality.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    element = molecule_system_service.to_point_masses(space, system)
    certificate = transport_norm_service.free_norm(space, element)
    certificate_service.verify_transport(space, element, certificate)
    verdict = potential_engine_service.check_cyclical_monotonicity(space, system)
    attained = certificate.value == system.total_weight
    if attained != verdict.holds:
        raise CertificateMismatchError(
            f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} norm {certificate.value} "
            f"against total weight {system.total_weight}, cyclically monotone {verdict.holds}"
        )
    if verdict.witness is not None:
        certificate_service.verify_witness(space, system.pairs, verdict.witness)
    agreement: Optional[str] = None
    if oracle:
        agreement = oracles.cross_check_attains(space, system, attained)
    response = report_service.attains_response(space, system, certificate.value, verdict.witness, agreement)
    return emit(response, output_format, positive=attained)

@transport_commands.command(name="decompose")
@space_option
@element_option
@format_option
@command_handler
def decompose(space_path: str, element_path: str, output_format: str) -> int:
    """
    Write an element as a norm-attaining molecule family read off the optimal plan.
    """
    space = load_space(space_path)
    element = load_element(space, element_path)
    system = transport_norm_service.decompose_to_molecules(space, element)
    value = transport_norm_service.free_norm(space, element).value
    verdict = potential_engine_service.check_cyclical_monotonicity(space, system)
    if system.total_weight != value or not verdict.holds:
        raise CertificateMismatchError(
            f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} decomposition weight {system.total_weight} "
            f"against norm {value}"
        )
    return emit(report_service.decompose_response(space, system, value), output_format)
