from fractions import Fraction
from typing import Optional

import click

from cli.options import (
    command_handler,
    emit,
    eps_option,
    format_option,
    function_option,
    load_function,
    load_space,
    load_system,
    oracle_option,
    space_option,
    system_option,
)
from constants.services import differentiability as differentiability_constants
from services import certificate_service, differentiability_service, report_service
from services import oracles

differentiability_commands = click.Group(name="differentiability")

@differentiability_commands.command(name="decide")
@space_option
@system_option
@oracle_option
@format_option
@command_handler
def decide(space_path: str, system_path: str, oracle: bool, output_format: str) -> int:
    """
    Decide Frechet differentiability of the norm at a normalized molecule
    combination, with the norming function and coverage map or the failure.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    verdict = differentiability_service.decide(space, system)
    certificate_service.verify_verdict(space, system, verdict)
    agreement: Optional[str] = None
    if oracle:
        agreement = oracles.cross_check_verdict(space, system, verdict)
    return emit(
        report_service.decide_response(space, system, verdict, agreement),
        output_format,
        positive=verdict.kind == differentiability_constants.VERDICT_FRECHET,
    )

@differentiability_commands.command(name="gateaux-eps")
@space_option
@system_option
@eps_option
@format_option
@command_handler
def gateaux_eps(space_path: str, system_path: str, eps: Fraction, output_format: str) -> int:
    """
    List the pairs and points failing the eps-rigidity and eps-coverage conditions.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    report = differentiability_service.check_gateaux_eps(space, system, eps)
    return emit(
        report_service.gateaux_eps_response(space, report),
        output_format,
        positive=not report.cond_i and not report.cond_ii,
    )

@differentiability_commands.command(name="coverage-prefix")
@space_option
@system_option
@eps_option
@format_option
@command_handler
def coverage_prefix(space_path: str, system_path: str, eps: Fraction, output_format: str) -> int:
    """
    Find the shortest prefix of the pair list that eps-covers the space.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    prefix = differentiability_service.coverage_eps_prefix(space, system, eps)
    return emit(report_service.coverage_prefix_response(system, eps, prefix), output_format, positive=prefix is not None)

@differentiability_commands.command(name="l1-check")
@space_option
@system_option
@format_option
@command_handler
def l1_check(space_path: str, system_path: str, output_format: str) -> int:
    """
    Decide whether every orientation of the molecules is cyclically monotone,
    i.e. whether they span an isometric copy of the l1 basis.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    verdict = differentiability_service.l1_basis_check(space, system)
    certificate_service.verify_l1(space, system, verdict)
    return emit(report_service.l1_response(space, system, verdict), output_format, positive=verdict.isometric_l1)

@differentiability_commands.command(name="stability")
@space_option
@system_option
@function_option
@eps_option
@format_option
@command_handler
def stability(space_path: str, system_path: str, function_path: str, eps: Fraction, output_format: str) -> int:
    """
    Check that a nearly norming 1-Lipschitz function stays within K * eps of
    the norming function at a Frechet point.
    """
    space = load_space(space_path)
    system = load_system(space, system_path)
    g = load_function(space, function_path)
    check = differentiability_service.stability_report(space, system, g, eps)
    return emit(report_service.stability_response(check), output_format, positive=check.holds)
