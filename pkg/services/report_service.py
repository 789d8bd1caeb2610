from fractions import Fraction
import io
from typing import Any, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from constants.controller import cli as cli_constants
from core.utilities import render_rational
from repositories import dumps_canonical
from schemas import (
    AttainsResponse,
    CoveragePrefixResponse,
    DecideResponse,
    DecomposeResponse,
    DiffVerdict,
    FailureResponse,
    FiniteMetricSpace,
    GateauxEpsReport,
    GateauxEpsResponse,
    L1BasisVerdict,
    L1CheckResponse,
    LipschitzFunction,
    LipschitzFunctionResponse,
    MoleculeSystem,
    NegativeCycleResponse,
    NegativeCycleWitness,
    NonUniqueOnNFailure,
    NormingResponse,
    NotAttainingFailure,
    PotentialTable,
    PotentialsResponse,
    StabilityCheck,
    StabilityResponse,
    TransportCertificate,
    TransportResponse,
    UncoveredFailure,
    UncoveredPointResponse,
    ValidationReport,
    ValidationResponse,
    ViolationResponse,
)
from services import document_service, differentiability_service

TEXT_REPORT_WIDTH = 120


def _pair_number(pair: Tuple[int, int]) -> Tuple[int, int]:
    return pair[0] + 1, pair[1] + 1

def _d(space: FiniteMetricSpace, p: int, q: int) -> str:
    return f"d({space.labels[p]},{space.labels[q]})"

def witness_response(
    space: FiniteMetricSpace,
    pairs: Sequence[Tuple[int, int]],
    witness: NegativeCycleWitness,
) -> NegativeCycleResponse:
    """
    Function to render a negative cycle with the violated inequality
    d(x_i1, y_i1) + ... = aligned > d(x_i1, y_i2) + ... = cross
    :param space:
    :param pairs:
    :param witness:
    :return:
    """
    cycle = witness.cycle
    following = [cycle[(r + 1) % len(cycle)] for r in range(len(cycle))]
    aligned_terms = [_d(space, pairs[i][0], pairs[i][1]) for i in cycle]
    cross_terms = [_d(space, pairs[i][0], pairs[j][1]) for i, j in zip(cycle, following)]
    aligned = sum((space.dist[pairs[i][0]][pairs[i][1]] for i in cycle), Fraction(0))
    cross = sum((space.dist[pairs[i][0]][pairs[j][1]] for i, j in zip(cycle, following)), Fraction(0))
    inequality = (
        f"{' + '.join(aligned_terms)} = {render_rational(aligned)} > "
        f"{' + '.join(cross_terms)} = {render_rational(cross)}"
    )
    return NegativeCycleResponse(
        cycle=[i + 1 for i in cycle],
        cycle_sum=witness.cycle_sum,
        inequality=inequality,
    )

def validation_response(labels: Sequence[str], report: ValidationReport) -> ValidationResponse:
    return ValidationResponse(
        ok=report.ok,
        points=len(labels),
        violations=[
            ViolationResponse(kind=violation.kind, labels=[labels[i] for i in violation.indices])
            for violation in report.violations
        ],
        truncated=report.truncated,
        theta=report.theta,
        diameter=report.diameter,
    )

def function_response(space: FiniteMetricSpace, f: LipschitzFunction) -> LipschitzFunctionResponse:
    return LipschitzFunctionResponse(
        values={label: value for label, value in zip(space.labels, f.values)},
        lip=f.lip_constant,
        base_pinned=f.base_pinned,
    )

def transport_response(
    space: FiniteMetricSpace,
    certificate: TransportCertificate,
    oracle: Optional[str] = None,
) -> TransportResponse:
    return TransportResponse(
        value=certificate.value,
        plan=[
            (space.labels[leg.source], space.labels[leg.sink], leg.mass)
            for leg in certificate.plan
        ],
        dual=function_response(space, certificate.dual),
        oracle=oracle,
    )

def attains_response(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    norm: Fraction,
    witness: Optional[NegativeCycleWitness],
    oracle: Optional[str] = None,
) -> AttainsResponse:
    return AttainsResponse(
        attains=witness is None,
        total_weight=system.total_weight,
        norm=norm,
        witness=witness_response(space, system.pairs, witness) if witness else None,
        oracle=oracle,
    )

def decompose_response(space: FiniteMetricSpace, system: MoleculeSystem, norm: Fraction) -> DecomposeResponse:
    document = document_service.system_to_document(space, system)
    return DecomposeResponse(
        pairs=document.pairs,
        weights=document.weights,
        total_weight=system.total_weight,
        norm=norm,
    )

def potentials_response(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    result: Any,
    oracle: Optional[str] = None,
) -> PotentialsResponse:
    if isinstance(result, NegativeCycleWitness):
        return PotentialsResponse(
            holds=False,
            witness=witness_response(space, system.pairs, result),
            oracle=oracle,
        )
    table: PotentialTable = result
    return PotentialsResponse(
        holds=True,
        closure=[list(row) for row in table.closure],
        alphas=list(table.alphas),
        anchor=table.anchor + 1,
        globally_unique=table.globally_unique,
        rigid_pairs=[_pair_number(pair) for pair in table.rigid_pairs],
        oracle=oracle,
    )

def norming_response(space: FiniteMetricSpace, system: MoleculeSystem, result: Any, verified: bool) -> NormingResponse:
    if isinstance(result, NegativeCycleWitness):
        return NormingResponse(witness=witness_response(space, system.pairs, result))
    return NormingResponse(norming=function_response(space, result), verified=verified)

def _failure_response(space: FiniteMetricSpace, system: MoleculeSystem, failure: Any) -> FailureResponse:
    if isinstance(failure, NotAttainingFailure):
        return FailureResponse(kind=failure.kind, witness=witness_response(space, system.pairs, failure.witness))
    if isinstance(failure, NonUniqueOnNFailure):
        return FailureResponse(
            kind=failure.kind,
            pair=_pair_number(failure.pair),
            rigidity_gap=failure.rigidity_gap,
        )
    uncovered: UncoveredFailure = failure
    return FailureResponse(
        kind=uncovered.kind,
        point=space.labels[uncovered.point],
        upper_value=uncovered.upper_value,
        lower_value=uncovered.lower_value,
    )

def decide_response(
    space: FiniteMetricSpace,
    system: MoleculeSystem,
    verdict: DiffVerdict,
    oracle: Optional[str] = None,
) -> DecideResponse:
    coverage = None
    if verdict.coverage is not None:
        coverage = {
            space.labels[point]: document_service.label_pair(space, pair)
            for point, pair in verdict.coverage.items()
        }
    return DecideResponse(
        kind=verdict.kind,
        norming=function_response(space, verdict.norming) if verdict.norming else None,
        failure=_failure_response(space, system, verdict.failure) if verdict.failure else None,
        coverage=coverage,
        oracle=oracle,
    )

def gateaux_eps_response(space: FiniteMetricSpace, report: GateauxEpsReport) -> GateauxEpsResponse:
    return GateauxEpsResponse(
        eps=report.eps,
        cond_i=[_pair_number(pair) for pair in report.cond_i],
        cond_ii=[
            UncoveredPointResponse(
                point=space.labels[item.point],
                s=space.labels[item.s],
                t=space.labels[item.t],
                slack=item.slack,
            )
            for item in report.cond_ii
        ],
    )

def coverage_prefix_response(system: MoleculeSystem, eps: Fraction, prefix: Optional[int]) -> CoveragePrefixResponse:
    return CoveragePrefixResponse(eps=eps, pairs=len(system.pairs), prefix=prefix)

def l1_response(space: FiniteMetricSpace, system: MoleculeSystem, verdict: L1BasisVerdict) -> L1CheckResponse:
    if verdict.isometric_l1:
        return L1CheckResponse(isometric_l1=True)
    oriented = differentiability_service.orient(system.pairs, verdict.pattern)
    return L1CheckResponse(
        isometric_l1=False,
        pattern=[document_service.label_pair(space, pair) for pair in oriented],
        witness=witness_response(space, oriented, verdict.witness),
    )

def stability_response(check: StabilityCheck) -> StabilityResponse:
    return StabilityResponse(
        theta=check.bound.theta,
        diameter=check.bound.diameter,
        n=check.bound.n,
        K=check.bound.K,
        eps=check.eps,
        value=check.value,
        threshold=check.threshold,
        hypothesis=check.hypothesis,
        sup_distance=check.sup_distance,
        holds=check.holds,
    )

def _flatten(data: Any, prefix: str = "") -> List[Tuple[str, str]]:
    if isinstance(data, dict):
        rows = []
        for key in sorted(data):
            rows.extend(_flatten(data[key], f"{prefix}.{key}" if prefix else str(key)))
        return rows
    if isinstance(data, list) and any(isinstance(item, (dict, list)) for item in data):
        rows = []
        for position, item in enumerate(data, start=1):
            rows.extend(_flatten(item, f"{prefix}[{position}]"))
        return rows
    if isinstance(data, list):
        return [(prefix, ", ".join(str(item) for item in data))]
    return [(prefix, str(data).lower() if isinstance(data, bool) else str(data))]

def render(response: BaseModel, output_format: str = cli_constants.OUTPUT_FORMAT_JSON) -> bytes:
    """
    Function to render a report as canonical JSON or as a two-column text table
    :param response:
    :param output_format:
    :return:
    """
    data: Dict[str, Any] = response.model_dump(mode="json", exclude_none=True)
    if output_format == cli_constants.OUTPUT_FORMAT_JSON:
        return dumps_canonical(data)
    table = Table(show_header=True, header_style=None, box=None)
    table.add_column("field")
    table.add_column("value")
    for key, value in _flatten(data):
        table.add_row(key, value)
    buffer = io.StringIO()
    Console(file=buffer, width=TEXT_REPORT_WIDTH, color_system=None, force_terminal=False).print(table)
    return buffer.getvalue().encode()
