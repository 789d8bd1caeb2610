from fractions import Fraction
from typing import Dict, List, Tuple

from constants import general as general_constants
from core.exceptions import CertificateMismatchError
from core.logger import logger
from core.utilities import new_request_id
from schemas import (
    FiniteMetricSpace,
    LipschitzFunction,
    MoleculeSystem,
    PlanLeg,
    PointMassElement,
    TransportCertificate,
)
from services import molecule_system_service, norming_builder_service
from services.transport import MinCostFlow


def balanced_masses(space: FiniteMetricSpace, element: PointMassElement) -> Dict[int, Fraction]:
    """
    Function to complete an element to a zero-total measure, the base point
    taking -sum(coefficients)
    :param space:
    :param element:
    :return: nonzero masses by point index
    """
    masses = {
        point: value
        for point, value in element.coefficients.items()
        if value != 0 and point != space.base
    }
    residual = -sum(masses.values(), Fraction(0))
    if residual != 0:
        masses[space.base] = residual
    return dict(sorted(masses.items()))

def _zero_certificate(space: FiniteMetricSpace) -> TransportCertificate:
    return TransportCertificate(
        value=Fraction(0),
        plan=(),
        dual=LipschitzFunction(values=(Fraction(0),) * space.size, lip_constant=Fraction(0)),
    )

def free_norm(space: FiniteMetricSpace, element: PointMassElement) -> TransportCertificate:
    """
    Function to compute the free-space norm of a finitely supported element as
    the optimal cost of moving its positive part onto its negative part.
    The dual is the c-transform of the flow potentials, shifted to vanish at the base.
    :param space:
    :param element:
    :return:
    """
    masses = balanced_masses(space, element)
    supplies: List[int] = [point for point, mass in masses.items() if mass > 0]
    demands: List[int] = [point for point, mass in masses.items() if mass < 0]
    if not supplies:
        return _zero_certificate(space)

    # nodes: 0 source, supplies, demands, sink
    source = 0
    supply_node = {point: 1 + position for position, point in enumerate(supplies)}
    demand_node = {point: 1 + len(supplies) + position for position, point in enumerate(demands)}
    sink = 1 + len(supplies) + len(demands)
    network = MinCostFlow(sink + 1)
    for point in supplies:
        network.add_edge(source, supply_node[point], masses[point], Fraction(0))
    arcs: List[Tuple[int, int, int]] = []
    for s in supplies:
        for t in demands:
            arcs.append((s, t, network.add_edge(supply_node[s], demand_node[t], None, space.dist[s][t])))
    for point in demands:
        network.add_edge(demand_node[point], sink, -masses[point], Fraction(0))

    required = sum((masses[point] for point in supplies), Fraction(0))
    primal = network.solve(source, sink, required)

    plan = tuple(
        PlanLeg(source=s, sink=t, mass=network.flow(edge_index))
        for s, t, edge_index in sorted(arcs)
        if network.flow(edge_index) > 0
    )

    # f = -potential on supports, then f(x) = min_t f(t) + d(x, t)
    on_support = {point: -network.potentials[supply_node[point]] for point in supplies}
    on_support.update({point: -network.potentials[demand_node[point]] for point in demands})
    transformed = [
        min(on_support[t] + space.dist[x][t] for t in demands) for x in range(space.size)
    ]
    shift = transformed[space.base]
    values = tuple(value - shift for value in transformed)
    dual = LipschitzFunction(
        values=values,
        lip_constant=norming_builder_service.lipschitz_constant(space, values),
    )

    plan_cost = sum((leg.mass * space.dist[leg.source][leg.sink] for leg in plan), Fraction(0))
    dual_value = molecule_system_service.evaluate_element(element, values)
    if not (plan_cost == primal == dual_value) or dual.lip_constant > 1:
        req_id = new_request_id()
        logger.error(
            f"free_norm: {req_id} duality gap: primal {primal}, plan {plan_cost}, "
            f"dual {dual_value}, dual lip {dual.lip_constant}"
        )
        raise CertificateMismatchError(f"{general_constants.DETAIL_CERTIFICATE_MISMATCH} ({req_id})")
    logger.debug(f"free_norm: value {plan_cost} over {len(plan)} plan leg(s)")
    return TransportCertificate(value=plan_cost, plan=plan, dual=dual)

def attains(space: FiniteMetricSpace, system: MoleculeSystem) -> bool:
    """
    Function to check || sum_i weights[i] * m_{x_i, y_i} || = sum_i weights[i]
    :param space:
    :param system:
    :return:
    """
    element = molecule_system_service.to_point_masses(space, system)
    return free_norm(space, element).value == system.total_weight

def decompose_to_molecules(space: FiniteMetricSpace, element: PointMassElement) -> MoleculeSystem:
    """
    Function to read a norm-attaining molecule family off the optimal plan:
    each leg (s, t, mass) becomes the pair (s, t) with weight mass * d(s, t)
    :param space:
    :param element:
    :return: empty for the zero element
    """
    certificate = free_norm(space, element)
    return MoleculeSystem(
        pairs=tuple((leg.source, leg.sink) for leg in certificate.plan),
        weights=tuple(leg.mass * space.dist[leg.source][leg.sink] for leg in certificate.plan),
    )
