"""
Successive shortest path min-cost flow over exact rationals.

Dijkstra runs on reduced costs cost(u, v) + potential[u] - potential[v], which
stay nonnegative on every residual arc, so the final potentials are an optimal
dual solution alongside the flow.
"""
import heapq
from fractions import Fraction
from typing import List, Optional

from core.exceptions import InternalConsistencyError
from core.logger import logger

# None is infinite capacity / unreachable distance


class Edge:
    src: int
    dst: int
    capacity: Optional[Fraction]
    cost: Fraction
    flow: Fraction
    reverse: int

    def __init__(self, src: int, dst: int, capacity: Optional[Fraction], cost: Fraction, reverse: int):
        self.src = src
        self.dst = dst
        self.capacity = capacity
        self.cost = cost
        self.flow = Fraction(0)
        self.reverse = reverse

    def residual(self) -> Optional[Fraction]:
        if self.capacity is None:
            return None
        return self.capacity - self.flow


class MinCostFlow:
    """
    A class to route a required amount of flow at minimum cost.
    Arc costs must be nonnegative.
    """

    def __init__(self, node_count: int):
        self.node_count = node_count
        self.edges: List[Edge] = []
        self.adjacency: List[List[int]] = [[] for _ in range(node_count)]
        self.potentials: List[Fraction] = [Fraction(0)] * node_count

    def add_edge(self, src: int, dst: int, capacity: Optional[Fraction], cost: Fraction) -> int:
        """
        Function to add an arc and its zero-capacity reverse arc
        :param src:
        :param dst:
        :param capacity: None for unbounded
        :param cost: nonnegative
        :return: the index of the forward arc
        """
        forward_index = len(self.edges)
        self.edges.append(Edge(src, dst, capacity, Fraction(cost), forward_index + 1))
        self.edges.append(Edge(dst, src, Fraction(0), -Fraction(cost), forward_index))
        self.adjacency[src].append(forward_index)
        self.adjacency[dst].append(forward_index + 1)
        return forward_index

    def flow(self, edge_index: int) -> Fraction:
        return self.edges[edge_index].flow

    def _has_residual(self, edge: Edge) -> bool:
        residual = edge.residual()
        return residual is None or residual > 0

    def _dijkstra(self, source: int):
        distance: List[Optional[Fraction]] = [None] * self.node_count
        parent: List[Optional[int]] = [None] * self.node_count
        done = [False] * self.node_count
        distance[source] = Fraction(0)
        heap = [(Fraction(0), source)]
        while heap:
            dist_u, u = heapq.heappop(heap)
            if done[u]:
                continue
            done[u] = True
            for edge_index in self.adjacency[u]:
                edge = self.edges[edge_index]
                if not self._has_residual(edge):
                    continue
                reduced = edge.cost + self.potentials[u] - self.potentials[edge.dst]
                candidate = dist_u + reduced
                if distance[edge.dst] is None or candidate < distance[edge.dst]:
                    distance[edge.dst] = candidate
                    parent[edge.dst] = edge_index
                    heapq.heappush(heap, (candidate, edge.dst))
        return distance, parent

    def solve(self, source: int, sink: int, required: Fraction) -> Fraction:
        """
        Function to send `required` units from source to sink at minimum cost
        :param source:
        :param sink:
        :param required:
        :return: the total cost
        """
        sent = Fraction(0)
        total_cost = Fraction(0)
        while sent < required:
            distance, parent = self._dijkstra(source)
            if distance[sink] is None:
                logger.error(f"MinCostFlow.solve: sink unreachable after sending {sent} of {required}")
                raise InternalConsistencyError(f"Only {sent} of {required} units could be routed.")
            sink_distance = distance[sink]
            for node in range(self.node_count):
                reached = distance[node]
                self.potentials[node] += sink_distance if reached is None else min(reached, sink_distance)

            amount = required - sent
            node = sink
            while node != source:
                edge = self.edges[parent[node]]
                residual = edge.residual()
                if residual is not None and residual < amount:
                    amount = residual
                node = edge.src
            node = sink
            while node != source:
                edge = self.edges[parent[node]]
                edge.flow += amount
                self.edges[edge.reverse].flow -= amount
                total_cost += amount * edge.cost
                node = edge.src
            sent += amount
        return total_cost
