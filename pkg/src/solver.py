# -*- coding: utf-8 -*-
"""
Applied solvers on top of the neutrosophic tropical algebra.

- shortest_paths      : all-pairs least path costs via the min-plus closure
- schedule_recurrence : max-plus event timing x(t+1) = A ⊗ x(t)

Indeterminacy is optimised componentwise: the path minimising the
determinate part and the path minimising the I-coefficient may differ, and
the result is the componentwise optimum, not one witness path.
"""

import logging
from dataclasses import dataclass

import numpy as np

from src.algebra import AlgebraMode, InfinityPolicy, NeutrosophicNumber, additive_identity
from src.errors import DimensionMismatch, DomainError
from src.matrix import NeutroMatrix, ReductionOp, mat_closure, mat_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    weight: NeutrosophicNumber


@dataclass(frozen=True)
class WeightedDigraph:
    """
    Directed graph with neutrosophic edge weights.

    Parameters
    ----------
    node_count : number of nodes, indexed 0 .. node_count-1
    edges      : tuple of Edge, at most one per ordered (source, target) pair
    """

    node_count: int
    edges: tuple = ()

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError(f"node_count must be positive, got {self.node_count}")
        edges = tuple(self.edges)
        seen = set()
        for edge in edges:
            for end in (edge.source, edge.target):
                if not 0 <= end < self.node_count:
                    raise DomainError(f"node index {end} outside [0, {self.node_count})")
            pair = (edge.source, edge.target)
            if pair in seen:
                raise DomainError(f"duplicate edge {edge.source} -> {edge.target}")
            seen.add(pair)
        object.__setattr__(self, 'edges', edges)

    def adjacency(self):
        """
        Min-plus adjacency matrix.

        Missing edges are +inf+infI. The diagonal is 0+0I unless a self-edge
        has a negative determinate part, in which case the self-edge wins.
        """
        n = self.node_count
        zero = additive_identity(AlgebraMode.MIN)
        a = np.full((n, n), zero.a)
        b = np.full((n, n), zero.b)
        np.fill_diagonal(a, 0.0)
        np.fill_diagonal(b, 0.0)
        for edge in self.edges:
            i, j = edge.source, edge.target
            if i == j and not edge.weight.a < 0:
                continue
            a[i, j] = edge.weight.a
            b[i, j] = edge.weight.b
        return NeutroMatrix(a, b)


@dataclass(frozen=True)
class ScheduleTrace:
    """State vectors x(0), x(1), ..., x(k), each n×1."""

    states: tuple

    def __post_init__(self):
        states = tuple(self.states)
        if not states:
            raise ValueError("a schedule trace holds at least x(0)")
        shape = states[0].shape
        if shape[1] != 1 or any(s.shape != shape for s in states):
            raise DimensionMismatch("all trace states must be n×1 vectors of equal size")
        object.__setattr__(self, 'states', states)

    @property
    def dimension(self):
        return self.states[0].rows

    def __len__(self):
        return len(self.states)

    def __getitem__(self, t):
        return self.states[t]

    def __iter__(self):
        return iter(self.states)


def shortest_paths(graph, policy=InfinityPolicy.RESOLVE):
    """
    All-pairs least path costs with accumulated indeterminacy.

    Parameters
    ----------
    graph : WeightedDigraph

    Returns
    -------
    ClosureResult: closure of the adjacency matrix and the negative-cycle flag.
    """
    result = mat_closure(graph.adjacency(), AlgebraMode.MIN, policy)
    logger.info(
        "Shortest paths: %d nodes, %d edges, negative cycle: %s",
        graph.node_count, len(graph.edges), result.cycle_warning,
    )
    return result


def schedule_recurrence(A, x0, k, policy=InfinityPolicy.RESOLVE):
    """
    Max-plus event timing x(t+1) = A ⊗ x(t).

    Parameters
    ----------
    A  : n×n NeutroMatrix of delays
    x0 : n×1 NeutroMatrix of initial event times
    k  : number of steps

    Returns
    -------
    ScheduleTrace of k+1 vectors.
    """
    if not A.is_square:
        raise DimensionMismatch(f"square system matrix required, got {A.rows}x{A.cols}")
    if x0.shape != (A.rows, 1):
        raise DimensionMismatch(
            f"initial vector must be {A.rows}x1, got {x0.rows}x{x0.cols}"
        )
    if k < 0:
        raise ValueError(f"step count must be non-negative, got {k}")

    states = [x0]
    for _ in range(k):
        states.append(mat_mul(A, states[-1], AlgebraMode.MAX, ReductionOp.TROPICAL_MAX, policy))
    logger.debug("schedule trace of %d steps for %d events", k, A.rows)
    return ScheduleTrace(tuple(states))
