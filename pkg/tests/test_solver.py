# -*- coding: utf-8 -*-
import itertools

import networkx as nx
import numpy as np
import pytest

from src.algebra import POS_INF, AlgebraMode, NeutrosophicNumber as NN, pv_add, pv_mul
from src.errors import DimensionMismatch, DomainError
from src.matrix import NeutroMatrix, ReductionOp, mat_identity, mat_mul
from src.solver import Edge, ScheduleTrace, WeightedDigraph, schedule_recurrence, shortest_paths


def random_graph(rng, low, high, determinate=False):
    n = int(rng.integers(1, 6, endpoint=True))
    edges = []
    for i, j in itertools.product(range(n), repeat=2):
        if i != j and rng.random() < 0.5:
            a = float(rng.integers(low, high, endpoint=True))
            b = 0.0 if determinate else float(rng.integers(low, high, endpoint=True))
            edges.append(Edge(i, j, NN(a, b)))
    return WeightedDigraph(n, tuple(edges))


def to_networkx(graph, component):
    G = nx.DiGraph()
    G.add_nodes_from(range(graph.node_count))
    for edge in graph.edges:
        G.add_edge(edge.source, edge.target, weight=getattr(edge.weight, component))
    return G


# ── digraph type ───────────────────────────────────────────────────────────────

def test_graph_rejects_bad_edges():
    with pytest.raises(DomainError):
        WeightedDigraph(2, (Edge(0, 2, NN(1, 0)),))
    with pytest.raises(DomainError):
        WeightedDigraph(2, (Edge(0, 1, NN(1, 0)), Edge(0, 1, NN(2, 0))))


def test_adjacency_diagonal_rules():
    graph = WeightedDigraph(3, (Edge(0, 0, NN(4, 1)), Edge(1, 1, NN(-2, 3)), Edge(0, 2, NN(5, 5))))
    M = graph.adjacency()
    assert M.entry(0, 0) == NN(0, 0)
    assert M.entry(1, 1) == NN(-2, 3)
    assert M.entry(0, 2) == NN(5, 5)
    assert M.entry(2, 0) == NN(POS_INF, POS_INF)


# ── shortest paths ─────────────────────────────────────────────────────────────

def test_single_node():
    assert shortest_paths(WeightedDigraph(1)).matrix == NeutroMatrix.from_rows([[NN(0, 0)]])


def test_unreachable_nodes():
    D = shortest_paths(WeightedDigraph(2)).matrix
    assert D.entry(0, 1) == NN(POS_INF, POS_INF)
    assert D.entry(1, 0) == NN(POS_INF, POS_INF)


def test_sample_network(network_path):
    from src.parser import read_graph
    D = shortest_paths(read_graph(network_path)).matrix
    # 0 -> 2 -> 1 costs 3+2I; 0 -> 1 directly costs 4+I: componentwise optimum
    assert D.entry(0, 1) == NN(3, 1)
    assert D.entry(0, 3) == NN(4, 2)


def test_determinate_weights_match_floyd_warshall(rng):
    for _ in range(200):
        graph = random_graph(rng, 0, 20, determinate=True)
        result = shortest_paths(graph)
        oracle = nx.floyd_warshall(to_networkx(graph, 'a'))
        for i, j in itertools.product(range(graph.node_count), repeat=2):
            assert result.matrix.a[i, j] == oracle[i][j]
        assert not result.matrix.b[np.isfinite(result.matrix.a)].any()


def test_matches_simple_path_enumeration(rng):
    for _ in range(100):
        graph = random_graph(rng, 0, 9)
        D = shortest_paths(graph).matrix
        G = to_networkx(graph, 'a')
        weights = {(e.source, e.target): e.weight for e in graph.edges}
        for i, j in itertools.product(range(graph.node_count), repeat=2):
            best = NN(0, 0) if i == j else NN(POS_INF, POS_INF)
            if i != j:
                for path in nx.all_simple_paths(G, i, j):
                    cost = NN(0, 0)
                    for u, v in zip(path, path[1:]):
                        cost = pv_mul(cost, weights[(u, v)])
                    best = pv_add(best, cost, AlgebraMode.MIN)
            assert D.entry(i, j) == best


def test_diagonal_is_zero_without_negative_weights(rng):
    for _ in range(50):
        result = shortest_paths(random_graph(rng, 0, 9))
        assert not np.diagonal(result.matrix.a).any()
        assert not result.cycle_warning


def test_negative_cycle_is_flagged():
    graph = WeightedDigraph(3, (Edge(0, 1, NN(1, 0)), Edge(1, 2, NN(-4, 0)), Edge(2, 0, NN(1, 0))))
    result = shortest_paths(graph)
    assert result.cycle_warning
    assert (np.diagonal(result.matrix.a) <= 0).all()


def test_monotone_in_edge_weights(rng):
    for _ in range(50):
        graph = random_graph(rng, 0, 9)
        if not graph.edges:
            continue
        lowered = tuple(
            Edge(e.source, e.target, NN(e.weight.a - rng.integers(0, 3), e.weight.b - rng.integers(0, 3)))
            if e.weight.a >= 2 and e.weight.b >= 2 else e
            for e in graph.edges
        )
        before = shortest_paths(graph).matrix
        after = shortest_paths(WeightedDigraph(graph.node_count, lowered)).matrix
        assert (after.a <= before.a).all() and (after.b <= before.b).all()


# ── schedule recurrence ────────────────────────────────────────────────────────

def column(*values):
    return NeutroMatrix.from_rows([[v] for v in values])


def test_zero_steps():
    x0 = column(NN(0, 0), NN(1, 1))
    trace = schedule_recurrence(mat_identity(2, AlgebraMode.MAX), x0, 0)
    assert len(trace) == 1
    assert trace[0] == x0


def test_identity_system_keeps_state():
    x0 = column(NN(2, 1), NN(-1, 3), NN(0, 0))
    trace = schedule_recurrence(mat_identity(3, AlgebraMode.MAX), x0, 5)
    assert all(state == x0 for state in trace)


def test_one_step():
    A = NeutroMatrix.from_rows([[NN(0, 0), NN(2, 1)], [NN(3, -1), NN(0, 0)]])
    trace = schedule_recurrence(A, column(NN(0, 0), NN(0, 0)), 1)
    assert trace[1] == column(NN(2, 1), NN(3, 0))


def test_trace_satisfies_recurrence(rng):
    for _ in range(20):
        n = int(rng.integers(1, 5, endpoint=True))
        A = NeutroMatrix(rng.integers(-5, 5, size=(n, n)).astype(float),
                         rng.integers(-5, 5, size=(n, n)).astype(float))
        x0 = NeutroMatrix(rng.integers(0, 5, size=(n, 1)).astype(float), np.zeros((n, 1)))
        trace = schedule_recurrence(A, x0, 6)
        assert trace.dimension == n
        for t in range(6):
            assert trace[t + 1] == mat_mul(A, trace[t], AlgebraMode.MAX, ReductionOp.TROPICAL_MAX)


def test_schedule_dimension_errors(worked_matrices):
    with pytest.raises(DimensionMismatch):
        schedule_recurrence(worked_matrices["A"], column(NN(0, 0), NN(0, 0)), 1)
    with pytest.raises(DimensionMismatch):
        schedule_recurrence(worked_matrices["P"], column(NN(0, 0)), 1)


def test_trace_rejects_ragged_states():
    with pytest.raises(DimensionMismatch):
        ScheduleTrace((column(NN(0, 0)), column(NN(0, 0), NN(1, 0))))
