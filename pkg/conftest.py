# -*- coding: utf-8 -*-
"""
Shared pytest fixtures: the worked-example matrices and a seeded generator.
"""

import os

import numpy as np
import pytest

from src.parser import read_matrix

MATRICES_DIR = os.path.join(os.path.dirname(__file__), "data", "matrices")
GRAPHS_DIR = os.path.join(os.path.dirname(__file__), "data", "graphs")


def matrix_path(name):
    return os.path.join(MATRICES_DIR, f"{name}.nnm")


@pytest.fixture
def worked_matrices():
    """P, Q, X, Z, A, B read from their transcribed files."""
    return {name: read_matrix(matrix_path(name)) for name in ("P", "Q", "X", "Z", "A", "B")}


@pytest.fixture
def rng():
    return np.random.default_rng(20231)


@pytest.fixture
def network_path():
    return os.path.join(GRAPHS_DIR, "network.txt")


@pytest.fixture
def matrix_file():
    """Path lookup for a transcribed matrix by name."""
    return matrix_path
