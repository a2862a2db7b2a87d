# -*- coding: utf-8 -*-
"""
Configuration and default parameters for the neutrosophic tropical algebra.
"""

# Algebra defaults
DEFAULT_MODE = 'min'          # 'min' selects ⊕, 'max' selects ⊕′

# Axiom checker
DEFAULT_SAMPLES = 10000
DEFAULT_SEED = 7
DEFAULT_RANGE = (-50, 50)     # inclusive interval for sampled components
INFINITY_PROBABILITY = 1 / 16  # per component, per infinity

LAW_NAMES = [
    'add_commutativity',
    'add_associativity',
    'add_idempotency',
    'add_identity',
    'mul_commutativity',
    'mul_associativity',
    'mul_identity',
    'left_distributivity',
    'right_distributivity',
    'annihilation',
]

# Text formats
COMMENT_PREFIX = "#"

# Logging
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_DOMAIN = 4
EXIT_AXIOM_FAILURE = 5

# Output
DEFAULT_PLOT_DPI = 300
