# -*- coding: utf-8 -*-
"""
Scalar neutrosophic numbers a + bI over the extended reals.

Operations:
- pv_add_min : x ⊕ z  = min(a, c) + min(b, d)I
- pv_add_max : x ⊕′ z = max(a, c) + max(b, d)I
- pv_mul     : x ⊗ z  = (a + c) + (b + d)I
- pv_div     : x ⊘ z  = (a - c) + (b - d)I, exact inverse of ⊗

The symbol I is never stored; b is its coefficient. Since ⊗ only adds
coefficients, I·I never arises and I² = I needs no runtime rule.
"""

import math
from dataclasses import dataclass
from enum import Enum

from config import DEFAULT_MODE
from src.errors import DomainError

# A component is a float that is finite, +inf or -inf. Never NaN.
ExtendedReal = float

POS_INF = math.inf
NEG_INF = -math.inf


class AlgebraMode(Enum):
    """Which tropical addition is in force: MIN selects ⊕, MAX selects ⊕′."""

    MIN = 'min'
    MAX = 'max'


DEFAULT_ALGEBRA_MODE = AlgebraMode(DEFAULT_MODE)


class InfinityPolicy(Enum):
    """
    What ⊗ does with the undefined sum (+inf) + (-inf).

    RESOLVE maps it to the mode's additive-identity component so that the
    additive identity annihilates. STRICT raises DomainError instead.
    """

    RESOLVE = 'resolve'
    STRICT = 'strict'


@dataclass(frozen=True)
class NeutrosophicNumber:
    """Neutrosophic number a + bI with extended-real components."""

    a: ExtendedReal
    b: ExtendedReal = 0.0

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if math.isnan(a) or math.isnan(b):
            raise DomainError(f"NaN component in neutrosophic number ({self.a}, {self.b})")
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @classmethod
    def real(cls, a):
        """Embed a plain tropical scalar (indeterminacy coefficient 0)."""
        return cls(a, 0.0)

    @property
    def is_finite(self):
        return math.isfinite(self.a) and math.isfinite(self.b)

    @property
    def is_determinate(self):
        return self.b == 0.0


def _extended_sum(p, q, mode, policy):
    """Classical sum of two components with the mixed-infinity rule applied."""
    if math.isinf(p) and math.isinf(q) and p != q:
        if policy is InfinityPolicy.STRICT:
            raise DomainError(f"undefined sum {p} + {q} in ⊗ under strict policy")
        return POS_INF if mode is AlgebraMode.MIN else NEG_INF
    return p + q


def pv_add_min(x, z):
    """x ⊕ z: componentwise minimum."""
    return NeutrosophicNumber(min(x.a, z.a), min(x.b, z.b))


def pv_add_max(x, z):
    """x ⊕′ z: componentwise maximum."""
    return NeutrosophicNumber(max(x.a, z.a), max(x.b, z.b))


def pv_add(x, z, mode):
    """Tropical addition selected by `mode`."""
    if mode is AlgebraMode.MIN:
        return pv_add_min(x, z)
    return pv_add_max(x, z)


def pv_mul(x, z, mode=DEFAULT_ALGEBRA_MODE, policy=InfinityPolicy.RESOLVE):
    """
    x ⊗ z: componentwise classical addition.

    Parameters
    ----------
    x, z   : NeutrosophicNumber operands
    mode   : AlgebraMode, only consulted to resolve (+inf) + (-inf)
    policy : InfinityPolicy for the mixed-infinity case

    Returns
    -------
    NeutrosophicNumber (a + c) + (b + d)I
    """
    return NeutrosophicNumber(
        _extended_sum(x.a, z.a, mode, policy),
        _extended_sum(x.b, z.b, mode, policy),
    )


def pv_div(x, z):
    """
    x ⊘ z: componentwise classical subtraction.

    Raises DomainError when z has an infinite component, since such a z has
    no ⊗-inverse.
    """
    if not z.is_finite:
        raise DomainError(f"division by a number with an infinite component ({z.a}, {z.b})")
    return NeutrosophicNumber(x.a - z.a, x.b - z.b)


def additive_identity(mode):
    """+inf+infI for MIN, -inf-infI for MAX."""
    if mode is AlgebraMode.MIN:
        return NeutrosophicNumber(POS_INF, POS_INF)
    return NeutrosophicNumber(NEG_INF, NEG_INF)


def multiplicative_identity():
    return NeutrosophicNumber(0.0, 0.0)


def component_leq(x, z):
    """Componentwise partial order: x.a <= z.a and x.b <= z.b."""
    return x.a <= z.a and x.b <= z.b
