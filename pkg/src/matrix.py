# -*- coding: utf-8 -*-
"""
Dense matrices over neutrosophic numbers.

A NeutroMatrix stores two float64 planes of equal shape: `a` holds the
determinate parts and `b` the coefficients of I. All operations act on both
planes independently, which is what the componentwise scalar operations do.

Operations:
- mat_add      : elementwise ⊕ / ⊕′
- mat_mul      : c_ij = fold_k (a_ik ⊗ b_kj), fold chosen by ReductionOp
- scalar_mul   : α ⊗ A (= A ⊗ α)
- mat_identity : tropical identity matrix
- mat_power    : iterated product
- mat_closure  : Kleene star I ⊕ A ⊕ ... ⊕ A^(n-1)
"""

import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.algebra import (
    DEFAULT_ALGEBRA_MODE,
    AlgebraMode,
    InfinityPolicy,
    NeutrosophicNumber,
    additive_identity,
)
from src.errors import DimensionMismatch, DomainError

logger = logging.getLogger(__name__)


class ReductionOp(Enum):
    """How the k-terms of a matrix product are folded."""

    TROPICAL_MIN = 'min'
    TROPICAL_MAX = 'max'
    PLUS_FOLD = 'plus'   # classical sum of the k-terms, as in the worked product example

    @property
    def is_tropical(self):
        return self is not ReductionOp.PLUS_FOLD


def reduction_for(mode):
    """The tropical reduction that matches an addition mode."""
    return ReductionOp.TROPICAL_MIN if mode is AlgebraMode.MIN else ReductionOp.TROPICAL_MAX


def _readonly(plane):
    arr = np.array(plane, dtype=np.float64)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class NeutroMatrix:
    """
    rows × cols grid of neutrosophic numbers.

    Parameters
    ----------
    a : 2-D array of determinate parts
    b : 2-D array of indeterminacy coefficients, same shape as `a`
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a, b = _readonly(self.a), _readonly(self.b)
        if a.ndim != 2 or a.shape != b.shape:
            raise DimensionMismatch(
                f"component planes must be 2-D and equal in shape, got {a.shape} and {b.shape}"
            )
        if a.shape[0] < 1 or a.shape[1] < 1:
            raise DimensionMismatch(f"matrix must be at least 1x1, got {a.shape[0]}x{a.shape[1]}")
        if np.isnan(a).any() or np.isnan(b).any():
            raise DomainError("NaN entry in neutrosophic matrix")
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        """Build from a row-major sequence of rows*cols NeutrosophicNumbers."""
        entries = list(entries)
        if len(entries) != rows * cols:
            raise DimensionMismatch(
                f"expected {rows}x{cols} = {rows * cols} entries, got {len(entries)}"
            )
        if rows < 1 or cols < 1:
            raise DimensionMismatch(f"matrix must be at least 1x1, got {rows}x{cols}")
        a = np.array([x.a for x in entries], dtype=np.float64).reshape(rows, cols)
        b = np.array([x.b for x in entries], dtype=np.float64).reshape(rows, cols)
        return cls(a, b)

    @classmethod
    def from_rows(cls, rows):
        """Build from a list of lists of NeutrosophicNumbers."""
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("rows must be non-empty and of equal length")
        return cls.from_entries(len(rows), len(rows[0]), [x for r in rows for x in r])

    @classmethod
    def filled(cls, rows, cols, value):
        return cls(np.full((rows, cols), value.a), np.full((rows, cols), value.b))

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    @property
    def shape(self):
        return self.a.shape

    @property
    def is_square(self):
        return self.rows == self.cols

    def entry(self, i, j):
        return NeutrosophicNumber(self.a[i, j], self.b[i, j])

    def entries(self):
        """Row-major list of entries."""
        return [self.entry(i, j) for i in range(self.rows) for j in range(self.cols)]

    def to_rows(self):
        return [[self.entry(i, j) for j in range(self.cols)] for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, NeutroMatrix):
            return NotImplemented
        return np.array_equal(self.a, other.a) and np.array_equal(self.b, other.b)

    __hash__ = None

    def __repr__(self):
        return f"NeutroMatrix({self.rows}x{self.cols}, a={self.a.tolist()}, b={self.b.tolist()})"


def _resolve_mixed(plane, mode, policy):
    """Replace NaNs produced by (+inf) + (-inf) according to the policy."""
    mixed = np.isnan(plane)
    if not mixed.any():
        return plane
    if policy is InfinityPolicy.STRICT:
        raise DomainError("undefined sum (+inf) + (-inf) in ⊗ under strict policy")
    return np.where(mixed, np.inf if mode is AlgebraMode.MIN else -np.inf, plane)


def _extended_add(p, q, mode, policy):
    with np.errstate(invalid='ignore'):
        total = p + q
    return _resolve_mixed(total, mode, policy)


def _require_same_shape(A, B):
    if A.shape != B.shape:
        raise DimensionMismatch(
            f"shapes differ: {A.rows}x{A.cols} vs {B.rows}x{B.cols}"
        )


def _require_square(A):
    if not A.is_square:
        raise DimensionMismatch(f"square matrix required, got {A.rows}x{A.cols}")


def mat_add(A, B, mode=DEFAULT_ALGEBRA_MODE):
    """Elementwise tropical sum: min in MIN mode, max in MAX mode."""
    _require_same_shape(A, B)
    fold = np.minimum if mode is AlgebraMode.MIN else np.maximum
    return NeutroMatrix(fold(A.a, B.a), fold(A.b, B.b))


def _product_plane(P, Q, mode, reduce, policy):
    # terms[i, k, j] = P[i, k] + Q[k, j]
    terms = _extended_add(P[:, :, np.newaxis], Q[np.newaxis, :, :], mode, policy)
    if reduce is ReductionOp.TROPICAL_MIN:
        return terms.min(axis=1)
    if reduce is ReductionOp.TROPICAL_MAX:
        return terms.max(axis=1)
    # sequential fold over k ascending
    with np.errstate(invalid='ignore'):
        total = np.cumsum(terms, axis=1)[:, -1, :]
    return _resolve_mixed(total, mode, policy)


def mat_mul(A, B, mode=DEFAULT_ALGEBRA_MODE, reduce=None, policy=InfinityPolicy.RESOLVE):
    """
    Matrix product C = A ⊗ B.

    Parameters
    ----------
    A, B   : NeutroMatrix with A.cols == B.rows
    mode   : AlgebraMode used to resolve mixed infinities in each a_ik ⊗ b_kj
    reduce : ReductionOp folding the k-terms (defaults to the tropical fold of `mode`)
    policy : InfinityPolicy

    Returns
    -------
    NeutroMatrix of shape A.rows × B.cols
    """
    if reduce is None:
        reduce = reduction_for(mode)
    if A.cols != B.rows:
        raise DimensionMismatch(
            f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}"
        )
    return NeutroMatrix(
        _product_plane(A.a, B.a, mode, reduce, policy),
        _product_plane(A.b, B.b, mode, reduce, policy),
    )


def scalar_mul(alpha, A, mode=DEFAULT_ALGEBRA_MODE, policy=InfinityPolicy.RESOLVE):
    """Scalar action α ⊗ A. ⊗ is commutative, so this is also A ⊗ α."""
    return NeutroMatrix(
        _extended_add(alpha.a, A.a, mode, policy),
        _extended_add(alpha.b, A.b, mode, policy),
    )


def mat_identity(n, mode=DEFAULT_ALGEBRA_MODE):
    """Diagonal 0+0I, off-diagonal the additive identity of `mode`."""
    if n < 1:
        raise ValueError(f"identity size must be positive, got {n}")
    zero = additive_identity(mode)
    a = np.full((n, n), zero.a)
    b = np.full((n, n), zero.b)
    np.fill_diagonal(a, 0.0)
    np.fill_diagonal(b, 0.0)
    return NeutroMatrix(a, b)


def mat_power(A, k, mode=DEFAULT_ALGEBRA_MODE, reduce=None, policy=InfinityPolicy.RESOLVE):
    """
    k-fold product A ⊗ A ⊗ ... ⊗ A; A⁰ is the identity.

    Tropical reductions under InfinityPolicy.RESOLVE are associative and use
    repeated squaring. The plus-fold and the strict policy fold left to right.
    The zeroth power only exists for tropical reductions.
    """
    if reduce is None:
        reduce = reduction_for(mode)
    _require_square(A)
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    if k == 0:
        if not reduce.is_tropical:
            raise DomainError("A^0 is undefined for the plus-fold reduction (no identity matrix)")
        return mat_identity(A.rows, mode)

    if reduce.is_tropical and policy is InfinityPolicy.RESOLVE:
        result, square = None, A
        while True:
            if k & 1:
                result = square if result is None else mat_mul(result, square, mode, reduce, policy)
            k >>= 1
            if not k:
                return result
            square = mat_mul(square, square, mode, reduce, policy)

    result = A
    for _ in range(k - 1):
        result = mat_mul(result, A, mode, reduce, policy)
    return result


@dataclass(frozen=True)
class ClosureResult:
    """
    Kleene closure together with its cycle diagnostic.

    cycle_warning is set when some cycle improves on 0: a negative
    determinate part in MIN mode, a positive one in MAX mode.
    """

    matrix: NeutroMatrix
    cycle_warning: bool = False


def mat_closure(A, mode=DEFAULT_ALGEBRA_MODE, policy=InfinityPolicy.RESOLVE):
    """
    Kleene star A* = I ⊕ A ⊕ A² ⊕ ... ⊕ A^(n-1) under the tropical fold of `mode`.

    In MIN mode without negative cycles, entry (i, j).a is the least path
    cost from i to j.
    """
    _require_square(A)
    n = A.rows
    reduce = reduction_for(mode)

    power = mat_identity(n, mode)
    star = power
    for _ in range(n - 1):
        power = mat_mul(power, A, mode, reduce, policy)
        star = mat_add(star, power, mode)

    # cycles of length 1..n show up on the diagonal of A* ⊗ A
    diagonal = np.diagonal(mat_mul(star, A, mode, reduce, policy).a)
    if mode is AlgebraMode.MIN:
        cycle = bool((diagonal < 0).any())
    else:
        cycle = bool((diagonal > 0).any())
    if cycle:
        logger.warning("closure of %dx%d matrix has a cycle improving on the identity", n, n)
    logger.debug("closure computed for %dx%d matrix (mode=%s)", n, n, mode.value)
    return ClosureResult(star, cycle)
