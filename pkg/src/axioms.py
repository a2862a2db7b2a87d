# -*- coding: utf-8 -*-
"""
Machine check of the semiring laws for the neutrosophic tropical algebra.

Every trial draws a triple (u, v, w) and evaluates all ten laws on it:

- add_commutativity    : u ⊕ v = v ⊕ u
- add_associativity    : (u ⊕ v) ⊕ w = u ⊕ (v ⊕ w)
- add_idempotency      : u ⊕ u = u
- add_identity         : 0 ⊕ u = u
- mul_commutativity    : u ⊗ v = v ⊗ u
- mul_associativity    : (u ⊗ v) ⊗ w = u ⊗ (v ⊗ w)
- mul_identity         : u ⊗ 1 = u
- left_distributivity  : u ⊗ (v ⊕ w) = (u ⊗ v) ⊕ (u ⊗ w)
- right_distributivity : (v ⊕ w) ⊗ u = (v ⊗ u) ⊕ (w ⊗ u)
- annihilation         : u ⊗ 0 = 0

Here 0 is the additive identity of the mode and 1 is 0+0I. Equality is exact;
components are integer valued so min, max and + on floats are exact.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import partial

import numpy as np

from config import (
    DEFAULT_RANGE,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    INFINITY_PROBABILITY,
    LAW_NAMES,
)
from src.algebra import (
    NEG_INF,
    POS_INF,
    AlgebraMode,
    InfinityPolicy,
    NeutrosophicNumber,
    additive_identity,
    multiplicative_identity,
    pv_add,
    pv_mul,
)
from src.errors import DomainError
from src.formatting import format_nn

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AxiomConfig:
    """
    Parameters of one axiom-check run.

    Parameters
    ----------
    mode               : AlgebraMode selecting ⊕ or ⊕′
    sample_count       : number of sampled triples (trials per law)
    seed               : 64-bit unsigned seed of the generator
    component_range    : inclusive (low, high) integer interval for components
    include_infinities : also draw -inf / +inf, each with probability 1/16
    infinity_policy    : InfinityPolicy passed to ⊗
    """

    mode: AlgebraMode = AlgebraMode.MIN
    sample_count: int = DEFAULT_SAMPLES
    seed: int = DEFAULT_SEED
    component_range: tuple = DEFAULT_RANGE
    include_infinities: bool = False
    infinity_policy: InfinityPolicy = InfinityPolicy.RESOLVE

    def __post_init__(self):
        low, high = self.component_range
        if self.sample_count < 1:
            raise ValueError(f"sample_count must be >= 1, got {self.sample_count}")
        if low > high:
            raise ValueError(f"component range is empty: [{low}, {high}]")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        object.__setattr__(self, 'component_range', (int(low), int(high)))


@dataclass(frozen=True)
class Counterexample:
    operands: tuple
    expected: object   # NeutrosophicNumber
    actual: object     # NeutrosophicNumber, or the error text of a rejected trial

    def to_dict(self):
        return {
            'operands': [format_nn(x) for x in self.operands],
            'expected': _render(self.expected),
            'actual': _render(self.actual),
        }


@dataclass(frozen=True)
class LawResult:
    name: str
    trials: int
    failures: int
    counterexample: Counterexample = None

    @property
    def passed(self):
        return self.failures == 0


@dataclass(frozen=True)
class AxiomReport:
    """Per-law outcome of check_axioms, in LAW_NAMES order."""

    config: AxiomConfig
    laws: tuple = field(default_factory=tuple)

    @property
    def passed(self):
        return all(law.passed for law in self.laws)

    @property
    def total_failures(self):
        return sum(law.failures for law in self.laws)

    def law(self, name):
        for result in self.laws:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_text(self):
        """One line per law (name trials failures), then the verdict; counterexamples as comments."""
        lines = [f"{law.name} {law.trials} {law.failures}" for law in self.laws]
        lines.append(f"overall {'PASS' if self.passed else 'FAIL'}")
        for law in self.laws:
            if law.counterexample is not None:
                cx = law.counterexample.to_dict()
                lines.append(
                    f"# {law.name}: operands {' '.join(cx['operands'])}"
                    f" expected {cx['expected']} actual {cx['actual']}"
                )
        return "\n".join(lines) + "\n"

    def to_dict(self):
        low, high = self.config.component_range
        return {
            'config': {
                'mode': self.config.mode.value,
                'sample_count': self.config.sample_count,
                'seed': self.config.seed,
                'component_range': [low, high],
                'include_infinities': self.config.include_infinities,
                'infinity_policy': self.config.infinity_policy.value,
            },
            'passed': self.passed,
            'laws': [
                {
                    'name': law.name,
                    'trials': law.trials,
                    'failures': law.failures,
                    'counterexample': (
                        law.counterexample.to_dict() if law.counterexample else None
                    ),
                }
                for law in self.laws
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _render(value):
    if isinstance(value, NeutrosophicNumber):
        return format_nn(value)
    return str(value)


def _sample_component(low, high, include_infinities, rng):
    if include_infinities:
        u = rng.random()
        if u < INFINITY_PROBABILITY:
            return NEG_INF
        if u < 2 * INFINITY_PROBABILITY:
            return POS_INF
    return float(rng.integers(low, high, endpoint=True))


def sample_nn(component_range, include_infinities, rng):
    """
    Draw one neutrosophic number.

    Parameters
    ----------
    component_range    : inclusive (low, high) integer interval
    include_infinities : draw -inf and +inf with probability 1/16 each
    rng                : numpy.random.Generator, advanced in place

    Returns
    -------
    NeutrosophicNumber
    """
    low, high = component_range
    a = _sample_component(low, high, include_infinities, rng)
    b = _sample_component(low, high, include_infinities, rng)
    return NeutrosophicNumber(a, b)


def _law_table(add, mul, zero, one):
    """law name -> function (u, v, w) -> (expected, actual)."""
    return {
        'add_commutativity': lambda u, v, w: (add(u, v), add(v, u)),
        'add_associativity': lambda u, v, w: (add(add(u, v), w), add(u, add(v, w))),
        'add_idempotency': lambda u, v, w: (u, add(u, u)),
        'add_identity': lambda u, v, w: (u, add(zero, u)),
        'mul_commutativity': lambda u, v, w: (mul(u, v), mul(v, u)),
        'mul_associativity': lambda u, v, w: (mul(mul(u, v), w), mul(u, mul(v, w))),
        'mul_identity': lambda u, v, w: (u, mul(u, one)),
        'left_distributivity': lambda u, v, w: (mul(u, add(v, w)), add(mul(u, v), mul(u, w))),
        'right_distributivity': lambda u, v, w: (mul(add(v, w), u), add(mul(v, u), mul(w, u))),
        'annihilation': lambda u, v, w: (zero, mul(u, zero)),
    }


def check_axioms(config, add_op=None):
    """
    Evaluate every law on config.sample_count sampled triples.

    Parameters
    ----------
    config : AxiomConfig
    add_op : optional replacement for ⊕ (test hook, e.g. classical addition)

    Returns
    -------
    AxiomReport with one LawResult per law, in LAW_NAMES order.
    """
    mode = config.mode
    add = add_op if add_op is not None else partial(pv_add, mode=mode)
    mul = partial(pv_mul, mode=mode, policy=config.infinity_policy)
    laws = _law_table(add, mul, additive_identity(mode), multiplicative_identity())

    rng = np.random.default_rng(config.seed)
    failures = {name: 0 for name in LAW_NAMES}
    first = {}

    logger.info(
        "Checking %d laws on %d triples (mode=%s, seed=%d, range=%s, infinities=%s)",
        len(LAW_NAMES), config.sample_count, mode.value, config.seed,
        config.component_range, config.include_infinities,
    )

    for _ in range(config.sample_count):
        triple = tuple(
            sample_nn(config.component_range, config.include_infinities, rng)
            for _ in range(3)
        )
        for name in LAW_NAMES:
            try:
                expected, actual = laws[name](*triple)
            except DomainError as exc:
                expected, actual = None, f"DomainError: {exc}"
            if expected is not None and expected == actual:
                continue
            failures[name] += 1
            if name not in first:
                first[name] = Counterexample(triple, expected, actual)

    results = tuple(
        LawResult(name, config.sample_count, failures[name], first.get(name))
        for name in LAW_NAMES
    )
    report = AxiomReport(config, results)
    if report.passed:
        logger.info("All laws hold")
    else:
        logger.info("%d law violations found", report.total_failures)
    return report
