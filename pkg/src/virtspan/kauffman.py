"""Kauffman bracket state sum, per-state weights and the KMT bound."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .diagram import Diagram, State, component_counts, splice, iter_states, state_all_A, state_all_B
from .laurent import DELTA, ONE, LaurentPoly, ZERO, span

DEFAULT_MAX_CROSSINGS = 24


class CrossingLimitError(ValueError):
    """The state sum would exceed the configured number of real crossings."""

    def __init__(self, c: int, limit: int):
        super().__init__(
            f"diagram has {c} real crossings, above the limit of {limit} "
            f"(2^{c} states); raise max_crossings to evaluate it"
        )
        self.c = c
        self.limit = limit


@dataclass(frozen=True)
class StateWeight:
    alpha: int
    beta: int
    components: int
    weight: LaurentPoly


def _loop_power(k: int, cache: dict[int, LaurentPoly] = {0: ONE}) -> LaurentPoly:
    if k not in cache:
        cache[k] = _loop_power(k - 1) * DELTA
    return cache[k]


def weight_polynomial(alpha: int, beta: int, components: int) -> LaurentPoly:
    """``A^(alpha-beta) * (-A^2 - A^-2)^(components-1)``."""
    return _loop_power(components - 1).shift(alpha - beta)


def state_weight(D: Diagram, s: State) -> StateWeight:
    k = splice(D, s).component_count
    return StateWeight(s.alpha, s.beta, k, weight_polynomial(s.alpha, s.beta, k))


def _check_limit(D: Diagram, max_crossings: int) -> None:
    if D.c > max_crossings:
        raise CrossingLimitError(D.c, max_crossings)


def bracket(D: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Sum of the weights of all ``2**c`` states of ``D``.

    States are enumerated in full; their curve counts are computed in
    vectorised batches and the weights are then summed exactly, grouped by
    ``(alpha - beta, #D(s))``.
    """
    _check_limit(D, max_crossings)
    c = D.c
    counts = component_counts(D)
    idx = np.arange(1 << c, dtype=np.int64)
    betas = np.zeros(len(idx), dtype=np.int64)
    for b in range(c):
        betas += (idx >> b) & 1
    keys = Counter(zip((c - 2 * betas).tolist(), counts.tolist()))
    total = ZERO
    for (shift, k), mult in sorted(keys.items()):
        total = total + _loop_power(k - 1).shift(shift) * mult
    return total


def bracket_by_walk(D: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """The same state sum, one :func:`splice` walk per state (slow reference)."""
    _check_limit(D, max_crossings)
    total = ZERO
    for s in iter_states(D):
        total = total + state_weight(D, s).weight
    return total


def span_bracket(D: Diagram, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> int:
    return span(bracket(D, max_crossings))


def max_degree_weight(D: Diagram, s: State) -> int:
    """Top exponent of ``<D/s>`` from ``alpha - beta + 2(#D(s) - 1)``."""
    k = splice(D, s).component_count
    return s.alpha - s.beta + 2 * (k - 1)


def min_degree_weight(D: Diagram, s: State) -> int:
    k = splice(D, s).component_count
    return s.alpha - s.beta - 2 * (k - 1)


def kmt_bound(D: Diagram) -> int:
    """``4c(D) + 2(chi(D) - 2)``."""
    from .adequacy import euler_characteristic

    return 4 * D.c + 2 * (euler_characteristic(D) - 2)


def extreme_state_bound(D: Diagram) -> int:
    """Top degree of ``<D/s_A>`` minus bottom degree of ``<D/s_B>``."""
    return max_degree_weight(D, state_all_A(D)) - min_degree_weight(D, state_all_B(D))


__all__ = [
    "CrossingLimitError",
    "DEFAULT_MAX_CROSSINGS",
    "StateWeight",
    "bracket",
    "bracket_by_walk",
    "extreme_state_bound",
    "kmt_bound",
    "max_degree_weight",
    "min_degree_weight",
    "span_bracket",
    "state_weight",
    "weight_polynomial",
]
