"""Generator functions of quasi-linear means.

Only the two classified families are representable: affine generators
``-c*(x + shift)`` and exponential ones ``(2**(kappa*(x + shift)) - 1)/gamma``.
These exhaust the generators compatible with product additivity, and keeping
to them makes every inverse exact.  The ``shift`` and the scale parameters
never change the mean (that is the affine-equivalence reduction); they exist
so that shifted generators appearing in derivations can be written down
literally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from ._stable import exact_sum
from .errors import DimensionError, DomainError, Overflow, ParameterError
from .distributions import Distribution

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class LinearGenerator:
    """g(x) = -c * (x + shift), c != 0."""

    c: float = 1.0
    shift: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.c) and math.isfinite(self.shift)):
            raise ParameterError("linear generator parameters must be finite")
        if self.c == 0.0:
            raise ParameterError("linear generator needs c != 0")

    def evaluate(self, x: float) -> float:
        return -self.c * (x + self.shift)

    def invert(self, y: float) -> float:
        return -y / self.c - self.shift


@dataclass(frozen=True)
class ExponentialGenerator:
    """g(x) = (2**(kappa*(x + shift)) - 1) / gamma, kappa != 0, gamma != 0."""

    kappa: float
    gamma: float = 1.0
    shift: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(v) for v in (self.kappa, self.gamma, self.shift)):
            raise ParameterError("exponential generator parameters must be finite")
        if self.kappa == 0.0:
            raise ParameterError("exponential generator needs kappa != 0")
        if self.gamma == 0.0:
            raise ParameterError("exponential generator needs gamma != 0")

    def evaluate(self, x: float) -> float:
        # expm1 keeps small exponents from cancelling in 2**t - 1
        try:
            grown = math.expm1(_LN2 * self.kappa * (x + self.shift))
        except OverflowError as exc:
            raise Overflow(
                f"generator exponent {self.kappa * (x + self.shift)!r} overflowed"
            ) from exc
        return grown / self.gamma

    def invert(self, y: float) -> float:
        t = self.gamma * y
        if 1.0 + t <= 0.0:
            raise DomainError(
                f"gamma*y + 1 = {1.0 + t!r} <= 0 is outside the generator range"
            )
        return math.log1p(t) / (_LN2 * self.kappa) - self.shift


Generator = Union[LinearGenerator, ExponentialGenerator]


def quasi_mean(
    generator: Generator, weights: Distribution, values: Sequence[float]
) -> float:
    """Quasi-linear mean g^{-1}(sum_k w_k g(v_k)).

    Terms with weight exactly 0 are skipped, so their values may be
    placeholders.  The result lies between the smallest and largest value
    carrying positive weight (up to rounding).
    """
    if len(weights) != len(values):
        raise DimensionError(
            f"{len(weights)} weights for {len(values)} values"
        )
    acc = exact_sum(
        w * generator.evaluate(v) for w, v in zip(weights.probs, values) if w > 0.0
    )
    return generator.invert(acc)
