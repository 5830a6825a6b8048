"""Set functions in one-to-one correspondence with a bba, and betP."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .frame import Frame, MassFunction, Subset, SubsetLike


def belief(m: MassFunction, x: SubsetLike) -> float:
    """Credibility: total mass of the non-empty subsets of ``x``."""
    xb = m.frame.coerce(x).bits
    return math.fsum(v for b, v in m.items() if b and b & ~xb == 0)


def plausibility(m: MassFunction, x: SubsetLike) -> float:
    """Total mass of the focal elements intersecting ``x``."""
    xb = m.frame.coerce(x).bits
    return math.fsum(v for b, v in m.items() if b & xb)


def commonality(m: MassFunction, x: SubsetLike) -> float:
    """Total mass of the supersets of ``x``."""
    xb = m.frame.coerce(x).bits
    return math.fsum(v for b, v in m.items() if xb & ~b == 0)


@dataclass(frozen=True)
class PignisticDistribution:
    """betP restricted to singletons.

    ``probabilities[i]`` is betP of the ``i``-th label.  The values sum to
    ``1 - m(∅)``; mass on the empty set is not redistributed.
    """

    frame: Frame
    probabilities: tuple[float, ...]
    empty_mass: float = 0.0

    def __getitem__(self, x: SubsetLike) -> float:
        return self.measure(x)

    def measure(self, x: SubsetLike) -> float:
        """betP of an arbitrary subset, by additivity over its singletons."""
        xb = self.frame.coerce(x).bits
        return math.fsum(p for i, p in enumerate(self.probabilities) if xb >> i & 1)

    def argmax(self, tol: float = 1e-12) -> Subset:
        """Most probable singleton; ties go to the first label."""
        best = max(self.probabilities)
        for i, p in enumerate(self.probabilities):
            if p >= best - tol:
                return self.frame.singleton(i)
        raise AssertionError("unreachable")

    def to_bba(self) -> MassFunction:
        """The Bayesian bba with these singleton masses (∅ keeps its mass)."""
        assign = [(1 << i, p) for i, p in enumerate(self.probabilities)]
        if self.empty_mass:
            assign.append((0, self.empty_mass))
        return MassFunction(self.frame, assign)

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.frame.labels, self.probabilities))


def pignistic(m: MassFunction) -> PignisticDistribution:
    if m.empty_mass >= 1.0 - 1e-12:
        raise DomainError("pignistic probability is undefined when all mass is on the empty set")
    n = m.frame.size
    shares: list[list[float]] = [[] for _ in range(n)]
    for b, v in m.items():
        if not b:
            continue
        part = v / b.bit_count()
        for i in range(n):
            if b >> i & 1:
                shares[i].append(part)
    probs = tuple(math.fsum(s) for s in shares)
    return PignisticDistribution(m.frame, probs, m.empty_mass)
