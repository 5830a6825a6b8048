"""Scalar uncertainty measures on bbas.

Distances use the Jousselme metric, a quadratic form on mass vectors
weighted by the Jaccard index of the focal elements.  The empty set is a
regular coordinate with ``D(∅, ∅) = 1``, so conjunctive outputs carrying
conflict mass can be measured like any other bba.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ValidationError
from .frame import EPSILON, Frame, MassFunction, Subset, SubsetLike, same_frame
from .transforms import belief, pignistic, plausibility

#: Largest frame for which the dense 2^n x 2^n matrix is materialized.
MAX_DENSE_FRAME = 12

#: Default normalization constant of the contradiction measure.
DEFAULT_CONTRADICTION_C = 2.0

_TIE_TOL = 1e-12


def jaccard(a: int, b: int) -> float:
    """Jaccard index of two membership words, with ``D(∅, ∅) = 1``."""
    union = (a | b).bit_count()
    if union == 0:
        return 1.0
    return (a & b).bit_count() / union


@lru_cache(maxsize=None)
def _dense_jaccard(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    pop = np.array([i.bit_count() for i in range(1 << n)], dtype=np.float64)
    inter = pop[idx[:, None] & idx[None, :]]
    union = pop[idx[:, None] | idx[None, :]]
    with np.errstate(invalid="ignore", divide="ignore"):
        out = np.where(union > 0, inter / np.where(union > 0, union, 1.0), 1.0)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class JaccardMatrix:
    frame: Frame
    entries: np.ndarray = field(repr=False)

    def __getitem__(self, pair: tuple[SubsetLike, SubsetLike]) -> float:
        a, b = pair
        return float(self.entries[self.frame.coerce(a).bits, self.frame.coerce(b).bits])

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape


def jaccard_matrix(frame: Frame) -> JaccardMatrix:
    """Dense Jaccard similarity matrix over the whole powerset.

    Rows and columns follow the canonical subset order.  The array is
    cached per frame size and is read-only.
    """
    if frame.size > MAX_DENSE_FRAME:
        raise ValidationError(
            f"dense Jaccard matrix limited to frames of at most {MAX_DENSE_FRAME} labels"
        )
    return JaccardMatrix(frame, _dense_jaccard(frame.size))


def jousselme_distance(m1: MassFunction, m2: MassFunction) -> float:
    """Jousselme distance between two bbas, in [0, 1].

    The quadratic form only involves the union of both supports, so no
    dense matrix is built.
    """
    same_frame(m1, m2)
    keys = sorted(set(m1.masses) | set(m2.masses))
    diff = [m1.mass_bits(k) - m2.mass_bits(k) for k in keys]
    q = 0.0
    for i, a in enumerate(keys):
        da = diff[i]
        if da == 0.0:
            continue
        q += da * da
        for j in range(i + 1, len(keys)):
            db = diff[j]
            if db != 0.0:
                q += 2.0 * da * db * jaccard(a, keys[j])
    return math.sqrt(max(0.5 * q, 0.0))


def conflict_pair(m1: MassFunction, m2: MassFunction) -> float:
    """Conflict between two experts, taken as their distance."""
    return jousselme_distance(m1, m2)


def conflict_one_vs_each(i: int, bbas: Sequence[MassFunction]) -> float:
    """Mean conflict of expert ``i`` with every other expert."""
    if len(bbas) < 2:
        raise ValidationError("conflict between experts needs at least two bbas")
    same_frame(*bbas)
    terms = [conflict_pair(bbas[i], m) for j, m in enumerate(bbas) if j != i]
    return math.fsum(terms) / (len(bbas) - 1)


def conflict_one_vs_combined(i: int, bbas: Sequence[MassFunction], rule="conjunctive") -> float:
    """Distance from expert ``i`` to the combination of all the others."""
    from .fusion import combine_many

    if len(bbas) < 2:
        raise ValidationError("conflict between experts needs at least two bbas")
    same_frame(*bbas)
    others = [m for j, m in enumerate(bbas) if j != i]
    return jousselme_distance(bbas[i], combine_many(rule, others))


def auto_conflict(m: MassFunction, order: int) -> float:
    """Mass on ∅ after combining ``m`` conjunctively with itself ``order`` times."""
    from .fusion import conjunctive

    if order < 1:
        raise ValidationError("auto-conflict order must be at least 1")
    acc = m
    for _ in range(order - 1):
        acc = conjunctive(acc, m)
    return acc.empty_mass


def _require_normal(m: MassFunction, what: str) -> None:
    if m.empty_mass > EPSILON:
        raise DomainError(f"{what} requires m(∅) = 0, got m(∅) = {m.empty_mass:.6g}")


def non_specificity(m: MassFunction) -> float:
    """Weighted Hartley measure, in bits."""
    _require_normal(m, "non-specificity")
    return math.fsum(v * math.log2(b.bit_count()) for b, v in m.items() if b)


def yager_specificity(m: MassFunction) -> float:
    _require_normal(m, "Yager specificity")
    return math.fsum(v / b.bit_count() for b, v in m.items() if b)


def dissonance(m: MassFunction) -> float:
    """E(m): mass-weighted ``-log2 pl`` over the focal elements."""
    _require_normal(m, "dissonance")
    return -math.fsum(v * math.log2(plausibility(m, b)) for b, v in m.items() if b)


def confusion(m: MassFunction) -> float:
    """C(m): mass-weighted ``-log2 bel`` over the focal elements."""
    _require_normal(m, "confusion")
    return -math.fsum(v * math.log2(belief(m, b)) for b, v in m.items() if b)


def discord(m: MassFunction) -> float:
    """D(m): mass-weighted ``-log2 betP`` over the focal elements."""
    _require_normal(m, "discord")
    bet = pignistic(m)
    return -math.fsum(v * math.log2(bet.measure(b)) for b, v in m.items() if b)


def pignistic_entropy(m: MassFunction) -> float:
    _require_normal(m, "pignistic entropy")
    return -math.fsum(p * math.log2(p) for p in pignistic(m).probabilities if p > 0.0)


def contradiction_of_element(m: MassFunction, x: SubsetLike) -> float:
    return jousselme_distance(m, MassFunction.categorical(m.frame, x))


def contradiction(m: MassFunction, c: float = DEFAULT_CONTRADICTION_C) -> float:
    """How much ``m`` contradicts itself.

    ``c`` times the mass-weighted distance from ``m`` to the categorical
    bba of each of its focal elements.  With ``c = 2`` the value lies in
    [0, 1] on two-element frames; larger frames can exceed 1.
    """
    if c <= 0:
        raise ValidationError("contradiction constant must be positive")
    return c * math.fsum(v * contradiction_of_element(m, b) for b, v in m.items())


def degree_non_specificity(m: MassFunction) -> float:
    """Non-specificity rescaled to [0, 1] by ``log2 |Θ|``."""
    n = m.frame.size
    if n < 2:
        raise DomainError("degree of non-specificity needs a frame of at least two labels")
    _require_normal(m, "degree of non-specificity")
    return math.fsum(v * math.log(b.bit_count(), n) for b, v in m.items() if b)


def degree_bayesianity(m: MassFunction) -> float:
    return 1.0 - degree_non_specificity(m)


class Approach(enum.IntEnum):
    """How the most specific categorical bba is chosen."""

    FOCAL_RATIO = 1
    PIGNISTIC = 2


@dataclass(frozen=True)
class MostSpecificSelection:
    x_max: Subset
    approach: Approach
    tie_broken: bool = False


def _focal_ratio_argmax(m: MassFunction) -> tuple[int, bool]:
    # rank: larger m(X)/|X|, then smaller |X|, then smaller index
    best = None
    tied = False
    for b, v in m.items():
        if not b:
            continue
        r = v / b.bit_count()
        if best is None or r > best[0] + _TIE_TOL:
            best, tied = (r, b), False
        elif abs(r - best[0]) <= _TIE_TOL:
            tied = True
            if b.bit_count() < best[1].bit_count():
                best = (max(r, best[0]), b)
    if best is None:
        raise DomainError("no non-empty focal element: the most specific bba is undefined")
    return best[1], tied


def most_specific_bba(m: MassFunction, approach: Approach = Approach.FOCAL_RATIO) -> MostSpecificSelection:
    """Pick ``X_max``, the focal set of the most specific categorical bba.

    FOCAL_RATIO maximizes ``m(X)/|X|`` over non-empty focal elements and
    breaks ties toward smaller cardinality, then canonical order.
    PIGNISTIC takes the singleton with the largest betP, ties in canonical
    order.
    """
    approach = Approach(approach)
    if approach is Approach.FOCAL_RATIO:
        bits, tied = _focal_ratio_argmax(m)
        return MostSpecificSelection(Subset(m.frame, bits), approach, tied)
    if m.empty_mass >= 1.0 - EPSILON:
        raise DomainError("no non-empty focal element: the most specific bba is undefined")
    bet = pignistic(m)
    top = max(bet.probabilities)
    tied = sum(1 for p in bet.probabilities if p >= top - _TIE_TOL) > 1
    return MostSpecificSelection(bet.argmax(_TIE_TOL), approach, tied)


MEASURE_ON_CHOICES = ("auto", "original", "pignistic")


def degree_specificity(
    m: MassFunction,
    approach: Approach = Approach.FOCAL_RATIO,
    measure_on: str = "auto",
) -> float:
    """One minus the distance between a bba and its most specific categorical bba.

    ``measure_on`` only matters for the pignistic approach and says which
    bba is compared with ``m_s``:

    ``"original"``
        ``m`` itself.
    ``"pignistic"``
        the Bayesian bba given by betP (mass on ∅ kept on ∅).
    ``"auto"`` (default)
        ``m`` when both approaches select the same ``X_max``, so that the two
        degrees coincide; the betP bba otherwise.  This reproduces the
        published rule-comparison tables.
    """
    approach = Approach(approach)
    if measure_on not in MEASURE_ON_CHOICES:
        raise ValidationError(f"measure_on must be one of {MEASURE_ON_CHOICES}")
    sel = most_specific_bba(m, approach)
    target = m
    if approach is Approach.PIGNISTIC and measure_on != "original":
        if measure_on == "pignistic" or sel.x_max != most_specific_bba(m).x_max:
            target = pignistic(m).to_bba()
    d = jousselme_distance(target, MassFunction.categorical(m.frame, sel.x_max))
    return 1.0 - d


#: Display names of the report columns, in output order.
REPORT_COLUMNS = {
    "non_specificity": "NS",
    "yager_specificity": "S",
    "dissonance": "E",
    "confusion": "C",
    "discord": "D",
    "pignistic_entropy": "H_betP",
    "contradiction": "Contr",
    "degree_non_specificity": "dNS",
    "degree_bayesianity": "dB",
    "degree_specificity_1": "dS1",
    "degree_specificity_2": "dS2",
}


@dataclass(frozen=True)
class MeasureReport:
    """Every scalar measure of one bba.

    A measure whose precondition fails is ``None`` and the reason is kept
    in ``reasons`` under the same field name.
    """

    non_specificity: Optional[float]
    yager_specificity: Optional[float]
    dissonance: Optional[float]
    confusion: Optional[float]
    discord: Optional[float]
    pignistic_entropy: Optional[float]
    contradiction: Optional[float]
    degree_non_specificity: Optional[float]
    degree_bayesianity: Optional[float]
    degree_specificity_1: Optional[float]
    degree_specificity_2: Optional[float]
    is_bayesian: bool
    reasons: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in REPORT_COLUMNS}


def measure_report(m: MassFunction, c: float = DEFAULT_CONTRADICTION_C) -> MeasureReport:
    funcs = {
        "non_specificity": non_specificity,
        "yager_specificity": yager_specificity,
        "dissonance": dissonance,
        "confusion": confusion,
        "discord": discord,
        "pignistic_entropy": pignistic_entropy,
        "contradiction": lambda x: contradiction(x, c),
        "degree_non_specificity": degree_non_specificity,
        "degree_bayesianity": degree_bayesianity,
        "degree_specificity_1": lambda x: degree_specificity(x, Approach.FOCAL_RATIO),
        "degree_specificity_2": lambda x: degree_specificity(x, Approach.PIGNISTIC),
    }
    values = {}
    reasons = {}
    for name, fn in funcs.items():
        try:
            values[name] = fn(m)
        except DomainError as exc:
            values[name] = None
            reasons[name] = str(exc)
    return MeasureReport(**values, is_bayesian=m.is_bayesian, reasons=reasons)
