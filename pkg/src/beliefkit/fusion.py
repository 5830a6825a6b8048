"""Binary combination rules and the rule-specificity comparison."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Callable, Iterable, Optional, Sequence

from .errors import BeliefError, DomainError, TotalConflictError, ValidationError
from .frame import EPSILON, MassFunction, Subset, same_frame
from . import metrics


class Rule(str, enum.Enum):
    CONJUNCTIVE = "conjunctive"
    DEMPSTER = "dempster"
    YAGER = "yager"
    DISJUNCTIVE = "disjunctive"
    DUBOIS_PRADE = "dubois-prade"
    PCR5 = "pcr5"

    @classmethod
    def parse(cls, value) -> Rule:
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {"dp": "dubois-prade", "duboisprade": "dubois-prade", "pcr": "pcr5",
                   "ds": "dempster", "conj": "conjunctive", "dis": "disjunctive"}
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            names = ", ".join(r.value for r in cls)
            raise ValidationError(f"unknown rule {value!r} (choose from {names})") from None


def _products(m1: MassFunction, m2: MassFunction):
    for a, u in m1.items():
        for b, v in m2.items():
            yield a, b, u * v


def _build(frame, acc: dict[int, float]) -> MassFunction:
    return MassFunction(frame, acc.items())


def _require_normal(rule: str, *bbas: MassFunction) -> None:
    for m in bbas:
        if m.empty_mass > 0.0:
            raise DomainError(f"the {rule} rule requires inputs with m(∅) = 0")


def conjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Unnormalized conjunctive rule; conflict stays on ∅."""
    frame = same_frame(m1, m2)
    acc: dict[int, float] = {}
    for a, b, p in _products(m1, m2):
        acc[a & b] = acc.get(a & b, 0.0) + p
    return _build(frame, acc)


def dempster(m1: MassFunction, m2: MassFunction) -> MassFunction:
    frame = same_frame(m1, m2)
    mc = conjunctive(m1, m2)
    k = mc.empty_mass
    if k >= 1.0 - EPSILON:
        raise TotalConflictError(f"total conflict (k = {k:.6g}): Dempster's rule is undefined")
    return _build(frame, {b: v / (1.0 - k) for b, v in mc.items() if b})


def yager(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive rule with the conflict moved to the whole frame."""
    _require_normal("Yager", m1, m2)
    frame = same_frame(m1, m2)
    acc = conjunctive(m1, m2).masses
    k = acc.pop(0, 0.0)
    if k:
        acc[frame.full_bits] = acc.get(frame.full_bits, 0.0) + k
    return _build(frame, acc)


def disjunctive(m1: MassFunction, m2: MassFunction) -> MassFunction:
    _require_normal("disjunctive", m1, m2)
    frame = same_frame(m1, m2)
    acc: dict[int, float] = {}
    for a, b, p in _products(m1, m2):
        acc[a | b] = acc.get(a | b, 0.0) + p
    return _build(frame, acc)


def dubois_prade(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Conjunctive where focal pairs intersect, disjunctive where they do not."""
    _require_normal("Dubois-Prade", m1, m2)
    frame = same_frame(m1, m2)
    acc: dict[int, float] = {}
    for a, b, p in _products(m1, m2):
        x = a & b or a | b
        acc[x] = acc.get(x, 0.0) + p
    return _build(frame, acc)


def pcr5(m1: MassFunction, m2: MassFunction) -> MassFunction:
    """Proportional conflict redistribution for two sources.

    Each conflicting product ``m1(X) m2(Y)`` with ``X ∩ Y = ∅`` goes back
    to ``X`` and ``Y`` in proportion to ``m1(X)`` and ``m2(Y)``.
    """
    _require_normal("PCR5", m1, m2)
    frame = same_frame(m1, m2)
    acc: dict[int, float] = {}
    for a, b, p in _products(m1, m2):
        x = a & b
        if x:
            acc[x] = acc.get(x, 0.0) + p
            continue
        u, v = m1.mass_bits(a), m2.mass_bits(b)
        s = u + v
        if s > 0.0:
            acc[a] = acc.get(a, 0.0) + u * p / s
            acc[b] = acc.get(b, 0.0) + v * p / s
    return _build(frame, acc)


RULES: dict[Rule, Callable[[MassFunction, MassFunction], MassFunction]] = {
    Rule.CONJUNCTIVE: conjunctive,
    Rule.DEMPSTER: dempster,
    Rule.YAGER: yager,
    Rule.DISJUNCTIVE: disjunctive,
    Rule.DUBOIS_PRADE: dubois_prade,
    Rule.PCR5: pcr5,
}

#: Rules whose n-ary fold does not depend on the input order.
ASSOCIATIVE_RULES = frozenset({Rule.CONJUNCTIVE, Rule.DISJUNCTIVE, Rule.DEMPSTER})


def combine(rule, m1: MassFunction, m2: MassFunction) -> MassFunction:
    return RULES[Rule.parse(rule)](m1, m2)


def combine_many(rule, bbas: Sequence[MassFunction]) -> MassFunction:
    """Left fold of a binary rule over ``bbas``.

    Yager, Dubois-Prade and PCR5 are not associative, so with three or
    more inputs the result depends on the list order.
    """
    if not bbas:
        raise ValidationError("nothing to combine")
    same_frame(*bbas)
    fn = RULES[Rule.parse(rule)]
    return reduce(fn, bbas[1:], bbas[0])


@dataclass(frozen=True)
class RuleSpecificityRow:
    """One column of a rule-comparison table (an input bba or a rule output)."""

    label: str
    rule: Optional[Rule]
    combined: Optional[MassFunction]
    x_max_1: Optional[Subset] = None
    x_max_2: Optional[Subset] = None
    specificity_1: Optional[float] = None
    specificity_2: Optional[float] = None
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.error is not None


def _row(label, rule, m) -> RuleSpecificityRow:
    try:
        return RuleSpecificityRow(
            label, rule, m,
            metrics.most_specific_bba(m, metrics.Approach.FOCAL_RATIO).x_max,
            metrics.most_specific_bba(m, metrics.Approach.PIGNISTIC).x_max,
            metrics.degree_specificity(m, metrics.Approach.FOCAL_RATIO),
            metrics.degree_specificity(m, metrics.Approach.PIGNISTIC),
        )
    except DomainError as exc:
        return RuleSpecificityRow(label, rule, m, error=str(exc))


def rule_specificity_report(
    m1: MassFunction,
    m2: MassFunction,
    rules: Iterable = tuple(Rule),
) -> list[RuleSpecificityRow]:
    """Degree of specificity of two inputs and of each rule's output.

    A rule that fails (Dempster under total conflict, say) produces a row
    with ``error`` set instead of aborting the report.
    """
    same_frame(m1, m2)
    rows = [_row("m1", None, m1), _row("m2", None, m2)]
    for rule in rules:
        rule = Rule.parse(rule)
        try:
            out = RULES[rule](m1, m2)
        except BeliefError as exc:
            rows.append(RuleSpecificityRow(rule.value, rule, None, error=str(exc)))
            continue
        rows.append(_row(rule.value, rule, out))
    return rows
