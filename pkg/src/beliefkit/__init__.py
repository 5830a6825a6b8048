"""Uncertainty measures, specificity degrees and combination rules for belief functions."""

from .errors import (
    BeliefError,
    DomainError,
    NormalizationError,
    ParseError,
    TotalConflictError,
    ValidationError,
)
from .frame import EPSILON, Frame, MassFunction, Subset
from .transforms import PignisticDistribution, belief, commonality, pignistic, plausibility
from .metrics import (
    Approach,
    JaccardMatrix,
    MeasureReport,
    MostSpecificSelection,
    auto_conflict,
    confusion,
    conflict_one_vs_combined,
    conflict_one_vs_each,
    conflict_pair,
    contradiction,
    contradiction_of_element,
    degree_bayesianity,
    degree_non_specificity,
    degree_specificity,
    discord,
    dissonance,
    jaccard_matrix,
    jousselme_distance,
    measure_report,
    most_specific_bba,
    non_specificity,
    pignistic_entropy,
    yager_specificity,
)
from .fusion import (
    Rule,
    RuleSpecificityRow,
    combine,
    combine_many,
    conjunctive,
    dempster,
    disjunctive,
    dubois_prade,
    pcr5,
    rule_specificity_report,
    yager,
)
from .io import BbaDocument, format_bba, load_bba, parse_bba, save_bba

__version__ = "0.1.0"

__all__ = [
    "BeliefError",
    "DomainError",
    "NormalizationError",
    "ParseError",
    "TotalConflictError",
    "ValidationError",
    "EPSILON",
    "Frame",
    "MassFunction",
    "Subset",
    "PignisticDistribution",
    "belief",
    "commonality",
    "pignistic",
    "plausibility",
    "Approach",
    "JaccardMatrix",
    "MeasureReport",
    "MostSpecificSelection",
    "auto_conflict",
    "confusion",
    "conflict_one_vs_combined",
    "conflict_one_vs_each",
    "conflict_pair",
    "contradiction",
    "contradiction_of_element",
    "degree_bayesianity",
    "degree_non_specificity",
    "degree_specificity",
    "discord",
    "dissonance",
    "jaccard_matrix",
    "jousselme_distance",
    "measure_report",
    "most_specific_bba",
    "non_specificity",
    "pignistic_entropy",
    "yager_specificity",
    "Rule",
    "RuleSpecificityRow",
    "combine",
    "combine_many",
    "conjunctive",
    "dempster",
    "disjunctive",
    "dubois_prade",
    "pcr5",
    "rule_specificity_report",
    "yager",
    "BbaDocument",
    "format_bba",
    "load_bba",
    "parse_bba",
    "save_bba",
]
