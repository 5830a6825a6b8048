"""Published worked examples, recomputed from scratch and compared cell by cell.

Mass cells are checked to 0.005.  Degrees printed with three or four
decimals are checked to 0.0005, two-decimal ones to 0.005.
Most-specific-bba cells must match exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from .frame import Frame, MassFunction
from . import metrics
from .metrics import Approach
from .fusion import Rule, RULES

THETA3 = Frame(["θ1", "θ2", "θ3"])
THETA4 = Frame(["θ1", "θ2", "θ3", "θ4"])

MASS_TOL = 0.005


def bba(spec: dict[str, float], frame: Frame = THETA3) -> MassFunction:
    return MassFunction(frame, spec)


@dataclass(frozen=True)
class Check:
    section: str
    item: str
    expected: Union[float, str]
    computed: Union[float, str, None]
    tol: Optional[float] = None  # None means exact match

    @property
    def ok(self) -> bool:
        if self.computed is None:
            return False
        if self.tol is None:
            return self.expected == self.computed
        return abs(self.computed - self.expected) <= self.tol + 1e-12

    def describe(self) -> str:
        if self.tol is None:
            return f"{self.section} / {self.item}: expected {self.expected}, computed {self.computed}"
        return (
            f"{self.section} / {self.item}: expected {self.expected} ± {self.tol}, "
            f"computed {self.computed:.6f} (off by {abs(self.computed - self.expected):.6f})"
        )


# -- contradiction illustration ---------------------------------------------

CONTRADICTION_BBAS = {
    "m1": bba({"θ1": 0.5, "θ2": 0.5}),
    "m2": bba({"θ1": 0.6, "θ2": 0.3, "θ3": 0.1}),
    "m3": bba({"θ1|θ2|θ3": 0.6, "θ2": 0.3, "θ3": 0.1}),
    "m4": bba({"θ1|θ2": 0.6, "θ1|θ3": 0.3, "θ2|θ3": 0.1}),
}
# name -> (expected total, tolerance)
CONTRADICTION_TOTALS = {"m1": (1.0, 1e-9), "m2": (0.9849, 0.0005), "m3": (0.8092, 0.0005), "m4": (0.80, 0.005)}
CONTRADICTION_ELEMENTS = {
    "m2": {"θ1": 0.36, "θ2": 0.66, "θ3": 0.79},
    "m3": {"θ1|θ2|θ3": 0.28, "θ2": 0.56, "θ3": 0.71},
    "m4": {"θ1|θ2": 0.29, "θ1|θ3": 0.53, "θ2|θ3": 0.65},
}

# -- Table I ------------------------------------------------------------------

TABLE1_BBAS = {
    "m1": bba({"θ1": 0.4, "θ2": 0.1, "θ3": 0.1, "θ1|θ2": 0.3, "θ1|θ3": 0.1}),
    "m2": bba({"θ1": 0.3, "θ2": 0.1, "θ3": 0.1, "θ1|θ2": 0.3, "θ1|θ3": 0.2}),
    "m3": bba({"θ1": 0.1, "θ2": 0.3, "θ3": 0.1, "θ1|θ2": 0.5}),
    "m4": bba({"θ1": 0.3, "θ2": 0.1, "θ3": 0.1, "θ1|θ2|θ3": 0.5}),
    "m5": bba({"θ1|θ2": 0.6, "θ1|θ3": 0.4}),
    "m6": bba({"θ1|θ2": 0.6, "θ1|θ2|θ3": 0.4}),
    "mΘ": bba({"θ1|θ2|θ3": 1.0}),
}
TABLE1_BAYESIANITY = {"m1": 0.75, "m2": 0.68, "m3": 0.68, "m4": 0.5, "m5": 0.37, "m6": 0.23, "mΘ": 0.0}
TABLE1_NON_SPECIFICITY = {"m1": 0.25, "m2": 0.32, "m3": 0.32, "m4": 0.5, "m5": 0.63, "m6": 0.77, "mΘ": 1.0}
TABLE1_M1_ON_FOUR = 0.80

# -- Table II -----------------------------------------------------------------

TABLE2 = [
    ("m1", (1 / 3, 1 / 3, 1 / 3), 0.423),
    ("m2", (0.4, 0.4, 0.2), 0.471),
    ("m3", (0.45, 0.45, 0.10), 0.493),
    ("m4", (0.45, 0.40, 0.15), 0.508),
    ("m5", (0.45, 0.3, 0.25), 0.523),
    ("m6", (0.45, 0.275, 0.275), 0.524),
    ("m7", (0.6, 0.3, 0.1), 0.639),
    ("m8", (1.0, 0.0, 0.0), 1.0),
]


def bayesian(probs, frame: Frame = THETA3) -> MassFunction:
    return MassFunction(frame, ((1 << i, p) for i, p in enumerate(probs) if p))


# -- non-Bayesian degree of specificity examples --------------------------------

SPECIFICITY_EXAMPLES = [
    # name, bba, approach, expected, X_max
    ("m1", bba({"θ1": 0.6, "θ1|θ2": 0.4}), Approach.FOCAL_RATIO, 0.7172, "θ1"),
    ("m1", bba({"θ1": 0.6, "θ1|θ2": 0.4}), Approach.PIGNISTIC, 0.7172, "θ1"),
    ("m2", bba({"θ1": 0.5, "θ1|θ2": 0.5}), Approach.FOCAL_RATIO, 0.6465, "θ1"),
    ("m2", bba({"θ1": 0.5, "θ1|θ2": 0.5}), Approach.PIGNISTIC, 0.6465, "θ1"),
    ("m3", bba({"θ1": 0.5, "θ2": 0.5}), Approach.FOCAL_RATIO, 0.5, "θ1"),
    ("m4", bba({"θ1": 0.6, "θ1|θ2|θ3": 0.4}), Approach.FOCAL_RATIO, 0.6734, "θ1"),
    ("m4", bba({"θ1": 0.6, "θ1|θ2|θ3": 0.4}), Approach.PIGNISTIC, 0.6734, "θ1"),
    ("m5", bba({"θ1|θ2": 0.7, "θ1|θ3": 0.3}), Approach.FOCAL_RATIO, 0.755, "θ1|θ2"),
    ("m5", bba({"θ1|θ2": 0.7, "θ1|θ3": 0.3}), Approach.PIGNISTIC, 0.111, "θ1"),
]

COUNTEREXAMPLE_BBAS = [
    ("uniform", bayesian((1 / 3, 1 / 3, 1 / 3)), 0.423),
    ("half-half", bayesian((0.5, 0.5, 0.0)), 0.5),
    ("certain", bayesian((1.0, 0.0, 0.0)), 1.0),
]

# -- Tables III and IV ----------------------------------------------------------

FUSION_COLUMNS = ("m1", "m2", "conjunctive", "dempster", "yager", "disjunctive", "dubois-prade", "pcr5")
FUSION_ROWS = ("{}", "θ1", "θ2", "θ3", "θ1|θ2", "θ1|θ3", "θ2|θ3", "θ1|θ2|θ3")


@dataclass(frozen=True)
class FusionTable:
    title: str
    m1: MassFunction
    m2: MassFunction
    masses: dict[str, tuple[float, ...]]  # row subset -> one value per column
    ms1: tuple[str, ...]
    ms2: tuple[str, ...]
    ds1: tuple[float, ...]
    ds2: tuple[float, ...]


TABLE3 = FusionTable(
    "Table III",
    bba({"θ1": 0.6, "θ2": 0.1, "θ3": 0.3}),
    bba({"θ1": 0.2, "θ2": 0.6, "θ3": 0.2}),
    {
        "{}": (0, 0, 0.76, 0, 0, 0, 0, 0),
        "θ1": (0.6, 0.2, 0.12, 0.50, 0.12, 0.12, 0.12, 0.43),
        "θ2": (0.1, 0.6, 0.06, 0.25, 0.06, 0.06, 0.06, 0.37),
        "θ3": (0.3, 0.2, 0.06, 0.25, 0.06, 0.06, 0.06, 0.20),
        "θ1|θ2": (0, 0, 0, 0, 0, 0.38, 0.38, 0),
        "θ1|θ3": (0, 0, 0, 0, 0, 0.18, 0.18, 0),
        "θ2|θ3": (0, 0, 0, 0, 0, 0.20, 0.20, 0),
        "θ1|θ2|θ3": (0, 0, 0, 0, 0.76, 0, 0, 0),
    },
    ("θ1", "θ2", "θ1", "θ1", "θ1|θ2|θ3", "θ1|θ2", "θ1|θ2", "θ1"),
    ("θ1", "θ2", "θ1", "θ1", "θ1", "θ1", "θ1", "θ1"),
    (0.639, 0.655, 0.176, 0.567, 0.857, 0.619, 0.619, 0.497),
    (0.639, 0.655, 0.176, 0.567, 0.457, 0.478, 0.478, 0.497),
)

TABLE4 = FusionTable(
    "Table IV",
    bba({"θ1": 0.4, "θ2": 0.1, "θ3": 0.3, "θ1|θ2": 0.2}),
    bba({"θ1": 0.2, "θ2": 0.3, "θ3": 0.1, "θ1|θ2": 0.1, "θ2|θ3": 0.2, "θ1|θ2|θ3": 0.1}),
    {
        "{}": (0, 0, 0.47, 0, 0, 0, 0, 0),
        "θ1": (0.4, 0.2, 0.2, 0.377, 0.2, 0.08, 0.2, 0.39),
        "θ2": (0.1, 0.3, 0.17, 0.321, 0.17, 0.03, 0.17, 0.28),
        "θ3": (0.3, 0.1, 0.12, 0.226, 0.12, 0.03, 0.12, 0.24),
        "θ1|θ2": (0.2, 0.1, 0.04, 0.076, 0.04, 0.31, 0.18, 0.06),
        "θ1|θ3": (0, 0, 0, 0, 0, 0.1, 0.1, 0),
        "θ2|θ3": (0, 0.2, 0, 0, 0, 0.18, 0.1, 0.03),
        "θ1|θ2|θ3": (0, 0.1, 0, 0, 0.47, 0.27, 0.13, 0),
    },
    ("θ1", "θ2", "θ1", "θ1", "θ1", "θ1|θ2", "θ1", "θ1"),
    ("θ1", "θ2", "θ1", "θ1", "θ1", "θ1", "θ1", "θ1"),
    (0.553, 0.522, 0.336, 0.488, 0.389, 0.609, 0.428, 0.497),
    (0.553, 0.522, 0.336, 0.488, 0.389, 0.456, 0.428, 0.497),
)


def fusion_columns(table: FusionTable) -> dict[str, MassFunction]:
    cols = {"m1": table.m1, "m2": table.m2}
    for name in FUSION_COLUMNS[2:]:
        cols[name] = RULES[Rule.parse(name)](table.m1, table.m2)
    return cols


# -- checks ---------------------------------------------------------------------


def contradiction_checks() -> list[Check]:
    out = []
    sec = "Contradiction"
    for name, (expected, tol) in CONTRADICTION_TOTALS.items():
        out.append(Check(sec, f"Contr({name})", expected, metrics.contradiction(CONTRADICTION_BBAS[name]), tol))
    for name, elems in CONTRADICTION_ELEMENTS.items():
        m = CONTRADICTION_BBAS[name]
        for x, expected in elems.items():
            out.append(Check(sec, f"Contr_{name}({x})", expected, metrics.contradiction_of_element(m, x), 0.005))
    return out


def table1_checks() -> list[Check]:
    out = []
    for name, m in TABLE1_BBAS.items():
        out.append(Check("Table I", f"dB {name}", TABLE1_BAYESIANITY[name], metrics.degree_bayesianity(m), 0.005))
        out.append(Check("Table I", f"dNS {name}", TABLE1_NON_SPECIFICITY[name], metrics.degree_non_specificity(m), 0.005))
    on4 = TABLE1_BBAS["m1"].on_frame(THETA4)
    out.append(Check("Table I", "dB m1 on 4 labels", TABLE1_M1_ON_FOUR, metrics.degree_bayesianity(on4), 0.005))
    return out


def table2_checks() -> list[Check]:
    return [
        Check("Table II", f"dS {name}", expected, metrics.degree_specificity(bayesian(p)), 0.0005)
        for name, p, expected in TABLE2
    ]


def specificity_checks() -> list[Check]:
    out = []
    for name, m, approach, expected, xmax in SPECIFICITY_EXAMPLES:
        tag = f"approach {int(approach)}"
        out.append(Check("Specificity examples", f"dS {name} {tag}", expected,
                         metrics.degree_specificity(m, approach), 0.0005))
        out.append(Check("Specificity examples", f"X_max {name} {tag}", xmax,
                         str(metrics.most_specific_bba(m, approach).x_max)))
    return out


def counterexample_checks() -> list[Check]:
    out = []
    for name, m, ds in COUNTEREXAMPLE_BBAS:
        out.append(Check("Bayesian counterexample", f"NS {name}", 0.0, metrics.non_specificity(m), 1e-12))
        out.append(Check("Bayesian counterexample", f"S {name}", 1.0, metrics.yager_specificity(m), 1e-12))
        out.append(Check("Bayesian counterexample", f"dS {name}", ds, metrics.degree_specificity(m), 0.0005))
    return out


def fusion_checks(table: FusionTable) -> list[Check]:
    out = []
    cols = fusion_columns(table)
    for j, col in enumerate(FUSION_COLUMNS):
        m = cols[col]
        for row in FUSION_ROWS:
            out.append(Check(table.title, f"{col}({row})", float(table.masses[row][j]), m[row], MASS_TOL))
        out.append(Check(table.title, f"m_s 1- {col}", table.ms1[j],
                         str(metrics.most_specific_bba(m, Approach.FOCAL_RATIO).x_max)))
        out.append(Check(table.title, f"m_s 2- {col}", table.ms2[j],
                         str(metrics.most_specific_bba(m, Approach.PIGNISTIC).x_max)))
        out.append(Check(table.title, f"dS 1- {col}", table.ds1[j],
                         metrics.degree_specificity(m, Approach.FOCAL_RATIO), 0.0005))
        out.append(Check(table.title, f"dS 2- {col}", table.ds2[j],
                         metrics.degree_specificity(m, Approach.PIGNISTIC), 0.0005))
    return out


SECTIONS: dict[str, Callable[[], list[Check]]] = {
    "Contradiction": contradiction_checks,
    "Table I": table1_checks,
    "Table II": table2_checks,
    "Specificity examples": specificity_checks,
    "Bayesian counterexample": counterexample_checks,
    "Table III": lambda: fusion_checks(TABLE3),
    "Table IV": lambda: fusion_checks(TABLE4),
}


def all_checks() -> list[Check]:
    return [c for fn in SECTIONS.values() for c in fn()]


# -- rendering --------------------------------------------------------------------


def _fmt(x, decimals=4) -> str:
    if isinstance(x, str):
        return x
    if math.isclose(x, 0.0, abs_tol=1e-15):
        return "0"
    return f"{x:.{decimals}f}"


def render_fusion_table(table: FusionTable) -> str:
    cols = fusion_columns(table)
    short = {"m1": "m1", "m2": "m2", "conjunctive": "m_c", "dempster": "m_DS", "yager": "m_Y",
             "disjunctive": "m_Dis", "dubois-prade": "m_DP", "pcr5": "m_PCR"}
    width = 10
    head = f"{'':<10}" + "".join(f"{short[c]:>{width}}" for c in FUSION_COLUMNS)
    lines = [table.title, head]
    for row in FUSION_ROWS:
        lines.append(f"{row:<10}" + "".join(f"{_fmt(cols[c][row], 3):>{width}}" for c in FUSION_COLUMNS))
    for approach, tag in ((Approach.FOCAL_RATIO, "1-"), (Approach.PIGNISTIC, "2-")):
        lines.append(f"{'m_s ' + tag:<10}" + "".join(
            f"{str(metrics.most_specific_bba(cols[c], approach).x_max):>{width}}" for c in FUSION_COLUMNS))
    for approach, tag in ((Approach.FOCAL_RATIO, "1-"), (Approach.PIGNISTIC, "2-")):
        lines.append(f"{'dS ' + tag:<10}" + "".join(
            f"{metrics.degree_specificity(cols[c], approach):>{width}.3f}" for c in FUSION_COLUMNS))
    return "\n".join(lines)


def render_checks(checks: list[Check]) -> str:
    lines = []
    for c in checks:
        mark = "ok " if c.ok else "BAD"
        comp = c.computed if isinstance(c.computed, str) else _fmt(c.computed, 4)
        exp = c.expected if isinstance(c.expected, str) else _fmt(c.expected, 4)
        lines.append(f"  [{mark}] {c.item:<28} expected {exp:>10}   computed {comp:>10}")
    return "\n".join(lines)


def render_report() -> tuple[str, list[Check]]:
    """Full text report and the list of mismatching checks."""
    blocks = []
    failures = []
    for title, fn in SECTIONS.items():
        checks = fn()
        failures.extend(c for c in checks if not c.ok)
        blocks.append(f"== {title} ==")
        if title == "Table III":
            blocks.append(render_fusion_table(TABLE3))
        elif title == "Table IV":
            blocks.append(render_fusion_table(TABLE4))
        blocks.append(render_checks(checks))
        blocks.append("")
    return "\n".join(blocks), failures
