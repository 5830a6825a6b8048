"""Acceptance gate: one test per criterion, each logged as a PASS/FAIL line.

Criteria 2, 4, 5, 6 and 10 contain published values that the definitions
do not reproduce at the stated tolerance.  They are checked as stated and
left failing; see the decisions ledger for the analysis of each cell.
"""

import math
import time
import zlib

import numpy as np

from beliefkit import (
    Approach,
    Frame,
    MassFunction,
    TotalConflictError,
    belief,
    commonality,
    confusion,
    conjunctive,
    contradiction,
    contradiction_of_element,
    degree_bayesianity,
    degree_non_specificity,
    degree_specificity,
    dempster,
    discord,
    disjunctive,
    dissonance,
    dubois_prade,
    jousselme_distance,
    most_specific_bba,
    non_specificity,
    pcr5,
    pignistic,
    pignistic_entropy,
    plausibility,
    yager,
    yager_specificity,
)
from beliefkit.cli import main
from beliefkit.frame import Subset
from beliefkit.golden import FUSION_COLUMNS, FUSION_ROWS, TABLE3, TABLE4, fusion_columns

import oracle
from helpers import ACCEPTANCE_RESULTS, FRAMES, random_bba

TH = Frame(["θ1", "θ2", "θ3"])


def mk(spec, frame=TH):
    return MassFunction(frame, spec)


class Gate:
    """Collects comparisons for one criterion and records the verdict."""

    def __init__(self, key):
        self.key = key
        self.total = 0
        self.bad = []
        self.t0 = time.perf_counter()

    def close(self, label, got, want, tol):
        self.total += 1
        if got is None or not abs(got - want) <= tol + 1e-12:
            self.bad.append(f"{label} {got if got is None else round(got, 6)} vs {want} (±{tol})")

    def same(self, label, got, want):
        self.total += 1
        if got != want:
            self.bad.append(f"{label} {got} vs {want}")

    def holds(self, label, cond):
        self.total += 1
        if not cond:
            self.bad.append(label)

    def finish(self):
        dt = time.perf_counter() - self.t0
        ok = not self.bad
        detail = f"{self.total - len(self.bad)}/{self.total} checks, {dt:.2f}s"
        if not ok:
            detail += "; off: " + "; ".join(self.bad)
        ACCEPTANCE_RESULTS[self.key] = (ok, detail)
        assert ok, detail


def test_criterion_01_contradiction():
    g = Gate("1 contradiction illustration")
    m1 = mk({"θ1": 0.5, "θ2": 0.5})
    m2 = mk({"θ1": 0.6, "θ2": 0.3, "θ3": 0.1})
    m3 = mk({"θ1|θ2|θ3": 0.6, "θ2": 0.3, "θ3": 0.1})
    m4 = mk({"θ1|θ2": 0.6, "θ1|θ3": 0.3, "θ2|θ3": 0.1})
    g.close("Contr(m1)", contradiction(m1), 1.0, 1e-9)
    g.close("Contr(m2)", contradiction(m2), 0.9849, 0.0005)
    g.close("Contr(m3)", contradiction(m3), 0.8092, 0.0005)
    g.close("Contr(m4)", contradiction(m4), 0.80, 0.005)
    for x, v in {"θ1": 0.36, "θ2": 0.66, "θ3": 0.79}.items():
        g.close(f"Contr_m2({x})", contradiction_of_element(m2, x), v, 0.005)
    g.finish()


TABLE1 = [
    ("m1", {"θ1": 0.4, "θ2": 0.1, "θ3": 0.1, "θ1|θ2": 0.3, "θ1|θ3": 0.1}, 0.75),
    ("m2", {"θ1": 0.3, "θ2": 0.1, "θ3": 0.1, "θ1|θ2": 0.3, "θ1|θ3": 0.2}, 0.68),
    ("m3", {"θ1": 0.1, "θ2": 0.3, "θ3": 0.1, "θ1|θ2": 0.5}, 0.68),
    ("m4", {"θ1": 0.3, "θ2": 0.1, "θ3": 0.1, "θ1|θ2|θ3": 0.5}, 0.5),
    ("m5", {"θ1|θ2": 0.6, "θ1|θ3": 0.4}, 0.37),
    ("m6", {"θ1|θ2": 0.6, "θ1|θ2|θ3": 0.4}, 0.23),
    ("mΘ", {"θ1|θ2|θ3": 1.0}, 0.0),
]


def test_criterion_02_bayesianity():
    g = Gate("2 Table I bayesianity")
    for name, spec, db in TABLE1:
        m = mk(spec)
        g.close(f"dB({name})", degree_bayesianity(m), db, 0.005)
        g.close(f"dNS({name})", degree_non_specificity(m), 1 - db, 0.005)
    four = Frame(["θ1", "θ2", "θ3", "θ4"])
    g.close("dB(m1 on 4 labels)", degree_bayesianity(mk(TABLE1[0][1]).on_frame(four)), 0.80, 0.005)
    g.finish()


TABLE2 = [
    ((1 / 3, 1 / 3, 1 / 3), 0.423),
    ((0.4, 0.4, 0.2), 0.471),
    ((0.45, 0.45, 0.10), 0.493),
    ((0.45, 0.40, 0.15), 0.508),
    ((0.45, 0.3, 0.25), 0.523),
    ((0.45, 0.275, 0.275), 0.524),
    ((0.6, 0.3, 0.1), 0.639),
    ((1.0, 0.0, 0.0), 1.0),
]


def bayes(probs):
    return MassFunction(TH, ((1 << i, p) for i, p in enumerate(probs) if p))


def test_criterion_03_bayesian_specificity():
    g = Gate("3 Table II bayesian specificity")
    vals = []
    for i, (probs, ds) in enumerate(TABLE2, start=1):
        v = degree_specificity(bayes(probs))
        vals.append(v)
        g.close(f"dS(m{i})", v, ds, 0.0005)
    g.holds("dS(m3) < dS(m4) < dS(m5) < dS(m6)", vals[2] < vals[3] < vals[4] < vals[5])
    g.finish()


def test_criterion_04_worked_specificity():
    g = Gate("4 worked specificity examples")
    g.close("dS(θ1 .6, θ1θ2 .4)", degree_specificity(mk({"θ1": 0.6, "θ1|θ2": 0.4})), 0.7172, 0.0005)
    g.close("dS(θ1 .5, θ1θ2 .5)", degree_specificity(mk({"θ1": 0.5, "θ1|θ2": 0.5})), 0.6465, 0.0005)
    g.close("dS(θ1 .5, θ2 .5)", degree_specificity(mk({"θ1": 0.5, "θ2": 0.5})), 0.5, 0.0005)
    g.close("dS(θ1 .6, Θ .4)", degree_specificity(mk({"θ1": 0.6, "θ1|θ2|θ3": 0.4})), 0.6734, 0.0005)
    m5 = mk({"θ1|θ2": 0.7, "θ1|θ3": 0.3})
    g.close("dS approach 1 (m5)", degree_specificity(m5, Approach.FOCAL_RATIO), 0.755, 0.0005)
    g.close("dS approach 2 (m5)", degree_specificity(m5, Approach.PIGNISTIC), 0.111, 0.0005)
    g.finish()


def _fusion_gate(key, table):
    g = Gate(key)
    cols = fusion_columns(table)
    for j, col in enumerate(FUSION_COLUMNS):
        m = cols[col]
        if j >= 2:
            for row in FUSION_ROWS:
                g.close(f"{col}({row})", m[row], table.masses[row][j], 0.005)
        g.same(f"m_s 1- {col}", str(most_specific_bba(m, Approach.FOCAL_RATIO).x_max), table.ms1[j])
        g.same(f"m_s 2- {col}", str(most_specific_bba(m, Approach.PIGNISTIC).x_max), table.ms2[j])
        g.close(f"dS 1- {col}", degree_specificity(m, Approach.FOCAL_RATIO), table.ds1[j], 0.0005)
        g.close(f"dS 2- {col}", degree_specificity(m, Approach.PIGNISTIC), table.ds2[j], 0.0005)
    return g


def test_criterion_05_bayesian_fusion():
    _fusion_gate("5 Table III bayesian fusion", TABLE3).finish()


def test_criterion_06_non_bayesian_fusion():
    g = _fusion_gate("6 Table IV non-bayesian fusion", TABLE4)
    cols = fusion_columns(TABLE4)
    # the cells named explicitly in the criterion
    g.close("m_c(∅)", cols["conjunctive"]["{}"], 0.47, 0.005)
    g.close("m_DS(θ1)", cols["dempster"]["θ1"], 0.377, 0.005)
    g.close("m_PCR(θ1)", cols["pcr5"]["θ1"], 0.39, 0.005)
    g.finish()


def test_criterion_07_counterexample():
    g = Gate("7 bayesian counterexample")
    cases = [((1 / 3, 1 / 3, 1 / 3), 0.423), ((0.5, 0.5, 0.0), 0.5), ((1.0, 0.0, 0.0), 1.0)]
    got = []
    for probs, ds in cases:
        m = bayes(probs)
        g.close(f"NS{probs}", non_specificity(m), 0.0, 1e-12)
        g.close(f"S{probs}", yager_specificity(m), 1.0, 1e-12)
        got.append(degree_specificity(m))
        g.close(f"dS{probs}", got[-1], ds, 0.0005)
    g.holds("dS separates all three", len({round(v, 6) for v in got}) == 3)
    g.finish()


# -- criterion 8 ------------------------------------------------------------------


def _oracle_case(g, rng, n):
    f = FRAMES[n]
    labels = f.labels
    m = random_bba(rng, f, empty=rng.random() < 0.3)
    o = oracle.to_dict(m)
    tol = 1e-9
    normal = m.empty_mass == 0.0
    for bits in range(f.n_subsets):
        x = frozenset(lab for i, lab in enumerate(labels) if bits >> i & 1)
        s = Subset(f, bits)
        g.close("bel", belief(m, s), oracle.bel(o, x), tol)
        g.close("pl", plausibility(m, s), oracle.pl(o, x), tol)
        g.close("q", commonality(m, s), oracle.q(o, x), tol)
    if m.empty_mass < 1.0:
        bet = pignistic(m)
        for i, lab in enumerate(labels):
            g.close("betP", bet.probabilities[i], oracle.betp(o, frozenset([lab])), tol)
    other = random_bba(rng, f, empty=True)
    g.close("distance", jousselme_distance(m, other), oracle.distance(o, oracle.to_dict(other)), tol)
    g.close("Contr", contradiction(m), oracle.contr(o, labels), tol)
    if normal:
        g.close("NS", non_specificity(m), oracle.ns(o), tol)
        g.close("S", yager_specificity(m), oracle.yager_s(o), tol)
        g.close("E", dissonance(m), oracle.e_measure(o), tol)
        g.close("C", confusion(m), oracle.c_measure(o), tol)
        g.close("D", discord(m), oracle.d_measure(o), tol)
        g.close("H_betP", pignistic_entropy(m), oracle.entropy(o, labels), tol)
        g.close("dNS", degree_non_specificity(m), oracle.delta_ns(o, labels), tol)
    if m.empty_mass < 1.0:
        tied, smallest = oracle.xmax_ratio(o)
        sel = most_specific_bba(m, Approach.FOCAL_RATIO).x_max
        g.holds("X_max (ratio)", frozenset(sel.labels) in tied and sel.card == smallest)
        want = 1 - oracle.distance(o, oracle.categorical(labels, sel.labels))
        g.close("dS approach 1", degree_specificity(m, Approach.FOCAL_RATIO), want, tol)
        x2 = oracle.xmax_betp(o, labels)
        g.same("X_max (betP)", frozenset(most_specific_bba(m, Approach.PIGNISTIC).x_max.labels), x2)
        g.close("dS approach 2 (pignistic)", degree_specificity(m, Approach.PIGNISTIC, "pignistic"),
                1 - oracle.distance(oracle.betp_bba(o, labels), oracle.categorical(labels, x2)), tol)
        g.close("dS approach 2 (original)", degree_specificity(m, Approach.PIGNISTIC, "original"),
                1 - oracle.distance(o, oracle.categorical(labels, x2)), tol)

    a, b = random_bba(rng, f), random_bba(rng, f)
    da, db = oracle.to_dict(a), oracle.to_dict(b)
    pairs = [(conjunctive, oracle.conj(da, db)), (disjunctive, oracle.disj(da, db)),
             (yager, oracle.yager(da, db, labels)), (dubois_prade, oracle.dubois_prade(da, db)),
             (pcr5, oracle.pcr5(da, db))]
    if oracle.conj(da, db)[frozenset()] < 1 - 1e-9:
        pairs.append((dempster, oracle.dempster(da, db)))
    for rule, want in pairs:
        got = oracle.to_dict(rule(a, b))
        g.holds(rule.__name__, all(abs(got[x] - v) <= tol for x, v in want.items()))


def test_criterion_08_oracle_equivalence():
    g = Gate("8 oracle equivalence")
    rng = np.random.default_rng(8)
    for n in (2, 3, 4):
        for _ in range(500):
            _oracle_case(g, rng, n)
    g.finish()


# -- criterion 9 ------------------------------------------------------------------

CASES = 1000


def _suite(g, name, check):
    rng = np.random.default_rng(zlib.crc32(name.encode()))
    bad = 0
    for _ in range(CASES):
        if not check(rng):
            bad += 1
    g.total += 1
    if bad:
        g.bad.append(f"{name}: {bad}/{CASES} violations")


def _frame(rng):
    return FRAMES[int(rng.integers(2, 5))]


def _mass_conservation(rng):
    f = _frame(rng)
    a, b = random_bba(rng, f), random_bba(rng, f)
    for rule in (conjunctive, dempster, yager, disjunctive, dubois_prade, pcr5):
        try:
            out = rule(a, b)
        except TotalConflictError:
            continue
        if abs(math.fsum(out.masses.values()) - 1.0) > 1e-9:
            return False
    return True


def _metric_axioms(rng):
    f = _frame(rng)
    a, b, c = (random_bba(rng, f, empty=True) for _ in range(3))
    ab = jousselme_distance(a, b)
    return (
        jousselme_distance(a, a) == 0.0
        and abs(ab - jousselme_distance(b, a)) <= 1e-15
        and 0.0 <= ab <= 1.0 + 1e-12
        and jousselme_distance(a, c) <= ab + jousselme_distance(b, c) + 1e-9
        and (ab > 0.0 or a.isclose(b))
    )


def _discord_chain(rng):
    m = random_bba(rng, _frame(rng))
    return dissonance(m) <= discord(m) + 1e-12 <= confusion(m) + 2e-12


def _monotone(rng):
    f = _frame(rng)
    m = random_bba(rng, f, empty=True)
    y = int(rng.integers(0, f.n_subsets))
    x = y & int(rng.integers(0, f.n_subsets))
    sx, sy = Subset(f, x), Subset(f, y)
    return (
        belief(m, sx) <= belief(m, sy) + 1e-12
        and plausibility(m, sx) <= plausibility(m, sy) + 1e-12
        and commonality(m, sx) >= commonality(m, sy) - 1e-12
    )


def _degree_complement(rng):
    m = random_bba(rng, _frame(rng))
    return abs(degree_non_specificity(m) + degree_bayesianity(m) - 1.0) <= 1e-12


def _dempster_normalized(rng):
    f = _frame(rng)
    a, b = random_bba(rng, f, empty=True), random_bba(rng, f)
    mc = conjunctive(a, b)
    k = mc.empty_mass
    if k >= 1 - 1e-9:
        return True
    d = dempster(a, b)
    return all(abs(d.mass_bits(x) - v / (1 - k)) <= 1e-12 for x, v in mc.items() if x)


def _no_conflict(rng):
    f = _frame(rng)
    anchor = int(rng.integers(0, f.size))
    a, b = random_bba(rng, f, anchor=anchor), random_bba(rng, f, anchor=anchor)
    ref = conjunctive(a, b)
    return all(rule(a, b).isclose(ref, tol=1e-12) for rule in (dempster, yager, dubois_prade, pcr5))


def _isospecific(rng):
    # Bayesian sources: equal masses on two singletons give equal distances
    n = int(rng.integers(2, 5))
    p = rng.dirichlet(np.ones(n))
    i, j = (int(v) for v in rng.choice(n, size=2, replace=False))
    p[j] = p[i]
    p /= p.sum()
    m = MassFunction(FRAMES[n], ((1 << k, float(v)) for k, v in enumerate(p)))
    return abs(contradiction_of_element(m, 1 << i) - contradiction_of_element(m, 1 << j)) <= 1e-12


def test_criterion_09_invariants():
    g = Gate("9 invariant suites")
    for name, check in [
        ("mass conservation", _mass_conservation),
        ("metric axioms", _metric_axioms),
        ("E <= D <= C", _discord_chain),
        ("bel/pl/q monotone", _monotone),
        ("dNS + dB = 1", _degree_complement),
        ("Dempster = normalized conjunctive", _dempster_normalized),
        ("no-conflict coincidence", _no_conflict),
        ("isospecific distances", _isospecific),
    ]:
        _suite(g, name, check)
    g.finish()


def test_criterion_10_paper_tables(capsys):
    g = Gate("10 paper-tables exits 0")
    code = main(["paper-tables"])
    err = capsys.readouterr().err
    first = err.splitlines()[0] if err else ""
    g.same(f"exit code ({first})" if first else "exit code", code, 0)
    g.finish()
