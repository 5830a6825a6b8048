"""Shared test helpers: random bba generation and the acceptance log."""

import numpy as np
from hypothesis import strategies as st

from beliefkit import Frame, MassFunction

FRAMES = {n: Frame([f"t{i + 1}" for i in range(n)]) for n in range(1, 6)}

#: criterion label -> (passed, detail), filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def random_bba(rng, frame, max_focal=6, bayesian=False, empty=False, anchor=None):
    """Random bba with a few focal elements and Dirichlet masses.

    ``anchor`` forces every focal element to contain that label index, so
    no pair of focal elements conflicts.  ``empty`` may add mass on ∅.
    """
    if bayesian:
        pool = [1 << i for i in range(frame.size)]
    else:
        pool = list(range(1, frame.n_subsets))
    if anchor is not None:
        pool = [b for b in pool if b >> anchor & 1]
    k = int(rng.integers(1, min(max_focal, len(pool)) + 1))
    chosen = [int(b) for b in rng.choice(pool, size=k, replace=False)]
    if empty and rng.random() < 0.5:
        chosen.append(0)
    w = rng.dirichlet(np.ones(len(chosen)))
    w[-1] = 1.0 - w[:-1].sum()
    if w[-1] < 0:
        w = np.abs(w) / np.abs(w).sum()
    return MassFunction(frame, zip(chosen, w.tolist()))


@st.composite
def bbas(draw, n=None, bayesian=False, empty=False):
    """Hypothesis strategy for valid bbas on a small frame."""
    size = n if n is not None else draw(st.integers(min_value=2, max_value=4))
    frame = FRAMES[size]
    seed = draw(st.integers(min_value=0, max_value=2**32 - 1))
    return random_bba(np.random.default_rng(seed), frame, bayesian=bayesian, empty=empty)
