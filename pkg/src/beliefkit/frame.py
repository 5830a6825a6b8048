"""Frames of discernment, subsets of the powerset, and mass functions.

Subsets are stored as membership words: bit ``i`` is set when the
``i``-th label of the frame belongs to the subset.  The integer value of
that word is the subset's canonical index, so index 0 is the empty set
and ``2**n - 1`` is the whole frame.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

import numpy as np

from .errors import NormalizationError, ValidationError

#: Tolerance on the total mass of a bba.
EPSILON = 1e-9

#: Largest frame accepted anywhere in the library.
MAX_FRAME_SIZE = 20

EMPTY_TOKEN = "{}"
UNION_TOKEN = "|"


@dataclass(frozen=True)
class Frame:
    """An ordered frame of discernment."""

    labels: tuple[str, ...]

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if not labels:
            raise ValidationError("a frame needs at least one label")
        if len(labels) > MAX_FRAME_SIZE:
            raise ValidationError(
                f"frame has {len(labels)} labels, at most {MAX_FRAME_SIZE} are supported"
            )
        for label in labels:
            if not isinstance(label, str) or not label.strip():
                raise ValidationError(f"invalid label {label!r}")
            if label != label.strip() or any(c.isspace() for c in label):
                raise ValidationError(f"label {label!r} contains whitespace")
            if label == EMPTY_TOKEN or UNION_TOKEN in label or "=" in label or "#" in label:
                raise ValidationError(f"label {label!r} contains a reserved character")
        if len(set(labels)) != len(labels):
            dupes = sorted({x for x in labels if labels.count(x) > 1})
            raise ValidationError(f"duplicate labels: {', '.join(dupes)}")
        object.__setattr__(self, "labels", labels)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def n_subsets(self) -> int:
        return 1 << len(self.labels)

    @property
    def full_bits(self) -> int:
        return (1 << len(self.labels)) - 1

    @property
    def empty(self) -> Subset:
        return Subset(self, 0)

    @property
    def full(self) -> Subset:
        return Subset(self, self.full_bits)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise ValidationError(f"unknown label {label!r} for frame {self}") from None

    def subset(self, *labels: str) -> Subset:
        bits = 0
        for label in labels:
            bits |= 1 << self.index(label)
        return Subset(self, bits)

    def singleton(self, i: int) -> Subset:
        return Subset(self, 1 << i)

    def singletons(self) -> list[Subset]:
        return [Subset(self, 1 << i) for i in range(self.size)]

    def subsets(self) -> Iterator[Subset]:
        """All ``2**n`` subsets in canonical order, the empty set first."""
        for bits in range(self.n_subsets):
            yield Subset(self, bits)

    def parse(self, text: str) -> Subset:
        """Parse ``"{}"`` or labels joined by ``|`` into a subset.

        Order does not matter and repeated labels collapse.
        """
        text = text.strip()
        if text == EMPTY_TOKEN:
            return self.empty
        if not text:
            raise ValidationError("empty subset expression (use {} for the empty set)")
        parts = [p.strip() for p in text.split(UNION_TOKEN)]
        if any(not p for p in parts):
            raise ValidationError(f"malformed subset expression {text!r}")
        return self.subset(*parts)

    def coerce(self, x: SubsetLike) -> Subset:
        """Accept a Subset of this frame, a subset expression, or a raw index."""
        if isinstance(x, Subset):
            if x.frame != self:
                raise ValidationError(f"subset {x} belongs to another frame")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            return Subset(self, int(x))
        raise ValidationError(f"cannot interpret {x!r} as a subset")

    def format_bits(self, bits: int) -> str:
        if bits == 0:
            return EMPTY_TOKEN
        return UNION_TOKEN.join(lab for i, lab in enumerate(self.labels) if bits >> i & 1)

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels) + "}"


@dataclass(frozen=True)
class Subset:
    """An element of the powerset of ``frame``."""

    frame: Frame
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.frame.n_subsets:
            raise ValidationError(
                f"subset index {self.bits} out of range for a frame of size {self.frame.size}"
            )

    def _check(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise ValidationError(f"expected a Subset, got {type(other).__name__}")
        if other.frame != self.frame:
            raise ValidationError("subsets belong to different frames")

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.frame, self.bits & other.bits)

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.frame, self.bits | other.bits)

    def __invert__(self) -> Subset:
        return Subset(self.frame, self.frame.full_bits & ~self.bits)

    def intersect(self, other: Subset) -> Subset:
        return self & other

    def union(self, other: Subset) -> Subset:
        return self | other

    def complement(self) -> Subset:
        return ~self

    def issubset(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    @property
    def card(self) -> int:
        return self.bits.bit_count()

    def __len__(self) -> int:
        return self.bits.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.bits == 0

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(self.frame.labels) if self.bits >> i & 1)

    def __str__(self) -> str:
        return self.frame.format_bits(self.bits)

    def __repr__(self) -> str:
        return f"Subset({self})"


SubsetLike = Union[Subset, str, int]


class MassFunction:
    """A validated basic belief assignment on ``2**frame``.

    Only focal elements are stored.  Mass on the empty set is allowed,
    since the conjunctive rule produces it.  Inputs that do not sum to one
    within :data:`EPSILON` are rejected rather than rescaled.

    >>> f = Frame(["a", "b"])
    >>> m = MassFunction(f, {"a": 0.6, "a|b": 0.4})
    >>> m["a"]
    0.6
    """

    __slots__ = ("_frame", "_masses")

    def __init__(
        self,
        frame: Frame,
        assignments: Mapping[SubsetLike, float] | Iterable[tuple[SubsetLike, float]],
    ):
        if isinstance(assignments, Mapping):
            assignments = assignments.items()
        masses: dict[int, float] = {}
        for key, value in assignments:
            bits = frame.coerce(key).bits
            value = float(value)
            if math.isnan(value) or value < 0.0:
                raise ValidationError(f"mass of {frame.format_bits(bits)} is negative or NaN: {value!r}")
            masses[bits] = masses.get(bits, 0.0) + value
        total = math.fsum(masses.values())
        if abs(total - 1.0) > EPSILON:
            gap = 1.0 - total
            kind = "deficit" if gap > 0 else "excess"
            raise NormalizationError(f"masses sum to {total!r} ({kind} of {abs(gap):.6g}), expected 1")
        self._frame = frame
        self._masses = {b: masses[b] for b in sorted(masses) if masses[b] > 0.0}

    @classmethod
    def categorical(cls, frame: Frame, x: SubsetLike) -> MassFunction:
        """The bba putting all mass on ``x``."""
        return cls(frame, {frame.coerce(x).bits: 1.0})

    @classmethod
    def vacuous(cls, frame: Frame) -> MassFunction:
        return cls(frame, {frame.full_bits: 1.0})

    @classmethod
    def from_vector(cls, frame: Frame, vector) -> MassFunction:
        vector = np.asarray(vector, dtype=float)
        if vector.shape != (frame.n_subsets,):
            raise ValidationError(f"expected a vector of length {frame.n_subsets}")
        return cls(frame, ((i, float(v)) for i, v in enumerate(vector) if v != 0.0))

    @property
    def frame(self) -> Frame:
        return self._frame

    def __getitem__(self, x: SubsetLike) -> float:
        return self._masses.get(self._frame.coerce(x).bits, 0.0)

    def mass_bits(self, bits: int) -> float:
        return self._masses.get(bits, 0.0)

    @property
    def masses(self) -> dict[int, float]:
        """Copy of the focal masses keyed by canonical subset index."""
        return dict(self._masses)

    def items(self) -> Iterator[tuple[int, float]]:
        return iter(self._masses.items())

    def focal_elements(self) -> list[Subset]:
        return [Subset(self._frame, b) for b in self._masses]

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.focal_elements())

    def __len__(self) -> int:
        return len(self._masses)

    @property
    def empty_mass(self) -> float:
        return self._masses.get(0, 0.0)

    @property
    def is_bayesian(self) -> bool:
        return all(b.bit_count() == 1 for b in self._masses)

    @property
    def is_categorical(self) -> bool:
        return len(self._masses) == 1

    def vector(self) -> np.ndarray:
        """Dense mass vector in canonical subset order (length ``2**n``)."""
        out = np.zeros(self._frame.n_subsets)
        for b, v in self._masses.items():
            out[b] = v
        return out

    def on_frame(self, frame: Frame) -> MassFunction:
        """Re-host this bba on a frame containing every label of the current one."""
        return MassFunction(
            frame,
            ((frame.subset(*Subset(self._frame, b).labels), v) for b, v in self._masses.items()),
        )

    def isclose(self, other: MassFunction, tol: float = 1e-9) -> bool:
        if other.frame != self._frame:
            return False
        keys = set(self._masses) | set(other._masses)
        return all(abs(self.mass_bits(k) - other.mass_bits(k)) <= tol for k in keys)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self._frame == other._frame and self._masses == other._masses

    def __hash__(self) -> int:
        return hash((self._frame, tuple(self._masses.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{self._frame.format_bits(b)}: {v:.6g}" for b, v in self._masses.items())
        return f"MassFunction({body})"


def same_frame(*bbas: MassFunction) -> Frame:
    """Return the common frame of ``bbas`` or raise."""
    frame = bbas[0].frame
    for m in bbas[1:]:
        if m.frame != frame:
            raise ValidationError(f"bbas are defined on different frames: {frame} vs {m.frame}")
    return frame
