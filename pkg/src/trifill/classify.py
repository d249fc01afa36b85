"""Entanglement classes of three-qubit pure states.

Every pure state falls into one of four classes: fully product,
biseparable (exactly one qubit detached), W class, or GHZ class.  The
first two have at least one zero triangle edge; the genuinely entangled
classes are told apart by the 3-tangle, which vanishes on the W class.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .measures import (
    ConcurrenceTriangle,
    concurrence_fill,
    concurrence_triangle,
    three_tangle,
)
from .states import ThreeQubitState

__all__ = [
    "StateKind",
    "StateClass",
    "GmeConditions",
    "classify",
    "classify_triangle",
    "check_gme_conditions",
    "is_degenerate_triangle",
]

_PARTITION_LABELS = {1: "1|23", 2: "2|13", 3: "3|12"}


class StateKind(enum.Enum):
    PRODUCT = "product"
    BISEPARABLE = "biseparable"
    W_CLASS = "w-class"
    GHZ_CLASS = "ghz-class"


@dataclass(frozen=True)
class StateClass:
    """Class of a state; ``partition`` is the detached qubit (1, 2 or 3)
    and is set only for biseparable states."""

    kind: StateKind
    partition: int | None = None

    def __post_init__(self):
        if (self.kind is StateKind.BISEPARABLE) != (self.partition is not None):
            raise ValueError("partition is set iff the state is biseparable")
        if self.partition is not None and self.partition not in (1, 2, 3):
            raise ValueError(f"partition must be 1, 2 or 3, got {self.partition}")

    @property
    def label(self) -> str:
        """Serialized name, e.g. "product" or "biseparable:3|12"."""
        if self.kind is StateKind.BISEPARABLE:
            return f"biseparable:{_PARTITION_LABELS[self.partition]}"
        return self.kind.value

    @property
    def genuinely_entangled(self) -> bool:
        return self.kind in (StateKind.W_CLASS, StateKind.GHZ_CLASS)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class GmeConditions:
    """Consistency of one state with the two defining GME requirements:
    (a) zero on product/biseparable states, (b) positive on the rest."""

    cond_a_consistent: bool
    cond_b_consistent: bool


def _check_tolerances(tol: float, tol_tangle: float) -> None:
    for name, value in (("tol", tol), ("tol_tangle", tol_tangle)):
        if not 0.0 < value < 1e-2:
            raise ValueError(f"{name} must lie in (0, 1e-2), got {value}")


def classify_triangle(
    t: ConcurrenceTriangle, tangle: float, tol: float = 1e-7, tol_tangle: float = 1e-7
) -> StateClass:
    """Class from precomputed triangle edges and 3-tangle.

    A vanishing tangle strictly below ``tol_tangle`` labels the state
    W class, which deliberately absorbs the measure-zero GHZ boundary.
    """
    _check_tolerances(tol, tol_tangle)
    small = [edge < tol for edge in t.edges]
    if all(small):
        return StateClass(StateKind.PRODUCT)
    if any(small):
        detached = 1 + small.index(True)
        return StateClass(StateKind.BISEPARABLE, partition=detached)
    if tangle >= tol_tangle:
        return StateClass(StateKind.GHZ_CLASS)
    return StateClass(StateKind.W_CLASS)


def classify(
    state: ThreeQubitState, tol: float = 1e-7, tol_tangle: float = 1e-7
) -> StateClass:
    """Assign a pure state to one of the four classes."""
    _check_tolerances(tol, tol_tangle)
    return classify_triangle(concurrence_triangle(state), three_tangle(state), tol, tol_tangle)


def check_gme_conditions(state: ThreeQubitState) -> GmeConditions:
    """Check that the concurrence fill of this state is consistent with the
    GME conditions given its class: separable-ish classes must have fill
    below 1e-9, genuinely entangled ones above."""
    fill = concurrence_fill(concurrence_triangle(state))
    cls = classify(state)
    separable = not cls.genuinely_entangled
    return GmeConditions(
        cond_a_consistent=(not separable) or fill < 1e-9,
        cond_b_consistent=separable or fill > 1e-9,
    )


def is_degenerate_triangle(t: ConcurrenceTriangle, tol: float = 1e-7) -> bool:
    """True iff the three triangle vertices are colinear within ``tol``,
    i.e. the longest edge reaches the sum of the other two."""
    return t.max_edge >= (t.a + t.b + t.c - t.max_edge) - tol
