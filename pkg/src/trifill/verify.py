"""Seeded Monte Carlo and grid checks of the triangle inequalities, the
no-area theorem, the appendix-style function facts, cross-route 3-tangle
agreement, and local-unitary invariance.

Every check walks its sample indices in deterministic chunks; because each
sample is a pure function of (seed, index) and the reductions (failure
counts, minima) are order-insensitive, results do not depend on chunk size
or worker count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from ._format import dumps12
from .measures import (
    ConcurrenceTriangle,
    batch_edges,
    batch_fill,
    batch_pair_concurrences,
    batch_tangle,
    concurrence_fill,
    schmidt_weight,
)
from .states import (
    ThreeQubitState,
    canonical_amplitudes,
    haar_amplitudes,
    named_state,
    sample_local_unitaries,
)

__all__ = [
    "VerificationReport",
    "InequivalenceScan",
    "polygon_slack",
    "squared_slack",
    "y_polygon_slack",
    "violates_no_area",
    "measures_disagree",
    "check_polygon_inequality",
    "check_squared_inequality",
    "check_y_polygon",
    "check_no_area_theorem",
    "check_f_ratio_monotonicity",
    "check_ckw_consistency",
    "check_lu_invariance",
    "find_inequivalence_pairs",
    "SUITE_NAMES",
    "run_suite",
]

INEQUALITY_TOL = 1e-9
CKW_TOL = 1e-8
LU_TOL = 1e-9
GRID_TOL = 1e-12

DEFAULT_CHUNK = 1 << 16


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one property check.

    ``worst_slack`` is the most negative margin observed; a failure is a
    sample whose margin dropped below the property's tolerance.  ``extra``
    carries per-property details (e.g. the no-area edge statistics).
    """

    property_name: str
    samples: int
    failures: int
    worst_slack: float
    seed: int
    elapsed: float
    extra: dict = field(default_factory=dict)

    def json_line(self) -> str:
        """Deterministic one-line JSON form (timing is excluded on purpose
        so identical seeds give byte-identical output)."""
        payload = {
            "property_name": self.property_name,
            "samples": self.samples,
            "failures": self.failures,
            "worst_slack": self.worst_slack if math.isfinite(self.worst_slack) else None,
            "seed": self.seed,
        }
        payload.update(self.extra)
        return dumps12(payload)


def _chunks(n: int, chunk: int):
    if n < 1:
        raise ValueError("sample count must be >= 1")
    if chunk < 1:
        raise ValueError("chunk must be >= 1")
    start = 0
    while start < n:
        yield start, min(chunk, n - start)
        start += chunk


# ---------------------------------------------------------------------------
# per-triangle slacks (scalar helpers mirror the vectorized kernels)


def _poly_slack_arr(lengths: np.ndarray) -> np.ndarray:
    return lengths.sum(axis=1) - 2.0 * lengths.max(axis=1)


def polygon_slack(t: ConcurrenceTriangle) -> float:
    """Margin of C_j + C_k - C_i minimized over i, on unsquared edges."""
    c = np.sqrt(np.array([t.edges]))
    return float(_poly_slack_arr(c)[0])


def squared_slack(t: ConcurrenceTriangle) -> float:
    """Margin of the triangle inequality on the squared edges themselves."""
    return float(_poly_slack_arr(np.array([t.edges]))[0])


def y_polygon_slack(t: ConcurrenceTriangle) -> float:
    """Margin of the polygon inequality after the Schmidt-weight map."""
    return float(_poly_slack_arr(schmidt_weight(np.array([t.edges])))[0])


def violates_no_area(
    t: ConcurrenceTriangle,
    area_eps: float = 1e-6,
    edge_bound: float = 0.05,
    degeneracy_tol: float = 1e-7,
) -> bool:
    """True iff the triangle has (numerically) zero area and colinear
    vertices yet no short edge - the shape the no-area theorem forbids for
    triangles coming from actual states."""
    colinear = t.max_edge >= (t.a + t.b + t.c - t.max_edge) - degeneracy_tol
    return (
        concurrence_fill(t) < area_eps
        and t.min_edge > edge_bound
        and colinear
    )


# ---------------------------------------------------------------------------
# Monte Carlo checks over Haar samples


def _haar_slack_check(name, n, seed, slack_of_edges, chunk):
    t0 = time.perf_counter()
    failures = 0
    worst = math.inf
    for start, m in _chunks(n, chunk):
        edges = batch_edges(haar_amplitudes(seed, m, start))
        slack = slack_of_edges(edges)
        failures += int((slack < -INEQUALITY_TOL).sum())
        worst = min(worst, float(slack.min()))
    return VerificationReport(name, n, failures, worst, seed, time.perf_counter() - t0)


def check_polygon_inequality(n: int, seed: int, chunk: int = DEFAULT_CHUNK) -> VerificationReport:
    """Each one-to-other concurrence is at most the sum of the other two."""
    return _haar_slack_check(
        "polygon-inequality", n, seed, lambda e: _poly_slack_arr(np.sqrt(e)), chunk
    )


def check_squared_inequality(n: int, seed: int, chunk: int = DEFAULT_CHUNK) -> VerificationReport:
    """The same polygon inequality for the squared concurrences (the
    triangle edges), which is the stronger form."""
    return _haar_slack_check("squared-inequality", n, seed, _poly_slack_arr, chunk)


def check_y_polygon(n: int, seed: int, chunk: int = DEFAULT_CHUNK) -> VerificationReport:
    """The polygon inequality survives the Schmidt-weight reparameterization
    Y = 1 - sqrt(1 - C^2) of the edges."""
    return _haar_slack_check(
        "y-polygon", n, seed, lambda e: _poly_slack_arr(schmidt_weight(e)), chunk
    )


def check_no_area_theorem(
    n: int,
    seed: int,
    area_eps: float = 1e-6,
    edge_bound: float = 0.05,
    degeneracy_tol: float = 1e-7,
    chunk: int = DEFAULT_CHUNK,
) -> VerificationReport:
    """Counterexample search for the no-area theorem: no state may yield a
    colinear triangle (zero fill) whose shortest edge stays above
    ``edge_bound``.

    Monte Carlo can refute but not prove the theorem, so this is an
    absence-of-counterexample check with explicit thresholds.  The first
    half of the samples is Haar random; the second half comes from the
    boundary-biased canonical sampler, which lands near degenerate
    triangles far more often than Haar sampling does.  The report's
    ``extra`` carries the largest min-edge seen among near-zero-area
    samples (the theorem says it must stay small).
    """
    t0 = time.perf_counter()
    n_haar = n // 2
    failures = 0
    worst = math.inf
    max_min_edge_near_zero = -math.inf

    def scan(edges: np.ndarray):
        nonlocal failures, worst, max_min_edge_near_zero
        fill = batch_fill(edges)
        min_edge = edges.min(axis=1)
        colin_slack = edges.sum(axis=1) - 2.0 * edges.max(axis=1)
        margin = np.maximum(fill - area_eps, edge_bound - min_edge)
        margin = np.maximum(margin, colin_slack - degeneracy_tol)
        failures += int((margin < 0.0).sum())
        worst = min(worst, float(margin.min()))
        near = fill < area_eps
        if near.any():
            max_min_edge_near_zero = max(max_min_edge_near_zero, float(min_edge[near].max()))

    for start, m in _chunks(n_haar, chunk) if n_haar else ():
        scan(batch_edges(haar_amplitudes(seed, m, start)))
    for start, m in _chunks(n - n_haar, chunk) if n - n_haar else ():
        scan(batch_edges(canonical_amplitudes(seed, m, start, boundary_bias=True)))

    extra = {
        "haar_samples": n_haar,
        "canonical_samples": n - n_haar,
        "area_eps": area_eps,
        "edge_bound": edge_bound,
        "max_min_edge_near_zero_area": (
            max_min_edge_near_zero if max_min_edge_near_zero > -math.inf else None
        ),
    }
    return VerificationReport(
        "no-area", n, failures, worst, seed, time.perf_counter() - t0, extra
    )


def check_ckw_consistency(n: int, seed: int, chunk: int = DEFAULT_CHUNK) -> VerificationReport:
    """The monogamy-residual 3-tangle (any pivot qubit) agrees with the
    hyperdeterminant route within 1e-8."""
    t0 = time.perf_counter()
    failures = 0
    worst = math.inf
    for start, m in _chunks(n, chunk):
        amps = haar_amplitudes(seed, m, start)
        edges = batch_edges(amps)
        pair_sq = batch_pair_concurrences(amps) ** 2
        tangle = batch_tangle(amps)
        diff = np.abs(edges[:, 0] - pair_sq[:, 0] - pair_sq[:, 1] - tangle)
        diff = np.maximum(diff, np.abs(edges[:, 1] - pair_sq[:, 0] - pair_sq[:, 2] - tangle))
        diff = np.maximum(diff, np.abs(edges[:, 2] - pair_sq[:, 1] - pair_sq[:, 2] - tangle))
        slack = -diff
        failures += int((slack < -CKW_TOL).sum())
        worst = min(worst, float(slack.min()))
    return VerificationReport("ckw-consistency", n, failures, worst, seed, time.perf_counter() - t0)


def _scalar_table(amps: np.ndarray) -> np.ndarray:
    """All local-unitary-invariant report scalars, stacked as (n, 9):
    fill, Q, gmc edge, gmc sqrt, tangle, sigma, and the per-qubit Y."""
    edges = batch_edges(amps)
    fill = batch_fill(edges)
    q = 0.5 * edges.sum(axis=1)
    gmc_edge = edges.min(axis=1)
    tangle = batch_tangle(amps)
    return np.column_stack(
        [
            fill,
            q,
            gmc_edge,
            np.sqrt(gmc_edge),
            tangle,
            0.5 * (tangle + gmc_edge),
            schmidt_weight(edges),
        ]
    )


def check_lu_invariance(n: int, seed: int, chunk: int = DEFAULT_CHUNK) -> VerificationReport:
    """Every report scalar is unchanged (within 1e-9) when a Haar-random
    local unitary is applied to each qubit."""
    t0 = time.perf_counter()
    failures = 0
    worst = math.inf
    for start, m in _chunks(n, chunk):
        amps = haar_amplitudes(seed, m, start)
        us = sample_local_unitaries(seed, m, start)
        t = amps.reshape(m, 2, 2, 2)
        rotated = np.einsum("nai,nbj,nck,nijk->nabc", us[:, 0], us[:, 1], us[:, 2], t)
        diff = np.abs(_scalar_table(rotated.reshape(m, 8)) - _scalar_table(amps)).max(axis=1)
        slack = -diff
        failures += int((slack < -LU_TOL).sum())
        worst = min(worst, float(slack.min()))
    return VerificationReport("lu-invariance", n, failures, worst, seed, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# grid checks of the Schmidt-weight function f(x) = 1 - sqrt(1 - x)


def check_f_ratio_monotonicity(grid_points: int = 10_000) -> VerificationReport:
    """f(x)/x must strictly increase on (0, 1], and f must be superadditive,
    f(a) + f(b) < f(a + b), for a, b > 0 with a + b <= 1.

    The 1-D grid is ``k/m`` for k = 1..m (the x -> 0 endpoint, where the
    ratio tends to 1/2, is not a grid point); the 2-D grid uses about
    sqrt(grid_points) steps per axis.  A margin below 1e-12 counts as a
    failure.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    t0 = time.perf_counter()
    x = np.arange(1, grid_points + 1) / grid_points
    ratio = schmidt_weight(x) / x
    inc_margin = np.diff(ratio)

    steps = max(2, int(math.isqrt(grid_points)))
    i, j = np.meshgrid(np.arange(1, steps), np.arange(1, steps), indexing="ij")
    keep = (i + j) <= steps
    a = i[keep] / steps
    b = j[keep] / steps
    super_margin = schmidt_weight(a + b) - schmidt_weight(a) - schmidt_weight(b)

    failures = int((inc_margin < GRID_TOL).sum()) + int((super_margin < GRID_TOL).sum())
    worst = float(min(inc_margin.min(), super_margin.min()))
    extra = {"grid_points": grid_points, "pair_points": int(keep.sum())}
    return VerificationReport(
        "f-ratio", inc_margin.size + super_margin.size, failures, worst, 0,
        time.perf_counter() - t0, extra,
    )


# ---------------------------------------------------------------------------
# fill vs GMC inequivalence


def measures_disagree(
    s1: ThreeQubitState, s2: ThreeQubitState, margin: float = 1e-9
) -> bool:
    """True iff fill and GMC order the two states strictly oppositely."""
    pair = np.vstack([s1.amplitudes, s2.amplitudes])
    edges = batch_edges(pair)
    d_fill = float(np.diff(batch_fill(edges))[0])
    d_gmc = float(np.diff(edges.min(axis=1))[0])
    return (d_fill > margin and d_gmc < -margin) or (d_fill < -margin and d_gmc > margin)


@dataclass(frozen=True)
class InequivalenceScan:
    """Result of scanning sampled state pairs for fill-vs-GMC rank flips."""

    pairs_checked: int
    disagreements: int
    forced_pair_disagrees: bool
    example_pair: tuple[ThreeQubitState, ThreeQubitState] | None
    seed: int
    elapsed: float

    def json_line(self) -> str:
        payload = {
            "property_name": "inequivalence-pairs",
            "pairs_checked": self.pairs_checked,
            "disagreements": self.disagreements,
            "forced_pair_disagrees": self.forced_pair_disagrees,
            "failures": 0 if self.forced_pair_disagrees else 1,
            "seed": self.seed,
        }
        if self.example_pair is not None:
            pair = np.vstack([s.amplitudes for s in self.example_pair])
            edges = batch_edges(pair)
            payload["example"] = {
                "fill": list(batch_fill(edges)),
                "gmc_edge": list(edges.min(axis=1)),
            }
        return dumps12(payload)


def find_inequivalence_pairs(n: int, seed: int, margin: float = 1e-9) -> InequivalenceScan:
    """Scan ``n`` sampled state pairs (plus one forced, known-inequivalent
    pair) and count how often fill and GMC rank a pair oppositely."""
    if n < 2:
        raise ValueError("need at least 2 pairs")
    t0 = time.perf_counter()
    amps = haar_amplitudes(seed, 2 * n)
    edges = batch_edges(amps)
    fill = batch_fill(edges)
    gmc_edge = edges.min(axis=1)
    d_fill = fill[0::2] - fill[1::2]
    d_gmc = gmc_edge[0::2] - gmc_edge[1::2]
    flips = ((d_fill > margin) & (d_gmc < -margin)) | ((d_fill < -margin) & (d_gmc > margin))

    forced = (named_state("Psi1"), named_state("Psi2"))
    forced_disagrees = measures_disagree(*forced, margin=margin)

    example: tuple[ThreeQubitState, ThreeQubitState] | None = None
    if forced_disagrees:
        example = forced
    elif flips.any():
        k = int(np.argmax(flips))
        example = (ThreeQubitState(amps[2 * k]), ThreeQubitState(amps[2 * k + 1]))

    return InequivalenceScan(
        pairs_checked=n + 1,
        disagreements=int(flips.sum()) + int(forced_disagrees),
        forced_pair_disagrees=forced_disagrees,
        example_pair=example,
        seed=seed,
        elapsed=time.perf_counter() - t0,
    )


SUITE_NAMES = (
    "polygon-inequality",
    "squared-inequality",
    "y-polygon",
    "no-area",
    "f-ratio",
    "ckw-consistency",
    "lu-invariance",
    "inequivalence",
)


def run_suite(name: str, n: int, seed: int, **no_area_kwargs):
    """Run one named suite; returns a VerificationReport or, for the
    inequivalence scan, an InequivalenceScan."""
    if name == "polygon-inequality":
        return check_polygon_inequality(n, seed)
    if name == "squared-inequality":
        return check_squared_inequality(n, seed)
    if name == "y-polygon":
        return check_y_polygon(n, seed)
    if name == "no-area":
        return check_no_area_theorem(n, seed, **no_area_kwargs)
    if name == "f-ratio":
        return check_f_ratio_monotonicity(n)
    if name == "ckw-consistency":
        return check_ckw_consistency(n, seed)
    if name == "lu-invariance":
        return check_lu_invariance(n, seed)
    if name == "inequivalence":
        return find_inequivalence_pairs(max(2, n), seed)
    raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
