"""Entanglement measures built on the concurrence triangle.

The three squared one-to-other concurrences C^2_{1(23)}, C^2_{2(31)},
C^2_{3(12)} of a three-qubit pure state obey the triangle inequality, so
they serve as edge lengths of a triangle.  Everything here derives from
that picture: the normalized triangle area (concurrence fill), the
half-perimeter (global entanglement), the shortest edge (GMC), plus the
independent 3-tangle and the sigma average.

Scalar functions operate on :class:`~trifill.states.ThreeQubitState` /
:class:`ConcurrenceTriangle`; the ``batch_*`` functions are the vectorized
lane over (n, 8) amplitude arrays used by the verification suites.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._format import dumps12
from .errors import DomainError, NotDensityMatrixError, TriangleViolationError
from .states import DensityMatrix, ThreeQubitState

__all__ = [
    "ConcurrenceTriangle",
    "MeasureReport",
    "one_to_other_concurrence_sq",
    "concurrence_triangle",
    "concurrence_fill",
    "global_entanglement",
    "gmc",
    "ggm",
    "wootters_concurrence",
    "three_tangle",
    "three_tangle_ckw",
    "sigma_measure",
    "schmidt_weight",
    "full_report",
    "batch_edges",
    "batch_fill",
    "batch_tangle",
    "batch_pair_concurrences",
]

_INV_SQRT3_4 = 4.0 / math.sqrt(3.0)

# Heron radicand below this is inconsistent input, not floating-point leakage
_RADICAND_REJECT = -1e-9


@dataclass(frozen=True)
class ConcurrenceTriangle:
    """Edge lengths (a, b, c) = (C^2_{1(23)}, C^2_{2(31)}, C^2_{3(12)}).

    Edges must lie in [0, 1] up to 1e-12 of leakage and are clamped into
    the interval on construction.
    """

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name, edge in zip("abc", (self.a, self.b, self.c)):
            if not -1e-12 <= edge <= 1.0 + 1e-12:
                raise ValueError(f"edge {name}={edge} outside [0, 1]")
            object.__setattr__(self, name, min(max(float(edge), 0.0), 1.0))

    @property
    def edges(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    @property
    def min_edge(self) -> float:
        return min(self.edges)

    @property
    def max_edge(self) -> float:
        return max(self.edges)


@dataclass(frozen=True)
class MeasureReport:
    """Every measure of one state, plus its entanglement class."""

    triangle: ConcurrenceTriangle
    fill: float
    global_q: float
    gmc_edge: float
    gmc_sqrt: float
    tangle: float
    sigma: float
    schmidt_weights: tuple[float, float, float]
    state_class: "StateClass"  # noqa: F821 - defined in trifill.classify

    def to_dict(self) -> dict:
        return {
            "triangle": {"a": self.triangle.a, "b": self.triangle.b, "c": self.triangle.c},
            "fill": self.fill,
            "global_q": self.global_q,
            "gmc_edge": self.gmc_edge,
            "gmc_sqrt": self.gmc_sqrt,
            "tangle": self.tangle,
            "sigma": self.sigma,
            "schmidt_weights": list(self.schmidt_weights),
            "class": self.state_class.label,
        }

    def to_json(self, indent: int | None = None) -> str:
        return dumps12(self.to_dict(), indent=indent)

    def scalars(self) -> dict[str, float]:
        """The local-unitary-invariant numbers, keyed by report field."""
        out = {
            "fill": self.fill,
            "global_q": self.global_q,
            "gmc_edge": self.gmc_edge,
            "gmc_sqrt": self.gmc_sqrt,
            "tangle": self.tangle,
            "sigma": self.sigma,
        }
        for n, y in enumerate(self.schmidt_weights, start=1):
            out[f"y{n}"] = y
        return out


# ---------------------------------------------------------------------------
# vectorized kernels


def batch_edges(amps: np.ndarray) -> np.ndarray:
    """Triangle edges for an (n, 8) amplitude array -> (n, 3).

    Edge i is 2(1 - Tr rho_i^2), clamped into [0, 1].
    """
    t = np.asarray(amps).reshape(-1, 2, 2, 2)
    c = t.conj()
    marginals = (
        np.einsum("nijk,nljk->nil", t, c),
        np.einsum("nijk,nilk->njl", t, c),
        np.einsum("nijk,nijl->nkl", t, c),
    )
    out = np.empty((t.shape[0], 3))
    for col, rho in enumerate(marginals):
        purity = np.einsum("nab,nba->n", rho, rho).real
        out[:, col] = 2.0 * (1.0 - purity)
    return np.clip(out, 0.0, 1.0)


def batch_fill(edges: np.ndarray) -> np.ndarray:
    """Concurrence fill from an (n, 3) edge array -> (n,)."""
    edges = np.asarray(edges, dtype=np.float64)
    a, b, c = edges[:, 0], edges[:, 1], edges[:, 2]
    q = 0.5 * (a + b + c)
    radicand = q * (q - a) * (q - b) * (q - c)
    if radicand.size and radicand.min() < _RADICAND_REJECT:
        raise TriangleViolationError(
            f"Heron radicand {radicand.min():.3g} below {_RADICAND_REJECT}; "
            "edges do not satisfy the squared triangle inequality"
        )
    return _INV_SQRT3_4 * np.sqrt(np.maximum(radicand, 0.0))


def batch_tangle(amps: np.ndarray) -> np.ndarray:
    """3-tangle via the degree-4 hyperdeterminant, tau = 4|d1 - 2 d2 + 4 d3|.

    With a_i the amplitude of basis index i:
      d1 = a0^2 a7^2 + a1^2 a6^2 + a2^2 a5^2 + a4^2 a3^2
      d2 = a0 a7 (a3 a4 + a2 a5 + a1 a6) + a3 a4 (a2 a5 + a1 a6) + a1 a2 a5 a6
      d3 = a0 a3 a5 a6 + a1 a2 a4 a7
    """
    a = np.asarray(amps).reshape(-1, 8)
    d1 = (a[:, 0] * a[:, 7]) ** 2 + (a[:, 1] * a[:, 6]) ** 2
    d1 += (a[:, 2] * a[:, 5]) ** 2 + (a[:, 4] * a[:, 3]) ** 2
    p34 = a[:, 3] * a[:, 4]
    p25 = a[:, 2] * a[:, 5]
    p16 = a[:, 1] * a[:, 6]
    d2 = a[:, 0] * a[:, 7] * (p34 + p25 + p16) + p34 * (p25 + p16) + p25 * p16
    d3 = a[:, 0] * a[:, 3] * a[:, 5] * a[:, 6] + a[:, 1] * a[:, 2] * a[:, 4] * a[:, 7]
    return np.clip(4.0 * np.abs(d1 - 2.0 * d2 + 4.0 * d3), 0.0, 1.0)


_SYSY = np.zeros((4, 4))
_SYSY[0, 3] = _SYSY[3, 0] = -1.0
_SYSY[1, 2] = _SYSY[2, 1] = 1.0  # sigma_y (x) sigma_y, real


def _wootters_from_rho(rhos: np.ndarray) -> np.ndarray:
    """Wootters concurrence for a stack of 4x4 density matrices -> (n,).

    Eigenvalues of the non-Hermitian product rho * rho~ are real and
    nonnegative in theory; numerically we take real parts, clamp negatives,
    and zero everything below 1e-12 of the largest eigenvalue (for rank-2
    marginals the spurious near-zero pair otherwise injects sqrt(eps) noise
    into the concurrence).
    """
    rho_tilde = _SYSY @ rhos.conj() @ _SYSY
    lam = np.linalg.eigvals(rhos @ rho_tilde).real
    lam = np.maximum(lam, 0.0)
    lam[lam < 1e-12 * lam.max(axis=-1, keepdims=True)] = 0.0
    lam = np.sort(lam, axis=-1)[..., ::-1]
    root = np.sqrt(lam)
    return np.maximum(0.0, root[..., 0] - root[..., 1] - root[..., 2] - root[..., 3])


def batch_pair_concurrences(amps: np.ndarray) -> np.ndarray:
    """Wootters concurrences of the pair marginals -> (n, 3), columns
    ordered (C_12, C_13, C_23)."""
    t = np.asarray(amps).reshape(-1, 2, 2, 2)
    c = t.conj()
    n = t.shape[0]
    rho12 = np.einsum("nijk,nlmk->nijlm", t, c).reshape(n, 4, 4)
    rho13 = np.einsum("nijk,nljm->niklm", t, c).reshape(n, 4, 4)
    rho23 = np.einsum("nijk,nilm->njklm", t, c).reshape(n, 4, 4)
    out = np.empty((n, 3))
    for col, rho in enumerate((rho12, rho13, rho23)):
        out[:, col] = _wootters_from_rho(rho)
    return out


# ---------------------------------------------------------------------------
# scalar API


def one_to_other_concurrence_sq(state: ThreeQubitState, i: int) -> float:
    """C^2_{i(jk)} = 2(1 - Tr rho_i^2), the squared concurrence between
    qubit ``i`` and the remaining pair; clamped into [0, 1]."""
    if i not in (1, 2, 3):
        raise ValueError(f"qubit index must be 1, 2 or 3, got {i}")
    return float(batch_edges(state.amplitudes[None, :])[0, i - 1])


def concurrence_triangle(state: ThreeQubitState) -> ConcurrenceTriangle:
    """The concurrence triangle of a state."""
    a, b, c = batch_edges(state.amplitudes[None, :])[0]
    return ConcurrenceTriangle(a, b, c)


def concurrence_fill(t: ConcurrenceTriangle) -> float:
    """Normalized triangle area by Heron's formula,

        F = (4/sqrt(3)) * sqrt(Q (Q-a) (Q-b) (Q-c)),  Q = (a+b+c)/2.

    Radicands in [-1e-9, 0) are floating-point leakage near degenerate
    triangles and clamp to 0; anything lower raises
    :class:`~trifill.errors.TriangleViolationError`.
    """
    return float(batch_fill(np.array([t.edges]))[0])


def global_entanglement(t: ConcurrenceTriangle) -> float:
    """Half-perimeter Q = (a + b + c)/2, in [0, 3/2]."""
    return 0.5 * (t.a + t.b + t.c)


def gmc(t: ConcurrenceTriangle) -> tuple[float, float]:
    """Genuinely multipartite concurrence, as ``(shortest edge, its sqrt)``.

    The shortest-edge convention is used by every comparison and report in
    this package; the square root is the measure's original normalization.
    Both order states identically.  The generalized geometric measure
    coincides with GMC for three qubits, so :func:`ggm` is this function.
    """
    edge = t.min_edge
    return edge, math.sqrt(edge)


ggm = gmc


def wootters_concurrence(rho: DensityMatrix | np.ndarray) -> float:
    """Two-qubit mixed-state concurrence max(0, sqrt(l1)-sqrt(l2)-sqrt(l3)-sqrt(l4))
    with l1 >= ... >= l4 the eigenvalues of rho (sy x sy) rho* (sy x sy).

    Accepts a 4x4 :class:`DensityMatrix` or a raw matrix, which is then
    checked to be Hermitian, unit-trace and PSD within 1e-10.
    """
    if isinstance(rho, DensityMatrix):
        mat = rho.matrix
        if rho.dim != 4:
            raise NotDensityMatrixError("concurrence needs a two-qubit (4x4) density matrix")
    else:
        mat = np.asarray(rho, dtype=np.complex128)
        if mat.shape != (4, 4):
            raise NotDensityMatrixError(f"expected a 4x4 matrix, got {mat.shape}")
        if np.abs(mat - mat.conj().T).max() > 1e-10:
            raise NotDensityMatrixError("matrix is not Hermitian within 1e-10")
        if abs(np.trace(mat) - 1.0) > 1e-10:
            raise NotDensityMatrixError("trace differs from 1 by more than 1e-10")
        if np.linalg.eigvalsh(mat).min() < -1e-10:
            raise NotDensityMatrixError("matrix has an eigenvalue below -1e-10")
    return float(_wootters_from_rho(mat[None, :, :])[0])


def three_tangle(state: ThreeQubitState) -> float:
    """3-tangle of a pure state via the hyperdeterminant route (see
    :func:`batch_tangle`); clamped into [0, 1].  Zero on the W class,
    positive on the GHZ class."""
    return float(batch_tangle(state.amplitudes[None, :])[0])


def three_tangle_ckw(state: ThreeQubitState, pivot: int = 1) -> float:
    """3-tangle as the monogamy residual tau = C^2_{p(qr)} - C^2_{pq} - C^2_{pr}
    for pivot qubit ``p``, with pairwise terms from :func:`wootters_concurrence`.

    Independent of :func:`three_tangle` up to numerical error; kept as the
    cross-check route (the hyperdeterminant needs no eigensolve and is the
    route of record).
    """
    if pivot not in (1, 2, 3):
        raise ValueError(f"pivot must be 1, 2 or 3, got {pivot}")
    pairs = batch_pair_concurrences(state.amplitudes[None, :])[0]
    edge = one_to_other_concurrence_sq(state, pivot)
    # columns of `pairs` are (C_12, C_13, C_23); pick the two touching pivot
    touching = {1: (0, 1), 2: (0, 2), 3: (1, 2)}[pivot]
    return float(edge - pairs[touching[0]] ** 2 - pairs[touching[1]] ** 2)


def sigma_measure(state: ThreeQubitState) -> float:
    """The average (tangle + shortest edge)/2."""
    tri = concurrence_triangle(state)
    return 0.5 * (three_tangle(state) + gmc(tri)[0])


def schmidt_weight(c_squared):
    """Normalized Schmidt weight Y = 1 - sqrt(1 - C^2); accepts scalars or
    arrays in [0, 1] (up to 1e-12 of leakage, which is clamped)."""
    x = np.asarray(c_squared, dtype=np.float64)
    if x.size and (x.min() < -1e-12 or x.max() > 1.0 + 1e-12):
        raise DomainError("squared concurrence must lie in [0, 1]")
    y = 1.0 - np.sqrt(1.0 - np.clip(x, 0.0, 1.0))
    return float(y) if np.isscalar(c_squared) else y


def full_report(state: ThreeQubitState) -> MeasureReport:
    """Compute every measure and the class label for one state."""
    from .classify import classify_triangle  # deferred: classify builds on measures

    tri = concurrence_triangle(state)
    tangle = three_tangle(state)
    edge, root = gmc(tri)
    return MeasureReport(
        triangle=tri,
        fill=concurrence_fill(tri),
        global_q=global_entanglement(tri),
        gmc_edge=edge,
        gmc_sqrt=root,
        tangle=tangle,
        sigma=0.5 * (tangle + edge),
        schmidt_weights=tuple(schmidt_weight(e) for e in tri.edges),
        state_class=classify_triangle(tri, tangle),
    )
