"""Three-qubit pure states: construction, marginals, local unitaries, sampling.

Basis convention used everywhere (including serialization): amplitude index
``4*q1 + 2*q2 + q3`` for the basis ket ``|q1 q2 q3>``, i.e. qubit 1 is the
most significant bit.  Qubit indices in the public API are 1-based.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    InvalidPairError,
    NormalizationError,
    NotDensityMatrixError,
    NotUnitaryError,
    StateFormatError,
    ZeroVectorError,
)

__all__ = [
    "ThreeQubitState",
    "DensityMatrix",
    "CanonicalParams",
    "NAMED_STATE_NAMES",
    "named_state",
    "from_canonical",
    "partial_trace_single",
    "partial_trace_pair",
    "apply_local_unitary",
    "parse_state",
    "emit_state",
    "haar_amplitudes",
    "canonical_amplitudes",
    "sample_haar",
    "sample_canonical",
    "sample_local_unitaries",
]

_QUBITS = (1, 2, 3)


@dataclass(frozen=True, eq=False)
class ThreeQubitState:
    """A normalized ray in (C^2)^{x3}, stored as 8 complex amplitudes.

    Construction renormalizes, so user-entered decimals that miss unit norm
    by rounding are accepted; only the zero vector is rejected.  The global
    phase is left untouched (every measure must be phase-invariant anyway).
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128, copy=True)
        if amps.shape != (8,):
            raise ValueError(f"expected 8 amplitudes, got shape {amps.shape}")
        if not np.all(np.isfinite(amps.view(np.float64))):
            raise ValueError("amplitudes must be finite")
        scale = np.abs(amps).max()
        if scale == 0.0:
            raise ZeroVectorError("all amplitudes are zero")
        # pre-scaling keeps the norm accurate even for denormal inputs
        scaled = amps / scale
        norm = np.linalg.norm(scaled)
        if abs(norm * scale - 1.0) > 1e-12:
            amps = scaled / norm
        # else: already unit norm; keep the input bitwise so that text
        # round-trips and re-measurement are exact
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def as_tensor(self) -> np.ndarray:
        """Amplitudes reshaped to (2, 2, 2) with axes (q1, q2, q3)."""
        return self.amplitudes.reshape(2, 2, 2)

    def __repr__(self) -> str:
        rows = ", ".join(f"{z:.6g}" for z in self.amplitudes)
        return f"ThreeQubitState([{rows}])"


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A 2x2 or 4x4 density matrix (used for the reduced states of a pure
    three-qubit state).  Construction enforces Hermiticity (1e-12), unit
    trace (1e-12) and eigenvalues >= -1e-10."""

    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] not in (2, 4):
            raise NotDensityMatrixError(f"expected a 2x2 or 4x4 matrix, got {mat.shape}")
        if np.abs(mat - mat.conj().T).max() > 1e-12:
            raise NotDensityMatrixError("matrix is not Hermitian within 1e-12")
        if abs(np.trace(mat).real - 1.0) > 1e-12 or abs(np.trace(mat).imag) > 1e-12:
            raise NotDensityMatrixError("trace differs from 1 by more than 1e-12")
        if np.linalg.eigvalsh(mat).min() < -1e-10:
            raise NotDensityMatrixError("matrix has an eigenvalue below -1e-10")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        """Tr rho^2."""
        return float(np.einsum("ab,ba->", self.matrix, self.matrix).real)


@dataclass(frozen=True)
class CanonicalParams:
    """Parameters of the five-term canonical form

        |psi> = l0|000> + l1 e^{i phi}|100> + l2|101> + l3|110> + l4|111>

    with all ``l`` nonnegative, ``phi`` in [0, pi] and sum of squares 1.
    """

    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    phi: float = 0.0

    def __post_init__(self):
        lams = self.lambdas
        if min(lams) < 0.0:
            raise ValueError("canonical weights must be nonnegative")
        if not 0.0 <= self.phi <= math.pi:
            raise ValueError("phi must lie in [0, pi]")
        if abs(sum(l * l for l in lams) - 1.0) > 1e-12:
            raise NormalizationError("canonical weights must have unit sum of squares")

    @property
    def lambdas(self) -> tuple[float, float, float, float, float]:
        return (self.lambda0, self.lambda1, self.lambda2, self.lambda3, self.lambda4)


def _ket(*indices_and_values) -> np.ndarray:
    amps = np.zeros(8, dtype=np.complex128)
    for idx, val in indices_and_values:
        amps[idx] = val
    return amps


_SQ2 = 1.0 / math.sqrt(2.0)
_SQ3 = 1.0 / math.sqrt(3.0)

_NAMED_BUILDERS = {
    "GHZ": lambda: _ket((0, _SQ2), (7, _SQ2)),
    "W": lambda: _ket((1, _SQ3), (2, _SQ3), (4, _SQ3)),
    "Psi1": lambda: _ket(
        (0, _SQ2 * math.sin(math.pi / 5)),
        (4, _SQ2 * math.cos(math.pi / 5)),
        (7, _SQ2),
    ),
    "Psi2": lambda: _ket((0, math.cos(math.pi / 8)), (7, math.sin(math.pi / 8))),
    "Psi3": lambda: _ket((0, 0.5), (4, 0.5), (7, _SQ2)),
    "Ket000": lambda: _ket((0, 1.0)),
    # qubit 3 in |0>, Bell pair on qubits 1 and 2
    "BellTimesKet0": lambda: _ket((0, _SQ2), (6, _SQ2)),
}

NAMED_STATE_NAMES = tuple(_NAMED_BUILDERS)
_NAMED_LOOKUP = {name.lower(): name for name in _NAMED_BUILDERS}


def named_state(name: str) -> ThreeQubitState:
    """Return one of the built-in reference states (case-insensitive name).

    Known names: GHZ, W, Psi1, Psi2, Psi3, Ket000, BellTimesKet0.
    """
    key = _NAMED_LOOKUP.get(str(name).lower())
    if key is None:
        raise ValueError(f"unknown named state {name!r}; known: {', '.join(_NAMED_BUILDERS)}")
    return ThreeQubitState(_NAMED_BUILDERS[key]())


def from_canonical(params: CanonicalParams) -> ThreeQubitState:
    """Build the state for a set of canonical parameters."""
    amps = _ket(
        (0, params.lambda0),
        (4, params.lambda1 * np.exp(1j * params.phi)),
        (5, params.lambda2),
        (6, params.lambda3),
        (7, params.lambda4),
    )
    return ThreeQubitState(amps)


# ---------------------------------------------------------------------------
# reduced density matrices


def partial_trace_single(state: ThreeQubitState, i: int) -> DensityMatrix:
    """2x2 marginal of qubit ``i`` (1-based), tracing out the other two."""
    if i not in _QUBITS:
        raise ValueError(f"qubit index must be 1, 2 or 3, got {i}")
    t = np.moveaxis(state.as_tensor(), i - 1, 0).reshape(2, 4)
    return DensityMatrix(t @ t.conj().T)


def partial_trace_pair(state: ThreeQubitState, pair: tuple[int, int]) -> DensityMatrix:
    """4x4 marginal of the ordered qubit pair ``(j, k)``, tracing out the third.

    The row/column index of the result is ``2*qj + qk``.  For a pure input
    the result has rank at most 2.
    """
    j, k = pair
    if j not in _QUBITS or k not in _QUBITS:
        raise ValueError(f"qubit indices must be in 1..3, got {pair}")
    if j == k:
        raise InvalidPairError(f"pair must name two distinct qubits, got {pair}")
    t = np.moveaxis(state.as_tensor(), (j - 1, k - 1), (0, 1)).reshape(4, 2)
    return DensityMatrix(t @ t.conj().T)


def _check_unitary(u: np.ndarray, which: str) -> np.ndarray:
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (2, 2):
        raise NotUnitaryError(f"{which} must be 2x2, got {u.shape}")
    if np.abs(u.conj().T @ u - np.eye(2)).max() > 1e-10:
        raise NotUnitaryError(f"{which} fails the 1e-10 unitarity tolerance")
    return u


def apply_local_unitary(
    state: ThreeQubitState, u1: np.ndarray, u2: np.ndarray, u3: np.ndarray
) -> ThreeQubitState:
    """Apply ``u1 (x) u2 (x) u3`` to the state.  Each factor must be unitary
    within 1e-10 (user-supplied rotation matrices carry rounding)."""
    mats = [_check_unitary(u, f"u{n + 1}") for n, u in enumerate((u1, u2, u3))]
    out = np.einsum("ai,bj,ck,ijk->abc", *mats, state.as_tensor())
    return ThreeQubitState(out.reshape(8))


# ---------------------------------------------------------------------------
# text form

# {"amplitudes": [[re, im] x 8]} or {"named": "GHZ"}


def parse_state(text: str) -> ThreeQubitState:
    """Parse the JSON text form of a state."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise StateFormatError("expected a JSON object")
    keys = set(obj)
    if keys == {"named"}:
        return named_state(obj["named"])
    if keys != {"amplitudes"}:
        raise StateFormatError('expected exactly one of the keys "amplitudes" or "named"')
    pairs = obj["amplitudes"]
    if not isinstance(pairs, list) or len(pairs) != 8:
        raise StateFormatError("amplitudes must be a list of 8 [re, im] pairs")
    amps = np.empty(8, dtype=np.complex128)
    for n, pair in enumerate(pairs):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise StateFormatError(f"amplitude {n} is not a [re, im] pair of numbers")
        amps[n] = complex(pair[0], pair[1])
    return ThreeQubitState(amps)


def emit_state(state: ThreeQubitState) -> str:
    """Serialize to the canonical JSON text form; round-trips exactly."""
    pairs = [[z.real, z.imag] for z in state.amplitudes]
    return json.dumps({"amplitudes": pairs}, separators=(",", ":"))


# ---------------------------------------------------------------------------
# seeded sampling
#
# All randomness comes from the Philox-4x64 counter-based generator so every
# sample is a pure function of (seed, sample index), independent of batching
# or worker count.  Streams are separated through the Philox key:
#
#     key = (stream_id << 64) | (seed mod 2^64)
#
# Stream 0 feeds Haar states, stream 1 local unitaries, stream 2 canonical
# states.  Sample ``i`` of a stream with ``W`` words per sample owns the raw
# 64-bit output words ``W*i .. W*i + W - 1``; a word ``w`` maps to a uniform
# ``u = (w >> 11) * 2^-53`` in [0, 1), and word pairs map to a pair of
# standard normals by Box-Muller:
#
#     z0 = sqrt(-2 ln(1 - u_even)) * cos(2 pi u_odd)
#     z1 = sqrt(-2 ln(1 - u_even)) * sin(2 pi u_odd)

_MASK64 = (1 << 64) - 1
_STREAM_HAAR = 0
_STREAM_UNITARY = 1
_STREAM_CANONICAL = 2


def _raw_words(seed: int, stream: int, start_word: int, n_words: int) -> np.ndarray:
    # Philox emits 4 words per counter value, so windows stay block-aligned
    # as long as every per-sample stride is a multiple of 4.
    assert start_word % 4 == 0
    key = (stream << 64) | (int(seed) & _MASK64)
    bitgen = np.random.Philox(key=key, counter=start_word // 4)
    return bitgen.random_raw(n_words)


def _uniforms(words: np.ndarray) -> np.ndarray:
    return (words >> np.uint64(11)).astype(np.float64) * 2.0**-53


def _box_muller(words: np.ndarray) -> np.ndarray:
    """Map an (..., 2m) array of words to (..., 2m) standard normals."""
    u = _uniforms(words).reshape(*words.shape[:-1], -1, 2)
    radius = np.sqrt(-2.0 * np.log(1.0 - u[..., 0]))  # 1 - u in (0, 1]
    angle = 2.0 * np.pi * u[..., 1]
    out = np.empty_like(u)
    out[..., 0] = radius * np.cos(angle)
    out[..., 1] = radius * np.sin(angle)
    return out.reshape(words.shape)


def haar_amplitudes(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Amplitudes of Haar-random states as a (count, 8) complex array.

    Row ``r`` holds the state of global sample index ``start + r``: its 16
    stream-0 words become 16 normals (Box-Muller as documented above), the
    8 (re, im) pairs form the complex amplitudes, and the row is normalized.
    ``haar_amplitudes(s, n)[k]`` equals ``haar_amplitudes(s, 1, start=k)[0]``
    bitwise, which is what makes chunked and parallel runs reproducible.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return np.empty((0, 8), dtype=np.complex128)
    words = _raw_words(seed, _STREAM_HAAR, 16 * start, 16 * count).reshape(count, 16)
    z = _box_muller(words)
    amps = z[:, 0::2] + 1j * z[:, 1::2]
    return amps / np.linalg.norm(amps, axis=1, keepdims=True)


def canonical_amplitudes(
    seed: int, count: int, start: int = 0, boundary_bias: bool = False
) -> np.ndarray:
    """Amplitudes of random canonical-form states as a (count, 8) array.

    Sample ``i`` owns 8 stream-2 words.  Words 0-4 give Exp(1) variates
    ``-log(1 - u)`` whose normalization puts the squared weights uniformly
    on the simplex; word 6 gives ``phi`` uniform on [0, pi]; word 7 is
    reserved.  With ``boundary_bias`` the weight of axis ``i mod 5`` is
    multiplied by ``u5^4`` (word 5) before normalizing, which concentrates
    samples near the biseparable boundaries where the triangle degenerates.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return np.empty((0, 8), dtype=np.complex128)
    words = _raw_words(seed, _STREAM_CANONICAL, 8 * start, 8 * count).reshape(count, 8)
    u = _uniforms(words)
    weights = -np.log1p(-u[:, :5])
    if boundary_bias:
        axis = np.arange(start, start + count) % 5
        weights[np.arange(count), axis] *= u[:, 5] ** 4
    weights /= weights.sum(axis=1, keepdims=True)
    lam = np.sqrt(weights)
    phi = np.pi * u[:, 6]
    amps = np.zeros((count, 8), dtype=np.complex128)
    amps[:, 0] = lam[:, 0]
    amps[:, 4] = lam[:, 1] * np.exp(1j * phi)
    amps[:, 5] = lam[:, 2]
    amps[:, 6] = lam[:, 3]
    amps[:, 7] = lam[:, 4]
    return amps


def sample_local_unitaries(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Haar-random 2x2 unitary triples as a (count, 3, 2, 2) complex array.

    Sample ``i`` owns 24 stream-1 words -> 24 normals -> three 2x2 complex
    Gaussian matrices, each QR-decomposed with the R diagonal phases folded
    into Q (the standard Haar construction).
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    if count == 0:
        return np.empty((0, 3, 2, 2), dtype=np.complex128)
    words = _raw_words(seed, _STREAM_UNITARY, 24 * start, 24 * count).reshape(count, 24)
    z = _box_muller(words)
    g = (z[:, 0::2] + 1j * z[:, 1::2]).reshape(count, 3, 2, 2)
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    absd = np.abs(d)
    safe = absd > 0.0  # |d| = 0 has probability zero
    phase = np.where(safe, d, 1.0) / np.where(safe, absd, 1.0)
    return q * phase[..., None, :]


def sample_haar(rng_seed: int, count: int) -> list[ThreeQubitState]:
    """``count`` Haar-random states; see :func:`haar_amplitudes` for the
    exact seed-to-amplitudes mapping."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [ThreeQubitState(row) for row in haar_amplitudes(rng_seed, count)]


def sample_canonical(rng_seed: int, count: int, boundary_bias: bool = False) -> list[ThreeQubitState]:
    """``count`` random canonical-form states (optionally boundary-biased)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [
        ThreeQubitState(row)
        for row in canonical_amplitudes(rng_seed, count, boundary_bias=boundary_bias)
    ]
