"""Brute-force 2**N product-basis cross-check for the symmetric-sector path.

Everything here works on the full tensor-product amplitude vector and builds
collective quantities by summing explicit single-atom operator actions, so
it shares no reduction formula with the ladder-basis modules.  Operators are
applied matrix-free by bit manipulation on basis indices: basis index b has
atom i stored in bit (N-1-i), atom 0 being the most significant bit, with
bit value 0 for the upper level.

Single-atom spin-1/2 actions on the levels |u> (bit 0) and |l> (bit 1):

    x:  |u> -> (1/2)|l>,   |l> -> (1/2)|u>
    y:  |u> -> (i/2)|l>,   |l> -> (-i/2)|u>
    z:  |u> -> (1/2)|u>,   |l> -> (-1/2)|l>

The exponential dimension is capped (default 14 atoms) and every function
that allocates a 2**N vector takes an overridable cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .dicke import DickeState, CollectiveMoments, PairCorrelators, \
    NORM_TOLERANCE
from .errors import DegenerateMeanSpinError, DimensionCapError, \
    InsufficientAtomsError, NotSymmetricError, WrongAtomCountError
from .frame import Frame, MeanSpin, build_frame, mean_spin
from .metrics import Classification, MetricsReport, DEFAULT_S_TOLERANCE, \
    classify, correlation_terms, entanglement_parameter, \
    spectroscopic_parameters, squeezing_parameters
from .frame import DEFAULT_EPSILON

DEFAULT_DIMENSION_CAP = 14

_AXES = ("x", "y", "z")

# Schmidt-rank threshold on the smaller singular value of the 2x2 reshape.
_SCHMIDT_TOLERANCE = 1e-10

_SYMMETRY_TOLERANCE = 1e-10

_IMAG_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class FullState:
    """Immutable state in the full 2**n_atoms product basis."""

    n_atoms: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not isinstance(self.n_atoms, (int, np.integer)) or self.n_atoms < 1:
            raise ValueError(f"n_atoms must be positive, got {self.n_atoms!r}")
        arr = np.array(self.amplitudes, dtype=complex)
        if arr.shape != (1 << self.n_atoms,):
            raise ValueError(
                f"expected {1 << self.n_atoms} amplitudes for n_atoms="
                f"{self.n_atoms}, got shape {arr.shape}")
        norm2 = float(np.sum(np.abs(arr) ** 2))
        if abs(norm2 - 1.0) > NORM_TOLERANCE:
            raise ValueError(
                f"squared amplitude magnitudes sum to {norm2!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "amplitudes", arr)
        object.__setattr__(self, "n_atoms", int(self.n_atoms))


@dataclass(frozen=True)
class OracleReport:
    """Everything the brute-force path computes for one state.

    per_atom_var_xp / per_atom_var_yp hold the rotated single-atom variances
    (1/4 each for exchange-symmetric states); correlators is the direct
    two-site evaluation on atoms 0 and 1.  Frame-degenerate states carry
    frame None and a report with None metrics, like the ladder path.
    """

    moments: CollectiveMoments
    mean_spin: MeanSpin
    frame: Frame | None
    correlators: PairCorrelators | None
    per_atom_var_xp: tuple[float, ...] | None
    per_atom_var_yp: tuple[float, ...] | None
    report: MetricsReport


@lru_cache(maxsize=None)
def _hamming_weights(n_atoms: int) -> np.ndarray:
    # weights[b] = number of set bits of b, built by doubling.
    w = np.zeros(1, dtype=np.intp)
    for _ in range(n_atoms):
        w = np.concatenate([w, w + 1])
    w.setflags(write=False)
    return w


def _check_cap(n_atoms: int, cap: int):
    if n_atoms > cap:
        raise DimensionCapError(
            f"n_atoms={n_atoms} exceeds the 2**N dimension cap {cap}")


def dicke_to_full(state: DickeState,
                  cap: int = DEFAULT_DIMENSION_CAP) -> FullState:
    """Expand ladder-basis coefficients into the full product basis.

    Each coefficient spreads uniformly over its fixed-excitation-count orbit:
    a basis state with k lower-level atoms receives c_k / sqrt(C(N, k)).
    """
    _check_cap(state.n_atoms, cap)
    n = state.n_atoms
    weights = _hamming_weights(n)
    binom = np.array([math.comb(n, k) for k in range(n + 1)], dtype=float)
    amps = state.coefficients[weights] / np.sqrt(binom[weights])
    return FullState(n, amps)


def full_to_dicke(state: FullState, tolerance: float = _SYMMETRY_TOLERANCE
                  ) -> DickeState:
    """Project a full product-basis state back to ladder-basis coefficients.

    Requires genuine exchange symmetry: within every fixed-excitation orbit
    all amplitudes must agree within tolerance of their mean.
    """
    n = state.n_atoms
    weights = _hamming_weights(n)
    coeffs = np.zeros(n + 1, dtype=complex)
    for k in range(n + 1):
        orbit = state.amplitudes[weights == k]
        center = orbit.mean()
        spread = float(np.max(np.abs(orbit - center)))
        if spread > tolerance:
            raise NotSymmetricError(
                f"orbit with {k} excited lower levels has amplitude spread "
                f"{spread:.3e}, above {tolerance:.3e}")
        coeffs[k] = center * math.sqrt(math.comb(n, k))
    return DickeState(n, coeffs)


def single_atom_action(amplitudes: np.ndarray, n_atoms: int, atom_index: int,
                       axis: str) -> np.ndarray:
    """Apply one atom's spin-1/2 component to a raw 2**N amplitude vector.

    Matrix-free: partner indices come from flipping the atom's bit, signs
    from reading it.  Accepts unnormalized vectors so actions compose.
    """
    if not 0 <= atom_index < n_atoms:
        raise IndexError(
            f"atom_index {atom_index} out of range for {n_atoms} atoms")
    if axis not in _AXES:
        raise ValueError(f"axis must be one of {_AXES}, got {axis!r}")
    shift = n_atoms - 1 - atom_index
    idx = np.arange(1 << n_atoms)
    bit = (idx >> shift) & 1
    if axis == "z":
        return np.where(bit == 0, 0.5, -0.5) * amplitudes
    flipped = amplitudes[idx ^ (1 << shift)]
    if axis == "x":
        return 0.5 * flipped
    # y: the amplitude arriving on |l> (bit 1) picks up +i/2, on |u> -i/2.
    return 0.5j * np.where(bit == 1, flipped, -flipped)


def single_atom_operator(state: FullState, atom_index: int,
                         axis: str) -> np.ndarray:
    """single_atom_action applied to a FullState's amplitudes."""
    return single_atom_action(state.amplitudes, state.n_atoms, atom_index,
                              axis)


def _real_part(value: complex) -> float:
    assert abs(value.imag) < _IMAG_TOLERANCE, (
        f"Hermitian expectation has imaginary residue {value.imag:.3e}")
    return value.real


def schmidt_rank_two_atoms(state: FullState) -> int:
    """Schmidt rank (1 or 2) of a two-atom state via its 2x2 reshape.

    Rank 1 (a product state) is declared when the smaller singular value
    falls below 1e-10.
    """
    if state.n_atoms != 2:
        raise WrongAtomCountError(
            f"Schmidt rank check is for exactly 2 atoms, got {state.n_atoms}")
    singular = np.linalg.svd(state.amplitudes.reshape(2, 2),
                             compute_uv=False)
    return 1 if float(singular[-1]) < _SCHMIDT_TOLERANCE else 2


def oracle_metrics(state: FullState, cap: int = DEFAULT_DIMENSION_CAP,
                   epsilon: float = DEFAULT_EPSILON,
                   s_tolerance: float = DEFAULT_S_TOLERANCE) -> OracleReport:
    """Recompute the whole report in the 2**N space, reduction-free.

    Collective operators are sums of the N single-atom actions; rotated
    variances come from applying the rotated collective operator directly,
    never from the nine-moment expansion; pair correlators are direct
    two-site expectations on atoms 0 and 1.
    """
    _check_cap(state.n_atoms, cap)
    n = state.n_atoms
    if n < 2:
        raise InsufficientAtomsError(
            f"oracle analysis needs at least 2 atoms, got {n}")
    amps = state.amplitudes
    actions = {axis: [single_atom_action(amps, n, i, axis) for i in range(n)]
               for axis in _AXES}
    collective = {axis: np.sum(actions[axis], axis=0) for axis in _AXES}

    firsts = {axis: _real_part(complex(np.vdot(amps, collective[axis])))
              for axis in _AXES}
    seconds = {axis: float(np.vdot(collective[axis], collective[axis]).real)
               for axis in _AXES}

    def sym(a: str, b: str) -> float:
        # <Ja Jb + Jb Ja> = 2 Re <Ja psi|Jb psi>; the imaginary part is the
        # commutator expectation and is legitimately nonzero, so no residue
        # assertion applies here.
        return 2.0 * float(np.vdot(collective[a], collective[b]).real)

    moments = CollectiveMoments(
        jx=firsts["x"], jy=firsts["y"], jz=firsts["z"],
        jx2=seconds["x"], jy2=seconds["y"], jz2=seconds["z"],
        sym_xy=sym("x", "y"), sym_xz=sym("x", "z"), sym_yz=sym("y", "z"))
    spin = mean_spin(moments)

    correlators = PairCorrelators(
        xx=_real_part(complex(np.vdot(actions["x"][0], actions["x"][1]))),
        yy=_real_part(complex(np.vdot(actions["y"][0], actions["y"][1]))),
        zz=_real_part(complex(np.vdot(actions["z"][0], actions["z"][1]))),
        xy=_real_part(complex(np.vdot(actions["x"][0], actions["y"][1]))),
        xz=_real_part(complex(np.vdot(actions["x"][0], actions["z"][1]))),
        yz=_real_part(complex(np.vdot(actions["y"][0], actions["z"][1]))))

    try:
        frame = build_frame(spin, epsilon)
    except DegenerateMeanSpinError:
        report = MetricsReport(
            n_atoms=n, var_xp=None, var_yp=None, corr_x=None, corr_y=None,
            s_param=None, q_x=None, q_y=None, xi_rx=None, xi_ry=None,
            classification=Classification.DEGENERATE_FRAME)
        return OracleReport(moments=moments, mean_spin=spin, frame=None,
                            correlators=correlators, per_atom_var_xp=None,
                            per_atom_var_yp=None, report=report)

    ct, st = frame.cos_theta, frame.sin_theta
    cp, sp = frame.cos_phi, frame.sin_phi

    def variance(acted: np.ndarray) -> float:
        first = _real_part(complex(np.vdot(amps, acted)))
        return float(np.vdot(acted, acted).real) - first * first

    xp_vec = (ct * cp * collective["x"] + ct * sp * collective["y"]
              - st * collective["z"])
    yp_vec = -sp * collective["x"] + cp * collective["y"]
    var_xp = variance(xp_vec)
    var_yp = variance(yp_vec)

    per_atom_xp = []
    per_atom_yp = []
    for i in range(n):
        per_atom_xp.append(variance(ct * cp * actions["x"][i]
                                    + ct * sp * actions["y"][i]
                                    - st * actions["z"][i]))
        per_atom_yp.append(variance(-sp * actions["x"][i]
                                    + cp * actions["y"][i]))

    corr_x, corr_y = correlation_terms(var_xp, var_yp, n)
    s_param = entanglement_parameter(corr_x, corr_y)
    q_x, q_y = squeezing_parameters(var_xp, var_yp, n)
    xi_rx, xi_ry = spectroscopic_parameters(q_x, q_y, spin.magnitude, n,
                                            epsilon)
    report = MetricsReport(
        n_atoms=n, var_xp=var_xp, var_yp=var_yp, corr_x=corr_x,
        corr_y=corr_y, s_param=s_param, q_x=q_x, q_y=q_y, xi_rx=xi_rx,
        xi_ry=xi_ry, classification=classify(s_param,
                                             s_tolerance=s_tolerance))
    return OracleReport(moments=moments, mean_spin=spin, frame=frame,
                        correlators=correlators,
                        per_atom_var_xp=tuple(per_atom_xp),
                        per_atom_var_yp=tuple(per_atom_yp),
                        report=report)
