"""Construction of the three-qubit states and their dissipative evolution.

Three cavity qubits (c1, c2, c3) each leak a single excitation into an
independent reservoir qubit (r1, r2, r3).  The elementary damping map sends
|1>_c|0>_r to xi(t)|10> + chi(t)|01> with xi = exp(-kt/2) and
chi = sqrt(1 - exp(-kt)), where kt is the dimensionless time (decay rate
times time).  An ancilla qubit z purifies GHZ/W mixtures so every evolved
state can be handled as a global pure state.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import DensityMatrix, PureState, SystemLayout, partial_trace

CAVITY_LAYOUT = SystemLayout(("c1", "c2", "c3"))
RESERVOIR_LAYOUT = SystemLayout(("r1", "r2", "r3"))
INITIAL_LAYOUT = SystemLayout(("c1", "c2", "c3", "z", "r1", "r2", "r3"))
GLOBAL_LAYOUT = SystemLayout(("c1", "r1", "c2", "r2", "c3", "r3", "z"))
PAIR_LAYOUT = SystemLayout(("c1", "r1", "c2", "r2", "c3", "r3"))


def _basis(n, index):
    v = np.zeros(2 ** n, dtype=complex)
    v[index] = 1.0
    return v


def ghz():
    """(|000> + |111>)/sqrt(2) on the cavity register."""
    amps = (_basis(3, 0b000) + _basis(3, 0b111)) / np.sqrt(2.0)
    return PureState(CAVITY_LAYOUT, amps)


def w():
    """(|001> + |010> + |100>)/sqrt(3) on the cavity register."""
    amps = (_basis(3, 0b001) + _basis(3, 0b010) + _basis(3, 0b100)) / np.sqrt(3.0)
    return PureState(CAVITY_LAYOUT, amps)


def generalized_ghz(a):
    """a|000> + b|111> with b = sqrt(1 - a^2), for a in [0, 1]."""
    b = _partner_amplitude(a)
    return PureState(CAVITY_LAYOUT, a * _basis(3, 0b000) + b * _basis(3, 0b111))


def _partner_amplitude(a):
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"amplitude a={a} outside [0, 1]")
    return np.sqrt(1.0 - a * a)


def _check_probability(p):
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mix probability p={p} outside [0, 1]")


def _check_time(kt):
    if kt < 0.0:
        raise ValueError(f"dimensionless time kt={kt} must be nonnegative")


def mixed_ghz_w(p):
    """The rank-2 cavity mixture p|GHZ><GHZ| + (1-p)|W><W|."""
    _check_probability(p)
    g = ghz().amplitudes
    v = w().amplitudes
    rho = p * np.outer(g, g.conj()) + (1.0 - p) * np.outer(v, v.conj())
    return DensityMatrix(CAVITY_LAYOUT, rho)


def amplitudes(kt):
    """Damping amplitudes (xi, chi) at dimensionless time kt.

    xi = exp(-kt/2) is the surviving-excitation amplitude, chi the leaked
    one; xi^2 + chi^2 = 1 for every kt >= 0.
    """
    _check_time(kt)
    xi = float(np.exp(-kt / 2.0))
    chi = float(np.sqrt(1.0 - np.exp(-kt)))
    return xi, chi


@dataclass(frozen=True)
class EvolutionPoint:
    """Parameter record for one point of an evolution: weight, time, amplitudes."""

    kt: float
    xi: float
    chi: float
    p: float | None = None
    a: float | None = None
    b: float | None = None

    def __post_init__(self):
        if abs(self.xi ** 2 + self.chi ** 2 - 1.0) > 1e-14:
            raise ValueError("amplitudes must satisfy xi^2 + chi^2 = 1")

    @classmethod
    def mixture(cls, p, kt):
        _check_probability(p)
        xi, chi = amplitudes(kt)
        return cls(kt=kt, xi=xi, chi=chi, p=p)

    @classmethod
    def generalized_ghz(cls, a, kt):
        b = _partner_amplitude(a)
        xi, chi = amplitudes(kt)
        return cls(kt=kt, xi=xi, chi=chi, a=a, b=b)


def purified_initial(p):
    """Purification of mixed_ghz_w(p) by the ancilla z, reservoirs in vacuum.

    Layout (c1, c2, c3, z, r1, r2, r3).  Tracing out z and the reservoirs
    recovers mixed_ghz_w(p).
    """
    _check_probability(p)
    g = np.kron(ghz().amplitudes, _basis(1, 0))
    v = np.kron(w().amplitudes, _basis(1, 1))
    amps = np.kron(np.sqrt(p) * g + np.sqrt(1.0 - p) * v, _basis(3, 0))
    return PureState(INITIAL_LAYOUT, amps)


def _pair_state(xi, chi):
    # one cavity-reservoir pair carrying a shared single excitation
    return xi * _basis(2, 0b10) + chi * _basis(2, 0b01)


def global_output_state_from_amplitudes(p, xi, chi):
    """Evolved 7-qubit pure state at explicit damping amplitudes (xi, chi).

    Layout (c1, r1, c2, r2, c3, r3, z).  The GHZ branch is tagged by z=0 and
    the W branch by z=1, so tracing out z recovers the evolved mixture.
    """
    _check_probability(p)
    ph = _pair_state(xi, chi)
    vac2 = _basis(2, 0)
    vac6 = _basis(6, 0)
    z0, z1 = _basis(1, 0), _basis(1, 1)
    triple = np.kron(np.kron(ph, ph), ph)
    ghz_branch = np.kron(vac6 + triple, z0)
    w_branch = np.kron(np.kron(np.kron(vac2, vac2), ph)
                       + np.kron(np.kron(vac2, ph), vac2)
                       + np.kron(np.kron(ph, vac2), vac2), z1)
    amps = np.sqrt(p / 2.0) * ghz_branch + np.sqrt((1.0 - p) / 3.0) * w_branch
    return PureState(GLOBAL_LAYOUT, amps)


def global_output_state(p, kt):
    """Evolved 7-qubit pure state of the GHZ/W mixture at time kt."""
    xi, chi = amplitudes(kt)
    return global_output_state_from_amplitudes(p, xi, chi)


def gghz_output_state_from_amplitudes(a, xi, chi):
    """Evolved 6-qubit generalized-GHZ state at explicit amplitudes."""
    b = _partner_amplitude(a)
    ph = _pair_state(xi, chi)
    amps = a * _basis(6, 0) + b * np.kron(np.kron(ph, ph), ph)
    return PureState(PAIR_LAYOUT, amps)


def gghz_output_state(a, kt):
    """Evolved 6-qubit pure state of a|000000> + b|phi phi phi> at time kt."""
    xi, chi = amplitudes(kt)
    return gghz_output_state_from_amplitudes(a, xi, chi)


def reduce(state, keep):
    """Reduced density matrix of a pure state on the kept qubits."""
    rho = np.outer(state.amplitudes, state.amplitudes.conj())
    return partial_trace(DensityMatrix(state.layout, rho), keep)


def reorder(state, new_layout):
    """Permute tensor factors of a pure state into a new label order."""
    if not isinstance(new_layout, SystemLayout):
        new_layout = SystemLayout(new_layout)
    if set(new_layout.labels) != set(state.layout.labels):
        raise ValueError(f"new layout {new_layout.labels} is not a permutation "
                         f"of {state.layout.labels}")
    n = state.layout.n_qubits
    perm = [state.layout.position(lab) for lab in new_layout.labels]
    amps = state.amplitudes.reshape((2,) * n).transpose(perm).reshape(-1)
    return PureState(new_layout, amps)
