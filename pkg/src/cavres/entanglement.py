"""Entanglement measures and the closed-form results for the evolved states.

Includes the exact eight-eigenvalue spectrum of the partially transposed
cavity state of the evolving GHZ/W mixture, the closed-form negativity of
the evolved generalized GHZ state, Wootters concurrence, and the monogamy
chain that constrains how entanglement distributes between cavities and
reservoirs during dissipation.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import (DensityMatrix, hermitian_eigenvalues, partial_trace,
                     partial_transpose, psd_sqrt, trace_norm)
from .states import (_check_probability, _check_time, _partner_amplitude,
                     gghz_output_state, global_output_state, reduce)

NEGATIVITY_CLAMP = 1e-12   # float noise below this reports as exactly 0
ZERO_ENTANGLEMENT = 1e-10  # decision threshold for "no entanglement"

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


def _clamp(value):
    if value < 0.0:
        if value < -NEGATIVITY_CLAMP:
            raise ValueError(f"negativity {value} below the noise clamp")
        return 0.0
    return float(value)


def negativity(rho, part_a):
    """Negativity across the bipartition part_a | rest: ||rho^T_A||_1 - 1."""
    return _clamp(trace_norm(partial_transpose(rho, part_a)) - 1.0)


@dataclass(frozen=True)
class PtSpectrum:
    """Eight partial-transpose eigenvalues of the evolved cavity mixture.

    The order matches the closed-form labelling: entries 5 and 7 (1-based)
    are the only ones that can go negative; the remaining six stay
    nonnegative for every (p, kt).
    """

    lambdas: tuple
    p: float
    kt: float

    def __post_init__(self):
        if len(self.lambdas) != 8:
            raise ValueError("spectrum must have exactly 8 eigenvalues")

    @property
    def lambda5(self):
        return self.lambdas[4]

    @property
    def lambda7(self):
        return self.lambdas[6]


def closed_form_pt_eigenvalues(p, kt):
    """Exact eigenvalues of the partial transpose of the evolved cavity state.

    Evaluates the closed forms for the mixture weight p and dimensionless
    time kt.  Cross-validated against the dense eigensolver of the traced
    seven-qubit state; the two negative-capable entries drive the
    sudden-death analysis.
    """
    _check_probability(p)
    _check_time(kt)
    u = np.exp(kt)
    em = np.exp(-kt)
    l1 = 0.5 * em ** 3 * p
    l2 = 0.5 * em ** 3 * (u - 1.0) * p
    l3 = 0.5 * em ** 3 * (u - 1.0) ** 2 * p
    l4 = em * (4.0 - 4.0 * p + 3.0 * (1.0 - em) ** 2 * p) / 6.0
    lin_a = em * (2.0 - 2.0 * p + 3.0 * (1.0 - em) * p)
    disc_a = (18.0 * u ** 3 * p * (p - 2.0) + 36.0 * p ** 2 - 108.0 * u * p ** 2
              + u ** 4 * (p + 2.0) ** 2 + 3.0 * u ** 2 * p * (8.0 + 31.0 * p))
    lin_b = 3.0 * (p + (1.0 - em) ** 3 * p + (1.0 - em) * (2.0 - 2.0 * p + em ** 2 * p))
    disc_b = (36.0 * (u ** 4 + p ** 2 - u ** 3 * (p + 2.0) - u * p * (p + 2.0))
              + u ** 2 * (68.0 + 44.0 * p + 41.0 * p ** 2))
    rad_a = em ** 3 * np.sqrt(max(disc_a, 0.0))
    rad_b = em ** 2 * np.sqrt(max(disc_b, 0.0))
    l5 = (lin_a - rad_a) / 12.0
    l6 = (lin_a + rad_a) / 12.0
    l7 = (lin_b - rad_b) / 12.0
    l8 = (lin_b + rad_b) / 12.0
    return PtSpectrum(lambdas=(l1, l2, l3, l4, l5, l6, l7, l8), p=p, kt=kt)


def negativity_from_spectrum(spectrum):
    """Negativity from a partial-transpose spectrum: sum |lambda_i| - 1."""
    lam = np.asarray(spectrum.lambdas)
    return _clamp(float(np.sum(np.abs(lam)) - 1.0))


def pure_bipartite_concurrence_sq(state, part_a):
    """Squared concurrence of a pure state across part_a | rest.

    Computed as 2(1 - Tr rho_A^2), which equals 4 det(rho_A) when part_a is
    a single qubit.
    """
    rho_a = reduce(state, part_a).data
    purity = float(np.trace(rho_a @ rho_a).real)
    return max(0.0, 2.0 * (1.0 - purity))


def wootters_concurrence(rho):
    """Concurrence of a two-qubit density matrix.

    Uses max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the
    descending eigenvalues of rho (sy x sy) rho* (sy x sy), obtained from
    the Hermitian product sqrt(rho) rho~ sqrt(rho) which shares them.
    """
    mat = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    if mat.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit density matrix, got {mat.shape}")
    flipped = _YY @ mat.conj() @ _YY
    root = psd_sqrt(mat)
    ev = hermitian_eigenvalues(root @ flipped @ root)
    # eigenvalues of the product are >= 0 up to rounding; drop the noise so
    # it cannot leak into the square roots
    ev = np.where(ev < 1e-14, 0.0, ev)
    r = np.sqrt(ev)
    return max(0.0, float(r[0] - r[1] - r[2] - r[3]))


def gghz_negativity_closed(a, kt):
    """Closed-form cavity negativity of the evolved generalized GHZ state.

    The radicand combines the surviving coherence with the diagonal weight
    of the opposite-parity populations; its square root exactly reproduces
    the dense partial-transpose computation.  Zero marks sudden death.
    """
    b = _partner_amplitude(a)
    _check_time(kt)
    u = np.exp(kt)
    radicand = 4.0 * a * a * u ** 3 + b * b * (2.0 - 3.0 * u + u * u) ** 2
    value = b * np.exp(-3.0 * kt) * (np.sqrt(radicand) - b * u * (u - 1.0))
    return max(float(value), 0.0)


@dataclass(frozen=True)
class MonogamyChainRecord:
    """Computable members of the entanglement-distribution chain at (p, kt).

    c_init_sq   squared concurrence of c1 vs (c2 c3 z) at kt = 0
    c_pair_sq   squared concurrence of (c1 r1) vs the rest at kt
    c_c1_sq     squared concurrence of c1 vs the block (c2 r2 c3 r3 z)
    c_r1_sq     squared concurrence of r1 vs the same block
    n_cav_sq    squared negativity of c1 vs (c2 c3) in the cavity state
    n_res_sq    squared negativity of r1 vs (r2 r3) in the reservoir state

    The chain demands c_init_sq = c_pair_sq, c_pair_sq >= c_c1_sq + c_r1_sq,
    and c_c1_sq + c_r1_sq >= n_cav_sq + n_res_sq.  The intermediate link
    through mixed three-qubit concurrences needs a minimization over state
    decompositions and is deliberately not evaluated.
    """

    p: float
    kt: float
    c_init_sq: float
    c_pair_sq: float
    c_c1_sq: float
    c_r1_sq: float
    n_cav_sq: float
    n_res_sq: float

    @property
    def equality_deviation(self):
        return abs(self.c_init_sq - self.c_pair_sq)

    @property
    def pair_slack(self):
        return self.c_pair_sq - self.c_c1_sq - self.c_r1_sq

    @property
    def tail_slack(self):
        return self.c_c1_sq + self.c_r1_sq - self.n_cav_sq - self.n_res_sq


def _qubit_block_concurrence_sq(state, qubit, partner):
    """Squared concurrence between one qubit and the five-qubit block left
    after discarding its partner.

    The global state is supported on a 2x2 product of subspaces across the
    (qubit, partner) | block cut, so the block marginal has rank at most
    two.  Compressing the block onto that support turns the mixed state
    into an honest two-qubit state whose Wootters concurrence is exact; no
    decomposition search is needed.
    """
    keep = [lab for lab in state.layout if lab != partner]
    rho = reduce(state, keep)
    block = [lab for lab in keep if lab != qubit]
    rho_block = partial_trace(rho, block).data
    weights, vecs = np.linalg.eigh(rho_block)
    order = np.argsort(weights)[::-1]
    weights, vecs = weights[order], vecs[:, order]
    if weights[1] < 1e-13:
        return 0.0  # block effectively pure: product across the cut
    if rho.layout.position(qubit) != 0:
        raise ValueError("qubit must come first in the reduced layout")
    iso = np.kron(np.eye(2), vecs[:, :2])
    compressed = iso.conj().T @ rho.data @ iso
    conc = wootters_concurrence(compressed)
    return conc * conc


def monogamy_chain(p, kt):
    """Evaluate the computable chain members on the evolved global state."""
    _check_probability(p)
    _check_time(kt)
    state0 = global_output_state(p, 0.0)
    state = global_output_state(p, kt)
    c_init = pure_bipartite_concurrence_sq(state0, ["c1"])
    c_pair = pure_bipartite_concurrence_sq(state, ["c1", "r1"])
    c_c1 = _qubit_block_concurrence_sq(state, "c1", "r1")
    c_r1 = _qubit_block_concurrence_sq(state, "r1", "c1")
    cav = reduce(state, ["c1", "c2", "c3"])
    res = reduce(state, ["r1", "r2", "r3"])
    n_cav = negativity(cav, ["c1"])
    n_res = negativity(res, ["r1"])
    return MonogamyChainRecord(p=p, kt=kt,
                               c_init_sq=c_init, c_pair_sq=c_pair,
                               c_c1_sq=c_c1, c_r1_sq=c_r1,
                               n_cav_sq=n_cav * n_cav, n_res_sq=n_res * n_res)


def closed_form_grid_deviation(p_steps=25, kt_steps=25, kt_max=3.0):
    """Worst disagreement between the closed-form spectrum and the dense
    eigensolver over a (p, kt) grid; returns (max deviation, worst point)."""
    worst = 0.0
    worst_point = (0.0, 0.0)
    for p in np.linspace(0.0, 1.0, p_steps):
        for kt in np.linspace(0.0, kt_max, kt_steps):
            lam = np.sort(np.asarray(closed_form_pt_eigenvalues(p, kt).lambdas))
            cav = reduce(global_output_state(p, kt), ["c1", "c2", "c3"])
            num = np.sort(hermitian_eigenvalues(partial_transpose(cav, ["c1"])))
            dev = float(np.max(np.abs(lam - num)))
            if dev > worst:
                worst, worst_point = dev, (float(p), float(kt))
    return worst, worst_point


def monogamy_grid_audit(p_steps=25, kt_steps=25, kt_max=3.0):
    """Chain statistics over a grid: (max equality deviation, min pair slack,
    min tail slack, worst points for each)."""
    max_eq, min_pair, min_tail = 0.0, np.inf, np.inf
    where_eq = where_pair = where_tail = (0.0, 0.0)
    for p in np.linspace(0.0, 1.0, p_steps):
        for kt in np.linspace(0.0, kt_max, kt_steps):
            rec = monogamy_chain(p, kt)
            if rec.equality_deviation > max_eq:
                max_eq, where_eq = rec.equality_deviation, (float(p), float(kt))
            if rec.pair_slack < min_pair:
                min_pair, where_pair = rec.pair_slack, (float(p), float(kt))
            if rec.tail_slack < min_tail:
                min_tail, where_tail = rec.tail_slack, (float(p), float(kt))
    return {"max_equality_deviation": (max_eq, where_eq),
            "min_pair_slack": (min_pair, where_pair),
            "min_tail_slack": (min_tail, where_tail)}


def gghz_grid_deviation(a_steps=25, kt_steps=25, kt_max=3.0):
    """Worst disagreement between the generalized-GHZ closed form and the
    dense computation over an (a, kt) grid."""
    worst = 0.0
    worst_point = (0.0, 0.0)
    for a in np.linspace(0.0, 1.0, a_steps):
        for kt in np.linspace(0.0, kt_max, kt_steps):
            cav = reduce(gghz_output_state(a, kt), ["c1", "c2", "c3"])
            num = negativity(cav, ["c1"])
            dev = abs(num - gghz_negativity_closed(a, kt))
            if dev > worst:
                worst, worst_point = dev, (float(a), float(kt))
    return worst, worst_point
