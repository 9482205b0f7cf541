import numpy as np
import pytest

from cavres import (DensityMatrix, SystemLayout, closed_form_pt_eigenvalues,
                    gghz_negativity_closed, gghz_output_state,
                    global_output_state, mixed_ghz_w, monogamy_chain,
                    negativity, negativity_from_spectrum,
                    pure_bipartite_concurrence_sq, reduce, w,
                    wootters_concurrence)
from cavres.entanglement import PtSpectrum
from cavres.linalg import hermitian_eigenvalues, partial_transpose
from cavres.states import ghz, purified_initial

from conftest import random_unitary

W_NEGATIVITY = 2.0 * np.sqrt(2.0) / 3.0


def bell_dm():
    amps = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    return DensityMatrix(SystemLayout(("c1", "c2")), np.outer(amps, amps))


def werner_dm(weight):
    amps = np.array([1.0, 0.0, 0.0, 1.0]) / np.sqrt(2.0)
    rho = weight * np.outer(amps, amps) + (1.0 - weight) * np.eye(4) / 4.0
    return DensityMatrix(SystemLayout(("c1", "c2")), rho)


class TestNegativity:
    def test_w_state(self):
        assert abs(negativity(mixed_ghz_w(0.0), ["c1"]) - W_NEGATIVITY) < 1e-12

    def test_ghz_state(self):
        assert abs(negativity(mixed_ghz_w(1.0), ["c1"]) - 1.0) < 1e-12

    def test_product_state(self):
        rho = DensityMatrix(SystemLayout(("c1", "c2")), np.diag([1.0, 0, 0, 0]))
        assert negativity(rho, ["c1"]) == 0.0

    def test_complementary_cuts_agree(self):
        rho = mixed_ghz_w(0.37)
        assert abs(negativity(rho, ["c1"]) - negativity(rho, ["c2", "c3"])) < 1e-12

    def test_local_unitary_invariance(self, rng):
        rho = reduce(global_output_state(0.6, 0.8), ["c1", "c2", "c3"])
        expected = negativity(rho, ["c1"])
        for _ in range(20):
            u = np.kron(np.kron(random_unitary(rng, 2), random_unitary(rng, 2)),
                        random_unitary(rng, 2))
            rotated = DensityMatrix(rho.layout, u @ rho.data @ u.conj().T)
            assert abs(negativity(rotated, ["c1"]) - expected) < 1e-10


class TestClosedFormSpectrum:
    def test_ghz_endpoint(self):
        spec = closed_form_pt_eigenvalues(1.0, 0.0)
        assert abs(spec.lambda5 + 0.5) < 1e-14
        assert abs(spec.lambda7) < 1e-14
        assert abs(spec.lambdas[0] - 0.5) < 1e-14

    def test_w_endpoint(self):
        spec = closed_form_pt_eigenvalues(0.0, 0.0)
        assert abs(spec.lambda7 + np.sqrt(2.0) / 3.0) < 1e-14
        assert abs(spec.lambda5) < 1e-14

    def test_fully_decayed_limit(self):
        spec = closed_form_pt_eigenvalues(0.5, 40.0)
        assert negativity_from_spectrum(spec) == 0.0
        # vacuum on the cavities: one unit eigenvalue, the rest negligible
        assert abs(max(spec.lambdas) - 1.0) < 1e-12

    def test_matches_eigensolver_on_grid(self):
        for p in np.linspace(0.0, 1.0, 9):
            for kt in np.linspace(0.0, 3.0, 9):
                lam = np.sort(np.asarray(closed_form_pt_eigenvalues(p, kt).lambdas))
                cav = reduce(global_output_state(p, kt), ["c1", "c2", "c3"])
                num = np.sort(hermitian_eigenvalues(partial_transpose(cav, ["c1"])))
                np.testing.assert_allclose(lam, num, atol=1e-12)

    def test_six_entries_stay_nonnegative(self):
        stable = [0, 1, 2, 3, 5, 7]
        for p in np.linspace(0.0, 1.0, 25):
            for kt in np.linspace(0.0, 3.0, 25):
                lam = closed_form_pt_eigenvalues(p, kt).lambdas
                assert all(lam[i] >= -1e-12 for i in stable)
                assert abs(sum(lam) - 1.0) < 1e-10

    def test_domain(self):
        with pytest.raises(ValueError):
            closed_form_pt_eigenvalues(1.2, 0.0)
        with pytest.raises(ValueError):
            closed_form_pt_eigenvalues(0.5, -0.5)


class TestNegativityFromSpectrum:
    def test_ghz(self):
        spec = closed_form_pt_eigenvalues(1.0, 0.0)
        assert abs(negativity_from_spectrum(spec) - 1.0) < 1e-12

    def test_w(self):
        spec = closed_form_pt_eigenvalues(0.0, 0.0)
        assert abs(negativity_from_spectrum(spec) - W_NEGATIVITY) < 1e-12

    def test_all_nonnegative_gives_zero(self):
        spec = PtSpectrum(lambdas=(0.5, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0, 0.0),
                          p=0.0, kt=0.0)
        assert negativity_from_spectrum(spec) == 0.0

    def test_counts_negative_part_twice(self):
        spec = PtSpectrum(lambdas=(0.6, 0.5, 0.0, 0.0, -0.1, 0.0, 0.0, 0.0),
                          p=0.0, kt=0.0)
        assert abs(negativity_from_spectrum(spec) - 0.2) < 1e-15


class TestPureConcurrence:
    def test_ghz_cut(self):
        assert abs(pure_bipartite_concurrence_sq(ghz(), ["c1"]) - 1.0) < 1e-14

    def test_w_cut(self):
        got = pure_bipartite_concurrence_sq(w(), ["c1"])
        assert abs(got - 8.0 / 9.0) < 1e-14

    def test_product_cut(self):
        state = purified_initial(1.0)
        assert pure_bipartite_concurrence_sq(state, ["r1"]) < 1e-14

    def test_single_qubit_matches_determinant(self):
        state = global_output_state(0.45, 0.9)
        got = pure_bipartite_concurrence_sq(state, ["c1"])
        rho_a = reduce(state, ["c1"]).data
        assert abs(got - 4.0 * np.linalg.det(rho_a).real) < 1e-12


class TestWoottersConcurrence:
    def test_bell(self):
        assert abs(wootters_concurrence(bell_dm()) - 1.0) < 1e-12

    def test_maximally_mixed(self):
        rho = DensityMatrix(SystemLayout(("c1", "c2")), np.eye(4) / 4.0)
        assert wootters_concurrence(rho) == 0.0

    def test_werner_against_brute_force(self):
        # independent oracle: general (non-Hermitian) eigensolve of the
        # spin-flipped product matrix
        rho = werner_dm(0.5).data
        sy = np.array([[0, -1j], [1j, 0]])
        yy = np.kron(sy, sy)
        r = rho @ yy @ rho.conj() @ yy
        ev = np.sqrt(np.abs(np.sort(np.linalg.eigvals(r).real)[::-1]))
        brute = max(0.0, ev[0] - ev[1] - ev[2] - ev[3])
        assert abs(brute - 0.25) < 1e-12
        assert abs(wootters_concurrence(werner_dm(0.5)) - 0.25) < 1e-12

    def test_werner_threshold(self):
        # entanglement appears above weight 1/3
        assert wootters_concurrence(werner_dm(1.0 / 3.0)) < 1e-8
        assert wootters_concurrence(werner_dm(0.34)) >= 0.0

    def test_matches_pure_state_formula(self, rng):
        layout = SystemLayout(("c1", "c2"))
        for _ in range(20):
            v = rng.normal(size=4) + 1j * rng.normal(size=4)
            v /= np.linalg.norm(v)
            rho = DensityMatrix(layout, np.outer(v, v.conj()))
            rho_a = np.trace(rho.data.reshape(2, 2, 2, 2), axis1=1, axis2=3)
            expected = np.sqrt(max(0.0, 4.0 * np.linalg.det(rho_a).real))
            assert abs(wootters_concurrence(rho) - expected) < 1e-10

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            wootters_concurrence(mixed_ghz_w(0.5))


class TestGghzClosedForm:
    def test_initial_value(self):
        for a in np.linspace(0.0, 1.0, 21):
            b = np.sqrt(1.0 - a * a)
            assert abs(gghz_negativity_closed(a, 0.0) - 2.0 * a * b) < 1e-14

    def test_product_family_stays_zero(self):
        for kt in np.linspace(0.0, 3.0, 10):
            assert gghz_negativity_closed(1.0, kt) == 0.0

    def test_sample_point_against_eigensolver(self):
        cav = reduce(gghz_output_state(0.5, 0.5), ["c1", "c2", "c3"])
        assert abs(gghz_negativity_closed(0.5, 0.5) - negativity(cav, ["c1"])) < 1e-12

    def test_matches_eigensolver_on_grid(self):
        for a in np.linspace(0.0, 1.0, 9):
            for kt in np.linspace(0.0, 3.0, 9):
                cav = reduce(gghz_output_state(a, kt), ["c1", "c2", "c3"])
                num = negativity(cav, ["c1"])
                assert abs(gghz_negativity_closed(a, kt) - num) < 1e-12

    def test_domain(self):
        with pytest.raises(ValueError):
            gghz_negativity_closed(-0.2, 1.0)
        with pytest.raises(ValueError):
            gghz_negativity_closed(0.5, -1.0)


class TestMonogamyChain:
    def test_ghz_endpoint(self):
        rec = monogamy_chain(1.0, 0.0)
        assert abs(rec.c_init_sq - 1.0) < 1e-12
        assert abs(rec.n_cav_sq - 1.0) < 1e-12
        assert rec.n_res_sq < 1e-12

    def test_equality_at_zero_time(self):
        for p in (0.0, 0.3, 0.7, 1.0):
            rec = monogamy_chain(p, 0.0)
            assert rec.equality_deviation < 1e-14

    def test_chain_inequalities_at_sample(self):
        rec = monogamy_chain(0.5, 1.0)
        assert rec.equality_deviation < 1e-10
        assert rec.pair_slack >= -1e-10
        assert rec.tail_slack >= -1e-10

    def test_pair_concurrence_is_conserved(self):
        rec0 = monogamy_chain(0.6, 0.0)
        rec1 = monogamy_chain(0.6, 1.7)
        assert abs(rec0.c_pair_sq - rec1.c_pair_sq) < 1e-12

    def test_block_concurrences_swap_roles(self):
        # at the self-dual time the cavity-side and reservoir-side block
        # concurrences coincide
        rec = monogamy_chain(0.8, np.log(2.0))
        assert abs(rec.c_c1_sq - rec.c_r1_sq) < 1e-10

    def test_ghz_family_block_values(self):
        # for the pure GHZ branch the two block concurrences split the pair
        # concurrence exactly as the surviving and leaked weights
        kt = 0.9
        xi_sq = np.exp(-kt)
        rec = monogamy_chain(1.0, kt)
        assert abs(rec.c_c1_sq - xi_sq) < 1e-10
        assert abs(rec.c_r1_sq - (1.0 - xi_sq)) < 1e-10
