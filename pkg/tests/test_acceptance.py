"""Acceptance suite: every exit criterion at its stated tolerance.

Each test prints one [PASS]/[FAIL] line (visible with `pytest -s` or in the
captured output of a failing run) and then asserts.  Criterion 3's
amplitude-window lower edge is known not to follow from its defining
equation; the test states the computed value when it trips.
"""

import time

import numpy as np

from cavres import (DensityMatrix, SystemLayout, esb_time, esd_time,
                    esd_threshold_probability, equal_entanglement_range,
                    gghz_esd_boundary, mixed_ghz_w, min_esd_point,
                    min_initial_negativity, negativity, reduce,
                    wootters_concurrence)
from cavres.cli import CONVENTIONS
from cavres.entanglement import (closed_form_grid_deviation,
                                 gghz_grid_deviation, monogamy_grid_audit)
from cavres.esd import (esb_grid_deviation, lambda7_formula_audit,
                        region_grid_audit, swap_grid_deviation)
from cavres.linalg import partial_transpose, partial_transpose_matrix
from cavres.states import global_output_state

from conftest import random_density_matrix, random_unitary


def report(criterion, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return ok


def test_criterion_1_closed_form_spectrum_equivalence():
    start = time.perf_counter()
    dev, at = closed_form_grid_deviation(p_steps=25, kt_steps=25, kt_max=3.0)
    elapsed = time.perf_counter() - start
    ok = dev <= 1e-10 and elapsed < 10.0
    detail = (f"spectrum vs eigensolver on 25x25 grid: max dev {dev:.3e} "
              f"(tol 1e-10) at {at}, runtime {elapsed:.2f}s (< 10s)")
    assert report(1, ok, detail), detail


def test_criterion_2_landmark_reproduction():
    checks = []
    threshold = esd_threshold_probability()
    checks.append(("ESD onset probability", threshold, 0.25, 5e-3))
    p_star, kt_star = min_esd_point()
    checks.append(("earliest-death p", p_star, 0.385, 5e-3))
    checks.append(("earliest-death kt", kt_star, 1.091, 5e-3))
    p_min, n_min = min_initial_negativity()
    checks.append(("weakest initial-negativity p", p_min, 0.465, 5e-3))
    checks.append(("weakest initial negativity", n_min, 0.643, 2e-3))
    checks.append(("W-state negativity", negativity(mixed_ghz_w(0.0), ["c1"]),
                   2.0 * np.sqrt(2.0) / 3.0, 1e-12))
    checks.append(("GHZ-state negativity", negativity(mixed_ghz_w(1.0), ["c1"]),
                   1.0, 1e-12))
    failures = [f"{name}: computed {value:.9f}, expected {ref} +/- {tol}"
                for name, value, ref, tol in checks if abs(value - ref) > tol]
    ok = not failures
    detail = "all seven landmark values reproduced"
    if failures:
        detail = ("landmark misses under conventions "
                  f"{CONVENTIONS}: " + "; ".join(failures))
    assert report(2, ok, detail), detail


def test_criterion_3_generalized_ghz_branch():
    parts = []
    dev, at = gghz_grid_deviation(a_steps=25, kt_steps=25, kt_max=3.0)
    parts.append((dev <= 1e-10,
                  f"closed form vs eigensolver 25x25: max dev {dev:.3e} at {at}"))
    boundary_gap = abs(gghz_esd_boundary(20.0) - np.sqrt(0.5))
    parts.append((boundary_gap <= 1e-4,
                  f"boundary limit at kt=20: |a - sqrt(2)/2| = {boundary_gap:.3e}"))
    a_low, a_high, max_kt = equal_entanglement_range()
    parts.append((abs(a_low - 0.319) <= 3e-3,
                  f"amplitude-window lower edge: computed {a_low:.6f} vs 0.319 +/- 0.003 "
                  f"(the matching equation 2ab = N(p, 0) admits no amplitude below "
                  f"0.342, since N(p, 0) >= 0.6426 for every p)"))
    parts.append((abs(a_high - 0.363) <= 3e-3,
                  f"amplitude-window upper edge: computed {a_high:.6f} vs 0.363 +/- 0.003"))
    parts.append((max_kt is not None and abs(max_kt - 0.763) <= 5e-3,
                  f"largest death time on the window: computed {max_kt:.6f} vs 0.763 +/- 0.005"))
    ok = all(flag for flag, _ in parts)
    detail = "; ".join(("ok: " if flag else "MISS: ") + text for flag, text in parts)
    assert report(3, ok, detail), detail


def test_criterion_4_monogamy_suite():
    audit = monogamy_grid_audit(p_steps=25, kt_steps=25, kt_max=3.0)
    eq, at_eq = audit["max_equality_deviation"]
    pair, at_pair = audit["min_pair_slack"]
    tail, at_tail = audit["min_tail_slack"]
    ok = eq <= 1e-10 and pair >= -1e-10 and tail >= -1e-10
    detail = (f"25x25 grid: pair equality dev {eq:.3e} at {at_eq}, "
              f"pair-bound slack {pair:.3e} at {at_pair}, "
              f"negativity-tail slack {tail:.3e} at {at_tail} (tol 1e-10)")
    assert report(4, ok, detail), detail


def test_criterion_5_swap_and_birth_times():
    swap_dev, at = swap_grid_deviation(p_steps=20, kt_steps=20, kt_max=3.0)
    esb_dev, at_p = esb_grid_deviation(np.linspace(0.30, 0.95, 10))
    ok = swap_dev < 1e-12 and esb_dev < 1e-3
    detail = (f"swap identity on 20x20 grid: max entrywise dev {swap_dev:.3e} "
              f"(tol 1e-12) at {at}; birth-time formula vs bisection over 10 "
              f"probabilities: max gap {esb_dev:.3e} (tol 1e-3) at p={at_p}")
    assert report(5, ok, detail), detail


def test_criterion_6_region_soundness():
    violations, min_entangled, max_separable = region_grid_audit(
        p_steps=40, kt_steps=40, kt_max=3.0)
    ok = not violations
    detail = (f"40x40 grid: separable region max negativity {max_separable:.3e}, "
              f"entangled regions min negativity {min_entangled:.3e}, "
              f"violations {len(violations)}")
    assert report(6, ok, detail), detail


def test_criterion_7_property_suite():
    rng = np.random.default_rng(7)
    failures = []

    # density-matrix invariants survive partial tracing
    from cavres import partial_trace
    for _ in range(5):
        rho = random_density_matrix(rng, ("c1", "r1", "c2", "r2"))
        for keep in (["c1"], ["c1", "r1"], ["c1", "r1", "c2"]):
            out = partial_trace(rho, keep)
            herm = np.max(np.abs(out.data - out.data.conj().T))
            tr = abs(out.data.trace().real - 1.0)
            lo = np.linalg.eigvalsh(out.data)[0]
            if herm > 1e-12 or tr > 1e-12 or lo < -1e-10:
                failures.append(f"partial-trace invariants broken: {herm}, {tr}, {lo}")

    # partial transpose is an involution and preserves the trace
    for _ in range(5):
        rho = random_density_matrix(rng, ("c1", "c2", "c3"))
        pt = partial_transpose(rho, ["c2"])
        back = partial_transpose_matrix(pt, rho.layout, ["c2"])
        if np.max(np.abs(back - rho.data)) > 1e-14:
            failures.append("partial transpose is not an involution")
        if pt.trace() != rho.data.trace():
            failures.append("partial transpose changed the trace")

    # negativity is invariant under local unitaries
    base = reduce(global_output_state(0.55, 0.6), ["c1", "c2", "c3"])
    expected = negativity(base, ["c1"])
    for _ in range(20):
        u = np.kron(np.kron(random_unitary(rng, 2), random_unitary(rng, 2)),
                    random_unitary(rng, 2))
        rotated = DensityMatrix(base.layout, u @ base.data @ u.conj().T)
        if abs(negativity(rotated, ["c1"]) - expected) > 1e-10:
            failures.append("negativity changed under a local unitary")

    # the spectral concurrence agrees with the pure-state formula
    layout = SystemLayout(("c1", "c2"))
    for _ in range(20):
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        v /= np.linalg.norm(v)
        rho = DensityMatrix(layout, np.outer(v, v.conj()))
        rho_a = np.trace(rho.data.reshape(2, 2, 2, 2), axis1=1, axis2=3)
        pure_form = np.sqrt(max(0.0, 4.0 * np.linalg.det(rho_a).real))
        if abs(wootters_concurrence(rho) - pure_form) > 1e-10:
            failures.append("spectral vs pure-state concurrence mismatch")

    ok = not failures
    detail = "density-matrix, involution, local-unitary, concurrence checks all hold"
    if failures:
        detail = "; ".join(sorted(set(failures)))
    assert report(7, ok, detail), detail


def test_criterion_8_lambda7_boundary_audit():
    from cavres.entanglement import closed_form_pt_eigenvalues
    worst, samples = lambda7_formula_audit(np.linspace(0.1, 4.0, 30))
    agreement = worst <= 1e-8
    if agreement:
        detail = (f"boundary expression vs bisection on 30 samples: "
                  f"max |formula - root| = {worst:.3e} (tol 1e-8); no "
                  f"discrepancy to record")
        ok = True
    else:
        # the bisection roots stay the ground truth; the criterion is still
        # met if they are sound and the discrepancy is reported here
        rows = "; ".join(f"kt={kt:.3f}: formula {f:.9f} vs root {r:.9f}"
                         for kt, f, r in samples if abs(f - r) > 1e-8)
        roots_sound = all(abs(closed_form_pt_eigenvalues(r, kt).lambda7) < 1e-10
                          for kt, _, r in samples)
        detail = ("DISCREPANCY RECORD: boundary expression disagrees with the "
                  f"bisection ground truth beyond 1e-8 ({rows}); bisection "
                  f"roots sound: {roots_sound}")
        ok = roots_sound
    assert report(8, ok, detail), detail
