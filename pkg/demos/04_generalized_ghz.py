"""The generalized GHZ state a|000> + b|111> under the same dissipation,
and the comparison with the GHZ/W mixture at equal initial entanglement.

The pure family dies sooner: over the amplitude window matched to the
mixture's anomalous mixing range, its largest death time stays well below
the mixture's smallest one.
"""

import numpy as np

from cavres import (equal_entanglement_range, gghz_esd_boundary, gghz_esd_time,
                    gghz_negativity_closed, gghz_output_state, min_esd_point,
                    negativity, reduce)

print("=" * 70)
print("1. Closed form vs dense oracle")
print("=" * 70)
for a, kt in [(0.5, 0.0), (0.5, 0.5), (0.3, 1.0), (0.706, 2.0)]:
    closed = gghz_negativity_closed(a, kt)
    cav = reduce(gghz_output_state(a, kt), ["c1", "c2", "c3"])
    dense = negativity(cav, ["c1"])
    print(f"a = {a:5.3f}, kt = {kt:4.2f}: closed {closed:.10f} "
          f"dense {dense:.10f}  |diff| = {abs(closed - dense):.2e}")
print("initial value is 2ab:",
      all(abs(gghz_negativity_closed(a, 0.0) - 2 * a * np.sqrt(1 - a * a)) < 1e-14
          for a in np.linspace(0, 1, 11)))

print()
print("=" * 70)
print("2. The death boundary")
print("=" * 70)
print("  kt     boundary amplitude a(kt)")
for kt in (0.1, 0.5, 1.0, 2.0, 5.0, 20.0):
    print(f"  {kt:5.2f}  {gghz_esd_boundary(kt):.9f}")
print(f"large-kt limit -> sqrt(2)/2 = {np.sqrt(0.5):.9f}: only amplitudes")
print("below it ever reach zero negativity at finite time.")

print()
print("=" * 70)
print("3. Death times of the pure family")
print("=" * 70)
for a in (0.1, 0.3, 0.5, 0.7, np.sqrt(0.5), 0.9):
    t = gghz_esd_time(a)
    desc = f"kt = {t:.4f}" if t is not None else "never (asymptotic decay)"
    print(f"a = {a:8.6f}: {desc}")

print()
print("=" * 70)
print("4. Equal initial entanglement comparison")
print("=" * 70)
a_low, a_high, max_kt = equal_entanglement_range()
print(f"amplitude window matched to the mixture's anomalous range:")
print(f"  a in [{a_low:.6f}, {a_high:.6f}]")
print(f"  largest pure-family death time on the window: kt = {max_kt:.4f}")
p_star, kt_star = min_esd_point()
print(f"  smallest mixture death time anywhere        : kt = {kt_star:.4f}")
print("with equal initial entanglement the mixed state holds its")
print("entanglement strictly longer than the pure one.")
