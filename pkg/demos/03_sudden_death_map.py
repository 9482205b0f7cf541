"""Map the four sign regions of the two critical eigenvalues and locate the
sudden-death landmarks.

Region I has both eigenvalues negative, II and III one each, and IV none:
there the cavity photons are separable.  The region-IV wedge exists only
for mix probabilities strictly between 1/4 and 1, which is exactly the
sudden-death window.
"""

import numpy as np

from cavres import (classify_region, esd_threshold_probability, esd_time,
                    lambda5_boundary, lambda7_boundary, min_esd_point,
                    min_initial_negativity)

print("=" * 70)
print("1. Region map (rows: p from 1 down to 0, columns: kt)")
print("=" * 70)
symbols = {"I": ".", "II": "5", "III": "7", "IV": "#"}
kts = np.linspace(0.02, 3.0, 60)
for p in np.linspace(1.0, 0.0, 26):
    row = "".join(symbols[classify_region(p, kt).value] for kt in kts)
    print(f"p={p:4.2f} {row}")
print()
print("legend: . both negative | 5 lambda5 negative | 7 lambda7 negative")
print("        # separable (region IV, sudden death happened)")

print()
print("=" * 70)
print("2. Boundary curves")
print("=" * 70)
print("  kt     lambda5=0 at p   lambda7=0 at p")
for kt in (0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 6.0):
    print(f"  {kt:4.2f}   {lambda5_boundary(kt):14.9f}   {lambda7_boundary(kt):14.9f}")
print("the lambda5 curve climbs to 1, the lambda7 curve settles at 1/4;")
print("their wedge is the separable region IV.")

print()
print("=" * 70)
print("3. Landmarks")
print("=" * 70)
print(f"sudden-death onset probability : {esd_threshold_probability():.9f}")
p_star, kt_star = min_esd_point()
print(f"earliest sudden death          : p = {p_star:.4f}, kt = {kt_star:.4f}")
p_min, n_min = min_initial_negativity()
print(f"weakest initial entanglement   : p = {p_min:.4f}, N = {n_min:.4f}")
print("note: the weakest-entangled mixture is NOT the first to die.")

print()
print("=" * 70)
print("4. Death times across the window")
print("=" * 70)
for p in (0.1, 0.25, 0.3, 0.385, 0.5, 0.7, 0.9, 1.0):
    t = esd_time(p)
    desc = f"kt = {t:.4f}" if t is not None else "never (asymptotic decay)"
    print(f"p = {p:5.3f}: {desc}")
