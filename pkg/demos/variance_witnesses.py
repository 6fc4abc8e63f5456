"""Second-moment inseparability witnesses along the out-of-phase axis.

With zeta = |zeta| e^{i pi} (so the sign condition sign(m) sign(cos phi) < 0
holds at m = 1), the EPR-like combinations u = x_a + x_b and v = p_a - p_b
are squeezed below the vacuum level: the product of their variances drops
below 1 and the total variance below 2 for every nonzero |zeta|, and both
are violated more strongly by the squeezed vacuum at large |zeta|.
Flipping to phi = 0 shows why the sign condition matters: the same
witness then fails entirely.
"""

import cmath
import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from paircoherent import duan_total_variance, mancini_product, pair_coherent, squeezed_vacuum

zetas = np.linspace(0.0, 0.97, 98)
out_of_phase = [z * cmath.exp(1j * math.pi) for z in zetas]

pcs_product = [mancini_product(pair_coherent(z)) for z in out_of_phase]
tmsv_product = [mancini_product(squeezed_vacuum(z)) for z in out_of_phase]
pcs_total = [duan_total_variance(pair_coherent(z), 1.0).total_variance
             for z in out_of_phase]
tmsv_total = [duan_total_variance(squeezed_vacuum(z), 1.0).total_variance
              for z in out_of_phase]

report = duan_total_variance(pair_coherent(-1.0), 1.0)
print(f"at zeta = -1: M = {report.total_variance:.4f} < 2, "
      f"Mx = {report.mancini_product:.4f} < 1, "
      f"sign condition holds: {report.sign_condition}")

wrong_phase = duan_total_variance(pair_coherent(1.0), 1.0)
print(f"at zeta = +1 (phi = 0): M = {wrong_phase.total_variance:.4f} >= 2, "
      f"witnessed: {wrong_phase.duan_witnessed} "
      f"(sign condition holds: {wrong_phase.sign_condition})")

fig, (left, right) = plt.subplots(1, 2, figsize=(9.5, 4.0))
left.plot(zetas, pcs_product, label="pair coherent")
left.plot(zetas, tmsv_product, "--", label="squeezed vacuum")
left.axhline(1.0, color="gray", lw=0.8)
left.set_xlabel(r"$|\zeta|$")
left.set_ylabel(r"$\langle(\Delta u)^2\rangle\,\langle(\Delta v)^2\rangle$")
left.set_title(r"Variance product ($m=1$, $\phi=\pi$)")
left.legend()

right.plot(zetas, pcs_total, label="pair coherent")
right.plot(zetas, tmsv_total, "--", label="squeezed vacuum")
right.axhline(2.0, color="gray", lw=0.8)
right.set_xlabel(r"$|\zeta|$")
right.set_ylabel(r"$M$")
right.set_title(r"Total variance ($m=1$, $\phi=\pi$)")
right.legend()

fig.tight_layout()
fig.savefig("variance_witnesses.png", dpi=150)
print("wrote variance_witnesses.png")
