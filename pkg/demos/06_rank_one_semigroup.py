"""
A rank-one semigroup with an explicit chord-defect ceiling
==========================================================

Matrices lam * [[1, x*], [y, y x*]] with ||x||, ||y|| < r form a semigroup
of rank-one matrices.  Every spectrum is {0, lam(1 + <x, y>)}, products
have a closed-form eigenvalue, and the relative defect never exceeds
4r^2 / (1 - r^2)^2.
"""

import numpy as np

from specmul import (
    SrParams,
    measure_sub,
    pair_sub_defect,
    sr_pair_gamma,
    sr_ratio_bound,
    sr_sample,
    sr_sampler,
)

params = SrParams(r=0.5, n=4)
rng = np.random.default_rng(2024)

# One element and its single nonzero eigenvalue (equal to the trace).
a = sr_sample(params, rng)
print("lam =", np.round(a.lam, 4))
print("nonzero eigenvalue:", np.round(a.nonzero_eigenvalue(), 4))
print("trace of the matrix:", np.round(np.trace(a.matrix()), 4))

# Products stay rank one, so gamma has a closed form too; no eigensolver
# in the measurement loop.
b = sr_sample(params, rng)
gamma = sr_pair_gamma(a, b)
print("\nclosed-form gamma:", np.round(gamma, 4))
print("dense check      :", np.round(np.trace(a.matrix() @ b.matrix()), 4))

d = pair_sub_defect(a, b)
print("pair chord defect:", round(d.defect, 6))

# Sampling many pairs: the maximum stays under the ceiling, which blows up
# as r -> 1 (the semigroup is still essentially finite for every r < 1).
for r in (0.3, 0.5, 0.9):
    report = measure_sub(sr_sampler(SrParams(r)), pair_count=20_000, seed=9)
    print(f"\nr = {r}: sampled max = {report.epsilon:.4f}"
          f"   ceiling 4r^2/(1-r^2)^2 = {sr_ratio_bound(r):.4f}")
