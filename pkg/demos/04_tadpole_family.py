"""
The tadpole family: a ceiling of half a grid step
=================================================

Each 2p x 2p tadpole matrix is a determinant-one "head" D @ C^k stacked on
a diagonal "tail" of p^2-th roots of unity.  Multiplication works entirely
in parameter space, the defect of any pair stays below 1/(2p^2), and a
constructed pair attains that ceiling exactly.
"""

from fractions import Fraction

import numpy as np

from specmul import (
    adversarial_case4_pair,
    measure_asm_sampled,
    pair_defect,
    sample_tadpole,
    tadpole,
    tadpole_case,
    tadpole_identity,
    tadpole_inverse,
    tadpole_mul,
    tadpole_sampler,
)

p = 3
rng = np.random.default_rng(42)

# Parameters multiply like the matrices do: heads compose as monomials, the
# tail exponents add with a wrap correction.
a = sample_tadpole(p, rng, exact=True)
b = sample_tadpole(p, rng, exact=True)
ab = tadpole_mul(a, b)
print("a:    k =", a.k, " tail =", a.a)
print("b:    k =", b.k, " tail =", b.a)
print("a@b:  k =", ab.k, " tail =", ab.a)
print("inverse works:", tadpole_mul(a, tadpole_inverse(a)) == tadpole_identity(p))

# The case split: whenever at least one head is diagonal, or neither the
# factors nor the product are, the defect vanishes.  Only case 4 -- both
# heads shifted but the product diagonal -- can cost anything.
print("\ncase of (a, b):", tadpole_case(a, b))
d = pair_defect(tadpole(a), tadpole(b))
print("pair defect:", d.defect_exact)

# Sampling the continuous family: ten thousand pairs, defects never exceed
# half the spacing of the p^2 grid.
bound = Fraction(1, 2 * p * p)
report = measure_asm_sampled(tadpole_sampler(p), 10_000, seed=1)
print(f"\nsampled max defect: {report.epsilon:.7f}"
      f"  vs bound {float(bound):.7f} = 1/{2 * p * p}")

# The ceiling is attained: a pair engineered so the product head lands
# exactly halfway between neighbouring grid points.
pa, pb = adversarial_case4_pair(p)
worst = pair_defect(tadpole(pa), tadpole(pb))
print("constructed pair defect:", worst.defect_exact,
      " equals bound:", worst.defect_exact == bound)
