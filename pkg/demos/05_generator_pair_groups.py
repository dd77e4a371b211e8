"""
Generator pairs whose group beats the 1/(2n^2) threshold
========================================================

A diagonal of q-th roots with geometric exponents plus a scaled cycle
generate a small nonabelian group.  Once q is large enough the exact defect
of the whole group provably exceeds 1/(2n^2) -- finiteness alone does not
buy a small level.
"""

from fractions import Fraction

from specmul import (
    MillerMorenoParams,
    RationalAngle,
    close,
    default_miller_moreno,
    measure_asm,
    miller_moreno,
    mm_gap_analysis,
)

# The smallest faithful instance: p = 3, q = 7, n = 3.
params = default_miller_moreno(3, 7)
print("exponent row:", params.theta_exponents[0], " n =", params.n)

x, y = miller_moreno(params)
closure = close([x, y])
print("closure order:", closure.order)

report = measure_asm(closure)
f = report.epsilon_exact
print("exact level:", f"{f.numerator}/{f.denominator}",
      " threshold 1/(2*9) =", Fraction(1, 18))

# Scaling the cycle block by a ninth root of unity triples the group: the
# cube of the cycle injects a new scalar.
bigger = MillerMorenoParams(3, 7, ((1, 2, 4),), (RationalAngle(1, 9),))
print("\nwith a ninth-root scalar the order becomes",
      close(miller_moreno(bigger)).order)

# Why large q must fail: the product set sigma(Y) * sigma(Y^-1) has at most
# n^2 - n - m p^2 + p + m p points, so it leaves a wide gap on the circle,
# and for big q some q-th root of unity sits deep inside that gap.
for q in (7, 151):
    gap = mm_gap_analysis(default_miller_moreno(3, q))
    print(f"\nq = {q}: products = {gap.distinct_products}"
          f" (bound {gap.product_bound})")
    print("  widest gap:", gap.widest_gap, " midpoint:", gap.gap_midpoint)
    print("  nearest q-th root:", gap.nearest_qth_root,
          " stays", gap.root_distance, "from the products")
    print("  guaranteed distance:", gap.root_distance_lower_bound,
          " vs threshold", gap.asm_threshold)

# And indeed the q = 151 group (order 453) measures far above 1/18.
big = close(miller_moreno(default_miller_moreno(3, 151)))
rep = measure_asm(big)
print("\nq = 151: order", big.order, " exact level", rep.epsilon_exact,
      ">", Fraction(1, 18), ":", rep.epsilon_exact > Fraction(1, 18))
