"""
Finite closures, Cayley tables and the exact defect of a group
==============================================================

Breadth-first closure of a generator set gives the full element list plus a
Cayley table; the measurement loop then takes the maximum pair defect over
every ordered pair.  For the 8-element image of the quaternion generators
that maximum is exactly 1/4 -- the worst a finite group can do.
"""

from specmul import (
    Diagonal,
    MonomialCycle,
    ONE,
    UnitPoint,
    centre,
    close,
    is_irreducible,
    measure_asm,
    quotient_order_mod_centre,
)

# The two standard generators: diag(i, -i) and the rotation by a quarter
# turn in monomial form.
i_mat = Diagonal((UnitPoint.exact(1, 4), UnitPoint.exact(3, 4)))
j_mat = MonomialCycle((ONE, UnitPoint.exact(1, 2)), 1)

closure = close([i_mat, j_mat])
print("order:", closure.order, " complete:", closure.complete)
print("centre size:", len(centre(closure)))
print("order modulo centre:", quotient_order_mod_centre(closure))
print("irreducible:", is_irreducible(closure))

# The Cayley table indexes elements[i] @ elements[j]; row 0 is the identity
# row, and every row is a permutation.
cay = closure.cayley_table()
print("\nCayley table:")
for row in cay:
    print("  ", list(row))

# Exhaustive exact measurement over all 64 ordered pairs.
report = measure_asm(closure)
f = report.epsilon_exact
print("\nexact defect level:", f"{f.numerator}/{f.denominator}")
w = report.worst
print("worst pair:", w.pair,
      " gamma at", w.witness_gamma.angle,
      " nearest product", (w.witness_alpha * w.witness_beta).angle)

# A cyclic group, by contrast, has a perfectly multiplicative spectrum.
cyclic = close([Diagonal(tuple(UnitPoint.exact(t, 7) for t in range(7)))])
print("\ncyclic group of order", cyclic.order,
      "has level", measure_asm(cyclic).epsilon_exact)
