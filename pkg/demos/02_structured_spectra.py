"""
Structured unitary matrices and their closed-form spectra
=========================================================

Diagonals, shifted monomial matrices and block-diagonal stacks carry their
eigenvalues symbolically: no eigensolver runs unless a product falls out of
the structured families.  The dense solver is only the cross-check here.
"""

import numpy as np

from specmul import (
    Dense,
    Diagonal,
    MonomialCycle,
    ONE,
    UnitPoint,
    eigensolve_dense,
    match_spectra,
    matmul,
    monomial_cycle,
)

# A monomial cycle places unit entries on the k-th shifted diagonal.  Its
# spectrum splits along the gcd cycles of the shift: each cycle of length L
# with weight w contributes the L-th roots of w.
pts = tuple(UnitPoint.exact(t, 12) for t in (1, 5, 7, 11))
m = MonomialCycle(pts, 1)
print("matrix dim:", m.dim)
print("spectrum  :", [str(p.angle) for p in m.spectrum().points])

# The same eigenvalues out of the dense solver, as a sanity check.
eigs, errs = eigensolve_dense(m.to_dense())
angles = np.angle(eigs) / (2 * np.pi) % 1.0
print("eigensolver agreement:", match_spectra(m.spectrum(), angles))

# Products of monomials stay monomial, so long chains of multiplications
# remain exact.  A shift of 2 on 4 points splits into two 2-cycles.
m2 = monomial_cycle(pts, 2)
print("\nshift-2 spectrum:", [str(p.angle) for p in m2.spectrum().points])

prod = matmul(m, m2)
print("product is structured:", type(prod).__name__, "- exact:", prod.exact)
print("product spectrum:", [str(p.angle) for p in prod.spectrum().points])

# Dense matrices join the fun only when unitary; their spectra come with a
# residual-based error budget per eigenvalue.
u = Dense(m.to_dense())
s = u.spectrum()
print("\ndense route exact:", s.exact,
      " max err:", max(p.err for p in s.points))

# Mixing incompatible block signatures falls back to a dense product and
# the result is flagged, so exactness is never lost silently.
a = matmul(Diagonal((ONE, ONE)), Diagonal((UnitPoint.exact(1, 3), ONE)))
print("\ndiagonal * diagonal stays exact:", a.exact)
