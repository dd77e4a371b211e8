"""
Exact arithmetic on the unit circle
===================================

Angles are stored in turns (full circle = 1), as reduced fractions when the
point is a root of unity and as floats with an error budget otherwise.
Products of exact points stay exact; everything downstream builds on that.
"""

from fractions import Fraction

from specmul import (
    RationalAngle,
    UnitPoint,
    arg_distance,
    chord_distance,
    conversion_check,
    nearest_root_of_unity,
)

# A rational angle is a reduced fraction of a turn, normalized to [0, 1).
a = RationalAngle(7, 12)
b = RationalAngle(-1, 4)
print("a       =", a, "   b =", b)
print("a + b   =", a + b)
print("a - b   =", a - b)

# Points on the circle: exact (a rational angle) or approximate (a float
# angle plus an error bound).  Multiplying exact points adds their angles
# with no rounding at all.
z = UnitPoint.exact(1, 8)
w = UnitPoint.exact(5, 12)
print("\nz * w    =", (z * w).angle, "  (exact)")
print("z.pow(-3) =", z.pow(-3).angle)

# Mixing in an approximate point degrades the product to approximate and
# the error budgets add.
noisy = UnitPoint.approx(0.4142, err=1e-6)
mixed = z * noisy
print("exact * approx -> exact?", mixed.is_exact, " err =", mixed.err)

# Two distances matter: the scaled argument distance (shorter arc, in
# turns) and the chord distance (straight line through the disc).  For
# exact inputs the arc comes back as a Fraction.
d_arc = arg_distance(z, w)
d_chord = chord_distance(z, w)
print("\narc(z, w)   =", d_arc, "turns")
print("chord(z, w) =", d_chord)

# The two are interleaved: chord <= 2*pi*arc <= pi*chord.  Either distance
# level therefore implies the other up to a constant.
sub_level, asm_level = conversion_check(Fraction(1, 18))
print("arc level 1/18  ->  chord level", sub_level)
print("chord level 1/18 ->  arc level", asm_level)

# Snapping to the nearest q-th root of unity, with exact tie-breaking.
p = UnitPoint.exact(2, 9)
snapped = nearest_root_of_unity(p, 12)
print("\nnearest 12th root to", p.angle, "is", snapped,
      "at distance", p.angle.distance(snapped))
