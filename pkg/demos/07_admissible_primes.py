"""
Admissible primes for a level just under 1/(2p)
===============================================

For a level eps below 1/(2p), a prime q qualifies when none of its
fractions k/q falls in the open delta-window around an odd multiple of
1/(2p), where delta = 1/(2p) - eps.  The set is finite: past 1/(2*delta)
the fractions are spaced too tightly to miss every window.
"""

from fractions import Fraction

from specmul import QSetParams, q_set

params = QSetParams(p=3, epsilon=Fraction(11, 75))
print("p =", params.p, " eps =", params.epsilon)
print("delta =", params.delta, " cutoff = 1/(2*delta) =", params.cutoff)

result = q_set(params)
print("\nadmissible primes:", list(result.members))

# Every excluded prime comes with a witness fraction sitting inside a
# forbidden window; every admitted one survived the full exact scan.
print("\n q   member  witness")
for q, member, witness in result.verdicts:
    w = "-" if witness is None else f"{witness.numerator}/{witness.denominator}"
    print(f"{q:3d}   {'yes' if member else ' no':>4}   {w}")

# Tightening the level (delta shrinks) admits more primes before the
# cutoff; loosening it empties the set down to p itself.
for eps in (Fraction(1, 8), Fraction(3, 20), Fraction(4, 25)):
    r = q_set(QSetParams(3, eps))
    print(f"\neps = {eps}:  cutoff {r.cutoff:4d}  members {list(r.members)}")
