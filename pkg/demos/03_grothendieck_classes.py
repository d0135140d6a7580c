"""
Grothendieck classes of the family hypersurfaces
================================================

Classes are integer polynomials in the torus class T = L - 1. Setting
T = q - 1 turns a class into a point count over F_q, which we compare with
brute-force enumeration of the projective zero set.
"""

from graphmotive import count_zeros, evaluate_at_q, family_class, psi_family
from graphmotive.motive import banana_displayed_value, banana_off_sigma_class, sn_class

for kind in ("star", "flower", "polygon", "banana"):
    c = family_class(kind, 5)
    print(f"[X_{kind}], n=5: {c}    (in L: {c.render_L()})")

###############################################################################
# The banana class is assembled from two pieces: the part off the coordinate
# hyperplanes and the locus with at least two zero coordinates.

n = 5
print("off-sigma part:", banana_off_sigma_class(n))
print("S_n part:      ", sn_class(n))

print("\n n  q  class  count")
for n in range(3, 7):
    for q in (2, 3, 5):
        predicted = evaluate_at_q(family_class("banana", n), q)
        counted = count_zeros(psi_family("banana", n), q).total
        print(f"{n:2d} {q:2d} {predicted:6d} {counted:6d}")

###############################################################################
# Transcribing the closed form with T (not T + 1) in the second denominator
# does not even give a polynomial, and miscounts already at n = 3, q = 2.

print("\nrejected variant at n=3, q=2:", banana_displayed_value(3, 2), "vs", count_zeros(psi_family("banana", 3), 2).total)
