"""Truncate sets that accumulate at 0 and certify what was left out."""
from fractions import Fraction as F

from wavesets import check_equivalence, make_family, verify_truncated

for fam in (make_family("WNE", 2, F(1, 24)), make_family("KNE", 3, F(1, 56)), make_family("PROPBRA")):
    for depth in (4, 8, 12):
        v = verify_truncated(fam, depth)
        S = fam.materialize(depth)
        print(f"{fam.tag:8s} depth {depth:2d}: {len(S):3d} intervals, tail {float(v.residual):.3e}, "
              f"measure+tail = {S.measure() + v.residual}, pass {v.passed}")

fam, depth = make_family("KNE", 2, F(1, 40)), 10
S = fam.materialize(depth)
for mode, foot in (("translation", fam.translation_footprint(depth)), ("dilation", fam.dilation_footprint(depth))):
    e = check_equivalence(S, fam.reference(), mode, footprint=foot)
    print(f"KNE vs K_2 {mode}: {e.passed}, profile mismatch {float(e.residual):.3e}")
