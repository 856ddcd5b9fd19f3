"""Check a few sets against the translation and dilation tiling conditions."""
from fractions import Fraction as F

from wavesets import IntervalSet, verify_l2, verify_mra

shannon = IntervalSet.of((-1, F(-1, 2)), (F(1, 2), 1))
journe = IntervalSet.of((F(-16, 7), -2), (F(-1, 2), F(-2, 7)), (F(2, 7), F(1, 2)), (2, F(16, 7)))
lopsided = IntervalSet.of((F(1, 4), F(3, 4)), (F(-3, 4), F(-1, 4)))

for name, S in [("Shannon", shannon), ("Journe", journe), ("[1/4,3/4] mirrored", lopsided)]:
    v = verify_l2(S)
    print(f"{name:20s} measure {S.measure()}  wavelet set: {v.passed}")
    if not v:
        print(f"{'':20s} {v.reason}")
        print(f"{'':20s} witness {v.witness.as_strings()}")

for name, S in [("Shannon", shannon), ("Journe", journe)]:
    m = verify_mra(S, 16)
    print(f"{name:20s} MRA at depth 16: {m.passed} (unchecked mass {m.residual})")
