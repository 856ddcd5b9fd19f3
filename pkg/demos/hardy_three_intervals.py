"""Enumerate three-interval H^2 wavelet sets and certify one of them by chains."""
from wavesets import CaseId, decompose, enumerate_case, feasible_l

for case in CaseId:
    rows = enumerate_case(case, 2, 6)
    print(f"{case.value}: {len(rows)} sets with r <= 2, s <= 6; first {rows[0].csv_fields() if rows else None}")

print("T1D1 r=1 k=1:", {s: (ls[0], ls[-1]) if ls else None
                         for s in range(2, 9) for ls in [feasible_l("T1D1", 1, 1, s)]})

row = enumerate_case("T1D2", 2, 4, k=1)[0]
cert = decompose(row.set)
print("set", row.set.as_strings())
print("translation chain (interval, shift):", cert.translation_order())
print("dilation chain (interval, exponent):", cert.dilation_order())
