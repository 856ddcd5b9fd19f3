"""Build symmetric wavelet sets from lattice polygonals and read their data back."""
from wavesets import FamilyId, Polygonal, build_family, build_polygonal, classify, search_polygonals, verify_l2
from wavesets.symmetric import ksuv_valid

P = Polygonal.of("L2", (0, 1), (-2, 0))
K = build_polygonal(P)
print("polygonal", P.vertices, "->", K.as_strings(), "ok:", verify_l2(K).passed)

for tag, params in [("N2", (3,)), ("KSTV", (0, 1, 4)), ("KSUV", (1, 3, 17)), ("KA", ("2/5",))]:
    S = build_family(FamilyId(tag, params))
    d = classify(S)
    print(f"{tag:5s}{' '.join(map(str, params)):10s} n={d.n} eps={d.epsilon} tau={d.tau} m={d.m} lambda={d.lam}")

print("admissible K(s,u,v) with s,u <= 3:",
      [(s, u, v) for s in range(4) for u in range(1, 4) for v in range(1, 200) if ksuv_valid(s, u, v)])

for n in (2, 3, 4):
    print(f"L2 polygonals with {n} vertices (|lambda| <= 5, m <= 40):", len(search_polygonals("L2", n, 5, 40)))
