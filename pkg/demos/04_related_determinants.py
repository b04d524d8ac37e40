"""Neighbouring determinant claims: residuosity of det T_p and three neighbouring matrices."""
from ffdet import paper_matrices as pm

for p in (5, 11, 17, 23):
    rep = pm.check_corollary(p)
    print(f"p={p:>2}  det T_p mod p = {rep.details['det']:>2}  {rep.computed}")

for p in (3, 5, 7, 11, 13):
    print(pm.check_sun_sp(p).to_json())
for p in (3, 7, 11):
    print(pm.check_sun_ap(p).to_json())

# the characteristic polynomial of the Legendre-symbol circulant shifted by lambda
for lam in (0, 1, 2):
    rep = pm.check_carlitz(7, lam)
    print(f"lambda={lam}: charpoly {rep.computed}; readings matching: {rep.details['matching']}")
print("candidate polynomials at p=7, lambda=1:", pm.carlitz_readings(7, 1))
