"""The determinant of T_q = [1/(a_i^2 - a_i a_j + a_j^2)] over F_q.

For q = 2 (mod 3) the determinant is (-1)^((q+1)/2) 2^((q-2)/3), an element of F_p.
Over Q the same matrix for small p has a large exact rational determinant.
"""
from ffdet import paper_matrices as pm
from ffdet.exact_linalg import det_field, det_rational

for q in (5, 11, 17, 23, 125):
    rep = pm.check_theorem(q)
    print(f"q={q:>3}  det={rep.computed:>2}  predicted={rep.predicted:>2}  ok={rep.matched}")

t = pm.build_tq(pm.theorem_field(125))
print("F_125 determinant lies in F_5:", det_field(t).in_prime_subfield())

for p in (5, 11):
    d = det_rational(pm.build_tp_rational(p))
    print(f"over Q, p={p}: {d}")
    print(f"   reduced mod {p}: {pm.reduce_mod_p(d, p)}")
