"""Each intermediate identity used by the determinant evaluation, checked directly."""
from ffdet import paper_matrices as pm
from ffdet.field_core import field_of_order
from ffdet.polyring import build_g, build_h, verify_lemma21

ctx = field_of_order(11)
print("G(T) for q=11:", build_g(ctx).canonical())
print("H(T) for q=11:", build_h(ctx).canonical())
print(verify_lemma21(ctx).to_json())

# closed form for det[p(x_i y_j)]: random cases over F_7 and Q, then every small case
print(pm.check_lemma22_random(7, trials=50).to_json())
print(pm.check_lemma22_random(0, trials=50).to_json())
print(pm.check_lemma22_grid(n_max=2, bound=2).to_json())

# Lerch's sign of x -> ax mod m, and the sign of inversion on F_q^*
print(pm.check_lemma23(12).to_json())
print(pm.check_lemma24(27).to_json())

for q in (5, 11, 125):
    print(pm.theorem_assembly_check(q).to_json())
