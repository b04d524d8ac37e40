"""Arithmetic in F_125 and the quadratic-character machinery.

Builds the field, shows the chosen modulus, and checks a few identities by hand.
"""
from ffdet import field_of_order
from ffdet.characters import legendre, sigma_inverse_sign

f = field_of_order(125)
print(f"F_{f.q}: p={f.p}, r={f.r}, modulus coefficients (low degree first) {f.modulus}")

a = f([1, 2, 0])
b = f([0, 1, 4])
print(f"a = {a}, b = {b}")
print(f"a*b = {a * b}, a/b = {a / b}, a^124 = {a ** 124}")
assert a * a.inv() == f.one

# -3 is a non-square whenever p = 2 (mod 3), so a^2 - ab + b^2 never vanishes off (0, 0)
print("legendre(-3, 5) =", legendre(-3, 5))
print("is -3 a square in F_125?", f(-3).is_square())

# sign of x -> 1/x on the nonzero elements, cross-checked by counting cycles
print("sign of inversion on F_125^*:", sigma_inverse_sign(f, check=True))
