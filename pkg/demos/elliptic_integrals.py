"""Tour of the elliptic-integral layer.

The Carlson symmetric forms R_F, R_C, R_D, R_J are the evaluation backbone:
the Legendre-form integrals K, E, Pi reduce to them algebraically, and the
duplication iteration converges at AGM rate right up to the modulus -> 1
divergence.  A tanh-sinh quadrature oracle integrates the defining integrals
directly, so every value below is checked by two unrelated algorithms.
"""

import math

from mahlerlab import (
    carlson_rf,
    carlson_rj,
    ell_e,
    ell_k,
    ell_k_imag,
    ell_pi,
    ell_pi_imag,
    quadrature_oracle,
)

print("=== Carlson forms ===")
print(f"R_F(1,1,1)   = {carlson_rf(1, 1, 1):.15f}   (equal arguments: x^-1/2)")
print(f"R_F(0,1,1)   = {carlson_rf(0, 1, 1):.15f}   (pi/2 = {math.pi/2:.15f})")
print(f"R_J(0,1,1,1) = {carlson_rj(0, 1, 1, 1):.15f}   (3pi/4 = {3*math.pi/4:.15f})")

print()
print("=== K, E, Pi against direct quadrature of their defining integrals ===")
z = 0.5
k_direct = quadrature_oracle(
    lambda ph: 1 / math.sqrt(1 - (z * math.sin(ph)) ** 2), 0, math.pi / 2, 1e-13
)
e_direct = quadrature_oracle(
    lambda ph: math.sqrt(1 - (z * math.sin(ph)) ** 2), 0, math.pi / 2, 1e-13
)
print(f"K(1/2):  carlson {ell_k(z):.15f}   quadrature {k_direct:.15f}")
print(f"E(1/2):  carlson {ell_e(z):.15f}   quadrature {e_direct:.15f}")

n = -0.5
pi_direct = quadrature_oracle(
    lambda ph: 1 / ((1 - n * math.sin(ph) ** 2) * math.sqrt(1 - (z * math.sin(ph)) ** 2)),
    0,
    math.pi / 2,
    1e-13,
)
print(f"Pi(-1/2, 1/2):  carlson {ell_pi(n, z):.15f}   quadrature {pi_direct:.15f}")
print(f"closed-form check: K/2 + pi/6 = {0.5 * ell_k(z) + math.pi / 6:.15f}")

print()
print("=== Legendre relation E K' + E' K - K K' = pi/2 across the modulus range ===")
worst = 0.0
for i in range(1, 100):
    zz = i / 100
    zc = math.sqrt(1 - zz * zz)
    worst = max(
        worst,
        abs(ell_e(zz) * ell_k(zc) + ell_e(zc) * ell_k(zz) - ell_k(zz) * ell_k(zc) - math.pi / 2),
    )
print(f"worst residual on 99-point grid: {worst:.2e}")

print()
print("=== Purely imaginary modulus and the real-modulus transform ===")
# K(sqrt(z)) = K(sqrt(z/(z-1))) / sqrt(1-z) maps z < 0 into (0, 1)
for zneg in (-0.25, -4.0, -49.0):
    m = math.sqrt(-zneg)
    lhs = ell_k_imag(m)
    rhs = ell_k(math.sqrt(zneg / (zneg - 1))) / math.sqrt(1 - zneg)
    print(f"z = {zneg:6.2f}:  K(i*{m:.3f}) = {lhs:.15f}   transform residual {abs(lhs-rhs):.1e}")

n, m = 1 / 3, math.sqrt(1 / 3)
zneg = -m * m
lhs = ell_pi_imag(n, m)
rhs = ell_pi(n / (n - 1), math.sqrt(zneg / (zneg - 1))) / ((1 - n) * math.sqrt(1 - zneg))
print(f"Pi transform at (n, z) = (1/3, -1/3): residual {abs(lhs-rhs):.1e}")

print()
print("=== The modulus -> 1 logarithmic divergence ===")
for zz in (0.9, 0.999, 0.999999):
    asym = math.log(4 / math.sqrt(1 - zz * zz))
    print(f"z = {zz}:  K = {ell_k(zz):12.8f}   log(4/sqrt(1-z^2)) = {asym:12.8f}")
