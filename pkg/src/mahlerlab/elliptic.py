"""Complete elliptic integrals via Carlson symmetric forms.

Modulus convention: the argument z of K, E, Pi is the *modulus*,
    K(z) = int_0^1 dx / sqrt((1-x^2)(1-z^2 x^2)),
not the parameter m = z^2 (scipy/mpmath take m).  Pi takes the
characteristic n with the sign convention
    Pi(n, z) = int_0^1 dx / ((1 - n x^2) sqrt((1-x^2)(1-z^2 x^2))).

The Carlson forms R_F, R_C, R_D, R_J are evaluated by the duplication
algorithm (Carlson 1994), which converges at AGM rate and is uniformly
accurate up to the z -> 1 divergence.
"""

from __future__ import annotations

import math

from .errors import DivergenceError, DomainError

_EPS = 2.220446049250313e-16
_HALF_PI = math.pi / 2.0


def _check_nonneg(kind: str, *args: float) -> None:
    if any(a < 0.0 for a in args):
        raise DomainError(f"{kind}: arguments must be nonnegative, got {args}")
    if sum(1 for a in args if a == 0.0) > 1:
        raise DivergenceError(f"{kind}: diverges with two or more zero arguments")


def carlson_rf(x: float, y: float, z: float) -> float:
    """Carlson R_F(x, y, z) = (1/2) int_0^inf dt / sqrt((t+x)(t+y)(t+z)).

    x, y, z >= 0 with at most one of them zero.  Relative error <= 1e-14.
    """
    _check_nonneg("carlson_rf", x, y, z)
    A = (x + y + z) / 3.0
    Q = (3.0 * _EPS) ** (-0.125) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    while Q >= f * abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        A = 0.25 * (A + lam)
        f *= 4.0
    # A0 terms propagated through the scaling: X+Y+Z = 0 by construction
    X = ((x + y + z) / 3.0 - x) / A
    Y = ((x + y + z) / 3.0 - y) / A
    Z = -(X + Y)
    E2 = X * Y - Z * Z
    E3 = X * Y * Z
    s = (
        1.0
        - E2 / 10.0
        + E3 / 14.0
        + E2 * E2 / 24.0
        - 3.0 * E2 * E3 / 44.0
        - 5.0 * E2 ** 3 / 208.0
        + 3.0 * E3 * E3 / 104.0
        + E2 * E2 * E3 / 16.0
    )
    return s / math.sqrt(A)


def carlson_rc(x: float, y: float) -> float:
    """Degenerate form R_C(x, y) = R_F(x, y, y), for x >= 0, y > 0."""
    if x < 0.0 or y <= 0.0:
        raise DomainError(f"carlson_rc: requires x >= 0, y > 0, got ({x}, {y})")
    if x == 0.0:
        return _HALF_PI / math.sqrt(y)
    if x == y:
        return 1.0 / math.sqrt(x)
    if y > x:
        s = math.sqrt(y - x)
        return math.atan(s / math.sqrt(x)) / s
    s = math.sqrt(x - y)
    return math.log((math.sqrt(x) + s) / math.sqrt(y)) / s


def _rd_rj_series(X: float, Y: float, Z: float, P: float) -> float:
    E2 = X * Y + X * Z + Y * Z - 3.0 * P * P
    E3 = X * Y * Z + 2.0 * E2 * P + 4.0 * P ** 3
    E4 = (2.0 * X * Y * Z + E2 * P + 3.0 * P ** 3) * P
    E5 = X * Y * Z * P * P
    return (
        1.0
        - 3.0 * E2 / 14.0
        + E3 / 6.0
        + 9.0 * E2 * E2 / 88.0
        - 3.0 * E4 / 22.0
        - 9.0 * E2 * E3 / 52.0
        + 3.0 * E5 / 26.0
        - E2 ** 3 / 16.0
        + 3.0 * E3 * E3 / 40.0
        + 3.0 * E2 * E4 / 20.0
        + 45.0 * E2 * E2 * E3 / 272.0
        - 9.0 * (E3 * E4 + E2 * E5) / 68.0
    )


def carlson_rd(x: float, y: float, z: float) -> float:
    """Carlson R_D(x, y, z) = R_J(x, y, z, z); z > 0, at most one of x, y zero."""
    if z <= 0.0:
        raise DomainError(f"carlson_rd: requires z > 0, got {z}")
    _check_nonneg("carlson_rd", x, y, z)
    A = (x + y + 3.0 * z) / 5.0
    Q = (0.25 * _EPS) ** (-0.125) * max(abs(A - x), abs(A - y), abs(A - z))
    f = 1.0
    acc = 0.0
    A0 = A
    x0, y0 = x, y
    while Q >= f * abs(A):
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sx * sz + sy * sz
        acc += 1.0 / (f * sz * (z + lam))
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        A = 0.25 * (A + lam)
        f *= 4.0
    X = (A0 - x0) / (f * A)
    Y = (A0 - y0) / (f * A)
    Z = -(X + Y) / 3.0
    # R_D series is the R_J series with P = Z
    s = _rd_rj_series(X, Y, Z, Z)
    return 3.0 * acc + s / (f * A * math.sqrt(A))


def carlson_rj(x: float, y: float, z: float, p: float) -> float:
    """Carlson R_J(x, y, z, p) = (3/2) int_0^inf dt / ((t+p) sqrt((t+x)(t+y)(t+z))).

    Requires x, y, z >= 0 with at most one zero, and p > 0 (the principal-value
    case p < 0 is rejected).  Relative error <= 1e-13.
    """
    _check_nonneg("carlson_rj", x, y, z)
    if p <= 0.0:
        raise DomainError(f"carlson_rj: requires p > 0, got {p}")
    A = (x + y + z + 2.0 * p) / 5.0
    A0 = A
    x0, y0, z0 = x, y, z
    delta = (p - x) * (p - y) * (p - z)
    Q = (0.2 * _EPS) ** (-0.125) * max(
        abs(A - x), abs(A - y), abs(A - z), abs(A - p)
    )
    f = 1.0
    acc = 0.0
    while Q >= f * abs(A):
        sx, sy, sz, sp = math.sqrt(x), math.sqrt(y), math.sqrt(z), math.sqrt(p)
        D = (sp + sx) * (sp + sy) * (sp + sz)
        E = delta / (D * D)
        if -1.5 < E < -0.5:
            # rewrite R_C(1, 1+E) to dodge cancellation near E = -1
            acc += (1.0 / (f * D)) * carlson_rc(
                1.0, 2.0 * sp * (p + sx * (sy + sz) + sy * sz) / D
            )
        else:
            acc += (1.0 / (f * D)) * carlson_rc(1.0, 1.0 + E)
        lam = sx * sy + sx * sz + sy * sz
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        A = 0.25 * (A + lam)
        delta /= 64.0
        f *= 4.0
    X = (A0 - x0) / (f * A)
    Y = (A0 - y0) / (f * A)
    Z = (A0 - z0) / (f * A)
    P = -0.5 * (X + Y + Z)
    s = _rd_rj_series(X, Y, Z, P)
    return s / (f * A * math.sqrt(A)) + 6.0 * acc


def ell_k(z: float) -> float:
    """K(z) with modulus z in [0, 1)."""
    if z < 0.0:
        raise DomainError(
            f"ell_k: modulus must be >= 0 (integrand depends on z^2; pass |z|), got {z}"
        )
    if z >= 1.0:
        raise DivergenceError(f"ell_k: K diverges as z -> 1, got z = {z}")
    return carlson_rf(0.0, (1.0 - z) * (1.0 + z), 1.0)


def ell_e(z: float) -> float:
    """E(z) with modulus z in [0, 1]."""
    if z < 0.0:
        raise DomainError(f"ell_e: modulus must be >= 0, got {z}")
    if z > 1.0:
        raise DomainError(f"ell_e: modulus must be <= 1, got {z}")
    if z == 1.0:
        return 1.0
    zc = (1.0 - z) * (1.0 + z)
    return carlson_rf(0.0, zc, 1.0) - (z * z / 3.0) * carlson_rd(0.0, zc, 1.0)


def ell_pi(n: float, z: float) -> float:
    """Pi(n, z) with characteristic n < 1 and modulus z in [0, 1)."""
    if n >= 1.0:
        raise DomainError(
            f"ell_pi: characteristic n must be < 1 (singular case rejected), got {n}"
        )
    if z < 0.0:
        raise DomainError(f"ell_pi: modulus must be >= 0, got {z}")
    if z >= 1.0:
        raise DivergenceError(f"ell_pi: diverges as z -> 1, got z = {z}")
    zc = (1.0 - z) * (1.0 + z)
    rf = carlson_rf(0.0, zc, 1.0)
    if n == 0.0:
        return rf
    return rf + (n / 3.0) * carlson_rj(0.0, zc, 1.0, 1.0 - n)


def ell_k_imag(m: float) -> float:
    """K at purely imaginary modulus: int_0^1 dx / sqrt((1-x^2)(1+m^2 x^2))."""
    if m < 0.0:
        raise DomainError(f"ell_k_imag: requires m >= 0, got {m}")
    return carlson_rf(0.0, 1.0 + m * m, 1.0)


def ell_pi_imag(n: float, m: float) -> float:
    """Pi at purely imaginary modulus:
    int_0^1 dx / ((1 - n x^2) sqrt((1-x^2)(1+m^2 x^2)))."""
    if n >= 1.0:
        raise DomainError(f"ell_pi_imag: characteristic n must be < 1, got {n}")
    if m < 0.0:
        raise DomainError(f"ell_pi_imag: requires m >= 0, got {m}")
    rf = carlson_rf(0.0, 1.0 + m * m, 1.0)
    if n == 0.0:
        return rf
    return rf + (n / 3.0) * carlson_rj(0.0, 1.0 + m * m, 1.0, 1.0 - n)
