"""Mahler and half-Mahler measures of the family a(x + 1/x) + y + 1/y + c.

The one-parameter slice P_k(x, y) = x + 1/x + y + 1/y + k is tied to the
two-parameter member with a = sqrt((4+k)/(4-k)), c = k/sqrt(4-k).  For k > 4
those coefficients turn imaginary and the working polynomial is the real form

    Ptilde_k(x, y) = sqrt((k+4)/(k-4)) (x + 1/x) + y - 1/y - k/sqrt(k-4),

whose half-measures coincide with those of the (a, c) member.  All integrals
are taken in the angle theta (x = e^{i theta}), which removes the
1/sqrt(1-t^2) endpoint weight of the t = cos(theta) form, and are split at the
angles where the root moduli cross 1 so each panel is smooth.

Everything here is a pure function; tolerances are absolute.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate as _spi

from .elliptic import ell_k, ell_pi
from .errors import (
    AccuracyError,
    DomainError,
    RegimeError,
    SingularParameterError,
)
from .quadrature import tanh_sinh

#: regime boundary: the root-modulus crossing leaves the unit circle here
K_LARGE = 2.0 * (1.0 + math.sqrt(5.0))

_MIN_TOL = 1e-13


class Regime(enum.Enum):
    SMALL = "small"  # 0 < k < 4
    MID = "mid"      # 4 < k <= 2(1+sqrt(5))
    LARGE = "large"  # k > 2(1+sqrt(5))


@dataclass(frozen=True)
class FamilyPoint:
    """Parameter k with derived coefficients and regime.

    For 0 < k < 4, (a, c) are the real coefficients of the two-parameter
    member.  For k > 4 they are imaginary and (a_tilde, c_tilde) hold the real
    coefficients sqrt((k+4)/(k-4)) and k/sqrt(k-4) of the tilde polynomial.
    """

    k: float
    regime: Regime
    a: float | None
    c: float | None
    a_tilde: float | None
    c_tilde: float | None


@dataclass(frozen=True)
class HalfMeasures:
    """The pair (m+, m-) in nats and their sum."""

    m_plus: float
    m_minus: float

    @property
    def m_total(self) -> float:
        return self.m_plus + self.m_minus


@dataclass(frozen=True)
class QuadraticFactorization:
    """Monic quadratic-in-y data on the circle: y^2 + B y + sign = (y-y+)(y-y-).

    B maps theta to B(e^{i theta}), real-valued for the families used here;
    sign_of_constant is the product y+ y- (+1 for the plain family, -1 for the
    tilde form).  Roots take the principal branch of the discriminant root.
    """

    B: Callable[[float], float]
    sign_of_constant: int

    def roots(self, theta: float) -> tuple[complex, complex]:
        b = self.B(theta)
        s = cmath.sqrt(complex(b * b - 4.0 * self.sign_of_constant, 0.0))
        return (-b + s) / 2.0, (-b - s) / 2.0


def factor_p1k(k: float) -> QuadraticFactorization:
    """y-factorization of y P_k: B = 2 cos(theta) + k, constant +1."""
    if k <= 0.0:
        raise DomainError(f"factor_p1k: requires k > 0, got {k}")
    return QuadraticFactorization(B=lambda th: 2.0 * math.cos(th) + k, sign_of_constant=1)


def factor_ptilde(k: float) -> QuadraticFactorization:
    """y-factorization of y Ptilde_k: constant term -1, for k > 4."""
    if k <= 4.0:
        raise DomainError(f"factor_ptilde: requires k > 4, got {k}")
    s4 = math.sqrt(k - 4.0)
    return QuadraticFactorization(
        B=lambda th: (2.0 * math.sqrt(k + 4.0) * math.cos(th) - k) / s4,
        sign_of_constant=-1,
    )


def factor_pac_small(k: float) -> QuadraticFactorization:
    """y-factorization for the real-coefficient member, 0 < k < 4."""
    fp = params_from_k(k)
    if fp.regime is not Regime.SMALL:
        raise DomainError(f"factor_pac_small: requires 0 < k < 4, got {k}")
    a, c = fp.a, fp.c
    return QuadraticFactorization(
        B=lambda th: 2.0 * a * math.cos(th) + c, sign_of_constant=1
    )


def params_from_k(k: float) -> FamilyPoint:
    """Coefficients and regime for the family member at parameter k."""
    if k <= 0.0 or k == 4.0:
        raise SingularParameterError(f"k must be positive and != 4, got {k}")
    if k < 4.0:
        return FamilyPoint(
            k=k,
            regime=Regime.SMALL,
            a=math.sqrt((4.0 + k) / (4.0 - k)),
            c=k / math.sqrt(4.0 - k),
            a_tilde=None,
            c_tilde=None,
        )
    regime = Regime.LARGE if k > K_LARGE else Regime.MID
    return FamilyPoint(
        k=k,
        regime=regime,
        a=None,
        c=None,
        a_tilde=math.sqrt((k + 4.0) / (k - 4.0)),
        c_tilde=k / math.sqrt(k - 4.0),
    )


def _check_tol(tol: float) -> None:
    if tol < _MIN_TOL:
        raise AccuracyError(
            f"requested tol={tol:g} below the double-precision floor {_MIN_TOL:g}"
        )


def _log_root(d: float) -> float:
    # log((B + sqrt(B^2 - 4))/2) written in terms of d = B - 2 >= 0,
    # stable as d -> 0
    return math.log1p(0.5 * (d + math.sqrt(d * (d + 4.0))))


def m_p1k(k: float, tol: float = 1e-8) -> float:
    """Mahler measure of x + 1/x + y + 1/y + k for real k > 0.

    For k > 4 the root modulus |y_-| exceeds 1 on the whole circle and the
    integrand is smooth; for 0 < k <= 4 it exceeds 1 only where
    2 cos(theta) + k > 2 and the integral is cut at that crossing.  Absolute
    error <= tol.
    """
    if k <= 0.0:
        raise DomainError(f"m_p1k: requires k > 0, got {k}")
    _check_tol(tol)
    if k > 4.0:
        def f(th: float) -> float:
            ch = math.cos(0.5 * th)
            return _log_root((k - 4.0) + 4.0 * ch * ch)

        val, _, _ = tanh_sinh(f, 0.0, math.pi, 0.1 * tol)
        return val / math.pi
    theta_star = math.acos(0.5 * (2.0 - k))

    def f(th: float) -> float:
        d = 2.0 * math.cos(th) + k - 2.0
        if d <= 0.0:
            return 0.0
        return _log_root(d)

    val, _, _ = tanh_sinh(f, 0.0, theta_star, 0.1 * tol)
    return val / math.pi


def half_measures_ptilde(k: float, tol: float = 1e-8) -> HalfMeasures:
    """Half-measures (m+, m-) of Ptilde_k (equivalently of the (a, c) member).

    The roots satisfy y+ y- = -1 and |y-| crosses 1 at
    theta* = arccos(k / (2 sqrt(k+4))); for k > 2(1+sqrt(5)) the crossing
    leaves [-1, 1] and m- = 0 identically.
    """
    if k <= 4.0:
        raise DomainError(f"half_measures_ptilde: requires k > 4, got {k}")
    _check_tol(tol)
    s4 = 2.0 * math.sqrt(k - 4.0)

    def btilde(th: float) -> float:
        return (2.0 * math.sqrt(k + 4.0) * math.cos(th) - k) / s4

    if k >= K_LARGE:
        m_minus = 0.0
        val, _, _ = tanh_sinh(lambda th: -math.asinh(btilde(th)), 0.0, math.pi, 0.1 * tol)
        m_plus = val / math.pi
    else:
        theta_star = math.acos(k / (2.0 * math.sqrt(k + 4.0)))
        vm, _, _ = tanh_sinh(lambda th: math.asinh(btilde(th)), 0.0, theta_star, 0.05 * tol)
        vp, _, _ = tanh_sinh(
            lambda th: -math.asinh(btilde(th)), theta_star, math.pi, 0.05 * tol
        )
        m_minus = vm / math.pi
        m_plus = vp / math.pi
    return HalfMeasures(m_plus=m_plus, m_minus=m_minus)


def half_measures_pac_small_k(k: float, tol: float = 1e-8) -> HalfMeasures:
    """Half-measures of the (a, c) member for 0 < k < 4 (real coefficients).

    With B(theta) = 2 a cos(theta) + c and principal square roots, the root
    y- = (-B - sqrt(B^2-4))/2 exceeds 1 in modulus on the arc B > 2 near
    theta = 0 and y+ does on the arc B < -2 near theta = pi; in between the
    roots sit on the unit circle and contribute nothing.  The B < -2 arc is
    nonempty for every k in (0, 4), shrinking to a point as k -> 0.
    """
    if not 0.0 < k < 4.0:
        raise DomainError(f"half_measures_pac_small_k: requires 0 < k < 4, got {k}")
    _check_tol(tol)
    fp = params_from_k(k)
    a, c = fp.a, fp.c
    theta_plus = math.acos((2.0 - c) / (2.0 * a))
    theta_minus = math.acos((-2.0 - c) / (2.0 * a))

    def log_ym(th: float) -> float:
        d = 2.0 * a * math.cos(th) + c - 2.0
        return _log_root(d) if d > 0.0 else 0.0

    def log_yp(th: float) -> float:
        d = -(2.0 * a * math.cos(th) + c) - 2.0
        return _log_root(d) if d > 0.0 else 0.0

    vm, _, _ = tanh_sinh(log_ym, 0.0, theta_plus, 0.05 * tol)
    vp, _, _ = tanh_sinh(log_yp, theta_minus, math.pi, 0.05 * tol)
    return HalfMeasures(m_plus=vp / math.pi, m_minus=vm / math.pi)


def dfdk(k: float) -> float:
    """d/dk of m_p1k in closed form, (2/(k pi)) K(4/k), for k > 4."""
    if k <= 4.0:
        raise DomainError(f"dfdk: closed form requires k > 4, got {k}")
    return 2.0 / (k * math.pi) * ell_k(4.0 / k)


def dhdk(k: float) -> float:
    """d/dk of m+ - m- for Ptilde_k in closed form, for k > 4:
    (K(4/k) - (8/k) Pi(-4/k, 4/k)) / ((k-4) pi)."""
    if k <= 4.0:
        raise DomainError(f"dhdk: closed form requires k > 4, got {k}")
    z = 4.0 / k
    return (ell_k(z) - 2.0 * z * ell_pi(-z, z)) / ((k - 4.0) * math.pi)


def dhdk_integral_form(k: float, tol: float = 1e-10) -> float:
    """d/dk of m+ - m- by direct quadrature of the cos(theta)-substituted
    t-integral; certifies the reduction chain to the closed form dhdk.

    Note the 1/pi prefactor carried over from the half-measure definitions.
    """
    if k <= 4.0:
        raise DomainError(f"dhdk_integral_form: requires k > 4, got {k}")
    sk4 = math.sqrt(k + 4.0)
    c0 = (k * k + 4.0 * k - 16.0) / (4.0 * (k + 4.0))

    def g(th: float) -> float:
        t = math.cos(th)
        return (t - (k - 8.0) * sk4 / 16.0) / math.sqrt(t * t + k * t / sk4 + c0)

    val, _, _ = tanh_sinh(g, 0.0, math.pi, 0.1 * min(tol, 1e-9))
    return -4.0 / (k * k - 16.0) * val / math.pi


def verify_thm_main(k: float, tol: float = 1e-8) -> float:
    """Residual of m(P_k) = 2(m+ - m-) + (1/2) log((k-4)/(k+4)) for k > 4."""
    if k <= 4.0:
        raise DomainError(f"verify_thm_main: requires k > 4, got {k}")
    hm = half_measures_ptilde(k, tol=0.01 * tol)
    lhs = m_p1k(k, tol=0.01 * tol)
    rhs = 2.0 * (hm.m_plus - hm.m_minus) + 0.5 * math.log((k - 4.0) / (k + 4.0))
    return abs(lhs - rhs)


def verify_corollary(k: float, tol: float = 1e-8) -> tuple[float, float]:
    """(m-, residual) of m(P_k) = 2 m(P_{a,c}) + (1/2) log((k-4)/(k+4)).

    Only valid for k > 2(1+sqrt(5)), where m- vanishes identically; the MID
    regime is rejected.
    """
    if k <= K_LARGE:
        raise RegimeError(
            f"verify_corollary: requires k > 2(1+sqrt(5)) = {K_LARGE:.6f}, got {k}"
        )
    hm = half_measures_ptilde(k, tol=0.01 * tol)
    lhs = m_p1k(k, tol=0.01 * tol)
    rhs = 2.0 * hm.m_total + 0.5 * math.log((k - 4.0) / (k + 4.0))
    return hm.m_minus, abs(lhs - rhs)


# ----------------------------------------------------------------------------
# generic two-variable Mahler measure (brute-force oracle)


@dataclass(frozen=True)
class LaurentPoly2:
    """Laurent polynomial: terms (i, j, coeff) standing for coeff * x^i y^j."""

    terms: tuple[tuple[int, int, complex], ...]

    def __post_init__(self):
        if not self.terms:
            raise DomainError("LaurentPoly2: needs at least one term")
        if all(abs(c) == 0.0 for _, _, c in self.terms):
            raise DomainError("LaurentPoly2: all coefficients vanish")

    def __call__(self, x: complex, y: complex) -> complex:
        return sum(c * x**i * y**j for i, j, c in self.terms)


def poly_p1k(k: float) -> LaurentPoly2:
    """x + 1/x + y + 1/y + k."""
    return LaurentPoly2(((1, 0, 1.0), (-1, 0, 1.0), (0, 1, 1.0), (0, -1, 1.0), (0, 0, complex(k))))


def poly_pac(a: complex, c: complex) -> LaurentPoly2:
    """a (x + 1/x) + y + 1/y + c."""
    return LaurentPoly2(((1, 0, complex(a)), (-1, 0, complex(a)), (0, 1, 1.0), (0, -1, 1.0), (0, 0, complex(c))))


def poly_ptilde(k: float) -> LaurentPoly2:
    """sqrt((k+4)/(k-4)) (x + 1/x) + y - 1/y - k/sqrt(k-4), for k > 4."""
    if k <= 4.0:
        raise DomainError(f"poly_ptilde: requires k > 4, got {k}")
    at = math.sqrt((k + 4.0) / (k - 4.0))
    ct = k / math.sqrt(k - 4.0)
    return LaurentPoly2(((1, 0, at), (-1, 0, at), (0, 1, 1.0), (0, -1, -1.0), (0, 0, -ct)))


def _circle_roots_in_y(P: LaurentPoly2, x: complex) -> list[float]:
    """Angles (in turns) of the y-roots of P(x, .) that sit on the unit circle."""
    jmin = min(j for _, j, _ in P.terms)
    jmax = max(j for _, j, _ in P.terms)
    coeffs = [0j] * (jmax - jmin + 1)
    for i, j, c in P.terms:
        coeffs[jmax - j] += c * x**i
    arr = np.array(coeffs, dtype=complex)
    scale = float(np.max(np.abs(arr)))
    if scale == 0.0:
        return []
    nz = np.nonzero(np.abs(arr) > 1e-14 * scale)[0]
    arr = arr[nz[0] : nz[-1] + 1]
    if len(arr) < 2:
        return []
    roots = np.roots(arr)
    out = []
    for r in roots:
        if abs(abs(r) - 1.0) < 1e-7:
            out.append((cmath.phase(r) / (2.0 * math.pi)) % 1.0)
    return sorted(out)


def m_generic_2d(P: LaurentPoly2, tol: float = 1e-6) -> float:
    """Brute-force Mahler measure: nested adaptive quadrature of
    log|P(e^{2 pi i t1}, e^{2 pi i t2})| over the unit square.

    Independent of the one-variable Jensen route: quadrature is QUADPACK with
    explicit break points at the y-roots on the unit circle.  Supports
    tol >= 1e-6; cost grows quadratically as tol shrinks.
    """
    if tol < 1e-8:
        raise AccuracyError(f"m_generic_2d: tol={tol:g} below supported range")

    def inner(t1: float) -> float:
        x = cmath.exp(2j * math.pi * t1)
        jmin = min(j for _, j, _ in P.terms)
        jmax = max(j for _, j, _ in P.terms)
        b = [0j] * (jmax - jmin + 1)
        for i, j, c in P.terms:
            b[j - jmin] += c * x**i

        def g(t2: float) -> float:
            y = cmath.exp(2j * math.pi * t2)
            acc = 0j
            for co in reversed(b):
                acc = acc * y + co
            return math.log(max(abs(acc), 1e-300))

        pts = _circle_roots_in_y(P, x)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", _spi.IntegrationWarning)
            val, _ = _spi.quad(
                g,
                0.0,
                1.0,
                points=pts or None,
                limit=200,
                epsabs=0.02 * tol,
                epsrel=1e-10,
            )
        return val

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", _spi.IntegrationWarning)
        val, err = _spi.quad(inner, 0.0, 1.0, limit=200, epsabs=0.5 * tol, epsrel=1e-10)
    if err > tol:
        raise AccuracyError(
            f"m_generic_2d: estimated error {err:g} exceeds tol {tol:g}",
            best_estimate=val,
            error_estimate=err,
        )
    return val


def lsz_branch_verdict(k: float, tol: float = 1e-8) -> dict:
    """Try both branch labelings of the small-k identity and report which one
    satisfies m(P_k) = m- - 3 m+; the family's principal-root convention wins.
    """
    hm = half_measures_pac_small_k(k, tol=0.01 * tol)
    target = m_p1k(k, tol=0.01 * tol)
    res_principal = abs(hm.m_minus - 3.0 * hm.m_plus - target)
    res_swapped = abs(hm.m_plus - 3.0 * hm.m_minus - target)
    return {
        "k": k,
        "m_plus": hm.m_plus,
        "m_minus": hm.m_minus,
        "residual_principal": res_principal,
        "residual_swapped": res_swapped,
        "winner": "principal" if res_principal < res_swapped else "swapped",
    }
