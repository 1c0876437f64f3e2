"""Verifier for Pi/K elliptic-integral identities of the form

    Pi(p(x), q(x)) + r(x) K(q(x)) = s(x),

where r is forced by p and q, r must satisfy a first-order linear ODE, and
s is determined up to a constant by s'/s = f.  Given differentiable p, q the
engine computes r and f from their closed forms, checks the ODE and the
vanishing of the E-coefficient pointwise via second-order jets, reconstructs
s(x) = C exp(int f) with the constant pinned at an anchor, and reports the
residual of the identity over a grid.

Four built-in (p, q) pairs are shipped, including Jia's identity; candidates
can also be loaded from expression strings (see `expressions`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .elliptic import ell_k, ell_pi
from .errors import DomainError, RegimeError, SingularPointError
from .jets import Jet2, sqrt
from .quadrature import cumulative_integrals

Scalar = Callable[[float], float]


@dataclass(frozen=True)
class IdentityCandidate:
    """A (p, q) pair with its verification domain.

    p and q must accept both floats and Jet2 arguments (use `jets.sqrt`).
    printed_r is the closed-form K-coefficient as printed in the source of the
    identity; it is used only to pin the constant at anchors where the generic
    r-formula degenerates to 0/0.  printed_r_alts holds labelled alternative
    printed coefficients when the source is self-inconsistent.
    """

    name: str
    p: Callable
    q: Callable
    domain: tuple[float, float]
    anchor_x0: float
    printed_r: Scalar | None = None
    printed_rhs: Scalar | None = None
    printed_r_alts: tuple[tuple[str, Scalar], ...] = ()


@dataclass(frozen=True)
class IdentityReport:
    name: str
    anchor_x0: float
    constant_C: float
    grid: tuple[float, ...]
    ode_residual_max: float
    e_coeff_residual_max: float
    identity_residual_max: float
    identity_tol: float
    ode_tol: float
    e_coeff_tol: float

    @property
    def passed(self) -> bool:
        return (
            self.identity_residual_max <= self.identity_tol
            and self.ode_residual_max <= self.ode_tol
            and self.e_coeff_residual_max <= self.e_coeff_tol
        )


def _pq_jets(cand: IdentityCandidate, x: float) -> tuple[Jet2, Jet2]:
    try:
        return cand.p(Jet2.seed(x)), cand.q(Jet2.seed(x))
    except (DomainError, ZeroDivisionError, ValueError) as exc:
        raise SingularPointError(
            f"{cand.name}: p/q jets undefined at x = {x}: {exc}"
        ) from exc


def _r_num_den(P, dP, Q, dQ):
    num = dP * Q * (1 - Q * Q) + 2 * dQ * Q * Q * (P - 1)
    den = 2 * dQ * (1 - P) * (Q * Q - P)
    return num, den


def eval_r(cand: IdentityCandidate, x: float) -> float:
    """K-coefficient r(x) forced by (p, q); raises SingularPointError on a
    vanishing denominator."""
    pj, qj = _pq_jets(cand, x)
    num = pj.d1 * qj.value * (1.0 - qj.value**2) + 2.0 * qj.d1 * qj.value**2 * (
        pj.value - 1.0
    )
    den = 2.0 * qj.d1 * (1.0 - pj.value) * (qj.value**2 - pj.value)
    if den == 0.0 or not math.isfinite(den):
        raise SingularPointError(f"{cand.name}: r denominator vanishes at x = {x}")
    return num / den


def eval_f(cand: IdentityCandidate, x: float) -> float:
    """Logarithmic derivative f(x) = s'(x)/s(x) forced by (p, q)."""
    pj, qj = _pq_jets(cand, x)
    p, dp, q, dq = pj.value, pj.d1, qj.value, qj.d1
    den = 2.0 * p * (p - 1.0) * (q * q - p)
    if den == 0.0 or not math.isfinite(den):
        raise SingularPointError(f"{cand.name}: f denominator vanishes at x = {x}")
    return (dp * (p * p - q * q) - 2.0 * dq * q * p * (p - 1.0)) / den


def _r_jet(cand: IdentityCandidate, x: float) -> Jet2:
    """(r, r') as a first-order jet, obtained by pushing the p/q jets
    through the r-formula one derivative order higher."""
    pj, qj = _pq_jets(cand, x)
    P = Jet2(pj.value, pj.d1)
    dP = Jet2(pj.d1, pj.d2)
    Q = Jet2(qj.value, qj.d1)
    dQ = Jet2(qj.d1, qj.d2)
    num, den = _r_num_den(P, dP, Q, dQ)
    if den.value == 0.0:
        raise SingularPointError(f"{cand.name}: r denominator vanishes at x = {x}")
    return num / den


def ode_residual(
    cand: IdentityCandidate, x: float, r_override: float | Scalar | None = None
) -> float:
    """Residual of r' - (f + q'/q) r + p'/(2p(p-1)) at x.

    Vanishes when r from the generic formula solves the ODE.  r_override
    substitutes a different coefficient (a constant or a callable evaluated
    through jets) to demonstrate that non-solutions fail.
    """
    pj, qj = _pq_jets(cand, x)
    if r_override is None:
        rj = _r_jet(cand, x)
    elif callable(r_override):
        rj = r_override(Jet2.seed(x))
        if not isinstance(rj, Jet2):
            rj = Jet2(float(rj))
    else:
        rj = Jet2(float(r_override))
    f = eval_f(cand, x)
    return rj.d1 - (f + qj.d1 / qj.value) * rj.value + pj.d1 / (
        2.0 * pj.value * (pj.value - 1.0)
    )


def e_coefficient_residual(cand: IdentityCandidate, x: float) -> float:
    """The E(q(x)) coefficient in d/dx [Pi + r K]; zero exactly when r takes
    its forced value."""
    pj, qj = _pq_jets(cand, x)
    p, dp, q, dq = pj.value, pj.d1, qj.value, qj.d1
    if q in (0.0, 1.0):
        raise SingularPointError(f"{cand.name}: q in {{0,1}} at x = {x}")
    r = eval_r(cand, x)
    return (
        dp / (2.0 * (p - 1.0) * (q * q - p))
        + dq * q / ((1.0 - q * q) * (q * q - p))
        + r * dq / (q * (1.0 - q * q))
    )


def integrating_factor_residual(cand: IdentityCandidate, x: float) -> float:
    """Residual of u'/u + f + q'/q for u = sqrt((p-1)(q^2-p)/(p q^2)), the
    integrating factor of the ODE.  DomainError if u's argument is not
    positive at x."""
    pj, qj = _pq_jets(cand, x)
    P = Jet2(pj.value, pj.d1)
    Q = Jet2(qj.value, qj.d1)
    arg = (P - 1) * (Q * Q - P) / (P * Q * Q)
    if arg.value <= 0.0:
        raise DomainError(
            f"{cand.name}: integrating factor argument {arg.value} <= 0 at x = {x}"
        )
    u = sqrt(arg)
    return u.d1 / u.value + eval_f(cand, x) + qj.d1 / qj.value


def _anchor_r(cand: IdentityCandidate, x0: float) -> float:
    try:
        return eval_r(cand, x0)
    except SingularPointError:
        if cand.printed_r is None:
            raise
        return cand.printed_r(x0)


def _values_at(cand: IdentityCandidate, x: float) -> tuple[float, float]:
    p = cand.p(float(x))
    q = cand.q(float(x))
    if isinstance(p, Jet2) or isinstance(q, Jet2):  # pragma: no cover
        raise TypeError("candidate p/q must map floats to floats")
    if p >= 1.0:
        raise RegimeError(
            f"{cand.name}: Pi characteristic p(x) = {p} >= 1 at x = {x}"
        )
    if not 0.0 <= q < 1.0:
        raise RegimeError(f"{cand.name}: modulus q(x) = {q} outside [0,1) at x = {x}")
    return p, q


def identity_lhs(cand: IdentityCandidate, x: float, r: float | None = None) -> float:
    """Pi(p(x), q(x)) + r(x) K(q(x)) with r from the generic formula unless
    overridden."""
    p, q = _values_at(cand, x)
    if r is None:
        r = eval_r(cand, x)
    return ell_pi(p, q) + r * ell_k(q)


def verify_identity(
    cand: IdentityCandidate,
    x0: float | None = None,
    grid: Sequence[float] | None = None,
    tol: float = 1e-10,
    ode_tol: float = 1e-10,
    e_coeff_tol: float = 1e-11,
) -> IdentityReport:
    """Pin C = Pi + r K at the anchor, rebuild s(x) = C exp(int_x0^x f) by
    cumulative quadrature, and report max residuals over the grid."""
    if x0 is None:
        x0 = cand.anchor_x0
    xs = sorted(grid) if grid is not None else list(default_grid(cand))
    for x in xs:
        _values_at(cand, x)  # regime gate before any reconstruction work
    p0, q0 = _values_at(cand, x0)
    C = ell_pi(p0, q0) + _anchor_r(cand, x0) * ell_k(q0)

    def f(t: float) -> float:
        # at a degenerate anchor the f-formula underflows to 0/0 while f
        # itself stays bounded; NaN makes the quadrature drop those nodes
        try:
            return eval_f(cand, t)
        except SingularPointError:
            return math.nan
    s_at: dict[float, float] = {}
    above = [x for x in xs if x > x0]
    below = [x for x in xs if x < x0]
    below.reverse()
    for chain in (above, below):
        if chain:
            for x, integral in zip(chain, cumulative_integrals(f, x0, chain)):
                s_at[x] = C * math.exp(integral)
    if x0 in xs:
        s_at[x0] = C

    id_max = ode_max = ec_max = 0.0
    for x in xs:
        if x == x0:
            lhs = C  # anchor: identity holds by construction
        else:
            lhs = identity_lhs(cand, x)
            ode_max = max(ode_max, abs(ode_residual(cand, x)))
            ec_max = max(ec_max, abs(e_coefficient_residual(cand, x)))
        id_max = max(id_max, abs(lhs - s_at[x]))
    return IdentityReport(
        name=cand.name,
        anchor_x0=x0,
        constant_C=C,
        grid=tuple(xs),
        ode_residual_max=ode_max,
        e_coeff_residual_max=ec_max,
        identity_residual_max=id_max,
        identity_tol=tol,
        ode_tol=ode_tol,
        e_coeff_tol=e_coeff_tol,
    )


def check_printed_variants(
    cand: IdentityCandidate, grid: Sequence[float] | None = None, tol: float = 1e-10
) -> dict[str, float]:
    """Max |Pi + r_printed K - printed RHS| per printed coefficient variant.

    Resolves self-inconsistent sources: exactly one variant should pass.
    """
    if cand.printed_rhs is None:
        raise DomainError(f"{cand.name}: no printed closed form to check against")
    xs = sorted(grid) if grid is not None else list(default_grid(cand))
    variants = [("printed", cand.printed_r)] if cand.printed_r else []
    variants += list(cand.printed_r_alts)
    out = {}
    for label, rfn in variants:
        worst = 0.0
        for x in xs:
            lhs = identity_lhs(cand, x, r=rfn(x))
            worst = max(worst, abs(lhs - cand.printed_rhs(x)))
        out[label] = worst
    return out


# ----------------------------------------------------------------------------
# built-in candidates


def _geom_grid(lo: float, hi: float, n: int, dense_at: float) -> list[float]:
    """n points of [lo, hi], geometrically packed toward dense_at."""
    a, b = (hi, lo) if dense_at == lo else (lo, hi)
    # distances from the dense end, log-spaced
    span = abs(b - a)
    emin, emax = math.log10(span * 1e-3), math.log10(span)
    step = (emax - emin) / (n - 1)
    pts = [b + math.copysign(10.0 ** (emin + i * step), a - b) for i in range(n)]
    return sorted(pts)


def default_grid(cand: IdentityCandidate, n: int = 200) -> list[float]:
    """Verification grid: log-spaced toward the residual-critical boundary
    (q -> 1, or the degenerate anchor for the unbounded-domain candidate)."""
    lo, hi = cand.domain
    if cand.name == "jia":
        return _geom_grid(-10.0, -1.001, n, dense_at=-1.001)
    caps = {"surd": 0.95}
    return _geom_grid(1e-3, caps.get(cand.name, 0.99), n, dense_at=caps.get(cand.name, 0.99))


def builtin_candidates() -> list[IdentityCandidate]:
    """The four shipped (p, q) pairs with their real-evaluable domains."""
    linear = IdentityCandidate(
        name="linear",
        p=lambda x: -x,
        q=lambda x: x,
        domain=(0.0, 1.0),
        anchor_x0=0.0,
        printed_r=lambda x: -0.5,
        printed_rhs=lambda x: math.pi / (4.0 * (x + 1.0)),
    )
    jia = IdentityCandidate(
        name="jia",
        p=lambda x: (1 + x) * (1 - 3 * x) / ((1 - x) * (1 + 3 * x)),
        q=lambda x: sqrt((1 + x) ** 3 * (1 - 3 * x) / ((1 - x) ** 3 * (1 + 3 * x))),
        domain=(-math.inf, -1.0),
        anchor_x0=-1.0,
        printed_r=lambda x: -(1 + 3 * x) / (6 * x),
        printed_rhs=lambda x: -math.pi / 12.0 * math.sqrt((1 + 3 * x) * (x - 1) ** 3) / x,
    )
    cubic = IdentityCandidate(
        name="cubic",
        p=lambda x: -(x * x) / (1 + 2 * x),
        q=lambda x: sqrt(x**3 * (2 + x) / (1 + 2 * x)),
        domain=(0.0, 1.0),
        anchor_x0=0.0,
        printed_r=lambda x: -(2 + x) * (1 + 2 * x) / (3.0 * (1 + x) ** 2),
        printed_rhs=lambda x: math.pi / 6.0 * math.sqrt(1 + 2 * x) / (1 + x) ** 2,
        printed_r_alts=(("displayed", lambda x: -(1 + 3 * x) / (6.0 * x)),),
    )
    surd = IdentityCandidate(
        name="surd",
        p=lambda x: x * (sqrt(x * x + 1) + 1) * (sqrt(x * x + 1) - x),
        q=lambda x: x * x,
        domain=(0.0, 1.0),
        anchor_x0=0.0,
        printed_r=lambda x: (1 - x - 2 * math.sqrt(1 + x * x)) / (4 * math.sqrt(1 + x * x)),
        printed_rhs=lambda x: 3 * math.pi / (8 * (1 - x) * math.sqrt(1 + x * x)),
    )
    return [linear, jia, cubic, surd]
