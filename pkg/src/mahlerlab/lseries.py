"""L(E, 2) and L'(E, 0) by a smoothed split of the completed L-function.

With Lambda(s) = N^{s/2} (2 pi)^{-s} Gamma(s) L(E, s) = eps Lambda(2 - s),
cutting the Mellin integral at y = A and folding the lower half through the
functional equation gives, termwise,

    L(E, 2) = sum a_n/n^2 e^{-2 pi n A} (1 + 2 pi n A)
            + eps (4 pi^2 / N) sum a_n E1(2 pi n / (N A)),

independent of the split point A.  That independence is a sharp numerical
certificate: a wrong sign or a wrong bad-prime coefficient makes the two
half-sums disagree at the 1e-4 level while the true data agree to 1e-10, so
the sign (and any coefficient local analysis could not fix) is *detected*,
never assumed.  L'(E, 0) = eps N/(4 pi^2) L(E, 2) then follows from the
Gamma-factor pole at s = 0.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import (
    CurveModel,
    ap_with_route,
    curve_from_k,
    extend_multiplicatively,
    hasse_range,
    primes_up_to,
)
from .errors import AccuracyError, DomainError, LDataError

_EULER_GAMMA = 0.5772156649015328606065

#: split points (in units of 1/sqrt(N)) probed by the independence test
_SPLIT_PROBES = (0.8, 1.0, 1.3)
_SPREAD_ACCEPT = 1e-10
_SPREAD_REJECT = 1e-6


def exp_integral_e1(x: float) -> float:
    """E1(x) = int_x^inf e^{-t}/t dt for x > 0, abs error <= 1e-15.

    Power series below x = 1, modified-Lentz continued fraction above.
    """
    if x <= 0.0:
        raise DomainError(f"exp_integral_e1: requires x > 0, got {x}")
    if x < 1.0:
        total = -_EULER_GAMMA - math.log(x)
        term = 1.0
        for k in range(1, 40):
            term *= -x / k
            delta = -term / k
            total += delta
            if abs(delta) < 1e-18 * max(1.0, abs(total)):
                break
        return total
    # E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
    tiny = 1e-300
    b = x + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    for k in range(1, 120):
        a = -k * k
        b += 2.0
        d = 1.0 / (a * d + b)
        c = b + a / c
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < 1e-16:
            break
    return h * math.exp(-x)


@dataclass(frozen=True)
class LFunctionData:
    """Hecke coefficients a_1..a_nmax with conductor, sign, and audit trail."""

    an: tuple[int, ...]  # an[n] for n >= 1; an[0] unused
    eps: int
    N: int
    k_label: float
    ap_routes: dict[int, str]

    @property
    def n_max(self) -> int:
        return len(self.an) - 1


@dataclass(frozen=True)
class LValueResult:
    L2: float
    Lprime0: float
    n_used: int
    tail_bound: float


def default_n_max(N: int) -> int:
    """Terms needed for tail < 1e-15 at conductors up to 64."""
    return math.ceil(18.0 * math.sqrt(N) / (2.0 * math.pi)) + 50


def _l2_split(an, N: int, eps: int, A: float) -> float:
    direct = 0.0
    folded = 0.0
    for n in range(1, len(an)):
        a = an[n]
        if a == 0:
            continue
        x1 = 2.0 * math.pi * n * A
        direct += a / (n * n) * math.exp(-x1) * (1.0 + x1)
        folded += a * exp_integral_e1(2.0 * math.pi * n / (N * A))
    return direct + eps * (4.0 * math.pi**2 / N) * folded


def _tail_bound(n_max: int, N: int, A: float) -> float:
    # |a_n| <= n^{3/2} crudely dominates sigma_0(n) sqrt(n); 60 extra terms of
    # the slower-decaying folded sum bound the rest by the decay ratio
    total = 0.0
    for n in range(n_max + 1, n_max + 61):
        x1 = 2.0 * math.pi * n * A
        x2 = 2.0 * math.pi * n / (N * A)
        total += n ** 1.5 * (math.exp(-x1) * (1.0 + x1) / (n * n)
                             + (4.0 * math.pi**2 / N) * exp_integral_e1(x2))
    return 2.0 * total


def split_point_spread(data: LFunctionData, probes=_SPLIT_PROBES) -> float:
    """Max pairwise difference of L(E,2) across split points; the numerical
    certificate for eps and the delicate a_p."""
    rootN = math.sqrt(data.N)
    vals = [_l2_split(data.an, data.N, data.eps, c / rootN) for c in probes]
    return max(abs(u - v) for u in vals for v in vals)


def l2(
    curve: CurveModel,
    data: LFunctionData,
    tol: float = 1e-12,
    split: float | None = None,
) -> LValueResult:
    """L(E, 2) and L'(E, 0) from the coefficient table.

    `split` overrides the split point A (default 1/sqrt(N)); the tail bound
    must come in under tol or the caller is asked for a larger table.
    """
    N = curve.conductor_N
    if data.N != N:
        raise DomainError("l2: data and curve disagree on the conductor")
    A = split if split is not None else 1.0 / math.sqrt(N)
    tail = _tail_bound(data.n_max, N, A)
    if tail > tol:
        raise AccuracyError(
            f"l2: tail bound {tail:g} exceeds tol {tol:g}; raise n_max",
            error_estimate=tail,
        )
    val = _l2_split(data.an, N, data.eps, A)
    return LValueResult(
        L2=val,
        Lprime0=data.eps * N / (4.0 * math.pi**2) * val,
        n_used=data.n_max,
        tail_bound=tail,
    )


def sign_detect(curve: CurveModel, data: LFunctionData) -> int:
    """Choose eps in {+1, -1} by split-point independence.

    The winning sign must come in under 1e-10 spread with the loser above
    1e-6, otherwise the coefficient data itself is bad.
    """
    spreads = {}
    for eps in (1, -1):
        trial = LFunctionData(
            an=data.an, eps=eps, N=data.N, k_label=data.k_label, ap_routes={}
        )
        spreads[eps] = split_point_spread(trial)
    good = min(spreads, key=spreads.get)
    if spreads[good] > _SPREAD_ACCEPT or spreads[-good] < _SPREAD_REJECT:
        raise LDataError(
            f"sign_detect: no sign gives split-point independence "
            f"(spreads {spreads}); check bad-prime coefficients"
        )
    return good


def an_table(curve: CurveModel, n_max: int | None = None) -> LFunctionData:
    """Full coefficient table with eps and any delicate a_p resolved by the
    split-point-independence search."""
    if n_max is None:
        n_max = default_n_max(curve.conductor_N)
    if n_max < 1:
        raise DomainError(f"an_table: n_max must be >= 1, got {n_max}")
    N = curve.conductor_N
    known: dict[int, int] = {}
    routes: dict[int, str] = {}
    unresolved: list[tuple[int, list[int]]] = []
    for p in primes_up_to(max(n_max, 3)):
        value, route = ap_with_route(curve, p)
        routes[p] = route
        if value is not None:
            known[p] = value
            continue
        vN = 0 if N % p else (1 if (N // p) % p else 2)
        candidates = [1, -1] if vN == 1 else hasse_range(p)
        unresolved.append((p, candidates))

    best = None
    runner = math.inf
    for eps, *choice in itertools.product((1, -1), *[c for _, c in unresolved]):
        trial_ap = dict(known)
        trial_ap.update({p: a for (p, _), a in zip(unresolved, choice)})
        an = extend_multiplicatively(trial_ap, N, n_max)
        trial = LFunctionData(an=tuple(an), eps=eps, N=N, k_label=curve.k_label, ap_routes={})
        spread = split_point_spread(trial)
        if best is None or spread < best[0]:
            if best is not None:
                runner = min(runner, best[0])
            best = (spread, eps, dict(trial_ap), an)
        else:
            runner = min(runner, spread)
    spread, eps, _, an = best
    if spread > _SPREAD_ACCEPT or runner < _SPREAD_REJECT:
        raise LDataError(
            f"an_table: consistency search failed (winner {spread:g}, "
            f"runner-up {runner:g}) for k = {curve.k_label}"
        )
    # positivity: L(E,2) is an absolutely convergent Euler product
    probe = LFunctionData(an=tuple(an), eps=eps, N=N, k_label=curve.k_label, ap_routes={})
    if _l2_split(probe.an, N, eps, 1.0 / math.sqrt(N)) <= 0.0:
        raise LDataError(f"an_table: nonpositive L(E,2) for k = {curve.k_label}")
    return LFunctionData(
        an=tuple(an), eps=eps, N=N, k_label=curve.k_label, ap_routes=routes
    )


def lvalue_from_k(
    k: float, n_max: int | None = None, tol: float = 1e-12
) -> tuple[CurveModel, LFunctionData, LValueResult]:
    """Convenience pipeline: curve, coefficients, and L-values for one k."""
    curve = curve_from_k(k)
    data = an_table(curve, n_max)
    return curve, data, l2(curve, data, tol)


# ----------------------------------------------------------------------------
# exports


def an_table_text(data: LFunctionData) -> str:
    """Plain-text (n, a_n) table, one pair per line."""
    lines = [f"{n} {data.an[n]}" for n in range(1, data.n_max + 1)]
    return "\n".join(lines) + "\n"


def summary_record(
    curve: CurveModel, data: LFunctionData, result: LValueResult
) -> dict:
    return {
        "k": curve.k_label,
        "k_squared": curve.k_squared,
        "N": curve.conductor_N,
        "eps": data.eps,
        "L2": result.L2,
        "Lprime0": result.Lprime0,
        "n_used": result.n_used,
        "r_k": str(Fraction(curve.r_k)),
        "ap_routes": {str(p): r for p, r in sorted(data.ap_routes.items())},
    }


def summary_csv(records: list[dict]) -> str:
    """CSV for summary records (ap_routes flattened out)."""
    cols = ["k", "k_squared", "N", "eps", "L2", "Lprime0", "n_used", "r_k"]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for rec in records:
        writer.writerow([repr(rec[c]) if isinstance(rec[c], float) else rec[c] for c in cols])
    return buf.getvalue()


def summary_json(records: list[dict]) -> str:
    return json.dumps({"schema": 1, "curves": records}, indent=2, sort_keys=True) + "\n"
