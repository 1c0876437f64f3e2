import json
import math

import pytest

from mahlerlab import curves as C
from mahlerlab import lseries as L
from mahlerlab.errors import AccuracyError, DomainError, LDataError
from mahlerlab.quadrature import quadrature_oracle

# frozen independent 30-digit references
E1_REFS = {
    0.5: 0.55977359477616081175,
    3.0: 0.013048381094197037413,
    12.0: 4.7510818246724939326e-7,
}
LPRIME0 = {
    1.0: 0.251330433713252231,
    2.0: 0.511424067053503722,
    3.0: 0.397356223989770627,
    5.0: 0.251330433713252231,
    8.0: 0.511424067053503722,
    12.0: 1.23527993542569345,
    16.0: 0.251330433713252231,
}
LPRIME0_SQRT = {
    2: 1.42960809772399786,
    8: 0.743333246643551734,
    18: 0.511424067053503722,
    32: 1.65866449838191409,
}


class TestExpIntegral:
    @pytest.mark.parametrize("x,ref", sorted(E1_REFS.items()))
    def test_frozen_values(self, x, ref):
        assert L.exp_integral_e1(x) == pytest.approx(ref, abs=1e-15 * max(1.0, ref) + 1e-21)

    def test_against_quadrature(self):
        for x in (0.3, 1.0, 2.5):
            # int_x^40 e^-t/t dt + remainder bound beyond 40 (< 2e-19)
            oracle = quadrature_oracle(lambda t: math.exp(-t) / t, x, 40.0, 1e-15)
            assert L.exp_integral_e1(x) == pytest.approx(oracle, abs=1e-14)

    def test_branch_boundary_continuity(self):
        lo = L.exp_integral_e1(1.0 - 1e-12)
        hi = L.exp_integral_e1(1.0 + 1e-12)
        assert abs(lo - hi) < 1e-11

    def test_domain(self):
        with pytest.raises(DomainError):
            L.exp_integral_e1(0.0)


class TestPipeline:
    @pytest.mark.parametrize("k,ref", sorted(LPRIME0.items()))
    def test_lprime_integer_rows(self, k, ref):
        _, data, res = L.lvalue_from_k(k)
        assert data.eps == 1
        assert res.Lprime0 == pytest.approx(ref, abs=1e-12)
        assert res.tail_bound < 1e-12

    @pytest.mark.parametrize("k2,ref", sorted(LPRIME0_SQRT.items()))
    def test_lprime_sqrt_rows(self, k2, ref):
        _, data, res = L.lvalue_from_k(math.sqrt(k2))
        assert data.eps == 1
        assert res.Lprime0 == pytest.approx(ref, abs=1e-12)

    def test_lprime_relation_to_l2(self):
        curve, data, res = L.lvalue_from_k(8.0)
        assert res.Lprime0 == pytest.approx(
            data.eps * curve.conductor_N / (4.0 * math.pi**2) * res.L2, rel=1e-15
        )

    def test_resolved_coefficients(self):
        # consistency search lands on the known newform coefficients
        for k in (1.0, 5.0, 16.0):
            _, data, _ = L.lvalue_from_k(k)
            assert data.an[2] == -1  # conductor-15 form
            assert data.ap_routes[2] == "consistency"
        _, data, _ = L.lvalue_from_k(3.0)
        assert data.an[2] == -1 and data.an[3] == 1
        _, data, _ = L.lvalue_from_k(12.0)
        assert data.an[3] == 1
        _, data, _ = L.lvalue_from_k(math.sqrt(18.0))
        assert data.an[3] == -1

    def test_an_multiplicative_identities(self):
        _, data, _ = L.lvalue_from_k(1.0)
        an = data.an
        assert an[1] == 1
        assert an[6] == an[2] * an[3]
        assert an[4] == an[2] ** 2 - 2
        assert an[10] == an[2] * an[5]

    def test_split_point_independence(self):
        _, data, _ = L.lvalue_from_k(8.0)
        assert L.split_point_spread(data) <= 1e-10

    def test_generalized_split_values_match(self):
        curve, data, _ = L.lvalue_from_k(8.0)
        rootn = math.sqrt(curve.conductor_N)
        a = L.l2(curve, data, split=0.8 / rootn).L2
        b = L.l2(curve, data, split=1.3 / rootn).L2
        assert abs(a - b) <= 1e-10

    def test_sign_flip_breaks_independence(self):
        _, data, _ = L.lvalue_from_k(8.0)
        flipped = L.LFunctionData(
            an=data.an, eps=-data.eps, N=data.N, k_label=data.k_label, ap_routes={}
        )
        assert L.split_point_spread(flipped) > 1e-4

    def test_sign_detect(self):
        for k in (1.0, 8.0):
            curve, data, _ = L.lvalue_from_k(k)
            assert L.sign_detect(curve, data) == 1

    def test_sign_detect_rejects_corrupt_data(self):
        curve, data, _ = L.lvalue_from_k(8.0)
        ap = {p: C.ap_good(curve, p) for p in C.primes_up_to(data.n_max) if p > 3}
        ap[2] = 0
        ap[3] = -1
        ap[5] += 2  # corrupt one good coefficient
        an = C.extend_multiplicatively(ap, curve.conductor_N, data.n_max)
        bad = L.LFunctionData(
            an=tuple(an), eps=1, N=curve.conductor_N, k_label=8.0, ap_routes={}
        )
        with pytest.raises(LDataError):
            L.sign_detect(curve, bad)

    def test_tail_bound_enforced(self):
        curve = C.curve_from_k(8.0)
        full = L.an_table(curve)
        short = L.LFunctionData(
            an=full.an[:9], eps=full.eps, N=full.N, k_label=full.k_label, ap_routes={}
        )
        with pytest.raises(AccuracyError):
            L.l2(curve, short, tol=1e-12)

    def test_an_table_refuses_uncertifiable_length(self):
        # 8 terms cannot reach split-point independence at 1e-10
        with pytest.raises(LDataError):
            L.an_table(C.curve_from_k(8.0), n_max=8)

    def test_default_n_max(self):
        assert L.default_n_max(64) == math.ceil(18 * 8 / (2 * math.pi)) + 50


class TestExports:
    def test_an_table_text(self):
        _, data, _ = L.lvalue_from_k(8.0)
        lines = L.an_table_text(data).splitlines()
        assert lines[0] == "1 1"
        n, a = lines[5].split()
        assert int(n) == 6 and int(a) == data.an[6]
        assert len(lines) == data.n_max

    def test_summary_record_and_json(self):
        curve, data, res = L.lvalue_from_k(8.0)
        rec = L.summary_record(curve, data, res)
        assert rec["N"] == 24 and rec["eps"] == 1 and rec["r_k"] == "4"
        doc = json.loads(L.summary_json([rec]))
        assert doc["schema"] == 1
        assert doc["curves"][0]["Lprime0"] == res.Lprime0

    def test_summary_csv_deterministic(self):
        curve, data, res = L.lvalue_from_k(8.0)
        rec = L.summary_record(curve, data, res)
        a = L.summary_csv([rec])
        b = L.summary_csv([rec])
        assert a == b
        header, row = a.splitlines()
        assert header.split(",")[0] == "k"
        assert row.split(",")[2] == "24"
