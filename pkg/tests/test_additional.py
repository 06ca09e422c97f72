import math

import pytest

from closeness_lollipop.additional import (
    CaseAParams,
    CaseBParams,
    CaseCParams,
    CaseDParams,
    additional_argmax_set,
    additional_lollipop,
    additional_oracle,
    appendix_d_delta,
    appendix_d_F,
    appendix_d_floor,
    appendix_d_r_range,
    appendix_d_step,
    closeness_A,
    closeness_B,
    closeness_C,
    closeness_D,
    diff_AC,
    eq14_sign,
    eq15_sign,
    link_additions,
    optimal_k_scan,
    verify_A_dominates_D,
    vertexB_closeness,
)
from closeness_lollipop.families import closeness_lollipop, gen_complete, gen_lollipop
from closeness_lollipop.graph import add_edge, closeness, vertex_closeness
from closeness_lollipop.numerics import Dyadic

import oracles


def D(num, exp=0):
    return Dyadic(num, exp)


def reference_A(m, n, k):
    return oracles.closeness(m + n, oracles.lollipop_edges(m, n) + [(m, m + k)])


class TestOracle:
    def test_lollipop_3_1(self):
        assert additional_oracle(gen_lollipop(3, 1)) == (D(11, 1), (1, 4))

    def test_complete_has_no_addition(self):
        with pytest.raises(ValueError):
            additional_oracle(gen_complete(4))

    def test_lollipop_4_4(self):
        value, argmax = additional_argmax_set(gen_lollipop(4, 4))
        assert value == 18
        assert (3, 7) in argmax and (4, 8) in argmax
        assert additional_oracle(gen_lollipop(4, 4)) == (D(18), argmax[0])

    def test_additions_never_decrease(self):
        g = gen_lollipop(4, 5)
        assert all(r.value >= closeness(g) for r in link_additions(g))


class TestChordShapeExamples:
    def test_A(self):
        assert closeness_A(3, 2, 2) == 8
        assert closeness_A(4, 4, 4) == 18
        assert closeness_A(3, 5, 4) == closeness(CaseAParams(3, 5, 4).graph())
        assert closeness_A(3, 5, 4).to_fraction() == reference_A(3, 5, 4)

    def test_B(self):
        assert closeness_B(3, 2) == 8
        assert closeness_B(3, 1) == D(11, 1)
        assert closeness_B(4, 3) == closeness(CaseBParams(4, 3).graph())

    @pytest.mark.parametrize("m, k, expected", [(3, 2, D(3, 1)), (3, 1, D(5, 2)), (4, 4, D(17, 3))])
    def test_vertex_B(self, m, k, expected):
        assert vertexB_closeness(m, k) == expected
        assert vertex_closeness(CaseBParams(m, k).graph(), m + k) == expected

    def test_C(self):
        assert closeness_C(3, 2, 2) == 8
        assert closeness_C(3, 4, 3) == D(27, 1)
        assert closeness_C(3, 1, 1) == D(11, 1)

    def test_D(self):
        assert closeness_D(3, 3, 1, 3) == 10
        assert closeness_D(3, 4, 1, 3) == closeness(CaseDParams(3, 4, 1, 3).graph())
        assert closeness_D(4, 6, 2, 5) == closeness(CaseDParams(4, 6, 2, 5).graph())

    @pytest.mark.parametrize(
        "call",
        [
            lambda: closeness_A(3, 4, 1),
            lambda: closeness_A(3, 4, 5),
            lambda: closeness_B(2, 3),
            lambda: closeness_C(3, 4, 0),
            lambda: closeness_D(3, 4, 2, 3),
            lambda: closeness_D(3, 2, 1, 3),
        ],
    )
    def test_out_of_range(self, call):
        with pytest.raises(ValueError):
            call()


class TestChordShapeSweeps:
    @pytest.mark.parametrize("m", range(3, 7))
    def test_A_and_C(self, m):
        for n in range(1, 9):
            for k in range(2, n + 1):
                assert closeness_A(m, n, k) == closeness(CaseAParams(m, n, k).graph()), (n, k)
            for k in range(1, n + 1):
                assert closeness_C(m, n, k) == closeness(CaseCParams(m, n, k).graph()), (n, k)

    @pytest.mark.parametrize("m", range(3, 7))
    def test_B(self, m):
        for k in range(1, 10):
            g = CaseBParams(m, k).graph()
            assert closeness_B(m, k) == closeness(g)
            assert vertexB_closeness(m, k) == vertex_closeness(g, m + k)

    @pytest.mark.parametrize("m", range(3, 7))
    def test_D(self, m):
        for n in range(3, 9):
            for q in range(1, n - 1):
                for k in range(q + 2, n + 1):
                    assert closeness_D(m, n, q, k) == closeness(CaseDParams(m, n, q, k).graph())

    def test_C_at_path_end_is_B(self):
        for m in range(3, 7):
            for k in range(1, 8):
                assert closeness_C(m, k, k) == closeness_B(m, k)


class TestAComparedWithC:
    def test_anchor_values(self):
        for n in range(2, 13):
            assert diff_AC(n, 2) == 0
        for n in range(3, 13):
            assert diff_AC(n, 3) == D(-1, 2)

    def test_equals_shape_difference(self):
        assert diff_AC(6, 4) == closeness_A(5, 6, 4) - closeness_C(5, 6, 4)
        for m in range(3, 8):
            for n in range(2, 11):
                for k in range(2, n + 1):
                    assert diff_AC(n, k) == closeness_A(m, n, k) - closeness_C(m, n, k), (m, n, k)

    def test_domain(self):
        with pytest.raises(ValueError):
            diff_AC(5, 1)
        with pytest.raises(ValueError):
            diff_AC(4, 5)

    def test_which_chord_wins(self):
        for m in range(3, 8):
            for n in range(1, 11):
                base = closeness_lollipop(m, n)
                # k = 1: A coincides with the bridge and adds nothing
                assert closeness_C(m, n, 1) > base
                for k in range(2, n + 1):
                    a, c = closeness_A(m, n, k), closeness_C(m, n, k)
                    if k == 2:
                        assert a == c
                    elif k == 3:
                        assert c > a
                    else:
                        assert a > c, (m, n, k)


class TestADominatesD:
    def test_small_grids(self):
        rep = verify_A_dominates_D(3, 5)
        assert rep.ok and rep.checked == 6
        rep = verify_A_dominates_D(4, 8)
        assert rep.ok
        for values in rep.f_values.values():
            rs = sorted(values)
            assert all(values[r] > values[r + 1] for r in rs[:-1])

    def test_single_chord(self):
        rep = verify_A_dominates_D(3, 3)
        assert rep.checked == 1
        assert closeness_A(3, 3, 3) > closeness_D(3, 3, 1, 3) == 10

    def test_all_parities_seen(self):
        rep = verify_A_dominates_D(5, 10)
        assert set(rep.by_parity) == {"even/even", "even/odd", "odd/even", "odd/odd"}

    def test_report_lists_violations(self, monkeypatch):
        import closeness_lollipop.additional as mod

        monkeypatch.setattr(mod, "closeness_D", lambda m, n, q, k: D(10**6))
        rep = mod.verify_A_dominates_D(3, 5)
        assert not rep.ok and len(rep.violations) == rep.checked

    def test_no_D_chord_for_short_paths(self):
        assert verify_A_dominates_D(3, 2).checked == 0

    def test_F_is_the_A_minus_D_difference(self):
        for m in range(3, 8):
            for n in range(3, 13):
                for p in range(2, n):
                    for r in appendix_d_r_range(n, p):
                        k, q = 2 * p - 1, 2 * p - 1 - 2 * r
                        assert appendix_d_F(m, n, p, r) == closeness_A(m, n, k) - closeness_D(m, n, q, k)

    def test_step_and_floor_closed_forms(self):
        for m in range(3, 8):
            for n in range(3, 13):
                for p in range(2, n):
                    rs = list(appendix_d_r_range(n, p))
                    for r in rs[:-1]:
                        step = appendix_d_F(m, n, p, r) - appendix_d_F(m, n, p, r + 1)
                        assert appendix_d_step(m, n, p, r) == step > 0
                        assert appendix_d_delta(n, p, r) > 0
                    if rs:
                        assert appendix_d_floor(m, n, p) == appendix_d_F(m, n, p, p - 1) > 0


class TestOptimalK:
    def test_scan_matches_oracle_on_bridge_vertex_links(self):
        m, n = 3, 10
        g = gen_lollipop(m, n)
        best = max((closeness(add_edge(g, m, m + k)), -k) for k in range(2, n + 1))
        scan = optimal_k_scan(m, n)
        assert (scan.value, -scan.k) == best
        k, value = scan
        assert (k, value) == (scan.k, scan.value)

    def test_derivative_sign_at_start(self):
        expected = 2 + 3 + 1 + 2.0**-8 - 2 * 2.0**-8 - 2 / math.log(2)
        assert eq14_sign(3, 10, 1) == pytest.approx(expected, rel=1e-12)
        assert eq14_sign(3, 10, 1) > 3.1

    def test_sign_change_location(self):
        n = 10
        scan = optimal_k_scan(3, n)
        assert 0.2 * n <= scan.p_star_odd <= 0.5 * n
        assert 0.2 * n <= scan.p_star_even <= 0.5 * n
        assert eq14_sign(3, n, scan.p_star_odd) < 0 <= eq14_sign(3, n, scan.p_star_odd - 1)
        assert eq15_sign(3, n, scan.p_star_even) < 0 <= eq15_sign(3, n, scan.p_star_even - 1)

    def test_derivative_procedure_agrees_with_scan(self):
        for m in range(3, 31):
            for n in range(5, 41):
                scan = optimal_k_scan(m, n)
                assert scan.derivative_k == scan.k, (m, n)
                assert abs(2 * scan.p_star - scan.k) <= 3

    def test_short_paths_rejected(self):
        with pytest.raises(ValueError):
            optimal_k_scan(3, 4)


class TestAdditionalLollipop:
    @pytest.mark.parametrize(
        "m, n, expected", [(3, 1, D(11, 1)), (3, 2, D(8)), (3, 3, D(43, 2)), (4, 4, D(18))]
    )
    def test_small_values(self, m, n, expected):
        assert additional_lollipop(m, n) == expected

    def test_large_n_against_oracle(self):
        assert additional_lollipop(5, 9) == additional_oracle(gen_lollipop(5, 9))[0]

    @pytest.mark.parametrize("m", range(3, 8))
    def test_oracle_sweep(self, m):
        for n in range(1, 10):
            assert additional_lollipop(m, n) == additional_oracle(gen_lollipop(m, n))[0], n

    def test_rejects_bad_parameters(self):
        with pytest.raises(ValueError):
            additional_lollipop(2, 3)
