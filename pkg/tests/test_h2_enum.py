import csv
import io
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import brute_feasible_l, solved_endpoints
from wavesets.errors import DomainError, NotAWaveletSetError
from wavesets.exact_sets import IntervalSet
from wavesets.h2_enum import (
    CSV_HEADER,
    CaseId,
    decompose,
    endpoints,
    enumerate_case,
    feasible_l,
    is_ordered,
    k_range,
    reduced_pair_discrepancies,
    stated_inequalities,
    three_interval_set,
)
from wavesets.symmetric import kc, kxy, kxy_intervals
from wavesets.tiling import verify_h2

CASES = list(CaseId)


def params():
    return st.tuples(st.sampled_from(CASES), st.integers(1, 4), st.integers(0, 6),
                     st.integers(1, 6)).map(lambda t: (t[0], t[1], max(t[2], 1 if t[0] in (CaseId.T1D1, CaseId.T1D2) else 0), t[1] + t[3]))


@settings(max_examples=60)
@given(params(), st.integers(1, 40))
def test_endpoints_match_symbolic_solution(p, dl):
    case, r, k, s = p
    assert endpoints(case, r, k, s, k + dl) == solved_endpoints(case.value, r, k, s, k + dl)


@given(params())
def test_feasible_l_matches_brute_scan(p):
    case, r, k, s = p
    got = feasible_l(case, r, k, s)
    scan_to = 4 * (2 ** s) * (k + 2)
    assert got == brute_feasible_l(lambda l: endpoints(case, r, k, s, l), k, scan_to)


def test_case_parsing():
    assert CaseId.parse("t1d1") is CaseId.T1D1
    assert CaseId.parse("(T2,D1)") is CaseId.T2D1
    with pytest.raises(DomainError):
        CaseId.parse("t3d1")


@pytest.mark.parametrize("args", [("T1D1", 0, 1, 3), ("T1D1", 2, 1, 2), ("T1D1", 1, 0, 3), ("T2D2", 1, -1, 3)])
def test_domain_errors(args):
    with pytest.raises(DomainError):
        feasible_l(*args)


def test_first_t1d1_row():
    assert feasible_l("T1D1", 1, 1, 3) == [8]
    assert endpoints("T1D1", 1, 1, 3, 8) == (F(3, 5), 1, 2, F(7, 3), F(28, 3), F(48, 5))


def test_k_range():
    assert list(k_range("T1D1", 2)) == list(range(1, 6))
    assert list(k_range("T2D2", 1)) == [0, 1]


def test_stated_system_agrees_with_ordering_for_t1d1():
    for s in range(3, 8):
        feas = set(feasible_l("T1D1", 1, 1, s))
        for l in range(2, 2 ** (s + 2)):
            assert all(stated_inequalities("T1D1", 1, 1, s, l).values()) == (l in feas)


def test_reduced_pair_is_exact_for_t1d1():
    assert reduced_pair_discrepancies("T1D1", 2, 1, 6) == []


def test_reduced_pair_misses_for_t2d1():
    # l = 26 satisfies the reduced pair but not the full ordering
    assert reduced_pair_discrepancies("T2D1", 2, 5, 4) == [26]
    assert not is_ordered(endpoints("T2D1", 2, 5, 4, 26))


def test_enumeration_rows_are_wavelet_sets_and_csv():
    rows = enumerate_case("T1D1", 2, 5)
    assert rows and all(verify_h2(r.set) for r in rows)
    text = io.StringIO()
    w = csv.writer(text)
    w.writerow(CSV_HEADER)
    w.writerows(r.csv_fields() for r in rows)
    parsed = list(csv.reader(io.StringIO(text.getvalue())))
    assert parsed[1] == ["T1D1", "1", "1", "3", "8", "3/5", "1", "2", "7/3", "28/3", "48/5"]


def test_three_interval_set_rejects_infeasible():
    with pytest.raises(DomainError):
        three_interval_set("T1D1", 1, 1, 3, 9)


class TestDecompose:
    def test_five_interval_orders(self):
        cert = decompose(kxy(F(3, 5), F(7, 10)))
        sorted_ivs = list(kxy(F(3, 5), F(7, 10)))
        names = {i: kxy_intervals(F(3, 5), F(7, 10)).index(iv) + 1 for i, iv in enumerate(sorted_ivs)}
        trans = [names[i - 1] for i, _ in cert.translation_order()]
        dil = [names[i - 1] for i, _ in cert.dilation_order()]
        assert trans == [1, 4, 2, 5, 3]
        assert dil == [1, 3, 5, 4, 2]

    def test_three_interval_certificate(self):
        cert = decompose(three_interval_set("T1D1", 1, 1, 3, 8))
        assert cert.to_dict() == {"rho": [1, 2], "k_shifts": [1, 8], "sigma": [1, 2], "r_exponents": [1, 3]}

    def test_single_interval(self):
        cert = decompose(IntervalSet.of((1, 2)))
        assert cert.translation_order() == [(1, 0)] and cert.dilation_order() == [(1, 0)]

    def test_kc_decomposes(self):
        assert decompose(kc(F(3, 4)))

    @pytest.mark.parametrize("S", [
        IntervalSet.of((1, F(3, 2))),
        IntervalSet.of((F(1, 2), 1), (F(3, 2), 2)),
        IntervalSet.of((F(-1, 2), 0), (1, 2)),
        IntervalSet(),
    ])
    def test_failures_report_position(self, S):
        with pytest.raises(NotAWaveletSetError) as info:
            decompose(S)
        assert info.value.position is not None
        assert not verify_h2(S)
