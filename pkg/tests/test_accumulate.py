from fractions import Fraction as F

import pytest

from wavesets.accumulate import (
    KNE,
    WNE,
    Constants,
    PropBra,
    build_base,
    build_lazy,
    check_equivalence,
    make_family,
    min_abs_endpoint,
    verify_truncated,
)
from wavesets.errors import DomainError
from wavesets.exact_sets import IntervalSet
from wavesets.tiling import verify_l2


def families():
    out = []
    for n in (2, 3):
        C = Constants(n)
        for div in (4, 3):
            out.append(WNE(n, C.a / 2 / div))
            out.append(KNE(n, C.e / 4 / div))
    return out


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("kind", ["WN", "KN"])
def test_base_sets_are_wavelet_sets(kind, n):
    assert verify_l2(build_base(kind, n))


def test_kn_is_symmetric_and_wn_is_not():
    assert build_base("KN", 3).is_symmetric()
    assert not build_base("WN", 3).is_symmetric()


@pytest.mark.parametrize("fam", families(), ids=lambda f: f"{f.tag}-{f.n}-{f.eps}")
def test_measure_plus_tail_is_one(fam):
    for depth in range(1, 9):
        assert fam.materialize(depth).measure() + fam.tail_measure(depth) == 1


@pytest.mark.parametrize("fam", families(), ids=lambda f: f"{f.tag}-{f.n}-{f.eps}")
def test_truncations_grow(fam):
    for depth in range(1, 8):
        assert fam.materialize(depth).issubset(fam.materialize(depth + 1))
        assert fam.tail_measure(depth + 1) < fam.tail_measure(depth)


@pytest.mark.parametrize("fam", families(), ids=lambda f: f"{f.tag}-{f.n}-{f.eps}")
def test_truncated_verification(fam):
    v = verify_truncated(fam, 10)
    assert v, v.reason
    assert v.residual == fam.tail_measure(10)


@pytest.mark.parametrize("fam", families()[:2], ids=lambda f: f"{f.tag}-{f.n}-{f.eps}")
def test_equivalent_to_base(fam):
    D = 10
    S, ref = fam.materialize(D), fam.reference()
    vt = check_equivalence(S, ref, "translation", footprint=fam.translation_footprint(D))
    vd = check_equivalence(S, ref, "dilation", footprint=fam.dilation_footprint(D))
    assert vt and vd
    assert vt.residual == fam.tail_measure(D)


def test_tolerance_enforced():
    fam = WNE(2, F(1, 24))
    assert not verify_truncated(fam, 4, tolerance=F(1, 2 ** 30))


class _DoubledY0(WNE):
    def materialize(self, depth):
        _, ys = self.generator.levels(1)
        return super().materialize(depth) | IntervalSet([ys[0].shift(5)])


def test_doubled_level_is_a_hard_fail():
    fam = _DoubledY0(2, F(1, 24))
    v = verify_truncated(fam, 8)
    assert not v and "overlap" in v.reason
    assert v.witness


def test_propbra():
    fam = PropBra()
    fam.check_levels(12)
    v = verify_truncated(fam, 12)
    assert v, v.reason
    assert v.residual == 2 * PropBra.J(12).lo
    # unbounded, yet the materialization plus its tail still has measure one
    assert fam.materialize(12).measure() + fam.tail_measure(12) == 1


@pytest.mark.parametrize("fam", [WNE(2, F(1, 24)), KNE(3, F(1, 56)), PropBra()], ids=lambda f: f.tag)
def test_min_endpoint_decreases(fam):
    ends = [min_abs_endpoint(fam, d) for d in range(1, 10)]
    assert all(b < a for a, b in zip(ends, ends[1:]))


def test_domain_errors():
    with pytest.raises(DomainError):
        WNE(2, Constants(2).a / 2)
    with pytest.raises(DomainError):
        KNE(3, 0)
    with pytest.raises(DomainError):
        Constants(1)
    with pytest.raises(DomainError):
        make_family("WNE")
    with pytest.raises(DomainError):
        make_family("XYZ", 2, F(1, 100))


def test_build_lazy_and_to_dict():
    S, tail = build_lazy("KNE", {"n": 2, "eps": "1/40"}, 6)
    assert S.measure() + tail == 1
    d = make_family("KNE", 2, "1/40").to_dict(6)
    assert d["family"] == "KNE" and d["symmetric"] is True
    assert d["generators"][0]["scale_exponent"] == 3


class TestEquivalence:
    def test_translation_only(self):
        A, B = IntervalSet.of((0, 1)), IntervalSet.of((5, 6))
        assert check_equivalence(A, B, "translation")
        assert not check_equivalence(A, B, "dilation")

    def test_dilation_only(self):
        A, B = IntervalSet.of((1, F(3, 2))), IntervalSet.of((4, 6))
        assert check_equivalence(A, B, "dilation")
        assert not check_equivalence(A, B, "translation")

    def test_witness_is_the_disagreement(self):
        v = check_equivalence(IntervalSet.of((0, F(1, 2))), IntervalSet.of((0, F(1, 4))), "translation")
        assert v.witness == IntervalSet.of((F(1, 4), F(1, 2)))
