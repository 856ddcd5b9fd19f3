"""Hypothesis strategies producing wavelet sets and controlled perturbations of them."""
from fractions import Fraction as F

from hypothesis import strategies as st

from wavesets.exact_sets import Interval, IntervalSet
from wavesets.h2_enum import enumerate_case
from wavesets.polygonal import build as build_polygonal, search_polygonals
from wavesets.symmetric import (
    build_from_data,
    h2_two_interval,
    ka_data,
    kc,
    kstv_polygonal,
    kstv_valid,
    ksuv_polygonal,
    ksuv_valid,
    kxy,
    n2_polygonal,
    polygonal_data,
)

L2_POLYGONALS = (
    [P for n in (2, 3, 4) for P in search_polygonals("L2", n, 5, 40)]
    + [n2_polygonal(l) for l in range(7)]
    + [kstv_polygonal(s, t, v) for s in range(3) for t in range(1, 3) for v in range(12) if kstv_valid(s, t, v)]
    + [ksuv_polygonal(s, u, v) for s in range(4) for u in range(1, 4) for v in range(1, 200)
       if ksuv_valid(s, u, v)]
)
H2_SETS = (
    [build_polygonal(P) for n in (2, 3, 4) for P in search_polygonals("H2", n, 4, 12)]
    + [h2_two_interval(r, k) for r in range(1, 6) for k in range(1, 2 * (2 ** r - 1))]
    + [row.set for case in ("T1D1", "T2D2", "T2D1", "T1D2") for row in enumerate_case(case, 3, 7)]
)
SHANNON = IntervalSet.of((-1, F(-1, 2)), (F(1, 2), 1))


def fractions_between(lo: F, hi: F, max_den: int = 200):
    """Rationals strictly inside (lo, hi)."""
    return st.integers(2, max_den).flatmap(
        lambda q: st.integers(int(lo * q) - 1, int(hi * q) + 1).map(lambda p: F(p, q))
    ).filter(lambda x: lo < x < hi)


def ka_params():
    return fractions_between(F(1, 3), F(1, 2))


def kc_sets():
    return fractions_between(F(1, 2), F(1)).map(kc)


def kxy_sets():
    def pick(x):
        top = min(F(1), (x + 1) / 2)
        return fractions_between(x, top).map(lambda y: kxy(x, y))
    return fractions_between(F(1, 2), F(1)).flatmap(pick)


def classification_data():
    return st.one_of(
        st.sampled_from(L2_POLYGONALS).map(polygonal_data),
        ka_params().map(ka_data),
    )


def l2_wavelet_sets():
    return st.one_of(
        st.just(SHANNON),
        st.sampled_from(L2_POLYGONALS).map(build_polygonal),
        ka_params().map(lambda a: build_from_data(ka_data(a))),
    )


def h2_wavelet_sets():
    return st.one_of(st.sampled_from(H2_SETS), kc_sets(), kxy_sets())


@st.composite
def split_pieces(draw, S: IntervalSet, max_cuts: int = 3):
    """Cut the intervals of ``S`` at a few rational points; returns a list of pieces."""
    pieces = list(S)
    for _ in range(draw(st.integers(0, max_cuts))):
        i = draw(st.integers(0, len(pieces) - 1))
        iv = pieces[i]
        t = draw(st.integers(1, 15))
        x = iv.lo + (iv.hi - iv.lo) * F(t, 16)
        pieces[i:i + 1] = [Interval(iv.lo, x), Interval(x, iv.hi)]
    return pieces


@st.composite
def perturbed(draw, S: IntervalSet, positive: bool = False):
    """A random modification of ``S`` that preserves one, both or neither tiling condition."""
    pieces = draw(split_pieces(S))
    kind = draw(st.sampled_from(["none", "translate", "dilate", "nudge", "drop"]))
    i = draw(st.integers(0, len(pieces) - 1))
    iv = pieces[i]
    if kind == "translate":
        k = draw(st.integers(-3, 3))
        if not (positive and iv.lo + k <= 0):
            pieces[i] = iv.shift(k)
    elif kind == "dilate":
        j = draw(st.integers(-2, 2))
        pieces[i] = iv.transform(j)
    elif kind == "nudge":
        d = F(draw(st.integers(-3, 3)), draw(st.integers(50, 400)))
        if iv.lo + d < iv.hi and (not positive or iv.lo + d > 0):
            pieces[i] = Interval(iv.lo + d, iv.hi)
    elif kind == "drop" and len(pieces) > 1:
        pieces.pop(i)
    return IntervalSet(pieces)


@st.composite
def unit_subsets(draw, lo=F(0), hi=F(1)):
    """A random finite union of pieces inside ``[lo, hi)``, as disjoint sorted pieces."""
    cuts = sorted(set(draw(st.lists(st.integers(1, 63), min_size=1, max_size=8))))
    pts = [lo] + [lo + (hi - lo) * F(c, 64) for c in cuts] + [hi]
    keep = draw(st.lists(st.booleans(), min_size=len(pts) - 1, max_size=len(pts) - 1))
    pieces = [Interval(a, b) for a, b, k in zip(pts, pts[1:], keep) if k]
    return pieces or [Interval(pts[0], pts[1])]
