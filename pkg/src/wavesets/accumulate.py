"""Wavelet sets with 0 as an accumulation point, handled through exact truncations.

The three infinite families here are all built from finitely many fixed
intervals plus geometric sequences of intervals that shrink towards 0:

``WNE`` (n, eps)
    bounded, not symmetric: holes ``X_l`` are cut from ``L`` and their
    dyadic shrinks ``Y_l`` are added near 0.
``KNE`` (n, eps)
    bounded and symmetric: the same mechanism on ``R_2`` and mirrored.
``PROPBRA``
    symmetric and unbounded: two sequences ``I_n`` (growing) and ``J_n``
    (shrinking to 0).

A depth-``D`` materialization is always a *subset* of the infinite set.
For the hole families every hole beyond level ``D`` is replaced by the
convex hull of all remaining holes, so nothing outside the true set is ever
included; the measure left out is known in closed form.  Truncated
verification then demands zero overlap and accepts uncovered fibers only
inside the projection of a certified footprint.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .errors import DomainError, NotAWaveletSetError
from .exact_sets import (
    HALF,
    INFINITE,
    ZERO,
    Interval,
    IntervalSet,
    MultiplicityProfile,
    as_rational,
    dyadic_profile,
    format_rational,
    mod1_profile,
    pow2,
    split_at_zero,
)
from .tiling import D, D_H2, T, T_H2, Verdict


@dataclass(frozen=True)
class Constants:
    """``a_n .. e_n`` shared by the bounded families."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"n >= 2 required (got n={self.n})")

    @property
    def a(self) -> Fraction:
        return Fraction(2 ** (self.n - 2), 2 ** self.n - 1)

    @property
    def b(self) -> Fraction:
        return 2 * self.a

    @property
    def c(self) -> Fraction:
        n = self.n
        return Fraction(2 ** (n - 1) * (2 ** (n - 1) - 1), 2 ** n - 1)

    @property
    def d(self) -> Fraction:
        return Fraction(2 ** (2 * self.n - 2), 2 ** self.n - 1)

    @property
    def e(self) -> Fraction:
        return Fraction(2 ** (self.n - 1) - 1, 2 ** self.n - 1)

    @property
    def shift(self) -> int:
        return 2 ** (self.n - 2)


def _interval(lo, hi) -> IntervalSet:
    return IntervalSet([(lo, hi)]) if lo < hi else IntervalSet()


class BaseId(str, Enum):
    WN = "WN"
    KN = "KN"


def build_base(kind, n: int) -> IntervalSet:
    """The finite wavelet sets ``W_n = L ∪ M ∪ R`` and ``K_n = L_1 ∪ L_2 ∪ R_1 ∪ R_2``."""
    kind = BaseId(str(kind.value if isinstance(kind, BaseId) else kind).upper())
    C = Constants(n)
    if kind is BaseId.WN:
        return _interval(-C.d, -C.c) | _interval(-C.e, -C.a) | _interval(C.a, C.b)
    plus = _interval(C.a, HALF) | _interval(C.shift, C.d)
    return plus | plus.negate()


# ---------------------------------------------------------------------------
# families


@dataclass(frozen=True)
class Generator:
    """``X_0 = seed``, ``Y_l = 2**-(g0 + l) X_l``, ``X_{l+1} = Y_l + shift``."""

    seed: Interval
    scale_exponent: int
    shift: Fraction

    def levels(self, count: int) -> tuple[list[Interval], list[Interval]]:
        xs, ys = [], []
        x = self.seed
        for l in range(count):
            y = x.transform(-(self.scale_exponent + l))
            xs.append(x)
            ys.append(y)
            x = y.shift(self.shift)
        return xs, ys

    def to_dict(self) -> dict:
        return {"seed": self.seed.as_strings(), "scale_exponent": self.scale_exponent,
                "scale_step": 1, "shift": format_rational(self.shift)}


class Family:
    """Interface shared by the lazily generated families."""

    tag = ""

    def materialize(self, depth: int) -> IntervalSet:
        raise NotImplementedError

    def tail_measure(self, depth: int) -> Fraction:
        raise NotImplementedError

    def translation_footprint(self, depth: int) -> IntervalSet:
        raise NotImplementedError

    def dilation_footprint(self, depth: int) -> IntervalSet:
        raise NotImplementedError

    def check_levels(self, depth: int) -> None:
        """Assert the structural facts the construction relies on, up to ``depth``."""

    def reference(self) -> Optional[IntervalSet]:
        """Finite wavelet set the family is equivalent to, if any."""
        return None

    def params(self) -> dict:
        return {}

    def to_dict(self, depth: int) -> dict:
        return {"family": self.tag, "params": self.params(), "depth": depth,
                "tail": format_rational(self.tail_measure(depth))}


def _check_depth(depth: int):
    if depth < 0:
        raise DomainError("depth must be nonnegative")


class _HoleFamily(Family):
    """Holes cut from a parent interval, with shrunk copies placed near 0."""

    symmetric = False
    parent: Interval
    fixed: IntervalSet
    generator: Generator

    def _hull(self, depth: int) -> Interval:
        xs, _ = self.generator.levels(depth + 2)
        nxt = xs[depth + 1]
        anchor = self.generator.shift  # holes converge here as Y_l -> 0
        return Interval(min(nxt.lo, anchor), max(nxt.hi, anchor))

    def _half(self, depth: int) -> IntervalSet:
        _check_depth(depth)
        xs, ys = self.generator.levels(depth + 1)
        holes = IntervalSet(xs) | IntervalSet([self._hull(depth)])
        return (IntervalSet([self.parent]) - holes) | IntervalSet(ys) | self.fixed

    def materialize(self, depth: int) -> IntervalSet:
        half = self._half(depth)
        return half | half.negate() if self.symmetric else half

    def tail_measure(self, depth: int) -> Fraction:
        _check_depth(depth)
        xs, _ = self.generator.levels(depth + 2)
        # left-out parts telescope: |hull| - sum_{l>D}|X_l| + sum_{l>D}|Y_l| = |hull| - |X_{D+1}|
        t = self._hull(depth).length - xs[depth + 1].length
        return 2 * t if self.symmetric else t

    def _mirror(self, S: IntervalSet) -> IntervalSet:
        return S | S.negate() if self.symmetric else S

    def translation_footprint(self, depth: int) -> IntervalSet:
        # Y_l is an integer shift of X_{l+1}, so the omitted part folds onto hull \ X_{D+1}
        xs, _ = self.generator.levels(depth + 2)
        return self._mirror(IntervalSet([self._hull(depth)]) - IntervalSet([xs[depth + 1]]))

    def dilation_footprint(self, depth: int) -> IntervalSet:
        # Y_l is a dyadic dilate of X_l, so the omitted part folds onto the whole hull
        return self._mirror(IntervalSet([self._hull(depth)]))

    def check_levels(self, depth: int) -> None:
        xs, ys = self.generator.levels(depth + 3)
        hull = self._hull(depth)
        for l, x in enumerate(xs):
            if not (self.parent.lo <= x.lo and x.hi <= self.parent.hi):
                raise AssertionError(f"{self.tag}: hole X_{l} = {x!r} is not inside {self.parent!r}")
        for l in range(depth + 1):
            if xs[l].lo < hull.hi and hull.lo < xs[l].hi:
                raise AssertionError(f"{self.tag}: hole X_{l} meets the tail hull {hull!r}")
            for m in range(l):
                if xs[m].lo < xs[l].hi and xs[l].lo < xs[m].hi:
                    raise AssertionError(f"{self.tag}: holes X_{m} and X_{l} overlap")
        for l in (depth + 1, depth + 2):
            if not (hull.lo <= xs[l].lo and xs[l].hi <= hull.hi):
                raise AssertionError(f"{self.tag}: hole X_{l} escapes the tail hull")
        for l in range(depth + 2):
            if not ys[l + 1].length < ys[l].length:
                raise AssertionError(f"{self.tag}: level {l + 1} does not shrink")

    def generators(self) -> list[Generator]:
        return [self.generator]

    def to_dict(self, depth: int) -> dict:
        out = super().to_dict(depth)
        out["base"] = self.fixed.as_strings()
        out["parent"] = self.parent.as_strings()
        out["generators"] = [g.to_dict() for g in self.generators()]
        out["symmetric"] = self.symmetric
        return out


class WNE(_HoleFamily):
    tag = "WNE"

    def __init__(self, n: int, eps):
        C = Constants(n)
        eps = as_rational(eps)
        if not (0 < eps < C.a / 2):
            raise DomainError(f"0 < eps < a_n/2 = {C.a / 2} required (got eps={eps})")
        self.n, self.eps, self.C = n, eps, C
        a = C.a
        self.P1 = Interval(a / 2 + eps / 2 ** n, a / 2 + eps)
        self.P2 = Interval(a + 2 * eps, C.b)
        self.P3 = Interval(C.d, C.d + 2 * eps)
        self.parent = Interval(-C.d, -C.c)
        M = _interval(-C.e, -C.a)
        self.fixed = M | IntervalSet([self.P1, self.P2, self.P3])
        self.generator = Generator(self.P1.shift(-C.shift), n, Fraction(-C.shift))

    def reference(self) -> IntervalSet:
        return build_base(BaseId.WN, self.n)

    def params(self) -> dict:
        return {"n": self.n, "eps": format_rational(self.eps)}


class KNE(_HoleFamily):
    tag = "KNE"
    symmetric = True

    def __init__(self, n: int, eps):
        C = Constants(n)
        eps = as_rational(eps)
        if not (0 < eps < C.e / 4):
            raise DomainError(f"0 < eps < e_n/4 = {C.e / 4} required (got eps={eps})")
        self.n, self.eps, self.C = n, eps, C
        a = C.a
        self.S1 = Interval(a / 2 + eps / 2 ** n, a / 2 + eps)
        self.S2 = Interval(a + 2 * eps, HALF)
        self.S3 = Interval(C.d, C.d + 2 * eps)
        self.parent = Interval(C.shift, C.d)
        self.fixed = IntervalSet([self.S1, self.S2, self.S3])
        self.generator = Generator(self.S1.shift(C.shift), n + 1, Fraction(C.shift))

    def reference(self) -> IntervalSet:
        return build_base(BaseId.KN, self.n)

    def params(self) -> dict:
        return {"n": self.n, "eps": format_rational(self.eps)}


class PropBra(Family):
    """Symmetric set ``±(∪ I_n ∪ ∪ J_n)``; unbounded, accumulating at 0."""

    tag = "PROPBRA"

    @staticmethod
    def I(n: int) -> Interval:
        if n == 0:
            return Interval(Fraction(4, 3), Fraction(3, 2))
        return Interval(Fraction(3 * 2 ** (3 * n + 2), 2 ** (2 * n + 3) - 1),
                        Fraction(3 * 2 ** (3 * n + 1), 2 ** (2 * n + 2) - 1))

    @staticmethod
    def J(n: int) -> Interval:
        if n == 0:
            return Interval(Fraction(1, 5), Fraction(1, 3))
        return Interval(Fraction(3 * 2 ** n, 2 ** (2 * n + 4) - 1),
                        Fraction(3 * 2 ** (n - 1), 2 ** (2 * n + 3) - 1))

    @staticmethod
    def translate_shift(n: int) -> int:
        return 1 if n == 0 else 3 * 2 ** (n - 1)

    @staticmethod
    def dilate_exponents(n: int) -> tuple[int, int]:
        """``(lambda_n, mu_n)``: ``H_n = 2**-lambda_n I_n`` and ``L_n = 2**-mu_n J_n``."""
        return (0 if n == 0 else n + 1), -(n + 2)

    def materialize(self, depth: int) -> IntervalSet:
        _check_depth(depth)
        plus = IntervalSet([self.I(n) for n in range(depth + 1)] + [self.J(n) for n in range(depth + 1)])
        return plus | plus.negate()

    def tail_measure(self, depth: int) -> Fraction:
        # omitted A_n, J_n (n > depth) tile [0, J_depth.lo), on each side
        _check_depth(depth)
        return 2 * self.J(depth).lo

    def translation_footprint(self, depth: int) -> IntervalSet:
        side = IntervalSet([(ZERO, self.J(depth).lo)])
        return side | side.negate()

    def dilation_footprint(self, depth: int) -> IntervalSet:
        L = self.J(depth).transform(depth + 2)
        side = IntervalSet([(Fraction(3, 4), L.lo)])
        return side | side.negate()

    def check_levels(self, depth: int) -> None:
        """Both adjacency chains, for every materialized level and one beyond."""
        A = [self.I(n).shift(-self.translate_shift(n)) for n in range(depth + 2)]
        H, L = [], []
        for n in range(depth + 2):
            lam, mu = self.dilate_exponents(n)
            H.append(self.I(n).transform(-lam))
            L.append(self.J(n).transform(-mu))
        if A[0].hi != HALF or H[0].hi != Fraction(3, 2):
            raise AssertionError("PROPBRA: chains do not end at 1/2 and 3/2")
        for n in range(depth + 1):
            J = self.J(n)
            if not (A[n + 1].hi == J.lo and J.hi == A[n].lo):
                raise AssertionError(f"PROPBRA: translation chain A_{n + 1} -> J_{n} -> A_{n} broken")
            if not (H[n + 1].hi == L[n].lo and L[n].hi == H[n].lo):
                raise AssertionError(f"PROPBRA: dilation chain H_{n + 1} -> L_{n} -> H_{n} broken")


FAMILIES = {"WNE": WNE, "KNE": KNE, "PROPBRA": PropBra}


def make_family(tag: str, n: Optional[int] = None, eps=None) -> Family:
    tag = str(tag).upper()
    if tag == "PROPBRA":
        return PropBra()
    if tag not in FAMILIES:
        raise DomainError(f"unknown family {tag!r}; expected wne, kne or propbra")
    if n is None or eps is None:
        raise DomainError(f"{tag} needs n and eps")
    return FAMILIES[tag](n, eps)


def build_lazy(tag: str, params: dict, depth: int) -> tuple[IntervalSet, Fraction]:
    """Materialized set and exact omitted measure at ``depth``."""
    fam = make_family(tag, **params)
    return fam.materialize(depth), fam.tail_measure(depth)


# ---------------------------------------------------------------------------
# equivalence and truncated verification


class Mode(str, Enum):
    TRANSLATION = "TRANSLATION"
    DILATION = "DILATION"


def _profile_gap_mass(p: MultiplicityProfile, q: MultiplicityProfile):
    """``sum |p - q| * length`` over the common refinement."""
    points = sorted(set(p.breakpoints) | set(q.breakpoints))
    total = ZERO
    for x, y in zip(points, points[1:]):
        cp, cq = p.count_at(x), q.count_at(x)
        if cp != cq:
            if INFINITE in (cp, cq):
                return INFINITE
            total += abs(cp - cq) * (y - x)
    return total


def _profiles(S: IntervalSet, mode: Mode) -> list[MultiplicityProfile]:
    if mode is Mode.TRANSLATION:
        return [mod1_profile(S)]
    return list(dyadic_profile(split_at_zero(S)))


def _footprint_support(F: Optional[IntervalSet], mode: Mode) -> list[IntervalSet]:
    if not F:
        return [IntervalSet()] * (1 if mode is Mode.TRANSLATION else 2)
    return [p.support() for p in _profiles(F, mode)]


def check_equivalence(A: IntervalSet, B: IntervalSet, mode="TRANSLATION",
                      footprint: Optional[IntervalSet] = None, tolerance=None) -> Verdict:
    """Decide translation or dilation equivalence of two bounded sets.

    Two finite interval unions are equivalent exactly when their fiber
    multiplicity profiles agree almost everywhere.  With a ``footprint``,
    disagreement is tolerated inside its projection, and ``residual``
    reports the total multiplicity mismatch; ``tolerance`` caps it.
    """
    mode = Mode(str(mode.value if isinstance(mode, Mode) else mode).upper())
    tag = T if mode is Mode.TRANSLATION else D
    pa, pb = _profiles(A, mode), _profiles(B, mode)
    allowed = _footprint_support(footprint, mode)
    witness = IntervalSet()
    residual = ZERO
    stray = IntervalSet()
    for p, q, ok in zip(pa, pb, allowed):
        diff = p.differs_from(q)
        witness = witness | diff
        stray = stray | (diff - ok)
        residual += _profile_gap_mass(p, q)
    if stray:
        return Verdict(False, (tag,), stray, residual,
                       reason=f"{mode.value.lower()} profiles differ on {stray!r}")
    if tolerance is not None and residual > tolerance:
        return Verdict(False, (tag,), witness, residual,
                       reason=f"profile mismatch {residual} exceeds tolerance {tolerance}")
    return Verdict(True, (tag,), residual=residual)


def _truncated_condition(S: IntervalSet, mode: Mode, footprint: IntervalSet, tail, tag: str,
                         positive_only: bool = False) -> Verdict:
    # mod-1 folding preserves measure, so there the uncovered part must equal the tail;
    # dyadic folding rescales pieces, so only containment in the footprint is required
    profiles = _profiles(S, mode)
    allowed = _footprint_support(footprint, mode)
    if positive_only:
        profiles, allowed = profiles[:1], allowed[:1]
    overlap, stray, deficit = IntervalSet(), IntervalSet(), ZERO
    for p, ok in zip(profiles, allowed):
        overlap = overlap | p.overlap_region()
        gap = p.gap_region()
        stray = stray | (gap - ok)
        deficit += gap.measure()
    if overlap:
        return Verdict(False, (tag,), overlap, tail, reason=f"overlap on {overlap!r}")
    if stray:
        return Verdict(False, (tag,), stray, tail,
                       reason=f"uncovered region {stray!r} lies outside the tail footprint")
    if mode is Mode.TRANSLATION and deficit != tail:
        return Verdict(False, (tag,), None, tail,
                       reason=f"uncovered measure {deficit} differs from the certified tail {tail}")
    return Verdict(True, (tag,), residual=tail)


def verify_truncated(family, depth: int, space: str = "L2", tolerance=None) -> Verdict:
    """Tiling check of a depth-``depth`` materialization against its certified tail.

    ``family`` may also be a plain :class:`IntervalSet` (tail 0).  Overlap
    always fails; uncovered fibers must lie in the projected footprint and
    total exactly the tail measure.
    """
    if depth < 1:
        raise DomainError("depth must be >= 1")
    if isinstance(family, IntervalSet):
        S, tail, ft, fd = family, ZERO, IntervalSet(), IntervalSet()
    else:
        family.check_levels(depth)
        S, tail = family.materialize(depth), family.tail_measure(depth)
        ft, fd = family.translation_footprint(depth), family.dilation_footprint(depth)
    space = space.upper()
    if space == "H2":
        if S.negative_part():
            return Verdict(False, (T_H2, D_H2), S.negative_part(), tail, reason="set has a negative part")
        vt = _truncated_condition(S, Mode.TRANSLATION, ft, tail, T_H2)
        vd = _truncated_condition(S, Mode.DILATION, fd, tail, D_H2, positive_only=True)
        tags = (T_H2, D_H2)
    elif space == "L2":
        vt = _truncated_condition(S, Mode.TRANSLATION, ft, tail, T)
        vd = _truncated_condition(S, Mode.DILATION, fd, tail, D)
        tags = (T, D)
    else:
        raise ValueError(f"unknown space {space!r}")
    passed = vt.passed and vd.passed
    reason = "; ".join(v.reason for v in (vt, vd) if v.reason)
    witness = next((v.witness for v in (vt, vd) if not v), None)
    if passed and tolerance is not None and tail > as_rational(tolerance):
        passed = False
        reason = f"tail {tail} exceeds tolerance {tolerance}"
    return Verdict(passed, tags, witness, tail, reason, details={tags[0]: vt, tags[1]: vd})


def min_abs_endpoint(family: Family, depth: int) -> Fraction:
    """Smallest nonzero ``|endpoint|`` of the materialization (the approach to 0)."""
    return family.materialize(depth).min_abs_endpoint()
