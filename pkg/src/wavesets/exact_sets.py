"""Exact rational intervals, finite interval unions and fiber multiplicity profiles.

Every set handled by the package is a finite union of half-open intervals
``[lo, hi)`` with :class:`fractions.Fraction` endpoints.  Half-open semantics
realize "equal almost everywhere": two intervals sharing an endpoint never
overlap, and merging them loses nothing of positive measure.

The two projections everything reduces to are

* :func:`mod1_profile`, which counts, for each ``x`` in ``[0, 1)``, how many
  integer translates ``x + k`` lie in the set, and
* :func:`dyadic_profile`, which counts, for each ``x`` in ``[1, 2)`` (resp.
  ``[-2, -1)``), how many dyadic dilates ``2**j * x`` lie in the set.

Both are computed with one sweep over interval endpoints and returned as a
canonical piecewise-constant :class:`MultiplicityProfile`.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import MalformedInputError, MustSplitError

Rational = Fraction

#: Multiplicity used for fibers covered infinitely often (an interval touching 0).
INFINITE = math.inf

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def as_rational(value) -> Fraction:
    """Coerce ``value`` to an exact :class:`Fraction`.

    Accepts ints, Fractions and strings such as ``"3/8"`` or ``"-2"``.  Floats
    are refused: they would smuggle rounding into exact verdicts.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise MalformedInputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise MalformedInputError(f"not a rational: {value!r}") from None
    raise MalformedInputError(f"expected int, Fraction or 'p/q' string, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """Canonical wire form: ``"p/q"`` in lowest terms, or a plain integer.

    The saturated multiplicity :data:`INFINITE` is written ``"inf"``.
    """
    if value == INFINITE:
        return "inf"
    return str(as_rational(value))


def pow2(j: int) -> Fraction:
    """``2**j`` as an exact Fraction, for any integer ``j``."""
    return Fraction(1 << j) if j >= 0 else Fraction(1, 1 << -j)


def floor_log2(x: Fraction) -> int:
    """Largest integer ``e`` with ``2**e <= x``, for rational ``x > 0``."""
    x = as_rational(x)
    if x <= 0:
        raise ValueError("floor_log2 needs a positive argument")
    n, d = x.numerator, x.denominator
    e = n.bit_length() - d.bit_length()
    if e >= 0:
        if n < d << e:
            e -= 1
    elif n << -e < d:
        e -= 1
    return e


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval ``[lo, hi)`` with ``lo < hi``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo >= hi:
            raise MalformedInputError(f"degenerate or reversed interval [{lo}, {hi})")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x < self.hi

    def negate(self) -> "Interval":
        # -[lo, hi) is (-hi, -lo]; equal a.e. to [-hi, -lo)
        return Interval(-self.hi, -self.lo)

    def transform(self, j: int, t=ZERO) -> "Interval":
        """``2**j * self + t``."""
        f = pow2(j)
        t = as_rational(t)
        return Interval(f * self.lo + t, f * self.hi + t)

    def shift(self, t) -> "Interval":
        t = as_rational(t)
        return Interval(self.lo + t, self.hi + t)

    def scale(self, factor) -> "Interval":
        factor = as_rational(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Interval(factor * self.lo, factor * self.hi)

    def as_strings(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]

    def __repr__(self):
        return f"[{self.lo}, {self.hi})"


IntervalLike = Union[Interval, Sequence]


def _coerce_pair(item) -> tuple[Fraction, Fraction]:
    if isinstance(item, Interval):
        return item.lo, item.hi
    try:
        lo, hi = item
    except (TypeError, ValueError):
        raise MalformedInputError(f"expected a (lo, hi) pair, got {item!r}") from None
    return as_rational(lo), as_rational(hi)


def _normalized(raw: Iterable) -> tuple[Interval, ...]:
    pairs = []
    for item in raw:
        lo, hi = _coerce_pair(item)
        if lo > hi:
            raise MalformedInputError(f"interval with lo > hi: ({lo}, {hi})")
        if lo < hi:
            pairs.append((lo, hi))
    pairs.sort()
    merged: list[list[Fraction]] = []
    for lo, hi in pairs:
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1][1] = hi
        else:
            merged.append([lo, hi])
    return tuple(Interval(lo, hi) for lo, hi in merged)


class IntervalSet:
    """Normalized finite union of disjoint half-open rational intervals.

    Construction normalizes: intervals are sorted, overlapping or adjacent
    ones are merged and empty ones dropped.  Instances are immutable and
    hashable; equality is exact equality of the normalized interval lists.
    """

    __slots__ = ("_intervals", "_los")

    def __init__(self, intervals: Iterable = ()):
        self._intervals = _normalized(intervals)
        self._los = [iv.lo for iv in self._intervals]

    @classmethod
    def of(cls, *pairs) -> "IntervalSet":
        """``IntervalSet.of(("1/2", 1), ("-1", "-1/2"))``."""
        return cls(pairs)

    # container protocol

    def __iter__(self) -> Iterator[Interval]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __getitem__(self, i) -> Interval:
        return self._intervals[i]

    def __bool__(self) -> bool:
        return bool(self._intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        if not self._intervals:
            return "IntervalSet()"
        return "IntervalSet(" + " ∪ ".join(repr(iv) for iv in self._intervals) + ")"

    @property
    def intervals(self) -> tuple[Interval, ...]:
        return self._intervals

    # measure and geometry

    def measure(self) -> Fraction:
        return sum((iv.length for iv in self._intervals), ZERO)

    def endpoints(self) -> list[Fraction]:
        return [p for iv in self._intervals for p in (iv.lo, iv.hi)]

    def contains_point(self, x) -> bool:
        i = bisect_right(self._los, x) - 1
        return i >= 0 and x < self._intervals[i].hi

    def hull(self) -> Interval:
        if not self._intervals:
            raise ValueError("empty set has no hull")
        return Interval(self._intervals[0].lo, self._intervals[-1].hi)

    def min_abs_endpoint(self) -> Fraction:
        """Smallest nonzero ``|endpoint|``; tracks accumulation at the origin."""
        return min(abs(p) for p in self.endpoints() if p != 0)

    def negate(self) -> "IntervalSet":
        return IntervalSet(iv.negate() for iv in self._intervals)

    def transform(self, j: int, t=ZERO) -> "IntervalSet":
        """``2**j * self + t``."""
        return transform(self, j, t)

    def shift(self, t) -> "IntervalSet":
        return IntervalSet(iv.shift(t) for iv in self._intervals)

    def scale(self, factor) -> "IntervalSet":
        return IntervalSet(iv.scale(factor) for iv in self._intervals)

    def is_symmetric(self) -> bool:
        return self == self.negate()

    def positive_part(self) -> "IntervalSet":
        return self & IntervalSet([(ZERO, max(ONE, self._intervals[-1].hi + 1))]) if self else self

    def negative_part(self) -> "IntervalSet":
        return self & IntervalSet([(min(-ONE, self._intervals[0].lo - 1), ZERO)]) if self else self

    # boolean algebra

    def _combine(self, other: "IntervalSet", keep: Callable[[bool, bool], bool]) -> "IntervalSet":
        points = sorted(set(self.endpoints()) | set(other.endpoints()))
        pieces = []
        for x, y in zip(points, points[1:]):
            if keep(self.contains_point(x), other.contains_point(x)):
                pieces.append((x, y))
        return IntervalSet(pieces)

    def __or__(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(self._intervals + other._intervals)

    def __and__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a and b)

    def __sub__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a and not b)

    def __xor__(self, other: "IntervalSet") -> "IntervalSet":
        return self._combine(other, lambda a, b: a != b)

    def issubset(self, other: "IntervalSet") -> bool:
        return not (self - other)

    def isdisjoint(self, other: "IntervalSet") -> bool:
        return not (self & other)

    def as_strings(self) -> list[list[str]]:
        return [iv.as_strings() for iv in self._intervals]


EMPTY = IntervalSet()


def normalize(raw: Iterable) -> IntervalSet:
    """Sort, merge and clean a list of ``(lo, hi)`` pairs.

    Pairs with ``lo == hi`` are dropped; ``lo > hi`` raises
    :class:`MalformedInputError`.
    """
    return IntervalSet(raw)


def transform(S: IntervalSet, j: int, t=ZERO) -> IntervalSet:
    """Return ``2**j * S + t``."""
    return IntervalSet(iv.transform(j, t) for iv in S)


# ---------------------------------------------------------------------------
# multiplicity profiles


class Domain(str, Enum):
    """Fundamental domain a profile lives on."""

    MOD1 = "MOD1"
    DYADIC_POS = "DYADIC_POS"
    DYADIC_NEG = "DYADIC_NEG"

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        return {
            Domain.MOD1: (ZERO, ONE),
            Domain.DYADIC_POS: (ONE, Fraction(2)),
            Domain.DYADIC_NEG: (Fraction(-2), -ONE),
        }[self]


@dataclass(frozen=True)
class MultiplicityProfile:
    """Piecewise-constant fiber count over a fundamental domain.

    ``counts[i]`` is the multiplicity on ``[breakpoints[i], breakpoints[i+1])``.
    The first and last breakpoints are the domain bounds; adjacent pieces
    always carry different counts, so equal profiles compare equal.
    """

    domain: Domain
    breakpoints: tuple
    counts: tuple

    @classmethod
    def from_pieces(cls, domain: Domain, pieces: Iterable[tuple[Fraction, Fraction]],
                    base: int = 0) -> "MultiplicityProfile":
        lo, hi = domain.bounds
        deltas: dict[Fraction, int] = defaultdict(int)
        deltas[lo] += 0
        deltas[hi] += 0
        for a, b in pieces:
            deltas[a] += 1
            deltas[b] -= 1
        points = sorted(deltas)
        running = base
        counts = []
        for p in points[:-1]:
            running += deltas[p]
            counts.append(running)
        return cls._canonical(domain, points, counts)

    @classmethod
    def constant(cls, domain: Domain, value) -> "MultiplicityProfile":
        lo, hi = domain.bounds
        return cls(domain, (lo, hi), (value,))

    @classmethod
    def _canonical(cls, domain, points, counts) -> "MultiplicityProfile":
        bps = [points[0]]
        cts: list = []
        for p, c in zip(points[1:], counts):
            if cts and cts[-1] == c:
                bps[-1] = p
            else:
                cts.append(c)
                bps.append(p)
        return cls(domain, tuple(bps), tuple(cts))

    def pieces(self) -> Iterator[tuple[Fraction, Fraction, object]]:
        for i, c in enumerate(self.counts):
            yield self.breakpoints[i], self.breakpoints[i + 1], c

    def mass(self):
        """``sum(count * length)``; infinite when any fiber is saturated."""
        total = ZERO
        for a, b, c in self.pieces():
            if c == INFINITE:
                return INFINITE
            total += c * (b - a)
        return total

    def count_at(self, x):
        i = bisect_right(self.breakpoints, x) - 1
        if i < 0 or i >= len(self.counts):
            raise ValueError(f"{x} outside {self.domain.value} domain")
        return self.counts[i]

    @property
    def max_count(self):
        return max(self.counts)

    @property
    def min_count(self):
        return min(self.counts)

    def is_identically(self, value) -> bool:
        return self.counts == (value,)

    def region(self, predicate: Callable[[object], bool]) -> IntervalSet:
        return IntervalSet((a, b) for a, b, c in self.pieces() if predicate(c))

    def overlap_region(self) -> IntervalSet:
        return self.region(lambda c: c > 1)

    def gap_region(self) -> IntervalSet:
        return self.region(lambda c: c == 0)

    def support(self) -> IntervalSet:
        return self.region(lambda c: c > 0)

    def differs_from(self, other: "MultiplicityProfile") -> IntervalSet:
        """Region of the domain where the two profiles disagree."""
        if other.domain != self.domain:
            raise ValueError("profiles live on different domains")
        points = sorted(set(self.breakpoints) | set(other.breakpoints))
        return IntervalSet((x, y) for x, y in zip(points, points[1:])
                           if self.count_at(x) != other.count_at(x))


def _as_intervals(S) -> list[Interval]:
    if isinstance(S, IntervalSet):
        return list(S)
    return [iv if isinstance(iv, Interval) else Interval(*_coerce_pair(iv)) for iv in S]


def mod1_profile(S) -> MultiplicityProfile:
    """Count ``#{k : x + k in S}`` for ``x`` in ``[0, 1)``.

    ``S`` may be an :class:`IntervalSet` or any iterable of intervals; in the
    latter case the intervals are counted with multiplicity (a multiset),
    which is how unions known to be disjoint a.e. are projected without
    normalizing them first.
    """
    pieces = []
    base = 0
    for iv in _as_intervals(S):
        lo, hi = iv.lo, iv.hi
        k = math.floor(lo)
        head_end = min(hi, Fraction(k + 1))
        pieces.append((lo - k, head_end - k))
        if head_end == hi:
            continue
        last = math.floor(hi)
        base += last - (k + 1)
        if hi > last:
            pieces.append((ZERO, hi - last))
    return MultiplicityProfile.from_pieces(Domain.MOD1, pieces, base)


def split_at_zero(S) -> list[Interval]:
    """Split every interval that straddles 0 into its negative and positive parts."""
    out = []
    for iv in _as_intervals(S):
        if iv.lo < 0 < iv.hi:
            out.extend([Interval(iv.lo, ZERO), Interval(ZERO, iv.hi)])
        else:
            out.append(iv)
    return out


def _dyadic_pieces(lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Dyadic fibers of ``[lo, hi)`` with ``0 < lo``, folded into ``[1, 2)``."""
    pieces = []
    j = floor_log2(lo)
    while lo < hi:
        top = pow2(j + 1)
        nxt = min(hi, top)
        f = pow2(-j)
        pieces.append((lo * f, nxt * f))
        lo = nxt
        j += 1
    return pieces


def dyadic_profile(S) -> tuple[MultiplicityProfile, MultiplicityProfile]:
    """Dyadic fiber counts of ``S`` on ``[1, 2)`` and on ``[-2, -1)``.

    Intervals straddling 0 raise :class:`MustSplitError` (use
    :func:`split_at_zero` first).  An interval with 0 as an endpoint covers
    every fiber on its side infinitely often and saturates that profile.
    """
    pos, neg = [], []
    pos_saturated = neg_saturated = False
    for iv in _as_intervals(S):
        if iv.lo < 0 < iv.hi:
            raise MustSplitError(f"{iv!r} straddles 0; split it before dyadic projection")
        if iv.lo >= 0:
            if iv.lo == 0:
                pos_saturated = True
            else:
                pos.extend(_dyadic_pieces(iv.lo, iv.hi))
        else:
            if iv.hi == 0:
                neg_saturated = True
            else:
                neg.extend((-b, -a) for a, b in _dyadic_pieces(-iv.hi, -iv.lo))
    if pos_saturated:
        pos_profile = MultiplicityProfile.constant(Domain.DYADIC_POS, INFINITE)
    else:
        pos_profile = MultiplicityProfile.from_pieces(Domain.DYADIC_POS, pos)
    if neg_saturated:
        neg_profile = MultiplicityProfile.constant(Domain.DYADIC_NEG, INFINITE)
    else:
        neg_profile = MultiplicityProfile.from_pieces(Domain.DYADIC_NEG, neg)
    return pos_profile, neg_profile
