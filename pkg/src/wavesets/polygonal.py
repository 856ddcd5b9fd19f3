"""Polygonals with vertices in the dyadic lattice and the wavelet sets they generate.

A lattice vertex ``P[lam, m]`` is the plane point ``(2**-lam, 2**-lam * m)``.
The negated slopes of consecutive edges of a vertex list partition a unit
(or half-unit) range of residues mod 1, and the vertex heights ``m`` place
each residue block on the line; edge adjacency in the plane is exactly the
dyadic adjacency of the resulting intervals.

Three flavors are supported:

``L2``
    symmetric L^2 wavelet sets; ``lam_1 = 0``, ``4 m_1 = 2**-lam_n (2 m_n + 1)``
    and ``0 = a_0 < a_1 < ... < a_n = 1/2``.
``H2``
    H^2 wavelet sets; ``lam_1 = 0``, ``m_1 = 0``, an auxiliary vertex
    ``P[lam_n + 1, m_n + 1]`` closes the polygon, ``0 < a_0 < 1`` and
    ``a_0 < ... < a_n = a_0 + 1``.
``MINUS``
    the all-reflected variant; ``lam_1 = 0``, ``2**lam_n (2 m_1 + 1) = m_n + 1``
    and ``1/2 = b_0 < ... < b_n = 1``.  Only the Shannon set arises.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from .errors import DegenerateSlopeError, MalformedInputError, ValidationError
from .exact_sets import HALF, ONE, ZERO, IntervalSet, pow2
from .tiling import Verdict


class Flavor(str, Enum):
    L2 = "L2"
    H2 = "H2"
    MINUS = "MINUS"


@dataclass(frozen=True, order=True)
class LatticeVertex:
    lam: int
    m: int

    @property
    def point(self) -> tuple[Fraction, Fraction]:
        x = pow2(-self.lam)
        return x, x * self.m

    def __repr__(self):
        return f"P[{self.lam},{self.m}]"


@dataclass(frozen=True)
class Polygonal:
    vertices: tuple
    flavor: Flavor = Flavor.L2

    def __post_init__(self):
        verts = tuple(v if isinstance(v, LatticeVertex) else LatticeVertex(*v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "flavor", Flavor(self.flavor))

    @classmethod
    def of(cls, flavor, *pairs) -> "Polygonal":
        """``Polygonal.of("L2", (0, 3), (-4, 0), (-2, 1))``; pairs are ``(lam, m)``."""
        return cls(tuple(LatticeVertex(lam, m) for lam, m in pairs), Flavor(flavor))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> list[int]:
        return [v.m for v in self.vertices]

    @property
    def lam(self) -> list[int]:
        return [v.lam for v in self.vertices]

    def to_dict(self) -> dict:
        return {"flavor": self.flavor.value,
                "vertices": [{"lambda": v.lam, "m": v.m} for v in self.vertices]}

    @classmethod
    def from_dict(cls, data: dict) -> "Polygonal":
        try:
            flavor = Flavor(str(data["flavor"]).upper())
            verts = tuple(LatticeVertex(int(v["lambda"]), int(v["m"])) for v in data["vertices"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad polygonal document: {exc}") from None
        return cls(verts, flavor)


def negative_slope(p: LatticeVertex, q: LatticeVertex) -> Fraction:
    """Negated slope of the segment ``p q`` in the plane."""
    (x1, y1), (x2, y2) = p.point, q.point
    if x1 == x2:
        raise DegenerateSlopeError(f"{p!r} and {q!r} share the abscissa {x1}")
    return -(y1 - y2) / (x1 - x2)


def closing_vertex(P: Polygonal) -> LatticeVertex:
    """Auxiliary vertex ``P[lam_n + 1, m_n + 1]`` of an H^2 polygonal."""
    last = P.vertices[-1]
    return LatticeVertex(last.lam + 1, last.m + 1)


def slopes(P: Polygonal) -> list[Fraction]:
    """The residue breakpoints ``a_0, ..., a_n`` (``b_0, ..., b_n`` for MINUS)."""
    v = P.vertices
    if not v:
        raise MalformedInputError("polygonal without vertices")
    inner = [negative_slope(v[j], v[j + 1]) for j in range(len(v) - 1)]
    if P.flavor is Flavor.L2:
        return [ZERO, *inner, HALF]
    if P.flavor is Flavor.MINUS:
        return [HALF, *inner, ONE]
    a0 = negative_slope(v[0], closing_vertex(P))
    return [a0, *inner, a0 + 1]


def _strictly_increasing(seq) -> Optional[int]:
    for i in range(len(seq) - 1):
        if not seq[i] < seq[i + 1]:
            return i
    return None


def _fail(tag: str, reason: str) -> Verdict:
    return Verdict(False, (tag,), reason=reason)


def validate(P: Polygonal) -> Verdict:
    """Check every defining condition of ``P``'s flavor; the reason names the first violated one."""
    v = P.vertices
    tag = f"{P.flavor.value}-polygonal"
    if not v:
        return _fail(tag, "no vertices")
    if any(x.m < 0 for x in v):
        return _fail(tag, "vertex heights m must be nonnegative")
    if v[0].lam != 0:
        return _fail(tag, "first vertex must have lambda = 0")
    first, last = v[0], v[-1]
    if P.flavor is Flavor.L2:
        if 4 * first.m != pow2(-last.lam) * (2 * last.m + 1):
            return _fail(tag, "closing condition 4 m_1 = 2^-lambda_n (2 m_n + 1) fails")
    elif P.flavor is Flavor.MINUS:
        if pow2(last.lam) * (2 * first.m + 1) != last.m + 1:
            return _fail(tag, "closing condition 2^lambda_n (2 m_1 + 1) = m_n + 1 fails")
    else:
        if first.m != 0:
            return _fail(tag, "first vertex must have m = 0")
        for j in range(len(v) - 1):
            if v[j].m == v[j + 1].m:
                return _fail(tag, f"consecutive heights m_{j + 1} = m_{j + 2} coincide")
    try:
        a = slopes(P)
    except DegenerateSlopeError as exc:
        return _fail(tag, f"degenerate slope: {exc}")
    if P.flavor is Flavor.H2 and not (0 < a[0] < 1):
        return _fail(tag, f"0 < a_0 < 1 fails (a_0 = {a[0]})")
    i = _strictly_increasing(a)
    if i is not None:
        name = "b" if P.flavor is Flavor.MINUS else "a"
        return _fail(tag, f"slope ordering fails: {name}_{i} = {a[i]} >= {name}_{i + 1} = {a[i + 1]}")
    return Verdict(True, (tag,))


def positive_intervals(P: Polygonal) -> list[tuple[Fraction, Fraction]]:
    """``[a_{j-1}, a_j] + m_j`` for each vertex, without validation."""
    a = slopes(P)
    return [(a[j] + x.m, a[j + 1] + x.m) for j, x in enumerate(P.vertices)]


def build(P: Polygonal) -> IntervalSet:
    """Wavelet set of a valid polygonal.

    L2 and MINUS polygonals give the symmetric set ``K+ ∪ -K+`` with ``2n``
    intervals; H2 polygonals give ``n`` positive intervals.
    """
    verdict = validate(P)
    if not verdict:
        raise ValidationError(verdict.reason, item=verdict.checked[0])
    pieces = positive_intervals(P)
    positive = IntervalSet(pieces)
    K = positive if P.flavor is Flavor.H2 else positive | positive.negate()
    expected = P.n if P.flavor is Flavor.H2 else 2 * P.n
    if len(K) != expected:
        raise ValidationError(f"expected {expected} disjoint intervals, got {len(K)}", item="count")
    return K


# ---------------------------------------------------------------------------
# bounded search


def _range_bounds(flavor: Flavor) -> tuple[Fraction, Fraction]:
    # open range every inner slope must fall in
    return {Flavor.L2: (ZERO, HALF), Flavor.MINUS: (HALF, ONE), Flavor.H2: (ZERO, Fraction(2))}[flavor]


def _closing_last(flavor: Flavor, first: LatticeVertex, lambda_bound: int, m_bound: int):
    """Last vertices compatible with the closing condition for ``first``."""
    if flavor is Flavor.L2:
        # 4 m_1 = 2^-lam_n (2 m_n + 1): m_1 = 2^s (2t + 1) gives lam_n = -s - 2, m_n = t
        m1 = first.m
        if m1 == 0:
            return []
        s = (m1 & -m1).bit_length() - 1
        t = (m1 >> s) // 2
        lam = -s - 2
        if abs(lam) <= lambda_bound and t <= m_bound:
            return [LatticeVertex(lam, t)]
        return []
    if flavor is Flavor.MINUS:
        out = []
        for lam in range(0, lambda_bound + 1):
            mn = (1 << lam) * (2 * first.m + 1) - 1
            if mn <= m_bound:
                out.append(LatticeVertex(lam, mn))
        return out
    return [LatticeVertex(lam, m) for lam in range(-lambda_bound, lambda_bound + 1)
            for m in range(m_bound + 1)]


def iter_polygonals(flavor, n: int, lambda_bound: int, m_bound: int) -> Iterator[Polygonal]:
    """Yield every valid polygonal of ``flavor`` with ``n`` vertices inside the bounds.

    Bounds apply to every vertex: ``|lam_j| <= lambda_bound`` and
    ``0 <= m_j <= m_bound``.  Partial vertex lists are pruned as soon as
    their inner slopes stop increasing or leave the admissible range.
    """
    flavor = Flavor(flavor)
    if n < 1 or lambda_bound < 0 or m_bound < 0:
        raise ValueError("n must be >= 1 and bounds nonnegative")
    lo, hi = _range_bounds(flavor)
    firsts = [LatticeVertex(0, 0)] if flavor is Flavor.H2 else [LatticeVertex(0, m) for m in range(m_bound + 1)]
    middle = [LatticeVertex(lam, m) for lam in range(-lambda_bound, lambda_bound + 1)
              for m in range(m_bound + 1)]

    def slope_ok(prev_slope, p, q):
        if p.lam == q.lam:
            return None
        s = negative_slope(p, q)
        if prev_slope < s < hi:
            return s
        return None

    def extend(verts, prev_slope, last_choices):
        k = len(verts)
        if k == n - 1:
            for q in last_choices:
                if slope_ok(prev_slope, verts[-1], q) is not None:
                    P = Polygonal(tuple(verts) + (q,), flavor)
                    if validate(P):
                        yield P
            return
        for q in middle:
            s = slope_ok(prev_slope, verts[-1], q)
            if s is not None:
                yield from extend(verts + [q], s, last_choices)

    for first in firsts:
        if n == 1:
            P = Polygonal((first,), flavor)
            if validate(P):
                yield P
            continue
        last_choices = _closing_last(flavor, first, lambda_bound, m_bound)
        if last_choices:
            yield from extend([first], lo, last_choices)


def search_polygonals(flavor, n: int, lambda_bound: int, m_bound: int) -> list[Polygonal]:
    """All valid polygonals of ``flavor`` with ``n`` vertices inside the bounds."""
    return list(iter_polygonals(flavor, n, lambda_bound, m_bound))


def search_msf_minus(n: int, lambda_bound: int, m_bound: int) -> list[Polygonal]:
    """Exhaustive bounded search for MINUS polygonals with ``n`` vertices.

    This is finite evidence only: for ``n = 1`` the single result is the
    Shannon polygonal ``P[0, 0]``; for ``n >= 2`` the search comes back
    empty within any bounds.
    """
    return search_polygonals(Flavor.MINUS, n, lambda_bound, m_bound)
