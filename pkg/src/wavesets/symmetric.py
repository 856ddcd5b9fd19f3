"""Classification data for symmetric L^2 wavelet sets, and the named parametric families.

A symmetric set ``K = K+ ∪ -K+`` with ``K+ = I_1 ∪ ... ∪ I_n`` is a wavelet
set exactly when there are data ``(n, eps, tau, a, m, lam)`` with

* ``I_j = eps_j [a_{j-1}, a_j] + m_j`` and ``0 = a_0 < ... < a_n = 1/2``;
* the dilates ``H_{tau(j)} = 2**-lam_j I_j`` (``j < n``) together with
  ``H_n = I_n`` form a chain ``H_1, ..., H_n`` of abutting intervals whose
  union is ``[alpha, 2 alpha]``;
* ``eps_j = eps_{j+1}`` forces ``m_j != m_{j+1}`` (this makes the data unique).

:func:`classify` recovers the unique data from a set, :func:`build_from_data`
goes the other way.  ``lam_n`` does not enter the chain; canonical data
store ``lam_n = 0`` and ``tau`` maps a construction index to its position
in the chain.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DomainError, MalformedInputError, NotClassifiableError, ValidationError
from .exact_sets import HALF, ONE, ZERO, Interval, IntervalSet, as_rational, floor_log2, pow2
from .polygonal import Polygonal, build as build_polygonal
from .tiling import scaling_set


@dataclass(frozen=True)
class ClassificationData:
    n: int
    epsilon: tuple
    tau: tuple
    a: tuple
    m: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "epsilon", tuple(int(e) for e in self.epsilon))
        object.__setattr__(self, "tau", tuple(int(t) for t in self.tau))
        object.__setattr__(self, "a", tuple(as_rational(x) for x in self.a))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))

    def intervals(self) -> list[Interval]:
        """``I_1, ..., I_n`` in construction order (no validation)."""
        out = []
        for j in range(self.n):
            lo, hi = self.a[j], self.a[j + 1]
            if self.epsilon[j] == 1:
                out.append(Interval(lo + self.m[j], hi + self.m[j]))
            else:
                out.append(Interval(self.m[j] - hi, self.m[j] - lo))
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "epsilon": list(self.epsilon), "tau": list(self.tau),
                "a": [str(x) for x in self.a], "m": list(self.m), "lambda": list(self.lam)}

    @classmethod
    def from_dict(cls, d: dict) -> "ClassificationData":
        try:
            return cls(int(d["n"]), d["epsilon"], d.get("tau", []), d["a"], d["m"], d["lambda"])
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad classification document: {exc}") from None


def _chain_ok(H: Sequence[Interval]) -> bool:
    if 2 * H[0].lo != H[-1].hi:
        return False
    return all(H[k].hi == H[k + 1].lo for k in range(len(H) - 1))


def validate_data(d: ClassificationData) -> None:
    """Raise :class:`ValidationError` whose ``item`` is ``"shape"``, ``"a"``, ``"b"`` or ``"c"``."""
    n = d.n
    if n < 1 or len(d.epsilon) != n or len(d.m) != n or len(d.lam) != n or len(d.a) != n + 1:
        raise ValidationError("lengths must be n (epsilon, m, lambda) and n+1 (a)", item="shape")
    if any(e not in (1, -1) for e in d.epsilon) or any(x < 0 for x in d.m):
        raise ValidationError("epsilon entries must be +-1 and m nonnegative", item="shape")
    if d.a[0] != 0 or d.a[-1] != HALF or any(d.a[i] >= d.a[i + 1] for i in range(n)):
        raise ValidationError("a must satisfy 0 = a_0 < a_1 < ... < a_n = 1/2", item="a")
    for j in range(n - 1):
        if d.epsilon[j] == d.epsilon[j + 1] and d.m[j] == d.m[j + 1]:
            raise ValidationError(f"eps_{j + 1} = eps_{j + 2} but m_{j + 1} = m_{j + 2}", item="c")
    if sorted(d.tau) != list(range(1, n)):
        raise ValidationError("tau must be a permutation of 1..n-1", item="b")
    if d.lam[-1] != 0:
        raise ValidationError("canonical data have lambda_n = 0", item="b")
    I = d.intervals()
    if any(iv.lo < 0 for iv in I):
        raise ValidationError("an interval I_j leaves the positive half-line", item="a")
    H = [None] * n
    H[-1] = I[-1]
    for j in range(n - 1):
        H[d.tau[j] - 1] = I[j].transform(-d.lam[j])
    if not _chain_ok(H):
        raise ValidationError("dilates H_1..H_n do not form an adjacent chain with 2 alpha_1 = beta_n",
                              item="b")


def build_from_data(d: ClassificationData) -> IntervalSet:
    """The symmetric set ``±(I_1 ∪ ... ∪ I_n)`` of valid data."""
    validate_data(d)
    positive = IntervalSet(d.intervals())
    K = positive | positive.negate()
    if len(K) != 2 * d.n:
        raise ValidationError(f"expected {2 * d.n} disjoint intervals, got {len(K)}", item="c")
    return K


def _reduce(iv: Interval) -> tuple[int, int, Interval]:
    """``(eps, m, J)`` with ``eps (iv - m) = J`` inside ``[0, 1/2]``."""
    base = math.floor(iv.lo)
    if iv.hi <= base + HALF:
        return 1, base, Interval(iv.lo - base, iv.hi - base)
    if iv.lo >= base + HALF and iv.hi <= base + 1:
        return -1, base + 1, Interval(base + 1 - iv.hi, base + 1 - iv.lo)
    raise NotClassifiableError(f"interval {iv!r} does not fold into [0, 1/2] mod 1")


def classify(S: IntervalSet) -> ClassificationData:
    """Recover the canonical classification data of a symmetric wavelet set."""
    if not S.is_symmetric():
        raise NotClassifiableError("set is not symmetric about 0")
    positive = list(S.positive_part())
    if not positive or positive[0].lo <= 0:
        raise NotClassifiableError("positive part must be a nonempty union of intervals away from 0")
    folded = sorted((_reduce(iv) + (iv,) for iv in positive), key=lambda t: t[2].lo)
    a = [ZERO]
    for _, _, J, _ in folded:
        if J.lo != a[-1]:
            raise NotClassifiableError(f"folded intervals leave a gap or overlap at {a[-1]}")
        a.append(J.hi)
    if a[-1] != HALF:
        raise NotClassifiableError("folded intervals do not reach 1/2")
    n = len(folded)
    I = [t[3] for t in folded]
    top = I[-1].hi
    alpha = top / 2
    lam = []
    for iv in I:
        # the unique dyadic power placing the left endpoint in [alpha, 2 alpha)
        lam.append(floor_log2(iv.lo / alpha))
    if lam[-1] != 0:
        raise NotClassifiableError("I_n does not start the dilation window")
    H = [iv.transform(-l) for iv, l in zip(I, lam)]
    order = sorted(range(n), key=lambda j: H[j].lo)
    if order[-1] != n - 1 or not _chain_ok([H[j] for j in order]):
        raise NotClassifiableError("dyadic dilates of K+ do not chain into [alpha, 2 alpha]")
    position = {j: pos + 1 for pos, j in enumerate(order)}
    tau = tuple(position[j] for j in range(n - 1))
    data = ClassificationData(n, tuple(t[0] for t in folded), tau, tuple(a),
                              tuple(t[1] for t in folded), tuple(lam))
    validate_data(data)
    return data


def polygonal_data(P: Polygonal) -> ClassificationData:
    """Classification data of an L2 polygonal (all signs +1, identity chain)."""
    from .polygonal import slopes, validate

    verdict = validate(P)
    if not verdict or P.flavor.value != "L2":
        raise ValidationError(verdict.reason or "not an L2 polygonal", item="a")
    lam_n = P.vertices[-1].lam
    n = P.n
    return ClassificationData(n, (1,) * n, tuple(range(1, n)), tuple(slopes(P)),
                              tuple(P.m), tuple(l - lam_n for l in P.lam))


# ---------------------------------------------------------------------------
# named families


class FamilyTag(str, Enum):
    N2 = "N2"
    KSTV = "KSTV"
    KSUV = "KSUV"
    KA = "KA"
    H2_2INT = "H2_2INT"
    H2_4INT = "H2_4INT"
    H2_5INT = "H2_5INT"


SPACE = {FamilyTag.N2: "L2", FamilyTag.KSTV: "L2", FamilyTag.KSUV: "L2", FamilyTag.KA: "L2",
         FamilyTag.H2_2INT: "H2", FamilyTag.H2_4INT: "H2", FamilyTag.H2_5INT: "H2"}

ARITY = {FamilyTag.N2: 1, FamilyTag.KSTV: 3, FamilyTag.KSUV: 3, FamilyTag.KA: 1,
         FamilyTag.H2_2INT: 2, FamilyTag.H2_4INT: 1, FamilyTag.H2_5INT: 2}

_INTEGER_FAMILIES = {FamilyTag.N2, FamilyTag.KSTV, FamilyTag.KSUV, FamilyTag.H2_2INT}


@dataclass(frozen=True)
class FamilyId:
    tag: FamilyTag
    params: tuple = field(default=())

    def __post_init__(self):
        tag = FamilyTag(str(self.tag).upper() if not isinstance(self.tag, FamilyTag) else self.tag)
        object.__setattr__(self, "tag", tag)
        params = tuple(as_rational(p) for p in self.params)
        if len(params) != ARITY[tag]:
            raise DomainError(f"{tag.value} takes {ARITY[tag]} parameter(s), got {len(params)}")
        if tag in _INTEGER_FAMILIES:
            if any(p.denominator != 1 for p in params):
                raise DomainError(f"{tag.value} parameters must be integers")
            params = tuple(int(p) for p in params)
        object.__setattr__(self, "params", params)

    @property
    def space(self) -> str:
        return SPACE[self.tag]

    def to_dict(self) -> dict:
        return {"tag": self.tag.value, "params": [str(p) for p in self.params]}


def _require(cond: bool, inequality: str):
    if not cond:
        raise DomainError(f"parameter constraint violated: {inequality}")


def n2_polygonal(l: int) -> Polygonal:
    _require(l >= 0, "l >= 0")
    return Polygonal.of("L2", (0, 2 ** l), (-l - 2, 0))


def n2_closed_form(l: int) -> IntervalSet:
    _require(l >= 0, "l >= 0")
    den = 2 ** (l + 2) - 1
    plus = IntervalSet.of((2 ** l, Fraction(2 ** (2 * l + 2), den)), (Fraction(2 ** l, den), HALF))
    return plus | plus.negate()


def kstv_valid(s: int, t: int, v: int) -> bool:
    return s >= 0 and v >= 0 and t >= 1 and 2 ** v > (2 * t + 1) * 2 ** (s + 2)


def kstv_polygonal(s: int, t: int, v: int) -> Polygonal:
    _require(s >= 0 and v >= 0, "s, v >= 0")
    _require(t >= 1, "t >= 1")
    _require(2 ** v > (2 * t + 1) * 2 ** (s + 2), "2^v > (2t+1) 2^(s+2)")
    return Polygonal.of("L2", (0, 2 ** s * (2 * t + 1)), (-v, 0), (-s - 2, t))


def kstv_closed_form(s: int, t: int, v: int) -> IntervalSet:
    kstv_polygonal(s, t, v)
    q = 2 * t + 1
    plus = IntervalSet.of(
        (2 ** s * q, Fraction(2 ** (s + v) * q, 2 ** v - 1)),
        (Fraction(2 ** s * q, 2 ** v - 1), Fraction(2 ** (s + 2) * t, 2 ** v - 2 ** (s + 2))),
        (Fraction(2 ** v * t, 2 ** v - 2 ** (s + 2)), Fraction(q, 2)),
    )
    return plus | plus.negate()


def ksuv_valid(s: int, u: int, v: int) -> bool:
    """Exact admissibility of ``(s, u, v)``: the slopes increase and stay below 1/2.

    The condition is ``2^(s+u) < v < 2^s (2^(s+u+2) - 1) / (2^(s+2) - 1)``.
    """
    if s < 0 or u < 1 or v < 1:
        return False
    return 2 ** (s + u) < v and v * (2 ** (s + 2) - 1) < 2 ** s * (2 ** (s + u + 2) - 1)


def ksuv_stated_range(s: int, u: int) -> range:
    """Integers ``v`` with ``2^(s+u) < v < (2^(s+u) - 1) 2^s / (2^s - 1)``.

    This is the looser stated bracket; it is not sufficient for a wavelet
    set (for instance ``(1, 1, 5)`` lies inside it).  At ``s = 0`` the upper
    end is unbounded and is capped at ``2^(u+1)``, past which the last slope
    exceeds 1/2 for every ``v``.
    """
    lo = 2 ** (s + u) + 1
    if s == 0:
        return range(lo, 2 ** (u + 1))
    num, den = (2 ** (s + u) - 1) * 2 ** s, 2 ** s - 1
    hi = -(-num // den)  # strict upper bound
    return range(lo, hi)


def ksuv_polygonal(s: int, u: int, v: int) -> Polygonal:
    _require(s >= 0 and u >= 1 and v >= 1, "s >= 0, u > 0, v > 0")
    _require(ksuv_valid(s, u, v), "2^(s+u) < v < 2^s (2^(s+u+2) - 1) / (2^(s+2) - 1)")
    return Polygonal.of("L2", (0, 2 ** s), (u, v), (-s - 2, 0))


def ksuv_closed_form(s: int, u: int, v: int) -> IntervalSet:
    """Literal three-interval formula, with no admissibility check.

    Raises :class:`MalformedInputError` when an interval comes out reversed.
    """
    e = 2 ** (s + u + 2) - 1
    plus = IntervalSet([
        Interval(2 ** s, Fraction(v - 2 ** s, 2 ** u - 1)),
        Interval(Fraction(2 ** u * v - 2 ** (s + u), 2 ** u - 1), Fraction(v * 2 ** (s + u + 2), e)),
        Interval(Fraction(v, e), HALF),
    ])
    return plus | plus.negate()


def ka_check(a: Fraction) -> Fraction:
    a = as_rational(a)
    _require(Fraction(1, 3) < a < HALF, "1/3 < a < 1/2")
    return a


def ka_positive(a) -> IntervalSet:
    a = ka_check(a)
    return IntervalSet.of((a, HALF), (1 - a, 2 * a), (1, 2 * (1 - a)))


def ka_data(a) -> ClassificationData:
    a = ka_check(a)
    return ClassificationData(3, (1, -1, 1), (1, 2), (ZERO, 1 - 2 * a, a, HALF), (1, 1, 0), (2, 1, 0))


def ka_scaling_closed_form(a) -> IntervalSet:
    """Support ``[a-1, -1/2] ∪ [-a, a] ∪ [1/2, 1-a]`` of the scaling function of ``K_a``."""
    a = ka_check(a)
    return IntervalSet.of((a - 1, -HALF), (-a, a), (HALF, 1 - a))


def h2_two_interval(r: int, k: int) -> IntervalSet:
    _require(r >= 1, "r >= 1")
    _require(1 <= k < 2 * (2 ** r - 1), "1 <= k < 2(2^r - 1)")
    d1, d2 = 2 ** (r + 1) - 1, 2 ** r - 1
    return IntervalSet.of((Fraction(k + 1, d1), Fraction(k, d2)),
                          (Fraction(2 ** r * k, d2), Fraction(2 ** (r + 1) * (k + 1), d1)))


def h2_two_interval_polygonal(r: int, k: int) -> Polygonal:
    return Polygonal.of("H2", (0, 0), (r, k))


def kc(c) -> IntervalSet:
    c = as_rational(c)
    _require(HALF < c < ONE, "1/2 < c < 1")
    return IntervalSet.of((1, 2 * c), (2 * c + 2, c + 3), (c, (c + 1) / 2), ((c + 3) / 2, 2))


def kc_intervals(c) -> list[Interval]:
    c = as_rational(c)
    kc(c)
    return [Interval(1, 2 * c), Interval(2 * c + 2, c + 3), Interval(c, (c + 1) / 2), Interval((c + 3) / 2, 2)]


def kxy_intervals(x, y) -> list[Interval]:
    """``I_1, ..., I_5`` of the five-interval family, in their defining order."""
    x, y = as_rational(x), as_rational(y)
    _require(HALF < x < y < ONE, "1/2 < x < y < 1")
    _require(x + 1 > 2 * y, "x + 1 > 2y")
    return [Interval(x, y), Interval(1, 2 * x), Interval(2 * y, x + 1), Interval(y + 1, 2),
            Interval(2 * x + 2, 2 * y + 2)]


def kxy(x, y) -> IntervalSet:
    return IntervalSet(kxy_intervals(x, y))


def build_family(f: FamilyId) -> IntervalSet:
    """Closed-form set of a named family; raises :class:`DomainError` off-domain."""
    p = f.params
    if f.tag is FamilyTag.N2:
        return build_polygonal(n2_polygonal(*p))
    if f.tag is FamilyTag.KSTV:
        return build_polygonal(kstv_polygonal(*p))
    if f.tag is FamilyTag.KSUV:
        return build_polygonal(ksuv_polygonal(*p))
    if f.tag is FamilyTag.KA:
        plus = ka_positive(*p)
        return plus | plus.negate()
    if f.tag is FamilyTag.H2_2INT:
        return h2_two_interval(*p)
    if f.tag is FamilyTag.H2_4INT:
        return kc(*p)
    return kxy(*p)


def ka_scaling_residual(a, depth: int) -> Fraction:
    """Measure of the closed-form scaling support not reached by ``depth`` dilates.

    Raises if the truncation sticks out of the closed form.
    """
    K = build_family(FamilyId(FamilyTag.KA, (a,)))
    truncated = scaling_set(K, depth)
    closed = ka_scaling_closed_form(a)
    if not truncated.issubset(closed):
        raise ValidationError("truncated scaling set is not contained in the closed form", item="MRA")
    return closed.measure() - truncated.measure()
