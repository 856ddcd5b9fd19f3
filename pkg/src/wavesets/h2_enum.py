"""Three-interval H^2 wavelet sets, and chain certificates for any finite H^2 set.

A three-interval set ``[p1,q1] ∪ [p2,q2] ∪ [p3,q3]`` is an H^2 wavelet set
exactly when its integer shifts chain into ``[p1, p1+1]`` in one of two
orders (T1: shifts ``0, k, l`` in interval order; T2: interval 3 before
interval 2) and its dyadic dilates chain into ``[p1, 2 p1]`` in one of two
orders (D1: exponents ``0, r, s``; D2: interval 3 before interval 2).  Each
of the four combinations is a linear system in the six endpoints whose
solution is affine in ``l``, so for fixed ``(r, k, s)`` the admissible
``l`` form an interval of integers that can be computed exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional

from .errors import DomainError, NotAWaveletSetError
from .exact_sets import Interval, IntervalSet, format_rational
from .tiling import verify_h2


class CaseId(str, Enum):
    T1D1 = "T1D1"
    T2D2 = "T2D2"
    T2D1 = "T2D1"
    T1D2 = "T1D2"

    @classmethod
    def parse(cls, text) -> "CaseId":
        if isinstance(text, CaseId):
            return text
        try:
            return cls(str(text).upper().replace(",", "").replace("(", "").replace(")", ""))
        except ValueError:
            raise DomainError(f"unknown case {text!r}; expected one of t1d1, t2d2, t2d1, t1d2") from None


# minimal k per case; r >= 1 and s > r, l > k everywhere
_K_MIN = {CaseId.T1D1: 1, CaseId.T2D2: 0, CaseId.T2D1: 0, CaseId.T1D2: 1}


def check_domain(case, r: int, k: int, s: int, l: Optional[int] = None) -> CaseId:
    case = CaseId.parse(case)
    if r < 1:
        raise DomainError(f"{case.value}: r >= 1 required (got r={r})")
    if s <= r:
        raise DomainError(f"{case.value}: s > r required (got r={r}, s={s})")
    if k < _K_MIN[case]:
        raise DomainError(f"{case.value}: k >= {_K_MIN[case]} required (got k={k})")
    if l is not None and l <= k:
        raise DomainError(f"{case.value}: l > k required (got k={k}, l={l})")
    return case


def _raw_endpoints(case: CaseId, r: int, k: int, s: int, l) -> tuple:
    F = Fraction
    R, S = 2 ** r, 2 ** s
    if case is CaseId.T1D1:
        d = 2 ** (s - r) - 1
        return (F(l + 1, 2 * S - 1), F(k, R - 1), F(R * k, R - 1),
                F(l - k, d), F(2 ** (s - r) * (l - k), d), F(2 * S * (l + 1), 2 * S - 1))
    if case is CaseId.T2D2:
        d = 2 ** (s - r) - 1
        return (F(k + 1, 2 * R - 1), F(l, S - 1), F(l - k, d),
                F(2 * R * (k + 1), 2 * R - 1), F(S * l, S - 1), F(2 ** (s - r) * (l - k), d))
    if case is CaseId.T2D1:
        A = (S - 1) * k - (R - 1) * l + S
        B = (2 * S - 1) * k - (2 * R - 1) * l + 2 * S
        C = (2 * S - 1) * k - (R - 1) * l + 2 * S
        return (F(A, S), F(B, R), F(B), F(C, S), F(C, R), F(2 * A))
    A = (R - 1) * l - (S - 1) * k + R
    B = (2 * R - 1) * l - (2 * S - 1) * k + 2 * R
    C = (2 * R - 1) * l - (S - 1) * k + 2 * R
    return (F(A, R), F(B, S), F(C, S), F(2 * A), F(B), F(C, R))


def endpoints(case, r: int, k: int, s: int, l: int) -> tuple:
    """``(p1, q1, p2, q2, p3, q3)`` from the solved linear system of ``case``.

    No ordering is implied; see :func:`is_ordered`.
    """
    case = check_domain(case, r, k, s, l)
    return _raw_endpoints(case, r, k, s, l)


def is_ordered(e) -> bool:
    """``0 < p1 < q1 < p2 < q2 < p3 < q3``."""
    return 0 < e[0] and all(e[i] < e[i + 1] for i in range(5))


def stated_inequalities(case, r: int, k: int, s: int, l: int) -> dict:
    """The stated inequality system of ``case``, unpruned, by roman label."""
    case = CaseId.parse(case)
    R, S = 2 ** r, 2 ** s
    if case is CaseId.T1D1:
        return {"i": (R - 1) * l < (2 * S - 1) * k - (R - 1),
                "ii": (R - 1) * l > (S - 1) * k,
                "iii": (2 * R - 1) * l < (2 * S - 1) * k + 2 * (S - R)}
    if case is CaseId.T2D2:
        return {"i": (2 * R - 1) * l > (S - 1) * (k + 1),
                "ii": (2 * R - 1) * l < (2 * S - 1) * k + 2 * (S - R),
                "iii": (R - 1) * l > (S - 1) * k}
    if case is CaseId.T2D1:
        return {"i": (S - 1) * k + S > (R - 1) * l,
                "ii": (S * (2 * S - 1) - R * (S - 1)) * k + (2 ** (2 * s + 1) - 2 ** (r + s))
                > (S * (2 * R - 1) - R * (R - 1)) * l,
                "iii": (S - 1) * (2 * S - 1) * k + (2 ** (2 * s + 1) - 2 * S)
                < (S * (2 * R - 1) - (R - 1)) * l,
                "iv": (2 * R * (S - 1) - (2 * S - 1)) * k + 2 * S * (R - 1)
                > (R - 1) * (2 * R - 1) * l}
    return {"i": (R - 1) * l + R > (S - 1) * k,
            "ii": (S * (R - 1) - R * (2 * R - 1)) * l + (2 ** (r + s) - 2 ** (2 * r + 1))
            < (S * (S - 1) - R * (2 * S - 1)) * k,
            "iii": (2 * S * (R - 1) - (2 * R - 1)) * l + 2 * R * (S - 1)
            > (S - 1) * (2 * S - 1) * k,
            "iv": (R - 1) * (2 * R - 1) * l + 2 * R * (R - 1)
            < (R * (2 * S - 1) - (S - 1)) * k}


# labels of the stated reduced pair, as a function of k
def reduced_labels(case, k: int) -> tuple:
    case = CaseId.parse(case)
    if case is CaseId.T1D1:
        return ("ii", "iii")
    if case is CaseId.T2D2:
        return ("i", "ii") if k == 0 else ("ii", "iii")
    if case is CaseId.T2D1:
        return ("ii", "iii")
    return ("iii", "iv")


def _window(case: CaseId, r: int, k: int, s: int) -> tuple[int, int]:
    """Inclusive integer window for ``l`` from the ordering, solved exactly."""
    e0 = _raw_endpoints(case, r, k, s, 0)
    e1 = _raw_endpoints(case, r, k, s, 1)
    lo, hi = k + 1, None
    # constraints: 0 < p1 and consecutive differences positive, each c0 + c1*l > 0
    diffs = [(e0[0], e1[0] - e0[0])]
    for i in range(5):
        c0 = e0[i + 1] - e0[i]
        c1 = (e1[i + 1] - e1[i]) - c0
        diffs.append((c0, c1))
    for c0, c1 in diffs:
        if c1 > 0:
            lo = max(lo, math.floor(-c0 / c1) + 1)
        elif c1 < 0:
            bound = math.ceil(c0 / -c1) - 1
            hi = bound if hi is None else min(hi, bound)
        elif c0 <= 0:
            return 1, 0
    if hi is None:
        raise ArithmeticError(f"{case.value} ({r},{k},{s}): unbounded l-window")
    return lo, hi


def feasible_l(case, r: int, k: int, s: int) -> list[int]:
    """Every integer ``l > k`` making the endpoints of ``case`` strictly ordered."""
    case = check_domain(case, r, k, s)
    lo, hi = _window(case, r, k, s)
    out = []
    for l in range(lo, hi + 1):
        e = _raw_endpoints(case, r, k, s, l)
        if not is_ordered(e):
            raise AssertionError(f"{case.value} ({r},{k},{s},{l}): window endpoint fails ordering")
        if not all(stated_inequalities(case, r, k, s, l).values()):
            raise AssertionError(f"{case.value} ({r},{k},{s},{l}): ordering holds but the "
                                 f"inequality system does not")
        out.append(l)
    # just outside the window the inequality system must fail too
    for l in (lo - 1, hi + 1):
        if l > k and all(stated_inequalities(case, r, k, s, l).values()):
            raise AssertionError(f"{case.value} ({r},{k},{s},{l}): inequality system holds "
                                 f"outside the ordering window")
    return out


def reduced_pair_discrepancies(case, r: int, k: int, s: int) -> list[int]:
    """Values of ``l`` where the stated reduced pair disagrees with the full ordering."""
    case = check_domain(case, r, k, s)
    feasible = set(feasible_l(case, r, k, s))
    labels = reduced_labels(case, k)
    lo, hi = _window(case, r, k, s)
    # the reduced pair is linear in l as well; scan a generous window around the exact one
    span = max(hi, lo) * 2 + 8
    out = []
    for l in range(k + 1, span):
        ineq = stated_inequalities(case, r, k, s, l)
        if all(ineq[x] for x in labels) != (l in feasible):
            out.append(l)
    return out


def k_range(case, r: int) -> range:
    """Admissible ``k`` for a given ``r``: ``k_min <= k < 2 (2^r - 1)``."""
    case = CaseId.parse(case)
    return range(_K_MIN[case], 2 * (2 ** r - 1))


def three_interval_set(case, r: int, k: int, s: int, l: int) -> IntervalSet:
    e = endpoints(case, r, k, s, l)
    if not is_ordered(e):
        raise DomainError(f"{CaseId.parse(case).value} ({r},{k},{s},{l}) is not feasible")
    return IntervalSet.of((e[0], e[1]), (e[2], e[3]), (e[4], e[5]))


@dataclass(frozen=True)
class H2Row:
    case: CaseId
    r: int
    k: int
    s: int
    l: int
    endpoints: tuple

    @property
    def set(self) -> IntervalSet:
        e = self.endpoints
        return IntervalSet.of((e[0], e[1]), (e[2], e[3]), (e[4], e[5]))

    def csv_fields(self) -> list[str]:
        return [self.case.value, str(self.r), str(self.k), str(self.s), str(self.l),
                *(format_rational(x) for x in self.endpoints)]


CSV_HEADER = ["case", "r", "k", "s", "l", "p1", "q1", "p2", "q2", "p3", "q3"]


def iter_rows(case, r_max: int, s_max: int, k: Optional[int] = None, *,
              check: bool = True) -> Iterator[H2Row]:
    case = CaseId.parse(case)
    if r_max < 1 or s_max < 1:
        raise DomainError("r_max and s_max must be positive")
    for r in range(1, r_max + 1):
        ks = k_range(case, r) if k is None else ([k] if k in k_range(case, r) else [])
        for kk in ks:
            for s in range(r + 1, s_max + 1):
                for l in feasible_l(case, r, kk, s):
                    row = H2Row(case, r, kk, s, l, _raw_endpoints(case, r, kk, s, l))
                    if check:
                        v = verify_h2(row.set)
                        if not v:
                            raise AssertionError(f"row {row.csv_fields()} fails H2 tiling: {v.reason}")
                    yield row


def enumerate_case(case, r_max: int, s_max: int, k: Optional[int] = None, *,
                   check: bool = True) -> list[H2Row]:
    """All feasible rows with ``r <= r_max``, ``s <= s_max`` (and fixed ``k`` if given).

    With ``check`` on, every emitted set is run through the H^2 verifier.
    """
    return list(iter_rows(case, r_max, s_max, k, check=check))


# ---------------------------------------------------------------------------
# chain certificates


@dataclass(frozen=True)
class H2Certificate:
    """Translation and dilation chains of an H^2 wavelet set.

    Intervals are numbered ``0..m`` in increasing order; ``I_0`` opens both
    chains.  ``rho[i]`` is the interval placed ``i+1``-th after ``I_0`` in
    the translation chain, shifted down by ``k_shifts[i]``; ``sigma`` and
    ``r_exponents`` describe the dilation chain the same way.
    """

    rho: tuple
    k_shifts: tuple
    sigma: tuple
    r_exponents: tuple

    def translation_order(self) -> list[tuple[int, int]]:
        """``(interval number, shift)`` pairs counted from 1, ``I_1`` first."""
        return [(1, 0)] + [(i + 1, k) for i, k in zip(self.rho, self.k_shifts)]

    def dilation_order(self) -> list[tuple[int, int]]:
        return [(1, 0)] + [(i + 1, e) for i, e in zip(self.sigma, self.r_exponents)]

    def to_dict(self) -> dict:
        return {"rho": list(self.rho), "k_shifts": list(self.k_shifts),
                "sigma": list(self.sigma), "r_exponents": list(self.r_exponents)}


def _integer(x: Fraction) -> Optional[int]:
    return x.numerator if x.denominator == 1 else None


def _dyadic_exponent(x: Fraction) -> Optional[int]:
    # e >= 0 with x == 2**e
    if x.denominator != 1 or x.numerator < 1:
        return None
    n = x.numerator
    return n.bit_length() - 1 if n & (n - 1) == 0 else None


def _chain(I: list[Interval], step, close, label: str):
    m = len(I) - 1
    cur = I[0].hi
    used, order, amounts = set(), [], []
    for pos in range(1, m + 1):
        hits = []
        for idx in range(1, m + 1):
            if idx in used:
                continue
            amount = step(I[idx].lo, cur)
            if amount is not None:
                hits.append((idx, amount))
        if len(hits) != 1:
            why = "no interval continues" if not hits else f"{len(hits)} intervals continue"
            raise NotAWaveletSetError(f"{label} chain breaks at position {pos}: {why} from {cur}",
                                      position=pos)
        idx, amount = hits[0]
        used.add(idx)
        order.append(idx)
        amounts.append(amount)
        cur = close(I[idx].hi, amount)
    return cur, tuple(order), tuple(amounts)


def decompose(S: IntervalSet) -> H2Certificate:
    """Build both chains greedily from the right endpoint of the first interval.

    Succeeds exactly when ``S`` is an H^2 wavelet set.  Raises
    :class:`NotAWaveletSetError` with the failing chain position otherwise.
    """
    if not S:
        raise NotAWaveletSetError("empty set", position=0)
    if S.negative_part() or S.intervals[0].lo <= 0:
        raise NotAWaveletSetError("set must lie in (0, inf)", position=0)
    I = list(S)
    m = len(I) - 1
    p0 = I[0].lo

    def shift(p, cur):
        k = _integer(p - cur)
        return k if k is not None and k >= 0 else None

    end, rho, ks = _chain(I, shift, lambda q, k: q - k, "translation")
    if end != p0 + 1:
        raise NotAWaveletSetError(f"translation chain ends at {end}, not {p0 + 1}", position=m + 1)
    end, sigma, rs = _chain(I, lambda p, cur: _dyadic_exponent(p / cur),
                           lambda q, e: q / 2 ** e, "dilation")
    if end != 2 * p0:
        raise NotAWaveletSetError(f"dilation chain ends at {end}, not {2 * p0}", position=m + 1)
    return H2Certificate(rho, ks, sigma, rs)
