"""Exact decision procedures for wavelet-set tiling conditions.

A set ``K`` is a wavelet set of L^2(R) exactly when its integer translates
tile the line (condition ``T``) and its dyadic dilates tile the line
(condition ``D``).  For the Hardy space H^2(R) the set must live in the
positive half-line and the dilates only need to tile ``(0, inf)``
(conditions ``T'`` and ``D'``).

Each condition reduces to "the relevant multiplicity profile is identically
1", which :mod:`wavesets.exact_sets` decides exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotAWaveletSetError
from .exact_sets import (
    ONE,
    ZERO,
    IntervalSet,
    MultiplicityProfile,
    dyadic_profile,
    format_rational,
    mod1_profile,
    split_at_zero,
)

T, D, T_H2, D_H2, MRA = "T", "D", "T'", "D'", "MRA"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check, with an exact witness when it fails.

    ``witness`` is the offending region in the fundamental domain (``[0, 1)``
    for translation conditions, ``[1, 2)`` and ``[-2, -1)`` for dilation
    conditions).  ``residual`` is a certified bound on the measure left
    unchecked by a truncated verification, and 0 for exact checks.
    ``details`` holds per-condition sub-verdicts for combined checks.
    """

    passed: bool
    checked: tuple = ()
    witness: Optional[IntervalSet] = None
    residual: Fraction = ZERO
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        out = {
            "passed": self.passed,
            "checked": list(self.checked),
            "residual": format_rational(self.residual),
        }
        if self.witness is not None:
            out["witness"] = self.witness.as_strings()
        if self.reason:
            out["reason"] = self.reason
        if self.details:
            out["details"] = {k: v.to_dict() for k, v in self.details.items()}
        return out


def _describe(profile: MultiplicityProfile, label: str) -> str:
    over = profile.overlap_region()
    gap = profile.gap_region()
    parts = []
    if over:
        parts.append(f"overlap of measure {over.measure()} on {over!r}")
    if gap:
        parts.append(f"gap of measure {gap.measure()} on {gap!r}")
    return f"{label}: " + "; ".join(parts)


def _profile_verdict(profiles, tag: str, label: str) -> Verdict:
    bad = IntervalSet()
    reasons = []
    for p in profiles:
        region = p.region(lambda c: c != 1)
        if region:
            bad = bad | region
            reasons.append(_describe(p, f"{label} {p.domain.value}"))
    if bad:
        return Verdict(False, (tag,), bad, reason="; ".join(reasons))
    return Verdict(True, (tag,))


def _first_witness(*verdicts):
    # fundamental domains differ per condition, so witnesses are not merged
    for v in verdicts:
        if not v:
            return v.witness
    return None


def verify_T(S: IntervalSet) -> Verdict:
    """Integer translates of ``S`` tile the line: mod-1 multiplicity is 1 a.e."""
    return _profile_verdict([mod1_profile(S)], T, "translation")


def verify_D_l2(S: IntervalSet) -> Verdict:
    """Dyadic dilates of ``S`` tile the line: both dyadic profiles are 1 a.e."""
    pos, neg = dyadic_profile(split_at_zero(S))
    return _profile_verdict([pos, neg], D, "dilation")


def verify_l2(S: IntervalSet) -> Verdict:
    """Both L^2 conditions, with the two sub-verdicts under ``details``."""
    vt, vd = verify_T(S), verify_D_l2(S)
    witness = _first_witness(vt, vd)
    reason = "; ".join(v.reason for v in (vt, vd) if v.reason)
    return Verdict(vt.passed and vd.passed, (T, D), witness, reason=reason,
                   details={T: vt, D: vd})


def verify_h2(S: IntervalSet) -> Verdict:
    """H^2 wavelet-set test: ``S`` in ``(0, inf)``, translates tile R, dilates tile R+."""
    negative = S.negative_part()
    if negative:
        vd = Verdict(False, (D_H2,), negative,
                     reason=f"set has negative part {negative!r} of measure {negative.measure()}")
        return Verdict(False, (T_H2, D_H2), negative, reason=vd.reason, details={D_H2: vd})
    vt = _profile_verdict([mod1_profile(S)], T_H2, "translation")
    pos, _ = dyadic_profile(S)
    vd = _profile_verdict([pos], D_H2, "dilation")
    witness = _first_witness(vt, vd)
    reason = "; ".join(v.reason for v in (vt, vd) if v.reason)
    return Verdict(vt.passed and vd.passed, (T_H2, D_H2), witness, reason=reason,
                   details={T_H2: vt, D_H2: vd})


def verify_wavelet(S: IntervalSet, space: str = "L2") -> Verdict:
    """Run the condition pair for ``space`` (``"L2"`` or ``"H2"``)."""
    space = space.upper()
    if space == "L2":
        return verify_l2(S)
    if space == "H2":
        return verify_h2(S)
    raise ValueError(f"unknown space {space!r}; expected 'L2' or 'H2'")


def scaling_set_pieces(S: IntervalSet, depth: int) -> list:
    """Intervals of ``2**-j * S`` for ``1 <= j <= depth``, as a multiset."""
    return [iv.transform(-j) for j in range(1, depth + 1) for iv in S]


def scaling_set(S: IntervalSet, depth: int) -> IntervalSet:
    """Truncation ``union_{1<=j<=depth} 2**-j S`` of the scaling-function support."""
    return IntervalSet(scaling_set_pieces(S, depth))


def verify_mra(S: IntervalSet, depth: int) -> Verdict:
    """Check that the wavelet set ``S`` comes from a multiresolution analysis.

    The scaling support ``K^s = union_{j>=1} 2**-j S`` has measure 1, and the
    wavelet is an MRA wavelet exactly when the integer translates of ``K^s``
    tile the line.  The union is truncated at ``depth``; the omitted dilates
    have total measure ``2**-depth``, reported as ``residual``.  The check
    passes when the truncation has no mod-1 overlap and its mass is at least
    ``1 - 2**-depth``.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if not (verify_T(S) and verify_D_l2(S)):
        raise NotAWaveletSetError("verify_mra needs a wavelet set (T and D must hold)")
    profile = mod1_profile(scaling_set_pieces(S, depth))
    mass = profile.mass()
    residual = ONE - mass
    tail = Fraction(1, 2 ** depth)
    overlap = profile.overlap_region()
    if overlap:
        return Verdict(False, (MRA,), overlap, residual,
                       reason=f"translates of the scaling set overlap on {overlap!r}")
    if residual > tail:
        return Verdict(False, (MRA,), profile.gap_region(), residual,
                       reason=f"uncovered mass {residual} exceeds the tail bound {tail}")
    return Verdict(True, (MRA,), residual=residual)
