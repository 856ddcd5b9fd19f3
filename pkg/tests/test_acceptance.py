"""Acceptance criteria 1-10, one pass/fail line each.

Run under pytest, or directly with ``python tests/test_acceptance.py`` for
just the ten summary lines.
"""
from __future__ import annotations

import json
import sys
import tempfile
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction as F
from io import StringIO
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wavesets.accumulate import KNE, WNE, Constants, PropBra, build_base, check_equivalence, min_abs_endpoint, verify_truncated  # noqa: E402
from wavesets.cli import run  # noqa: E402
from wavesets.errors import MalformedInputError  # noqa: E402
from wavesets.exact_sets import IntervalSet  # noqa: E402
from wavesets.h2_enum import decompose, enumerate_case, feasible_l  # noqa: E402
from wavesets.polygonal import search_msf_minus  # noqa: E402
from wavesets.symmetric import (  # noqa: E402
    FamilyId,
    build_family,
    classify,
    ka_positive,
    ka_scaling_closed_form,
    kc,
    kstv_valid,
    ksuv_closed_form,
    ksuv_stated_range,
    kxy,
    kxy_intervals,
)
from wavesets.tiling import scaling_set, verify_h2, verify_l2, verify_mra  # noqa: E402


def span(a, b):
    return list(range(a, b + 1))


def _compare(failures, label, got, want):
    if got != want:
        failures.append(f"{label}: got {_short(got)}, expected {_short(want)}")


def _short(ls):
    if isinstance(ls, list) and len(ls) > 4 and ls == span(ls[0], ls[-1]):
        return f"{{{ls[0]}..{ls[-1]}}}"
    return "{" + ",".join(map(str, ls)) + "}" if isinstance(ls, list) else repr(ls)


def _table(failures, case, rows):
    for (r, k, s), want in rows.items():
        _compare(failures, f"{case} r={r} k={k} s={s}", feasible_l(case, r, k, s), want)


# ---------------------------------------------------------------------------


def criterion_1():
    f = []
    rows = {(1, 1, 2): []}
    rows.update({(1, 1, 3): [8], (1, 1, 4): span(16, 19), (1, 1, 5): span(32, 40), (1, 1, 6): span(64, 83),
                 (1, 1, 7): span(128, 168), (1, 1, 8): span(256, 339), (1, 1, 9): span(512, 680),
                 (1, 1, 10): span(1024, 1363)})
    rows.update({(2, 1, 3): [3], (2, 1, 4): [6, 7], (2, 1, 5): span(11, 16), (2, 1, 6): span(22, 35),
                 (2, 1, 7): span(43, 71), (2, 2, 3): [5], (2, 2, 4): [11, 12], (2, 2, 5): span(21, 25),
                 (2, 2, 6): span(43, 53), (2, 5, 3): [], (2, 5, 4): [], (2, 5, 5): [52]})
    rows.update({(10, 1, 11): [3], (10, 1, 12): [5, 6, 7], (10, 1, 20): span(1026, 2047),
                 (10, 1, 25): span(32801, 65567), (20, 1, 25): span(33, 63)})
    _table(f, "T1D1", rows)
    # every row of the r = 1 block is an H^2 wavelet set (the enumerator asserts it)
    enumerate_case("T1D1", 1, 10, k=1)
    return f


def criterion_2():
    f = []
    rows = {(1, 0, 2): [], (1, 0, 3): [3], (1, 0, 4): span(6, 9), (1, 0, 5): span(11, 19),
            (1, 0, 6): span(22, 41), (1, 0, 7): span(43, 83),
            (2, 0, 3): [], (2, 0, 4): [3, 4], (2, 0, 5): span(5, 7), (2, 0, 6): span(10, 17),
            (2, 0, 7): span(19, 35),
            (5, 0, 6): [], (5, 0, 7): [3], (5, 0, 8): span(5, 7), (5, 0, 9): span(9, 15),
            (5, 0, 10): span(17, 31)}
    _table(f, "T2D2", rows)
    enumerate_case("T2D2", 2, 7, k=0)
    return f


def criterion_3():
    f = []
    rows = {(1, 0, s): ([5] if s == 3 else [21] if s == 5 else [85] if s == 7 else []) for s in range(2, 9)}
    rows.update({(1, 1, 2): [5], (1, 1, 3): [], (1, 1, 4): [], (1, 1, 5): [],
                 (2, 0, 3): [2], (2, 0, 4): [], (2, 0, 5): [9]})
    _table(f, "T2D1", rows)
    t1d2 = {(1, 1, s): [2 ** s - 2] for s in range(2, 9)}
    t1d2.update({(2, 1, s): ([20] if s == 6 else []) for s in range(3, 7)})
    t1d2.update({(3, 1, s): ([8] if s == 6 else [72] if s == 9 else []) for s in range(4, 10)})
    _table(f, "T1D2", t1d2)
    return f


def _cli(argv, stdin_doc=None):
    out, err = StringIO(), StringIO()
    with tempfile.TemporaryDirectory() as tmp:
        args = list(argv)
        if stdin_doc is not None:
            p = Path(tmp) / "set.json"
            p.write_text(json.dumps(stdin_doc))
            args.append(str(p))
        with redirect_stdout(out), redirect_stderr(err):
            code = run(args)
    return code, out.getvalue(), err.getvalue()


def criterion_4():
    f = []
    explicit = [
        [["3/5", "1"], ["2", "7/3"], ["28/3", "48/5"]],
        [["17/31", "1"], ["2", "15/7"], ["120/7", "544/31"]],
        [["1/3", "3/7"], ["1", "4/3"], ["24/7", "4"]],
    ]
    for ivs in explicit:
        code, _, err = _cli(["verify", "--space", "h2"], {"space": "H2", "intervals": ivs})
        if code != 0:
            f.append(f"{ivs}: exit {code} ({err.strip()})")
    count = 0
    for r in range(1, 6):
        for k in range(1, 2 * (2 ** r - 1)):
            code, doc, err = _cli(["construct", "family", "--id", "H2_2INT", "--params", str(r), str(k)])
            if code == 0:
                code, _, err = _cli(["verify"], json.loads(doc))
            count += 1
            if code != 0:
                f.append(f"2-interval r={r} k={k}: exit {code} ({err.strip()})")
    if count != sum(2 ** (r + 1) - 3 for r in range(1, 6)):
        f.append(f"only {count} members of the 2-interval family checked")
    return f


def criterion_5():
    f = []
    for l in range(7):
        K = build_family(FamilyId("N2", (l,)))
        if not verify_l2(K):
            f.append(f"N2 l={l} fails tiling")
        d = classify(K)
        if d.n != 2 or d.epsilon != (1, 1):
            f.append(f"N2 l={l}: classify gives n={d.n}, eps={d.epsilon}")
    kstv = [(s, t, v) for s in range(3) for t in range(1, 3) for v in range(9) if kstv_valid(s, t, v)]
    if not kstv:
        f.append("no admissible K(s,t,v) triple in range")
    for p in kstv:
        if not verify_l2(build_family(FamilyId("KSTV", p))):
            f.append(f"K(s,t,v)={p} fails tiling")
    bad, total = [], 0
    for s in range(4):
        for u in range(1, 4):
            for v in ksuv_stated_range(s, u):
                total += 1
                try:
                    ok = bool(verify_l2(ksuv_closed_form(s, u, v)))
                except MalformedInputError:
                    ok = False
                if not ok:
                    bad.append((s, u, v))
    if bad:
        f.append(f"K(s,u,v): {len(bad)} of {total} triples in the stated bracket are not wavelet sets, "
                 f"e.g. {bad[:3]}")
    return f


def criterion_6():
    f = []
    tail = F(1, 2 ** 20)
    for a in (F(3, 8), F(7, 16), F(2, 5), F(11, 32), F(49, 100)):
        K = build_family(FamilyId("KA", (a,)))
        if not verify_l2(K):
            f.append(f"K_a a={a} fails tiling")
            continue
        v = verify_mra(K, 20)
        if not v or v.residual > tail:
            f.append(f"K_a a={a}: MRA check fails ({v.reason}, residual {v.residual})")
        Ks, closed = scaling_set(K, 20), ka_scaling_closed_form(a)
        if not Ks.issubset(closed) or closed.measure() - Ks.measure() > tail:
            f.append(f"K_a a={a}: truncated scaling set differs from the closed form beyond 2^-20")
    want = IntervalSet.of((F(3, 8), F(4, 8)), (F(5, 8), F(6, 8)), (F(8, 8), F(10, 8)))
    _compare(f, "K_{3/8}+", ka_positive(F(3, 8)), want)
    return f


def criterion_7():
    f = []
    one = search_msf_minus(1, 8, 64)
    if len(one) != 1:
        f.append(f"n=1: {len(one)} polygonals")
    for n, lb, mb in ((2, 8, 64), (3, 6, 32)):
        found = search_msf_minus(n, lb, mb)
        if found:
            f.append(f"n={n}: {len(found)} polygonals, e.g. {found[0]}")
    return f


def criterion_8():
    f = []
    for c in (F(3, 5), F(3, 4), F(9, 10)):
        if not verify_h2(kc(c)):
            f.append(f"K_c c={c} fails")
    for x, y in ((F(3, 5), F(7, 10)), (F(11, 20), F(3, 5)), (F(7, 10), F(4, 5))):
        S = kxy(x, y)
        if not verify_h2(S):
            f.append(f"K_xy ({x},{y}) fails")
            continue
        cert = decompose(S)
        named = kxy_intervals(x, y)
        label = {i + 1: named.index(iv) + 1 for i, iv in enumerate(S)}
        trans = [label[i] for i, _ in cert.translation_order()]
        dil = [label[i] for i, _ in cert.dilation_order()]
        _compare(f, f"translation order ({x},{y})", trans, [1, 4, 2, 5, 3])
        _compare(f, f"dilation order ({x},{y})", dil, [1, 3, 5, 4, 2])
    return f


def criterion_9():
    f = []
    for n in range(2, 7):
        for kind in ("WN", "KN"):
            if not verify_l2(build_base(kind, n)):
                f.append(f"{kind} n={n} fails")
    tol, depth = F(1, 2 ** 14), 16
    fams = []
    for n in (2, 3):
        C = Constants(n)
        for div in (4, 3):
            fams += [WNE(n, C.a / 2 / div), KNE(n, C.e / 4 / div)]
    for fam in fams:
        name = f"{fam.tag}(n={fam.n}, eps={fam.eps})"
        v = verify_truncated(fam, depth, tolerance=tol)
        if not v:
            f.append(f"{name}: {v.reason}")
        S = fam.materialize(depth)
        for mode, foot in (("translation", fam.translation_footprint(depth)),
                           ("dilation", fam.dilation_footprint(depth))):
            e = check_equivalence(S, fam.reference(), mode, footprint=foot, tolerance=tol)
            if not e:
                f.append(f"{name}: {mode} equivalence fails ({e.reason})")
    pb = PropBra()
    v = verify_truncated(pb, 12)
    if not v:
        f.append(f"PROPBRA depth 12: {v.reason}")
    for fam, top in ((fams[0], depth), (fams[1], depth), (pb, 12)):
        ends = [min_abs_endpoint(fam, d) for d in range(1, top + 1)]
        if not all(b < a for a, b in zip(ends, ends[1:])):
            f.append(f"{fam.tag}: minimum endpoint does not decrease strictly")
    return f


def criterion_10():
    import property_suite as ps

    f = []
    for name in ("test_passing_sets_have_measure_one", "test_classify_inverts_build", "test_decompose_iff_h2",
                 "test_equivalence_relation", "test_transform_round_trip", "test_normalize_idempotent"):
        try:
            getattr(ps, name)()
        except Exception as exc:  # hypothesis re-raises the shrunk counterexample
            f.append(f"{name}: {type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
    return f


CRITERIA = {
    1: ("three-interval T1D1 table", criterion_1),
    2: ("three-interval T2D2 table", criterion_2),
    3: ("three-interval T2D1 and T1D2 spot rows", criterion_3),
    4: ("explicit H2 sets through the CLI", criterion_4),
    5: ("symmetric families N2, K(s,t,v), K(s,u,v)", criterion_5),
    6: ("K_a tiling, MRA and scaling support", criterion_6),
    7: ("MSF(-) search", criterion_7),
    8: ("K_c, K_xy and chain orders", criterion_8),
    9: ("families accumulating at 0", criterion_9),
    10: ("randomized property suites", criterion_10),
}


def evaluate(number):
    title, fn = CRITERIA[number]
    t0 = time.perf_counter()
    failures = fn()
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {number:2d} [{title}]: {status} ({time.perf_counter() - t0:.1f}s)"
    if failures:
        line += f"; {failures[0]}" + (f" (+{len(failures) - 1} more)" if len(failures) > 1 else "")
    return failures, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    failures, line = evaluate(number)
    with capsys.disabled():
        print(f"\n{line}")
    assert not failures, "\n".join(failures)


if __name__ == "__main__":
    results = [evaluate(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(not f for f, _ in results) else 1)
