"""The ten acceptance criteria, each at its stated depth and tolerance.

Every test prints one PASS/FAIL line; the lines are collected again in the
terminal summary so the gate reads as a single block.
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from stanley import analysis, products
from stanley.injection import NON_STRICT, ResidueClassSpec, full_map, injectivity_audit, theorem4_scan
from stanley.partitions import classify_counts, enumerate_partitions, parse_partition
from stanley.products import finite_class_series
from stanley.series import INF


@pytest.fixture
def verdict(request):
    """Call with (criterion number, ok, detail); records the line and asserts ok."""

    def record(k, ok, detail):
        line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        assert ok, line

    return record


def _fresh_caches():
    for fn in (products.stanley_product, products.andrews_p0, products.f_series, products.gollnitz_gordon_product):
        fn.cache_clear()
    products.finite_class_series.cache_clear()


def test_criterion_01_dissection(verdict):
    _fresh_caches()
    t0 = time.perf_counter()
    rep = products.verify_dissection(2000)
    elapsed = time.perf_counter() - t0
    verdict(1, rep.passed and rep.hi == 2000 and elapsed < 60, f"dissection N=2000 exact, {elapsed:.1f}s (limit 60s)")


def test_criterion_02_brute_force_concordance(verdict):
    st = products.stanley_product(60)
    p0 = products.andrews_p0(60)
    bad = []
    for n in range(61):
        a, b = classify_counts(n)
        if a - b != st[n] or a != p0[n]:
            bad.append(n)
    verdict(2, not bad, f"p0-p2 and p0 agree with exhaustive classification for n<=60; mismatches {bad}")


def test_criterion_03_table_one(verdict):
    P = parse_partition
    spec = ResidueClassSpec(8, 3, 3)
    expected = {"19": "17,1^2", "11,5,3": "9,7,1^3", "13,3,3": "15,1^4", "5^2,3^3": "7^2,1^5"}
    domain = {p.parts for p in enumerate_partitions(19, spec.domain_constraint())}
    ok = domain == {P(s).parts for s in expected}
    ok &= all(full_map(P(s), spec)[0] == P(t) for s, t in expected.items())
    a31, a30 = finite_class_series(8, 3, 3, 19)[19], finite_class_series(8, 1, 3, 19)[19]
    ok &= (a31, a30) == (4, 8)
    verdict(3, ok, f"Table 1 rows exact; A_3,1(19)={a31}, A_3,0(19)={a30}")


def test_criterion_04_worked_example(verdict):
    image, trace = full_map(parse_partition("85,53,45,45,43,19,3"), ResidueClassSpec(8, 3, 11))
    stats = (image.nu(1, 8), image.mu(1), image.nu(7, 8), image.mu(7))
    ok = image == parse_partition("81,49,47,41,41,23,7,1,1,1,1") and trace.case_label == 2 and stats == (8, 4, 3, 1)
    verdict(4, ok, f"image {image}, case {trace.case_label}, (nu1,mu1,nu7,mu7)={stats}")


def test_criterion_05_audits(verdict):
    t0 = time.perf_counter()
    problems = []
    for L in (1, 2, 3, 5):
        rep = injectivity_audit(40, ResidueClassSpec(8, 3, L))
        if not rep.passed:
            problems.append(f"(8,3,{L}): {rep.violations[0]}")
        off = {row[0] for row in rep.table if not row[5]}
        if off != set(NON_STRICT):
            problems.append(f"(8,3,{L}) strictness off at {sorted(off)}")
        a_series = finite_class_series(8, 3, L, 40)
        if any(row[2] != a_series[row[0]] for row in rep.table):
            problems.append(f"(8,3,{L}) image count differs from A_L,1")
    for L in range(1, 7):
        rep = injectivity_audit(40, ResidueClassSpec(5, 2, L))
        if not rep.passed:
            problems.append(f"(5,2,{L}): {rep.violations[0]}")
    elapsed = time.perf_counter() - t0
    ok = not problems and elapsed < 120
    verdict(5, ok, f"audits (8,3,L in 1,2,3,5) and (5,2,L<=6), n<=40, {elapsed:.1f}s (limit 120s) {problems}")


def test_criterion_06_nonnegativity(verdict):
    problems = []
    for m, r in ((8, 3), (5, 2), (7, 3)):
        for L in (1, 2, INF):
            rep = theorem4_scan(m, r, L, 500)
            if not rep.passed:
                problems.append(rep.name)
    firsts = {}
    for m, r in ((6, 2), (8, 2), (9, 3)):
        rep = theorem4_scan(m, r, 1, 500)
        if not rep.passed or not rep.findings:
            problems.append(rep.name)
        else:
            firsts[(m, r)] = rep.findings[0][0]
    if firsts.get((6, 2)) != 4:
        problems.append(f"(6,2,1) first negative at {firsts.get((6, 2))}")
    verdict(6, not problems, f"nonnegative to 500 where predicted; first negatives {firsts} {problems}")


def test_criterion_07_bounds(verdict):
    plain = analysis.upper_bound_check(2000)
    sharp = analysis.upper_bound_check(2000, sharp=True)
    induction = analysis.induction_check_eq50(1000)
    grid = analysis.elementary_inequality_check(10.0, 1000)
    ok = plain.passed and sharp.passed and plain.extremal_margin > 1 and sharp.extremal_margin > 1
    ok &= induction.passed and grid.passed
    verdict(
        7,
        ok,
        f"log margins {plain.extremal_margin:.3f}/{sharp.extremal_margin:.3f} to n=2000; "
        f"exact induction to 1000; 1000-point grid on (0,10]",
    )


def test_criterion_08_signs_monotonicity_congruences(verdict):
    reps = [
        analysis.sign_pattern_check(2000),
        analysis.monotonicity_check(1000),
        analysis.congruence_check(2000),
    ]
    failed = [r.name for r in reps if not r.passed]
    verdict(8, not failed, f"sign pattern n<=2000, monotonicity n<=1000, mod 5 to 2000; failed {failed}")


def test_criterion_09_gollnitz_gordon(verdict):
    gg = products.verify_gollnitz_gordon(500, enum_max=100)
    fac = products.verify_gg_factorization(1000)
    verdict(9, gg.passed and fac.passed, "enumerator n<=100, b_k pattern to 500, factorization to 1000")


def test_criterion_10_asymptotics(verdict):
    conv = analysis.ratio_convergence(1000)
    dev = {row[0]: row[2] for row in conv.table}
    mein = analysis.meinardus_compare(1500)
    ratio = {(row[0], row[1]): row[2] for row in mein.table}
    closer = all(abs(ratio[1500, i] - 1) < abs(ratio[150, i] - 1) for i in (0, 1))
    conj = analysis.conjecture_scan(1500)
    ok = dev[1000] < 0.1 and dev[1000] < dev[100] and closer and not conj.findings
    verdict(
        10,
        ok,
        f"|r_1000-(1+sqrt2)|={dev[1000]:.4f} < {dev[100]:.4f}; Meinardus closer at 1500 for i=0,1: {closer}; "
        f"conjecture counterexamples {len(conj.findings)}",
    )
