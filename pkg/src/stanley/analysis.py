"""Bounds, inequalities, asymptotics and the open conjectures, checked numerically.

Exact claims (integer inequalities, signs, congruences) use integer
arithmetic only.  Growth bounds are compared in log space through
:func:`log_int`, whose absolute error is far below the 1e-6 guard used here.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .partitions import p_table
from .products import andrews_p0, f_series, stanley_product
from .report import ScanReport

LOG_GUARD = 1e-6
GRID_RTOL = 1e-12
SILVER = 1 + math.sqrt(2)
_LOG2 = math.log(2)


def log_int(n: int) -> float:
    """Natural log of a positive integer of any size, absolute error well under 1e-9.

    Uses the top 64 bits as a float mantissa plus the exponent times log 2.
    """
    if n <= 0:
        raise ValueError("log of a non-positive integer")
    shift = n.bit_length() - 64
    if shift <= 0:
        return math.log(n)
    # dropping the low bits costs at most 2**-63 relative, i.e. ~1e-19 in the log
    return math.log(n >> shift) + shift * _LOG2


def growth_exponent(n: int) -> float:
    """(pi/2) sqrt(13 n / 3)."""
    return math.pi / 2 * math.sqrt(13 * n / 3)


def c_table(N: int) -> tuple[list[int], list[int]]:
    """(c_{2n})_{n<=N} and (c_{2n+1})_{n<=N} from the two half-series."""
    return list(f_series(0, N).coeffs), list(f_series(1, N).coeffs)


def upper_bound_check(N: int, sharp: bool = False) -> ScanReport:
    """log c_{2n+i} < (pi/2) sqrt(13n/3), optionally with the extra
    log[(pi/2) sqrt(13/12) / sqrt(n)] term, for 1 <= n <= N.

    At n = 0 both sides of the plain bound equal 1, so n = 0 is skipped.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    name = "sharp upper bound" if sharp else "upper bound"
    report = ScanReport(name, 1, N)
    report.notes.append("n=0 excluded: c_0 = c_1 = 1 equals the bound exp(0)")
    evens, odds = c_table(N)
    pre = math.log(math.pi / 2 * math.sqrt(13 / 12))
    for n in range(1, N + 1):
        bound = growth_exponent(n)
        if sharp:
            bound += pre - 0.5 * math.log(n)
        for i, cs in ((0, evens), (1, odds)):
            margin = bound - log_int(cs[n])
            report.observe_margin(margin)
            if margin <= LOG_GUARD:
                report.fail(2 * n + i, f"i={i}, n={n}: log c = {log_int(cs[n]):.9f} vs bound {bound:.9f}")
    return report


def _eq32(x: float) -> tuple[float, float]:
    # 1/(e^x - 1) < 1/x
    return 1 / math.expm1(x), 1 / x


def _ratio(exps, x):
    # sum(e^{k x}) / (e^{8x} - 1), rewritten with e^{-x} to avoid overflow
    den = -math.expm1(-8 * x)
    return sum(math.exp((k - 8) * x) for k in exps) / den


def elementary_inequality_check(X: float, steps: int) -> ScanReport:
    """The three families of elementary exponential inequalities on the grid x = kX/steps.

    1/(e^x-1) < 1/x;  (e^{rx}+e^{(8-r)x})/(e^{8x}-1) < 1/(4x) for r = 2, 3, 4;
    (e^x+e^{7x}+e^{4x}+e^{2x}+e^{6x})/(e^{8x}-1) < 5/(8x).
    A point fails unless lhs < rhs * (1 - 1e-12).
    """
    if X <= 0 or steps < 10:
        raise ValueError("need X > 0 and steps >= 10")
    report = ScanReport("elementary inequalities", 1, steps)
    cases = [("1/(e^x-1) < 1/x", _eq32)]
    for r in (2, 3, 4):
        cases.append((f"r={r}", lambda x, r=r: (_ratio((r, 8 - r), x), 1 / (4 * x))))
    cases.append(("five-term", lambda x: (_ratio((1, 7, 4, 2, 6), x), 5 / (8 * x))))
    for k in range(1, steps + 1):
        x = k * X / steps
        for label, fn in cases:
            lhs, rhs = fn(x)
            rel = (rhs - lhs) / rhs
            report.observe_margin(rel)
            if not lhs < rhs * (1 - GRID_RTOL):
                report.fail(k, f"{label} at x={x!r}: lhs={lhs!r} rhs={rhs!r}")
    return report


def eq32_near_zero(x: float = 1e-6) -> bool:
    lhs, rhs = _eq32(x)
    return lhs < rhs * (1 - GRID_RTOL)


def induction_check_eq50(N: int) -> ScanReport:
    """8(2n+1)(9^n + 4^n) < 20 * 16^n, exactly, for 1 <= n <= N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    report = ScanReport("8(2n+1)(9^n+4^n) < 20*16^n", 1, N)
    p9, p4, p16 = 1, 1, 1
    for n in range(1, N + 1):
        p9 *= 9
        p4 *= 4
        p16 *= 16
        lhs = 8 * (2 * n + 1) * (p9 + p4)
        rhs = 20 * p16
        if not lhs < rhs:
            report.fail(n, f"{lhs} >= {rhs}")
        elif n <= 64:
            # beyond this the ratio is astronomically large; tracking it would just cost time
            report.observe_margin(float(Fraction(rhs, lhs)))
    return report


def monotonicity_check(N: int) -> ScanReport:
    """c_{2(n+1)+i} >= c_{2n+i} for 0 <= n < N, and c_{2n} > c_{2n+1} for 1 <= n <= N."""
    if N < 2:
        raise ValueError("N must be >= 2")
    evens, odds = c_table(N)
    report = ScanReport("monotonicity", 0, N)
    for i, cs in ((0, evens), (1, odds)):
        for n in range(N):
            if cs[n + 1] < cs[n]:
                report.fail(2 * n + i, f"c_{2 * (n + 1) + i} = {cs[n + 1]} < c_{2 * n + i} = {cs[n]}")
    if evens[0] != odds[0]:
        report.fail(0, f"expected c_0 = c_1, got {evens[0]}, {odds[0]}")
    report.notes.append("n=0: c_0 = c_1 = 1, strict even/odd inequality starts at n=1")
    for n in range(1, N + 1):
        if not evens[n] > odds[n]:
            report.fail(2 * n, f"c_{2 * n} = {evens[n]} <= c_{2 * n + 1} = {odds[n]}")
    return report


def sign_pattern_check(N: int) -> ScanReport:
    """(-1)^n (2 p0(2n+i) - p(2n+i)) > 0 and (-1)^n (p0 - p2)(2n+i) > 0 for 2n+i <= N."""
    if N < 4:
        raise ValueError("N must be >= 4")
    p0 = andrews_p0(N)
    p = p_table(N)
    st = stanley_product(N)
    report = ScanReport("sign pattern", 0, N)
    for k in range(N + 1):
        sgn = -1 if (k // 2) % 2 else 1
        if not sgn * (2 * p0[k] - p[k]) > 0:
            report.fail(k, f"2 p0 - p = {2 * p0[k] - p[k]}, expected sign {sgn:+d}")
        if not sgn * st[k] > 0:
            report.fail(k, f"p0 - p2 = {st[k]}, expected sign {sgn:+d}")
        above_half = 2 * p0[k] > p[k]
        if above_half != (k % 4 in (0, 1)):
            report.fail(k, f"p0 > p/2 is {above_half} at n = {k} = {k % 4} mod 4")
    return report


def congruence_check(N: int) -> ScanReport:
    """p0(5n+4) = p(5n+4) = 0 mod 5 for 5n+4 <= N."""
    p0 = andrews_p0(N)
    p = p_table(N)
    report = ScanReport("mod 5 congruences", 4, N)
    for k in range(4, N + 1, 5):
        if p0[k] % 5:
            report.fail(k, f"p0({k}) = {p0[k]} not divisible by 5")
        if p[k] % 5:
            report.fail(k, f"p({k}) = {p[k]} not divisible by 5")
    return report


def ratio_convergence(N: int) -> ScanReport:
    """r_n = c_{2n}/c_{2n+1} against 1 + sqrt(2).

    Table rows are (n, r_n, |r_n - (1+sqrt 2)|).  Asserts the deviation at N
    is below the one at N // 10, and below 0.1 when N >= 1000.
    """
    if N < 10:
        raise ValueError("N must be >= 10")
    evens, odds = c_table(N)
    report = ScanReport("c_2n/c_2n+1 -> 1+sqrt(2)", 1, N)
    report.columns = ("n", "ratio", "deviation")
    dev = {}
    for n in range(1, N + 1):
        ratio = float(Fraction(evens[n], odds[n]))
        dev[n] = abs(ratio - SILVER)
        report.table.append((n, ratio, dev[n]))
    if not dev[N] < dev[N // 10]:
        report.fail(N, f"deviation {dev[N]:.6g} not below deviation {dev[N // 10]:.6g} at n={N // 10}")
    if N >= 1000 and not dev[N] < 0.1:
        report.fail(N, f"deviation {dev[N]:.6g} >= 0.1")
    report.observe_margin(dev[N])
    return report


def meinardus_prefactor(i: int) -> float:
    """sqrt(13/6) / (32 sin((2i+1) pi / 8))."""
    return math.sqrt(13 / 6) / (32 * math.sin((2 * i + 1) * math.pi / 8))


def log_meinardus(n: int, i: int) -> float:
    return math.log(meinardus_prefactor(i)) - math.log(n) + growth_exponent(n)


def meinardus_compare(N: int) -> ScanReport:
    """c_{2n+i} over its Meinardus asymptotic; rows (n, i, ratio).

    Only the trend is asserted: |ratio - 1| at n=N below its value at n=N//10.
    """
    if N < 10:
        raise ValueError("N must be >= 10")
    evens, odds = c_table(N)
    report = ScanReport("Meinardus ratio", 1, N)
    report.columns = ("n", "i", "c/asymptotic")
    ratio = {}
    for n in range(1, N + 1):
        for i, cs in ((0, evens), (1, odds)):
            ratio[n, i] = math.exp(log_int(cs[n]) - log_meinardus(n, i))
            report.table.append((n, i, ratio[n, i]))
    for i in (0, 1):
        near, far = abs(ratio[N, i] - 1), abs(ratio[N // 10, i] - 1)
        if not near < far:
            report.fail(N, f"i={i}: |ratio-1| = {near:.6g} at n={N}, {far:.6g} at n={N // 10}")
    return report


def conjecture_scan(N: int) -> ScanReport:
    """c_{2n} below the i=0 asymptotic for n >= 1, c_{2n+1} above the i=1 asymptotic for n >= 2.

    Counterexamples are recorded as findings, not violations.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    evens, odds = c_table(N)
    report = ScanReport("conjectured two-sided bounds", 1, N)
    for n in range(1, N + 1):
        upper = log_meinardus(n, 0) - log_int(evens[n])
        report.observe_margin(upper)
        if upper <= LOG_GUARD:
            report.findings.append((2 * n, f"c_{2 * n} not below the asymptotic (log margin {upper:.3g})"))
        if n >= 2:
            lower = log_int(odds[n]) - log_meinardus(n, 1)
            report.observe_margin(lower)
            if lower <= LOG_GUARD:
                report.findings.append((2 * n + 1, f"c_{2 * n + 1} not above the asymptotic (log margin {lower:.3g})"))
    return report


def swisher_ratio_check(N: int) -> ScanReport:
    """p0(n)/p(n) -> 1/2.

    Asserts 2 p0(n) - p(n) = (-1)^floor(n/2) c_n exactly for every n <= N, and
    that the largest |p0/p - 1/2| over [N/2, N] is below that over [1, N/2).
    """
    if N < 20:
        raise ValueError("N must be >= 20")
    p0 = andrews_p0(N)
    p = p_table(N)
    evens, odds = c_table(N // 2)
    report = ScanReport("p0(n)/p(n) -> 1/2", 0, N)
    report.columns = ("n", "p0/p", "|p0/p - 1/2|")
    devs = []
    for n in range(N + 1):
        c = (evens, odds)[n % 2][n // 2]
        sgn = -1 if (n // 2) % 2 else 1
        if 2 * p0[n] - p[n] != sgn * c:
            report.fail(n, f"2p0 - p = {2 * p0[n] - p[n]} but (-1)^floor(n/2) c_n = {sgn * c}")
        ratio = Fraction(p0[n], p[n])
        dev = abs(ratio - Fraction(1, 2))
        devs.append(dev)
        report.table.append((n, float(ratio), float(dev)))
    late = max(devs[N // 2 :])
    early = max(devs[1 : N // 2])
    if not late < early:
        report.fail(N, f"max deviation on [N/2, N] = {float(late):.6g} not below {float(early):.6g}")
    report.observe_margin(float(late))
    return report


def hardy_ramanujan_table(N: int, step: int = 1) -> ScanReport:
    """p(n) * n / exp(pi sqrt(2n/3)) next to 1/(4 sqrt 3), for inspection only."""
    p = p_table(N)
    report = ScanReport("Hardy-Ramanujan constant", 1, N)
    report.columns = ("n", "p(n) n / exp(pi sqrt(2n/3))", "1/(4 sqrt 3)")
    target = 1 / (4 * math.sqrt(3))
    for n in range(1, N + 1, step):
        report.table.append((n, math.exp(log_int(p[n]) + math.log(n) - math.pi * math.sqrt(2 * n / 3)), target))
    return report
