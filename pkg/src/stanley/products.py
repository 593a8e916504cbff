"""Named generating functions and the identity verifiers built on them.

Every builder expands the product exactly as displayed (numerator and
denominator q-Pochhammer symbols), never an algebraically simplified form, so
the verifiers below test the identities themselves.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

from .partitions import gg_count
from .report import ScanReport
from .series import (
    INF,
    TruncatedSeries,
    dissect,
    from_coeffs,
    is_infinite,
    mul,
    qproduct,
    substitute_signed,
)

MISMATCH_CAP = 10


def P(r: int, m: int, sign: int = 1, L=INF):
    """Factor spec for (sign*q**r; q**m)_L."""
    return (sign, r, m, L)


def E(k: int):
    """Factor spec for E(q**k) = (q**k; q**k)_inf."""
    return P(k, k)


@lru_cache(maxsize=256)
def stanley_product(N: int) -> TruncatedSeries:
    """(-q;q^2)_inf / (q^4,-q^2,-q^2;q^4)_inf; coefficient of q^n is p0(n) - p2(n)."""
    return qproduct(N, num=[P(1, 2, -1)], den=[P(4, 4), P(2, 4, -1), P(2, 4, -1)])


@lru_cache(maxsize=256)
def andrews_p0(N: int) -> TruncatedSeries:
    """E(q^2)^2 E(q^16)^5 / (E(q) E(q^4)^5 E(q^32)^2); coefficient of q^n is p0(n)."""
    return qproduct(
        N,
        num=[E(2)] * 2 + [E(16)] * 5,
        den=[E(1)] + [E(4)] * 5 + [E(32)] * 2,
    )


@lru_cache(maxsize=256)
def partition_series(N: int) -> TruncatedSeries:
    """1/(q;q)_inf."""
    return qproduct(N, den=[E(1)])


def _check_i(i):
    if i not in (0, 1):
        raise ValueError(f"i must be 0 or 1, got {i}")


@lru_cache(maxsize=256)
def f_series(i: int, N: int) -> TruncatedSeries:
    """F_i(q) = 1 / (E(q) (q^{1+2i},q^2,q^4,q^6,q^{7-2i};q^8)_inf); coefficient n is c_{2n+i}."""
    _check_i(i)
    return qproduct(N, den=[E(1), P(1 + 2 * i, 8), P(2, 8), P(4, 8), P(6, 8), P(7 - 2 * i, 8)])


@lru_cache(maxsize=256)
def gollnitz_gordon_product(i: int, N: int) -> TruncatedSeries:
    """G_i(q) = 1 / (q^{1+2i},q^4,q^{7-2i};q^8)_inf."""
    _check_i(i)
    return qproduct(N, den=[P(1 + 2 * i, 8), P(4, 8), P(7 - 2 * i, 8)])


def _check_class(m, r, L):
    if not 0 < r < m:
        raise ValueError(f"residue must satisfy 0 < r < m, got m={m}, r={r}")
    if not is_infinite(L) and L < 1:
        raise ValueError(f"L must be a positive integer or infinite, got {L}")


@lru_cache(maxsize=1024)
def finite_class_series(m: int, r: int, L, N: int) -> TruncatedSeries:
    """1/(q^r, q^{m-r}; q^m)_L: partitions into parts = +-r mod m, largest part <= L*m - min(r, m-r)."""
    _check_class(m, r, L)
    return qproduct(N, den=[P(r, m, 1, L), P(m - r, m, 1, L)])


def difference_series(m: int, r: int, L, N: int) -> TruncatedSeries:
    return finite_class_series(m, 1, L, N) - finite_class_series(m, r, L, N)


def jtp_sum(s: int, t: int, sign: int, N: int) -> TruncatedSeries:
    """sum over all integers j of sign**j * q**(s*j*j + t*j), truncated at N."""
    if s < 1:
        raise ValueError("quadratic coefficient must be >= 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = [0] * (N + 1)
    bound = 1 + math.isqrt(N // s) + 1 + abs(t)
    for j in range(-bound, bound + 1):
        e = s * j * j + t * j
        if e < 0:
            raise ValueError(f"exponent {e} at j={j} is negative; s={s}, t={t} gives a Laurent series")
        if e <= N:
            c[e] += sign ** (j % 2)
    return TruncatedSeries(tuple(c))


def jtp_product(s: int, t: int, sign: int, N: int) -> TruncatedSeries:
    """Product side of the triple product identity with q -> q^s, z -> sign*q^t:
    (q^{2s}, -sign q^{s+t}, -sign q^{s-t}; q^{2s})_inf."""
    if not abs(t) < s:
        raise ValueError(f"need |t| < s for a power-series product, got s={s}, t={t}")
    return qproduct(N, num=[P(2 * s, 2 * s), P(s + t, 2 * s, -sign), P(s - t, 2 * s, -sign)])


# --- verifiers -------------------------------------------------------------


def compare_series(name: str, lhs: TruncatedSeries, rhs: TruncatedSeries) -> ScanReport:
    """Coefficientwise equality up to the common truncation; first MISMATCH_CAP mismatches listed."""
    N = min(lhs.order, rhs.order)
    report = ScanReport(name, 0, N)
    for k in range(N + 1):
        if lhs[k] != rhs[k]:
            report.fail(k, f"lhs={lhs[k]} rhs={rhs[k]}")
            if len(report.violations) >= MISMATCH_CAP:
                report.notes.append("mismatch list capped")
                break
    return report


def dissection_rhs(N: int) -> TruncatedSeries:
    """F_0(-q^2) + q F_1(-q^2) truncated at N."""
    f = [substitute_signed(f_series(i, max((N - i) // 2, 0))) for i in (0, 1)]
    return from_coeffs((f[k % 2][k // 2] for k in range(N + 1)), N)


def verify_dissection(N: int, stanley: TruncatedSeries | None = None) -> ScanReport:
    """Check the even/odd dissection of the Stanley product coefficientwise.

    ``stanley`` may be supplied to test a modified left side (fault injection).
    """
    lhs = stanley_product(N) if stanley is None else stanley
    N = lhs.order
    report = ScanReport("dissection", 0, N)
    for i in (0, 1):
        if i > N:
            continue
        even_odd = dissect(lhs, 2, i)
        target = substitute_signed(f_series(i, even_odd.order))
        for n in range(even_odd.order + 1):
            if even_odd[n] != target[n]:
                report.fail(2 * n + i, f"stanley={even_odd[n]} (-1)^n F_{i}[{n}]={target[n]}")
    report.violations.sort()
    if len(report.violations) > MISMATCH_CAP:
        del report.violations[MISMATCH_CAP:]
        report.notes.append("mismatch list capped")
    return report


JTP_CASES = ((1, 0), (2, 1), (8, 2), (8, -6))


def verify_jtp(N: int) -> list[ScanReport]:
    out = []
    for s, t in JTP_CASES:
        for sign in (1, -1):
            out.append(compare_series(f"jtp({s},{t},{sign:+d})", jtp_sum(s, t, sign, N), jtp_product(s, t, sign, N)))
    return out


def eq21_series(i: int, N: int) -> TruncatedSeries:
    """1 / (E(-q) (-q^{1+2i},q^2,q^4,q^6,-q^{7-2i};q^8)_inf), with E(-q) = (-q,q^2;q^2)_inf."""
    _check_i(i)
    return qproduct(
        N, den=[P(1, 2, -1), P(2, 2), P(1 + 2 * i, 8, -1), P(2, 8), P(4, 8), P(6, 8), P(7 - 2 * i, 8, -1)]
    )


def derivation_identities(N: int) -> list[ScanReport]:
    """The rewriting chain behind the dissection theorem, each side built independently."""
    q = lambda *factors, den=(): qproduct(N, num=list(factors), den=list(den))  # noqa: E731
    shift = lambda s, k: s.shift(k)  # noqa: E731
    checks = [
        ("E(q)=(q,q^2;q^2)", q(E(1)), q(P(1, 2), P(2, 2))),
        ("E(-q)=(-q,q^2;q^2)", substitute_signed(q(E(1))), q(P(1, 2, -1), P(2, 2))),
        ("(q^4;q^4)=(q^4,q^8,q^12,q^16;q^16)", q(E(4)), q(P(4, 16), P(8, 16), P(12, 16), P(16, 16))),
        (
            "(-q^2,-q^6,-q^10,-q^14;q^16)=(-q^2;q^4)",
            q(P(2, 16, -1), P(6, 16, -1), P(10, 16, -1), P(14, 16, -1)),
            q(P(2, 4, -1)),
        ),
        ("(-q,-q^3;q^4)=(-q;q^2)", q(P(1, 4, -1), P(3, 4, -1)), q(P(1, 2, -1))),
    ]
    # first rewrite of the dissection right side
    lhs10 = stanley_product(N)
    braces = q(den=[P(2, 16, -1), P(4, 16), P(8, 16), P(12, 16), P(14, 16, -1)]) + shift(
        q(den=[P(6, 16, -1), P(4, 16), P(8, 16), P(12, 16), P(10, 16, -1)]), 1
    )
    checks.append(("rhs rewrite, line 1", lhs10, mul(q(den=[P(2, 4, -1), P(4, 4)]), braces)))
    braces2 = q(den=[P(2, 16, -1), P(14, 16, -1)]) + shift(q(den=[P(6, 16, -1), P(10, 16, -1)]), 1)
    checks.append(("rhs rewrite, line 2", lhs10, mul(q(E(16), den=[P(2, 4, -1), P(4, 4), P(4, 4)]), braces2)))
    # triple product chain
    den2 = [P(2, 4, -1), P(4, 4)] * 2
    tri16 = q(P(16, 16), P(6, 16, -1), P(10, 16, -1)) + shift(q(P(16, 16), P(2, 16, -1), P(14, 16, -1)), 1)
    theta = jtp_sum(8, 2, 1, N) + shift(jtp_sum(8, -6, 1, N), 1)
    checks += [
        ("(q^16,-q^6,-q^10;q^16)+q(q^16,-q^2,-q^14;q^16)=(q^4,-q,-q^3;q^4)", tri16, q(P(4, 4), P(1, 4, -1), P(3, 4, -1))),
        ("sum q^(8j^2+2j) + q sum q^(8j^2-6j) = sum q^(2j^2+j)", theta, jtp_sum(2, 1, 1, N)),
        ("sum q^(2j^2+j) = (q^4,-q,-q^3;q^4)", jtp_sum(2, 1, 1, N), q(P(4, 4), P(1, 4, -1), P(3, 4, -1))),
        ("chain: triple products over denominator = lhs", mul(tri16, q(den=den2)), lhs10),
        ("chain: theta over denominator = lhs", mul(theta, q(den=den2)), lhs10),
        ("chain: (q^4,-q,-q^3;q^4)/(-q^2,q^4;q^4)^2 = lhs", q(P(4, 4), P(1, 4, -1), P(3, 4, -1), den=den2), lhs10),
    ]
    half = N // 2
    for i in (0, 1):
        e21 = eq21_series(i, half)
        checks.append((f"q->-q maps the signed half-series to F_{i}", substitute_signed(e21), f_series(i, half)))
        checks.append((f"signed half-series equals stanley dissection, i={i}", e21, dissect(lhs10, 2, i)))
        # (1-q) F_i = 1/(q^2;q)_inf / (q^{1+2i},q^2,q^4,q^6,q^{7-2i};q^8)_inf
        checks.append(
            (
                f"(1-q)F_{i}",
                q(P(1, 1, 1, 1), den=[E(1), P(1 + 2 * i, 8), P(2, 8), P(4, 8), P(6, 8), P(7 - 2 * i, 8)]),
                q(den=[P(2, 1), P(1 + 2 * i, 8), P(2, 8), P(4, 8), P(6, 8), P(7 - 2 * i, 8)]),
            )
        )
    return [compare_series(name, a, b) for name, a, b in checks]


def d_series(N: int) -> TruncatedSeries:
    """1 / (E(q) (q^2;q^4)_inf)."""
    return qproduct(N, den=[E(1), P(2, 4)])


def verify_gg_factorization(N: int) -> ScanReport:
    """F_0 - F_1 = (G_0 - G_1) / (E(q) (q^2;q^4)_inf)."""
    lhs = f_series(0, N) - f_series(1, N)
    rhs = mul(d_series(N), gollnitz_gordon_product(0, N) - gollnitz_gordon_product(1, N))
    return compare_series("F0-F1 = (G0-G1)/(E(q)(q^2;q^4))", lhs, rhs)


def verify_gollnitz_gordon(N: int, enum_max: int = 100) -> ScanReport:
    """G_0 - G_1 = sum b_k q^k with b_0 = b_3 = 0, b_1 = b_2 = 1 and b_k > 0 for k >= 4;
    product coefficients agree with the gap-condition count for n <= enum_max."""
    g = [gollnitz_gordon_product(i, N) for i in (0, 1)]
    b = g[0] - g[1]
    report = ScanReport("Goellnitz-Gordon", 0, N)
    for k, want in ((0, 0), (1, 1), (2, 1), (3, 0)):
        if k <= N and b[k] != want:
            report.fail(k, f"b_{k} = {b[k]}, expected {want}")
    for k in range(4, N + 1):
        if b[k] <= 0:
            report.fail(k, f"b_{k} = {b[k]} <= 0")
    for n in range(min(N, enum_max) + 1):
        for i in (0, 1):
            count = gg_count(n, i)
            if count != g[i][n]:
                report.fail(n, f"i={i}: enumerated {count}, product {g[i][n]}")
    return report


# --- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class NamedSeries:
    name: str
    params: tuple
    series: TruncatedSeries

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({','.join(_fmt_param(p) for p in self.params)})"


def _fmt_param(p) -> str:
    return "inf" if is_infinite(p) else str(p)


def _parse_L(tok: str):
    tok = tok.strip().lower()
    if tok in ("inf", "infinity", "oo", "∞"):
        return INF
    return int(tok)


CATALOG = {
    "stanley": "Stanley product, p0(n) - p2(n)",
    "andrews_p0": "p0(n) via the eta quotient",
    "F0": "c_{2n}",
    "F1": "c_{2n+1}",
    "G0": "Goellnitz-Gordon product, i=0",
    "G1": "Goellnitz-Gordon product, i=1",
    "class(m,r,L)": "1/(q^r,q^{m-r};q^m)_L",
    "diff(m,r,L)": "class(m,1,L) - class(m,r,L)",
    "jtp(s,t)": "sum_j q^{s j^2 + t j}; optional third argument is the sign",
}

_CALL = re.compile(r"^\s*(\w+)\s*(?:\(([^)]*)\))?\s*$")


def build(spec: str, N: int) -> NamedSeries:
    """Build a catalog series from its stable name, e.g. "stanley" or "class(8,3,3)"."""
    m = _CALL.match(spec)
    if not m:
        raise KeyError(spec)
    name, args = m.group(1), m.group(2)
    params = [a.strip() for a in args.split(",")] if args else []
    simple = {
        "stanley": lambda: stanley_product(N),
        "andrews_p0": lambda: andrews_p0(N),
        "F0": lambda: f_series(0, N),
        "F1": lambda: f_series(1, N),
        "G0": lambda: gollnitz_gordon_product(0, N),
        "G1": lambda: gollnitz_gordon_product(1, N),
    }
    if name in simple:
        if params:
            raise KeyError(spec)
        return NamedSeries(name, (), simple[name]())
    if name in ("class", "diff") and len(params) == 3:
        mm, r, L = int(params[0]), int(params[1]), _parse_L(params[2])
        fn = finite_class_series if name == "class" else difference_series
        return NamedSeries(name, (mm, r, L), fn(mm, r, L, N))
    if name == "jtp" and len(params) in (2, 3):
        s, t = int(params[0]), int(params[1])
        sign = int(params[2]) if len(params) == 3 else 1
        return NamedSeries(name, (s, t) if len(params) == 2 else (s, t, sign), jtp_sum(s, t, sign, N))
    raise KeyError(spec)
