"""Exact truncated power series over Python integers.

A :class:`TruncatedSeries` stores the coefficients ``c[0..N]`` of a formal
power series modulo ``q**(N+1)``.  Binary operations truncate to the shorter
operand.  Products of binomial factors ``(1 - s*q**e)`` are applied in place
on plain lists, which is what every infinite product in the package reduces
to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

INF = math.inf


def is_infinite(L) -> bool:
    return L is None or L == math.inf


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")

    @property
    def order(self) -> int:
        """Truncation order N; coefficients of q**k with k > N are unknown."""
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        return add(self, _promote(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _promote(other, self.order))

    def __rsub__(self, other):
        return sub(_promote(other, self.order), self)

    def __neg__(self):
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * c for c in self.coeffs))
        return mul(self, other)

    __rmul__ = __mul__

    def truncate(self, N: int) -> "TruncatedSeries":
        if N > self.order:
            raise ValueError(f"cannot extend truncation order {self.order} to {N}")
        return TruncatedSeries(self.coeffs[: N + 1])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q**k, keeping the truncation order."""
        if k < 0:
            raise ValueError("negative shifts would leave the power-series ring")
        N = self.order
        return TruncatedSeries((0,) * min(k, N + 1) + self.coeffs[: max(N + 1 - k, 0)])

    def to_tsv(self) -> str:
        return "".join(f"{k}\t{c}\n" for k, c in enumerate(self.coeffs))

    @classmethod
    def from_tsv(cls, text: str) -> "TruncatedSeries":
        coeffs = []
        for line in text.splitlines():
            if not line.strip():
                continue
            k, c = line.split("\t")
            if int(k) != len(coeffs):
                raise ValueError(f"expected exponent {len(coeffs)}, got {k}")
            coeffs.append(int(c))
        return cls(tuple(coeffs))


def _promote(x, N):
    if isinstance(x, TruncatedSeries):
        return x
    if isinstance(x, int):
        return constant(x, N)
    return NotImplemented


def constant(c: int, N: int) -> TruncatedSeries:
    return TruncatedSeries((c,) + (0,) * N)


def one(N: int) -> TruncatedSeries:
    return constant(1, N)


def from_coeffs(coeffs: Iterable[int], N: int | None = None) -> TruncatedSeries:
    """Build a series from a (possibly short) coefficient list, zero-padded to N."""
    cs = list(coeffs)
    if N is None:
        N = len(cs) - 1
    cs = cs[: N + 1] + [0] * (N + 1 - len(cs))
    return TruncatedSeries(tuple(cs))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    N = min(a.order, b.order)
    return TruncatedSeries(tuple(x + y for x, y in zip(a.coeffs[: N + 1], b.coeffs)))


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    N = min(a.order, b.order)
    return TruncatedSeries(tuple(x - y for x, y in zip(a.coeffs[: N + 1], b.coeffs)))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Schoolbook Cauchy product truncated at the shorter order."""
    N = min(a.order, b.order)
    x, y = a.coeffs, b.coeffs
    out = [0] * (N + 1)
    for i in range(N + 1):
        xi = x[i]
        if not xi:
            continue
        for j in range(N + 1 - i):
            out[i + j] += xi * y[j]
    return TruncatedSeries(tuple(out))


def invert(a: TruncatedSeries) -> TruncatedSeries:
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise ValueError(f"only unit series can be inverted over the integers; constant term is {a0}")
    N = a.order
    x = a.coeffs
    out = [0] * (N + 1)
    out[0] = a0
    for n in range(1, N + 1):
        acc = 0
        for k in range(1, n + 1):
            xk = x[k]
            if xk:
                acc += xk * out[n - k]
        out[n] = -a0 * acc
    return TruncatedSeries(tuple(out))


# In-place binomial factor kernels on plain lists.  These are the hot loops of
# every product builder, so they lean on slicing and itertools.accumulate.

def mul_binomial(c: list[int], sign: int, e: int) -> None:
    """c <- c * (1 - sign*q**e), truncated to len(c)."""
    n = len(c)
    if e >= n:
        return
    if e == 0:
        raise ValueError("factor with exponent 0 is not a unit binomial")
    head = c[: n - e]
    if sign == 1:
        c[e:] = [x - y for x, y in zip(c[e:], head)]
    else:
        c[e:] = [x + y for x, y in zip(c[e:], head)]


def div_binomial(c: list[int], sign: int, e: int) -> None:
    """c <- c / (1 - sign*q**e), truncated to len(c)."""
    n = len(c)
    if e >= n:
        return
    if e == 0:
        raise ValueError("factor with exponent 0 is not a unit binomial")
    for res in range(e):
        chain = c[res::e]
        if sign == 1:
            c[res::e] = list(accumulate(chain))
        else:
            # b_k = c_k - b_{k-1}; substitute u_k = (-1)**k b_k to get a plain prefix sum
            signed = [x if k % 2 == 0 else -x for k, x in enumerate(chain)]
            u = list(accumulate(signed))
            c[res::e] = [x if k % 2 == 0 else -x for k, x in enumerate(u)]


def _factor_exponents(r: int, m: int, L, N: int):
    j = 0
    e = r
    while e <= N and (is_infinite(L) or j < L):
        yield e
        j += 1
        e += m


def _check_poch(r, m, L):
    if r < 1:
        raise ValueError(f"start exponent must be >= 1 (got {r}); a constant factor breaks the unit invariant")
    if m < 1:
        raise ValueError(f"step must be >= 1 (got {m})")
    if not is_infinite(L) and L < 0:
        raise ValueError(f"length must be non-negative or infinite (got {L})")


def qpochhammer(sign: int, r: int, m: int, L, N: int) -> TruncatedSeries:
    """Expand prod_{j<L} (1 - sign*q**(r+m*j)) modulo q**(N+1).

    ``L`` may be ``math.inf`` (or ``None``); factors whose exponent exceeds N
    cannot touch the retained coefficients and are skipped.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    _check_poch(r, m, L)
    c = [1] + [0] * N
    for e in _factor_exponents(r, m, L, N):
        mul_binomial(c, sign, e)
    return TruncatedSeries(tuple(c))


# A factor spec is (sign, r, m, L): the symbol (sign*q**r; q**m)_L.
Factor = tuple[int, int, int, object]


def qproduct(N: int, num: Sequence[Factor] = (), den: Sequence[Factor] = ()) -> TruncatedSeries:
    """Expand prod(num) / prod(den) of q-Pochhammer symbols modulo q**(N+1)."""
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    c = [1] + [0] * N
    for sign, r, m, L in num:
        _check_poch(r, m, L)
        for e in _factor_exponents(r, m, L, N):
            mul_binomial(c, sign, e)
    for sign, r, m, L in den:
        _check_poch(r, m, L)
        for e in _factor_exponents(r, m, L, N):
            div_binomial(c, sign, e)
    return TruncatedSeries(tuple(c))


def dissect(a: TruncatedSeries, t: int, j: int) -> TruncatedSeries:
    """Keep the exponents congruent to j mod t: result[k] = a[t*k + j]."""
    if t < 1:
        raise ValueError("dissection modulus must be positive")
    if not 0 <= j < t:
        raise ValueError(f"residue {j} out of range for modulus {t}")
    if j > a.order:
        raise ValueError(f"residue {j} exceeds truncation order {a.order}")
    return TruncatedSeries(a.coeffs[j::t])


def interleave(parts: Sequence[TruncatedSeries], N: int) -> TruncatedSeries:
    """Inverse of dissect: sum_j q**j * parts[j](q**t) truncated at N."""
    t = len(parts)
    out = []
    for k in range(N + 1):
        q, j = divmod(k, t)
        out.append(parts[j][q])
    return TruncatedSeries(tuple(out))


def substitute_signed(a: TruncatedSeries) -> TruncatedSeries:
    """q -> -q."""
    return TruncatedSeries(tuple(c if k % 2 == 0 else -c for k, c in enumerate(a.coeffs)))


def dilate(a: TruncatedSeries, k: int, N: int | None = None) -> TruncatedSeries:
    """q -> q**k, truncated at N (default k * a.order, the largest order fully known)."""
    if k < 1:
        raise ValueError("dilation factor must be positive")
    full = k * a.order + (k - 1)
    if N is None:
        N = k * a.order
    if N > full:
        raise ValueError(f"q->q^{k} of an order-{a.order} series is known only to order {full}")
    out = [0] * (N + 1)
    for i, c in enumerate(a.coeffs):
        if i * k > N:
            break
        out[i * k] = c
    return TruncatedSeries(tuple(out))
