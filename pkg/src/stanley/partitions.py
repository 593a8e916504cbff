"""Partitions, conjugation, the Stanley statistic and brute-force counting oracles."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator

EXHAUSTIVE_LIMIT = 80


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    norm: int = field(init=False, compare=False)

    def __post_init__(self):
        parts = tuple(self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "norm", sum(parts))

    @classmethod
    def of(cls, parts) -> "Partition":
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return parse_partition(text)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self):
        return format_partition(self)

    def mu(self, i: int) -> int:
        """Number of parts equal to i."""
        return sum(1 for p in self.parts if p == i)

    def nu(self, i: int, m: int) -> int:
        """Number of parts congruent to i mod m."""
        i %= m
        return sum(1 for p in self.parts if p % m == i)

    def odd_count(self) -> int:
        return sum(p & 1 for p in self.parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)


def format_partition(p: Partition) -> str:
    """Comma-separated parts, largest first, repeated parts as ``part^count``."""
    if not p.parts:
        return "()"
    out = []
    i = 0
    parts = p.parts
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(str(parts[i]) if j - i == 1 else f"{parts[i]}^{j - i}")
        i = j
    return ",".join(out)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse "45,45,43" or the shorthand "7^2,1^4"; surrounding parentheses are allowed."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.replace(" ", "")
    if not s:
        return Partition(())
    parts = []
    for tok in s.split(","):
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad partition token {tok!r} in {text!r}")
        part = int(m.group(1))
        count = int(m.group(2)) if m.group(2) else 1
        if part <= 0:
            raise ValueError(f"parts must be positive, got {part}")
        parts.extend([part] * count)
    return Partition.of(parts)


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return p
    return Partition(tuple(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1)))


def stanley_statistic(parts) -> int:
    """(O(pi) - O(pi')) mod 4 for a nonincreasing part sequence.

    O(pi') is the alternating sum of the parts: a part size k of the conjugate
    occurs lambda_k - lambda_{k+1} times.
    """
    odd = sum(x & 1 for x in parts)
    odd_conj = sum(parts[::2]) - sum(parts[1::2])
    return (odd - odd_conj) % 4


def stanley_class(p: Partition) -> int:
    cls = (p.odd_count() - conjugate(p).odd_count()) % 4
    assert cls in (0, 2), f"odd Stanley statistic {cls} for {p}: parity of O(pi) and O(pi') disagree"
    return cls


@dataclass(frozen=True)
class EnumerationConstraint:
    """Restrictions on the partitions produced by :func:`enumerate_partitions`.

    ``residue_set`` is ``(m, residues)``; ``min_gap`` bounds the difference of
    adjacent parts from below; ``max_parts_le2`` caps how many parts are <= 2.
    """

    max_part: int | None = None
    residue_set: tuple[int, frozenset[int]] | None = None
    min_gap: int | None = None
    forbid_consecutive_evens: bool = False
    max_parts_le2: int | None = None

    def __post_init__(self):
        if self.residue_set is not None:
            m, res = self.residue_set
            object.__setattr__(self, "residue_set", (m, frozenset(r % m for r in res)))

    @property
    def unconstrained(self) -> bool:
        return self == NO_CONSTRAINT

    def allows_part(self, x: int) -> bool:
        if self.max_part is not None and x > self.max_part:
            return False
        if self.residue_set is not None:
            m, res = self.residue_set
            if x % m not in res:
                return False
        return True


NO_CONSTRAINT = EnumerationConstraint()


def residue_constraint(m: int, residues, max_part: int | None = None) -> EnumerationConstraint:
    return EnumerationConstraint(max_part=max_part, residue_set=(m, frozenset(residues)))


def gg_constraint(i: int) -> EnumerationConstraint:
    if i not in (0, 1):
        raise ValueError("i must be 0 or 1")
    return EnumerationConstraint(min_gap=2, forbid_consecutive_evens=True, max_parts_le2=1 - i)


def _revlex_unrestricted(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    a = [n]
    while True:
        yield tuple(a)
        # strip trailing ones, decrement the last part > 1, refill greedily
        ones = 0
        while a and a[-1] == 1:
            a.pop()
            ones += 1
        if not a:
            return
        x = a.pop() - 1
        rem = ones + 1
        a.append(x)
        while rem > x:
            a.append(x)
            rem -= x
        if rem:
            a.append(rem)


def _revlex_constrained(n: int, c: EnumerationConstraint) -> Iterator[tuple[int, ...]]:
    allowed = [x for x in range(1, n + 1) if c.allows_part(x)]
    gap = c.min_gap or 0
    le2_cap = c.max_parts_le2

    # reach[k][s]: can s be written with allowed parts <= allowed[k-1] (ignoring gap rules)
    reach = [[False] * (n + 1) for _ in range(len(allowed) + 1)]
    reach[0][0] = True
    for k, x in enumerate(allowed, start=1):
        row, prev = reach[k], reach[k - 1]
        for s in range(n + 1):
            row[s] = prev[s] or (s >= x and row[s - x])

    prefix: list[int] = []

    def rec(remaining: int, hi_idx: int, le2_used: int):
        if remaining == 0:
            yield tuple(prefix)
            return
        for k in range(hi_idx, 0, -1):
            x = allowed[k - 1]
            if x > remaining:
                continue
            if not reach[k][remaining - x]:
                continue
            if prefix:
                last = prefix[-1]
                if gap and last - x < gap:
                    continue
                if c.forbid_consecutive_evens and last % 2 == 0 and x % 2 == 0 and last - x == 2:
                    continue
            used = le2_used
            if le2_cap is not None and x <= 2:
                used += 1
                if used > le2_cap:
                    continue
            prefix.append(x)
            # next part must be <= x (or <= x - gap)
            nxt = k
            while nxt > 0 and allowed[nxt - 1] > x - gap:
                nxt -= 1
            yield from rec(remaining - x, nxt, used)
            prefix.pop()

    yield from rec(n, len(allowed), 0)


def enumerate_tuples(n: int, c: EnumerationConstraint = NO_CONSTRAINT) -> Iterator[tuple[int, ...]]:
    """Raw part tuples of the partitions of n under c, reverse lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if c.unconstrained:
        return _revlex_unrestricted(n)
    return _revlex_constrained(n, c)


def enumerate_partitions(n: int, c: EnumerationConstraint = NO_CONSTRAINT) -> Iterator[Partition]:
    for parts in enumerate_tuples(n, c):
        yield Partition(parts)


def count_partitions(n: int, c: EnumerationConstraint = NO_CONSTRAINT) -> int:
    return sum(1 for _ in enumerate_tuples(n, c))


def p_table(N: int) -> list[int]:
    """p(0..N) via Euler's pentagonal-number recurrence."""
    if N < 0:
        raise ValueError("N must be non-negative")
    p = [0] * (N + 1)
    p[0] = 1
    for n in range(1, N + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sgn = 1 if k % 2 else -1
            total += sgn * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sgn * p[n - g2]
            k += 1
        p[n] = total
    return p


def classify_counts(n: int, allow_large: bool = False) -> tuple[int, int]:
    """(p0(n), p2(n)) by exhaustive enumeration and the Stanley statistic."""
    if n > EXHAUSTIVE_LIMIT and not allow_large:
        raise ValueError(
            f"n={n} exceeds the exhaustive-enumeration limit {EXHAUSTIVE_LIMIT}; pass allow_large=True to insist"
        )
    counts = [0, 0, 0, 0]
    for parts in enumerate_tuples(n):
        counts[stanley_statistic(parts)] += 1
    if counts[1] or counts[3]:
        raise AssertionError(f"odd Stanley statistic encountered for n={n}: {counts}")
    return counts[0], counts[2]


def gg_count(n: int, i: int) -> int:
    """Goellnitz-Gordon partitions of n: gaps >= 2, no two consecutive even parts,
    at most 1 - i parts <= 2."""
    return count_partitions(n, gg_constraint(i))
