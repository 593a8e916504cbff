"""The constructive injection from partitions into parts = +-r (mod m) to
partitions into parts = +-1 (mod m), with traces and exhaustive audits.

The map works in three stages:

1. strip the multiples of m from every part, leaving a base partition with
   parts r and m-r and two extraction vectors;
2. rewrite the base into parts 1 and m-1 (three cases, keyed on how many
   r's and (m-r)'s there are);
3. add the stripped multiples back onto parts equal to 1 or m-1.

Internally the smaller of r, m-r plays the role of "r" (the class +-r is the
same as the class +-(m-r)); ``ResidueClassSpec.lo``/``hi`` expose this.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .partitions import Partition, enumerate_tuples, residue_constraint
from .products import finite_class_series
from .report import ScanReport
from .series import INF, is_infinite


class InjectionError(ValueError):
    """Input partition is not in the domain of the map."""


class InvariantViolation(RuntimeError):
    """The case arithmetic produced an impossible state; indicates a bug."""


@dataclass(frozen=True)
class ResidueClassSpec:
    m: int
    r: int
    L: object = INF

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"modulus must be >= 3, got {self.m}")
        if not 0 < self.r < self.m:
            raise ValueError(f"need 0 < r < m, got r={self.r}, m={self.m}")
        if not is_infinite(self.L) and (int(self.L) != self.L or self.L < 1):
            raise ValueError(f"L must be a positive integer or infinite, got {self.L}")

    @property
    def lo(self) -> int:
        return min(self.r, self.m - self.r)

    @property
    def hi(self) -> int:
        return self.m - self.lo

    @property
    def theorem5_applies(self) -> bool:
        """Neither of r, m-r divides the other."""
        return self.hi % self.lo != 0 and self.lo % self.hi != 0

    def max_part(self, residue: int | None = None) -> int | None:
        """Largest allowed part, max(Lm - r, Lm + r - m); None when L is infinite."""
        if is_infinite(self.L):
            return None
        L, m = int(self.L), self.m
        residue = self.r if residue is None else residue
        return max(L * m - residue, L * m + residue - m)

    def domain_constraint(self):
        return residue_constraint(self.m, {self.r, self.m - self.r}, self.max_part())

    def codomain_constraint(self):
        return residue_constraint(self.m, {1, self.m - 1}, self.max_part(1))

    def __str__(self):
        return f"(m={self.m}, r={self.r}, L={'inf' if is_infinite(self.L) else self.L})"


@dataclass
class MapTrace:
    source: Partition
    spec: ResidueClassSpec
    case_label: int
    base: Partition
    v_r: tuple[int, ...]
    v_mr: tuple[int, ...]
    image_base: Partition
    pair_count: int
    unpaired_rewrites: tuple[int, str]
    attachments: list[tuple[str, int, int, int]] = field(default_factory=list)
    image: Partition | None = None
    condition: str | None = None

    def to_dict(self) -> dict:
        m = self.spec.m
        img = self.image
        return {
            "input": str(self.source),
            "norm": self.source.norm,
            "spec": {"m": m, "r": self.spec.r, "L": "inf" if is_infinite(self.spec.L) else self.spec.L},
            "case": self.case_label,
            "base": str(self.base),
            "v_r": list(self.v_r),
            "v_mr": list(self.v_mr),
            "pair_count": self.pair_count,
            "unpaired_rewrites": {"count": self.unpaired_rewrites[0], "kind": self.unpaired_rewrites[1]},
            "image_base": str(self.image_base),
            "attachments": [
                {"vector": v, "component": k, "slot": slot, "added": add} for v, k, slot, add in self.attachments
            ],
            "image": str(img) if img is not None else None,
            "condition": self.condition,
            "stats": image_statistics(img, m) if img is not None else None,
        }


def extract_multiples(pi: Partition, m: int, r: int):
    """Split every part p = p0 + m*k with p0 in {r, m-r}.

    Returns (base, v_r, v_mr); the vectors hold the k's of the parts with
    residue r and m-r respectively, sorted nondecreasing.
    """
    s = m - r
    base, v_r, v_mr = [], [], []
    for p in pi.parts:
        p0, k = p % m, p // m
        if p0 == r:
            v_r.append(k)
        elif p0 == s:
            v_mr.append(k)
        else:
            raise InjectionError(f"part {p} is not congruent to +-{r} mod {m}")
        base.append(p0)
    return Partition.of(base), tuple(sorted(v_r)), tuple(sorted(v_mr))


def _rewrite(a: int, b: int, m: int, r: int):
    """Rewrite r^a (m-r)^b into parts {1, m-1}.

    Returns (case, slots, unpaired) where slots lists the created parts in
    creation order as (value, origin) with origin "pair", "unpaired" or "last2".
    """
    s = m - r
    slots: list[tuple[int, str]] = []
    if a >= b:
        case = 1
        pairs, unpaired = b, a - b
    else:
        pairs, unpaired = a, b - a
        case = 2 if unpaired % r else 3
    for _ in range(pairs):
        slots += [(1, "pair"), (m - 1, "pair")]
    if case == 1:
        slots += [(1, "unpaired")] * (r * unpaired)
        return case, slots, (unpaired, f"{r} -> 1^{r}")
    if case == 2:
        slots += [(1, "unpaired")] * (s * unpaired)
        return case, slots, (unpaired, f"{s} -> 1^{s}")
    # case 3: r | (b - a) with r >= 2 guarantees at least two unpaired (m-r)'s
    if unpaired < 2:
        raise InvariantViolation(f"case 3 needs two unpaired parts, got {unpaired}")
    extra_ones = 2 * s - (m - 1)
    if extra_ones < 0:
        raise InvariantViolation(f"2(m-r) < m-1 for m={m}, r={r}")
    slots += [(1, "unpaired")] * (s * (unpaired - 2))
    slots += [(m - 1, "last2")] + [(1, "last2")] * extra_ones
    return case, slots, (unpaired, f"{s} -> 1^{s}, last two -> {m - 1},1^{extra_ones}")


def base_map(base: Partition, m: int, r: int) -> tuple[Partition, int]:
    """Map a partition with parts in {r, m-r} to one with parts in {1, m-1}."""
    s = m - r
    if any(p not in (r, s) for p in base.parts):
        raise InjectionError(f"base parts must be {r} or {s}: {base}")
    case, slots, _ = _rewrite(base.mu(r), base.mu(s), m, r)
    return Partition.of(v for v, _ in slots), case


def _target_slots(image_base: Partition, case_label: int, m: int) -> tuple[list[int], list[int]]:
    """Canonical attachment targets: indices into a creation-ordered slot list.

    Ones come pair-created first, then rewrite-created; the same for (m-1)'s.
    In case 3 the (m-1) made by the last-two rewrite is not a target.
    """
    ones = image_base.mu(1)
    sevens = image_base.mu(m - 1)
    one_slots = list(range(ones))
    seven_slots = list(range(ones, ones + sevens))
    if case_label == 3:
        seven_slots = seven_slots[:-1]
    return one_slots, seven_slots


def attach(image_base: Partition, v_r, v_mr, case_label: int, m: int, record: list | None = None) -> Partition:
    """Add m*v_r and m*v_mr back onto parts equal to 1 or m-1.

    Case 1: m*v_r onto 1's, m*v_mr onto (m-1)'s.  Cases 2, 3: the other way
    round.  k-th smallest component goes to the k-th canonical target.
    """
    if any(p not in (1, m - 1) for p in image_base.parts):
        raise InvariantViolation(f"image base has parts outside {{1, {m - 1}}}: {image_base}")
    one_slots, seven_slots = _target_slots(image_base, case_label, m)
    values = [1] * image_base.mu(1) + [m - 1] * image_base.mu(m - 1)
    if case_label == 1:
        plan = (("v_r", v_r, one_slots), ("v_mr", v_mr, seven_slots))
    else:
        plan = (("v_r", v_r, seven_slots), ("v_mr", v_mr, one_slots))
    for vname, vec, targets in plan:
        if len(vec) > len(targets):
            raise InvariantViolation(
                f"case {case_label}: {vname} has {len(vec)} components but only {len(targets)} target parts"
            )
        for k, comp in enumerate(sorted(vec)):
            slot = targets[k]
            values[slot] += m * comp
            if record is not None:
                record.append((vname, k, slot, m * comp))
    return Partition.of(values)


def full_map(pi: Partition, spec: ResidueClassSpec) -> tuple[Partition, MapTrace]:
    m, r = spec.m, spec.lo
    bound = spec.max_part()
    if bound is not None:
        for p in pi.parts:
            if p > bound:
                raise InjectionError(f"part {p} exceeds the largest allowed part {bound} for {spec}")
    base, v_r, v_mr = extract_multiples(pi, m, r)
    a, b = base.mu(r), base.mu(m - r)
    case, slots, unpaired = _rewrite(a, b, m, r)
    image_base = Partition.of(v for v, _ in slots)
    trace = MapTrace(
        source=pi,
        spec=spec,
        case_label=case,
        base=base,
        v_r=v_r,
        v_mr=v_mr,
        image_base=image_base,
        pair_count=min(a, b),
        unpaired_rewrites=unpaired,
    )
    image = attach(image_base, v_r, v_mr, case, m, trace.attachments)
    if image.norm != pi.norm:
        raise InvariantViolation(f"norm changed: {pi} -> {image}")
    trace.image = image
    trace.condition = verify_image_conditions(image, spec)
    return image, trace


def image_statistics(p: Partition, m: int) -> dict:
    return {
        "nu_1": p.nu(1, m),
        "nu_m-1": p.nu(m - 1, m),
        "mu_1": p.mu(1),
        "mu_m-1": p.mu(m - 1),
    }


def verify_image_conditions(image: Partition, spec: ResidueClassSpec) -> str | None:
    """Return the first condition cluster "i", "ii" or "iii" that the partition meets, else None.

    With D = nu(1) - nu(m-1) (counts mod m) and mu(x) the count of parts equal to x:
      (i)   r | D and r*mu(1) >= (r-1)*D
      (ii)  (m-r) | D, r does not divide D, and (m-r)*mu(1) >= (m-r-1)*D
      (iii) D = -m mod lcm(r, m-r), mu(m-1) > 0, and (m-r)*mu(1) >= (m-r-1)*D - r
    all subject to D >= 0.
    """
    m, r = spec.m, spec.lo
    s = m - r
    if any(p % m not in (1, m - 1) for p in image.parts):
        return None
    nu1, nu7 = image.nu(1, m), image.nu(m - 1, m)
    mu1, mu7 = image.mu(1), image.mu(m - 1)
    D = nu1 - nu7
    if D < 0:
        return None
    if D % r == 0 and r * mu1 >= (r - 1) * D:
        return "i"
    if D % s == 0 and D % r != 0 and s * mu1 >= (s - 1) * D:
        return "ii"
    lcm = r * s // math.gcd(r, s)
    if (D + m) % lcm == 0 and mu7 > 0 and s * mu1 >= (s - 1) * D - r:
        return "iii"
    return None


# Integers n < 49 not of the form 7m' + r' with m' > r', 0 <= r' < 7, apart from 0, 3, 5, 6.
S1 = frozenset({1, 2, 4, 8, 11, 13, 16, 17, 19, 26, 32, 34, 41})
S2 = frozenset({9, 10, 12, 24, 25, 27, 40})
S3 = {18: (2, 4), 20: (2, 6), 33: (4, 5), 48: (4, 20)}
NON_STRICT = frozenset({0, 3, 5, 6})


def strictness_witness(n: int, spec: ResidueClassSpec | None = None) -> Partition | None:
    """A partition into 1's and 7's counted for the +-1 class but outside the image of the map
    (modulus 8, residue 3); None for n in {0, 3, 5, 6}."""
    if spec is not None and (spec.m, spec.lo) != (8, 3):
        raise ValueError(f"witness construction is specific to m=8, r=3; got {spec}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n in NON_STRICT:
        return None
    q, rem = divmod(n, 7)
    if q > rem:
        return Partition((7,) * q + (1,) * rem)
    if n in S1:
        return Partition((1,) * n)
    if n in S2:
        return Partition((7,) + (1,) * (n - 7))
    if n in S3:
        sevens, ones = S3[n]
        return Partition((7,) * sevens + (1,) * ones)
    raise InvariantViolation(f"no witness rule covers n={n}")


def injectivity_audit(n_max: int, spec: ResidueClassSpec, n_min: int = 0) -> ScanReport:
    """Map every partition in the +-r class for n_min <= n <= n_max and check the map's claims.

    Per n: norms preserved, images in the +-1 class within the part bound,
    images pairwise distinct, every image meets a condition cluster, the
    domain size equals the product coefficient, and the number of +-1-class
    partitions meeting the conditions equals the domain size.  For m=8, r=3
    the strictness pattern and witnesses are checked too.
    """
    m = spec.m
    report = ScanReport(f"injectivity audit {spec}", n_min, n_max)
    report.columns = ("n", "domain", "images", "conditioned", "codomain", "strict")
    if not spec.theorem5_applies:
        report.fail(n_min, f"hypotheses fail: one of {spec.lo}, {spec.hi} divides the other")
        return report
    domain_series = finite_class_series(m, spec.r, spec.L, n_max)
    codomain_series = finite_class_series(m, 1, spec.L, n_max)
    dom_c, cod_c = spec.domain_constraint(), spec.codomain_constraint()
    bound1 = spec.max_part(1)
    eight_three = (m, spec.lo) == (8, 3)
    for n in range(n_min, n_max + 1):
        images: dict[tuple, Partition] = {}
        count = 0
        for parts in enumerate_tuples(n, dom_c):
            count += 1
            pi = Partition(parts)
            try:
                image, trace = full_map(pi, spec)
            except (InjectionError, InvariantViolation) as exc:
                report.fail(n, f"{pi}: {exc}")
                continue
            if any(p % m not in (1, m - 1) for p in image.parts):
                report.fail(n, f"{pi} -> {image}: part outside +-1 mod {m}")
            if bound1 is not None and image.parts and image.parts[0] > bound1:
                report.fail(n, f"{pi} -> {image}: part exceeds {bound1}")
            if image.nu(1, m) < image.nu(m - 1, m):
                report.fail(n, f"{pi} -> {image}: nu(1) < nu(m-1)")
            if trace.condition is None:
                report.fail(n, f"{pi} -> {image}: no condition cluster holds")
            if image.parts in images:
                report.fail(n, f"collision: {images[image.parts]} and {pi} both map to {image}")
            images[image.parts] = pi
        if count != domain_series[n]:
            report.fail(n, f"enumerated {count} domain partitions, product coefficient {domain_series[n]}")
        codomain = 0
        conditioned = 0
        conditioned_set = set()
        for parts in enumerate_tuples(n, cod_c):
            codomain += 1
            if verify_image_conditions(Partition(parts), spec) is not None:
                conditioned += 1
                conditioned_set.add(parts)
        if codomain != codomain_series[n]:
            report.fail(n, f"enumerated {codomain} codomain partitions, product coefficient {codomain_series[n]}")
        if conditioned != count:
            report.fail(n, f"{conditioned} partitions meet the image conditions, domain has {count}")
        if not set(images) <= conditioned_set:
            report.fail(n, "image set not contained in the conditioned set")
        strict = codomain > count
        if codomain < count:
            report.fail(n, f"codomain {codomain} smaller than domain {count}")
        if eight_three:
            expected = n not in NON_STRICT
            if strict != expected:
                report.fail(n, f"strictness {strict}, expected {expected}")
            w = strictness_witness(n, spec)
            if (w is None) == expected:
                report.fail(n, f"witness presence {w is not None} disagrees with strictness")
            if w is not None:
                if w.norm != n or any(p % m not in (1, m - 1) for p in w.parts):
                    report.fail(n, f"witness {w} not a +-1-class partition of {n}")
                elif bound1 is not None and w.parts[0] > bound1:
                    report.fail(n, f"witness {w} exceeds part bound {bound1}")
                elif verify_image_conditions(w, spec) is not None:
                    report.fail(n, f"witness {w} meets an image condition")
                elif w.parts in images:
                    report.fail(n, f"witness {w} is in the image")
        report.table.append((n, count, len(images), conditioned, codomain, strict))
    return report


def theorem4_scan(m: int, r: int, L, N: int) -> ScanReport:
    """Scan class(m,1,L) - class(m,r,L) for negative coefficients and compare with the
    divisibility criterion: nonnegative iff neither of r, m-r divides the other."""
    if not 1 < r < m - 1:
        raise ValueError(f"need 1 < r < m-1, got m={m}, r={r}")
    if not is_infinite(L) and L < 1:
        raise ValueError("L must be positive")
    s = m - r
    predicted = s % r != 0 and r % s != 0
    diff = finite_class_series(m, 1, L, N) - finite_class_series(m, r, L, N)
    Ls = "inf" if is_infinite(L) else L
    report = ScanReport(f"theorem4 (m={m}, r={r}, L={Ls})", 0, N)
    negatives = [k for k, c in enumerate(diff.coeffs) if c < 0]
    report.notes.append(f"criterion predicts {'nonnegative' if predicted else 'a negative coefficient'}")
    if predicted:
        for k in negatives[:10]:
            report.fail(k, f"coefficient {diff[k]} < 0")
        report.observe_margin(min(diff.coeffs))
    elif negatives:
        k = negatives[0]
        report.findings.append((k, f"first negative coefficient {diff[k]} at n={k}, as the criterion predicts"))
    else:
        report.fail(N, "criterion predicts a negative coefficient but none found up to N")
    return report
