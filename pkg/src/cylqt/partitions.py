"""Integer partitions, boundary profiles, and arm/leg statistics.

Partitions are tuples of weakly decreasing positive integers (trailing
zeros dropped).  Profiles are strings over {0,1} reading the boundary of
the Young diagram: a 1 per horizontal step, a 0 per vertical step.  A
minimal profile starts with 1 and ends with 0 (or is empty); a generalized
profile may carry extra leading 0s and trailing 1s.
"""

from __future__ import annotations

from functools import lru_cache


def normalize(parts) -> tuple:
    """Drop trailing zeros and return the partition as a tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
    if p and p[-1] < 0:
        raise ValueError("parts must be non-negative: %r" % (parts,))
    return p


def size(lam: tuple) -> int:
    return sum(lam)


def conjugate(lam: tuple) -> tuple:
    """Transpose of the Young diagram: result[j-1] = #{i : lam_i >= j}."""
    if not lam:
        return ()
    cols = [0] * lam[0]
    for part in lam:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def contains(lam: tuple, mu: tuple) -> bool:
    """mu subseteq lam componentwise."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def to_minimal_profile(lam: tuple) -> str:
    """Boundary string of lam, scanned so that the 0 for row i has lam_i
    ones before it.  Zeros left to right correspond to rows smallest
    first; ones left to right correspond to columns 1, 2, ..., lam_1."""
    out = []
    prev = 0
    for part in reversed(lam):
        out.append("1" * (part - prev))
        out.append("0")
        prev = part
    return "".join(out)


def from_profile(profile: str) -> tuple:
    """Partition encoded by a generalized profile.

    Each 0 contributes a part equal to the number of 1s before it; parts
    are collected right to left.  Leading 0s give zero parts and trailing
    1s contribute nothing, so generalized profiles normalize for free.
    """
    parts = []
    ones = 0
    for ch in profile:
        if ch == "1":
            ones += 1
        elif ch == "0":
            parts.append(ones)
        else:
            raise ValueError("profile must be over {0,1}: %r" % (profile,))
    parts.reverse()
    return normalize(parts)


def inversions(profile: str):
    """All index pairs (i, j), i < j, with profile[i]=1 and profile[j]=0,
    in lexicographic order.  Their count equals |from_profile(profile)|."""
    out = []
    for i, ch in enumerate(profile):
        if ch == "1":
            out.extend((i, j) for j in range(i + 1, len(profile)) if profile[j] == "0")
        elif ch != "0":
            raise ValueError("profile must be over {0,1}: %r" % (profile,))
    return out


def arm_leg(lam: tuple, box: tuple) -> tuple:
    """Arm and leg of a box of lam in cartesian coordinates (row, col),
    both 1-indexed: arm = lam_i - j, leg = lam'_j - i."""
    i, j = box
    if i < 1 or j < 1 or i > len(lam) or j > lam[i - 1]:
        raise ValueError("box %r outside shape %r" % (box, lam))
    conj = conjugate(lam)
    return lam[i - 1] - j, conj[j - 1] - i


def arm_leg_inversion(profile: str, inv: tuple) -> tuple:
    """Arm and leg of an inversion (i, j) of a profile: the number of 1s,
    respectively 0s, strictly between positions i and j."""
    i, j = inv
    if not (0 <= i < j < len(profile) and profile[i] == "1" and profile[j] == "0"):
        raise ValueError("%r is not an inversion of %r" % (inv, profile))
    between = profile[i + 1 : j]
    return between.count("1"), between.count("0")


def box_of_inversion(profile: str, inv: tuple) -> tuple:
    """Box of from_profile(profile) matching an inversion: the column is
    the rank of the 1 at position i counted from the left, the row the
    rank of the 0 at position j counted from the right.  Under this map
    arm/leg agree between the two coordinate systems."""
    i, j = inv
    col = profile[: i + 1].count("1")
    row = profile[j:].count("0")
    return row, col


def _padded_one_positions(lam: tuple, rows: int, cols: int):
    """Positions of the 1s in the profile of lam drawn in a rows x cols
    bounding box: position of the 1 for column k is (k-1) + rows - lam'_k."""
    conj = conjugate(lam)
    heights = list(conj) + [0] * (cols - len(conj))
    return [k + rows - heights[k] for k in range(cols)]


def is_horizontal_strip(lam: tuple, mu: tuple) -> bool:
    """True iff mu subseteq lam and lam_1 >= mu_1 >= lam_2 >= mu_2 >= ..."""
    if not contains(lam, mu):
        return False
    for k in range(len(lam)):
        mu_k = mu[k] if k < len(mu) else 0
        nxt = lam[k + 1] if k + 1 < len(lam) else 0
        if not (lam[k] >= mu_k >= nxt):
            return False
    return True


def is_horizontal_strip_columns(lam: tuple, mu: tuple) -> bool:
    """Column criterion: lam'_j - mu'_j in {0, 1} for every j."""
    if not contains(lam, mu):
        return False
    cl, cm = conjugate(lam), conjugate(mu)
    cm = tuple(cm) + (0,) * (len(cl) - len(cm))
    return all(a - b in (0, 1) for a, b in zip(cl, cm))


def is_horizontal_strip_profiles(lam: tuple, mu: tuple) -> bool:
    """Profile-shift criterion: drawing both partitions in a common
    bounding box, the 1 for each column sits either at the same position
    in both profiles or one step earlier in lam's."""
    if not contains(lam, mu):
        return False
    rows = max(len(lam), len(mu), 1)
    cols = max(lam[0] if lam else 0, mu[0] if mu else 0, 1)
    pl = _padded_one_positions(lam, rows, cols)
    pm = _padded_one_positions(mu, rows, cols)
    return all(m - l in (0, 1) for l, m in zip(pl, pm))


def hook(lam: tuple, box: tuple) -> int:
    """Hook length arm + leg + 1 of a box in cartesian coordinates."""
    a, l = arm_leg(lam, box)
    return a + l + 1


def boxes(lam: tuple):
    """All boxes of lam as 1-indexed (row, col), row-major."""
    return [(i + 1, j + 1) for i, part in enumerate(lam) for j in range(part)]


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, lexicographically descending."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_upto(n: int):
    """All partitions of size 0..n, by size then lexicographically descending."""
    for m in range(n + 1):
        yield from partitions_of(m)


def add_horizontal_strips(mu: tuple, max_size: int):
    """All lam with lam/mu a horizontal strip and |lam| <= max_size."""
    budget = max_size - size(mu)
    if budget < 0:
        return
    rows = len(mu) + 1

    def rec(i, spare, prefix):
        if i == rows:
            yield normalize(prefix)
            return
        # interlacing: mu_{i-1} >= lam_i >= mu_i (1-indexed)
        lo = mu[i] if i < len(mu) else 0
        hi = mu[i - 1] if i > 0 else lo + spare
        hi = min(hi, lo + spare)
        for v in range(lo, hi + 1):
            prefix.append(v)
            yield from rec(i + 1, spare - (v - lo), prefix)
            prefix.pop()

    yield from rec(0, budget, [])


def remove_horizontal_strips(lam: tuple):
    """All mu with lam/mu a horizontal strip."""

    def rec(i, prefix):
        if i == len(lam):
            yield normalize(prefix)
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for v in range(lo, lam[i] + 1):
            prefix.append(v)
            yield from rec(i + 1, prefix)
            prefix.pop()

    yield from rec(0, [])
