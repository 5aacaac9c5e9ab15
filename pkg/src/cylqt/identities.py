"""Both sides of the weighted cylindric enumeration identity, refined
and unrefined, plus its classical specializations.

The right-hand side is assembled from the grouped product

    prod_{m>=1}  1/(1-w^m)
               * prod_{inversions (i,j)}   R(u_i u_j w^{m-1})
               * prod_{wrap pairs (a,b)}   R(u_a u_b w^m)

with R(x) = (t x; q)_inf / (x; q)_inf expanded by the q-binomial
theorem, w the product of all refined variables (w = z^T unrefined),
and u_i u_j the interval monomial z_{i+1}...z_j for an inversion i < j
(its reciprocal against w for a wrap pair).  The product over m is
finite within any truncation since every argument has positive total
z-degree.

Two exact coefficient modes cross-validate each other: q,t fixed at
generic rationals (weights as exact factor products) or q,t kept as
truncated series variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cylindric import (
    CylindricPlanePartition,
    PieriFactorList,
    check_profile,
    enumerate_cpps,
    macdonald_weight,
)
from .partitions import size
from .series import Space, TruncatedSeries


def inversion_pairs(profile: str):
    """(i, j) with i < j, profile[i] = 1, profile[j] = 0."""
    return [(i, j) for i in range(len(profile)) for j in range(i + 1, len(profile))
            if profile[i] == "1" and profile[j] == "0"]


def wrap_pairs(profile: str):
    """(a, b) with a < b, profile[a] = 0, profile[b] = 1: the pairs that
    invert only around the seam of the cylinder."""
    return [(a, b) for a in range(len(profile)) for b in range(a + 1, len(profile))
            if profile[a] == "0" and profile[b] == "1"]


class EvalMode:
    """q and t fixed at exact rationals; series carry only z variables."""

    qt_len = 0

    def __init__(self, q, t):
        self.q = Fraction(q)
        self.t = Fraction(t)
        if (self.q, self.t) == (1, 1):
            raise ValueError("(q,t) = (1,1) degenerates every factor")
        self._poch = [Fraction(1)]
        self._weights = {}

    def describe(self) -> str:
        return "eval q=%s t=%s" % (self.q, self.t)

    def make_space(self, zvars, zbound, ztotal=-1) -> Space:
        return Space(zvars, (zbound,) * len(zvars), cap_start=0, cap_total=ztotal)

    def weight_terms(self, factors: PieriFactorList):
        key = factors.cancelled_key()
        if key not in self._weights:
            self._weights[key] = factors.eval_at(self.q, self.t)
        return [((), self._weights[key])]

    def qpoch_terms(self, k: int):
        while len(self._poch) <= k:
            j = len(self._poch)
            num = 1 - self.t * self.q ** (j - 1)
            den = 1 - self.q ** j
            self._poch.append(self._poch[-1] * num / den)
        return [((), self._poch[k])]


class SeriesMode:
    """q and t as truncated series variables with exact integer output."""

    qt_len = 2

    def __init__(self, qt_degree: int):
        self.qt_degree = int(qt_degree)
        self._qt_space = Space(("q", "t"), (self.qt_degree, self.qt_degree))
        self._inv_factors = {}
        self._poch = [self._qt_space.one()]
        self._weights = {}

    def describe(self) -> str:
        return "series deg(q),deg(t)<=%d" % self.qt_degree

    def make_space(self, zvars, zbound, ztotal=-1) -> Space:
        return Space(("q", "t") + tuple(zvars),
                     (self.qt_degree, self.qt_degree) + (zbound,) * len(zvars),
                     cap_start=2, cap_total=ztotal)

    def _factor(self, a: int, b: int) -> TruncatedSeries:
        sp = self._qt_space
        return sp.one() - sp.monomial((a, b))

    def _inverse_factor(self, a: int, b: int) -> TruncatedSeries:
        if (a, b) not in self._inv_factors:
            sp = self._qt_space
            acc = sp.one()
            cur = (a, b)
            while sp.admissible(cur):
                acc = acc + sp.monomial(cur)
                cur = (cur[0] + a, cur[1] + b)
            self._inv_factors[(a, b)] = acc
        return self._inv_factors[(a, b)]

    def weight_terms(self, factors: PieriFactorList):
        key = factors.cancelled_key()
        if key not in self._weights:
            num, den = key
            acc = self._qt_space.one()
            for a, b in num:
                acc = acc * self._factor(a, b)
            for a, b in den:
                acc = acc * self._inverse_factor(a, b)
            self._weights[key] = list(acc.coeffs.items())
        return self._weights[key]

    def qpoch_terms(self, k: int):
        while len(self._poch) <= k:
            j = len(self._poch)
            nxt = self._poch[-1] * self._factor(j - 1, 1) * self._inverse_factor(j, 0)
            self._poch.append(nxt)
        return list(self._poch[k].coeffs.items())


def _accumulate(space: Space, acc: dict, head_terms, zexps: tuple):
    """acc += sum of head terms shifted into the z-block at zexps."""
    pad = space.cap_start
    for qt_e, val in head_terms:
        full = tuple(qt_e) + tuple(zexps) if pad else tuple(zexps)
        if not space.admissible(full):
            continue
        s = acc.get(full, 0) + val
        if s:
            acc[full] = s
        elif full in acc:
            del acc[full]


def _zvars(profile: str, refined: bool):
    if refined:
        return tuple("z%d" % k for k in range(len(profile)))
    return ("z",)


def lhs_series(profile: str, max_weight: int, mode, refined: bool = False,
               empty_root_only: bool = False) -> TruncatedSeries:
    """Sum of weight(c) * z^|c| over cylindric plane partitions of the
    profile, the monomial refined to prod z_k^{|mu^k|}, k = 0..T-1, when
    requested.  With empty_root_only the sum restricts to mu^0 = (): the
    reverse-plane-partition case."""
    check_profile(profile)
    T = len(profile)
    space = mode.make_space(_zvars(profile, refined), max_weight, ztotal=max_weight)
    grouped = {}
    for c in enumerate_cpps(profile, max_weight):
        if empty_root_only and c.mu[0]:
            continue
        if refined:
            zexps = tuple(size(c.mu[k]) for k in range(T))
        else:
            zexps = (c.weight(),)
        factors = macdonald_weight(c)
        grouped.setdefault(factors.cancelled_key(), (factors, []))[1].append(zexps)
    acc = {}
    for factors, shifts in grouped.values():
        head = mode.weight_terms(factors)
        for zexps in shifts:
            _accumulate(space, acc, head, zexps)
    return TruncatedSeries(space, acc)


def _admissible_z(space: Space, zexps) -> bool:
    return space.admissible((0,) * space.cap_start + tuple(zexps))


def _geometric(space: Space, zexps) -> TruncatedSeries:
    """1/(1 - x^zexps) truncated, integer coefficients."""
    pad = (0,) * space.cap_start
    acc = {pad + (0,) * (len(space.vars) - space.cap_start): 1}
    cur = tuple(zexps)
    while _admissible_z(space, cur):
        acc[pad + cur] = 1
        cur = tuple(a + b for a, b in zip(cur, zexps))
    return TruncatedSeries(space, acc)


def _pochhammer_factor(space: Space, mode, zexps) -> TruncatedSeries:
    """R(x^zexps) = sum_k x^(k*zexps) * prod_{j<=k} (1-t q^{j-1})/(1-q^j)."""
    acc = {}
    _accumulate(space, acc, mode.qpoch_terms(0), (0,) * (len(space.vars) - space.cap_start))
    k = 0
    cur = tuple(zexps)
    while _admissible_z(space, cur):
        k += 1
        _accumulate(space, acc, mode.qpoch_terms(k), cur)
        cur = tuple(a + b for a, b in zip(cur, zexps))
    return TruncatedSeries(space, acc)


def rhs_series(profile: str, z_bound: int, mode, refined: bool = False) -> TruncatedSeries:
    """Truncated grouped product for the profile."""
    check_profile(profile)
    T = len(profile)
    zvars = _zvars(profile, refined)
    nz = len(zvars)
    space = mode.make_space(zvars, z_bound, ztotal=z_bound)

    if refined:
        w = (1,) * nz

        def interval(lo, hi):  # z_{lo+1} ... z_{hi}
            return tuple(1 if lo < k <= hi else 0 for k in range(nz))
    else:
        w = (T,)

        def interval(lo, hi):
            return (hi - lo,)

    inv = [interval(i, j) for i, j in inversion_pairs(profile)]
    wrap = [interval(a, b) for a, b in wrap_pairs(profile)]

    acc = space.one()
    m = 1
    while True:
        wm = tuple(e * m for e in w)
        wm_prev = tuple(e * (m - 1) for e in w)
        progressed = False
        if _admissible_z(space, wm):
            acc = acc * _geometric(space, wm)
            progressed = True
        for mono in inv:
            arg = tuple(a + b for a, b in zip(mono, wm_prev))
            if _admissible_z(space, arg):
                acc = acc * _pochhammer_factor(space, mode, arg)
                progressed = True
        for mono in wrap:
            arg = tuple(b - a for a, b in zip(mono, wm))
            if _admissible_z(space, arg):
                acc = acc * _pochhammer_factor(space, mode, arg)
                progressed = True
        if not progressed:
            break
        m += 1
    return acc


@dataclass
class IdentityReport:
    profile: str
    z_bound: int
    mode: str
    refined: bool
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    mismatch: tuple | None

    @property
    def passed(self) -> bool:
        return self.mismatch is None

    def to_json_dict(self) -> dict:
        out = {
            "profile": self.profile,
            "z_bound": self.z_bound,
            "mode": self.mode,
            "refined": self.refined,
            "pass": self.passed,
            "lhs": self.lhs.serialize(),
            "rhs": self.rhs.serialize(),
        }
        if self.mismatch is not None:
            e, a, b = self.mismatch
            out["first_mismatch"] = {
                "exponents": list(e),
                "lhs": [Fraction(a).numerator, Fraction(a).denominator],
                "rhs": [Fraction(b).numerator, Fraction(b).denominator],
            }
        return out


def verify(profile: str, z_bound: int, mode, refined: bool = False) -> IdentityReport:
    """Compare both sides coefficientwise within the truncation."""
    lhs = lhs_series(profile, z_bound, mode, refined=refined)
    rhs = rhs_series(profile, z_bound, mode, refined=refined)
    return IdentityReport(profile, z_bound, mode.describe(), refined,
                          lhs, rhs, lhs.first_mismatch(rhs))


def rpp_series(profile: str, max_weight: int, mode):
    """Reverse-plane-partition restriction mu^0 = mu^T = (): the left
    side sums those weights only; the right side is the single product
    over inversions, R(z^{j-i})."""
    check_profile(profile)
    lhs = lhs_series(profile, max_weight, mode, empty_root_only=True)
    space = mode.make_space(("z",), max_weight, ztotal=max_weight)
    acc = space.one()
    for i, j in inversion_pairs(profile):
        acc = acc * _pochhammer_factor(space, mode, (j - i,))
    return lhs, acc


def stanley_product(profile: str, z_bound: int) -> TruncatedSeries:
    """prod over inversions of 1/(1 - z^{j-i}), truncated; the q = t
    collapse of the reverse-plane-partition product."""
    space = Space(("z",), (z_bound,))
    acc = space.one()
    for i, j in inversion_pairs(profile):
        acc = acc * _geometric(space, (j - i,))
    return acc


def borodin_product(profile: str, z_bound: int) -> TruncatedSeries:
    """Counting series of cylindric plane partitions: the q = t collapse
    of the full product, with integer coefficients."""
    check_profile(profile)
    T = len(profile)
    space = Space(("z",), (z_bound,))
    acc = space.one()
    n = 0
    while True:
        progressed = False
        if n >= 1 and n * T <= z_bound:
            acc = acc * _geometric(space, (n * T,))
            progressed = True
        for i, j in inversion_pairs(profile):
            d = j - i + n * T
            if d <= z_bound:
                acc = acc * _geometric(space, (d,))
                progressed = True
        for a, b in wrap_pairs(profile):
            d = a - b + (n + 1) * T
            if d <= z_bound:
                acc = acc * _geometric(space, (d,))
                progressed = True
        if n >= 1 and not progressed:
            break
        n += 1
    return acc


def counting_series(profile: str, max_weight: int) -> TruncatedSeries:
    """Plain enumeration counts as a z-series (independent of weights)."""
    space = Space(("z",), (max_weight,))
    acc = {}
    for c in enumerate_cpps(profile, max_weight):
        e = (c.weight(),)
        acc[e] = acc.get(e, 0) + 1
    return TruncatedSeries(space, acc)


@lru_cache(maxsize=None)
def plane_partition_counts(max_weight: int) -> tuple:
    """Number of plane partitions of each n <= max_weight, by direct
    enumeration of row sequences (each row a partition, rows decreasing
    componentwise)."""
    counts = [0] * (max_weight + 1)

    def rows_under(ceiling, budget):
        # partitions fitting under the ceiling row with size <= budget
        out = [()]
        def rec(i, spare, prefix):
            for v in range(1, min(ceiling[i], prefix[-1] if prefix else ceiling[i], spare) + 1):
                rec_next = prefix + [v]
                out.append(tuple(rec_next))
                if i + 1 < len(ceiling):
                    rec(i + 1, spare - v, rec_next)
        if ceiling:
            rec(0, budget, [])
        return out

    def descend(prev, used):
        counts[used] += 1
        for row in rows_under(prev, max_weight - used):
            if row:
                descend(row, used + sum(row))

    from .partitions import partitions_upto
    for first in partitions_upto(max_weight):
        if first:
            descend(first, size(first))
    counts[0] += 1
    return tuple(counts)


def macmahon_product(z_bound: int) -> TruncatedSeries:
    """prod_{n>=1} (1 - z^n)^(-n), truncated."""
    space = Space(("z",), (z_bound,))
    acc = space.one()
    for n in range(1, z_bound + 1):
        g = _geometric(space, (n,))
        for _ in range(n):
            acc = acc * g
    return acc


def macmahon_check(a: int, b: int, n_max: int) -> dict:
    """Counts of reverse plane partitions for the profile 1^a 0^b at
    q = t against the boxed-product series and direct plane-partition
    enumeration.  Requires a, b >= n_max so the truncation is stable."""
    if a < n_max or b < n_max:
        raise ValueError("need a, b >= n_max for a stabilized truncation")
    profile = "1" * a + "0" * b
    mode = EvalMode(Fraction(1, 3), Fraction(1, 3))
    lhs, _ = rpp_series(profile, n_max, mode)
    rpp_counts = [lhs.coefficient((n,)) for n in range(n_max + 1)]
    prod = macmahon_product(n_max)
    prod_counts = [prod.coefficient((n,)) for n in range(n_max + 1)]
    direct = list(plane_partition_counts(n_max))
    return {
        "profile": profile,
        "coefficients": rpp_counts,
        "product": prod_counts,
        "direct": direct,
        "pass": rpp_counts == prod_counts == direct,
    }
