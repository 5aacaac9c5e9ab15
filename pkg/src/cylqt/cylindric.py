"""Cylindric plane partitions: validation, weight, enumeration, and the
Pieri-product weight function.

A cylindric plane partition with profile pi (a binary string of length
T >= 1) is a sequence (mu^0, ..., mu^T) of partitions with mu^0 = mu^T
such that step k (1-indexed, governed by pi[k-1]) adds a horizontal
strip when the bit is 1 and removes one when it is 0.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import (
    add_horizontal_strips,
    conjugate,
    is_horizontal_strip,
    normalize,
    partitions_upto,
    remove_horizontal_strips,
    size,
)
from .series import SignedAlphabet


class InvalidCylindricPartition(ValueError):
    """Raised with the failing step index and direction."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


def check_profile(profile: str) -> str:
    if not profile or any(ch not in "01" for ch in profile):
        raise InvalidCylindricPartition(
            "profile must be a non-empty string over {0,1}: %r" % (profile,))
    return profile


class CylindricPlanePartition:
    """Profile plus the interlacing sequence (mu^0, ..., mu^T)."""

    __slots__ = ("profile", "mu")

    def __init__(self, profile: str, mu):
        self.profile = profile
        self.mu = tuple(tuple(p) for p in mu)

    @property
    def period(self) -> int:
        return len(self.profile)

    def weight(self) -> int:
        """Number of cubes: |mu^1| + ... + |mu^T|, mu^0 excluded."""
        return sum(size(p) for p in self.mu[1:])

    def sort_key(self):
        return (self.weight(), self.mu)

    def __eq__(self, other):
        return (isinstance(other, CylindricPlanePartition)
                and self.profile == other.profile and self.mu == other.mu)

    def __hash__(self):
        return hash((self.profile, self.mu))

    def __repr__(self):
        return "CylindricPlanePartition(%r, %r)" % (self.profile, list(self.mu))

    def to_json_dict(self) -> dict:
        return {"profile": self.profile, "mu": [list(p) for p in self.mu]}


def validate(profile: str, sequence) -> CylindricPlanePartition:
    """Check Definition-style validity and return the value.

    Reports the first failing step k (1-indexed) and its direction.
    """
    check_profile(profile)
    T = len(profile)
    mu = [normalize(p) for p in sequence]
    if len(mu) != T + 1:
        raise InvalidCylindricPartition(
            "expected %d partitions for period %d, got %d" % (T + 1, T, len(mu)))
    if mu[0] != mu[T]:
        raise InvalidCylindricPartition("mu^0 = %r differs from mu^T = %r" % (mu[0], mu[T]))
    for k in range(1, T + 1):
        if profile[k - 1] == "1":
            if not is_horizontal_strip(mu[k], mu[k - 1]):
                raise InvalidCylindricPartition(
                    "mu^%d / mu^%d is not a horizontal strip (bit 1 at step %d)"
                    % (k, k - 1, k), step=k)
        else:
            if not is_horizontal_strip(mu[k - 1], mu[k]):
                raise InvalidCylindricPartition(
                    "mu^%d / mu^%d is not a horizontal strip (bit 0 at step %d)"
                    % (k - 1, k, k), step=k)
    return CylindricPlanePartition(profile, mu)


def from_json_dict(data: dict) -> CylindricPlanePartition:
    return validate(data["profile"], data["mu"])


def enumerate_cpps(profile: str, max_weight: int):
    """Every cylindric plane partition of the profile with weight <=
    max_weight, exactly once, ordered by weight then lexicographically
    on the partition sequence.

    Depth-first over mu^1..mu^T with budget pruning; the root mu^0 runs
    over all partitions of size <= max_weight, which suffices because
    the weight includes |mu^T| = |mu^0|.
    """
    check_profile(profile)
    T = len(profile)
    results = []
    for mu0 in partitions_upto(max_weight):
        root_size = size(mu0)
        if root_size > max_weight:
            continue
        stack = [mu0]

        def dfs(k, used):
            if k == T:
                prev = stack[-1]
                if used + root_size > max_weight:
                    return
                if profile[T - 1] == "1":
                    ok = is_horizontal_strip(mu0, prev)
                else:
                    ok = is_horizontal_strip(prev, mu0)
                if ok:
                    results.append(CylindricPlanePartition(profile, stack + [mu0]))
                return
            prev = stack[-1]
            cap = max_weight - used - root_size
            if profile[k - 1] == "1":
                candidates = add_horizontal_strips(prev, cap)
            else:
                candidates = (nu for nu in remove_horizontal_strips(prev) if size(nu) <= cap)
            for nxt in candidates:
                stack.append(nxt)
                dfs(k + 1, used + size(nxt))
                stack.pop()

        dfs(1, 0)
    results.sort(key=CylindricPlanePartition.sort_key)
    return results


class PieriFactorList:
    """A product of factors (1 - q^a t^b) over those in another list.

    Both coefficient modes evaluate it; (a, b) = (0, 0) never occurs.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=()):
        self.num = tuple(sorted(num))
        self.den = tuple(sorted(den))
        if (0, 0) in self.num or (0, 0) in self.den:
            raise ValueError("zero factor (1 - q^0 t^0) in a Pieri product")

    def __mul__(self, other):
        return PieriFactorList(self.num + other.num, self.den + other.den)

    def __eq__(self, other):
        return (isinstance(other, PieriFactorList)
                and self.cancelled_key() == other.cancelled_key())

    def __hash__(self):
        return hash(self.cancelled_key())

    def cancelled(self) -> "PieriFactorList":
        """Remove factor pairs common to numerator and denominator."""
        num = list(self.num)
        den = []
        for f in self.den:
            try:
                num.remove(f)
            except ValueError:
                den.append(f)
        return PieriFactorList(num, den)

    def cancelled_key(self):
        c = self.cancelled()
        return (c.num, c.den)

    def is_one(self) -> bool:
        c = self.cancelled()
        return not c.num and not c.den

    def merges_at_q_equals_t(self) -> bool:
        """True iff numerator and denominator factor multisets agree
        after the merge (a, b) -> a + b, i.e. the product is 1 at q=t."""
        return sorted(a + b for a, b in self.num) == sorted(a + b for a, b in self.den)

    def eval_at(self, q, t) -> Fraction:
        q, t = Fraction(q), Fraction(t)
        val = Fraction(1)
        for a, b in self.num:
            val *= 1 - q ** a * t ** b
        for a, b in self.den:
            f = 1 - q ** a * t ** b
            if f == 0:
                raise ZeroDivisionError("denominator factor vanishes at (q,t)=(%s,%s)" % (q, t))
            val /= f
        return val

    def to_json_dict(self) -> dict:
        return {"num": [list(f) for f in self.num], "den": [list(f) for f in self.den]}

    def __repr__(self):
        fmt = lambda fs: "*".join("(1-q^%dt^%d)" % f for f in fs) or "1"
        return "%s / %s" % (fmt(self.num), fmt(self.den))


ONE_FACTORS = PieriFactorList()


def _strip_columns(lam: tuple, mu: tuple):
    """Columns j (1-indexed) where lam is taller than mu."""
    cl, cm = conjugate(lam), conjugate(mu)
    cm = tuple(cm) + (0,) * (len(cl) - len(cm))
    return {j + 1 for j, (a, b) in enumerate(zip(cl, cm)) if a > b}


def _stat_alphabet(lam: tuple, cols, inside: bool) -> SignedAlphabet:
    """Sum of q^arm t^leg over boxes of lam whose column is in cols
    (inside=True) or not in cols (inside=False)."""
    conj = conjugate(lam)
    terms = {}
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            if (j in cols) != inside:
                continue
            key = (part - j, conj[j - 1] - i)
            terms[key] = terms.get(key, 0) + 1
    return SignedAlphabet(terms)


def phi_alphabet(lam: tuple, mu: tuple) -> SignedAlphabet:
    """Alphabet D with phi_{lam/mu} = Omega[(q - t) D]: boxes of lam in
    the strip columns minus boxes of mu in the strip columns."""
    cols = _strip_columns(lam, mu)
    return _stat_alphabet(lam, cols, True) - _stat_alphabet(mu, cols, True)


def psi_alphabet(lam: tuple, mu: tuple) -> SignedAlphabet:
    """Alphabet D with psi_{lam/mu} = Omega[(q - t) D]: boxes of mu off
    the strip columns minus boxes of lam off the strip columns."""
    cols = _strip_columns(lam, mu)
    return _stat_alphabet(mu, cols, False) - _stat_alphabet(lam, cols, False)


def factors_from_alphabet(alpha: SignedAlphabet) -> PieriFactorList:
    """Omega[(q - t) * alpha] as an explicit factor ratio: a term
    c * q^a t^l contributes ((1 - q^a t^{l+1}) / (1 - q^{a+1} t^l))^c."""
    num, den = [], []
    for (a, l), c in alpha.terms.items():
        up, down = (num, den) if c > 0 else (den, num)
        up.extend([(a, l + 1)] * abs(c))
        down.extend([(a + 1, l)] * abs(c))
    return PieriFactorList(num, den)


@lru_cache(maxsize=None)
def pieri_phi(lam: tuple, mu: tuple) -> PieriFactorList:
    """Coefficient attached to adding the horizontal strip lam/mu.

    Orientation pinned by the degree-1 case phi_{(1)/()} = (1-t)/(1-q),
    which the Gram-Schmidt oracle and the z^1 coefficient of the product
    side both produce.
    """
    if not is_horizontal_strip(lam, mu):
        raise ValueError("%r / %r is not a horizontal strip" % (lam, mu))
    return factors_from_alphabet(phi_alphabet(lam, mu))


@lru_cache(maxsize=None)
def pieri_psi(lam: tuple, mu: tuple) -> PieriFactorList:
    """Coefficient attached to removing the horizontal strip lam/mu."""
    if not is_horizontal_strip(lam, mu):
        raise ValueError("%r / %r is not a horizontal strip" % (lam, mu))
    return factors_from_alphabet(psi_alphabet(lam, mu))


def macdonald_weight(c: CylindricPlanePartition) -> PieriFactorList:
    """Product over the cylinder steps: phi for each added strip, psi
    for each removed strip.  Evaluates to 1 at q = t."""
    acc = ONE_FACTORS
    for k in range(1, c.period + 1):
        if c.profile[k - 1] == "1":
            acc = acc * pieri_phi(c.mu[k], c.mu[k - 1])
        else:
            acc = acc * pieri_psi(c.mu[k - 1], c.mu[k])
    return acc.cancelled()
