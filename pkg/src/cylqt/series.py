"""Truncated multivariate power series with exact rational coefficients.

Series live in a Space: an ordered variable list, a per-variable degree
bound, and optionally a total-degree cap over a suffix of the variables
(used to truncate the z-block by total degree while q and t keep their
own bounds).  All arithmetic is exact on retained exponents.

Multiplication is the hot kernel.  Exponent vectors are packed into
single integers (mixed radix, no-carry) and the convolution runs in a
compiled Cython kernel when available, falling back to the pure-Python
twin.  Set CYLQT_KERNEL=py or =c to force a choice.
"""

from __future__ import annotations

import os
from fractions import Fraction

from . import _mul_py

try:
    from . import _mul_c
except ImportError:
    _mul_c = None

_choice = os.environ.get("CYLQT_KERNEL", "").strip().lower()
if _choice == "py":
    _kernel = _mul_py
elif _choice == "c":
    if _mul_c is None:
        raise ImportError("CYLQT_KERNEL=c but the compiled kernel is not built")
    _kernel = _mul_c
else:
    _kernel = _mul_c if _mul_c is not None else _mul_py

KERNEL = "c" if _kernel is _mul_c else "py"

_C_KEY_LIMIT = 1 << 62


def kernel_name() -> str:
    return KERNEL


class Space:
    """Variable set, bounds, and packing tables shared by series."""

    __slots__ = ("vars", "bounds", "cap_start", "cap_total", "radices",
                 "strides", "size", "_index", "_compiled_ok")

    def __init__(self, vars, bounds, cap_start=0, cap_total=-1):
        self.vars = tuple(vars)
        self.bounds = tuple(int(b) for b in bounds)
        if len(self.vars) != len(self.bounds):
            raise ValueError("one bound per variable required")
        if any(b < 0 for b in self.bounds):
            raise ValueError("bounds must be non-negative")
        self.cap_start = cap_start
        self.cap_total = cap_total
        self.radices = tuple(2 * b + 1 for b in self.bounds)
        strides = []
        acc = 1
        for r in reversed(self.radices):
            strides.append(acc)
            acc *= r
        self.strides = tuple(reversed(strides))
        self.size = acc
        self._index = {v: i for i, v in enumerate(self.vars)}
        self._compiled_ok = acc * 2 < _C_KEY_LIMIT and len(self.vars) <= 32

    def key(self):
        return (self.vars, self.bounds, self.cap_start, self.cap_total)

    def __eq__(self, other):
        return isinstance(other, Space) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        cap = "" if self.cap_total < 0 else ", cap=%d@%d" % (self.cap_total, self.cap_start)
        return "Space(%s, bounds=%s%s)" % (",".join(self.vars), self.bounds, cap)

    def index(self, var: str) -> int:
        return self._index[var]

    def admissible(self, exps) -> bool:
        if any(e < 0 or e > b for e, b in zip(exps, self.bounds)):
            return False
        if self.cap_total >= 0 and sum(exps[self.cap_start:]) > self.cap_total:
            return False
        return True

    def pack(self, exps) -> int:
        return sum(e * s for e, s in zip(exps, self.strides))

    def unpack(self, key: int) -> tuple:
        return tuple((key // s) % r for s, r in zip(self.strides, self.radices))

    def mul_dicts(self, a: dict, b: dict) -> dict:
        if not a or not b:
            return {}
        a_items = [(self.pack(e), c) for e, c in a.items()]
        b_items = [(self.pack(e), c) for e, c in b.items()]
        if len(a_items) < len(b_items):
            a_items, b_items = b_items, a_items
        kern = _kernel if (self._compiled_ok or _kernel is _mul_py) else _mul_py
        packed = kern.mul_packed(a_items, b_items, self.strides, self.radices,
                                 self.bounds, self.cap_start, self.cap_total)
        return {self.unpack(k): v for k, v in packed.items()}

    # -- series factories ------------------------------------------------

    def zero(self) -> "TruncatedSeries":
        return TruncatedSeries(self, {})

    def one(self) -> "TruncatedSeries":
        return self.constant(1)

    def constant(self, c) -> "TruncatedSeries":
        if not c:
            return self.zero()
        return TruncatedSeries(self, {(0,) * len(self.vars): c})

    def monomial(self, exps, coef=1) -> "TruncatedSeries":
        exps = tuple(exps)
        if not self.admissible(exps):
            return self.zero()
        if not coef:
            return self.zero()
        return TruncatedSeries(self, {exps: coef})

    def var_monomial(self, var: str, power: int = 1, coef=1) -> "TruncatedSeries":
        exps = [0] * len(self.vars)
        exps[self.index(var)] = power
        return self.monomial(exps, coef)


def _grlex_key(exps):
    return (sum(exps), tuple(-e for e in exps))


class TruncatedSeries:
    """Polynomial truncation of a formal power series; immutable in use."""

    __slots__ = ("space", "coeffs")

    def __init__(self, space: Space, coeffs: dict):
        self.space = space
        self.coeffs = coeffs

    def _check(self, other):
        if self.space != other.space:
            raise ValueError("series live in different spaces")

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.space == other.space and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.space, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return TruncatedSeries(self.space, out)

    def __neg__(self):
        return TruncatedSeries(self.space, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            return TruncatedSeries(self.space, self.space.mul_dicts(self.coeffs, other.coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if not c:
            return self.space.zero()
        return TruncatedSeries(self.space, {e: c * v for e, v in self.coeffs.items()})

    def shift(self, exps, coef=1):
        """Multiply by coef * x^exps, dropping terms leaving the space."""
        exps = tuple(exps)
        out = {}
        adm = self.space.admissible
        for e, c in self.coeffs.items():
            ne = tuple(a + b for a, b in zip(e, exps))
            if adm(ne):
                out[ne] = c * coef
        return TruncatedSeries(self.space, out)

    def coefficient(self, exps):
        return self.coeffs.get(tuple(exps), 0)

    def constant_term(self):
        return self.coeffs.get((0,) * len(self.space.vars), 0)

    def inverse(self) -> "TruncatedSeries":
        """Inverse of a series whose constant term is a unit."""
        c0 = self.constant_term()
        if not c0:
            raise ValueError("inverse requires a unit constant term")
        inv0 = Fraction(1, 1) / c0 if not isinstance(c0, int) or abs(c0) != 1 else (1 if c0 == 1 else -1)
        # g has zero constant term, so its powers vanish within the bounds
        g = self.space.one() - self.scale(inv0)
        acc = self.space.one()
        term = self.space.one()
        while True:
            term = term * g
            if term.is_zero():
                break
            acc = acc + term
        return acc.scale(inv0)

    def substitute(self, images: dict, target: Space) -> "TruncatedSeries":
        """Map each variable to a LaurentMonomial over the target space.

        Unmapped variables must exist in the target with unchanged name.
        A retained term mapping to a negative exponent is an error; terms
        leaving the target bounds are truncated away (the caller must
        arrange source bounds to cover the preimage of everything kept).
        """
        plans = []
        for i, v in enumerate(self.space.vars):
            if v in images:
                mono = images[v]
                plans.append((i, mono.coef, mono.exps_in(target)))
            else:
                if v not in target._index:
                    raise ValueError("variable %r has no image and is absent from the target" % v)
                exps = [0] * len(target.vars)
                exps[target.index(v)] = 1
                plans.append((i, 1, tuple(exps)))
        out = {}
        nzero = len(target.vars)
        for e, c in self.coeffs.items():
            ne = [0] * nzero
            coef = c
            for i, mcoef, mexps in plans:
                k = e[i]
                if k == 0:
                    continue
                if mcoef != 1:
                    coef = coef * mcoef ** k
                for j, me in enumerate(mexps):
                    if me:
                        ne[j] += me * k
            if any(x < 0 for x in ne):
                raise ValueError("substitution produced a negative exponent")
            ne = tuple(ne)
            if not target.admissible(ne):
                continue
            s = out.get(ne, 0) + coef
            if s:
                out[ne] = s
            elif ne in out:
                del out[ne]
        return TruncatedSeries(target, out)

    def eval_at(self, point: dict):
        """Evaluate some variables at exact rationals.

        Returns a series over the remaining variables, or a plain number
        when none remain.  Capped variables cannot be evaluated.
        """
        idx = []
        for v in point:
            i = self.space.index(v)
            if self.space.cap_total >= 0 and i >= self.space.cap_start:
                raise ValueError("cannot evaluate a variable under the total cap")
            idx.append((i, Fraction(point[v])))
        keep = [i for i in range(len(self.space.vars)) if self.space.vars[i] not in point]
        if keep:
            new_space = Space(
                tuple(self.space.vars[i] for i in keep),
                tuple(self.space.bounds[i] for i in keep),
                cap_start=max(0, self.space.cap_start - (len(self.space.vars) - len(keep))),
                cap_total=self.space.cap_total,
            )
        out = {}
        const = 0
        for e, c in self.coeffs.items():
            val = c
            for i, x in idx:
                if e[i]:
                    val = val * x ** e[i]
            if not keep:
                const += val
                continue
            ne = tuple(e[i] for i in keep)
            s = out.get(ne, 0) + val
            if s:
                out[ne] = s
            elif ne in out:
                del out[ne]
        if not keep:
            return const
        return TruncatedSeries(new_space, out)

    def terms(self):
        """Terms sorted in graded-lex order."""
        return sorted(self.coeffs.items(), key=lambda item: _grlex_key(item[0]))

    def first_mismatch(self, other):
        """Earliest graded-lex exponent where the two series differ."""
        self._check(other)
        keys = set(self.coeffs) | set(other.coeffs)
        for e in sorted(keys, key=_grlex_key):
            a, b = self.coeffs.get(e, 0), other.coeffs.get(e, 0)
            if a != b:
                return e, a, b
        return None

    def serialize(self):
        """List of (exponent vector, numerator, denominator) triples."""
        out = []
        for e, c in self.terms():
            f = Fraction(c)
            out.append([list(e), f.numerator, f.denominator])
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        bits = []
        for e, c in self.terms():
            f = Fraction(c)
            factors = []
            for v, k in zip(self.space.vars, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append("%s^%d" % (v, k))
            if not factors:
                bits.append(str(f))
                continue
            mono = "*".join(factors)
            if f == 1:
                bits.append(mono)
            elif f == -1:
                bits.append("-" + mono)
            else:
                bits.append("%s*%s" % (f, mono))
        text = " + ".join(bits)
        return text.replace("+ -", "- ")

    __repr__ = __str__


class LaurentMonomial:
    """coef * prod(var^exp) with integer exponents of either sign."""

    __slots__ = ("coef", "exps")

    def __init__(self, exps: dict, coef=1):
        self.coef = coef
        self.exps = {v: int(e) for v, e in exps.items() if e}

    def __mul__(self, other):
        exps = dict(self.exps)
        for v, e in other.exps.items():
            exps[v] = exps.get(v, 0) + e
        return LaurentMonomial(exps, self.coef * other.coef)

    def __pow__(self, k: int):
        return LaurentMonomial({v: e * k for v, e in self.exps.items()}, self.coef ** k)

    def __eq__(self, other):
        return isinstance(other, LaurentMonomial) and (self.coef, self.exps) == (other.coef, other.exps)

    def __repr__(self):
        body = "*".join("%s^%d" % (v, e) for v, e in sorted(self.exps.items()))
        return "%s*%s" % (self.coef, body or "1")

    def exps_in(self, space: Space) -> tuple:
        out = [0] * len(space.vars)
        for v, e in self.exps.items():
            out[space.index(v)] = e
        return tuple(out)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.exps.values())

    def degree_in(self, vars) -> int:
        return sum(e for v, e in self.exps.items() if v in vars)

    def to_series(self, space: Space) -> TruncatedSeries:
        if not self.is_polynomial():
            raise ValueError("negative exponents cannot enter a power series")
        return space.monomial(self.exps_in(space), self.coef)


class SignedAlphabet:
    """Finite signed multiset of q^n t^m monomials; the argument of omega.

    Canonical form merges equal (n, m) keys and drops zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged = {}
        if isinstance(terms, dict):
            terms = terms.items()
        for item in terms:
            if len(item) == 2 and isinstance(item[0], tuple):
                (n, m), c = item
            else:
                c, n, m = item
            if n < 0 or m < 0:
                raise ValueError("alphabet exponents must be non-negative")
            key = (n, m)
            merged[key] = merged.get(key, 0) + c
        self.terms = {k: v for k, v in merged.items() if v}

    def canonical(self) -> tuple:
        return tuple(sorted((n, m, c) for (n, m), c in self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, SignedAlphabet) and self.terms == other.terms

    def __hash__(self):
        return hash(self.canonical())

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) + c
        return SignedAlphabet(merged)

    def __neg__(self):
        return SignedAlphabet({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __repr__(self):
        if not self.terms:
            return "SignedAlphabet({})"
        bits = ["%+d*q^%d*t^%d" % (c, n, m) for (n, m), c in sorted(self.terms.items())]
        return "SignedAlphabet(%s)" % " ".join(bits)


Q_MINUS_T = SignedAlphabet({(1, 0): 1, (0, 1): -1})


def scale_alphabet(a: SignedAlphabet, b: SignedAlphabet) -> SignedAlphabet:
    """Formal product of alphabets: exponents add, coefficients multiply."""
    terms = {}
    for (n1, m1), c1 in a.terms.items():
        for (n2, m2), c2 in b.terms.items():
            key = (n1 + n2, m1 + m2)
            terms[key] = terms.get(key, 0) + c1 * c2
    return SignedAlphabet(terms)


def _qt_factor(space: Space, n: int, m: int) -> TruncatedSeries:
    """1 - q^n t^m in a space whose first two variables are q, t."""
    exps = [0] * len(space.vars)
    exps[space.index("q")] = n
    exps[space.index("t")] = m
    return space.one() - space.monomial(exps)


def _qt_inverse_factor(space: Space, n: int, m: int) -> TruncatedSeries:
    """Geometric series for (1 - q^n t^m)^(-1), truncated."""
    exps = [0] * len(space.vars)
    exps[space.index("q")] = n
    exps[space.index("t")] = m
    exps = tuple(exps)
    acc = space.one()
    cur = exps
    while space.admissible(cur):
        acc = acc + space.monomial(cur)
        cur = tuple(a + b for a, b in zip(cur, exps))
    return acc


def omega(a: SignedAlphabet, space: Space) -> TruncatedSeries:
    """Truncation of prod (1 - q^n t^m)^(-c) over the alphabet terms.

    Multiplicative in the alphabet; a q^0 t^0 term is a zero factor and
    is rejected.
    """
    if (0, 0) in a.terms:
        raise ValueError("omega is undefined on an alphabet with a constant term")
    acc = space.one()
    for (n, m), c in sorted(a.terms.items()):
        if c > 0:
            piece = _qt_inverse_factor(space, n, m)
            for _ in range(c):
                acc = acc * piece
        else:
            piece = _qt_factor(space, n, m)
            for _ in range(-c):
                acc = acc * piece
    return acc


def pochhammer_ratio(mono: LaurentMonomial, space: Space) -> TruncatedSeries:
    """Truncation of (t*a; q)_inf / (a; q)_inf for a monomial argument a.

    Expanded with the q-binomial theorem: sum_k a^k (t;q)_k / (q;q)_k.
    The argument must have positive total degree outside q and t so the
    sum terminates within the bounds.
    """
    zvars = [v for v in space.vars if v not in ("q", "t")]
    if mono.degree_in(zvars) <= 0 or not mono.is_polynomial():
        raise ValueError("argument must have positive degree in the z variables")
    acc = space.one()
    coef = space.one()
    power = space.one()
    k = 0
    while True:
        k += 1
        power = power * mono.to_series(space)
        if power.is_zero():
            break
        num = _qt_factor(space, k - 1, 1)      # 1 - t q^{k-1}
        den = _qt_inverse_factor(space, k, 0)  # (1 - q^k)^{-1}
        coef = coef * num * den
        acc = acc + power * coef
    return acc
