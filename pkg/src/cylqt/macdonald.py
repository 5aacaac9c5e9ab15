"""Small-degree symmetric-function oracle.

Ground truth for the Pieri coefficients: the orthogonal basis is built
by Gram-Schmidt over the monomial basis along a linear extension of
dominance order, with the deformed inner product diagonal on power sums
(each part r contributes (1 - q^r)/(1 - t^r) on top of the classical
normalization).  The one-row kernel sum_r g_r z^r acts by multiplication
(adding strips); its adjoint removes them.  Everything is computed at a
fixed generic rational (q, t) point, so all identities are exact.

Internal representation: a symmetric function is a dict mapping a
partition (its power-sum index) to a Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .cylindric import PieriFactorList
from .partitions import boxes as shape_boxes
from .partitions import arm_leg, is_horizontal_strip, partitions_of, partitions_upto, size


def zee(lam: tuple) -> int:
    """Classical normalization prod i^{m_i} m_i!."""
    out = 1
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for part, m in mult.items():
        out *= part ** m * factorial(m)
    return out


def b_lambda(lam: tuple) -> PieriFactorList:
    """prod over boxes of (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l); the
    reciprocal of the squared norm of the basis element, so that
    norm(lam) * b_lambda(lam) = 1."""
    num, den = [], []
    for box in shape_boxes(lam):
        a, l = arm_leg(lam, box)
        num.append((a, l + 1))
        den.append((a + 1, l))
    return PieriFactorList(num, den)


def _mul_parts(lam: tuple, mu: tuple) -> tuple:
    return tuple(sorted(lam + mu, reverse=True))


class MacdonaldOracle:
    """All computations live at one exact rational (q, t) point and are
    truncated at total degree max_degree."""

    def __init__(self, q, t, max_degree: int):
        self.q = Fraction(q)
        self.t = Fraction(t)
        self.D = int(max_degree)
        self._part_weight = {}
        self._p_in_m = {}
        self._m_in_p = {}
        self._P = None
        self._norms = None
        self._g = None

    # -- power-sum arithmetic ---------------------------------------------

    def _pw(self, r: int) -> Fraction:
        """Inner-product weight of one part: (1 - q^r)/(1 - t^r)."""
        if r not in self._part_weight:
            den = 1 - self.t ** r
            if den == 0:
                raise ValueError("degenerate (q,t): t^%d = 1; pick a generic point" % r)
            self._part_weight[r] = (1 - self.q ** r) / den
        return self._part_weight[r]

    def inner(self, f: dict, g: dict) -> Fraction:
        total = Fraction(0)
        for lam, c in f.items():
            d = g.get(lam)
            if d is None:
                continue
            w = Fraction(zee(lam))
            for r in lam:
                w *= self._pw(r)
            total += c * d * w
        return total

    def multiply(self, f: dict, g: dict) -> dict:
        out = {}
        for lam, c in f.items():
            for mu, d in g.items():
                if size(lam) + size(mu) > self.D:
                    continue
                key = _mul_parts(lam, mu)
                s = out.get(key, 0) + c * d
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        return out

    @staticmethod
    def add(f: dict, g: dict, scale=1) -> dict:
        out = dict(f)
        for k, v in g.items():
            s = out.get(k, 0) + scale * v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return out

    # -- basis conversion ---------------------------------------------------

    def _conversion(self, n: int):
        """Matrices between power sums and monomials in degree n, indexed
        by partitions_sorted(n) (ascending lex, a dominance extension)."""
        if n in self._p_in_m:
            return self._p_in_m[n], self._m_in_p[n]
        parts = self.partitions_sorted(n)
        index = {lam: i for i, lam in enumerate(parts)}
        dim = len(parts)
        mat = [[Fraction(0)] * dim for _ in range(dim)]
        nvars = max(n, 1)
        for i, lam in enumerate(parts):
            poly = {(0,) * nvars: Fraction(1)}
            for r in lam:
                nxt = {}
                for e, c in poly.items():
                    for v in range(nvars):
                        ne = list(e)
                        ne[v] += r
                        ne = tuple(ne)
                        nxt[ne] = nxt.get(ne, 0) + c
                poly = nxt
            for mu in parts:
                rep = tuple(mu) + (0,) * (nvars - len(mu))
                mat[i][index[mu]] = Fraction(poly.get(rep, 0))
        inv = _invert(mat)
        self._p_in_m[n] = mat
        self._m_in_p[n] = inv
        return mat, inv

    @staticmethod
    def partitions_sorted(n: int):
        return sorted(partitions_of(n))

    def monomial_in_p(self, lam: tuple) -> dict:
        _, inv = self._conversion(size(lam))
        parts = self.partitions_sorted(size(lam))
        i = parts.index(lam)
        return {mu: inv[i][j] for j, mu in enumerate(parts) if inv[i][j]}

    def p_to_monomial(self, f: dict) -> dict:
        out = {}
        for lam, c in f.items():
            mat, _ = self._conversion(size(lam))
            parts = self.partitions_sorted(size(lam))
            i = parts.index(lam)
            for j, mu in enumerate(parts):
                if mat[i][j]:
                    s = out.get(mu, 0) + c * mat[i][j]
                    if s:
                        out[mu] = s
                    elif mu in out:
                        del out[mu]
        return out

    # -- the orthogonal basis ------------------------------------------------

    def basis(self):
        """dict lam -> power-sum dict, monic on m_lam, orthogonal."""
        if self._P is not None:
            return self._P
        P, norms = {}, {}
        for n in range(self.D + 1):
            for lam in self.partitions_sorted(n):
                vec = self.monomial_in_p(lam)
                for mu in self.partitions_sorted(n):
                    if mu == lam:
                        break
                    c = self.inner(vec, P[mu])
                    if c:
                        vec = self.add(vec, P[mu], scale=-c / norms[mu])
                nrm = self.inner(vec, vec)
                if nrm == 0:
                    raise ValueError(
                        "degenerate (q,t) point: zero norm at %r; pick a generic point" % (lam,))
                P[lam] = vec
                norms[lam] = nrm
        self._P = P
        self._norms = norms
        return P

    def norm(self, lam: tuple) -> Fraction:
        self.basis()
        return self._norms[lam]

    def basis_in_monomials(self):
        return {lam: self.p_to_monomial(f) for lam, f in self.basis().items()}

    def gram_matrix(self, n: int):
        self.basis()
        parts = self.partitions_sorted(n)
        return [[self.inner(self._P[a], self._P[b]) for b in parts] for a in parts]

    def expand_in_basis(self, f: dict, n: int) -> dict:
        """Coefficients of the degree-n component on the orthogonal basis."""
        self.basis()
        out = {}
        for lam in self.partitions_sorted(n):
            comp = {mu: c for mu, c in f.items() if size(mu) == n}
            c = self.inner(comp, self._P[lam]) / self._norms[lam]
            if c:
                out[lam] = c
        return out

    # -- the one-row kernel and its adjoint -----------------------------------

    def g_row(self, r: int) -> dict:
        """Degree-r piece of the kernel: sum over lam of p_lam / zee(lam)
        times prod (1 - t^part)/(1 - q^part)."""
        if self._g is None:
            self._g = {}
        if r not in self._g:
            out = {}
            for lam in partitions_of(r):
                c = Fraction(1, zee(lam))
                for part in lam:
                    den = 1 - self.q ** part
                    if den == 0:
                        raise ValueError("degenerate (q,t): q^%d = 1" % part)
                    c *= (1 - self.t ** part) / den
                out[lam] = c
            self._g[r] = out
        return self._g[r]

    def _lower(self, f: dict, r: int) -> dict:
        """Adjoint of multiplication by p_r."""
        out = {}
        for lam, c in f.items():
            m = lam.count(r)
            if not m:
                continue
            rest = list(lam)
            rest.remove(r)
            key = tuple(rest)
            amp = c * r * m * self._pw(r)
            s = out.get(key, 0) + amp
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        return out

    def add_strip_components(self, f: dict, max_r=None) -> dict:
        """Multiplication by the kernel, graded by strip size."""
        top = self.D if max_r is None else max_r
        return {r: self.multiply(f, self.g_row(r)) for r in range(top + 1)}

    def remove_strip_components(self, f: dict, max_r=None) -> dict:
        """Adjoint of add_strip_components, graded by strip size."""
        top = self.D if max_r is None else max_r
        out = {}
        for r in range(top + 1):
            acc = {}
            for lam, c in self.g_row(r).items():
                piece = f
                for part in lam:
                    piece = self._lower(piece, part)
                    if not piece:
                        break
                if piece:
                    acc = self.add(acc, piece, scale=c)
            out[r] = acc
        return out

    def extract_pieri_coeffs(self, max_size: int):
        """Tables phi[(lam, mu)] and psi[(lam, mu)] for all horizontal
        strips inside |lam| <= max_size, read off the kernel action on
        the orthogonal basis."""
        self.basis()
        phi, psi = {}, {}
        for mu in partitions_upto(max_size):
            adds = self.add_strip_components(self._P[mu], max_r=max_size - size(mu))
            for r, comp in adds.items():
                for lam, c in self.expand_in_basis(comp, size(mu) + r).items():
                    phi[(lam, mu)] = c
        for lam in partitions_upto(max_size):
            rems = self.remove_strip_components(self._P[lam], max_r=size(lam))
            for r, comp in rems.items():
                for mu, c in self.expand_in_basis(comp, size(lam) - r).items():
                    psi[(lam, mu)] = c
        return phi, psi

    # -- commutation of the kernel with its adjoint ----------------------------

    def commutation_scalars(self, order: int):
        """Coefficients s_k of the scalar series S: s_k is the value of
        remove_k on g_k (acting on the unit)."""
        out = []
        one = {(): Fraction(1)}
        for k in range(order + 1):
            gk = self.multiply(one, self.g_row(k))
            val = self.remove_strip_components(gk, max_r=k)[k].get((), Fraction(0))
            out.append(val)
        return out

    def qpoch_scalars(self, order: int):
        """Reference values prod_{j<=k} (1 - t q^{j-1})/(1 - q^j)."""
        out = [Fraction(1)]
        for j in range(1, order + 1):
            out.append(out[-1] * (1 - self.t * self.q ** (j - 1)) / (1 - self.q ** j))
        return out

    def verify_commutation(self, max_size: int, order: int) -> dict:
        """Check remove_r o add_s = sum_k s_k add_{s-k} o remove_{r-k}
        on every basis element of degree <= max_size, for r, s <= order,
        and that the scalars match the hypergeometric ratio."""
        if max_size + order > self.D:
            raise ValueError("need max_degree >= max_size + order")
        self.basis()
        s = self.commutation_scalars(order)
        ref = self.qpoch_scalars(order)
        scalars_ok = s == ref
        identity_ok = True
        for lam in partitions_upto(max_size):
            f = self._P[lam]
            adds = self.add_strip_components(f, max_r=order)
            rems = self.remove_strip_components(f, max_r=min(order, size(lam)))
            for r in range(order + 1):
                for sdeg in range(order + 1):
                    lhs = self.remove_strip_components(adds[sdeg], max_r=r)[r]
                    rhs = {}
                    for k in range(min(r, sdeg) + 1):
                        if r - k > size(lam):
                            continue
                        piece = self.multiply(rems[r - k], self.g_row(sdeg - k))
                        rhs = self.add(rhs, piece, scale=s[k])
                    if lhs != rhs:
                        identity_ok = False
        return {
            "scalars": s,
            "reference": ref,
            "scalars_match": scalars_ok,
            "operator_identity": identity_ok,
            "pass": scalars_ok and identity_ok,
        }

    # -- evaluations ------------------------------------------------------------

    def eval_points(self, f: dict, xs) -> Fraction:
        """Evaluate at finitely many exact points via power sums."""
        powers = {}
        total = Fraction(0)
        for lam, c in f.items():
            val = c
            for r in lam:
                if r not in powers:
                    powers[r] = sum((Fraction(x) ** r for x in xs), Fraction(0))
                val *= powers[r]
            total += val
        return total

    def translation_check(self, lam: tuple, xs, zval) -> bool:
        """Removing strips realizes evaluation with one extra variable:
        sum_r z^r (remove_r f)(xs) = f(xs + [z])."""
        self.basis()
        f = self._P[lam]
        rems = self.remove_strip_components(f, max_r=size(lam))
        z = Fraction(zval)
        lhs = sum((z ** r * self.eval_points(comp, xs) for r, comp in rems.items()),
                  Fraction(0))
        rhs = self.eval_points(f, list(xs) + [z])
        return lhs == rhs

    def schur_jacobi_trudi(self, lam: tuple) -> dict:
        """det(h_{lam_i - i + j}) in the power-sum dict representation,
        with h_r the classical complete homogeneous sum."""
        ell = len(lam)
        if ell == 0:
            return {(): Fraction(1)}

        def h(r):
            if r < 0:
                return {}
            return {nu: Fraction(1, zee(nu)) for nu in partitions_of(r)}

        from itertools import permutations
        out = {}
        for sigma in permutations(range(ell)):
            sign = _perm_sign(sigma)
            term = {(): Fraction(1)}
            for i in range(ell):
                term = self.multiply(term, h(lam[i] - (i + 1) + (sigma[i] + 1)))
                if not term:
                    break
            if term:
                out = self.add(out, term, scale=sign)
        return out


def _prod(items):
    out = Fraction(1)
    for x in items:
        out *= x
    return out


def _perm_sign(sigma) -> int:
    sign = 1
    for i in range(len(sigma)):
        for j in range(i + 1, len(sigma)):
            if sigma[i] > sigma[j]:
                sign = -sign
    return sign


def _invert(mat):
    """Gauss-Jordan inverse over Fractions."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
