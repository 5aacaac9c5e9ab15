"""Non-intersecting lattice paths on the cylinder and the peak/valley
alphabet of the weight function.

The cylinder of period T is the triangular lattice of points (x, y) with
x + y even, 0 <= x <= T.  A path starts at an even height and moves up
or down one unit per step; a family is non-intersecting with the paths
listed bottom to top, and closes cyclically (the height gaps at x = 0
and x = T agree).  Path i tracks column i of the partitions, so the
column-x reading decodes mu^x: scanning upward from the bottom path
(inclusive) to the top path (exclusive), an occupied vertex records a 1
and an unoccupied vertex a 0.
"""

from __future__ import annotations

from typing import NamedTuple

from .cylindric import CylindricPlanePartition, validate
from .partitions import conjugate, from_profile, size, to_minimal_profile
from .series import SignedAlphabet


class Cube(NamedTuple):
    """Black vertex below a white vertex in one column."""

    column: int
    black_y: int
    white_y: int


class PathFamily:
    """Cyclic non-intersecting paths, bottom to top; step bit 1 = up."""

    __slots__ = ("period", "paths")

    def __init__(self, period: int, paths):
        self.period = period
        self.paths = tuple((int(s), str(steps)) for s, steps in paths)

    def __eq__(self, other):
        return (isinstance(other, PathFamily)
                and (self.period, self.paths) == (other.period, other.paths))

    def __hash__(self):
        return hash((self.period, self.paths))

    def __repr__(self):
        return "PathFamily(T=%d, paths=%r)" % (self.period, list(self.paths))

    def heights(self, index: int):
        """Heights of one path at columns 0..T."""
        start, steps = self.paths[index]
        ys = [start]
        for ch in steps:
            ys.append(ys[-1] + (1 if ch == "1" else -1))
        return ys

    def column_heights(self, x: int):
        """Occupied heights at column x, bottom to top."""
        return [self.heights(i)[x] for i in range(len(self.paths))]

    def step_strings(self):
        return [steps for _, steps in self.paths]

    def profile(self) -> str:
        """Step string of the top path."""
        return self.paths[-1][1]

    def to_json_dict(self) -> dict:
        return {"T": self.period,
                "paths": [{"start": s, "steps": p} for s, p in self.paths]}


def family_from_json_dict(data: dict) -> PathFamily:
    fam = PathFamily(data["T"], [(p["start"], p["steps"]) for p in data["paths"]])
    check_family(fam)
    return fam


def check_family(fam: PathFamily) -> PathFamily:
    """Validate lattice membership, non-intersection, cyclic closure and
    minimality (the top path is the first spectator path)."""
    T = fam.period
    if T < 1 or not fam.paths:
        raise ValueError("a family needs a positive period and at least one path")
    for start, steps in fam.paths:
        if start % 2:
            raise ValueError("path starts must be even, got %d" % start)
        if len(steps) != T or any(ch not in "01" for ch in steps):
            raise ValueError("step string %r does not fit period %d" % (steps, T))
    grid = [fam.heights(i) for i in range(len(fam.paths))]
    for x in range(T + 1):
        col = [g[x] for g in grid]
        if any(a >= b for a, b in zip(col, col[1:])):
            raise ValueError("paths intersect at column %d" % x)
    gaps0 = [b[0] - a[0] for a, b in zip(grid, grid[1:])]
    gapsT = [b[T] - a[T] for a, b in zip(grid, grid[1:])]
    if gaps0 != gapsT:
        raise ValueError("cyclic closure fails: gaps %r at x=0 vs %r at x=T" % (gaps0, gapsT))
    mus = [from_profile(r) for r in vertical_readings(fam)]
    top_cols = max((p[0] for p in mus if p), default=0)
    if len(fam.paths) != top_cols + 1:
        raise ValueError("family is not minimal: %d paths for %d columns"
                         % (len(fam.paths), top_cols))
    return fam


def vertical_readings(fam: PathFamily):
    """Reading of each column x = 0..T, from the bottom path (inclusive)
    to the top path (exclusive): occupied -> 1, unoccupied -> 0."""
    out = []
    for x in range(fam.period + 1):
        col = fam.column_heights(x)
        occupied = set(col)
        lo, hi = col[0], col[-1]
        out.append("".join("1" if y in occupied else "0" for y in range(lo, hi, 2)))
    return out


def to_paths(c: CylindricPlanePartition) -> PathFamily:
    """Family encoding c: path i carries column i, with step bit
    (mu^k)'_i - (mu^{k+1})'_i + pi_k, starting at twice the position of
    the i-th one in the profile of mu^0 (one spare lattice row below)."""
    T = c.period
    m = 1 + max((p[0] for p in c.mu if p), default=0)
    conjs = [conjugate(p) for p in c.mu]

    def col_height(k, i):
        cj = conjs[k]
        return cj[i - 1] if i <= len(cj) else 0

    base = to_minimal_profile(c.mu[0])
    one_positions = [p for p, ch in enumerate(base) if ch == "1"]
    nxt = len(base)
    while len(one_positions) < m:
        one_positions.append(nxt)
        nxt += 1

    paths = []
    for i in range(1, m + 1):
        bits = []
        for k in range(T):
            bit = col_height(k, i) - col_height(k + 1, i) + int(c.profile[k])
            if bit not in (0, 1):
                raise ValueError("column %d is not tracked by a lattice path" % i)
            bits.append(str(bit))
        paths.append((2 * one_positions[i - 1] + 2, "".join(bits)))
    return check_family(PathFamily(T, paths))


def from_paths(fam: PathFamily) -> CylindricPlanePartition:
    """Decode the vertical readings; inverse of to_paths."""
    check_family(fam)
    mus = [from_profile(r) for r in vertical_readings(fam)]
    return validate(fam.profile(), mus)


def _steps_at(fam: PathFamily, path_index: int, x: int):
    """Incoming and outgoing step bits of a path at column x, cyclically."""
    steps = fam.paths[path_index][1]
    incoming = steps[x - 1] if x >= 1 else steps[-1]
    outgoing = steps[x] if x < fam.period else steps[0]
    return incoming, outgoing


def classify_cubes(fam: PathFamily) -> dict:
    """All cubes of the family, columns 1..T (the seam column counted
    once), split into peaks, valleys and surface cubes.

    The path associated to a cube is the one through its black vertex; a
    peak steps up into and down out of it, a valley the reverse.  A
    surface cube sees only white vertices strictly between its pair; its
    level is half the height gap.
    """
    all_cubes, peaks, valleys, surface = [], [], [], []
    for x in range(1, fam.period + 1):
        col = fam.column_heights(x)
        occupied = set(col)
        path_at = {y: i for i, y in enumerate(col)}
        lo, hi = col[0], col[-1]
        whites = [y for y in range(lo, hi, 2) if y not in occupied]
        for w in whites:
            for b in col:
                if b >= w:
                    break
                cube = Cube(x, b, w)
                all_cubes.append(cube)
                incoming, outgoing = _steps_at(fam, path_at[b], x)
                if incoming == "1" and outgoing == "0":
                    peaks.append(cube)
                elif incoming == "0" and outgoing == "1":
                    valleys.append(cube)
                between = range(b + 2, w, 2)
                if all(y not in occupied for y in between):
                    surface.append((cube, (w - b) // 2))
    return {"all": all_cubes, "peaks": peaks, "valleys": valleys, "surface": surface}


def cube_arm_leg(fam: PathFamily, cube: Cube):
    """Arm = unoccupied vertices strictly between the pair, leg =
    occupied ones.  The matching box of mu^x carries the transposed
    pair: its arm counts occupied vertices, its leg unoccupied ones."""
    col = fam.column_heights(cube.column)
    occupied = set(col)
    if cube.black_y not in occupied or cube.white_y in occupied:
        raise ValueError("%r is not a cube of this family" % (cube,))
    lo, hi = col[0], col[-1]
    if not (lo <= cube.black_y < cube.white_y < hi):
        raise ValueError("%r is not a cube of this family" % (cube,))
    arm = leg = 0
    for y in range(cube.black_y + 2, cube.white_y, 2):
        if y in occupied:
            leg += 1
        else:
            arm += 1
    return arm, leg


def d_alphabet(c: CylindricPlanePartition) -> SignedAlphabet:
    """Signed alphabet D with Omega[(q - t) D] equal to the Macdonald
    weight of c: valleys count positively, peaks negatively, each cube
    contributing q^(occupied between) t^(unoccupied between) - the box
    statistics of the matching box of mu^x."""
    fam = to_paths(c)
    cubes = classify_cubes(fam)
    terms = {}
    for sign, group in ((1, cubes["valleys"]), (-1, cubes["peaks"])):
        for cube in group:
            arm, leg = cube_arm_leg(fam, cube)
            key = (leg, arm)
            terms[key] = terms.get(key, 0) + sign
    return SignedAlphabet(terms)


def d_alphabet_interlacing(c: CylindricPlanePartition) -> SignedAlphabet:
    """Second, path-free route to the same alphabet, straight from the
    interlacing sequence.

    Each box s of mu^k contributes sign(s) q^arm t^leg with statistics
    taken in mu^k, where sign(s) = [step k changes s's column] - [step
    k+1 changes s's column], the steps read cyclically (step T+1 wraps
    to step 1 against mu^1)."""
    T = c.period
    terms = {}
    for k in range(1, T + 1):
        muk = c.mu[k]
        if not muk:
            continue
        prev = c.mu[k - 1]
        nxt = c.mu[k + 1] if k < T else c.mu[1]
        bit_k = c.profile[k - 1]
        bit_next = c.profile[k] if k < T else c.profile[0]
        if bit_k == "1":
            cols_in = _taller_columns(muk, prev)
            pred_in = lambda j: j in cols_in
        else:
            cols_in = _taller_columns(prev, muk)
            pred_in = lambda j: j not in cols_in
        if bit_next == "1":
            cols_out = _taller_columns(nxt, muk)
            pred_out = lambda j: j in cols_out
        else:
            cols_out = _taller_columns(muk, nxt)
            pred_out = lambda j: j not in cols_out
        conj = conjugate(muk)
        for i, part in enumerate(muk, start=1):
            for j in range(1, part + 1):
                sign = int(pred_in(j)) - int(pred_out(j))
                if sign:
                    key = (part - j, conj[j - 1] - i)
                    terms[key] = terms.get(key, 0) + sign
    return SignedAlphabet(terms)


def _taller_columns(lam: tuple, mu: tuple):
    cl, cm = conjugate(lam), conjugate(mu)
    cm = tuple(cm) + (0,) * (len(cl) - len(cm))
    return {j + 1 for j, (a, b) in enumerate(zip(cl, cm)) if a > b}


def cube_count_matches_weight(c: CylindricPlanePartition) -> bool:
    fam = to_paths(c)
    return len(classify_cubes(fam)["all"]) == sum(size(p) for p in c.mu[1:])
