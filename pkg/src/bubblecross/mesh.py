"""Crossing calculus for meshes of parallel semi-line families.

A mesh of size n places anchors (0, 1), ..., (0, n) on a vertical axis
and attaches n - 2 families of parallel rays: the first a families point
into the left half-plane, the rest into the right.  Family i omits
exactly one ray, the one at anchor k_i (its "lost" edge), and the
sequence P = (k_1, ..., k_{n-2}) is a permutation of {2, ..., n-1}.

The concrete realization gives family i the direction (-1, i) on the
left and (+1, i) on the right.  Any slope assignment that increases
strictly with the family index within a side yields the same counts;
the geometric oracle accepts custom slopes so that is testable.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .config import ENUMERATION_GUARD
from .errors import DimensionGuardError


@dataclass(frozen=True)
class MeshSpec:
    """Mesh parameters: axis size n, left family count a, lost anchors P."""

    n: int
    a: int
    P: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "P", tuple(self.P))
        if self.n < 6:
            raise ValueError(f"mesh needs n >= 6, got {self.n}")
        if not 0 <= self.a <= self.n - 2:
            raise ValueError(f"a must lie in [0, {self.n - 2}], got {self.a}")
        if sorted(self.P) != list(range(2, self.n)):
            raise ValueError(f"P must be a permutation of 2..{self.n - 1}, got {self.P}")

    @property
    def left(self) -> tuple[int, ...]:
        return self.P[: self.a]

    @property
    def right(self) -> tuple[int, ...]:
        return self.P[self.a:]


def pair_crossings(n: int, k1: int, k2: int) -> int:
    """Crossings between two same-side families, earlier-indexed family first.

    Out of the C(n, 2) anchor pairs that would cross, the two lost rays
    cancel some; which correction applies depends on whether the earlier
    family's lost anchor sits below or above the later one's.
    """
    for k in (k1, k2):
        if not 2 <= k <= n - 1:
            raise ValueError(f"lost anchor {k} outside 2..{n - 1}")
    if k1 == k2:
        raise ValueError("lost anchors must be distinct")
    base = n * (n - 1) // 2 - (n - k2)
    if k1 < k2:
        return base - (k1 - 1)
    return base - (k1 - 2)


def _section_total(n: int, ks) -> int:
    c2 = n * (n - 1) // 2
    total = 0
    for i in range(len(ks)):
        ki = ks[i]
        for j in range(i + 1, len(ks)):
            kj = ks[j]
            total += c2 - (n - kj) - (ki - 1) + (1 if ki > kj else 0)
    return total


def total_crossings(spec: MeshSpec) -> int:
    """Formula count: sum of the pairwise family counts on each side.

    Left and right rays live in disjoint half-planes, so cross-side pairs
    contribute nothing.
    """
    return _section_total(spec.n, spec.left) + _section_total(spec.n, spec.right)


class Ray(NamedTuple):
    family: int   # 1-based family index across both sides
    dx: int       # -1 for left families, +1 for right
    slope: int    # vertical change per unit of horizontal travel
    anchor: int   # the ray starts at (0, anchor)


def rays(spec: MeshSpec, slopes=None) -> list[Ray]:
    """Concrete rays realizing the mesh.

    slopes, when given, supplies one integer per family; each side's
    subsequence must increase strictly, otherwise two families would be
    parallel to each other and the counting degenerates.
    """
    n, a = spec.n, spec.a
    if slopes is None:
        slopes = tuple(range(1, n - 1))
    slopes = tuple(slopes)
    if len(slopes) != n - 2:
        raise ValueError(f"need {n - 2} slopes, got {len(slopes)}")
    for lo, hi in ((0, a), (a, n - 2)):
        side = slopes[lo:hi]
        if any(x >= y for x, y in zip(side, side[1:])):
            raise ValueError("slopes must increase strictly within each side")
    out = []
    for idx, lost in enumerate(spec.P, start=1):
        dx = -1 if idx <= a else 1
        m = slopes[idx - 1]
        for j in range(1, n + 1):
            if j != lost:
                out.append(Ray(idx, dx, m, j))
    return out


def oracle_crossings(spec: MeshSpec, slopes=None) -> int:
    """Brute-force count of ray pairs meeting at an interior point.

    Decides each pair by integer sign tests on the 2x2 intersection
    system, so the answer is exact.  Rays of one family are parallel and
    never meet; rays sharing an anchor touch only at the axis and are
    skipped as adjacent edges.
    """
    items = [(r.family, r.dx, r.slope, r.anchor) for r in rays(spec, slopes)]
    total = 0
    for i in range(len(items)):
        fa, dxa, ma, ja = items[i]
        for j in range(i + 1, len(items)):
            fb, dxb, mb, jb = items[j]
            if fa == fb or ja == jb:
                continue
            det = dxb * ma - dxa * mb
            if det == 0:
                continue
            dj = jb - ja
            t_num = dxb * dj
            s_num = dxa * dj
            if det < 0:
                t_num, s_num = -t_num, -s_num
            if t_num > 0 and s_num > 0:
                total += 1
    return total


def _intersection_point(A: Ray, B: Ray):
    """Exact interior intersection of two rays, or None when they miss."""
    det = B.dx * A.slope - A.dx * B.slope
    if det == 0:
        return None
    dj = B.anchor - A.anchor
    t = Fraction(B.dx * dj, det)
    s = Fraction(A.dx * dj, det)
    if t <= 0 or s <= 0:
        return None
    return (A.dx * t, A.anchor + A.slope * t)


class SwapStep(NamedTuple):
    position: int  # index in P of the out-of-order pair that was swapped
    hi: int
    lo: int
    delta: int


def sort_spec(spec: MeshSpec) -> tuple[MeshSpec, list[SwapStep]]:
    """Sort each side ascending by repeated first-adjacent-inversion swaps.

    Every swap raises the total by exactly 2*(hi - lo) - 1 > 0, which is
    the sorted-sections-dominate monotonicity in its sharpest per-swap
    form; each recorded delta is verified against recomputed totals.
    """
    n, a = spec.n, spec.a
    work = list(spec.P)
    positions = list(range(0, a - 1)) + list(range(a, n - 3))
    steps: list[SwapStep] = []
    prev = total_crossings(spec)
    while True:
        pos = next((i for i in positions if work[i] > work[i + 1]), None)
        if pos is None:
            break
        hi, lo = work[pos], work[pos + 1]
        work[pos], work[pos + 1] = lo, hi
        cur = total_crossings(MeshSpec(n, a, tuple(work)))
        delta = cur - prev
        if delta != 2 * (hi - lo) - 1:
            raise ArithmeticError(
                f"swap delta {delta} != 2*({hi}-{lo})-1 at position {pos}"
            )
        steps.append(SwapStep(pos, hi, lo, delta))
        prev = cur
    return MeshSpec(n, a, tuple(work)), steps


def _case(n: int, a: int) -> str:
    """Classify (n, a) into one of the five supported worst-case splits."""
    if n % 2 == 0:
        m = n // 2
        if m >= 4 and a in (m - 2, m - 1, m):
            return "even-mid" if a == m - 1 else "even-off"
    else:
        m = (n + 1) // 2
        if m >= 4 and a in (m - 2, m - 1):
            return "odd"
    raise ValueError(f"unsupported split (n={n}, a={a}) for the worst-case formulas")


def optimal_permutation(n: int, a: int) -> MeshSpec:
    """The lost-anchor sequence attaining the worst case for (n, a)."""
    _case(n, a)
    if n % 2 == 0:
        m = n // 2
        if a == m - 1:
            left = tuple(range(2, n - 1, 2))
            right = tuple(range(3, n, 2))
        elif a == m:
            left = (2,) + tuple(range(3, n, 2))
            right = tuple(range(4, n - 1, 2))
        else:
            left = tuple(range(4, n - 1, 2))
            right = (2,) + tuple(range(3, n, 2))
    else:
        m = (n + 1) // 2
        if a == m - 1:
            left = tuple(range(2, n, 2))
            right = tuple(range(3, n - 1, 2))
        else:
            left = tuple(range(3, n - 1, 2))
            right = tuple(range(2, n, 2))
    return MeshSpec(n, a, left + right)


def mesh_max(n: int, a: int) -> int:
    """Closed-form worst case over all lost-anchor sequences for (n, a)."""
    kind = _case(n, a)
    if kind == "even-mid":
        val = (Fraction(n**4, 8) - Fraction(25 * n**3, 24)
               + 3 * n * n - Fraction(23 * n, 6) + 2)
    elif kind == "even-off":
        val = (Fraction(n**4, 8) - Fraction(25 * n**3, 24)
               + Fraction(7 * n * n, 2) - Fraction(29 * n, 6) + 2)
    else:
        val = (Fraction(n**4, 8) - Fraction(25 * n**3, 24)
               + Fraction(25 * n * n, 8) - Fraction(95 * n, 24) + Fraction(7, 4))
    if val.denominator != 1 or val < 0:
        raise ArithmeticError(f"worst case for ({n}, {a}) is not a whole count: {val}")
    return int(val)


def exhaustive_max(n: int, a: int, guard: int = ENUMERATION_GUARD) -> tuple[int, MeshSpec]:
    """Maximum of the formula count over every lost-anchor sequence.

    Walks all (n-2)! permutations in lexicographic order and keeps the
    first maximizer, so the witness is the lexicographically smallest.
    """
    if n > guard:
        raise DimensionGuardError(f"n={n} exceeds enumeration guard {guard}")
    MeshSpec(n, a, tuple(range(2, n)))  # validates n and a
    best = -1
    witness = None
    for P in itertools.permutations(range(2, n)):
        t = _section_total(n, P[:a]) + _section_total(n, P[a:])
        if t > best:
            best, witness = t, P
    return best, MeshSpec(n, a, witness)


def mesh_to_json(spec: MeshSpec) -> str:
    return json.dumps({"P": list(spec.P), "a": spec.a, "n": spec.n}, sort_keys=True) + "\n"


def mesh_from_json(text: str) -> MeshSpec:
    d = json.loads(text)
    return MeshSpec(int(d["n"]), int(d["a"]), tuple(int(x) for x in d["P"]))


def mesh_svg(spec: MeshSpec) -> str:
    """Render the realized mesh: axis, anchors, rays, crossing markers.

    Rays are drawn out to |x| = n, which is past every crossing (the ray
    parameter at a crossing stays below n - 1), and the annotation text
    repeats the exact count.
    """
    rs = rays(spec)
    points = []
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            if rs[i].family == rs[j].family or rs[i].anchor == rs[j].anchor:
                continue
            pt = _intersection_point(rs[i], rs[j])
            if pt is not None:
                points.append(pt)
    count = len(points)
    if count != oracle_crossings(spec):
        raise ArithmeticError("marker count disagrees with the oracle")

    reach = spec.n
    segments = [((0, r.anchor), (r.dx * reach, r.anchor + r.slope * reach)) for r in rs]
    ys = [float(y) for (_, y0), (_, y1) in segments for y in (y0, y1)]
    ys += [1.0, float(spec.n)]
    y_top, y_bot = max(ys), min(ys)
    scale, pad = 24.0, 30.0

    def tx(x) -> float:
        return pad + (float(x) + reach) * scale

    def ty(y) -> float:
        return pad + (y_top - float(y)) * scale

    width = 2 * reach * scale + 2 * pad
    height = (y_top - y_bot) * scale + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">',
        f'  <text x="{pad:.1f}" y="{pad * 0.6:.1f}" font-size="14">'
        f'mesh n={spec.n} a={spec.a} P=({",".join(str(k) for k in spec.P)}) '
        f'crossings={count}</text>',
        f'  <line x1="{tx(0):.2f}" y1="{ty(1):.2f}" x2="{tx(0):.2f}" y2="{ty(spec.n):.2f}" '
        f'stroke="black" stroke-width="2"/>',
    ]
    for (x0, y0), (x1, y1) in segments:
        out.append(
            f'  <line x1="{tx(x0):.2f}" y1="{ty(y0):.2f}" '
            f'x2="{tx(x1):.2f}" y2="{ty(y1):.2f}" stroke="#888" stroke-width="0.8"/>'
        )
    for j in range(1, spec.n + 1):
        out.append(f'  <circle cx="{tx(0):.2f}" cy="{ty(j):.2f}" r="3" fill="black"/>')
        out.append(
            f'  <text x="{tx(0) + 6:.2f}" y="{ty(j) - 5:.2f}" font-size="10">{j}</text>'
        )
    for x, y in sorted(points):
        out.append(
            f'  <circle cx="{tx(x):.2f}" cy="{ty(y):.2f}" r="2.2" '
            f'fill="red" class="crossing"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
