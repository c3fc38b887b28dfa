"""Exact rational geometry: points, predicates, disks, and epsilon search.

Every coordinate in this package is an exact rational; nothing here ever
touches floating point.  `gmpy2.mpq` is used when available (it is much
faster for the exhaustive suites), with `fractions.Fraction` as fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as RAT

Rat = type(RAT(0))
Point = tuple  # (x, y) pair of rationals
Segment = tuple  # (Point, Point)

R0 = RAT(0)
R1 = RAT(1)
HALF = RAT(1, 2)

# segment_intersection outcomes
DISJOINT = "disjoint"
SHARED_ENDPOINT = "shared_endpoint"
PROPER_CROSSING = "proper_crossing"
OVERLAP = "overlap"
ENDPOINT_INTERIOR = "endpoint_interior"

# orientation outcomes
CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
COLLINEAR = "collinear"


def rat_from_str(text: str) -> Rat:
    """Parse "num/den" (or plain integer) into a reduced rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return RAT(int(num), int(den))
    return RAT(int(text))


def rat_to_str(q) -> str:
    q = RAT(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def pt(x, y) -> Point:
    return (RAT(x), RAT(y))


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def scale(p: Point, k) -> Point:
    return (p[0] * k, p[1] * k)


def cross(u: Point, v: Point):
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point):
    return u[0] * v[0] + u[1] * v[1]


def dist2(p: Point, q: Point):
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def orientation(p: Point, q: Point, r: Point) -> str:
    """Sign of the determinant of (q-p, r-p)."""
    det = cross(sub(q, p), sub(r, p))
    if det > 0:
        return COUNTERCLOCKWISE
    if det < 0:
        return CLOCKWISE
    return COLLINEAR


def orient_sign(p: Point, q: Point, r: Point) -> int:
    det = cross(sub(q, p), sub(r, p))
    return (det > 0) - (det < 0)


def _on_segment_collinear(p: Point, a: Point, b: Point) -> bool:
    # assumes p collinear with a,b; true iff p lies in the closed segment
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segment_intersection(s1: Segment, s2: Segment) -> str:
    """Exact classification of how two closed segments meet."""
    a, b = s1
    c, d = s2
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)

    if o1 == o2 == o3 == o4 == 0:
        # all four points collinear
        touching = []
        for p, (u, v) in ((c, (a, b)), (d, (a, b)), (a, (c, d)), (b, (c, d))):
            if _on_segment_collinear(p, u, v):
                touching.append(p)
        if not touching:
            return DISJOINT
        lo = max(min(a, b), min(c, d))
        hi = min(max(a, b), max(c, d))
        if lo == hi:
            return SHARED_ENDPOINT  # single common point; must be an endpoint of both
        return OVERLAP

    if {a, b} & {c, d}:
        # not all collinear (handled above), so two segments sharing an
        # endpoint cannot meet anywhere else
        return SHARED_ENDPOINT

    if o1 != o2 and o3 != o4 and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return PROPER_CROSSING

    # an endpoint of one segment lying on the other (not at a shared endpoint)
    if o1 == 0 and _on_segment_collinear(c, a, b):
        return ENDPOINT_INTERIOR
    if o2 == 0 and _on_segment_collinear(d, a, b):
        return ENDPOINT_INTERIOR
    if o3 == 0 and _on_segment_collinear(a, c, d):
        return ENDPOINT_INTERIOR
    if o4 == 0 and _on_segment_collinear(b, c, d):
        return ENDPOINT_INTERIOR
    return DISJOINT


def segments_meet_badly(s1: Segment, s2: Segment, share_vertex: bool) -> bool:
    """True when the contact between two drawn edges violates planarity.

    `share_vertex` says whether the two edges share a graph vertex; sharing
    the corresponding endpoint is then the only legal contact.
    """
    kind = segment_intersection(s1, s2)
    if share_vertex:
        return kind not in (SHARED_ENDPOINT, DISJOINT)
    return kind != DISJOINT


def map45(p: Point) -> Point:
    """Clockwise 45-degree rotation composed with sqrt(2) scaling.

    (x, y) -> (x + y, y - x): rational-preserving and affine, so planarity
    classifications survive; direction angles in (45, 135) land in (0, 90).
    """
    return (p[0] + p[1], p[1] - p[0])


class ContinuityError(Exception):
    """Raised when epsilon halving exhausts its budget: a bug, not an instance."""


def epsilon_search(predicate: Callable[[Rat], bool], initial=R1,
                   max_halvings: int = 256) -> Rat:
    """First value initial/2^k (k = 0,1,...) satisfying the predicate.

    The predicate must hold for all sufficiently small positive values
    (the continuity arguments guarantee this); exhausting `max_halvings`
    signals an implementation bug or invalid input.
    """
    eps = RAT(initial)
    for _ in range(max_halvings + 1):
        if predicate(eps):
            return eps
        eps = eps / 2
    raise ContinuityError("continuity bound not found within %d halvings" % max_halvings)


class Disk(NamedTuple):
    """Closed disk; used only through decidable rational predicates."""
    center: Point
    radius: Rat

    def contains_point(self, p: Point, strict: bool = True) -> bool:
        d2 = dist2(p, self.center)
        r2 = self.radius * self.radius
        return d2 < r2 if strict else d2 <= r2

    def contains_disk(self, other: "Disk", strict: bool = True) -> bool:
        # |c1-c2| + r2 <= r1, squared to stay rational
        gap = self.radius - other.radius
        if gap < 0 or (strict and gap <= 0):
            return False
        return dist2(self.center, other.center) < gap * gap or \
            (not strict and dist2(self.center, other.center) == gap * gap)

    def right_extreme(self) -> Point:
        return (self.center[0] + self.radius, self.center[1])

    def x_range(self):
        return (self.center[0] - self.radius, self.center[0] + self.radius)

    def y_range(self):
        return (self.center[1] - self.radius, self.center[1] + self.radius)


def disk_left_of(d: Disk, x) -> bool:
    return d.center[0] + d.radius < x


def disk_right_of(d: Disk, x) -> bool:
    return d.center[0] - d.radius > x


def disk_below(d: Disk, y) -> bool:
    return d.center[1] + d.radius < y


def disk_above(d: Disk, y) -> bool:
    return d.center[1] - d.radius > y


def disk_in_triangle(d: Disk, a: Point, b: Point, c: Point) -> bool:
    """Closed disk strictly inside triangle abc (corners in any orientation)."""
    if orient_sign(a, b, c) == 0:
        return False
    corners = (a, b, c) if orient_sign(a, b, c) > 0 else (a, c, b)
    for i in range(3):
        p, q = corners[i], corners[(i + 1) % 3]
        e = sub(q, p)
        # signed distance of center from line pq times |pq| must exceed r|pq|
        s = cross(e, sub(d.center, p))
        if s <= 0:
            return False
        if s * s <= d.radius * d.radius * dot(e, e):
            return False
    return True


def point_in_triangle(p: Point, a: Point, b: Point, c: Point, strict: bool = True) -> bool:
    s = orient_sign(a, b, c)
    if s == 0:
        return False
    if s < 0:
        b, c = c, b
    for u, v in ((a, b), (b, c), (c, a)):
        o = orient_sign(u, v, p)
        if o < 0 or (strict and o == 0):
            return False
    return True


@dataclass(frozen=True)
class TriangleFrame:
    """Drawing frame for the 3-tree drawers: corners increase in x and y.

    Type A has the middle corner above the line through the outer corners,
    type B below.
    """
    p_s: Point
    p_m: Point
    p_t: Point

    def __post_init__(self):
        if not (self.p_s[0] < self.p_m[0] < self.p_t[0]
                and self.p_s[1] < self.p_m[1] < self.p_t[1]):
            raise ValueError("frame corners must increase in both coordinates")
        if orient_sign(self.p_s, self.p_t, self.p_m) == 0:
            raise ValueError("degenerate frame")

    @property
    def orientation_type(self) -> str:
        # middle corner left of the s->t ray means above the line: type A
        return "A" if orient_sign(self.p_s, self.p_t, self.p_m) > 0 else "B"


# ---------------------------------------------------------------------------
# Exact angular order (no transcendentals)
# ---------------------------------------------------------------------------

def _half(v: Point) -> int:
    # 0 for the upper half plane including the positive x-axis, 1 below
    if v[1] > 0 or (v[1] == 0 and v[0] > 0):
        return 0
    return 1


def angle_less_ccw(u: Point, v: Point) -> bool:
    """Strict counterclockwise order from the positive x-axis (0 <= ang < 360)."""
    hu, hv = _half(u), _half(v)
    if hu != hv:
        return hu < hv
    c = cross(u, v)
    return c > 0


def sort_darts_cw(vectors: Iterable[Point], start=None) -> list:
    """Indices of `vectors` in clockwise angular order.

    Clockwise is decreasing angle; the start of the cycle is arbitrary
    (callers compare cyclically).  Raises ValueError on zero vectors; ties
    (equal directions) keep a deterministic index order.
    """
    import functools

    vecs = list(vectors)
    for v in vecs:
        if v[0] == 0 and v[1] == 0:
            raise ValueError("zero direction vector")

    def cmp(i: int, j: int) -> int:
        u, v = vecs[i], vecs[j]
        hu, hv = _half(u), _half(v)
        if hu != hv:
            return -1 if hu < hv else 1
        c = cross(u, v)
        if c > 0:
            return -1
        if c < 0:
            return 1
        return -1 if i < j else (0 if i == j else 1)

    order = sorted(range(len(vecs)), key=functools.cmp_to_key(cmp))  # ccw
    order.reverse()  # cw
    return order


def in_cw_sector(start: Point, end: Point, d: Point) -> bool:
    """Is direction d strictly inside the sector swept clockwise start->end?

    When start and end are parallel-equal the sector is the full circle minus
    the ray; when opposite it is the open half plane clockwise of `start`.
    """
    cs = cross(start, d)
    ce = cross(d, end)
    cse = cross(start, end)
    if cse < 0:  # convex sector (end reached within 180 degrees cw)
        return cs < 0 and ce < 0
    if cse > 0:  # reflex sector
        return cs < 0 or ce < 0
    # start, end collinear
    if dot(start, end) > 0:  # same direction: everything except that ray
        return not (cs == 0 and dot(start, d) > 0)
    # opposite rays: open half plane clockwise of start
    return cs < 0


def pick_direction_in_cw_sector(start: Point, end: Point,
                                require_up: bool = False,
                                extra: Callable[[Point], bool] | None = None) -> Point:
    """Some exact rational direction strictly inside the clockwise sector.

    `require_up` additionally demands a strictly positive y component.
    Candidates are blends of the boundary rays, their perpendiculars, and
    upward blends; the sector is open and nonempty by the callers' continuity
    arguments, so a candidate always exists for the configurations we build.
    """
    def ok(d: Point) -> bool:
        if d[0] == 0 and d[1] == 0:
            return False
        if not in_cw_sector(start, end, d):
            return False
        if require_up and d[1] <= 0:
            return False
        if extra is not None and not extra(d):
            return False
        return True

    cands = [
        add(start, end), scale(add(start, end), -1),
        (start[1], -start[0]), (-end[1], end[0]),
        (R0, R1), (R0, -R1), (R1, R0), (-R1, R0),
        add(scale(start, 3), end), add(start, scale(end, 3)),
        scale(start, -1), scale(end, -1),
    ]
    for base in (start, end):
        if base[1] > 0:
            # rotate slightly off the boundary toward the sector interior
            cw_perp = (base[1], -base[0])
            ccw_perp = (-base[1], base[0])
            t = R1
            for _ in range(80):
                cands.append(add(base, scale(cw_perp, t)))
                cands.append(add(base, scale(ccw_perp, t)))
                t = t / 2
    up = (R0, R1)
    t = R1
    for _ in range(80):
        for base in (start, end, add(start, end), scale(add(start, end), -1)):
            cands.append(add(scale(up, R1 / t if t != 0 else R1), scale(base, t)))
        t = t / 2
    for d in cands:
        if ok(d):
            return d
    raise ContinuityError("no direction found inside sector")
