"""Exact integer model of the triangular grid.

A vertex (p, q) stands for the point p*u + q*w + v0 with u = (1, 0),
w = (1/2, sqrt(3)/2) and v0 = (-1/2, -sqrt(3)/6).  With this offset the
three line functionals

    f1 = 1 - 3q,    f2 = 3(p + q) - 2,    f3 = 1 - 3p

are integers on every vertex, sum to zero, and are all congruent to
1 mod 3.  Grid lines are the level sets f_d = v with v = 1 (mod 3); the
unit triangle T0 = (1, 1, 1) is centered at the origin O.  A line whose
value has 2-adic valuation k-1 belongs to layer k; each layer splits
into triangles of side 2^(k-1) and hexagons, and every unit segment of
a layer-k line is the side of exactly one layer-k triangle.

All geometry below is integer arithmetic on these values; floats appear
only in the rendering helpers.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .errors import MalformedLayer

POSITIVE = 1
NEGATIVE = -1

_SQRT3 = 3 ** 0.5


def v2(n: int) -> int:
    """2-adic valuation of |n| (n must be nonzero)."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    return (n & -n).bit_length() - 1


class Vertex(NamedTuple):
    p: int
    q: int

    def functionals(self) -> tuple[int, int, int]:
        return (1 - 3 * self.q, 3 * (self.p + self.q) - 2, 1 - 3 * self.p)

    @classmethod
    def from_functionals(cls, f1: int, f3: int) -> "Vertex":
        if (1 - f1) % 3 or (1 - f3) % 3:
            raise ValueError(f"({f1}, {f3}) is not a vertex functional pair")
        return cls((1 - f3) // 3, (1 - f1) // 3)

    def xy(self) -> tuple[float, float]:
        """Cartesian coordinates (rendering only)."""
        return (self.p + self.q / 2 - 0.5, (3 * self.q - 1) * _SQRT3 / 6)

    def norm_sq_times_12(self) -> int:
        """12 * |vertex|^2, exactly."""
        return 3 * (2 * self.p + self.q - 1) ** 2 + (3 * self.q - 1) ** 2


class Line(NamedTuple):
    """Grid line {x : f_d(x) = v}; grid lines have v = 1 (mod 3)."""

    d: int
    v: int

    @property
    def layer(self) -> int:
        return v2(self.v) + 1


class Seg(NamedTuple):
    """Canonical unit segment id.

    d=1 joins (p,q)-(p+1,q); d=2 joins (p,q)-(p+1,q-1); d=3 joins
    (p,q)-(p,q+1).  The anchor is unique, so segments are usable as
    dictionary keys.
    """

    d: int
    p: int
    q: int

    def endpoints(self) -> tuple[Vertex, Vertex]:
        p, q = self.p, self.q
        if self.d == 1:
            return (Vertex(p, q), Vertex(p + 1, q))
        if self.d == 2:
            return (Vertex(p, q), Vertex(p + 1, q - 1))
        return (Vertex(p, q), Vertex(p, q + 1))

    def doubled_midpoint(self) -> tuple[int, int, int]:
        """(2*f1, 2*f2, 2*f3) at the segment midpoint; always integers."""
        f1 = 2 - 6 * self.q
        f2 = 6 * (self.p + self.q) - 4
        f3 = 2 - 6 * self.p
        if self.d == 1:
            return (f1, f2 + 3, f3 - 3)
        if self.d == 2:
            return (f1 + 3, f2, f3 - 3)
        return (f1 - 3, f2 + 3, f3)

    def translate(self, a: int, b: int) -> "Seg":
        return Seg(self.d, self.p + a, self.q + b)


def unit_tile_segments(o: int, p: int, q: int) -> tuple[Seg, Seg, Seg]:
    """Side segments (by direction) of the unit tile anchored at (p, q)."""
    if o == POSITIVE:
        return (Seg(1, p, q), Seg(2, p, q + 1), Seg(3, p, q))
    return (Seg(1, p, q), Seg(2, p, q), Seg(3, p + 1, q - 1))


def seg_between(u: Vertex, v: Vertex) -> Seg:
    """The canonical segment joining two adjacent vertices."""
    dp, dq = v.p - u.p, v.q - u.q
    if (dp, dq) == (1, 0) or (dp, dq) == (-1, 0):
        return Seg(1, min(u.p, v.p), u.q)
    if (dp, dq) == (0, 1) or (dp, dq) == (0, -1):
        return Seg(3, u.p, min(u.q, v.q))
    if (dp, dq) == (1, -1):
        return Seg(2, u.p, u.q)
    if (dp, dq) == (-1, 1):
        return Seg(2, v.p, v.q)
    raise ValueError(f"{u} and {v} are not adjacent")


class Triangle(NamedTuple):
    """Grid triangle given by its three side line values (by direction).

    The value sum is +3s for a positive (apex up) triangle of side s,
    -3s for a negative one: a positive triangle is {f_d <= v_d}, a
    negative one is {f_d >= v_d}.
    """

    v1: int
    v2: int
    v3: int

    @property
    def total(self) -> int:
        return self.v1 + self.v2 + self.v3

    @property
    def orientation(self) -> int:
        return POSITIVE if self.total > 0 else NEGATIVE

    @property
    def side(self) -> int:
        return abs(self.total) // 3

    def value(self, d: int) -> int:
        return self[d - 1]

    def anchor(self) -> tuple[int, int, int]:
        """(orientation, p, q) for a unit triangle.

        Positive: vertices (p,q), (p+1,q), (p,q+1); negative: vertices
        (p,q), (p+1,q), (p+1,q-1).
        """
        if self.total == 3:
            return (POSITIVE, (1 - self.v3) // 3, (1 - self.v1) // 3)
        if self.total == -3:
            return (NEGATIVE, (-2 - self.v3) // 3, (1 - self.v1) // 3)
        raise ValueError(f"{self} is not a unit triangle")

    @classmethod
    def unit_from_anchor(cls, orientation: int, p: int, q: int) -> "Triangle":
        if orientation == POSITIVE:
            return cls(1 - 3 * q, 3 * (p + q) + 1, 1 - 3 * p)
        return cls(1 - 3 * q, 3 * (p + q) - 2, -2 - 3 * p)

    def side_segment(self, d: int) -> Seg:
        """The single unit segment forming side d of a unit triangle."""
        o, p, q = self.anchor()
        if o == POSITIVE:
            if d == 1:
                return Seg(1, p, q)
            if d == 2:
                return Seg(2, p, q + 1)
            return Seg(3, p, q)
        if d == 1:
            return Seg(1, p, q)
        if d == 2:
            return Seg(2, p, q)
        return Seg(3, p + 1, q - 1)

    def side_segments(self) -> tuple[Seg, Seg, Seg]:
        return (self.side_segment(1), self.side_segment(2), self.side_segment(3))

    def vertices(self) -> tuple[Vertex, Vertex, Vertex]:
        o, p, q = self.anchor()
        if o == POSITIVE:
            return (Vertex(p, q), Vertex(p + 1, q), Vertex(p, q + 1))
        return (Vertex(p, q), Vertex(p + 1, q), Vertex(p + 1, q - 1))

    def translate(self, a: int, b: int) -> "Triangle":
        return Triangle(self.v1 - 3 * b, self.v2 + 3 * (a + b), self.v3 - 3 * a)


def line_of(seg: Seg) -> Line:
    """The grid line the segment lies on."""
    if seg.d == 1:
        return Line(1, 1 - 3 * seg.q)
    if seg.d == 2:
        return Line(2, 3 * (seg.p + seg.q) - 2)
    return Line(3, 1 - 3 * seg.p)


def layer_of(seg: Seg) -> int:
    """Layer index k: the line value has 2-adic valuation k-1."""
    return v2(line_of(seg).v) + 1


def adjacent_unit_triangles(seg: Seg) -> tuple[Triangle, Triangle]:
    """The (positive, negative) unit triangles sharing the segment."""
    d, p, q = seg
    if d == 1:
        pos = Triangle.unit_from_anchor(POSITIVE, p, q)
        neg = Triangle.unit_from_anchor(NEGATIVE, p, q)
    elif d == 2:
        pos = Triangle.unit_from_anchor(POSITIVE, p, q - 1)
        neg = Triangle.unit_from_anchor(NEGATIVE, p, q)
    else:
        pos = Triangle.unit_from_anchor(POSITIVE, p, q)
        neg = Triangle.unit_from_anchor(NEGATIVE, p - 1, q + 1)
    return pos, neg


def _layer_data(d: int, p: int, q: int) -> tuple[int, bool]:
    """(layer k, layer-triangle-is-positive) for segment (d, p, q).

    The segment lies on a line of value v in layer k (s = 2^(k-1)).
    In each of the two other directions, layer-k values are spaced
    3*2^k apart with residue (-2)^(k-1); flooring the midpoint
    functionals onto that progression gives the candidate triangle's
    lower side values, and the sum v + l2' + l3' is -3s for the
    attached negative layer triangle and -9s for the positive one.
    No other sums are possible, so MalformedLayer flags only bugs.
    """
    f1 = 2 - 6 * q
    f2 = 6 * (p + q) - 4
    f3 = 2 - 6 * p
    if d == 1:
        v = (f1) // 2
        others = (f2 + 3, f3 - 3)
    elif d == 2:
        v = f2 // 2
        others = (f1 + 3, f3 - 3)
    else:
        v = f3 // 2
        others = (f1 - 3, f2 + 3)
    k = (v & -v).bit_length()
    s = 1 << (k - 1)
    step = 6 * s
    r = s if k & 1 else -s
    tot = v
    for fj in others:
        tot += r + step * ((fj - 2 * r) // (2 * step))
    if tot == -3 * s:
        return k, False
    if tot == -9 * s:
        return k, True
    raise MalformedLayer(f"segment ({d},{p},{q}): sum {tot} for layer {k}")


def layer_triangle_orientation(seg: Seg) -> int:
    """Orientation of the layer-k triangle having seg on its boundary."""
    _, positive = _layer_data(*seg)
    return POSITIVE if positive else NEGATIVE


def layer_triangle_of(seg: Seg) -> Triangle:
    """The layer triangle attached to the segment, with its side values."""
    d, p, q = seg
    f1 = 2 - 6 * q
    f2 = 6 * (p + q) - 4
    f3 = 2 - 6 * p
    if d == 1:
        mids = (f1, f2 + 3, f3 - 3)
    elif d == 2:
        mids = (f1 + 3, f2, f3 - 3)
    else:
        mids = (f1 - 3, f2 + 3, f3)
    v = mids[d - 1] // 2
    k = (v & -v).bit_length()
    s = 1 << (k - 1)
    step = 6 * s
    r = s if k & 1 else -s
    vals = [0, 0, 0]
    vals[d - 1] = v
    for j in range(3):
        if j != d - 1:
            vals[j] = r + step * ((mids[j] - 2 * r) // (2 * step))
    tot = sum(vals)
    if tot == -3 * s:
        return Triangle(*vals)
    if tot == -9 * s:
        for j in range(3):
            if j != d - 1:
                vals[j] += step
        return Triangle(*vals)
    raise MalformedLayer(f"segment {seg}: sum {tot} for layer {k}")


# -- reflections and dilations -------------------------------------------

def _reflect_triple(f: tuple[int, int, int], mirror: Line) -> tuple[int, int, int]:
    # Across {f_d = V}: f_d -> 2V - f_d, and the two other functionals
    # swap direction with f_j -> -f_l - V (the three values keep sum 0).
    d, V = mirror
    out = [0, 0, 0]
    j, l = [i for i in (1, 2, 3) if i != d]
    out[d - 1] = 2 * V - f[d - 1]
    out[j - 1] = -f[l - 1] - V
    out[l - 1] = -f[j - 1] - V
    return (out[0], out[1], out[2])


def reflect_vertex(vert: Vertex, mirror: Line) -> Vertex:
    g = _reflect_triple(vert.functionals(), mirror)
    return Vertex.from_functionals(g[0], g[2])


def reflect_segment(seg: Seg, mirror: Line) -> Seg:
    a, b = seg.endpoints()
    return seg_between(reflect_vertex(a, mirror), reflect_vertex(b, mirror))


def reflect_line(line: Line, mirror: Line) -> Line:
    d, V = mirror
    if line.d == d:
        return Line(d, 2 * V - line.v)
    (other,) = [i for i in (1, 2, 3) if i != d and i != line.d]
    return Line(other, -line.v - V)


def reflect(obj, mirror: Line):
    """Mirror image of a vertex, segment or line across a grid line."""
    if isinstance(obj, Vertex):
        return reflect_vertex(obj, mirror)
    if isinstance(obj, Seg):
        return reflect_segment(obj, mirror)
    if isinstance(obj, Line):
        return reflect_line(obj, mirror)
    raise TypeError(f"cannot reflect {type(obj).__name__}")


def dilate(obj, factor: int):
    """Dilation about O; factor must be 1 (mod 3) to preserve the grid."""
    if factor % 3 != 1:
        raise ValueError("grid dilations need factor = 1 (mod 3)")
    if isinstance(obj, Line):
        return Line(obj.d, factor * obj.v)
    if isinstance(obj, Vertex):
        f = obj.functionals()
        return Vertex.from_functionals(factor * f[0], factor * f[2])
    if isinstance(obj, Triangle):
        return Triangle(factor * obj.v1, factor * obj.v2, factor * obj.v3)
    if isinstance(obj, Seg):
        raise TypeError("a dilated unit segment is not a unit segment")
    raise TypeError(f"cannot dilate {type(obj).__name__}")


# -- windows ---------------------------------------------------------------

class TriRegion(NamedTuple):
    """Triangular window with side lines (w1, w2, w3).

    Positive (value sum +3*side) means {f_d <= w_d}; negative means
    {f_d >= w_d}.  A segment is interior when its midpoint is strictly
    inside, and boundary when it lies on a side line within the side's
    extent; midpoint tests use doubled functionals to stay integral.
    """

    w1: int
    w2: int
    w3: int

    @property
    def orientation(self) -> int:
        return POSITIVE if self.w1 + self.w2 + self.w3 > 0 else NEGATIVE

    @property
    def side(self) -> int:
        return abs(self.w1 + self.w2 + self.w3) // 3

    def contains_interior(self, seg: Seg) -> bool:
        mids = seg.doubled_midpoint()
        if self.orientation == POSITIVE:
            return all(m < 2 * w for m, w in zip(mids, self))
        return all(m > 2 * w for m, w in zip(mids, self))

    def is_boundary(self, seg: Seg) -> bool:
        mids = seg.doubled_midpoint()
        sign = self.orientation
        on_own = False
        for m, w in zip(mids, self):
            if m == 2 * w:
                if on_own:
                    return False
                on_own = True
            elif sign * m > sign * 2 * w:
                return False
        return on_own

    def contains_vertex(self, vert: Vertex) -> bool:
        f = vert.functionals()
        if self.orientation == POSITIVE:
            return all(fv <= w for fv, w in zip(f, self))
        return all(fv >= w for fv, w in zip(f, self))

    def _vertex_ranges(self) -> tuple[int, int, int, int]:
        # closed-region bounds: p in [pmin,pmax], q in [qmin,qmax]
        if self.orientation == POSITIVE:
            pmin = (1 - self.w3) // 3
            qmin = (1 - self.w1) // 3
            top = (self.w2 + 2) // 3
            return pmin, top - qmin, qmin, top - pmin
        pmax = (1 - self.w3) // 3
        qmax = (1 - self.w1) // 3
        bot = (self.w2 + 2) // 3
        return bot - qmax, pmax, bot - pmax, qmax

    def iter_vertices(self) -> Iterator[Vertex]:
        pmin, pmax, qmin, qmax = self._vertex_ranges()
        pos = self.orientation == POSITIVE
        for q in range(qmin, qmax + 1):
            for p in range(pmin, pmax + 1):
                if pos:
                    if p + q <= (self.w2 + 2) // 3:
                        yield Vertex(p, q)
                elif p + q >= (self.w2 + 2) // 3:
                    yield Vertex(p, q)

    def iter_interior_segments(self) -> Iterator[Seg]:
        for p, q in self.iter_vertices():
            for d in (1, 2, 3):
                seg = Seg(d, p, q)
                if self.contains_interior(seg):
                    yield seg

    def iter_boundary_segments(self) -> Iterator[Seg]:
        pmin, pmax, qmin, qmax = self._vertex_ranges()
        for d in (1, 2, 3):
            w = self[d - 1]
            if d == 1:
                q = (1 - w) // 3
                cands = (Seg(1, p, q) for p in range(pmin - 1, pmax + 1))
            elif d == 2:
                c = (w + 2) // 3
                cands = (Seg(2, p, c - p) for p in range(pmin - 1, pmax + 1))
            else:
                p = (1 - w) // 3
                cands = (Seg(3, p, q) for q in range(qmin - 1, qmax + 1))
            for seg in cands:
                if self.is_boundary(seg):
                    yield seg

    def covers_tile(self, tri: Triangle) -> bool:
        sign = self.orientation
        if tri.orientation == sign:
            return all(sign * v <= sign * w for v, w in zip(tri, self))
        # opposite-orientation tile: its extreme vertex on each side
        # sticks out by one value step beyond the tile's own side value
        return all(sign * v + 3 <= sign * w for v, w in zip(tri, self))

    def iter_tile_anchors(self) -> Iterator[tuple[int, int, int]]:
        """(orientation, p, q) of every unit triangle in the window."""
        w1, w2, w3 = self
        if self.orientation == POSITIVE:
            p0 = (1 - w3) // 3
            q0 = (1 - w1) // 3
            t0 = (w2 - 1) // 3
            for q in range(q0, t0 - p0 + 1):
                for p in range(p0, t0 - q + 1):
                    yield (POSITIVE, p, q)
                    if q > q0:
                        yield (NEGATIVE, p, q)
        else:
            pn = (-2 - w3) // 3
            qn = (1 - w1) // 3
            tn = (w2 + 2) // 3
            for q in range(tn - pn, qn + 1):
                for p in range(tn - q, pn + 1):
                    yield (NEGATIVE, p, q)
                    if q < qn:
                        yield (POSITIVE, p, q)

    def iter_tiles(self) -> Iterator[Triangle]:
        """All unit triangles contained in the closed window."""
        for o, p, q in self.iter_tile_anchors():
            yield Triangle.unit_from_anchor(o, p, q)

    def contains_ball_of_radius(self, r: int) -> bool:
        return self.side * self.side >= 12 * r * r

    def erode(self, rows: int) -> "TriRegion":
        sign = self.orientation
        return TriRegion(self.w1 - 3 * rows * sign,
                         self.w2 - 3 * rows * sign,
                         self.w3 - 3 * rows * sign)


class BallRegion(NamedTuple):
    """Ball window of integer radius centered at O.

    A segment belongs to the window when both endpoints are within the
    radius; there are no flagged boundary segments.
    """

    radius: int

    @property
    def orientation(self) -> int:
        return 0

    def contains_vertex(self, vert: Vertex) -> bool:
        return vert.norm_sq_times_12() <= 12 * self.radius * self.radius

    def contains_interior(self, seg: Seg) -> bool:
        a, b = seg.endpoints()
        return self.contains_vertex(a) and self.contains_vertex(b)

    def is_boundary(self, seg: Seg) -> bool:
        return False

    def iter_vertices(self) -> Iterator[Vertex]:
        r = self.radius
        qspan = (7 * r) // 6 + 2  # |3q-1| <= sqrt(12)*r
        for q in range(-qspan, qspan + 1):
            for p in range(-qspan - r, qspan + r + 2):
                v = Vertex(p, q)
                if self.contains_vertex(v):
                    yield v

    def iter_interior_segments(self) -> Iterator[Seg]:
        for p, q in self.iter_vertices():
            for d in (1, 2, 3):
                seg = Seg(d, p, q)
                if self.contains_interior(seg):
                    yield seg

    def iter_boundary_segments(self) -> Iterator[Seg]:
        return iter(())

    def iter_tile_anchors(self) -> Iterator[tuple[int, int, int]]:
        for p, q in self.iter_vertices():
            for o in (POSITIVE, NEGATIVE):
                tri = Triangle.unit_from_anchor(o, p, q)
                if all(self.contains_vertex(v) for v in tri.vertices()):
                    yield (o, p, q)

    def iter_tiles(self) -> Iterator[Triangle]:
        for o, p, q in self.iter_tile_anchors():
            yield Triangle.unit_from_anchor(o, p, q)

    def contains_ball_of_radius(self, r: int) -> bool:
        return self.radius >= r

    def erode(self, units: int) -> "BallRegion":
        return BallRegion(max(self.radius - units, 0))


Region = TriRegion | BallRegion


def standard_region(k: int) -> TriRegion:
    """The side-2^k pattern triangle centered at O (positive iff k even)."""
    v = (-2) ** k
    return TriRegion(v, v, v)
