"""Folding sequences and the closed-form peak/valley pattern generator.

The color of a unit segment depends only on its layer k and on the
orientation of the layer triangle attached to it: with a_k the k-th
elementary folding, the segment is red (a valley) exactly when

    (layer triangle positive) XOR (k even) XOR (a_k is a folding down)

holds.  Working per segment makes the generator a pure function, so a
window of any shape can be produced directly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Iterable, Optional

from .errors import IncompatibleSequences, MalformedLayer, OutOfRegion
from .lattice import (
    BallRegion,
    Region,
    Seg,
    Triangle,
    TriRegion,
    _layer_data,
    standard_region,
    unit_tile_segments,
)

UP = "+"
DOWN = "-"


class Color(enum.Enum):
    RED = "red"    # valley
    BLUE = "blue"  # peak

    @property
    def swapped(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


@dataclass(frozen=True)
class FoldingSequence:
    """A finite word, a periodic word, or a callback over {+, -}.

    ``a(k)`` is 1-indexed; finite sequences only answer inside their
    length.  Callbacks keep arbitrary sequences out of the file formats.
    """

    word: str = ""
    periodic: bool = False
    fn: Optional[Callable[[int], str]] = None

    def __post_init__(self):
        if self.fn is None:
            if not self.word:
                raise ValueError("empty folding sequence")
            if any(c not in (UP, DOWN) for c in self.word):
                raise ValueError(f"bad folding word {self.word!r}")

    @classmethod
    def parse(cls, text: str) -> "FoldingSequence":
        """``"+-+"`` is finite; ``"(+-)*"`` repeats forever."""
        text = text.strip()
        if text.startswith("(") and text.endswith(")*"):
            return cls(word=text[1:-2], periodic=True)
        return cls(word=text)

    def __str__(self) -> str:
        if self.fn is not None:
            return "<callback>"
        return f"({self.word})*" if self.periodic else self.word

    @property
    def finite(self) -> bool:
        return self.fn is None and not self.periodic

    def a(self, k: int) -> str:
        if k < 1:
            raise ValueError("fold indices are 1-based")
        if self.fn is not None:
            value = self.fn(k)
            if value not in (UP, DOWN):
                raise ValueError(f"callback returned {value!r}")
            return value
        if self.periodic:
            return self.word[(k - 1) % len(self.word)]
        if k > len(self.word):
            raise OutOfRegion(f"a_{k} undefined for finite sequence {self.word!r}")
        return self.word[k - 1]

    def defined_through(self, k: int) -> bool:
        return not self.finite or k <= len(self.word)


@dataclass
class PatternPatch:
    """A window of segment colors with flagged boundary segments.

    Boundary segments may carry a color (when derivable) but are
    excluded from all comparisons; ``colors`` holds every known
    segment, boundary included.
    """

    region: Region
    colors: dict[Seg, Color]
    boundary: frozenset[Seg] = field(default_factory=frozenset)

    def interior_items(self) -> Iterable[tuple[Seg, Color]]:
        bnd = self.boundary
        return ((s, c) for s, c in self.colors.items() if s not in bnd)

    def interior_colors(self) -> dict[Seg, Color]:
        return dict(self.interior_items())

    def color(self, seg: Seg) -> Optional[Color]:
        return self.colors.get(seg)

    def translate(self, a: int, b: int) -> "PatternPatch":
        if isinstance(self.region, TriRegion):
            region = TriRegion(self.region.w1 - 3 * b,
                               self.region.w2 + 3 * (a + b),
                               self.region.w3 - 3 * a)
        else:
            raise ValueError("only triangular patches translate")
        colors = {s.translate(a, b): c for s, c in self.colors.items()}
        boundary = frozenset(s.translate(a, b) for s in self.boundary)
        return PatternPatch(region, colors, boundary)

    def full_tiles(self):
        """(triangle, side colors) for tiles with all three sides known."""
        get = self.colors.get
        for o, p, q in self.region.iter_tile_anchors():
            s1, s2, s3 = unit_tile_segments(o, p, q)
            c1 = get(s1)
            if c1 is None:
                continue
            c2 = get(s2)
            if c2 is None:
                continue
            c3 = get(s3)
            if c3 is None:
                continue
            yield Triangle.unit_from_anchor(o, p, q), (c1, c2, c3)


def _red(seq: FoldingSequence, d: int, p: int, q: int) -> bool:
    k, positive = _layer_data(d, p, q)
    return positive ^ (not k & 1) ^ (seq.a(k) == DOWN)


def color_of_segment(seq: FoldingSequence, seg: Seg) -> Color:
    """Closed-form color; finite sequences only answer inside their patch."""
    if seq.finite:
        region = standard_region(len(seq.word))
        if not region.contains_interior(seg):
            raise OutOfRegion(f"{seg} is not interior to the side-2^{len(seq.word)} patch")
    return Color.RED if _red(seq, *seg) else Color.BLUE


def _down_bits(seq: FoldingSequence, kmax: int) -> list[bool]:
    # bits[k-1] holds (a_k == DOWN) for layer k
    return [seq.a(k) == DOWN for k in range(1, kmax + 1)]


def patch(seq: FoldingSequence, k: int) -> PatternPatch:
    """Pattern inside the side-2^k triangle centered at O.

    Interior segments are always colored; the boundary (layer k+1) is
    colored too when a_{k+1} is defined, and stays flagged either way.
    """
    if not seq.defined_through(k):
        raise OutOfRegion(f"need {k} folds, sequence has {len(seq.word)}")
    region = standard_region(k)
    bits = _down_bits(seq, k) if k else []
    red = Color.RED
    blue = Color.BLUE
    sign = 1 if k % 2 == 0 else -1
    w2 = 2 * (-2) ** k  # doubled side-line value
    colors: dict[Seg, Color] = {}

    # One fused pass: midpoint bounds, layer, layer-triangle orientation.
    pmin, pmax, qmin, qmax = region._vertex_ranges()
    top = ((-2) ** k + 2) // 3
    for q in range(qmin, qmax + 1):
        f1 = 2 - 6 * q
        for p in range(pmin, pmax + 1):
            if sign * (p + q) > sign * top:
                continue
            f2 = 6 * (p + q) - 4
            f3 = 2 - 6 * p
            for d, m1, m2, m3 in ((1, f1, f2 + 3, f3 - 3),
                                  (2, f1 + 3, f2, f3 - 3),
                                  (3, f1 - 3, f2 + 3, f3)):
                if sign * m1 >= sign * w2 or sign * m2 >= sign * w2 \
                        or sign * m3 >= sign * w2:
                    continue
                if d == 1:
                    v = m1 // 2
                    oa, ob = m2, m3
                elif d == 2:
                    v = m2 // 2
                    oa, ob = m1, m3
                else:
                    v = m3 // 2
                    oa, ob = m1, m2
                kk = (v & -v).bit_length()
                sz = 1 << (kk - 1)
                r = sz if kk & 1 else -sz
                r2 = 2 * r
                step = 6 * sz
                step2 = 12 * sz
                tot = v + 2 * r + step * ((oa - r2) // step2) \
                    + step * ((ob - r2) // step2)
                if tot == -9 * sz:
                    is_red = (kk & 1) ^ bits[kk - 1]
                elif tot == -3 * sz:
                    is_red = not ((kk & 1) ^ bits[kk - 1])
                else:
                    raise MalformedLayer(f"segment ({d},{p},{q})")
                colors[Seg(d, p, q)] = red if is_red else blue

    boundary = frozenset(region.iter_boundary_segments())
    if seq.defined_through(k + 1):
        for seg in boundary:
            colors[seg] = red if _red(seq, *seg) else blue
    return PatternPatch(region, colors, boundary)


def ball_patch(seq: FoldingSequence, radius: int) -> PatternPatch:
    """Pattern on the radius-R ball at O (all segments colorable)."""
    region = BallRegion(radius)
    if seq.finite:
        shell = standard_region(len(seq.word))
        for seg in region.iter_interior_segments():
            if not shell.contains_interior(seg):
                raise OutOfRegion(
                    f"radius-{radius} ball exceeds the side-2^{len(seq.word)} patch")
            break
    red = Color.RED
    blue = Color.BLUE
    colors = {}
    for seg in region.iter_interior_segments():
        colors[seg] = red if _red(seq, *seg) else blue
    return PatternPatch(region, colors)


def recolor(p: PatternPatch, seq: FoldingSequence, to: FoldingSequence) -> PatternPatch:
    """Re-target a patch generated by ``seq`` onto the sequence ``to``.

    Flips the color of every segment whose layer index carries a
    different fold in the two sequences.  Periodic sequences that are
    not equal as infinite words differ in infinitely many positions
    and are rejected.
    """
    if seq.periodic and to.periodic:
        period = lcm(len(seq.word), len(to.word))
        if any(seq.a(k) != to.a(k) for k in range(1, period + 1)):
            raise IncompatibleSequences(
                f"{seq} and {to} differ in infinitely many folds")
    colors = {}
    for seg, col in p.colors.items():
        k, _ = _layer_data(*seg)
        if not to.defined_through(k):
            continue
        if not seq.defined_through(k):
            raise OutOfRegion(f"layer {k} exceeds source sequence {seq}")
        colors[seg] = col if seq.a(k) == to.a(k) else col.swapped
    return PatternPatch(p.region, colors, p.boundary)


def interior_mismatches(a: PatternPatch, b: PatternPatch) -> list[Seg]:
    """Segments colored in both interiors that disagree, plus any
    segment interior-colored in exactly one of the two patches."""
    left = a.interior_colors()
    right = b.interior_colors()
    bad = [s for s, c in left.items() if s in right and right[s] is not c]
    bad.extend(s for s in left.keys() ^ right.keys())
    return sorted(bad)
