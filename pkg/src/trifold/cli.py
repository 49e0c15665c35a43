"""Command-line front end.

Exit codes: 0 success, 1 property violation (generator disagreement,
failed reconstruction, disallowed star, surviving period under
--assert-none), 2 usage error.  Output is a pure function of argv;
randomized checks take an explicit --rng-seed (default 0).
"""

from __future__ import annotations

import argparse
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import analysis, folding, patternio, spectral, substitution, tiling, unfold
from .errors import Inconsistent, TrifoldError, Undecidable
from .folding import FoldingSequence, PatternPatch
from .lattice import BallRegion, standard_region


def _colored_patch(seq_text: str, size: int | None, ball: int | None,
                   threads: int) -> tuple[PatternPatch, str]:
    if "," in seq_text:
        folds = unfold.parse_mixed_word(seq_text)
        if ball is not None:
            raise SystemExit("mixed foldings render on triangle windows only")
        return unfold.unfold_pattern(folds), seq_text
    seq = FoldingSequence.parse(seq_text)
    if ball is None and size is None:
        if not seq.finite:
            raise SystemExit("periodic sequences need --size or --ball")
        size = len(seq.word)

    if threads <= 1:
        if ball is not None:
            return folding.ball_patch(seq, ball), str(seq)
        return folding.patch(seq, size), str(seq)

    # threaded path: same segments, colored per chunk, merged in order
    if ball is not None:
        region = BallRegion(ball)
        boundary = frozenset()
        segs = sorted(region.iter_interior_segments())
    else:
        region = standard_region(size)
        boundary = frozenset(region.iter_boundary_segments())
        segs = sorted(region.iter_interior_segments())
        if seq.defined_through(size + 1):
            segs.extend(sorted(boundary))

    def colorize(chunk):
        return [folding.color_of_segment(seq, s) for s in chunk]

    chunks = [segs[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(colorize, chunks))
    colors = {}
    for chunk, cols in zip(chunks, results):
        colors.update(zip(chunk, cols))
    return PatternPatch(region, colors, boundary), str(seq)


def cmd_generate(args) -> int:
    patch, seq = _colored_patch(args.seq, args.size, args.ball, args.threads)
    text = patternio.write_pattern(patch, seq)
    Path(args.out).write_text(text)
    print(f"wrote {args.out}: {len(patch.colors)} segments")
    return 0


def cmd_render(args) -> int:
    patch, seq = patternio.read_pattern(Path(args.infile).read_text())
    if args.tiles:
        window = tiling.to_tiling(patch)
        svg = patternio.render_tiling_svg(window)
    else:
        svg = patternio.render_svg(patch)
    Path(args.svg).write_text(svg)
    print(f"wrote {args.svg}")
    return 0


def cmd_matrix(args) -> int:
    m = substitution.substitution_matrix(args.word)
    if args.power != 1:
        m = m.power(args.power)
    for row in m.int_rows():
        print(" ".join(str(x) for x in row))
    return 0


def cmd_spectrum(args) -> int:
    report = spectral.eigen_report(args.word)
    for line in report.lines():
        print(line)
    ok = report.pf_ok and report.unit_ok and report.kernel_ok
    return 0 if ok else 1


def cmd_density(args) -> int:
    if args.steps < 1:
        print("error: --steps must be at least 1", file=sys.stderr)
        return 2
    for n in range(1, args.steps + 1):
        vec = spectral.density_limit(args.word, n, args.seed)
        print(f"n={n} " + " ".join(str(x) for x in vec))
    dev = max(abs(x - Fraction(1, 8)) for x in vec)
    print(f"max_deviation {dev}")
    return 0


def _cross_check(word: str, threads: int) -> list[str]:
    k = len(word)
    seq = FoldingSequence(word)
    outputs = {}
    outputs["closed"], _ = _colored_patch(word, k, None, threads)
    outputs["unfold"] = unfold.unfold_pattern(unfold.uniform_word(word))
    outputs["subst"] = substitution.compose(word, 1, substitution.folding_seed(k))
    return outputs


def cmd_verify(args) -> int:
    words = []
    if args.seq:
        words.append(args.seq)
    if args.random:
        rng = random.Random(args.rng_seed)
        for _ in range(args.random):
            words.append("".join(rng.choice("+-") for _ in range(args.length)))
    if not words:
        print("nothing to verify (give --seq or --random)", file=sys.stderr)
        return 2
    methods = args.methods.split(",")
    if len(methods) < 2 or any(m not in ("closed", "unfold", "subst") for m in methods):
        print(f"error: bad --methods {args.methods!r}", file=sys.stderr)
        return 2
    bad = 0
    for word in words:
        patches = _cross_check(word, args.threads)
        base = methods[0]
        for other in methods[1:]:
            diff = folding.interior_mismatches(patches[base], patches[other])
            status = "ok" if not diff else f"MISMATCH ({len(diff)} segments)"
            print(f"{word}: {base} vs {other}: {status}")
            bad += bool(diff)
    return 1 if bad else 0


def cmd_reconstruct(args) -> int:
    window, seq = patternio.read_tiling(Path(args.infile).read_text())
    stripped = tiling.strip_decoration(window)
    try:
        colors = tiling.reconstruct(stripped)
    except (Inconsistent, Undecidable) as exc:
        print(f"reconstruction failed: {exc}")
        return 1
    print(f"reconstructed {len(colors)} segments")
    if args.ref:
        ref, _ = patternio.read_pattern(Path(args.ref).read_text())
        eroded = ref.region.erode(args.margin)
        bad = 0
        checked = 0
        for seg in eroded.iter_interior_segments():
            want = ref.colors.get(seg)
            if want is None or seg in ref.boundary:
                continue
            checked += 1
            if colors.get(seg) is not want:
                bad += 1
        print(f"reference match: {checked - bad}/{checked}")
        return 1 if bad else 0
    return 0


def cmd_stars(args) -> int:
    patch, _ = _colored_patch(args.seq, args.size, args.ball, args.threads)
    hist = analysis.vertex_star_histogram(patch)
    for star in sorted(hist):
        mark = "" if analysis.star_allowed(star) else " DISALLOWED"
        print(f"{star} {hist[star]}{mark}")
    bad = analysis.disallowed_stars(patch)
    print(f"allowed: {'true' if not bad else 'false'}")
    if args.assert_allowed and bad:
        return 1
    return 0


def cmd_period(args) -> int:
    patch, _ = _colored_patch(args.seq, args.size, args.ball, args.threads)
    if args.layer:
        patch = analysis.filter_layer(patch, args.layer)
    survivors = analysis.period_check(patch, args.max_norm)
    if survivors:
        for a, b in survivors:
            print(f"period {a} {b}")
    else:
        print("periods: none")
    if args.assert_none and survivors:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trifold",
        description="Triangular paperfolding patterns: generate, verify, analyze.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_window(p, need_seq=True):
        if need_seq:
            p.add_argument("--seq", required=True,
                           help='folding sequence: "+-+", "(+-)*", or mixed "++-,+++"')
        p.add_argument("--size", type=int, default=None,
                       help="triangle window exponent k (side 2^k)")
        p.add_argument("--ball", type=int, default=None,
                       help="ball window radius (instead of --size)")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("generate", help="write a pattern file")
    add_window(p)
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("render", help="render a pattern file to SVG")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--tiles", action="store_true",
                   help="render the decorated tiling instead of segments")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("matrix", help="print the exact substitution matrix")
    p.add_argument("--word", required=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(fn=cmd_matrix)

    p = sub.add_parser("spectrum", help="print the exact eigen report")
    p.add_argument("--word", required=True)
    p.set_defaults(fn=cmd_spectrum)

    p = sub.add_parser("density", help="print exact density vectors")
    p.add_argument("--word", required=True)
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--seed", type=int, default=1, help="tile class 1..8")
    p.set_defaults(fn=cmd_density)

    p = sub.add_parser("verify", help="cross-check the three generators")
    p.add_argument("--seq", default=None, help="finite folding word")
    p.add_argument("--methods", default="closed,unfold,subst")
    p.add_argument("--random", type=int, default=0,
                   help="also check N random words")
    p.add_argument("--length", type=int, default=5)
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("reconstruct", help="rebuild a pattern from a tiling file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--ref", default=None, help="pattern file to compare against")
    p.add_argument("--margin", type=int, default=4)
    p.set_defaults(fn=cmd_reconstruct)

    p = sub.add_parser("stars", help="vertex star histogram")
    add_window(p)
    p.add_argument("--assert-allowed", action="store_true")
    p.set_defaults(fn=cmd_stars)

    p = sub.add_parser("period", help="surviving translations")
    add_window(p)
    p.add_argument("--max-norm", type=int, default=8)
    p.add_argument("--layer", type=int, default=0,
                   help="restrict the check to one layer")
    p.add_argument("--assert-none", action="store_true")
    p.set_defaults(fn=cmd_period)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except TrifoldError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
