"""Command line front end: embed, decide, verify, oracle, gen, render.

Exit codes follow one convention for every subcommand: 0 for success or a
YES answer, 1 for a NO answer or an embedding that fails validation, 2 for
unusable input or bad usage (reported as a single line on stderr).
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .decider import decide_pdce
from .embedder import embed_quarter_convex, embed_three_directional
from .errors import (
    InternalCaseError,
    InvalidEmbedding,
    NotFoundWithinBudget,
    PdceError,
    SizeMismatch,
)
from .geometry import (
    GENERATOR_MODES,
    ConvexPointSet,
    classify,
    format_points_text,
    generate_random_convex,
    parse_points_json,
    parse_points_text,
    validate,
)
from .oracle import (
    DEFAULT_COUNTEREXAMPLE_LABELS,
    brute_force_pdce,
    count_plane_spanning_paths,
    enumerate_planar_embeddings,
    search_counterexample,
)
from .paths import DirPath, Embedding
from .validator import validate_embedding


# ---------------------------------------------------------------------------
# SVG rendering


CANVAS = 720
MARGIN = 40.0
NODE_RADIUS = 9.0

EDGE_COLORS = {
    "U": "#1f77b4",
    "D": "#d62728",
    "L": "#2ca02c",
    "R": "#9467bd",
}


def _screen_transform(s: ConvexPointSet):
    xs = [pt.x for pt in s.points]
    ys = [pt.y for pt in s.points]
    minx, maxx = min(xs), max(xs)
    miny, maxy = min(ys), max(ys)
    span = max(maxx - minx, maxy - miny, 1)
    scale = (CANVAS - 2.0 * MARGIN) / span

    def to_screen(pt):
        # SVG y grows downward; flip so an Up edge points up on screen.
        return MARGIN + (pt.x - minx) * scale, MARGIN + (maxy - pt.y) * scale

    return to_screen


def _edge_element(x1, y1, x2, y2, label: str) -> str:
    # Pull both ends back so the arrowhead meets the node circle's rim
    # instead of vanishing underneath it.
    dx, dy = x2 - x1, y2 - y1
    dist = math.hypot(dx, dy)
    if dist > 3.0 * NODE_RADIUS:
        ux, uy = dx / dist, dy / dist
        x1, y1 = x1 + ux * NODE_RADIUS, y1 + uy * NODE_RADIUS
        x2, y2 = x2 - ux * (NODE_RADIUS + 3.0), y2 - uy * (NODE_RADIUS + 3.0)
    return (
        f'<line class="edge edge-{label}" x1="{x1:.2f}" y1="{y1:.2f}" '
        f'x2="{x2:.2f}" y2="{y2:.2f}" stroke="{EDGE_COLORS[label]}" '
        f'stroke-width="2.5" marker-end="url(#arrow-{label})"/>'
    )


def render_svg(p: DirPath, s: ConvexPointSet, e: Embedding, force: bool = False) -> str:
    """Draw the embedding as an SVG document string.

    The output is a pure function of the arguments, byte for byte. Unless
    force is given the embedding must validate as a PDCE; with force any
    assignment of in-range indices is drawn, crossings and all.
    """
    if p.n_vertices != s.n:
        raise SizeMismatch(
            f"path has {p.n_vertices} vertices but the set has {s.n} points"
        )
    if len(e) != s.n:
        raise InvalidEmbedding(f"embedding has {len(e)} entries for {s.n} points")
    for idx in e.assignment:
        if not isinstance(idx, int) or not 0 <= idx < s.n:
            raise InvalidEmbedding(f"vertex index {idx!r} is out of range")
    if not force:
        report = validate_embedding(p, s, e)
        if not report.is_pdce:
            raise InvalidEmbedding(
                f"embedding fails validation (first violation: "
                f"{report.first_violation}); use force to draw it anyway"
            )

    to_screen = _screen_transform(s)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" '
        f'height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        "<defs>",
    ]
    for label in "UDLR":
        out.append(
            f'<marker id="arrow-{label}" viewBox="0 0 10 10" refX="9" refY="5" '
            f'markerWidth="6" markerHeight="6" orient="auto">'
            f'<path d="M 0 0 L 10 5 L 0 10 z" fill="{EDGE_COLORS[label]}"/>'
            f"</marker>"
        )
    out.append("</defs>")
    out.append(f'<rect width="{CANVAS}" height="{CANVAS}" fill="#ffffff"/>')
    hull = " ".join(f"{x:.2f},{y:.2f}" for x, y in map(to_screen, s.points))
    out.append(
        f'<polygon class="hull" points="{hull}" fill="none" stroke="#bbbbbb" '
        f'stroke-width="1" stroke-dasharray="5 4"/>'
    )
    screen = [to_screen(s.points[idx]) for idx in e.assignment]
    for k, label in enumerate(p.labels):
        out.append(_edge_element(*screen[k], *screen[k + 1], label))
    for k, (x, y) in enumerate(screen):
        out.append(
            f'<circle class="node" cx="{x:.2f}" cy="{y:.2f}" r="{NODE_RADIUS:.0f}" '
            f'fill="#ffffff" stroke="#333333" stroke-width="1.5"/>'
        )
        out.append(
            f'<text class="node-label" x="{x + 12.0:.2f}" y="{y - 10.0:.2f}" '
            f'font-family="monospace" font-size="13">v{k + 1}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Input helpers


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_points(path: str) -> ConvexPointSet:
    text = _read_text(path)
    if text.lstrip().startswith("{"):
        raw = parse_points_json(text)
    else:
        raw = parse_points_text(text)
    return validate(raw)


def _load_embedding(path: str, n: int) -> Embedding:
    rows = []
    for ln, line in enumerate(_read_text(path).splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        try:
            rows.append(int(body))
        except ValueError:
            raise InvalidEmbedding(f"line {ln}: expected one integer, got {body!r}") from None
    if len(rows) != n:
        raise InvalidEmbedding(f"expected {n} embedding lines, found {len(rows)}")
    return Embedding(tuple(rows))


def _print_embedding(e: Embedding) -> None:
    sys.stdout.write("".join(f"{idx}\n" for idx in e.assignment))


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_embed(args) -> int:
    s = _load_points(args.points)
    p = DirPath(args.path)
    if p.n_vertices != s.n:
        raise SizeMismatch(
            f"path has {p.n_vertices} vertices but the set has {s.n} points"
        )
    if len(p.directions_used()) == 4:
        cls = classify(s)
        if not (cls.is_quarter_inc or cls.is_quarter_dec):
            print(
                "error: the path uses all four labels and the point set is not "
                "an x/y-monotone chain; an embedding may not exist, try `pdce decide`",
                file=sys.stderr,
            )
            return 2
        e = embed_quarter_convex(p, s)
    else:
        e = embed_three_directional(p, s)
    _print_embedding(e)
    return 0


def _cmd_decide(args) -> int:
    s = _load_points(args.points)
    p = DirPath(args.path)
    e = decide_pdce(p, s)
    if e is None:
        print("NO")
        return 1
    _print_embedding(e)
    return 0


def _cmd_verify(args) -> int:
    s = _load_points(args.points)
    p = DirPath(args.path)
    try:
        e = _load_embedding(args.embedding, s.n)
        report = validate_embedding(p, s, e)
    except InvalidEmbedding as exc:
        print(json.dumps({"well_formed": False, "error": str(exc)}, indent=2))
        return 1
    doc = {"well_formed": True}
    doc.update(report.to_json_dict())
    print(json.dumps(doc, indent=2))
    return 0 if report.is_pdce else 1


def _cmd_oracle_count(args) -> int:
    s = _load_points(args.points)
    print(f"planar-embeddings {len(enumerate_planar_embeddings(s))}")
    if s.n >= 3:
        print(f"plane-spanning-paths {count_plane_spanning_paths(s)}")
    return 0


def _cmd_oracle_all_pdce(args) -> int:
    s = _load_points(args.points)
    p = DirPath(args.path)
    hits = brute_force_pdce(p, s)
    for e in hits:
        print(" ".join(str(idx) for idx in e.assignment))
    if not hits:
        print("no direction-consistent planar embedding exists", file=sys.stderr)
        return 1
    return 0


def _cmd_oracle_search(args) -> int:
    p = DirPath(args.path)
    try:
        s = search_counterexample(
            path=p,
            n=p.n_vertices,
            mode=args.mode,
            budget=args.budget,
            seed=args.seed,
        )
    except NotFoundWithinBudget as exc:
        print(str(exc), file=sys.stderr)
        return 1
    sys.stdout.write(format_points_text(s.points))
    return 0


def _cmd_gen(args) -> int:
    blocks = []
    for i in range(args.count):
        seed = args.seed if args.count == 1 else f"{args.seed}#{i}"
        s = generate_random_convex(args.n, seed=seed, mode=args.mode)
        blocks.append(format_points_text(s.points))
    sys.stdout.write("\n".join(blocks))
    return 0


def _cmd_render(args) -> int:
    s = _load_points(args.points)
    p = DirPath(args.path)
    try:
        e = _load_embedding(args.embedding, s.n)
        doc = render_svg(p, s, e, force=args.force)
    except InvalidEmbedding as exc:
        print(f"invalid embedding: {exc}", file=sys.stderr)
        return 1
    if args.svg:
        with open(args.svg, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


# ---------------------------------------------------------------------------
# Parser plumbing


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="pdce",
        description="Construct, decide, verify, and draw planar "
        "direction-consistent embeddings of labeled paths on convex point sets.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_embed = sub.add_parser(
        "embed", help="construct an embedding (at most three labels, or a monotone chain)"
    )
    p_embed.add_argument("--points", required=True, metavar="FILE")
    p_embed.add_argument("--path", required=True, metavar="STRING")
    p_embed.set_defaults(func=_cmd_embed)

    p_decide = sub.add_parser("decide", help="decide existence; print a witness or NO")
    p_decide.add_argument("--points", required=True, metavar="FILE")
    p_decide.add_argument("--path", required=True, metavar="STRING")
    p_decide.set_defaults(func=_cmd_decide)

    p_verify = sub.add_parser("verify", help="validate a given embedding, report as JSON")
    p_verify.add_argument("--points", required=True, metavar="FILE")
    p_verify.add_argument("--path", required=True, metavar="STRING")
    p_verify.add_argument("--embedding", required=True, metavar="FILE")
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exhaustive ground-truth tools")
    osub = p_oracle.add_subparsers(dest="oracle_mode", required=True)

    p_count = osub.add_parser("count", help="count planar embeddings and plane paths")
    p_count.add_argument("--points", required=True, metavar="FILE")
    p_count.set_defaults(func=_cmd_oracle_count)

    p_all = osub.add_parser("all-pdce", help="list every embedding by brute force")
    p_all.add_argument("--points", required=True, metavar="FILE")
    p_all.add_argument("--path", required=True, metavar="STRING")
    p_all.set_defaults(func=_cmd_oracle_all_pdce)

    p_search = osub.add_parser("search", help="search for a set admitting no embedding")
    p_search.add_argument(
        "--path", default=DEFAULT_COUNTEREXAMPLE_LABELS, metavar="STRING"
    )
    p_search.add_argument("--mode", default="left_sided", choices=GENERATOR_MODES)
    p_search.add_argument("--budget", type=int, default=100_000, metavar="N")
    p_search.add_argument("--seed", default=0, metavar="N")
    p_search.set_defaults(func=_cmd_oracle_search)

    p_gen = sub.add_parser("gen", help="generate random convex instances")
    p_gen.add_argument("--n", type=int, required=True, metavar="N")
    p_gen.add_argument("--seed", default=0, metavar="N")
    p_gen.add_argument("--mode", default="general", choices=GENERATOR_MODES)
    p_gen.add_argument("--count", type=int, default=1, metavar="K")
    p_gen.set_defaults(func=_cmd_gen)

    p_render = sub.add_parser("render", help="draw an embedding as SVG")
    p_render.add_argument("--points", required=True, metavar="FILE")
    p_render.add_argument("--path", required=True, metavar="STRING")
    p_render.add_argument("--embedding", required=True, metavar="FILE")
    p_render.add_argument("--svg", metavar="FILE", help="output file (default: stdout)")
    p_render.add_argument(
        "--force", action="store_true", help="draw even if the embedding is invalid"
    )
    p_render.set_defaults(func=_cmd_render)

    return ap


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalCaseError:
        # A failed construction is a bug here, not bad input; crash loudly.
        raise
    except (PdceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
