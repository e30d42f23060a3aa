"""Exhaustive reference tools: enumeration, counting, counterexample search.

Everything here is deliberately independent of the constructive embedders
and of the dynamic-programming decider, so it can serve as ground truth
for both. Enumeration walks all placements whose prefixes stay cyclically
consecutive on the hull, which are exactly the crossing-free placements;
the equivalence itself is exercised against the segment-intersection
checker in the test suite.
"""

from __future__ import annotations

import hashlib
import importlib.resources
import json
import math
import random
from typing import Iterator, Optional

from .decider import decide_pdce
from .errors import (
    BoundExceeded,
    InternalCaseError,
    NotFoundWithinBudget,
    PdceError,
    PreconditionViolated,
    SizeMismatch,
)
from .geometry import (
    ConvexPointSet,
    GENERATOR_MODES,
    SetTag,
    classify,
    generate_random_convex,
    validate,
)
from .paths import DirPath, Embedding
from .validator import check_direction_consistency, edge_ok

DEFAULT_COUNTEREXAMPLE_LABELS = "LULRDR"


def _planar_assignments(n: int) -> Iterator[tuple]:
    # Start anywhere; every later vertex extends the occupied arc at its low
    # or high end. The last step has a single free position, so exactly
    # n * 2^(n-2) distinct placements exist for n >= 2.
    if n == 1:
        yield (0,)
        return
    for start in range(n):
        for mask in range(1 << (n - 2)):
            lo = hi = start
            out = [start]
            for step in range(n - 2):
                if (mask >> step) & 1:
                    hi = (hi + 1) % n
                    out.append(hi)
                else:
                    lo = (lo - 1) % n
                    out.append(lo)
            out.append((lo - 1) % n)
            yield tuple(out)


def enumerate_planar_embeddings(s: ConvexPointSet, bound: int = 16) -> list:
    """All crossing-free placements of a spanning walk, sorted."""
    if s.n > bound:
        raise BoundExceeded(s.n, bound)
    return [Embedding(t) for t in sorted(_planar_assignments(s.n))]


def brute_force_pdce(p: DirPath, s: ConvexPointSet, bound: int = 20) -> list:
    """All embeddings of the path by pruned exhaustive search, sorted.

    Prunes a branch as soon as an edge label fails, so it stays usable a
    little beyond the plain enumeration bound.
    """
    if p.n_vertices != s.n:
        raise SizeMismatch(
            f"path has {p.n_vertices} vertices but the set has {s.n} points"
        )
    n = s.n
    if n > bound:
        raise BoundExceeded(n, bound)
    labels = p.labels
    pts = s.points
    out = []

    def extend(k: int, lo: int, hi: int, pos: int, acc: list) -> None:
        if k == n:
            out.append(Embedding(tuple(acc)))
            return
        d = labels[k - 1]
        low = (lo - 1) % n
        high = (hi + 1) % n
        candidates = (low,) if low == high else (low, high)
        for nxt in candidates:
            if edge_ok(d, pts[pos], pts[nxt]):
                acc.append(nxt)
                if nxt == low:
                    extend(k + 1, nxt, hi, nxt, acc)
                else:
                    extend(k + 1, lo, nxt, nxt, acc)
                acc.pop()

    for start in range(n):
        if n == 1:
            out.append(Embedding((start,)))
            continue
        extend(1, start, start, start, [start])
    out.sort(key=lambda e: e.assignment)
    return out


def count_plane_spanning_paths(s: ConvexPointSet, bound: int = 16) -> int:
    """Number of crossing-free undirected spanning paths on the hull points of s.

    The value depends only on s.n, never on the coordinates; callers pass the
    set anyway so the claim can be exercised across many geometries.
    """
    n = s.n
    if n < 3:
        raise PreconditionViolated("need at least three points")
    if n > bound:
        raise BoundExceeded(n, bound)
    seen = set()
    for t in _planar_assignments(n):
        seen.add(min(t, t[::-1]))
    return len(seen)


def certificate(p: DirPath, s: ConvexPointSet, bound: int = 16) -> dict:
    """Checkable evidence for the number of embeddings of p on s.

    Lists every crossing-free candidate with the first edge that breaks its
    label, if any, and fingerprints the whole listing.
    """
    if p.n_vertices != s.n:
        raise SizeMismatch(
            f"path has {p.n_vertices} vertices but the set has {s.n} points"
        )
    candidates = enumerate_planar_embeddings(s, bound=bound)
    entries = []
    pdce_count = 0
    for e in candidates:
        ok, bad = check_direction_consistency(p, s, e)
        if ok:
            pdce_count += 1
        entries.append({"assignment": list(e.assignment), "first_bad_edge": bad})
    payload = {
        "path": p.labels,
        "points": [[pt.x, pt.y] for pt in s.points],
        "candidates": entries,
    }
    digest = hashlib.sha256(
        json.dumps(payload, sort_keys=True, separators=(",", ":")).encode("ascii")
    ).hexdigest()
    return {
        "path": p.labels,
        "points": [[pt.x, pt.y] for pt in s.points],
        "planar_count": len(candidates),
        "pdce_count": pdce_count,
        "candidates": entries,
        "certificate_sha256": digest,
    }


_ONE_SIDED_ARC = {
    "left_sided": (0.5 * math.pi, 1.5 * math.pi),
    "right_sided": (-0.5 * math.pi, 0.5 * math.pi),
}

_ONE_SIDED_TAG = {
    "left_sided": SetTag.LEFT_SIDED,
    "right_sided": SetTag.RIGHT_SIDED,
}


def _sample_one_sided(rng: random.Random, n: int, mode: str) -> Optional[ConvexPointSet]:
    # Small-coordinate sampler: a semicircle inside [0, 64]^2 keeps found
    # sets easy to print and to freeze in fixtures.
    lo, hi = _ONE_SIDED_ARC[mode]
    for _ in range(200):
        angles = sorted(rng.uniform(lo, hi) for _ in range(n))
        coords = [
            (round(32 + 31.5 * math.cos(a)), round(32 + 31.5 * math.sin(a)))
            for a in angles
        ]
        try:
            s = validate(coords)
        except PdceError:
            continue
        if _ONE_SIDED_TAG[mode] in classify(s).tags:
            return s
    return None


def search_counterexample(
    path: Optional[DirPath] = None,
    n: int = 7,
    mode: str = "left_sided",
    budget: int = 100_000,
    seed=0,
) -> ConvexPointSet:
    """Search point sets of the given class for one admitting no embedding.

    Candidates are deduplicated by their order signature (the x-order and
    y-order of the canonical hull sequence), since existence only depends
    on it. A hit is certified twice: by the decision procedure and, for
    small n, by pruned exhaustive search. Raises NotFoundWithinBudget after
    the given number of sampled candidates.
    """
    p = path if path is not None else DirPath(DEFAULT_COUNTEREXAMPLE_LABELS)
    if p.n_vertices != n:
        raise SizeMismatch(f"path has {p.n_vertices} vertices, requested n={n}")
    if mode not in GENERATOR_MODES:
        raise PreconditionViolated(f"unknown mode {mode!r}")
    rng = random.Random(f"search:{seed}:{mode}:{n}:{p.labels}")
    seen = set()
    for k in range(budget):
        if mode in _ONE_SIDED_ARC:
            s = _sample_one_sided(rng, n, mode)
        else:
            s = generate_random_convex(n, seed=f"{seed}:{k}", mode=mode)
        if s is None:
            continue
        signature = (s.x_order, s.y_order)
        if signature in seen:
            continue
        seen.add(signature)
        if decide_pdce(p, s) is None:
            if s.n <= 20 and brute_force_pdce(p, s):
                raise InternalCaseError(
                    "decision procedure and exhaustive search disagree"
                )
            return s
    raise NotFoundWithinBudget(budget)


def load_counterexample() -> tuple:
    """The packaged no-embedding instance: (path, point set, frozen record)."""
    text = (
        importlib.resources.files("pdce")
        .joinpath("data/counterexample.json")
        .read_text(encoding="ascii")
    )
    doc = json.loads(text)
    s = validate([tuple(pt) for pt in doc["points"]])
    p = DirPath(doc["path"])
    return p, s, doc
