"""Constructive embedders for direction-labeled paths on convex point sets.

The entry point for arbitrary convex sets is embed_three_directional, which
handles every path that avoids at least one of the four labels. It reduces
everything to the U/D/R case via the reversal, rotation and mirror
operators, and the U/D/R case is solved by a divide-and-conquer along the
line through the bottom and top points (plan_udr_case / execute_plan).

The planner only chooses index ranges and point subsets; all actual
coordinates are handled by three primitive embedders (left-sided,
right-sided, strip) plus plain y-sorting for monotone runs. Each primitive
checks its own entry conditions and endpoint guarantees at runtime, so a
planner bug surfaces as InternalCaseError instead of a wrong drawing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    FourDirectional,
    InternalCaseError,
    PreconditionViolated,
    SizeMismatch,
)
from .geometry import ConvexPointSet, classify, split_by_bt_line, validate
from .paths import (
    DirPath,
    Embedding,
    mirror_embedding,
    mirror_path,
    mirror_set,
    reverse_embedding,
    reverse_path,
    rotate_embedding,
    rotate_path,
    rotate_set,
)
from .validator import check_direction_consistency, check_planarity_prefix

UDR = frozenset("UDR")
UR = frozenset("UR")


def _require_same_size(p: DirPath, s: ConvexPointSet) -> None:
    if p.n_vertices != s.n:
        raise SizeMismatch(
            f"path needs {p.n_vertices} points but the set has {s.n}"
        )


def _cheap_check(p: DirPath, s: ConvexPointSet, e: Embedding, context: str) -> None:
    ok, bad = check_direction_consistency(p, s, e)
    if not ok:
        raise InternalCaseError(f"{context}: edge {bad} violates its label")
    if not check_planarity_prefix(s, e):
        raise InternalCaseError(f"{context}: construction produced a crossing")


def backward_embedding(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Greedy assignment of v_n down to v_2, then v_1 takes the leftover.

    For each edge label, the head of the edge is put on the extreme free
    point in that direction (topmost for U, bottommost for D, leftmost for
    L, rightmost for R). The result is always direction-consistent; it is
    crossing-free under the entry conditions of the callers below.
    """
    _require_same_size(p, s)
    n = s.n
    used = [False] * n
    keys = {
        "U": lambda k: -s.points[k].y,
        "D": lambda k: s.points[k].y,
        "L": lambda k: s.points[k].x,
        "R": lambda k: -s.points[k].x,
    }
    order = {d: sorted(range(n), key=keys[d]) for d in set(p.labels)}
    cursor = {d: 0 for d in order}
    out: list[Optional[int]] = [None] * n
    for k in range(n - 1, 0, -1):
        d = p.labels[k - 1]
        lst = order[d]
        c = cursor[d]
        while used[lst[c]]:
            c += 1
        cursor[d] = c
        out[k] = lst[c]
        used[lst[c]] = True
    out[0] = next(i for i in range(n) if not used[i])
    return Embedding(tuple(out))


def embed_udr_left_sided(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed a U/D/R path on a left-sided set via the backward assignment.

    Guarantees for n >= 2: the last vertex lands on the top, bottom or
    rightmost point when the last label is U, D or R respectively (and the
    rightmost point of a left-sided set is its top or bottom).
    """
    _require_same_size(p, s)
    if not p.directions_used() <= UDR:
        raise PreconditionViolated("left-sided embedding handles U/D/R labels only")
    if not classify(s).is_left_sided:
        raise PreconditionViolated("point set is not left-sided")
    e = backward_embedding(p, s)
    if s.n >= 2:
        want = {"U": s.top_index, "D": s.bottom_index, "R": s.right_index}
        if e[s.n - 1] != want[p.labels[-1]]:
            raise InternalCaseError("left-sided endpoint guarantee broken")
    _cheap_check(p, s, e, "left-sided")
    return e


def embed_udr_right_sided(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed a U/D/R path on a right-sided set.

    A half-turn of the plane maps the instance to a left-sided one and the
    reversed path keeps its labels, so the left-sided routine applies;
    two more quarter turns bring the result back. Guarantees for n >= 2:
    the first vertex lands on the bottom, top or leftmost point when the
    first label is U, D or R respectively.
    """
    _require_same_size(p, s)
    if not p.directions_used() <= UDR:
        raise PreconditionViolated("right-sided embedding handles U/D/R labels only")
    if not classify(s).is_right_sided:
        raise PreconditionViolated("point set is not right-sided")
    s2 = rotate_set(rotate_set(s))
    p3 = reverse_path(rotate_path(rotate_path(p)))
    e3 = embed_udr_left_sided(p3, s2)
    e2 = reverse_embedding(e3)
    s3 = rotate_set(s2)
    e = rotate_embedding(rotate_embedding(e2, s2), s3)
    if s.n >= 2:
        want = {"U": s.bottom_index, "D": s.top_index, "R": s.left_index}
        if e[0] != want[p.labels[0]]:
            raise InternalCaseError("right-sided endpoint guarantee broken")
    _cheap_check(p, s, e, "right-sided")
    return e


def embed_ur_strip(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed a U/R path on a strip-convex set via the backward assignment.

    Guarantees for n >= 2: the first vertex lands on the bottom or leftmost
    point, and the last vertex lands on the top (last label U) or rightmost
    point (last label R).
    """
    _require_same_size(p, s)
    if not p.directions_used() <= UR:
        raise PreconditionViolated("strip embedding handles U/R labels only")
    if not classify(s).is_strip:
        raise PreconditionViolated("point set is not strip-convex")
    e = backward_embedding(p, s)
    if s.n >= 2:
        if e[0] not in (s.bottom_index, s.left_index):
            raise InternalCaseError("strip endpoint guarantee broken (first vertex)")
        want = s.top_index if p.labels[-1] == "U" else s.right_index
        if e[s.n - 1] != want:
            raise InternalCaseError("strip endpoint guarantee broken (last vertex)")
    _cheap_check(p, s, e, "strip")
    return e


@dataclass(frozen=True)
class CasePart:
    """One piece of a divide-and-conquer plan.

    points are indices into the parent canonical set; vertex bounds are
    1-based and inclusive. Consecutive parts either share their boundary
    vertex (both then must place it on the same point) or are joined by a
    connecting edge that the final validation checks.
    """

    name: str
    points: tuple[int, ...]
    first_vertex: int
    last_vertex: int
    method: str  # left_sided | right_sided | strip | sort_up | sort_down


@dataclass(frozen=True)
class CasePlan:
    case_tag: str
    m: int
    alpha: int
    beta: int
    i: Optional[int] = None
    j: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    c: Optional[int] = None
    e: Optional[int] = None
    parts: tuple[CasePart, ...] = ()


def _pick(s: ConvexPointSet, pool, k: int, key, reverse: bool = False):
    ordered = sorted(pool, key=key, reverse=reverse)
    if k > len(ordered):
        raise InternalCaseError(f"asked for {k} points from a pool of {len(ordered)}")
    return tuple(sorted(ordered[:k]))


def _lowest(s, pool, k):
    return _pick(s, pool, k, lambda i: s.points[i].y)


def _highest(s, pool, k):
    return _pick(s, pool, k, lambda i: s.points[i].y, reverse=True)


def _leftmost(s, pool, k):
    return _pick(s, pool, k, lambda i: s.points[i].x)


def _rightmost(s, pool, k):
    return _pick(s, pool, k, lambda i: s.points[i].x, reverse=True)


def _rest(n: int, taken, extra=()) -> tuple[int, ...]:
    keep = (set(range(n)) - set(taken)) | set(extra)
    return tuple(sorted(keep))


def _d_run(labels: str, m: int) -> tuple[int, int]:
    # Maximal run of D edges around the 1-based edge indices m, m+1.
    a = m
    while a > 1 and labels[a - 2] == "D":
        a -= 1
    b = m + 1
    while b < len(labels) and labels[b] == "D":
        b += 1
    return a, b


def _ur_run(labels: str, m: int) -> tuple[int, int]:
    i = m
    while i > 1 and labels[i - 2] != "D":
        i -= 1
    j = m + 1
    while j < len(labels) and labels[j] != "D":
        j += 1
    return i, j


def _u_run(labels: str, k: int) -> tuple[int, int]:
    # Maximal run of U edges around the 1-based edge index k.
    a = k
    while a > 1 and labels[a - 2] == "U":
        a -= 1
    b = k
    while b < len(labels) and labels[b] == "U":
        b += 1
    return a, b


def _strip_plan_parts(s, sp, L: int, H: int) -> tuple[CasePart, ...]:
    # Left cap carries v_1..v_L ending on the bottom point, the strip part
    # carries the U/R stretch v_L..v_H between bottom and top, the right cap
    # carries v_H..v_n starting on the top point.
    n = s.n
    cap_l = _lowest(s, sp.left_part + (s.bottom_index,), L)
    cap_r = _highest(s, sp.right_part + (s.top_index,), n - H + 1)
    strip = _rest(n, set(cap_l) | set(cap_r), (s.bottom_index, s.top_index))
    return (
        CasePart("left-cap", cap_l, 1, L, "left_sided"),
        CasePart("strip", strip, L, H, "strip"),
        CasePart("right-cap", cap_r, H, n, "right_sided"),
    )


def _run_high_plan_parts(s, sp, L: int, a: int, b: int) -> tuple[CasePart, ...]:
    # The U run v_a..v_{b+1} climbs a column that ends on the top point; a
    # strip part to its left hosts v_L..v_{a-1} when the run starts later
    # than the left cap ends.
    n = s.n
    cap_l = _lowest(s, sp.left_part + (s.bottom_index,), L)
    cap_r = _highest(s, sp.right_part + (s.top_index,), n - b)
    parts = [CasePart("left-cap", cap_l, 1, L, "left_sided")]
    if a > L:
        pool = _rest(n, cap_l, (s.bottom_index,))
        strip = _leftmost(s, pool, a - L)
        column = _rest(n, set(cap_l) | set(strip) | set(cap_r), (s.top_index,))
        parts.append(CasePart("strip", strip, L, a - 1, "strip"))
        parts.append(CasePart("column", column, a, b + 1, "sort_up"))
    else:
        column = _rest(n, set(cap_l) | set(cap_r), (s.top_index,))
        parts.append(CasePart("column", column, a + 1, b + 1, "sort_up"))
    parts.append(CasePart("right-cap", cap_r, b + 1, n, "right_sided"))
    return tuple(parts)


def _run_low_plan_parts(s, sp, a: int, b: int, H: int) -> tuple[CasePart, ...]:
    # Mirror image of the previous shape: the U run v_a..v_{b+1} climbs a
    # column out of the bottom point, and a strip part to its right hosts
    # v_{b+2}..v_H when the run ends before the right cap starts.
    n = s.n
    cap_l = _lowest(s, sp.left_part + (s.bottom_index,), a)
    cap_r = _highest(s, sp.right_part + (s.top_index,), n - H + 1)
    parts = [CasePart("left-cap", cap_l, 1, a, "left_sided")]
    if b < H - 1:
        pool = _rest(n, cap_r, (s.top_index,))
        strip = _rightmost(s, pool, H - 1 - b)
        column = _rest(n, set(cap_l) | set(strip) | set(cap_r), (s.bottom_index,))
        parts.append(CasePart("column", column, a, b + 1, "sort_up"))
        parts.append(CasePart("strip", strip, b + 2, H, "strip"))
    else:
        column = _rest(n, set(cap_l) | set(cap_r), (s.bottom_index,))
        parts.append(CasePart("column", column, a, b, "sort_up"))
    parts.append(CasePart("right-cap", cap_r, H, n, "right_sided"))
    return tuple(parts)


def _two_runs_plan_parts(s, sp, a: int, b: int, c: int, e: int) -> tuple[CasePart, ...]:
    # Two U runs: one crossing the height of the bottom point, one crossing
    # the height of the top point, with an optional U/R stretch between.
    n = s.n
    cap_l = _lowest(s, sp.left_part + (s.bottom_index,), a)
    cap_r = _highest(s, sp.right_part + (s.top_index,), n - e)
    pool = _rest(n, set(cap_l) | set(cap_r), (s.bottom_index, s.top_index))
    parts = [CasePart("left-cap", cap_l, 1, a, "left_sided")]
    if a == c:
        # Both labels sit in the same U run.
        parts.append(CasePart("column", pool, a, e + 1, "sort_up"))
    else:
        col_l = _leftmost(s, pool, b - a + 2)
        col_r = _rightmost(s, pool, e - c + 2)
        parts.append(CasePart("left-column", col_l, a, b + 1, "sort_up"))
        if c > b + 2:
            strip = tuple(sorted(set(pool) - set(col_l) - set(col_r)))
            parts.append(CasePart("mid-strip", strip, b + 2, c - 1, "strip"))
        parts.append(CasePart("right-column", col_r, c, e + 1, "sort_up"))
    parts.append(CasePart("right-cap", cap_r, e + 1, n, "right_sided"))
    return tuple(parts)


def plan_udr_case(p: DirPath, s: ConvexPointSet) -> CasePlan:
    """Choose the divide-and-conquer shape for a U/D/R path.

    Requires at least two points and the top point strictly to the right of
    the bottom point. The split line through bottom and top yields m points
    on its left; the plan is selected from the labels of the two edges that
    straddle position m and, in the mixed cases, from how the maximal U/R
    stretch around them relates to the columns of the bottom and top points.
    """
    _require_same_size(p, s)
    if not p.directions_used() <= UDR:
        raise PreconditionViolated("case analysis handles U/D/R labels only")
    if s.n < 2:
        raise PreconditionViolated("case analysis needs at least two points")
    if s.top.x < s.bottom.x:
        raise PreconditionViolated("top point must lie to the right of the bottom point")
    sp = split_by_bt_line(s)
    n, m, alpha, beta = s.n, sp.m, sp.alpha, sp.beta
    labels = p.labels
    everything = tuple(range(n))

    if m == n - 2:
        part = CasePart("whole", everything, 1, n, "left_sided")
        return CasePlan("left-sided", m, alpha, beta, parts=(part,))
    if m == 0:
        part = CasePart("whole", everything, 1, n, "right_sided")
        return CasePlan("right-sided", m, alpha, beta, parts=(part,))

    d_m, d_m1 = labels[m - 1], labels[m]
    if d_m == "D" and d_m1 != "D":
        parts = (
            CasePart(
                "left-cap",
                tuple(sorted(sp.left_part + (s.bottom_index,))),
                1,
                m + 1,
                "left_sided",
            ),
            CasePart(
                "right-cap",
                tuple(sorted(sp.right_part + (s.top_index, s.bottom_index))),
                m + 1,
                n,
                "right_sided",
            ),
        )
        return CasePlan("down-up", m, alpha, beta, parts=parts)
    if d_m != "D" and d_m1 == "D":
        parts = (
            CasePart(
                "left-cap",
                tuple(sorted(sp.left_part + (s.top_index,))),
                1,
                m + 1,
                "left_sided",
            ),
            CasePart(
                "right-cap",
                tuple(sorted(sp.right_part + (s.top_index, s.bottom_index))),
                m + 1,
                n,
                "right_sided",
            ),
        )
        return CasePlan("up-down", m, alpha, beta, parts=parts)
    if d_m == "D" and d_m1 == "D":
        a, b = _d_run(labels, m)
        cap_l = _highest(s, sp.left_part + (s.top_index,), a)
        cap_r = _lowest(s, sp.right_part + (s.bottom_index,), n - b)
        descent = _rest(n, set(cap_l) | set(cap_r), (s.top_index, s.bottom_index))
        parts = (
            CasePart("left-cap", cap_l, 1, a, "left_sided"),
            CasePart("descent", descent, a, b + 1, "sort_down"),
            CasePart("right-cap", cap_r, b + 1, n, "right_sided"),
        )
        return CasePlan("down-run", m, alpha, beta, a=a, b=b, parts=parts)

    # Both straddling edges are U or R: work with the maximal U/R stretch.
    i, j = _ur_run(labels, m)
    low_cut = i <= alpha
    high_cut = j >= beta
    if not low_cut and not high_cut:
        parts = _strip_plan_parts(s, sp, i, j + 1)
        return CasePlan("mid-strip", m, alpha, beta, i=i, j=j, parts=parts)
    if not low_cut and high_cut:
        if labels[beta - 1] == "R":
            parts = _strip_plan_parts(s, sp, i, beta)
            return CasePlan("mid-strip-right-cut", m, alpha, beta, i=i, j=j, parts=parts)
        a, b = _u_run(labels, beta)
        parts = _run_high_plan_parts(s, sp, i, a, b)
        return CasePlan("up-run-high", m, alpha, beta, i=i, j=j, a=a, b=b, parts=parts)
    if low_cut and not high_cut:
        if labels[alpha - 1] == "R":
            parts = _strip_plan_parts(s, sp, alpha + 1, j + 1)
            return CasePlan("mid-strip-left-cut", m, alpha, beta, i=i, j=j, parts=parts)
        a, b = _u_run(labels, alpha)
        parts = _run_low_plan_parts(s, sp, a, b, j + 1)
        return CasePlan("up-run-low", m, alpha, beta, i=i, j=j, a=a, b=b, parts=parts)

    d_alpha, d_beta = labels[alpha - 1], labels[beta - 1]
    if d_alpha == "R" and d_beta == "R":
        parts = _strip_plan_parts(s, sp, alpha + 1, beta)
        return CasePlan("mid-strip-both-cuts", m, alpha, beta, i=i, j=j, parts=parts)
    if d_alpha == "R":
        a, b = _u_run(labels, beta)
        parts = _run_high_plan_parts(s, sp, alpha + 1, a, b)
        return CasePlan(
            "up-run-high-left-cut", m, alpha, beta, i=i, j=j, a=a, b=b, parts=parts
        )
    if d_beta == "R":
        a, b = _u_run(labels, alpha)
        parts = _run_low_plan_parts(s, sp, a, b, beta)
        return CasePlan(
            "up-run-low-right-cut", m, alpha, beta, i=i, j=j, a=a, b=b, parts=parts
        )
    a, b = _u_run(labels, alpha)
    c, e = _u_run(labels, beta)
    parts = _two_runs_plan_parts(s, sp, a, b, c, e)
    return CasePlan("two-up-runs", m, alpha, beta, i=i, j=j, a=a, b=b, c=c, e=e, parts=parts)


def execute_plan(p: DirPath, s: ConvexPointSet, plan: CasePlan) -> Embedding:
    """Carry out a plan and validate the merged result."""
    n = s.n
    slots: list[Optional[int]] = [None] * n
    for part in plan.parts:
        count = part.last_vertex - part.first_vertex + 1
        if len(part.points) != count:
            raise InternalCaseError(
                f"part {part.name} hosts {count} vertices on {len(part.points)} points"
            )
        if part.method in ("sort_up", "sort_down"):
            local = sorted(
                part.points,
                key=lambda k: s.points[k].y,
                reverse=part.method == "sort_down",
            )
        else:
            sub_set = validate([s.points[k] for k in part.points])
            sub_path = p.subpath(part.first_vertex, part.last_vertex)
            if part.method == "left_sided":
                sub_e = embed_udr_left_sided(sub_path, sub_set)
            elif part.method == "right_sided":
                sub_e = embed_udr_right_sided(sub_path, sub_set)
            elif part.method == "strip":
                sub_e = embed_ur_strip(sub_path, sub_set)
            else:
                raise InternalCaseError(f"unknown part method {part.method!r}")
            local = [s.index_of(sub_set.points[idx]) for idx in sub_e.assignment]
        for off in range(count):
            slot = part.first_vertex - 1 + off
            if slots[slot] is None:
                slots[slot] = local[off]
            elif slots[slot] != local[off]:
                raise InternalCaseError(
                    f"parts disagree on vertex {slot + 1}: "
                    f"{slots[slot]} vs {local[off]}"
                )
    if any(v is None for v in slots):
        raise InternalCaseError(f"plan {plan.case_tag} left vertices unassigned")
    e = Embedding(tuple(slots))
    _cheap_check(p, s, e, f"plan {plan.case_tag}")
    return e


def embed_udr_convex(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed a U/D/R path on any convex set whose top is right of its bottom."""
    _require_same_size(p, s)
    if not p.directions_used() <= UDR:
        raise PreconditionViolated("this construction handles U/D/R labels only")
    if s.n == 1:
        return Embedding((0,))
    if s.top.x < s.bottom.x:
        raise PreconditionViolated("top point must lie to the right of the bottom point")
    return execute_plan(p, s, plan_udr_case(p, s))


def _rotate_back(e: Embedding, s_rot: ConvexPointSet) -> Embedding:
    # Three more quarter turns return a rotated instance to the original.
    cur = s_rot
    for _ in range(3):
        e = rotate_embedding(e, cur)
        cur = rotate_set(cur)
    return e


def _embed_udr_any(p: DirPath, s: ConvexPointSet) -> Embedding:
    if s.n == 1:
        return Embedding((0,))
    if s.top.x > s.bottom.x:
        return embed_udr_convex(p, s)
    # Mirroring puts the top right of the bottom; reversing first keeps the
    # label set inside U/D/R.
    sm = mirror_set(s)
    pm = mirror_path(reverse_path(p))
    em = embed_udr_convex(pm, sm)
    return reverse_embedding(mirror_embedding(em, sm))


def embed_three_directional(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed any path that avoids at least one label on any convex set."""
    _require_same_size(p, s)
    used = p.directions_used()
    if len(used) == 4:
        raise FourDirectional(
            "path uses all four labels; an embedding may not exist on this set"
        )
    if used <= UDR:
        e = _embed_udr_any(p, s)
    elif used <= frozenset("UDL"):
        e = reverse_embedding(_embed_udr_any(reverse_path(p), s))
    elif used <= frozenset("ULR"):
        s1 = rotate_set(s)
        e1 = reverse_embedding(_embed_udr_any(reverse_path(rotate_path(p)), s1))
        e = _rotate_back(e1, s1)
    else:  # subset of {D, L, R}
        s1 = rotate_set(s)
        e1 = _embed_udr_any(rotate_path(p), s1)
        e = _rotate_back(e1, s1)
    _cheap_check(p, s, e, "three-directional")
    return e


_QUARTER_INC_COLLAPSE = {"U": "U", "D": "D", "R": "U", "L": "D"}
_QUARTER_DEC_COLLAPSE = {"U": "U", "D": "D", "R": "D", "L": "U"}


def embed_quarter_convex(p: DirPath, s: ConvexPointSet) -> Embedding:
    """Embed any path, all four labels allowed, on an x/y-monotone chain.

    On such chains horizontal constraints are equivalent to vertical ones,
    so the labels collapse to a two-letter alphabet first.
    """
    _require_same_size(p, s)
    cls = classify(s)
    if cls.is_quarter_inc:
        table = _QUARTER_INC_COLLAPSE
    elif cls.is_quarter_dec:
        table = _QUARTER_DEC_COLLAPSE
    else:
        raise PreconditionViolated("point set is not an x/y-monotone chain")
    collapsed = DirPath("".join(table[ch] for ch in p.labels))
    e = embed_three_directional(collapsed, s)
    # The collapse is reversible on these chains, but verify against the
    # original labels rather than trusting that.
    ok, bad = check_direction_consistency(p, s, e)
    if not ok:
        raise InternalCaseError(f"label collapse failed at edge {bad}")
    if not check_planarity_prefix(s, e):
        raise InternalCaseError("label collapse produced a crossing")
    return e
