import pytest
from hypothesis import given, settings

from pdce import (
    DirPath,
    FourDirectional,
    PreconditionViolated,
    SizeMismatch,
    backward_embedding,
    classify,
    decide_pdce,
    embed_quarter_convex,
    embed_three_directional,
    embed_udr_convex,
    embed_udr_left_sided,
    embed_udr_right_sided,
    embed_ur_strip,
    generate_random_convex,
    plan_udr_case,
    split_by_bt_line,
    validate,
    validate_embedding,
)
from conftest import convex_sets, instances

S5 = validate([(4, 0), (3, 6), (1, 5), (0, 3), (2, 1)])
CHAIN4 = validate([(0, 0), (2, 1), (3, 3), (5, 4)])
# two left points, one with x between b and t, so alpha < m; one point right of t
S6 = validate([(5, 6), (1, 4), (-1, 2), (0, 0), (4, 1)])
HEX_A2 = validate([(0, 0), (4, 10), (-3, 4), (-1, 7), (7, 6), (3, 1)])  # alpha = m = 2
HEX_A1 = validate([(0, 0), (4, 10), (-3, 4), (1, 8), (7, 6), (3, 1)])  # alpha = 1 < m


def embedded_coords(s, e):
    return [(s.points[i].x, s.points[i].y) for i in e.assignment]


# --- backward embedding -------------------------------------------------------


def test_backward_urdu_frozen_trace():
    e = backward_embedding(DirPath("URDU"), S5)
    assert embedded_coords(S5, e) == [(0, 3), (1, 5), (2, 1), (4, 0), (3, 6)]
    assert validate_embedding(DirPath("URDU"), S5, e).is_pdce


def test_backward_two_points():
    s = validate([(0, 0), (1, 1)])
    e = backward_embedding(DirPath("U"), s)
    assert embedded_coords(s, e) == [(0, 0), (1, 1)]


def test_backward_rur_on_chain():
    e = backward_embedding(DirPath("RUR"), CHAIN4)
    assert embedded_coords(CHAIN4, e) == [(0, 0), (2, 1), (3, 3), (5, 4)]


def test_backward_size_mismatch():
    with pytest.raises(SizeMismatch):
        backward_embedding(DirPath("U"), S5)


def test_backward_always_direction_consistent():
    # planarity is not promised without the case preconditions, direction is
    from pdce import check_direction_consistency

    s = generate_random_convex(9, seed=2)
    p = DirPath("UDRLUDRL")
    e = backward_embedding(p, s)
    ok, _ = check_direction_consistency(p, s, e)
    assert ok


# --- one-sided and strip leaf embedders ----------------------------------------


def test_left_sided_urdu_endpoint():
    e = embed_udr_left_sided(DirPath("URDU"), S5)
    assert S5.points[e.assignment[-1]] == S5.top  # d4 = U
    assert validate_embedding(DirPath("URDU"), S5, e).is_pdce


def test_left_sided_two_point_down():
    s = validate([(0, 0), (1, 1)])
    e = embed_udr_left_sided(DirPath("D"), s)
    assert s.points[e.assignment[-1]] == s.bottom


def test_left_sided_rejects_l_and_wrong_class():
    with pytest.raises(PreconditionViolated):
        embed_udr_left_sided(DirPath("URLU"), S5)
    rs = generate_random_convex(6, seed=3, mode="right_sided")
    with pytest.raises(PreconditionViolated):
        embed_udr_left_sided(DirPath("UUUUU"), rs)


@given(instances(min_n=2, max_n=22, alphabet="UDR", modes=("left_sided",)))
def test_left_sided_endpoint_contract(inst):
    p, s = inst
    e = embed_udr_left_sided(p, s)
    assert validate_embedding(p, s, e).is_pdce
    want = {"U": s.top, "D": s.bottom, "R": s.right}[p.labels[-1]]
    assert s.points[e.assignment[-1]] == want


@given(instances(min_n=2, max_n=22, alphabet="UDR", modes=("right_sided",)))
def test_right_sided_endpoint_contract(inst):
    p, s = inst
    e = embed_udr_right_sided(p, s)
    assert validate_embedding(p, s, e).is_pdce
    want = {"U": s.bottom, "D": s.top, "R": s.left}[p.labels[0]]
    assert s.points[e.assignment[0]] == want


def test_right_sided_two_point_r():
    s = validate([(0, 0), (1, 1)])
    e = embed_udr_right_sided(DirPath("R"), s)
    assert s.points[e.assignment[0]] == s.left


def test_strip_rur_frozen():
    e = embed_ur_strip(DirPath("RUR"), CHAIN4)
    assert embedded_coords(CHAIN4, e) == [(0, 0), (2, 1), (3, 3), (5, 4)]
    assert CHAIN4.points[e.assignment[-1]] == CHAIN4.right  # d3 = R


def test_strip_uu_ends_at_top():
    s = generate_random_convex(3, seed=11, mode="strip")
    e = embed_ur_strip(DirPath("UU"), s)
    assert s.points[e.assignment[-1]] == s.top


def test_strip_rejects_d():
    with pytest.raises(PreconditionViolated):
        embed_ur_strip(DirPath("RDR"), CHAIN4)


@given(instances(min_n=2, max_n=22, alphabet="UR", modes=("strip",)))
def test_strip_endpoint_contract(inst):
    p, s = inst
    e = embed_ur_strip(p, s)
    assert validate_embedding(p, s, e).is_pdce
    assert s.points[e.assignment[0]] in (s.bottom, s.left)
    want = s.top if p.labels[-1] == "U" else s.right
    assert s.points[e.assignment[-1]] == want


# --- case planner ----------------------------------------------------------------


FROZEN_CASES = [
    (S6, "UDUR", "down-up"),
    (S6, "URDD", "up-down"),
    (S6, "UDDR", "down-run"),
    (S6, "DURU", "mid-strip"),
    (S6, "RRUU", "mid-strip-left-cut"),
    (S6, "UURR", "up-run-low"),
    (HEX_A2, "DRUUR", "mid-strip-both-cuts"),
    (HEX_A2, "DRURU", "up-run-high-left-cut"),
    (HEX_A2, "DURUR", "up-run-low-right-cut"),
    (HEX_A2, "UUUUU", "two-up-runs"),
    (HEX_A2, "DUURU", "two-up-runs"),
    (HEX_A1, "DRUUU", "up-run-high"),
    (HEX_A1, "DRUUR", "mid-strip-right-cut"),
]


@pytest.mark.parametrize("s,labels,tag", FROZEN_CASES)
def test_case_tags_frozen(s, labels, tag):
    plan = plan_udr_case(DirPath(labels), s)
    assert plan.case_tag == tag
    e = embed_udr_convex(DirPath(labels), s)
    assert validate_embedding(DirPath(labels), s, e).is_pdce


def test_all_u_degenerate_two_runs():
    plan = plan_udr_case(DirPath("UUUUU"), HEX_A2)
    assert plan.case_tag == "two-up-runs"
    assert plan.a == plan.c and plan.b == plan.e


def test_one_sided_splits_short_circuit():
    ls = generate_random_convex(7, seed=4, mode="left_sided")
    if ls.top.x < ls.bottom.x:
        from pdce import mirror_set

        ls = mirror_set(ls)  # mirror is right-sided with t right of b
        assert plan_udr_case(DirPath("UUDDRU"), ls).case_tag == "right-sided"
    else:
        assert plan_udr_case(DirPath("UUDDRU"), ls).case_tag == "left-sided"


@given(instances(min_n=2, max_n=24, alphabet="UDR"))
def test_plan_covers_slots_and_points(inst):
    p, s = inst
    if s.top.x < s.bottom.x:
        return
    plan = plan_udr_case(p, s)
    parts = plan.parts
    assert parts[0].first_vertex == 1
    assert parts[-1].last_vertex == s.n
    used = []
    for part in parts:
        assert len(part.points) == part.last_vertex - part.first_vertex + 1
        used.extend(part.points)
    for prev, nxt in zip(parts, parts[1:]):
        # parts either share the boundary vertex or meet across one edge
        assert nxt.first_vertex in (prev.last_vertex, prev.last_vertex + 1)
    assert sorted(set(used)) == list(range(s.n))
    # the emitted case obeys its own index preconditions
    if plan.case_tag.startswith("mid-strip"):
        lo = plan.parts[0].last_vertex
        hi = plan.parts[-1].first_vertex
        assert plan.alpha + 1 <= lo and hi <= plan.beta


# --- full UDR embedder -------------------------------------------------------------


def test_udr_n2_r_unique():
    s = validate([(0, 1), (5, 3)])
    e = embed_udr_convex(DirPath("R"), s)
    assert embedded_coords(s, e) == [(0, 1), (5, 3)]


def test_udr_dd_sorts_down():
    s = validate([(0, 0), (2, 3), (4, 1)])
    e = embed_udr_convex(DirPath("DD"), s)
    ys = [s.points[i].y for i in e.assignment]
    assert ys == sorted(ys, reverse=True)


def test_udr_requires_t_right_of_b():
    with pytest.raises(PreconditionViolated):
        embed_udr_convex(DirPath("UUUU"), S5)  # t=(3,6) left of b=(4,0)


@given(instances(min_n=1, max_n=28, alphabet="UDR"))
def test_udr_convex_sound(inst):
    p, s = inst
    if s.n > 1 and s.top.x < s.bottom.x:
        return
    e = embed_udr_convex(p, s)
    assert validate_embedding(p, s, e).is_pdce


# --- three-directional / quarter ---------------------------------------------------


def test_three_directional_rejects_four_labels():
    s = generate_random_convex(6, seed=8)
    with pytest.raises(FourDirectional):
        embed_three_directional(DirPath("RLUDD"), s)


def test_three_directional_frozen_examples():
    e = embed_three_directional(DirPath("URDU"), S5)
    assert validate_embedding(DirPath("URDU"), S5, e).is_pdce

    s4 = generate_random_convex(4, seed=12)
    e4 = embed_three_directional(DirPath("LLL"), s4)
    xs = [s4.points[i].x for i in e4.assignment]
    assert xs == sorted(xs, reverse=True)
    assert validate_embedding(DirPath("LLL"), s4, e4).is_pdce


def test_three_directional_size_mismatch():
    with pytest.raises(SizeMismatch):
        embed_three_directional(DirPath("UU"), S5)


@given(instances(min_n=1, max_n=26, alphabet="UDL"))
def test_udl_reduction_sound(inst):
    p, s = inst
    e = embed_three_directional(p, s)
    assert validate_embedding(p, s, e).is_pdce


@given(instances(min_n=1, max_n=26, alphabet="ULR"))
def test_ulr_reduction_sound(inst):
    p, s = inst
    e = embed_three_directional(p, s)
    assert validate_embedding(p, s, e).is_pdce


@given(instances(min_n=1, max_n=26, alphabet="DLR"))
def test_dlr_reduction_sound(inst):
    p, s = inst
    e = embed_three_directional(p, s)
    assert validate_embedding(p, s, e).is_pdce


def test_quarter_lulrdr_on_increasing_chain():
    s = generate_random_convex(7, seed=21, mode="quarter_inc")
    p = DirPath("LULRDR")
    e = embed_quarter_convex(p, s)
    assert validate_embedding(p, s, e).is_pdce


def test_quarter_two_point_r():
    s = validate([(0, 0), (1, 1)])
    e = embed_quarter_convex(DirPath("R"), s)
    assert embedded_coords(s, e) == [(0, 0), (1, 1)]


def test_quarter_on_zigzag_chain():
    # order-coincident but not hull-monotone; collapse must still hold
    s = validate([(0, 0), (2, 1), (3, 3), (5, 4)])
    p = DirPath("RLR")
    e = embed_quarter_convex(p, s)
    assert validate_embedding(p, s, e).is_pdce


def test_quarter_rejects_general_sets():
    with pytest.raises(PreconditionViolated):
        embed_quarter_convex(DirPath("UDLR"), generate_random_convex(5, seed=5))


@given(instances(min_n=1, max_n=24, alphabet="UDLR", modes=("quarter_inc", "quarter_dec")))
def test_quarter_four_label_sound(inst):
    p, s = inst
    e = embed_quarter_convex(p, s)
    assert validate_embedding(p, s, e).is_pdce


@settings(max_examples=40)
@given(instances(min_n=1, max_n=14, alphabet="UDR"))
def test_constructive_agrees_with_decider(inst):
    p, s = inst
    embed_three_directional(p, s)  # must not raise
    assert decide_pdce(p, s) is not None
