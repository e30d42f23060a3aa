import random

from hypothesis import HealthCheck, settings, strategies as st

from pdce import DirPath, generate_random_convex

# Geometry on adversarial integers can spike per-example; wall-clock limits
# live in the acceptance tests instead.
settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

ALL_MODES = ("general", "left_sided", "right_sided", "strip", "quarter_inc", "quarter_dec")
THREE_LABEL_SUBSETS = ("UDR", "UDL", "ULR", "DLR")


@st.composite
def convex_sets(draw, min_n=1, max_n=20, modes=ALL_MODES):
    n = draw(st.integers(min_n, max_n))
    mode = draw(st.sampled_from(modes))
    seed = draw(st.integers(0, 10**9))
    return generate_random_convex(n, seed=seed, mode=mode)


@st.composite
def paths_for(draw, n, alphabet="UDLR"):
    labels = draw(st.lists(st.sampled_from(alphabet), min_size=n - 1, max_size=n - 1))
    return DirPath("".join(labels))


@st.composite
def instances(draw, min_n=1, max_n=20, alphabet="UDLR", modes=ALL_MODES):
    s = draw(convex_sets(min_n=min_n, max_n=max_n, modes=modes))
    p = draw(paths_for(s.n, alphabet=alphabet))
    return p, s


def random_path(rng: random.Random, n: int, alphabet="UDLR") -> DirPath:
    return DirPath("".join(rng.choice(alphabet) for _ in range(n - 1)))
