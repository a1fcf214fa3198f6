import os
import sys

from hypothesis import HealthCheck, assume, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from period_atlas.data_model import OrData  # noqa: E402
from period_atlas.or_maps import validate_or  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def valid_or(draw, max_m=12, max_len=5, max_h=2, s=None):
    """Valid orientation reversing data; the last free slot is solved from the sum condition."""
    m = draw(st.integers(1, max_m))
    n = 2 * m
    h = draw(st.integers(0, max_h))
    s = draw(st.integers(0, max_len)) if s is None else s
    k = 0 if m % 2 == 0 else draw(st.integers(0, max(0, max_len - s)))
    b = 0 if m == 1 else draw(st.integers(0, max(0, max_len - s - k)))
    assume(k + s > 0)
    thetas = draw(st.lists(st.integers(1, max(1, m - 1)), min_size=b, max_size=b))
    etas = draw(st.lists(st.integers(0, m - 1), min_size=k, max_size=k))
    zetas = draw(st.lists(st.integers(0, m - 1).map(lambda x: 2 * x + 1), min_size=s, max_size=s))
    if s:
        r = (-(sum(thetas) + sum(etas) + sum(zetas[:-1]))) % m
        lifts = [z for z in (r, r + m) if z % 2]
        assume(lifts)
        zetas[-1] = draw(st.sampled_from(lifts))
    else:
        etas[-1] = (-(sum(thetas) + sum(etas[:-1]))) % m
    d = OrData(h, n, [2 * t for t in thetas], [2 * e for e in etas], zetas)
    assume(validate_or(d).valid)
    return d


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
