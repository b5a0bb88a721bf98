import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from affinv.affine_core import from_word  # noqa: E402
from affinv.involutions import enumerate_involutions  # noqa: E402

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def perms(draw, n_min=2, n_max=5, max_word=8):
    """Random affine permutations from random words in the simple generators."""
    n = draw(st.integers(n_min, n_max))
    word = draw(st.lists(st.integers(1, n), max_size=max_word))
    return from_word(n, word)


@st.composite
def involutions(draw, n_min=2, n_max=5, max_hat=5):
    n = draw(st.integers(n_min, n_max))
    pool = list(enumerate_involutions(n, max_hat))
    return draw(st.sampled_from(pool))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
