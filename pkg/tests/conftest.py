import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ola.weights import Flavor, Weight

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

flavors = st.sampled_from(list(Flavor))


def chain(max_len=3, lo=-2, hi=2):
    return st.lists(st.integers(lo, hi), max_size=max_len)


@st.composite
def integral_weights(draw, flavor=None, max_len=3, lo=-2, hi=2):
    flavor = draw(flavors) if flavor is None else Flavor.parse(flavor)
    left = draw(chain(max_len, lo, hi))
    right = draw(chain(max_len, lo, hi)) if flavor is Flavor.SL else []
    return Weight.from_chains(flavor, left, right)


@st.composite
def rational_weights(draw, flavor=None, max_len=3):
    flavor = draw(flavors) if flavor is None else Flavor.parse(flavor)
    value = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    left = draw(st.lists(value, max_size=max_len))
    right = draw(st.lists(value, max_size=max_len)) if flavor is Flavor.SL else []
    return Weight.from_chains(flavor, left, right)


@st.composite
def weight_pairs(draw, max_len=3):
    """Two integral weights of one flavor."""
    flavor = draw(flavors)
    return draw(integral_weights(flavor, max_len)), draw(integral_weights(flavor, max_len))


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(range(1, n + 1))))


@st.composite
def partitions(draw, max_size=6):
    parts = draw(st.lists(st.integers(1, 4), max_size=4))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_size:
        parts.pop(0)
    return tuple(parts)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def record_criterion(label: str, ok: bool, detail: str) -> None:
    line = f"criterion {label}: {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
