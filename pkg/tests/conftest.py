import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from gammasg import fixtures  # noqa: E402
from gammasg.enumeration import enumerate_exhaustive, random_instance  # noqa: E402
from gammasg.errors import ExhaustedTries  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL = [S for shape in [(1, 1), (2, 1), (2, 2), (3, 1)] for S in enumerate_exhaustive(*shape)]


@st.composite
def instances(draw, max_n=4, with_zero=None):
    """An associative instance: an exhaustive small table or a seeded random one,
    optionally with a zero adjoined."""
    if draw(st.booleans()):
        S = draw(st.sampled_from(SMALL))
    else:
        n = draw(st.integers(2, max_n))
        m = draw(st.integers(1, 2))
        seed = draw(st.integers(0, 2**32 - 1))
        try:
            S = random_instance(n, m, seed, max_tries=4096)
        except ExhaustedTries:
            S = draw(st.sampled_from(SMALL))
    zero = draw(st.booleans()) if with_zero is None else with_zero
    if zero:
        S = S.adjoin_zero()
    return S.with_detected_zero()


@pytest.fixture(scope="session")
def all_fixtures():
    return fixtures.all_fixtures()
