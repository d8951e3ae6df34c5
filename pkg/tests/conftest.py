import pytest
from hypothesis import HealthCheck, settings

from graver_forge.validation import BAND_EXAMPLE, LEFT_EXAMPLE, RIGHT_EXAMPLE, star_matrix

settings.register_profile("repo", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# the dense 5x7 example with its (4, 4) entry read as 3, which
# makes it row-equivalent to the right matrix
LEFT_CORRECTED = [row[:] for row in LEFT_EXAMPLE]
LEFT_CORRECTED[4][4] = 3


@pytest.fixture
def left():
    return [row[:] for row in LEFT_EXAMPLE]


@pytest.fixture
def right():
    return [row[:] for row in RIGHT_EXAMPLE]


@pytest.fixture
def band():
    return [row[:] for row in BAND_EXAMPLE]


@pytest.fixture
def star5():
    return star_matrix(5)
