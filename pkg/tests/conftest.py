import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from hopftwist import presets, twist, universal_sigma  # noqa: E402

settings.register_profile("repo", deadline=None, max_examples=50)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def h4():
    return presets.sweedler()


@pytest.fixture(scope="session")
def h4_alg(h4):
    h, alpha = h4
    return twist(h, alpha)


@pytest.fixture(scope="session")
def h4_sigma(h4):
    h, alpha = h4
    return universal_sigma(h, alpha)


@pytest.fixture(scope="session")
def h4_101():
    h, alpha = presets.sweedler(1, 0, 1)
    return twist(h, alpha)
