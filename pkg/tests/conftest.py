import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stabforge import family


@pytest.fixture(scope="session")
def code8():
    return family.build_code(3)


@pytest.fixture(scope="session")
def group8(code8):
    return code8.group()


@pytest.fixture()
def rng():
    return np.random.default_rng(20240811)
