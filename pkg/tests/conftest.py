import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idplab.batyrev import BatyrevParams, build_batyrev, heights_from_canonical


@pytest.fixture(scope="session")
def pentagon_6ray():
    """The 6-ray 3D pentagon structure used as the running example."""
    return build_batyrev(BatyrevParams((2, 1, 1, 1, 1), (1,), ()))


@pytest.fixture(scope="session")
def pentagon_heights(pentagon_6ray):
    h = heights_from_canonical(pentagon_6ray, 0, 1, 3)
    h2 = heights_from_canonical(pentagon_6ray, 2, 2, 1)
    return h, h2
