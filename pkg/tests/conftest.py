import numpy as np
import pytest

from affinelab._backend import BACKEND_NAME


@pytest.fixture(scope="session")
def backend_name() -> str:
    return BACKEND_NAME


def write_config(path, text: str) -> str:
    path.write_text(text)
    return str(path)


@pytest.fixture
def rng_np():
    return np.random.default_rng(20240817)
