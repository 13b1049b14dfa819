import logging

import numpy as np
import pytest

from config import Config
from src.classify import classify
from src.fixtures import G3_PRODUCT_TABLE
from src.subspace import canonical_bases

SEED = 20240611


@pytest.fixture(autouse=True)
def restore_root_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers = handlers
    root.setLevel(level)


@pytest.fixture
def reference_table():
    return G3_PRODUCT_TABLE


@pytest.fixture
def g3_bases():
    return canonical_bases(8)


@pytest.fixture(scope="session")
def g3_classification():
    config = Config()
    config.classify.parallel = False
    return classify(3, config)


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)
