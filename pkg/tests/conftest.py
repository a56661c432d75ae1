import os

import numpy as np
import pytest
from hypothesis import settings

from src.config import Config, load_env_config
from src.models.qmatrix import QMatrix
from src.models.quaternion import Quaternion

settings.register_profile("qhyp", max_examples=40, deadline=None)
settings.load_profile("qhyp")


@pytest.fixture(autouse=True)
def clean_environ(monkeypatch):
    for key in list(os.environ):
        if key.startswith("QHYP_"):
            monkeypatch.delenv(key)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20231017)


@pytest.fixture
def config() -> Config:
    return load_env_config(environ={})


def parabolic_matrix(a: Quaternion) -> QMatrix:
    """Сдвиг Гейзенберга по вертикали, a чисто мнимый"""
    return QMatrix.from_rows([[1.0, 0.0, a], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
