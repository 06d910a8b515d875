import json
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

SQ2 = np.sqrt(2.0)
HADAMARD = np.array([[1, 1], [1, -1]]) / SQ2
Y_BASIS = np.array([[1, 1], [1j, -1j]]) / SQ2
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]])
PAULI_Z = np.diag([1.0, -1.0]).astype(complex)


@pytest.fixture(scope="session")
def derived():
    path = os.path.join(os.path.dirname(__file__), "fixtures", "derived_values.json")
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
