import json
import pathlib

import pytest

SCHEMAS = pathlib.Path(__file__).resolve().parents[2] / "schemas"


@pytest.fixture(scope="session")
def schema():
    def load(name):
        return json.loads((SCHEMAS / f"{name}.schema.json").read_text())

    return load
