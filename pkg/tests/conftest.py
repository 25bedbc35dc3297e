import json
import pathlib

import pytest

_DATA = pathlib.Path(__file__).parent / "data" / "reference_values.json"


@pytest.fixture(scope="session")
def ref():
    """High-precision reference values (frozen output of
    tools/gen_reference_values.py)."""
    with open(_DATA) as fh:
        return json.load(fh)
