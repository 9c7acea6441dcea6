import json
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def schema():
    jsonschema = pytest.importorskip("jsonschema")

    def check(name, doc):
        s = json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())
        jsonschema.Draft202012Validator.check_schema(s)
        jsonschema.Draft202012Validator(s).validate(doc)

    return check
