from pathlib import Path

import pytest

from nfmertens.field import FieldDescriptor, load_field

FIELDS_DIR = Path(__file__).resolve().parent.parent / "fields"


def load_corpus() -> dict[str, FieldDescriptor]:
    return {path.stem: load_field(path.read_text())
            for path in sorted(FIELDS_DIR.glob("*.field"))}


@pytest.fixture(scope="session")
def corpus() -> dict[str, FieldDescriptor]:
    return load_corpus()


@pytest.fixture(scope="session")
def gauss(corpus):
    return corpus["gaussian"]


@pytest.fixture(scope="session")
def golden(corpus):
    return corpus["golden"]


@pytest.fixture(scope="session")
def rationals(corpus):
    return corpus["rationals"]
