from pathlib import Path

import pytest

from primingkit import load_lexicon

REPO = Path(__file__).resolve().parents[1]
DATA_DIR = REPO / "src" / "primingkit" / "data"
FIXTURE_DIR = Path(__file__).parent / "fixtures" / "lexicon"


@pytest.fixture(scope="session")
def data_lexicon():
    return load_lexicon(DATA_DIR)


@pytest.fixture(scope="session")
def fixture_lexicon():
    return load_lexicon(FIXTURE_DIR)


@pytest.fixture()
def fixture_dir():
    return FIXTURE_DIR


@pytest.fixture()
def data_dir():
    return DATA_DIR
