from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

# Add project root to path to import from src
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cli.io import document_to_data, load_document  # noqa: E402
from src.exactmath import PolyRing, get_field  # noqa: E402
from src.pbwcheck.deformation import DeformationData  # noqa: E402
from src.utils.paths import get_mocks_dir  # noqa: E402


def mock_path(name: str) -> Path:
    return get_mocks_dir() / "algebras" / f"{name}.json"


def load_mock(name: str) -> DeformationData:
    return document_to_data(load_document(mock_path(name)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(0)


@pytest.fixture
def Q():
    return get_field(1)


@pytest.fixture
def Q3():
    return get_field(3)


@pytest.fixture
def ring(Q) -> PolyRing:
    return PolyRing(Q, ("a", "b", "c", "gamma"))


@pytest.fixture
def reports_dir(tmp_path: Path) -> Path:
    out = tmp_path / "reports"
    out.mkdir()
    return out


@pytest.fixture
def mock():
    """Loader for the algebra documents in mocks/algebras."""
    return load_mock


# ---------- golden reports ----------

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


def pytest_addoption(parser):
    parser.addoption("--update-golden", action="store_true", default=False,
                     help="Rewrite tests/golden/as_<tag>.json from the current solver")


@pytest.fixture
def golden(request):
    """Compare a report text with tests/golden/<name>, or rewrite it under --update-golden."""
    update = request.config.getoption("--update-golden")

    def check(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        if update:
            GOLDEN_DIR.mkdir(exist_ok=True)
            path.write_text(text, encoding="utf-8")
            return
        if not path.exists():
            pytest.skip(f"no golden file {name}; run pytest --update-golden")
        assert text == path.read_text(encoding="utf-8")

    return check
