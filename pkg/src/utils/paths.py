"""
Centralized path resolution for pbwforge.

Works both from a source checkout (src/ at project root) and from an
installed copy where PROJECT_ROOT points at the data directories.
"""
from pathlib import Path
import os


def get_project_root() -> Path:
    """
    Get project root.

    Detection logic:
    1. If PROJECT_ROOT env var set, use it (useful for testing/override)
    2. Navigate up from this file to find the root containing src/
    """
    if env_root := os.getenv('PROJECT_ROOT'):
        return Path(env_root)

    # Start from this file's location: src/utils/paths.py
    current = Path(__file__).resolve().parent  # src/utils/
    project_root = current.parent.parent

    if (project_root / "src").exists():
        return project_root

    for parent in current.parents:
        if (parent / "src").exists():
            return parent

    raise RuntimeError(
        "Could not determine project root. "
        "Set PROJECT_ROOT environment variable or ensure src/ directory exists."
    )


PROJECT_ROOT = get_project_root()


def get_config_dir() -> Path:
    """Get the config directory (settings, AS families, reference tables)."""
    return PROJECT_ROOT / "config"


def get_mocks_dir() -> Path:
    """Get the mocks directory (sample algebra documents)."""
    return PROJECT_ROOT / "mocks"


def get_output_dir() -> Path:
    """Get the output directory, created on demand."""
    output = PROJECT_ROOT / "output"
    output.mkdir(exist_ok=True)
    return output


def get_reports_dir() -> Path:
    """Directory for JSON reports written without an explicit --out."""
    reports = get_output_dir() / "reports"
    reports.mkdir(parents=True, exist_ok=True)
    return reports
