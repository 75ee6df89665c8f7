"""Bundled example problems."""

from importlib import resources
from pathlib import Path

_FILES = {
    "case": "learning_effectiveness.json",
    "case-consistent": "learning_effectiveness_consistent.json",
}


def bundled_names():
    return sorted(_FILES)


def bundled_path(name: str = "case") -> Path:
    """Filesystem path of a bundled problem file."""
    if name not in _FILES:
        raise KeyError(f"unknown bundled problem {name!r}; "
                       f"available: {', '.join(bundled_names())}")
    return Path(resources.files(__name__) / _FILES[name])
