"""Pytest configuration and shared fixtures."""


import pytest


TOLERANCES_TOML = """
[strict]
scale = 0.1

[strict.lemma21]
tol_abs = 1e-13
tol_rel = 1e-9

[loose]
scale = 10.0

[loose.theorem31_xi_integral]
tol_abs = 1e-8
tol_rel = 1e-4
"""


@pytest.fixture
def tolerance_file(tmp_path):
    """A tolerances.toml with a strict and a loose profile."""
    path = tmp_path / "tolerances.toml"
    path.write_text(TOLERANCES_TOML)
    return path


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """Point HL_CONFIG_DIR at an empty temporary directory."""
    directory = tmp_path / "config"
    directory.mkdir()
    monkeypatch.setenv("HL_CONFIG_DIR", str(directory))
    monkeypatch.delenv("HL_DEFAULT_TOL", raising=False)
    return directory


@pytest.fixture(autouse=True)
def _no_default_scale(monkeypatch):
    """Keep a developer's HL_DEFAULT_TOL out of the tests."""
    monkeypatch.delenv("HL_DEFAULT_TOL", raising=False)
