"""Unit tests for hurwitzlommel configuration module."""

import pytest
from pathlib import Path

from hurwitzlommel.config import (
    DEFAULT_PROFILE,
    DEFAULT_TIERS,
    ToleranceProfile,
    ToleranceTier,
    default_tolerance_scale,
    get_config_directory,
    list_profiles,
    load_tolerance_profile,
    resolve_config_path,
)
from hurwitzlommel.config.paths import get_default_config_path
from hurwitzlommel.errors import ConfigurationError
from hurwitzlommel.verify import IdentityId


class TestLoadToleranceProfile:
    """Tests for load_tolerance_profile function."""

    def test_load_strict_profile(self, tolerance_file):
        """Explicit tiers are multiplied by the profile scale."""
        profile = load_tolerance_profile("strict", path=tolerance_file)

        assert profile.name == "strict"
        assert profile.scale == 0.1
        tier = profile.tier("lemma21")
        assert tier.tol_abs == pytest.approx(1e-14)
        assert tier.tol_rel == pytest.approx(1e-10)

    def test_identities_without_override_use_scaled_default(self, tolerance_file):
        profile = load_tolerance_profile("strict", path=tolerance_file)

        tier = profile.tier("hermite_vs_em")
        assert tier.tol_rel == pytest.approx(DEFAULT_TIERS["hermite_vs_em"].tol_rel * 0.1)

    def test_tier_accepts_identity_enum(self, tolerance_file):
        profile = load_tolerance_profile("loose", path=tolerance_file)

        assert profile.tier(IdentityId.THEOREM31_XI_INTEGRAL).tol_rel == pytest.approx(1e-3)

    def test_missing_profile_raises_error(self, tolerance_file):
        """Test that requesting a non-existent profile raises KeyError."""
        with pytest.raises(KeyError) as exc_info:
            load_tolerance_profile("nonexistent", path=tolerance_file)

        assert "Profile 'nonexistent' not found" in str(exc_info.value)
        assert "Available profiles: strict, loose" in str(exc_info.value)

    def test_default_without_file(self, config_dir):
        """The built-in profile needs no tolerance file."""
        assert load_tolerance_profile("default") is DEFAULT_PROFILE

    def test_default_directory_file_is_used(self, config_dir, tolerance_file):
        (config_dir / "tolerances.toml").write_text(tolerance_file.read_text())

        assert load_tolerance_profile("loose").scale == 10.0

    def test_missing_file_raises_error(self, tmp_path):
        """Test that a missing explicit file raises FileNotFoundError."""
        nonexistent_path = tmp_path / "does_not_exist.toml"

        with pytest.raises(FileNotFoundError) as exc_info:
            load_tolerance_profile("default", path=nonexistent_path)

        assert "not found" in str(exc_info.value).lower()
        assert "tolerances.toml.example" in str(exc_info.value)

    @pytest.mark.parametrize("content, message", [
        ("[bad]\nscale = -1.0\n", "Invalid tolerance profile 'bad'"),
        ("[bad.lemma21]\ntol_abs = 0.0\ntol_rel = 1e-8\n", "Invalid tolerance profile 'bad'"),
        ("[bad.no_such_identity]\ntol_abs = 1e-8\ntol_rel = 1e-8\n", "no_such_identity"),
        ("[bad.lemma21]\ntol_abs = 1e-8\n", "Invalid tolerance profile 'bad'"),
    ])
    def test_invalid_profile(self, tmp_path, content, message):
        path = tmp_path / "tolerances.toml"
        path.write_text(content)

        with pytest.raises(ConfigurationError, match=message):
            load_tolerance_profile("bad", path=path)


class TestDefaultToleranceScale:
    """Tests for the HL_DEFAULT_TOL multiplier."""

    def test_unset(self):
        assert default_tolerance_scale() == 1.0

    def test_scales_built_in_tiers(self, monkeypatch):
        monkeypatch.setenv("HL_DEFAULT_TOL", "10")

        assert DEFAULT_PROFILE.tier("lemma21").tol_rel == pytest.approx(1e-7)

    def test_does_not_scale_explicit_tiers(self, monkeypatch, tolerance_file):
        monkeypatch.setenv("HL_DEFAULT_TOL", "10")
        profile = load_tolerance_profile("strict", path=tolerance_file)

        assert profile.tier("lemma21").tol_rel == pytest.approx(1e-10)

    @pytest.mark.parametrize("raw", ["abc", "0", "-1", "inf"])
    def test_invalid_values(self, monkeypatch, raw):
        monkeypatch.setenv("HL_DEFAULT_TOL", raw)

        with pytest.raises(ConfigurationError, match="HL_DEFAULT_TOL"):
            default_tolerance_scale()


class TestToleranceModels:
    """Tests for the pydantic tolerance models."""

    def test_every_identity_has_a_tier(self):
        assert set(DEFAULT_TIERS) == {identity.value for identity in IdentityId}

    def test_tier_rejects_non_positive(self):
        with pytest.raises(ValueError):
            ToleranceTier(tol_abs=0.0, tol_rel=1e-8)

    def test_tier_is_frozen(self):
        tier = ToleranceTier(tol_abs=1e-8, tol_rel=1e-8)
        with pytest.raises(ValueError):
            tier.tol_abs = 1.0  # type: ignore[misc]

    def test_unknown_identity_in_profile(self):
        with pytest.raises(ValueError, match="unknown identity ids"):
            ToleranceProfile(tiers={"nope": ToleranceTier(tol_abs=1e-8, tol_rel=1e-8)})

    def test_unknown_identity_lookup(self):
        with pytest.raises(ConfigurationError, match="unknown identity id"):
            DEFAULT_PROFILE.tier("nope")


class TestListProfiles:
    """Tests for list_profiles function."""

    def test_list_all_profiles(self, tolerance_file):
        """Test listing all available profiles."""
        profiles = list_profiles(path=tolerance_file)

        assert profiles == ["strict", "loose"]

    def test_list_profiles_missing_file(self, tmp_path):
        """Test listing profiles when file doesn't exist returns empty list."""
        nonexistent_path = tmp_path / "does_not_exist.toml"
        profiles = list_profiles(path=nonexistent_path)

        assert profiles == []

    def test_shipped_example_parses(self):
        """The example file in the package lists the documented profiles."""
        example = Path(__file__).parents[2] / "src" / "hurwitzlommel" / "_data" / "tolerances.toml.example"

        assert list_profiles(path=example) == ["strict", "loose"]


class TestResolveConfigPath:
    """Tests for path resolution functions."""

    def test_explicit_path_takes_precedence(self, tolerance_file):
        """Test that an existing explicit path is used when provided."""
        assert resolve_config_path(path=tolerance_file) == tolerance_file

    def test_string_path_converted_to_path_object(self, tolerance_file):
        """Test that string paths are converted to Path objects."""
        resolved = resolve_config_path(path=str(tolerance_file))

        assert isinstance(resolved, Path)
        assert resolved.name == "tolerances.toml"

    def test_default_path_may_be_missing(self, config_dir):
        resolved = resolve_config_path()

        assert resolved == config_dir / "tolerances.toml"
        assert not resolved.exists()

    def test_config_directory_from_environment(self, config_dir):
        assert get_config_directory() == config_dir
        assert get_default_config_path().name == "tolerances.toml"

    def test_config_directory_fallback(self, monkeypatch):
        monkeypatch.delenv("HL_CONFIG_DIR", raising=False)

        assert get_config_directory() == Path.home() / ".hurwitzlommel"
