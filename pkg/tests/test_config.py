import pytest

from gcdegen.config import MAX_ENUM_ENV, Limits, resolve
from gcdegen.errors import BoundExceededError, ConfigError, GcDegenError


def test_defaults():
    limits = Limits()
    assert limits.max_patterns == 10**7
    assert limits.verify_n == 5
    assert Limits(force=True).verify_n == limits.max_fulton_n


def test_from_env(monkeypatch):
    monkeypatch.delenv(MAX_ENUM_ENV, raising=False)
    assert Limits.from_env() == Limits()
    monkeypatch.setenv(MAX_ENUM_ENV, "1234")
    assert Limits.from_env().max_patterns == 1234
    assert resolve(None).max_patterns == 1234
    assert resolve(Limits()).max_patterns == 10**7


@pytest.mark.parametrize("raw", ["abc", "0", "-5", "1.5"])
def test_from_env_rejects_bad_values(monkeypatch, raw):
    monkeypatch.setenv(MAX_ENUM_ENV, raw)
    with pytest.raises(ConfigError):
        Limits.from_env()


def test_with_overrides_ignores_none():
    limits = Limits().with_overrides(max_patterns=None, force=True)
    assert limits.max_patterns == 10**7
    assert limits.force


def test_check():
    Limits().check("n", 3, 3)
    with pytest.raises(BoundExceededError, match="exceeds the configured bound 3"):
        Limits().check("n", 4, 3)


def test_errors_are_value_errors():
    assert issubclass(BoundExceededError, GcDegenError)
    assert issubclass(BoundExceededError, ValueError)
    assert issubclass(ConfigError, ValueError)
