"""Resource caps, overridable through the environment."""

import os

DEFAULT_FIELD_SIZE_CAP = 2 ** 24
DEFAULT_ELEMENT_CAP = 10 ** 6
DEFAULT_POINT_CAP = 2 ** 24

ELEMENT_CAP_ENV = "ORBITFORGE_ELEMENT_CAP"
POINT_CAP_ENV = "ORBITFORGE_POINT_CAP"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def element_cap() -> int:
    """Maximum number of group elements a closure may produce."""
    return _env_int(ELEMENT_CAP_ENV, DEFAULT_ELEMENT_CAP)


def point_cap() -> int:
    """Maximum number of vectors an action may enumerate."""
    return _env_int(POINT_CAP_ENV, DEFAULT_POINT_CAP)
