"""Size guards for exhaustive enumeration."""

import os

GUARD_ENV = "HESSRING_GUARD_OVERRIDE"


class GuardError(ValueError):
    """Requested size is outside the range an exhaustive sweep allows."""


def guards_lifted() -> bool:
    return os.environ.get(GUARD_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


def check_guard(what: str, n: int, lo: int, hi: int) -> None:
    if n < lo:
        raise GuardError(f"{what}: n={n} is below {lo}")
    if n > hi and not guards_lifted():
        raise GuardError(
            f"{what}: n={n} exceeds the guard {hi} (set {GUARD_ENV}=1 to lift it; may be slow)")
