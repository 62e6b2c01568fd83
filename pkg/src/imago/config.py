"""Resource limits used by every routine that exhausts a finite structure."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    enumeration_cap: int = 10**6
    oracle_cap: int = 10**6
    work_cap: int = 10**8
    table_cap: int = 4096

    def __post_init__(self):
        for name in ("enumeration_cap", "oracle_cap", "work_cap", "table_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def with_(self, **kw):
        return replace(self, **kw)


DEFAULT_LIMITS = Limits()
