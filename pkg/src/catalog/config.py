"""Session-wide defaults for loading, constructing and verifying."""
from dataclasses import dataclass, field, replace
from pathlib import Path

from src.errors import ConfigError

DEFAULT_CATALOG_DIR = Path(__file__).resolve().parents[2] / "catalog"


@dataclass(frozen=True)
class SessionConfig:
    """Degree bounds and limits shared by the catalog, the verifiers and the CLI."""

    verify_degree: int = 4
    construction_degree: int = 3
    dqs_degree: int = 3
    basis_limit: int = 4000
    catalog_dir: Path = field(default=DEFAULT_CATALOG_DIR)

    def __post_init__(self):
        for name in ("verify_degree", "construction_degree", "dqs_degree"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ConfigError(f"{name} must be a non-negative integer, got {value!r}")
        if self.basis_limit < 1:
            raise ConfigError(f"basis_limit must be positive, got {self.basis_limit}")

    def with_degrees(self, verify: int = None, construction: int = None) -> "SessionConfig":
        changes = {}
        if verify is not None:
            changes["verify_degree"] = verify
            changes["dqs_degree"] = min(self.dqs_degree, verify)
        if construction is not None:
            changes["construction_degree"] = construction
        return replace(self, **changes)
