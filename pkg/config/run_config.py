"""Run configuration shared by the CLI, the pipeline and the suites."""

from dataclasses import asdict, dataclass, fields, replace
from typing import Any, Dict, Optional

from linalg import DEFAULT_PRIME, FieldSpec
from weyl import DEFAULT_ENUMERATION_BOUND, DynkinType


EXHAUSTIVE_MAX_RANK = 3


@dataclass(frozen=True)
class RunConfig:
    type: str = "A2"
    field: str = f"p:{DEFAULT_PRIME}"
    seed: int = 0
    workers: int = 1
    cutoff: int = 12
    degree_cap: int = 12
    presentation_cap: int = 10
    enumeration_bound: int = DEFAULT_ENUMERATION_BOUND
    iso_attempts: int = 32
    samples: int = 20
    convention: str = "w0-inverse"
    exhaustive: Optional[bool] = None

    @property
    def dynkin(self) -> DynkinType:
        return DynkinType.parse(self.type)

    @property
    def exhaustive_pairs(self) -> bool:
        """Run pair-wide suites over all of W x W; on by default up to A3."""
        if self.exhaustive is not None:
            return self.exhaustive
        dynkin = self.dynkin
        return dynkin.family == "A" and dynkin.rank <= EXHAUSTIVE_MAX_RANK

    @property
    def field_spec(self) -> FieldSpec:
        return FieldSpec.parse(self.field)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        """Copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        return replace(self, **{k: v for k, v in overrides.items() if k in known and v is not None})

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
