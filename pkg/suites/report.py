"""Pass/fail records produced by the verification suites."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Assertion:
    name: str
    passed: bool
    detail: str = ""
    seed: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            data["detail"] = self.detail
        if self.seed is not None:
            data["seed"] = self.seed
        return data


@dataclass
class SuiteReport:
    suite: str
    type: str
    seed: int
    assertions: List[Assertion] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> List[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def check(self, name: str, passed: bool, detail: str = "", seed: Optional[int] = None) -> bool:
        self.assertions.append(Assertion(name, bool(passed), detail, seed))
        return bool(passed)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "suite": self.suite,
            "type": self.type,
            "seed": self.seed,
            "passed": self.passed,
            "assertions": [a.to_dict() for a in self.assertions],
        }
