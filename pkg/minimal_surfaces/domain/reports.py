from typing import Any, Literal

from pydantic import BaseModel, Field, computed_field

from .types import ProbeVerdict, Verdict


class CheckRecord(BaseModel):
    name: str
    anchor: str
    value: float
    tolerance: float
    relation: Literal["<=", ">", "=="] = "<="
    verdict: Verdict
    detail: str | None = None

    @classmethod
    def upper_bound(cls, name: str, anchor: str, value: float, tolerance: float, **kwargs: Any) -> "CheckRecord":
        verdict = Verdict.PASS if value <= tolerance else Verdict.FAIL

        return cls(name=name, anchor=anchor, value=value, tolerance=tolerance, relation="<=", verdict=verdict, **kwargs)

    @classmethod
    def lower_bound(cls, name: str, anchor: str, value: float, tolerance: float, **kwargs: Any) -> "CheckRecord":
        verdict = Verdict.PASS if value > tolerance else Verdict.FAIL

        return cls(name=name, anchor=anchor, value=value, tolerance=tolerance, relation=">", verdict=verdict, **kwargs)

    @classmethod
    def exact(cls, name: str, anchor: str, holds: bool, **kwargs: Any) -> "CheckRecord":
        verdict = Verdict.PASS if holds else Verdict.FAIL

        return cls(name=name, anchor=anchor, value=float(holds), tolerance=1.0, relation="==", verdict=verdict, **kwargs)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS


class RunReport(BaseModel):
    command: str
    checks: list[CheckRecord] = Field(default_factory=list)
    values: dict[str, Any] = Field(default_factory=dict)
    config: dict[str, Any] = Field(default_factory=dict)
    config_hash: str | None = None

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if all(check.passed for check in self.checks) else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    def add(self, check: CheckRecord) -> CheckRecord:
        if any(existing.name == check.name for existing in self.checks):
            raise ValueError(f"Check '{check.name}' is already recorded.")
        self.checks.append(check)

        return check

    def failed(self) -> list[CheckRecord]:
        return [check for check in self.checks if not check.passed]


class ProbeReport(BaseModel):
    target: complex
    epsilons: list[float]
    lengths: list[float]
    increments: list[float]
    verdict: ProbeVerdict
