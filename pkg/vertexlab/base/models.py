import typing as t

from pydantic import BaseModel, ConfigDict, StrictInt

IntVector: t.TypeAlias = list[StrictInt]
"""Integer coordinates of a lattice point in the fixed basis."""

IntMatrix: t.TypeAlias = list[list[StrictInt]]
"""Row-major integer matrix."""


class ConfiguredBaseModel(BaseModel):
    """Base-model configuring common instantiation and validation behavior
    for subclasses.
    """

    model_config = ConfigDict(extra="forbid", from_attributes=True)
    """Pydantic ConfigDict with options we want changed."""


class Violation(ConfiguredBaseModel):
    """A single failed identity found by a verification routine."""

    check: str
    """Name of the identity that failed."""
    detail: str
    """The inputs and both sides of the failed identity."""


class Report(ConfiguredBaseModel):
    """Outcome of a verification routine."""

    name: str
    """What was verified."""
    checked: int = 0
    """Number of individual identities evaluated."""
    violations: list[Violation] = []
    """Failed identities; empty when the check passes."""

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, check: str, ok: bool, detail: t.Callable[[], str]) -> None:
        """Count one evaluated identity and keep a violation when it failed."""
        self.checked += 1
        if not ok:
            self.violations.append(Violation(check=check, detail=detail()))

    def absorb(self, other: "Report") -> None:
        """Add the counts and violations of another report to this one."""
        self.checked += other.checked
        self.violations.extend(other.violations)
