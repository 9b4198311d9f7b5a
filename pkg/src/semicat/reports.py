"""Pass/fail records with counterexample certificates."""

from dataclasses import dataclass, field
from fractions import Fraction


def jsonable(value):
    """Recursively convert Fractions, tuples and sets into JSON-friendly values."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(jsonable(v) for v in value)
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, float, str)):
        return value
    return str(value)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: dict | None = None


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name, passed, witness=None):
        self.checks.append(CheckResult(name, bool(passed), witness))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self):
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": jsonable(c.witness)}
                for c in self.checks
            ],
        }
