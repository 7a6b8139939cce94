from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional

from errors import TheoremViolated


class Verdict:
    """Mixin for anything that can pass or fail a check."""
    holds: bool

    def describe(self) -> str:
        return repr(self)

    def raise_for_violation(self) -> None:
        if not self.holds:
            raise TheoremViolated(self.describe(), self)


@dataclass
class CheckResult(Verdict):
    target: str
    n: int
    holds: bool
    details: Dict[str, Any] = field(default_factory=dict)
    counterexample: Optional[str] = None

    def describe(self) -> str:
        msg = f"{self.target} fails at n={self.n}"
        if self.counterexample:
            msg += f" (counterexample {self.counterexample})"
        return msg

    def to_dict(self) -> Dict[str, Any]:
        d = asdict(self)
        if d["counterexample"] is None:
            del d["counterexample"]
        return d
