from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerifyReport:
    """Outcome of a single certification pass.

    A failing report always carries ``counterexample``. Composite checks
    (hole conditions, field axioms) nest their parts in ``details``.
    """

    prop: str
    passed: bool
    counterexample: Any = None
    counts: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0
    details: list[VerifyReport] = field(default_factory=list)
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.prop}: {status}" + (f" ({self.message})" if self.message else "")]
        for sub in self.details:
            lines.extend("  " + ln for ln in sub.summary().splitlines())
        if not self.passed and self.counterexample is not None and not self.details:
            lines.append(f"  counterexample: {self.counterexample}")
        return "\n".join(lines)

    def keyvalue(self) -> str:
        """Machine-readable ``key=value`` block."""
        out = [f"property={self.prop}", f"passed={int(self.passed)}"]
        out += [f"{k}={v}" for k, v in self.counts.items()]
        out.append(f"elapsed={self.elapsed:.3f}")
        if self.counterexample is not None:
            out.append(f"counterexample={self.counterexample}")
        for sub in self.details:
            out.append(f"{sub.prop}={int(sub.passed)}")
        return "\n".join(out)
