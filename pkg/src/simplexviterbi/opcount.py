from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class StepCount:
    t: int
    additions: int = 0
    comparisons: int = 0
    full: bool = False  # all 2^(delta+k) branches were live


@dataclass
class OpCount:
    """Tally of metric additions/subtractions and comparisons.

    Bit-level metric work is charged one addition per compared bit; index
    permutations and sign flips are free.
    """

    additions: int = 0
    comparisons: int = 0
    steps: list = field(default_factory=list)

    def add(self, n: int = 1) -> None:
        self.additions += n
        if self.steps:
            self.steps[-1].additions += n

    def compare(self, n: int = 1) -> None:
        self.comparisons += n
        if self.steps:
            self.steps[-1].comparisons += n

    def begin_step(self, t: int, full: bool) -> None:
        self.steps.append(StepCount(t, full=full))

    def full_steps(self) -> list:
        return [s for s in self.steps if s.full]
