"""Search budgets shared by the exact solvers and the detectors."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass

ENV_NODES = "TWDECOMP_BUDGET_NODES"
ENV_SECONDS = "TWDECOMP_BUDGET_SECONDS"


class BudgetExhausted(Exception):
    """An exact search stopped before completing.

    ``lower`` and ``upper`` carry the best certified bounds when the search is
    a width computation; detectors leave them as None.
    """

    def __init__(self, what: str, lower: int | None = None, upper: int | None = None):
        super().__init__(f"budget exhausted in {what} (bounds {lower}..{upper})")
        self.what = what
        self.lower = lower
        self.upper = upper


@dataclass(frozen=True)
class Budget:
    """Node and wall-clock limits.  ``seconds=None`` makes a run reproducible."""

    nodes: int = 20_000_000
    seconds: float | None = None

    def __post_init__(self) -> None:
        if self.nodes <= 0 or (self.seconds is not None and self.seconds <= 0):
            raise ValueError("budget limits must be positive")

    @classmethod
    def from_env(cls) -> "Budget":
        nodes = int(os.environ.get(ENV_NODES, cls.nodes))
        seconds = os.environ.get(ENV_SECONDS)
        return cls(nodes, float(seconds) if seconds else None)

    def meter(self, what: str) -> "Meter":
        return Meter(self, what)


class Meter:
    def __init__(self, budget: Budget, what: str):
        self.left = budget.nodes
        self.deadline = None if budget.seconds is None else time.monotonic() + budget.seconds
        self.what = what
        self.used = 0
        self._clock_at = 0

    def tick(self, k: int = 1) -> None:
        self.left -= k
        self.used += k
        if self.left < 0:
            raise BudgetExhausted(self.what)
        if self.deadline is not None and self.used - self._clock_at >= 1024:
            self._clock_at = self.used
            if time.monotonic() > self.deadline:
                raise BudgetExhausted(self.what)


def resolve(budget: Budget | None) -> Budget:
    return Budget.from_env() if budget is None else budget
