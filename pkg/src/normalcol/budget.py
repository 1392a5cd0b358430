"""Search budgets shared by the exhaustive routines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


class _Indeterminate:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INDETERMINATE"

    def __bool__(self) -> bool:
        return False


INDETERMINATE = _Indeterminate()
"""Returned when a search ran out of budget before reaching a verdict."""


class BudgetExceeded(Exception):
    pass


@dataclass
class SolveBudget:
    nodes: int | None = None
    ms: float | None = None
    spent: int = field(default=0, init=False)
    _start: float = field(default_factory=time.monotonic, init=False, repr=False)

    def __post_init__(self) -> None:
        if self.nodes is not None and self.nodes <= 0:
            raise ValueError("node limit must be positive")
        if self.ms is not None and self.ms <= 0:
            raise ValueError("time limit must be positive")

    def restart(self) -> None:
        self.spent = 0
        self._start = time.monotonic()

    def tick(self) -> None:
        self.spent += 1
        if self.nodes is not None and self.spent > self.nodes:
            raise BudgetExceeded
        # the clock is only read every 1024 nodes
        if self.ms is not None and not self.spent & 1023:
            if (time.monotonic() - self._start) * 1000 > self.ms:
                raise BudgetExceeded


def unlimited() -> SolveBudget:
    return SolveBudget()
