"""Lightweight operation counters used by invariant tests and --bench."""

from __future__ import annotations


class Counters:
    __slots__ = ("values",)

    def __init__(self):
        self.values: dict[str, int] = {}

    def bump(self, name: str, amount: int = 1) -> None:
        self.values[name] = self.values.get(name, 0) + amount

    def get(self, name: str) -> int:
        return self.values.get(name, 0)

    def reset(self) -> None:
        self.values.clear()

    def snapshot(self) -> dict[str, int]:
        return dict(self.values)


GLOBAL = Counters()
