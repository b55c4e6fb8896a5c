"""Run generator-based recursions on an explicit stack.

A step is a generator that yields sub-problems and is sent back their results;
its return value is the result of the step. This keeps deep recursions (long
chains of contractions on path-like graphs) off the Python call stack.
"""

from __future__ import annotations

from collections.abc import Callable, Generator
from typing import Any

Step = Generator[Any, Any, Any]


def run(step: Callable[[Any], Step], problem: Any) -> Any:
    stack = [step(problem)]
    value = None
    while stack:
        try:
            sub = stack[-1].send(value)
        except StopIteration as stop:
            stack.pop()
            value = stop.value
            continue
        stack.append(step(sub))
        value = None
    return value
