"""The sup/inf concatenation process over binary strings.

``sup`` is the longest string found so far and ``inf`` a shortest non-empty
one.  Appending ``inf`` to ``sup`` always yields a longer binary string, so
the process can always take another step.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .numeration import BINARY, SymbolString


@dataclass(frozen=True)
class GrowthState:
    sup: SymbolString
    inf: SymbolString
    count: int = 0


def init_growth() -> GrowthState:
    return GrowthState(sup=BINARY.string("1"), inf=BINARY.string("0"), count=0)


def grow_step(g: GrowthState) -> GrowthState:
    return GrowthState(sup=g.sup + g.inf, inf=g.inf, count=g.count + 1)


def growth_process() -> Iterator[GrowthState]:
    """Unbounded: yields the initial state, then one state per step, forever."""
    g = init_growth()
    while True:
        yield g
        g = grow_step(g)


def run_growth(steps: int) -> Iterator[GrowthState]:
    """Lazy trace of ``steps + 1`` states starting at the initial state."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    return itertools.islice(growth_process(), steps + 1)
