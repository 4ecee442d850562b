"""Score functions over planar points and the operation counters used to
measure algorithm cost.

A score function assigns a value to every point set through three pieces:
the score of the empty set, the score of a single point, and a composition
rule g that merges the scores of two disjoint sets.  g must be monotone
increasing in both arguments; that is the only property the tree and sweep
code relies on.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

NEG_INF = float("-inf")

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass
class OpCounters:
    """Tallies of the three operation kinds the cost model charges for."""

    coord_cmps: int = 0
    score_compositions: int = 0
    score_cmps: int = 0

    def snapshot(self) -> "OpCounters":
        return OpCounters(self.coord_cmps, self.score_compositions, self.score_cmps)

    def add(self, other: "OpCounters") -> None:
        self.coord_cmps += other.coord_cmps
        self.score_compositions += other.score_compositions
        self.score_cmps += other.score_cmps

    def as_dict(self) -> dict:
        return {
            "coord_cmps": self.coord_cmps,
            "score_compositions": self.score_compositions,
            "score_cmps": self.score_cmps,
        }


@dataclass(frozen=True)
class Point:
    x: float
    y: float
    weight: float = 1
    color: Optional[str] = None
    id: int = 0


@dataclass(frozen=True)
class ScoreFunction:
    """A monotone decomposable score function.

    ``g`` is the raw composition callable; production code should go through
    :func:`compose` so that the composition counter is charged.
    """

    name: str
    empty_score: object
    point_score: Callable[[Point], object]
    g: Callable[[object, object], object]


def compose(f: ScoreFunction, a, b, ctr: OpCounters):
    """One charged call to the composition rule of ``f``."""
    ctr.score_compositions += 1
    return f.g(a, b)


def classify_sign(f: ScoreFunction, p: Point, ctr: OpCounters | None = None) -> str:
    """A point is positive when it scores strictly above the empty set."""
    if ctr is not None:
        ctr.score_cmps += 1
    return POSITIVE if f.point_score(p) > f.empty_score else NEGATIVE


def _color_value(p: Point, blue, red):
    if p.color == "blue":
        return blue
    if p.color == "red":
        return red
    raise ValueError(f"point {p.id} has color {p.color!r}, expected 'blue' or 'red'")


_REGISTRY: dict[str, Callable[[], ScoreFunction]] = {
    "sum": lambda: ScoreFunction(
        "sum", 0, lambda p: p.weight, lambda a, b: a + b
    ),
    "count": lambda: ScoreFunction(
        "count", 0, lambda p: 1, lambda a, b: a + b
    ),
    "discrepancy": lambda: ScoreFunction(
        "discrepancy", 0, lambda p: _color_value(p, 1, -1), lambda a, b: a + b
    ),
    "boxnored": lambda: ScoreFunction(
        "boxnored", 0, lambda p: _color_value(p, 1, NEG_INF), lambda a, b: a + b
    ),
    "maxweight": lambda: ScoreFunction(
        "maxweight", NEG_INF, lambda p: p.weight, max
    ),
}

SCORE_FUNCTION_NAMES = tuple(sorted(_REGISTRY))


def make_score_function(kind: str) -> ScoreFunction:
    try:
        return _REGISTRY[kind.lower()]()
    except KeyError:
        raise ValueError(
            f"unknown score function {kind!r}; choose from {SCORE_FUNCTION_NAMES}"
        ) from None
