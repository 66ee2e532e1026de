"""Shared result types for point-location queries."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .geom import Point, Segment


@dataclass(frozen=True)
class OnVertex:
    point: Point


@dataclass(frozen=True)
class OnEdge:
    segment: Segment


@dataclass(frozen=True)
class InFace:
    """A face hit; ``name`` is structure-specific (int label, FaceName, ...)."""

    name: Any


class OnBoundary(ValueError):
    """Raised by same-face queries when a query point lies on an edge or
    vertex."""


class InvalidSubdivision(ValueError):
    """Input edge set is not interior-disjoint."""


class ValidationFailure(ValueError):
    """An update violates the insertion/deletion preconditions."""
