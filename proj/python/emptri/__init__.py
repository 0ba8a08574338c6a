"""Exact empty-triangle counting and stabbing depth for Horton-type point sets.

Coordinates cross the boundary as rational strings ("3/4"); the helpers below
convert them to :class:`fractions.Fraction`.
"""

from fractions import Fraction

from ._emptri import *  # noqa: F401,F403
from ._emptri import PointSet, __version__, stab_count as _stab_count


def points_of(s: PointSet):
    """Coordinates of ``s`` as Fraction pairs."""
    return [(Fraction(x), Fraction(y)) for x, y in s.points]


def point_set(points):
    """Raw point set from numbers or Fractions."""
    return PointSet([(str(Fraction(x)), str(Fraction(y))) for x, y in points])


def stab(s: PointSet, q, triangles):
    """Number of listed triangles with ``q`` strictly inside."""
    x, y = q
    return _stab_count(s, str(Fraction(x)), str(Fraction(y)), triangles)


__all__ = ["PointSet", "point_set", "points_of", "stab", "__version__"]
