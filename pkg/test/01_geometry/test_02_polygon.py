
# Standard library
import math

# Third-party
import numpy as np
import pytest

# Local imports
from tiler.geometry import (
    Polygon,
    Transform,
    VertexIndex,
    candidate_pairs,
    hull_area,
    overlap_area,
    signed_area,
    snap_key)
from tiler.tilererror import TilerGeometryError, TilerValueError


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]
ELL = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]


def test_polygon01():
    poly = Polygon(SQUARE)
    assert len(poly) == 4
    assert poly.area() == pytest.approx(1.0)
    assert poly.centroid() == pytest.approx((0.5, 0.5))
    assert poly.bbox() == (0.0, 0.0, 1.0, 1.0)
    assert poly.diameter() == pytest.approx(math.sqrt(2.0))
    assert poly.is_convex()
    assert poly.edge(3) == ((0.0, 1.0), (0.0, 0.0))


def test_polygon02():
    # Clockwise
    with pytest.raises(TilerGeometryError):
        Polygon(SQUARE[::-1])
    # Too few vertices
    with pytest.raises(TilerGeometryError):
        Polygon([(0, 0), (1, 0)])
    # Bow tie
    with pytest.raises(TilerGeometryError):
        Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])
    # Not finite
    with pytest.raises(TilerGeometryError):
        Polygon([(0, 0), (1, 0), (float("nan"), 1)])


def test_polygon03():
    # Vertices are read-only
    poly = Polygon(SQUARE)
    with pytest.raises(ValueError):
        poly.vertices[0, 0] = 5.0


def test_transformed01():
    # Reflected image is still counter-clockwise
    poly = Polygon(ELL)
    t = Transform(2.0, 30.0, True, (1.0, 1.0))
    img = poly.transformed(t)
    assert signed_area(img.vertices) > 0
    assert img.area() == pytest.approx(4.0*poly.area())


def test_triangulate01():
    poly = Polygon(ELL)
    assert not poly.is_convex()
    pieces = poly.triangulate()
    assert len(pieces) == 4
    assert sum(signed_area(p) for p in pieces) == pytest.approx(3.0)


def test_overlap01():
    a = Polygon(SQUARE)
    b = Polygon(np.array(SQUARE) + 0.5)
    assert overlap_area(a, b) == pytest.approx(0.25)
    # Shared side only
    c = Polygon(np.array(SQUARE) + (1.0, 0.0))
    assert overlap_area(a, c) == 0.0
    # Far away
    d = Polygon(np.array(SQUARE) + 5.0)
    assert overlap_area(a, d) == 0.0


def test_overlap02():
    # Non-convex against itself and against its notch
    ell = Polygon(ELL)
    assert overlap_area(ell, ell) == pytest.approx(3.0)
    notch = Polygon(np.array(SQUARE) + (1.0, 1.0))
    assert overlap_area(ell, notch) == 0.0


def test_hull01():
    assert hull_area(ELL) == pytest.approx(3.5)
    assert hull_area([(0, 0), (1, 1)]) == 0.0


def test_snap01():
    assert snap_key((0.0, 0.0)) == (0, 0)
    assert snap_key((2.4e-6, -2.6e-6)) == (2, -3)
    with pytest.raises(TilerValueError):
        snap_key((0, 0), grid=0.0)


def test_vertexindex01():
    index = VertexIndex()
    i0 = index.lookup((0.0, 0.0))
    assert index.lookup((4e-7, 0.0)) == i0
    assert index.lookup((1e-5, 0.0)) != i0
    # Neighbors across a cell boundary
    j0 = index.lookup((1.0 + 0.49e-6, 0.0))
    assert index.lookup((1.0 + 0.51e-6, 0.0)) == j0
    assert len(index) == 3


def test_candidates01():
    boxes = [(0, 0, 1, 1), (0.5, 0.5, 1.5, 1.5), (3, 3, 4, 4), (1, 0, 2, 1)]
    pairs = candidate_pairs(boxes)
    assert pairs == [(0, 1), (0, 3), (1, 3)]
    assert candidate_pairs(boxes[:1]) == []
