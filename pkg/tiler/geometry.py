r"""
``geometry``: Planar similarity transforms and polygon kernels
=================================================================

This module provides the small amount of computational geometry that
the rest of :mod:`tiler` needs:

    * :class:`Transform`: a planar similarity (uniform scale, rotation,
      optional reflection, translation)
    * :class:`Polygon`: a simple counter-clockwise polygon backed by a
      read-only :class:`numpy.ndarray`
    * :func:`overlap_area`: area of intersection of two polygons, using
      Sutherland-Hodgman clipping on an ear-clipping triangulation so
      that non-convex tiles (darts) are handled
    * :func:`snap_key` and :class:`VertexIndex`: tolerant vertex
      identification used to build shared-edge maps

The action of a :class:`Transform` on a point is fixed as

    1. reflect across the *x*-axis (if *reflect* is set),
    2. rotate counter-clockwise by *rotation* degrees,
    3. scale by *scale*,
    4. translate by *translation*.

All tolerances are module-level constants so that every other module
agrees on what "the same point" means.
"""

# Standard library
import math

# Third-party
import numpy as np

# Local imports
from .tilererror import TilerGeometryError, TilerValueError


# Tolerance for point equality
EPS = 1e-9
# Tolerance for significant overlap area
EPS_AREA = 1e-9
# Default grid for vertex snapping
SNAP_GRID = 1e-6


# Planar similarity transform
class Transform(object):
    r"""Planar similarity transform

    :Call:
        >>> t = Transform(scale=1.0, rotation=0.0, reflect=False,
                          translation=(0.0, 0.0))
    :Inputs:
        *scale*: {``1.0``} | :class:`float` > 0
            Uniform scale factor
        *rotation*: {``0.0``} | :class:`float`
            Counter-clockwise rotation in degrees, stored modulo 360
        *reflect*: ``True`` | {``False``}
            Whether to reflect across the *x*-axis before rotating
        *translation*: {``(0.0, 0.0)``} | :class:`tuple`
            Final translation
    :Outputs:
        *t*: :class:`Transform`
            Immutable transform
    :Raises:
        :class:`TilerGeometryError` for non-finite values or
        nonpositive *scale*
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "scale",
        "rotation",
        "reflect",
        "translation",
    )

   # --- __dunder__ ---
    def __init__(
            self,
            scale: float = 1.0,
            rotation: float = 0.0,
            reflect: bool = False,
            translation=(0.0, 0.0)):
        # Convert
        scale = float(scale)
        rotation = float(rotation)
        tx, ty = (float(x) for x in translation)
        # Check values
        if not all(math.isfinite(x) for x in (scale, rotation, tx, ty)):
            raise TilerGeometryError(
                "Transform parameters must be finite; got "
                f"scale={scale}, rotation={rotation}, "
                f"translation=({tx}, {ty})")
        if scale <= 0.0:
            raise TilerGeometryError(
                f"Transform scale must be positive; got {scale}")
        # Normalize angle to [0, 360)
        rotation = rotation % 360.0
        # Snap angles that are indistinguishable from 360
        if 360.0 - rotation < EPS:
            rotation = 0.0
        # Save
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "reflect", bool(reflect))
        object.__setattr__(self, "translation", (tx, ty))

    def __setattr__(self, name, value):
        raise AttributeError(f"Transform is immutable; cannot set '{name}'")

    def __repr__(self) -> str:
        tx, ty = self.translation
        return (
            f"Transform(scale={self.scale!r}, rotation={self.rotation!r}, "
            f"reflect={self.reflect!r}, translation=({tx!r}, {ty!r}))")

    def __eq__(self, other) -> bool:
        # Exact equality; use isclose() for tolerant comparison
        if not isinstance(other, Transform):
            return NotImplemented
        return (
            self.scale == other.scale and
            self.rotation == other.rotation and
            self.reflect == other.reflect and
            self.translation == other.translation)

    def __hash__(self):
        return hash(
            (self.scale, self.rotation, self.reflect, self.translation))

   # --- Constructors ---
    @classmethod
    def identity(cls) -> "Transform":
        r"""Return the identity transform"""
        return cls()

    @classmethod
    def rotation_about(cls, angle: float, center) -> "Transform":
        r"""Rotation by *angle* degrees about point *center*

        :Call:
            >>> t = Transform.rotation_about(angle, center)
        :Inputs:
            *angle*: :class:`float`
                Counter-clockwise rotation in degrees
            *center*: :class:`tuple`\ [:class:`float`]
                Fixed point of the rotation
        :Outputs:
            *t*: :class:`Transform`
                Rotation about *center*
        """
        # Rotation about origin
        r = cls(rotation=angle)
        # Image of the center under *r*
        cx, cy = center
        rx, ry = r.apply((cx, cy))
        # Shift so *center* is fixed
        return cls(rotation=angle, translation=(cx - rx, cy - ry))

    @classmethod
    def from_matrix(cls, a, b, c, d, e, f) -> "Transform":
        r"""Recover a similarity from SVG-style matrix coefficients

        The coefficients follow SVG ``matrix(a b c d e f)`` order, so
        ``x' = a*x + c*y + e`` and ``y' = b*x + d*y + f``.

        :Call:
            >>> t = Transform.from_matrix(a, b, c, d, e, f)
        :Outputs:
            *t*: :class:`Transform`
                Similarity with the same action
        """
        # Scale from first column
        scale = math.hypot(a, b)
        # Rotation of the x-axis
        rotation = math.degrees(math.atan2(b, a))
        # Determinant sign gives reflection
        reflect = (a*d - b*c) < 0.0
        # Output
        return cls(scale, rotation, reflect, (e, f))

   # --- Action ---
    def linear(self) -> np.ndarray:
        r"""Return the 2x2 linear part of the transform

        :Call:
            >>> m = t.linear()
        :Outputs:
            *m*: :class:`np.ndarray`\ [:class:`float`]
                Matrix equal to ``scale * R(rotation) * F``
        """
        # Angle
        theta = math.radians(self.rotation)
        c = math.cos(theta)
        s = math.sin(theta)
        # Reflection factor on y
        fy = -1.0 if self.reflect else 1.0
        # Assemble
        return self.scale * np.array([
            [c, -s*fy],
            [s, c*fy],
        ])

    def matrix(self) -> np.ndarray:
        r"""Return the 2x3 affine matrix ``[[a, c, e], [b, d, f]]``"""
        m = self.linear()
        tx, ty = self.translation
        return np.array([
            [m[0, 0], m[0, 1], tx],
            [m[1, 0], m[1, 1], ty],
        ])

    def apply(self, p) -> tuple:
        r"""Apply transform to a single point

        :Call:
            >>> q = t.apply(p)
        :Inputs:
            *t*: :class:`Transform`
                Similarity transform
            *p*: :class:`tuple`\ [:class:`float`]
                Point *(x, y)*
        :Outputs:
            *q*: :class:`tuple`\ [:class:`float`]
                Transformed point
        """
        x, y = self.apply_many(np.array([p], dtype=float))[0]
        return (float(x), float(y))

    def apply_many(self, pts) -> np.ndarray:
        r"""Apply transform to an *(n, 2)* array of points"""
        # Convert
        pts = np.asarray(pts, dtype=float).reshape(-1, 2)
        # Linear part, then shift
        return pts @ self.linear().T + np.array(self.translation)

    def inverse(self) -> "Transform":
        r"""Return the inverse similarity

        :Call:
            >>> tinv = t.inverse()
        :Outputs:
            *tinv*: :class:`Transform`
                Transform such that ``compose(tinv, t)`` is identity
        """
        # A reflection is its own inverse and reverses rotation sense
        rot = self.rotation if self.reflect else -self.rotation
        # Linear part of the inverse
        lin = Transform(1.0 / self.scale, rot, self.reflect)
        # Translation undoes the original shift
        qx, qy = lin.apply(self.translation)
        return Transform(1.0 / self.scale, rot, self.reflect, (-qx, -qy))

    def isclose(self, other: "Transform", tol: float = 1e-6) -> bool:
        r"""Test if two transforms agree within *tol*

        Rotation is compared as an angle, so 359.9999999 and 0 agree.
        """
        # Reflection must match exactly
        if self.reflect != other.reflect:
            return False
        # Relative scale check
        if abs(self.scale - other.scale) > tol*max(1.0, self.scale):
            return False
        # Angular difference in (-180, 180]
        dtheta = (self.rotation - other.rotation + 180.0) % 360.0 - 180.0
        if abs(dtheta) > tol:
            return False
        # Translation
        dx = self.translation[0] - other.translation[0]
        dy = self.translation[1] - other.translation[1]
        return math.hypot(dx, dy) <= tol


def compose(outer: Transform, inner: Transform) -> Transform:
    r"""Compose two similarities so that *inner* is applied first

    :Call:
        >>> t = compose(outer, inner)
    :Inputs:
        *outer*: :class:`Transform`
            Transform applied second
        *inner*: :class:`Transform`
            Transform applied first
    :Outputs:
        *t*: :class:`Transform`
            Transform such that ``t.apply(p)`` equals
            ``outer.apply(inner.apply(p))``
    """
    # A reflected outer transform reverses the sense of inner rotation
    sign = -1.0 if outer.reflect else 1.0
    # Combine
    return Transform(
        outer.scale * inner.scale,
        outer.rotation + sign*inner.rotation,
        outer.reflect != inner.reflect,
        outer.apply(inner.translation))


def apply(t: Transform, p) -> tuple:
    r"""Apply similarity *t* to point *p*; see :meth:`Transform.apply`"""
    return t.apply(p)


def similarity_from_segment(p0, p1, q0, q1, reflect=False) -> Transform:
    r"""Find the similarity mapping segment *p0*-*p1* onto *q0*-*q1*

    :Call:
        >>> t = similarity_from_segment(p0, p1, q0, q1, reflect=False)
    :Inputs:
        *p0*, *p1*: :class:`tuple`\ [:class:`float`]
            Source segment
        *q0*, *q1*: :class:`tuple`\ [:class:`float`]
            Target segment
        *reflect*: ``True`` | {``False``}
            Whether the result includes the *x*-axis reflection
    :Outputs:
        *t*: :class:`Transform`
            Similarity with ``t(p0) == q0`` and ``t(p1) == q1``
    """
    # Apply reflection to source
    fy = -1.0 if reflect else 1.0
    vx = p1[0] - p0[0]
    vy = fy*(p1[1] - p0[1])
    wx = q1[0] - q0[0]
    wy = q1[1] - q0[1]
    # Check for degenerate segments
    lv = math.hypot(vx, vy)
    lw = math.hypot(wx, wy)
    if lv < EPS or lw < EPS:
        raise TilerGeometryError("Cannot map a zero-length segment")
    # Scale and rotation
    scale = lw / lv
    rotation = math.degrees(math.atan2(wy, wx) - math.atan2(vy, vx))
    # Linear part applied to p0
    lin = Transform(scale, rotation, reflect)
    px, py = lin.apply(p0)
    # Output
    return Transform(scale, rotation, reflect, (q0[0] - px, q0[1] - py))


# Simple CCW polygon
class Polygon(object):
    r"""Simple counter-clockwise polygon

    :Call:
        >>> poly = Polygon(vertices)
    :Inputs:
        *vertices*: :class:`list` | :class:`np.ndarray`
            Sequence of *(x, y)* points in counter-clockwise order
    :Outputs:
        *poly*: :class:`Polygon`
            Polygon with read-only :attr:`vertices`
    :Raises:
        :class:`TilerGeometryError` if fewer than 3 vertices, non-finite
        coordinates, clockwise or zero area, or self-intersecting
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "vertices",
    )

   # --- __dunder__ ---
    def __init__(self, vertices, check: bool = True):
        # Convert to float array
        v = np.array(vertices, dtype=float).reshape(-1, 2)
        # Lock it
        v.setflags(write=False)
        self.vertices = v
        # Validate unless caller knows better (e.g. transformed copies)
        if check:
            self._validate()

    def __len__(self) -> int:
        return self.vertices.shape[0]

    def __repr__(self) -> str:
        pts = ", ".join(f"({x:g}, {y:g})" for x, y in self.vertices)
        return f"Polygon([{pts}])"

   # --- Validation ---
    def _validate(self):
        # Number of vertices
        n = len(self)
        if n < 3:
            raise TilerGeometryError(
                f"Polygon needs at least 3 vertices; got {n}")
        # Finite
        if not np.all(np.isfinite(self.vertices)):
            raise TilerGeometryError("Polygon has non-finite coordinates")
        # Orientation
        area = signed_area(self.vertices)
        if area <= EPS:
            raise TilerGeometryError(
                "Polygon must be counter-clockwise with positive area; "
                f"signed area is {area:g}")
        # Self-intersection
        if not is_simple(self.vertices):
            raise TilerGeometryError("Polygon is self-intersecting")

   # --- Properties ---
    def area(self) -> float:
        r"""Positive area by the shoelace formula"""
        return signed_area(self.vertices)

    def centroid(self) -> tuple:
        r"""Area centroid of the polygon"""
        x = self.vertices[:, 0]
        y = self.vertices[:, 1]
        x1 = np.roll(x, -1)
        y1 = np.roll(y, -1)
        cross = x*y1 - x1*y
        a = 0.5 * np.sum(cross)
        cx = np.sum((x + x1)*cross) / (6.0*a)
        cy = np.sum((y + y1)*cross) / (6.0*a)
        return (float(cx), float(cy))

    def bbox(self) -> tuple:
        r"""Bounding box *(xmin, ymin, xmax, ymax)*"""
        xmin, ymin = np.min(self.vertices, axis=0)
        xmax, ymax = np.max(self.vertices, axis=0)
        return (float(xmin), float(ymin), float(xmax), float(ymax))

    def diameter(self) -> float:
        r"""Largest distance between two vertices"""
        d = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.max(np.hypot(d[..., 0], d[..., 1])))

    def is_convex(self) -> bool:
        r"""Check whether every turn is a left turn (within tolerance)"""
        return bool(np.all(_turns(self.vertices) >= -EPS))

    def edge(self, i: int) -> tuple:
        r"""Endpoints of side *i*, from vertex *i* to vertex *i+1*"""
        n = len(self)
        p = self.vertices[i % n]
        q = self.vertices[(i + 1) % n]
        return (float(p[0]), float(p[1])), (float(q[0]), float(q[1]))

   # --- Operations ---
    def transformed(self, t: Transform) -> "Polygon":
        r"""Apply *t* and re-normalize to counter-clockwise order

        :Call:
            >>> poly2 = poly.transformed(t)
        :Inputs:
            *poly*: :class:`Polygon`
                Original polygon
            *t*: :class:`Transform`
                Similarity to apply
        :Outputs:
            *poly2*: :class:`Polygon`
                Image polygon; vertex order is reversed if *t* reflects
        """
        pts = t.apply_many(self.vertices)
        # Reflection reverses orientation
        if t.reflect:
            pts = pts[::-1]
        return Polygon(pts, check=False)

    def triangulate(self) -> list:
        r"""Split polygon into triangles by ear clipping

        Convex polygons are returned whole as a single piece.

        :Call:
            >>> pieces = poly.triangulate()
        :Outputs:
            *pieces*: :class:`list`\ [:class:`np.ndarray`]
                Convex pieces, each an *(n, 2)* CCW array
        """
        # Convex polygons need no decomposition
        if self.is_convex():
            return [np.array(self.vertices)]
        return _ear_clip(self.vertices)


def polygon_area(poly: Polygon) -> float:
    r"""Area of a counter-clockwise polygon (shoelace formula)

    :Call:
        >>> a = polygon_area(poly)
    :Inputs:
        *poly*: :class:`Polygon`
            Valid polygon
    :Outputs:
        *a*: :class:`float`
            Positive area
    """
    return poly.area()


def signed_area(pts) -> float:
    r"""Signed shoelace area of an *(n, 2)* array; positive for CCW"""
    pts = np.asarray(pts, dtype=float)
    if pts.shape[0] < 3:
        return 0.0
    x = pts[:, 0]
    y = pts[:, 1]
    return float(0.5 * np.sum(x*np.roll(y, -1) - np.roll(x, -1)*y))


def is_simple(pts) -> bool:
    r"""Check that no two non-adjacent sides of a polygon intersect"""
    pts = np.asarray(pts, dtype=float)
    n = pts.shape[0]
    # Loop through side pairs
    for i in range(n):
        a0 = pts[i]
        a1 = pts[(i + 1) % n]
        for j in range(i + 1, n):
            # Skip adjacent sides (they share a vertex)
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            b0 = pts[j]
            b1 = pts[(j + 1) % n]
            if _segments_intersect(a0, a1, b0, b1):
                return False
    return True


def overlap_area(a: Polygon, b: Polygon) -> float:
    r"""Area of the intersection of two polygons

    Non-convex inputs are triangulated and the pairwise convex
    intersections summed. Results below :data:`EPS_AREA` (edge or
    vertex contact) are reported as exactly ``0.0``.

    :Call:
        >>> area = overlap_area(a, b)
    :Inputs:
        *a*: :class:`Polygon`
            First polygon
        *b*: :class:`Polygon`
            Second polygon
    :Outputs:
        *area*: :class:`float`
            Intersection area
    """
    # Quick rejection on bounding boxes
    if not boxes_intersect(a.bbox(), b.bbox()):
        return 0.0
    return overlap_pieces(a.triangulate(), b.triangulate())


def overlap_pieces(pieces_a, pieces_b) -> float:
    r"""Intersection area of two polygons given as convex pieces

    This is the kernel of :func:`overlap_area` for callers that cache
    the output of :meth:`Polygon.triangulate`.

    :Call:
        >>> area = overlap_pieces(pieces_a, pieces_b)
    :Inputs:
        *pieces_a*: :class:`list`\ [:class:`np.ndarray`]
            Convex CCW pieces of first polygon
        *pieces_b*: :class:`list`\ [:class:`np.ndarray`]
            Convex CCW pieces of second polygon
    :Outputs:
        *area*: :class:`float`
            Intersection area; ``0.0`` if not above :data:`EPS_AREA`
    """
    total = 0.0
    for pa in pieces_a:
        for pb in pieces_b:
            clipped = clip_convex(pa, pb)
            if len(clipped) >= 3:
                total += abs(signed_area(clipped))
    # Filter contact-only results
    return total if total > EPS_AREA else 0.0


def clip_convex(subject, clip) -> np.ndarray:
    r"""Clip convex polygon *subject* by convex CCW polygon *clip*

    This is the Sutherland-Hodgman algorithm: the subject is clipped
    successively against the half-plane to the left of each side of
    *clip*.

    :Call:
        >>> pts = clip_convex(subject, clip)
    :Inputs:
        *subject*: :class:`np.ndarray`
            *(n, 2)* convex polygon
        *clip*: :class:`np.ndarray`
            *(m, 2)* convex CCW polygon
    :Outputs:
        *pts*: :class:`np.ndarray`
            *(k, 2)* vertices of the intersection (``k`` may be 0)
    """
    output = [tuple(p) for p in np.asarray(subject, dtype=float)]
    clip = np.asarray(clip, dtype=float)
    m = clip.shape[0]
    # Loop through clip edges
    for i in range(m):
        # Nothing left to clip
        if not output:
            break
        c0 = clip[i]
        c1 = clip[(i + 1) % m]
        inputs = output
        output = []
        prev = inputs[-1]
        prev_in = _side(c0, c1, prev) >= 0.0
        for cur in inputs:
            cur_in = _side(c0, c1, cur) >= 0.0
            if cur_in:
                if not prev_in:
                    output.append(_line_intersection(prev, cur, c0, c1))
                output.append(cur)
            elif prev_in:
                output.append(_line_intersection(prev, cur, c0, c1))
            prev = cur
            prev_in = cur_in
    return np.array(output, dtype=float).reshape(-1, 2)


def snap_key(p, grid: float = SNAP_GRID) -> tuple:
    r"""Quantize a point to integer grid-cell coordinates

    :Call:
        >>> key = snap_key(p, grid=1e-6)
    :Inputs:
        *p*: :class:`tuple`\ [:class:`float`]
            Point to quantize
        *grid*: {``1e-6``} | :class:`float` > 0
            Cell size
    :Outputs:
        *key*: :class:`tuple`\ [:class:`int`]
            Pair of cell indices
    """
    if grid <= 0.0:
        raise TilerValueError(f"Snap grid must be positive; got {grid}")
    return (
        int(math.floor(p[0]/grid + 0.5)),
        int(math.floor(p[1]/grid + 0.5)))


class VertexIndex(object):
    r"""Assign canonical ids to points that agree within a tolerance

    Points are bucketed by :func:`snap_key`; a lookup probes the
    neighboring cells too, so two points within *grid* of each other get
    the same id even if they fall on opposite sides of a cell boundary.

    :Call:
        >>> index = VertexIndex(grid=1e-6)
        >>> vid = index.lookup(p)
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "grid",
        "points",
        "_cells",
    )

   # --- __dunder__ ---
    def __init__(self, grid: float = SNAP_GRID):
        self.grid = grid
        #: :class:`list` -- Representative point for each id
        self.points = []
        self._cells = {}

    def __len__(self) -> int:
        return len(self.points)

   # --- Lookup ---
    def lookup(self, p) -> int:
        r"""Return id of point matching *p*, creating one if needed"""
        kx, ky = snap_key(p, self.grid)
        # Probe the 3x3 neighborhood
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for vid in self._cells.get((kx + dx, ky + dy), ()):
                    q = self.points[vid]
                    if math.hypot(p[0] - q[0], p[1] - q[1]) <= self.grid:
                        return vid
        # New vertex
        vid = len(self.points)
        self.points.append((float(p[0]), float(p[1])))
        self._cells.setdefault((kx, ky), []).append(vid)
        return vid


def boxes_intersect(a, b, tol: float = EPS) -> bool:
    r"""Check if two boxes *(xmin, ymin, xmax, ymax)* intersect"""
    return not (
        a[2] < b[0] - tol or b[2] < a[0] - tol or
        a[3] < b[1] - tol or b[3] < a[1] - tol)


def candidate_pairs(boxes, cell=None) -> list:
    r"""Find index pairs whose bounding boxes intersect

    Boxes are hashed into a uniform grid so that only boxes sharing a
    cell are compared.

    :Call:
        >>> pairs = candidate_pairs(boxes, cell=None)
    :Inputs:
        *boxes*: :class:`list`\ [:class:`tuple`]
            Boxes *(xmin, ymin, xmax, ymax)*
        *cell*: {``None``} | :class:`float`
            Grid cell size; default is the median box extent
    :Outputs:
        *pairs*: :class:`list`\ [(:class:`int`, :class:`int`)]
            Sorted pairs *(i, j)* with *i* < *j*
    """
    boxes = np.asarray(boxes, dtype=float).reshape(-1, 4)
    n = boxes.shape[0]
    if n < 2:
        return []
    # Default cell size
    if cell is None:
        extent = np.maximum(
            boxes[:, 2] - boxes[:, 0], boxes[:, 3] - boxes[:, 1])
        cell = float(np.median(extent))
    # Avoid degenerate cells
    cell = max(cell, 1e-6)
    # Hash each box into all cells it covers
    grid = {}
    lo = np.floor(boxes[:, :2] / cell).astype(int)
    hi = np.floor(boxes[:, 2:] / cell).astype(int)
    for k in range(n):
        for ix in range(lo[k, 0], hi[k, 0] + 1):
            for iy in range(lo[k, 1], hi[k, 1] + 1):
                grid.setdefault((ix, iy), []).append(k)
    # Collect candidate pairs
    pairs = set()
    for members in grid.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i = members[a]
                j = members[b]
                if boxes_intersect(boxes[i], boxes[j]):
                    pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def hull_area(pts) -> float:
    r"""Area of the convex hull of a point cloud (monotone chain)"""
    # Unique sorted points
    pts = sorted(set((float(x), float(y)) for x, y in pts))
    if len(pts) < 3:
        return 0.0

    def cross(o, a, b):
        return (a[0] - o[0])*(b[1] - o[1]) - (a[1] - o[1])*(b[0] - o[0])

    # Lower and upper chains
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return abs(signed_area(hull))


# Cross product of each vertex turn
def _turns(pts) -> np.ndarray:
    p0 = np.roll(pts, 1, axis=0)
    p2 = np.roll(pts, -1, axis=0)
    d1 = pts - p0
    d2 = p2 - pts
    return d1[:, 0]*d2[:, 1] - d1[:, 1]*d2[:, 0]


# Side of point relative to directed line; positive on the left
def _side(a, b, p) -> float:
    return (b[0] - a[0])*(p[1] - a[1]) - (b[1] - a[1])*(p[0] - a[0])


def _line_intersection(p, q, a, b) -> tuple:
    # Intersection of segment p-q with infinite line a-b
    sp = _side(a, b, p)
    sq = _side(a, b, q)
    t = sp / (sp - sq)
    return (p[0] + t*(q[0] - p[0]), p[1] + t*(q[1] - p[1]))


def _segments_intersect(a0, a1, b0, b1) -> bool:
    # Orientation tests with tolerance scaled to segment size
    d1 = _side(b0, b1, a0)
    d2 = _side(b0, b1, a1)
    d3 = _side(a0, a1, b0)
    d4 = _side(a0, a1, b1)
    # Proper crossing
    if ((d1 > EPS and d2 < -EPS) or (d1 < -EPS and d2 > EPS)) and \
            ((d3 > EPS and d4 < -EPS) or (d3 < -EPS and d4 > EPS)):
        return True
    # Touching: endpoint on the other segment
    for d, p, s0, s1 in (
            (d1, a0, b0, b1), (d2, a1, b0, b1),
            (d3, b0, a0, a1), (d4, b1, a0, a1)):
        if abs(d) <= EPS and _on_segment(p, s0, s1):
            return True
    return False


def _on_segment(p, a, b) -> bool:
    return (
        min(a[0], b[0]) - EPS <= p[0] <= max(a[0], b[0]) + EPS and
        min(a[1], b[1]) - EPS <= p[1] <= max(a[1], b[1]) + EPS)


def _point_in_triangle(p, a, b, c) -> bool:
    # Closed test so that vertices on a diagonal block the ear
    return (
        _side(a, b, p) >= -EPS and
        _side(b, c, p) >= -EPS and
        _side(c, a, p) >= -EPS)


def _ear_clip(pts) -> list:
    # Working list of vertex indices
    pts = np.asarray(pts, dtype=float)
    idx = list(range(pts.shape[0]))
    triangles = []
    # Clip one ear per pass
    while len(idx) > 3:
        n = len(idx)
        for k in range(n):
            i0 = idx[(k - 1) % n]
            i1 = idx[k]
            i2 = idx[(k + 1) % n]
            a, b, c = pts[i0], pts[i1], pts[i2]
            # Reflex or flat corner cannot be an ear
            if _side(a, b, c) <= EPS:
                continue
            # No other vertex may lie inside the ear
            others = (j for j in idx if j not in (i0, i1, i2))
            if any(_point_in_triangle(pts[j], a, b, c) for j in others):
                continue
            triangles.append(np.array([a, b, c]))
            idx.pop(k)
            break
        else:
            raise TilerGeometryError("Ear clipping failed; polygon not simple")
    triangles.append(pts[idx])
    return triangles
