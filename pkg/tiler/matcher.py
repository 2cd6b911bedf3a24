r"""
``matcher``: Edge matching and patch validation
=================================================

A :class:`Patch` is an ordered list of :class:`Placement` instances,
each a tile id plus a :class:`Transform`. This module decides which
placed sides are shared, checks their labels against a
:class:`RuleSet`, and looks for overlapping tiles.

Reflected placements present their sides traversed backwards, so the
effective label of a side on a mirrored tile has ``plus`` and ``minus``
swapped. This is applied everywhere labels are compared.

Patches can be written to and read from a small text format:

.. code-block:: none

    patch v1
    # tile scale rotation reflect tx ty
    place kite 1.0 0.0 0 0.0 0.0
    place dart 1.0 180.0 0 0.0 2.618033988749895
"""

# Standard library
import math
import re
from collections import Counter

# Third-party
import numpy as np

# Local imports
from .geometry import (
    SNAP_GRID,
    Polygon,
    Transform,
    VertexIndex,
    candidate_pairs,
    compose,
    overlap_pieces)
from .tilererror import (
    TilerKeyError,
    TilerSemanticError,
    TilerStructureError,
    TilerSyntaxError,
    TilerValueError,
    assert_isfile,
    assert_isinstance)
from .tilespec import EdgeLabel, RuleSet, TileSet


# File format version header
PATCH_HEADER = ("patch", "v1")
# Tolerance for collinear edge contacts
CONTACT_TOL = 1e-7


# Individual placed tile
class Placement(object):
    r"""One placed copy of a tile

    :Call:
        >>> p = Placement(tile, pose)
    :Inputs:
        *tile*: :class:`str`
            Tile id
        *pose*: :class:`Transform`
            Placement transform
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "tile",
        "pose",
    )

   # --- __dunder__ ---
    def __init__(self, tile: str, pose: Transform = None):
        assert_isinstance(tile, str, "placement tile id")
        pose = Transform() if pose is None else pose
        assert_isinstance(pose, Transform, "placement pose")
        self.tile = tile
        self.pose = pose

    def __repr__(self) -> str:
        return f"Placement({self.tile!r}, {self.pose!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Placement):
            return NotImplemented
        return self.tile == other.tile and self.pose == other.pose

    def __hash__(self):
        return hash((self.tile, self.pose))

    def isclose(self, other: "Placement", tol: float = 1e-6) -> bool:
        return self.tile == other.tile and self.pose.isclose(other.pose, tol)


# Collection of placements
class Patch(object):
    r"""Finite arrangement of placed tiles

    :Call:
        >>> patch = Patch(placements, tileset=None, nodes=None)
    :Inputs:
        *placements*: :class:`list`\ [:class:`Placement`]
            Placed tiles in canonical order
        *tileset*: {``None``} | :class:`TileSet`
            Tile set the placements refer to
        *nodes*: {``None``} | :class:`list`
            Tree annotation, one node per placement (fractal patches)
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "placements",
        "tileset",
        "nodes",
    )

   # --- __dunder__ ---
    def __init__(self, placements=(), tileset=None, nodes=None):
        self.placements = tuple(placements)
        self.tileset = tileset
        self.nodes = None if nodes is None else tuple(nodes)
        # Check tree annotation
        if self.nodes is not None and len(self.nodes) != len(self.placements):
            raise TilerValueError(
                f"Patch has {len(self.placements)} placements but "
                f"{len(self.nodes)} tree nodes")

    def __len__(self) -> int:
        return len(self.placements)

    def __iter__(self):
        return iter(self.placements)

    def __repr__(self) -> str:
        return f"<Patch n={len(self)}>"

   # --- Properties ---
    @property
    def adjacency(self) -> "Adjacency":
        r"""Shared-edge structure, recomputed from the placements"""
        return build_adjacency(self)

   # --- Operations ---
    def isclose(self, other: "Patch", tol: float = 1e-6) -> bool:
        r"""Check that placements agree in order within *tol*"""
        if len(self) != len(other):
            return False
        return all(
            a.isclose(b, tol)
            for a, b in zip(self.placements, other.placements))

    def tile_counts(self) -> dict:
        r"""Count placements by tile id (sorted by id)"""
        counts = Counter(p.tile for p in self.placements)
        return {k: counts[k] for k in sorted(counts)}


# Edge of a placed tile
class PlacedEdge(object):
    r"""Side of a placed tile in world coordinates

    *start* and *end* follow the counter-clockwise traversal of the
    placed polygon, and *label* is the effective (reflection-adjusted)
    label.
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "index",
        "side",
        "start",
        "end",
        "label",
    )

   # --- __dunder__ ---
    def __init__(self, index, side, start, end, label):
        self.index = index
        self.side = side
        self.start = start
        self.end = end
        self.label = label

    def __repr__(self) -> str:
        return f"<PlacedEdge {self.index}:{self.side} {self.label}>"

    def length(self) -> float:
        return math.hypot(
            self.end[0] - self.start[0], self.end[1] - self.start[1])

    def bbox(self) -> tuple:
        return (
            min(self.start[0], self.end[0]),
            min(self.start[1], self.end[1]),
            max(self.start[0], self.end[0]),
            max(self.start[1], self.end[1]))


# Shared-edge map
class Adjacency(object):
    r"""Shared edges and partial contacts of a patch

    :Attributes:
        *pairs*: :class:`dict`
            Map of vertex-id key ``(v0, v1)`` with ``v0 < v1`` to the two
            edges sharing it as ``((i, side_i), (j, side_j))``, ``i < j``
        *partial*: :class:`list`
            Entries ``((i, side_i), (j, side_j), length)`` of collinear,
            oppositely directed sides that overlap without sharing both
            endpoints
        *edges*: :class:`list`\ [:class:`list`\ [:class:`PlacedEdge`]]
            Placed edges of each placement
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "pairs",
        "partial",
        "edges",
    )

   # --- __dunder__ ---
    def __init__(self, pairs, partial, edges):
        self.pairs = pairs
        self.partial = partial
        self.edges = edges

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return (
            f"<Adjacency pairs={len(self.pairs)} "
            f"partial={len(self.partial)}>")

    def shared_edges(self):
        r"""Iterate through pairs of shared :class:`PlacedEdge` objects"""
        for (i, si), (j, sj) in self.pairs.values():
            yield self.edges[i][si], self.edges[j][sj]


# Validation output
class ValidationReport(object):
    r"""Result of :func:`validate_patch`

    :Attributes:
        *edge_mismatches*: :class:`list`
            Entries ``(((i, side_i), (j, side_j)), (label_i, label_j))``
            for shared sides with incompatible labels
        *overlaps*: :class:`list`
            Entries ``((i, j), area)`` for overlapping placement pairs
        *tile_counts*: :class:`dict`
            Number of placements of each tile id
        *partial_contacts*: :class:`int`
            Number of partial (fractional) side contacts
        *shared_edges*: :class:`int`
            Number of fully shared sides
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "edge_mismatches",
        "overlaps",
        "tile_counts",
        "partial_contacts",
        "shared_edges",
    )

   # --- __dunder__ ---
    def __init__(
            self, edge_mismatches=(), overlaps=(), tile_counts=None,
            partial_contacts=0, shared_edges=0):
        self.edge_mismatches = list(edge_mismatches)
        self.overlaps = list(overlaps)
        self.tile_counts = dict(tile_counts or {})
        self.partial_contacts = partial_contacts
        self.shared_edges = shared_edges

    def __repr__(self) -> str:
        return (
            f"<ValidationReport mismatches={len(self.edge_mismatches)} "
            f"overlaps={len(self.overlaps)}>")

    @property
    def is_valid(self) -> bool:
        r"""Whether there are no mismatches and no overlaps"""
        return not (self.edge_mismatches or self.overlaps)

    def summary(self) -> str:
        r"""Render report as ``key: value`` lines"""
        lines = [
            f"valid: {'yes' if self.is_valid else 'no'}",
            f"placements: {sum(self.tile_counts.values())}",
            f"shared_edges: {self.shared_edges}",
            f"partial_contacts: {self.partial_contacts}",
            f"edge_mismatches: {len(self.edge_mismatches)}",
            f"overlaps: {len(self.overlaps)}",
        ]
        for tile_id, n in self.tile_counts.items():
            lines.append(f"count.{tile_id}: {n}")
        # Details
        for ((i, si), (j, sj)), (la, lb) in self.edge_mismatches:
            lines.append(f"mismatch: {i}.{si} {la} <-> {j}.{sj} {lb}")
        for (i, j), area in self.overlaps:
            lines.append(f"overlap: {i} {j} {area:.6f}")
        return "\n".join(lines) + "\n"


def edges_compatible(
        a: EdgeLabel, b: EdgeLabel, rules: RuleSet, known=None) -> bool:
    r"""Check whether two edge labels may abut under *rules*

    :Call:
        >>> q = edges_compatible(a, b, rules, known=None)
    :Inputs:
        *a*: :class:`EdgeLabel`
            First label
        *b*: :class:`EdgeLabel`
            Second label
        *rules*: :class:`RuleSet`
            Compatibility rules
        *known*: {``None``} | :class:`set`\ [:class:`EdgeLabel`]
            Labels that exist in the tile set, e.g. ``tileset.labels()``
    :Outputs:
        *q*: :class:`bool`
            Whether *a* and *b* are compatible
    :Raises:
        :class:`TilerKeyError` if *known* is given and lacks *a* or *b*
    """
    # Check labels
    if known is not None:
        for lbl in (a, b):
            if lbl not in known:
                raise TilerKeyError(f"Unknown edge label '{lbl}'")
    return rules.is_compatible(a, b)


def _get_tileset(patch: Patch, tileset=None) -> TileSet:
    # Explicit argument wins
    if tileset is None:
        tileset = patch.tileset
    if tileset is None:
        raise TilerValueError("Patch has no tile set; pass one explicitly")
    return tileset


def placed_polygon(placement: Placement, tileset: TileSet) -> Polygon:
    r"""World-space polygon of a placement, counter-clockwise

    :Call:
        >>> poly = placed_polygon(placement, tileset)
    :Raises:
        :class:`TilerKeyError` if the tile id is not in *tileset*
    """
    tile = tileset.tile(placement.tile)
    return tile.shape.transformed(placement.pose)


def placed_edges(placement: Placement, tileset: TileSet, index: int = 0):
    r"""World-space sides of a placement with effective labels

    :Call:
        >>> edges = placed_edges(placement, tileset, index=0)
    :Inputs:
        *placement*: :class:`Placement`
            Placed tile
        *tileset*: :class:`TileSet`
            Tile set with the tile definition
        *index*: {``0``} | :class:`int`
            Placement index recorded in each edge
    :Outputs:
        *edges*: :class:`list`\ [:class:`PlacedEdge`]
            One entry per proto side, in proto side order
    """
    tile = tileset.tile(placement.tile)
    pose = placement.pose
    pts = pose.apply_many(tile.shape.vertices)
    n = len(pts)
    edges = []
    for side in range(n):
        p = (float(pts[side, 0]), float(pts[side, 1]))
        q = (float(pts[(side+1) % n, 0]), float(pts[(side+1) % n, 1]))
        label = tile.edges[side]
        # Mirrored tile traverses this side backwards
        if pose.reflect:
            p, q = q, p
            label = label.mirrored()
        edges.append(PlacedEdge(index, side, p, q, label))
    return edges


def build_adjacency(
        patch: Patch, tileset=None, strict: bool = True,
        grid: float = SNAP_GRID) -> Adjacency:
    r"""Find fully shared sides and partial side contacts of a patch

    Two sides are *shared* if their snapped endpoints coincide in
    opposite order. Sides that are collinear, oppositely directed, and
    overlap along a nonzero length without sharing both endpoints are
    *partial contacts*.

    :Call:
        >>> adj = build_adjacency(patch, tileset=None, strict=True)
    :Inputs:
        *patch*: :class:`Patch`
            Patch to analyze
        *tileset*: {``None``} | :class:`TileSet`
            Tile set; defaults to *patch.tileset*
        *strict*: {``True``} | ``False``
            Whether to raise on more than two claims of one side
        *grid*: {``1e-6``} | :class:`float`
            Vertex snapping tolerance
    :Outputs:
        *adj*: :class:`Adjacency`
            Shared-edge map and partial contacts
    :Raises:
        :class:`TilerStructureError` if *strict* and three or more
        placed sides claim the same edge
    """
    tileset = _get_tileset(patch, tileset)
    index = VertexIndex(grid)
    # Placed edges and claims on each undirected vertex pair
    edges = []
    claims = {}
    for i, placement in enumerate(patch.placements):
        pedges = placed_edges(placement, tileset, i)
        edges.append(pedges)
        for edge in pedges:
            v0 = index.lookup(edge.start)
            v1 = index.lookup(edge.end)
            # Degenerate after snapping
            if v0 == v1:
                continue
            key = (min(v0, v1), max(v0, v1))
            claims.setdefault(key, []).append((edge, v0))
    # Pair claims
    pairs = {}
    claimed = set()
    for key, entries in claims.items():
        # Too many tiles on one side
        if len(entries) > 2 and strict:
            who = ", ".join(f"{e.index}:{e.side}" for e, _ in entries)
            raise TilerStructureError(
                f"{len(entries)} placed sides claim one edge ({who})")
        # Mark all claimants as covered so they skip partial search
        if len(entries) > 1:
            claimed.update((e.index, e.side) for e, _ in entries)
        # Find first oppositely directed pair
        for a in range(len(entries)):
            ea, va = entries[a]
            for b in range(a + 1, len(entries)):
                eb, vb = entries[b]
                if va != vb and ea.index != eb.index:
                    pair = sorted([(ea.index, ea.side), (eb.index, eb.side)])
                    pairs[key] = tuple(pair)
                    break
            if key in pairs:
                break
    # Partial contacts among remaining sides
    free = [
        e for pedges in edges for e in pedges
        if (e.index, e.side) not in claimed]
    partial = _find_partial_contacts(free)
    # Canonical ordering
    pairs = {k: pairs[k] for k in sorted(pairs, key=lambda k: pairs[k])}
    return Adjacency(pairs, partial, edges)


def _find_partial_contacts(free) -> list:
    # Broad phase on edge boxes
    boxes = [e.bbox() for e in free]
    contacts = []
    for a, b in candidate_pairs(boxes):
        ea = free[a]
        eb = free[b]
        if ea.index == eb.index:
            continue
        length = _contact_length(ea, eb)
        if length > CONTACT_TOL:
            pair = sorted([(ea.index, ea.side), (eb.index, eb.side)])
            contacts.append((pair[0], pair[1], length))
    contacts.sort()
    return contacts


def _contact_length(ea: PlacedEdge, eb: PlacedEdge) -> float:
    # Direction of first edge
    p0 = np.array(ea.start)
    d = np.array(ea.end) - p0
    la = float(np.hypot(*d))
    if la <= CONTACT_TOL:
        return 0.0
    u = d / la
    q0 = np.array(eb.start) - p0
    q1 = np.array(eb.end) - p0
    # Collinear: perpendicular offsets vanish
    tol = CONTACT_TOL * max(1.0, la)
    if abs(u[0]*q0[1] - u[1]*q0[0]) > tol:
        return 0.0
    if abs(u[0]*q1[1] - u[1]*q1[0]) > tol:
        return 0.0
    # Opposite direction
    t0 = float(u @ q0)
    t1 = float(u @ q1)
    if t1 >= t0:
        return 0.0
    # Overlap of projected intervals
    return max(0.0, min(la, t0) - max(0.0, t1))


def validate_patch(patch: Patch, tileset=None) -> ValidationReport:
    r"""Check every shared side and every tile pair of a patch

    :Call:
        >>> report = validate_patch(patch, tileset=None)
    :Inputs:
        *patch*: :class:`Patch`
            Patch to check
        *tileset*: {``None``} | :class:`TileSet`
            Tile set and rules; defaults to *patch.tileset*
    :Outputs:
        *report*: :class:`ValidationReport`
            Mismatched shared sides, overlapping pairs, and counts;
            problems are recorded, never raised
    """
    tileset = _get_tileset(patch, tileset)
    rules = tileset.rules
    # Shared sides
    adj = build_adjacency(patch, tileset, strict=False)
    mismatches = []
    for ea, eb in adj.shared_edges():
        if not rules.is_compatible(ea.label, eb.label):
            key = ((ea.index, ea.side), (eb.index, eb.side))
            mismatches.append((key, (ea.label, eb.label)))
    mismatches.sort(key=lambda m: m[0])
    # Overlaps
    overlaps = find_overlaps(patch, tileset)
    # Output
    return ValidationReport(
        mismatches, overlaps, patch.tile_counts(),
        partial_contacts=len(adj.partial),
        shared_edges=len(adj.pairs))


def find_overlaps(patch: Patch, tileset=None) -> list:
    r"""Find placement pairs whose interiors overlap

    :Call:
        >>> overlaps = find_overlaps(patch, tileset=None)
    :Outputs:
        *overlaps*: :class:`list`
            Entries ``((i, j), area)`` with ``i < j`` sorted by pair
    """
    tileset = _get_tileset(patch, tileset)
    # World polygons and their convex pieces
    polys = [placed_polygon(p, tileset) for p in patch.placements]
    boxes = [poly.bbox() for poly in polys]
    pieces = {}
    overlaps = []
    for i, j in candidate_pairs(boxes):
        # Triangulate lazily
        for k in (i, j):
            if k not in pieces:
                pieces[k] = polys[k].triangulate()
        area = overlap_pieces(pieces[i], pieces[j])
        if area > 0.0:
            overlaps.append(((i, j), area))
    return overlaps


def mirror_patch(patch: Patch, axis: str = "x") -> Patch:
    r"""Reflect every placement of a patch across a coordinate axis

    :Call:
        >>> patch2 = mirror_patch(patch, axis="x")
    :Inputs:
        *patch*: :class:`Patch`
            Original patch
        *axis*: {``"x"``} | ``"y"``
            Mirror line through the origin
    :Outputs:
        *patch2*: :class:`Patch`
            Mirrored patch with the same placement order
    """
    if axis == "x":
        mirror = Transform(reflect=True)
    elif axis == "y":
        mirror = Transform(rotation=180.0, reflect=True)
    else:
        raise TilerValueError(f"Mirror axis must be 'x' or 'y'; got '{axis}'")
    placements = [
        Placement(p.tile, compose(mirror, p.pose)) for p in patch.placements]
    return Patch(placements, patch.tileset)


def write_patch(patch: Patch) -> str:
    r"""Write a patch in the ``patch v1`` text format

    :Call:
        >>> text = write_patch(patch)
    """
    lines = [" ".join(PATCH_HEADER)]
    for p in patch.placements:
        t = p.pose
        tx, ty = t.translation
        lines.append(
            f"place {p.tile} {t.scale!r} {t.rotation!r} {int(t.reflect)} "
            f"{tx!r} {ty!r}")
    return "\n".join(lines) + "\n"


def parse_patch(text: str, tileset=None) -> Patch:
    r"""Read ``patch v1`` text

    :Call:
        >>> patch = parse_patch(text, tileset=None)
    :Inputs:
        *text*: :class:`str`
            Patch file contents
        *tileset*: {``None``} | :class:`TileSet`
            If given, tile ids are checked and attached to the patch
    :Outputs:
        *patch*: :class:`Patch`
            Parsed patch
    :Raises:
        * :class:`TilerSyntaxError` with line and column
        * :class:`TilerSemanticError` for unknown tile ids
    """
    assert_isinstance(text, str, "patch text")
    placements = []
    header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not toks:
            continue
        # Header first
        if not header:
            if tuple(t for t, _ in toks) != PATCH_HEADER:
                raise TilerSyntaxError(
                    "Expected header 'patch v1'", lineno, toks[0][1])
            header = True
            continue
        # Placement line
        if toks[0][0] != "place":
            raise TilerSyntaxError(
                f"Expected 'place'; got '{toks[0][0]}'", lineno, toks[0][1])
        if len(toks) != 7:
            col = toks[-1][1] + len(toks[-1][0])
            if len(toks) > 7:
                col = toks[7][1]
            raise TilerSyntaxError(
                "Expected 'place ID SCALE ROT REFLECT TX TY'", lineno, col)
        tile_id = toks[1][0]
        vals = []
        for txt, col in toks[2:]:
            try:
                vals.append(float(txt))
            except ValueError:
                raise TilerSyntaxError(
                    f"Expected a number; got '{txt}'", lineno, col)
        scale, rot, reflect, tx, ty = vals
        if toks[4][0] not in ("0", "1"):
            raise TilerSyntaxError(
                "Reflect flag must be 0 or 1", lineno, toks[4][1])
        if not all(math.isfinite(v) for v in vals) or scale <= 0.0:
            raise TilerSemanticError(
                "Placement values must be finite with positive scale",
                "scale", lineno, toks[2][1])
        # Check tile id
        if tileset is not None and tile_id not in tileset:
            raise TilerSemanticError(
                f"Unknown tile id '{tile_id}'", "unknown-id",
                lineno, toks[1][1])
        pose = Transform(scale, rot, bool(int(reflect)), (tx, ty))
        placements.append(Placement(tile_id, pose))
    if not header:
        raise TilerSyntaxError("Empty file; expected 'patch v1'", 1, 1)
    return Patch(placements, tileset)


def read_patch(fname: str, tileset=None) -> Patch:
    r"""Read a ``patch v1`` file; see :func:`parse_patch`"""
    assert_isfile(fname)
    with open(fname, "r") as fp:
        return parse_patch(fp.read(), tileset)
