r"""
``penrose``: Penrose P2 and P3 tilings by substitution
========================================================

Penrose patches are grown by *deflation*: every tile is replaced by a
fixed arrangement of smaller tiles, shrinking the linear size of the
tiles by 1/φ per step where φ = (1 + √5)/2. Whole kites, darts, and
rhombi do not subdivide cleanly, so substitution works on their halves,
the golden triangles known as Robinson triangles.

Each system has two whole tiles and two half tiles:

    ======  ==============  ===========================
    System  Whole tiles     Half tiles
    ======  ==============  ===========================
    P2      kite, dart      half-kite, half-dart
    P3      thick, thin     half-thick, half-thin
    ======  ==============  ===========================

A whole tile is split into a *left* half with the tile's pose and a
*right* half with the pose composed with the tile's mirror symmetry.
After deflating, pairs of halves that share their axis are merged back
into whole tiles.

The substitution rules are ordinary ``SUBST`` rules of the built-in tile
sets, so :func:`deflate` simply composes each half's pose with the
relative child transforms.

The P2 side labels encode the classic arrow markings: long kite sides
point toward the head, short kite sides toward the tail, long dart
sides away from the head, and short dart sides away from the tail.
"""

# Standard library
import functools
import math
from collections import Counter

# Third-party
import numpy as np

# Local imports
from .geometry import (
    EPS_AREA,
    SNAP_GRID,
    Polygon,
    Transform,
    VertexIndex,
    compose,
    overlap_area,
    signed_area,
    similarity_from_segment)
from .matcher import Patch, Placement, placed_polygon
from .tilererror import TilerRuleError, TilerValueError
from .tilespec import RuleSet, TileProto, TileSet, labels


# Golden ratio
PHI = (1.0 + math.sqrt(5.0)) / 2.0

# Tile ids of each system
SYSTEMS = {
    "p2": ("kite", "dart", "half-kite", "half-dart"),
    "p3": ("thick", "thin", "half-thick", "half-thin"),
}
# Whole tile kinds used for ratios, numerator first
RATIO_KINDS = {
    "p2": ("kite", "dart"),
    "p3": ("thick", "thin"),
}
# Seeds for each system
SEED_KINDS = {
    "p2": ("single_kite", "single_dart", "sun", "star"),
    "p3": ("single_thick", "single_thin"),
}
# Vertex pair shared by the two halves of a whole tile
HALF_AXIS = {
    "half-kite": (0, 2),
    "half-dart": (0, 1),
    "half-thick": (1, 2),
    "half-thin": (1, 2),
}
# Corner names of P2 whole tiles, by vertex index
CORNER_NAMES = {
    "kite": ("head", "side", "tail", "side"),
    "dart": ("head", "wing", "tail", "wing"),
}

# P2 coordinates: long side φ at 36 degrees from the axis
_SX = PHI * math.sin(math.radians(36.0))
_SY = PHI * math.cos(math.radians(36.0))
# P3 half-widths and heights
_TX = math.sin(math.radians(18.0))
_TY = math.cos(math.radians(18.0))
_KX = math.sin(math.radians(54.0))
_KY = math.cos(math.radians(54.0))

# Mirror symmetries mapping each whole tile to itself
MIRRORS = {
    "kite": Transform(1.0, 180.0, True),
    "dart": Transform(1.0, 180.0, True),
    "thin": Transform(1.0, 0.0, True, (0.0, 2*_TY)),
    "thick": Transform(1.0, 0.0, True, (0.0, 2*_KY)),
}


def p2_geometry() -> TileSet:
    r"""Build the P2 (kite and dart) tile set

    The kite has angles 72, 72, 144, 72 degrees at its head, side, tail,
    and other side; the dart has 72, 36, 216, 36 degrees at its head,
    wing, tail, and wing. Both have long sides φ and short sides 1 and
    sit with their head at the origin and symmetry axis on +y.

    :Call:
        >>> tileset = p2_geometry()
    :Outputs:
        *tileset*: :class:`TileSet`
            Tiles ``kite``, ``dart``, ``half-kite``, ``half-dart`` and
            substitution rules for the halves
    """
    # Whole tiles
    kite = TileProto(
        "kite",
        Polygon([(0, 0), (_SX, _SY), (0, PHI), (-_SX, _SY)]),
        labels("L:minus", "S:plus", "S:minus", "L:plus"),
        motif="kite")
    dart = TileProto(
        "dart",
        Polygon([(0, 0), (_SX, _SY), (0, 1), (-_SX, _SY)]),
        labels("L:plus", "S:minus", "S:plus", "L:minus"),
        motif="dart")
    # Robinson triangles: (head, side, tail) and (tail, head, wing)
    half_kite = TileProto(
        "half-kite",
        Polygon([(0, 0), (_SX, _SY), (0, PHI)]),
        labels("L:minus", "S:plus", "KA:sym"),
        motif="kite", half_of="kite")
    half_dart = TileProto(
        "half-dart",
        Polygon([(0, 1), (0, 0), (_SX, _SY)]),
        labels("DA:sym", "L:plus", "S:minus"),
        motif="dart", half_of="dart")
    # Substitution of half-kite (A, B, C)
    a, b, c = _vertices(half_kite)
    q = a + (c - a)/PHI
    r = a + (b - a)/PHI**2
    subst_kite = [
        ("half-kite", _pose_from_triple(half_kite, (b, c, q))),
        ("half-kite", _pose_from_triple(half_kite, (b, r, q))),
        ("half-dart", _pose_from_triple(half_dart, (r, a, q))),
    ]
    # Substitution of half-dart (T, H, W)
    t, h, w = _vertices(half_dart)
    x = h + (w - h)/PHI
    subst_dart = [
        ("half-kite", _pose_from_triple(half_kite, (h, x, t))),
        ("half-dart", _pose_from_triple(half_dart, (x, w, t))),
    ]
    rules = RuleSet(substitutions={
        "half-kite": subst_kite,
        "half-dart": subst_dart,
    })
    return TileSet([kite, dart, half_kite, half_dart], rules, name="p2")


def p3_geometry() -> TileSet:
    r"""Build the P3 (thick and thin rhombus) tile set

    Both rhombi have unit sides, a vertex at the origin, and their long
    diagonal on +y. The thin rhombus has 36 degree angles at the ends of
    that diagonal and the thick one 108 degrees.

    :Call:
        >>> tileset = p3_geometry()
    :Outputs:
        *tileset*: :class:`TileSet`
            Tiles ``thick``, ``thin``, ``half-thick``, ``half-thin`` and
            substitution rules for the halves
    """
    thick = TileProto(
        "thick",
        Polygon([(0, 0), (_KX, _KY), (0, 2*_KY), (-_KX, _KY)]),
        labels("a:minus", "a:plus", "c:minus", "c:plus"),
        motif="thick")
    thin = TileProto(
        "thin",
        Polygon([(0, 0), (_TX, _TY), (0, 2*_TY), (-_TX, _TY)]),
        labels("a:plus", "a:minus", "c:minus", "c:plus"),
        motif="thin")
    # Golden triangles with apex A and base B-C
    half_thick = TileProto(
        "half-thick",
        Polygon([(0, 0), (_KX, _KY), (-_KX, _KY)]),
        labels("a:minus", "KB:sym", "c:plus"),
        motif="thick", half_of="thick")
    half_thin = TileProto(
        "half-thin",
        Polygon([(0, 0), (_TX, _TY), (-_TX, _TY)]),
        labels("a:plus", "TB:sym", "c:plus"),
        motif="thin", half_of="thin")
    # Substitution of half-thin
    a, b, c = _vertices(half_thin)
    p = a + (b - a)/PHI
    subst_thin = [
        ("half-thin", _pose_from_triple(half_thin, (c, p, b))),
        ("half-thick", _pose_from_triple(half_thick, (p, c, a))),
    ]
    # Substitution of half-thick
    a, b, c = _vertices(half_thick)
    q = b + (a - b)/PHI
    r = b + (c - b)/PHI
    subst_thick = [
        ("half-thick", _pose_from_triple(half_thick, (r, c, a))),
        ("half-thick", _pose_from_triple(half_thick, (q, r, b))),
        ("half-thin", _pose_from_triple(half_thin, (r, q, a))),
    ]
    rules = RuleSet(substitutions={
        "half-thick": subst_thick,
        "half-thin": subst_thin,
    })
    return TileSet([thick, thin, half_thick, half_thin], rules, name="p3")


def _vertices(tile: TileProto):
    return [np.array(v) for v in tile.shape.vertices]


def _pose_from_triple(tile: TileProto, triple) -> Transform:
    # Similarity taking the tile's first two vertices to the triple's
    w0, w1, w2 = triple
    v = tile.shape.vertices
    reflect = signed_area(np.array([w0, w1, w2])) < 0.0
    return similarity_from_segment(v[0], v[1], w0, w1, reflect)


def system_of(patch: Patch) -> str:
    r"""Identify the Penrose system (``"p2"`` or ``"p3"``) of a patch

    :Raises:
        :class:`TilerRuleError` for tiles of both systems or of neither
    """
    found = set()
    for p in patch.placements:
        for name, ids in SYSTEMS.items():
            if p.tile in ids:
                found.add(name)
                break
        else:
            raise TilerRuleError(f"Tile '{p.tile}' is not a Penrose tile")
    if len(found) > 1:
        raise TilerRuleError("Patch mixes P2 and P3 tiles")
    if not found:
        raise TilerRuleError("Cannot identify Penrose system of empty patch")
    return found.pop()


def _system_tileset(patch: Patch, system: str) -> TileSet:
    # Use the patch's own tile set when it is a Penrose set
    if patch.tileset is not None and all(
            tile_id in patch.tileset for tile_id in SYSTEMS[system]):
        return patch.tileset
    return p2_geometry() if system == "p2" else p3_geometry()


def split_whole(patch: Patch) -> Patch:
    r"""Replace each whole Penrose tile by its left and right halves

    :Call:
        >>> halves = split_whole(patch)
    :Outputs:
        *halves*: :class:`Patch`
            Patch of half tiles; half tiles in *patch* are kept as is
    """
    system = system_of(patch)
    tileset = _system_tileset(patch, system)
    # Map whole tile id to its half
    halves = {t.half_of: t.id for t in tileset.tiles if t.half_of}
    placements = []
    for p in patch.placements:
        half = halves.get(p.tile)
        if half is None:
            placements.append(p)
            continue
        mirror = MIRRORS[p.tile]
        placements.append(Placement(half, p.pose))
        placements.append(Placement(half, compose(p.pose, mirror)))
    return Patch(placements, tileset)


def merge_halves(patch: Patch, grid: float = SNAP_GRID) -> Patch:
    r"""Merge pairs of half tiles that share their axis into whole tiles

    :Call:
        >>> merged = merge_halves(patch)
    :Outputs:
        *merged*: :class:`Patch`
            Patch where each merged pair is replaced, at the position of
            its first half, by one whole tile; unpaired halves remain
    """
    system = system_of(patch)
    tileset = _system_tileset(patch, system)
    index = VertexIndex(grid)
    # Group halves by kind and axis vertex ids
    groups = {}
    for i, p in enumerate(patch.placements):
        axis = HALF_AXIS.get(p.tile)
        if axis is None:
            continue
        v = tileset.tile(p.tile).shape.vertices
        v0 = index.lookup(p.pose.apply(v[axis[0]]))
        v1 = index.lookup(p.pose.apply(v[axis[1]]))
        groups.setdefault((p.tile, v0, v1), []).append(i)
    # Choose partners
    partner = {}
    for members in groups.values():
        if len(members) != 2:
            continue
        i, j = members
        pi = patch.placements[i]
        pj = patch.placements[j]
        whole = tileset.tile(pi.tile).half_of
        # Halves must be mirror images across the axis
        if not compose(pi.pose, MIRRORS[whole]).isclose(pj.pose):
            continue
        # Prefer an unreflected pose for the whole tile
        pose = pj.pose if (pi.pose.reflect and not pj.pose.reflect) \
            else pi.pose
        partner[i] = (j, Placement(whole, pose))
        partner[j] = (i, None)
    # Assemble in canonical order
    placements = []
    for i, p in enumerate(patch.placements):
        if i not in partner:
            placements.append(p)
        elif partner[i][1] is not None:
            placements.append(partner[i][1])
    return Patch(placements, tileset)


def deflate(patch: Patch, steps: int) -> Patch:
    r"""Apply Robinson-triangle substitution *steps* times

    :Call:
        >>> patch2 = deflate(patch, steps)
    :Inputs:
        *patch*: :class:`Patch`
            Patch of P2 or P3 tiles (whole tiles are split first)
        *steps*: :class:`int` >= 0
            Number of substitution steps
    :Outputs:
        *patch2*: :class:`Patch`
            Deflated patch with halves merged into whole tiles where
            possible; *patch* itself if *steps* is 0
    :Raises:
        * :class:`TilerRuleError` if *patch* mixes systems
        * :class:`TilerValueError` if *steps* is negative
    """
    if steps < 0:
        raise TilerValueError(f"Deflation steps must be >= 0; got {steps}")
    if steps == 0:
        return patch
    halves = split_whole(patch)
    tileset = halves.tileset
    subst = tileset.rules.substitutions
    placements = halves.placements
    for _ in range(steps):
        # Children by parent index, then by rule order
        children = []
        for p in placements:
            for child, rel in subst[p.tile]:
                children.append(Placement(child, compose(p.pose, rel)))
        placements = children
    return merge_halves(Patch(placements, tileset))


def seed_patch(seed_kind: str) -> Patch:
    r"""Build a seed patch of half tiles

    ``sun`` is five kites and ``star`` five darts sharing their heads at
    the origin, with a tile axis on +x. Single tiles use the identity
    pose.

    :Call:
        >>> patch = seed_patch(seed_kind)
    :Inputs:
        *seed_kind*: :class:`str`
            One of ``single_kite``, ``single_dart``, ``sun``, ``star``,
            ``single_thick``, ``single_thin``
    :Outputs:
        *patch*: :class:`Patch`
            Half-tile patch
    """
    # Whole tiles first
    if seed_kind in ("sun", "star"):
        tile = "kite" if seed_kind == "sun" else "dart"
        wholes = [
            Placement(tile, Transform(rotation=(-90 + 72*k) % 360))
            for k in range(5)]
    elif seed_kind in ("single_kite", "single_dart", "single_thick",
                       "single_thin"):
        wholes = [Placement(seed_kind.split("_")[1])]
    else:
        opts = [k for kinds in SEED_KINDS.values() for k in kinds]
        raise TilerValueError(
            f"Unknown seed kind '{seed_kind}'; options are: " +
            " | ".join(opts))
    system = "p2" if seed_kind in SEED_KINDS["p2"] else "p3"
    tileset = p2_geometry() if system == "p2" else p3_geometry()
    return split_whole(Patch(wholes, tileset))


def generate(set_name: str, seed_kind: str, depth: int) -> Patch:
    r"""Deflate a seed *depth* times and merge halves

    :Call:
        >>> patch = generate(set_name, seed_kind, depth)
    :Inputs:
        *set_name*: ``"p2"`` | ``"p3"``
            Penrose system
        *seed_kind*: :class:`str`
            Seed valid for *set_name*
        *depth*: :class:`int` >= 0
            Number of deflations
    :Outputs:
        *patch*: :class:`Patch`
            Merged patch
    """
    if set_name not in SEED_KINDS:
        raise TilerValueError(
            f"Unknown Penrose set '{set_name}'; options are: p2 | p3")
    if seed_kind not in SEED_KINDS[set_name]:
        raise TilerValueError(
            f"Seed '{seed_kind}' is not valid for {set_name}; options are: " +
            " | ".join(SEED_KINDS[set_name]))
    return merge_halves(deflate(seed_patch(seed_kind), depth))


def whole_counts(patch: Patch) -> dict:
    r"""Count whole-tile equivalents (a half counts as 0.5)

    :Call:
        >>> counts = whole_counts(patch)
    :Outputs:
        *counts*: :class:`dict`\ [:class:`float`]
            Count for each whole tile kind of the patch's system
    """
    system = system_of(patch)
    counts = {kind: 0.0 for kind in RATIO_KINDS[system]}
    for p in patch.placements:
        if p.tile.startswith("half-"):
            counts[p.tile[5:]] += 0.5
        else:
            counts[p.tile] += 1.0
    return counts


def tile_ratio(patch: Patch) -> float:
    r"""Ratio of kites to darts (P2) or thick to thin rhombi (P3)

    :Call:
        >>> ratio = tile_ratio(patch)
    :Raises:
        :class:`TilerRuleError` if there are no darts or thin rhombi
    """
    system = system_of(patch)
    num, den = RATIO_KINDS[system]
    counts = whole_counts(patch)
    if counts[den] == 0:
        raise TilerRuleError(f"Cannot compute ratio: patch has no {den}s")
    return counts[num] / counts[den]


def count_recurrence(a: int, b: int, steps: int) -> list:
    r"""Expected whole-tile counts under repeated deflation

    For P2, *a* is the number of kites and *b* darts; for P3, *a* is
    thick and *b* thin rhombi. Both follow ``a' = 2a + b, b' = a + b``.

    :Call:
        >>> table = count_recurrence(a, b, steps)
    :Outputs:
        *table*: :class:`list`\ [:class:`tuple`\ [:class:`int`]]
            Counts after 0, 1, ..., *steps* deflations
    """
    table = [(a, b)]
    for _ in range(steps):
        a, b = 2*a + b, a + b
        table.append((a, b))
    return table


# Vertex configuration
class VertexStar(object):
    r"""Cyclic sequence of P2 tile corners around one vertex

    The sequence is normalized to the smallest of its rotations and
    reversals, so equal configurations compare equal regardless of the
    orientation or mirror image in which they occur.

    :Call:
        >>> star = VertexStar(corners)
    :Inputs:
        *corners*: :class:`list`\ [(:class:`str`, :class:`str`)]
            Counter-clockwise *(kind, corner)* pairs, e.g.
            ``("kite", "head")``
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "corners",
    )

    # Interior angles of each corner
    _angles = {
        ("kite", "head"): 72,
        ("kite", "side"): 72,
        ("kite", "tail"): 144,
        ("dart", "head"): 72,
        ("dart", "wing"): 36,
        ("dart", "tail"): 216,
    }

   # --- __dunder__ ---
    def __init__(self, corners):
        self.corners = _normalize_cycle(
            [tuple(c) for c in corners])

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexStar):
            return NotImplemented
        return self.corners == other.corners

    def __hash__(self):
        return hash(self.corners)

    def __lt__(self, other) -> bool:
        return self.corners < other.corners

    def __repr__(self) -> str:
        txt = " ".join(f"{k}.{c}" for k, c in self.corners)
        return f"<VertexStar {self.name or '?'}: {txt}>"

   # --- Properties ---
    @property
    def angles(self) -> tuple:
        r"""Interior angle of each corner in degrees"""
        return tuple(self._angles[c] for c in self.corners)

    @property
    def name(self):
        r"""Conventional name of a legal star, else ``None``"""
        return star_name(self)


def _normalize_cycle(seq) -> tuple:
    # Smallest rotation of sequence or its reverse
    n = len(seq)
    if n == 0:
        return ()
    cands = []
    for s in (seq, seq[::-1]):
        for k in range(n):
            cands.append(tuple(s[k:] + s[:k]))
    return min(cands)


def vertex_stars(patch: Patch, tileset=None) -> set:
    r"""Find the distinct configurations at interior vertices

    Only whole kites and darts take part; vertices touching a half tile
    are skipped. A vertex is interior if the corner angles meeting there
    sum to 360 degrees.

    :Call:
        >>> stars = vertex_stars(patch, tileset=None)
    :Inputs:
        *patch*: :class:`Patch`
            Merged P2 patch
        *tileset*: {``None``} | :class:`TileSet`
            Tile set; defaults to *patch.tileset* or the P2 set
    :Outputs:
        *stars*: :class:`set`\ [:class:`VertexStar`]
            Distinct interior vertex stars
    """
    if tileset is None:
        tileset = patch.tileset or p2_geometry()
    index = VertexIndex()
    corners = {}
    skip = set()
    for p in patch.placements:
        tile = tileset.tile(p.tile)
        pts = p.pose.apply_many(tile.shape.vertices)
        # Vertices of half tiles and other tiles are not classified
        if p.tile not in CORNER_NAMES:
            for q in pts:
                skip.add(index.lookup(q))
            continue
        poly = tile.shape.transformed(p.pose)
        n = len(poly)
        angles = _interior_angles(poly.vertices)
        for j in range(n):
            # Proto vertex index of world CCW vertex j
            k = (n - 1 - j) if p.pose.reflect else j
            q = poly.vertices[j]
            d = poly.vertices[(j + 1) % n] - q
            direction = math.degrees(math.atan2(d[1], d[0])) % 360.0
            vid = index.lookup(q)
            corner = (p.tile, CORNER_NAMES[p.tile][k])
            corners.setdefault(vid, []).append((direction, corner, angles[j]))
    # Classify interior vertices
    stars = set()
    for vid, entries in corners.items():
        if vid in skip:
            continue
        total = sum(e[2] for e in entries)
        if abs(total - 360.0) > 1e-6:
            continue
        entries.sort()
        stars.add(VertexStar([e[1] for e in entries]))
    return stars


def _interior_angles(pts) -> list:
    # Interior angle at each vertex of a CCW polygon, in degrees
    n = len(pts)
    out = []
    for j in range(n):
        a = pts[(j + 1) % n] - pts[j]
        b = pts[j - 1] - pts[j]
        ang = math.degrees(math.atan2(b[1], b[0]) - math.atan2(a[1], a[0]))
        out.append(ang % 360.0)
    return out


@functools.lru_cache(maxsize=1)
def legal_vertex_stars() -> frozenset:
    r"""Enumerate the P2 vertex stars allowed by the edge labels

    Corners are placed counter-clockwise around the origin, each new
    tile's outgoing side lying on the previous tile's incoming side.
    A sequence is kept if every shared side has compatible labels and
    equal length, the angles sum to 360 degrees, and no two placed tiles
    overlap. This search uses only the tile definitions and is
    independent of :func:`deflate`.

    :Call:
        >>> stars = legal_vertex_stars()
    :Outputs:
        *stars*: :class:`frozenset`\ [:class:`VertexStar`]
            Legal stars; the sun, star, ace, deuce, jack, queen, and king
    """
    tileset = p2_geometry()
    rules = tileset.rules
    # Corner table: (kind, index, angle, out label, out len, in label, in len)
    table = []
    for kind in ("kite", "dart"):
        tile = tileset.tile(kind)
        v = tile.shape.vertices
        angles = _interior_angles(v)
        for k in range(4):
            out_len = float(np.hypot(*(v[(k+1) % 4] - v[k])))
            in_len = float(np.hypot(*(v[k] - v[k-1])))
            table.append((
                kind, k, int(round(angles[k])),
                tile.edges[k], out_len, tile.edges[k-1], in_len))
    stars = set()

    def place(entry, theta):
        # Put corner at origin with outgoing side at angle *theta*
        kind, k = entry[:2]
        v = tileset.tile(kind).shape.vertices
        q1 = (math.cos(math.radians(theta)), math.sin(math.radians(theta)))
        q1 = (entry[4]*q1[0], entry[4]*q1[1])
        pose = similarity_from_segment(v[k], v[(k+1) % 4], (0.0, 0.0), q1)
        return Placement(kind, pose)

    def search(seq, polys, total):
        # Closed star
        if total == 360:
            first = seq[0]
            last = seq[-1]
            if not _corners_fit(rules, last, first):
                return
            corners = [(e[0], CORNER_NAMES[e[0]][e[1]]) for e in seq]
            stars.add(VertexStar(corners))
            return
        for entry in table:
            if total + entry[2] > 360:
                continue
            if seq and not _corners_fit(rules, seq[-1], entry):
                continue
            poly = placed_polygon(place(entry, total), tileset)
            if any(overlap_area(poly, other) > EPS_AREA for other in polys):
                continue
            search(seq + [entry], polys + [poly], total + entry[2])

    # Fix first corner's outgoing side along +x
    search([], [], 0)
    return frozenset(stars)


def _corners_fit(rules, prev, entry) -> bool:
    # Incoming side of *prev* against outgoing side of *entry*
    if abs(prev[6] - entry[4]) > 1e-9:
        return False
    return rules.is_compatible(prev[5], entry[3])


# Composition signature of each legal star
_STAR_SIGNATURES = {
    "sun": {("kite", 72): 5},
    "star": {("dart", 72): 5},
    "ace": {("dart", 216): 1, ("kite", 72): 2},
    "deuce": {("kite", 144): 2, ("dart", 36): 2},
    "jack": {("kite", 144): 1, ("kite", 72): 2, ("dart", 36): 2},
    "queen": {("dart", 72): 1, ("kite", 72): 4},
    "king": {("dart", 72): 3, ("kite", 72): 2},
}


def star_name(star: VertexStar):
    r"""Conventional name of a legal P2 vertex star

    :Call:
        >>> name = star_name(star)
    :Outputs:
        *name*: ``None`` | :class:`str`
            One of ``sun``, ``star``, ``ace``, ``deuce``, ``jack``,
            ``queen``, ``king``; ``None`` if *star* is not legal
    """
    if star not in legal_vertex_stars():
        return None
    sig = Counter(
        (kind, angle) for (kind, _), angle in zip(star.corners, star.angles))
    for name, ref in _STAR_SIGNATURES.items():
        if sig == Counter(ref):
            return name
    return None


def forged_patch() -> Patch:
    r"""Kites glued along a long side with equal labels, closed by a dart

    The second kite is the first turned 180 degrees about the midpoint
    of its head-to-side edge, so both present ``L:minus`` on the shared
    side. The remaining 216 degrees at the first kite's head are filled
    by a dart's tail, whose short side lies on the second kite's short
    side. The result has exactly one label mismatch, no overlap, and one
    complete vertex (kite head, kite side, dart tail) that is not a legal
    vertex star.

    :Call:
        >>> patch = forged_patch()
    :Outputs:
        *patch*: :class:`Patch`
            Three-tile P2 patch
    """
    tileset = p2_geometry()
    kite2 = Transform(rotation=180.0, translation=(_SX, _SY))
    # Dart tail (0, 1) turned -36 degrees onto the origin
    s36 = math.sin(math.radians(36.0))
    c36 = math.cos(math.radians(36.0))
    dart = Transform(rotation=-36.0, translation=(-s36, -c36))
    return Patch(
        [
            Placement("kite"),
            Placement("kite", kite2),
            Placement("dart", dart),
        ],
        tileset)
