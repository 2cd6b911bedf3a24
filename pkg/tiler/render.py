r"""
``render``: SVG output and patch statistics
=============================================

This module turns a :class:`Patch` into an SVG 1.1 document. Each tile
kind becomes one ``<symbol>`` holding its outline, a motif, and
optionally its edge labels. Each placement becomes one ``<use>`` whose
``transform`` is the placement pose written as ``matrix(a b c d e f)``.
The scene is wrapped in a group that flips the *y* axis, so the pose
matrices are written exactly as the geometry module defines them.

Output is a pure function of its inputs. Numbers are written with six
decimals and symbols are sorted by tile id, so repeated runs give
byte-identical documents.

Motifs are looked up in a motif directory as ``<motif-id>.svg`` files.
If no file exists, a placeholder is drawn: an arrow from the centroid
along the tile's local +*y* axis and a dot at vertex 0, which makes
rotations and reflections visible.

The :func:`stats` function summarizes a patch as a flat record, which
:func:`stats_text` and :func:`stats_json` write out.
"""

# Standard library
import json
import os
import re

# Third-party
import numpy as np
import yaml

# Local imports
from .geometry import Transform, hull_area
from .matcher import Patch, _get_tileset, find_overlaps, placed_polygon
from .penrose import system_of, tile_ratio, whole_counts
from .tilererror import (
    TilerKeyError,
    TilerRuleError,
    TilerTypeError,
    TilerValueError,
    assert_isfile)
from .tilespec import TileProto, TileSet


# Regular expression for colors
REGEX_COLOR = re.compile(r"#[0-9a-fA-F]{6}\Z")
# Regular expression for emitted <use> elements
REGEX_USE = re.compile(
    r'<use xlink:href="#tile-([^"]+)" transform="matrix\(([^)]*)\)"')
# XML declaration at top of motif files
REGEX_XMLDECL = re.compile(r"<\?xml[^>]*\?>\s*")
# Default fill colors
DEFAULT_FILLS = {
    "kite": "#f4d35e",
    "dart": "#3d5a80",
    "thick": "#ee964b",
    "thin": "#98c1d9",
}
# Cycle for tiles without a default
PALETTE = (
    "#8ecae6",
    "#ffb703",
    "#90be6d",
    "#f28482",
    "#cdb4db",
    "#adb5bd",
)
# Relative viewBox padding
PAD = 0.02
# Style file keys
STYLE_KEYS = (
    "stroke_width",
    "fills",
    "show_labels",
    "show_collisions",
    "motifs",
)


# Render options
class Style(object):
    r"""Rendering options

    :Call:
        >>> style = Style(**kw)
    :Inputs:
        *stroke_width*: {``0.02``} | :class:`float`
            Outline width in tile units
        *fills*: {``{}``} | :class:`dict`\ [:class:`str`]
            Fill color ``#rrggbb`` for each tile id
        *show_labels*: ``True`` | {``False``}
            Whether to write edge labels inside each symbol
        *show_collisions*: ``True`` | {``False``}
            Whether to outline overlapping placements in red
        *motif_map*: {``{}``} | :class:`dict`\ [:class:`str`]
            Motif id for each tile id, overriding the tile's own
    :Raises:
        :class:`TilerValueError` for an invalid color or stroke width
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "stroke_width",
        "fills",
        "show_labels",
        "show_collisions",
        "motif_map",
    )

   # --- __dunder__ ---
    def __init__(
            self, stroke_width=0.02, fills=None, show_labels=False,
            show_collisions=False, motif_map=None):
        # Check stroke
        try:
            stroke_width = float(stroke_width)
        except (TypeError, ValueError):
            raise TilerValueError(
                f"Stroke width must be a number; got {stroke_width!r}")
        if stroke_width < 0:
            raise TilerValueError(
                f"Stroke width must be >= 0; got {stroke_width}")
        # Check colors
        fills = dict(fills or {})
        for tile_id, color in fills.items():
            if not isinstance(color, str) or not REGEX_COLOR.match(color):
                raise TilerValueError(
                    f"Fill for '{tile_id}' must look like #rrggbb; "
                    f"got {color!r}")
        self.stroke_width = stroke_width
        self.fills = fills
        self.show_labels = bool(show_labels)
        self.show_collisions = bool(show_collisions)
        self.motif_map = dict(motif_map or {})

    def __repr__(self) -> str:
        return f"<Style stroke_width={self.stroke_width:g}>"

    def fill(self, tile: TileProto, tileset: TileSet) -> str:
        r"""Get fill color of a tile kind"""
        # Explicit color
        if tile.id in self.fills:
            return self.fills[tile.id]
        # Halves share the whole tile's color
        key = tile.half_of or tile.id
        if key in self.fills:
            return self.fills[key]
        if key in DEFAULT_FILLS:
            return DEFAULT_FILLS[key]
        # Cycle through palette by position in tile set
        ids = tileset.ids()
        return PALETTE[ids.index(tile.id) % len(PALETTE)]


def read_style(fname: str) -> Style:
    r"""Read a YAML style file

    :Call:
        >>> style = read_style(fname)
    :Inputs:
        *fname*: :class:`str`
            Name of YAML file with keys from *STYLE_KEYS*
    :Outputs:
        *style*: :class:`Style`
            Parsed style
    :Raises:
        * :class:`TilerFileNotFoundError` if *fname* does not exist
        * :class:`TilerKeyError` for an unknown key
        * :class:`TilerValueError` for an invalid color
    """
    assert_isfile(fname)
    with open(fname, "r") as fp:
        opts = yaml.safe_load(fp)
    # Empty file
    if opts is None:
        opts = {}
    if not isinstance(opts, dict):
        raise TilerTypeError(
            f"Style file '{os.path.basename(fname)}' must hold a mapping")
    # Check keys
    for key in opts:
        if key not in STYLE_KEYS:
            raise TilerKeyError(
                f"Unknown style key '{key}'; "
                f"expected one of: {' '.join(STYLE_KEYS)}")
    # Rename to attribute name
    if "motifs" in opts:
        opts["motif_map"] = opts.pop("motifs")
    return Style(**opts)


def _num(x: float) -> str:
    # Fixed six-decimal format without negative zero
    txt = f"{x:.6f}"
    return "0.000000" if txt == "-0.000000" else txt


def _points(pts) -> str:
    return " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)


def _matrix(pose: Transform) -> str:
    m = pose.matrix()
    coeffs = (m[0, 0], m[1, 0], m[0, 1], m[1, 1], m[0, 2], m[1, 2])
    return "matrix(" + " ".join(_num(c) for c in coeffs) + ")"


def _motif_id(tile: TileProto, style: Style) -> str:
    return style.motif_map.get(tile.id) or tile.motif or tile.id


def _check_motifs(tileset: TileSet, style: Style, motif_dir=None):
    # Motif ids that exist without user files
    known = set(tileset.ids())
    known.update(tile.motif for tile in tileset.tiles if tile.motif)
    # User files
    if motif_dir is not None and os.path.isdir(motif_dir):
        for fname in os.listdir(motif_dir):
            if fname.endswith(".svg"):
                known.add(fname[:-4])
    for tile_id, motif in style.motif_map.items():
        if tile_id not in tileset:
            raise TilerKeyError(f"Style references unknown tile '{tile_id}'")
        if motif not in known:
            raise TilerKeyError(
                f"Style references unknown motif '{motif}' "
                f"for tile '{tile_id}'")


def _motif_svg(tile: TileProto, motif: str, style: Style, motif_dir) -> list:
    # Use motif file if available
    if motif_dir is not None:
        fname = os.path.join(motif_dir, f"{motif}.svg")
        if os.path.isfile(fname):
            with open(fname, "r") as fp:
                txt = REGEX_XMLDECL.sub("", fp.read()).strip()
            return [f'      <g class="motif" data-motif="{motif}">', txt,
                    "      </g>"]
    # Placeholder arrow
    xmin, ymin, xmax, ymax = tile.shape.bbox()
    d = min(xmax - xmin, ymax - ymin)
    cx, cy = tile.shape.centroid()
    x0, y0 = tile.shape.vertices[0]
    tip = (cx, cy + 0.3*d)
    head = [tip, (cx - 0.06*d, cy + 0.2*d), (cx + 0.06*d, cy + 0.2*d)]
    w = _num(0.5*style.stroke_width)
    return [
        f'      <g class="motif" data-motif="{motif}">',
        f'        <line x1="{_num(cx)}" y1="{_num(cy)}" '
        f'x2="{_num(tip[0])}" y2="{_num(cy + 0.2*d)}" '
        f'stroke="#000000" stroke-width="{w}"/>',
        f'        <polygon points="{_points(head)}" fill="#000000"/>',
        f'        <circle cx="{_num(x0)}" cy="{_num(y0)}" '
        f'r="{_num(0.04*d)}" fill="#000000"/>',
        "      </g>",
    ]


def _label_svg(tile: TileProto) -> list:
    # Edge labels near each side's midpoint, nudged inward
    cx, cy = tile.shape.centroid()
    xmin, ymin, xmax, ymax = tile.shape.bbox()
    size = 0.12*min(xmax - xmin, ymax - ymin)
    lines = ['      <g class="labels" font-family="sans-serif" '
             f'font-size="{_num(size)}" text-anchor="middle">']
    for i, label in enumerate(tile.edges):
        (ax, ay), (bx, by) = tile.shape.edge(i)
        mx = 0.5*(ax + bx)
        my = 0.5*(ay + by)
        x = mx + 0.2*(cx - mx)
        y = my + 0.2*(cy - my)
        suffix = {"plus": "+", "minus": "-"}.get(label.polarity, "")
        # Undo the scene flip so text reads upright
        lines.append(
            f'        <text transform="translate({_num(x)} {_num(y)}) '
            f'scale(1 -1)">{label.name}{suffix}</text>')
    lines.append("      </g>")
    return lines


def _viewbox(polys) -> str:
    if not polys:
        return "0 0 1 1"
    pts = np.vstack([poly.vertices for poly in polys])
    xmin, ymin = np.min(pts, axis=0)
    xmax, ymax = np.max(pts, axis=0)
    pad = PAD*max(xmax - xmin, ymax - ymin)
    # y is flipped in the scene
    return " ".join(_num(v) for v in (
        xmin - pad, -(ymax + pad),
        xmax - xmin + 2*pad, ymax - ymin + 2*pad))


def to_svg(
        patch: Patch, tileset=None, style=None, motif_dir=None) -> str:
    r"""Write a patch as an SVG 1.1 document

    :Call:
        >>> txt = to_svg(patch, tileset=None, style=None, motif_dir=None)
    :Inputs:
        *patch*: :class:`Patch`
            Patch to draw
        *tileset*: {``None``} | :class:`TileSet`
            Tile set; defaults to *patch.tileset*
        *style*: {``None``} | :class:`Style`
            Rendering options
        *motif_dir*: {``None``} | :class:`str`
            Folder of ``<motif-id>.svg`` fragments
    :Outputs:
        *txt*: :class:`str`
            SVG document text
    :Raises:
        :class:`TilerKeyError` if *style* references an unknown motif
    """
    style = Style() if style is None else style
    # Empty patch may come without a tile set
    if len(patch) == 0 and tileset is None and patch.tileset is None:
        tileset = TileSet([])
    tileset = _get_tileset(patch, tileset)
    _check_motifs(tileset, style, motif_dir)
    # World polygons
    polys = [placed_polygon(p, tileset) for p in patch.placements]
    kinds = sorted(set(p.tile for p in patch.placements))
    sw = _num(style.stroke_width)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" '
        'xmlns:xlink="http://www.w3.org/1999/xlink" version="1.1" '
        f'viewBox="{_viewbox(polys)}">',
        "  <defs>",
    ]
    # One symbol per tile kind
    for tile_id in kinds:
        tile = tileset.tile(tile_id)
        lines.append(f'    <symbol id="tile-{tile_id}" overflow="visible">')
        lines.append(
            f'      <polygon points="{_points(tile.shape.vertices)}" '
            f'fill="{style.fill(tile, tileset)}" stroke="#000000" '
            f'stroke-width="{sw}" stroke-linejoin="round"/>')
        lines.extend(
            _motif_svg(tile, _motif_id(tile, style), style, motif_dir))
        if style.show_labels:
            lines.extend(_label_svg(tile))
        lines.append("    </symbol>")
    lines.append("  </defs>")
    # Scene in placement order
    lines.append('  <g id="scene" transform="matrix(1 0 0 -1 0 0)">')
    for p in patch.placements:
        lines.append(
            f'    <use xlink:href="#tile-{p.tile}" '
            f'transform="{_matrix(p.pose)}"/>')
    # Collision highlights
    if style.show_collisions:
        hits = set()
        for (i, j), _ in find_overlaps(patch, tileset):
            hits.update((i, j))
        lines.append(
            f'    <g id="collisions" fill="none" stroke="#ff0000" '
            f'stroke-width="{sw}">')
        for i in sorted(hits):
            lines.append(
                f'      <polygon points="{_points(polys[i].vertices)}"/>')
        lines.append("    </g>")
    lines.append("  </g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def parse_use_transforms(txt: str) -> list:
    r"""Recover placements from the ``<use>`` elements of a document

    :Call:
        >>> uses = parse_use_transforms(txt)
    :Inputs:
        *txt*: :class:`str`
            Document written by :func:`to_svg`
    :Outputs:
        *uses*: :class:`list`\ [(:class:`str`, :class:`Transform`)]
            Tile id and pose of each ``<use>`` in document order
    """
    uses = []
    for match in REGEX_USE.finditer(txt):
        coeffs = [float(c) for c in match.group(2).split()]
        uses.append((match.group(1), Transform.from_matrix(*coeffs)))
    return uses


def stats(patch: Patch, tileset=None) -> dict:
    r"""Summarize a patch

    :Call:
        >>> rec = stats(patch, tileset=None)
    :Outputs:
        *rec*: :class:`dict`
            Keys ``placements``, ``counts``, ``bbox``, ``covered_area``,
            ``hull_area``, ``coverage``, ``ratio``, and ``max_depth``;
            Penrose patches count halves as 0.5 of the whole tile, and
            ``ratio`` is ``None`` unless the patch is a Penrose patch
    """
    if len(patch) == 0 and tileset is None and patch.tileset is None:
        tileset = TileSet([])
    tileset = _get_tileset(patch, tileset)
    polys = [placed_polygon(p, tileset) for p in patch.placements]
    rec = {
        "placements": len(patch),
        "counts": patch.tile_counts(),
        "bbox": None,
        "covered_area": float(sum(poly.area() for poly in polys)),
        "hull_area": 0.0,
        "coverage": None,
        "ratio": None,
        "max_depth": None,
    }
    if polys:
        pts = np.vstack([poly.vertices for poly in polys])
        xmin, ymin = np.min(pts, axis=0)
        xmax, ymax = np.max(pts, axis=0)
        rec["bbox"] = [float(xmin), float(ymin), float(xmax), float(ymax)]
        rec["hull_area"] = float(hull_area(pts))
        if rec["hull_area"] > 0:
            rec["coverage"] = rec["covered_area"] / rec["hull_area"]
    # Penrose counts and ratio
    try:
        system_of(patch)
    except TilerRuleError:
        pass
    else:
        counts = whole_counts(patch)
        rec["counts"] = {
            k: int(v) if float(v).is_integer() else v
            for k, v in sorted(counts.items())
        }
        try:
            rec["ratio"] = tile_ratio(patch)
        except TilerRuleError:
            pass
    # Tree depth
    if patch.nodes:
        rec["max_depth"] = max(node.depth for node in patch.nodes)
    return rec


def _fmt(v) -> str:
    if v is None:
        return "none"
    if isinstance(v, float):
        return _num(v)
    return str(v)


def stats_text(rec: dict) -> str:
    r"""Write a stats record as ``key: value`` lines

    Counts are written one per line as ``count.<tile>``.
    """
    lines = [f"placements: {rec['placements']}"]
    for tile_id, n in sorted(rec["counts"].items()):
        lines.append(f"count.{tile_id}: {_fmt(n)}")
    bbox = rec["bbox"]
    lines.append(
        "bbox: " + ("none" if bbox is None else " ".join(map(_fmt, bbox))))
    for key in ("covered_area", "hull_area", "coverage", "ratio",
                "max_depth"):
        lines.append(f"{key}: {_fmt(rec[key])}")
    return "\n".join(lines) + "\n"


def stats_json(rec: dict) -> str:
    r"""Write a stats record as JSON with sorted keys"""
    return json.dumps(rec, sort_keys=True, indent=2) + "\n"
