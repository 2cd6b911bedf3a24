r"""
``tilespec``: Tile-set definitions and the ``tileset v1`` file format
=======================================================================

This module defines the data types that describe a set of tiles and
the rules for fitting them together:

    * :class:`EdgeLabel`: name plus polarity (``sym``, ``plus``,
      ``minus``) attached to each side of a tile
    * :class:`TileProto`: polygon, edge labels, symmetry, and motif id
    * :class:`FractalAttachment`: where a scaled child hangs off a parent
    * :class:`RuleSet`: compatibility table, substitutions, attachments,
      and periodic mode tags
    * :class:`TileSet`: tiles plus rules

It also provides a hand-written recursive-descent parser for the text
format, :func:`parse_tileset`, its inverse :func:`serialize_tileset`,
and :func:`builtin_tileset` for the named tile sets shipped with the
package.

The file format is line oriented. A ``#`` starts a comment and blank
lines are ignored. For example

.. code-block:: none

    tileset v1
    TILE square
      vertices 0 0  1 0  1 1  0 1
      symmetry 1
      motif figure
    END
    EDGES square
      A:plus B:plus A:minus B:minus
    END
    RULES
      mode translation
    END

Side *i* of a tile runs from vertex *i* to vertex *i+1* and vertices are
listed counter-clockwise. The full grammar is

.. code-block:: none

    file      := "tileset" "v1" NL { section }
    section   := tile | edges | rules | subst | attach
    tile      := "TILE" ID NL { "vertices" NUM NUM {NUM NUM} NL
                              | "symmetry" INT NL
                              | "motif" ID NL
                              | "half" ID NL } "END" NL
    edges     := "EDGES" ID NL { LABEL {LABEL} NL } "END" NL
    rules     := "RULES" NL { "compat" LABEL LABEL NL
                            | "nodefault" NL
                            | "mode" MODE NL } "END" NL
    subst     := "SUBST" ID NL { "child" ID TRANSFORM NL } "END" NL
    attach    := "ATTACH" ID NL { "site" INT NUM NUM "child" ID
                                  "edge" INT TRANSFORM NL } "END" NL
    TRANSFORM := NUM NUM INT NUM NUM    # scale rotation reflect tx ty
    LABEL     := NAME ":" ("sym" | "plus" | "minus")
    MODE      := "translation" | "swirl" | "two_adjacent"

Syntax errors raise :class:`TilerSyntaxError` with line and column;
semantic errors raise :class:`TilerSemanticError` with one of the codes
``duplicate-id``, ``unknown-id``, ``edge-count``, ``symmetry``,
``unknown-label``, ``scale``, ``fraction``, or ``polygon``.
"""

# Standard library
import math
import re

# Third-party
import numpy as np

# Local imports
from .geometry import EPS, Polygon, Transform
from .tilererror import (
    TilerGeometryError,
    TilerKeyError,
    TilerSemanticError,
    TilerSyntaxError,
    assert_isfile,
    assert_isinstance)


# File format version header
HEADER = ("tileset", "v1")
# Allowed polarities
POLARITIES = ("sym", "plus", "minus")
# Allowed periodic mode tags
MODES = ("translation", "swirl", "two_adjacent")
# Allowed symmetry orders
SYMMETRY_ORDERS = (1, 2, 3, 4)

# Regular expressions for tokens
REGEX_ID = re.compile(r"[A-Za-z_][A-Za-z0-9_.-]*$")
REGEX_LABEL = re.compile(r"([A-Za-z_][A-Za-z0-9_]*):([a-z]+)$")
REGEX_INT = re.compile(r"[+-]?[0-9]+$")

# Names of built-in tile sets
BUILTIN_NAMES = (
    "p2",
    "p3",
    "fractal-rect",
    "fractal-tri",
    "square-sym",
    "square-vitruvian",
    "square-swirl",
    "square-two-adjacent",
    "rect-multi",
)


# Edge label
class EdgeLabel(object):
    r"""Label on one side of a tile

    :Call:
        >>> lbl = EdgeLabel(name, polarity="sym")
    :Inputs:
        *name*: :class:`str`
            Label name, e.g. ``"A"``
        *polarity*: {``"sym"``} | ``"plus"`` | ``"minus"``
            Orientation of the label; ``plus`` fits ``minus``
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "name",
        "polarity",
    )

   # --- __dunder__ ---
    def __init__(self, name: str, polarity: str = "sym"):
        # Check polarity
        if polarity not in POLARITIES:
            raise TilerSemanticError(
                f"Invalid polarity '{polarity}'; expected one of " +
                " | ".join(POLARITIES), "unknown-label")
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "polarity", polarity)

    def __setattr__(self, name, value):
        raise AttributeError(f"EdgeLabel is immutable; cannot set '{name}'")

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeLabel):
            return NotImplemented
        return self.name == other.name and self.polarity == other.polarity

    def __lt__(self, other) -> bool:
        return (self.name, self.polarity) < (other.name, other.polarity)

    def __hash__(self):
        return hash((self.name, self.polarity))

    def __str__(self) -> str:
        return f"{self.name}:{self.polarity}"

    def __repr__(self) -> str:
        return f"EdgeLabel({self.name!r}, {self.polarity!r})"

   # --- Operations ---
    @classmethod
    def parse(cls, txt: str) -> "EdgeLabel":
        r"""Read a label written as ``NAME:POLARITY``"""
        match = REGEX_LABEL.match(txt)
        if match is None:
            raise TilerSemanticError(
                f"Invalid edge label '{txt}'", "unknown-label")
        return cls(*match.groups())

    def mirrored(self) -> "EdgeLabel":
        r"""Label as seen on a reflected tile (``plus`` <-> ``minus``)"""
        if self.polarity == "plus":
            return EdgeLabel(self.name, "minus")
        elif self.polarity == "minus":
            return EdgeLabel(self.name, "plus")
        return self


# Individual tile
class TileProto(object):
    r"""Prototype tile: polygon with labeled sides

    :Call:
        >>> tile = TileProto(id, shape, edges, **kw)
    :Inputs:
        *id*: :class:`str`
            Unique tile name within a tile set
        *shape*: :class:`Polygon`
            Counter-clockwise outline
        *edges*: :class:`list`\ [:class:`EdgeLabel`]
            One label per side; side *i* runs from vertex *i* to *i+1*
        *motif*: {``None``} | :class:`str`
            Motif id used by the renderer
        *symmetry*: {``1``} | ``2`` | ``3`` | ``4``
            Declared rotational symmetry order
        *half_of*: {``None``} | :class:`str`
            Name of the whole tile this tile is one half of
    :Raises:
        :class:`TilerSemanticError` for wrong edge count or a symmetry
        claim that the polygon or labels do not satisfy
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "id",
        "shape",
        "edges",
        "motif",
        "symmetry",
        "half_of",
    )

   # --- __dunder__ ---
    def __init__(
            self, id: str, shape: Polygon, edges, motif=None,
            symmetry: int = 1, half_of=None):
        assert_isinstance(shape, Polygon, "tile shape")
        self.id = id
        self.shape = shape
        self.edges = tuple(edges)
        self.motif = motif
        self.symmetry = int(symmetry)
        self.half_of = half_of
        # Check invariants
        self._check_edges()
        self._check_symmetry()

    def __repr__(self) -> str:
        return f"<TileProto '{self.id}' n={self.nside}>"

   # --- Properties ---
    @property
    def nside(self) -> int:
        r"""Number of sides"""
        return len(self.shape)

   # --- Checks ---
    def _check_edges(self):
        # Edge count must match vertex count
        if len(self.edges) != self.nside:
            raise TilerSemanticError(
                f"Tile '{self.id}' has {self.nside} sides but "
                f"{len(self.edges)} edge labels", "edge-count")

    def _check_symmetry(self):
        k = self.symmetry
        n = self.nside
        # Check order
        if k not in SYMMETRY_ORDERS:
            raise TilerSemanticError(
                f"Tile '{self.id}' symmetry must be one of " +
                f"{SYMMETRY_ORDERS}; got {k}", "symmetry")
        if k == 1:
            return
        if n % k:
            raise TilerSemanticError(
                f"Tile '{self.id}' with {n} sides cannot have {k}-fold "
                "symmetry", "symmetry")
        # Cyclic shift corresponding to 360/k rotation
        shift = n // k
        # Labels must repeat under the shift
        for i in range(n):
            if self.edges[i] != self.edges[(i + shift) % n]:
                raise TilerSemanticError(
                    f"Tile '{self.id}' label sequence is not invariant "
                    f"under cyclic shift by {shift}", "symmetry")
        # Polygon must map to itself under rotation about centroid
        rot = Transform.rotation_about(360.0 / k, self.shape.centroid())
        pts = rot.apply_many(self.shape.vertices)
        tol = 1e3 * EPS * max(1.0, self.shape.diameter())
        ref = np.roll(self.shape.vertices, -shift, axis=0)
        if np.max(np.abs(pts - ref)) > tol:
            raise TilerSemanticError(
                f"Tile '{self.id}' polygon is not invariant under "
                f"{360.0/k:g} degree rotation", "symmetry")

   # --- Operations ---
    def isclose(self, other: "TileProto", tol: float = EPS) -> bool:
        r"""Structural equality with tolerance on coordinates"""
        # Basic attributes
        if (self.id, self.edges, self.motif, self.symmetry, self.half_of) \
                != (other.id, other.edges, other.motif, other.symmetry,
                    other.half_of):
            return False
        # Vertices
        if self.nside != other.nside:
            return False
        return bool(np.allclose(
            self.shape.vertices, other.shape.vertices, rtol=0, atol=tol))


# Description of a fractal child
class FractalAttachment(object):
    r"""Site on a parent edge where a scaled child tile attaches

    :Call:
        >>> att = FractalAttachment(edge, frac, child_tile, relative, **kw)
    :Inputs:
        *edge*: :class:`int`
            Parent side index hosting the site
        *frac*: :class:`tuple`\ [:class:`float`]
            Fraction range *(f0, f1)* along the side, ``0 <= f0 < f1 <= 1``
        *child_tile*: :class:`str`
            Tile id of child
        *relative*: :class:`Transform`
            Child pose in the parent's frame; scale must be < 1
        *child_edge*: {``0``} | :class:`int`
            Child side that lies on the site
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "edge",
        "frac",
        "child_tile",
        "child_edge",
        "relative",
    )

   # --- __dunder__ ---
    def __init__(
            self, edge: int, frac, child_tile: str, relative: Transform,
            child_edge: int = 0):
        f0, f1 = (float(f) for f in frac)
        # Check fractions
        if not (0.0 <= f0 < f1 <= 1.0):
            raise TilerSemanticError(
                f"Attachment fraction range ({f0:g}, {f1:g}) must satisfy "
                "0 <= f0 < f1 <= 1", "fraction")
        if relative.scale >= 1.0:
            raise TilerSemanticError(
                f"Attachment scale must be < 1; got {relative.scale:g}",
                "scale")
        self.edge = int(edge)
        self.frac = (f0, f1)
        self.child_tile = child_tile
        self.child_edge = int(child_edge)
        self.relative = relative

    def __repr__(self) -> str:
        return (
            f"<FractalAttachment edge={self.edge} frac={self.frac} "
            f"child='{self.child_tile}'>")

    def isclose(self, other: "FractalAttachment", tol=EPS) -> bool:
        return (
            self.edge == other.edge and
            self.child_tile == other.child_tile and
            self.child_edge == other.child_edge and
            abs(self.frac[0] - other.frac[0]) <= tol and
            abs(self.frac[1] - other.frac[1]) <= tol and
            self.relative.isclose(other.relative, tol))


# Rules
class RuleSet(object):
    r"""Label compatibility, substitution, and attachment rules

    :Call:
        >>> rules = RuleSet(compat=(), default=True, **kw)
    :Inputs:
        *compat*: :class:`list`\ [(:class:`EdgeLabel`, :class:`EdgeLabel`)]
            Extra unordered label pairs allowed to abut
        *default*: {``True``} | ``False``
            Whether to also allow ``sym``/``sym`` and ``plus``/``minus``
            pairs with the same name
        *substitutions*: {``{}``} | :class:`dict`
            Map of tile id to list of *(child_id, Transform)*
        *attachments*: {``{}``} | :class:`dict`
            Map of tile id to list of :class:`FractalAttachment`
        *modes*: {``()``} | :class:`tuple`\ [:class:`str`]
            Periodic mode tags
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "compat",
        "default",
        "substitutions",
        "attachments",
        "modes",
    )

   # --- __dunder__ ---
    def __init__(
            self, compat=(), default=True, substitutions=None,
            attachments=None, modes=()):
        #: :class:`set` -- Unordered extra pairs as frozensets
        self.compat = set(frozenset(pair) for pair in compat)
        self.default = bool(default)
        self.substitutions = dict(substitutions or {})
        self.attachments = dict(attachments or {})
        self.modes = tuple(modes)

   # --- Compatibility ---
    def is_compatible(self, a: EdgeLabel, b: EdgeLabel) -> bool:
        r"""Check whether labels *a* and *b* may abut

        :Call:
            >>> q = rules.is_compatible(a, b)
        :Inputs:
            *rules*: :class:`RuleSet`
                Rule set
            *a*: :class:`EdgeLabel`
                Label of first edge
            *b*: :class:`EdgeLabel`
                Label of second edge
        :Outputs:
            *q*: :class:`bool`
                Whether the pair is in the compatibility table
        """
        # Explicit pairs
        if frozenset((a, b)) in self.compat:
            return True
        # Polarity-derived defaults
        if self.default and a.name == b.name:
            if a.polarity == "sym":
                return b.polarity == "sym"
            return {a.polarity, b.polarity} == {"plus", "minus"}
        return False

    def labels(self) -> set:
        r"""All labels mentioned by explicit compat pairs"""
        out = set()
        for pair in self.compat:
            out.update(pair)
        return out

    def substitution_scale(self):
        r"""Common scale of substitution children, or ``None``"""
        scales = [
            t.scale for children in self.substitutions.values()
            for _, t in children]
        return scales[0] if scales else None

    def isclose(self, other: "RuleSet", tol=EPS) -> bool:
        # Simple attributes
        if (self.compat, self.default, self.modes) != (
                other.compat, other.default, other.modes):
            return False
        # Substitutions
        if sorted(self.substitutions) != sorted(other.substitutions):
            return False
        for k, children in self.substitutions.items():
            children2 = other.substitutions[k]
            if len(children) != len(children2):
                return False
            for (c1, t1), (c2, t2) in zip(children, children2):
                if c1 != c2 or not t1.isclose(t2, tol):
                    return False
        # Attachments
        if sorted(self.attachments) != sorted(other.attachments):
            return False
        for k, atts in self.attachments.items():
            atts2 = other.attachments[k]
            if len(atts) != len(atts2):
                return False
            if not all(a.isclose(b, tol) for a, b in zip(atts, atts2)):
                return False
        return True


# Collection of tiles and rules
class TileSet(object):
    r"""Tiles plus the rules for assembling them

    :Call:
        >>> tileset = TileSet(tiles, rules=None, name=None)
    :Inputs:
        *tiles*: :class:`list`\ [:class:`TileProto`]
            Tiles with unique ids
        *rules*: {``None``} | :class:`RuleSet`
            Rules; default polarity rules if ``None``
        *name*: {``None``} | :class:`str`
            Optional name, e.g. of a built-in
    :Raises:
        :class:`TilerSemanticError` if any invariant fails
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "tiles",
        "rules",
        "name",
        "_tiledict",
    )

   # --- __dunder__ ---
    def __init__(self, tiles, rules=None, name=None):
        self.tiles = list(tiles)
        self.rules = RuleSet() if rules is None else rules
        self.name = name
        self._tiledict = {}
        # Check ids
        for tile in self.tiles:
            if tile.id in self._tiledict:
                raise TilerSemanticError(
                    f"Duplicate tile id '{tile.id}'", "duplicate-id")
            self._tiledict[tile.id] = tile
        # Check rules
        self.validate()

    def __contains__(self, tile_id: str) -> bool:
        return tile_id in self._tiledict

    def __repr__(self) -> str:
        return f"<TileSet {self.name or ''} ids={self.ids()}>"

   # --- Access ---
    def tile(self, tile_id: str) -> TileProto:
        r"""Get tile by id

        :Raises:
            :class:`TilerKeyError` if no such tile
        """
        tile = self._tiledict.get(tile_id)
        if tile is None:
            raise TilerKeyError(
                f"Unknown tile id '{tile_id}'; options are: " +
                " | ".join(self.ids()))
        return tile

    def ids(self) -> list:
        r"""List of tile ids in definition order"""
        return [tile.id for tile in self.tiles]

    def labels(self) -> set:
        r"""Set of all labels on all tiles"""
        return set(lbl for tile in self.tiles for lbl in tile.edges)

   # --- Validation ---
    def validate(self):
        r"""Check cross-references between rules and tiles"""
        rules = self.rules
        # Half-tile references
        for tile in self.tiles:
            if tile.half_of is not None and tile.half_of not in self:
                raise TilerSemanticError(
                    f"Tile '{tile.id}' is half of unknown tile "
                    f"'{tile.half_of}'", "unknown-id")
        # Labels in compat must appear on tiles
        labels = self.labels()
        for lbl in sorted(rules.labels()):
            if lbl not in labels:
                raise TilerSemanticError(
                    f"Rule label '{lbl}' does not appear on any tile",
                    "unknown-label")
        # Substitutions
        scale = rules.substitution_scale()
        for parent, children in rules.substitutions.items():
            self._check_id(parent, "substitution parent")
            for child, t in children:
                self._check_id(child, "substitution child")
                if not (0.0 < t.scale < 1.0):
                    raise TilerSemanticError(
                        f"Substitution scale must be in (0, 1); got "
                        f"{t.scale:g}", "scale")
                if abs(t.scale - scale) > EPS * max(1.0, scale):
                    raise TilerSemanticError(
                        "Substitution children must share one scale; got "
                        f"{t.scale:g} and {scale:g}", "scale")
        # Attachments
        for parent, atts in rules.attachments.items():
            self._check_id(parent, "attachment parent")
            ptile = self._tiledict[parent]
            for att in atts:
                self._check_id(att.child_tile, "attachment child")
                if not (0 <= att.edge < ptile.nside):
                    raise TilerSemanticError(
                        f"Attachment site edge {att.edge} out of range for "
                        f"tile '{parent}'", "edge-count")
                ctile = self._tiledict[att.child_tile]
                if not (0 <= att.child_edge < ctile.nside):
                    raise TilerSemanticError(
                        f"Attachment child edge {att.child_edge} out of "
                        f"range for tile '{ctile.id}'", "edge-count")

    def _check_id(self, tile_id: str, desc: str):
        if tile_id not in self._tiledict:
            raise TilerSemanticError(
                f"Unknown {desc} id '{tile_id}'", "unknown-id")

    def isclose(self, other: "TileSet", tol: float = EPS) -> bool:
        r"""Structural equality within *tol* on coordinates"""
        if self.ids() != other.ids():
            return False
        for t1, t2 in zip(self.tiles, other.tiles):
            if not t1.isclose(t2, tol):
                return False
        return self.rules.isclose(other.rules, tol)


# Token
class _Token(object):
    __slots__ = ("text", "lineno", "colno")

    def __init__(self, text: str, lineno: int, colno: int):
        self.text = text
        self.lineno = lineno
        self.colno = colno


# Recursive-descent parser
class TileSetParser(object):
    r"""Parser for ``tileset v1`` text

    Each nonblank line is split into whitespace-separated tokens that
    remember their line and column. The grammar is then consumed line by
    line by one method per production.

    :Call:
        >>> parser = TileSetParser(text)
        >>> tileset = parser.parse()
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "lines",
        "pos",
        "_tiles",
        "_edges",
        "_tileline",
        "_rules",
        "_subst",
        "_attach",
        "_ruleline",
    )

   # --- __dunder__ ---
    def __init__(self, text: str):
        assert_isinstance(text, str, "tile-spec text")
        #: :class:`list` -- Token lists for nonblank lines
        self.lines = list(_tokenize(text))
        self.pos = 0

   # --- Main ---
    def parse(self) -> TileSet:
        r"""Parse whole file and build validated :class:`TileSet`"""
        # Reset
        self.pos = 0
        self._tiles = {}
        self._edges = {}
        self._tileline = {}
        self._rules = {"compat": [], "default": True, "modes": []}
        self._subst = {}
        self._attach = {}
        self._ruleline = {}
        # Header
        self._parse_header()
        # Sections
        while self.pos < len(self.lines):
            self._parse_section()
        # Assemble
        return self._build()

    def _parse_header(self):
        if not self.lines:
            raise TilerSyntaxError("Empty file; expected 'tileset v1'", 1, 1)
        line = self._next_line()
        if len(line) < 1 or line[0].text != HEADER[0]:
            self._fail(line[0], "Expected header 'tileset v1'")
        if len(line) < 2 or line[1].text != HEADER[1]:
            tok = line[1] if len(line) > 1 else line[0]
            self._fail(tok, "Unsupported or missing version; expected 'v1'")
        self._expect_end(line, 2)

    def _parse_section(self):
        line = self._next_line()
        keyword = line[0].text
        # Dispatch
        if keyword == "TILE":
            self._parse_tile(line)
        elif keyword == "EDGES":
            self._parse_edges(line)
        elif keyword == "RULES":
            self._parse_rules(line)
        elif keyword == "SUBST":
            self._parse_subst(line)
        elif keyword == "ATTACH":
            self._parse_attach(line)
        else:
            self._fail(
                line[0],
                f"Unexpected '{keyword}'; expected one of "
                "TILE | EDGES | RULES | SUBST | ATTACH")

    def _parse_tile(self, head):
        tile_id = self._ident(head, 1)
        self._expect_end(head, 2)
        if tile_id in self._tiles:
            raise TilerSemanticError(
                f"Duplicate tile id '{tile_id}'", "duplicate-id",
                head[1].lineno, head[1].colno)
        # Defaults
        info = {"vertices": None, "symmetry": 1, "motif": None, "half": None}
        # Statements
        for line in self._block():
            kw = line[0].text
            if kw == "vertices":
                nums = [self._number(line, j) for j in range(1, len(line))]
                if len(nums) < 6 or len(nums) % 2:
                    self._fail(
                        line[0],
                        "Expected an even count of at least 6 coordinates")
                info["vertices"] = np.array(nums).reshape(-1, 2)
            elif kw == "symmetry":
                info["symmetry"] = self._int(line, 1)
                self._expect_end(line, 2)
            elif kw == "motif":
                info["motif"] = self._ident(line, 1)
                self._expect_end(line, 2)
            elif kw == "half":
                info["half"] = self._ident(line, 1)
                self._expect_end(line, 2)
            else:
                self._fail(
                    line[0], f"Unexpected '{kw}' in TILE; expected "
                    "vertices | symmetry | motif | half | END")
        if info["vertices"] is None:
            self._fail(head[0], f"TILE '{tile_id}' has no vertices")
        self._tiles[tile_id] = info
        self._tileline[tile_id] = head[0].lineno

    def _parse_edges(self, head):
        tile_id = self._ident(head, 1)
        self._expect_end(head, 2)
        labels = []
        for line in self._block():
            for j in range(len(line)):
                labels.append(self._label(line, j))
        self._edges[tile_id] = (labels, head[1])

    def _parse_rules(self, head):
        self._expect_end(head, 1)
        for line in self._block():
            kw = line[0].text
            if kw == "compat":
                a = self._label(line, 1)
                b = self._label(line, 2)
                self._expect_end(line, 3)
                self._rules["compat"].append((a, b))
                self._ruleline[a] = line[1]
                self._ruleline[b] = line[2]
            elif kw == "nodefault":
                self._expect_end(line, 1)
                self._rules["default"] = False
            elif kw == "mode":
                mode = self._word(line, 1)
                if mode not in MODES:
                    self._fail(
                        line[1], f"Unknown mode '{mode}'; expected one of "
                        + " | ".join(MODES))
                self._expect_end(line, 2)
                self._rules["modes"].append(mode)
            else:
                self._fail(
                    line[0], f"Unexpected '{kw}' in RULES; expected "
                    "compat | nodefault | mode | END")

    def _parse_subst(self, head):
        parent = self._ident(head, 1)
        self._expect_end(head, 2)
        children = self._subst.setdefault(parent, [])
        for line in self._block():
            if line[0].text != "child":
                self._fail(line[0], "Expected 'child' or END in SUBST")
            child = self._ident(line, 1)
            t = self._transform(line, 2)
            self._expect_end(line, 7)
            children.append((child, t, line[1]))

    def _parse_attach(self, head):
        parent = self._ident(head, 1)
        self._expect_end(head, 2)
        atts = self._attach.setdefault(parent, [])
        for line in self._block():
            if line[0].text != "site":
                self._fail(line[0], "Expected 'site' or END in ATTACH")
            edge = self._int(line, 1)
            f0 = self._number(line, 2)
            f1 = self._number(line, 3)
            self._keyword(line, 4, "child")
            child = self._ident(line, 5)
            self._keyword(line, 6, "edge")
            child_edge = self._int(line, 7)
            t = self._transform(line, 8)
            self._expect_end(line, 13)
            atts.append((edge, (f0, f1), child, child_edge, t, line[0]))

   # --- Assembly ---
    def _build(self) -> TileSet:
        # Edge sections must refer to defined tiles
        for tile_id, (_, tok) in self._edges.items():
            if tile_id not in self._tiles:
                raise TilerSemanticError(
                    f"EDGES for unknown tile id '{tile_id}'", "unknown-id",
                    tok.lineno, tok.colno)
        # Create tiles
        tiles = []
        for tile_id, info in self._tiles.items():
            lineno = self._tileline[tile_id]
            labels = self._edges.get(tile_id, ([], None))[0]
            # Polygon
            try:
                shape = Polygon(info["vertices"])
            except TilerGeometryError as err:
                raise TilerSemanticError(
                    f"Tile '{tile_id}': {err}", "polygon", lineno)
            # Tile (checks edge count and symmetry)
            try:
                tile = TileProto(
                    tile_id, shape, labels, motif=info["motif"],
                    symmetry=info["symmetry"], half_of=info["half"])
            except TilerSemanticError as err:
                raise TilerSemanticError(err.msg, err.code, lineno)
            tiles.append(tile)
        # Substitutions
        subst = {}
        for parent, children in self._subst.items():
            subst[parent] = [(child, t) for child, t, _ in children]
        # Attachments
        attach = {}
        for parent, atts in self._attach.items():
            attach[parent] = []
            for edge, frac, child, child_edge, t, tok in atts:
                try:
                    att = FractalAttachment(edge, frac, child, t, child_edge)
                except TilerSemanticError as err:
                    raise TilerSemanticError(
                        err.msg, err.code, tok.lineno, tok.colno)
                attach[parent].append(att)
        # Rules
        rules = RuleSet(
            compat=self._rules["compat"],
            default=self._rules["default"],
            substitutions=subst,
            attachments=attach,
            modes=self._rules["modes"])
        return TileSet(tiles, rules)

   # --- Line access ---
    def _next_line(self) -> list:
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def _block(self):
        # Yield statement lines until END
        while True:
            if self.pos >= len(self.lines):
                last = self.lines[-1][-1]
                raise TilerSyntaxError(
                    "Unexpected end of file; expected END",
                    last.lineno, last.colno + len(last.text))
            line = self._next_line()
            if line[0].text == "END":
                self._expect_end(line, 1)
                return
            yield line

   # --- Token readers ---
    def _tok(self, line, j, what) -> _Token:
        if j >= len(line):
            last = line[-1]
            raise TilerSyntaxError(
                f"Expected {what} after '{last.text}'",
                last.lineno, last.colno + len(last.text))
        return line[j]

    def _word(self, line, j) -> str:
        return self._tok(line, j, "a word").text

    def _keyword(self, line, j, kw):
        tok = self._tok(line, j, f"'{kw}'")
        if tok.text != kw:
            self._fail(tok, f"Expected '{kw}'; got '{tok.text}'")

    def _ident(self, line, j) -> str:
        tok = self._tok(line, j, "an identifier")
        if REGEX_ID.match(tok.text) is None:
            self._fail(tok, f"Invalid identifier '{tok.text}'")
        return tok.text

    def _number(self, line, j) -> float:
        tok = self._tok(line, j, "a number")
        try:
            val = float(tok.text)
        except ValueError:
            self._fail(tok, f"Expected a number; got '{tok.text}'")
        if not math.isfinite(val):
            self._fail(tok, f"Number must be finite; got '{tok.text}'")
        return val

    def _int(self, line, j) -> int:
        tok = self._tok(line, j, "an integer")
        if REGEX_INT.match(tok.text) is None:
            self._fail(tok, f"Expected an integer; got '{tok.text}'")
        return int(tok.text)

    def _label(self, line, j) -> EdgeLabel:
        tok = self._tok(line, j, "an edge label")
        match = REGEX_LABEL.match(tok.text)
        if match is None:
            self._fail(tok, f"Expected NAME:POLARITY label; got '{tok.text}'")
        name, polarity = match.groups()
        if polarity not in POLARITIES:
            self._fail(
                tok, f"Unknown polarity '{polarity}'; expected one of " +
                " | ".join(POLARITIES))
        return EdgeLabel(name, polarity)

    def _transform(self, line, j) -> Transform:
        scale = self._number(line, j)
        rot = self._number(line, j + 1)
        reflect = self._int(line, j + 2)
        if reflect not in (0, 1):
            self._fail(line[j + 2], "Reflect flag must be 0 or 1")
        tx = self._number(line, j + 3)
        ty = self._number(line, j + 4)
        if scale <= 0.0:
            raise TilerSemanticError(
                f"Transform scale must be positive; got {scale:g}", "scale",
                line[j].lineno, line[j].colno)
        return Transform(scale, rot, bool(reflect), (tx, ty))

    def _expect_end(self, line, j):
        if len(line) > j:
            self._fail(line[j], f"Unexpected extra token '{line[j].text}'")

    def _fail(self, tok: _Token, msg: str):
        raise TilerSyntaxError(msg, tok.lineno, tok.colno)


def _tokenize(text: str):
    # Yield list of tokens per nonblank line
    for lineno, raw in enumerate(text.splitlines(), start=1):
        # Strip comments
        line = raw.split("#", 1)[0]
        tokens = [
            _Token(m.group(0), lineno, m.start() + 1)
            for m in re.finditer(r"\S+", line)]
        if tokens:
            yield tokens


def parse_tileset(text: str) -> TileSet:
    r"""Parse ``tileset v1`` text into a validated :class:`TileSet`

    :Call:
        >>> tileset = parse_tileset(text)
    :Inputs:
        *text*: :class:`str`
            Contents of a tile-spec file
    :Outputs:
        *tileset*: :class:`TileSet`
            Parsed and validated tile set
    :Raises:
        * :class:`TilerSyntaxError` with line and column
        * :class:`TilerSemanticError` with a machine-readable *code*
    """
    return TileSetParser(text).parse()


def read_tileset(fname: str) -> TileSet:
    r"""Read and parse a tile-spec file"""
    assert_isfile(fname)
    with open(fname, "r") as fp:
        tileset = parse_tileset(fp.read())
    return tileset


def load_tileset(name: str) -> TileSet:
    r"""Get a built-in tile set by name, else read *name* as a file

    :Call:
        >>> tileset = load_tileset(name)
    :Inputs:
        *name*: :class:`str`
            Built-in name or path to a tile-spec file
    :Outputs:
        *tileset*: :class:`TileSet`
            Tile set
    """
    if name in BUILTIN_NAMES:
        return builtin_tileset(name)
    return read_tileset(name)


def serialize_tileset(tileset: TileSet) -> str:
    r"""Write canonical ``tileset v1`` text for a tile set

    Numbers are written with :func:`repr` so that parsing the output
    gives back exactly the same coordinates.

    :Call:
        >>> text = serialize_tileset(tileset)
    :Inputs:
        *tileset*: :class:`TileSet`
            Tile set to write
    :Outputs:
        *text*: :class:`str`
            File contents
    """
    lines = [" ".join(HEADER)]
    # Tiles
    for tile in tileset.tiles:
        coords = "  ".join(
            f"{_fmt(x)} {_fmt(y)}" for x, y in tile.shape.vertices)
        lines.append(f"TILE {tile.id}")
        lines.append(f"  vertices {coords}")
        lines.append(f"  symmetry {tile.symmetry}")
        if tile.motif is not None:
            lines.append(f"  motif {tile.motif}")
        if tile.half_of is not None:
            lines.append(f"  half {tile.half_of}")
        lines.append("END")
        lines.append(f"EDGES {tile.id}")
        lines.append("  " + " ".join(str(lbl) for lbl in tile.edges))
        lines.append("END")
    # Rules
    rules = tileset.rules
    lines.append("RULES")
    for pair in sorted(sorted(pair) for pair in rules.compat):
        a = pair[0]
        b = pair[-1]
        lines.append(f"  compat {a} {b}")
    if not rules.default:
        lines.append("  nodefault")
    for mode in rules.modes:
        lines.append(f"  mode {mode}")
    lines.append("END")
    # Substitutions
    for parent, children in rules.substitutions.items():
        lines.append(f"SUBST {parent}")
        for child, t in children:
            lines.append(f"  child {child} {_fmt_transform(t)}")
        lines.append("END")
    # Attachments
    for parent, atts in rules.attachments.items():
        lines.append(f"ATTACH {parent}")
        for att in atts:
            f0, f1 = att.frac
            lines.append(
                f"  site {att.edge} {_fmt(f0)} {_fmt(f1)} "
                f"child {att.child_tile} edge {att.child_edge} "
                f"{_fmt_transform(att.relative)}")
        lines.append("END")
    return "\n".join(lines) + "\n"


def _fmt(x: float) -> str:
    return repr(float(x))


def _fmt_transform(t: Transform) -> str:
    tx, ty = t.translation
    return (
        f"{_fmt(t.scale)} {_fmt(t.rotation)} {int(t.reflect)} "
        f"{_fmt(tx)} {_fmt(ty)}")


def labels(*txt) -> list:
    r"""Convenience: convert ``"A:plus"`` strings to :class:`EdgeLabel`"""
    return [EdgeLabel.parse(t) for t in txt]


# Square tiles
def _square_tileset(name, edges, symmetry, mode, width=1.0) -> TileSet:
    # Rectangle of given width and unit height
    shape = Polygon([(0, 0), (width, 0), (width, 1), (0, 1)])
    tile = TileProto(
        name, shape, labels(*edges), motif=f"{name}-figure",
        symmetry=symmetry)
    return TileSet([tile], RuleSet(modes=(mode,)), name=name)


def builtin_tileset(name: str) -> TileSet:
    r"""Get one of the named tile sets shipped with :mod:`tiler`

    :Call:
        >>> tileset = builtin_tileset(name)
    :Inputs:
        *name*: :class:`str`
            One of ``p2``, ``p3``, ``fractal-rect``, ``fractal-tri``,
            ``square-sym``, ``square-vitruvian``, ``square-swirl``,
            ``square-two-adjacent``, ``rect-multi``
    :Outputs:
        *tileset*: :class:`TileSet`
            Canonical tile set
    :Raises:
        :class:`TilerKeyError` if *name* is not recognized
    """
    if name == "square-sym":
        return _square_tileset(name, ["A:sym"] * 4, 4, "translation")
    elif name == "square-vitruvian":
        return _square_tileset(
            name, ["A:plus", "B:plus", "A:minus", "B:minus"], 1,
            "translation")
    elif name == "rect-multi":
        return _square_tileset(
            name, ["A:plus", "B:plus", "A:minus", "B:minus"], 1,
            "translation", width=2.0)
    elif name == "square-swirl":
        return _square_tileset(
            name, ["A:plus", "A:minus", "B:plus", "B:minus"], 1, "swirl")
    elif name == "square-two-adjacent":
        return _square_tileset(
            name, ["A:plus", "A:plus", "A:minus", "A:minus"], 1,
            "two_adjacent")
    elif name == "p2":
        from .penrose import p2_geometry
        return p2_geometry()
    elif name == "p3":
        from .penrose import p3_geometry
        return p3_geometry()
    elif name == "fractal-rect":
        from .fractal import fractal_rect_tileset
        return fractal_rect_tileset()
    elif name == "fractal-tri":
        from .fractal import fractal_tri_tileset
        return fractal_tri_tileset()
    raise TilerKeyError(
        f"Unknown tile set '{name}'; options are: " +
        " | ".join(BUILTIN_NAMES))
