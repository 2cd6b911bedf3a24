r"""
``periodic``: Square-tile tessellations
=========================================

This module fills a grid of cells with copies of one quadrilateral tile
in one of three modes:

``translation``
    Pure lattice translation. Opposite sides must be compatible, as for
    a tile labeled ``[A:plus, B:plus, A:minus, B:minus]`` or one whose
    sides are all ``A:sym``.

``swirl``
    A 2x2 block of copies rotated 0, 90, 180, and 270 degrees about the
    block center (a pinwheel), repeated by translation. The block is
    found by exhaustive search over the 4**4 cell orientations.

``two_adjacent``
    Each side complements both of the sides next to it. The first row is
    fixed, and every later row has exactly two valid arrangements picked
    by a list of booleans or by a seeded random generator.

Orientation *r* (in quarter turns) of a square cell means the tile is
rotated by ``90*r`` degrees about its centroid, so the side shown at
position *p* (0 bottom, 1 right, 2 top, 3 left) is proto side
``(p - r) % 4``.
"""

# Standard library
from itertools import product

# Third-party
import numpy as np

# Local imports
from .geometry import EPS, Transform, compose
from .matcher import Patch, Placement
from .tilererror import (
    TilerBudgetError,
    TilerRuleError,
    TilerValueError,
    assert_isinstance)
from .tilespec import MODES, RuleSet, TileProto, TileSet


# Orientations in search order
ORIENTATIONS = (0, 90, 180, 270)
# Default node budget for row enumeration
SEARCH_BUDGET = 1_000_000


# Grid description
class GridSpec(object):
    r"""Size and mode of a periodic tessellation

    :Call:
        >>> grid = GridSpec(rows, cols, mode="translation", **kw)
    :Inputs:
        *rows*: :class:`int` > 0
            Number of rows (of 2x2 blocks in ``swirl`` mode)
        *cols*: :class:`int` > 0
            Number of columns (of 2x2 blocks in ``swirl`` mode)
        *mode*: {``"translation"``} | ``"swirl"`` | ``"two_adjacent"``
            Tessellation mode
        *row_choices*: {``None``} | :class:`list`\ [:class:`bool`]
            Row arrangement picks for ``two_adjacent`` mode, one per row
            after the first
        *seed*: {``None``} | :class:`int`
            Random seed used when *row_choices* is ``None``; default 0
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "rows",
        "cols",
        "mode",
        "row_choices",
        "seed",
    )

   # --- __dunder__ ---
    def __init__(
            self, rows: int, cols: int, mode: str = "translation",
            row_choices=None, seed=None):
        assert_isinstance(rows, int, "grid rows")
        assert_isinstance(cols, int, "grid cols")
        if rows < 1 or cols < 1:
            raise TilerValueError(
                f"Grid must have positive size; got {rows} x {cols}")
        if mode not in MODES:
            raise TilerValueError(
                f"Unknown mode '{mode}'; expected one of " + " | ".join(MODES))
        if row_choices is not None and mode != "two_adjacent":
            raise TilerValueError(
                "Row choices only apply to 'two_adjacent' mode")
        self.rows = rows
        self.cols = cols
        self.mode = mode
        self.row_choices = None if row_choices is None else [
            bool(c) for c in row_choices]
        self.seed = seed

    def __repr__(self) -> str:
        return f"<GridSpec {self.rows}x{self.cols} {self.mode}>"


def tessellate(tile: TileProto, grid: GridSpec, rules=None) -> Patch:
    r"""Tessellate with the generator selected by *grid.mode*

    :Call:
        >>> patch = tessellate(tile, grid, rules=None)
    :Inputs:
        *tile*: :class:`TileProto`
            Quadrilateral tile
        *grid*: :class:`GridSpec`
            Size and mode
        *rules*: {``None``} | :class:`RuleSet`
            Compatibility rules; default polarity rules if ``None``
    :Outputs:
        *patch*: :class:`Patch`
            Generated patch, carrying a one-tile :class:`TileSet`
    """
    if grid.mode == "swirl":
        return tessellate_swirl(tile, grid, rules)
    elif grid.mode == "two_adjacent":
        return tessellate_two_adjacent(tile, grid, rules)
    return tessellate_translation(tile, grid, rules)


def tessellate_translation(tile: TileProto, grid: GridSpec, rules=None):
    r"""Fill *grid* by pure lattice translation

    The lattice vectors are the tile's first and last side vectors, so
    any parallelogram works.

    :Call:
        >>> patch = tessellate_translation(tile, grid, rules=None)
    :Raises:
        :class:`TilerRuleError` if the tile is not a parallelogram or
        opposite sides are not compatible
    """
    rules = _get_rules(rules)
    u, w = _lattice(tile)
    # Opposite sides meet under translation
    for a, b in ((0, 2), (1, 3)):
        la = tile.edges[a]
        lb = tile.edges[b]
        if not rules.is_compatible(la, lb):
            raise TilerRuleError(
                f"Tile '{tile.id}' cannot tessellate by translation: "
                f"opposite sides {la} and {lb} are not compatible")
    # Row-major placements
    placements = []
    for i in range(grid.rows):
        for j in range(grid.cols):
            t = Transform(translation=tuple(j*u + i*w))
            placements.append(Placement(tile.id, t))
    return Patch(placements, TileSet([tile], rules))


def tessellate_swirl(tile: TileProto, grid: GridSpec, rules=None) -> Patch:
    r"""Fill *grid* with translated copies of a 2x2 pinwheel block

    :Call:
        >>> patch = tessellate_swirl(tile, grid, rules=None)
    :Outputs:
        *patch*: :class:`Patch`
            ``4 * rows * cols`` placements, block by block in the order
            lower-left, lower-right, upper-right, upper-left
    :Raises:
        :class:`TilerRuleError` if no rotationally closed block exists
    """
    rules = _get_rules(rules)
    block = find_swirl_block(tile, rules)
    u, w = _lattice(tile)
    # Cell offsets of the block in counter-clockwise order
    offsets = ((0, 0), (0, 1), (1, 1), (1, 0))
    placements = []
    for bi in range(grid.rows):
        for bj in range(grid.cols):
            for (di, dj), angle in zip(offsets, block):
                i = 2*bi + di
                j = 2*bj + dj
                pose = _cell_pose(tile, u, w, i, j, angle)
                placements.append(Placement(tile.id, pose))
    return Patch(placements, TileSet([tile], rules))


def find_swirl_block(tile: TileProto, rules=None) -> tuple:
    r"""Search cell orientations for a valid pinwheel block

    All 4**4 orientation tuples for the lower-left, lower-right,
    upper-right, and upper-left cells are tried in lexicographic order.
    A tuple is accepted if each cell is the previous one turned a
    further 90 degrees and a 2x2 arrangement of such blocks has only
    compatible shared sides.

    :Call:
        >>> block = find_swirl_block(tile, rules=None)
    :Outputs:
        *block*: :class:`tuple`\ [:class:`int`]
            Orientations in degrees of the four cells
    :Raises:
        :class:`TilerRuleError` if no tuple works
    """
    rules = _get_rules(rules)
    _check_square(tile)
    # Cell (row, col) of each block position
    cells = ((0, 0), (0, 1), (1, 1), (1, 0))
    for block in product(ORIENTATIONS, repeat=4):
        # Rotational closure about block center
        if any((block[k] + 90) % 360 != block[k+1] for k in range(3)):
            continue
        # Orientation grid of 2x2 blocks
        orient = np.zeros((4, 4), dtype=int)
        for bi in range(2):
            for bj in range(2):
                for (di, dj), angle in zip(cells, block):
                    orient[2*bi + di, 2*bj + dj] = angle // 90
        if _count_conflicts(tile, rules, orient) == 0:
            return block
    raise TilerRuleError(
        f"Tile '{tile.id}' admits no rotationally closed 2x2 block")


def tessellate_two_adjacent(tile: TileProto, grid: GridSpec, rules=None):
    r"""Fill *grid* row by row, picking one of two arrangements per row

    :Call:
        >>> patch = tessellate_two_adjacent(tile, grid, rules=None)
    :Inputs:
        *tile*: :class:`TileProto`
            Square tile whose sides complement both adjacent sides
        *grid*: :class:`GridSpec`
            Size plus *row_choices* or *seed*
        *rules*: {``None``} | :class:`RuleSet`
            Compatibility rules
    :Outputs:
        *patch*: :class:`Patch`
            Row-major placements
    :Raises:
        :class:`TilerRuleError` if *row_choices* has the wrong length or
        a row does not have exactly two arrangements
    """
    rules = _get_rules(rules)
    _check_square(tile)
    nrow = grid.rows
    # Row picks
    choices = grid.row_choices
    if choices is None:
        rng = np.random.default_rng(0 if grid.seed is None else grid.seed)
        choices = [bool(c) for c in rng.integers(0, 2, size=nrow - 1)]
    elif len(choices) != nrow - 1:
        raise TilerRuleError(
            f"Expected {nrow - 1} row choices for {nrow} rows; "
            f"got {len(choices)}")
    # First row is fixed
    first = (0,) * grid.cols
    if _count_conflicts(tile, rules, np.array([first])) > 0:
        raise TilerRuleError(
            f"Tile '{tile.id}' does not tile a row by translation")
    rows = [first]
    for choice in choices:
        options = row_arrangements(tile, grid.cols, rows[-1], rules)
        if len(options) != 2:
            raise TilerRuleError(
                f"Tile '{tile.id}' is not two-adjacent compatible: row has "
                f"{len(options)} arrangements instead of 2")
        rows.append(options[int(choice)])
    # Placements
    u, w = _lattice(tile)
    placements = []
    for i, row in enumerate(rows):
        for j, r in enumerate(row):
            pose = _cell_pose(tile, u, w, i, j, 90*r)
            placements.append(Placement(tile.id, pose))
    return Patch(placements, TileSet([tile], rules))


def row_arrangements(
        tile: TileProto, cols: int, previous_row, rules=None) -> list:
    r"""List all valid rows that can sit on top of *previous_row*

    :Call:
        >>> rows = row_arrangements(tile, cols, previous_row, rules=None)
    :Inputs:
        *tile*: :class:`TileProto`
            Square tile
        *cols*: :class:`int`
            Row length
        *previous_row*: :class:`tuple`\ [:class:`int`]
            Quarter-turn orientation of each cell in the row below
        *rules*: {``None``} | :class:`RuleSet`
            Compatibility rules
    :Outputs:
        *rows*: :class:`list`\ [:class:`tuple`\ [:class:`int`]]
            Valid rows in lexicographic order
    """
    rules = _get_rules(rules)
    out = []
    row = []

    def extend(j):
        # Complete row found
        if j == cols:
            out.append(tuple(row))
            return
        for r in range(4):
            # Bottom neighbor
            below = _side_label(tile, previous_row[j], 2)
            if not rules.is_compatible(_side_label(tile, r, 0), below):
                continue
            # Left neighbor
            if j > 0:
                left = _side_label(tile, row[-1], 1)
                if not rules.is_compatible(_side_label(tile, r, 3), left):
                    continue
            row.append(r)
            extend(j + 1)
            row.pop()

    extend(0)
    return out


def count_row_arrangements(
        tile: TileProto, rows: int, cols: int, rules=None,
        budget: int = SEARCH_BUDGET) -> int:
    r"""Count complete tilings of a grid with the first row fixed

    This is an exhaustive backtracking search over the orientation of
    each cell, independent of :func:`row_arrangements`. The first row is
    all orientation 0, which removes whole-patch translations.

    :Call:
        >>> n = count_row_arrangements(tile, rows, cols, rules=None)
    :Inputs:
        *tile*: :class:`TileProto`
            Square tile
        *rows*: :class:`int`
            Number of rows
        *cols*: :class:`int`
            Number of columns
        *rules*: {``None``} | :class:`RuleSet`
            Compatibility rules
        *budget*: {``1000000``} | :class:`int`
            Maximum number of search nodes
    :Outputs:
        *n*: :class:`int`
            Number of valid grids
    :Raises:
        :class:`TilerBudgetError` if the search visits too many nodes
    """
    rules = _get_rules(rules)
    _check_square(tile)
    orient = np.zeros((rows, cols), dtype=int)
    # First row must be valid on its own
    if _count_conflicts(tile, rules, orient[:1]) > 0:
        return 0
    ncell = rows * cols
    nodes = 0
    count = 0
    # Explicit stack of (cell index, next orientation to try)
    stack = [(cols, 0)]
    while stack:
        k, r = stack.pop()
        # All cells assigned
        if k == ncell:
            count += 1
            continue
        if r > 3:
            continue
        # Try next orientation of this cell later
        stack.append((k, r + 1))
        nodes += 1
        if nodes > budget:
            raise TilerBudgetError(
                f"Row arrangement search exceeded budget of {budget} nodes")
        i, j = divmod(k, cols)
        # Check bottom and left neighbors
        below = _side_label(tile, orient[i-1, j], 2)
        if not rules.is_compatible(_side_label(tile, r, 0), below):
            continue
        if j > 0:
            left = _side_label(tile, orient[i, j-1], 1)
            if not rules.is_compatible(_side_label(tile, r, 3), left):
                continue
        orient[i, j] = r
        stack.append((k + 1, 0))
    return count


def _count_conflicts(tile, rules, orient) -> int:
    # Number of incompatible interior sides in orientation grid
    nrow, ncol = orient.shape
    n = 0
    for i in range(nrow):
        for j in range(ncol):
            r = orient[i, j]
            if j + 1 < ncol:
                a = _side_label(tile, r, 1)
                b = _side_label(tile, orient[i, j+1], 3)
                n += not rules.is_compatible(a, b)
            if i + 1 < nrow:
                a = _side_label(tile, r, 2)
                b = _side_label(tile, orient[i+1, j], 0)
                n += not rules.is_compatible(a, b)
    return n


def _side_label(tile, r, pos):
    # Label shown at position *pos* by a cell turned *r* quarter turns
    return tile.edges[(pos - int(r)) % 4]


def _cell_pose(tile, u, w, i, j, angle) -> Transform:
    # Rotate about centroid, then shift to cell (i, j)
    rot = Transform.rotation_about(angle, tile.shape.centroid())
    shift = Transform(translation=tuple(j*u + i*w))
    return compose(shift, rot)


def _get_rules(rules) -> RuleSet:
    return RuleSet() if rules is None else rules


def _lattice(tile: TileProto):
    # Lattice vectors from sides 0 and 3 of a parallelogram
    if tile.nside != 4:
        raise TilerRuleError(
            f"Tile '{tile.id}' has {tile.nside} sides; periodic modes need 4")
    v = tile.shape.vertices
    u = v[1] - v[0]
    w = v[3] - v[0]
    tol = 1e3 * EPS * max(1.0, tile.shape.diameter())
    if np.max(np.abs(v[0] + u + w - v[2])) > tol:
        raise TilerRuleError(f"Tile '{tile.id}' is not a parallelogram")
    return u, w


def _check_square(tile: TileProto):
    # Rotated copies only fit in square cells
    u, w = _lattice(tile)
    lu = float(np.hypot(*u))
    lw = float(np.hypot(*w))
    tol = 1e3 * EPS * max(1.0, lu)
    if abs(lu - lw) > tol or abs(float(u @ w)) > tol * lu:
        raise TilerRuleError(
            f"Tile '{tile.id}' is not a square; rotations need square cells")
