r"""
``cli``: Command-line interface to ``tiler``
==============================================

This module provides the function :func:`main`, which reads
``sys.argv`` and dispatches one of the subcommand functions

    * :func:`tiler_tessellate`
    * :func:`tiler_penrose`
    * :func:`tiler_fractal`
    * :func:`tiler_validate`
    * :func:`tiler_stats`

These functions take Python arguments and keyword arguments rather than
parsing ``sys.argv``, so they can also be called from Python.

Artifacts (SVG documents, stats) go to ``--out`` or to STDOUT. Status
lines, reports, and errors go to STDERR so the tool pipes cleanly.
"""

# Standard library
import sys

# Local imports
from .argread import ArgReader
from .clitext import compile_rst
from .fractal import (
    detect_collisions,
    fractal_rect_tileset,
    fractal_tri_tileset,
    grow,
    swap_choices,
    triangle_variant,
    with_scale)
from .matcher import read_patch, validate_patch, write_patch
from .penrose import SEED_KINDS, generate
from .periodic import GridSpec, tessellate
from .render import Style, read_style, stats, stats_json, stats_text, to_svg
from .tilererror import (
    TilerError,
    TilerFileNotFoundError,
    TilerKeyError,
    TilerParseError,
    TilerTypeError,
    TilerValueError)
from .tilespec import builtin_tileset, load_tileset, read_tileset


# Help message
HELP_TILER = r"""
``tiler``: Edge-matched tilings and fractal tile trees
========================================================

Generate, check, and draw tilings built from labeled tiles.

:Usage:
    .. code-block:: console

        $ tiler CMD [OPTIONS]

:Inputs:
    * *CMD*: name of command to run

    Available commands are:

    ==================  ===========================================
    Command             Description
    ==================  ===========================================
    ``tessellate``      Periodic tiling of one quadrilateral tile
    ``penrose``         Penrose tiling by repeated deflation
    ``fractal``         Self-similar tree of shrinking tiles
    ``validate``        Check a patch file for edge mismatches
    ``stats``           Summarize a patch file
    ==================  ===========================================
"""

# Options shared by the generators
_HELP_OUTPUT = r"""
    -o, --out FILE
        Write SVG document to *FILE* instead of STDOUT

    --patch-out FILE
        Also write the patch in the ``patch v1`` format to *FILE*

    --stats
        Print patch statistics to STDERR

    --json
        Write statistics as JSON instead of ``key: value`` lines

    --style FILE
        Read render style from YAML *FILE*

    --motif-dir DIR
        Look up motif ``ID`` as ``DIR/ID.svg``

    --labels
        Draw edge labels inside each tile

    -q, --quiet
        Do not print status lines
"""

HELP_TESSELLATE = r"""
``tiler-tessellate``: Periodic tiling of one quadrilateral tile
================================================================

Place copies of one tile on a grid. In ``translation`` mode every copy
has the same orientation; in ``swirl`` mode a 2x2 block of turned copies
repeats; in ``two-adjacent`` mode each row after the first picks one of
the two arrangements its neighbor allows.

:Usage:
    .. code-block:: console

        $ tiler tessellate (--builtin NAME | --tile FILE) [OPTIONS]

:Options:
    -h, --help
        Display this help message and exit

    --builtin NAME
        Use built-in tile set *NAME*, e.g. ``square-swirl``

    --tile FILE
        Read tile set from tile-spec *FILE*

    --id ID
        Use tile *ID* of the tile set (default: first tile)

    --mode MODE
        ``translation`` | ``swirl`` | ``two-adjacent`` (default: first
        mode declared by the tile set, else ``translation``)

    --rows N
        Number of rows (default: 4)

    --cols N
        Number of columns (default: 4)

    --choices BITS
        Row picks for ``two-adjacent`` mode, e.g. ``010``

    --seed N
        Random seed for ``two-adjacent`` mode without ``--choices``
""" + _HELP_OUTPUT

HELP_PENROSE = r"""
``tiler-penrose``: Penrose tiling by repeated deflation
========================================================

Start from a seed of half tiles, deflate it *DEPTH* times, and join
matching halves back into whole tiles.

:Usage:
    .. code-block:: console

        $ tiler penrose [--set SET] [--seed-kind SEED] [OPTIONS]

:Options:
    -h, --help
        Display this help message and exit

    --set SET
        ``p2`` (kites and darts) or ``p3`` (rhombi); default ``p2``

    --seed-kind SEED
        ``sun`` | ``star`` | ``single_kite`` | ``single_dart`` for
        ``p2``; ``single_thick`` | ``single_thin`` for ``p3``

    --depth N
        Number of deflations (default: 3)
""" + _HELP_OUTPUT

HELP_FRACTAL = r"""
``tiler-fractal``: Self-similar tree of shrinking tiles
========================================================

Grow a tree where each tile carries scaled copies attached to its
sides, and report any overlapping branches.

:Usage:
    .. code-block:: console

        $ tiler fractal [--builtin NAME | --tile FILE] [OPTIONS]

:Options:
    -h, --help
        Display this help message and exit

    --builtin NAME
        ``fractal-rect`` (default) or ``fractal-tri``

    --tile FILE
        Read tile set with ``ATTACH`` sections from *FILE*

    --depth N
        Number of generations (default: 4)

    --scale S
        Child scale in (0, 1) instead of the tile set's own

    --swap-seed N
        Turn each node of a three-fold symmetric tree by a random
        multiple of 120 degrees drawn from seed *N*
""" + _HELP_OUTPUT

HELP_VALIDATE = r"""
``tiler-validate``: Check a patch file for edge mismatches
===========================================================

Read a patch file, check that every shared edge has compatible labels
and that no two tiles overlap, and print a report to STDERR. The exit
status is 1 if any mismatch or overlap is found.

:Usage:
    .. code-block:: console

        $ tiler validate PATCH --tiles NAME [OPTIONS]

:Inputs:
    * *PATCH*: name of ``patch v1`` file

:Options:
    -h, --help
        Display this help message and exit

    --tiles NAME
        Built-in tile set name or tile-spec file

    -q, --quiet
        Do not print status lines
"""

HELP_STATS = r"""
``tiler-stats``: Summarize a patch file
========================================

Print tile counts, bounding box, covered area, and (for Penrose
patches) the tile ratio.

:Usage:
    .. code-block:: console

        $ tiler stats PATCH --tiles NAME [OPTIONS]

:Inputs:
    * *PATCH*: name of ``patch v1`` file

:Options:
    -h, --help
        Display this help message and exit

    --tiles NAME
        Built-in tile set name or tile-spec file

    --json
        Write JSON instead of ``key: value`` lines

    -o, --out FILE
        Write statistics to *FILE* instead of STDOUT
"""


# Dictionary of help commands
HELP_DICT = {
    "tessellate": HELP_TESSELLATE,
    "penrose": HELP_PENROSE,
    "fractal": HELP_FRACTAL,
    "validate": HELP_VALIDATE,
    "stats": HELP_STATS,
}

# Output options shared by generators
_OPTS_OUTPUT = (
    "help",
    "out",
    "patch-out",
    "stats",
    "json",
    "style",
    "motif-dir",
    "labels",
    "quiet",
)

# Allowed options for each command
OPT_DICT = {
    "tessellate": _OPTS_OUTPUT + (
        "builtin", "tile", "id", "mode", "rows", "cols", "choices", "seed"),
    "penrose": _OPTS_OUTPUT + ("set", "seed-kind", "depth"),
    "fractal": _OPTS_OUTPUT + (
        "builtin", "tile", "depth", "scale", "swap-seed"),
    "validate": ("help", "tiles", "quiet"),
    "stats": ("help", "tiles", "json", "out"),
}


# Customized CLI parser
class TilerArgParser(ArgReader):
    # No attributes
    __slots__ = ()

    # Aliases
    _optmap = {
        "h": "help",
        "o": "out",
        "q": "quiet",
    }

    # Options that never take a value
    _optlist_noval = (
        "help",
        "json",
        "labels",
        "quiet",
        "stats",
    )

    # Options that convert from string
    _optconverters = {
        "cols": int,
        "depth": int,
        "rows": int,
        "scale": float,
        "seed": int,
        "swap-seed": int,
    }


# Return codes
IERR_OK = 0
IERR_FAIL = 1
IERR_USAGE = 2

# Error classes that mean bad input rather than a failed check
USAGE_ERRORS = (
    TilerFileNotFoundError,
    TilerKeyError,
    TilerParseError,
    TilerTypeError,
    TilerValueError,
)


def tiler_tessellate(*a, **kw) -> int:
    r"""Generate a periodic tessellation

    :Call:
        >>> ierr = tiler_tessellate(builtin=None, tile=None, **kw)
    :Inputs:
        *builtin*: {``None``} | :class:`str`
            Name of built-in tile set
        *tile*: {``None``} | :class:`str`
            Name of tile-spec file
        *mode*: {``None``} | :class:`str`
            Tessellation mode
        *rows*, *cols*: {``4``} | :class:`int`
            Grid size
        *choices*: {``None``} | :class:`str`
            Bit string of row picks
        *seed*: {``None``} | :class:`int`
            Random seed
    :Outputs:
        *ierr*: :class:`int`
            Return code
    """
    _check_noargs("tessellate", a)
    # Read tile set
    if kw.get("tile"):
        tileset = read_tileset(kw["tile"])
    elif kw.get("builtin"):
        tileset = builtin_tileset(kw["builtin"])
    else:
        raise TilerValueError("Specify either --builtin NAME or --tile FILE")
    tile = tileset.tile(kw["id"]) if kw.get("id") else tileset.tiles[0]
    # Mode; CLI spelling uses dashes
    mode = kw.get("mode")
    if mode is None:
        modes = tileset.rules.modes
        mode = modes[0] if modes else "translation"
    mode = mode.replace("-", "_")
    # Row picks
    choices = kw.get("choices")
    if choices is not None:
        choices = str(choices)
        if not choices or set(choices) - set("01"):
            raise TilerValueError(
                f"Row choices must be a string of 0s and 1s; got {choices!r}")
        choices = [c == "1" for c in choices]
    grid = GridSpec(
        kw.get("rows", 4), kw.get("cols", 4), mode,
        row_choices=choices, seed=kw.get("seed"))
    patch = tessellate(tile, grid, tileset.rules)
    _status(
        f"tessellate: {len(patch)} placements of '{tile.id}' "
        f"({grid.rows}x{grid.cols}, {mode})", kw)
    return _finish(patch, patch.tileset, kw)


def tiler_penrose(*a, **kw) -> int:
    r"""Generate a Penrose tiling

    :Call:
        >>> ierr = tiler_penrose(set="p2", **kw)
    :Inputs:
        *set*: {``"p2"``} | ``"p3"``
            Penrose system
        *seed-kind*: {``None``} | :class:`str`
            Seed; default ``sun`` for P2 and ``single_thick`` for P3
        *depth*: {``3``} | :class:`int`
            Number of deflations
    :Outputs:
        *ierr*: :class:`int`
            Return code
    """
    _check_noargs("penrose", a)
    set_name = kw.get("set", "p2")
    if set_name not in SEED_KINDS:
        raise TilerKeyError(
            f"Unknown tile set '{set_name}'; options are: " +
            " | ".join(SEED_KINDS))
    seed_kind = kw.get("seed-kind") or (
        "sun" if set_name == "p2" else "single_thick")
    depth = kw.get("depth", 3)
    patch = generate(set_name, seed_kind, depth)
    _status(
        f"penrose: {len(patch)} placements ({set_name}, {seed_kind}, "
        f"depth {depth})", kw)
    return _finish(patch, patch.tileset, kw)


def tiler_fractal(*a, **kw) -> int:
    r"""Grow a fractal tile tree

    :Call:
        >>> ierr = tiler_fractal(builtin="fractal-rect", **kw)
    :Inputs:
        *builtin*: {``"fractal-rect"``} | ``"fractal-tri"``
            Built-in fractal tile set
        *tile*: {``None``} | :class:`str`
            Tile-spec file with attachments
        *depth*: {``4``} | :class:`int`
            Number of generations
        *scale*: {``None``} | :class:`float`
            Child scale override
        *swap-seed*: {``None``} | :class:`int`
            Seed for per-node rotations
    :Outputs:
        *ierr*: :class:`int`
            Return code
    """
    _check_noargs("fractal", a)
    scale = kw.get("scale")
    depth = kw.get("depth", 4)
    # Read tile set
    if kw.get("tile"):
        tileset = read_tileset(kw["tile"])
        if scale is not None:
            tileset = with_scale(tileset, scale)
    else:
        name = kw.get("builtin", "fractal-rect")
        if name == "fractal-rect":
            tileset = fractal_rect_tileset() if scale is None else \
                fractal_rect_tileset(scale)
        elif name == "fractal-tri":
            tileset = fractal_tri_tileset() if scale is None else \
                fractal_tri_tileset(scale)
        else:
            raise TilerKeyError(
                f"Unknown fractal tile set '{name}'; "
                "options are: fractal-rect | fractal-tri")
    root = tileset.tiles[0].id
    # Grow
    swap_seed = kw.get("swap-seed")
    if swap_seed is None:
        patch = grow(tileset, root, depth)
    else:
        count = len(grow(tileset, root, depth))
        patch = triangle_variant(
            tileset, swap_choices(swap_seed, count), depth)
    report = detect_collisions(patch)
    _status(f"fractal: {len(patch)} nodes of '{root}' (depth {depth})", kw)
    _status(
        f"collisions: {len(report)} (first depth: {report.first_depth})",
        kw)
    return _finish(patch, tileset, kw)


def tiler_validate(*a, **kw) -> int:
    r"""Check a patch file

    :Call:
        >>> ierr = tiler_validate(fname, tiles=name)
    :Inputs:
        *fname*: :class:`str`
            Name of patch file
        *tiles*: :class:`str`
            Built-in tile set name or tile-spec file
    :Outputs:
        *ierr*: ``0`` | ``1``
            0 if no mismatches or overlaps
    """
    patch = _read_patch_args("validate", a, kw)
    report = validate_patch(patch)
    # Report always goes to STDERR
    print(report.summary(), file=sys.stderr, end="")
    if report.is_valid:
        _status(f"validate: {a[0]} is valid", kw)
        return IERR_OK
    return IERR_FAIL


def tiler_stats(*a, **kw) -> int:
    r"""Summarize a patch file

    :Call:
        >>> ierr = tiler_stats(fname, tiles=name, json=False)
    """
    patch = _read_patch_args("stats", a, kw)
    rec = stats(patch)
    txt = stats_json(rec) if kw.get("json") else stats_text(rec)
    _write_artifact(txt, kw.get("out"))
    return IERR_OK


def _check_noargs(cmdname: str, a):
    if a:
        raise TilerValueError(
            f"'{cmdname}' takes no positional arguments; got: " +
            " ".join(a))


def _read_patch_args(cmdname: str, a, kw):
    # Read the PATCH argument with the --tiles tile set
    if len(a) != 1:
        raise TilerValueError(
            f"'{cmdname}' takes exactly one PATCH file; got {len(a)}")
    if not kw.get("tiles") or kw["tiles"] is True:
        raise TilerValueError("Specify the tile set with --tiles NAME")
    tileset = load_tileset(kw["tiles"])
    return read_patch(a[0], tileset)


def _finish(patch, tileset, kw) -> int:
    # Write patch, stats, and SVG for a generated patch
    if kw.get("patch-out"):
        with open(kw["patch-out"], "w") as fp:
            fp.write(write_patch(patch))
        _status(f"wrote patch to {kw['patch-out']}", kw)
    if kw.get("stats"):
        rec = stats(patch, tileset)
        txt = stats_json(rec) if kw.get("json") else stats_text(rec)
        print(txt, file=sys.stderr, end="")
    # Style
    style = read_style(kw["style"]) if kw.get("style") else Style()
    if kw.get("labels"):
        style.show_labels = True
    svg = to_svg(patch, tileset, style, motif_dir=kw.get("motif-dir"))
    _write_artifact(svg, kw.get("out"))
    if kw.get("out"):
        _status(f"wrote SVG to {kw['out']}", kw)
    return IERR_OK


def _write_artifact(txt: str, fname=None):
    if fname:
        with open(fname, "w") as fp:
            fp.write(txt)
    else:
        sys.stdout.write(txt)


def _status(msg: str, kw):
    if not kw.get("quiet"):
        print(msg, file=sys.stderr)


# Dictionary of command functions
CMD_DICT = {
    "tessellate": tiler_tessellate,
    "penrose": tiler_penrose,
    "fractal": tiler_fractal,
    "validate": tiler_validate,
    "stats": tiler_stats,
}


def main() -> int:
    r"""Main command-line interface to ``tiler``

    The function reads the second word of ``sys.argv`` and dispatches
    the matching ``tiler_*`` function.

    :Call:
        >>> ierr = main()
    :Inputs:
        (read from ``sys.argv``)
    :Outputs:
        *ierr*: ``0`` | ``1`` | ``2``
            0 on success, 1 for failed checks or generator errors, 2 for
            usage and input errors
    """
    parser = TilerArgParser()
    # Parse args
    try:
        a, kw = parser.parse(sys.argv)
    except TilerError as err:
        _print_error(err)
        return IERR_USAGE
    kw.pop("__replaced__", None)
    # Check for no commands
    if len(a) == 0:
        print(compile_rst(HELP_TILER))
        return IERR_OK
    cmdname = a[0]
    func = CMD_DICT.get(cmdname)
    if func is None:
        print(f"Unexpected command '{cmdname}'", file=sys.stderr)
        print("Options are: " + " | ".join(CMD_DICT), file=sys.stderr)
        return IERR_USAGE
    # Check for "help" option
    if kw.get("help", False):
        print(compile_rst(HELP_DICT[cmdname]))
        return IERR_OK
    # Check options before doing any work
    for opt in kw:
        if opt not in OPT_DICT[cmdname]:
            print(
                f"Unknown option '--{opt}' for '{cmdname}'", file=sys.stderr)
            print(
                "Options are: " +
                " ".join(f"--{o}" for o in OPT_DICT[cmdname]),
                file=sys.stderr)
            return IERR_USAGE
    # Run function
    try:
        ierr = func(*a[1:], **kw)
    except USAGE_ERRORS as err:
        _print_error(err)
        return IERR_USAGE
    except TilerError as err:
        _print_error(err)
        return IERR_FAIL
    return IERR_OK if ierr is None else ierr


def _print_error(err: Exception):
    print(f"{err.__class__.__name__}:", file=sys.stderr)
    print(f"  {err}", file=sys.stderr)
