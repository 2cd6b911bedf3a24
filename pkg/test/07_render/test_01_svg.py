
# Standard library
import os

# Third-party
import numpy as np
import pytest

# Local imports
from tiler.fractal import fractal_tri_tileset, grow
from tiler.geometry import Transform
from tiler.matcher import Patch, Placement
from tiler.penrose import generate
from tiler.periodic import GridSpec, tessellate
from tiler.render import (
    DEFAULT_FILLS,
    PALETTE,
    Style,
    parse_use_transforms,
    read_style,
    to_svg)
from tiler.tilererror import (
    TilerFileNotFoundError,
    TilerKeyError,
    TilerTypeError,
    TilerValueError)
from tiler.tilespec import builtin_tileset


def _grid(n=2):
    tile = builtin_tileset("square-vitruvian").tiles[0]
    return tessellate(tile, GridSpec(n, n))


def test_empty01():
    txt = to_svg(Patch())
    assert 'viewBox="0 0 1 1"' in txt
    assert "<use" not in txt
    assert txt.startswith('<?xml version="1.0" encoding="UTF-8"?>\n')
    assert txt.endswith("</svg>\n")


def test_grid01():
    txt = to_svg(_grid())
    assert txt.count("<use ") == 4
    assert txt.count("<symbol ") == 1
    assert 'id="tile-square-vitruvian"' in txt
    assert '<g id="scene" transform="matrix(1 0 0 -1 0 0)">' in txt
    # Padded box around the 2 x 2 square, y flipped
    assert 'viewBox="-0.040000 -2.040000 2.080000 2.080000"' in txt
    # Palette color for a tile without a default
    assert f'fill="{PALETTE[0]}"' in txt


# Independent builders for each patch family
FAMILIES = {
    "periodic": lambda: _grid(3),
    "penrose": lambda: generate("p2", "sun", 2),
    "fractal": lambda: grow(fractal_tri_tileset(), "fractal-tri", 3),
}


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_determinism01(family):
    # Patch is rebuilt from scratch for each rendering
    build = FAMILIES[family]
    txt = to_svg(build())
    assert txt.count("<use ") > 0
    assert to_svg(build()) == txt


def _check_uses(patch):
    uses = parse_use_transforms(to_svg(patch))
    assert len(uses) == len(patch)
    for (tile_id, pose), p in zip(uses, patch.placements):
        assert tile_id == p.tile
        assert pose.reflect == p.pose.reflect
        assert np.allclose(pose.matrix(), p.pose.matrix(), rtol=0, atol=1e-5)


def test_uses01():
    _check_uses(generate("p2", "sun", 2))
    # Tree poses have scales below 1 and mirrored nodes
    patch = grow(fractal_tri_tileset(), "fractal-tri", 3)
    scales = {round(p.pose.scale, 9) for p in patch.placements}
    assert len(scales) == 4
    assert any(p.pose.reflect for p in patch.placements)
    _check_uses(patch)


def test_labels01():
    txt = to_svg(_grid(), style=Style(show_labels=True))
    assert '<g class="labels"' in txt
    assert ">A+</text>" in txt
    assert ">B-</text>" in txt
    assert '<g class="labels"' not in to_svg(_grid())


def test_collisions01():
    tileset = builtin_tileset("square-sym")
    patch = Patch([
        Placement("square-sym"),
        Placement("square-sym", Transform(translation=(0.5, 0.0))),
        Placement("square-sym", Transform(translation=(3.0, 0.0))),
    ], tileset)
    txt = to_svg(patch, style=Style(show_collisions=True))
    assert '<g id="collisions"' in txt
    part = txt.split('<g id="collisions"')[1]
    assert part.count("<polygon ") == 2


def test_motif01(tmp_path):
    # Motif file replaces the placeholder
    with open(os.path.join(tmp_path, "flower.svg"), "w") as fp:
        fp.write('<?xml version="1.0"?>\n<circle r="0.1"/>\n')
    style = Style(motif_map={"square-vitruvian": "flower"})
    txt = to_svg(_grid(), style=style, motif_dir=str(tmp_path))
    assert '<circle r="0.1"/>' in txt
    assert 'data-motif="flower"' in txt
    assert txt.count("<?xml") == 1


def test_motif02():
    # Unknown motif and unknown tile
    style = Style(motif_map={"square-vitruvian": "flower"})
    with pytest.raises(TilerKeyError):
        to_svg(_grid(), style=style)
    style = Style(motif_map={"kite": "square-vitruvian-figure"})
    with pytest.raises(TilerKeyError):
        to_svg(_grid(), style=style)
    # Built-in motif name is known
    style = Style(motif_map={"square-vitruvian": "square-vitruvian-figure"})
    assert "<use " in to_svg(_grid(), style=style)


def test_style01(tmp_path):
    fname = os.path.join(tmp_path, "style.yaml")
    with open(fname, "w") as fp:
        fp.write(
            "stroke_width: 0.05\n"
            "fills:\n"
            "  kite: '#ff0000'\n"
            "show_labels: true\n"
            "motifs:\n"
            "  dart: kite\n")
    style = read_style(fname)
    assert style.stroke_width == 0.05
    assert style.show_labels
    assert not style.show_collisions
    assert style.motif_map == {"dart": "kite"}
    # Fill of kites and their halves
    tileset = builtin_tileset("p2")
    assert style.fill(tileset.tile("kite"), tileset) == "#ff0000"
    assert style.fill(tileset.tile("half-kite"), tileset) == "#ff0000"
    assert style.fill(tileset.tile("dart"), tileset) == DEFAULT_FILLS["dart"]
    txt = to_svg(generate("p2", "sun", 1), style=style)
    assert 'fill="#ff0000"' in txt
    assert 'stroke-width="0.050000"' in txt


def test_style02(tmp_path):
    fname = os.path.join(tmp_path, "style.yaml")
    # Empty file gives defaults
    with open(fname, "w") as fp:
        fp.write("")
    assert read_style(fname).stroke_width == 0.02
    # Unknown key
    with open(fname, "w") as fp:
        fp.write("stroke: 1\n")
    with pytest.raises(TilerKeyError):
        read_style(fname)
    # Bad color
    with open(fname, "w") as fp:
        fp.write("fills:\n  kite: red\n")
    with pytest.raises(TilerValueError):
        read_style(fname)
    # Not a mapping
    with open(fname, "w") as fp:
        fp.write("- 1\n- 2\n")
    with pytest.raises(TilerTypeError):
        read_style(fname)
    with pytest.raises(TilerFileNotFoundError):
        read_style(os.path.join(tmp_path, "missing.yaml"))


def test_style03():
    with pytest.raises(TilerValueError):
        Style(stroke_width=-1)
    with pytest.raises(TilerValueError):
        Style(stroke_width="thick")
