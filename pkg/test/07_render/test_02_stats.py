
# Standard library
import json

# Third-party
import pytest

# Local imports
from tiler.fractal import fractal_rect_tileset, grow
from tiler.matcher import Patch
from tiler.penrose import generate
from tiler.periodic import GridSpec, tessellate
from tiler.render import stats, stats_json, stats_text
from tiler.tilespec import builtin_tileset


def _grid():
    tile = builtin_tileset("square-vitruvian").tiles[0]
    return tessellate(tile, GridSpec(3, 3))


def test_penrose01():
    rec = stats(generate("p2", "single_kite", 3))
    assert rec["counts"] == {"dart": 8, "kite": 13}
    assert all(isinstance(n, int) for n in rec["counts"].values())
    assert rec["ratio"] == pytest.approx(1.625)
    assert rec["max_depth"] is None


def test_grid01():
    rec = stats(_grid())
    assert rec["placements"] == 9
    assert rec["counts"] == {"square-vitruvian": 9}
    assert rec["bbox"] == pytest.approx([0.0, 0.0, 3.0, 3.0])
    assert rec["covered_area"] == pytest.approx(9.0)
    assert rec["hull_area"] == pytest.approx(9.0)
    assert rec["coverage"] == pytest.approx(1.0)
    assert rec["ratio"] is None


def test_fractal01():
    patch = grow(fractal_rect_tileset(), "fractal-rect", 3)
    rec = stats(patch)
    assert rec["placements"] == 15
    assert rec["counts"] == {"fractal-rect": 15}
    assert rec["max_depth"] == 3
    # Area 1 at the root, halved area per child at s = 1/2
    assert rec["covered_area"] == pytest.approx(1.0 + 0.5 + 0.25 + 0.125)


def test_empty01():
    rec = stats(Patch())
    assert rec["placements"] == 0
    assert rec["bbox"] is None
    assert rec["coverage"] is None
    assert stats_text(rec).startswith("placements: 0\nbbox: none\n")


def test_text01():
    txt = stats_text(stats(_grid()))
    assert txt.splitlines() == [
        "placements: 9",
        "count.square-vitruvian: 9",
        "bbox: 0.000000 0.000000 3.000000 3.000000",
        "covered_area: 9.000000",
        "hull_area: 9.000000",
        "coverage: 1.000000",
        "ratio: none",
        "max_depth: none",
    ]


def test_json01():
    rec = stats(generate("p2", "single_kite", 3))
    txt = stats_json(rec)
    assert json.loads(txt) == rec
    keys = [line.split(":")[0].strip() for line in txt.splitlines()
            if line.startswith('  "')]
    assert keys == sorted(keys)
