
# Third-party
import pytest

# Local imports
from tiler.matcher import validate_patch
from tiler.periodic import (
    GridSpec,
    find_swirl_block,
    tessellate,
    tessellate_translation)
from tiler.tilererror import TilerRuleError, TilerTypeError, TilerValueError
from tiler.tilespec import builtin_tileset


def _tile(name):
    return builtin_tileset(name).tiles[0]


def test_translation01():
    tile = _tile("square-vitruvian")
    patch = tessellate(tile, GridSpec(3, 3))
    assert len(patch) == 9
    report = validate_patch(patch)
    assert report.is_valid
    # 2 * 3 * 2 interior sides
    assert report.shared_edges == 12
    # Row-major order
    assert patch.placements[1].pose.translation == (1.0, 0.0)
    assert patch.placements[3].pose.translation == (0.0, 1.0)


def test_translation02():
    # Wide rectangle uses its own lattice
    tile = _tile("rect-multi")
    patch = tessellate(tile, GridSpec(2, 3))
    assert len(patch) == 6
    assert patch.placements[1].pose.translation == (2.0, 0.0)
    assert validate_patch(patch).is_valid


def test_translation03():
    # A+ opposite B+ cannot translate
    with pytest.raises(TilerRuleError):
        tessellate_translation(_tile("square-swirl"), GridSpec(2, 2))
    # Triangle is not a parallelogram
    with pytest.raises(TilerRuleError):
        tessellate(_tile("fractal-tri"), GridSpec(2, 2))


def test_swirl01():
    tile = _tile("square-swirl")
    assert find_swirl_block(tile) == (90, 180, 270, 0)
    patch = tessellate(tile, GridSpec(2, 2, "swirl"))
    assert len(patch) == 16
    report = validate_patch(patch)
    assert report.is_valid
    assert report.overlaps == []


def test_swirl02():
    # Symmetric square closes with the first block
    assert find_swirl_block(_tile("square-sym")) == (0, 90, 180, 270)
    # Vitruvian square has no pinwheel
    with pytest.raises(TilerRuleError):
        find_swirl_block(_tile("square-vitruvian"))
    # Rotations need square cells
    with pytest.raises(TilerRuleError):
        tessellate(_tile("rect-multi"), GridSpec(1, 1, "swirl"))


def test_grid01():
    with pytest.raises(TilerValueError):
        GridSpec(0, 3)
    with pytest.raises(TilerValueError):
        GridSpec(2, 2, "spiral")
    with pytest.raises(TilerValueError):
        GridSpec(2, 2, row_choices=[True])
    with pytest.raises(TilerTypeError):
        GridSpec("2", 2)
    grid = GridSpec(3, 4, "two_adjacent", row_choices=[1, 0])
    assert grid.row_choices == [True, False]
