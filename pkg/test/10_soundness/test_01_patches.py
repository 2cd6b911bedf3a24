
# Third-party
import pytest

# Local imports
from tiler.fractal import fractal_rect_tileset, grow
from tiler.matcher import validate_patch
from tiler.penrose import generate
from tiler.periodic import GridSpec, tessellate
from tiler.tilespec import builtin_tileset


# Periodic tiles with the mode each one tiles in, at 6 x 6 tiles
PERIODIC = (
    ("square-vitruvian", GridSpec(6, 6)),
    ("square-swirl", GridSpec(3, 3, "swirl")),
    ("square-two-adjacent", GridSpec(6, 6, "two_adjacent", seed=3)),
)
# Penrose systems with a seed of each
PENROSE = (
    ("p2", "single_kite"),
    ("p3", "single_thick"),
)


def _check(patch):
    report = validate_patch(patch)
    assert report.edge_mismatches == []
    assert report.overlaps == []
    assert report.is_valid
    return report


@pytest.mark.parametrize("name, grid", PERIODIC)
def test_periodic01(name, grid):
    tileset = builtin_tileset(name)
    patch = tessellate(tileset.tiles[0], grid, tileset.rules)
    assert len(patch) == 36
    report = _check(patch)
    # Interior sides of a 6 x 6 grid
    assert report.shared_edges == 2 * 6 * 5


@pytest.mark.parametrize("depth", range(9))
@pytest.mark.parametrize("set_name, seed", PENROSE)
def test_penrose01(set_name, seed, depth):
    patch = generate(set_name, seed, depth)
    assert len(patch) > 0
    _check(patch)


@pytest.mark.parametrize("seed", ("sun", "star"))
def test_penrose02(seed):
    _check(generate("p2", seed, 5))


@pytest.mark.parametrize("depth", range(7))
def test_fractal01(depth):
    patch = grow(fractal_rect_tileset(0.5), "fractal-rect", depth)
    report = _check(patch)
    assert report.shared_edges == len(patch) - 1
