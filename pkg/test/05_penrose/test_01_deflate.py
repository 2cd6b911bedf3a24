
# Third-party
import pytest

# Local imports
from tiler.matcher import Patch, Placement, validate_patch
from tiler.penrose import (
    PHI,
    count_recurrence,
    deflate,
    generate,
    merge_halves,
    seed_patch,
    split_whole,
    system_of,
    tile_ratio,
    whole_counts)
from tiler.tilererror import TilerRuleError, TilerValueError


def test_recurrence01():
    table = count_recurrence(1, 0, 4)
    assert table == [(1, 0), (2, 1), (5, 3), (13, 8), (34, 21)]


def test_counts01():
    # Single kite follows the recurrence at every depth
    table = count_recurrence(1, 0, 8)
    for depth in range(1, 9):
        patch = generate("p2", "single_kite", depth)
        counts = whole_counts(patch)
        assert counts == {"kite": table[depth][0], "dart": table[depth][1]}


def test_counts02():
    # Sun is five kites
    table = count_recurrence(5, 0, 3)
    patch = generate("p2", "sun", 3)
    assert whole_counts(patch) == {"kite": table[3][0], "dart": table[3][1]}
    # Thick rhombus
    table = count_recurrence(1, 0, 5)
    patch = generate("p3", "single_thick", 5)
    assert whole_counts(patch) == {"thick": table[5][0], "thin": table[5][1]}


def test_ratio01():
    patch = generate("p2", "single_kite", 3)
    assert tile_ratio(patch) == pytest.approx(13 / 8)
    patch = generate("p2", "single_kite", 8)
    assert abs(tile_ratio(patch) - PHI) < 0.002
    patch = generate("p3", "single_thin", 8)
    assert abs(tile_ratio(patch) - PHI) < 0.002


def test_ratio02():
    # No darts yet
    with pytest.raises(TilerRuleError):
        tile_ratio(generate("p2", "single_kite", 0))


def test_valid01():
    # Legal assemblies from each system
    cases = (("p2", "sun"), ("p2", "star"), ("p3", "single_thin"))
    for set_name, seed in cases:
        patch = generate(set_name, seed, 4)
        report = validate_patch(patch)
        assert report.is_valid, (set_name, seed)
        assert report.shared_edges > 0


def test_halves01():
    # Split and merge are inverses on whole tiles
    wholes = merge_halves(seed_patch("sun"))
    assert wholes.tile_counts() == {"kite": 5}
    halves = split_whole(wholes)
    assert halves.tile_counts() == {"half-kite": 10}
    assert merge_halves(halves).isclose(wholes)


def test_halves02():
    # Depth 0 is the merged seed
    patch = generate("p3", "single_thick", 0)
    assert patch.tile_counts() == {"thick": 1}
    assert deflate(patch, 0) is patch
    assert system_of(patch) == "p3"


def test_errors01():
    with pytest.raises(TilerValueError):
        generate("p9", "sun", 2)
    with pytest.raises(TilerValueError):
        generate("p3", "sun", 2)
    with pytest.raises(TilerValueError):
        generate("p2", "sun", -1)
    with pytest.raises(TilerValueError):
        seed_patch("moon")


def test_errors02():
    # Mixed systems
    patch = Patch([Placement("kite"), Placement("thin")])
    with pytest.raises(TilerRuleError):
        system_of(patch)
    with pytest.raises(TilerRuleError):
        system_of(Patch([Placement("square")]))
    with pytest.raises(TilerRuleError):
        system_of(Patch())
