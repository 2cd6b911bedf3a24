
# Third-party
import pytest

# Local imports
from tiler.geometry import Transform
from tiler.matcher import (
    Patch,
    Placement,
    build_adjacency,
    edges_compatible,
    find_overlaps,
    mirror_patch,
    placed_edges,
    validate_patch)
from tiler.tilererror import (
    TilerKeyError,
    TilerStructureError,
    TilerValueError)
from tiler.tilespec import EdgeLabel, builtin_tileset


# Square with A+ B+ A- B- labels
TILESET = builtin_tileset("square-vitruvian")
TILE_ID = "square-vitruvian"


def _place(*poses) -> Patch:
    return Patch([Placement(TILE_ID, pose) for pose in poses], TILESET)


def _shift(tx, ty, **kw) -> Transform:
    return Transform(translation=(tx, ty), **kw)


def test_pair01():
    # Side by side: B+ meets B-
    patch = _place(_shift(0, 0), _shift(1, 0))
    adj = build_adjacency(patch)
    assert len(adj) == 1
    assert list(adj.pairs.values()) == [((0, 1), (1, 3))]
    assert adj.partial == []
    report = validate_patch(patch)
    assert report.is_valid
    assert report.shared_edges == 1
    assert report.tile_counts == {TILE_ID: 2}


def test_pair02():
    # Second copy turned half way: B+ meets B+
    patch = _place(_shift(0, 0), _shift(2, 1, rotation=180.0))
    report = validate_patch(patch)
    assert not report.is_valid
    assert len(report.edge_mismatches) == 1
    (key, (la, lb)), = report.edge_mismatches
    assert key == ((0, 1), (1, 1))
    assert la == lb == EdgeLabel("B", "plus")
    assert report.overlaps == []
    txt = report.summary()
    assert "valid: no\n" in txt
    assert "edge_mismatches: 1\n" in txt
    assert f"count.{TILE_ID}: 2\n" in txt
    assert "mismatch: 0.1 B:plus <-> 1.1 B:plus\n" in txt


def test_overlap01():
    # Half-unit shift overlaps by half a square
    patch = _place(_shift(0, 0), _shift(0.5, 0))
    overlaps = find_overlaps(patch)
    assert len(overlaps) == 1
    (pair, area), = overlaps
    assert pair == (0, 1)
    assert area == pytest.approx(0.5)
    report = validate_patch(patch)
    assert not report.is_valid
    assert "overlap: 0 1 0.500000\n" in report.summary()


def test_overlap02():
    # Corner contact is neither overlap nor shared side
    patch = _place(_shift(0, 0), _shift(1, 1))
    report = validate_patch(patch)
    assert report.is_valid
    assert report.shared_edges == 0
    assert report.partial_contacts == 0


def test_partial01():
    # Half-unit vertical offset gives a partial contact
    patch = _place(_shift(0, 0), _shift(1, 0.5))
    adj = build_adjacency(patch)
    assert len(adj) == 0
    assert len(adj.partial) == 1
    a, b, length = adj.partial[0]
    assert (a, b) == ((0, 1), (1, 3))
    assert length == pytest.approx(0.5)


def test_claims01():
    # Two copies on the same spot both claim the shared side
    patch = _place(_shift(0, 0), _shift(1, 0), _shift(1, 0))
    with pytest.raises(TilerStructureError):
        build_adjacency(patch)
    # Validation still reports
    report = validate_patch(patch)
    assert report.overlaps == [((1, 2), pytest.approx(1.0))]


def test_edges01():
    # Reflected placement swaps traversal and polarity
    pose = Transform(reflect=True)
    edges = placed_edges(Placement(TILE_ID, pose), TILESET)
    assert len(edges) == 4
    assert edges[0].label == EdgeLabel("A", "minus")
    assert edges[0].start == pytest.approx((1.0, 0.0))
    assert edges[0].end == pytest.approx((0.0, 0.0))
    assert edges[1].length() == pytest.approx(1.0)


def test_compat01():
    rules = TILESET.rules
    known = TILESET.labels()
    a = EdgeLabel("A", "plus")
    b = EdgeLabel("A", "minus")
    assert edges_compatible(a, b, rules, known)
    assert not edges_compatible(a, a, rules, known)
    with pytest.raises(TilerKeyError):
        edges_compatible(a, EdgeLabel("Z"), rules, known)


def test_mirror01():
    patch = _place(_shift(0, 0), _shift(1, 0))
    for axis in ("x", "y"):
        patch2 = mirror_patch(patch, axis)
        assert len(patch2) == 2
        assert all(p.pose.reflect for p in patch2)
        report = validate_patch(patch2)
        assert report.is_valid
        assert report.shared_edges == 1
    with pytest.raises(TilerValueError):
        mirror_patch(patch, "z")


def test_patch01():
    patch = _place(_shift(0, 0))
    assert patch.tile_counts() == {TILE_ID: 1}
    # No tile set anywhere
    with pytest.raises(TilerValueError):
        validate_patch(Patch(patch.placements))
    # Tree annotation must match placements
    with pytest.raises(TilerValueError):
        Patch(patch.placements, TILESET, nodes=[])
    # Unknown tile
    with pytest.raises(TilerKeyError):
        validate_patch(Patch([Placement("nope")], TILESET))
