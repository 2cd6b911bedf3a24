
# Standard library
import os

# Third-party
import pytest

# Local imports
from tiler.tilererror import TilerKeyError, TilerSemanticError
from tiler.tilespec import (
    BUILTIN_NAMES,
    EdgeLabel,
    builtin_tileset,
    load_tileset,
    parse_tileset,
    read_tileset,
    serialize_tileset)


# This folder
THIS_DIR = os.path.dirname(os.path.abspath(__file__))

# Valid fixtures
VALID_FILES = (
    "valid_square.tiles",
    "valid_rules.tiles",
    "valid_attach.tiles",
    "valid_halves.tiles",
)


def test_roundtrip01():
    for fname in VALID_FILES:
        tileset = read_tileset(os.path.join(THIS_DIR, fname))
        text = serialize_tileset(tileset)
        tileset2 = parse_tileset(text)
        assert tileset2.isclose(tileset), fname
        # Canonical text is a fixed point
        assert serialize_tileset(tileset2) == text


def test_roundtrip02():
    for name in BUILTIN_NAMES:
        tileset = builtin_tileset(name)
        tileset2 = parse_tileset(serialize_tileset(tileset))
        assert tileset2.isclose(tileset), name


def test_builtin01():
    for name in BUILTIN_NAMES:
        tileset = load_tileset(name)
        assert tileset.name == name
        assert len(tileset.tiles) >= 1
    with pytest.raises(TilerKeyError):
        builtin_tileset("p9")


def test_builtin02():
    # Penrose sets carry whole tiles and halves
    p2 = builtin_tileset("p2")
    assert set(p2.ids()) == {"kite", "dart", "half-kite", "half-dart"}
    assert p2.tile("half-kite").half_of == "kite"
    assert sorted(p2.rules.substitutions) == ["half-dart", "half-kite"]
    p3 = builtin_tileset("p3")
    assert set(p3.ids()) == {"thick", "thin", "half-thick", "half-thin"}


def test_builtin03():
    # Square sets declare their mode
    assert builtin_tileset("square-swirl").rules.modes == ("swirl",)
    assert builtin_tileset("square-two-adjacent").rules.modes == (
        "two_adjacent",)
    rect = builtin_tileset("rect-multi").tiles[0]
    assert rect.shape.bbox() == (0.0, 0.0, 2.0, 1.0)


def test_label01():
    a = EdgeLabel.parse("A:plus")
    assert str(a) == "A:plus"
    assert a.mirrored() == EdgeLabel("A", "minus")
    assert a.mirrored().mirrored() == a
    s = EdgeLabel("B")
    assert s.polarity == "sym"
    assert s.mirrored() == s
    assert sorted([a, s, EdgeLabel("A", "minus")])[0] == EdgeLabel(
        "A", "minus")
    with pytest.raises(TilerSemanticError):
        EdgeLabel("A", "up")
    with pytest.raises(TilerSemanticError):
        EdgeLabel.parse("A-plus")
    with pytest.raises(AttributeError):
        a.name = "B"
