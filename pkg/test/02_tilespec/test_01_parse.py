
# Standard library
import os

# Third-party
import pytest

# Local imports
from tiler.geometry import Transform
from tiler.tilererror import (
    TilerFileNotFoundError,
    TilerSemanticError,
    TilerSyntaxError,
    TilerTypeError)
from tiler.tilespec import (
    EdgeLabel,
    labels,
    parse_tileset,
    read_tileset)


# This folder
THIS_DIR = os.path.dirname(os.path.abspath(__file__))

# Expected error for each bad file: class, code, line, column
ERRORS = {
    "err_header.tiles": (TilerSyntaxError, "syntax", 1, 9),
    "err_polarity.tiles": (TilerSyntaxError, "syntax", 6, 9),
    "err_eof.tiles": (TilerSyntaxError, "syntax", 3, None),
    "err_unknown_id.tiles": (TilerSemanticError, "unknown-id", 5, 7),
    "err_edge_count.tiles": (TilerSemanticError, "edge-count", 2, None),
    "err_symmetry.tiles": (TilerSemanticError, "symmetry", 2, None),
    "err_duplicate_id.tiles": (TilerSemanticError, "duplicate-id", 5, 6),
    "err_scale.tiles": (TilerSemanticError, "scale", None, None),
    "err_fraction.tiles": (TilerSemanticError, "fraction", 9, 3),
    "err_unknown_label.tiles": (
        TilerSemanticError, "unknown-label", None, None),
    "err_polygon.tiles": (TilerSemanticError, "polygon", 2, None),
}


def _read(fname):
    return read_tileset(os.path.join(THIS_DIR, fname))


def test_valid01():
    tileset = _read("valid_square.tiles")
    assert tileset.ids() == ["square"]
    tile = tileset.tile("square")
    assert tile.edges == tuple(
        labels("A:plus", "B:plus", "A:minus", "B:minus"))
    assert tile.motif == "figure"
    assert tile.symmetry == 1
    assert tile.shape.area() == pytest.approx(1.0)
    rules = tileset.rules
    assert rules.modes == ("translation",)
    assert rules.is_compatible(EdgeLabel("A", "plus"), EdgeLabel("A", "minus"))
    assert not rules.is_compatible(
        EdgeLabel("A", "plus"), EdgeLabel("A", "plus"))
    assert not rules.is_compatible(
        EdgeLabel("A", "plus"), EdgeLabel("B", "minus"))


def test_valid02():
    tileset = _read("valid_rules.tiles")
    tile = tileset.tile("sq")
    assert tile.symmetry == 4
    assert len(tile.edges) == 4
    rules = tileset.rules
    assert not rules.default
    assert rules.modes == ("translation", "swirl")
    # Explicit pair survives "nodefault"
    a = EdgeLabel("A", "sym")
    assert rules.is_compatible(a, a)
    sym = EdgeLabel("B", "sym")
    assert not rules.is_compatible(sym, sym)
    # Substitution
    children = rules.substitutions["sq"]
    assert len(children) == 4
    assert rules.substitution_scale() == 0.5
    assert children[3][1].isclose(Transform(0.5, 0, False, (0.5, 0.5)))


def test_valid03():
    tileset = _read("valid_attach.tiles")
    atts = tileset.rules.attachments["rect"]
    assert len(atts) == 2
    assert atts[0].frac == (0.0, 0.5)
    assert atts[0].child_edge == 1
    assert atts[0].relative.reflect
    assert not atts[1].relative.reflect
    assert atts[1].relative.rotation == 270.0


def test_valid04():
    tileset = _read("valid_halves.tiles")
    assert tileset.tile("half").half_of == "whole"
    assert tileset.tile("whole").half_of is None


def test_errors01():
    for fname, (cls, code, lineno, colno) in ERRORS.items():
        with pytest.raises(cls) as excinfo:
            _read(fname)
        err = excinfo.value
        assert err.code == code, fname
        if lineno is not None:
            assert err.lineno == lineno, fname
        if colno is not None:
            assert err.colno == colno, fname


def test_errors02():
    # Message carries location and code
    with pytest.raises(TilerSemanticError) as excinfo:
        _read("err_unknown_id.tiles")
    assert str(excinfo.value).startswith("5:7: [unknown-id]")


def test_errors03():
    with pytest.raises(TilerFileNotFoundError):
        read_tileset(os.path.join(THIS_DIR, "no_such_file.tiles"))
    with pytest.raises(TilerTypeError):
        parse_tileset(None)
    with pytest.raises(TilerSyntaxError):
        parse_tileset("")
    with pytest.raises(TilerSyntaxError):
        parse_tileset("tileset v1\nSHAPE x\nEND\n")


def test_errors04():
    # Syntax errors inside statements
    base = "tileset v1\nTILE t\n  vertices 0 0  1 0  0 1\n"
    with pytest.raises(TilerSyntaxError):
        parse_tileset(base + "  symmetry two\nEND\n")
    with pytest.raises(TilerSyntaxError):
        parse_tileset(base + "  vertices 0 0 1\nEND\n")
    with pytest.raises(TilerSyntaxError):
        parse_tileset(base + "END\nRULES\n  mode spiral\nEND\n")
    with pytest.raises(TilerSyntaxError):
        parse_tileset(base + "END extra\n")
