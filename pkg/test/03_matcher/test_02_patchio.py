
# Standard library
import os

# Third-party
import pytest

# Local imports
from tiler.geometry import Transform
from tiler.matcher import (
    Patch,
    Placement,
    parse_patch,
    read_patch,
    write_patch)
from tiler.tilererror import (
    TilerFileNotFoundError,
    TilerSemanticError,
    TilerSyntaxError)
from tiler.tilespec import builtin_tileset


# Tile set for checks
TILESET = builtin_tileset("p2")


def _patch() -> Patch:
    return Patch([
        Placement("kite", Transform(1.0, 36.0, False, (0.25, -1.5))),
        Placement("dart", Transform(0.5, 324.0, True, (1.0 / 3, 2.0))),
    ])


def test_write01():
    text = write_patch(_patch())
    lines = text.splitlines()
    assert lines[0] == "patch v1"
    assert lines[1] == "place kite 1.0 36.0 0 0.25 -1.5"
    assert lines[2].startswith("place dart 0.5 324.0 1 0.333")
    # Parse back
    patch = parse_patch(text, TILESET)
    assert patch.isclose(_patch(), 0.0)
    assert patch.tileset is TILESET


def test_read01(tmp_path):
    fname = os.path.join(tmp_path, "p.patch")
    with open(fname, "w") as fp:
        fp.write("# comment\npatch v1\n\nplace kite 1 0 0 0 0  # origin\n")
    patch = read_patch(fname)
    assert len(patch) == 1
    assert patch.placements[0] == Placement("kite")
    with pytest.raises(TilerFileNotFoundError):
        read_patch(os.path.join(tmp_path, "missing.patch"))


def test_errors01():
    cases = (
        ("", 1, 1),
        ("patch v2\n", 1, 1),
        ("patch v1\nput kite 1 0 0 0 0\n", 2, 1),
        ("patch v1\nplace kite 1 0 0 0\n", 2, 19),
        ("patch v1\nplace kite 1 0 0 0 0 9\n", 2, 22),
        ("patch v1\nplace kite 1 0 2 0 0\n", 2, 16),
        ("patch v1\nplace kite 1 0 0 x 0\n", 2, 18),
    )
    for text, lineno, colno in cases:
        with pytest.raises(TilerSyntaxError) as excinfo:
            parse_patch(text)
        assert excinfo.value.lineno == lineno, text
        assert excinfo.value.colno == colno, text


def test_errors02():
    # Unknown tile id when a tile set is given
    with pytest.raises(TilerSemanticError) as excinfo:
        parse_patch("patch v1\nplace rhomb 1 0 0 0 0\n", TILESET)
    assert excinfo.value.code == "unknown-id"
    assert excinfo.value.colno == 7
    # Same text is fine without a tile set
    assert len(parse_patch("patch v1\nplace rhomb 1 0 0 0 0\n")) == 1
    # Nonpositive scale
    with pytest.raises(TilerSemanticError) as excinfo:
        parse_patch("patch v1\nplace kite 0 0 0 0 0\n")
    assert excinfo.value.code == "scale"
