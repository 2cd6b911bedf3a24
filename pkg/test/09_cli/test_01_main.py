
# Standard library
import json
import os
import sys

# Local imports
from tiler.__main__ import main
from tiler.cli import (
    IERR_FAIL,
    IERR_OK,
    IERR_USAGE,
    tiler_penrose,
    tiler_stats)
from tiler.matcher import write_patch
from tiler.penrose import forged_patch, generate
from tiler.render import parse_use_transforms


def _run(monkeypatch, *args) -> int:
    monkeypatch.setattr(sys, "argv", ["tiler"] + list(args))
    return main()


def _write(fname, txt):
    with open(fname, "w") as fp:
        fp.write(txt)


def test_help01(monkeypatch, capsys):
    # No command
    assert _run(monkeypatch) == IERR_OK
    out = capsys.readouterr().out
    assert "tessellate" in out
    assert "USAGE" in out
    # Command help
    assert _run(monkeypatch, "penrose", "-h") == IERR_OK
    assert "--seed-kind" in capsys.readouterr().out


def test_usage01(monkeypatch, capsys):
    assert _run(monkeypatch, "spiral") == IERR_USAGE
    assert "Unexpected command 'spiral'" in capsys.readouterr().err
    assert _run(monkeypatch, "penrose", "--rows", "3") == IERR_USAGE
    assert "Unknown option '--rows'" in capsys.readouterr().err
    assert _run(monkeypatch, "penrose", "--set", "p9") == IERR_USAGE
    assert "TilerKeyError" in capsys.readouterr().err
    assert _run(monkeypatch, "penrose", "--depth", "deep") == IERR_USAGE
    assert "TilerValueError" in capsys.readouterr().err
    assert _run(monkeypatch, "tessellate") == IERR_USAGE


def test_penrose01(monkeypatch, capsys, tmp_path):
    fname = os.path.join(tmp_path, "p.svg")
    ierr = _run(
        monkeypatch, "penrose", "--set", "p2", "--seed-kind", "sun",
        "--depth", "4", "--out", fname)
    assert ierr == IERR_OK
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "penrose:" in captured.err
    with open(fname) as fp:
        svg = fp.read()
    uses = parse_use_transforms(svg)
    assert len(uses) == len(generate("p2", "sun", 4))


def test_penrose02(monkeypatch, capsys):
    # SVG to STDOUT, identical across runs
    assert _run(monkeypatch, "penrose", "--depth", "2", "-q") == IERR_OK
    captured = capsys.readouterr()
    assert captured.out.startswith("<?xml")
    assert captured.err == ""
    assert tiler_penrose(depth=2, quiet=True) == IERR_OK
    assert capsys.readouterr().out == captured.out


def test_validate01(monkeypatch, capsys, tmp_path):
    # Forged patch fails
    fname = os.path.join(tmp_path, "forged.patch")
    _write(fname, write_patch(forged_patch()))
    assert _run(monkeypatch, "validate", fname, "--tiles", "p2") == IERR_FAIL
    err = capsys.readouterr().err
    assert "valid: no" in err
    assert "edge_mismatches: 1" in err
    # Generated patch passes
    fname = os.path.join(tmp_path, "sun.patch")
    _write(fname, write_patch(generate("p2", "sun", 3)))
    assert _run(monkeypatch, "validate", fname, "--tiles", "p2") == IERR_OK
    assert "valid: yes" in capsys.readouterr().err


def test_validate02(monkeypatch, capsys, tmp_path):
    # Missing file, missing tile set, bad syntax
    fname = os.path.join(tmp_path, "bad.patch")
    assert _run(monkeypatch, "validate", fname, "--tiles", "p2") == \
        IERR_USAGE
    _write(fname, "patch v1\nplace kite 1 0 0 0\n")
    assert _run(monkeypatch, "validate", fname) == IERR_USAGE
    assert _run(monkeypatch, "validate", fname, "--tiles", "p2") == \
        IERR_USAGE
    assert "2:" in capsys.readouterr().err


def test_patchout01(monkeypatch, capsys, tmp_path):
    # Generator writes patch, which stats then reads
    patch_file = os.path.join(tmp_path, "kite.patch")
    svg_file = os.path.join(tmp_path, "kite.svg")
    ierr = _run(
        monkeypatch, "penrose", "--seed-kind", "single_kite", "--depth", "3",
        "--patch-out", patch_file, "-o", svg_file, "--stats")
    assert ierr == IERR_OK
    assert "count.kite: 13" in capsys.readouterr().err
    assert _run(
        monkeypatch, "stats", patch_file, "--tiles", "p2", "--json") == \
        IERR_OK
    rec = json.loads(capsys.readouterr().out)
    assert rec["counts"] == {"dart": 8, "kite": 13}
    assert abs(rec["ratio"] - 1.625) < 1e-12
    # Text stats to file
    out_file = os.path.join(tmp_path, "stats.txt")
    assert tiler_stats(patch_file, tiles="p2", out=out_file) == IERR_OK
    with open(out_file) as fp:
        nplace = len(generate("p2", "single_kite", 3))
        assert fp.readline() == f"placements: {nplace}\n"


def test_tessellate01(monkeypatch, capsys, tmp_path):
    ierr = _run(
        monkeypatch, "tessellate", "--builtin", "square-two-adjacent",
        "--rows", "3", "--cols", "2", "--choices", "10", "--labels")
    assert ierr == IERR_OK
    captured = capsys.readouterr()
    assert captured.out.count("<use ") == 6
    assert '<g class="labels"' in captured.out
    assert "two_adjacent" in captured.err
    # Mode from command line, with dashes
    ierr = _run(
        monkeypatch, "tessellate", "--builtin", "square-swirl",
        "--mode", "swirl", "--rows", "1", "--cols", "1", "-q")
    assert ierr == IERR_OK
    assert capsys.readouterr().out.count("<use ") == 4
    # Bad bit string and impossible mode
    ierr = _run(
        monkeypatch, "tessellate", "--builtin", "square-two-adjacent",
        "--choices", "12")
    assert ierr == IERR_USAGE
    ierr = _run(
        monkeypatch, "tessellate", "--builtin", "square-vitruvian",
        "--mode", "two-adjacent")
    assert ierr == IERR_FAIL


def test_tessellate02(monkeypatch, capsys, tmp_path):
    # Tile file plus style file
    tile_file = os.path.join(tmp_path, "sq.tiles")
    style_file = os.path.join(tmp_path, "style.yaml")
    _write(tile_file, (
        "tileset v1\n"
        "TILE sq\n  vertices 0 0  1 0  1 1  0 1\nEND\n"
        "EDGES sq\n  A:plus B:plus A:minus B:minus\nEND\n"))
    _write(style_file, "fills:\n  sq: '#123456'\n")
    ierr = _run(
        monkeypatch, "tessellate", "--tile", tile_file, "--rows", "2",
        "--style", style_file, "-q")
    assert ierr == IERR_OK
    svg = capsys.readouterr().out
    assert svg.count("<use ") == 8
    assert 'fill="#123456"' in svg
    # Bad tile file exits with usage error
    _write(tile_file, "tileset v2\n")
    assert _run(monkeypatch, "tessellate", "--tile", tile_file) == IERR_USAGE
    assert "[syntax]" in capsys.readouterr().err


def test_fractal01(monkeypatch, capsys):
    assert _run(monkeypatch, "fractal", "--depth", "3") == IERR_OK
    captured = capsys.readouterr()
    assert captured.out.count("<use ") == 15
    assert "collisions: 0" in captured.err
    # Triangle with random turns
    ierr = _run(
        monkeypatch, "fractal", "--builtin", "fractal-tri", "--depth", "2",
        "--swap-seed", "3", "-q")
    assert ierr == IERR_OK
    assert capsys.readouterr().out.count("<use ") == 7
    # Rectangle has no three-fold symmetry
    ierr = _run(monkeypatch, "fractal", "--swap-seed", "3", "--depth", "1")
    assert ierr == IERR_FAIL
    assert "TilerRuleError" in capsys.readouterr().err
    # Bad scale
    assert _run(monkeypatch, "fractal", "--scale", "1.5") == IERR_USAGE
