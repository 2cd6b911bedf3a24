
# Third-party
import pytest

# Local imports
from tiler.argread import ArgReader, readkeys
from tiler.tilererror import TilerKeyError, TilerTypeError, TilerValueError


# Parser with aliases, converters, and a fixed option list
class DepthParser(ArgReader):
    __slots__ = ()

    _optmap = {
        "d": "depth",
        "q": "quiet",
    }

    _optlist_noval = (
        "quiet",
    )

    _optconverters = {
        "depth": int,
        "scale": float,
    }

    _optlist = (
        "depth",
        "quiet",
        "scale",
    )


def test_cls01():
    parser = DepthParser()
    a, kw = parser.parse(["tiler", "-d", "3", "-q", "fractal"])
    assert a == ["fractal"]
    assert kw == {
        "depth": 3,
        "quiet": True,
        "__replaced__": [],
    }
    assert parser.prog == "tiler"
    assert parser.param_sequence == [
        ("depth", "3"),
        ("quiet", True),
        (None, "fractal"),
    ]


def test_cls02():
    parser = DepthParser()
    a, kw = parser.parse(["tiler", "scale=0.25", "--no-quiet"])
    assert kw["scale"] == 0.25
    assert kw["quiet"] is False
    # Parse again starts fresh
    a, kw = parser.parse(["tiler"])
    assert a == []
    assert kw == {"__replaced__": []}


def test_cls03():
    parser = DepthParser()
    with pytest.raises(TilerValueError):
        parser.parse(["tiler", "--depth", "three"])
    with pytest.raises(TilerKeyError):
        parser.parse(["tiler", "--size", "3"])


def test_bad_argv():
    with pytest.raises(TilerTypeError):
        readkeys("tiler -cj")
    with pytest.raises(TypeError):
        readkeys(["tiler", "-cj", True])


def test_empty_argv():
    with pytest.raises(TilerValueError):
        readkeys([])
