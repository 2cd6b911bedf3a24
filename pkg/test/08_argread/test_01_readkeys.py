
# Local imports
from tiler.argread import readflags, readkeys


def test_readkeys01():
    a, kw = readkeys(["tiler", "-cj"])
    assert a == []
    assert kw == {
        "cj": True,
        "__replaced__": [],
    }


def test_readkeys02():
    a, kw = readkeys(["tiler", "penrose", "--set", "p3", "fractal"])
    assert a == ["penrose", "fractal"]
    assert kw == {
        "set": "p3",
        "__replaced__": [],
    }


def test_readkeys03():
    a, kw = readkeys(["tiler", "stats", "-v", "--json", "--no-labels"])
    assert a == ["stats"]
    assert kw == {
        "v": True,
        "json": True,
        "labels": False,
        "__replaced__": [],
    }


def test_readkeys04():
    a, kw = readkeys(["tiler", "penrose", "depth=5", "set=p2"])
    assert a == ["penrose"]
    assert kw == {
        "depth": "5",
        "set": "p2",
        "__replaced__": [],
    }


def test_readkeys05():
    argv = ["tiler", "--depth", "1", "--depth", "2", "--depth", "3"]
    a, kw = readkeys(argv)
    assert a == []
    assert kw == {
        "depth": "3",
        "__replaced__": [
            ("depth", "1"),
            ("depth", "2"),
        ],
    }


def test_readkeys06():
    # Negative numbers are values
    a, kw = readkeys(["tiler", "--scale", "-0.5", "-3", "--x", "-1e-3"])
    assert a == ["-3"]
    assert kw == {
        "scale": "-0.5",
        "x": "-1e-3",
        "__replaced__": [],
    }


def test_readflags01():
    a, kw = readflags(["tiler", "-cj"])
    assert a == []
    assert kw == {
        "c": True,
        "j": True,
        "__replaced__": [],
    }


def test_readflags02():
    a, kw = readflags(["tiler", "a", "--rows", "2", "b", "-q"])
    assert a == ["a", "b"]
    assert kw == {
        "rows": "2",
        "q": True,
        "__replaced__": [],
    }
