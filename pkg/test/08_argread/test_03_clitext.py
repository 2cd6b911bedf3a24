
# Local imports
from tiler.clitext import (
    BOLD,
    BOLDITALIC,
    ITALIC,
    PLAIN,
    compile_rst,
    get_nstart)


def test_clitext01():
    # Code block loses directive and blank line
    txt = ".. code-block:: console\n\n    $ tiler penrose\n\nsomething"
    assert compile_rst(txt) == "$ tiler penrose\n\nsomething"


def test_clitext02():
    # Inline markup
    assert compile_rst("**emph**") == f"{BOLDITALIC}emph{PLAIN}"
    assert compile_rst("*it*") == f"{ITALIC}it{PLAIN}"
    assert compile_rst("``--depth``") == f"{BOLD}--depth{PLAIN}"
    # Sections and roles
    assert compile_rst(":Usage:\n") == "USAGE\n\n"
    assert compile_rst(":func:`grow`") == "grow()"
    assert compile_rst(":class:`Patch`") == "Patch"
    # Title underline
    assert compile_rst("Title\n========") == "Title"


def test_nstart01():
    assert get_nstart("    x", " ") == 4
    assert get_nstart("x", " ") == 0
