r"""
``clitext``: Turn reST help text into console text
===================================================

The help messages of :mod:`tiler.cli` are written in reST so that Sphinx
can include them in the manual. :func:`compile_rst` strips the markup
that reads poorly on a terminal and marks literals and emphasis with
ANSI escape codes.
"""

# Standard library
import re


# Regular expressions
REGEX_DIRECTIVE = re.compile(r"\.\. +[a-z-]+::")
REGEX_SECTION = re.compile(r":(\w[\w/ _-]*):\s*\n")
REGEX_ROLE = re.compile(r":(\w[\w/ _-]*):`([^`\n]+)`")
REGEX_STRONG = re.compile(r"\*\*(\w[\w ]*)\*\*")
REGEX_EMPH = re.compile(r"\*(\w[\w ]*)\*")
REGEX_LITERAL = re.compile(r"``([^`\n]*)``")

# ANSI codes
BOLD = "\x1b[1m"
ITALIC = "\x1b[3m"
PLAIN = "\x1b[0m"
BOLDITALIC = f"{BOLD}{ITALIC}"


def bold(txt: str) -> str:
    r"""Mark text as bold for the console"""
    return BOLD + txt + PLAIN


def italic(txt: str) -> str:
    r"""Mark text as italic for the console"""
    return ITALIC + txt + PLAIN


def bolditalic(txt: str) -> str:
    r"""Mark text as bold and italic for the console"""
    return BOLDITALIC + txt + PLAIN


def compile_rst(doc: str) -> str:
    r"""Convert reST help text to console text

    Section underlines are dropped, ``:Section:`` fields become upper
    case headings, ``.. code-block::`` directives are removed and their
    bodies dedented, and inline markup is replaced by ANSI styles.

    :Call:
        >>> txt = compile_rst(doc)
    :Inputs:
        *doc*: :class:`str`
            Multiline reST string
    :Outputs:
        *txt*: :class:`str`
            Text for the console
    """
    lines_in = doc.split("\n")
    lines_out = []
    i = 0
    while i < len(lines_in):
        line = lines_in[i]
        txt = line.strip()
        i += 1
        # Underlines and overlines of titles
        if len(txt) > 3 and txt[0] in "=-*#^" and txt == txt[0]*len(txt):
            continue
        if not REGEX_DIRECTIVE.match(txt):
            lines_out.append(line.rstrip())
            continue
        # Directive: skip blank line after it, dedent body
        indent = get_nstart(line, " ")
        while i < len(lines_in) and lines_in[i].strip() == "":
            i += 1
        shift = None
        while i < len(lines_in):
            body = lines_in[i]
            if body.strip() == "":
                lines_out.append("")
                i += 1
                continue
            ns = get_nstart(body, " ")
            if ns <= indent:
                break
            # Dedent to the directive's own level
            if shift is None:
                shift = ns - indent
            lines_out.append(body[shift:].rstrip())
            i += 1
    txt = "\n".join(lines_out)
    # Headings and roles
    txt = REGEX_SECTION.sub(lambda m: m.group(1).upper() + "\n\n", txt)
    txt = REGEX_ROLE.sub(
        lambda m: m.group(2) + "()" if m.group(1) == "func" else m.group(2),
        txt)
    # Inline markup
    txt = REGEX_STRONG.sub(lambda m: bolditalic(m.group(1)), txt)
    txt = REGEX_EMPH.sub(lambda m: italic(m.group(1)), txt)
    txt = REGEX_LITERAL.sub(lambda m: bold(m.group(1)), txt)
    return txt


def get_nstart(line: str, c: str) -> int:
    r"""Count instances of character *c* at start of *line*

    :Call:
        >>> nc = get_nstart(line, c)
    """
    return len(line) - len(line.lstrip(c))
