r"""
``argread``: Parse command-line arguments and options
======================================================

This module provides :class:`ArgReader`, a :class:`dict` subclass that
splits a list of command-line strings into positional arguments and
named options. Subclasses customize it through class attributes:

``_optmap``
    Aliases, e.g. ``{"q": "quiet"}`` so ``-q`` means ``--quiet``

``_optlist_noval``
    Options that never take a value

``_optconverters``
    Functions converting option strings, e.g. ``{"depth": int}``

``_optlist``
    Allowed option names; empty means anything goes

Beyond ``--key val`` and ``-key val``, two more forms are understood:
``key=val`` and ``--no-key``, the latter meaning ``key=False``.

.. code-block:: pycon

    >>> readkeys(["tiler", "penrose", "--set", "p2", "depth=3"])
    (["penrose"], {"set": "p2", "depth": "3", "__replaced__": []})

Negative numbers such as ``-1.5`` are read as values, not options.
"""

# Standard library
import re
import sys

# Local imports
from .tilererror import TilerKeyError, TilerValueError, assert_isinstance


# Regular expression for options like "depth=3"
REGEX_EQUALKEY = re.compile(r"([A-Za-z_]\w*)=(.*)")
# Regular expression for negative numbers
REGEX_NUMBER = re.compile(r"-(\d+\.?\d*|\.\d+)([eE][-+]?\d+)?\Z")


# Argument read class
class ArgReader(dict):
    r"""Class to parse command-line interface arguments

    :Call:
        >>> parser = ArgReader()
        >>> a, kw = parser.parse(argv)
    :Attributes:
        * :attr:`argv`
        * :attr:`prog`
        * :attr:`argvals`
        * :attr:`kwargs_replaced`
        * :attr:`param_sequence`
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "argv",
        "prog",
        "argvals",
        "kwargs_replaced",
        "param_sequence",
    )

    #: Aliases for option names
    _optmap = {}

    #: Options that cannot take a value
    _optlist_noval = ()

    #: Conversion functions for option values
    _optconverters = {}

    #: Allowed option names; empty for no restriction
    _optlist = ()

    #: Option to interpret ``-lh`` as ``{"l": True, "h": True}``
    single_dash_split = False

   # --- __dunder__ ---
    def __init__(self):
        dict.__init__(self)
        #: :class:`list`\ [:class:`str`] -- Raw CLI strings parsed
        self.argv = []
        #: :class:`str` -- Name of program read from ``argv[0]``
        self.prog = None
        #: :class:`list`\ [:class:`str`] -- Positional arguments
        self.argvals = []
        #: :class:`list` -- Options overwritten by later values
        self.kwargs_replaced = []
        #: :class:`list` -- Option name and value in original order
        self.param_sequence = []

   # --- Parse ---
    def parse(self, argv=None):
        r"""Split *argv* into positional arguments and options

        :Call:
            >>> a, kw = parser.parse(argv=None)
        :Inputs:
            *argv*: {``None``} | :class:`list`\ [:class:`str`]
                Program name followed by its arguments; ``sys.argv`` if
                ``None``
        :Outputs:
            *a*: :class:`list`\ [:class:`str`]
                Positional arguments
            *kw*: :class:`dict`
                Options; ``kw["__replaced__"]`` holds earlier values of
                repeated options
        :Raises:
            * :class:`TilerTypeError` if *argv* is not a list of strings
            * :class:`TilerValueError` if *argv* is empty or a converter
              fails
            * :class:`TilerKeyError` for a disallowed option
        """
        tokens = self._check_argv(argv)
        self._reset(tokens)
        if not tokens:
            raise TilerValueError(
                "Cannot parse an empty argv; it must start with the "
                "program name")
        self.prog = tokens.pop(0)
        while tokens:
            self._consume(tokens)
        return self.get_args()

    def _check_argv(self, argv) -> list:
        # Copy of argv after type checks
        if argv is None:
            return list(sys.argv)
        assert_isinstance(argv, list, "'argv'")
        for n, item in enumerate(argv):
            assert_isinstance(item, str, f"argument {n}")
        return list(argv)

    def _reset(self, tokens: list):
        self.clear()
        self.argv = list(tokens)
        self.prog = None
        self.argvals = []
        self.kwargs_replaced = []
        self.param_sequence = []

    def _consume(self, tokens: list):
        # Read one token, and its value if it takes one
        kind, name, value, flags = self._parse_arg(tokens.pop(0))
        for flag in flags:
            self._save(flag, True)
        if kind in ("", "="):
            self._save(name, value)
        elif not name:
            # Bare "-" or "--"
            return
        elif name.startswith("no-"):
            self._save(name[3:], False)
        else:
            name = self._optmap.get(name, name)
            self._save(name, self._take_value(name, tokens))

    def _take_value(self, name: str, tokens: list):
        # Next token is the value unless it is another option
        if name in self._optlist_noval or not tokens:
            return True
        if self._parse_arg(tokens[0])[0] != "":
            return True
        return tokens.pop(0)

    def get_args(self):
        r"""Return positional arguments and options read so far

        :Call:
            >>> a, kw = parser.get_args()
        """
        kwargs = dict(self)
        kwargs["__replaced__"] = [tuple(opt) for opt in self.kwargs_replaced]
        return list(self.argvals), kwargs

    def _parse_arg(self, arg: str):
        # Classify one token as (kind, name, value, flags) where kind is
        # "" (positional), "=" (key=val), "-", or "--"
        found = REGEX_EQUALKEY.match(arg)
        if found is not None:
            return ("=",) + found.groups() + ("",)
        if REGEX_NUMBER.match(arg) or arg[:1] != "-":
            return "", None, arg, ""
        if arg[:2] == "--":
            return "--", arg[2:], None, ""
        if self.single_dash_split and len(arg) > 2:
            return "-", None, None, arg[1:]
        return "-", arg[1:], None, ""

   # --- Save ---
    def _save(self, name, value):
        self.param_sequence.append((name, value))
        # Positional argument
        if name is None:
            self.argvals.append(value)
            return
        opt, val = self.validate_opt(name, value)
        if opt in self:
            self.kwargs_replaced.append((opt, self[opt]))
        self[opt] = val

    def validate_opt(self, opt: str, val):
        r"""Apply aliases, check option name, and convert value

        :Call:
            >>> opt, val = parser.validate_opt(rawopt, rawval)
        """
        opt = self._optmap.get(opt, opt)
        # Check allowed options
        if self._optlist and opt not in self._optlist:
            raise TilerKeyError(
                f"Unknown option '{opt}'; options are: " +
                " ".join(f"--{o}" for o in self._optlist))
        # Convert strings
        fn = self._optconverters.get(opt)
        if fn is not None and isinstance(val, str):
            try:
                val = fn(val)
            except ValueError:
                raise TilerValueError(
                    f"Invalid value {val!r} for option '{opt}'")
        return opt, val


# Class with single_dash_split=True
class FlagsArgReader(ArgReader):
    r"""Subclass of :class:`ArgReader` where ``-lh`` means two flags"""
    __slots__ = ()
    single_dash_split = True


def readkeys(argv=None):
    r"""Parse args where ``-cj`` becomes ``cj=True``

    :Call:
        >>> a, kw = readkeys(argv=None)
    """
    return ArgReader().parse(argv)


def readflags(argv=None):
    r"""Parse args where ``-cj`` becomes ``c=True, j=True``

    :Call:
        >>> a, kw = readflags(argv=None)
    """
    return FlagsArgReader().parse(argv)
