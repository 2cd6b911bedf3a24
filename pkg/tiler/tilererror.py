r"""
``tilererror``: Errors for :mod:`tiler` modules
===========================================================

This module provides a collection of error types relevant to the
:mod:`tiler` package. They are essentially the same as standard error
types such as :class:`KeyError`, :class:`TypeError`, etc. but with an
extra parent of :class:`TilerError` to enable catching all errors
specifically raised by this package.

Errors coming from the tile-spec and patch parsers also carry a short
machine-readable *code* so that tests and scripts can tell error
classes apart without matching message text.
"""

# Standard library
import os


# Basic error family
class TilerError(Exception):
    r"""Parent error class for :mod:`tiler` errors

    Inherits from :class:`Exception`
    """
    pass


class TilerBudgetError(RuntimeError, TilerError):
    r"""Exception for searches or growth exceeding a node budget
    """
    pass


class TilerFileNotFoundError(FileNotFoundError, TilerError):
    r"""Exception for missing but required file

    Inherits from :class:`FileNotFoundError` and :class:`TilerError`
    """
    pass


class TilerGeometryError(ValueError, TilerError):
    r"""Exception for degenerate polygons, bad coordinates, or scales
    """
    pass


class TilerKeyError(KeyError, TilerError):
    r"""Exception for unknown tile ids, labels, built-ins, or motifs

    Inherits from :class:`KeyError` and :class:`TilerError`
    """
    def __str__(self) -> str:
        # Avoid the quotes that KeyError adds around its message
        return str(self.args[0]) if self.args else ""


class TilerRuleError(ValueError, TilerError):
    r"""Exception for generator preconditions that a tile cannot meet
    """
    pass


class TilerStructureError(ValueError, TilerError):
    r"""Exception for impossible patch structure, e.g. 3 tiles on 1 edge
    """
    pass


class TilerTypeError(TypeError, TilerError):
    r"""Exception for unexpected type of parameter in :mod:`tiler`
    """
    pass


class TilerValueError(ValueError, TilerError):
    r"""Exception for unexpected value of parameter in :mod:`tiler`
    """
    pass


class TilerParseError(ValueError, TilerError):
    r"""Base class for errors found while reading tile-spec or patch text

    :Call:
        >>> err = TilerParseError(msg, code, lineno=None, colno=None)
    :Inputs:
        *msg*: :class:`str`
            Human-readable description
        *code*: :class:`str`
            Machine-readable error class, e.g. ``"edge-count"``
        *lineno*: {``None``} | :class:`int`
            One-based line number of offending token
        *colno*: {``None``} | :class:`int`
            One-based column number of offending token
    """
    def __init__(self, msg: str, code: str, lineno=None, colno=None):
        # Save location info
        self.msg = msg
        self.code = code
        self.lineno = lineno
        self.colno = colno
        ValueError.__init__(self, self._genr8_msg())

    def _genr8_msg(self) -> str:
        # No location
        if self.lineno is None:
            return f"[{self.code}] {self.msg}"
        # Location w/o column
        if self.colno is None:
            return f"{self.lineno}: [{self.code}] {self.msg}"
        # Full location
        return f"{self.lineno}:{self.colno}: [{self.code}] {self.msg}"


class TilerSyntaxError(TilerParseError):
    r"""Exception for text that does not follow the file grammar
    """
    def __init__(self, msg: str, lineno=None, colno=None):
        TilerParseError.__init__(self, msg, "syntax", lineno, colno)


class TilerSemanticError(TilerParseError):
    r"""Exception for well-formed text describing an invalid tile set
    """
    pass


# Assert type of a variable
def assert_isinstance(obj, cls_or_tuple, desc=None):
    r"""Conveniently check types

    Applies ``isinstance(obj, cls_or_tuple)`` but also constructs
    a :class:`TypeError` and appropriate message if test fails

    :Call:
        >>> assert_isinstance(obj, cls, desc=None)
        >>> assert_isinstance(obj, cls_tuple, desc=None)
    :Inputs:
        *obj*: :class:`object`
            Object whose type is checked
        *cls*: :class:`type`
            Single permitted class
        *cls_tuple*: :class:`tuple`\ [:class:`type`]
            Tuple of allowed classes
    :Raises:
        :class:`TilerTypeError`
    """
    # Special case for ``None``
    if cls_or_tuple is None:
        return
    # Check for passed test
    if isinstance(obj, cls_or_tuple):
        return
    # Generate type error message
    msg = _genr8_type_error(obj, cls_or_tuple, desc)
    # Raise
    raise TilerTypeError(msg)


# Assert that file exists
def assert_isfile(fname: str):
    r"""Ensure that a file exists

    :Call:
        >>> assert_isfile(fname)
    :Inputs:
        *fname*: :class:`str`
            Name of a file
    :Raises:
        :class:`TilerFileNotFoundError` if *fname* does not exist
    """
    # Check for file
    if not os.path.isfile(fname):
        # Start message
        msg = f"File '{fname}' does not exist"
        # Check for absolute path
        if not os.path.isabs(fname):
            msg += f"\n  relative to '{os.getcwd()}'"
        raise TilerFileNotFoundError(msg)


# Create error message for type errors
def _genr8_type_error(obj, cls_or_tuple, desc=None):
    # Check for single type
    if isinstance(cls_or_tuple, tuple):
        # Multiple types
        names = [cls.__name__ for cls in cls_or_tuple]
    else:
        # Single type
        names = [cls_or_tuple.__name__]
    # Create error message
    if desc is None:
        msg1 = "G"
    else:
        msg1 = "For %s: g" % desc
    msg2 = "ot type '%s'; " % type(obj).__name__
    msg3 = "expected '%s'" % ("' | '".join(names))
    # Output
    return msg1 + msg2 + msg3
