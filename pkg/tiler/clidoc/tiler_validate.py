from ..cli import HELP_VALIDATE

__doc__ = HELP_VALIDATE
