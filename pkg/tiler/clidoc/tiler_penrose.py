from ..cli import HELP_PENROSE

__doc__ = HELP_PENROSE
