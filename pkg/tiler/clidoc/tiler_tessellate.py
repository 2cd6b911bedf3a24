from ..cli import HELP_TESSELLATE

__doc__ = HELP_TESSELLATE
