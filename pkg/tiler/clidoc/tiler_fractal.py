from ..cli import HELP_FRACTAL

__doc__ = HELP_FRACTAL
