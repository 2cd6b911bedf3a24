from ..cli import HELP_STATS

__doc__ = HELP_STATS
