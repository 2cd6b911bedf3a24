r"""
``tiler`` builds tilings from polygons with labeled edges. It provides
an API for tile sets (:mod:`tiler.tilespec`), patch checking
(:mod:`tiler.matcher`), periodic tessellations (:mod:`tiler.periodic`),
Penrose deflation (:mod:`tiler.penrose`), fractal tile trees
(:mod:`tiler.fractal`), and SVG output (:mod:`tiler.render`), as well
as a command-line interface (see :mod:`tiler.cli`).

Two tiles may share a side only if the side labels match: ``plus``
meets ``minus`` of the same name, and ``sym`` meets ``sym``.
"""

# Local imports
from .geometry import Polygon, Transform, compose
from .matcher import Patch, Placement, validate_patch
from .tilespec import TileSet, load_tileset
