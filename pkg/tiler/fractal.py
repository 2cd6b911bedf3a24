r"""
``fractal``: Self-similar tile trees
======================================

A fractal tile tree starts from one root tile. Each node spawns one
child per :class:`FractalAttachment` of its tile, and each child's pose
is the parent's pose composed with the attachment's relative transform.
Because the relative scale *s* is below 1, the tree stays bounded, but
whether its branches stay apart depends on *s*.

Two built-in tile sets are provided:

``fractal-rect``
    A 2 x 1/2 rectangle whose right side ``A:plus`` is the attaching
    side. Its top is split into three collinear sides; the outer two
    are sites exactly as long as a child's attaching side. The right
    site carries a mirrored child turned 90 degrees counter-clockwise,
    and the left site a child turned 90 degrees clockwise. Both children
    face inward, so at *s* = 1/2 the branches never meet.

``fractal-tri``
    An equilateral triangle with three-fold symmetry. A mirrored child
    hangs below the bottom side and a child turned 60 degrees sits on
    the right side, both centered, at *s* = 2/3. At that scale the
    branches collide.

:func:`detect_collisions` reports overlapping node pairs, and
:func:`max_safe_scale` bisects for the largest collision-free scale.
"""

# Standard library
import math

# Third-party
import numpy as np

# Local imports
from .geometry import (
    EPS,
    SNAP_GRID,
    Polygon,
    Transform,
    clip_convex,
    compose,
    similarity_from_segment)
from .matcher import Patch, Placement, find_overlaps, placed_polygon
from .tilererror import (
    TilerBudgetError,
    TilerRuleError,
    TilerValueError)
from .tilespec import (
    FractalAttachment,
    RuleSet,
    TileProto,
    TileSet,
    labels)


# Default maximum number of tree nodes
NODE_BUDGET = 100_000
# Number of bisection steps in max_safe_scale()
BISECT_ITERS = 12
# Default child scales of built-ins
RECT_SCALE = 0.5
TRI_SCALE = 2.0 / 3.0


# Tree node
class FractalNode(object):
    r"""One node of a fractal tile tree

    :Call:
        >>> node = FractalNode(placement, depth, parent=None, site=None)
    :Inputs:
        *placement*: :class:`Placement`
            Placed tile
        *depth*: :class:`int`
            Generation; 0 for the root
        *parent*: {``None``} | :class:`FractalNode`
            Parent node
        *site*: {``None``} | :class:`FractalAttachment`
            Attachment of *parent* that produced this node
        *index*: {``0``} | :class:`int`
            Position in breadth-first order
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "placement",
        "depth",
        "parent",
        "site",
        "index",
    )

   # --- __dunder__ ---
    def __init__(self, placement, depth, parent=None, site=None, index=0):
        self.placement = placement
        self.depth = depth
        self.parent = parent
        self.site = site
        self.index = index

    def __repr__(self) -> str:
        return f"<FractalNode {self.index} depth={self.depth}>"


# Collision results
class CollisionReport(object):
    r"""Overlapping node pairs of a tile tree

    :Attributes:
        *pairs*: :class:`list`
            Entries ``(i, j, area)`` of node indices, ``i < j``
        *first_depth*: ``None`` | :class:`int`
            Smallest depth at which a collision appears, i.e. the minimum
            over pairs of the deeper node's depth
    """
   # --- Class attributes ---
    # List of instance attributes
    __slots__ = (
        "pairs",
        "first_depth",
    )

   # --- __dunder__ ---
    def __init__(self, pairs=(), first_depth=None):
        self.pairs = list(pairs)
        self.first_depth = first_depth

    def __len__(self) -> int:
        return len(self.pairs)

    def __bool__(self) -> bool:
        return len(self.pairs) > 0

    def __repr__(self) -> str:
        return (
            f"<CollisionReport pairs={len(self.pairs)} "
            f"first_depth={self.first_depth}>")



def fractal_rect_tileset(scale: float = RECT_SCALE) -> TileSet:
    r"""Build the ``fractal-rect`` tile set

    The top of the rectangle is split into three collinear sides. The
    outer two are the attachment sites, each as long as a child's
    attaching side, so parent and child share a whole edge.

    :Call:
        >>> tileset = fractal_rect_tileset(scale=0.5)
    :Inputs:
        *scale*: {``0.5``} | :class:`float`
            Child scale, in (0, 1)
    :Outputs:
        *tileset*: :class:`TileSet`
            One tile ``fractal-rect`` with two attachments
    """
    if not (0.0 < scale < 1.0):
        raise TilerValueError(f"Child scale must be in (0, 1); got {scale}")
    # Length of a child's attaching side
    w = 0.5*scale
    tile = TileProto(
        "fractal-rect",
        Polygon([
            (0, 0), (2, 0), (2, 0.5), (2 - w, 0.5), (w, 0.5), (0, 0.5)]),
        labels("B:sym", "A:plus", "A:plus", "B:sym", "A:minus", "B:sym"),
        motif="fractal-rect")
    # Right end of top: mirrored, then turned counter-clockwise
    first = site_attachment(tile, 2, (0.0, 1.0), tile, 1, reflect=True)
    # Left end: turned clockwise
    second = site_attachment(tile, 4, (0.0, 1.0), tile, 1)
    return TileSet(
        [tile], RuleSet(attachments={tile.id: [first, second]}),
        name="fractal-rect")


def fractal_tri_tileset(scale: float = TRI_SCALE) -> TileSet:
    r"""Build the ``fractal-tri`` tile set

    The attaching side is side 2. A mirrored child is centered on side 0
    and a child turned 60 degrees is centered on side 1.

    :Call:
        >>> tileset = fractal_tri_tileset(scale=2/3)
    """
    h = math.sqrt(3.0) / 2.0
    tile = TileProto(
        "fractal-tri",
        Polygon([(0, 0), (1, 0), (0.5, h)]),
        labels("T:sym", "T:sym", "T:sym"),
        motif="fractal-tri", symmetry=3)
    frac = (0.5 - 0.5*scale, 0.5 + 0.5*scale)
    atts = [
        site_attachment(tile, 0, frac, tile, 2, reflect=True),
        site_attachment(tile, 1, frac, tile, 2),
    ]
    return TileSet(
        [tile], RuleSet(attachments={tile.id: atts}), name="fractal-tri")


def site_attachment(
        parent: TileProto, edge: int, frac: tuple, child: TileProto,
        child_edge: int, reflect: bool = False) -> FractalAttachment:
    r"""Make an attachment whose child side covers its site exactly

    :Call:
        >>> att = site_attachment(parent, edge, frac, child, child_edge)
    :Inputs:
        *parent*: :class:`TileProto`
            Tile hosting the site
        *edge*: :class:`int`
            Side of *parent* holding the site
        *frac*: :class:`tuple`\ [:class:`float`]
            Start and end of the site along *edge*
        *child*: :class:`TileProto`
            Attached tile
        *child_edge*: :class:`int`
            Side of *child* glued onto the site
        *reflect*: ``True`` | {``False``}
            Whether the child is mirrored
    :Outputs:
        *att*: :class:`FractalAttachment`
            Attachment with the relative transform implied by the site
    """
    p, q = _site_points(parent, edge, frac)
    c0, c1 = child.shape.edge(child_edge)
    # Glued sides run opposite unless the child is mirrored
    if reflect:
        rel = similarity_from_segment(c0, c1, p, q, reflect=True)
    else:
        rel = similarity_from_segment(c0, c1, q, p)
    return FractalAttachment(edge, frac, child.id, rel, child_edge)


def _site_points(tile: TileProto, edge: int, frac: tuple) -> tuple:
    # End points of a site in tile coordinates
    a, b = (np.array(x, dtype=float) for x in tile.shape.edge(edge))
    f0, f1 = frac
    return tuple(a + f0*(b - a)), tuple(a + f1*(b - a))


def with_scale(tileset: TileSet, scale: float) -> TileSet:
    r"""Change the scale of every attachment of a tile set

    The built-in ``fractal-rect`` set is rebuilt, because its sites are
    sides of the tile itself. Otherwise each child is rescaled about the
    point where its attaching side starts, which stays fixed on the
    parent's side, and the site fraction range is updated to match.

    :Call:
        >>> tileset2 = with_scale(tileset, scale)
    :Inputs:
        *tileset*: :class:`TileSet`
            Tile set with attachments
        *scale*: :class:`float`
            New child scale, in (0, 1)
    :Outputs:
        *tileset2*: :class:`TileSet`
            Copy with rescaled attachments
    """
    if not (0.0 < scale < 1.0):
        raise TilerValueError(f"Child scale must be in (0, 1); got {scale}")
    if tileset.name == "fractal-rect":
        return fractal_rect_tileset(scale)
    attachments = {}
    for parent, atts in tileset.rules.attachments.items():
        ptile = tileset.tile(parent)
        attachments[parent] = []
        for att in atts:
            ctile = tileset.tile(att.child_tile)
            rel = att.relative
            # Fixed point: start of child's attaching side
            a, b = ctile.shape.edge(att.child_edge)
            anchor = rel.apply(a)
            lin = Transform(scale, rel.rotation, rel.reflect)
            lx, ly = lin.apply(a)
            rel2 = Transform(
                scale, rel.rotation, rel.reflect,
                (anchor[0] - lx, anchor[1] - ly))
            # New fraction range on the parent side
            frac = _site_fraction(
                ptile, att.edge, rel2.apply(a), rel2.apply(b))
            attachments[parent].append(FractalAttachment(
                att.edge, frac, att.child_tile, rel2, att.child_edge))
    rules = RuleSet(
        compat=tileset.rules.compat,
        default=tileset.rules.default,
        substitutions=tileset.rules.substitutions,
        attachments=attachments,
        modes=tileset.rules.modes)
    return TileSet(tileset.tiles, rules, name=tileset.name)


def _site_fraction(tile: TileProto, edge: int, p, q) -> tuple:
    # Parameters of *p* and *q* along side *edge*, clipped to [0, 1]
    a, b = (np.array(x) for x in tile.shape.edge(edge))
    d = b - a
    dd = float(d @ d)
    tp = float((np.array(p) - a) @ d) / dd
    tq = float((np.array(q) - a) @ d) / dd
    lo = min(max(min(tp, tq), 0.0), 1.0)
    hi = min(max(max(tp, tq), 0.0), 1.0)
    # Round off noise so fractions stay inside [0, 1]
    return (round(lo, 12), round(hi, 12))


def grow(
        tileset: TileSet, root: str, depth: int, swap=None,
        node_budget: int = NODE_BUDGET) -> Patch:
    r"""Grow a fractal tile tree breadth first

    :Call:
        >>> patch = grow(tileset, root, depth, swap=None, node_budget=100000)
    :Inputs:
        *tileset*: :class:`TileSet`
            Tile set with attachments
        *root*: :class:`str`
            Root tile id
        *depth*: :class:`int` >= 0
            Number of generations below the root
        *swap*: {``None``} | :class:`list` | :class:`callable`
            Per-node turn choices, see :func:`triangle_variant`
        *node_budget*: {``100000``} | :class:`int`
            Maximum number of nodes
    :Outputs:
        *patch*: :class:`Patch`
            Placements in breadth-first order (parent order, then
            attachment order) with :class:`FractalNode` annotations
    :Raises:
        * :class:`TilerBudgetError` if the tree would exceed the budget
        * :class:`TilerRuleError` if *root* has no attachments
    """
    if depth < 0:
        raise TilerValueError(f"Depth must be >= 0; got {depth}")
    attachments = tileset.rules.attachments
    tileset.tile(root)
    if depth > 0 and not attachments.get(root):
        raise TilerRuleError(f"Tile '{root}' has no fractal attachments")
    swap_fn = _swap_function(swap)
    # Root
    nodes = [FractalNode(Placement(root), 0)]
    frontier = nodes[:]
    # Turn choice of each node, by index
    turns = {}
    for d in range(1, depth + 1):
        # Check size of next generation before building it
        nnext = sum(
            len(attachments.get(n.placement.tile, ())) for n in frontier)
        if len(nodes) + nnext > node_budget:
            raise TilerBudgetError(
                f"Fractal tree would have more than {node_budget} nodes "
                f"at depth {d}")
        children = []
        for node in frontier:
            atts = attachments.get(node.placement.tile, ())
            k = turns[node.index] = _swap_choice(swap_fn, node)
            rels = _child_relatives(tileset, node, atts, k)
            # Children hang off the unturned pose of their parent
            pose = node.placement.pose
            for att, rel in zip(atts, rels):
                placement = Placement(att.child_tile, compose(pose, rel))
                child = FractalNode(placement, d, node, att, len(nodes))
                nodes.append(child)
                children.append(child)
        frontier = children
    # Turn each node's own decomposition
    placements = []
    for node in nodes:
        k = turns.get(node.index)
        if k is None:
            k = _swap_choice(swap_fn, node)
        if k:
            tile = tileset.tile(node.placement.tile)
            rot = _turn(tile, k)
            node.placement = Placement(
                node.placement.tile, compose(node.placement.pose, rot))
        placements.append(node.placement)
    return Patch(placements, tileset, nodes)


def _swap_function(swap):
    # Normalize swap spec to function of node
    if swap is None:
        return None
    if callable(swap):
        return swap
    seq = list(swap)
    for k in seq:
        if k not in (0, 1, 2):
            raise TilerRuleError(f"Invalid swap choice {k!r}; expected 0|1|2")
    return lambda node: seq[node.index] if node.index < len(seq) else 0


def _swap_choice(swap_fn, node) -> int:
    # Turn choice of one node
    if swap_fn is None:
        return 0
    k = swap_fn(node)
    if k not in (0, 1, 2):
        raise TilerRuleError(f"Invalid swap choice {k!r}; expected 0|1|2")
    return int(k)


def _turn(tile: TileProto, k: int) -> Transform:
    # Rotation by k thirds of a turn about the tile centroid
    if tile.symmetry != 3:
        raise TilerRuleError(
            f"Tile '{tile.id}' needs symmetry 3 to be turned; "
            f"has {tile.symmetry}")
    return Transform.rotation_about(120.0 * k, tile.shape.centroid())


def _child_relatives(tileset, node, atts, k: int) -> list:
    # Relative child poses after turning the node's sites by k
    if k == 0:
        return [att.relative for att in atts]
    tile = tileset.tile(node.placement.tile)
    n = len(tile.shape)
    # Number of sides one third of a turn moves a site by
    step = n // 3
    # Side glued to the parent never receives a child
    closed = None if node.parent is None else node.site.child_edge
    turned = [(att.edge + k*step) % n for att in atts]
    taken = {e for e in turned if e != closed}
    rels = []
    for att, e in zip(atts, turned):
        j = k
        if e == closed:
            # Move on to the side the turn left open
            for i in (1, 2):
                e2 = (e + i*step) % n
                if e2 != closed and e2 not in taken:
                    j = k + i
                    taken.add(e2)
                    break
            else:
                raise TilerRuleError(
                    f"No open side for child of node {node.index}")
        rels.append(compose(_turn(tile, j % 3), att.relative))
    return rels


def triangle_variant(
        tileset: TileSet, swap, depth: int,
        node_budget: int = NODE_BUDGET) -> Patch:
    r"""Grow a three-fold symmetric tree with per-node turns

    Each node's tile is turned 0, 120, or 240 degrees about its own
    centroid. The tile looks the same but its decomposition and sites
    turn with it. The root has no parent, so turning it moves both
    branches and the whole tree turns about the root centroid. Any
    other node keeps the side glued to its parent closed: a site turned
    onto that side moves on to the side left open, so its two children
    trade sides and the branch never grows back into the grandparent.

    :Call:
        >>> patch = triangle_variant(tileset, swap, depth)
    :Inputs:
        *tileset*: :class:`TileSet`
            Tile set whose first tile has symmetry order 3
        *swap*: :class:`list`\ [:class:`int`] | :class:`callable`
            Choice 0, 1, or 2 for each node in breadth-first order, or a
            function of :class:`FractalNode` returning the choice
        *depth*: :class:`int`
            Number of generations
    :Outputs:
        *patch*: :class:`Patch`
            Tree-annotated patch
    :Raises:
        :class:`TilerRuleError` for an invalid choice or a tile without
        three-fold symmetry
    """
    tile = tileset.tiles[0]
    if tile.symmetry != 3:
        raise TilerRuleError(
            f"Tile '{tile.id}' needs symmetry 3 for the triangle variant; "
            f"has {tile.symmetry}")
    if swap is None:
        swap = []
    return grow(tileset, tile.id, depth, swap=swap, node_budget=node_budget)


def swap_choices(seed: int, count: int) -> list:
    r"""Draw reproducible per-node swap choices

    :Call:
        >>> choices = swap_choices(seed, count)
    :Outputs:
        *choices*: :class:`list`\ [:class:`int`]
            *count* values from {0, 1, 2}
    """
    rng = np.random.default_rng(seed)
    return [int(k) for k in rng.integers(0, 3, size=count)]



def detect_collisions(patch: Patch, tileset=None) -> CollisionReport:
    r"""Find overlapping nodes of a tile tree

    A parent and child touch along the child's attaching side. An
    overlap between them that stays within :data:`SNAP_GRID` of that
    side is contact at the attachment site and is not reported; every
    other pair with positive overlap is a collision.

    :Call:
        >>> report = detect_collisions(patch, tileset=None)
    :Inputs:
        *patch*: :class:`Patch`
            Tree-annotated patch from :func:`grow`
        *tileset*: {``None``} | :class:`TileSet`
            Tile set; defaults to *patch.tileset*
    :Outputs:
        *report*: :class:`CollisionReport`
            Overlapping pairs in index order
    """
    tileset = patch.tileset if tileset is None else tileset
    pairs = []
    for (i, j), area in find_overlaps(patch, tileset):
        if patch.nodes is not None and _on_site(patch, tileset, i, j):
            continue
        pairs.append((i, j, area))
    # Depth at which first collision appears
    first_depth = None
    if pairs and patch.nodes is not None:
        first_depth = min(
            max(patch.nodes[i].depth, patch.nodes[j].depth)
            for i, j, _ in pairs)
    return CollisionReport(pairs, first_depth)


def _on_site(patch: Patch, tileset: TileSet, i: int, j: int) -> bool:
    # Whether overlap of nodes *i* < *j* is parent/child site contact
    child = patch.nodes[j]
    if child.parent is None or child.parent.index != i:
        return False
    # Attaching side of the child in world coordinates
    cplace = patch.placements[j]
    ctile = tileset.tile(cplace.tile)
    a, b = ctile.shape.edge(child.site.child_edge)
    p = np.array(cplace.pose.apply(a))
    d = np.array(cplace.pose.apply(b)) - p
    dd = float(d @ d)
    pa = placed_polygon(patch.placements[i], tileset).triangulate()
    pb = placed_polygon(cplace, tileset).triangulate()
    # Every corner of the overlap must lie on that side
    for ta in pa:
        for tb in pb:
            for x in clip_convex(ta, tb):
                t = min(max(float((x - p) @ d) / dd, 0.0), 1.0)
                if np.linalg.norm(x - p - t*d) > SNAP_GRID:
                    return False
    return True


def max_depth(patch: Patch):
    r"""Deepest node of a tree-annotated patch, else ``None``"""
    if not patch.nodes:
        return None
    return max(node.depth for node in patch.nodes)


def max_safe_scale(
        tileset: TileSet, root: str, depth: int, lo: float, hi: float,
        iterations: int = BISECT_ITERS) -> float:
    r"""Bisect for the largest child scale without branch collisions

    :Call:
        >>> s = max_safe_scale(tileset, root, depth, lo, hi)
    :Inputs:
        *tileset*: :class:`TileSet`
            Tile set with attachments
        *root*: :class:`str`
            Root tile id
        *depth*: :class:`int`
            Tree depth to test
        *lo*: :class:`float`
            Scale known to be collision-free
        *hi*: :class:`float`
            Scale known to collide
        *iterations*: {``12``} | :class:`int`
            Number of bisection steps
    :Outputs:
        *s*: :class:`float`
            Largest tested collision-free scale
    :Raises:
        :class:`TilerRuleError` if the bracket is degenerate, *lo*
        collides, or *hi* does not
    """
    if not (0.0 < lo < hi < 1.0) or hi - lo <= 1e3*EPS:
        raise TilerRuleError(
            f"Need 0 < lo < hi < 1 with a nondegenerate bracket; "
            f"got lo={lo}, hi={hi}")

    def collides(s):
        patch = grow(with_scale(tileset, s), root, depth)
        return bool(detect_collisions(patch))

    if collides(lo):
        raise TilerRuleError(f"Lower scale {lo} already collides")
    if not collides(hi):
        raise TilerRuleError(f"Upper scale {hi} does not collide")
    # Bisection
    for _ in range(iterations):
        mid = 0.5*(lo + hi)
        if collides(mid):
            hi = mid
        else:
            lo = mid
    return lo
