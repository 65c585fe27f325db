"""Tree maps: the degree/odd-level bijection, the statistic-swapping
involution, their root-subtree variants, and the plane/binary conversion.

All maps are pure, total on valid trees, and label-preserving in the sense
that the image lives on the same multiset.  They are defined structurally,
so they apply verbatim to subtrees whose root carries any label; levels are
always counted from the subtree's own root.

`hat` sends the number of degree-q nodes to the number of degree-(q-1)
nodes on odd levels (q >= 1) and the leaf count to the even-level count.
`tilde` is an involution exchanging the statistics "even-degree nodes on
odd levels" and "odd-degree nodes" while fixing "even-degree nodes on even
levels".  `psi` and `theta` wrap tilde resp. hat around every root subtree,
which shifts the contracts to the root-excluded statistics.  `rho` is the
classical leftmost-child / right-sibling correspondence onto weakly
increasing binary trees.
"""

from __future__ import annotations

from .binary import WBTree
from .trees import WTree


def hat(t: WTree) -> WTree:
    """Degree-to-(odd-level degree) bijection; the single node is fixed."""
    if not t.children:
        return t
    first = t.children[0]
    rest = t.children[1:]
    h = hat(first)
    new_node = WTree(first.label, tuple(hat(u) for u in rest))
    return WTree(t.label, (new_node,) + h.children)


def tilde(t: WTree) -> WTree:
    """Involution swapping odd-degree and odd-level-even-degree counts.

    Decompose around the root's leftmost child c: let x be c's leftmost
    child and y the sibling directly right of c.  The construction swaps
    the roles of x and y, turning x's siblings into x's children and y's
    children into further branches next to y's relocated subtree; every
    piece (the subtree below x, the part of the tree right of y, and the
    subtrees at x's siblings and y's children) recurses through the
    involution itself.  Either of x, y may be absent, in which case the
    pieces built from it are simply omitted.  Recursing with the involution
    on all pieces is the only choice of this shape that actually is an
    involution with the stated statistic transport (checked exhaustively in
    the test suite up to eight non-root nodes).
    """
    if not t.children:
        return t
    special = t.children[0]
    x = special.children[0] if special.children else None
    vs = special.children[1:]
    after = t.children[1:]
    y = after[0] if after else None

    if y is not None:
        us = y.children
        h = tilde(WTree(t.label, after[1:]))
        h_star = WTree(y.label, h.children)
        node1 = WTree(special.label, (h_star,) + tuple(tilde(u) for u in us))
    else:
        node1 = WTree(special.label, ())

    if x is None:
        return WTree(t.label, (node1,))

    node_x = WTree(x.label, tuple(tilde(v) for v in vs))
    f = tilde(x)
    return WTree(t.label, (node1, node_x) + f.children)


def psi(t: WTree) -> WTree:
    """Apply tilde to every root subtree: swaps the root-excluded counts of
    odd-degree and even-level-even-degree nodes, fixing odd-level ones."""
    return WTree(t.label, tuple(tilde(c) for c in t.children))


def theta(t: WTree) -> WTree:
    """Apply hat to every root subtree: sends the number of degree-(2d+1)
    nodes to the number of non-root degree-2d nodes on even levels plus the
    indicator that the image root has degree 2d+1."""
    return WTree(t.label, tuple(hat(c) for c in t.children))


def rho(t: WTree) -> WBTree:
    """Plane to binary: leftmost child -> left child, next sibling -> right."""

    def chain(children: tuple[WTree, ...]) -> WBTree | None:
        if not children:
            return None
        first = children[0]
        return WBTree(first.label, chain(first.children), chain(children[1:]))

    return WBTree(t.label, chain(t.children), None)


def rho_inv(b: WBTree) -> WTree:
    """Binary to plane; rejects trees whose node 0 has a right child."""
    if b.right is not None:
        raise ValueError("node 0 of a weakly increasing binary tree has no right child")

    def unchain(node: WBTree | None) -> tuple[WTree, ...]:
        children = []
        while node is not None:
            children.append(WTree(node.label, unchain(node.left)))
            node = node.right
        return tuple(children)

    return WTree(b.label, unchain(b.left))
