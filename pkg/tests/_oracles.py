"""Independent brute-force oracles for cross-checking the fast paths.

These deliberately use a different strategy from the library: all plane
tree shapes are generated first, then every distinct arrangement of the
label multiset is tried and filtered by the validity rules.  Slow but
obviously correct; sized for small multisets.
"""

from itertools import permutations

from witrees.trees import WTree, format_tree


def plane_shapes(n_nodes: int):
    """All plane-tree shapes with n_nodes, as nested child-count tuples."""
    if n_nodes == 1:
        return [()]
    shapes = []
    for first in range(1, n_nodes):
        for head in plane_shapes(first):
            for rest in _forests(n_nodes - 1 - first):
                shapes.append((head,) + rest)
    return shapes


def _forests(n_nodes: int):
    if n_nodes == 0:
        return [()]
    out = []
    for first in range(1, n_nodes + 1):
        for head in plane_shapes(first):
            for rest in _forests(n_nodes - first):
                out.append((head,) + rest)
    return out


def _build(shape, labels, pos=None):
    """Fill a shape with labels in preorder; pos is a mutable index box."""
    if pos is None:
        pos = [0]
    label = labels[pos[0]]
    pos[0] += 1
    return WTree(label, tuple(_build(c, labels, pos) for c in shape))


def _valid(t: WTree) -> bool:
    if t.label != 0:
        return False
    stack = [t]
    while stack:
        node = stack.pop()
        prev = None
        for c in node.children:
            if c.label < max(node.label, 1):
                return False
            if prev is not None and c.label < prev:
                return False
            prev = c.label
            stack.append(c)
    return True


def oracle_tree_texts(multiplicities: tuple[int, ...]) -> set[str]:
    """Every weakly increasing tree on the multiset, by exhaustive search."""
    labels = []
    for lab, mult in enumerate(multiplicities, start=1):
        labels.extend([lab] * mult)
    p = len(labels)
    texts = set()
    for shape in plane_shapes(p + 1):
        for perm in set(permutations(labels)):
            t = _build(shape, (0,) + perm)
            if _valid(t):
                texts.add(format_tree(t))
    return texts
