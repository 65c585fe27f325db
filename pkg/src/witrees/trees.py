"""Weakly increasing plane trees, their text form, and all node statistics.

A tree is valid when the root is labeled 0, labels weakly increase along
every root-to-leaf path, and the labels of each node's children weakly
increase left to right.  Canonical text form:

    tree := label | label "(" tree ("," tree)* ")"

so "0(1(2),1)" is the root 0 with children 1 (which has a child 2) and 1.

Statistics use "degree" = number of children and "level" = distance from
the root (root at level 0).  A node is *active* when (a) its level is odd,
(b) it is the k-th child of its parent with k odd, and (c) its first right
sibling has degree of the same parity, or it has no right sibling and its
degree is odd.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .multiset import Multiset


class WTree(NamedTuple):
    """A labeled plane tree node; children are ordered left to right."""

    label: int
    children: tuple["WTree", ...] = ()

    def __str__(self) -> str:
        return format_tree(self)


class TreeSyntaxError(ValueError):
    """Malformed tree text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidTreeError(ValueError):
    """Structurally well-formed text that violates a tree invariant."""


def format_tree(t: WTree) -> str:
    if not t.children:
        return str(t.label)
    return f"{t.label}({','.join(format_tree(c) for c in t.children)})"


def parse_tree(text: str) -> WTree:
    """Parse canonical tree text and validate every invariant."""
    pos = 0
    s = text.strip()

    def parse_label() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise TreeSyntaxError("expected a label", pos)
        return int(s[start:pos])

    def parse_node() -> WTree:
        nonlocal pos
        label = parse_label()
        children: list[WTree] = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            children.append(parse_node())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                children.append(parse_node())
            if pos >= len(s) or s[pos] != ")":
                raise TreeSyntaxError("expected ')' or ','", pos)
            pos += 1
        return WTree(label, tuple(children))

    tree = parse_node()
    if pos != len(s):
        raise TreeSyntaxError("trailing input after tree", pos)
    validate_tree(tree)
    return tree


def validate_tree(t: WTree) -> None:
    """Check root label 0, path monotonicity and sibling order."""
    if t.label != 0:
        raise InvalidTreeError(f"root must be labeled 0, got {t.label}")
    stack = [t]
    while stack:
        node = stack.pop()
        prev = None
        for child in node.children:
            if child.label < max(node.label, 1):
                raise InvalidTreeError(
                    "labels must weakly increase along root-to-leaf paths: "
                    f"node {node.label} has child {child.label}"
                )
            if prev is not None and child.label < prev:
                raise InvalidTreeError(
                    "children labels must weakly increase left to right: "
                    f"{prev} precedes {child.label} under node {node.label}"
                )
            prev = child.label
            stack.append(child)


def iter_nodes(t: WTree) -> Iterator[tuple[WTree, int]]:
    """Yield (node, level) pairs in preorder."""
    stack = [(t, 0)]
    while stack:
        node, lvl = stack.pop()
        yield node, lvl
        for c in reversed(node.children):
            stack.append((c, lvl + 1))


def tree_multiset(t: WTree) -> Multiset:
    """The multiset of non-root labels (which must be contiguous 1..n)."""
    counts: dict[int, int] = {}
    for node, _ in iter_nodes(t):
        if node is not t:
            counts[node.label] = counts.get(node.label, 0) + 1
    if not counts:
        return Multiset(())
    n = max(counts)
    if set(counts) != set(range(1, n + 1)):
        raise InvalidTreeError(f"labels are not contiguous 1..{n}: {sorted(counts)}")
    return Multiset(tuple(counts[i] for i in range(1, n + 1)))


@dataclass
class StatVector:
    """Every parity/degree/level statistic of one tree, from a single pass.

    `deg` maps a degree q to the number of nodes with that degree; `od`
    maps q to the number of degree-q nodes on odd levels.  Starred variants
    exclude the root.  `oddf` counts nodes of odd full-degree, where the
    full-degree is the adjacency count (degree plus one except at the root).
    """

    leaf: int = 0
    el: int = 0
    odd: int = 0
    oe: int = 0
    ee: int = 0
    oo: int = 0
    eo: int = 0
    odd_star: int = 0
    oe_star: int = 0
    ee_star: int = 0
    oddf: int = 0
    deg: dict[int, int] = field(default_factory=dict)
    od: dict[int, int] = field(default_factory=dict)
    act: int = 0
    eact: int = 0
    oact: int = 0

    def as_dict(self) -> dict:
        d = self.__dict__.copy()
        d["deg"] = {str(q): c for q, c in sorted(self.deg.items())}
        d["od"] = {str(q): c for q, c in sorted(self.od.items())}
        return d


def stats(t: WTree) -> StatVector:
    """Compute the full statistic vector of a tree."""
    sv = StatVector()
    # stack holds (node, level, 1-based child index, first right sibling or None)
    stack: list[tuple[WTree, int, int, WTree | None]] = [(t, 0, 0, None)]
    while stack:
        node, lvl, idx, rsib = stack.pop()
        d = len(node.children)
        is_root = idx == 0
        odd_lvl = lvl & 1
        if d == 0:
            sv.leaf += 1
        if not odd_lvl:
            sv.el += 1
        sv.deg[d] = sv.deg.get(d, 0) + 1
        if odd_lvl:
            sv.od[d] = sv.od.get(d, 0) + 1
        if d & 1:
            sv.odd += 1
            if odd_lvl:
                sv.oo += 1
            else:
                sv.eo += 1
            if not is_root:
                sv.odd_star += 1
        else:
            if odd_lvl:
                sv.oe += 1
                sv.oe_star += 1
            else:
                sv.ee += 1
                if not is_root:
                    sv.ee_star += 1
        full = d if is_root else d + 1
        if full & 1:
            sv.oddf += 1
        # active: odd level, odd child index, right-sibling parity condition
        if odd_lvl and (idx & 1):
            if rsib is not None:
                active = (d & 1) == (len(rsib.children) & 1)
            else:
                active = bool(d & 1)
            if active:
                sv.act += 1
                if d & 1:
                    sv.oact += 1
                else:
                    sv.eact += 1
        ch = node.children
        for i, c in enumerate(ch):
            stack.append((c, lvl + 1, i + 1, ch[i + 1] if i + 1 < len(ch) else None))
    return sv


def ee_oe_odd(t: WTree) -> tuple[int, int, int]:
    """(ee, oe, odd) only; the hot path for the polynomial identities."""
    ee = oe = odd = 0
    stack = [(t, 0)]
    while stack:
        node, lvl = stack.pop()
        d = len(node[1])
        if d & 1:
            odd += 1
        elif lvl & 1:
            oe += 1
        else:
            ee += 1
        for c in node[1]:
            stack.append((c, lvl + 1))
    return ee, oe, odd


def parity_counts(t: WTree) -> tuple[int, int, int, int, int, int]:
    """(ee, oe, odd, oo, leaf, root_degree) in one pass.

    Everything else in the parity family derives from these: eo = odd - oo,
    el = ee + eo, even = ee + oe, and the root-excluded variants subtract
    the root's contribution read off its degree parity.
    """
    ee = oe = odd = oo = leaf = 0
    stack = [(t, 0)]
    while stack:
        node, lvl = stack.pop()
        d = len(node[1])
        if d & 1:
            odd += 1
            if lvl & 1:
                oo += 1
        elif lvl & 1:
            oe += 1
            if not d:
                leaf += 1
        else:
            ee += 1
            if not d:
                leaf += 1
        for c in node[1]:
            stack.append((c, lvl + 1))
    return ee, oe, odd, oo, leaf, len(t.children)


def active_counts(t: WTree) -> tuple[int, int, int]:
    """(act, eact, oact) only."""
    act = eact = oact = 0
    stack: list[tuple[WTree, int]] = [(t, 0)]
    while stack:
        node, lvl = stack.pop()
        ch = node[1]
        if not lvl & 1:  # children of an even-level node sit on an odd level
            for i in range(0, len(ch), 2):  # odd 1-based index = even 0-based
                u = ch[i]
                d = len(u[1])
                if i + 1 < len(ch):
                    ok = (d & 1) == (len(ch[i + 1][1]) & 1)
                else:
                    ok = bool(d & 1)
                if ok:
                    act += 1
                    if d & 1:
                        oact += 1
                    else:
                        eact += 1
        for c in ch:
            stack.append((c, lvl + 1))
    return act, eact, oact
