"""The infinite labeled forest whose leaf counts reproduce h_s.

Two views are provided.  Symbolic: :func:`label_to_node` maps a label to a
:class:`NodeDescriptor` in O(log n) and :func:`leaf_count` gives the number
of leaves among labels 1..n directly from that descriptor.  Explicit:
:func:`build_snapshot` materializes the induced subgraph on labels 1..n, which
:func:`chop` prunes and relabels and :func:`export_dot` renders.

Layout of the standard labeling: label 1 is the isolated node.  Subtree i
(i >= 1) is rooted at super-node i, which has 2**(i-1) children, each with a
single leaf below it.  Its labels are the super-node's s slots followed by
child 1, leaf 1, child 2, leaf 2, ...  The primed variant drops the isolated
node and labels each subtree leaf 1, child 1, the s super slots, then leaf 2,
child 2, ...
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import NamedTuple

MAX_SNAPSHOT = 2_000_000


class Kind(enum.IntEnum):
    ISOLATED = 0
    SUPER = 1
    CHILD = 2
    LEAF = 3


class Variant(enum.Enum):
    STANDARD = "standard"
    PRIME = "prime"


class NodeDescriptor(NamedTuple):
    """Symbolic address of a node.

    ``pos`` is the slot (1..s) for a super-node label and the child index r
    (1..2**(i-1)) for children and leaves; it is unused for the isolated node.
    When a descriptor names a node rather than one of its labels, super-nodes
    carry ``pos=0``.
    """

    kind: Kind
    i: int = 0
    pos: int = 0

    def __str__(self):
        if self.kind is Kind.ISOLATED:
            return "I"
        if self.kind is Kind.SUPER:
            return f"s{self.i}" if not self.pos else f"s{self.i}[{self.pos}]"
        tag = "c" if self.kind is Kind.CHILD else "l"
        return f"{tag}{self.i}_{self.pos}"


ISOLATED = NodeDescriptor(Kind.ISOLATED)


def first_label_of_subtree(s: int, i: int) -> int:
    if i < 1:
        raise ValueError(f"subtree index must be >= 1, got {i}")
    return (i - 1) * s + 2**i


def _first_label_prime(s: int, i: int) -> int:
    return (i - 1) * s + 2**i - 1


def _locate(s: int, n: int, first) -> tuple[int, int]:
    # first(i) grows like 2**i, so 64 steps cover every label we accept
    for i in range(1, 66):
        if n < first(s, i + 1):
            return i, n - first(s, i)
    raise ValueError(f"label {n} out of range")


def label_to_node(s: int, n: int, variant: Variant = Variant.STANDARD) -> NodeDescriptor:
    if n < 1:
        raise ValueError(f"labels start at 1, got {n}")
    if variant is Variant.STANDARD:
        if n == 1:
            return ISOLATED
        i, off = _locate(s, n, first_label_of_subtree)
        if off < s:
            return NodeDescriptor(Kind.SUPER, i, off + 1)
        q = off - s
        return NodeDescriptor(Kind.LEAF if q & 1 else Kind.CHILD, i, q // 2 + 1)

    i, off = _locate(s, n, _first_label_prime)
    if off == 0:
        return NodeDescriptor(Kind.LEAF, i, 1)
    if off == 1:
        return NodeDescriptor(Kind.CHILD, i, 1)
    if off < s + 2:
        return NodeDescriptor(Kind.SUPER, i, off - 1)
    q = off - s - 2
    return NodeDescriptor(Kind.CHILD if q & 1 else Kind.LEAF, i, q // 2 + 2)


def is_leaf(s: int, n: int, variant: Variant = Variant.STANDARD) -> int:
    kind = label_to_node(s, n, variant).kind
    return int(kind is Kind.LEAF or kind is Kind.ISOLATED)


def leaf_count(s: int, n: int, variant: Variant = Variant.STANDARD) -> int:
    """Number of leaves carrying a label <= n, from the descriptor of n alone."""
    node = label_to_node(s, n, variant)
    if node.kind is Kind.ISOLATED:
        return 1
    base = 2 ** (node.i - 1)
    if variant is Variant.STANDARD:
        # earlier leaves: I plus 2**(j-1) per complete subtree j < i
        if node.kind is Kind.SUPER:
            return base
        if node.kind is Kind.CHILD:
            return base + node.pos - 1
        return base + node.pos
    # primed: no isolated node, so 2**(i-1) - 1 leaves precede subtree i
    if node.kind is Kind.LEAF:
        return base - 1 + node.pos
    if node.kind is Kind.CHILD:
        return base - 1 + node.pos
    return base


class SnapshotNode(NamedTuple):
    """One node of a snapshot: its label range, address and parent."""

    first: int
    last: int
    node: NodeDescriptor
    parent: NodeDescriptor | None

    @property
    def size(self) -> int:
        return self.last - self.first + 1


@dataclass(frozen=True)
class TreeSnapshot:
    s: int
    n: int
    variant: Variant
    nodes: tuple[SnapshotNode, ...]

    def leaves(self) -> list[SnapshotNode]:
        return [x for x in self.nodes if x.node.kind in (Kind.LEAF, Kind.ISOLATED)]

    def leaf_total(self) -> int:
        return len(self.leaves())

    def find(self, node: NodeDescriptor) -> SnapshotNode:
        for x in self.nodes:
            if x.node == node:
                return x
        raise KeyError(str(node))


def _super(i: int) -> NodeDescriptor:
    return NodeDescriptor(Kind.SUPER, i, 0)


def _super_parent(i: int) -> NodeDescriptor | None:
    return _super(i - 1) if i > 1 else None


def build_snapshot(s: int, n: int, variant: Variant = Variant.STANDARD) -> TreeSnapshot:
    """Materialize the subgraph induced by labels 1..n.

    With s = 0 super-nodes carry no labels, so they never appear and every
    child is parentless.  A parent link is set only when the parent is itself
    inside the snapshot.
    """
    if n < 1:
        raise ValueError(f"labels start at 1, got {n}")
    if n > MAX_SNAPSHOT:
        raise ValueError(f"snapshot of {n} labels exceeds bound {MAX_SNAPSHOT}")
    nodes: list[SnapshotNode] = []
    i = 1
    if variant is Variant.PRIME:
        while (lo := _first_label_prime(s, i)) <= n:
            _prime_subtree(nodes, s, i, lo, n)
            i += 1
        return TreeSnapshot(s, n, variant, tuple(nodes))

    nodes.append(SnapshotNode(1, 1, ISOLATED, None))
    while (lo := first_label_of_subtree(s, i)) <= n:
        full = _standard_subtree(s, i)
        m = n - lo + 1
        if m >= s + 2**i:
            nodes.extend(full)
        elif s and m <= s:
            nodes.append(full[0]._replace(last=n))
        else:
            # node order equals label order, one label per non-super node
            nodes.extend(full[: (1 if s else 0) + m - s])
        i += 1
    return TreeSnapshot(s, n, variant, tuple(nodes))


@functools.lru_cache(maxsize=256)
def _standard_subtree(s: int, i: int) -> tuple[SnapshotNode, ...]:
    lo = first_label_of_subtree(s, i)
    sup = _super(i) if s else None
    nodes = [SnapshotNode(lo, lo + s - 1, sup, _super_parent(i))] if s else []
    label = lo + s
    for r in range(1, 2 ** (i - 1) + 1):
        child = NodeDescriptor(Kind.CHILD, i, r)
        nodes.append(SnapshotNode(label, label, child, sup))
        nodes.append(SnapshotNode(label + 1, label + 1, NodeDescriptor(Kind.LEAF, i, r), child))
        label += 2
    return tuple(nodes)


def _prime_subtree(nodes, s, i, lo, n):
    # leaf 1 and child 1 precede their parents here; a parent link is kept
    # only once the parent is inside the snapshot
    sup = _super(i) if s else None
    child1 = NodeDescriptor(Kind.CHILD, i, 1)
    has_child1 = lo + 1 <= n
    has_sup = s > 0 and lo + 2 <= n
    nodes.append(SnapshotNode(lo, lo, NodeDescriptor(Kind.LEAF, i, 1), child1 if has_child1 else None))
    if not has_child1:
        return
    nodes.append(SnapshotNode(lo + 1, lo + 1, child1, sup if has_sup else None))
    if s:
        if not has_sup:
            return
        nodes.append(SnapshotNode(lo + 2, min(lo + s + 1, n), sup, _super_parent(i)))
    label = lo + s + 2
    for r in range(2, 2 ** (i - 1) + 1):
        if label > n:
            return
        child = NodeDescriptor(Kind.CHILD, i, r)
        nodes.append(SnapshotNode(label, label, NodeDescriptor(Kind.LEAF, i, r), child))
        if label + 1 > n:
            return
        nodes.append(SnapshotNode(label + 1, label + 1, child, sup))
        label += 2


class ChopError(ValueError):
    pass


def chop(snap: TreeSnapshot) -> TreeSnapshot:
    """Apply the chopping process to a standard snapshot.

    Super-node 1 and every leaf (the isolated node included) are removed.  The
    only child of super-node 1 becomes the new isolated node.  In each
    remaining subtree i the odd-numbered children stay children (renumbered)
    and each even-numbered child becomes the leaf of its left sibling; subtree
    i becomes subtree i-1.  The result is then relabeled in standard order,
    each super-node keeping as many labels as it had.
    """
    if snap.variant is not Variant.STANDARD:
        raise ChopError("chop is defined only for the standard variant")
    s = snap.s
    if snap.n < s + 4:
        raise ChopError(
            f"chop needs n >= s+4 = {s + 4} (first complete subtree strictly contained), got n={snap.n}"
        )

    # structural pass: collect the surviving nodes under their new names
    supers: dict[int, int] = {}          # new subtree index -> number of labels
    children: dict[int, list[int]] = {}  # new subtree index -> child r's, in order
    leaves: dict[int, set[int]] = {}
    new_isolated = False
    super_k, child_k = Kind.SUPER, Kind.CHILD
    for x in snap.nodes:
        kind, i, r = x.node
        if kind is super_k:
            if i > 1:
                supers[i - 1] = x.size
        elif kind is child_k:
            if i == 1:
                new_isolated = True
            elif r & 1:
                children.setdefault(i - 1, []).append((r + 1) >> 1)
            else:
                leaves.setdefault(i - 1, set()).add(r >> 1)

    # relabel in standard order
    nodes = []
    label = 0
    if new_isolated:
        label = 1
        nodes.append(SnapshotNode(1, 1, ISOLATED, None))
    _new, node_t, sn_t, leaf_k = tuple.__new__, NodeDescriptor, SnapshotNode, Kind.LEAF
    for j in sorted(supers.keys() | children.keys()):
        sup = None
        if j in supers:
            sup = _super(j)
            m = supers[j]
            nodes.append(SnapshotNode(label + 1, label + m, sup, _super_parent(j)))
            label += m
        has_leaf = leaves.get(j, ())
        for r in children.get(j, ()):
            label += 1
            child = _new(node_t, (child_k, j, r))
            nodes.append(_new(sn_t, (label, label, child, sup)))
            if r in has_leaf:
                label += 1
                nodes.append(_new(sn_t, (label, label, _new(node_t, (leaf_k, j, r)), child)))
    return TreeSnapshot(s, label, Variant.STANDARD, tuple(nodes))


def complete_partial_graph_end(s: int, i: int) -> int:
    """Last label of the i-th complete partial graph (I plus subtrees 1..i)."""
    return first_label_of_subtree(s, i + 1) - 1


def _dot_id(node: NodeDescriptor) -> str:
    return f'"{node}"'


def export_dot(snap: TreeSnapshot, show_labels: bool = True) -> str:
    """Render a snapshot as a DOT digraph, nodes ordered by first label.

    Leaves are drawn as double circles.  With ``show_labels`` each node is
    annotated with its label (a range such as ``2–3`` for super-nodes).
    """
    name = "T" if snap.variant is Variant.STANDARD else "Tprime"
    lines = [f"digraph {name}_{snap.s}_{snap.n} {{", "  node [shape=circle];"]
    for x in snap.nodes:
        attrs = []
        if show_labels:
            if x.first == x.last:
                text = f"{x.node}\\n{x.first}"
            else:
                text = f"{x.node}\\n{x.first}–{x.last}"
            attrs.append(f'label="{text}"')
        else:
            attrs.append(f'label="{x.node}"')
        if x.node.kind in (Kind.LEAF, Kind.ISOLATED):
            attrs.append("shape=doublecircle")
        elif x.node.kind is Kind.SUPER:
            attrs.append("shape=box")
        lines.append(f"  {_dot_id(x.node)} [{', '.join(attrs)}];")
    for x in snap.nodes:
        if x.parent is not None:
            lines.append(f"  {_dot_id(x.parent)} -> {_dot_id(x.node)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
