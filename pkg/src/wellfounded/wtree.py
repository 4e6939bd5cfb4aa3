"""Finitely branching labelled trees and the immediate-subtree relation.

Trees stand in for wellordering types with enumerable branching: every
node carries a label and an ordered tuple of subtrees.  The subtree
relation is decidable by structural equality, and its recursion operator
is a plain structural fold.  ``predecessor_tree`` unfolds any relation
with enumerable predecessors into such a tree, which characterises
well-founded relations: an element lies below another exactly when its
tree is an immediate subtree of the other's.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Tuple

from .core import WFRelation


@dataclass(frozen=True)
class WTree:
    label: Any
    branches: Tuple["WTree", ...] = ()

    def __repr__(self) -> str:
        return render(self)


def leaf(label) -> WTree:
    return WTree(label=label, branches=())


def render(tree: WTree) -> str:
    """Deterministic textual form: label, then parenthesized branches."""
    name = tree.label.name if isinstance(tree.label, enum.Enum) else str(tree.label)
    if not tree.branches:
        return name
    return name + "(" + ", ".join(render(branch) for branch in tree.branches) + ")"


def tree_fold(step: Callable[[Any, tuple, tuple], Any], tree: WTree):
    """Structural fold: apply ``step(label, branches, branch_values)`` at each
    node once all branch values are known."""
    branch_values = tuple(tree_fold(step, branch) for branch in tree.branches)
    return step(tree.label, tree.branches, branch_values)


def subtree_decide(lower: WTree, upper: WTree) -> Optional[int]:
    """Index of the first branch of ``upper`` structurally equal to ``lower``."""
    for index, branch in enumerate(upper.branches):
        if branch == lower:
            return index
    return None


def _subtree_predecessors(upper: WTree):
    found = []
    for branch in upper.branches:
        if all(branch != seen for seen, _i in found):
            found.append((branch, subtree_decide(branch, upper)))
    return tuple(found)


def wtree_relation() -> WFRelation:
    """The immediate-subtree relation; evidence is a branch index."""

    def recursor(step, tree):
        def at_node(label, branches, branch_values):
            node = WTree(label=label, branches=branches)

            def rec(_subtree, index):
                return branch_values[index]

            return step(node, rec)

        return tree_fold(at_node, tree)

    return WFRelation(
        carrier="wtree",
        decide=subtree_decide,
        predecessors=_subtree_predecessors,
        recursor=recursor,
    )


# ---------------------------------------------------------------------------
# The naturals as a tree type.

class NatLabel(enum.Enum):
    # a fixed two-label alphabet avoids boolean-polarity confusion
    ZERO = 0
    SUCC = 1


def encode_nat(n: int) -> WTree:
    """``0`` is a leaf; each successor is a unary node above it."""
    tree = leaf(NatLabel.ZERO)
    for _ in range(n):
        tree = WTree(label=NatLabel.SUCC, branches=(tree,))
    return tree


def decode_nat(tree: WTree) -> int:
    """Inverse of ``encode_nat``; rejects trees outside its image."""
    count = 0
    node = tree
    while True:
        if len(node.branches) >= 2:
            raise ValueError("not a numeral: node with branching factor >= 2")
        if node.branches:
            if node.label is not NatLabel.SUCC:
                raise ValueError("not a numeral: unary node must be a successor")
            count += 1
            node = node.branches[0]
        else:
            if node.label is not NatLabel.ZERO:
                raise ValueError("not a numeral: leaf must be the zero label")
            return count


# ---------------------------------------------------------------------------
# Rank trees: every well-founded relation is an inverse image of a subtree
# relation.

def predecessor_tree(rel: WFRelation, a) -> WTree:
    """Unfold ``a`` into the tree of its iterated predecessors.

    The node for ``x`` is labelled ``x`` and has one branch per predecessor;
    built by recursion over ``rel``, so it is only as deep as the relation
    is.  Requires a finite predecessor enumeration.
    """

    def step(x, rec):
        return WTree(
            label=x,
            branches=tuple(rec(below, e) for below, e in rel.predecessors(x)),
        )

    return rel.wfrec(step, a)


def root_label(tree: WTree):
    """Read back the element a rank tree was built from."""
    return tree.label


@dataclass
class EmbeddingReport:
    """Outcome of cross-validating a relation against its rank trees."""

    pairs: int = 0
    mismatches: list = field(default_factory=list)
    label_failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.label_failures


def check_tree_embedding(rel: WFRelation, elements) -> EmbeddingReport:
    """Check ``a' < a`` iff ``tree(a')`` is an immediate subtree of ``tree(a)``,
    and that the root label recovers the element, over a finite carrier."""
    elements = tuple(elements)
    report = EmbeddingReport()
    trees = {}
    for a in elements:
        trees[a] = predecessor_tree(rel, a)
        if root_label(trees[a]) != a:
            report.label_failures.append(a)
    for lower in elements:
        for upper in elements:
            report.pairs += 1
            related = rel.decide(lower, upper) is not None
            embedded = subtree_decide(trees[lower], trees[upper]) is not None
            if related != embedded:
                report.mismatches.append((lower, upper))
    return report
