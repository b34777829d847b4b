"""Concrete tree families and the balance axioms the embedder depends on."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .tree_core import RootedTree


def perfect_binary(k: int) -> RootedTree:
    """Perfect binary tree with all leaves at level k (2^(k+1)-1 vertices)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    children: list[list[int]] = []

    def grow(level: int) -> int:
        u = len(children)
        children.append([])
        if level < k:
            children[u] = [grow(level + 1), grow(level + 1)]
        return u

    grow(0)
    return RootedTree(children)


@dataclass(frozen=True)
class TypedTree:
    """A rooted tree whose vertices carry type 1 or 2."""

    tree: RootedTree
    type_of: tuple
    k: int


def typed_ternary(k: int) -> TypedTree:
    """The typed family on 3^k vertices: a type-1 vertex gets children typed
    (1, 2), a type-2 vertex gets (1, 2, 1, 2), all leaves at level k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    children: list[list[int]] = []
    types: list[int] = []

    def grow(level: int, vtype: int) -> int:
        u = len(children)
        children.append([])
        types.append(vtype)
        if level < k:
            kinds = (1, 2) if vtype == 1 else (1, 2, 1, 2)
            children[u] = [grow(level + 1, t) for t in kinds]
        return u

    grow(0, 1)
    return TypedTree(RootedTree(children), tuple(types), k)


def descendant_count(level: int, vtype: int, k: int) -> int:
    """Closed form for the descendant count of a typed-ternary vertex."""
    if not (0 <= level <= k):
        raise ValueError(f"level {level} out of range 0..{k}")
    if vtype not in (1, 2):
        raise ValueError("vertex type must be 1 or 2")
    base = 3 ** (k - level) - 1
    return base if vtype == 1 else 2 * base


@dataclass(frozen=True)
class BalanceReport:
    """Violations of the four balance axioms; empty means the tree is balanced."""

    ratio: Fraction
    gap: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


# Axiom identifiers used in violation records.
AX_COUSIN_SUM = "cousin_sum"          # sizes of the two nearest left cousins cover u
AX_COUSIN_RATIO = "cousin_ratio"      # nearest left cousin is at least 1/ratio as big
AX_LEVEL_DOMINANCE = "level_dominance"  # non-rightmost vertices dominate deeper levels
AX_SIBLING_FERTILITY = "sibling_fertility"  # left cousin of a non-leaf is a non-leaf


def validate_balance(tree: RootedTree, ratio: Union[int, Fraction] = 2,
                     gap: int = 1) -> BalanceReport:
    """Check the four balance axioms with exact rational arithmetic.

    Axioms, for every vertex u with nearest left cousin l(u):
      - cousin_sum:        size(l(l(u))) + size(l(u)) >= size(u) when l(l(u)) exists
      - cousin_ratio:      ratio * size(l(u)) > size(u) when l(u) exists
      - level_dominance:   if u is not rightmost on its level, size(u) >= size(u')
                           for every u' at least `gap` levels deeper
      - sibling_fertility: if u has a child and l(u) exists, l(u) has a child
    """
    ratio = Fraction(ratio)
    if ratio <= 0:
        raise ValueError("ratio must be positive")
    if gap < 0:
        raise ValueError("gap must be non-negative")
    violations: list[tuple] = []
    sizes = tree.sizes

    for row in tree.level_order:
        for i, u in enumerate(row):
            if i >= 1:
                left = row[i - 1]
                # ratio * size(left) > size(u), cross-multiplied exactly
                if ratio.numerator * sizes[left] <= ratio.denominator * sizes[u]:
                    violations.append((AX_COUSIN_RATIO, (u, left)))
                if tree.children[u] and not tree.children[left]:
                    violations.append((AX_SIBLING_FERTILITY, (u, left)))
            if i >= 2 and sizes[row[i - 2]] + sizes[row[i - 1]] < sizes[u]:
                violations.append((AX_COUSIN_SUM, (u, row[i - 1], row[i - 2])))

    # level_dominance via per-level extremes: compare the smallest
    # non-rightmost subtree on each level with the largest deeper subtree
    depth = tree.depth
    level_max = [max((sizes[u] for u in row), default=0)
                 for row in tree.level_order]
    suffix_max = [0] * (depth + 2)
    for lvl in range(depth, -1, -1):
        suffix_max[lvl] = max(level_max[lvl], suffix_max[lvl + 1])
    for lvl, row in enumerate(tree.level_order):
        if lvl + gap > depth or len(row) < 2:
            continue
        u = min(row[:-1], key=lambda v: sizes[v])
        if sizes[u] < suffix_max[lvl + gap]:
            deeper = next(v for r in tree.level_order[lvl + gap:] for v in r
                          if sizes[v] > sizes[u])
            violations.append((AX_LEVEL_DOMINANCE, (u, deeper)))

    return BalanceReport(ratio, gap, tuple(violations))
