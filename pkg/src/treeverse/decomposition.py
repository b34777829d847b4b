"""Separator-style component selection inside forests.

Two finders drive the embedder: one returns a pivot vertex together with
components of bounded total size avoiding a protected vertex, the other
refines that into a collection that is either `feasible` (union plus pivot
lands in [x, x+y-2]) or `critical` (union in [x+y-2, 2x-3] with every proper
sub-union at most x-2).  Both are validated against the classifier, never
trusted blindly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .tree_core import Forest


@dataclass(frozen=True)
class ComponentCollection:
    """A pivot vertex `w` plus disjoint components of forest - w, all avoiding
    the protected vertex recorded in `avoid`."""

    w: int
    components: tuple
    avoid: Optional[int] = None

    @property
    def union_size(self) -> int:
        return sum(len(c) for c in self.components)

    @property
    def union(self) -> frozenset:
        out: set[int] = set()
        for c in self.components:
            out |= c
        return frozenset(out)


@dataclass(frozen=True)
class CollectionClass:
    kind: str  # "feasible" | "critical" | "plain"
    x: int
    y: int

    @property
    def is_feasible(self) -> bool:
        return self.kind == "feasible"

    @property
    def is_critical(self) -> bool:
        return self.kind == "critical"


def classify(coll: ComponentCollection, x: int, y: int) -> CollectionClass:
    """Exact set arithmetic for the feasible/critical windows."""
    total = coll.union_size
    if x <= total + 1 <= x + y - 2:
        return CollectionClass("feasible", x, y)
    t = len(coll.components)
    if t >= 2 and x + y - 2 <= total <= 2 * x - 3:
        # drop-one subsets are the largest proper sub-unions
        if all(total - len(c) <= x - 2 for c in coll.components):
            return CollectionClass("critical", x, y)
    return CollectionClass("plain", x, y)


def _sorted_components(comps) -> list[frozenset]:
    # decreasing size, ties by smallest contained id, for determinism
    return sorted(comps, key=lambda c: (-len(c), min(c)))


def _entry_vertex(forest: Forest, w: int, comp: frozenset) -> int:
    """The unique neighbor of w inside comp, or the smallest vertex of comp
    when the component is not attached to w (detached forest component)."""
    for v in forest.neighbors(w):
        if v in comp:
            return v
    return min(comp)


def _greedy_window(comps: list[frozenset], x: int) -> list[frozenset]:
    """Pick components totalling within [x, 2x-1], largest first.

    Requires every component below 2x and a total of at least x.
    """
    comps = _sorted_components(comps)
    if comps and len(comps[0]) >= x:
        return [comps[0]]
    chosen: list[frozenset] = []
    total = 0
    for c in comps:
        chosen.append(c)
        total += len(c)
        if total >= x:
            return chosen
    raise AssertionError("greedy window unreachable: total below x")


def find_bounded_components(forest: Forest, u: int, x: int) -> ComponentCollection:
    """Find w and components of forest - w avoiding u with union in [x, 2x-1].

    Walks away from u: while some u-free component has at least 2x vertices,
    step to its attachment vertex and continue inside it; otherwise pick
    components greedily until the union reaches x.
    """
    if u not in forest:
        raise ValueError(f"vertex {u} not in forest")
    if x < 1:
        raise ValueError("x must be positive")
    if len(forest) < x + 1:
        raise ValueError(f"forest needs at least {x + 1} vertices")

    w = u
    region: Optional[frozenset] = None
    while True:
        comps = [c for c in forest.components(removed=w)
                 if u not in c and (region is None or c <= region)]
        big = [c for c in _sorted_components(comps) if len(c) >= 2 * x]
        if not big:
            return ComponentCollection(w, tuple(_greedy_window(comps, x)), u)
        region = big[0]
        w = _entry_vertex(forest, w, region)
        region = region - {w}


def find_feasible_or_critical(forest: Forest, u: int, x: int,
                              y: int) -> tuple[ComponentCollection, CollectionClass]:
    """Find a u-avoiding collection that classifies feasible or critical.

    Seeds with `find_bounded_components` at x-1; while the union is too large
    to be feasible, either a minimal subcollection of the large components is
    already critical, or the single oversized component is descended into.
    """
    if x <= y or y < 2:
        raise ValueError("requires x > y >= 2")
    if len(forest) < x + 1:
        raise ValueError(f"forest needs at least {x + 1} vertices")

    if len(forest) <= x + y - 2:
        coll = ComponentCollection(u, tuple(forest.components(removed=u)), u)
        cls = classify(coll, x, y)
        assert cls.is_feasible, "all-components collection must be feasible"
        return coll, cls

    seed = find_bounded_components(forest, u, x - 1)
    w = seed.w
    comps = _sorted_components(seed.components)

    while True:
        total = sum(len(c) for c in comps)
        assert x - 1 <= total <= 2 * x - 3

        if total <= x + y - 3:
            coll = ComponentCollection(w, tuple(comps), u)
            cls = classify(coll, x, y)
            assert cls.is_feasible
            return coll, cls

        # walk prefix unions downward; steps below the y-threshold index are
        # smaller than y, so the feasible window [x-1, x+y-3] cannot be skipped
        prefix = 0
        prefixes = []
        for c in comps:
            prefix += len(c)
            prefixes.append(prefix)
        s = max((i + 1 for i, c in enumerate(comps) if len(c) >= y), default=0)
        hit = None
        for j in range(len(comps), 0, -1):
            if x - 1 <= prefixes[j - 1] <= x + y - 3:
                hit = j
                break
        if hit is not None:
            coll = ComponentCollection(w, tuple(comps[:hit]), u)
            cls = classify(coll, x, y)
            assert cls.is_feasible
            return coll, cls
        assert s >= 1 and prefixes[s - 1] >= x + y - 2

        # minimal subcollection of the >=y components with union >= x+y-2;
        # largest-first greedy stops as soon as the threshold is reached, so
        # dropping any member (all at least as big as the last) breaks it
        chosen: list[frozenset] = []
        total = 0
        for c in comps[:s]:
            chosen.append(c)
            total += len(c)
            if total >= x + y - 2:
                break

        if len(chosen) >= 2:
            coll = ComponentCollection(w, tuple(chosen), u)
            cls = classify(coll, x, y)
            assert cls.is_critical, "minimal multi-component pick must be critical"
            return coll, cls

        # single oversized component: descend into it and retry
        inside = chosen[0]
        w = _entry_vertex(forest, w, inside)
        comps = _sorted_components(
            c for c in forest.components(removed=w) if c <= inside)
