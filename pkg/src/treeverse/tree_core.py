"""Ordered rooted trees in DFS preorder, and the positional machinery built on it.

Vertices are identified with their preorder index, so for every vertex u the
set of u and its descendants is the contiguous id interval
[u, u + subtree_size(u) - 1].  Everything else in the package relies on that
interval property for O(1) descendant tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class TreeError(ValueError):
    """Raised for structurally invalid tree input."""


class RootedTree:
    """An ordered rooted tree whose vertex ids 0..n-1 follow DFS preorder.

    Immutable after construction.  `children[u]` lists u's children left to
    right; ids within each list are strictly increasing.
    """

    __slots__ = ("n", "parent", "children", "levels", "sizes",
                 "level_order", "_pos_in_level")

    def __init__(self, children: Sequence[Sequence[int]]):
        n = len(children)
        if n == 0:
            raise TreeError("a tree has at least one vertex")
        kids = tuple(tuple(c) for c in children)
        parent: list[Optional[int]] = [None] * n
        for u in range(n):
            prev = u
            for c in kids[u]:
                if not (prev < c < n) or (prev == u and c != u + 1):
                    raise TreeError("children lists are not in preorder")
                if parent[c] is not None:
                    raise TreeError(f"vertex {c} has two parents")
                parent[c] = u
                prev = c
        if any(parent[u] is None for u in range(1, n)):
            raise TreeError("input is not a single tree in preorder")

        levels = [0] * n
        for u in range(1, n):
            levels[u] = levels[parent[u]] + 1

        sizes = [1] * n
        for u in range(n - 1, 0, -1):
            sizes[parent[u]] += sizes[u]
        if sizes[0] != n:
            raise TreeError("disconnected input")

        depth = max(levels)
        level_order: list[list[int]] = [[] for _ in range(depth + 1)]
        pos = [0] * n
        for u in range(n):
            lst = level_order[levels[u]]
            pos[u] = len(lst)
            lst.append(u)

        self.n = n
        self.parent = tuple(parent)
        self.children = kids
        self.levels = tuple(levels)
        self.sizes = tuple(sizes)
        self.level_order = tuple(tuple(lst) for lst in level_order)
        self._pos_in_level = tuple(pos)

    # -- basic queries -------------------------------------------------

    @property
    def depth(self) -> int:
        return len(self.level_order) - 1

    def check_vertex(self, u: int) -> None:
        if not (0 <= u < self.n):
            raise TreeError(f"vertex {u} out of range 0..{self.n - 1}")

    def descendant_interval(self, u: int) -> range:
        """Ids of u and all its descendants (contiguous by preorder)."""
        return range(u, u + self.sizes[u])

    def is_ancestor(self, a: int, u: int) -> bool:
        return a <= u < a + self.sizes[a]

    def root_path(self, u: int) -> list[int]:
        path = [u]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    # -- derived trees -------------------------------------------------

    def prefix(self, m: int) -> "RootedTree":
        """The subtree induced on the admissible prefix {0,..,m-1}."""
        if not (1 <= m <= self.n):
            raise TreeError(f"prefix size {m} out of range 1..{self.n}")
        return RootedTree([[c for c in self.children[u] if c < m]
                           for u in range(m)])

    def subtree(self, u: int) -> "RootedTree":
        """The subtree rooted at u, relabeled so that u becomes id 0."""
        self.check_vertex(u)
        return RootedTree([[c - u for c in self.children[v]]
                           for v in self.descendant_interval(u)])

    def __eq__(self, other) -> bool:
        return isinstance(other, RootedTree) and self.children == other.children

    def __hash__(self) -> int:
        return hash(self.children)

    def __repr__(self) -> str:
        return f"RootedTree(n={self.n})"


# -- positional queries ---------------------------------------------------


def build_tree(children_lists: Sequence[Sequence[int]]) -> RootedTree:
    """Build a RootedTree from per-vertex ordered child lists.

    The input may use any labeling; the result is relabeled into DFS
    preorder.  Idempotent on input that is already in preorder.
    """
    n = len(children_lists)
    if n == 0:
        raise TreeError("a tree has at least one vertex")
    seen: set[int] = set()
    for u, lst in enumerate(children_lists):
        for c in lst:
            if not (0 <= c < n):
                raise TreeError(f"child id {c} out of range")
            if c in seen:
                raise TreeError(f"duplicate child {c}")
            seen.add(c)
    roots = [u for u in range(n) if u not in seen]
    if len(roots) != 1:
        raise TreeError("input does not have exactly one root "
                        "(disconnected or cyclic)")

    order: list[int] = []
    stack = [roots[0]]
    on_path: set[int] = set()
    while stack:
        u = stack.pop()
        if u in on_path:
            raise TreeError("cycle detected")
        on_path.add(u)
        order.append(u)
        for c in reversed(children_lists[u]):
            stack.append(c)
    if len(order) != n:
        raise TreeError("disconnected input")

    new_id = {old: i for i, old in enumerate(order)}
    return RootedTree([[new_id[c] for c in children_lists[old]]
                       for old in order])


def level(tree: RootedTree, u: int) -> int:
    """Distance from u to the root."""
    tree.check_vertex(u)
    return tree.levels[u]


def subtree_size(tree: RootedTree, u: int) -> int:
    """Number of vertices in the subtree rooted at u (u included)."""
    tree.check_vertex(u)
    return tree.sizes[u]


def nearest_left_cousin(tree: RootedTree, u: int) -> Optional[int]:
    """The closest same-level vertex preceding u in preorder, if any."""
    tree.check_vertex(u)
    pos = tree._pos_in_level[u]
    if pos == 0:
        return None
    return tree.level_order[tree.levels[u]][pos - 1]


def ith_ancestor(tree: RootedTree, u: int, i: int) -> int:
    """The i-fold parent of u, clamped at the root."""
    tree.check_vertex(u)
    if i < 0:
        raise TreeError("ancestor index must be non-negative")
    while i > 0 and tree.parent[u] is not None:
        u = tree.parent[u]
        i -= 1
    return u


def is_admissible(tree: RootedTree, vertices: Iterable[int]) -> bool:
    """True iff the set is a preorder prefix {0,..,k-1} (possibly empty)."""
    s = set(vertices)
    return s == set(range(len(s))) and len(s) <= tree.n


# -- forests -------------------------------------------------------------


@dataclass(frozen=True)
class Forest:
    """An induced subforest of a rooted tree, keeping original vertex ids.

    `parent[u]` is u's parent inside the forest or None when u is a root
    (either the original root or a vertex whose parent was cut away).
    """

    vertices: tuple[int, ...]
    parent: dict
    children: dict
    roots: tuple[int, ...]

    @classmethod
    def from_tree(cls, tree: RootedTree) -> "Forest":
        return cls(
            vertices=tuple(range(tree.n)),
            parent={u: tree.parent[u] for u in range(tree.n)},
            children={u: tuple(tree.children[u]) for u in range(tree.n)},
            roots=(0,),
        )

    def induced(self, keep: Iterable[int]) -> "Forest":
        ks = set(keep)
        if not ks <= set(self.vertices):
            raise TreeError("induced set is not a subset of the forest")
        verts = tuple(sorted(ks))
        parent = {u: (self.parent[u] if self.parent[u] in ks else None)
                  for u in verts}
        children = {u: tuple(c for c in self.children[u] if c in ks)
                    for u in verts}
        roots = tuple(u for u in verts if parent[u] is None)
        return Forest(verts, parent, children, roots)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, u: int) -> bool:
        return u in self.parent

    def neighbors(self, u: int) -> list[int]:
        out = list(self.children[u])
        if self.parent[u] is not None:
            out.append(self.parent[u])
        return out

    def component_of(self, u: int, removed: Optional[int] = None) -> frozenset:
        """Connected component containing u after deleting `removed`."""
        seen = {u}
        stack = [u]
        while stack:
            v = stack.pop()
            for w in self.neighbors(v):
                if w != removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return frozenset(seen)

    def components(self, removed: Optional[int] = None) -> list[frozenset]:
        """Connected components, optionally after deleting one vertex."""
        out = []
        seen: set[int] = set()
        for u in self.vertices:
            if u == removed or u in seen:
                continue
            comp = self.component_of(u, removed)
            seen |= comp
            out.append(comp)
        return out


def u_components(forest: Forest, u: int) -> list[frozenset]:
    """All connected components of forest - u."""
    if u not in forest:
        raise TreeError(f"vertex {u} not in forest")
    return forest.components(removed=u)


# -- text formats ---------------------------------------------------------


def to_parens(tree: RootedTree) -> str:
    """One-line parenthesized preorder, e.g. '(()(()()))'."""
    out: list[str] = []
    stack: list = [0]
    while stack:
        u = stack.pop()
        if u is None:
            out.append(")")
            continue
        out.append("(")
        stack.append(None)
        for c in reversed(tree.children[u]):
            stack.append(c)
    return "".join(out)


def from_parens(text: str) -> RootedTree:
    """Parse the parenthesized preorder format."""
    s = text.strip()
    if not s or s[0] != "(":
        raise TreeError("tree text must start with '('")
    children: list[list[int]] = []
    stack: list[int] = []
    next_id = 0
    for ch in s:
        if ch == "(":
            u = next_id
            next_id += 1
            children.append([])
            if stack:
                children[stack[-1]].append(u)
            stack.append(u)
        elif ch == ")":
            if not stack:
                raise TreeError("unbalanced parentheses")
            stack.pop()
        elif not ch.isspace():
            raise TreeError(f"unexpected character {ch!r}")
    if stack:
        raise TreeError("unbalanced parentheses")
    return RootedTree(children)


def to_parent_csv(tree: RootedTree) -> str:
    """Parent-array CSV 'parent[1],parent[2],...'; empty for the 1-vertex tree."""
    return ",".join(str(tree.parent[u]) for u in range(1, tree.n))


def from_parent_csv(text: str) -> RootedTree:
    s = text.strip()
    if not s:
        return RootedTree([[]])
    parents = [int(tok) for tok in s.split(",")]
    n = len(parents) + 1
    children: list[list[int]] = [[] for _ in range(n)]
    for u, p in enumerate(parents, start=1):
        if not (0 <= p < n):
            raise TreeError(f"parent id {p} out of range")
        children[p].append(u)
    return build_tree(children)


def parse_tree(text: str) -> RootedTree:
    """Accept either text format (parenthesized preorder or parent CSV)."""
    s = text.strip()
    if s.startswith("("):
        return from_parens(s)
    return from_parent_csv(s)
