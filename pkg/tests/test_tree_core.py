import pytest
from hypothesis import given, strategies as st

from treeverse.tree_core import (Forest, RootedTree, TreeError, build_tree,
                                 from_parens, from_parent_csv, is_admissible,
                                 ith_ancestor, level, nearest_left_cousin,
                                 parse_tree, subtree_size, to_parens,
                                 to_parent_csv, u_components)
from treeverse.balanced_trees import perfect_binary


def path_tree(n):
    return RootedTree([[u + 1] if u + 1 < n else [] for u in range(n)])


def star_tree(n):
    return RootedTree([list(range(1, n))] + [[] for _ in range(n - 1)])


@st.composite
def random_trees(draw, max_n=40):
    n = draw(st.integers(min_value=1, max_value=max_n))
    parents = [draw(st.integers(min_value=0, max_value=i)) for i in range(n - 1)]
    children = [[] for _ in range(n)]
    for u, p in enumerate(parents, start=1):
        children[p].append(u)
    return build_tree(children)


def test_build_single_vertex():
    t = build_tree([[]])
    assert t.n == 1 and t.parent[0] is None


def test_build_relabels_into_preorder():
    # root 0 with children [1, 4]; 1 has children [2, 3] -- give it scrambled
    children = [[2, 1], [], [3, 4], [], []]
    t = build_tree(children)
    assert t.children[0] == (1, 4)
    assert t.children[1] == (2, 3)
    assert t.parent == (None, 0, 1, 1, 0)


def test_build_path_rooted_at_end():
    t = build_tree([[1], [2], [3], [4], []])
    assert t.children == ((1,), (2,), (3,), (4,), ())


def test_build_rejects_duplicate_child():
    with pytest.raises(TreeError):
        build_tree([[1, 1], []])


def test_build_rejects_cycle():
    with pytest.raises(TreeError):
        build_tree([[1], [2], [1]])


def test_build_rejects_disconnected():
    with pytest.raises(TreeError):
        build_tree([[1], [], [], []])


def test_level_examples():
    assert level(star_tree(5), 0) == 0
    b3 = perfect_binary(3)
    leaf = next(u for u in range(b3.n) if not b3.children[u])
    assert level(b3, leaf) == 3
    assert level(path_tree(5), 4) == 4


def test_subtree_size_examples():
    t = path_tree(6)
    assert subtree_size(t, 0) == 6
    assert subtree_size(t, 5) == 1
    with pytest.raises(TreeError):
        subtree_size(t, 6)


def test_nearest_left_cousin_b2():
    b2 = perfect_binary(2)
    # level-2 vertices in order: 2, 3, 5, 6
    assert nearest_left_cousin(b2, 2) is None
    assert nearest_left_cousin(b2, 3) == 2
    assert nearest_left_cousin(b2, 5) == 3
    assert nearest_left_cousin(b2, 6) == 5


def test_nearest_left_cousin_sibling_case():
    t = star_tree(4)
    assert nearest_left_cousin(t, 2) == 1
    assert nearest_left_cousin(t, 1) is None


def test_ith_ancestor_clamps():
    b3 = perfect_binary(3)
    assert ith_ancestor(b3, 5, 0) == 5
    leaf = next(u for u in range(b3.n) if not b3.children[u])
    assert ith_ancestor(b3, leaf, 10) == 0
    t = path_tree(5)
    assert ith_ancestor(t, 3, 2) == 1


def test_is_admissible():
    t = path_tree(4)
    assert is_admissible(t, set())
    assert is_admissible(t, {0, 1, 2})
    assert not is_admissible(t, {0, 2})
    assert not is_admissible(t, {1})


def test_u_components_star_center():
    f = Forest.from_tree(star_tree(5))
    comps = u_components(f, 0)
    assert sorted(map(len, comps)) == [1, 1, 1, 1]


def test_u_components_path():
    f = Forest.from_tree(path_tree(5))
    assert sorted(map(len, u_components(f, 2))) == [2, 2]
    assert sorted(map(len, u_components(f, 4))) == [4]
    assert sorted(map(len, u_components(f, 0))) == [4]


def test_forest_induced_splits():
    f = Forest.from_tree(path_tree(6)).induced({0, 1, 3, 4})
    assert set(f.roots) == {0, 3}
    assert sorted(map(sorted, f.components())) == [[0, 1], [3, 4]]


@given(random_trees())
def test_descendant_interval_property(t):
    for u in range(t.n):
        desc = {u}
        stack = [u]
        while stack:
            v = stack.pop()
            for c in t.children[v]:
                desc.add(c)
                stack.append(c)
        assert desc == set(t.descendant_interval(u))


@given(random_trees())
def test_root_children_sizes_sum(t):
    assert sum(t.sizes[c] for c in t.children[0]) == t.n - 1


@given(random_trees())
def test_nearest_left_cousin_is_tight(t):
    for u in range(t.n):
        v = nearest_left_cousin(t, u)
        if v is None:
            assert all(t.levels[w] != t.levels[u] for w in range(u))
        else:
            assert t.levels[v] == t.levels[u]
            assert all(t.levels[w] != t.levels[u] for w in range(v + 1, u))


@given(random_trees(), st.data())
def test_admissible_prefix_is_connected(t, data):
    m = data.draw(st.integers(min_value=1, max_value=t.n))
    pref = t.prefix(m)
    assert pref.n == m  # RootedTree construction already enforces connectivity


@given(random_trees(), st.data())
def test_u_components_partition(t, data):
    u = data.draw(st.integers(min_value=0, max_value=t.n - 1))
    comps = u_components(Forest.from_tree(t), u)
    union = set()
    for c in comps:
        assert not (union & c)
        union |= c
    assert union == set(range(t.n)) - {u}


def test_text_formats_roundtrip():
    t = build_tree([[1, 4], [2, 3], [], [], []])
    assert to_parens(t) == "((()())())"
    assert from_parens(to_parens(t)) == t
    assert from_parent_csv(to_parent_csv(t)) == t
    assert parse_tree(to_parens(t)) == t
    assert parse_tree(to_parent_csv(t)) == t
    single = build_tree([[]])
    assert to_parens(single) == "()"
    assert to_parent_csv(single) == ""
    assert parse_tree("()") == single


@given(random_trees())
def test_text_formats_roundtrip_random(t):
    assert from_parens(to_parens(t)) == t
    assert from_parent_csv(to_parent_csv(t)) == t


def test_parens_rejects_garbage():
    for bad in ["", "(", "(()", ")(", "(x)"]:
        with pytest.raises(TreeError):
            from_parens(bad)
