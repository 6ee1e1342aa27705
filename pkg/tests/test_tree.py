import pytest
from hypothesis import given, settings, strategies as st

from structree import verify
from structree.errors import NestingViolationError, PreconditionError
from structree.flow import max_flow, min_cut_from_flow
from structree.generators import cycle, path
from structree.nest import build_canonical_nested_set
from structree.network import Cut, CutPair
from structree.oracle import oracle_lambda
from structree.tree import (
    build_tree,
    canonical_expression,
    edge_realization,
    factor_graph,
    gomory_hu,
    nu_map,
    preimage_mask,
    tree_max_flow,
    tree_min_cut,
)

from conftest import networks


def tree_of(net):
    return build_tree(build_canonical_nested_set(net))


def test_single_edge(nets):
    net = nets["single_edge"]
    tree = tree_of(net)
    assert len(tree.signatures) == 2 and sorted(tree.nu) == [0, 1]
    assert tree_max_flow(tree, "a", "b") == 5
    assert tree_min_cut(tree, "a", "b").names() == ["a"]
    assert edge_realization(tree, 0) == (0, 1)
    leaf = tree.nu[0]
    fg = factor_graph(net, tree, leaf)
    assert fg.nu_vertices == (0,) and fg.rho_vertices == (0,)
    assert [(a, b) for a, b, _ in fg.edges] == [(("nu", 0), ("rho", 0))]


def test_path_tree():
    net = path([2, 3])
    tree = tree_of(net)
    assert len(tree.signatures) == 3 and sorted(tree.capacities) == [2, 3]
    mid = tree.nu[1]
    assert tree.degree(mid) == 2
    fg = factor_graph(net, tree, mid)
    assert fg.nu_vertices == (1,) and len(fg.rho_vertices) == 2
    assert all(fg.degree(("rho", j)) == 1 for j in fg.rho_vertices)
    assert fg.degree(("nu", 1)) == 2


def test_c4_star_and_centre_factor():
    net = cycle(4)
    tree = tree_of(net)
    centre = next(i for i in range(5) if tree.label(i) is None)
    assert tree.degree(centre) == 4 and sorted(tree.nu) == [i for i in range(5) if i != centre]
    fg = factor_graph(net, tree, centre)
    assert fg.nu_vertices == () and len(fg.rho_vertices) == 4
    assert all(fg.degree(("rho", j)) == 2 for j in fg.rho_vertices)
    assert len(fg.edges) == 4 and fg.is_connected()


def test_c4_gomory_hu_contracts_one_leaf():
    net = cycle(4)
    gh = gomory_hu(tree_of(net))
    assert len(gh.contracted) == 1 and len(gh.edges) == 3
    assert all(gh.path_min(s, t) == 2 for s in range(4) for t in range(s + 1, 4))


def test_c4_edge_realization():
    net = cycle(4)
    tree = tree_of(net)
    j = tree.incident[tree.nu[0]][0]
    s, t = edge_realization(tree, j)
    assert 0 in (s, t) and max_flow(net, s, t).value == 2


def test_c4_expressions():
    net = cycle(4)
    tree = tree_of(net)
    assert canonical_expression(tree, Cut.of(net, ["1"])) == {tree.nu[0]}
    odd = canonical_expression(tree, Cut.of(net, ["1", "3"]))
    assert odd == {tree.nu[0], tree.nu[2]}
    assert preimage_mask(tree, odd) == net.mask_of(["1", "3"])
    with pytest.raises(PreconditionError):
        canonical_expression(tree, Cut(net, net.full))


def test_member_of_family_expresses_as_its_side(nets):
    net = nets["random2"]
    tree = tree_of(net)
    for j, p in enumerate(tree.pairs):
        assert canonical_expression(tree, p.representative) == tree.side_vertices(j, True)


def test_crossing_family_rejected():
    net = cycle(4)
    with pytest.raises(NestingViolationError):
        build_tree([CutPair.of(Cut.of(net, ["1", "2"])), CutPair.of(Cut.of(net, ["2", "3"]))], net)


def test_laminar_family_size():
    net = path([1, 1, 1, 1, 1])
    pairs = [CutPair.of(Cut.of(net, list("abcdef"[:k]))) for k in (1, 2, 4)]
    tree = build_tree(pairs, net)
    assert len(tree.signatures) == 4 and len(tree.edges) == 3


def test_empty_family_gives_one_vertex():
    tree = build_tree([], cycle(3))
    assert len(tree.signatures) == 1 and tree.edges == ()


def test_nu_map_names(nets):
    net = nets["triangle"]
    tree = tree_of(net)
    assert nu_map(net, tree) == {"a": tree.nu[0], "b": tree.nu[1], "c": tree.nu[2]}
    with pytest.raises(PreconditionError):
        nu_map(cycle(3), tree)


def test_fig2_tree(nets):
    net = nets["fig2"]
    tree = build_tree(build_canonical_nested_set(net, 22))
    assert tree_max_flow(tree, "u", "p") == 12
    assert tree_min_cut(tree, "u", "p").names() == ["q", "r", "s", "t", "u", "v", "w"]
    hidden = [i for i in range(len(tree.signatures)) if tree.label(i) is None]
    assert (len(tree.signatures), len(hidden)) == (27, 5)
    hubs = [i for i in hidden if [tree.capacities[j] for j in tree.incident[i]] == [12] * 4]
    assert len(hubs) == 1
    path_kh = tree.path(tree.nu[net.vertex("k")], tree.nu[net.vertex("h")])
    caps = [tree.capacities[j] for j in path_kh]
    assert caps.count(min(caps)) == 2 and min(caps) == 12
    lam = build_canonical_nested_set(net, 22).lam
    for j in range(len(tree.pairs)):
        s, t = edge_realization(tree, j)
        assert lam(s, t) == tree.capacities[j] and j in tree.path(tree.nu[s], tree.nu[t])


@settings(max_examples=60, deadline=None)
@given(networks(min_n=2, max_n=9))
def test_tree_shape_and_flow_agreement(net):
    tree = tree_of(net)
    assert len(tree.edges) == len(tree.signatures) - 1
    assert len(set(tree.nu)) == net.n
    assert verify.flow_agreement(tree, oracle_lambda(net)) == []
    assert verify.gomory_hu_agreement(tree, oracle_lambda(net)) == []


@settings(max_examples=40, deadline=None)
@given(networks(min_n=2, max_n=8), st.data())
def test_nu_difference_law(net, data):
    tree = tree_of(net)
    x = data.draw(st.integers(0, net.n - 1))
    y = data.draw(st.integers(0, net.n - 1))
    diff = tree.signatures[tree.nu[x]] ^ tree.signatures[tree.nu[y]]
    assert diff == sum(1 << j for j, p in enumerate(tree.pairs) if p.separates(x, y))


@settings(max_examples=40, deadline=None)
@given(networks(min_n=2, max_n=8), st.data())
def test_tree_min_cut(net, data):
    tree = tree_of(net)
    s = data.draw(st.integers(0, net.n - 1))
    t = data.draw(st.integers(0, net.n - 1).filter(lambda v: v != s))
    cut = tree_min_cut(tree, s, t)
    assert s in cut and t not in cut
    assert cut.capacity == max_flow(net, s, t).value
    sf = min_cut_from_flow(net, max_flow(net, s, t))
    assert sf.members & ~cut.members == 0


@settings(max_examples=40, deadline=None)
@given(networks(min_n=2, max_n=8))
def test_factor_graphs(net):
    tree = tree_of(net)
    for v in range(len(tree.signatures)):
        fg = factor_graph(net, tree, v)
        assert fg.is_connected()
        assert set(fg.nu_vertices) == set(tree.preimage(v))
        for j in fg.rho_vertices:
            assert fg.degree(("rho", j)) == len(net.coboundary_mask(tree.pairs[j].mask))


@settings(max_examples=30, deadline=None)
@given(networks(min_n=2, max_n=6))
def test_expressions_reconstruct_every_cut(net):
    tree = tree_of(net)
    for a in range(1, net.full):
        expr = canonical_expression(tree, Cut(net, a))
        assert preimage_mask(tree, expr) == a
        assert canonical_expression(tree, Cut(net, a), twig="largest") == expr
