import pytest
from hypothesis import given, settings, strategies as st

from structree.errors import PreconditionError
from structree.flow import Flow, check_flow, flow_across, max_flow, min_cut_from_flow
from structree.generators import cycle, path
from structree.network import Cut
from structree.oracle import oracle_min_cut

from conftest import networks


def test_single_edge(nets):
    net = nets["single_edge"]
    f = max_flow(net, "a", "b")
    assert f.value == 5
    assert min_cut_from_flow(net, f).names() == ["a"]


def test_triangle(nets):
    net = nets["triangle"]
    f = max_flow(net, "a", "b")
    assert f.value == 3
    assert min_cut_from_flow(net, f).names() == ["a", "c"]


def test_path_values():
    net = path([2, 3])
    assert [max_flow(net, s, t).value for s, t in ("ab", "bc", "ac")] == [2, 3, 2]


def test_fig1(nets):
    net = nets["fig1"]
    f = max_flow(net, "s", "t")
    assert f.value == 7
    cut = min_cut_from_flow(net, f)
    assert cut.capacity == 7
    assert sorted(cut.names()) == ["a", "c", "d", "e", "h", "q", "s", "u"]


def test_same_endpoints_rejected():
    with pytest.raises(PreconditionError):
        max_flow(cycle(4), "1", "1")


def test_zero_flow_is_not_maximal():
    net = cycle(4)
    idle = Flow(net, 0, 2, (None,) * 4, (0,) * 4, 0)
    check_flow(net, idle)
    with pytest.raises(PreconditionError):
        min_cut_from_flow(net, idle)


def test_check_flow_catches_overflow():
    net = path([2, 3])
    bad = Flow(net, 0, 2, (0, 1), (3, 3), 3)
    with pytest.raises(PreconditionError):
        check_flow(net, bad)


@settings(max_examples=60)
@given(networks(), st.data(), st.booleans())
def test_max_flow_min_cut(net, data, reverse):
    s = data.draw(st.integers(0, net.n - 1))
    t = data.draw(st.integers(0, net.n - 1).filter(lambda x: x != s))
    f = max_flow(net, s, t, reverse=reverse)
    check_flow(net, f)
    truth = oracle_min_cut(net, s, t)
    assert f.value == truth.value
    sf = min_cut_from_flow(net, f)
    assert s in sf and t not in sf and sf.capacity == f.value
    # the reachable set is the smallest minimum cut on the source side
    assert all(sf.members & ~sum(1 << x for x in c) == 0 for c in truth.cuts)
    for c in truth.cuts:
        assert flow_across(net, f, Cut(net, sum(1 << x for x in c))) == f.value


@settings(max_examples=30)
@given(networks(min_n=3))
def test_scan_order_changes_flow_not_value(net):
    f, g = max_flow(net, 0, net.n - 1), max_flow(net, 0, net.n - 1, reverse=True)
    assert f.value == g.value
    assert min_cut_from_flow(net, f) == min_cut_from_flow(net, g)
