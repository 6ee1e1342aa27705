import pytest
from hypothesis import given, settings

from structree.atlas import enumerate_proper_cuts, lambda_table, mu, thin_cuts
from structree.errors import CapacityGuardError
from structree.generators import complete, cycle, path
from structree.network import Cut, CutPair, is_tight
from structree.oracle import oracle_lambda, oracle_min_cut

from conftest import networks


def test_c4_thin_cuts():
    net = cycle(4)
    strata = thin_cuts(net)
    assert list(strata) == [2]
    recs = strata[2]
    assert len(recs) == 6
    single = next(r for r in recs if r.pair.names() == ["2"])
    assert single.witnesses == ((0, 1), (1, 2), (1, 3))
    half = next(r for r in recs if r.pair.names() == ["3", "4"])
    assert half.witnesses == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_c4_mu_of_half_against_thin_family():
    net = cycle(4)
    family = [r.pair for r in thin_cuts(net)[2]]
    # {1,2} crosses exactly the other half {2,3}
    assert mu(Cut.of(net, ["1", "2"]), family) == 1
    assert mu(Cut.of(net, ["1"]), family) == 0


def test_path_strata():
    net = path([2, 3])
    strata = thin_cuts(net)
    assert {n: [r.pair.names() for r in rs] for n, rs in strata.items()} == {2: [["b", "c"]], 3: [["c"]]}


def test_enumeration_counts_each_pair_once():
    net = complete(5)
    pairs = [p for p, _ in enumerate_proper_cuts(net)]
    assert len(pairs) == 2 ** 4 - 1 == len(set(pairs))


def test_limit_guard():
    net = cycle(9)
    with pytest.raises(CapacityGuardError):
        thin_cuts(net, limit=8)
    with pytest.raises(CapacityGuardError):
        list(enumerate_proper_cuts(net, limit=8))


def test_lambda_table_matches_oracle(nets):
    for name, net in nets.items():
        if net.n > 12:
            continue
        assert [list(r) for r in lambda_table(net).values] == oracle_lambda(net), name


@settings(max_examples=40, deadline=None)
@given(networks(min_n=2, max_n=7))
def test_thin_cuts_are_the_oracle_min_cuts(net):
    strata = thin_cuts(net)
    by_witness: dict = {}
    for n, recs in strata.items():
        for r in recs:
            assert r.capacity == n == r.pair.capacity
            assert is_tight(net, r.pair.representative)
            for w in r.witnesses:
                by_witness.setdefault(w, set()).add(r.pair)
    for u in range(net.n):
        for v in range(u + 1, net.n):
            truth = {CutPair.of(Cut(net, sum(1 << x for x in c))) for c in oracle_min_cut(net, u, v).cuts}
            assert by_witness.get((u, v), set()) == truth
