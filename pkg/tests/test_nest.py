import json

import pytest
from hypothesis import given, settings, strategies as st

from structree import verify
from structree.errors import PreconditionError, VertexLookupError
from structree.generators import cycle, path
from structree.nest import build_canonical_nested_set, optimality_certificate, provenance
from structree.network import Cut, CutPair

from conftest import networks


def names_of(system):
    return sorted(sorted(p.names()) for p in system.pairs)


def test_c4_keeps_only_singletons():
    system = build_canonical_nested_set(cycle(4))
    assert names_of(system) == [["2"], ["2", "3", "4"], ["3"], ["4"]]
    assert frozenset({"1"}) in system.as_sets()
    lv = system.levels[2]
    assert len(lv.candidates) == len(lv.nested) == 6 and len(lv.accepted) == 4


def test_path_keeps_end_edges():
    system = build_canonical_nested_set(path([2, 3]))
    assert system.as_sets() == {frozenset(s) for s in ("a", "bc", "c", "ab")}
    assert [p.capacity for p in system.upto(2)] == [2]


def test_single_edge(nets):
    system = build_canonical_nested_set(nets["single_edge"])
    assert len(system.pairs) == 1 and system.pairs[0].capacity == 5


def test_certificate_c4():
    net = cycle(4)
    system = build_canonical_nested_set(net)
    one = CutPair.of(Cut.of(net, ["1"]))
    cert = optimality_certificate(system, one, witness=("1", "3"))
    assert cert.level == 2 and cert.mu == 0 and cert.witness == (0, 2)
    assert sorted(sorted(p.side_containing("1").names()) for p, _ in cert.losers) == [["1", "2"], ["1", "4"]]
    assert all(m == 1 for _, m in cert.losers)
    assert [p.names() for p, _ in cert.ties] == [["3"]]


def test_certificate_rejects_foreign_witness():
    net = cycle(4)
    system = build_canonical_nested_set(net)
    with pytest.raises(VertexLookupError):
        optimality_certificate(system, CutPair.of(Cut.of(net, ["1"])), witness=("2", "3"))
    with pytest.raises(VertexLookupError):
        optimality_certificate(system, CutPair.of(Cut.of(net, ["1", "2"])))


def test_unknown_reference_family():
    with pytest.raises(PreconditionError):
        build_canonical_nested_set(cycle(4), reference="all")


def test_provenance_statuses():
    doc = provenance(build_canonical_nested_set(cycle(4)))
    rows = doc["levels"][0]["cuts"]
    assert doc["levels"][0]["capacity"] == 2
    assert sorted(r["status"] for r in rows) == ["accepted"] * 4 + ["not optimal"] * 2
    json.dumps(doc)


def test_provenance_reports_lower_level_crossings(nets):
    doc = provenance(build_canonical_nested_set(nets["random1"]))
    rows = [r for lv in doc["levels"] for r in lv["cuts"]]
    assert {r["status"] for r in rows} == {"accepted", "crosses lower level"}
    assert all(r["mu_lower"] > 0 for r in rows if r["status"] == "crosses lower level")


def test_thin_reference_variant_on_c4():
    a = build_canonical_nested_set(cycle(4), reference="thin")
    assert names_of(a) == names_of(build_canonical_nested_set(cycle(4)))


def test_corpus_families_are_nested_and_separating(nets):
    for name, net in nets.items():
        if net.n > 12:
            continue
        system = build_canonical_nested_set(net)
        assert verify.nesting(system) == [], name
        assert verify.separation(system) == [], name


@settings(max_examples=40, deadline=None)
@given(networks(min_n=2, max_n=8))
def test_nested_separating_deterministic(net):
    system = build_canonical_nested_set(net)
    assert verify.nesting(system) == []
    assert verify.separation(system) == []
    assert build_canonical_nested_set(net).pairs == system.pairs
    lower = []
    for n, lv in system.levels.items():
        # accepted cuts are nested with everything accepted below them
        for r in lv.accepted:
            assert r.capacity == n and lv.mu_lower[r.pair.mask] == 0
        lower.extend(lv.accepted)


@settings(max_examples=25, deadline=None)
@given(networks(min_n=3, max_n=7), st.randoms(use_true_random=False))
def test_equivariant(net, rnd):
    assert verify.equivariance(net, rnd) == []
