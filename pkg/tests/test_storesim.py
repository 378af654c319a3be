import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seplrc.errors import ConfigError, LayoutInfeasible
from seplrc.storesim import (
    FailurePattern,
    format_report,
    make_layout,
    random_objects,
    report,
    simulate,
    stats_from_dict,
)


def test_layout_keeps_fibres_on_distinct_nodes(codes):
    code = codes("kondo-50").code
    layout = make_layout(code, 9)
    for fid in range(len(code.fibres)):
        nodes = [layout.placement[p] for p in code.fibre_positions(fid)]
        assert len(set(nodes)) == len(nodes)
    assert sorted(layout.positions_on([0])) == list(range(0, code.n, 9))
    with pytest.raises(LayoutInfeasible):
        make_layout(code, 0)


def test_patterns():
    assert FailurePattern.parse("single") == FailurePattern("single", 1)
    assert FailurePattern.parse("random:3") == FailurePattern("random", 3)
    for bad in ("random", "random:0", "random:x", "all", ""):
        with pytest.raises(ConfigError):
            FailurePattern.parse(bad)


def test_too_many_failures(codes):
    with pytest.raises(LayoutInfeasible):
        simulate(codes("cubic-k2").code, [], 3, "random:4")


def test_empty_run(codes):
    stats = simulate(codes("kondo-50").code, [], 9)
    assert stats.objects == stats.lost_symbols == stats.symbols_read == 0
    assert stats.saving_ratio is None and stats.reads_per_local_symbol is None


def test_report_round_trip(codes):
    code = codes("elliptic-m8").code
    stats = simulate(code, random_objects(code, 4, 1), 6, "random:2", seed=3)
    data = json.loads(json.dumps(report(stats)))
    assert report(stats_from_dict(data)) == data
    assert "saving_ratio" in format_report(stats)


def test_double_loss_in_fibre_goes_global(codes):
    # fibres sit on nodes {0,1,2} or {3,4,5}; seed 0 fails nodes 3 and 5
    code = codes("elliptic-m8").code
    stats = simulate(code, random_objects(code, 3, 2), 6, "random:2", seed=0)
    assert stats.failed_nodes == [3, 5]
    assert stats.local == 0
    assert stats.fallback == stats.lost_symbols == 18
    assert stats.symbols_read == 3 * code.k
    assert stats.mismatches == 0 and stats.verified == 18
    split = simulate(code, random_objects(code, 3, 2), 6, "random:2", seed=1)
    assert split.failed_nodes == [1, 4]
    assert split.local == split.lost_symbols == 18 and split.fallback == 0


def test_unrecoverable_when_too_much_is_lost(codes):
    code = codes("cubic-k4").code
    stats = simulate(code, random_objects(code, 2, 2), 9, "random:7", seed=0)
    assert stats.unrecoverable == stats.lost_symbols == 14
    assert stats.symbols_read == 0


def test_one_addition_in_simulation(codes):
    code = codes("hermitian-c").code
    stats = simulate(code, random_objects(code, 3, 4), 16, "single", seed=1)
    assert stats.methods == {"one-addition": stats.local}
    assert stats.reads_per_local_symbol == code.fibre_size - 1


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 18), st.integers(1, 6), st.integers(0, 1000))
def test_every_lost_symbol_is_accounted(nodes, fails, seed):
    from seplrc.paper_cases import built

    code = built("elliptic-m8").code
    fails = min(fails, nodes)
    stats = simulate(code, random_objects(code, 2, seed), nodes, f"random:{fails}", seed)
    assert stats.local + stats.fallback + stats.unrecoverable == stats.lost_symbols
    assert stats.mismatches == 0
    assert stats.verified == stats.local + stats.fallback
