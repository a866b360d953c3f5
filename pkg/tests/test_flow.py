import itertools
import random

import pytest

from optreal import DegreeSequence, FlowNetwork, NetworkError, max_flow
from optreal.dominating import build_mds_flow


def brute_min_cut(net: FlowNetwork) -> int:
    """Minimum s-t cut by enumerating all vertex bipartitions."""
    others = [v for v in range(net.node_count) if v not in (net.source, net.sink)]
    best = None
    for r in range(len(others) + 1):
        for extra in itertools.combinations(others, r):
            side = {net.source, *extra}
            cap = sum(c for (u, v, c) in net.iter_arcs() if u in side and v not in side)
            best = cap if best is None else min(best, cap)
    return best


def test_bottleneck_path():
    net = FlowNetwork(3, 0, 2, [(0, 1, 2), (1, 2, 3)])
    assignment = max_flow(net)
    assignment.validate()
    assert assignment.value == 2


def test_source_without_arcs():
    assert max_flow(FlowNetwork(2, 0, 1, [])).value == 0


def test_triangle_reduction_saturates():
    net = build_mds_flow(DegreeSequence((2, 2, 2)), 1)
    assert max_flow(net).value == 6


@pytest.mark.parametrize("bad", [
    [(0, 1, -1)],            # negative capacity
    [(1, 0, 1)],             # arc entering the source
    [(2, 1, 1)],             # arc leaving the sink
    [(0, 1, 1), (0, 1, 2)],  # duplicate arc
    [(1, 1, 1)],             # self-loop
])
def test_malformed_networks_rejected(bad):
    with pytest.raises(NetworkError):
        FlowNetwork(3, 0, 2, bad)


def test_max_flow_equals_min_cut_randomized():
    rng = random.Random(4242)
    for _ in range(200):
        n = rng.randint(2, 12)
        arcs = []
        seen = set()
        for _ in range(rng.randint(0, 2 * n * (n - 1) // 3)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v or v == 0 or u == n - 1 or (u, v) in seen:
                continue
            seen.add((u, v))
            arcs.append((u, v, rng.randint(0, 7)))
        net = FlowNetwork(n, 0, n - 1, arcs)
        assignment = max_flow(net)
        assignment.validate()
        assert assignment.value == brute_min_cut(net)


def test_deterministic_for_fixed_insertion_order():
    rng = random.Random(5)
    arcs = []
    seen = set()
    for _ in range(40):
        u, v = rng.randrange(8), rng.randrange(8)
        if u == v or v == 0 or u == 7 or (u, v) in seen:
            continue
        seen.add((u, v))
        arcs.append((u, v, rng.randint(1, 5)))
    net = FlowNetwork(8, 0, 7, arcs)
    first = max_flow(net)
    second = max_flow(net)
    assert list(first.flows) == list(second.flows)
    assert first.value == second.value


def test_conservation_on_reduction_networks():
    rng = random.Random(6)
    for _ in range(30):
        n = rng.randint(2, 8)
        vals = tuple(sorted((rng.randint(1, n - 1) for _ in range(n)), reverse=True))
        gamma = rng.randint(1, n)
        assignment = max_flow(build_mds_flow(DegreeSequence(vals), gamma))
        assignment.validate()
