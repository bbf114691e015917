from weylgroupoid import catalog
from weylgroupoid.complex import (
    build_complex,
    complex_dot,
    decorate,
    decorated_json,
    euler_characteristic,
)
from weylgroupoid.groupoid import enumerate_objects
from weylgroupoid.nichols import HilbertSeries, hilbert_full


def cycle():
    return enumerate_objects(catalog.cycle_rank3_roots())


def test_cycle_counts():
    cx = build_complex(cycle())
    assert cx.counts() == {0: 18, 1: 48, 2: 32}
    assert euler_characteristic(cx) == 2


def test_minus_one_cell_is_optional():
    G = enumerate_objects(catalog.classical("A", 1))
    assert build_complex(G).counts() == {0: 2}
    cx = build_complex(G, include_minus_one=True)
    assert cx.counts() == {-1: 1, 0: 2}
    assert len(cx.cells[-1][0].members) == 2
    assert euler_characteristic(cx) == 2


def test_hexagon():
    cx = build_complex(enumerate_objects(catalog.classical("A", 2)))
    assert cx.counts() == {0: 6, 1: 6}
    assert euler_characteristic(cx) == 0


def test_chamber_cells_match_objects():
    G = cycle()
    assert len(build_complex(G).cells[2]) == len(G)


def test_decorations():
    G = cycle()
    Q = catalog.cycle_rank3()
    cx = build_complex(G)
    edge = decorate(G, cx.cell_of(0, (2,)), Q)
    assert edge.hilbert_restricted == HilbertSeries([(2, 1), (2, 1), (3, 1), (3, 1), (3, 2), (2, 2)])
    assert len(edge.restriction.reduced_roots()) == 3
    vertex = decorate(G, cx.cell_of(0, (1, 3)), Q)
    assert vertex.restriction.multiset.as_dict() == {((1,), 1): 4}
    assert vertex.hilbert_restricted == HilbertSeries([(2, 1), (2, 1), (3, 1), (3, 1)])
    chamber = decorate(G, cx.cell_of(0, ()), Q)
    assert chamber.localization_roots == ()
    assert chamber.hilbert_restricted == hilbert_full(Q, G.seed.roots)


def test_cell_members_share_restrictions():
    G = cycle()
    cx = build_complex(G)
    for cell in cx.all_cells():
        decorate(G, cell)  # raises on disagreement
    assert all(len(c.members) == 2 for c in cx.cells[1])


def test_json_and_dot_are_deterministic():
    G = cycle()
    Q = catalog.cycle_rank3()
    a = decorated_json(G, build_complex(G), Q)
    b = decorated_json(cycle(), build_complex(cycle()), Q)
    assert a == b and a["euler_characteristic"] == 2
    dot = complex_dot(build_complex(G))
    assert dot == complex_dot(build_complex(cycle()))
    assert dot.count(" -- ") == 32 * 3 + 48 * 2
