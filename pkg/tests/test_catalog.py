import pytest

from weylgroupoid import catalog
from weylgroupoid.errors import WeylGroupoidError
from weylgroupoid.groupoid import enumerate_objects, verify_axioms
from weylgroupoid.rootsys import canonical_form, cartan_from_roots

COUNTS = [("A", n, n * (n + 1) // 2) for n in range(1, 7)]
COUNTS += [(t, n, n * n) for t in "BC" for n in range(2, 7)]
COUNTS += [("D", n, n * (n - 1)) for n in range(4, 8)]
COUNTS += [("E", 6, 36), ("E", 7, 63), ("E", 8, 120), ("F", 4, 24), ("G", 2, 6)]


@pytest.mark.parametrize("t, n, count", COUNTS)
def test_root_counts(t, n, count):
    R = catalog.classical(t, n)
    assert len(R) == count
    # the Cartan matrix read off the roots is the one the roots were built from
    assert cartan_from_roots(R) == catalog.cartan_matrix(t, n)


def test_b3_listing():
    assert set(catalog.classical("B", 3).positive_roots) == {
        (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2), (1, 0, 0),
        (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 2)}


def test_named_and_invalid():
    assert catalog.classical("E7") == catalog.classical("E", 7)
    for bad in [("D", 3), ("E", 5), ("F", 3), ("X", 2)]:
        with pytest.raises(WeylGroupoidError):
            catalog.classical(*bad)


def test_braidings():
    a2 = catalog.example_braiding("a2_minus_one")
    assert [[x.exp for x in row] for row in a2.q] == [[0.5, 0.5], [0, 0.5]]
    cyc = catalog.example_braiding("cycle_rank3")
    assert all(cyc[i, i].order == 2 for i in (1, 2, 3))
    assert all((cyc[i, j] * cyc[j, i]).order == 3 for i in (1, 2, 3) for j in (1, 2, 3) if i != j)
    u = catalog.example_braiding("uq_plus", "A", 1, 5)
    assert u.q[0][0].exp * 5 == 2
    assert catalog.example_braiding("b2_generic(7)") == catalog.b2_generic(7)
    assert catalog.example_braiding("uq_plus(E,6,5)").rank == 6
    with pytest.raises(WeylGroupoidError):
        catalog.example_braiding("nope")


def test_parabolic_type():
    assert catalog.parabolic_type(catalog.classical("E7"), (1, 2, 6, 7)) == ["A1", "A1", "A2"]
    assert catalog.parabolic_type(catalog.classical("B", 3), (2, 3)) == ["B2"]
    assert catalog.parabolic_type(catalog.classical("D", 5), (2, 3, 4, 5)) == ["D4"]


def test_survey_a3_and_b3():
    a2 = canonical_form(catalog.classical("A", 2))
    assert a2 in catalog.survey_restrictions(catalog.classical("A", 3), 2).entries
    b2 = canonical_form(catalog.classical("B", 2))
    assert b2 in catalog.survey_restrictions(catalog.classical("B", 3), 2).entries


def test_survey_e7_finds_thirteen_roots():
    result = catalog.survey_restrictions(catalog.classical("E", 7), 3)
    assert not result.partial and result.objects == 1
    assert any(len(ms.reduced_roots()) == 13 for ms, _ in result.entries.values())


def test_survey_outputs_are_crystallographic():
    for t, n in [("A", 4), ("B", 4), ("D", 4)]:
        result = catalog.survey_restrictions(catalog.classical(t, n), 2, standard_chamber_only=False)
        for ms, _ in result.entries.values():
            assert verify_axioms(enumerate_objects(ms.reduced_roots())).ok


def test_survey_partial_when_capped():
    result = catalog.survey_restrictions(catalog.classical("A", 4), 2, max_objects=5,
                                         standard_chamber_only=False)
    assert result.partial


def test_survey_parallel_matches_serial():
    R = catalog.classical("B", 3)
    serial = catalog.survey_restrictions(R, 2, standard_chamber_only=False)
    parallel = catalog.survey_restrictions(R, 2, standard_chamber_only=False, jobs=2)
    assert serial.to_json() == parallel.to_json()
