import pytest

from weylgroupoid import catalog
from weylgroupoid.errors import InvalidRootSet, NotCartanObject
from weylgroupoid.rootsys import (
    RootSet,
    canonical_form,
    cartan_from_roots,
    reflect_object,
    reflection_matrix,
)


def test_cartan_of_non_lie_example():
    assert cartan_from_roots(catalog.cartan_example()) == ((2, 0, -1), (0, 2, -1), (-1, -2, 2))


def test_cartan_of_b2_roots():
    # 2*e1 + e2 is a root, e1 + 2*e2 is not
    R = RootSet(2, [(1, 0), (0, 1), (1, 1), (2, 1)])
    assert cartan_from_roots(R) == ((2, -2), (-1, 2))


def test_rank_one():
    assert cartan_from_roots(RootSet(1, [(1,)])) == ((2,),)


def test_reflection_leaving_the_positive_cone_is_rejected():
    # e1 and e2 are orthogonal here, so s_1 sends (1,2) to (-1,2)
    R = RootSet(2, [(1, 0), (0, 1), (1, 2)])
    assert cartan_from_roots(R) == ((2, 0), (0, 2))
    with pytest.raises(NotCartanObject, match="not a Cartan-graph object"):
        reflect_object(R, 1)


@pytest.mark.parametrize("roots, msg", [
    ([(1, 0), (1, 1)], "simple root e_2 missing"),
    ([(1, 0), (0, 1), (2, 2), (1, 1)], "proportional"),
    ([(1, 0), (0, 1), (1, -1)], "not positive"),
    ([(1, 0), (0, 1), (0, 0)], "zero vector"),
])
def test_invalid_root_sets(roots, msg):
    with pytest.raises(InvalidRootSet, match=msg):
        RootSet(2, roots)


def test_reflection_of_cycle_seed():
    R = catalog.cycle_rank3_roots()
    R2 = reflect_object(R, 2)
    assert set(R2.positive_roots) == {(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1),
                                      (1, 1, 1), (1, 2, 1)}
    assert reflect_object(R2, 2) == R


def test_reflection_matrix_matches_first_simple_reflection():
    c = cartan_from_roots(catalog.cartan_example())
    assert reflection_matrix(c, 1) == ((-1, 0, 1), (0, 1, 0), (0, 0, 1))


def test_canonical_form_ignores_labels():
    R = catalog.classical("B", 2)
    swapped = RootSet(2, [(b, a) for a, b in R.positive_roots])
    assert canonical_form(R) == canonical_form(swapped)
    assert canonical_form(R) != canonical_form(catalog.classical("A", 2))


def test_json_round_trip():
    R = catalog.classical("B", 3)
    assert RootSet.from_json(R.to_json()) == R
