import pytest

from weylgroupoid import catalog
from weylgroupoid.errors import AutomorphismError, RestrictionError
from weylgroupoid.exact import identity, mat_mul
from weylgroupoid.groupoid import enumerate_objects
from weylgroupoid.restriction import (
    RootMultiset,
    factor_automorphism,
    folding_decompose,
    parabolic_equals_folding,
    restrict_folding,
    restrict_parabolic,
    restrict_permutation,
    validate_automorphism,
)
from weylgroupoid.rootsys import RootSet

A3 = catalog.classical("A", 3)
G_A3 = ((0, 0, 1), (1, -1, 1), (1, 0, 0))


def test_a3_to_a2():
    rep = restrict_parabolic(A3, [1])
    assert rep.multiset.as_dict() == {((1, 0), 1): 2, ((0, 1), 1): 1, ((1, 1), 1): 2}
    assert set(rep.reduced_roots().positive_roots) == {(1, 0), (0, 1), (1, 1)}
    assert rep.localized == ((1, 0, 0),)


def test_non_lie_example_to_b2():
    rep = restrict_parabolic(catalog.cartan_example(), [1])
    assert set(rep.reduced_roots().positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}


def test_restriction_to_origin():
    with pytest.raises(RestrictionError, match="restriction to origin"):
        restrict_parabolic(A3, [1, 2, 3])


def test_iterated_single_walls_agree_with_direct_rule():
    R = catalog.classical("B", 4)
    direct = restrict_parabolic(R, [1, 3]).multiset
    # after deleting coordinate 1, old index 3 becomes index 2
    step = restrict_parabolic(restrict_parabolic(R, [1]).multiset, [2]).multiset
    assert direct == step


def test_fibers_and_json():
    rep = restrict_parabolic(catalog.classical("B", 3), [1])
    fibers = dict(rep.fibers)
    assert fibers[(1, 0, 0)] is None
    assert fibers[(1, 2, 2)] == ((1, 1), 2)
    data = rep.to_json()
    assert {"entries", "localized", "fibers"} <= set(data)
    assert RootMultiset.from_json(data) == rep.multiset


def test_multiset_invariants():
    with pytest.raises(RestrictionError):
        RootMultiset(2, {((1, 1), 2): 1})
    with pytest.raises(RestrictionError):
        RootMultiset(2, {((2, 2), 1): 1})
    m = RootMultiset(2, {((1, 0), 1): 1, ((1, 0), 2): 1})
    assert not m.reduced_flag and m.hyperplane_multiplicities() == {(1, 0): 2}


def test_permutation_must_be_automorphism():
    with pytest.raises(AutomorphismError, match="witness"):
        restrict_permutation(catalog.classical("B", 2), [2, 1])


def test_validate_automorphism():
    assert validate_automorphism(A3, identity(3))
    assert validate_automorphism(A3, G_A3)
    bad = validate_automorphism(A3, ((2, 1, 0), (1, 1, 0), (1, 1, 1)))
    assert not bad and bad.witness == (1, 0, 0)
    with pytest.raises(AutomorphismError):
        validate_automorphism(A3, ((2, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_folding_decompositions():
    d = folding_decompose(A3, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    assert d.delta1 == () and d.sigma == {1: 3, 2: 2, 3: 1} and d.word == ()
    d = folding_decompose(catalog.classical("A", 1), ((-1,),))
    assert d.delta1 == (1,) and d.sigma == {}
    with pytest.raises(AutomorphismError, match="requires involution"):
        folding_decompose(A3, ((0, 0, 1), (1, 0, 0), (0, 1, 0)))


def test_folding_intermediate_stage():
    d = folding_decompose(A3, G_A3)
    first = restrict_parabolic(d.roots, d.delta1).multiset
    assert sorted(m for _, _, m in first.entries) == [1, 2, 2]
    assert first.multiplicity((1, 1)) == 1


def test_identity_folding_is_trivial():
    rep = restrict_folding(A3, identity(3))
    assert rep.multiset == RootMultiset.from_rootset(A3)
    assert rep.localized == ()


def test_folding_without_negated_roots_is_a_permutation_restriction():
    swap = ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert restrict_folding(A3, swap).multiset == restrict_permutation(A3, [3, 2, 1]).multiset


def test_minus_identity_restricts_to_origin():
    with pytest.raises(RestrictionError, match="origin"):
        restrict_folding(catalog.classical("A", 1), ((-1,),))


def test_parabolic_equals_folding():
    assert parabolic_equals_folding(A3, [1, 2]) is None
    g = parabolic_equals_folding(A3, [2])
    assert [row[1] for row in g] == [0, -1, 0]
    assert restrict_folding(A3, g).multiset == restrict_parabolic(A3, [2]).multiset


def test_factor_automorphism():
    G = enumerate_objects(A3)
    f = factor_automorphism(G, identity(3))
    assert f.word == () and f.f == identity(3)
    f = factor_automorphism(G, ((0, 0, 1), (0, 1, 0), (1, 0, 0)))
    assert f.word == () and f.permutation == (3, 2, 1)
    f = factor_automorphism(G, G_A3)
    assert f.word and mat_mul(f.w_matrix, f.f) == G_A3


def test_factor_rejects_non_automorphism():
    G = enumerate_objects(A3)
    with pytest.raises(AutomorphismError):
        factor_automorphism(G, ((2, 1, 0), (1, 1, 0), (1, 1, 1)))


def test_folding_flags_crystallographic():
    rep = restrict_folding(RootSet(3, A3.positive_roots), G_A3)
    assert rep.crystallographic is True
