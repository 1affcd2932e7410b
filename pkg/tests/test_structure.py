import pytest

from finis.errors import (
    HTooLarge,
    NotSolvable,
    TooLarge,
    TooManyClasses,
    TrivialGroup,
)
from finis.perm_core import (
    cyclic,
    dihedral,
    direct_product,
    klein_four,
    parse_permutation,
    quaternion,
    subgroup_generated,
    symmetric,
    alternating,
    trivial_group,
)
from finis.structure import (
    center,
    centralizer,
    class_equation,
    classify,
    conjugacy_classes,
    derived_series,
    egyptian_decompositions,
    frattini,
    is_simple,
    jordan_holder,
    lower_central_series,
    maximal_subgroups,
    minimal_normal_elementary,
    normal_subgroups,
    normalizer,
    subgroup_lattice,
)


def test_class_sizes_frozen():
    assert conjugacy_classes(symmetric(3)).sizes == [1, 2, 3]
    assert conjugacy_classes(symmetric(4)).sizes == [1, 3, 6, 6, 8]
    assert conjugacy_classes(alternating(5)).sizes == [1, 12, 12, 15, 20]
    assert conjugacy_classes(quaternion()).sizes == [1, 1, 2, 2, 2]
    assert conjugacy_classes(cyclic(6)).sizes == [1] * 6


def test_identity_class_is_first():
    for g in (symmetric(4), quaternion(), dihedral(6)):
        tab = conjugacy_classes(g)
        assert tab.classes[0].rep.is_identity()
        assert tab.classes[0].size == 1


def test_inverse_class():
    tab = conjugacy_classes(cyclic(3))
    assert tab.inverse_class(0) == 0
    assert tab.inverse_class(1) == 2
    assert tab.inverse_class(2) == 1
    tab4 = conjugacy_classes(symmetric(4))
    assert all(tab4.inverse_class(i) == i for i in range(len(tab4)))


def test_centralizer_orders():
    s4 = symmetric(4)
    assert centralizer(s4, parse_permutation("(1 2)", 4)).order() == 4
    assert centralizer(s4, parse_permutation("(1 2 3)", 4)).order() == 3
    assert centralizer(s4, parse_permutation("(1 2)(3 4)", 4)).order() == 8
    assert centralizer(s4, s4.identity()).order() == 24


def test_center():
    assert center(symmetric(4)).order() == 1
    assert center(dihedral(4)).order() == 2
    assert center(quaternion()).order() == 2
    assert center(cyclic(12)).order() == 12


def test_normalizer():
    s4 = symmetric(4)
    c3 = subgroup_generated(s4, [parse_permutation("(1 2 3)", 4)])
    assert normalizer(s4, c3).order() == 6
    d4 = subgroup_generated(
        s4, [parse_permutation("(1 2 3 4)", 4), parse_permutation("(1 3)", 4)])
    assert normalizer(s4, d4).order() == 8


def test_derived_series_frozen():
    assert [h.order() for h in derived_series(symmetric(4))] == [24, 12, 4, 1]
    assert [h.order() for h in derived_series(symmetric(3))] == [6, 3, 1]
    assert [h.order() for h in derived_series(symmetric(5))] == [120, 60]
    assert [h.order() for h in derived_series(quaternion())] == [8, 2, 1]
    assert [h.order() for h in derived_series(cyclic(6))] == [6, 1]


def test_lower_central_series_frozen():
    assert [h.order() for h in lower_central_series(symmetric(3))] == [6, 3]
    assert [h.order() for h in lower_central_series(quaternion())] == [8, 2, 1]
    assert [h.order() for h in lower_central_series(dihedral(4))] == [8, 2, 1]
    assert [h.order() for h in lower_central_series(alternating(4))] == [12, 4]


def test_classify_profiles():
    p = classify(symmetric(3))
    assert p.solvable and p.derived_length == 2 and not p.nilpotent
    assert p.nilpotency_class is None
    p = classify(quaternion())
    assert p.nilpotent and p.nilpotency_class == 2 and p.solvable
    p = classify(symmetric(5))
    assert not p.solvable and p.derived_length is None
    p = classify(cyclic(12))
    assert p.cyclic and p.abelian and p.nilpotency_class == 1
    p = classify(alternating(4))
    assert p.solvable and not p.nilpotent
    p = classify(trivial_group())
    assert p.solvable and p.nilpotent and p.nilpotency_class == 0


def test_normal_subgroups_frozen():
    assert [n.order() for n in normal_subgroups(symmetric(4))] == [1, 4, 12, 24]
    assert [n.order() for n in normal_subgroups(alternating(5))] == [1, 60]
    assert [n.order() for n in normal_subgroups(quaternion())] == \
        [1, 2, 4, 4, 4, 8]
    assert [n.order() for n in normal_subgroups(cyclic(12))] == \
        [1, 2, 3, 4, 6, 12]
    assert [n.order() for n in normal_subgroups(symmetric(5))] == [1, 60, 120]


def test_normal_subgroups_class_cap():
    with pytest.raises(TooManyClasses):
        normal_subgroups(cyclic(27))


def test_is_simple():
    assert is_simple(alternating(5))
    assert is_simple(cyclic(5))
    assert not is_simple(alternating(4))
    assert not is_simple(cyclic(6))
    assert not is_simple(trivial_group())


def test_jordan_holder_frozen():
    assert sorted(f.order for f in jordan_holder(symmetric(4))) == [2, 2, 2, 3]
    assert sorted(f.order for f in jordan_holder(cyclic(12))) == [2, 2, 3]
    assert [f.order for f in jordan_holder(alternating(5))] == [60]
    assert jordan_holder(trivial_group()) == []


def test_jordan_holder_seed_invariance():
    base = sorted((f.order, f.class_sizes) for f in jordan_holder(symmetric(4)))
    for seed in range(1, 11):
        again = sorted((f.order, f.class_sizes)
                       for f in jordan_holder(symmetric(4), seed=seed))
        assert again == base


def test_subgroup_lattice_counts():
    assert len(subgroup_lattice(symmetric(3))) == 6
    assert len(subgroup_lattice(dihedral(4))) == 10
    assert len(subgroup_lattice(quaternion())) == 6
    assert len(subgroup_lattice(alternating(4))) == 10
    assert len(subgroup_lattice(klein_four())) == 5
    assert len(subgroup_lattice(cyclic(12))) == 6
    assert len(subgroup_lattice(symmetric(4))) == 30


def test_subgroup_lattice_cap():
    big = direct_product(cyclic(32), cyclic(32))
    with pytest.raises(TooLarge):
        subgroup_lattice(big)


def test_maximal_subgroups_s4():
    maxes = maximal_subgroups(symmetric(4))
    assert sorted(m.order() for m in maxes) == [6, 6, 6, 6, 8, 8, 8, 12]


def test_frattini_frozen():
    assert frattini(quaternion()).order() == 2
    assert frattini(dihedral(4)).order() == 2
    assert frattini(cyclic(4)).order() == 2
    assert frattini(klein_four()).order() == 1
    assert frattini(symmetric(4)).order() == 1
    assert frattini(cyclic(12)).order() == 2


def test_egyptian_decompositions_frozen():
    assert egyptian_decompositions(1) == [(1,)]
    assert egyptian_decompositions(2) == [(2, 2)]
    assert sorted(egyptian_decompositions(3)) == [(2, 3, 6), (2, 4, 4),
                                                  (3, 3, 3)]
    assert len(egyptian_decompositions(4)) == 14
    assert len(egyptian_decompositions(5)) == 147
    with pytest.raises(HTooLarge):
        egyptian_decompositions(9)


def test_class_equation():
    rep = class_equation(symmetric(3))
    assert rep.class_sizes == (1, 2, 3)
    assert rep.centralizer_orders == (6, 3, 2)
    assert tuple(sorted(rep.centralizer_orders)) in egyptian_decompositions(3)
    rep = class_equation(quaternion())
    assert rep.centralizer_orders == (8, 8, 4, 4, 4)


def test_minimal_normal_elementary():
    p, b = minimal_normal_elementary(symmetric(4))
    assert (p, b.order()) == (2, 4)
    p, b = minimal_normal_elementary(alternating(4))
    assert (p, b.order()) == (2, 4)
    p, b = minimal_normal_elementary(symmetric(3))
    assert (p, b.order()) == (3, 3)
    p, b = minimal_normal_elementary(cyclic(12))
    assert (p, b.order()) == (2, 2)
    with pytest.raises(NotSolvable):
        minimal_normal_elementary(symmetric(5))
    with pytest.raises(TrivialGroup):
        minimal_normal_elementary(trivial_group())
