import random

import pytest

from finis.abelian_coh import abelianize
from finis.errors import (
    BadInput,
    ElementNotInGroup,
    NotASubgroup,
    OddOrder,
    SylowNotAbelian,
)
from finis.perm_core import (
    PermGroup,
    alternating,
    cosets,
    cyclic,
    dihedral,
    parse_permutation,
    quaternion,
    subgroup_generated,
    symmetric,
)
from finis.structure import normalizer
from finis.sylow_fusion import is_prime, sylow
from finis.transfer import (
    TransferMap,
    cyclic_2sylow_obstruction,
    legendre_gauss,
    transfer,
    transfer_image_in_sylow,
)


def _subgroup_of_order(g, n):
    for p in g.perms():
        if p.order() == n:
            return subgroup_generated(g, [p])
    raise AssertionError("no cyclic subgroup of order %d" % n)


def test_transfer_map_validation():
    s3 = symmetric(3)
    c4 = cyclic(4)
    with pytest.raises(NotASubgroup):
        TransferMap(s3, c4)
    a3 = alternating(3)
    with pytest.raises(BadInput):
        TransferMap(s3, a3, reps=[s3.identity()])
    ident = s3.identity()
    rot = parse_permutation("(1 2 3)", 3)
    with pytest.raises(BadInput):
        TransferMap(s3, a3, reps=[ident, rot])  # same coset twice
    with pytest.raises(ElementNotInGroup):
        TransferMap(s3, a3, reps=[ident, (1, 0, 2, 3)])
    tm = TransferMap(s3, a3)
    with pytest.raises(ElementNotInGroup):
        transfer(tm, parse_permutation("(1 4)", 4))


def test_identity_transfers_to_zero():
    pairs = [
        (symmetric(3), alternating(3)),
        (symmetric(4), alternating(4)),
        (cyclic(6), _subgroup_of_order(cyclic(6), 3)),
        (quaternion(), _subgroup_of_order(quaternion(), 4)),
    ]
    for g, h in pairs:
        tm = TransferMap(g, h)
        assert transfer(tm, g.identity()).is_zero()


def test_abelian_parent_gives_power_map():
    # for abelian G the transfer is s -> s^n with n the index
    for g, h_order in ((cyclic(6), 3), (cyclic(6), 2), (cyclic(12), 4)):
        h = _subgroup_of_order(g, h_order)
        n = g.order() // h.order()
        tm = TransferMap(g, h)
        for s in g.perms():
            power = s
            for _ in range(n - 1):
                power = power * s
            assert h.contains_tuple(power.img)
            assert transfer(tm, s).coords == tm.to_target(power).coords


def test_composite_into_parent_abelianization_is_power_map():
    pairs = [
        (symmetric(3), alternating(3)),
        (symmetric(4), alternating(4)),
        (cyclic(6), _subgroup_of_order(cyclic(6), 3)),
    ]
    for g, h in pairs:
        n = g.order() // h.order()
        tm = TransferMap(g, h)
        gab, to_gab = abelianize(g)
        for s in g.perms():
            v = transfer(tm, s)
            # lift v back to some h in H, then push into G^ab
            pre = next(t for t in h.elements
                       if tm.to_target(t).coords == v.coords)
            lhs = to_gab(pre).coords
            rhs = gab.scale(n, to_gab(s).coords)
            assert lhs == rhs


def test_transfer_is_a_homomorphism():
    pairs = [
        (symmetric(3), alternating(3)),
        (symmetric(4), sylow(symmetric(4), 2)),
        (alternating(4), sylow(alternating(4), 3)),
        (cyclic(6), _subgroup_of_order(cyclic(6), 2)),
        (dihedral(6), sylow(dihedral(6), 3)),
        (quaternion(), _subgroup_of_order(quaternion(), 4)),
    ]
    for g, h in pairs:
        tm = TransferMap(g, h)
        fab = tm.target
        values = {t: transfer(tm, t).coords for t in g.elements}
        from finis.perm_core import tmul

        for x in g.elements:
            for y in g.elements:
                assert values[tmul(x, y)] == fab.add(values[x], values[y])


def test_representative_independence_twenty_systems():
    rng = random.Random(0x7EA)
    pairs = [
        (symmetric(3), alternating(3)),
        (symmetric(4), alternating(4)),
        (cyclic(6), _subgroup_of_order(cyclic(6), 3)),
    ]
    for g, h in pairs:
        cos = cosets(g, h)
        base_tm = TransferMap(g, h)
        base = [transfer(base_tm, t).coords for t in g.elements]
        for _ in range(20):
            reps = [rng.choice(c.elements) for c in cos]
            tm = TransferMap(g, h, reps=reps)
            assert [transfer(tm, t).coords for t in g.elements] == base


def test_image_lies_in_normalizer_fixed_part():
    pairs = [
        (symmetric(4), sylow(symmetric(4), 3)),
        (alternating(4), sylow(alternating(4), 3)),
        (symmetric(3), alternating(3)),
    ]
    from finis.perm_core import tconj, tinv, tmul

    for g, h in pairs:
        tm = TransferMap(g, h)
        n = normalizer(g, h)
        fixed = set()
        ngens = [x.img for x in n.generators] or [n.identity().img]
        for t in h.elements:
            if all(tmul(tmul(x, t), tinv(x)) == t for x in ngens):
                fixed.add(tm.to_target(t).coords)
        for s in g.elements:
            assert transfer(tm, s).coords in fixed


def test_legendre_frozen_values():
    assert legendre_gauss(2, 7) == 1
    assert legendre_gauss(2, 5) == -1
    assert legendre_gauss(1, 13) == 1
    assert legendre_gauss(8, 7) == 1  # 8 = 1 mod 7
    with pytest.raises(BadInput):
        legendre_gauss(3, 2)
    with pytest.raises(BadInput):
        legendre_gauss(3, 9)
    with pytest.raises(BadInput):
        legendre_gauss(14, 7)


def test_legendre_matches_euler_criterion():
    for p in range(3, 200):
        if not is_prime(p):
            continue
        for x in range(1, p):
            euler = pow(x, (p - 1) // 2, p)
            expected = 1 if euler == 1 else -1
            assert legendre_gauss(x, p) == expected


def test_legendre_two_rule():
    for p in range(3, 200, 2):
        if not is_prime(p):
            continue
        assert (legendre_gauss(2, p) == 1) == (p % 8 in (1, 7))


def test_transfer_image_in_sylow_cases():
    # S3: the normalizer inverts the 3-Sylow, so nothing is fixed
    assert transfer_image_in_sylow(symmetric(3), 3).invariant_factors == ()
    # abelian parent: everything is fixed
    assert transfer_image_in_sylow(cyclic(6), 3).invariant_factors == (3,)
    assert transfer_image_in_sylow(cyclic(6), 2).invariant_factors == (2,)
    # A4: a 3-Sylow is self-normalizing, hence central in its normalizer
    assert transfer_image_in_sylow(alternating(4), 3).invariant_factors == (3,)
    with pytest.raises(SylowNotAbelian):
        transfer_image_in_sylow(symmetric(4), 2)


def test_cyclic_2sylow_obstruction():
    assert cyclic_2sylow_obstruction(cyclic(2)) is True
    assert cyclic_2sylow_obstruction(cyclic(6)) is True
    assert cyclic_2sylow_obstruction(symmetric(3)) is True
    assert cyclic_2sylow_obstruction(alternating(5)) is False  # Klein Sylow
    assert cyclic_2sylow_obstruction(symmetric(4)) is False
    assert cyclic_2sylow_obstruction(quaternion()) is False
    with pytest.raises(OddOrder):
        cyclic_2sylow_obstruction(cyclic(15))


def test_obstruction_matches_actual_index_two_subgroup():
    # whenever the obstruction fires, an index-2 subgroup really exists
    from finis.structure import normal_subgroups

    for g in (cyclic(6), symmetric(3), dihedral(5)):
        if cyclic_2sylow_obstruction(g):
            orders = [s.order() for s in normal_subgroups(g)]
            assert g.order() // 2 in orders
