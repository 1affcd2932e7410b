import pytest

from finis.errors import (
    ElementNotInGroup,
    NotCentral,
    NotConjugate,
    NotNormal,
    NotPrime,
    PreconditionViolated,
)
from finis.ffgroups import realize
from finis.perm_core import (
    alternating,
    cyclic,
    dihedral,
    klein_four,
    parse_permutation,
    quaternion,
    subgroup_generated,
    symmetric,
)
from finis.sylow_fusion import (
    all_sylows,
    alperin_decompose,
    burnside_fusion_witness,
    frattini_argument_check,
    miller_wielandt_check,
    p_part,
    sylow,
    sylow_count_report,
)


def test_p_part():
    assert p_part(48, 2) == 16
    assert p_part(48, 3) == 3
    assert p_part(35, 2) == 1


def test_sylow_orders():
    s4 = symmetric(4)
    assert sylow(s4, 2).order() == 8
    assert sylow(s4, 3).order() == 3
    a5 = alternating(5)
    assert sylow(a5, 2).order() == 4
    assert sylow(a5, 5).order() == 5
    assert sylow(s4, 5).order() == 1
    with pytest.raises(NotPrime):
        sylow(s4, 4)


def test_sylow_of_sl23_is_quaternion():
    g = realize("SL", 2, 3).group
    s = sylow(g, 2)
    assert s.order() == 8
    assert s.element_orders() == [1, 2, 4, 4, 4, 4, 4, 4]


def test_sylow_counts_frozen():
    assert len(all_sylows(symmetric(3), 2)) == 3
    assert len(all_sylows(symmetric(4), 2)) == 3
    assert len(all_sylows(symmetric(4), 3)) == 4
    assert len(all_sylows(alternating(4), 2)) == 1
    assert len(all_sylows(alternating(4), 3)) == 4
    assert len(all_sylows(alternating(5), 2)) == 5
    assert len(all_sylows(alternating(5), 3)) == 10
    assert len(all_sylows(alternating(5), 5)) == 6
    assert len(all_sylows(quaternion(), 2)) == 1
    assert len(all_sylows(dihedral(6), 2)) == 3


def test_sylow_count_report():
    rep = sylow_count_report(symmetric(4), 2)
    assert rep.count == 3 and rep.normalizer_index == 3 and rep.congruence_ok
    rep = sylow_count_report(alternating(5), 5)
    assert rep.count == 6 and rep.sylow_order == 5
    rep = sylow_count_report(realize("PSL", 2, 7).group, 7)
    assert rep.count == 8


def test_miller_wielandt():
    rep = miller_wielandt_check(symmetric(3), 2)
    assert rep.binom == 15 and rep.count == 3 and rep.cofactor == 3
    rep = miller_wielandt_check(symmetric(3), 3)
    assert rep.binom == 20 and rep.count == 1 and rep.cofactor == 2
    for g in (symmetric(4), alternating(5), quaternion(), dihedral(6)):
        for p in (2, 3, 5):
            if g.order() % p == 0:
                miller_wielandt_check(g, p)


def test_frattini_argument():
    s4 = symmetric(4)
    a4 = alternating(4)
    assert frattini_argument_check(s4, a4, 3)
    assert frattini_argument_check(s4, a4, 2)
    v4 = subgroup_generated(
        s4, [parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)])
    assert frattini_argument_check(s4, v4, 2)
    d4 = sylow(s4, 2)
    with pytest.raises(NotNormal):
        frattini_argument_check(s4, d4, 2)


def test_burnside_witness_in_a5():
    a5 = alternating(5)
    x = parse_permutation("(1 2)(3 4)", 5)
    y = parse_permutation("(1 4)(2 3)", 5)
    wit = burnside_fusion_witness(a5, x, y)
    n = wit.normalizer_conjugator
    assert x.conj(n) == y
    assert x.conj(wit.any_conjugator) == y
    # the conjugator really does normalize the Sylow subgroup
    assert all(q.conj(n) in wit.sylow for q in wit.sylow.perms())


def test_burnside_witness_not_central_in_s4():
    # each double transposition is central in exactly one Sylow 2-subgroup
    # of S4, and distinct ones never share theirs
    s4 = symmetric(4)
    x = parse_permutation("(1 2)(3 4)", 4)
    y = parse_permutation("(1 3)(2 4)", 4)
    with pytest.raises(NotCentral):
        burnside_fusion_witness(s4, x, y)


def test_burnside_witness_not_conjugate():
    k = klein_four()
    els = [p for p in k.perms() if not p.is_identity()]
    with pytest.raises(NotConjugate):
        burnside_fusion_witness(k, els[0], els[1])


def test_burnside_witness_preconditions():
    c6 = cyclic(6)
    six = next(p for p in c6.perms() if p.order() == 6)
    with pytest.raises(PreconditionViolated):
        burnside_fusion_witness(c6, six, six)
    two = next(p for p in c6.perms() if p.order() == 2)
    three = next(p for p in c6.perms() if p.order() == 3)
    with pytest.raises(PreconditionViolated):
        burnside_fusion_witness(c6, two, three)
    with pytest.raises(ElementNotInGroup):
        burnside_fusion_witness(alternating(4), parse_permutation("(1 2)", 4),
                                parse_permutation("(1 2)", 4))


def test_alperin_decompose_s4_single_step_cases():
    s4 = symmetric(4)
    s = sylow(s4, 2)
    x = parse_permutation("(1 2 3)", 4)
    a = [p for p in s.perms() if p.conj(x) in s and p.order() == 2]
    assert a  # V4 lies in every Sylow 2-subgroup
    chain = alperin_decompose(s4, 2, s, [a[0]], x)
    prod = s4.identity()
    for _, w in chain:
        prod = prod * w
    assert prod == x


def test_alperin_decompose_exhaustive_small():
    for g, p in ((symmetric(4), 2), (dihedral(6), 2), (alternating(4), 2)):
        s = sylow(g, p)
        sset = s.element_set
        for x in g.perms():
            for a in s.perms():
                if a.conj(x).img in sset:
                    chain = alperin_decompose(g, p, s, [a], x)
                    prod = g.identity()
                    for _, w in chain:
                        prod = prod * w
                    assert prod == x


def test_alperin_precondition():
    s4 = symmetric(4)
    s = sylow(s4, 2)
    outside = parse_permutation("(1 2 3)", 4)
    with pytest.raises(PreconditionViolated):
        alperin_decompose(s4, 2, s, [outside], s4.identity())
