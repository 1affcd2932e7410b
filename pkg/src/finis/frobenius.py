"""Frobenius couples: the conjugate-union bound, kernel extraction with a
direct closure check, fixed-point-free automorphism structure, and the
cyclicity diagnostics for complements."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ActionNotConsistent,
    BadSubgroup,
    InternalInconsistency,
    KernelNotClosed,
    NotAnAutomorphism,
    NotFrobeniusCouple,
    NotPrime,
    SubgroupIsWhole,
    TooLarge,
)
from .perm_core import (
    GroupHom,
    PermGroup,
    tconj,
    tidentity,
    tinv,
    tmul,
)
from .structure import (
    GroupProfile,
    classify,
    conjugacy_classes,
    subgroup_lattice,
)
from .sylow_fusion import all_sylows, is_prime

PROPERTY_F_CAP = 512


def _conjugate_union(g: PermGroup, h: PermGroup) -> set:
    union = set()
    hel = h.elements
    for x in g.elements:
        xi = tinv(x)
        for t in hel:
            union.add(tmul(tmul(x, t), xi))
    return union


def conjugate_union_size(g: PermGroup, h: PermGroup) -> int:
    """Exact size of the union of all conjugates of h; at most
    |G| - ((G:H) - 1) and always below |G| for proper h."""
    if not h.is_subgroup_of(g):
        raise BadSubgroup("argument is not a subgroup of the parent")
    if h.order() == g.order():
        raise SubgroupIsWhole("the union bound needs a proper subgroup")
    size = len(_conjugate_union(g, h))
    bound = g.order() - (g.order() // h.order() - 1)
    if size > bound:
        raise InternalInconsistency(
            "conjugate union of size %d exceeds the bound %d" % (size, bound))
    if size >= g.order():
        raise InternalInconsistency(
            "conjugates of a proper subgroup covered the whole group")
    return size


@dataclass(frozen=True)
class FrobeniusCouple:
    group: PermGroup
    subgroup: PermGroup
    verified: bool
    union_size: int


def frobenius_couple(g: PermGroup, h: PermGroup) -> FrobeniusCouple:
    """Decide whether (g, h) is a Frobenius couple by two independent
    criteria: the conjugate-union bound being attained, and distinct
    conjugates of h meeting only in the identity.  Both must agree."""
    if not h.is_subgroup_of(g):
        raise BadSubgroup("argument is not a subgroup of the parent")
    if h.order() == 1 or h.order() == g.order():
        raise BadSubgroup("a Frobenius couple needs {1} != H != G")
    size = conjugate_union_size(g, h)
    bound_attained = size == g.order() - (g.order() // h.order() - 1)
    hset = h.element_set
    ident = tidentity(g.degree)
    trivial_meets = True
    for x in g.elements:
        if x in hset:
            continue
        xi = tinv(x)
        meet = sum(1 for t in hset if tmul(tmul(x, t), xi) in hset)
        if meet != 1:
            trivial_meets = False
            break
    if bound_attained != trivial_meets:
        raise InternalInconsistency(
            "union bound and trivial-intersection criteria disagree")
    return FrobeniusCouple(group=g, subgroup=h, verified=bound_attained,
                           union_size=size)


def is_frobenius_couple(g: PermGroup, h: PermGroup) -> bool:
    return frobenius_couple(g, h).verified


def frobenius_kernel(fc: FrobeniusCouple) -> PermGroup:
    """The set N of elements outside every conjugate of H, plus the identity.
    That N is closed under products is the deep content here, so it is
    checked directly, along with |N| = (G:H), trivial meet with H, and
    N.H = G."""
    if not fc.verified:
        raise NotFrobeniusCouple("the couple failed verification")
    g, h = fc.group, fc.subgroup
    union = _conjugate_union(g, h)
    ident = tidentity(g.degree)
    nset = {t for t in g.elements if t not in union}
    nset.add(ident)
    index = g.order() // h.order()
    if len(nset) != index:
        raise InternalInconsistency(
            "kernel candidate has %d elements, expected the index %d"
            % (len(nset), index))
    for x in nset:
        for y in nset:
            if tmul(x, y) not in nset:
                raise KernelNotClosed(
                    "kernel candidate is not closed under products")
    for gen in g.generators:
        for t in nset:
            if tconj(t, gen.img) not in nset:
                raise KernelNotClosed(
                    "kernel candidate is not closed under conjugation")
    if len(nset & h.element_set) != 1:
        raise InternalInconsistency("kernel meets the complement")
    kernel = PermGroup.from_elements(g.degree, sorted(nset), cap=g.cap)
    if kernel.order() * h.order() != g.order():
        raise InternalInconsistency("kernel and complement sizes do not "
                                    "multiply up to the group order")
    return kernel


def _as_automorphism(n: PermGroup, sigma) -> GroupHom:
    if isinstance(sigma, GroupHom):
        hom = sigma
        if hom.domain is not n or hom.codomain is not n:
            hom = GroupHom(n, n, [hom(p) for p in n.generators])
    else:
        try:
            hom = GroupHom(n, n, list(sigma))
        except ActionNotConsistent as exc:
            raise NotAnAutomorphism(str(exc))
    if not hom.is_automorphism():
        raise NotAnAutomorphism("the map is not a bijective endomorphism")
    return hom


def fixed_point_free_check(n: PermGroup, sigma) -> bool:
    """True when the automorphism fixes only the identity.  In that case
    three structural facts are asserted exhaustively: x -> x^-1 sigma(x) is
    a bijection, the full twisted norm of every element is trivial, and no
    nontrivial element is conjugate to its own image."""
    hom = _as_automorphism(n, sigma)
    table = {t: hom.apply_tuple(t) for t in n.elements}
    ident = tidentity(n.degree)
    fixed = [t for t in n.elements if table[t] == t]
    if fixed != [ident]:
        return False
    # order of the automorphism
    p = 1
    current = table
    while any(current[t] != t for t in n.elements):
        current = {t: table[current[t]] for t in n.elements}
        p += 1
    twisted = {tmul(tinv(t), table[t]) for t in n.elements}
    if len(twisted) != n.order():
        raise InternalInconsistency(
            "x -> x^-1 sigma(x) failed to be a bijection")
    for t in n.elements:
        acc = t
        image = t
        for _ in range(p - 1):
            image = table[image]
            acc = tmul(acc, image)
        if acc != ident:
            raise InternalInconsistency(
                "the twisted norm of an element is not trivial")
    classes = conjugacy_classes(n)
    class_of = {}
    for i, cls in enumerate(classes.classes):
        for t in cls.elements:
            class_of[t] = i
    for t in n.elements:
        if t != ident and class_of[table[t]] == class_of[t]:
            raise InternalInconsistency(
                "a nontrivial element is conjugate to its image")
    return True


def sigma_stable_sylow(n: PermGroup, sigma, l: int) -> PermGroup:
    """Some l-Sylow subgroup of n is stable under a fixed-point-free
    automorphism; this finds one by scanning."""
    hom = _as_automorphism(n, sigma)
    if not is_prime(l):
        raise NotPrime("%d is not a prime" % l)
    for s in all_sylows(n, l):
        imgs = {hom.apply_tuple(t) for t in s.elements}
        if imgs == s.element_set:
            return s
    raise InternalInconsistency(
        "no %d-Sylow subgroup is stable under the automorphism" % l)


def thompson_nilpotency_check(fc: FrobeniusCouple) -> GroupProfile:
    """The kernel of a Frobenius couple is nilpotent; this computes its
    full profile and treats any non-nilpotent outcome as a bug."""
    kernel = frobenius_kernel(fc)
    profile = classify(kernel)
    if not profile.nilpotent:
        raise InternalInconsistency(
            "a Frobenius kernel came out non-nilpotent")
    return profile


@dataclass(frozen=True)
class PropertyFReport:
    abelian_all_cyclic: bool
    pq_all_cyclic: bool
    abelian_noncyclic_order: int | None
    pq_noncyclic_order: int | None

    @property
    def passes(self) -> bool:
        return self.abelian_all_cyclic and self.pq_all_cyclic


def property_f_diagnostics(h: PermGroup) -> PropertyFReport:
    """Necessary conditions for h to occur as a Frobenius complement:
    every abelian subgroup is cyclic and every subgroup of order pq
    (p, q prime, possibly equal) is cyclic.  No sufficiency is claimed."""
    if h.order() > PROPERTY_F_CAP:
        raise TooLarge("order %d exceeds the scan cap %d"
                       % (h.order(), PROPERTY_F_CAP))
    abelian_bad = None
    pq_bad = None
    for s in subgroup_lattice(h):
        o = s.order()
        cyclic = s.exponent() == o
        if s.is_abelian() and not cyclic and abelian_bad is None:
            abelian_bad = o
        if not cyclic and pq_bad is None:
            divs = [d for d in range(2, o + 1) if o % d == 0 and is_prime(d)]
            if len(divs) == 2 and divs[0] * divs[1] == o:
                pq_bad = o
            elif len(divs) == 1 and divs[0] * divs[0] == o:
                pq_bad = o
    return PropertyFReport(
        abelian_all_cyclic=abelian_bad is None,
        pq_all_cyclic=pq_bad is None,
        abelian_noncyclic_order=abelian_bad,
        pq_noncyclic_order=pq_bad,
    )
