"""The transfer homomorphism into an abelianized subgroup, its two
evaluation formulas, the Gauss-lemma Legendre symbol, and the structural
consequences of transfer into an abelian Sylow subgroup."""

from __future__ import annotations

from .abelian_coh import AbElement, FinAbGroup, abelianize, subgroup_invariants
from .errors import (
    BadInput,
    ElementNotInGroup,
    InternalInconsistency,
    NotASubgroup,
    OddOrder,
    SylowNotAbelian,
)
from .perm_core import (
    PermGroup,
    Permutation,
    cosets,
    tinv,
    tmul,
)
from .structure import normalizer
from .sylow_fusion import is_prime, sylow

DEBUG_CHECKS = True


class TransferMap:
    """Evaluation context for the transfer G -> H^ab.

    Stores one representative per left coset of h in g (the lexicographically
    least member of each coset by default -- any system gives the same map)
    and the abelianization of h as the target group.
    """

    __slots__ = ("parent", "subgroup", "reps", "_coset_of", "target",
                 "to_target", "index")

    def __init__(self, g: PermGroup, h: PermGroup, reps=None):
        if not h.is_subgroup_of(g):
            raise NotASubgroup("transfer requires a subgroup of the parent")
        self.parent = g
        self.subgroup = h
        cos = cosets(g, h)
        self.index = len(cos)
        lookup = {}
        for i, c in enumerate(cos):
            for t in c.elements:
                lookup[t] = i
        self._coset_of = lookup
        if reps is None:
            chosen = [c.elements[0] for c in cos]
        else:
            if len(reps) != len(cos):
                raise BadInput("expected %d representatives, got %d"
                               % (len(cos), len(reps)))
            chosen = [None] * len(cos)
            for r in reps:
                img = r.img if isinstance(r, Permutation) else tuple(r)
                if img not in lookup:
                    raise ElementNotInGroup(
                        "representative is not in the parent group")
                i = lookup[img]
                if chosen[i] is not None:
                    raise BadInput("two representatives for one coset")
                chosen[i] = img
        self.reps = tuple(chosen)
        self.target, self.to_target = abelianize(h)


def transfer(tm: TransferMap, s) -> AbElement:
    """Ver(s): the product over cosets of the h-parts of s * rep, written
    additively in H^ab.  Cross-checked against the cycle formula
    Ver(s) = sum over <s>-orbits of rep^-1 s^f rep."""
    simg = s.img if isinstance(s, Permutation) else tuple(s)
    if not tm.parent.contains_tuple(simg):
        raise ElementNotInGroup("transfer argument is not in the parent")
    fab = tm.target
    acc = fab.zero()
    moved = []
    for i, rep in enumerate(tm.reps):
        shifted = tmul(simg, rep)
        j = tm._coset_of[shifted]
        moved.append(j)
        part = tmul(tinv(tm.reps[j]), shifted)
        acc = fab.add(acc, tm.to_target(part).coords)
    if DEBUG_CHECKS:
        alt = fab.zero()
        seen = [False] * tm.index
        for start in range(tm.index):
            if seen[start]:
                continue
            power = simg
            length = 1
            j = moved[start]
            seen[start] = True
            while j != start:
                seen[j] = True
                power = tmul(simg, power)
                length += 1
                j = moved[j]
            rep = tm.reps[start]
            part = tmul(tinv(rep), tmul(power, rep))
            alt = fab.add(alt, tm.to_target(part).coords)
        if alt != acc:
            raise InternalInconsistency(
                "transfer: coset product and cycle formula disagree")
    return AbElement(fab, acc)


def legendre_gauss(x: int, p: int) -> int:
    """Legendre symbol (x/p) as a sign count: +1 for each s in {1..(p-1)/2}
    whose product xs reduces back into that half, -1 otherwise."""
    if p == 2 or not is_prime(p):
        raise BadInput("%d is not an odd prime" % p)
    if x % p == 0:
        raise BadInput("%d is divisible by %d" % (x, p))
    half = (p - 1) // 2
    sign = 1
    for s in range(1, half + 1):
        if (x * s) % p > half:
            sign = -sign
    return sign


def transfer_image_in_sylow(g: PermGroup, p: int) -> FinAbGroup:
    """Image of the transfer into an abelian p-Sylow H: always equal to the
    part of H fixed under conjugation by the full normalizer of H.  Both
    sides are computed and compared; their common invariant factors come
    back as a group."""
    h = sylow(g, p)
    if not h.is_abelian():
        raise SylowNotAbelian(
            "the %d-Sylow subgroup of order %d is not abelian"
            % (p, h.order()))
    n = normalizer(g, h)
    fixed = []
    ngens = [x.img for x in n.generators] or [n.identity().img]
    for t in h.elements:
        if all(tmul(tmul(x, t), tinv(x)) == t for x in ngens):
            fixed.append(t)
    tm = TransferMap(g, h)
    image_gens = [transfer(tm, gen).coords for gen in g.generators]
    fab = tm.target
    # additive closure of the generator images
    reached = {fab.zero()}
    frontier = [fab.zero()]
    while frontier:
        nxt = []
        for v in frontier:
            for w in image_gens:
                u = fab.add(v, w)
                if u not in reached:
                    reached.add(u)
                    nxt.append(u)
        frontier = nxt
    fixed_coords = {tm.to_target(t).coords for t in fixed}
    if reached != fixed_coords:
        raise InternalInconsistency(
            "transfer image differs from the normalizer-fixed part "
            "of the Sylow subgroup")
    return FinAbGroup(subgroup_invariants(fab, sorted(image_gens)))


def cyclic_2sylow_obstruction(g: PermGroup) -> bool:
    """True when the 2-Sylow subgroup is cyclic: the regular action then
    sends a Sylow generator to an odd permutation, so the sign of the
    regular action is a surjection onto {+-1} and g has a subgroup of
    index 2.  False when the 2-Sylow is not cyclic."""
    if g.order() % 2 != 0:
        raise OddOrder("the group has odd order %d" % g.order())
    h = sylow(g, 2)
    if h.exponent() != h.order():
        return False
    gen = next(t for t in h.elements if Permutation(t).order() == h.order())
    elems = g.elements
    pos = {t: i for i, t in enumerate(elems)}

    def regular_sign(ximg):
        seen = [False] * len(elems)
        sign = 1
        for i, t in enumerate(elems):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = pos[tmul(ximg, elems[j])]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    if regular_sign(gen) != -1:
        raise InternalInconsistency(
            "a cyclic 2-Sylow generator acted evenly in the regular action")
    kernel = [t for t in elems if regular_sign(t) == 1]
    if len(kernel) * 2 != len(elems):
        raise InternalInconsistency(
            "the regular-action sign kernel does not have index 2")
    return True
