"""Sylow subgroups and conjugation (fusion) machinery: constructive Sylow
search by normalizer growth, the conjugation orbit of all p-Sylows with the
counting congruences, the Frattini argument, Burnside's normalizer-fusion
theorem as a witness search, and Alperin-style decomposition of a fusing
element into normalizer steps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DepthExceeded,
    ElementNotInGroup,
    InternalInconsistency,
    NotCentral,
    NotConjugate,
    NotNormal,
    NotPrime,
    PreconditionViolated,
)
from .perm_core import (
    PermGroup,
    Permutation,
    conjugate_subgroup,
    is_normal,
    tconj,
    tidentity,
    tinv,
    tmul,
    trivial_subgroup,
)
from .structure import center, normalizer, prime_divisors, _working_gens


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(math.isqrt(p)) + 1))


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        n //= p
        out *= p
    return out


def _tpow(e: tuple, k: int) -> tuple:
    acc = tidentity(len(e))
    base = e
    while k:
        if k & 1:
            acc = tmul(acc, base)
        base = tmul(base, base)
        k >>= 1
    return acc


def sylow(g: PermGroup, p: int) -> PermGroup:
    """A Sylow p-subgroup, grown from a Cauchy element of order p by
    repeatedly adjoining an order-p coset of the current normalizer."""
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    target = p_part(g.order(), p)
    if target == 1:
        return trivial_subgroup(g)
    seed = None
    for e in g.elements:
        o = Permutation(e).order()
        if o % p == 0:
            seed = _tpow(e, o // p)
            break
    cur = PermGroup(g.degree, [Permutation(seed)], cap=g.cap)
    while cur.order() < target:
        n = normalizer(g, cur)
        pset = cur.element_set
        grown = None
        for e in n.elements:
            if e not in pset and _tpow(e, p) in pset:
                grown = e
                break
        if grown is None:
            raise InternalInconsistency(
                "p-subgroup of non-Sylow order has no order-p coset above it")
        gens = _working_gens(cur) + [Permutation(grown)]
        bigger = PermGroup(g.degree, gens, cap=g.cap)
        if bigger.order() != p * cur.order():
            raise InternalInconsistency("Sylow growth step has wrong order")
        cur = bigger
    return cur


def all_sylows(g: PermGroup, p: int) -> list[PermGroup]:
    """Every Sylow p-subgroup: the conjugation orbit of one of them, walked
    in deterministic breadth-first order."""
    first = sylow(g, p)
    if first.order() == 1:
        return [first]
    gens = [q.img for q in g.generators]
    start = tuple(first.elements)
    seen = {start}
    order_list = [start]
    i = 0
    while i < len(order_list):
        s = order_list[i]
        i += 1
        for gi in gens:
            t = tuple(sorted(tconj(e, gi) for e in s))
            if t not in seen:
                seen.add(t)
                order_list.append(t)
    return [PermGroup.from_elements(g.degree, list(s), cap=g.cap)
            for s in order_list]


@dataclass(frozen=True)
class SylowReport:
    p: int
    sylow_order: int
    count: int
    normalizer_index: int
    congruence_ok: bool


def sylow_count_report(g: PermGroup, p: int) -> SylowReport:
    """Count the p-Sylows and check both classical statements: the count is
    the index of a normalizer, and it is congruent to 1 mod p."""
    sylows = all_sylows(g, p)
    count = len(sylows)
    n = normalizer(g, sylows[0])
    if g.order() % n.order() != 0:
        raise InternalInconsistency("normalizer order does not divide |G|")
    index = g.order() // n.order()
    if count != index:
        raise InternalInconsistency(
            "Sylow count %d != normalizer index %d" % (count, index))
    if count % p != 1:
        raise InternalInconsistency("Sylow count %d != 1 mod %d" % (count, p))
    return SylowReport(p=p, sylow_order=sylows[0].order(), count=count,
                       normalizer_index=index, congruence_ok=True)


@dataclass(frozen=True)
class MillerWielandtReport:
    p: int
    binom: int
    count: int
    cofactor: int


def miller_wielandt_check(g: PermGroup, p: int) -> MillerWielandtReport:
    """binom(|G|, p^n) = s * m (mod p), with p^n the p-part, m = |G|/p^n the
    cofactor, and s the number of p-Sylows.  Checked exactly."""
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    pn = p_part(g.order(), p)
    m = g.order() // pn
    s = len(all_sylows(g, p))
    binom = math.comb(g.order(), pn)
    if (binom - s * m) % p != 0:
        raise InternalInconsistency(
            "binom(%d, %d) !== %d * %d mod %d" % (g.order(), pn, s, m, p))
    return MillerWielandtReport(p=p, binom=binom, count=s, cofactor=m)


def frattini_argument_check(g: PermGroup, n: PermGroup, p: int) -> bool:
    """For N normal in G and S a p-Sylow of N: G = N_G(S) N, checked by the
    product size formula |HN| = |H||N| / |H intersect N|."""
    if not is_normal(g, n):
        raise NotNormal("Frattini argument needs a normal subgroup")
    s = sylow(n, p)
    h = normalizer(g, s)
    meet = len(h.element_set & n.element_set)
    if h.order() * n.order() != g.order() * meet:
        raise InternalInconsistency(
            "|N_G(S)| |N| != |G| |N_G(S) meet N|: the Frattini argument fails")
    return True


# ---------------------------------------------------------------------------
# fusion


@dataclass(frozen=True)
class BurnsideFusionWitness:
    sylow: PermGroup
    any_conjugator: Permutation
    normalizer_conjugator: Permutation


def _prime_power_base(k: int) -> int:
    ps = prime_divisors(k)
    if len(ps) != 1:
        raise PreconditionViolated("order %d is not a prime power" % k)
    return ps[0]


def burnside_fusion_witness(g: PermGroup, x: Permutation,
                            y: Permutation) -> BurnsideFusionWitness:
    """If x and y both lie in the center of a common Sylow p-subgroup S and
    are conjugate in G, they are conjugate by an element of N_G(S); find S
    and that element.

    Raises NotCentral when no Sylow centralizes both, NotConjugate when the
    elements are not conjugate at all.
    """
    if x.img not in g.element_set or y.img not in g.element_set:
        raise ElementNotInGroup("witness arguments must lie in the group")
    p = _prime_power_base(x.order())
    if _prime_power_base(y.order()) != p:
        raise PreconditionViolated("elements have different prime supports")
    common = None
    for s in all_sylows(g, p):
        z = center(s).element_set
        if x.img in z and y.img in z:
            common = s
            break
    if common is None:
        raise NotCentral("no Sylow %d-subgroup has both elements central" % p)
    t = next((e for e in g.elements if tconj(x.img, e) == y.img), None)
    if t is None:
        raise NotConjugate("elements are not conjugate")
    n = normalizer(g, common)
    w = next((e for e in n.elements if tconj(x.img, e) == y.img), None)
    if w is None:
        raise InternalInconsistency(
            "conjugate central elements admit no normalizer conjugator")
    return BurnsideFusionWitness(sylow=common, any_conjugator=Permutation(t),
                                 normalizer_conjugator=Permutation(w))


# ---------------------------------------------------------------------------
# Alperin decomposition


def _first_conjugating_into(source: PermGroup, candidates,
                            target_set: frozenset) -> tuple | None:
    sgens = [q.img for q in _working_gens(source)]
    for e in candidates:
        if all(tconj(t, e) in target_set for t in sgens):
            return e
    return None


def alperin_decompose(g: PermGroup, p: int, s: PermGroup, a, x: Permutation):
    """Decompose x as a product g_1 ... g_m of normalizer elements.

    Preconditions: s is a Sylow p-subgroup, the elements of a lie in s, and
    a^x lies in s.  Returns pairs (U_i, g_i) with each U_i a subgroup of s,
    g_i in N_G(U_i), x = g_1 ... g_m, and a^(g_1 ... g_(i-1)) inside U_i.
    """
    if not is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if s.order() != p_part(g.order(), p) or not s.is_subgroup_of(g):
        raise PreconditionViolated("s is not a Sylow %d-subgroup" % p)
    a_perms = [e if isinstance(e, Permutation) else Permutation(e) for e in a]
    sset = s.element_set
    if any(q.img not in sset for q in a_perms):
        raise PreconditionViolated("a does not lie inside s")
    if x.img not in g.element_set:
        raise ElementNotInGroup("x is not in the group")
    if any(tconj(q.img, x.img) not in sset for q in a_perms):
        raise PreconditionViolated("a^x does not lie inside s")

    chain = _alperin_chain(g, p, s, a_perms, x, 0)
    chain = [(u, w) for u, w in chain if not w.is_identity()]

    # verify the full contract before returning
    prod = g.identity()
    moving = [q.img for q in a_perms]
    for u, w in chain:
        if not u.is_subgroup_of(s):
            raise InternalInconsistency("chain subgroup escapes s")
        if conjugate_subgroup(u, w).elements != u.elements:
            raise InternalInconsistency("chain element is not in a normalizer")
        if any(t not in u.element_set for t in moving):
            raise InternalInconsistency("conjugation chain loses a")
        moving = [tconj(t, w.img) for t in moving]
        prod = prod * w
    if prod != x:
        raise InternalInconsistency("chain product differs from x")
    return chain


def _normalizer_inside(s: PermGroup, t: PermGroup) -> PermGroup:
    tset = t.element_set
    tgens = [q.img for q in _working_gens(t)]
    elems = [e for e in s.elements
             if all(tconj(q, e) in tset for q in tgens)]
    return PermGroup.from_elements(s.degree, elems, cap=s.cap)


def _alperin_chain(g: PermGroup, p: int, s: PermGroup, a_perms, x, depth):
    if depth > s.order():
        raise DepthExceeded("Alperin recursion exceeded depth %d" % s.order())
    t = PermGroup(g.degree, a_perms, cap=g.cap)
    tset = t.element_set
    if all(tconj(q.img, x.img) in tset for q in _working_gens(t)):
        return [(t, x)]
    t1 = _normalizer_inside(s, t)
    v = conjugate_subgroup(t, x)
    t2 = _normalizer_inside(s, v)
    ngt = normalizer(g, t)
    p0 = sylow(ngt, p)
    # d in N_G(T) with T1^d inside P0; then Sigma = P0^(d^-1) is a Sylow
    # subgroup of N_G(T) containing T1
    d = _first_conjugating_into(t1, ngt.elements, p0.element_set)
    if d is None:
        raise InternalInconsistency("no Sylow of N_G(T) above N_S(T)")
    sigma = conjugate_subgroup(p0, Permutation(tinv(d)))
    u = _first_conjugating_into(sigma, g.elements, s.element_set)
    if u is None:
        raise InternalInconsistency("no conjugate of Sigma inside s")
    ngv = normalizer(g, v)
    sigma_x = conjugate_subgroup(sigma, x)
    w = _first_conjugating_into(t2, ngv.elements, sigma_x.element_set)
    if w is None:
        raise InternalInconsistency("no conjugator of N_S(V) into Sigma^x")
    u_p = Permutation(u)
    w_p = Permutation(w)
    v_p = u_p.inverse() * x * w_p.inverse()
    t3 = conjugate_subgroup(t2, v_p.inverse())
    left = _alperin_chain(g, p, s, _working_gens(t1), u_p, depth + 1)
    mid = _alperin_chain(g, p, s, _working_gens(t3), v_p, depth + 1)
    return left + mid + [(v, w_p)]
