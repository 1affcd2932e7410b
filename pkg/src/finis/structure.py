"""Structural analysis of a finite permutation group: conjugacy classes,
centralizers and normalizers, commutator machinery and the derived and lower
central series, normal subgroups and composition series, the Frattini
subgroup, and the class equation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    HTooLarge,
    InternalInconsistency,
    NotSolvable,
    TooLarge,
    TooManyClasses,
    TrivialGroup,
)
from .perm_core import (
    PermGroup,
    Permutation,
    _close,
    is_normal,
    quotient,
    tconj,
    tidentity,
    tinv,
    tmul,
    trivial_subgroup,
)

MAX_CLASSES = 25
LATTICE_ORDER_CAP = 512
MAX_UNIT_FRACTIONS = 8


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _working_gens(g: PermGroup) -> list[Permutation]:
    if len(g.generators) > 6:
        return g.small_generating_set()
    return g.generators


# ---------------------------------------------------------------------------
# conjugacy classes


@dataclass(frozen=True)
class ConjClass:
    rep: Permutation
    elements: tuple  # sorted image tuples
    index: int

    @property
    def size(self) -> int:
        return len(self.elements)


class ConjClassTable:
    """Conjugacy classes sorted by (size, least element); identity is class 0."""

    def __init__(self, group: PermGroup):
        self.group = group
        gens = [p.img for p in group.generators]
        assigned = {}
        raw = []
        for e in group.elements:
            if e in assigned:
                continue
            orbit = {e}
            frontier = [e]
            while frontier:
                nxt = []
                for x in frontier:
                    for gi in gens:
                        y = tconj(x, gi)
                        if y not in orbit:
                            orbit.add(y)
                            nxt.append(y)
                frontier = nxt
            raw.append(sorted(orbit))
            for x in orbit:
                assigned[x] = None
        raw.sort(key=lambda block: (len(block), block[0]))
        self.classes = [ConjClass(Permutation(block[0]), tuple(block), i)
                        for i, block in enumerate(raw)]
        self._where = {}
        for c in self.classes:
            for e in c.elements:
                self._where[e] = c.index

    def class_index(self, t: tuple) -> int:
        return self._where[t]

    def class_of(self, p: Permutation) -> ConjClass:
        return self.classes[self._where[p.img]]

    def inverse_class(self, i: int) -> int:
        return self._where[tinv(self.classes[i].rep.img)]

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def __len__(self) -> int:
        return len(self.classes)


def conjugacy_classes(g: PermGroup) -> ConjClassTable:
    tab = getattr(g, "_conj_table", None)
    if tab is None:
        tab = ConjClassTable(g)
        g._conj_table = tab
    return tab


def centralizer(g: PermGroup, x: Permutation) -> PermGroup:
    xi = x.img
    elems = [e for e in g.elements if tmul(e, xi) == tmul(xi, e)]
    return PermGroup.from_elements(g.degree, elems, cap=g.cap)


def normalizer(g: PermGroup, h: PermGroup) -> PermGroup:
    hset = h.element_set
    hgens = [p.img for p in _working_gens(h)]
    elems = [e for e in g.elements
             if all(tconj(s, e) in hset for s in hgens)]
    return PermGroup.from_elements(g.degree, elems, cap=g.cap)


def center(g: PermGroup) -> PermGroup:
    gens = [p.img for p in g.generators]
    elems = [e for e in g.elements
             if all(tmul(e, gi) == tmul(gi, e) for gi in gens)]
    return PermGroup.from_elements(g.degree, elems, cap=g.cap)


# ---------------------------------------------------------------------------
# commutators and the two canonical series


def commutator_subgroup(g: PermGroup, a: PermGroup, b: PermGroup) -> PermGroup:
    """(A, B): generated by commutators; computed as the normal closure of the
    generator commutators under conjugation by the generators of A and B."""
    agens = _working_gens(a)
    bgens = _working_gens(b)
    ident = tidentity(g.degree)
    seeds = {x.commutator(y).img for x in agens for y in bgens}
    seeds.discard(ident)
    if not seeds:
        return trivial_subgroup(g)
    conj_by = [p.img for p in agens + bgens]
    gens = sorted(seeds)
    closed = _close(g.degree, gens, g.cap)
    while True:
        fresh = []
        for s in gens:
            for c in conj_by:
                y = tconj(s, c)
                if y not in closed:
                    fresh.append(y)
        if not fresh:
            break
        gens.extend(fresh)
        closed = _close(g.degree, gens, g.cap)
    return PermGroup.from_elements(g.degree, closed, cap=g.cap,
                                   generators=[Permutation(t) for t in gens])


def derived_subgroup(g: PermGroup) -> PermGroup:
    return commutator_subgroup(g, g, g)


def derived_series(g: PermGroup) -> list[PermGroup]:
    """G, G', G'', ... until the term repeats (trivial iff solvable)."""
    series = [g]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.order() == 1:
            break
    return series


def lower_central_series(g: PermGroup) -> list[PermGroup]:
    """C1 = G, C(i+1) = (G, Ci), until the term repeats."""
    series = [g]
    while True:
        nxt = commutator_subgroup(g, g, series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.order() == 1:
            break
    return series


@dataclass(frozen=True)
class GroupProfile:
    order: int
    abelian: bool
    cyclic: bool
    solvable: bool
    derived_length: int | None
    nilpotent: bool
    nilpotency_class: int | None


def classify(g: PermGroup) -> GroupProfile:
    """Solvability/nilpotency profile, cross-checked against Sylow uniqueness
    (a group is nilpotent iff each of its Sylow subgroups is normal)."""
    ds = derived_series(g)
    solvable = ds[-1].order() == 1
    lcs = lower_central_series(g)
    nilpotent = lcs[-1].order() == 1
    from .sylow_fusion import all_sylows  # deferred: sylow_fusion imports us
    unique = all(len(all_sylows(g, p)) == 1 for p in prime_divisors(g.order()))
    if unique != nilpotent:
        raise InternalInconsistency(
            "lower central series and Sylow normality disagree on nilpotency")
    order = g.order()
    return GroupProfile(
        order=order,
        abelian=g.is_abelian(),
        cyclic=any(Permutation(e).order() == order for e in g.elements),
        solvable=solvable,
        derived_length=len(ds) - 1 if solvable else None,
        nilpotent=nilpotent,
        nilpotency_class=len(lcs) - 1 if nilpotent else None,
    )


# ---------------------------------------------------------------------------
# normal subgroups and composition factors


def normal_subgroups(g: PermGroup) -> list[PermGroup]:
    """All normal subgroups, found as product-closed unions of conjugacy
    classes (classes paired with their inverse classes), sorted by order."""
    tab = conjugacy_classes(g)
    h = len(tab)
    if h > MAX_CLASSES:
        raise TooManyClasses("%d classes exceeds cap %d" % (h, MAX_CLASSES))
    units = []
    seen = set()
    for c in tab.classes[1:]:
        if c.index in seen:
            continue
        j = tab.inverse_class(c.index)
        seen.update({c.index, j})
        block = set(c.elements)
        if j != c.index:
            block.update(tab.classes[j].elements)
        units.append((frozenset({c.index, j}), block))
    order = g.order()
    found = []

    def closed_union(class_ids: set, union: set) -> bool:
        for i in class_ids:
            rep = tab.classes[i].rep.img
            for jj in class_ids:
                for e in tab.classes[jj].elements:
                    if tmul(rep, e) not in union:
                        return False
        return True

    def rec(idx: int, class_ids: set, union: set):
        if idx == len(units):
            if order % len(union) == 0 and closed_union(class_ids, union):
                found.append(sorted(union))
            return
        rec(idx + 1, class_ids, union)
        ids, block = units[idx]
        rec(idx + 1, class_ids | ids, union | block)

    rec(0, {0}, {tidentity(g.degree)})
    out = []
    for elems in sorted(found, key=len):
        n = PermGroup.from_elements(g.degree, elems, cap=g.cap)
        n.generators = n.small_generating_set()
        out.append(n)
    return out


def is_simple(g: PermGroup) -> bool:
    return g.order() > 1 and len(normal_subgroups(g)) == 2


@dataclass(frozen=True)
class CompositionFactor:
    order: int
    abelian: bool
    class_sizes: tuple
    element_orders: tuple


def _factor_fingerprint(q: PermGroup) -> CompositionFactor:
    tab = conjugacy_classes(q)
    return CompositionFactor(
        order=q.order(),
        abelian=q.is_abelian(),
        class_sizes=tuple(sorted(tab.sizes)),
        element_orders=tuple(q.element_orders()),
    )


def jordan_holder(g: PermGroup, seed: int = 0) -> list[CompositionFactor]:
    """Composition factors, top down.  The choice among maximal normal
    subgroups is randomized by the seed; the factor multiset must not
    depend on it (Jordan-Holder)."""
    rng = random.Random(seed)
    factors = []
    cur = g
    while cur.order() > 1:
        proper = [n for n in normal_subgroups(cur) if n.order() < cur.order()]
        maximal = [n for n in proper
                   if not any(n.order() < m.order() and n.is_subgroup_of(m)
                              for m in proper)]
        m = rng.choice(maximal)
        q, _ = quotient(cur, m)
        factors.append(_factor_fingerprint(q))
        cur = m
    return factors


# ---------------------------------------------------------------------------
# subgroup lattice and Frattini subgroup


def subgroup_lattice(g: PermGroup) -> list[PermGroup]:
    """Every subgroup, by upward closure from the trivial group one cyclic
    generator at a time.  Only for orders <= 512."""
    if g.order() > LATTICE_ORDER_CAP:
        raise TooLarge("order %d exceeds lattice cap %d"
                       % (g.order(), LATTICE_ORDER_CAP))
    cached = getattr(g, "_subgroup_lattice", None)
    if cached is not None:
        return cached
    ident = tidentity(g.degree)
    cyc_reps = []
    seen_cyc = set()
    for e in g.elements:
        if e == ident:
            continue
        key = frozenset(_close(g.degree, [e], g.cap))
        if key not in seen_cyc:
            seen_cyc.add(key)
            cyc_reps.append(e)
    known = {frozenset([ident]): ([], [ident])}
    queue = [frozenset([ident])]
    while queue:
        key = queue.pop()
        gens, elems = known[key]
        for x in cyc_reps:
            if x in key:
                continue
            new_gens = gens + [x]
            closed = _close(g.degree, new_gens, g.cap)
            new_key = frozenset(closed)
            if new_key not in known:
                known[new_key] = (new_gens, sorted(closed))
                queue.append(new_key)
    out = []
    for key in known:
        gens, elems = known[key]
        out.append(PermGroup.from_elements(
            g.degree, elems, cap=g.cap,
            generators=[Permutation(t) for t in gens]))
    out.sort(key=lambda s: (s.order(), s.elements))
    g._subgroup_lattice = out
    return out


def maximal_subgroups(g: PermGroup) -> list[PermGroup]:
    subs = [s for s in subgroup_lattice(g) if s.order() < g.order()]
    return [s for s in subs
            if not any(s.order() < t.order() and s.is_subgroup_of(t)
                       for t in subs)]


def frattini(g: PermGroup) -> PermGroup:
    """Intersection of the maximal subgroups.  For a p-group the result is
    verified against (G,G) * G^p."""
    if g.order() == 1:
        return g
    maxes = maximal_subgroups(g)
    common = frozenset.intersection(*(m.element_set for m in maxes))
    phi = PermGroup.from_elements(g.degree, sorted(common), cap=g.cap)
    phi.generators = phi.small_generating_set()
    primes = prime_divisors(g.order())
    if len(primes) == 1:
        p = primes[0]
        der = derived_subgroup(g)
        gens = der.generators + [_power(e, p) for e in g.elements]
        alt = PermGroup(g.degree, [x for x in gens if not x.is_identity()],
                        cap=g.cap)
        if alt.elements != phi.elements:
            raise InternalInconsistency(
                "Frattini subgroup disagrees with (G,G) * G^p")
    return phi


def _power(e: tuple, k: int) -> Permutation:
    acc = tidentity(len(e))
    for _ in range(k):
        acc = tmul(acc, e)
    return Permutation(acc)


# ---------------------------------------------------------------------------
# class equation and unit fraction decompositions


def egyptian_decompositions(h: int) -> list[tuple]:
    """All nondecreasing tuples (n_1 <= ... <= n_h) with sum 1/n_i = 1."""
    if h < 1:
        return []
    if h > MAX_UNIT_FRACTIONS:
        raise HTooLarge("%d parts exceeds cap %d" % (h, MAX_UNIT_FRACTIONS))
    out = []

    def rec(prefix: list, rem: Fraction, k: int):
        if k == 0:
            if rem == 0:
                out.append(tuple(prefix))
            return
        if rem <= 0:
            return
        lo = max(prefix[-1] if prefix else 1, -(-rem.denominator // rem.numerator))
        hi = (k * rem.denominator) // rem.numerator
        for n in range(lo, hi + 1):
            rec(prefix + [n], rem - Fraction(1, n), k - 1)

    rec([], Fraction(1), h)
    return out


@dataclass(frozen=True)
class ClassEquationReport:
    order: int
    class_sizes: tuple
    centralizer_orders: tuple


def class_equation(g: PermGroup) -> ClassEquationReport:
    """Class sizes and centralizer orders; sum of 1/|C(x_i)| over class
    representatives must be exactly 1, and both routes to |C(x_i)| must
    agree (direct scan vs |G| / class size)."""
    tab = conjugacy_classes(g)
    order = g.order()
    cents = []
    for c in tab.classes:
        direct = centralizer(g, c.rep).order()
        if order % c.size != 0 or direct != order // c.size:
            raise InternalInconsistency(
                "centralizer order %d != |G|/|class| = %d/%d"
                % (direct, order, c.size))
        cents.append(direct)
    if sum(Fraction(1, c) for c in cents) != 1:
        raise InternalInconsistency("class equation does not sum to 1")
    return ClassEquationReport(order=order, class_sizes=tuple(tab.sizes),
                               centralizer_orders=tuple(cents))


def minimal_normal_elementary(g: PermGroup) -> tuple[int, PermGroup]:
    """(p, B) with B a nontrivial normal elementary abelian p-subgroup,
    taken from the last nontrivial term of the derived series.  Requires a
    nontrivial solvable group."""
    if g.order() == 1:
        raise TrivialGroup("the trivial group has no minimal normal subgroup")
    series = derived_series(g)
    if series[-1].order() != 1:
        raise NotSolvable("derived series does not reach the trivial group")
    d = series[-2]
    p = min(prime_divisors(d.order()))
    elems = [e for e in d.elements if _power(e, p).is_identity()]
    b = PermGroup.from_elements(g.degree, elems, cap=g.cap)
    b.generators = b.small_generating_set()
    if not is_normal(g, b) or not b.is_abelian():
        raise InternalInconsistency("socle layer is not normal abelian")
    k = b.order()
    while k % p == 0:
        k //= p
    if k != 1 or b.order() == 1:
        raise InternalInconsistency("layer is not an elementary abelian p-group")
    return p, b
