"""Permutations on {0, ..., n-1} and the groups they generate.

Everything downstream builds on this module: elements are image tuples,
products compose right-to-left ((a*b)(i) = a(b(i))), and a group is the
closure of its generators, enumerated eagerly (with a cap) into a sorted
canonical element list.  Printed form is 1-indexed cycle notation; the
identity prints as "()".
"""

from __future__ import annotations

import itertools
import math
import re
from bisect import bisect_left
from dataclasses import dataclass

from .errors import (
    ActionNotConsistent,
    ElementNotInGroup,
    GroupTooLarge,
    InternalInconsistency,
    NotASubgroup,
    NotNormal,
    NotAnAutomorphism,
    ParseError,
)

ENUMERATION_CAP = 200000


# ---------------------------------------------------------------------------
# tuple-level primitives (hot paths work on raw image tuples)

def tmul(a: tuple, b: tuple) -> tuple:
    """Compose image tuples: (a*b)(i) = a(b(i))."""
    return tuple(a[x] for x in b)


def tinv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def tconj(x: tuple, g: tuple) -> tuple:
    """x^g = g^-1 * x * g."""
    ginv = tinv(g)
    return tuple(ginv[x[gi]] for gi in g)


def tidentity(n: int) -> tuple:
    return tuple(range(n))


class Permutation:
    """Immutable permutation of {0..n-1}, stored as its image tuple."""

    __slots__ = ("img",)

    def __init__(self, img):
        self.img = tuple(img)
        if sorted(self.img) != list(range(len(self.img))):
            raise ParseError("not a permutation of 0..n-1: %r" % (img,))

    @property
    def degree(self) -> int:
        return len(self.img)

    def __call__(self, i: int) -> int:
        return self.img[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tmul(self.img, other.img))

    def inverse(self) -> "Permutation":
        return Permutation(tinv(self.img))

    def conj(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        return Permutation(tconj(self.img, g.img))

    def commutator(self, other: "Permutation") -> "Permutation":
        """(self, other) = self^-1 * other^-1 * self * other."""
        a, b = self.img, other.img
        return Permutation(tmul(tmul(tinv(a), tinv(b)), tmul(a, b)))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.img))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, sorted."""
        seen = [False] * len(self.img)
        out = []
        for start in range(len(self.img)):
            if seen[start] or self.img[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = self.img[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.img[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.img == other.img

    def __hash__(self) -> int:
        return hash(self.img)

    def __lt__(self, other: "Permutation") -> bool:
        return self.img < other.img

    def __repr__(self) -> str:
        return cycle_string(self)


def cycle_string(p: Permutation) -> str:
    cycs = p.cycles()
    if not cycs:
        return "()"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-indexed cycle notation, e.g. "(1 2 3)(4 5)" or "()".

    Points inside a cycle may be separated by spaces or commas.  If degree is
    None it is inferred from the largest point mentioned.
    """
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    if re.sub(r"[()\s]", "", text) == "" and "(" in text:
        n = degree if degree is not None else 1
        return Permutation(range(n))
    body = re.sub(r"\s+", " ", text)
    if re.sub(_CYCLE_RE, "", body).strip():
        raise ParseError("unbalanced or stray characters in %r" % text)
    cycles = []
    for m in _CYCLE_RE.finditer(body):
        pts = [s for s in re.split(r"[,\s]+", m.group(1).strip()) if s]
        if not pts:
            continue
        try:
            cyc = [int(s) - 1 for s in pts]
        except ValueError:
            raise ParseError("non-integer point in %r" % text) from None
        if any(p < 0 for p in cyc):
            raise ParseError("points are 1-indexed in %r" % text)
        cycles.append(cyc)
    maxpt = max((p for c in cycles for p in c), default=-1)
    if degree is None:
        degree = maxpt + 1
    if maxpt >= degree:
        raise ParseError("point %d exceeds degree %d" % (maxpt + 1, degree))
    img = list(range(degree))
    seen = set()
    for cyc in cycles:
        for p in cyc:
            if p in seen:
                raise ParseError("repeated point %d in %r" % (p + 1, text))
            seen.add(p)
        for i, p in enumerate(cyc):
            img[p] = cyc[(i + 1) % len(cyc)]
    return Permutation(img)


# ---------------------------------------------------------------------------


class PermGroup:
    """Group generated by permutations of a fixed degree.

    Elements are enumerated on first use and kept as a sorted list of image
    tuples, so equality of groups is list equality and membership is a binary
    search.
    """

    def __init__(self, degree: int, generators, cap: int = ENUMERATION_CAP,
                 _elements: list | None = None):
        self.degree = degree
        gens = []
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation(g)
            if g.degree != degree:
                raise ParseError("generator degree %d != group degree %d"
                                 % (g.degree, degree))
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.generators = gens
        self.cap = cap
        self._elements = _elements  # sorted list of image tuples
        self._element_set = None

    @classmethod
    def from_elements(cls, degree: int, elements, cap: int = ENUMERATION_CAP,
                      generators=None) -> "PermGroup":
        """Wrap an already-closed element collection (image tuples or Permutations)."""
        elems = sorted(e.img if isinstance(e, Permutation) else tuple(e)
                       for e in elements)
        gens = generators if generators is not None else \
            [Permutation(e) for e in elems if e != tidentity(degree)]
        return cls(degree, gens, cap=cap, _elements=elems)

    # -- enumeration --------------------------------------------------------

    def _enumerate(self) -> list:
        ident = tidentity(self.degree)
        gens = [g.img for g in self.generators]
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple(x[i] for i in g)  # x * g
                    if y not in seen:
                        if len(seen) >= self.cap:
                            raise GroupTooLarge(
                                "enumeration exceeded cap %d" % self.cap)
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    @property
    def elements(self) -> list:
        """Sorted list of image tuples."""
        if self._elements is None:
            self._elements = self._enumerate()
        return self._elements

    @property
    def element_set(self) -> frozenset:
        if self._element_set is None:
            self._element_set = frozenset(self.elements)
        return self._element_set

    def perms(self) -> list[Permutation]:
        return [Permutation(e) for e in self.elements]

    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Permutation:
        return Permutation(tidentity(self.degree))

    def contains_tuple(self, t: tuple) -> bool:
        el = self.elements
        i = bisect_left(el, t)
        return i < len(el) and el[i] == t

    def __contains__(self, p: Permutation) -> bool:
        if not isinstance(p, Permutation) or p.degree != self.degree:
            return False
        return self.contains_tuple(p.img)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.degree, tuple(self.elements)))

    def __repr__(self):
        return "PermGroup(degree=%d, order=%d)" % (self.degree, self.order())

    # -- basic structure ----------------------------------------------------

    def is_abelian(self) -> bool:
        gens = self.generators
        return all((a * b).img == (b * a).img
                   for a, b in itertools.combinations(gens, 2))

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return (self.degree == other.degree
                and all(other.contains_tuple(g.img) for g in self.generators))

    def exponent(self) -> int:
        return math.lcm(*(Permutation(e).order() for e in self.elements))

    def element_orders(self) -> list[int]:
        return sorted(Permutation(e).order() for e in self.elements)

    def small_generating_set(self) -> list[Permutation]:
        """Greedy generating set drawn from the sorted element list."""
        if not self.generators:
            return []
        chosen: list[Permutation] = []
        closed = {tidentity(self.degree)}
        for e in self.elements:
            if e in closed:
                continue
            chosen.append(Permutation(e))
            closed = _close(self.degree, [g.img for g in chosen], self.cap)
            if len(closed) == self.order():
                break
        return chosen

    def stabilizer(self, point: int) -> "PermGroup":
        elems = [e for e in self.elements if e[point] == point]
        return PermGroup.from_elements(self.degree, elems, cap=self.cap)


def _close(degree: int, gen_imgs: list, cap: int) -> set:
    ident = tidentity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gen_imgs:
                y = tuple(x[i] for i in g)
                if y not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLarge("enumeration exceeded cap %d" % cap)
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# spec operations


def subgroup_generated(g: PermGroup, elems) -> PermGroup:
    """Subgroup of g generated by the given elements (must lie in g)."""
    perms = []
    for e in elems:
        p = e if isinstance(e, Permutation) else Permutation(e)
        if not g.contains_tuple(p.img):
            raise ElementNotInGroup("%r is not in the group" % (p,))
        perms.append(p)
    return PermGroup(g.degree, perms, cap=g.cap)


def trivial_subgroup(g: PermGroup) -> PermGroup:
    return PermGroup.from_elements(g.degree, [tidentity(g.degree)], cap=g.cap)


def conjugate_subgroup(h: PermGroup, x: Permutation) -> PermGroup:
    """h^x = x^-1 h x, with elements mapped directly (no re-closure)."""
    elems = [tconj(e, x.img) for e in h.elements]
    return PermGroup.from_elements(h.degree, elems, cap=h.cap,
                                   generators=[p.conj(x) for p in h.generators])


@dataclass(frozen=True)
class Coset:
    rep: Permutation
    elements: tuple          # sorted image tuples
    index: int

    def __contains__(self, p: Permutation) -> bool:
        i = bisect_left(self.elements, p.img)
        return i < len(self.elements) and self.elements[i] == p.img


def _check_subgroup(g: PermGroup, h: PermGroup) -> None:
    if h.degree != g.degree or not h.is_subgroup_of(g):
        raise NotASubgroup("subgroup check failed")


def cosets(g: PermGroup, h: PermGroup) -> list[Coset]:
    """Left cosets xH of h in g, ordered by (lex-minimal) representative.

    The identity's coset comes first because the identity tuple is the lex
    minimum over all image tuples.
    """
    _check_subgroup(g, h)
    hel = h.elements
    assigned = set()
    out = []
    for x in g.elements:
        if x in assigned:
            continue
        block = sorted(tmul(x, t) for t in hel)
        assigned.update(block)
        out.append(Coset(Permutation(x), tuple(block), len(out)))
    return out


def coset_lookup(cos: list[Coset]) -> dict:
    table = {}
    for c in cos:
        for e in c.elements:
            table[e] = c.index
    return table


def action_on_cosets(g: PermGroup, h: PermGroup) -> "GroupHom":
    """Homomorphism g -> Sym(g/h) from left multiplication on left cosets."""
    cos = cosets(g, h)
    where = coset_lookup(cos)
    images = []
    for gen in g.generators:
        img = tuple(where[tmul(gen.img, c.rep.img)] for c in cos)
        images.append(Permutation(img))
    codomain = PermGroup(len(cos), images, cap=g.cap)
    return GroupHom(g, codomain, images)


def normal_core(g: PermGroup, h: PermGroup) -> PermGroup:
    """Largest normal subgroup of g inside h: kernel of the coset action."""
    return action_on_cosets(g, h).kernel()


def is_normal(g: PermGroup, n: PermGroup) -> bool:
    return (n.is_subgroup_of(g)
            and all(n.contains_tuple(tconj(x.img, gen.img))
                    for gen in g.generators for x in n.generators))


def quotient(g: PermGroup, n: PermGroup) -> tuple[PermGroup, "GroupHom"]:
    """(g/n realized on the cosets of n, projection homomorphism)."""
    if not is_normal(g, n):
        raise NotNormal("subgroup is not normal")
    hom = action_on_cosets(g, n)
    if hom.kernel().order() != n.order():
        raise InternalInconsistency("coset action kernel != normal subgroup")
    return hom.image(), hom


def direct_product(a: PermGroup, b: PermGroup) -> PermGroup:
    da, db = a.degree, b.degree
    gens = [Permutation(tuple(p.img) + tuple(range(da, da + db)))
            for p in a.generators]
    gens += [Permutation(tuple(range(da)) + tuple(x + da for x in p.img))
             for p in b.generators]
    prod = PermGroup(da + db, gens, cap=max(a.cap, b.cap))
    if prod.order() != a.order() * b.order():
        raise InternalInconsistency("direct product order mismatch")
    return prod


# ---------------------------------------------------------------------------


class GroupHom:
    """Homomorphism determined by generator images, validated eagerly.

    Validation closes the graph {(d, phi(d))} inside domain x codomain from
    the generator pairs; the assignment extends to a homomorphism iff no
    domain element acquires two images, and the closure then IS the full
    element map.
    """

    def __init__(self, domain: PermGroup, codomain: PermGroup, gen_images):
        if len(gen_images) != len(domain.generators):
            raise ActionNotConsistent("need one image per domain generator")
        gen_images = [p if isinstance(p, Permutation) else Permutation(p)
                      for p in gen_images]
        for p in gen_images:
            if not codomain.contains_tuple(p.img):
                raise ElementNotInGroup("image %r not in codomain" % (p,))
        self.domain = domain
        self.codomain = codomain
        self.gen_images = gen_images
        self._map = self._build_graph()
        self._reverse = None

    def _build_graph(self) -> dict:
        idd = tidentity(self.domain.degree)
        idc = tidentity(self.codomain.degree)
        table = {idd: idc}
        frontier = [idd]
        pairs = [(g.img, c.img) for g, c in
                 zip(self.domain.generators, self.gen_images)]
        while frontier:
            nxt = []
            for d in frontier:
                c = table[d]
                for gd, gc in pairs:
                    d2 = tmul(d, gd)
                    c2 = tmul(c, gc)
                    prev = table.get(d2)
                    if prev is None:
                        table[d2] = c2
                        nxt.append(d2)
                    elif prev != c2:
                        raise ActionNotConsistent(
                            "generator images do not define a homomorphism")
            frontier = nxt
        if len(table) != self.domain.order():
            raise ActionNotConsistent("graph closure missed domain elements")
        return table

    def __call__(self, p: Permutation) -> Permutation:
        img = self._map.get(p.img)
        if img is None:
            raise ElementNotInGroup("%r not in homomorphism domain" % (p,))
        return Permutation(img)

    def apply_tuple(self, t: tuple) -> tuple:
        img = self._map.get(t)
        if img is None:
            raise ElementNotInGroup("tuple not in homomorphism domain")
        return img

    def kernel(self) -> PermGroup:
        idc = tidentity(self.codomain.degree)
        elems = [d for d, c in self._map.items() if c == idc]
        return PermGroup.from_elements(self.domain.degree, elems,
                                       cap=self.domain.cap)

    def image(self) -> PermGroup:
        return PermGroup(self.codomain.degree, self.gen_images,
                         cap=self.codomain.cap)

    def preimage(self, sub: PermGroup) -> PermGroup:
        """Full preimage of a subgroup of the image."""
        if self._reverse is None:
            rev = {}
            for d, c in self._map.items():
                rev.setdefault(c, d)
            self._reverse = rev
        lifts = []
        for s in sub.generators:
            d = self._reverse.get(s.img)
            if d is None:
                raise NotASubgroup("subgroup is not inside the image")
            lifts.append(Permutation(d))
        ker = self.kernel()
        gens = ker.small_generating_set() + lifts
        pre = PermGroup(self.domain.degree, gens, cap=self.domain.cap)
        if pre.order() != ker.order() * sub.order():
            raise InternalInconsistency("preimage order mismatch")
        return pre

    def is_automorphism(self) -> bool:
        return (self.domain is self.codomain
                or self.domain == self.codomain) and \
            len(set(self._map.values())) == self.domain.order()


def semidirect_product(n: PermGroup, h: PermGroup, action) -> PermGroup:
    """External semidirect product N x| H.

    `action` maps each generator of h to an automorphism of n (a GroupHom
    n -> n); the assignment must extend to a homomorphism h -> Aut(n), which
    is verified eagerly.  The result is realized by the left regular action
    on the |N|*|H| pairs and carries the embedded copies as attributes
    `normal_part` and `complement_part`.
    """
    if isinstance(action, dict):
        action = [action[gen] for gen in h.generators]
    if len(action) != len(h.generators):
        raise ActionNotConsistent("need one automorphism per generator of h")
    nel = n.elements
    nindex = {e: i for i, e in enumerate(nel)}
    auts = []
    for a in action:
        if not isinstance(a, GroupHom) or a.domain.elements != nel \
                or a.codomain.elements != nel:
            raise NotAnAutomorphism("action values must be GroupHoms n -> n")
        if not a.is_automorphism():
            raise NotAnAutomorphism("action value is not bijective")
        auts.append(tuple(nindex[a.apply_tuple(e)] for e in nel))

    # extend to every element of h via the same graph-closure discipline
    idh = tidentity(h.degree)
    table = {idh: tuple(range(len(nel)))}
    frontier = [idh]
    pairs = list(zip((g.img for g in h.generators), auts))
    while frontier:
        nxt = []
        for d in frontier:
            c = table[d]
            for gd, gc in pairs:
                d2 = tmul(d, gd)
                c2 = tuple(c[i] for i in gc)  # phi(d*gd) = phi(d) o phi(gd)
                prev = table.get(d2)
                if prev is None:
                    table[d2] = c2
                    nxt.append(d2)
                elif prev != c2:
                    raise ActionNotConsistent(
                        "generator automorphisms do not define h -> Aut(n)")
        frontier = nxt
    if len(table) != h.order():
        raise ActionNotConsistent("action closure missed elements of h")

    hel = h.elements
    hindex = {e: i for i, e in enumerate(hel)}
    nmul = {}

    def nprod(i: int, j: int) -> int:
        key = (i, j)
        v = nmul.get(key)
        if v is None:
            v = nindex[tmul(nel[i], nel[j])]
            nmul[key] = v
        return v

    npoints = len(nel)
    hpoints = len(hel)

    def act_point(xi: int, ki: int, yj: int, lj: int) -> int:
        # (x,k)(y,l) = (x * phi_k(y), k*l)
        phik = table[hel[ki]]
        xy = nprod(xi, phik[yj])
        kl = hindex[tmul(hel[ki], hel[lj])]
        return xy * hpoints + kl

    def elem_perm(xi: int, ki: int) -> Permutation:
        img = [0] * (npoints * hpoints)
        for yj in range(npoints):
            for lj in range(hpoints):
                img[yj * hpoints + lj] = act_point(xi, ki, yj, lj)
        return Permutation(img)

    id_n = nindex[tidentity(n.degree)]
    id_h = hindex[idh]
    gens = [elem_perm(nindex[g.img], id_h) for g in n.generators]
    gens += [elem_perm(id_n, hindex[g.img]) for g in h.generators]
    prod = PermGroup(npoints * hpoints, gens, cap=max(n.cap, h.cap, npoints * hpoints))
    if prod.order() != npoints * hpoints:
        raise InternalInconsistency("semidirect product order mismatch")
    prod.normal_part = PermGroup.from_elements(
        prod.degree, [elem_perm(i, id_h).img for i in range(npoints)])
    prod.complement_part = PermGroup.from_elements(
        prod.degree, [elem_perm(id_n, j).img for j in range(hpoints)])
    return prod


# ---------------------------------------------------------------------------
# standard groups


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup.from_elements(degree, [tidentity(degree)])


def cyclic(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group()
    cyc = Permutation(tuple(range(1, n)) + (0,))
    return PermGroup(n, [cyc])


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return trivial_group(max(n, 1))
    gens = [Permutation((1, 0) + tuple(range(2, n)))]
    if n > 2:
        gens.append(Permutation(tuple(range(1, n)) + (0,)))
    return PermGroup(n, gens)


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(max(n, 1))
    gens = []
    for i in range(2, n):
        img = list(range(n))  # the 3-cycle (0 1 i)
        img[0], img[1], img[i] = 1, i, 0
        gens.append(Permutation(img))
    return PermGroup(n, gens)


def dihedral(n: int) -> PermGroup:
    """Dihedral group of order 2n."""
    if n == 1:
        return cyclic(2)
    if n == 2:
        return direct_product(cyclic(2), cyclic(2))
    rot = Permutation(tuple(range(1, n)) + (0,))
    ref = Permutation((0,) + tuple(range(n - 1, 0, -1)))
    return PermGroup(n, [rot, ref])


def klein_four() -> PermGroup:
    return direct_product(cyclic(2), cyclic(2))


_QUAT_AXIS = {  # (axis_a, axis_b) -> (sign, axis) for 1,i,j,k
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion() -> PermGroup:
    """Q8 = {+-1, +-i, +-j, +-k} acting on itself by left multiplication."""
    units = [(s, a) for a in range(4) for s in (1, -1)]
    index = {u: i for i, u in enumerate(units)}

    def qmul(u, v):
        s, axis = _QUAT_AXIS[(u[1], v[1])]
        return (s * u[0] * v[0], axis)

    def left_perm(u):
        return Permutation([index[qmul(u, v)] for v in units])

    g = PermGroup(8, [left_perm((1, 1)), left_perm((1, 2))])
    if g.order() != 8:
        raise InternalInconsistency("Q8 construction is wrong")
    return g
