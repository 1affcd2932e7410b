"""Finite abelian groups, G-modules and low-degree group cohomology.

Everything is exact: abelian groups live in invariant-factor coordinates,
cochains are dense integer tables, and kernels/images/quotients are computed
with Smith normal form over Python integers.  On top of the cochain complex
the module builds extensions of a group by a module from 2-cocycles, decides
splitness, counts sections against H^1, produces coprime complements
(Zassenhaus), and lifts matrix representations from Z/p to Z/p^alpha.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product as iproduct

from .errors import (
    ActionNotConsistent,
    BadInput,
    DegreeTooHigh,
    GroupTooLarge,
    HypothesisViolated,
    InternalInconsistency,
    NoConjugatorFound,
    NotACocycle,
    NotAnAutomorphism,
    NotCoprime,
    NotNormal,
    NotSplit,
    TooLarge,
)
from .perm_core import (
    GroupHom,
    PermGroup,
    Permutation,
    coset_lookup,
    cosets,
    is_normal,
    quotient,
    tidentity,
    tinv,
    tmul,
    trivial_subgroup,
)
from .structure import derived_series, derived_subgroup, minimal_normal_elementary, prime_divisors

#: verify identities (d after d vanishes, recovered sections are
#: homomorphisms, ...) on every call; cheap at desk scale.
DEBUG_CHECKS = True

#: largest number of rows accepted for a coboundary matrix.
MATRIX_ROW_CAP = 20000

#: cap on the brute-force section search of h1_torsor_sections.
SECTION_SEARCH_CAP = 20000


# ---------------------------------------------------------------------------
# exact integer linear algebra: Smith normal form with transformations


def _ident(n: int) -> list:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: list, b: list) -> list:
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            av = ai[k]
            if av:
                bk = b[k]
                for j in range(cols):
                    oi[j] += av * bk[j]
    return out


def _mat_vec(a: list, v: list) -> list:
    return [sum(row[k] * v[k] for k in range(len(v))) for row in a]


@dataclass(frozen=True)
class SmithForm:
    """u @ mat @ v == d with u, v unimodular and d diagonal, d[i] | d[i+1]."""

    u: tuple
    d: tuple
    v: tuple
    u_inv: tuple
    v_inv: tuple
    rank: int

    def diagonal(self) -> tuple:
        return tuple(self.d[i][i] for i in range(min(len(self.d), len(self.v))))


def smith_normal_form(mat) -> SmithForm:
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    for row in mat:
        if len(row) != cols:
            raise BadInput("matrix rows have unequal lengths")
    a = [list(row) for row in mat]
    u = _ident(rows)
    ui = _ident(rows)
    v = _ident(cols)
    vi = _ident(cols)

    def row_add(i, j, k):  # row_i += k * row_j
        ai, aj = a[i], a[j]
        for t in range(cols):
            ai[t] += k * aj[t]
        uu, uj = u[i], u[j]
        for t in range(rows):
            uu[t] += k * uj[t]
        for t in range(rows):  # u_inv: col_j -= k * col_i
            ui[t][j] -= k * ui[t][i]

    def col_add(j, i, k):  # col_j += k * col_i
        for t in range(rows):
            a[t][j] += k * a[t][i]
        for t in range(cols):
            v[t][j] += k * v[t][i]
        vii, vij = vi[i], vi[j]
        for t in range(cols):  # v_inv: row_i -= k * row_j
            vii[t] -= k * vij[t]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for t in range(rows):
            ui[t][i], ui[t][j] = ui[t][j], ui[t][i]

    def col_swap(i, j):
        for t in range(rows):
            a[t][i], a[t][j] = a[t][j], a[t][i]
        for t in range(cols):
            v[t][i], v[t][j] = v[t][j], v[t][i]
        vi[i], vi[j] = vi[j], vi[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for t in range(rows):
            ui[t][i] = -ui[t][i]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # pivot selection: any unit entry wins immediately, else smallest |.|
        pr = pc = -1
        best = 0
        for i in range(t, rows):
            ai = a[i]
            for j in range(t, cols):
                val = ai[j]
                if val:
                    av = -val if val < 0 else val
                    if av == 1:
                        pr, pc, best = i, j, 1
                        break
                    if best == 0 or av < best:
                        pr, pc, best = i, j, av
            if best == 1:
                break
        if pr < 0:
            break
        if pr != t:
            row_swap(t, pr)
        if pc != t:
            col_swap(t, pc)
        while True:
            redo = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_add(i, t, -q)
                    if a[i][t]:
                        row_swap(t, i)
                        redo = True
                        break
            if redo:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        col_add(j, t, -q)
                    if a[t][j]:
                        col_swap(t, j)
                        redo = True
                        break
            if redo:
                continue
            break
        # the pivot must divide the rest of the submatrix for the chain
        piv = a[t][t]
        offender = -1
        for i in range(t + 1, rows):
            ai = a[i]
            for j in range(t + 1, cols):
                if ai[j] % piv:
                    offender = i
                    break
            if offender >= 0:
                break
        if offender >= 0:
            row_add(t, offender, 1)
            continue
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    rank = sum(1 for i in range(limit) if a[i][i])
    freeze = lambda m: tuple(tuple(r) for r in m)
    return SmithForm(freeze(u), freeze(a), freeze(v), freeze(ui), freeze(vi), rank)


def kernel_mod_lattice(mat: list, moduli: list) -> list:
    """Basis (list of columns) of {x : mat @ x == 0 modulo moduli, per row}.

    The basis always has full length ``cols`` because the solution set
    contains ``lcm(moduli) * Z^cols``.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows != len(moduli):
        raise BadInput("one modulus per matrix row required")
    if rows == 0:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    w = 1
    for m in moduli:
        w = math.lcm(w, m)
    scaled = [[(w // moduli[r]) * x for x in mat[r]] for r in range(rows)]
    s = smith_normal_form(scaled)
    basis = []
    for j in range(cols):
        col = [s.v[i][j] for i in range(cols)]
        if j < s.rank:
            mult = w // math.gcd(s.d[j][j], w)
            if mult != 1:
                col = [mult * x for x in col]
        basis.append(col)
    return basis


def solve_mod_lattice(mat: list, target: list, moduli: list):
    """One solution x of mat @ x == target modulo moduli, or None."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows != len(moduli) or rows != len(target):
        raise BadInput("target/moduli must match the matrix rows")
    if rows == 0:
        return [0] * cols
    w = 1
    for m in moduli:
        w = math.lcm(w, m)
    scaled = [[(w // moduli[r]) * x for x in mat[r]] for r in range(rows)]
    tb = [(w // moduli[r]) * target[r] for r in range(rows)]
    s = smith_normal_form(scaled)
    c = [sum(s.u[i][k] * tb[k] for k in range(rows)) for i in range(rows)]
    y = [0] * cols
    for i in range(rows):
        if i < s.rank:
            d = s.d[i][i]
            g = math.gcd(d, w)
            if c[i] % g:
                return None
            wg = w // g
            if wg > 1:
                y[i] = ((c[i] // g) * pow((d // g) % wg, -1, wg)) % wg
        elif c[i] % w:
            return None
    x = [sum(s.v[i][k] * y[k] for k in range(cols)) for i in range(cols)]
    if DEBUG_CHECKS:
        for r in range(rows):
            if (sum(mat[r][k] * x[k] for k in range(cols)) - target[r]) % moduli[r]:
                raise InternalInconsistency("modular solver returned a non-solution")
    return x


# ---------------------------------------------------------------------------
# finite abelian groups in invariant-factor coordinates


class FinAbGroup:
    """Direct sum of Z/d_i with d_1 | d_2 | ... | d_r, all d_i >= 2."""

    __slots__ = ("invariant_factors", "_elements")

    def __init__(self, invariant_factors):
        inv = tuple(int(d) for d in invariant_factors)
        for d in inv:
            if d < 2:
                raise BadInput("invariant factors must be >= 2, got %r" % (d,))
        for a, b in zip(inv, inv[1:]):
            if b % a:
                raise BadInput("invariant factors must form a divisibility chain")
        self.invariant_factors = inv
        self._elements = None

    def __repr__(self):
        if not self.invariant_factors:
            return "FinAbGroup(trivial)"
        return "FinAbGroup(%s)" % " x ".join("Z/%d" % d for d in self.invariant_factors)

    def __eq__(self, other):
        return isinstance(other, FinAbGroup) and self.invariant_factors == other.invariant_factors

    def __hash__(self):
        return hash(("FinAbGroup", self.invariant_factors))

    def rank(self) -> int:
        return len(self.invariant_factors)

    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def zero(self) -> tuple:
        return (0,) * len(self.invariant_factors)

    def reduce(self, coords) -> tuple:
        return tuple(c % d for c, d in zip(coords, self.invariant_factors))

    def add(self, x, y) -> tuple:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x) -> tuple:
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    def sub(self, x, y) -> tuple:
        return tuple((a - b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def scale(self, k: int, x) -> tuple:
        return tuple((k * a) % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x) -> int:
        o = 1
        for a, d in zip(x, self.invariant_factors):
            o = math.lcm(o, d // math.gcd(a, d))
        return o

    def elements(self) -> list:
        """All coordinate tuples, first coordinate fastest."""
        if self._elements is None:
            els = []
            total = self.order()
            for n in range(total):
                coords = []
                for d in self.invariant_factors:
                    coords.append(n % d)
                    n //= d
                els.append(tuple(coords))
            self._elements = els
        return self._elements

    def index_of(self, coords) -> int:
        n = 0
        for c, d in zip(reversed(coords), reversed(self.invariant_factors)):
            n = n * d + (c % d)
        return n

    def basis(self) -> list:
        """Standard generators e_i (order d_i)."""
        r = len(self.invariant_factors)
        return [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]

    def element(self, coords) -> "AbElement":
        return AbElement(self, self.reduce(coords))


@dataclass(frozen=True)
class AbElement:
    """An element of a FinAbGroup in reduced coordinates."""

    group: FinAbGroup
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.group.rank():
            raise BadInput("coordinate count does not match the group rank")
        object.__setattr__(self, "coords", self.group.reduce(self.coords))

    def __add__(self, other):
        if other.group != self.group:
            raise BadInput("elements of different groups")
        return AbElement(self.group, self.group.add(self.coords, other.coords))

    def __neg__(self):
        return AbElement(self.group, self.group.neg(self.coords))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int):
        return AbElement(self.group, self.group.scale(k, self.coords))

    def order(self) -> int:
        return self.group.element_order(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def subgroup_invariants(fab: FinAbGroup, gens) -> tuple:
    """Invariant factors of the subgroup generated by ``gens``.

    Determined by the order census: per prime p the count of solutions of
    p^k x = 0 inside the subgroup is p^(sum min(lambda_i, k)), so successive
    ratios recover the conjugate of the p-type partition; the types are then
    recombined into one divisibility chain.
    """
    norm = []
    for gx in gens:
        coords = gx.coords if isinstance(gx, AbElement) else tuple(gx)
        norm.append(fab.reduce(coords))
    closure = {fab.zero()}
    frontier = [fab.zero()]
    while frontier:
        nxt = []
        for x in frontier:
            for gq in norm:
                y = fab.add(x, gq)
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    order = len(closure)
    if order == 1:
        return ()
    elems = list(closure)
    parts = {}
    for p in prime_divisors(order):
        mu = []
        prev = 1
        k = 1
        while True:
            cnt = sum(1 for x in elems if all(c == 0 for c in fab.scale(p ** k, x)))
            q, rem = divmod(cnt, prev)
            if rem:
                raise InternalInconsistency("order census is not multiplicative")
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            if q != 1:
                raise InternalInconsistency("order census count is not a p-power ratio")
            if e == 0:
                break
            mu.append(e)
            prev = cnt
            k += 1
        lam = [sum(1 for m in mu if m >= i) for i in range(1, (mu[0] if mu else 0) + 1)]
        parts[p] = lam
    nfac = max(len(l) for l in parts.values())
    ds = []
    for slot in range(nfac):
        d = 1
        for p, lam in parts.items():
            if slot < len(lam):
                d *= p ** lam[slot]
        ds.append(d)
    ds.reverse()
    if math.prod(ds) != order:
        raise InternalInconsistency("census invariants do not multiply to the subgroup order")
    return tuple(ds)


# ---------------------------------------------------------------------------
# abelianization


def abelianize(g: PermGroup):
    """Largest abelian quotient of g.

    Returns (FinAbGroup, map) where the map sends a Permutation of g to its
    AbElement image.  Built by writing the abelian quotient on the images of
    g's generators, extracting one triangular relation per generator, and
    diagonalizing the relation matrix with Smith normal form.
    """
    der = derived_subgroup(g)
    q, proj = quotient(g, der)
    kgens = [gen.img for gen in g.generators]
    k = len(kgens)
    if k == 0:
        fab = FinAbGroup(())

        def to_ab_trivial(x):
            return AbElement(fab, ())

        return fab, to_ab_trivial
    qimgs = [proj.apply_tuple(t) for t in kgens]
    qid = tidentity(q.degree)
    zero = (0,) * k
    vec = {qid: zero}
    frontier = [qid]
    while frontier:
        nxt = []
        for x in frontier:
            vx = vec[x]
            for i, qi in enumerate(qimgs):
                y = tmul(x, qi)
                if y not in vec:
                    vec[y] = tuple(vx[t] + (1 if t == i else 0) for t in range(k))
                    nxt.append(y)
        frontier = nxt
    if len(vec) != q.order():
        raise InternalInconsistency("generator images fail to generate the abelian quotient")
    rows = []
    prodc = 1
    for i in range(k):
        h = {qid: (0,) * i}
        fr = [qid]
        while fr:
            nx = []
            for x in fr:
                ex = h[x]
                for j in range(i):
                    y = tmul(x, qimgs[j])
                    if y not in h:
                        h[y] = tuple(ex[t] + (1 if t == j else 0) for t in range(i))
                        nx.append(y)
            fr = nx
        c = 1
        power = qimgs[i]
        while power not in h:
            power = tmul(power, qimgs[i])
            c += 1
        expr = h[power]
        rows.append([-expr[j] for j in range(i)] + [c] + [0] * (k - i - 1))
        prodc *= c
    if prodc != q.order():
        raise InternalInconsistency("triangular relations do not span the relation lattice")
    s = smith_normal_form(rows)
    diag = [s.d[i][i] for i in range(k)]
    if any(d == 0 for d in diag):
        raise InternalInconsistency("relation matrix of a finite quotient is singular")
    kept = [j for j in range(k) if diag[j] > 1]
    fab = FinAbGroup(tuple(diag[j] for j in kept))
    v = s.v

    def to_ab(x):
        t = x.img if isinstance(x, Permutation) else tuple(x)
        qt = proj.apply_tuple(t)
        w = vec[qt]
        full = [sum(w[a] * v[a][j] for a in range(k)) for j in range(k)]
        return AbElement(fab, tuple(full[j] % diag[j] for j in kept))

    return fab, to_ab


# ---------------------------------------------------------------------------
# G-modules


class GModule:
    """A FinAbGroup with a left action of a PermGroup by automorphisms.

    The action is given per generator as an integer matrix M acting on
    column coordinates, (M x)_j = sum_i M[j][i] x_i mod d_j; it must be
    well defined on the invariant factors and multiplicative on all of G
    (validated by closing the element->matrix graph).
    """

    __slots__ = ("group", "ab", "gen_matrices", "_mats", "_eindex")

    def __init__(self, group: PermGroup, ab: FinAbGroup, gen_matrices):
        if len(gen_matrices) != len(group.generators):
            raise BadInput("one action matrix per group generator required")
        r = ab.rank()
        inv = ab.invariant_factors
        mats = []
        for m in gen_matrices:
            rowsm = [list(row) for row in m]
            if len(rowsm) != r or any(len(row) != r for row in rowsm):
                raise BadInput("action matrices must be rank x rank")
            for i in range(r):
                for j in range(r):
                    if (inv[i] * rowsm[j][i]) % inv[j]:
                        raise BadInput(
                            "matrix entry (%d,%d) is not well defined on the invariant factors"
                            % (j, i)
                        )
            mats.append(tuple(tuple(rowsm[j][i] % inv[j] for i in range(r)) for j in range(r)))
        self.group = group
        self.ab = ab
        self.gen_matrices = tuple(mats)
        self._eindex = {t: i for i, t in enumerate(group.elements)}
        # each generator matrix must act bijectively
        for m in mats:
            seen = set()
            for x in ab.elements():
                seen.add(self._apply(m, x))
            if len(seen) != ab.order():
                raise NotAnAutomorphism("an action matrix is not invertible on the module")
        # close the (element, matrix) graph; collisions mean the assignment
        # does not respect the relations of the group
        ident = tidentity(group.degree)
        idmat = tuple(tuple(1 if i == j else 0 for i in range(r)) for j in range(r))
        table = {ident: idmat}
        frontier = [ident]
        pairs = list(zip(group.generators, mats))
        while frontier:
            nxt = []
            for x in frontier:
                mx = table[x]
                for gen, mg in pairs:
                    y = tmul(x, gen.img)
                    my = self._compose(mx, mg)
                    prev = table.get(y)
                    if prev is None:
                        table[y] = my
                        nxt.append(y)
                    elif prev != my:
                        raise ActionNotConsistent(
                            "action matrices do not respect the group relations"
                        )
            frontier = nxt
        if len(table) != group.order():
            raise ActionNotConsistent("action graph failed to cover the group")
        self._mats = table

    def _apply(self, m, x) -> tuple:
        inv = self.ab.invariant_factors
        r = len(inv)
        return tuple(sum(m[j][i] * x[i] for i in range(r)) % inv[j] for j in range(r))

    def _compose(self, m1, m2) -> tuple:
        """Matrix of m1 after m2, rows reduced mod the invariant factors."""
        inv = self.ab.invariant_factors
        r = len(inv)
        return tuple(
            tuple(sum(m1[j][t] * m2[t][i] for t in range(r)) % inv[j] for i in range(r))
            for j in range(r)
        )

    def matrix(self, s) -> tuple:
        t = s.img if isinstance(s, Permutation) else tuple(s)
        return self._mats[t]

    def act(self, s, coords) -> tuple:
        return self._apply(self.matrix(s), coords)

    def element_index(self, t) -> int:
        return self._eindex[t]

    def fixed_elements(self) -> list:
        out = []
        gens = [gen.img for gen in self.group.generators]
        for x in self.ab.elements():
            if all(self.act(gimg, x) == x for gimg in gens):
                out.append(x)
        return out

    def is_trivial_action(self) -> bool:
        r = self.ab.rank()
        idmat = tuple(tuple(1 if i == j else 0 for i in range(r)) for j in range(r))
        return all(m == idmat for m in self.gen_matrices)


def trivial_module(group: PermGroup, ab: FinAbGroup) -> GModule:
    r = ab.rank()
    ident = [[1 if i == j else 0 for i in range(r)] for j in range(r)]
    return GModule(group, ab, [ident for _ in group.generators])


def inversion_module(group: PermGroup, ab: FinAbGroup) -> GModule:
    """Every generator acts by x -> -x (requires the generators to have
    compatible relations, e.g. any group mapping onto {+-1})."""
    r = ab.rank()
    neg = [[-1 if i == j else 0 for i in range(r)] for j in range(r)]
    return GModule(group, ab, [neg for _ in group.generators])


# ---------------------------------------------------------------------------
# cochains and the coboundary


class Cochain:
    """Dense n-cochain: one value per n-tuple of group elements.

    Values are stored by mixed-radix rank of the argument tuple with the
    first argument varying fastest.
    """

    __slots__ = ("module", "degree", "values")

    def __init__(self, module: GModule, degree: int, values):
        if degree < 0:
            raise BadInput("cochain degree must be >= 0")
        m = module.group.order()
        vals = tuple(module.ab.reduce(v) for v in values)
        if len(vals) != m ** degree:
            raise BadInput("cochain table has the wrong size")
        self.module = module
        self.degree = degree
        self.values = vals

    def rank_of(self, args) -> int:
        m = self.module.group.order()
        rank = 0
        for t in reversed(args):
            timg = t.img if isinstance(t, Permutation) else tuple(t)
            rank = rank * m + self.module.element_index(timg)
        return rank

    def value(self, args) -> tuple:
        return self.values[self.rank_of(args)]

    def __call__(self, *args) -> AbElement:
        return AbElement(self.module.ab, self.value(args))

    def is_zero(self) -> bool:
        return all(all(c == 0 for c in v) for v in self.values)

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and other.module is self.module
            and other.degree == self.degree
            and other.values == self.values
        )

    def __hash__(self):
        return hash((id(self.module), self.degree, self.values))

    def add(self, other) -> "Cochain":
        ab = self.module.ab
        return Cochain(
            self.module,
            self.degree,
            tuple(ab.add(a, b) for a, b in zip(self.values, other.values)),
        )

    def sub(self, other) -> "Cochain":
        ab = self.module.ab
        return Cochain(
            self.module,
            self.degree,
            tuple(ab.sub(a, b) for a, b in zip(self.values, other.values)),
        )

    @staticmethod
    def zero(module: GModule, degree: int) -> "Cochain":
        m = module.group.order()
        return Cochain(module, degree, ((module.ab.zero(),) * (m ** degree)))

    @staticmethod
    def random(module: GModule, degree: int, rng) -> "Cochain":
        m = module.group.order()
        inv = module.ab.invariant_factors
        vals = [
            tuple(rng.randrange(d) for d in inv) for _ in range(m ** degree)
        ]
        return Cochain(module, degree, vals)


def _decode(rank: int, m: int, n: int) -> list:
    out = []
    for _ in range(n):
        out.append(rank % m)
        rank //= m
    return out


def _encode(idxs, m: int) -> int:
    rank = 0
    for i in reversed(idxs):
        rank = rank * m + i
    return rank


def _cobord_raw(f: Cochain) -> Cochain:
    module = f.module
    ab = module.ab
    els = module.group.elements
    m = len(els)
    n = f.degree
    vals = []
    for rank in range(m ** (n + 1)):
        idxs = _decode(rank, m, n + 1)
        acc = module.act(els[idxs[0]], f.values[_encode(idxs[1:], m)])
        for pos in range(1, n + 1):
            merged = module.element_index(tmul(els[idxs[pos - 1]], els[idxs[pos]]))
            sub = idxs[: pos - 1] + [merged] + idxs[pos + 1 :]
            sgn = 1 if pos % 2 == 0 else -1
            acc = ab.add(acc, ab.scale(sgn, f.values[_encode(sub, m)]))
        sgn = 1 if (n + 1) % 2 == 0 else -1
        acc = ab.add(acc, ab.scale(sgn, f.values[_encode(idxs[:n], m)]))
        vals.append(acc)
    return Cochain(module, n + 1, vals)


def cobord(module: GModule, f: Cochain) -> Cochain:
    """df(s_1..s_{n+1}) = s_1 f(s_2..) + sum (-1)^i f(..s_i s_{i+1}..)
    + (-1)^{n+1} f(s_1..s_n)."""
    if f.module is not module:
        raise BadInput("cochain does not belong to the module")
    if f.degree + 1 > 3:
        raise DegreeTooHigh("coboundary only computed up to degree 3")
    out = _cobord_raw(f)
    if DEBUG_CHECKS and f.degree + 2 <= 3:
        if not _cobord_raw(out).is_zero():
            raise InternalInconsistency("d after d returned a nonzero cochain")
    return out


def coboundary_matrix(module: GModule, n: int) -> list:
    """Integer matrix of d: C^n -> C^{n+1} on flattened coordinates.

    A cochain is flattened as x[rank * r + i] with rank the argument tuple's
    mixed radix rank and i the module coordinate.
    """
    els = module.group.elements
    m = len(els)
    r = module.ab.rank()
    rows = m ** (n + 1) * r
    if rows > MATRIX_ROW_CAP:
        raise TooLarge("coboundary matrix would have %d rows" % rows)
    cols = m ** n * r
    mat = [[0] * cols for _ in range(rows)]
    for rank in range(m ** (n + 1)):
        idxs = _decode(rank, m, n + 1)
        base = rank * r
        matx = module.matrix(els[idxs[0]])
        inb = _encode(idxs[1:], m) * r
        for j in range(r):
            row = mat[base + j]
            for i in range(r):
                if matx[j][i]:
                    row[inb + i] += matx[j][i]
        for pos in range(1, n + 1):
            merged = module.element_index(tmul(els[idxs[pos - 1]], els[idxs[pos]]))
            sub = idxs[: pos - 1] + [merged] + idxs[pos + 1 :]
            inb = _encode(sub, m) * r
            sgn = 1 if pos % 2 == 0 else -1
            for j in range(r):
                mat[base + j][inb + j] += sgn
        inb = _encode(idxs[:n], m) * r
        sgn = 1 if (n + 1) % 2 == 0 else -1
        for j in range(r):
            mat[base + j][inb + j] += sgn
    return mat


def _flat_moduli(module: GModule, n: int) -> list:
    m = module.group.order()
    inv = module.ab.invariant_factors
    return [inv[j] for _ in range(m ** n) for j in range(len(inv))]


def _flatten_cochain(f: Cochain) -> list:
    return [c for v in f.values for c in v]


def _unflatten_cochain(module: GModule, n: int, vec) -> Cochain:
    r = module.ab.rank()
    m = module.group.order()
    vals = [tuple(vec[rank * r + j] for j in range(r)) for rank in range(m ** n)]
    return Cochain(module, n, vals)


# ---------------------------------------------------------------------------
# cohomology


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    invariant_factors: tuple
    representatives: tuple

    def order(self) -> int:
        return math.prod(self.invariant_factors)


def cohomology(module: GModule, n: int) -> CohomologyGroup:
    """H^n(G, A) = Z^n / B^n by exact integer linear algebra.

    Cochains are integer vectors modulo the per-coordinate invariant
    factors; Z^n is the kernel of the coboundary matrix modulo that
    lattice, B^n the image of the previous coboundary plus the lattice,
    and the quotient's invariant factors come from the Smith normal form
    of B^n expressed in a basis of Z^n.
    """
    if not isinstance(n, int) or not 0 <= n <= 3:
        raise BadInput("cohomology degree must be between 0 and 3")
    r = module.ab.rank()
    g = module.group
    m = g.order()
    if r == 0:
        return CohomologyGroup(n, (), ())
    if m ** (n + 1) * r > MATRIX_ROW_CAP:
        raise TooLarge("degree-%d coboundary matrix exceeds the row cap" % n)
    inv = module.ab.invariant_factors
    ncols = m ** n * r
    mod_n = _flat_moduli(module, n)
    mod_np = _flat_moduli(module, n + 1)
    mn = coboundary_matrix(module, n)
    zbasis = kernel_mod_lattice(mn, mod_np)
    bz = [[zbasis[c][i] for c in range(ncols)] for i in range(ncols)]
    ygens = []
    if n >= 1:
        mprev = coboundary_matrix(module, n - 1)
        pcols = m ** (n - 1) * r
        for c in range(pcols):
            ygens.append([mprev[i][c] for i in range(ncols)])
    for i in range(ncols):
        ygens.append([mod_n[i] if t == i else 0 for t in range(ncols)])
    sb = smith_normal_form(bz)
    if sb.rank < ncols:
        raise InternalInconsistency("cocycle lattice is not of full rank")
    xcols = []
    for y in ygens:
        c = [sum(sb.u[i][k] * y[k] for k in range(ncols)) for i in range(ncols)]
        w = []
        for i in range(ncols):
            d = sb.d[i][i]
            if c[i] % d:
                raise InternalInconsistency("a coboundary fell outside the cocycle lattice")
            w.append(c[i] // d)
        xcols.append([sum(sb.v[i][k] * w[k] for k in range(ncols)) for i in range(ncols)])
    xmat = [[xcols[k][i] for k in range(len(xcols))] for i in range(ncols)]
    sx = smith_normal_form(xmat)
    if sx.rank < ncols:
        raise InternalInconsistency("cohomology quotient came out infinite")
    diag = [sx.d[i][i] for i in range(ncols)]
    kept = [i for i in range(ncols) if diag[i] > 1]
    factors = tuple(diag[i] for i in kept)
    reps = []
    for i in kept:
        ucol = [sx.u_inv[t][i] for t in range(ncols)]
        vec = [sum(bz[t][k] * ucol[k] for k in range(ncols)) for t in range(ncols)]
        if DEBUG_CHECKS:
            for row in range(len(mn)):
                if sum(mn[row][k] * vec[k] for k in range(ncols)) % mod_np[row]:
                    raise InternalInconsistency("representative is not a cocycle")
        reps.append(_unflatten_cochain(module, n, vec))
    result = CohomologyGroup(n, factors, tuple(reps))
    if DEBUG_CHECKS and n == 0:
        if result.order() != len(module.fixed_elements()):
            raise InternalInconsistency("H^0 disagrees with the fixed submodule")
    if DEBUG_CHECKS and n >= 1 and factors:
        if m % factors[-1]:
            raise InternalInconsistency("the exponent of H^n must divide |G|")
    return result


# ---------------------------------------------------------------------------
# extensions of G by A from 2-cocycles


class Extension:
    """Group law on A x G induced by a 2-cocycle, realized by permutations.

    (a, s)(b, t) = (a + s.b + f(s, t), st), identity (eps, 1) with
    eps = -f(1, 1).  The permutation realization is the left regular action
    on the lexicographically sorted labels (a, s).
    """

    __slots__ = (
        "group",
        "module",
        "cocycle",
        "epsilon",
        "points",
        "normal_part",
        "_pindex",
        "_ident_point",
    )

    def __init__(self, module: GModule, f: Cochain):
        if f.degree != 2 or f.module is not module:
            raise BadInput("an extension needs a degree-2 cochain over the module")
        if not _cobord_raw(f).is_zero():
            raise NotACocycle("the cochain does not satisfy the cocycle identity")
        ab = module.ab
        g = module.group
        idimg = tidentity(g.degree)
        eps = ab.neg(f.value((idimg, idimg)))
        points = sorted((a, s) for a in ab.elements() for s in g.elements)
        pindex = {pt: i for i, pt in enumerate(points)}
        self.module = module
        self.cocycle = f
        self.epsilon = eps
        self.points = tuple(points)
        self._pindex = pindex
        self._ident_point = pindex[(eps, idimg)]

        gens = [self.element_perm(ab.add(e, eps), idimg) for e in ab.basis()]
        gens += [self.element_perm(eps, gen.img) for gen in g.generators]
        self.group = PermGroup(len(points), gens)
        if self.group.order() != ab.order() * g.order():
            raise InternalInconsistency("extension order differs from |A|.|G|")
        fiber = {self.element_perm(ab.add(a, eps), idimg).img for a in ab.elements()}
        self.normal_part = PermGroup.from_elements(len(points), sorted(fiber))
        if not is_normal(self.group, self.normal_part):
            raise InternalInconsistency("the A-fiber is not normal in the extension")
        kernel = {x for x in self.group.elements if self._label(x)[1] == idimg}
        if kernel != fiber:
            raise InternalInconsistency("projection kernel differs from the injected A")

    def _law(self, a, s, b, t):
        module = self.module
        ab = module.ab
        f = self.cocycle
        return (
            ab.add(ab.add(a, module.act(s, b)), f.value((s, t))),
            tmul(s, t),
        )

    def element_perm(self, a, s) -> Permutation:
        """Left multiplication by the element labeled (a, s)."""
        a = self.module.ab.reduce(a)
        s = s.img if isinstance(s, Permutation) else tuple(s)
        img = [0] * len(self.points)
        for i, (b, t) in enumerate(self.points):
            img[i] = self._pindex[self._law(a, s, b, t)]
        return Permutation(tuple(img))

    def _label(self, x) -> tuple:
        t = x.img if isinstance(x, Permutation) else tuple(x)
        return self.points[t[self._ident_point]]

    def label_of(self, x) -> tuple:
        """(a-coordinates, G-element image) of an extension element."""
        return self._label(x)

    def inject(self, a) -> Permutation:
        coords = a.coords if isinstance(a, AbElement) else self.module.ab.reduce(a)
        return self.element_perm(
            self.module.ab.add(coords, self.epsilon), tidentity(self.module.group.degree)
        )

    def project(self, x) -> Permutation:
        return Permutation(self._label(x)[1])


def extension_from_cocycle(module: GModule, f: Cochain) -> Extension:
    return Extension(module, f)


# ---------------------------------------------------------------------------
# splitting


@dataclass(frozen=True)
class SplitClassReport:
    is_trivial: bool
    section: dict | None
    trivializer: Cochain | None


def split_class(module: GModule, f: Cochain) -> SplitClassReport:
    """Decide whether f is a coboundary; if so return a homomorphic section.

    The section maps each group element s to the extension label
    (-l(s), s) where dl = f.
    """
    if f.degree != 2 or f.module is not module:
        raise BadInput("split_class needs a degree-2 cochain over the module")
    if not _cobord_raw(f).is_zero():
        raise NotACocycle("the cochain does not satisfy the cocycle identity")
    m1 = coboundary_matrix(module, 1)
    x = solve_mod_lattice(m1, _flatten_cochain(f), _flat_moduli(module, 2))
    if x is None:
        return SplitClassReport(False, None, None)
    l = _unflatten_cochain(module, 1, x)
    if DEBUG_CHECKS and _cobord_raw(l) != f:
        raise InternalInconsistency("the recovered 1-cochain does not cobound f")
    ab = module.ab
    section = {}
    for s in module.group.elements:
        section[s] = (ab.neg(l.value((s,))), s)
    if DEBUG_CHECKS:
        for s in module.group.elements:
            for t in module.group.elements:
                a, u = section[s]
                b, w = section[t]
                prod = (
                    ab.add(ab.add(a, module.act(u, b)), f.value((u, w))),
                    tmul(u, w),
                )
                if prod != section[tmul(s, t)]:
                    raise InternalInconsistency("recovered section is not a homomorphism")
    return SplitClassReport(True, section, l)


def h1_torsor_sections(module: GModule, ext: Extension) -> int:
    """Number of A-conjugacy classes of homomorphic sections of a split
    extension; checked against |H^1(G, A)| computed independently."""
    report = split_class(module, ext.cocycle)
    if not report.is_trivial:
        raise NotSplit("the extension admits no homomorphic section")
    g = module.group
    k = len(g.generators)
    aelems = module.ab.elements()
    if len(aelems) ** k > SECTION_SEARCH_CAP:
        raise TooLarge("section search space exceeds the cap")
    complements = []
    norm_set = ext.normal_part.element_set
    for assign in iproduct(aelems, repeat=k):
        gens = [ext.element_perm(a, gen.img) for a, gen in zip(assign, g.generators)]
        try:
            cand = PermGroup(ext.group.degree, gens, cap=g.order())
            if cand.order() != g.order():
                continue
        except GroupTooLarge:
            continue
        eset = cand.element_set
        if len(eset & norm_set) != 1:
            continue
        complements.append(frozenset(eset))
    unseen = set(complements)
    if len(unseen) != len(complements):
        raise InternalInconsistency("two distinct sections produced the same complement")
    aperms = ext.normal_part.elements
    classes = 0
    while unseen:
        start = next(iter(unseen))
        orbit = set()
        for aimg in aperms:
            ainv = tinv(aimg)
            orbit.add(frozenset(tmul(tmul(ainv, x), aimg) for x in start))
        if not orbit <= unseen:
            raise InternalInconsistency("A-conjugation left the set of complements")
        unseen -= orbit
        classes += 1
    h1 = cohomology(module, 1)
    if classes != h1.order():
        raise InternalInconsistency(
            "section classes (%d) disagree with |H^1| (%d)" % (classes, h1.order())
        )
    return classes


# ---------------------------------------------------------------------------
# Zassenhaus complements


def _zass_abelian(e: PermGroup, a: PermGroup) -> PermGroup:
    """Complement of an abelian normal subgroup of coprime index.

    Pick the lex-least coset representatives h(q), form the 2-cocycle
    f(q1, q2) = h(q1) h(q2) h(q1 q2)^-1 in A, cobound it by averaging
    (F1(q) = sum_t f(q, t), l = m^-1 F1 with m the index), and correct the
    section to sigma(q) = (-l(q)) h(q).
    """
    cos = cosets(e, a)
    reps = [c.rep.img for c in cos]
    where = coset_lookup(cos)
    m = len(reps)
    fab, to_ab = abelianize(a)
    from_ab = {}
    for x in a.elements:
        from_ab[to_ab(x).coords] = x
    if len(from_ab) != a.order():
        raise InternalInconsistency("an abelian group must equal its abelianization")
    mult = [[where[tmul(reps[i], reps[j])] for j in range(m)] for i in range(m)]

    def f(i, j):
        return to_ab(tmul(tmul(reps[i], reps[j]), tinv(reps[mult[i][j]]))).coords

    exp = fab.exponent()
    minv = pow(m % exp, -1, exp) if exp > 1 else 0
    sigmas = []
    for i in range(m):
        f1 = fab.zero()
        for j in range(m):
            f1 = fab.add(f1, f(i, j))
        l = fab.scale(minv, f1)
        sigmas.append(tmul(from_ab[fab.neg(l)], reps[i]))
    k = PermGroup(e.degree, [Permutation(s) for s in sigmas], cap=e.order())
    return k


def zassenhaus_complement(e: PermGroup, a: PermGroup) -> PermGroup:
    """A complement of the normal subgroup a in e when gcd(|a|, |e:a|) = 1.

    Abelian a is handled by explicit cobounding; otherwise the construction
    descends through an elementary abelian characteristic subgroup of a.
    Output is verified: trivial intersection and full product, every call.
    """
    if not is_normal(e, a):
        raise NotNormal("the subgroup is not normal in the ambient group")
    m = e.order() // a.order()
    if math.gcd(a.order(), m) != 1:
        raise NotCoprime(
            "order %d and index %d share a prime factor" % (a.order(), m)
        )
    if a.order() == 1:
        return e
    if m == 1:
        return trivial_subgroup(e)
    if a.is_abelian():
        k = _zass_abelian(e, a)
    else:
        _, b = minimal_normal_elementary(a)
        if not is_normal(e, b):
            raise InternalInconsistency(
                "the elementary layer is characteristic, hence normal in the ambient group"
            )
        qgroup, proj = quotient(e, b)
        abar = PermGroup.from_elements(
            qgroup.degree, sorted({proj.apply_tuple(x) for x in a.elements})
        )
        kbar = zassenhaus_complement(qgroup, abar)
        k1 = proj.preimage(kbar)
        k = zassenhaus_complement(k1, b)
    if k.order() != m:
        raise InternalInconsistency("complement has the wrong order")
    if len(k.element_set & a.element_set) != 1:
        raise InternalInconsistency("complement meets the normal subgroup")
    return k


def complement_conjugacy(
    e: PermGroup, a: PermGroup, k1: PermGroup, k2: PermGroup
) -> Permutation:
    """An element of a conjugating the complement k1 onto k2.

    Requires a or e/a solvable (guaranteed at odd order, checked directly);
    the theorem then makes failure to find a conjugator a bug.
    """
    if not is_normal(e, a):
        raise NotNormal("the subgroup is not normal in the ambient group")
    m = e.order() // a.order()
    if math.gcd(a.order(), m) != 1:
        raise NotCoprime("complement conjugacy needs coprime order and index")
    for k in (k1, k2):
        if k.order() != m or len(k.element_set & a.element_set) != 1:
            raise BadInput("both subgroups must be complements of the normal subgroup")
    a_solvable = derived_series(a)[-1].order() == 1
    if not a_solvable:
        q, _ = quotient(e, a)
        if derived_series(q)[-1].order() != 1:
            raise HypothesisViolated("neither the subgroup nor the quotient is solvable")
    k1set = k1.element_set
    k2set = k2.element_set
    for x in a.elements:
        xi = tinv(x)
        if all(tmul(tmul(xi, t), x) in k2set for t in k1set):
            return Permutation(x)
    raise NoConjugatorFound("conjugate complements admit a conjugator in the normal subgroup")


# ---------------------------------------------------------------------------
# lifting matrix representations modulo p^alpha


def _module_points(modulus: int, n: int) -> list:
    """All of (Z/modulus)^n, zero included, in lexicographic order."""
    return sorted(iproduct(range(modulus), repeat=n))


def _matrix_point_perm(mat, modulus: int, n: int, pts, pidx) -> list:
    img = []
    for pt in pts:
        img.append(pidx[tuple(sum(mat[i][j] * pt[j] for j in range(n)) % modulus for i in range(n))])
    return img


def matrix_of_point_perm(perm: Permutation, modulus: int, n: int) -> tuple:
    """Recover the matrix from its action on the full module (Z/modulus)^n,
    points sorted lexicographically: column j is the image of e_j."""
    pts = _module_points(modulus, n)
    pidx = {pt: i for i, pt in enumerate(pts)}
    cols = []
    for j in range(n):
        ej = tuple(1 if i == j else 0 for i in range(n))
        cols.append(pts[perm(pidx[ej])])
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _lift_step(g: PermGroup, psi_prev: list, p: int, n: int, a: int) -> list:
    pa = p ** a
    pts = _module_points(pa, n)
    pidx = {pt: i for i, pt in enumerate(pts)}
    dg = g.degree
    gens = []
    for gen, mprev in zip(g.generators, psi_prev):
        img = list(gen.img) + [
            dg + i for i in _matrix_point_perm(mprev, pa, n, pts, pidx)
        ]
        gens.append(Permutation(tuple(img)))
    step = p ** (a - 1)
    idblock = list(range(dg))
    for j in range(n):
        for kk in range(n):
            mat = [
                [
                    (1 if i == c else 0) + (step if (i, c) == (j, kk) else 0)
                    for c in range(n)
                ]
                for i in range(n)
            ]
            img = idblock + [dg + i for i in _matrix_point_perm(mat, pa, n, pts, pidx)]
            gens.append(Permutation(tuple(img)))
    e = PermGroup(dg + pa ** n, gens)
    expected = g.order() * p ** (n * n)
    if e.order() != expected:
        raise InternalInconsistency(
            "pull-back extension has order %d, expected %d" % (e.order(), expected)
        )
    idpref = tidentity(dg)
    kernel_elems = sorted(x for x in e.elements if x[:dg] == idpref)
    if len(kernel_elems) != p ** (n * n):
        raise InternalInconsistency("congruence kernel has the wrong order")
    asub = PermGroup.from_elements(e.degree, kernel_elems)
    k = zassenhaus_complement(e, asub)
    newpsi = []
    for gen, mprev in zip(g.generators, psi_prev):
        cands = [x for x in k.elements if x[:dg] == gen.img]
        if len(cands) != 1:
            raise InternalInconsistency("the complement does not project bijectively")
        x = cands[0]
        cols = []
        for j in range(n):
            ej = tuple(1 if i == j else 0 for i in range(n))
            cols.append(pts[x[dg + pidx[ej]] - dg])
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        prevstep = p ** (a - 1)
        for i in range(n):
            for j in range(n):
                if mat[i][j] % prevstep != mprev[i][j] % prevstep:
                    raise InternalInconsistency("lift does not reduce to the previous level")
        newpsi.append(mat)
    return newpsi


def lift_homomorphism_mod_p(phi: GroupHom, realization, alpha: int):
    """Lift a representation G -> GL_n(Z/p) to GL_n(Z/p^alpha).

    ``realization`` is the matrix-group realization backing phi's codomain
    (prime field, matrix kind).  Returns a GroupHom onto a permutation
    realization of the lifted image acting on the full module (Z/p^alpha)^n
    with lexicographically sorted points; recover matrices per generator
    with matrix_of_point_perm.
    """
    if not isinstance(alpha, int) or alpha < 1:
        raise BadInput("alpha must be a positive integer")
    field = realization.field
    if field.f != 1:
        raise BadInput("lifting starts from a prime field")
    p = field.p
    n = realization.n
    if realization.group != phi.codomain:
        raise BadInput("the realization does not match the codomain of phi")
    if n > 2 or p ** alpha > 27:
        raise TooLarge("lifting cap: n <= 2 and p^alpha <= 27")
    g = phi.domain
    if g.order() % p == 0:
        raise NotCoprime("the group order must be prime to p")
    psi = []
    for gen in g.generators:
        mat = realization.matrix_of(phi(gen))
        psi.append(tuple(tuple(int(x) % p for x in row) for row in mat))
    if alpha == 1:
        return phi
    for a in range(2, alpha + 1):
        psi = _lift_step(g, psi, p, n, a)
    pa = p ** alpha
    pts = _module_points(pa, n)
    pidx = {pt: i for i, pt in enumerate(pts)}
    images = [
        Permutation(tuple(_matrix_point_perm(m, pa, n, pts, pidx))) for m in psi
    ]
    codomain = PermGroup(pa ** n, images)
    try:
        return GroupHom(g, codomain, images)
    except Exception as exc:  # a non-homomorphism here is a lifting bug
        raise InternalInconsistency("lifted matrices do not form a homomorphism") from exc
