"""Finite fields F_q (q <= 49) and permutation realizations of the classical
groups over them: GL(n,q), SL(n,q), PSL(2,q), the upper unitriangular group
B1(n,q), and the affine group AGL(1,q).

Field elements are integers 0..q-1 encoding coefficient vectors base p
(least significant coefficient first), so the prime subfield is 0..p-1 and
the generator of the polynomial basis is the integer p.  The modulus is the
first monic irreducible polynomial in lexicographic order on the coefficient
tuple (c_{f-1}, ..., c_0).

Each realization acts on labeled points (nonzero column vectors for the
vector kinds, the projective line for PSL, field elements for AGL) and can
convert between permutations and matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    InternalInconsistency,
    NotAPrimePower,
    TooLarge,
    UnsupportedSpec,
)
from .perm_core import PermGroup, Permutation

FIELD_SIZE_CAP = 49


def factor_prime_power(q: int) -> tuple[int, int]:
    """q = p^f with p prime, else NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower("%d is not a prime power" % q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if any(p % d == 0 for d in range(2, p)):
        raise NotAPrimePower("%d is not a prime power" % q)
    f = 0
    m = q
    while m % p == 0:
        m //= p
        f += 1
    if m != 1:
        raise NotAPrimePower("%d is not a prime power" % q)
    return p, f


def _poly_eval(p: int, monic_tail: tuple, a: int) -> int:
    """Evaluate x^f + sum c_i x^i at a over Z/p (tail is (c_0..c_{f-1}))."""
    f = len(monic_tail)
    v = pow(a, f, p)
    for i, c in enumerate(monic_tail):
        v = (v + c * pow(a, i, p)) % p
    return v


def _poly_rem(p: int, num: list, den: list) -> list:
    """Remainder of num / den over Z/p, coefficients little-endian, den monic."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if den[-1] != 1 else 1
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        coef = num[-1] * inv_lead % p
        shift = len(num) - 1 - dd
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(p: int, tail: tuple) -> bool:
    f = len(tail)
    if tail[0] == 0:
        return False  # divisible by x
    if any(_poly_eval(p, tail, a) == 0 for a in range(p)):
        return False
    if f <= 3:
        return True
    # degree 4: also rule out a factorization into two irreducible quadratics
    full = list(tail) + [1]
    for c1 in range(p):
        for c0 in range(p):
            quad_tail = (c0, c1)
            if any(_poly_eval(p, quad_tail, a) == 0 for a in range(p)):
                continue
            if not _poly_rem(p, full, [c0, c1, 1]):
                return False
    return True


class FiniteField:
    """The field with q = p^f elements, q <= 49."""

    def __init__(self, q: int):
        if q > FIELD_SIZE_CAP:
            raise TooLarge("field size %d exceeds cap %d" % (q, FIELD_SIZE_CAP))
        p, f = factor_prime_power(q)
        self.q, self.p, self.f = q, p, f
        self.modulus = self._find_modulus() if f > 1 else ()
        self._mul = [[self._mul_slow(a, b) for b in range(q)] for a in range(q)]
        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = next(b for b in range(1, q) if self._mul[a][b] == 1)
        self._primitive = None

    def _find_modulus(self) -> tuple:
        p, f = self.p, self.f
        # lexicographic on (c_{f-1}, ..., c_0): digit k of the counter is c_k
        for code in range(p ** f):
            digits = []
            m = code
            for _ in range(f):
                digits.append(m % p)
                m //= p
            tail = tuple(digits)  # (c_0, ..., c_{f-1})
            if _is_irreducible(p, tail):
                return tail
        raise InternalInconsistency("no irreducible modulus found")

    def _coeffs(self, a: int) -> list:
        out = []
        for _ in range(self.f):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        return self._encode((x + y) % self.p
                            for x, y in zip(self._coeffs(a), self._coeffs(b)))

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        return self._encode((-x) % self.p for x in self._coeffs(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_slow(self, a: int, b: int) -> int:
        if self.f == 1:
            return a * b % self.p
        ca, cb = self._coeffs(a), self._coeffs(b)
        prod = [0] * (2 * self.f - 1)
        for i, x in enumerate(ca):
            for j, y in enumerate(cb):
                prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_rem(self.p, prod, list(self.modulus) + [1])
        rem += [0] * (self.f - len(rem))
        return self._encode(rem)

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("field inverse of zero")
        return self._inv[a]

    def primitive_element(self) -> int:
        if self._primitive is None:
            if self.q == 2:
                self._primitive = 1
            else:
                for a in range(2, self.q):
                    x, k = a, 1
                    while x != 1:
                        x = self.mul(x, a)
                        k += 1
                    if k == self.q - 1:
                        self._primitive = a
                        break
        return self._primitive

    @property
    def elements(self) -> range:
        return range(self.q)


# ---------------------------------------------------------------------------
# matrices over a FiniteField: tuples of row tuples of field ints


def mat_identity(f: FiniteField, n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(f: FiniteField, a: tuple, b: tuple) -> tuple:
    n = len(a)
    m = len(b[0])
    return tuple(
        tuple(_dot(f, a[i], tuple(b[k][j] for k in range(len(b)))) for j in range(m))
        for i in range(n))


def _dot(f: FiniteField, u, v) -> int:
    s = 0
    for x, y in zip(u, v):
        s = f.add(s, f.mul(x, y))
    return s


def mat_vec(f: FiniteField, a: tuple, v: tuple) -> tuple:
    return tuple(_dot(f, row, v) for row in a)


def mat_det(f: FiniteField, a: tuple) -> int:
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = f.neg(det)
        det = f.mul(det, m[col][col])
        inv = f.inv(m[col][col])
        for r in range(col + 1, n):
            factor = f.mul(m[r][col], inv)
            for c in range(col, n):
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]))
    return det


# ---------------------------------------------------------------------------

KINDS = ("GL", "SL", "PSL", "B1", "AGL")


def order_formula(kind: str, n: int, q: int) -> int:
    """Group order by the standard counting formulas."""
    p, f = factor_prime_power(q)
    if kind == "GL":
        return q ** (n * (n - 1) // 2) * math.prod(q ** i - 1 for i in range(1, n + 1))
    if kind == "SL":
        return order_formula("GL", n, q) // (q - 1)
    if kind == "PSL":
        if n != 2:
            raise UnsupportedSpec("PSL is only realized for n = 2")
        return order_formula("SL", 2, q) // math.gcd(2, q - 1)
    if kind == "B1":
        return q ** (n * (n - 1) // 2)
    if kind == "AGL":
        if n != 1:
            raise UnsupportedSpec("AGL is only realized for n = 1")
        return q * (q - 1)
    raise UnsupportedSpec("unknown kind %r" % kind)


@dataclass
class Realization:
    """A classical group realized as permutations of labeled points."""

    kind: str
    n: int
    q: int
    field: FiniteField
    group: PermGroup
    points: list
    _index: dict = field(repr=False, default_factory=dict)

    def point_index(self, label) -> int:
        return self._index[label]

    def perm_of(self, mat) -> Permutation:
        """Permutation induced by a matrix (or (a, b) pair for AGL)."""
        f = self.field
        if self.kind == "AGL":
            a, b = mat
            img = [self._index[f.add(f.mul(a, x), b)] for x in self.points]
        elif self.kind == "PSL":
            img = [self._index[_psl_apply(f, mat, pt)] for pt in self.points]
        else:
            img = [self._index[mat_vec(f, mat, v)] for v in self.points]
        return Permutation(img)

    def matrix_of(self, perm: Permutation):
        """Recover the matrix (or AGL pair) from a permutation of the points."""
        f = self.field
        if self.kind == "AGL":
            b = self.points[perm(self._index[0])]
            a = f.sub(self.points[perm(self._index[1])], b)
            return (a, b)
        if self.kind == "PSL":
            raise UnsupportedSpec("PSL permutations determine matrices only "
                                  "up to sign")
        cols = []
        for j in range(self.n):
            e = tuple(1 if i == j else 0 for i in range(self.n))
            cols.append(self.points[perm(self._index[e])])
        return tuple(tuple(cols[j][i] for j in range(self.n))
                     for i in range(self.n))


def _psl_apply(f: FiniteField, mat, pt) -> tuple:
    x, y = pt
    u = f.add(f.mul(mat[0][0], x), f.mul(mat[0][1], y))
    v = f.add(f.mul(mat[1][0], x), f.mul(mat[1][1], y))
    if v != 0:
        return (f.mul(u, f.inv(v)), 1)
    return (1, 0)


def _transvection(f: FiniteField, n: int, i: int, j: int, lam: int) -> tuple:
    m = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    m[i][j] = lam
    return tuple(tuple(row) for row in m)


def realize(kind: str, n: int, q: int) -> Realization:
    """Permutation realization; the enumerated order must match the formula."""
    if kind not in KINDS:
        raise UnsupportedSpec("unknown kind %r" % kind)
    if kind in ("GL", "SL", "B1") and not 1 <= n <= 4:
        raise UnsupportedSpec("n = %d out of range for %s" % (n, kind))
    f = FiniteField(q)
    basis = [f.p ** k for k in range(f.f)] if f.f > 1 else [1]

    if kind == "AGL":
        if n != 1:
            raise UnsupportedSpec("AGL is only realized for n = 1")
        points = list(range(q))
        index = {x: i for i, x in enumerate(points)}
        real = Realization(kind, n, q, f, None, points, index)
        mats = [(1, 1), (f.primitive_element(), 0)]
        gens = [real.perm_of(m) for m in mats]
        real.group = PermGroup(len(points), gens)
    elif kind == "PSL":
        if n != 2:
            raise UnsupportedSpec("PSL is only realized for n = 2")
        points = [(x, 1) for x in range(q)] + [(1, 0)]
        index = {pt: i for i, pt in enumerate(points)}
        real = Realization(kind, n, q, f, None, points, index)
        mats = [_transvection(f, 2, 0, 1, lam) for lam in basis]
        mats += [_transvection(f, 2, 1, 0, lam) for lam in basis]
        gens = [real.perm_of(m) for m in mats]
        real.group = PermGroup(len(points), gens)
    else:
        points = sorted(v for v in _all_vectors(q, n) if any(v))
        index = {v: i for i, v in enumerate(points)}
        real = Realization(kind, n, q, f, None, points, index)
        mats = []
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                if kind == "B1" and i > j:
                    continue
                mats += [_transvection(f, n, i, j, lam) for lam in basis]
        if kind == "GL" and q > 2:
            diag = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
            diag[0][0] = f.primitive_element()
            mats.append(tuple(tuple(row) for row in diag))
        gens = [real.perm_of(m) for m in mats]
        real.group = PermGroup(len(points), gens)

    expected = order_formula(kind, n, q)
    if real.group.order() != expected:
        raise InternalInconsistency(
            "%s(%d,%d): enumerated order %d != formula %d"
            % (kind, n, q, real.group.order(), expected))
    return real


def _all_vectors(q: int, n: int):
    if n == 0:
        yield ()
        return
    for rest in _all_vectors(q, n - 1):
        for x in range(q):
            yield (x,) + rest
