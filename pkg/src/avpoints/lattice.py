"""Exact integer lattice algorithms: HNF, SNF, quotients of lattices.

Lattices are full-rank sublattices of Z^n scaled by a single positive
denominator: L = (1/den) * rowspan(basis).  The basis is kept in the
canonical row-style Hermite normal form (upper triangular, positive
pivots, entries above a pivot reduced into [0, pivot)), which makes
lattice equality a structural comparison.

Everything is arbitrary-precision; intermediate entry growth is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod

from .arith import factorint
from .errors import IndexTooLarge, NotFullRank, NotSublattice

BRUTE_FORCE_INDEX_CAP = 10**5


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return x, y, g


def hnf_rows(rows, n: int) -> list[list[int]]:
    """Canonical HNF basis of the row span inside Z^n.

    Accepts any number of rows; raises NotFullRank when the span has rank
    below n.
    """
    pivot_of_col: list[int | None] = [None] * n
    basis: list[list[int]] = []
    for row in rows:
        vec = list(row)
        if len(vec) != n:
            raise ValueError("row length mismatch")
        for j in range(n):
            if vec[j] == 0:
                continue
            p = pivot_of_col[j]
            if p is None:
                basis.append(vec)
                pivot_of_col[j] = len(basis) - 1
                break
            piv = basis[p]
            a, b = piv[j], vec[j]
            if b % a == 0:
                q = b // a
                for k in range(j, n):
                    vec[k] -= q * piv[k]
            else:
                x, y, g = _xgcd(a, b)
                ag, bg = a // g, b // g
                for k in range(j, n):
                    pk, vk = piv[k], vec[k]
                    piv[k] = x * pk + y * vk
                    vec[k] = -bg * pk + ag * vk
    if any(p is None for p in pivot_of_col):
        raise NotFullRank("row span has deficient rank")
    ordered = [basis[pivot_of_col[j]] for j in range(n)]
    # Positive pivots, then reduce entries above each pivot.
    for i in range(n):
        if ordered[i][i] < 0:
            ordered[i] = [-c for c in ordered[i]]
    for i in range(n):
        piv = ordered[i][i]
        for j in range(i):
            q = ordered[j][i] // piv
            if q:
                row_j, row_i = ordered[j], ordered[i]
                for k in range(i, n):
                    row_j[k] -= q * row_i[k]
    return ordered


@dataclass(frozen=True)
class IntegerLattice:
    """(1/denominator) * rowspan(basis) with basis in canonical HNF."""

    ambient_rank: int
    basis: tuple[tuple[int, ...], ...]
    denominator: int = 1

    @classmethod
    def from_rows(cls, rows, denominator: int = 1) -> "IntegerLattice":
        rows = [list(r) for r in rows]
        if not rows:
            raise NotFullRank("no rows")
        n = len(rows[0])
        if denominator <= 0:
            raise ValueError("denominator must be positive")
        h = hnf_rows(rows, n)
        g = denominator
        for row in h:
            for c in row:
                g = gcd(g, c)
        if g > 1:
            h = [[c // g for c in row] for row in h]
            denominator //= g
        return cls(n, tuple(tuple(r) for r in h), denominator)

    @classmethod
    def standard(cls, n: int) -> "IntegerLattice":
        return cls(n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def scaled_basis(self, factor: int) -> list[list[int]]:
        return [[c * factor for c in row] for row in self.basis]

    def det(self):
        """Determinant of the lattice as a Fraction-free pair (num, den**n)."""
        num = prod(self.basis[i][i] for i in range(self.ambient_rank))
        return num, self.denominator**self.ambient_rank

    def reduce_int_vector(self, vec: list[int]) -> list[int]:
        """Canonical representative of vec modulo rowspan(basis) (den ignored)."""
        v = list(vec)
        n = self.ambient_rank
        for i in range(n):
            piv = self.basis[i][i]
            q = v[i] // piv
            if q:
                row = self.basis[i]
                for k in range(i, n):
                    v[k] -= q * row[k]
        return v

    def contains_int_vector(self, vec) -> bool:
        """Membership of an integer vector in rowspan(basis) (den ignored)."""
        v = list(vec)
        n = self.ambient_rank
        for i in range(n):
            if v[i] % self.basis[i][i] != 0:
                return False
            q = v[i] // self.basis[i][i]
            if q:
                row = self.basis[i]
                for k in range(i, n):
                    v[k] -= q * row[k]
        return not any(v)

    def contains(self, other: "IntegerLattice") -> bool:
        """True when other is a sublattice of self."""
        if self.ambient_rank != other.ambient_rank:
            return False
        m = lcm(self.denominator, other.denominator)
        mine = IntegerLattice.from_rows(self.scaled_basis(m // self.denominator))
        theirs = other.scaled_basis(m // other.denominator)
        return all(mine.contains_int_vector(r) for r in theirs)

    def coordinates_of(self, other: "IntegerLattice") -> list[list[int]]:
        """Integer coordinate matrix X with X * basis(self) = basis(other).

        Requires other to be a sublattice of self (raises NotSublattice).
        """
        if self.ambient_rank != other.ambient_rank:
            raise NotSublattice("ambient ranks differ")
        n = self.ambient_rank
        m = lcm(self.denominator, other.denominator)
        sup = [[c * (m // self.denominator) for c in row] for row in self.basis]
        sub = [[c * (m // other.denominator) for c in row] for row in other.basis]
        out = []
        for s in sub:
            v = list(s)
            x = [0] * n
            for i in range(n):
                if v[i] % sup[i][i] != 0:
                    raise NotSublattice("containment fails")
                x[i] = v[i] // sup[i][i]
                if x[i]:
                    for k in range(i, n):
                        v[k] -= x[i] * sup[i][k]
            if any(v):
                raise NotSublattice("containment fails")
            out.append(x)
        return out

    def index_in(self, super_lattice: "IntegerLattice") -> int:
        x = super_lattice.coordinates_of(self)
        n = self.ambient_rank
        d = _det_int(x, n)
        if d == 0:
            raise NotFullRank("sublattice not full rank")
        return abs(d)


def _det_int(matrix, n: int) -> int:
    """Exact determinant by fraction-free Gaussian elimination (Bareiss)."""
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hnf(rows) -> IntegerLattice:
    """Canonical lattice spanned by integer rows (denominator 1)."""
    return IntegerLattice.from_rows(rows)


def snf_invariants(matrix) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Nonnegative, divisibility chain d1 | d2 | ..., zeros at the tail when
    the rank is deficient.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    k = min(rows, cols)
    invs = []
    top = 0
    while top < k:
        # Find a pivot: smallest nonzero absolute value in the working block.
        piv = None
        for i in range(top, rows):
            for j in range(top, cols):
                if m[i][j] and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[top], row[j0] = row[j0], row[top]
        while True:
            a = m[top][top]
            done = True
            for i in range(top + 1, rows):
                if m[i][top]:
                    q = m[i][top] // a
                    for j in range(top, cols):
                        m[i][j] -= q * m[top][j]
                    if m[i][top]:
                        m[top], m[i] = m[i], m[top]
                        done = False
                        break
            if not done:
                continue
            for j in range(top + 1, cols):
                if m[top][j]:
                    q = m[top][j] // a
                    for i in range(top, rows):
                        m[i][j] -= q * m[i][top]
                    if m[top][j]:
                        for i in range(rows):
                            m[i][top], m[i][j] = m[i][j], m[i][top]
                        done = False
                        break
            if done:
                break
        # Corner must divide every remaining entry.
        a = m[top][top]
        offender = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % a != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, cols):
                m[top][j] += m[offender][j]
            continue
        invs.append(abs(a))
        top += 1
    while len(invs) < k:
        invs.append(0)
    return invs


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant factors d1 | d2 | ... | dk, each >= 2; () is trivial."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        fs = self.invariant_factors
        for d in fs:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
        for a, b in zip(fs, fs[1:]):
            if b % a != 0:
                raise ValueError("divisibility chain violated")

    @classmethod
    def trivial(cls) -> "FiniteAbelianGroup":
        return cls(())

    @classmethod
    def from_cyclic_factors(cls, factors) -> "FiniteAbelianGroup":
        """Normalize an arbitrary list of cyclic orders via CRT."""
        by_prime: dict[int, list[int]] = {}
        for f in factors:
            if f < 1:
                raise ValueError("cyclic factors must be >= 1")
            if f == 1:
                continue
            for p, e in factorint(f).items():
                by_prime.setdefault(p, []).append(e)
        if not by_prime:
            return cls(())
        width = max(len(v) for v in by_prime.values())
        cols = []
        for p, exps in by_prime.items():
            exps = sorted(exps)
            padded = [0] * (width - len(exps)) + exps
            cols.append([p**e for e in padded])
        invs = tuple(prod(col[i] for col in cols) for i in range(width))
        return cls(tuple(d for d in invs if d > 1))

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def primary_decomposition(self) -> tuple[int, ...]:
        """Sorted multiset of prime-power cyclic orders."""
        parts = []
        for d in self.invariant_factors:
            for p, e in factorint(d).items():
                parts.append(p**e)
        return tuple(sorted(parts))

    def direct_product(self, other: "FiniteAbelianGroup") -> "FiniteAbelianGroup":
        return FiniteAbelianGroup.from_cyclic_factors(
            self.invariant_factors + other.invariant_factors
        )

    def __str__(self):
        if not self.invariant_factors:
            return "trivial"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


def quotient_group(super_lattice: IntegerLattice, sub_lattice: IntegerLattice) -> FiniteAbelianGroup:
    """Invariant factors of super/sub via SNF of the coordinate matrix."""
    x = super_lattice.coordinates_of(sub_lattice)
    invs = snf_invariants(x)
    if any(d == 0 for d in invs):
        raise NotFullRank("sublattice not full rank")
    return FiniteAbelianGroup(tuple(d for d in invs if d > 1))


def lattice_index(super_lattice: IntegerLattice, sub_lattice: IntegerLattice) -> int:
    return sub_lattice.index_in(super_lattice)


def brute_force_group(
    super_lattice: IntegerLattice,
    sub_lattice: IntegerLattice,
    cap: int = BRUTE_FORCE_INDEX_CAP,
) -> FiniteAbelianGroup:
    """Group structure of super/sub without SNF.

    Enumerates coset representatives of the quotient and reconstructs the
    invariant factors from the census of element orders; serves as an
    independent oracle for quotient_group.
    """
    x = super_lattice.coordinates_of(sub_lattice)
    n = super_lattice.ambient_rank
    rel = IntegerLattice.from_rows(x)
    order = abs(prod(rel.basis[i][i] for i in range(n)))
    if order > cap:
        raise IndexTooLarge(f"index {order} exceeds cap {cap}")
    if order == 1:
        return FiniteAbelianGroup.trivial()

    divisors = sorted(_divisors(order))
    reps = _coset_reps(rel)
    order_census: dict[int, int] = {}
    for rep in reps:
        for d in divisors:
            if rel.contains_int_vector([d * c for c in rep]):
                order_census[d] = order_census.get(d, 0) + 1
                break
    assert sum(order_census.values()) == order

    factors: list[int] = []
    for p, e in factorint(order).items():
        # c[k] = number of elements whose order divides p**k.
        c = [
            sum(cnt for d, cnt in order_census.items() if (p**k) % d == 0)
            for k in range(e + 1)
        ]
        exps_at_least = []
        for k in range(1, e + 1):
            ratio = c[k] // c[k - 1]
            mult = 0
            while ratio > 1:
                ratio //= p
                mult += 1
            exps_at_least.append(mult)
        # exps_at_least[k-1] = number of cyclic p-factors with exponent >= k.
        for k, m in enumerate(exps_at_least, start=1):
            next_m = exps_at_least[k] if k < len(exps_at_least) else 0
            factors.extend([p**k] * (m - next_m))
    return FiniteAbelianGroup.from_cyclic_factors(factors)


def _divisors(n: int) -> list[int]:
    ds = [1]
    for p, e in factorint(n).items():
        ds = [d * p**k for d in ds for k in range(e + 1)]
    return ds


def _coset_reps(rel: IntegerLattice):
    """Canonical representatives of Z^n modulo rowspan(rel.basis)."""
    n = rel.ambient_rank
    pivots = [rel.basis[i][i] for i in range(n)]
    rep = [0] * n

    def rec(i):
        if i == n:
            yield rel.reduce_int_vector(rep)
            return
        for v in range(pivots[i]):
            rep[i] = v
            yield from rec(i + 1)
        rep[i] = 0

    yield from rec(0)
