"""Weil q-polynomials: validation, predicates, point counts.

A Weil q-polynomial here is a monic integer polynomial all of whose
complex roots have modulus sqrt(q).  This is the polynomial-level notion:
the enumeration deliberately includes items like x^2 - 2 over F_2 that are
not characteristic polynomials of any abelian variety, because such
polynomials occur as factors and the irreducibility test needs them.

Validation splits off the real-root factors (x^2 - q, or x -+ sqrt(q) when
q is a square), checks the functional equation on the remainder, and
certifies via Sturm that the real companion polynomial h with
r(x) = x^(g') h(x + q/x) has all its roots in [-2 sqrt(q), 2 sqrt(q)].
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import is_prime, is_prime_power, is_square
from .errors import DimensionCapExceeded, NotPalindromic, NotWeil
from .intpoly import IntPolynomial, poly_gcd, squarefree_part
from .quadratic import QuadraticValue
from .sturm import is_real_rooted_in_open

IRREDUCIBILITY_G_CAP = 6


@dataclass(frozen=True)
class WeilPolynomial:
    poly: IntPolynomial
    q: int
    p: int
    a: int
    g: int
    p_rank: int
    # multiplicities of (x^2 - q), (x - sqrt q), (x + sqrt q) split off
    real_root_multiplicities: tuple[int, int, int]

    @property
    def coeffs_leading_first(self) -> tuple[int, ...]:
        return self.poly.leading_first()

    @property
    def has_real_root(self) -> bool:
        return any(self.real_root_multiplicities)

    @property
    def is_palindromic(self) -> bool:
        k, k1, k2 = self.real_root_multiplicities
        return k == 0 and k1 == k2

    def point_count(self) -> int:
        return self.poly(1)

    def __str__(self):
        return f"WeilPolynomial(q={self.q}, {self.poly})"


@dataclass(frozen=True)
class IsogenyClassPredicates:
    square_free: bool
    ordinary: bool
    almost_ordinary: bool
    has_real_root: bool
    cs: bool
    irreducible: bool | None  # None = unknown (dimension cap exceeded)


def endpoints(q: int) -> tuple[QuadraticValue, QuadraticValue]:
    """-2*sqrt(q), +2*sqrt(q) as exact values."""
    if is_square(q):
        s = isqrt(q)
        return QuadraticValue(-2 * s), QuadraticValue(2 * s)
    return QuadraticValue.sqrt(q, -2), QuadraticValue.sqrt(q, 2)


def split_real_factors(f: IntPolynomial, q: int) -> tuple[IntPolynomial, tuple[int, int, int]]:
    """Divide out maximal powers of the real-root factors."""
    k = k1 = k2 = 0
    if is_square(q):
        s = isqrt(q)
        for sign in (1, -1):
            lin = IntPolynomial((-sign * s, 1))
            while f.degree >= 1:
                quo, rem = f.divmod_exact_monic(lin)
                if not rem.is_zero:
                    break
                f = quo
                if sign == 1:
                    k1 += 1
                else:
                    k2 += 1
    else:
        quad = IntPolynomial((-q, 0, 1))
        while f.degree >= 2:
            quo, rem = f.divmod_exact_monic(quad)
            if not rem.is_zero:
                break
            f = quo
            k += 1
    return f, (k, k1, k2)


def satisfies_functional_equation(r: IntPolynomial, q: int) -> bool:
    """c_j = q^(g'-j) * c_(2g'-j) for the degree-2g' polynomial r."""
    d = r.degree
    if d % 2 != 0:
        return False
    gp = d // 2
    return all(r[j] == q ** (gp - j) * r[d - j] for j in range(gp))


def real_weil_transform(palindromic: IntPolynomial, q: int) -> IntPolynomial:
    """Monic integer h of degree g' with input(x) = x^(g') * h(x + q/x).

    Computed by peeling top coefficients against x^(g'-j) * (x^2+q)^j.
    """
    d = palindromic.degree
    if d % 2 != 0 or not palindromic.is_monic:
        raise NotPalindromic("degree must be even and the polynomial monic")
    gp = d // 2
    rem = list(palindromic.coeffs)
    h = [0] * (gp + 1)
    base = IntPolynomial((q, 0, 1))
    pow_j = base**gp
    for j in range(gp, -1, -1):
        b = rem[gp + j]
        h[j] = b
        if b:
            for t, c in enumerate(pow_j.coeffs):
                rem[(gp - j) + t] -= b * c
        if j:
            pow_j = pow_j.exact_div(base)
    if any(rem):
        raise NotPalindromic("functional equation fails")
    return IntPolynomial(h)


def newton_polygon_p_rank(f: IntPolynomial, p: int) -> int:
    """Horizontal length of the slope-0 part of the p-adic Newton polygon.

    The polygon is the lower convex hull of {(i, v_p(c_i)) : c_i != 0};
    with integer coefficients all valuations are >= 0 and the rightmost
    point is (deg f, 0), so the slope-0 part is the final segment.
    """
    pts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        v = 0
        while c % p == 0:
            c //= p
            v += 1
        pts.append((i, v))
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # Drop x2 if it lies on or above the segment x1 -> pt.
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    (x1, y1), (x2, y2) = hull[-2] if len(hull) >= 2 else hull[-1], hull[-1]
    if len(hull) >= 2 and y1 == y2:
        return x2 - x1
    return 0


def validate(f: IntPolynomial, q: int) -> WeilPolynomial:
    """Certify f as a Weil q-polynomial or raise NotWeil with a reason."""
    pp = is_prime_power(q)
    if pp is None:
        raise NotWeil("q-not-prime-power")
    p, a = pp
    if f.is_zero or f.degree < 2:
        raise NotWeil("degree-too-small")
    if f.degree % 2 != 0:
        raise NotWeil("odd-degree")
    if not f.is_monic:
        raise NotWeil("not-monic")
    g = f.degree // 2
    r, mults = split_real_factors(f, q)
    if r.degree % 2 != 0:
        raise NotWeil("real-root-parity")
    if not satisfies_functional_equation(r, q):
        raise NotWeil("functional-equation")
    if r.degree > 0:
        h = real_weil_transform(r, q)
        lo, hi = endpoints(q)
        if not is_real_rooted_in_open(h, lo, hi):
            raise NotWeil("roots-off-circle")
    return WeilPolynomial(
        poly=f,
        q=q,
        p=p,
        a=a,
        g=g,
        p_rank=newton_polygon_p_rank(f, p),
        real_root_multiplicities=mults,
    )


def from_enumerated(coeffs_leading_first, q: int) -> WeilPolynomial:
    """Cheap constructor for polynomials produced by the enumerator.

    Skips the Sturm certificate (the enumerator guarantees root moduli);
    still recomputes the split and the p-rank.
    """
    f = IntPolynomial.from_leading_first((1,) + tuple(coeffs_leading_first))
    p, a = is_prime_power(q)
    g = f.degree // 2
    _, mults = split_real_factors(f, q)
    return WeilPolynomial(
        poly=f,
        q=q,
        p=p,
        a=a,
        g=g,
        p_rank=newton_polygon_p_rank(f, p),
        real_root_multiplicities=mults,
    )


def point_count(w: WeilPolynomial) -> int:
    """f(1): the isogeny-invariant point count.

    Positive for characteristic polynomials of abelian varieties; can be
    negative for polynomial-level classes with an odd power of (x^2 - q),
    e.g. x^2 - 2 over F_2 gives -1.
    """
    return w.point_count()


def is_square_free_class(w: WeilPolynomial) -> bool:
    return squarefree_part(w.poly).degree == w.poly.degree


def is_irreducible(w: WeilPolynomial, cap: int = IRREDUCIBILITY_G_CAP) -> bool:
    """Irreducibility over Q by trial division by smaller Weil factors.

    Any monic integer factor of a Weil polynomial is itself a polynomial
    with all roots of modulus sqrt(q): even-degree factors appear in the
    enumeration of dimensions < g, odd-degree ones only via x -+ sqrt(q)
    when q is a square.
    """
    if w.g > cap:
        raise DimensionCapExceeded(f"g={w.g} exceeds cap {cap}")
    from .enumeration import enumerate_coefficient_rows

    f = w.poly
    if is_square(w.q):
        s = isqrt(w.q)
        for sign in (1, -1):
            _, rem = f.divmod_exact_monic(IntPolynomial((-sign * s, 1)))
            if rem.is_zero:
                return False
    for d in range(1, w.g):
        for row in enumerate_coefficient_rows(w.q, d):
            cand = IntPolynomial.from_leading_first((1,) + row)
            _, rem = f.divmod_exact_monic(cand)
            if rem.is_zero:
                return False
    return True


def predicates(w: WeilPolynomial, irreducibility_cap: int = IRREDUCIBILITY_G_CAP) -> IsogenyClassPredicates:
    sf = is_square_free_class(w)
    try:
        irr = is_irreducible(w, cap=irreducibility_cap)
    except DimensionCapExceeded:
        irr = None
    return IsogenyClassPredicates(
        square_free=sf,
        ordinary=w.p_rank == w.g,
        almost_ordinary=w.p_rank == w.g - 1,
        has_real_root=w.has_real_root,
        cs=is_prime(w.q) and not w.has_real_root,
        irreducible=irr,
    )
