"""Exact real-root counting and isolation via Sturm sequences.

Interval endpoints may be rationals or quadratic irrationals (a + b*sqrt(d)
as QuadraticValue), so the Weil-validity interval [-2*sqrt(q), 2*sqrt(q)]
is handled exactly.  A Budan-Fourier counter doubles as an independent
oracle for totally real polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .intpoly import IntPolynomial, squarefree_part
from .quadratic import QuadraticValue


def _signed_rem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Integer multiple (positive factor) of the remainder of a by b."""
    d = b.leading_coefficient
    d2 = d * d
    r = list(a.coeffs)
    db = b.degree
    while True:
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lead = r[-1]
        r = [c * d2 for c in r]
        factor = lead * d
        shift = len(r) - 1 - db
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= factor * bc
        r.pop()
    return IntPolynomial(r).divide_content()


def sturm_chain(p: IntPolynomial) -> list[IntPolynomial]:
    chain = [p, p.derivative()]
    while chain[-1].degree > 0:
        r = _signed_rem(chain[-2], chain[-1])
        if r.is_zero:
            break
        chain.append(-r)
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign_int_pair(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d) for integers, d > 0 non-square."""
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if a > 0 and b > 0:
        return 1
    if a < 0 and b < 0:
        return -1
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    bigger = lhs > rhs
    return (1 if bigger else -1) if a > 0 else (-1 if bigger else 1)


def _sign_at(p: IntPolynomial, x) -> int:
    if isinstance(x, QuadraticValue):
        # Integer fast path for points u + v*sqrt(d) with u, v integers.
        if x.a.denominator == 1 and x.b.denominator == 1:
            u, v, d = int(x.a), int(x.b), x.d
            if v == 0:
                w = p(u)
                return (w > 0) - (w < 0)
            A = B = 0
            for c in reversed(p.coeffs):
                A, B = A * u + B * v * d + c, A * v + B * u
            return _sign_int_pair(A, B, d)
        return p(x).sign()
    v = p(x)
    return (v > 0) - (v < 0)


def variations(chain, x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def count_roots_between(chain, lo, hi) -> int:
    """Distinct real roots of chain[0] in (lo, hi]; chain[0](lo) must be nonzero."""
    return variations(chain, lo) - variations(chain, hi)


def root_bound(p: IntPolynomial) -> int:
    """Integer B with all real roots of p in (-B, B) (Cauchy bound)."""
    lc = abs(p.leading_coefficient)
    m = max((abs(c) for c in p.coeffs[:-1]), default=0)
    return m // lc + 2


def count_distinct_real_roots(p: IntPolynomial, lo=None, hi=None) -> int:
    """Distinct real roots of p in the open interval (lo, hi).

    Endpoints are rationals or QuadraticValue; None means +-infinity.
    p must not vanish at a finite endpoint.
    """
    s = squarefree_part(p)
    b = root_bound(s)
    if lo is None:
        lo = Fraction(-b)
    if hi is None:
        hi = Fraction(b)
    if _sign_at(s, lo) == 0 or _sign_at(s, hi) == 0:
        raise ValueError("endpoint is a root; use sturm_count for closed intervals")
    chain = sturm_chain(s)
    return count_roots_between(chain, lo, hi)


def is_real_rooted_in_open(p: IntPolynomial, lo, hi) -> bool:
    """True when every complex root of p is real and lies in (lo, hi)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    s = squarefree_part(p)
    if _sign_at(s, lo) == 0 or _sign_at(s, hi) == 0:
        return False
    chain = sturm_chain(s)
    return count_roots_between(chain, lo, hi) == s.degree


def _minimal_polynomial(x) -> IntPolynomial:
    """Primitive integer minimal polynomial of a rational or quadratic value."""
    if isinstance(x, int):
        return IntPolynomial((-x, 1))
    if isinstance(x, Fraction):
        return IntPolynomial((-x.numerator, x.denominator)).primitive_part()
    if isinstance(x, QuadraticValue):
        if x.is_rational:
            return _minimal_polynomial(x.a)
        # root of t^2 - 2a t + (a^2 - b^2 d)
        a, b, d = x.a, x.b, x.d
        c0 = a * a - b * b * d
        c1 = -2 * a
        den = c0.denominator * c1.denominator // gcd(c0.denominator, c1.denominator)
        return IntPolynomial((int(c0 * den), int(c1 * den), den)).primitive_part()
    raise TypeError(type(x))


def sturm_count(h: IntPolynomial, lo, hi) -> int:
    """Distinct real roots of h in the closed interval [lo, hi].

    Endpoint roots are detected by exact evaluation; when an endpoint is a
    root its minimal polynomial (linear for rational endpoints, quadratic
    such as x^2 - 4q for 2*sqrt(q)) is divided out before running Sturm on
    the open interval, and the endpoint roots are added back.  A conjugate
    root removed by the quadratic deflation is re-counted if it lies
    strictly inside the interval.
    """
    if h.is_zero:
        raise ValueError("zero polynomial")
    if not isinstance(lo, QuadraticValue):
        lo = QuadraticValue(lo)
    if not isinstance(hi, QuadraticValue):
        hi = QuadraticValue(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    s = squarefree_part(h)
    endpoint_roots = 0
    interior_extra = 0
    deflators: list[IntPolynomial] = []
    for x in (lo, hi):
        if _sign_at(s, x) == 0:
            endpoint_roots += 1
            mp = _minimal_polynomial(x)
            if mp not in deflators:
                deflators.append(mp)
                if mp.degree == 2 and not x.is_rational:
                    conj = x.conjugate()
                    if lo < conj < hi:
                        interior_extra += 1
    for mp in deflators:
        # mp primitive divides the primitive s over Q, so f/g is integral.
        s = s.exact_div(mp).primitive_part()
    if s.degree == 0:
        return endpoint_roots + interior_extra
    chain = sturm_chain(s)
    return count_roots_between(chain, lo, hi) + endpoint_roots + interior_extra


# ---------------------------------------------------------------------------
# Root isolation (Sturm bisection) and the Budan-Fourier oracle.
# ---------------------------------------------------------------------------


def isolate_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for the distinct real roots of p.

    Returns [(a, b)] pairs in ascending order; a == b marks an exact
    rational root, otherwise the root is in the open interval (a, b) and
    p does not vanish at a or b.
    """
    s = squarefree_part(p)
    if s.degree == 0:
        return []
    chain = sturm_chain(s)
    b = root_bound(s)
    out: list[tuple[Fraction, Fraction]] = []

    def rec(a: Fraction, c: Fraction, va: int, vc: int):
        n = va - vc
        if n == 0:
            return
        if n == 1:
            # s is squarefree with one root in (a, c] and s(c) != 0, so
            # the endpoint signs must differ.
            assert _sign_at(s, a) * _sign_at(s, c) < 0
            out.append((a, c))
            return
        mid = (a + c) / 2
        if _sign_at(s, mid) == 0:
            out_point = mid
            eps = (c - a) / 4
            while True:
                l, r = out_point - eps, out_point + eps
                if _sign_at(s, l) != 0 and _sign_at(s, r) != 0:
                    vl, vr = variations(chain, l), variations(chain, r)
                    if vl - vr == 1:
                        break
                eps /= 2
            rec(a, l, va, vl)
            out.append((out_point, out_point))
            rec(r, c, vr, vc)
        else:
            vm = variations(chain, mid)
            rec(a, mid, va, vm)
            rec(mid, c, vm, vc)

    lo, hi = Fraction(-b), Fraction(b)
    rec(lo, hi, variations(chain, lo), variations(chain, hi))
    return out


def refine_interval(p: IntPolynomial, a: Fraction, b: Fraction, width: Fraction):
    """Shrink an isolating interval of squarefree p below the given width."""
    if a == b:
        return a, b
    sa = _sign_at(p, a)
    while b - a > width:
        mid = (a + b) / 2
        sm = _sign_at(p, mid)
        if sm == 0:
            return mid, mid
        if sm == sa:
            a = mid
        else:
            b = mid
    return a, b


def fourier_count(p: IntPolynomial, lo, hi) -> int:
    """Budan-Fourier count of roots (with multiplicity) of p in (lo, hi].

    Exceeds the true count by an even nonnegative number in general, and
    is exact when every complex root of p is real: that makes it an
    independent oracle for real-rooted polynomials (derivatives only, no
    remainder sequences).
    """
    seq = [p]
    while seq[-1].degree > 0:
        seq.append(seq[-1].derivative())
    return variations(seq, lo) - variations(seq, hi)


def isolate_totally_real_roots(p: IntPolynomial) -> list[tuple[Fraction, Fraction]]:
    """Root isolation by bisection with Budan-Fourier counting.

    Valid only when all complex roots of p are real (asserted); serves as
    an oracle independent of Sturm remainder sequences.
    """
    s = squarefree_part(p)
    if s.degree == 0:
        return []
    seq = [s]
    while seq[-1].degree > 0:
        seq.append(seq[-1].derivative())
    b = root_bound(s)
    lo, hi = Fraction(-b), Fraction(b)
    total = variations(seq, lo) - variations(seq, hi)
    assert total == s.degree, "polynomial is not totally real"
    out: list[tuple[Fraction, Fraction]] = []

    def count(a, c):
        return variations(seq, a) - variations(seq, c)

    def rec(a, c, n):
        if n == 0:
            return
        if n == 1 and _sign_at(s, a) != 0 and _sign_at(s, c) != 0:
            out.append((a, c))
            return
        mid = (a + c) / 2
        if _sign_at(s, mid) == 0:
            eps = (c - a) / 4
            while True:
                l, r = mid - eps, mid + eps
                if _sign_at(s, l) != 0 and _sign_at(s, r) != 0 and count(l, r) == 1:
                    break
                eps /= 2
            rec(a, l, count(a, l))
            out.append((mid, mid))
            rec(r, c, count(r, c))
        else:
            rec(a, mid, count(a, mid))
            rec(mid, c, count(mid, c))

    rec(lo, hi, total)
    return out
