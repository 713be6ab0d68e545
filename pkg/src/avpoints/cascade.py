"""Depth-first enumeration of real-rooted monic integer polynomials.

Target: all monic h in Z[x] of degree m whose roots are all real and lie
in the open interval (-R, R) with R = 2*sqrt(q).  These are exactly the
real companion polynomials of the palindromic Weil q-polynomials without
real roots, so this kernel drives the whole isogeny-class enumeration.

Method: walk the coefficients a_1, ..., a_m top-down.  The partial
polynomial at level k is P_k = h^(m-k), an integer polynomial whose
derivative is the previous level's P_(k-1).  Given P_(k-1) real-rooted in
(-R, R) with roots eta_1 <= ... <= eta_(k-1) (with multiplicity), the
valid choices of a_k are the integers t satisfying

    P_k(R) > 0,   (-1)^k P_k(-R) > 0,   (-1)^(k-j) P_k(eta_j) >= 0,

and every constraint is linear in t because a_k enters P_k only through
the constant term.  Endpoint constraints are evaluated exactly in Z[sqrt(q)];
root constraints are bracketed by refining isolating intervals until at
most one integer per constraint is uncertain, and the few uncertain
integers are settled by an exact Sturm test.  Interior integers of the
window are accepted without further work; a multiple critical point forces
an equality constraint (the child must vanish there), which pins the
window to at most one or two testable integers.

All the bisection arithmetic is scaled-integer on dyadic points num/2^s;
no floating point and no Fractions appear on the hot path.  Output order
is lexicographic in (a_1, ..., a_m).
"""

from __future__ import annotations

from math import comb, factorial, isqrt

from .arith import is_square
from .intpoly import IntPolynomial, squarefree_decomposition, squarefree_part
from .sturm import is_real_rooted_in_open, sturm_chain
from .weil import endpoints


def _antiderivative(p: list[int]) -> list[int]:
    # Exact by construction: p is a derivative of an integer polynomial.
    out = [0] * (len(p) + 1)
    for j, c in enumerate(p):
        out[j + 1] = c // (j + 1)
    return out


def _eval_scaled(p, num: int, s: int) -> int:
    """p(num / 2**s) * 2**(s*deg p): same sign as p at the dyadic point."""
    acc = 0
    scale = 1 << s
    power = 1
    for c in reversed(p):
        acc = acc * num + c * power
        power *= scale
    return acc


def _sign_scaled(p, num: int, s: int) -> int:
    v = _eval_scaled(p, num, s)
    return (v > 0) - (v < 0)


def _eval_sqrt_pair(p, b: int, d: int) -> tuple[int, int]:
    """p(b*sqrt(d)) as (A, B) with value A + B*sqrt(d)."""
    A = B = 0
    for c in reversed(p):
        A, B = B * b * d + c, A * b
    return A, B


def _sign_pair(a: int, b: int, d: int) -> int:
    if b == 0:
        return (a > 0) - (a < 0)
    if a == 0:
        return 1 if b > 0 else -1
    if (a > 0) == (b > 0):
        return 1 if a > 0 else -1
    lhs, rhs = a * a, b * b * d
    if lhs == rhs:
        return 0
    bigger = lhs > rhs
    return (1 if bigger else -1) if a > 0 else (-1 if bigger else 1)


def _floor_div_sqrt(A: int, B: int, d: int, D: int) -> int:
    """floor((A + B*sqrt(d)) / D) for D > 0, with B*sqrt(d) irrational or zero."""
    if B == 0:
        return A // D
    s = isqrt(B * B * d)
    fl = s if B > 0 else -s - 1
    return (A + fl) // D


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class _Cascade:
    def __init__(self, m: int, q: int):
        self.m = m
        self.q = q
        self.lo, self.hi = endpoints(q)
        self.q_square = is_square(q)
        self.sqrt_q = isqrt(q) if self.q_square else 0
        self.bound = isqrt(4 * q) + 1  # integer > 2*sqrt(q)
        self.fact = [factorial(i) for i in range(m + 1)]

    def run(self):
        if self.m == 0:
            yield ()
            return
        yield from self._extend([self.fact[self.m]], ())

    # -- exact full test, used for window-edge candidates only ------------
    def _is_valid(self, coeffs: list[int]) -> bool:
        return is_real_rooted_in_open(IntPolynomial(coeffs), self.lo, self.hi)

    # -- endpoint values of a polynomial at +-2*sqrt(q), exact ------------
    def _endpoint_value(self, p: list[int], sign: int) -> tuple[int, int]:
        """(A, B) with p(sign*2*sqrt(q)) = A + B*sqrt(q); B = 0 when q is square."""
        if self.q_square:
            return _eval_scaled(p, sign * 2 * self.sqrt_q, 0), 0
        return _eval_sqrt_pair(p, 2 * sign, self.q)

    def _floor_endpoint(self, A: int, B: int, w: int) -> int:
        """floor((-(A + B*sqrt(q))) / w)."""
        return _floor_div_sqrt(-A, -B, self.q, w)

    def _ceil_endpoint(self, A: int, B: int, w: int) -> int:
        return -_floor_div_sqrt(A, B, self.q, w)

    # -- root isolation of a parent on dyadic points ----------------------
    def _isolate(self, p: IntPolynomial):
        """Isolating records for the distinct real roots of p.

        Returns (sf, records); each record is (na, nb, s, mult) meaning the
        root is in the open dyadic interval (na/2^s, nb/2^s) with
        sf(na), sf(nb) != 0, or na == nb marking an exact rational root.
        All roots of p are real and inside (-bound, bound).
        """
        sf = squarefree_part(p)
        sfc = list(sf.coeffs)
        chain = [list(c.coeffs) for c in sturm_chain(sf)]

        def variations(num: int, s: int) -> int:
            signs = []
            for cp in chain:
                sg = _sign_scaled(cp, num, s)
                if sg:
                    signs.append(sg)
            return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

        out = []

        def rec(na: int, nb: int, s: int, va: int, vb: int):
            n = va - vb
            if n == 0:
                return
            if n == 1 and _sign_scaled(sfc, na, s) * _sign_scaled(sfc, nb, s) < 0:
                out.append((na, nb, s))
                return
            mid = na + nb  # at scale s+1
            na2, nb2 = 2 * na, 2 * nb
            if _sign_scaled(sfc, mid, s + 1) == 0:
                # Exact dyadic root; bracket it away from its neighbours.
                shift = 2
                while True:
                    l = (mid << shift) - 1
                    r = (mid << shift) + 1
                    ss = s + 1 + shift
                    if (
                        _sign_scaled(sfc, l, ss) != 0
                        and _sign_scaled(sfc, r, ss) != 0
                        and variations(l, ss) - variations(r, ss) == 1
                    ):
                        break
                    shift += 1
                vl, vr = variations(l, ss), variations(r, ss)
                rec(na << (shift + 1), l, ss, va, vl)
                out.append((mid, mid, s + 1))
                rec(r, nb << (shift + 1), ss, vr, vb)
            else:
                vm = variations(mid, s + 1)
                rec(na2, mid, s + 1, va, vm)
                rec(mid, nb2, s + 1, vm, vb)

        b = self.bound
        v_lo, v_hi = variations(-b, 0), variations(b, 0)
        rec(-b, b, 0, v_lo, v_hi)

        if sf.degree == p.degree:
            return sfc, [(na, nb, s, 1) for na, nb, s in out]
        decomp = squarefree_decomposition(p)
        recs = []
        for na, nb, s in out:
            mult = None
            for u, i in decomp:
                uc = list(u.coeffs)
                if na == nb:
                    if _sign_scaled(uc, na, s) == 0:
                        mult = i
                        break
                elif _sign_scaled(uc, na, s) * _sign_scaled(uc, nb, s) < 0:
                    mult = i
                    break
            assert mult is not None, "root lost by squarefree decomposition"
            recs.append((na, nb, s, mult))
        return sfc, recs

    @staticmethod
    def _refine(sfc, na: int, nb: int, s: int, sign_a: int, limit_num: int, limit_den: int):
        """Bisect (na, nb, s) on sfc until width <= limit_num/limit_den."""
        while (nb - na) * limit_den > limit_num << s:
            mid = na + nb
            na, nb, s = 2 * na, 2 * nb, s + 1
            sm = _sign_scaled(sfc, mid, s)
            if sm == 0:
                return mid, mid, s
            if sm == sign_a:
                na = mid
            else:
                nb = mid
        return na, nb, s

    def _extend(self, parent: list[int], prefix: tuple[int, ...]):
        m = self.m
        k = len(prefix) + 1
        w = self.fact[m - k]
        A = _antiderivative(parent)

        # Exact endpoint constraints: P_k(R) > 0 and (-1)^k P_k(-R) > 0
        # with R = 2*sqrt(q); both are strict, so floor(v)+1 / ceil(v)-1.
        Ahi = self._endpoint_value(A, 1)
        Alo = self._endpoint_value(A, -1)
        lo_bound = self._floor_endpoint(*Ahi, w) + 1
        if k % 2 == 0:
            lo_bound = max(lo_bound, self._floor_endpoint(*Alo, w) + 1)
            hi_bound = None
        else:
            hi_bound = self._ceil_endpoint(*Alo, w) - 1

        sure_lo = maybe_lo = lo_bound
        sure_hi = maybe_hi = hi_bound
        has_eq = False

        if k >= 2:
            p_poly = IntPolynomial(parent)
            sfc, roots = self._isolate(p_poly)
            assert sum(r[3] for r in roots) == k - 1
            slope = 0
            bpow = 1
            for c in parent:
                slope += abs(c) * bpow
                bpow *= self.bound
            # Refine so the window enclosure is narrower than 1/4.
            limit_num, limit_den = w, 8 * slope + 1
            dA = len(A) - 1
            position = 0
            for na, nb, s, mu in roots:
                if na != nb:
                    sign_a = _sign_scaled(sfc, na, s)
                    na, nb, s = self._refine(sfc, na, nb, s, sign_a, limit_num, limit_den)
                # v = -A(eta)/w enclosed via |A'| <= slope on the interval.
                aval = _eval_scaled(A, na, s)  # A(na/2^s) * 2^(s*dA)
                denom = w << (s * dA)
                if na == nb:
                    lo_num = hi_num = -aval
                else:
                    slack = slope * (nb - na) << (s * (dA - 1))
                    lo_num, hi_num = -aval - slack, -aval + slack
                if mu >= 2:
                    has_eq = True
                    fh = hi_num // denom
                    maybe_lo = max(maybe_lo, _ceil_div(lo_num, denom))
                    maybe_hi = fh if maybe_hi is None else min(maybe_hi, fh)
                    position += mu
                    continue
                j = position + 1
                if (k - j) % 2 == 0:
                    sure_lo = max(sure_lo, _ceil_div(hi_num, denom))
                    maybe_lo = max(maybe_lo, _ceil_div(lo_num, denom))
                else:
                    fl, fh = lo_num // denom, hi_num // denom
                    sure_hi = fl if sure_hi is None else min(sure_hi, fl)
                    maybe_hi = fh if maybe_hi is None else min(maybe_hi, fh)
                position += 1

        # k = 1 is odd so the -R endpoint supplies an upper bound; for
        # k >= 2 the highest root position has odd parity (or sits inside
        # an equality block), so an upper constraint always exists.
        assert maybe_hi is not None
        assert has_eq or sure_hi is not None

        if has_eq or sure_lo > sure_hi:
            candidates = [(t, True) for t in range(maybe_lo, maybe_hi + 1)]
        else:
            candidates = [(t, True) for t in range(maybe_lo, min(sure_lo, maybe_hi + 1))]
            candidates.extend((t, False) for t in range(sure_lo, sure_hi + 1))
            candidates.extend(
                (t, True) for t in range(max(sure_hi + 1, maybe_lo), maybe_hi + 1)
            )

        at_leaf = k == m
        for t, needs_test in candidates:
            child = list(A)
            child[0] = t * w
            if needs_test and not self._is_valid(child):
                continue
            if at_leaf:
                yield prefix + (t,)
            else:
                yield from self._extend(child, prefix + (t,))


def real_rooted_prefixes(m: int, q: int):
    """Yield (a_1, ..., a_m) for every monic integer h of degree m with all
    roots real in the open interval (-2 sqrt(q), 2 sqrt(q)), in ascending
    lexicographic order."""
    yield from _Cascade(m, q).run()


def coefficient_bound(m: int, k: int, q: int) -> int:
    """floor(C(m, k) * (2 sqrt(q))**k): box bound for the k-th coefficient."""
    return isqrt(comb(m, k) ** 2 * (4 * q) ** k)
