"""Dense arbitrary-precision integer polynomials.

Coefficients are stored constant-term first with no trailing zeros; the
zero polynomial is the empty tuple.  All operations are exact.  Division
helpers cover the two cases the rest of the package needs: exact division
when the quotient is known to be integral, and sign-true remainders for
Sturm sequences.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class IntPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        for x in c:
            if not isinstance(x, int):
                raise TypeError("integer coefficients required")
        self.coeffs = tuple(c)

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def x_power(cls, n: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * n + (coeff,))

    @classmethod
    def from_leading_first(cls, coeffs) -> "IntPolynomial":
        return cls(tuple(reversed(tuple(coeffs))))

    def leading_first(self) -> tuple[int, ...]:
        return tuple(reversed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError
        result = IntPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, QuadraticValue."""
        acc = x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "IntPolynomial":
        """Divide out the content; sign normalized so the leader is positive."""
        if self.is_zero:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def divide_content(self) -> "IntPolynomial":
        """Divide out the positive content, keeping the sign."""
        if self.is_zero:
            return self
        g = self.content()
        return IntPolynomial(tuple(c // g for c in self.coeffs))

    def shift_scale(self, k: int) -> "IntPolynomial":
        """x**k * self for k >= 0."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def divmod_exact_monic(self, d: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor (always integral)."""
        if not d.is_monic:
            raise ValueError("divisor must be monic")
        r = list(self.coeffs)
        dd = d.degree
        q = [0] * max(len(r) - dd, 0)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c:
                q[i - dd] = c
                for j, dc in enumerate(d.coeffs):
                    r[i - dd + j] -= c * dc
        return IntPolynomial(q), IntPolynomial(r[:dd])

    def exact_div(self, d: "IntPolynomial") -> "IntPolynomial":
        """self / d when d divides self over Q and the quotient is integral."""
        if d.is_zero:
            raise ZeroDivisionError
        r = [Fraction(c) for c in self.coeffs]
        dd = d.degree
        lead = Fraction(d.leading_coefficient)
        q = [Fraction(0)] * max(len(r) - dd, 0)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c:
                t = c / lead
                q[i - dd] = t
                for j, dc in enumerate(d.coeffs):
                    r[i - dd + j] -= t * dc
        if any(r) or any(f.denominator != 1 for f in q):
            raise ValueError("not an exact integral division")
        return IntPolynomial(tuple(int(f) for f in q))

    def divides(self, other: "IntPolynomial") -> bool:
        """True when self divides other over Q."""
        if self.is_zero:
            return other.is_zero
        if other.is_zero:
            return True
        if other.degree < self.degree:
            return False
        r = [Fraction(c) for c in other.coeffs]
        dd = self.degree
        lead = Fraction(self.leading_coefficient)
        for i in range(len(r) - 1, dd - 1, -1):
            c = r[i]
            if c:
                t = c / lead
                for j, dc in enumerate(self.coeffs):
                    r[i - dd + j] -= t * dc
        return not any(r)

    def __repr__(self):
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c:+d}")
            elif i == 1:
                terms.append(f"{c:+d}*x")
            else:
                terms.append(f"{c:+d}*x^{i}")
        return "IntPolynomial(" + " ".join(terms) + ")"


def poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[x] (positive leading coefficient)."""
    a = a.primitive_part()
    b = b.primitive_part()
    while not b.is_zero:
        r = _prem(a, b)
        a, b = b, r.primitive_part()
    return a


def _prem(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Pseudo-remainder of a by b (sign irrelevant to gcd use)."""
    r = list(a.coeffs)
    db = b.degree
    lb = b.leading_coefficient
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= c * bc
        r.pop()
    return IntPolynomial(r)


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """f / gcd(f, f'), primitive with positive leading coefficient."""
    if f.is_zero:
        raise ValueError("squarefree_part of the zero polynomial")
    if f.degree == 0:
        return IntPolynomial.one()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f.primitive_part()
    # g is primitive and divides f over Q, so f/g is integral (Gauss).
    return f.exact_div(g).primitive_part()


def squarefree_decomposition(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """f = unit * prod u_i**i with the u_i squarefree and pairwise coprime.

    Returns [(u_i, i)] for the i with deg u_i > 0.  Repeated-gcd variant:
    slower than Yun's but transparently correct, which is all the desk
    scale here needs.
    """
    if f.is_zero:
        raise ValueError("squarefree decomposition of zero")
    chain = [f.primitive_part()]
    while chain[-1].degree > 0:
        chain.append(poly_gcd(chain[-1], chain[-1].derivative()))
    # w_i = chain[i-1] / chain[i] has the roots of multiplicity >= i.
    ws = [
        chain[i - 1].exact_div(chain[i]).primitive_part()
        for i in range(1, len(chain))
    ]
    ws.append(IntPolynomial.one())
    out = []
    for i in range(1, len(ws)):
        u = ws[i - 1].exact_div(ws[i]).primitive_part()
        if u.degree > 0:
            out.append((u, i))
    return out
