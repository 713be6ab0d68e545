"""Elementary integer arithmetic: primality, factorization, prime powers.

Factorization is trial division up to a fixed bound with a deterministic
Miller-Rabin + Pollard rho fallback; a failure to split surfaces as
FactorizationFailed rather than a silent wrong answer.
"""

from math import gcd, isqrt

from .errors import FactorizationFailed

TRIAL_DIVISION_BOUND = 10**6

# Deterministic Miller-Rabin witnesses for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # Brent's variant; n must be odd composite and not a prime power of 2.
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise FactorizationFailed(f"pollard rho gave up on {n}")


def factorint(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as an exponent dict."""
    if n < 1:
        raise ValueError("factorint expects n >= 1")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f <= TRIAL_DIVISION_BOUND:
        if n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        else:
            f += wheel[i]
            i = (i + 1) % 8
    if n == 1:
        return out
    # n has no factor below min(sqrt(n), bound); finish with rho.
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = _perfect_power_root(m)
        if root is not None:
            b, e = root
            stack.extend([b] * e)
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def _perfect_power_root(n: int) -> tuple[int, int] | None:
    for e in range(2, n.bit_length()):
        b = _iroot(n, e)
        if b**e == n:
            return b, e
    return None


def _iroot(n: int, k: int) -> int:
    if n < 0:
        raise ValueError
    if n == 0:
        return 0
    x = int(round(n ** (1.0 / k)))
    while x > 0 and x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def is_prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, a) with q = p**a if q is a prime power, else None."""
    if q < 2:
        return None
    if is_prime(q):
        return q, 1
    root = _perfect_power_root(q)
    if root is None:
        return None
    b, e = root
    # b may itself be a proper power when e is not maximal.
    while not is_prime(b):
        sub = _perfect_power_root(b)
        if sub is None:
            return None
        b, e2 = sub
        e *= e2
    return b, e


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def floor_sqrt_multiple(c: int, n: int) -> int:
    """floor(c * sqrt(n)) for c, n >= 0, exactly."""
    return isqrt(c * c * n)


def partitions(n: int) -> list[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, lex-descending."""
    if n == 0:
        return [()]
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return out
