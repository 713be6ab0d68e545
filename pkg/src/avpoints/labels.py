"""Isogeny-class labels "g.q.c1_c2_..._cg".

Each c encodes a coefficient in base 26 (a=0, ..., z=25, big-endian,
no leading 'a' except for zero itself); a prefix 'a' on a multi-letter
token negates the remainder.  Decoding completes the lower half of the
coefficient vector through the functional equation, so only palindromic
classes carry labels.
"""

from __future__ import annotations

import re

from .errors import MalformedLabel

_LABEL_RE = re.compile(r"^(\d+)\.(\d+)\.([a-z_]+)$")


def _encode_nonneg(n: int) -> str:
    if n == 0:
        return "a"
    digits = []
    while n:
        digits.append(chr(ord("a") + n % 26))
        n //= 26
    return "".join(reversed(digits))


def encode_coefficient(n: int) -> str:
    if n < 0:
        return "a" + _encode_nonneg(-n)
    return _encode_nonneg(n)


def decode_coefficient(tok: str) -> int:
    if not tok or not tok.isalpha() or not tok.islower():
        raise MalformedLabel(f"bad coefficient token {tok!r}")
    if tok == "a":
        return 0
    neg = False
    if tok[0] == "a":
        neg = True
        tok = tok[1:]
        if tok[0] == "a":
            raise MalformedLabel("leading zero digit in magnitude")
    n = 0
    for ch in tok:
        n = n * 26 + (ord(ch) - ord("a"))
    if n == 0:
        raise MalformedLabel("zero written with a sign")
    return -n if neg else n


def encode_label(q: int, g: int, half_coeffs) -> str:
    """Label from a_1..a_g (the coefficients of x^(2g-1)..x^g)."""
    half = list(half_coeffs)
    if len(half) != g:
        raise MalformedLabel("need exactly g coefficients")
    return f"{g}.{q}." + "_".join(encode_coefficient(c) for c in half)


def decode_label(label: str) -> tuple[int, int, tuple[int, ...]]:
    """(q, g, full non-leading coefficient vector a_1..a_2g)."""
    m = _LABEL_RE.match(label)
    if not m:
        raise MalformedLabel(f"malformed label {label!r}")
    g = int(m.group(1))
    q = int(m.group(2))
    if g < 1 or q < 2:
        raise MalformedLabel("g and q out of range")
    toks = m.group(3).split("_")
    if len(toks) != g:
        raise MalformedLabel(f"expected {g} coefficient tokens, got {len(toks)}")
    half = [decode_coefficient(t) for t in toks]
    full = list(half)
    for j in range(1, g + 1):
        prev = 1 if j == g else half[g - j - 1]
        full.append(q**j * prev)
    return q, g, tuple(full)


def label_for(q: int, g: int, coeffs_leading_first) -> str | None:
    """Label for a full coefficient vector, or None when not palindromic."""
    row = tuple(coeffs_leading_first)
    if len(row) != 2 * g:
        raise MalformedLabel("coefficient vector has wrong length")
    _, _, roundtrip = decode_label(encode_label(q, g, row[:g]))
    if roundtrip != row:
        return None
    return encode_label(q, g, row[:g])
