"""Dense polynomials over GF(2).

A polynomial is stored as a nonnegative Python integer whose bit i is the
coefficient of x^i.  Python integers are already arrays of machine words in
little-endian order, so shifting and XOR act on whole words at a time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Callable, Sequence, TypeVar

__all__ = [
    "NEG_INF",
    "BitPoly",
    "add",
    "mul_schoolbook",
    "mul_karatsuba",
    "karatsuba_coeffs",
    "divrem",
    "mod",
    "square",
    "powmod_x",
    "gcd",
    "xgcd",
]

_HEX_RE = re.compile(r"[0-9A-Fa-f]+")
WORD_BITS = 64


@total_ordering
class _NegInfinity:
    """Degree of the zero polynomial.

    Compares below every integer and absorbs addition, so expressions such as
    ``deg(p) + deg(q)`` stay meaningful without a magic ``-1``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NEG_INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("NEG_INF")

    def __lt__(self, other):
        return other is not self

    def __add__(self, other):
        if isinstance(other, int) or other is self:
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self
        return NotImplemented


NEG_INF = _NegInfinity()


def _deg(v: int):
    return v.bit_length() - 1 if v else NEG_INF


@dataclass(frozen=True, slots=True)
class BitPoly:
    """Immutable polynomial over GF(2); ``value`` bit i is the coefficient of x^i."""

    value: int = 0

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"BitPoly value must be a nonnegative int, got {self.value!r}")

    # construction

    @classmethod
    def from_exponents(cls, exponents) -> BitPoly:
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> BitPoly:
        """Build from a little-endian coefficient sequence (index i = x^i)."""
        if not bits:
            return cls(0)
        return cls(int("".join("1" if b else "0" for b in reversed(bits)), 2))

    @classmethod
    def from_hex(cls, text: str) -> BitPoly:
        text = text.strip()
        if not _HEX_RE.fullmatch(text):
            raise ValueError(f"malformed hex polynomial: {text!r}")
        return cls(int(text, 16))

    @classmethod
    def x(cls) -> BitPoly:
        return cls(2)

    # inspection

    @property
    def degree(self):
        return _deg(self.value)

    @property
    def nbits(self) -> int:
        return self.value.bit_length()

    def words(self, width: int = WORD_BITS) -> list[int]:
        """Little-endian list of ``width``-bit words (empty for zero)."""
        mask = (1 << width) - 1
        v, out = self.value, []
        while v:
            out.append(v & mask)
            v >>= width
        return out

    def coeff(self, i: int) -> int:
        return (self.value >> i) & 1

    def bits(self, n: int | None = None) -> list[int]:
        """Little-endian coefficient list, zero-extended to ``n`` entries."""
        if n is None:
            n = self.nbits
        if self.value >> n:
            raise ValueError(f"polynomial of degree {self.degree} does not fit in {n} bits")
        if n == 0:
            return []
        return [1 if ch == "1" else 0 for ch in reversed(format(self.value, f"0{n}b"))]

    def exponents(self) -> list[int]:
        v, out, i = self.value, [], 0
        while v:
            if v & 1:
                out.append(i)
            v >>= 1
            i += 1
        return out

    def popcount(self) -> int:
        return bin(self.value).count("1")

    def to_hex(self) -> str:
        return format(self.value, "X")

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        if not self.value:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)

    def __repr__(self):
        return f"BitPoly(0x{self.to_hex()})"

    # arithmetic sugar

    def __add__(self, other: BitPoly) -> BitPoly:
        return add(self, other)

    __xor__ = __add__
    __sub__ = __add__

    def __mul__(self, other: BitPoly) -> BitPoly:
        return BitPoly(_clmul(self.value, other.value))

    def __divmod__(self, other: BitPoly):
        return divrem(self, other)

    def __floordiv__(self, other: BitPoly) -> BitPoly:
        return divrem(self, other)[0]

    def __mod__(self, other: BitPoly) -> BitPoly:
        return mod(self, other)

    def __lshift__(self, k: int) -> BitPoly:
        return BitPoly(self.value << k)

    def __rshift__(self, k: int) -> BitPoly:
        return BitPoly(self.value >> k)


def add(p: BitPoly, q: BitPoly) -> BitPoly:
    return BitPoly(p.value ^ q.value)


def _clmul(a: int, b: int) -> int:
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        low = b & -b
        r ^= a << (low.bit_length() - 1)
        b ^= low
    return r


def mul_schoolbook(p: BitPoly, q: BitPoly) -> BitPoly:
    """Carry-less product by shift-and-add over the set bits of the shorter factor."""
    return BitPoly(_clmul(p.value, q.value))


def _karatsuba(a: int, b: int, leaf: int) -> int:
    m = max(a.bit_length(), b.bit_length()) - 1
    if m <= 0:
        # m == -1 only when both are zero
        return a & b
    if m <= leaf:
        return _clmul(a, b)
    s = m // 2 + 1  # low half holds coefficients 0..floor(m/2)
    mask = (1 << s) - 1
    lo_a, hi_a = a & mask, a >> s
    lo_b, hi_b = b & mask, b >> s
    d0 = _karatsuba(lo_a, lo_b, leaf)
    d1 = _karatsuba(lo_a ^ hi_a, lo_b ^ hi_b, leaf)
    d2 = _karatsuba(hi_a, hi_b, leaf)
    return (d2 << (2 * s)) ^ ((d1 ^ d2 ^ d0) << s) ^ d0


def mul_karatsuba(p: BitPoly, q: BitPoly, *, leaf_degree: int = 0) -> BitPoly:
    """Recursive Karatsuba product.

    With the default ``leaf_degree=0`` the recursion bottoms out at single
    coefficients, where the product is an AND; this is the exact shape the gate
    counter traces.  A larger ``leaf_degree`` switches to word-level schoolbook
    multiplication below that degree, which only changes speed.
    """
    return BitPoly(_karatsuba(p.value, q.value, leaf_degree))


T = TypeVar("T")


def _accumulate(out: list, vec: Sequence, offset: int, xor: Callable) -> None:
    for i, v in enumerate(vec):
        j = i + offset
        out[j] = v if out[j] is None else xor(out[j], v)


def karatsuba_coeffs(
    a: Sequence[T],
    b: Sequence[T],
    xor: Callable[[T, T], T],
    and_: Callable[[T, T], T],
    zero: T,
) -> list[T]:
    """Karatsuba over coefficient lists of arbitrary bit-like objects.

    Same recursion and split as :func:`mul_karatsuba`, but the degree is taken
    from the list length rather than from the values, so it builds the same
    network for every input.  An XOR is only applied where two partial
    products overlap.
    """
    n = max(len(a), len(b))
    if n == 0:
        return []
    a = list(a) + [zero] * (n - len(a))
    b = list(b) + [zero] * (n - len(b))
    return _karatsuba_coeffs(a, b, xor, and_)


def _karatsuba_coeffs(a, b, xor, and_):
    n = len(a)
    if n == 1:
        return [and_(a[0], b[0])]
    s = (n - 1) // 2 + 1
    lo_a, hi_a = a[:s], a[s:]
    lo_b, hi_b = b[:s], b[s:]
    h = len(hi_a)
    sum_a = [xor(lo_a[i], hi_a[i]) for i in range(h)] + lo_a[h:]
    sum_b = [xor(lo_b[i], hi_b[i]) for i in range(h)] + lo_b[h:]
    d0 = _karatsuba_coeffs(lo_a, lo_b, xor, and_)
    d1 = _karatsuba_coeffs(sum_a, sum_b, xor, and_)
    d2 = _karatsuba_coeffs(hi_a, hi_b, xor, and_)
    mid = list(d1)
    _accumulate(mid, d0, 0, xor)
    _accumulate(mid, d2, 0, xor)
    out = [None] * (2 * n - 1)
    _accumulate(out, d0, 0, xor)
    _accumulate(out, mid, s, xor)
    _accumulate(out, d2, 2 * s, xor)
    return out


def divrem(n: BitPoly, d: BitPoly) -> tuple[BitPoly, BitPoly]:
    """Long division, most significant bit first."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    r = n.value
    dv = d.value
    dd = dv.bit_length() - 1
    q = 0
    while r.bit_length() - 1 >= dd:
        shift = r.bit_length() - 1 - dd
        q |= 1 << shift
        r ^= dv << shift
    return BitPoly(q), BitPoly(r)


def _sparse_folder(f: int):
    """Return a remainder function for modulus ``f`` (sparse moduli fold x^m = tail)."""
    df = f.bit_length() - 1
    tail = f ^ (1 << df)
    if bin(tail).count("1") > 8:
        def rem(a: int) -> int:
            while a.bit_length() - 1 >= df:
                a ^= f << (a.bit_length() - 1 - df)
            return a
        return rem
    mask = (1 << df) - 1
    exps = BitPoly(tail).exponents()

    def rem(a: int) -> int:
        while a >> df:
            h = a >> df
            a &= mask
            for e in exps:
                a ^= h << e
        return a

    return rem


def _mod_int(a: int, f: int) -> int:
    return _sparse_folder(f)(a)


def mod(p: BitPoly, f: BitPoly) -> BitPoly:
    """Remainder of ``p`` modulo ``f``; agrees with ``divrem(p, f)[1]``."""
    if not f:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    return BitPoly(_mod_int(p.value, f.value))


# spread the high and low nibble of each byte into a byte of its own
_SPREAD_HI = bytes(sum(((i >> (4 + k)) & 1) << (2 * k) for k in range(4)) for i in range(256))
_SPREAD_LO = bytes(sum(((i >> k) & 1) << (2 * k) for k in range(4)) for i in range(256))


def _square_int(a: int) -> int:
    if not a:
        return 0
    n = (a.bit_length() + 7) // 8
    raw = a.to_bytes(n, "big")
    out = bytearray(2 * n)
    out[0::2] = raw.translate(_SPREAD_HI)
    out[1::2] = raw.translate(_SPREAD_LO)
    return int.from_bytes(out, "big")


def square(p: BitPoly) -> BitPoly:
    """p^2: coefficient i moves to 2i (the Frobenius map is linear in GF(2))."""
    return BitPoly(_square_int(p.value))


def powmod_x(e: int, f: BitPoly) -> BitPoly:
    """x^(2^e) mod f by ``e`` repeated squarings."""
    if f.degree < 1:
        raise ValueError("powmod_x needs a modulus of degree >= 1")
    if e < 0:
        raise ValueError("exponent count must be nonnegative")
    rem = _sparse_folder(f.value)
    r = rem(2)
    for _ in range(e):
        r = rem(_square_int(r))
    return BitPoly(r)


def gcd(p: BitPoly, q: BitPoly) -> BitPoly:
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    a, b = p.value, q.value
    while b:
        db = b.bit_length()
        while a.bit_length() >= db:
            a ^= b << (a.bit_length() - db)
        a, b = b, a
    return BitPoly(a)


def xgcd(p: BitPoly, q: BitPoly) -> tuple[BitPoly, BitPoly, BitPoly]:
    """Return (g, s, t) with s*p + t*q = g = gcd(p, q)."""
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = p.value, q.value
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        qt, r = divrem(BitPoly(r0), BitPoly(r1))
        qv = qt.value
        r0, r1 = r1, r.value
        s0, s1 = s1, s0 ^ _clmul(qv, s1)
        t0, t1 = t1, t0 ^ _clmul(qv, t1)
    return BitPoly(r0), BitPoly(s0), BitPoly(t0)
