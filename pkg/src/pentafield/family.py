"""The pentanomial family x^(2b+c) + x^(b+c) + x^b + x^c + 1 with b > c > 0."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .gf2x import BitPoly, _sparse_folder, _square_int, gcd

__all__ = [
    "Subfamily",
    "ShapeError",
    "PentaShape",
    "StepCounts",
    "new_shape",
    "to_poly",
    "reduction_steps",
    "reduction_xor_formula",
    "is_irreducible",
    "is_irreducible_poly",
    "is_irreducible_trial",
    "shapes_of_degree",
    "enumerate_family",
]


class Subfamily(enum.Enum):
    C_EQUALS_1 = "c=1"
    GENERAL = "general"
    ALMOST_EQUALLY_SPACED = "b=2c"


class ShapeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class PentaShape:
    """Exponent pair (b, c); ordering is by (m, b) so sorted() gives enumeration order."""

    m: int
    b: int
    c: int

    def __init__(self, b: int, c: int):
        if not (isinstance(b, int) and isinstance(c, int)):
            raise ShapeError(f"b and c must be integers, got b={b!r}, c={c!r}")
        if c <= 0:
            raise ShapeError(f"constraint c > 0 violated (b={b}, c={c})")
        if b <= c:
            raise ShapeError(f"constraint b > c violated (b={b}, c={c})")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "m", 2 * b + c)

    @property
    def a(self) -> int:
        return self.b + self.c

    @property
    def subfamily(self) -> Subfamily:
        # c=1 wins over b=2c: the b=2c reducer needs c > 1
        if self.c == 1:
            return Subfamily.C_EQUALS_1
        if self.b == 2 * self.c:
            return Subfamily.ALMOST_EQUALLY_SPACED
        return Subfamily.GENERAL

    @classmethod
    def parse(cls, text: str) -> PentaShape:
        parts = text.split(",")
        if len(parts) != 2:
            raise ShapeError(f"shape must look like 'b,c', got {text!r}")
        try:
            b, c = (int(p.strip()) for p in parts)
        except ValueError:
            raise ShapeError(f"shape must look like 'b,c', got {text!r}") from None
        return cls(b, c)

    def __str__(self):
        return f"{self.b},{self.c}"

    def __repr__(self):
        return f"PentaShape(b={self.b}, c={self.c}, m={self.m})"


def new_shape(b: int, c: int) -> PentaShape:
    return PentaShape(b, c)


def to_poly(s: PentaShape) -> BitPoly:
    return BitPoly.from_exponents((s.m, s.a, s.b, s.c, 0))


@dataclass(frozen=True)
class StepCounts:
    k_a: int
    k_b: int
    k_c: int


def reduction_steps(s: PentaShape) -> StepCounts:
    """Worst-case substitution passes needed for each of the exponents a, b, c."""
    m, a, b, c = s.m, s.a, s.b, s.c
    k_a = (m - 2) // (m - a) + 1
    k_b = (m - 2) // (m - b) + 1
    k_c = (m - 2) // (m - c) + 1
    # the simplified floors and their case tables must agree with the generic formula
    assert k_a == (c - 2) // b + 3 == (2 if c == 1 else 3)
    assert k_b == (b - 2) // (b + c) + 2 == 2
    assert k_c == (c - 2) // (2 * b) + 2 == (1 if c == 1 else 2)
    return StepCounts(k_a, k_b, k_c)


def reduction_xor_formula(s: PentaShape) -> int:
    """Closed-form XOR count of the specialised reducer for this shape."""
    if s.subfamily is Subfamily.C_EQUALS_1:
        return 6 * s.b + 1
    if s.subfamily is Subfamily.ALMOST_EQUALLY_SPACED:
        return 12 * s.c - 1
    return 6 * s.b + 3 * s.c - 2


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_poly(f: BitPoly) -> bool:
    """Rabin's test: x^(2^m) = x mod f and gcd(x^(2^(m/p)) - x, f) = 1 for primes p | m."""
    m = f.degree
    if not isinstance(m, int) or m < 1:
        return False
    if m == 1:
        return True
    if not f.coeff(0):
        return False
    rem = _sparse_folder(f.value)
    x = rem(2)
    # walk the squarings once, remembering x^(2^(m/p)) for each prime p
    checkpoints = {m // p for p in _prime_factors(m)}
    saved = {}
    r = x
    for i in range(1, m + 1):
        r = rem(_square_int(r))
        if i in checkpoints:
            saved[i] = r
    if r != x:
        return False
    return all(gcd(BitPoly(saved[k] ^ x), f).value == 1 for k in checkpoints)


def is_irreducible_trial(f: BitPoly) -> bool:
    """Trial division by every polynomial of degree 1..deg(f)//2.  Small degrees only."""
    m = f.degree
    if not isinstance(m, int) or m < 1:
        return False
    fv = f.value
    for d in range(1, m // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _mod_int_plain(fv, g) == 0:
                return False
    return True


def _mod_int_plain(a: int, g: int) -> int:
    dg = g.bit_length()
    while a.bit_length() >= dg:
        a ^= g << (a.bit_length() - dg)
    return a


@lru_cache(maxsize=None)
def is_irreducible(s: PentaShape) -> bool:
    return is_irreducible_poly(to_poly(s))


def shapes_of_degree(m: int) -> list[PentaShape]:
    """All valid shapes with 2b + c = m, in ascending b."""
    out = []
    for c in range(1, m):
        if (m - c) % 2:
            continue
        b = (m - c) // 2
        if b > c:
            out.append(PentaShape(b, c))
    out.sort()
    return out


# -- small-factor sieve -----------------------------------------------------
#
# x^e mod g for every small irreducible g and every exponent e <= max_m is a
# lookup table, so the residue of a pentanomial modulo g costs five lookups.
# A zero residue (with deg g < m) proves the pentanomial reducible; survivors
# still go through Rabin's test, so the sieve only saves time.

_SIEVE_DEGREE = 16


@lru_cache(maxsize=4)
def _small_irreducibles(max_degree: int) -> np.ndarray:
    """All irreducible polynomials of degree 1..max_degree, ascending."""
    size = 1 << (max_degree + 1)
    reducible = np.zeros(size, dtype=bool)
    found = []
    for d in range(1, max_degree + 1):
        block = np.arange(1 << d, 1 << (d + 1), dtype=np.int64)
        irr = block[~reducible[block]]
        found.append(irr)
        if 2 * d > max_degree:
            continue
        # mark g*h for deg h >= d; smaller cofactors were handled at their own degree
        h = np.arange(1 << d, 1 << (max_degree - d + 1), dtype=np.int64)
        for g in irr.tolist():
            prod = np.zeros_like(h)
            e = 0
            while g:
                if g & 1:
                    prod ^= h << e
                g >>= 1
                e += 1
            reducible[prod] = True
    return np.concatenate(found)


@lru_cache(maxsize=4)
def _power_tables(max_exp: int, max_degree: int = _SIEVE_DEGREE):
    """(degrees, table) with table[j, e] = x^e mod g_j, skipping g = x."""
    gs = _small_irreducibles(max_degree)
    gs = gs[gs != 0b10]
    degrees = np.array([int(g).bit_length() - 1 for g in gs], dtype=np.int64)
    table = np.empty((len(gs), max_exp + 1), dtype=np.int32)
    cur = np.ones(len(gs), dtype=np.int64)
    top = np.int64(1) << degrees
    for e in range(max_exp + 1):
        table[:, e] = cur
        cur = cur << 1
        cur = np.where(cur & top, cur ^ gs, cur)
    return degrees, table


def _sieve(shapes: list[PentaShape]) -> np.ndarray:
    """Boolean mask: False where a factor of degree <= _SIEVE_DEGREE was found."""
    alive = np.ones(len(shapes), dtype=bool)
    if not shapes:
        return alive
    arr = np.array([(s.m, s.a, s.b, s.c) for s in shapes], dtype=np.int64)
    degrees, table = _power_tables(int(arr[:, 0].max()))
    idx = np.arange(len(shapes))
    for deg, row in zip(degrees.tolist(), table):
        sub = arr[idx]
        res = row[sub[:, 0]] ^ row[sub[:, 1]] ^ row[sub[:, 2]] ^ row[sub[:, 3]] ^ 1
        hit = (res == 0) & (sub[:, 0] > deg)
        if hit.any():
            alive[idx[hit]] = False
            idx = idx[~hit]
            if not len(idx):
                break
    return alive


def enumerate_family(max_m: int, *, sieve: bool = True) -> list[PentaShape]:
    """Every irreducible family member with 5 <= m <= max_m, ordered by (m, b)."""
    candidates = [s for m in range(5, max_m + 1) for s in shapes_of_degree(m)]
    if sieve:
        alive = _sieve(candidates)
        candidates = [s for s, ok in zip(candidates, alive) if ok]
    return [s for s in candidates if is_irreducible(s)]
