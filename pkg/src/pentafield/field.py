"""GF(2^m) arithmetic in polynomial basis, modulo a family pentanomial."""

from __future__ import annotations

from dataclasses import dataclass

from .family import PentaShape, is_irreducible, to_poly
from .gf2x import BitPoly, mul_karatsuba, square, xgcd
from .reduce import reduce

__all__ = [
    "NotAFieldError",
    "ContextMismatchError",
    "FieldCtx",
    "FieldElement",
    "fe_add",
    "fe_mul",
    "fe_square",
    "fe_pow",
    "fe_inv",
]

# Below this operand size recursion costs more than it saves in Python.
LEAF_DEGREE = 63


class NotAFieldError(ValueError):
    pass


class ContextMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class FieldCtx:
    shape: PentaShape

    def __post_init__(self):
        if not is_irreducible(self.shape):
            raise NotAFieldError(
                f"x^{self.shape.m}+x^{self.shape.a}+x^{self.shape.b}+x^{self.shape.c}+1 "
                "is reducible; the quotient ring is not a field"
            )

    @property
    def m(self) -> int:
        return self.shape.m

    @property
    def modulus(self) -> BitPoly:
        return to_poly(self.shape)

    @property
    def irreducible(self) -> bool:
        return True

    def __call__(self, value) -> FieldElement:
        """Element from a BitPoly, a plain int bit pattern or a hex string."""
        if isinstance(value, str):
            value = BitPoly.from_hex(value)
        elif isinstance(value, int):
            value = BitPoly(value)
        if value.degree >= self.m:
            raise ValueError(f"degree {value.degree} is not below m = {self.m}; reduce it first")
        return FieldElement(self, value)

    def zero(self) -> FieldElement:
        return FieldElement(self, BitPoly(0))

    def one(self) -> FieldElement:
        return FieldElement(self, BitPoly(1))

    def random(self, rng) -> FieldElement:
        """Uniform element drawn from ``rng`` (anything with ``getrandbits``)."""
        return FieldElement(self, BitPoly(rng.getrandbits(self.m)))


@dataclass(frozen=True)
class FieldElement:
    ctx: FieldCtx
    value: BitPoly

    def _same(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a FieldElement, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError(
                f"elements belong to different fields ({self.ctx.shape!r} vs {other.ctx.shape!r})"
            )

    def __add__(self, other):
        return fe_add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return fe_mul(self, other)

    def __pow__(self, e: int):
        return fe_pow(self, e)

    def __truediv__(self, other):
        return fe_mul(self, fe_inv(other))

    def __bool__(self):
        return bool(self.value)

    def to_hex(self) -> str:
        return self.value.to_hex()

    def __str__(self):
        return self.value.to_hex()


def fe_add(x: FieldElement, y: FieldElement) -> FieldElement:
    x._same(y)
    return FieldElement(x.ctx, x.value + y.value)


def fe_mul(x: FieldElement, y: FieldElement) -> FieldElement:
    """Full Karatsuba product, then the subfamily's reduction network."""
    x._same(y)
    prod = mul_karatsuba(x.value, y.value, leaf_degree=LEAF_DEGREE)
    return FieldElement(x.ctx, reduce(prod, x.ctx.shape))


def fe_square(x: FieldElement) -> FieldElement:
    return FieldElement(x.ctx, reduce(square(x.value), x.ctx.shape))


def fe_pow(x: FieldElement, e: int) -> FieldElement:
    if e < 0:
        return fe_pow(fe_inv(x), -e)
    acc = x.ctx.one()
    for bit in bin(e)[2:]:
        acc = fe_square(acc)
        if bit == "1":
            acc = fe_mul(acc, x)
    return acc


def fe_inv(x: FieldElement) -> FieldElement:
    if not x:
        raise ZeroDivisionError("zero has no inverse")
    g, s, _ = xgcd(x.value, x.ctx.modulus)
    # f irreducible and x nonzero, so the gcd is 1 and s*x = 1 mod f
    assert g.value == 1
    return FieldElement(x.ctx, s % x.ctx.modulus)
