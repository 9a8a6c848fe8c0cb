"""Reduction of polynomials of degree <= 2m-2 modulo a family pentanomial.

Two routes are provided.  :func:`reduce_generic` replays the multi-step
substitution x^m = x^a + x^b + x^c + 1 piece by piece and records a trace; it
is slow and exists as a structural oracle.  The ``*_bits`` networks are the
fixed XOR schedules for the three subfamilies.  They work on any sequence of
bit-like objects supporting ``^`` (plain ints, symbolic gates, counting
wrappers), which is what lets the gate tracer and the operation counter run
the very same code as the concrete reducer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence, TypeVar

from .family import PentaShape, Subfamily
from .gf2x import BitPoly

__all__ = [
    "InputTooLongError",
    "WrongSubfamilyError",
    "TraceStep",
    "ReductionTrace",
    "reduce_generic",
    "reduce_c1",
    "reduce_general",
    "reduce_b2c",
    "reduce",
    "reduce_c1_bits",
    "reduce_general_bits",
    "reduce_b2c_bits",
    "network_for",
]

B = TypeVar("B")


class InputTooLongError(ValueError):
    pass


class WrongSubfamilyError(ValueError):
    pass


@dataclass(frozen=True)
class TraceStep:
    high: BitPoly  # A_r: part still of degree >= m
    low: BitPoly  # B_r: part already reduced
    a_terms: int
    b_terms: int


@dataclass
class ReductionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    @property
    def total_steps(self) -> int:
        """Number of substitution passes (the initial split is not a pass)."""
        return len(self.steps) - 1


def _check_length(D: BitPoly, s: PentaShape) -> None:
    if D.degree > 2 * s.m - 2:
        raise InputTooLongError(
            f"input of degree {D.degree} exceeds 2m-2 = {2 * s.m - 2} for shape {s}"
        )


def reduce_generic(D: BitPoly, s: PentaShape) -> tuple[BitPoly, ReductionTrace]:
    """Reduce by repeated substitution, tracking each summation piece.

    Every piece carries a structural degree bound computed as if D had full
    degree 2m-2, so the number of pieces per step does not depend on the input
    values.  A piece whose bound reaches m contributes its upper part to A_r
    and its lower part to B_r.
    """
    _check_length(D, s)
    m = s.m
    mask = (1 << m) - 1
    v = D.value
    trace = ReductionTrace()
    trace.steps.append(TraceStep(BitPoly(v & ~mask), BitPoly(v & mask), 1, 1))
    result = v & mask
    pieces = [(v & ~mask, 2 * m - 2)]
    while pieces:
        new_pieces = []
        low_acc = 0
        for value, bound in pieces:
            q, qbound = value >> m, bound - m
            for e in (s.a, s.b, s.c, 0):
                shifted, sbound = q << e, qbound + e
                low_acc ^= shifted & mask
                if sbound >= m:
                    new_pieces.append((shifted & ~mask, sbound))
        high_acc = 0
        for value, _ in new_pieces:
            high_acc ^= value
        trace.steps.append(
            TraceStep(BitPoly(high_acc), BitPoly(low_acc), len(new_pieces), 4 * len(pieces))
        )
        result ^= low_acc
        pieces = new_pieces
    return BitPoly(result), trace


# -- fixed XOR networks -----------------------------------------------------


def reduce_c1_bits(d: Sequence[B], b: int) -> list[B]:
    """Reducer for x^(2b+1) + x^(b+1) + x^b + x + 1 on 4b+1 input bits.

    6b+1 XORs, XOR depth 3.
    """
    t1 = [d[i + 2 * b + 1] ^ d[i + 3 * b + 2] for i in range(b - 1)]
    t4 = [d[i + 2 * b + 1] ^ d[i + 3 * b + 1] for i in range(b)]
    r = [None] * (2 * b + 1)
    r[0] = d[0] ^ t1[0] ^ d[3 * b + 1]
    for i in range(1, b - 1):
        r[i] = d[i] ^ t1[i] ^ t4[i - 1]
    r[b - 1] = d[b - 1] ^ d[3 * b] ^ t4[b - 2]
    r[b] = d[b] ^ t1[0] ^ t4[b - 1]
    for i in range(b + 1, 2 * b - 1):
        r[i] = d[i] ^ t1[i - b] ^ t1[i - b - 1]
    r[2 * b - 1] = d[2 * b - 1] ^ d[3 * b] ^ t1[b - 2]
    r[2 * b] = d[2 * b] ^ d[3 * b + 1] ^ d[3 * b]
    return r


def reduce_general_bits(d: Sequence[B], b: int, c: int) -> list[B]:
    """Reducer for c > 1 on 4b+2c-1 input bits.

    6b+3c-2 XORs, XOR depth 3.  The fourth-row terms are folded into the
    low columns before the three-row pass; adding them last would push some
    columns to depth 4.
    """
    m = 2 * b + c
    base = list(d[:m])
    for i in range(c):
        base[i] = d[i] ^ d[i + 3 * b + c]
    for i in range(c, b + 2 * c - 1):
        base[i] = d[i] ^ d[i + 3 * b]
    t1 = [d[i + 2 * b + c] ^ d[i + 3 * b + 2 * c] for i in range(b - 1)]
    t2 = d[3 * b + c - 1]
    r = [None] * m
    for i in range(c):
        r[i] = base[i] ^ t1[i]
    for i in range(c, b - 1):
        r[i] = base[i] ^ t1[i] ^ d[i + 2 * b]
    r[b - 1] = base[b - 1] ^ t2 ^ d[3 * b - 1]
    for i in range(b, b + c - 1):
        r[i] = base[i] ^ t1[i - b] ^ d[i + 2 * b]
    r[b + c - 1] = base[b + c - 1] ^ t2 ^ t1[c - 1]
    for i in range(b + c, 2 * b - 1):
        r[i] = base[i] ^ t1[i - b] ^ t1[i - b - c]
    r[2 * b - 1] = base[2 * b - 1] ^ t2 ^ t1[b - c - 1]
    for i in range(2 * b, 2 * b + c - 1):
        r[i] = base[i] ^ t1[i - b - c] ^ d[i + b + c]
    r[m - 1] = base[m - 1] ^ t2 ^ d[3 * b + 2 * c - 1]
    return r


def reduce_b2c_bits(d: Sequence[B], c: int) -> list[B]:
    """Reducer for x^(5c) + x^(3c) + x^(2c) + x^c + 1, c > 1, on 10c-1 input bits.

    12c-1 XORs, XOR depth 3.
    """
    t1 = [d[i + 6 * c] ^ d[i + 5 * c] for i in range(c)]
    t2 = [d[i + 9 * c] ^ d[i + 7 * c] for i in range(c - 1)]
    t3 = d[8 * c - 1]
    r = [None] * (5 * c)
    for i in range(c - 1):
        r[i] = d[i] ^ d[i + 8 * c] ^ d[i + 5 * c] ^ d[i + 7 * c]
    r[c - 1] = d[c - 1] ^ d[9 * c - 1] ^ d[6 * c - 1] ^ t3
    for i in range(c, 2 * c - 1):
        r[i] = d[i] ^ t1[i - c] ^ t2[i - c]
    r[2 * c - 1] = d[2 * c - 1] ^ t3 ^ t1[c - 1]
    for i in range(2 * c, 3 * c):
        r[i] = d[i] ^ t1[i - 2 * c]
    for i in range(3 * c, 4 * c):
        r[i] = d[i] ^ t1[i - 3 * c] ^ d[i + 5 * c]
    for i in range(4 * c, 5 * c - 1):
        r[i] = d[i] ^ t2[i - 4 * c] ^ d[i + 2 * c]
    r[5 * c - 1] = d[5 * c - 1] ^ t3 ^ d[7 * c - 1]
    return r


def network_for(s: PentaShape):
    """The bit-level reducer for a shape, as a function of the input bit list."""
    if s.subfamily is Subfamily.C_EQUALS_1:
        return lambda d: reduce_c1_bits(d, s.b)
    if s.subfamily is Subfamily.ALMOST_EQUALLY_SPACED:
        return lambda d: reduce_b2c_bits(d, s.c)
    return lambda d: reduce_general_bits(d, s.b, s.c)


def _run(D: BitPoly, s: PentaShape, net) -> BitPoly:
    _check_length(D, s)
    return BitPoly.from_bits(net(D.bits(2 * s.m - 1)))


def reduce_c1(D: BitPoly, s: PentaShape) -> BitPoly:
    if s.c != 1:
        raise WrongSubfamilyError(f"reduce_c1 needs c = 1, got shape {s}")
    return _run(D, s, lambda d: reduce_c1_bits(d, s.b))


def reduce_general(D: BitPoly, s: PentaShape) -> BitPoly:
    if s.c <= 1:
        raise WrongSubfamilyError(f"reduce_general needs c > 1, got shape {s}")
    return _run(D, s, lambda d: reduce_general_bits(d, s.b, s.c))


def reduce_b2c(D: BitPoly, s: PentaShape) -> BitPoly:
    if s.b != 2 * s.c or s.c == 1:
        raise WrongSubfamilyError(f"reduce_b2c needs b = 2c with c > 1, got shape {s}")
    return _run(D, s, lambda d: reduce_b2c_bits(d, s.c))


def reduce(D: BitPoly, s: PentaShape) -> BitPoly:
    """D mod f(s) through the specialised network for the shape's subfamily."""
    return _run(D, s, network_for(s))
