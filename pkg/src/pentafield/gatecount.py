"""Gate-level cost of the multiplier and reducers.

The algorithms are run on :class:`SymbolicBit` inputs, which record every
2-input XOR and AND they take part in as a node of a DAG.  Constant operands
are folded away at construction and never counted; apart from that, every
gate the algorithm asks for is a gate (no common-subexpression elimination).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .family import PentaShape, reduction_xor_formula
from .gf2x import BitPoly, karatsuba_coeffs
from .reduce import network_for

__all__ = [
    "SymbolicBit",
    "Circuit",
    "GateStats",
    "CostReport",
    "reduction_circuit",
    "trace_reduction",
    "karatsuba_circuit",
    "trace_karatsuba",
    "karatsuba_counts",
    "karatsuba_constant",
    "karatsuba_constant_series",
    "cost_report",
    "count_concrete_xors",
]

LOG2_3 = math.log2(3)


class SymbolicBit:
    __slots__ = ("circuit", "kind", "left", "right", "index", "depth_x", "depth_a")

    def __init__(self, circuit, kind, left=None, right=None, index=None, depth_x=0, depth_a=0):
        self.circuit = circuit
        self.kind = kind
        self.left = left
        self.right = right
        self.index = index
        self.depth_x = depth_x
        self.depth_a = depth_a

    def __xor__(self, other):
        return self.circuit.xor(self, other)

    def __and__(self, other):
        return self.circuit.and_(self, other)

    def __repr__(self):
        if self.kind == "input":
            return f"in{self.index}"
        if self.kind in ("const0", "const1"):
            return self.kind[-1]
        return f"{self.kind}#{self.index}"


@dataclass(frozen=True)
class GateStats:
    xor_count: int
    and_count: int
    depth_x: int
    depth_a: int


class Circuit:
    """Append-only gate DAG; node ``index`` doubles as topological order for gates."""

    def __init__(self):
        self.gates: list[SymbolicBit] = []
        self.n_inputs = 0
        self.xor_count = 0
        self.and_count = 0
        self.zero = SymbolicBit(self, "const0")
        self.one = SymbolicBit(self, "const1")

    def inputs(self, n: int) -> list[SymbolicBit]:
        out = [SymbolicBit(self, "input", index=self.n_inputs + i) for i in range(n)]
        self.n_inputs += n
        return out

    def xor(self, a: SymbolicBit, b: SymbolicBit) -> SymbolicBit:
        if a is self.zero:
            return b
        if b is self.zero:
            return a
        if a is b:
            return self.zero
        if a is self.one and b is self.one:
            return self.zero
        node = SymbolicBit(
            self,
            "xor",
            a,
            b,
            len(self.gates),
            1 + max(a.depth_x, b.depth_x),
            max(a.depth_a, b.depth_a),
        )
        self.gates.append(node)
        self.xor_count += 1
        return node

    def and_(self, a: SymbolicBit, b: SymbolicBit) -> SymbolicBit:
        if a is self.zero or b is self.zero:
            return self.zero
        if a is self.one:
            return b
        if b is self.one or a is b:
            return a
        node = SymbolicBit(
            self,
            "and",
            a,
            b,
            len(self.gates),
            max(a.depth_x, b.depth_x),
            1 + max(a.depth_a, b.depth_a),
        )
        self.gates.append(node)
        self.and_count += 1
        return node

    def stats(self, outputs: Sequence[SymbolicBit]) -> GateStats:
        return GateStats(
            self.xor_count,
            self.and_count,
            max((o.depth_x for o in outputs), default=0),
            max((o.depth_a for o in outputs), default=0),
        )

    def evaluate(self, outputs: Sequence[SymbolicBit], values: Sequence[int], width: int = 1) -> list[int]:
        """Evaluate on concrete input values.

        Each value is a ``width``-bit lane vector, so one pass evaluates
        ``width`` independent assignments.
        """
        if len(values) != self.n_inputs:
            raise ValueError(f"expected {self.n_inputs} input values, got {len(values)}")
        ones = (1 << width) - 1
        gate_vals = [0] * len(self.gates)

        def val(node):
            k = node.kind
            if k == "input":
                return values[node.index]
            if k == "const0":
                return 0
            if k == "const1":
                return ones
            return gate_vals[node.index]

        for g in self.gates:
            if g.kind == "xor":
                gate_vals[g.index] = val(g.left) ^ val(g.right)
            else:
                gate_vals[g.index] = val(g.left) & val(g.right)
        return [val(o) for o in outputs]


# -- reduction --------------------------------------------------------------


def reduction_circuit(s: PentaShape):
    """(circuit, outputs) for the shape's reducer on 2m-1 symbolic input bits."""
    circ = Circuit()
    d = circ.inputs(2 * s.m - 1)
    return circ, network_for(s)(d)


def trace_reduction(s: PentaShape) -> GateStats:
    circ, out = reduction_circuit(s)
    return circ.stats(out)


class _CountingBit:
    __slots__ = ("v", "tally")

    def __init__(self, v, tally):
        self.v = v
        self.tally = tally

    def __xor__(self, other):
        self.tally[0] += 1
        return _CountingBit(self.v ^ other.v, self.tally)


def count_concrete_xors(s: PentaShape, D: BitPoly) -> tuple[BitPoly, int]:
    """Run the reducer on concrete bits, counting every XOR actually executed."""
    tally = [0]
    d = [_CountingBit(bit, tally) for bit in D.bits(2 * s.m - 1)]
    out = network_for(s)(d)
    return BitPoly.from_bits([o.v for o in out]), tally[0]


# -- Karatsuba --------------------------------------------------------------


def karatsuba_circuit(m: int):
    """(circuit, outputs) for the Karatsuba product of two degree-m operands.

    Each operand has m+1 symbolic coefficients: the recursion is driven by
    the maximum degree, exactly as the software multiplier is.
    """
    if m < 1:
        raise ValueError("degree must be >= 1")
    circ = Circuit()
    a = circ.inputs(m + 1)
    b = circ.inputs(m + 1)
    out = karatsuba_coeffs(a, b, circ.xor, circ.and_, circ.zero)
    return circ, out


def trace_karatsuba(m: int) -> GateStats:
    circ, out = karatsuba_circuit(m)
    return circ.stats(out)


@lru_cache(maxsize=None)
def karatsuba_counts(n: int) -> dict[str, int]:
    """Gate counts of the n-coefficient Karatsuba network, split by phase.

    Closed recursion over the same split as the traced network; used where
    building a DAG per size would be too slow.  ``recombine`` is the XORs
    that merge the overlapping partial products into the result.
    """
    if n == 1:
        return {"split": 0, "middle": 0, "recombine": 0, "and": 1}
    s = (n - 1) // 2 + 1
    h = n - s
    lo, hi = karatsuba_counts(s), karatsuba_counts(h)
    here = {
        "split": 2 * h,
        "middle": (2 * s - 1) + (2 * h - 1),
        "recombine": (s - 1) + max(0, min(s - 1, 2 * h - 1)),
        "and": 0,
    }
    return {k: 2 * lo[k] + hi[k] + here[k] for k in here}


def _karatsuba_xor(m: int) -> int:
    c = karatsuba_counts(m + 1)
    return c["split"] + c["middle"] + c["recombine"]


def karatsuba_constant(m: int) -> float:
    """XOR count of the degree-m Karatsuba network divided by m^(log2 3)."""
    return _karatsuba_xor(m) / m**LOG2_3


def karatsuba_constant_series(max_m: int) -> list[tuple[int, float]]:
    if max_m < 2:
        raise ValueError("max_m must be >= 2")
    return [(m, karatsuba_constant(m)) for m in range(2, max_m + 1)]


# -- combined ---------------------------------------------------------------


@dataclass(frozen=True)
class CostReport:
    m: int
    shape: PentaShape | None
    mul_xor: int
    mul_and: int
    red_xor: int
    total_xor: int
    karatsuba_constant: float
    mul_depth_x: int
    mul_depth_a: int
    red_depth_x: int

    @property
    def depth_x(self) -> int:
        """XOR delay of multiplier followed by reducer (plus mul_depth_a AND delays)."""
        return self.mul_depth_x + self.red_depth_x

    @property
    def within_bound(self) -> bool:
        """Whether total_xor < 6 m^(log2 3) + red_xor, the advertised upper bound."""
        return self.total_xor < 6 * self.m**LOG2_3 + self.red_xor

    def csv_row(self) -> list:
        b = self.shape.b if self.shape else ""
        c = self.shape.c if self.shape else ""
        return [self.m, b, c, self.mul_xor, self.mul_and, self.red_xor, self.total_xor, self.depth_x]


COST_CSV_HEADER = ["m", "b", "c", "mul_xor", "mul_and", "red_xor", "total_xor", "depth"]


def cost_report(s: PentaShape) -> CostReport:
    mul = trace_karatsuba(s.m)
    red = trace_reduction(s)
    expected = reduction_xor_formula(s)
    if red.xor_count != expected:
        raise AssertionError(
            f"traced reducer for {s} has {red.xor_count} XORs, closed form says {expected}"
        )
    return CostReport(
        m=s.m,
        shape=s,
        mul_xor=mul.xor_count,
        mul_and=mul.and_count,
        red_xor=red.xor_count,
        total_xor=mul.xor_count + red.xor_count,
        karatsuba_constant=mul.xor_count / s.m**LOG2_3,
        mul_depth_x=mul.depth_x,
        mul_depth_a=mul.depth_a,
        red_depth_x=red.depth_x,
    )
