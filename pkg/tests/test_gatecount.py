import math
import random

import pytest

from pentafield.family import PentaShape, enumerate_family, reduction_xor_formula, shapes_of_degree, to_poly
from pentafield.gatecount import (
    Circuit,
    GateStats,
    cost_report,
    count_concrete_xors,
    karatsuba_circuit,
    karatsuba_constant,
    karatsuba_constant_series,
    karatsuba_counts,
    reduction_circuit,
    trace_karatsuba,
    trace_reduction,
)
from pentafield.gf2x import BitPoly, divrem, mul_schoolbook


def lanes_for(inputs, n_bits):
    """Lane word j holds bit j of every input (input k in lane bit k)."""
    return [sum(((v >> j) & 1) << k for k, v in enumerate(inputs)) for j in range(n_bits)]


def unlanes(words, k):
    return sum(((w >> k) & 1) << j for j, w in enumerate(words))


class TestFolding:
    def setup_method(self):
        self.c = Circuit()
        self.x, self.y = self.c.inputs(2)

    def test_xor_with_zero_and_self(self):
        c, x = self.c, self.x
        assert c.xor(x, c.zero) is x
        assert c.xor(c.zero, x) is x
        assert c.xor(x, x) is c.zero
        assert c.xor_count == 0

    def test_and_with_constants(self):
        c, x = self.c, self.x
        assert c.and_(x, c.one) is x
        assert c.and_(c.one, x) is x
        assert c.and_(x, c.zero) is c.zero
        assert c.and_count == 0

    def test_depths(self):
        c, x, y = self.c, self.x, self.y
        a = x & y
        s = (a ^ x) ^ y
        assert (a.depth_a, a.depth_x) == (1, 0)
        assert (s.depth_a, s.depth_x) == (1, 2)
        assert c.stats([s]) == GateStats(xor_count=2, and_count=1, depth_x=2, depth_a=1)

    def test_evaluate(self):
        c, x, y = self.c, self.x, self.y
        out = [x ^ y, x & y, c.one, c.zero]
        assert c.evaluate(out, [0b0011, 0b0101], width=4) == [0b0110, 0b0001, 0b1111, 0]
        with pytest.raises(ValueError):
            c.evaluate(out, [1])


class TestReductionTrace:
    @pytest.mark.parametrize(
        "b, c, xors",
        [(74, 15, 487), (63, 37, 487), (111, 61, 847), (123, 37, 847), (218, 135, 1711), (62, 31, 371), (2, 1, 13)],
    )
    def test_table_values(self, b, c, xors):
        assert trace_reduction(PentaShape(b, c)) == GateStats(xors, 0, 3, 0)

    @pytest.mark.parametrize("m", range(5, 90))
    def test_every_shape_matches_formula(self, m):
        # includes reducible shapes: the count only depends on (b, c)
        for s in shapes_of_degree(m):
            st = trace_reduction(s)
            assert (st.xor_count, st.and_count, st.depth_x) == (reduction_xor_formula(s), 0, 3), s

    @pytest.mark.parametrize("s", [PentaShape(2, 1), PentaShape(3, 2), PentaShape(5, 2), PentaShape(62, 31)], ids=str)
    def test_circuit_computes_the_remainder(self, s):
        rng = random.Random(11)
        circ, out = reduction_circuit(s)
        n = 2 * s.m - 1
        inputs = [rng.getrandbits(n) for _ in range(64)]
        words = circ.evaluate(out, lanes_for(inputs, n), width=64)
        for k, v in enumerate(inputs):
            assert unlanes(words, k) == divrem(BitPoly(v), to_poly(s))[1].value

    def test_concrete_count_is_input_independent(self):
        rng = random.Random(12)
        for s in [PentaShape(2, 1), PentaShape(74, 15), PentaShape(62, 31)]:
            seen = set()
            for _ in range(30):
                D = BitPoly(rng.getrandbits(2 * s.m - 1))
                r, n = count_concrete_xors(s, D)
                assert r == divrem(D, to_poly(s))[1]
                seen.add(n)
            assert seen == {reduction_xor_formula(s)}


class TestKaratsubaTrace:
    def test_degree_one(self):
        # two coefficients per operand: one Karatsuba level
        assert trace_karatsuba(1).and_count == 3

    def test_single_coefficient_base_case(self):
        assert karatsuba_counts(1) == {"split": 0, "middle": 0, "recombine": 0, "and": 1}

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            trace_karatsuba(0)

    @pytest.mark.parametrize("m", list(range(1, 70)) + [127, 128, 163, 255])
    def test_dag_matches_recursion(self, m):
        st = trace_karatsuba(m)
        c = karatsuba_counts(m + 1)
        assert st.xor_count == c["split"] + c["middle"] + c["recombine"]
        assert st.and_count == c["and"]
        assert st.depth_a == 1

    @pytest.mark.parametrize("m", [1, 2, 3, 8, 16, 33, 163])
    def test_dag_evaluates_to_product(self, m):
        rng = random.Random(m)
        circ, out = karatsuba_circuit(m)
        n = m + 1
        a = [rng.getrandbits(n) for _ in range(64)]
        b = [rng.getrandbits(n) for _ in range(64)]
        words = circ.evaluate(out, lanes_for(a, n) + lanes_for(b, n), width=64)
        for k in range(64):
            assert unlanes(words, k) == mul_schoolbook(BitPoly(a[k]), BitPoly(b[k])).value

    @pytest.mark.parametrize(
        "m, xors, ands, split_plus_middle",
        [(163, 22036, 4419, 17944), (283, 52900, 10305, 43162), (571, 162340, 31203, 132280)],
    )
    def test_frozen_counts(self, m, xors, ands, split_plus_middle):
        # frozen from the DAG above; split + middle alone equals the published multiplier column
        c = karatsuba_counts(m + 1)
        assert (c["split"] + c["middle"] + c["recombine"], c["and"]) == (xors, ands)
        assert c["split"] + c["middle"] == split_plus_middle

    def test_and_count_is_three_to_the_levels_for_powers_of_two(self):
        for k in range(1, 11):
            assert karatsuba_counts(1 << k)["and"] == 3**k

    def test_constant_series(self):
        series = karatsuba_constant_series(40)
        assert [m for m, _ in series] == list(range(2, 41))
        assert series[5] == (7, karatsuba_constant(7))
        assert karatsuba_constant(163) == pytest.approx(22036 / 163 ** math.log2(3))
        with pytest.raises(ValueError):
            karatsuba_constant_series(1)


class TestCostReport:
    def test_nist_163(self):
        r = cost_report(PentaShape(74, 15))
        assert (r.mul_xor, r.mul_and, r.red_xor) == (22036, 4419, 487)
        assert r.total_xor == r.mul_xor + r.red_xor
        assert r.red_depth_x == 3
        assert r.depth_x == r.mul_depth_x + 3
        assert r.csv_row() == [163, 74, 15, 22036, 4419, 487, 22523, r.depth_x]

    def test_571_reducer(self):
        assert cost_report(PentaShape(218, 135)).red_xor == 1711

    def test_same_degree_same_cost(self):
        a, b = cost_report(PentaShape(63, 37)), cost_report(PentaShape(74, 15))
        assert (a.mul_xor, a.mul_and, a.red_xor, a.depth_x) == (b.mul_xor, b.mul_and, b.red_xor, b.depth_x)

    def test_bound_flag(self):
        assert cost_report(PentaShape(2, 1)).within_bound
        assert not cost_report(PentaShape(74, 15)).within_bound


def test_enumerated_shapes_to_300_match_formula():
    for s in enumerate_family(300):
        assert trace_reduction(s).xor_count == reduction_xor_formula(s)
