import random

import pytest

from mwpoly.classify import is_primitive, period
from mwpoly.gf2poly import PolyGF2, divrem, parse
from mwpoly.lfsr import impulse_seed
from mwpoly.maxweight import MaxWeightPoly, enumerate_mw
from mwpoly.oa import build_code, strength_direct, strength_dual, strength_report

from oracles import brute_min_dual_weight, brute_oa_strength, polys_of_degree

F3 = parse("x^3+x+1")


def primitives(m):
    return [f for f in polys_of_degree(m) if f & 1 and is_primitive(f)]


def test_build_code_examples():
    c = build_code(F3, 4)
    assert len(c) == 8 and c.rho == 7
    assert c.rows == (0, 3, 4, 7, 9, 10, 13, 14)
    assert build_code(F3, 3).rows == tuple(range(8))
    with pytest.raises(ValueError):
        build_code(parse("x^2+1"), 2)
    with pytest.raises(ValueError):
        build_code(F3, 8)
    with pytest.raises(ValueError):
        build_code(F3, 4, [0, 0, 0])


def test_build_code_zero_row_and_size():
    for m in (4, 5, 7):
        f = primitives(m)[0]
        for n in (m + 1, 2 * m):
            c = build_code(f, n)
            assert 0 in c.rows
            assert len(c) == (1 << m)


def test_build_code_non_primitive_single_cycle_seed():
    # x^4+x^3+x^2+x+1: irreducible, period 5; every nonzero seed runs one 5-cycle
    f = parse("x^4+x^3+x^2+x+1")
    c = build_code(f, 5, [1, 0, 0, 0])
    assert c.rho == 5 and len(c) == 6


def test_build_code_rejects_short_cycle_seed():
    # (x+1)(x^3+x+1): period 7; the all-ones seed is annihilated by x+1 and has period 1
    f = parse("x+1") * F3
    assert period(f) == 7
    with pytest.raises(ValueError, match="distinct windows"):
        build_code(f, 5, [1, 1, 1, 1])


def test_strength_direct_examples():
    assert strength_direct(build_code(F3, 3), 3) == 3
    assert strength_direct(build_code(F3, 4), 3) == 2


def test_strength_dual_examples():
    r = strength_dual(F3, 4)
    assert (r.strength, r.min_weight) == (2, 3)
    assert r.cofactor == PolyGF2(1) and r.witness == F3
    s, w, g = r
    assert (s, w, g) == (2, 3, F3)


def test_strength_dual_rejects():
    with pytest.raises(ValueError):
        strength_dual(parse("x^2+1"), 5)
    with pytest.raises(ValueError):
        strength_dual(parse("x^3+x"), 5)
    with pytest.raises(ValueError):
        strength_dual(F3, 3 + 29)


def test_strength_dual_trivial_dual():
    r = strength_dual(F3, 3)
    assert (r.strength, r.min_weight) == (3, 4)
    assert r.witness == PolyGF2(0)


def test_strength_dual_matches_brute_force():
    rng = random.Random(4)
    cases = 0
    for m in range(2, 8):
        for f in polys_of_degree(m):
            if not f & 1 or divrem(f, parse("x^2+1"))[1] == PolyGF2(0):
                continue
            try:
                r = strength_dual(f, m + rng.randint(1, 6))
            except ValueError:
                continue  # not squarefree
            cases += 1
            assert divrem(r.witness, f)[1] == PolyGF2(0)
            assert r.witness.weight == r.min_weight
            assert r.cofactor * PolyGF2(f) == r.witness
    assert cases > 50
    for f in [0b1011, 0b10011, 0b100101, 0b1011011]:
        for n in range(f.bit_length(), 2 * f.bit_length()):
            assert strength_dual(f, n).min_weight == brute_min_dual_weight(f, n)


def test_dual_floor_two_when_period_short():
    # x^4+x^3+x^2+x+1 has period 5, so x^5+1 lies in the dual once n >= 6
    f = parse("x^4+x^3+x^2+x+1")
    assert strength_dual(f, 6).min_weight == 2
    assert strength_dual(f, 5).min_weight == brute_min_dual_weight(f.bits, 5)


def test_direct_matches_counting_oracle():
    for m in (3, 4, 5, 6):
        for f in primitives(m)[:3]:
            for n in range(2, min(2 * m, (1 << m) - 1) + 1):
                c = build_code(f, n)
                t_max = min(4, n)
                assert strength_direct(c, t_max) == brute_oa_strength(c.rows, n, t_max), (f, n)


def test_cross_method_agreement_small():
    for m in range(3, 8):
        for f in primitives(m)[:4]:
            for n in range(m + 1, min(2 * m, m + 14) + 1):
                rep = strength_report(f, n, "both", 4)
                assert rep.agree, rep


def test_dual_weight_never_exceeds_weight_f():
    for m in range(3, 9):
        for f in primitives(m)[:5]:
            for n in range(m + 1, 2 * m + 1):
                assert strength_dual(f, n).min_weight <= PolyGF2(f).weight


def test_no_weight_two_below_period():
    for m in range(3, 12):
        for f in primitives(m)[:3]:
            n = 2 * m
            assert (1 << m) - 1 > n
            assert strength_dual(f, n).min_weight >= 3


def test_seed_independence():
    rng = random.Random(8)
    for p in [MaxWeightPoly(7, 1), MaxWeightPoly(9, 2)]:
        want = strength_direct(build_code(p, 2 * p.m), 4)
        rows = build_code(p, 2 * p.m).rows
        for _ in range(10):
            seed = [0] * p.m
            while not any(seed):
                seed = [rng.randint(0, 1) for _ in range(p.m)]
            c = build_code(p, 2 * p.m, seed)
            assert c.rows == rows
            assert strength_direct(c, 4) == want


def test_report_fields():
    rep = strength_report(F3, 4, "both", 3)
    d = rep.as_dict()
    assert set(d) == {"f", "n", "strength_direct", "t_max", "strength_dual",
                      "dual_min_weight", "witness", "witness_support", "cofactor"}
    assert d["witness_support"] == [1, 2, 4]
    assert set(strength_report(F3, 4, "direct").as_dict()) == {"f", "n", "strength_direct", "t_max"}
    assert strength_report(F3, 4, "dual").strength_direct is None
    with pytest.raises(ValueError):
        strength_report(F3, 4, "magic")


def test_strength_three_example_mw9():
    for p in enumerate_mw(9):
        if is_primitive(p.poly):
            r = strength_dual(p, 18)
            assert r.strength >= 3 and r.min_weight >= 4
            assert strength_direct(build_code(p, 18, impulse_seed(9)), 3) >= 3
