import pytest

from mwpoly.divisibility import (
    TABLE1,
    TrinomialHit,
    compare_with_table1,
    corollary1_sweep,
    table1_divisors,
    table1_expected,
    trinomial_multiples,
    verify_table1,
)
from mwpoly.gf2poly import PolyGF2, parse, reciprocal
from mwpoly.maxweight import MaxWeightPoly, enumerate_mw

from oracles import brute_trinomial_multiples, polys_of_degree

P = parse


def ab(hits):
    return [(h.g.degree, h.g.exponents()[1]) for h in hits]


def test_mw72_has_exactly_the_table_row():
    hits = trinomial_multiples(MaxWeightPoly(7, 2), 14)
    assert [str(h.g) for h in hits] == ["x^14+x^13+1"]
    assert hits[0].h == P("x^7+x^5+x^2+x+1")


@pytest.mark.parametrize("l", range(1, 9))
def test_degree_9_has_no_trinomial_multiples(l):
    assert trinomial_multiples(MaxWeightPoly(9, l), 18) == []


def test_x3_x_1_up_to_degree_6_matches_oracle():
    hits = trinomial_multiples(P("x^3+x+1"), 6)
    assert ab(hits) == brute_trinomial_multiples(0b1011, 6) == [(3, 1), (5, 4), (6, 2)]
    assert P("x^5+x^4+1") in [h.g for h in hits]


def test_ordering_and_cofactors():
    f = P("x^4+x+1")
    hits = trinomial_multiples(f, 40)
    pairs = ab(hits)
    assert pairs == sorted(pairs)
    for h in hits:
        assert h.f * h.h == h.g
        assert h.g.degree == h.f.degree + h.h.degree


def test_preconditions():
    with pytest.raises(ValueError):
        trinomial_multiples(P("x^3+x"), 6)
    with pytest.raises(ValueError):
        trinomial_multiples(P("1"), 6)
    with pytest.raises(ValueError):
        trinomial_multiples(P("x^5+x^2+1"), 4)


def test_hit_rejects_unverified_triples():
    with pytest.raises(ValueError):
        TrinomialHit(P("x^5+x^4+1"), P("x^3+x+1"), P("x^2+1"))
    with pytest.raises(ValueError):
        TrinomialHit(P("x^4+x^3+x+1"), P("x+1"), P("x^3+1"))


def test_search_equals_oracle_all_f_to_degree_7():
    for d in range(1, 8):
        for f in polys_of_degree(d):
            if f & 1:
                assert ab(trinomial_multiples(f, 2 * d)) == brute_trinomial_multiples(f, 2 * d), bin(f)


def test_table1_rows_hold():
    for g, f, h in TABLE1:
        assert P(f) * P(h) == P(g)
        assert P(g).weight == 3


def test_table1_expected_size():
    # 7 rows + 7 reciprocal images, no coincidences on (g, f)
    assert len(table1_expected()) == 14


def test_verify_table1_contains_listed_examples():
    found = {(str(h.g), str(h.f), str(h.h)) for h in verify_table1()}
    assert ("x^5+x^4+1", "x^3+x+1", "x^2+x+1") in found
    assert ("x^13+x^10+1", str(MaxWeightPoly(7, 1).poly), "x^6+x^5+x^3+x^2+1") in found
    r = (reciprocal(P("x^9+x^7+1")), MaxWeightPoly(5, 1).poly, reciprocal(P("x^4+x+1")))
    assert r == (P("x^9+x^2+1"), P("x^5+x^4+x^3+x^2+1"), P("x^4+x^3+1"))
    assert tuple(map(str, r)) in found
    # MW(5,1) has two distinct trinomial multiples
    assert sum(1 for h in verify_table1() if h.f == MaxWeightPoly(5, 1).poly) == 2


def test_verify_table1_discrepancy_is_exactly_the_trivial_self_multiples():
    missing, extra = compare_with_table1(verify_table1())
    assert missing == []
    # MW(3,1) and MW(3,2) are trinomials themselves: g = f, h = 1
    assert [(str(h.g), str(h.f), str(h.h)) for h in extra] == [
        ("x^3+x+1", "x^3+x+1", "1"),
        ("x^3+x^2+1", "x^3+x^2+1", "1"),
    ]


def test_every_found_divisor_is_a_table_divisor():
    divisors = table1_divisors()
    assert all(h.f in divisors for h in verify_table1())


def test_nontrivial_hits_equal_table_and_have_3_or_5_terms():
    hits = [h for h in verify_table1() if h.h != PolyGF2(1)]
    assert {h.key for h in hits} == {h.key for h in table1_expected()}
    assert all(h.h.weight in (3, 5) for h in hits)


def test_reciprocal_closure_over_table_sweep():
    found = {h.key for h in verify_table1()}
    for h in verify_table1():
        assert h.reciprocal().key in found


def test_corollary1_sweep_counts():
    rep = corollary1_sweep(9, 9)
    assert rep.total == 8 and rep.hits == []
    rep = corollary1_sweep(9, 25)
    assert rep.total == sum(m - 1 for m in range(9, 26, 2)) == 144
    assert rep.hits == [] and not rep.falsified
    assert rep.checked[0] == (9, 1) and rep.checked[-1] == (25, 24)


def test_corollary1_sweep_skips_even_and_rejects_small():
    assert corollary1_sweep(10, 11).total == 10
    with pytest.raises(ValueError):
        corollary1_sweep(7, 9)


def _set_missing_bit(m, l, f):
    return f.bits | (1 << l)


def _trinomial_divisor(m, l, f):
    return (1 << m) | (1 << l) | 1


def test_mutation_setting_missing_bit():
    # the all-ones polynomial divides x^{m+1}+1 but no trinomial of degree <= 2m
    rep = corollary1_sweep(9, 13, mutate=_set_missing_bit)
    assert rep.hits == []


def test_mutation_with_trinomial_divisors_is_detected():
    rep = corollary1_sweep(9, 11, mutate=_trinomial_divisor)
    assert rep.falsified
    # each trinomial divisor is at least its own multiple
    assert len(rep.hits) >= rep.total
    assert rep.as_dict()["hit_count"] == len(rep.hits)


def test_corollary1_parallel_matches_serial():
    a = corollary1_sweep(9, 15, jobs=1, mutate=_trinomial_divisor)
    b = corollary1_sweep(9, 15, jobs=2, mutate=_trinomial_divisor)
    assert a.as_dict() == b.as_dict()


def test_cofactor_weight_on_table_range():
    for m in (3, 5, 7):
        for p in enumerate_mw(m):
            for h in trinomial_multiples(p, 2 * m):
                if h.g != h.f:
                    assert h.h.weight in (3, 5)
