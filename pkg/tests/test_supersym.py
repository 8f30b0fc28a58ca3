import os
from fractions import Fraction

import pytest

from cuspsemi import supersym, verify
from cuspsemi.semigroup import NumericalSemigroup
from cuspsemi.supersym import (
    NotApplicableError,
    SimplexSpec,
    SupersymTriple,
)


def test_triple_validation():
    t = SupersymTriple(3, 4, 5)
    assert t.pairwise_products == (12, 15, 20)
    assert t.product == 60
    with pytest.raises(ValueError):
        SupersymTriple(1, 2, 3)
    with pytest.raises(ValueError):
        SupersymTriple(3, 3, 5)
    with pytest.raises(ValueError):
        SupersymTriple(2, 4, 5)  # not pairwise coprime


def test_coprime_triples_enumeration():
    triples = list(supersym.coprime_triples(200))
    assert (2, 3, 5) in triples
    assert (2, 3, 33) not in triples  # gcd(3, 33) > 1
    assert all(a * b * c <= 200 for a, b, c in triples)
    assert triples == sorted(triples)
    assert list(supersym.coprime_triples(90, min_a=3)) == [(3, 4, 5), (3, 4, 7)]


def test_closed_forms_match_sieve():
    for a, b, c in supersym.coprime_triples(900):
        s = supersym.supersym_semigroup(a, b, c)
        assert s.frobenius == supersym.frobenius_formula(a, b, c)
        assert s.genus == supersym.genus_formula(a, b, c)
        assert s.is_symmetric()


def test_rho_spot_values():
    assert supersym.rho(2, 3, 5) == 0
    assert supersym.rho(3, 4, 5) == 2
    assert supersym.rho(4, 5, 7) == 8


def test_rho_two_routes_agree():
    for a, b, c in supersym.coprime_triples(1200):
        assert supersym.rho(a, b, c) >= 0  # raises MethodMismatchError on split


def test_rho_simplex_empty_when_gapless():
    assert supersym.rho_simplex(2, 3, 5) is None
    spec = supersym.rho_simplex(4, 5, 7)
    assert spec == SimplexSpec(Fraction(57, 20), Fraction(57, 28), Fraction(57, 35))


def test_lattice_count_examples():
    assert supersym.lattice_count(SimplexSpec(1, 1, 1)) == 4
    spec = SimplexSpec(Fraction(13, 12), Fraction(13, 15), Fraction(13, 20))
    assert supersym.lattice_count(spec) == 2
    with pytest.raises(ValueError):
        SimplexSpec(1, 0, 1)


def test_yz_bounds_on_rho_simplex():
    spec = supersym.rho_simplex(4, 5, 7)
    assert supersym.yz_hypothesis(spec)
    count = supersym.lattice_count(spec)
    weak = supersym.yz_weak_bound(spec)
    strong = supersym.yz_strong_bound(spec)
    assert count <= strong <= weak or count <= strong  # weak may be looser
    assert strong == Fraction(12)
    # out-of-hypothesis simplex is flagged, not rejected
    small = supersym.rho_simplex(3, 4, 5)
    assert not supersym.yz_hypothesis(small)
    assert supersym.yz_weak_bound(small) > 0


def test_normal_form_and_membership():
    assert supersym.abc_normal_form(3, 4, 5, 0) == (0, 0, 0)
    assert supersym.abc_normal_form(3, 4, 5, 1) == (3, 3, -4)
    assert supersym.abc_normal_form(3, 4, 5, 61) == (3, 3, -1)
    assert supersym.abc_normal_form(3, 4, 5, 60) == (0, 0, 3)
    s = NumericalSemigroup((12, 15, 20))
    for n in range(0, 160):
        assert supersym.abc_member(3, 4, 5, n) == (n in s)


def test_normal_form_bounds():
    for n in range(-5, 200, 7):
        x, y, z = supersym.abc_normal_form(3, 5, 7, n)
        assert 0 <= x < 7 and 0 <= y < 5
        assert 15 * x + 21 * y + 35 * z == n


def test_all_factorizations():
    facs = supersym.abc_all_factorizations(3, 4, 5, 60)
    assert set(facs) == {(5, 0, 0), (0, 4, 0), (0, 0, 3)}
    s = NumericalSemigroup((12, 15, 20))
    for n in (0, 12, 27, 47, 60, 120):
        direct = set(s.factorizations(n))
        shifted = set(supersym.abc_all_factorizations(3, 4, 5, n))
        assert direct == shifted


def test_unique_factorization_below_abc():
    for a, b, c in [(2, 3, 5), (3, 4, 5), (3, 5, 7)]:
        s = supersym.supersym_semigroup(a, b, c)
        for n in range(a * b * c):
            if n in s:
                assert len(supersym.abc_all_factorizations(a, b, c, n)) == 1


def test_residue_triples():
    assert tuple(supersym.residue_triple(3, 5, 7)) == (2, 1, 1)
    assert tuple(supersym.residue_triple(3, 4, 5)) == (2, 3, 3)


def test_min_congruent_one():
    assert supersym.min_congruent_one(3, 5, 7) == 106  # = abc + 1
    assert supersym.min_congruent_one(3, 4, 5) == 121  # = 2 abc + 1
    for a, b, c in supersym.coprime_triples(800):
        value = supersym.min_congruent_one(a, b, c)
        abc = a * b * c
        assert value in (abc + 1, 2 * abc + 1)
        assert supersym.abc_member(a, b, c, value)


def test_s_prime_formulas():
    sp = supersym.s_prime(3, 4, 5)
    assert sp.generators == (12, 15, 20, 61)
    assert (supersym.genus_s_prime(3, 4, 5), supersym.frobenius_s_prime(3, 4, 5)) == (35, 58)
    assert (sp.genus, sp.frobenius) == (35, 58)
    sp2 = supersym.s_prime(4, 5, 7)
    assert (sp2.genus, sp2.frobenius) == (96, 177)
    assert supersym.genus_s_prime(4, 5, 7) == 96
    assert supersym.frobenius_s_prime(4, 5, 7) == 177


def test_s_prime_not_applicable_when_abc_plus_one_inside():
    # 106 = abc + 1 is already a member for (3,5,7)
    assert supersym.abc_plus_one_is_member(3, 5, 7)
    with pytest.raises(NotApplicableError):
        supersym.s_prime(3, 5, 7)
    with pytest.raises(NotApplicableError):
        supersym.genus_s_prime(3, 5, 7)


def test_surrogate_generic_genus():
    # counts abc - |members below abc|, the generic gap count
    g = supersym.surrogate_generic_genus(3, 4, 5)
    s = NumericalSemigroup((12, 15, 20))
    assert g == 60 - s.member_count_below(60)


def test_generic_contains_abc_plus():
    one, two = supersym.generic_contains_abc_plus(2, 3, 5, seed=0)
    assert one and two


@pytest.mark.skipif(
    not os.environ.get("CUSPSEMI_SLOW"),
    reason="full factorization-graph sweep takes minutes; set CUSPSEMI_SLOW=1",
)
def test_betti_full_sweep():
    assert verify.check_betti_supersym(max_abc=2000).passed
