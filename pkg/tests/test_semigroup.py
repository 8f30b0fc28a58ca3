import pytest

from cuspsemi.semigroup import (
    AperyTable,
    GcdNotOneError,
    NumericalSemigroup,
    monoid_members,
)


def test_basic_invariants():
    s = NumericalSemigroup((6, 10, 15))
    assert s.multiplicity == 6
    assert s.conductor == 30
    assert s.frobenius == 29
    assert s.genus == 15
    assert s.is_symmetric()


def test_generators_normalized_and_sorted():
    s = NumericalSemigroup([15, 6, 10, 6])
    assert s.generators == (6, 10, 15)


def test_gcd_rejected():
    with pytest.raises(GcdNotOneError):
        NumericalSemigroup((4, 6))
    with pytest.raises(ValueError):
        NumericalSemigroup(())
    with pytest.raises(ValueError):
        NumericalSemigroup((0, 3))


def test_whole_line_semigroup():
    n = NumericalSemigroup((1,))
    assert n.conductor == 0
    assert n.frobenius == -1
    assert n.genus == 0
    assert n.gaps() == []
    # symmetry is not defined when there are no gaps
    with pytest.raises(ValueError):
        n.is_symmetric()


def test_membership_and_gaps():
    s = NumericalSemigroup((12, 15, 20))
    assert s.frobenius == 73
    assert s.genus == 37
    assert 35 in s
    assert 73 not in s
    assert all(x in s for x in range(74, 200))
    assert s.gaps_above(60) == 2
    assert len(s.gaps()) == s.genus


def test_gaps_above_quadruple():
    assert NumericalSemigroup((20, 28, 35)).gaps_above(140) == 8


def test_member_count_below():
    s = NumericalSemigroup((6, 10, 15))
    assert s.member_count_below(30) == 15
    assert s.member_count_below(36) == 21
    # past the conductor every integer is a member
    assert s.member_count_below(1000) == 1000 - s.genus


@pytest.mark.parametrize(
    "gens,expected",
    [
        ((6, 10, 15), (0, 25, 20, 15, 10, 35)),
        ((2, 3), (0, 3)),
    ],
)
def test_apery_entries(gens, expected):
    assert NumericalSemigroup(gens).apery().entries == expected


def test_apery_gap_count_identity():
    for gens in [(6, 10, 15), (8, 10, 12, 21, 25), (12, 15, 20), (3, 5, 7)]:
        s = NumericalSemigroup(gens)
        assert s.apery().gap_count() == s.genus


def test_apery_table_validates():
    with pytest.raises(ValueError):
        AperyTable(3, (0, 1))  # wrong length
    with pytest.raises(ValueError):
        AperyTable(3, (0, 2, 4))  # residue mismatch at index 1
    with pytest.raises(ValueError):
        AperyTable(3, (3, 4, 5))  # must start at 0


def test_factorizations_match_membership():
    s = NumericalSemigroup((6, 10, 15))
    for x in range(0, s.conductor + 16):
        facs = s.factorizations(x)
        assert (len(facs) > 0) == (x in s)
        for f in facs:
            assert sum(e * g for e, g in zip(f, s.generators)) == x


def test_factorizations_of_betti_element():
    s = NumericalSemigroup((6, 10, 15))
    assert set(s.factorizations(30)) == {(5, 0, 0), (0, 3, 0), (0, 0, 2)}
    assert s.betti_elements(60) == [30]


def test_betti_generic_five_generators():
    s = NumericalSemigroup((8, 10, 12, 21, 25))
    betti = s.betti_elements(s.conductor + max(s.generators))
    # every betti element has at least two factorizations
    for b in betti:
        assert len(s.factorizations(b)) >= 2


def test_symmetry_versus_gap_count():
    # symmetric iff 2g = F + 1, checked on a mixed bag
    for gens in [(6, 10, 15), (12, 15, 20), (4, 5), (8, 10, 12, 21, 25), (3, 5, 7)]:
        s = NumericalSemigroup(gens)
        assert s.is_symmetric() == (2 * s.genus == s.frobenius + 1)


def test_semantic_equality():
    assert NumericalSemigroup((4, 5)) == NumericalSemigroup((4, 5, 13))
    # 31 = 6 + 10 + 15 is already a member; 29 is the frobenius number
    assert NumericalSemigroup((6, 10, 15)) == NumericalSemigroup((6, 10, 15, 31))
    assert NumericalSemigroup((6, 10, 15)) != NumericalSemigroup((6, 10, 15, 29))
    assert hash(NumericalSemigroup((4, 5))) == hash(NumericalSemigroup((4, 5, 13)))


def test_monoid_members_allows_common_factor():
    assert monoid_members((4, 6), 21) == {0, 4, 6, 8, 10, 12, 14, 16, 18, 20}


def test_closure_sample():
    s = NumericalSemigroup((7, 11, 13))
    members = [x for x in range(0, 2 * s.conductor) if x in s]
    for x in members[:40]:
        for y in members[:40]:
            assert (x + y) in s


def test_contains_negative():
    s = NumericalSemigroup((4, 5))
    assert -3 not in s
    assert 0 in s
