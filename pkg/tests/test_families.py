from pathlib import Path

import pytest

from rookpy.triplet import Ambient, Triplet, ZERO, ValidationError, power, multiply
from rookpy.families import (Family, NotInFamilyError, NoFormulaError, enumerateFamily,
                             orderFormula, countIdempotents, countNilpotents,
                             tallyClassifications, closure, generatingSetA, rankSUT,
                             expressAsPower, verifyMinimality, rootsOfZero, transposeSet,
                             cayleyTable, isCommutative, formatCayleyCsv, formatCayleyAscii,
                             S2_LABELS, S2_ORDER)

GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

FORMULA_TAGS = ['Mn', 'Sn', 'UT', 'SUT', 'UF', 'SUF', 'LT', 'SLT', 'LF', 'SLF', 'D', 'B']


def fam(text):
    return Family.parse(text)

def members(n, text):
    return set(enumerateFamily(n, fam(text)))


def test_enumerate_examples():
    assert enumerateFamily(2, fam('Sn')) == [ZERO, Triplet(-1, 2, 2), Triplet(0, 1, 1),
                                             Triplet(0, 2, 2), Triplet(1, 1, 1)]
    assert len(enumerateFamily(3, fam('SUT'))) == 5
    assert len(enumerateFamily(4, fam('UF'))) == 5

def test_mn_order_formula_up_to_50():
    for n in range(2, 51):
        assert len(enumerateFamily(n, fam('Mn'))) == (2 * n ** 3 + 3 * n ** 2 + n) // 6 + 1

def test_spot_orders():
    assert orderFormula(2, fam('Mn')) == 6
    assert orderFormula(2, fam('Sn')) == 5
    assert orderFormula(3, fam('Sn')) == 14
    assert orderFormula(3, fam('D')) == 7
    assert orderFormula(3, fam('B')) == 10

@pytest.mark.parametrize("tag", FORMULA_TAGS)
def test_order_formulas_match_enumeration(tag):
    for n in range(2, 21):
        assert len(enumerateFamily(n, fam(tag))) == orderFormula(n, fam(tag))

def test_embedded_mj():
    # M_3 sits in the top-left corner of M_5, identity included
    assert members(5, 'Mj(3)') == set(enumerateFamily(3, fam('Mn')))
    assert orderFormula(5, fam('Mj(3)')) == 15
    assert len(enumerateFamily(5, fam('Mj(3)'))) == 15

@pytest.mark.parametrize("text", ['MultipleOfD0(2)', 'AtLeastD0(1)', 'AtMostJOnes(2)',
                                  'ZeroFirstRowCol', 'ZeroFirstRowLastCol'])
def test_no_formula_for_extra_families(text):
    with pytest.raises(NoFormulaError):
        orderFormula(4, fam(text))

@pytest.mark.parametrize("text, n", [
    ('MultipleOfD0(0)', 4), ('AtLeastD0(4)', 4), ('AtMostJOnes(1)', 3),
    ('AtMostJOnes(5)', 4), ('Mj(4)', 4),
])
def test_family_parameter_ranges(text, n):
    with pytest.raises(ValidationError):
        enumerateFamily(n, fam(text))

def test_family_parsing():
    assert fam(' MultipleOfD0( 2 ) ') == Family('MultipleOfD0', 2)
    assert str(fam('AtMostJOnes(3)')) == 'AtMostJOnes(3)'
    for bad in ('Nope', 'UT(2)', 'AtLeastD0', 'AtLeastD0(x)'):
        with pytest.raises(ValidationError):
            fam(bad)

def test_extra_family_members():
    assert members(3, 'ZeroFirstRowCol') == set([ZERO, Triplet(0, 2, 2), Triplet(0, 2, 3),
                                                  Triplet(0, 3, 3), Triplet(1, 2, 2),
                                                  Triplet(-1, 3, 3)])
    assert all(x.isZero or x.m - x.k + 1 <= 2 for x in members(4, 'AtMostJOnes(2)'))
    assert all(x.isZero or x.d % 2 == 0 for x in members(5, 'MultipleOfD0(2)'))


def test_counts():
    assert (countIdempotents(2), countNilpotents(2)) == (3, 3)
    assert (countIdempotents(3), countNilpotents(3)) == (6, 9)
    for n in range(2, 31):
        assert tallyClassifications(n) == (countIdempotents(n), countNilpotents(n))


def test_shift_generates_suf_and_its_transpose_slf():
    for n in range(2, 13):
        suf = closure(set([Triplet(1, 1, n - 1)]), n)
        assert suf == members(n, 'SUF')
        assert len(suf) == n
        assert closure(set([Triplet(-1, 2, n)]), n) == members(n, 'SLF')
    amb = Ambient(7)
    assert members(7, 'SUF') == set([ZERO] + [power(Triplet(1, 1, 6), j, amb) for j in range(1, 7)])

def test_generating_set_a():
    assert generatingSetA(3) == set([Triplet(1, 1, 1), Triplet(1, 1, 2), Triplet(1, 2, 2)])
    assert generatingSetA(2) == set([Triplet(1, 1, 1)])
    assert len(generatingSetA(4)) == rankSUT(4) == 6

@pytest.mark.parametrize("n", range(2, 9))
def test_a_generates_sut_minimally(n):
    assert closure(generatingSetA(n), n) == members(n, 'SUT')
    assert verifyMinimality(n)

def test_express_as_power_examples():
    assert expressAsPower(Triplet(3, 2, 3), 6) == (Triplet(1, 2, 5), 3)
    assert expressAsPower(ZERO, 4) == (Triplet(1, 1, 1), 2)
    assert expressAsPower(Triplet(1, 2, 2), 3) == (Triplet(1, 2, 2), 1)
    with pytest.raises(NotInFamilyError):
        expressAsPower(Triplet(0, 1, 1), 3)
    with pytest.raises(NotInFamilyError):
        expressAsPower(Triplet(-1, 2, 2), 3)

@pytest.mark.parametrize("n", range(2, 9))
def test_every_sut_element_is_a_generator_power(n):
    amb = Ambient(n)
    gens = generatingSetA(n)
    for x in members(n, 'SUT'):
        (g, e) = expressAsPower(x, n)
        assert g in gens
        assert power(g, e, amb) == x

def test_roots_of_zero():
    assert set(rootsOfZero(2, 2)) == set([ZERO, Triplet(1, 1, 1), Triplet(-1, 2, 2)])


@pytest.mark.parametrize("n", range(2, 7))
def test_every_family_is_closed(n):
    tags = FORMULA_TAGS + ['ZeroFirstRowCol', 'ZeroFirstRowLastCol']
    tags += ['MultipleOfD0(%d)' % p for p in range(1, n)]
    tags += ['AtLeastD0(%d)' % p for p in range(1, n)]
    tags += ['AtMostJOnes(%d)' % p for p in range(2, n + 1)]
    tags += ['Mj(%d)' % p for p in range(2, n)]
    for text in tags:
        assert cayleyTable(n, fam(text)).isClosed(), text

@pytest.mark.parametrize("tag", ['UT', 'SUT', 'UF', 'SUF', 'D', 'B'])
def test_family_transposes(tag):
    for n in range(2, 7):
        assert transposeSet(members(n, tag)) == set(enumerateFamily(n, fam(tag).transposed()))

def test_untransposable_families():
    assert fam('AtLeastD0(1)').transposed() is None
    assert fam('ZeroFirstRowLastCol').transposed() is None

@pytest.mark.parametrize("n", range(3, 7))
def test_commutativity_flags(n):
    for tag in ('UF', 'SUF', 'LF', 'SLF', 'D'):
        assert isCommutative(cayleyTable(n, fam(tag))), tag
    for tag in ('UT', 'SUT', 'LT', 'SLT'):
        assert not isCommutative(cayleyTable(n, fam(tag))), tag

def test_diagonal_is_upper_and_lower_triangular():
    for n in range(2, 7):
        assert members(n, 'D') == members(n, 'UT') & members(n, 'LT')
        assert members(n, 'UF') & members(n, 'LF') == set([ZERO, Triplet(0, 1, n)])

def test_d2_without_identity_is_a_semilattice():
    table = cayleyTable(2, fam('D'))
    (e, one, f) = (Triplet(0, 1, 1), Triplet(0, 1, 2), Triplet(0, 2, 2))
    assert table.elements == [ZERO, e, one, f]
    assert [[table.product(x, y) for y in (ZERO, e, f)] for x in (ZERO, e, f)] == \
        [[ZERO, ZERO, ZERO], [ZERO, e, ZERO], [ZERO, ZERO, f]]

def test_b_follows_brandt_rule():
    # single entries (k,p)(k',p') = (k,p') iff k' = p
    n = 4
    amb = Ambient(n)
    singles = members(n, 'B') - set([ZERO])
    for x in singles:
        for y in singles:
            (k, p) = (x.k, x.k + x.d)
            (k1, p1) = (y.k, y.k + y.d)
            z = multiply(x, y, amb)
            if k1 == p:
                assert (z.k, z.k + z.d) == (k, p1)
            else:
                assert z is ZERO


def test_s2_table_matches_golden():
    table = cayleyTable(2, fam('Sn'))
    expected = (GOLDEN_DIR / "cayley_S2.txt").read_text()
    assert formatCayleyAscii(table, S2_LABELS, S2_ORDER) == expected

def test_s2_csv_matches_golden():
    expected = (GOLDEN_DIR / "cayley_S2.csv").read_text()
    assert formatCayleyCsv(cayleyTable(2, fam('Sn'))) == expected

def test_s2_is_the_brandt_monoid_b2():
    (a, b, e, f) = S2_ORDER[1:]
    table = cayleyTable(2, fam('Sn'))
    assert table.product(a, b) == e and table.product(b, a) == f
    assert table.product(e, a) == a and table.product(a, f) == a
    assert table.product(a, a) is ZERO and table.product(b, b) is ZERO
    assert set(table.elements) == members(2, 'B')

def test_plain_ascii_table_uses_canonical_forms():
    text = formatCayleyAscii(cayleyTable(2, fam('D')))
    lines = text.splitlines()
    assert lines[0] == "        |       0 <0,1,1> <0,1,2> <0,2,2>"
    assert lines[1] == "--------+-" + "-" * 31
    assert lines[3] == "<0,1,1> |       0 <0,1,1> <0,1,1>       0"

def test_reordering_needs_a_permutation():
    table = cayleyTable(2, fam('D'))
    with pytest.raises(ValidationError):
        table.reordered([ZERO])
    swapped = table.reordered(list(reversed(table.elements)))
    assert swapped.products[0][0] == Triplet(0, 2, 2)
