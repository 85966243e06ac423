from fractions import Fraction

import pytest

from dedsum.confrac import ContinuedFraction, alt_sum, cf_eval, cf_expand, digit_sum, euclid_digits
from dedsum.exactmath import CoprimePair, DomainError, mod_inverse
from oracles import cf_by_fractions, coprime_pairs


def eval_digits(digits):
    x = Fraction(0)
    for d in reversed(digits):
        x = 1 / (d + x)
    return x


def test_raw_expansion_matches_fraction_oracle():
    assert euclid_digits(15, 49) == cf_by_fractions(15, 49) == [3, 3, 1, 3]
    assert euclid_digits(2, 15) == [7, 2]
    for a, b in coprime_pairs(150):
        assert euclid_digits(a, b) == cf_by_fractions(a, b)


@pytest.mark.parametrize("a, b, digits", [
    (1, 7, (7,)),
    (1, 49, (49,)),
    (15, 49, (3, 3, 1, 2, 1)),
    (2, 15, (7, 1, 1)),
    (4, 15, (3, 1, 3)),
])
def test_cf_expand_examples(a, b, digits):
    assert cf_expand(a, b).digits == digits
    assert eval_digits(digits) == Fraction(a, b)


def test_even_length_ending_in_one_merges():
    # 3/5 = [0; 1, 1, 2] already odd; 2/3 = [0; 1, 2] -> [0; 1, 1, 1]
    assert cf_expand(2, 3).digits == (1, 1, 1)
    # 5/8 = [0; 1, 1, 1, 2] -> [0; 1, 1, 1, 1, 1]
    assert cf_expand(5, 8).digits == (1, 1, 1, 1, 1)
    # 1/2 = [0; 2] odd already
    assert cf_expand(1, 2).digits == (2,)


def test_cf_eval_examples():
    assert cf_eval(ContinuedFraction((11,))) == CoprimePair(1, 11)
    assert cf_eval(ContinuedFraction((3, 3, 1, 2, 1))) == CoprimePair(15, 49)
    assert cf_eval(ContinuedFraction((7, 1, 1))) == CoprimePair(2, 15)


@pytest.mark.parametrize("args", [(15, 15), (16, 15), (0, 15), (3, 15)])
def test_cf_expand_domain(args):
    with pytest.raises(DomainError):
        cf_expand(*args)


def test_bad_continued_fraction_rejected():
    with pytest.raises(DomainError):
        ContinuedFraction((1, 2))
    with pytest.raises(DomainError):
        ContinuedFraction((1, 0, 2))


def test_alt_and_digit_sum_examples():
    assert alt_sum(1, 23) == digit_sum(1, 23) == 23
    assert alt_sum(15, 49) == 0
    assert digit_sum(15, 49) == 10
    assert alt_sum(4, 15) == 5
    assert digit_sum(4, 15) == 7
    assert alt_sum(2, 15) == 7


def test_reduction_and_b1_convention():
    assert alt_sum(15 + 49, 49) == alt_sum(15, 49)
    assert digit_sum(15 + 3 * 49, 49) == 10
    assert alt_sum(5, 1) == digit_sum(5, 1) == 0
    with pytest.raises(DomainError):
        alt_sum(7, 14)


def test_properties_exhaustive():
    for a, b in coprime_pairs(500):
        cf = cf_expand(a, b)
        assert len(cf) % 2 == 1
        assert cf_eval(cf) == CoprimePair(a, b)
        assert (cf.alt_sum - cf.digit_sum) % 2 == 0
        assert abs(cf.alt_sum) <= cf.digit_sum
        assert cf.alt_sum == alt_sum(mod_inverse(a, b), b)
