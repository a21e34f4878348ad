from fractions import Fraction

import pytest
from hypothesis import given

from matorder.scalar import (CF64, GAUSS, INT, RAT, DomainError, GaussianRational, ModDomain, domain_from_tag,
                             is_prime, mod)

from strategies import gauss_vals


def test_mod_canonical_representatives():
    Z5 = mod(5)
    assert Z5.coerce(-1) == 4
    assert Z5.coerce(12) == 2
    assert Z5.inv(2) == 3
    assert Z5.is_field and not mod(4).is_field


def test_mod_rejects_bad_modulus_and_noninvertible():
    with pytest.raises(DomainError):
        ModDomain(0)
    with pytest.raises(DomainError):
        mod(4).inv(2)


def test_mod_parser_rejects_out_of_range():
    assert mod(3).parse("2") == 2
    with pytest.raises(ValueError):
        mod(3).parse("3")


def test_rational_lowest_terms():
    x = RAT.parse("-6/4")
    with pytest.raises(ValueError):
        RAT.parse("6/-4")
    assert x == Fraction(-3, 2) and x.denominator == 2


def test_gauss_parse_and_format_roundtrip():
    for tok in ["1/2+3i", "-i", "2", "1/3-2/5i", "i", "0"]:
        v = GAUSS.parse(tok)
        assert GAUSS.parse(GAUSS.format(v)) == v


def test_gauss_i_squared():
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)
    assert i.conjugate() == GaussianRational(0, -1)
    assert (GaussianRational(3, 4)).norm2() == 25


def test_cf64_rejects_nonfinite():
    with pytest.raises(DomainError):
        CF64.coerce(float("nan"))
    with pytest.raises(DomainError):
        CF64.coerce(complex(float("inf"), 0))


def test_cf64_parse():
    assert CF64.parse("1.5-2i") == complex(1.5, -2)
    assert CF64.parse("-i") == complex(0, -1)
    assert CF64.parse("3e-2") == 0.03


def test_domain_tags():
    for d in (INT, RAT, GAUSS, CF64, mod(7)):
        assert domain_from_tag(d.tag) == d
    with pytest.raises(DomainError):
        domain_from_tag("quaternion")


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


@given(gauss_vals, gauss_vals, gauss_vals)
def test_gauss_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b:
        assert (a / b) * b == a


@given(gauss_vals)
def test_gauss_hash_consistent_with_rationals(a):
    if a.im == 0:
        assert a == a.re and hash(a) == hash(a.re)
