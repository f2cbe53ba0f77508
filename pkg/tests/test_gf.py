import pickle

import pytest

from mindist import field_make, subfield_elements
from mindist.gf import FieldElement, is_prime


def test_prime_field_basics(f3, f5):
    two = f3.element(2)
    assert (two + two).value == 1
    assert (f3.element(1) - two).value == 2
    assert (f5.element(2).inverse()).value == 3
    assert (f5.element(4) ** 2).value == 1


def test_gf4_modulus_and_cubes(f4):
    assert f4.modulus == (1, 1, 1)  # x^2 + x + 1, lex smallest irreducible
    for x in f4.elements():
        if x.value:
            assert (x ** 3).value == 1
    g = f4.element(2)  # the class of x
    assert (g * g).value == f4.element(3).value  # x^2 = x + 1


def test_field_make_errors():
    with pytest.raises(ValueError):
        field_make(4)
    with pytest.raises(ValueError):
        field_make(6)
    with pytest.raises(ValueError):
        field_make(2, 17)  # 2^17 over the table bound
    with pytest.raises(ValueError):
        field_make(3, 0)


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 13]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(n) for n in (0, 1, 4, 9, 15, 21))


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)])
def test_field_axioms_exhaustive(p, e):
    spec = field_make(p, e)
    q = spec.q
    els = range(q)
    for a in els:
        assert spec.add_i(a, 0) == a
        assert spec.mul_i(a, 1) == a
        assert spec.add_i(a, spec.neg_i(a)) == 0
        if a:
            assert spec.mul_i(a, spec.inv_i(a)) == 1
    for a in els:
        for b in els:
            assert spec.add_i(a, b) == spec.add_i(b, a)
            assert spec.mul_i(a, b) == spec.mul_i(b, a)
            for c in els:
                assert spec.add_i(spec.add_i(a, b), c) == spec.add_i(a, spec.add_i(b, c))
                assert spec.mul_i(spec.mul_i(a, b), c) == spec.mul_i(a, spec.mul_i(b, c))
                assert spec.mul_i(a, spec.add_i(b, c)) == \
                    spec.add_i(spec.mul_i(a, b), spec.mul_i(a, c))


@pytest.mark.parametrize("p,e", [(2, 2), (3, 2), (2, 4), (3, 4), (2, 6)])
def test_frobenius_is_additive(p, e):
    spec = field_make(p, e)
    for a in range(spec.q):
        for b in range(spec.q):
            lhs = spec.pow_i(spec.add_i(a, b), p)
            rhs = spec.add_i(spec.pow_i(a, p), spec.pow_i(b, p))
            assert lhs == rhs


def test_nonzero_elements_have_order_dividing_q_minus_1():
    for p, e in [(2, 3), (3, 2), (5, 2), (2, 10)]:
        spec = field_make(p, e)
        for a in range(1, spec.q):
            assert spec.pow_i(a, spec.q - 1) == 1


@pytest.mark.parametrize("p,e,d", [(2, 2, 1), (3, 2, 1), (3, 1, 1), (2, 4, 2),
                                   (3, 4, 2), (2, 6, 3)])
def test_subfield_elements(p, e, d):
    spec = field_make(p, e)
    sub = subfield_elements(spec, d)
    assert len(sub) == p ** d
    vals = {x.value for x in sub}
    assert 0 in vals and 1 in vals
    for x in sub:
        for y in sub:
            assert (x * y).value in vals
            assert (x + y).value in vals


def test_subfield_rejects_non_divisor(f4):
    with pytest.raises(ValueError):
        subfield_elements(f4, 3)


def test_subfield_prime_field_is_everything(f3):
    assert {x.value for x in subfield_elements(f3, 1)} == {0, 1, 2}


def test_element_arithmetic_and_errors(f3, f5):
    a = f3.element(2)
    with pytest.raises(ValueError):
        a + f5.element(1)
    with pytest.raises(ZeroDivisionError):
        a / f3.zero
    assert (1 - a).value == 2
    assert (a ** -1) == a  # 2 is its own inverse mod 3
    assert int(-a) == 1
    assert a == 2 and a != 1
    assert hash(f3.element(2)) == hash(f3.element(2))


def test_extension_pow_negative_and_zero(f4):
    g = f4.element(2)
    assert (g ** 0).value == 1
    assert (g ** -1) * g == f4.one
    assert f4.zero ** 0 == f4.one


def test_coeff_roundtrip():
    f9 = field_make(3, 2)
    for v in range(9):
        assert f9.from_coeffs(f9.coeffs(v)) == v


def test_spec_cache_and_pickle(f4):
    assert field_make(2, 2) is f4
    clone = pickle.loads(pickle.dumps(f4))
    assert clone is f4  # __reduce__ routes through the cache
    el = pickle.loads(pickle.dumps(f4.element(3)))
    assert isinstance(el, FieldElement) and el.value == 3


def test_serialization_is_decimal_encoding(f4):
    # canonical wire form: the integer encoding
    assert str(f4.element(3).value) == "3"
