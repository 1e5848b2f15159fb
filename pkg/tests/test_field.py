"""Field arithmetic against independent oracles.

Prime fields are checked exhaustively against plain modular integers;
extension fields against polynomial identities (Frobenius, Fermat, order
counts) that do not reuse the implementation under test.
"""

import pytest

from qlrc import Field, FieldElement, Xorshift64Star, field_from_descriptor
from qlrc.errors import InputError
from qlrc.field import (
    FieldMismatch,
    FieldTooLarge,
    NotPrime,
    ReducibleModulus,
    ZeroInverse,
)


def test_default_moduli_are_canonical_smallest():
    # frozen: smallest irreducible by ascending integer encoding
    expected = {
        (2, 2): (1, 1, 1),
        (2, 3): (1, 1, 0, 1),
        (2, 4): (1, 1, 0, 0, 1),
        (2, 5): (1, 0, 1, 0, 0, 1),
        (3, 2): (1, 0, 1),
        (3, 3): (1, 2, 0, 1),
        (5, 2): (2, 0, 1),
    }
    for (p, m), mod in expected.items():
        assert Field(p, m).modulus == mod


def test_modulus_is_verified_irreducible():
    with pytest.raises(ReducibleModulus):
        Field(2, 4, [1, 0, 0, 0, 1])  # x^4 + 1 = (x + 1)^4
    with pytest.raises(ReducibleModulus):
        Field(3, 2, [1, 2, 1])  # (x + 1)^2
    with pytest.raises(InputError):
        Field(3, 2, [1, 0, 0, 1])  # wrong degree
    Field(2, 5, [1, 0, 0, 1, 0, 1])  # x^5 + x^3 + 1: a valid alternative


def test_bad_parameters_rejected():
    with pytest.raises(NotPrime):
        Field(6, 1)
    with pytest.raises(NotPrime):
        Field(1, 3)
    with pytest.raises(FieldTooLarge):
        Field(2, 21)


def test_prime_field_matches_int_arithmetic():
    f = Field(7, 1)
    for av in range(7):
        for bv in range(7):
            a, b = f.from_value(av), f.from_value(bv)
            assert (a + b).value() == (av + bv) % 7
            assert (a - b).value() == (av - bv) % 7
            assert (a * b).value() == (av * bv) % 7
            if bv:
                assert (a / b).value() == (av * pow(bv, 5, 7)) % 7


def test_every_nonzero_element_has_inverse():
    for p, m in [(2, 4), (3, 2), (5, 2)]:
        f = Field(p, m)
        one = f.one()
        for e in f.elements():
            if e.is_zero():
                with pytest.raises(ZeroInverse):
                    e.inv()
            else:
                assert e * e.inv() == one
                assert e / e == one


def test_fermat_and_frobenius():
    """a^q = a for all a, and x -> x^p is additive (exhaustive, GF(16), GF(27))."""
    for p, m in [(2, 4), (3, 3)]:
        f = Field(p, m)
        q = p**m
        for a in f.elements():
            assert a**q == a
        for a in f.elements():
            for b in f.elements():
                assert (a + b) ** p == a**p + b**p


def test_pow_negative_exponent():
    f = Field(3, 2)
    a = f.gen()
    assert a**-1 == a.inv()
    assert a**-3 == (a * a * a).inv()
    assert a**0 == f.one()


def test_primitive_element_frozen_and_maximal_order():
    frozen = {(2, 3): 2, (2, 4): 2, (2, 5): 2, (3, 2): 4, (3, 3): 3, (5, 2): 6, (7, 1): 3}
    for (p, m), val in frozen.items():
        f = Field(p, m)
        g = f.primitive_element()
        assert g.value() == val
        q = p**m
        seen = set()
        x = f.one()
        for _ in range(q - 1):
            seen.add(x.value())
            x = x * g
        assert len(seen) == q - 1  # g generates the whole multiplicative group


def test_quadratic_residues_gf7():
    f = Field(7, 1)
    qrs = sorted(e.value() for e in f.elements() if not e.is_zero() and f.is_quadratic_residue(e))
    assert qrs == [1, 2, 4]


def test_char2_every_element_is_square():
    f = Field(2, 5)
    for e in f.elements():
        assert f.is_quadratic_residue(e)
        s = f.sqrt(e)
        assert s * s == e


def test_sqrt_odd_field_consistency():
    """sqrt returns the canonically smaller root; squaring round-trips."""
    for p, m in [(3, 2), (5, 2), (3, 3)]:
        f = Field(p, m)
        n_res = 0
        for e in f.elements():
            if f.is_quadratic_residue(e):
                n_res += 1
                s = f.sqrt(e)
                assert s * s == e
                assert s <= -s or s.is_zero()
            else:
                assert f.sqrt(e) is None
        assert n_res == (p**m - 1) // 2 + 1  # half the units, plus zero


def test_sqrt_tonelli_agrees_with_exhaustive():
    for p, m in [(5, 2), (3, 3), (13, 1)]:
        f = Field(p, m)
        for e in f.elements():
            if f.is_quadratic_residue(e) and not e.is_zero():
                a = f._sqrt_exhaustive(e)
                b = f._sqrt_tonelli(e)
                assert a * a == e and b * b == e
                assert {a, -a} == {b, -b}


def test_subfield_elements_form_a_field():
    f = Field(2, 4)
    sub = f.subfield_elements(2)
    assert len(sub) == 4
    subset = set(sub)
    for a in sub:
        for b in sub:
            assert a + b in subset and a * b in subset
    assert f.subfield_elements(1) == [f.zero(), f.one()]
    with pytest.raises(InputError):
        f.subfield_elements(3)  # 3 does not divide 4


def test_extend_gives_an_embedding():
    f = Field(3, 2)
    big, phi = f.extend()
    assert big.q == 81
    images = set()
    for a in f.elements():
        for b in f.elements():
            assert phi(a + b) == phi(a) + phi(b)
            assert phi(a * b) == phi(a) * phi(b)
        images.add(phi(a).value())
    assert len(images) == 9  # injective
    assert phi(f.one()) == big.one()
    # every base-field element becomes a square upstairs
    for a in f.elements():
        assert big.is_quadratic_residue(phi(a))


def test_field_mismatch_guard():
    a = Field(2, 3).one()
    b = Field(3, 2).one()
    with pytest.raises(FieldMismatch):
        a + b


def test_element_roundtrips_and_order():
    f = Field(3, 2)
    vals = [e.value() for e in f.elements()]
    assert vals == list(range(9))  # ascending canonical order
    for v in range(9):
        e = f.from_value(v)
        assert f.element(e.to_list()) == e
        assert f.element(e) == e
    assert f.element(5).to_list() == [2, 1]  # 2 + 1*3


def test_descriptor_roundtrip():
    f = Field(2, 5, [1, 0, 0, 1, 0, 1])
    g = field_from_descriptor(f.descriptor())
    assert g.p == f.p and g.m == f.m and g.modulus == f.modulus


def test_repr_is_readable():
    f = Field(2, 5)
    e = f.from_value(7)
    assert repr(e) == "a^2+a+1"
    assert repr(f.zero()) == "0"
    assert repr(f.one()) == "1"


# --- deterministic generator ------------------------------------------------


def _reference_xorshift(seed):
    """Straight transcription of the documented update equations."""
    mask = (1 << 64) - 1
    x = (seed & mask) or 0x9E3779B97F4A7C15
    while True:
        x ^= x >> 12
        x ^= (x << 25) & mask
        x ^= x >> 27
        yield (x * 0x2545F4914F6CDD1D) & mask


def test_rng_matches_reference_equations():
    for seed in (0, 1, 2, 12345, (1 << 64) - 1):
        ref = _reference_xorshift(seed)
        rng = Xorshift64Star(seed)
        for _ in range(200):
            assert rng.next_u64() == next(ref)


def test_rng_first_output_frozen():
    assert Xorshift64Star(1).next_u64() == 0x47E4CE4B896CDD1D


def test_rng_below_and_elements():
    rng = Xorshift64Star(9)
    f = Field(2, 4)
    for _ in range(300):
        assert 0 <= rng.below(7) < 7
    seen = {rng.element(f).value() for _ in range(300)}
    assert seen == set(range(16))  # small field gets fully covered
    assert all(rng.nonzero_element(f).value() != 0 for _ in range(100))
