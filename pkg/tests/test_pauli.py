import random

import pytest

from codeword_paradoxes import dense
from codeword_paradoxes.errors import DimensionMismatchError, PauliFormatError
from codeword_paradoxes.pauli import (LETTERS, from_letters, identity,
                                      letter_mul, parse, single_site)
from codeword_paradoxes.selftest import random_pauli


def test_letter_table_matches_dense_matrices():
    for a in LETTERS:
        for b in LETTERS:
            c, t = letter_mul(a, b)
            fast = dense.pauli_matrix(from_letters(c, t))
            slow = dense.mat_mul(dense.pauli_matrix(from_letters(a)),
                                 dense.pauli_matrix(from_letters(b)))
            assert dense.mat_eq(fast, slow), (a, b)


def test_single_qubit_products():
    assert parse("X") * parse("Y") == parse("iZ")
    assert parse("Y") * parse("X") == parse("-iZ")
    assert parse("Z") * parse("X") == parse("iY")
    assert parse("X") * parse("X") == parse("I")


def test_identity_is_two_sided():
    p = parse("XZIZX")
    assert identity(5) * p == p
    assert p * identity(5) == p


def test_five_qubit_product_phase_against_dense_oracle():
    a = parse("XZIZX")
    b = parse("YXIXY")
    prod = a * b
    assert prod.letters == tuple("ZYIYZ")
    assert prod.phase_exp == 0
    oracle = dense.mat_mul(dense.pauli_matrix(a), dense.pauli_matrix(b))
    assert dense.mat_eq(dense.pauli_matrix(prod), oracle)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        parse("XX") * parse("X")
    with pytest.raises(DimensionMismatchError):
        parse("XX").commutes_with(parse("X"))


def test_commutation():
    assert not parse("X").commutes_with(parse("Z"))
    # sigma_2z sigma_3x vs sigma_4x sigma_5z as five-qubit strings
    assert parse("IZXII").commutes_with(parse("IIIXZ"))


def test_five_qubit_group_is_abelian(five_group):
    ops = [e.op for e in five_group]
    assert len(ops) == 32
    for i, a in enumerate(ops):
        for b in ops[i + 1:]:
            assert a.commutes_with(b)


def test_commutation_matches_dense_commutator():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 3)
        a, b = random_pauli(rng, n), random_pauli(rng, n)
        ma, mb = dense.pauli_matrix(a), dense.pauli_matrix(b)
        assert a.commutes_with(b) == dense.commutator_is_zero(ma, mb)


def test_cyclic_shift():
    p = parse("XZIZX")
    assert p.shift(1) == parse("XXZIZ")
    assert p.shift(5) == p
    assert p.shift(0) == p
    orbit = {p.shift(k) for k in range(5)}
    assert parse("ZXXZI") in orbit


def test_orbit_of_uxzxu_contains_xzxuu():
    p = parse("IXZXI")
    orbit = {p.shift(k) for k in range(5)}
    assert parse("XZXII") in orbit


def test_shift_is_algebra_automorphism():
    rng = random.Random(3)
    for _ in range(50):
        a, b = random_pauli(rng, 5), random_pauli(rng, 5)
        k = rng.randrange(5)
        assert (a * b).shift(k) == a.shift(k) * b.shift(k)


def test_parse_format_round_trip():
    for text in ("XZIZX", "-ZZZZZ", "iXY", "-iYZ", "IIIII"):
        assert str(parse(text)) == text
    # canonical form drops the explicit plus
    assert str(parse("+XZIZX")) == "XZIZX"


def test_parse_examples():
    p = parse("XZIZX")
    assert p.phase_exp == 0
    assert p.letters == ("X", "Z", "I", "Z", "X")
    q = parse("-ZZZZZ")
    assert q.phase_exp == 2
    assert q.letters == ("Z",) * 5


def test_parse_errors():
    with pytest.raises(PauliFormatError):
        parse("XQZ")
    with pytest.raises(PauliFormatError):
        parse("")
    with pytest.raises(PauliFormatError):
        parse("x z")


def test_support_and_restrict():
    p = parse("IXZXI")
    assert p.support() == frozenset({2, 3, 4})
    assert parse("XZIZX").restrict([2, 3, 4, 5]) == parse("IZIZX")
    assert identity(5).restrict([1, 2]) == identity(5)
    # restriction zeroes the phase
    assert parse("-ZZZZZ").restrict([1]).phase_exp == 0


def test_restrict_rejects_bad_site():
    with pytest.raises(ValueError):
        parse("XX").restrict([3])


def test_single_site():
    assert single_site(5, 2, "Z") == parse("IZIII")
    with pytest.raises(ValueError):
        single_site(5, 6, "Z")


def test_weight_and_hermiticity():
    assert parse("IXZXI").weight == 3
    assert parse("ZZZZZ").weight == 5
    assert parse("-ZZZZZ").is_hermitian()
    assert not parse("iZ").is_hermitian()


def test_squares():
    rng = random.Random(11)
    for _ in range(50):
        p = random_pauli(rng, rng.randint(1, 5), phase=False)
        assert p * p == identity(p.n)


def test_sort_key_is_deterministic():
    ops = [parse(s) for s in ("ZZZZZ", "IIIII", "XZIZX", "-ZZZZZ")]
    ordered = sorted(ops, key=lambda p: p.key())
    assert [str(p) for p in ordered] == ["IIIII", "XZIZX", "ZZZZZ", "-ZZZZZ"]
